"""Exact window bases, shuffle operators, and primitive/boundary K-group
decompositions for symmetric representations of products of GL blocks."""

from .errors import (
    DecompositionError,
    FaceMismatchError,
    InexactDivisionError,
    InputError,
    NotInvariantError,
    WeylwinError,
    WindowEscapeError,
)
from .groups import (
    DoubleCosetDatum,
    GroupSpec,
    LeviDatum,
    SymmetryGroup,
    WeylElement,
    coset_reps,
    double_cosets,
    is_dominant,
    levi_datum,
    rho,
    shifted_dominant,
    symmetry_group,
    weyl_group,
)
from .laurent import (
    LaurentPoly,
    RationalSection,
    bbw_pushforward,
    expand_in_characters,
    monomial,
    symmetrize_full,
    symmetrize_induction,
    weyl_act,
    weyl_character,
)
from .reps import SymmetricRep, attracting, check_symmetric, relative, symmetric_rep
from .windows import (
    FaceBasis,
    WindowBasis,
    enumerate_window,
    face_basis,
    face_decompose,
    half_zonotope_contains,
    sigma_sums,
)
from .zonotope import Zonotope, build_zonotope

__version__ = "0.1.0"
