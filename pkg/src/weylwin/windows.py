"""Window and face bases.

The window of a symmetric representation is the finite set of dominant
weights ``chi`` with ``chi + rho + delta`` inside half the weight zonotope.
For a cocharacter ``lam`` the face basis consists of the weights
``chi = shift(lam) + psi`` where ``shift(lam)`` is half the attracting
weight sum minus half the adjoint one and ``psi`` runs over the window of
the ``lam``-fixed subrepresentation for the centralizer Levi; every face
weight pairs with ``lam`` to the extreme value ``n_lam/2 - <lam, delta>``.
A window basis is the face basis of the zero cocharacter.

Sign convention for the shift ``delta``: the window condition is evaluated
on ``chi + rho + delta`` exactly as written, so the extreme pairing on the
``lam`` face is ``b_lam - <lam, delta>``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor

from .errors import InputError, WeylwinError
from .groups import (
    GroupSpec,
    WeylElement,
    identity_element,
    levi_datum,
    levi_partition,
    levi_weyl_group,
    rho,
    shifted_dominant,
    vadd,
    vdot,
    vsub,
)
from .reps import SymmetricRep, attracting, attracting_shift
from .zonotope import Zonotope, build_zonotope

ZEROF = Fraction(0)


def default_delta(G: GroupSpec):
    return tuple(ZEROF for _ in range(G.rank))


def check_delta(G: GroupSpec, delta):
    """delta must be a Weyl-invariant rational vector: constant per block."""
    if delta is None:
        return default_delta(G)
    delta = tuple(Fraction(d) for d in delta)
    G.check_vector(delta, "delta")
    for rng in G.block_ranges():
        if len({delta[i] for i in rng}) != 1:
            raise InputError("delta must be constant within each block")
    return delta


def half_zonotope_contains(Z: Zonotope, point) -> bool:
    """Exact feasibility of ``point = sum t_beta beta`` with ``t_beta in [0, 1/2]``."""
    return Z.contains_half(point)


@dataclass(frozen=True)
class FaceBasis:
    """Ordered basis of the K-group attached to a cocharacter's face.

    ``lam = 0`` gives the window itself.  ``weights`` are the Levi-dominant
    lattice weights of the face in increasing lexicographic order;
    ``shift`` is the rational vector subtracted from a face weight to land
    in the fixed subrepresentation's window, ``threshold`` the common value
    of ``<lam, chi>``.
    """

    group: GroupSpec
    lam: tuple[int, ...]
    delta: tuple[Fraction, ...]
    threshold: Fraction
    shift: tuple[Fraction, ...]
    weights: tuple[tuple[int, ...], ...]
    _index: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        self._index.update({w: i for i, w in enumerate(self.weights)})

    def __len__(self):
        return len(self.weights)

    def index_of(self, chi):
        return self._index.get(tuple(chi))

    def psi(self, chi):
        """The fixed-window component ``chi - shift``."""
        return vsub(tuple(Fraction(c) for c in chi), self.shift)

    def levi_parts(self):
        return levi_partition(self.group, self.lam)


WindowBasis = FaceBasis


def _lattice_box(lo, hi):
    """Integer points of a rational box, smallest ranges containing it."""
    ranges = []
    for a, b in zip(lo, hi):
        if a > b:
            return None
        ranges.append(range(ceil(a), floor(b) + 1))
    return ranges


def _is_levi_dominant(parts, chi) -> bool:
    for part in parts:
        for a, b in zip(part, part[1:]):
            if chi[a] < chi[b]:
                return False
    return True


def face_basis(G: GroupSpec, V: SymmetricRep, lam, delta=None) -> FaceBasis:
    """Enumerate the face basis of ``lam`` (the window basis for ``lam = 0``).

    Scans the integer translate of the fixed subrepresentation's half
    zonotope shifted by the face shift, keeping Levi-dominant weights whose
    ``psi`` component lies in it; empty when the lattice misses the face
    (in particular whenever ``n_lam`` is odd).
    """
    lam = G.check_vector(lam, "lambda")
    delta = check_delta(G, delta)
    data = attracting(V, lam)
    shift = attracting_shift(V, lam)
    datum = levi_datum(G, lam)
    rho_L = datum.rho_levi(G)
    fixed = V.fixed_part(lam)
    Z = build_zonotope(fixed, G.rank)
    lo, hi = Z.coordinate_extents()
    # chi = shift + psi with psi + rho_L + delta in the half zonotope
    chi_lo = [s + a - r - d for s, a, r, d in zip(shift, lo, rho_L, delta)]
    chi_hi = [s + b - r - d for s, b, r, d in zip(shift, hi, rho_L, delta)]
    box = _lattice_box(chi_lo, chi_hi)
    threshold = data.b - vdot(lam, delta)
    found = []
    if box is not None:
        for chi in itertools.product(*box):
            if not _is_levi_dominant(datum.parts, chi):
                continue
            psi = tuple(Fraction(c) - s for c, s in zip(chi, shift))
            if Z.contains_half(vadd(vadd(psi, rho_L), delta)):
                if vdot(lam, chi) != threshold:
                    raise WeylwinError("face weight off its own threshold; zonotope bug")
                found.append(tuple(int(c) for c in chi))
    return FaceBasis(
        group=G,
        lam=lam,
        delta=delta,
        threshold=threshold,
        shift=shift,
        weights=tuple(sorted(found)),
    )


def enumerate_window(G: GroupSpec, V: SymmetricRep, delta=None) -> WindowBasis:
    """All dominant weights with ``chi + rho + delta`` in half the zonotope."""
    return face_basis(G, V, tuple(0 for _ in range(G.rank)), delta)


def face_decompose(G: GroupSpec, V: SymmetricRep, lam, chi, delta=None):
    """Split a face weight as ``chi = shift(lam) + psi``.

    Returns the canonical ``(psi, w)`` with ``w`` in the Levi Weyl group
    making ``w.psi`` Levi-dominant and inside the fixed window; raises when
    ``chi`` is off the face.  All valid pairs are available from
    :func:`face_decompose_all`.
    """
    pairs = face_decompose_all(G, V, lam, chi, delta)
    return pairs[0]


def face_decompose_all(G: GroupSpec, V: SymmetricRep, lam, chi, delta=None):
    lam = G.check_vector(lam, "lambda")
    chi = G.check_vector(chi, "chi")
    delta = check_delta(G, delta)
    data = attracting(V, lam)
    threshold = data.b - vdot(lam, delta)
    if vdot(lam, chi) != threshold:
        raise InputError(f"not on face: <lam, chi> = {vdot(lam, chi)} != {threshold}")
    shift = attracting_shift(V, lam)
    datum = levi_datum(G, lam)
    rho_L = datum.rho_levi(G)
    Z = build_zonotope(V.fixed_part(lam), G.rank)
    psi = tuple(Fraction(c) - s for c, s in zip(chi, shift))
    pairs = []
    for w in levi_weyl_group(G, datum.parts):
        image = w.act(psi)
        if _is_levi_dominant(datum.parts, image) and Z.contains_half(vadd(vadd(image, rho_L), delta)):
            pairs.append((psi, w))
    if not pairs:
        raise WeylwinError("face weight admits no dominant fixed-window component")
    pairs.sort(key=lambda pw: (pw[1].perm,))
    return pairs


def _submultiset_sums(weights, rank):
    """All distinct sums of sub-multisets, as a set of vectors."""
    sums = {tuple([0] * rank)}
    for beta in weights:
        sums |= {vadd(s, beta) for s in sums}
    return sums


def sigma_sums(G: GroupSpec, V: SymmetricRep, lam, mu, chi):
    """Partial sums of the attracting weights that move ``chi`` onto the
    dominantized ``mu`` face under the shifted action.

    Enumerates sub-multisets of ``A_lam`` (at most twelve weights), keeps the
    sums whose shifted-dominantization lands on the face of the dominant
    conjugate of ``mu``, and certifies each as ``N + sigma'`` where ``N``
    sums the attracting weights made negative by the conjugated ``mu`` and
    ``sigma'`` is a partial sum of those it annihilates.
    Returns sorted ``(w, sigma)`` pairs.
    """
    from .groups import dominant_sort
    from .reps import relative, weight_sum

    lam = G.check_vector(lam, "lambda")
    mu = G.check_vector(mu, "mu")
    chi = G.check_vector(chi, "chi")
    data = attracting(V, lam)
    if len(data.A) > 12:
        raise InputError("sigma_sums: more than twelve attracting weights")
    tau, _ = dominant_sort(G, mu)
    b_tau = attracting(V, tau).b
    out = []
    seen = set()
    for mask in range(1 << len(data.A)):
        sigma = [0] * G.rank
        for k, beta in enumerate(data.A):
            if mask >> k & 1:
                for i, c in enumerate(beta):
                    sigma[i] += c
        sigma = tuple(sigma)
        sd = shifted_dominant(G, vsub(chi, sigma))
        if sd is None:
            continue
        chi_plus, w, _ = sd
        if vdot(tau, chi_plus) != b_tau:
            continue
        if (w.perm, sigma) in seen:
            continue
        seen.add((w.perm, sigma))
        mu_w = w.inverse().act(tau)
        rel = relative(V, lam, mu_w)
        null_part = tuple(b for b in data.A if vdot(mu_w, b) == 0)
        residue = vsub(sigma, rel.N)
        if residue not in _submultiset_sums(null_part, G.rank):
            raise WeylwinError("sigma decomposition certificate failed")
        out.append((w, sigma))
    out.sort(key=lambda ws: (ws[1], ws[0].perm))
    return out
