"""Exact operator matrices between window and face bases.

``matrix_m`` pushes a face basis into a coarser one (the window for
``lam = 0``) by the coset-sum shuffle formula with attracting numerator and
adjoint denominator; ``matrix_delta`` restricts a basis to a face by the
top-pairing rule; ``matrix_swap`` is the signed monomial twist identifying
the two refined faces of a double coset, and ``matrix_m_twisted`` is the
Levi-level induction composed with the swap.  ``check_copr`` verifies that
restriction of an induction equals the double-coset sum of twisted
inductions, as exact matrices and optionally coset by coset.

Normalization: all inductions are plain coset sums (see
:mod:`weylwin.laurent`), so the trivial cocharacter induces the identity.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import FaceMismatchError, InputError, WindowEscapeError
from .groups import (
    DoubleCosetDatum,
    GroupSpec,
    double_cosets,
    is_dominant,
    levi_partition,
    partition_refines,
    shifted_dominant,
    vdot,
    vsub,
)
from .laurent import expand_in_characters, symmetrize_induction, weyl_character
from .linalg import is_zero_matrix, mat_mul, mat_sub, zeros
from .reps import SymmetricRep, attracting, relative
from .windows import FaceBasis, check_delta, face_basis

ZERO = Fraction(0)


@dataclass(frozen=True)
class OperatorMatrix:
    """Exact rational matrix with labelled domain and codomain bases."""

    domain: FaceBasis
    codomain: FaceBasis
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != len(self.codomain.weights):
            raise InputError("row count must match the codomain basis")
        for row in self.entries:
            if len(row) != len(self.domain.weights):
                raise InputError("column count must match the domain basis")

    @property
    def shape(self):
        return (len(self.codomain.weights), len(self.domain.weights))

    def compose(self, other: "OperatorMatrix") -> "OperatorMatrix":
        """self after other."""
        if self.domain.weights != other.codomain.weights:
            raise InputError("operator composition with mismatched bases")
        return OperatorMatrix(
            domain=other.domain,
            codomain=self.codomain,
            entries=mat_mul(self.entries, other.entries),
        )

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if self.domain.weights != other.domain.weights or self.codomain.weights != other.codomain.weights:
            raise InputError("operator sum with mismatched bases")
        rows = tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries))
        return OperatorMatrix(domain=self.domain, codomain=self.codomain, entries=rows)

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if self.domain.weights != other.domain.weights or self.codomain.weights != other.codomain.weights:
            raise InputError("operator difference with mismatched bases")
        return OperatorMatrix(domain=self.domain, codomain=self.codomain, entries=mat_sub(self.entries, other.entries))

    def is_zero(self) -> bool:
        return is_zero_matrix(self.entries)


def zero_operator(domain: FaceBasis, codomain: FaceBasis) -> OperatorMatrix:
    return OperatorMatrix(domain=domain, codomain=codomain, entries=zeros(len(codomain), len(domain)))


def identity_operator(basis: FaceBasis) -> OperatorMatrix:
    n = len(basis)
    rows = tuple(tuple(Fraction(1) if i == j else ZERO for j in range(n)) for i in range(n))
    return OperatorMatrix(domain=basis, codomain=basis, entries=rows)


def _multiset_difference(big, small):
    diff = Counter(big)
    diff.subtract(Counter(small))
    if any(m < 0 for m in diff.values()):
        raise InputError("attracting data of the fine cocharacter must contain the coarse one")
    out = []
    for beta, m in sorted(diff.items()):
        out.extend([beta] * m)
    return tuple(out)


def induction_matrix(V: SymmetricRep, sub: FaceBasis, amb: FaceBasis, parallel: bool = False) -> OperatorMatrix:
    """Pushforward ``F(sub) -> F(amb)`` for ``sub`` refining ``amb``.

    Column of a face weight chi: the coset sum over ``W^amb / W^sub`` of the
    Levi character of chi times ``prod(1-q^{-beta})`` over the attracting
    weights of ``sub`` not already attracted by ``amb``, divided by the same
    product over adjoint weights, expanded back into ``amb`` characters.
    Raises :class:`WindowEscapeError` if the expansion leaves the basis.
    """
    G = sub.group
    sub_parts = levi_partition(G, sub.lam)
    amb_parts = levi_partition(G, amb.lam)
    if not partition_refines(sub_parts, amb_parts):
        raise InputError("induction_matrix: domain cocharacter must refine the codomain one")
    a_sub = attracting(V, sub.lam)
    a_amb = attracting(V, amb.lam)
    A = _multiset_difference(a_sub.A, a_amb.A)
    g = _multiset_difference(a_sub.g, a_amb.g)
    columns = []
    for chi in sub.weights:
        x = weyl_character(G, chi, levi=sub_parts)
        poly = symmetrize_induction(G, sub.lam, x, A, g, within=amb_parts, parallel=parallel)
        combo = expand_in_characters(G, poly, levi=amb_parts)
        col = [ZERO] * len(amb)
        for weight, coeff in combo.items():
            idx = amb.index_of(weight)
            if idx is None:
                raise WindowEscapeError(
                    f"induction image used weight {weight} outside the target basis (lam={amb.lam})"
                )
            col[idx] = coeff
        columns.append(col)
    rows = tuple(tuple(col[i] for col in columns) for i in range(len(amb)))
    return OperatorMatrix(domain=sub, codomain=amb, entries=rows)


def restriction_matrix(V: SymmetricRep, amb: FaceBasis, sub: FaceBasis) -> OperatorMatrix:
    """Restriction ``F(amb) -> F(sub)``: keep weights with extreme pairing.

    A weight with pairing strictly below the face threshold restricts to
    zero; strictly above is impossible inside a window and raises.
    """
    G = amb.group
    if not partition_refines(levi_partition(G, sub.lam), levi_partition(G, amb.lam)):
        raise InputError("restriction_matrix: target cocharacter must refine the source one")
    columns = []
    for chi in amb.weights:
        col = [ZERO] * len(sub)
        p = vdot(sub.lam, chi)
        if p > sub.threshold:
            raise WindowEscapeError(
                f"window violation: <{sub.lam}, {chi}> = {p} exceeds the face threshold {sub.threshold}"
            )
        if p == sub.threshold:
            idx = sub.index_of(chi)
            if idx is None:
                raise FaceMismatchError(f"weight {chi} sits on the face of {sub.lam} but is not in its basis")
            col[idx] = Fraction(1)
        columns.append(col)
    rows = tuple(tuple(col[i] for col in columns) for i in range(len(sub)))
    return OperatorMatrix(domain=amb, codomain=sub, entries=rows)


def swap_matrix(
    V: SymmetricRep,
    lam,
    mu,
    datum: DoubleCosetDatum,
    source: FaceBasis,
    target: FaceBasis,
) -> OperatorMatrix:
    """The signed twist ``F(nu) -> F(nu')``: ``chi -> w_s^{-1}(chi - script_N)``
    with sign ``(-1)^c``, where c and script_N compare ``lam`` with
    ``w_s . mu``.  A signed permutation matrix; a missed target raises."""
    G = V.group
    w_mu = datum.w_s.act(tuple(mu))
    rel = relative(V, tuple(lam), w_mu)
    sign = Fraction(-1) ** rel.c
    w_inv = datum.w_s.inverse()
    columns = []
    for chi in source.weights:
        image = w_inv.act(vsub(chi, rel.script_N))
        idx = target.index_of(image)
        if idx is None:
            raise FaceMismatchError(
                f"swap image {image} of {chi} is not in the face basis of {target.lam}"
            )
        col = [ZERO] * len(target)
        col[idx] = sign
        columns.append(col)
    rows = tuple(tuple(col[i] for col in columns) for i in range(len(target)))
    return OperatorMatrix(domain=source, codomain=target, entries=rows)


# ---------------------------------------------------------------------------
# Spec-level operator surfaces


def matrix_m(G: GroupSpec, V: SymmetricRep, lam, delta=None, *, window: FaceBasis = None, face: FaceBasis = None, parallel: bool = False) -> OperatorMatrix:
    """Induction from the ``lam`` face basis into the window basis."""
    delta = check_delta(G, delta)
    if window is None:
        window = face_basis(G, V, (0,) * G.rank, delta)
    if face is None:
        face = face_basis(G, V, lam, delta)
    return induction_matrix(V, face, window, parallel=parallel)


def matrix_delta(G: GroupSpec, V: SymmetricRep, mu, delta=None, *, window: FaceBasis = None, face: FaceBasis = None) -> OperatorMatrix:
    """Restriction from the window basis onto the ``mu`` face basis."""
    delta = check_delta(G, delta)
    if window is None:
        window = face_basis(G, V, (0,) * G.rank, delta)
    if face is None:
        face = face_basis(G, V, mu, delta)
    return restriction_matrix(V, window, face)


def matrix_swap(G: GroupSpec, V: SymmetricRep, lam, mu, datum: DoubleCosetDatum, delta=None) -> OperatorMatrix:
    delta = check_delta(G, delta)
    source = face_basis(G, V, datum.nu, delta)
    target = face_basis(G, V, datum.nu_prime, delta)
    return swap_matrix(V, lam, mu, datum, source, target)


def matrix_m_twisted(G: GroupSpec, V: SymmetricRep, mu, datum: DoubleCosetDatum, delta=None, *, mu_face: FaceBasis = None) -> OperatorMatrix:
    """Twisted induction ``F(nu) -> F(mu)``: Levi induction after the swap."""
    delta = check_delta(G, delta)
    if mu_face is None:
        mu_face = face_basis(G, V, mu, delta)
    source = face_basis(G, V, datum.nu, delta)
    target = face_basis(G, V, datum.nu_prime, delta)
    # nu cuts out the same attracting-versus-w_s.mu sets as the original lam,
    # so the swap sign and twist computed from nu agree with the lam version
    lam_for_sign = datum.nu
    sw = swap_matrix(V, lam_for_sign, mu, datum, source, target)
    levi_push = induction_matrix(V, target, mu_face)
    return levi_push.compose(sw)


@dataclass(frozen=True)
class CoprResult:
    lam: tuple
    mu: tuple
    ok: bool
    residual: OperatorMatrix
    lhs: OperatorMatrix
    rhs: OperatorMatrix
    per_coset_ok: bool | None = None
    per_coset_residuals: tuple = ()


def check_copr(G: GroupSpec, V: SymmetricRep, lam, mu, delta=None, per_coset: bool = False) -> CoprResult:
    """Verify restriction-of-induction against the double-coset sum.

    Computes ``Delta_mu . M_lam`` and the sum over double cosets of
    ``M~^mu_nu . Delta^lam_nu`` as exact matrices and returns the residual,
    which must vanish.  With ``per_coset`` the left side is split by
    classifying each attracting subset's dominantizer into its double coset
    and the two sides are compared coset by coset (a stronger identity).
    """
    lam = G.check_vector(lam, "lambda")
    mu = G.check_vector(mu, "mu")
    if not is_dominant(G, lam) or not is_dominant(G, mu):
        raise InputError("check_copr requires dominant cocharacters")
    delta = check_delta(G, delta)
    window = face_basis(G, V, (0,) * G.rank, delta)
    lam_face = face_basis(G, V, lam, delta)
    mu_face = face_basis(G, V, mu, delta)
    m_lam = induction_matrix(V, lam_face, window)
    d_mu = restriction_matrix(V, window, mu_face)
    lhs = d_mu.compose(m_lam)

    scale_vectors = V.flat() + G.all_roots()
    cosets = double_cosets(G, lam, mu, scale_vectors=scale_vectors)
    rhs = zero_operator(lam_face, mu_face)
    rhs_parts = []
    for datum in cosets:
        nu_face = face_basis(G, V, datum.nu, delta)
        nup_face = face_basis(G, V, datum.nu_prime, delta)
        d_nu = restriction_matrix(V, lam_face, nu_face)
        sw = swap_matrix(V, lam, mu, datum, nu_face, nup_face)
        push = induction_matrix(V, nup_face, mu_face)
        part = push.compose(sw).compose(d_nu)
        rhs_parts.append((datum, part))
        rhs = rhs + part
    residual = lhs - rhs
    ok = residual.is_zero()

    per_ok = None
    per_res = ()
    if per_coset:
        lhs_parts = _lhs_coset_parts(G, V, lam, mu, lam_face, mu_face, cosets)
        per_res = []
        per_ok = True
        for datum, part in rhs_parts:
            left = lhs_parts.get(_coset_signature(G, lam, datum.w_s, mu), zero_operator(lam_face, mu_face))
            diff = left - part
            good = diff.is_zero()
            per_ok = per_ok and good
            per_res.append((datum.w_s.perm, good, diff.entries))
        per_res = tuple(per_res)
    return CoprResult(lam=lam, mu=mu, ok=ok, residual=residual, lhs=lhs, rhs=rhs, per_coset_ok=per_ok, per_coset_residuals=per_res)


def _coset_signature(G: GroupSpec, lam, w, mu):
    """Invariant of the double coset of w: per-block pair-level counts."""
    w_mu = w.act(tuple(mu))
    sig = []
    for rng in G.block_ranges():
        counts = Counter((lam[i], w_mu[i]) for i in rng)
        sig.append(tuple(sorted(counts.items())))
    return tuple(sig)


def _lhs_coset_parts(G, V, lam, mu, lam_face: FaceBasis, mu_face: FaceBasis, cosets):
    """Split ``Delta_mu . M_lam`` by the double coset of each subset's
    dominantizer; uses the attracting-subset expansion of the induction."""
    data = attracting(V, lam)
    if len(data.A) > 16:
        raise InputError("per-coset check: attracting multiset too large")
    buckets: dict = {}
    for j, chi in enumerate(lam_face.weights):
        # q^chi is a torus lift of the Levi character of chi, so the induced
        # class is the alternating sum over attracting subsets of the
        # shift-dominantized characters of chi - sigma_I.
        for mask in range(1 << len(data.A)):
            sigma = [0] * G.rank
            bits = 0
            for k, beta in enumerate(data.A):
                if mask >> k & 1:
                    bits += 1
                    for i, c in enumerate(beta):
                        sigma[i] += c
            sd = shifted_dominant(G, vsub(chi, tuple(sigma)))
            if sd is None:
                continue
            chi_plus, w, length = sd
            if vdot(mu, chi_plus) != mu_face.threshold:
                continue
            idx = mu_face.index_of(chi_plus)
            if idx is None:
                raise FaceMismatchError(f"per-coset image {chi_plus} missing from the mu face")
            sig = _coset_signature(G, lam, w, mu)
            mat = buckets.setdefault(sig, [[ZERO] * len(lam_face) for _ in range(len(mu_face))])
            mat[idx][j] += Fraction(-1) ** (bits + length)
    out = {}
    for sig, rows in buckets.items():
        out[sig] = OperatorMatrix(
            domain=lam_face, codomain=mu_face, entries=tuple(tuple(row) for row in rows)
        )
    return out


def check_leviequal(G: GroupSpec, V: SymmetricRep, lam, mu, y, parallel: bool = False) -> bool:
    """Same-Levi transplant identity: inducing ``y`` along ``lam`` equals
    inducing the signed monomial twist of ``y`` along ``mu``."""
    lam = G.check_vector(lam, "lambda")
    mu = G.check_vector(mu, "mu")
    from .groups import partition_key

    if partition_key(levi_partition(G, lam)) != partition_key(levi_partition(G, mu)):
        raise InputError("different Levi")
    a_lam = attracting(V, lam)
    a_mu = attracting(V, mu)
    rel = relative(V, lam, mu)
    from .laurent import monomial

    y_twisted = y * monomial(tuple(-c for c in rel.script_N), Fraction(-1) ** rel.c)
    left = symmetrize_induction(G, lam, y, a_lam.A, a_lam.g, parallel=parallel)
    right = symmetrize_induction(G, mu, y_twisted, a_mu.A, a_mu.g, parallel=parallel)
    return left == right
