"""Cohomological shuffle cross-check.

Classes live in a polynomial ring on degree-two generators ``h_1 .. h_r``
truncated at a configured total degree; a weight ``beta`` contributes the
linear form ``h_beta = sum beta_i h_i``.  The pushforward here multiplies by
the attracting linear forms, divides by the adjoint ones and sums over
cosets, with the parity sign of the two counts; same-Levi cocharacters give
images that agree termwise up to one global sign, which is the degree-wise
shadow of the K-theoretic transplant identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InexactDivisionError, InputError
from .groups import GroupSpec, coset_reps, levi_partition
from .reps import SymmetricRep, attracting

ZERO = Fraction(0)


@dataclass(frozen=True)
class PolyClass:
    """Polynomial in the degree-two generators, truncated in total degree."""

    coeffs: tuple
    degree: int

    def terms(self) -> dict:
        return dict(self.coeffs)


def poly_class(terms: dict, degree: int) -> PolyClass:
    clean = {}
    for e, c in terms.items():
        c = Fraction(c)
        if c and sum(e) <= degree:
            clean[tuple(e)] = c
    return PolyClass(coeffs=tuple(sorted(clean.items())), degree=degree)


def poly_monomial(exponents, degree, coeff=1) -> PolyClass:
    return poly_class({tuple(exponents): Fraction(coeff)}, degree)


def _padd(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, ZERO) + c
        if not out[e]:
            del out[e]
    return out


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, ZERO) + c1 * c2
            if not out[e]:
                del out[e]
    return out


def _linear_form(beta, rank) -> dict:
    out = {}
    for i, c in enumerate(beta):
        if c:
            e = [0] * rank
            e[i] = 1
            out[tuple(e)] = Fraction(c)
    if not out:
        raise InputError("zero weight has no linear form")
    return out


def _permute(terms: dict, w) -> dict:
    return {w.act(e): c for e, c in terms.items()}


def _divide_linear(f: dict, form: dict, rank: int) -> dict:
    """Exact division of a polynomial by a linear form."""
    pivot = None
    for e, c in form.items():
        k = next(i for i, x in enumerate(e) if x)
        if pivot is None or k < pivot[0]:
            pivot = (k, c)
    k, pc = pivot
    work = dict(f)
    quotient: dict = {}
    while work:
        e = max(work, key=lambda ee: (ee[k], ee))
        if e[k] == 0:
            raise InexactDivisionError("cohomological division left a remainder")
        c = work[e]
        qe = list(e)
        qe[k] -= 1
        qe = tuple(qe)
        qc = c / pc
        quotient[qe] = quotient.get(qe, ZERO) + qc
        for fe, fc in form.items():
            te = tuple(x + y for x, y in zip(qe, fe))
            nv = work.get(te, ZERO) - qc * fc
            if nv:
                work[te] = nv
            elif te in work:
                del work[te]
    return quotient


def m_cohomology(G: GroupSpec, V: SymmetricRep, lam, x: PolyClass) -> PolyClass:
    """Coset sum of ``(-1)^(|A|-|g|) x prod_A h_beta / prod_g h_beta``.

    The division happens once on the summed numerator over the common
    denominator and must be exact; the result is truncated back to the
    degree of ``x``.
    """
    lam = G.check_vector(lam, "lambda")
    rank = G.rank
    data = attracting(V, lam)
    sign = Fraction(-1) ** (len(data.A) - len(data.g))
    reps = coset_reps(G, levi_partition(G, lam))
    # canonical lex-positive linear forms; flips contribute signs
    terms = []
    for w in reps:
        num = _permute({e: sign * c for e, c in x.terms().items()}, w)
        den: dict = {}
        for beta in data.A:
            num = _pmul(num, _linear_form(w.act(beta), rank))
        for beta in data.g:
            wb = w.act(beta)
            wb, s = _canonical_form_sign(wb)
            if s < 0:
                num = {e: -c for e, c in num.items()}
            den[wb] = den.get(wb, 0) + 1
        terms.append((num, den))
    common: dict = {}
    for _, den in terms:
        for b, m in den.items():
            common[b] = max(common.get(b, 0), m)
    total: dict = {}
    for num, den in terms:
        for b, m in common.items():
            for _ in range(m - den.get(b, 0)):
                num = _pmul(num, _linear_form(b, rank))
        total = _padd(total, num)
    for b, m in sorted(common.items()):
        for _ in range(m):
            total = _divide_linear(total, _linear_form(b, rank), rank)
    return poly_class(total, x.degree)


def _canonical_form_sign(beta):
    for c in beta:
        if c > 0:
            return tuple(beta), 1
        if c < 0:
            return tuple(-x for x in beta), -1
    raise InputError("zero weight in adjoint data")


def cohomology_levi_sign_check(G: GroupSpec, V: SymmetricRep, lam, mu, degree: int) -> bool:
    """Same-Levi images agree termwise up to one global sign (degree-wise)."""
    from .groups import partition_key

    if partition_key(levi_partition(G, lam)) != partition_key(levi_partition(G, mu)):
        raise InputError("different Levi")
    probes = [poly_monomial((0,) * G.rank, degree)]
    for i in range(G.rank):
        e = [0] * G.rank
        e[i] = 1
        probes.append(poly_monomial(tuple(e), degree))
    for x in probes:
        a = m_cohomology(G, V, lam, x).terms()
        b = m_cohomology(G, V, mu, x).terms()
        if a == b:
            continue
        if a == {e: -c for e, c in b.items()}:
            continue
        return False
    return True
