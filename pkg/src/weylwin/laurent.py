"""Exact multivariate Laurent arithmetic and Weyl symmetrization.

Laurent polynomials are finite maps from integer exponent vectors to
rationals.  Rational sections keep their denominators factored as multisets
of ``(1 - q^{-beta})`` and only clear them when a sum is known to be a
polynomial; the final division is exact and raises if it is not, since that
can only mean a bug.

The two symmetrization routines implement the pushforward shuffle formulas:
``symmetrize_full`` is the Weyl character sum over a (sub-)Weyl group, and
``symmetrize_induction`` the coset sum with attracting numerator and adjoint
denominator.  Normalization convention, fixed here once for the whole
library: induction is the plain coset sum with *no* ``1/|W^lam|`` prefactor,
so the trivial cocharacter induces the identity and a full-group sum over a
``W^lam``-invariant integrand equals ``|W^lam|`` times the coset sum.
"""

from __future__ import annotations

import concurrent.futures
from fractions import Fraction
from functools import lru_cache

from .errors import InexactDivisionError, InputError, NotInvariantError
from .groups import (
    Coords,
    GroupSpec,
    WeylElement,
    coset_reps,
    levi_partition,
    levi_weyl_group,
    shifted_dominant,
    vdot,
    vsub,
)

ONE = Fraction(1)


class LaurentPoly:
    """An immutable Laurent polynomial with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[tuple(e)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("LaurentPoly is immutable")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def coefficient(self, e) -> Fraction:
        return self.terms.get(tuple(e), Fraction(0))

    def support(self):
        return sorted(self.terms)

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        bits = [f"{c}*q^{e}" for e, c in sorted(self.terms.items())]
        return "LaurentPoly(" + " + ".join(bits) + ")"


def monomial(e, coeff=1) -> LaurentPoly:
    return LaurentPoly({tuple(e): Fraction(coeff)})


def laurent_zero() -> LaurentPoly:
    return LaurentPoly({})


def weyl_act(w: WeylElement, f: LaurentPoly) -> LaurentPoly:
    """Permute exponent coordinates by ``w``."""
    return LaurentPoly({w.act(e): c for e, c in f.terms.items()})


def is_invariant(f: LaurentPoly, generators) -> bool:
    return all(weyl_act(w, f) == f for w in generators)


def _part_generators(G: GroupSpec, parts):
    gens = []
    for part in parts:
        for a, b in zip(part, part[1:]):
            perm = list(range(G.rank))
            perm[a], perm[b] = perm[b], perm[a]
            gens.append(WeylElement(tuple(perm)))
    return gens


def _lex_positive(beta) -> bool:
    for c in beta:
        if c:
            return c > 0
    return False


def divide_by_factor(f: LaurentPoly, beta) -> LaurentPoly:
    """Exact division by ``(1 - q^{-beta})`` for lex-positive ``beta``.

    Peels leading terms in the order keyed by ``(<beta, e>, e)``; an exact
    quotient never dips below the minimum ``<beta, .>`` value of the input,
    so doing so raises :class:`InexactDivisionError`.
    """
    if not f:
        return f
    if not _lex_positive(beta):
        raise InputError("divide_by_factor expects a lex-positive weight")
    floor = min(vdot(beta, e) for e in f.terms)
    work = dict(f.terms)
    quotient: dict[tuple, Fraction] = {}
    while work:
        e = max(work, key=lambda ee: (vdot(beta, ee), ee))
        if vdot(beta, e) < floor:
            raise InexactDivisionError(f"division by (1 - q^-{beta}) is not exact")
        c = work.pop(e)
        quotient[e] = quotient.get(e, 0) + c
        em = vsub(e, beta)
        work[em] = work.get(em, 0) + c
        if not work[em]:
            del work[em]
    return LaurentPoly(quotient)


class RationalSection:
    """``num / prod (1 - q^{-beta})`` with a canonicalized factored denominator.

    Denominator weights are kept lex-positive; a factor with lex-negative
    ``beta`` is rewritten via ``1/(1 - q^{-beta}) = -q^{beta}/(1 - q^{beta})``
    into the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den_weights=()):
        den: dict[Coords, int] = {}
        for beta in den_weights:
            beta = tuple(beta)
            if not any(beta):
                raise InputError("denominator weights must be nonzero")
            if _lex_positive(beta):
                den[beta] = den.get(beta, 0) + 1
            else:
                pos = tuple(-c for c in beta)
                num = num * monomial(beta, -1)
                den[pos] = den.get(pos, 0) + 1
        self.num = num
        self.den = den

    def _with_den(self, target: dict) -> LaurentPoly:
        """Numerator after scaling up to the common denominator ``target``."""
        extra = []
        for beta, m in target.items():
            extra.extend([beta] * (m - self.den.get(beta, 0)))
        num = self.num
        for beta in extra:
            num = num * (monomial(tuple(0 for _ in beta)) - monomial(tuple(-c for c in beta)))
        return num

    @staticmethod
    def common_denominator(sections) -> dict:
        target: dict[Coords, int] = {}
        for s in sections:
            for beta, m in s.den.items():
                target[beta] = max(target.get(beta, 0), m)
        return target

    @staticmethod
    def sum_to_laurent(sections) -> LaurentPoly:
        """Add sections over a common denominator and divide out exactly."""
        sections = list(sections)
        if not sections:
            return laurent_zero()
        target = RationalSection.common_denominator(sections)
        total = laurent_zero()
        for s in sections:
            total = total + s._with_den(target)
        for beta, m in sorted(target.items()):
            for _ in range(m):
                total = divide_by_factor(total, beta)
        return total


def apply_weyl_to_section(w: WeylElement, s: RationalSection) -> RationalSection:
    den = []
    for beta, m in s.den.items():
        den.extend([w.act(beta)] * m)
    return RationalSection(weyl_act(w, s.num), den)


def _one_minus(beta) -> LaurentPoly:
    zero = tuple(0 for _ in beta)
    return monomial(zero) - monomial(tuple(-c for c in beta))


def _numerator_product(x: LaurentPoly, A) -> LaurentPoly:
    out = x
    for beta in A:
        out = out * _one_minus(beta)
    return out


def _coset_section(args):
    """One Weyl translate of the induction integrand (parallel worker)."""
    perm, num_terms, den_weights = args
    w = WeylElement(perm)
    s = RationalSection(LaurentPoly(num_terms), den_weights)
    t = apply_weyl_to_section(w, s)
    return t.num.terms, tuple(sorted({k: v for k, v in t.den.items()}.items()))


def _sections_over(elements, base: RationalSection, parallel: bool):
    if not parallel:
        return [apply_weyl_to_section(w, base) for w in elements]
    args = [(w.perm, base.num.terms, tuple(b for b, m in base.den.items() for _ in range(m))) for w in elements]
    with concurrent.futures.ProcessPoolExecutor() as pool:
        raw = list(pool.map(_coset_section, args))
    out = []
    for num_terms, den_items in raw:
        den = []
        for beta, m in den_items:
            den.extend([beta] * m)
        out.append(RationalSection(LaurentPoly(num_terms), den))
    return out


def symmetrize_full(G: GroupSpec, y: LaurentPoly, levi=None, parallel: bool = False) -> LaurentPoly:
    """Sum of ``w(y / prod_{roots > 0}(1 - q^{-beta}))`` over the (sub-)Weyl group.

    For ``y = q^chi`` with ``chi`` dominant this is the Weyl character of the
    irreducible with highest weight ``chi``; for a torus it returns ``y``.
    The sum is a Laurent polynomial and the clearing division is exact.
    """
    parts = tuple(tuple(rng) for rng in G.block_ranges()) if levi is None else tuple(tuple(p) for p in levi)
    roots = []
    for part in parts:
        for ia, a in enumerate(part):
            for b in part[ia + 1:]:
                beta = [0] * G.rank
                beta[a], beta[b] = 1, -1
                roots.append(tuple(beta))
    elements = levi_weyl_group(G, parts)
    base = RationalSection(y, roots)
    return RationalSection.sum_to_laurent(_sections_over(elements, base, parallel))


def symmetrize_induction(
    G: GroupSpec,
    lam,
    x: LaurentPoly,
    A,
    g,
    within=None,
    parallel: bool = False,
) -> LaurentPoly:
    """Coset sum ``sum_{w in W^within / W^lam} w(x prod_A (1-q^{-b}) / prod_g (1-q^{-b}))``.

    ``x`` must be ``W^lam``-invariant.  No ``1/|W^lam|`` prefactor is
    applied (see the module docstring); with ``lam`` central and ``A`` empty
    this is the identity.
    """
    lam_parts = levi_partition(G, lam)
    if not is_invariant(x, _part_generators(G, lam_parts)):
        raise NotInvariantError("symmetrize_induction: x is not W^lam-invariant")
    reps = coset_reps(G, lam_parts, within=within)
    base = RationalSection(_numerator_product(x, A), tuple(tuple(b) for b in g))
    return RationalSection.sum_to_laurent(_sections_over(reps, base, parallel))


@lru_cache(maxsize=None)
def _character_cached(blocks, parts, chi) -> LaurentPoly:
    G = GroupSpec(blocks)
    return symmetrize_full(G, monomial(chi), levi=parts)


def weyl_character(G: GroupSpec, chi, levi=None) -> LaurentPoly:
    """The (sub-)Weyl character of highest weight ``chi``; cached."""
    parts = tuple(tuple(rng) for rng in G.block_ranges()) if levi is None else tuple(tuple(p) for p in levi)
    return _character_cached(G.blocks, parts, tuple(chi))


def expand_in_characters(G: GroupSpec, f: LaurentPoly, levi=None) -> dict[Coords, Fraction]:
    """Expand an invariant Laurent polynomial over Weyl characters.

    Repeatedly subtracts the character of the lexicographically maximal
    exponent, which is always dominant for an invariant polynomial; this
    terminates because each step strictly lowers the leading exponent.
    Inverse of :func:`symmetrize_full` on dominant weights.
    """
    parts = tuple(tuple(rng) for rng in G.block_ranges()) if levi is None else tuple(tuple(p) for p in levi)
    if not is_invariant(f, _part_generators(G, parts)):
        raise NotInvariantError("expand_in_characters: input is not invariant")
    out: dict[Coords, Fraction] = {}
    work = f
    guard = 0
    while work:
        guard += 1
        if guard > 1_000_000:
            raise InexactDivisionError("character expansion failed to terminate")
        lead = max(work.terms)
        coeff = work.terms[lead]
        out[lead] = coeff
        work = work - coeff * weyl_character(G, lead, levi=parts)
        if lead in work.terms:
            raise InexactDivisionError("leading term did not cancel in character expansion")
    return dict(sorted(out.items()))


def bbw_pushforward(G: GroupSpec, V, lam, chi) -> dict[Coords, Fraction]:
    """Pushforward class of the highest-weight generator along the
    ``lam``-attracting correspondence, as an alternating character sum.

    Terms run over subsets ``I`` of the weights of ``V`` with
    ``<lam, beta> < 0``; each contributes ``(-1)^{|I|}`` times the
    shift-dominantized character of ``chi - sum(I)`` with its sorting sign,
    and wall terms vanish.  Independent of the shuffle route, which it
    cross-checks after the inversion convention is applied there.
    """
    chi = G.check_vector(chi, "chi")
    lam = G.check_vector(lam, "lambda")
    if not _levi_dominant(G, lam, chi):
        raise InputError("bbw_pushforward requires chi dominant for the centralizer of lam")
    negatives = tuple(b for b in V.flat() if vdot(lam, b) < 0)
    if len(negatives) > 12:
        raise InputError(f"bbw_pushforward: {len(negatives)} negative weights exceed the 2^12 subset budget")
    acc: dict[Coords, Fraction] = {}
    for mask in range(1 << len(negatives)):
        sigma = [0] * G.rank
        bits = 0
        for k, beta in enumerate(negatives):
            if mask >> k & 1:
                bits += 1
                for i, c in enumerate(beta):
                    sigma[i] += c
        sd = shifted_dominant(G, vsub(chi, tuple(sigma)))
        if sd is None:
            continue
        chi_plus, _, length = sd
        sign = Fraction(-1) ** (bits + length)
        acc[chi_plus] = acc.get(chi_plus, Fraction(0)) + sign
    return {k: v for k, v in sorted(acc.items()) if v}


def _levi_dominant(G: GroupSpec, lam, chi) -> bool:
    for part in levi_partition(G, lam):
        for a, b in zip(part, part[1:]):
            if chi[a] < chi[b]:
                return False
    return True
