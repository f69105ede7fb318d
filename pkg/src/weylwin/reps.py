"""Symmetric representation data and attracting-locus counts.

A representation is stored as a multiset of integer weight vectors.  For a
cocharacter ``lam`` the attracting data collects the weights pairing
positively with ``lam`` (from the representation and from the adjoint), the
integer ``n_lam`` measuring the window width in the ``lam`` direction, and
``b_lam = n_lam / 2``.  The relative data of a pair ``(lam, mu)`` collects
the counts and weight sums entering the swap and twist formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .groups import Coords, GroupSpec, vdot, vneg

ZERO = Fraction(0)


@dataclass(frozen=True)
class SymmetricRep:
    """A multiset of weights, stored sorted as (weight, multiplicity) pairs."""

    group: GroupSpec
    weights: tuple[tuple[Coords, int], ...]

    def __post_init__(self):
        merged: dict[Coords, int] = {}
        for beta, m in self.weights:
            beta = self.group.check_vector(beta, "weight")
            m = int(m)
            if m < 1:
                raise InputError("weight multiplicities must be positive")
            merged[beta] = merged.get(beta, 0) + m
        object.__setattr__(self, "weights", tuple(sorted(merged.items())))

    def flat(self) -> tuple[Coords, ...]:
        out = []
        for beta, m in self.weights:
            out.extend([beta] * m)
        return tuple(out)

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.weights)

    def multiplicity(self, beta: Coords) -> int:
        return dict(self.weights).get(tuple(beta), 0)

    def fixed_part(self, lam) -> tuple[Coords, ...]:
        """Weights with ``<lam, beta> = 0``, with multiplicity."""
        return tuple(b for b in self.flat() if vdot(lam, b) == 0)


def symmetric_rep(blocks, weight_list) -> SymmetricRep:
    """Build a :class:`SymmetricRep` from block sizes and (weight, mult) pairs."""
    G = GroupSpec(tuple(blocks))
    return SymmetricRep(group=G, weights=tuple((tuple(w), m) for w, m in weight_list))


def check_symmetric(V: SymmetricRep) -> bool:
    """True when ``beta`` and ``-beta`` occur with the same multiplicity."""
    table = dict(V.weights)
    return all(table.get(vneg(beta), 0) == m for beta, m in V.weights)


@dataclass(frozen=True)
class AttractingData:
    """Weights moved by ``lam``: ``A_lam`` from V, ``g_lam`` from the adjoint."""

    lam: Coords
    A: tuple[Coords, ...]
    g: tuple[Coords, ...]
    n: int
    b: Fraction


def attracting(V: SymmetricRep, lam) -> AttractingData:
    """``A_lam``, ``g_lam`` and ``n_lam = <lam, sum A> - <lam, sum g>``."""
    lam = V.group.check_vector(lam, "cocharacter")
    A = tuple(b for b in V.flat() if vdot(lam, b) > 0)
    g = tuple(b for b in V.group.all_roots() if vdot(lam, b) > 0)
    n = sum(vdot(lam, b) for b in A) - sum(vdot(lam, b) for b in g)
    return AttractingData(lam=lam, A=A, g=g, n=n, b=Fraction(n, 2))


def weight_sum(weights, rank) -> tuple:
    acc = [0] * rank
    for b in weights:
        for i, c in enumerate(b):
            acc[i] += c
    return tuple(acc)


def attracting_shift(V: SymmetricRep, lam) -> tuple[Fraction, ...]:
    """The face shift ``(sum A_lam - sum g_lam) / 2`` as a rational vector."""
    data = attracting(V, lam)
    r = V.group.rank
    sA = weight_sum(data.A, r)
    sg = weight_sum(data.g, r)
    return tuple(Fraction(a - g, 2) for a, g in zip(sA, sg))


@dataclass(frozen=True)
class RelativeData:
    """Counts and sums over ``A_lam`` and ``g_lam`` cut down by ``mu < 0``."""

    lam: Coords
    mu: Coords
    I: tuple[Coords, ...]
    J: tuple[Coords, ...]
    d: int
    e: int
    c: int
    N: Coords
    g: Coords
    script_N: Coords


def relative(V: SymmetricRep, lam, mu) -> RelativeData:
    """The sets ``I = {beta in A_lam : <mu, beta> < 0}`` and the adjoint
    analogue ``J``, with ``c = |I| - |J|`` and ``script_N = sum I - sum J``."""
    lam = V.group.check_vector(lam, "lambda")
    mu = V.group.check_vector(mu, "mu")
    data = attracting(V, lam)
    I = tuple(b for b in data.A if vdot(mu, b) < 0)
    J = tuple(b for b in data.g if vdot(mu, b) < 0)
    r = V.group.rank
    N = weight_sum(I, r)
    gsum = weight_sum(J, r)
    return RelativeData(
        lam=lam,
        mu=mu,
        I=I,
        J=J,
        d=len(I),
        e=len(J),
        c=len(I) - len(J),
        N=N,
        g=gsum,
        script_N=tuple(a - b for a, b in zip(N, gsum)),
    )
