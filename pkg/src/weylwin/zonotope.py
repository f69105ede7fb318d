"""Exact membership in half the weight zonotope.

The zonotope of a weight multiset is the Minkowski sum of the segments
``[0, beta]``; membership of a rational point in its half is a rational
linear feasibility problem, solved here once per zonotope by parametric
Fourier-Motzkin elimination.  The variables are the segment coefficients
``t_beta in [0, 1/2]``; eliminating them leaves equalities and inequalities
in the query point alone, which every later query just evaluates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import InputError


def _normalize_affine(xvec, const):
    """Scale an affine form in x to coprime integer coefficients."""
    nums = [c for c in list(xvec) + [const] if c]
    if not nums:
        return tuple(Fraction(0) for _ in xvec), Fraction(0)
    denom_lcm = 1
    for c in nums:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in list(xvec) + [const]]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    scale = Fraction(denom_lcm, g)
    return tuple(c * scale for c in xvec), const * scale


@dataclass(frozen=True)
class Zonotope:
    """Half-zonotope membership oracle for a multiset of integer weights."""

    generators: tuple[tuple[int, ...], ...]
    rank: int
    equalities: tuple = field(default=(), compare=False, repr=False)
    inequalities: tuple = field(default=(), compare=False, repr=False)

    def contains_half(self, point) -> bool:
        """True iff ``point = sum t_beta * beta`` with all ``t_beta in [0, 1/2]``."""
        if len(point) != self.rank:
            raise InputError("point has the wrong length")
        x = tuple(Fraction(c) for c in point)
        for vec, const in self.equalities:
            if sum(a * b for a, b in zip(vec, x)) + const != 0:
                return False
        for vec, const in self.inequalities:
            if sum(a * b for a, b in zip(vec, x)) + const < 0:
                return False
        return True

    def coordinate_extents(self):
        """Exact per-coordinate min and max of the half zonotope."""
        los, his = [], []
        for i in range(self.rank):
            los.append(sum(Fraction(min(g[i], 0), 2) for g in self.generators))
            his.append(sum(Fraction(max(g[i], 0), 2) for g in self.generators))
        return tuple(los), tuple(his)


def build_zonotope(generators, rank) -> Zonotope:
    gens = tuple(tuple(int(c) for c in g) for g in generators)
    for g in gens:
        if len(g) != rank:
            raise InputError("generator has the wrong length")
    eqs, ineqs = _eliminate(gens, rank)
    return Zonotope(generators=gens, rank=rank, equalities=eqs, inequalities=ineqs)


# Rows are (t_coeffs: dict, x_vector: tuple, const: Fraction) and mean
#   sum_k t_coeffs[k] * t_k  <=  <x_vector, x> + const
# Equations use the same shape with equality.


def _eliminate(gens, rank):
    m = len(gens)
    zero_x = tuple(Fraction(0) for _ in range(rank))

    equations = []
    for i in range(rank):
        t = {k: Fraction(gens[k][i]) for k in range(m) if gens[k][i]}
        xv = list(zero_x)
        xv[i] = Fraction(1)
        equations.append((t, tuple(xv), Fraction(0)))

    rows = []
    for k in range(m):
        rows.append(({k: Fraction(1)}, zero_x, Fraction(1, 2)))
        rows.append(({k: Fraction(-1)}, zero_x, Fraction(0)))

    x_equalities = set()
    for idx in range(len(equations)):
        t, xv, c = equations[idx]
        pivot = min(t, default=None)
        if pivot is None:
            x_equalities.add(_normalize_affine(xv, c))
            continue
        pc = t[pivot]

        def substitute(row, t=t, xv=xv, c=c, pc=pc, pivot=pivot):
            rt, rxv, rc = row
            a = rt.get(pivot)
            if not a:
                return row
            factor = a / pc
            new_t = {k: v for k, v in rt.items() if k != pivot}
            for k, v in t.items():
                if k == pivot:
                    continue
                nv = new_t.get(k, Fraction(0)) - factor * v
                if nv:
                    new_t[k] = nv
                elif k in new_t:
                    del new_t[k]
            new_xv = tuple(b - factor * a2 for b, a2 in zip(rxv, xv))
            new_c = rc - factor * c
            return (new_t, new_xv, new_c)

        equations = [equations[j] if j <= idx else substitute(equations[j]) for j in range(len(equations))]
        rows = [substitute(r) for r in rows]

    remaining = sorted({k for row in rows for k in row[0]})
    for var in remaining:
        pos, neg, keep = [], [], []
        for row in rows:
            a = row[0].get(var, Fraction(0))
            if a > 0:
                pos.append(row)
            elif a < 0:
                neg.append(row)
            else:
                keep.append(row)
        combined = list(keep)
        for pt, pxv, pc in pos:
            ap = pt[var]
            for nt, nxv, nc in neg:
                an = -nt[var]
                t = {}
                for k, v in pt.items():
                    if k != var:
                        t[k] = t.get(k, Fraction(0)) + an * v
                for k, v in nt.items():
                    if k != var:
                        t[k] = t.get(k, Fraction(0)) + ap * v
                t = {k: v for k, v in t.items() if v}
                xv = tuple(an * a + ap * b for a, b in zip(pxv, nxv))
                combined.append((t, xv, an * pc + ap * nc))
        rows = _prune(combined)

    inequalities = set()
    for t, xv, c in rows:
        if t:
            raise InputError("Fourier-Motzkin left a live variable")
        inequalities.add(_normalize_affine(xv, c))
    return tuple(sorted(x_equalities)), tuple(sorted(inequalities))


def _prune(rows):
    """Normalize rows and keep, per direction, only the tightest constant."""
    best = {}
    for t, xv, c in rows:
        if t:
            pivot = min(t)
            scale = abs(t[pivot])
        else:
            scale = Fraction(1)
        norm_t = tuple(sorted((k, v / scale) for k, v in t.items()))
        norm_x = tuple(a / scale for a in xv)
        norm_c = c / scale
        key = (norm_t, norm_x)
        if key not in best or norm_c < best[key]:
            best[key] = norm_c
    return [(dict(nt), nx, nc) for (nt, nx), nc in sorted(best.items())]
