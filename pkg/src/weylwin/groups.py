"""Root-system and Weyl-group combinatorics for products of GL blocks.

The groups handled here are ``G = GL(n_1) x ... x GL(n_k)``; a torus factor
is a block of size 1.  Weights and cocharacters are integer vectors of
length ``r = sum(n_i)`` paired by the dot product, the Weyl group is the
product of symmetric groups permuting coordinates within each block, and a
vector is dominant when its coordinates weakly decrease inside every block.
All arithmetic is exact (ints and fractions), nothing is approximated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InputError

Coords = tuple[int, ...]

_WEYL_ORDER_LIMIT = 50_000


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))

def vneg(u):
    return tuple(-a for a in u)


def vdot(u, v):
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True, order=True)
class GroupSpec:
    """A product of general linear blocks, e.g. ``GroupSpec((2, 1))``."""

    blocks: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(int(n) for n in self.blocks)
        if not blocks or any(n < 1 for n in blocks):
            raise InputError("every block size must be a positive integer")
        object.__setattr__(self, "blocks", blocks)

    @property
    def rank(self) -> int:
        return sum(self.blocks)

    def block_ranges(self) -> tuple[range, ...]:
        out, start = [], 0
        for n in self.blocks:
            out.append(range(start, start + n))
            start += n
        return tuple(out)

    def block_of(self, i: int) -> int:
        for b, rng in enumerate(self.block_ranges()):
            if i in rng:
                return b
        raise InputError(f"index {i} outside rank {self.rank}")

    def positive_roots(self) -> tuple[Coords, ...]:
        """The roots ``e_i - e_j`` for ``i < j`` within one block."""
        r = self.rank
        roots = []
        for rng in self.block_ranges():
            for i, j in itertools.combinations(rng, 2):
                beta = [0] * r
                beta[i], beta[j] = 1, -1
                roots.append(tuple(beta))
        return tuple(roots)

    def all_roots(self) -> tuple[Coords, ...]:
        pos = self.positive_roots()
        return pos + tuple(vneg(b) for b in pos)

    def check_vector(self, v, name="vector"):
        if len(v) != self.rank:
            raise InputError(f"{name} has length {len(v)}, expected rank {self.rank}")
        return tuple(v)


def rho(G: GroupSpec) -> tuple[Fraction, ...]:
    """Half the sum of positive roots: ``((n-1)/2, (n-3)/2, ...)`` per block."""
    out = []
    for n in G.blocks:
        out.extend(Fraction(n - 1 - 2 * i, 2) for i in range(n))
    return tuple(out)


def is_dominant(G: GroupSpec, v) -> bool:
    """Weakly decreasing inside every block."""
    for rng in G.block_ranges():
        for i in rng[:-1]:
            if v[i] < v[i + 1]:
                return False
    return True


@dataclass(frozen=True, order=True)
class WeylElement:
    """A block-preserving permutation of ``{0, ..., r-1}``.

    ``perm[i]`` is the image of position ``i``; the action on vectors puts
    coordinate ``i`` at position ``perm[i]``.
    """

    perm: tuple[int, ...]

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        if sorted(perm) != list(range(len(perm))):
            raise InputError(f"not a permutation: {perm}")
        object.__setattr__(self, "perm", perm)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (a * b)(i) = a(b(i))
        return WeylElement(tuple(self.perm[p] for p in other.perm))

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p] = i
        return WeylElement(tuple(inv))

    def act(self, v):
        """(w.v)[perm[i]] = v[i]; cocharacters and weights move the same way."""
        out = [None] * len(self.perm)
        for i, p in enumerate(self.perm):
            out[p] = v[i]
        return tuple(out)

    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm))

    def length(self, G: GroupSpec) -> int:
        """Coxeter length: inversions within blocks."""
        n = 0
        for rng in G.block_ranges():
            for i, j in itertools.combinations(rng, 2):
                if self.perm[i] > self.perm[j]:
                    n += 1
        return n

    def preserves_blocks(self, G: GroupSpec) -> bool:
        return all(set(self.perm[i] for i in rng) == set(rng) for rng in G.block_ranges())


def identity_element(G: GroupSpec) -> WeylElement:
    return WeylElement(tuple(range(G.rank)))


@lru_cache(maxsize=None)
def _weyl_group_cached(blocks: tuple[int, ...]) -> tuple[WeylElement, ...]:
    order = 1
    for n in blocks:
        for i in range(2, n + 1):
            order *= i
    if order > _WEYL_ORDER_LIMIT:
        raise InputError(f"Weyl group of order {order} exceeds the desk-scale limit")
    per_block = []
    start = 0
    for n in blocks:
        per_block.append([tuple(start + q for q in p) for p in itertools.permutations(range(n))])
        start += n
    elems = []
    for pieces in itertools.product(*per_block):
        perm = tuple(itertools.chain.from_iterable(pieces))
        elems.append(WeylElement(perm))
    return tuple(sorted(elems, key=lambda w: w.perm))


def weyl_group(G: GroupSpec) -> tuple[WeylElement, ...]:
    """All elements of W, sorted by one-line notation.  Desk scale only."""
    return _weyl_group_cached(G.blocks)


def weyl_generators(G: GroupSpec) -> tuple[WeylElement, ...]:
    """Adjacent transpositions within blocks."""
    gens = []
    for rng in G.block_ranges():
        for i in rng[:-1]:
            perm = list(range(G.rank))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            gens.append(WeylElement(tuple(perm)))
    return tuple(gens)


def _sorting_element(G: GroupSpec, v) -> WeylElement:
    """The w with w.v weakly decreasing per block, stable on ties."""
    perm = [0] * G.rank
    for rng in G.block_ranges():
        order = sorted(rng, key=lambda i: (-v[i], i))
        for slot, src in zip(rng, order):
            perm[src] = slot
    return WeylElement(tuple(perm))


def dominant_sort(G: GroupSpec, v):
    """Plain-action dominantization: returns ``(v_sorted, w)`` with ``w.v = v_sorted``."""
    w = _sorting_element(G, v)
    return w.act(v), w


def shifted_dominant(G: GroupSpec, chi):
    """Dominantize under the shifted action ``w * chi = w(chi + rho) - rho``.

    Returns ``(chi_plus, w, length)`` for the unique w making ``chi + rho``
    strictly decreasing per block, or ``None`` when ``chi + rho`` lies on a
    reflection wall (two equal coordinates inside a block); the wall case is
    exactly when the corresponding character sum vanishes.
    """
    r = rho(G)
    shifted = vadd(chi, r)
    for rng in G.block_ranges():
        vals = [shifted[i] for i in rng]
        if len(set(vals)) != len(vals):
            return None
    sorted_shifted, w = dominant_sort(G, shifted)
    chi_plus_frac = vsub(sorted_shifted, r)
    chi_plus = tuple(int(c) for c in chi_plus_frac)
    if any(Fraction(c) != f for c, f in zip(chi_plus, chi_plus_frac)):
        raise InputError("shifted dominantization produced a non-integral weight")
    return chi_plus, w, w.length(G)


# ---------------------------------------------------------------------------
# Levi data: level-set partitions of cocharacters


def levi_partition(G: GroupSpec, lam) -> tuple[tuple[int, ...], ...]:
    """Level sets of ``lam`` within each block, ordered by decreasing value.

    The returned parts are tuples of positions in increasing order; for a
    dominant ``lam`` they are consecutive ranges.
    """
    G.check_vector(lam, "cocharacter")
    parts = []
    for rng in G.block_ranges():
        values = sorted({lam[i] for i in rng}, reverse=True)
        for val in values:
            parts.append(tuple(i for i in rng if lam[i] == val))
    return tuple(parts)


def partition_refines(fine, coarse) -> bool:
    """True when each part of ``fine`` is contained in a part of ``coarse``."""
    lookup = {}
    for k, part in enumerate(coarse):
        for i in part:
            lookup[i] = k
    return all(len({lookup[i] for i in part}) == 1 for part in fine)


def partition_key(parts) -> tuple[tuple[int, ...], ...]:
    """Order-free canonical form, for comparing Levi subgroups."""
    return tuple(sorted(tuple(part) for part in parts))


@dataclass(frozen=True)
class LeviDatum:
    """A cocharacter together with its centralizer data.

    ``parts`` are the level sets of ``lam`` per block in decreasing value
    order; the sub-Weyl group ``W^lam`` permutes positions within each part.
    """

    lam: Coords
    parts: tuple[tuple[int, ...], ...]

    @property
    def weyl_order(self) -> int:
        n = 1
        for part in self.parts:
            for i in range(2, len(part) + 1):
                n *= i
        return n

    @property
    def levi_dimension(self) -> int:
        return sum(len(part) ** 2 for part in self.parts)

    def positive_roots(self, G: GroupSpec) -> tuple[Coords, ...]:
        r = G.rank
        roots = []
        for part in self.parts:
            for i, j in itertools.combinations(part, 2):
                beta = [0] * r
                beta[i], beta[j] = 1, -1
                roots.append(tuple(beta))
        return tuple(roots)

    def rho_levi(self, G: GroupSpec) -> tuple[Fraction, ...]:
        acc = [Fraction(0)] * G.rank
        for beta in self.positive_roots(G):
            for i, b in enumerate(beta):
                acc[i] += Fraction(b, 2)
        return tuple(acc)


def levi_datum(G: GroupSpec, lam) -> LeviDatum:
    return LeviDatum(tuple(lam), levi_partition(G, lam))


def levi_weyl_group(G: GroupSpec, parts) -> tuple[WeylElement, ...]:
    """All elements of the Young subgroup fixing each part (desk scale)."""
    order = 1
    for part in parts:
        for i in range(2, len(part) + 1):
            order *= i
    if order > _WEYL_ORDER_LIMIT:
        raise InputError(f"sub-Weyl group of order {order} exceeds the desk-scale limit")
    per_part = []
    for part in parts:
        per_part.append([dict(zip(part, images)) for images in itertools.permutations(part)])
    elems = []
    for assignment in itertools.product(*per_part):
        perm = list(range(G.rank))
        for mapping in assignment:
            for src, dst in mapping.items():
                perm[src] = dst
        elems.append(WeylElement(tuple(perm)))
    return tuple(sorted(elems, key=lambda w: w.perm))


def coset_reps(G: GroupSpec, lam, within=None) -> tuple[WeylElement, ...]:
    """Minimal-length representatives of ``W^within / W^lam``.

    ``within`` is a coarser partition (defaults to the full blocks); the
    representatives are the elements increasing on every part of the fine
    partition, listed in lexicographic one-line order.
    """
    # accept either a cocharacter or an explicit partition
    if lam and isinstance(lam[0], (tuple, list)):
        fine = tuple(tuple(p) for p in lam)
    else:
        fine = levi_partition(G, lam)
    coarse = tuple(tuple(rng) for rng in G.block_ranges()) if within is None else tuple(tuple(p) for p in within)
    if not partition_refines(fine, coarse):
        raise InputError("coset_reps: the fine partition must refine the coarse one")
    # group fine parts by the coarse part containing them
    by_coarse = {tuple(part): [] for part in coarse}
    lookup = {}
    for part in coarse:
        for i in part:
            lookup[i] = tuple(part)
    for part in fine:
        by_coarse[lookup[part[0]]].append(part)
    per_coarse = []
    for part in coarse:
        fines = by_coarse[tuple(part)]
        per_coarse.append(_interleavings(tuple(part), fines))
    reps = []
    for pieces in itertools.product(*per_coarse):
        perm = list(range(G.rank))
        for mapping in pieces:
            for src, dst in mapping.items():
                perm[src] = dst
        reps.append(WeylElement(tuple(perm)))
    return tuple(sorted(reps, key=lambda w: w.perm))


def _interleavings(slots: tuple[int, ...], parts):
    """Assignments sending each part order-preservingly into ``slots``."""
    if not parts:
        return [dict()]
    out = []
    first, rest = parts[0], parts[1:]

    for image in itertools.combinations(slots, len(first)):
        remaining = tuple(s for s in slots if s not in image)
        for tail in _interleavings(remaining, rest):
            mapping = dict(zip(first, image))
            mapping.update(tail)
            out.append(mapping)
    return out


# ---------------------------------------------------------------------------
# Refined cocharacters and double cosets


def refining_scale(nu, vectors) -> int:
    """A positive integer M so large that ``M*xi + nu`` orders pairs
    ``(<xi, .>, <nu, .>)`` lexicographically on ``vectors`` and on coordinates."""
    bound = 2 * max((abs(c) for c in nu), default=0)
    for v in vectors:
        bound = max(bound, sum(abs(a * b) for a, b in zip(nu, v)))
    return bound + 1


def combine_cocharacters(xi, nu, vectors=()) -> Coords:
    """The refinement ``M*xi + nu`` with M from :func:`refining_scale`.

    Level sets of the result are the common refinements of those of ``xi``
    and ``nu``, ordered by the pair ``(xi value, nu value)``; pairings with
    every vector in ``vectors`` have the lexicographic sign.
    """
    M = refining_scale(nu, vectors)
    return tuple(M * a + b for a, b in zip(xi, nu))


@dataclass(frozen=True)
class DoubleCosetDatum:
    """One double coset ``W^lam w W^mu`` with its refined cocharacters.

    ``w_s`` is the minimal-length representative; ``nu`` refines ``lam`` and
    ``w_s . mu``, and ``nu_prime`` refines ``mu`` and ``w_s^{-1} . lam``,
    both dominant.
    """

    w_s: WeylElement
    nu: Coords
    nu_prime: Coords


def _block_tables(row_sizes, col_sizes):
    """Nonnegative integer matrices with the given row and column sums."""
    k, l = len(row_sizes), len(col_sizes)

    def fill(rows_left, cols_remaining):
        if not rows_left:
            if any(cols_remaining):
                return
            yield []
            return
        a = rows_left[0]
        for row in _compositions(a, list(cols_remaining)):
            new_cols = [c - e for c, e in zip(cols_remaining, row)]
            for rest in fill(rows_left[1:], new_cols):
                yield [row] + rest

    yield from fill(list(row_sizes), list(col_sizes))


def _compositions(total, caps):
    if not caps:
        if total == 0:
            yield []
        return
    for e in range(min(total, caps[0]) + 1):
        for rest in _compositions(total - e, caps[1:]):
            yield [e] + rest


def double_cosets(G: GroupSpec, lam, mu, scale_vectors=()) -> tuple[DoubleCosetDatum, ...]:
    """All double cosets ``W^lam \\ W / W^mu`` for dominant ``lam, mu``.

    Within one GL(n) block with ``lam``-level sizes ``a_i`` and ``mu``-level
    sizes ``c_j`` the cosets are the contingency tables ``e_ij`` with row
    sums ``a_i`` and column sums ``c_j``; the refined cocharacter ``nu`` has
    the ``e_ij`` as level sizes in lexicographic ``(i, j)`` order, and the
    minimal representative moves the ``mu``-levels into that order without
    permuting anything inside a level.
    """
    lam = G.check_vector(lam, "lambda")
    mu = G.check_vector(mu, "mu")
    if not is_dominant(G, lam) or not is_dominant(G, mu):
        raise InputError("double_cosets requires dominant cocharacters")
    per_block = []
    for rng in G.block_ranges():
        lam_vals = sorted({lam[i] for i in rng}, reverse=True)
        mu_vals = sorted({mu[i] for i in rng}, reverse=True)
        row_sizes = [sum(1 for i in rng if lam[i] == v) for v in lam_vals]
        col_sizes = [sum(1 for i in rng if mu[i] == v) for v in mu_vals]
        col_starts = []
        s = rng.start
        for c in col_sizes:
            col_starts.append(s)
            s += c
        tables = list(_block_tables(row_sizes, col_sizes))
        per_block.append((rng, row_sizes, col_sizes, col_starts, tables))
    data = []
    for choice in itertools.product(*(t[4] for t in per_block)):
        perm = list(range(G.rank))
        for (rng, row_sizes, col_sizes, col_starts, _), table in zip(per_block, choice):
            # consumed[j]: how much of mu-level j is already placed
            consumed = [0] * len(col_sizes)
            target = rng.start
            for i in range(len(row_sizes)):
                for j in range(len(col_sizes)):
                    e = table[i][j]
                    for k in range(e):
                        src = col_starts[j] + consumed[j] + k
                        perm[src] = target
                        target += 1
                    consumed[j] += e
        w_s = WeylElement(tuple(perm))
        w_mu = w_s.act(mu)
        w_inv_lam = w_s.inverse().act(lam)
        nu = combine_cocharacters(lam, w_mu, scale_vectors)
        nu_prime = combine_cocharacters(mu, w_inv_lam, scale_vectors)
        data.append(DoubleCosetDatum(w_s=w_s, nu=nu, nu_prime=nu_prime))
    return tuple(sorted(data, key=lambda d: d.w_s.perm))


# ---------------------------------------------------------------------------
# The block-permutation symmetry group of a cocharacter


@dataclass(frozen=True)
class SymmetryGroup:
    """Permutations of equal-size level sets of ``lam`` (within each part of
    ``within``), acting as Weyl elements preserving the level partition."""

    lam: Coords
    elements: tuple[WeylElement, ...]

    def __len__(self):
        return len(self.elements)


def symmetry_group(G: GroupSpec, lam, within=None) -> SymmetryGroup:
    """The group permuting equal-size ``lam``-levels, order = prod m_i! over
    the multiplicities of the distinct level sizes inside each coarse part."""
    lam = G.check_vector(lam, "lambda")
    coarse = tuple(tuple(rng) for rng in G.block_ranges()) if within is None else tuple(tuple(p) for p in within)
    fine = levi_partition(G, lam)
    if not partition_refines(fine, coarse):
        raise InputError("symmetry_group: lam must be a cocharacter of the coarse Levi")
    lookup = {}
    for part in coarse:
        for i in part:
            lookup[i] = tuple(part)
    by_coarse = {tuple(part): [] for part in coarse}
    for part in fine:
        by_coarse[lookup[part[0]]].append(part)
    per_coarse = []
    for part in coarse:
        levels = by_coarse[tuple(part)]
        k = len(levels)
        perms = []
        for pi in itertools.permutations(range(k)):
            if all(len(levels[pi[i]]) == len(levels[i]) for i in range(k)):
                perms.append(pi)
        per_coarse.append((levels, perms))
    elements = []
    for choice in itertools.product(*(p for _, p in per_coarse)):
        perm = list(range(G.rank))
        for (levels, _), pi in zip(per_coarse, choice):
            for i, level in enumerate(levels):
                dest = levels[pi[i]]
                for src, dst in zip(level, dest):
                    perm[src] = dst
        elements.append(WeylElement(tuple(perm)))
    elements = tuple(sorted(elements, key=lambda w: w.perm))
    return SymmetryGroup(lam=lam, elements=elements)
