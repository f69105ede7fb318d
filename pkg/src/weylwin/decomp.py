"""Primitive and boundary pieces of the window K-group.

The boundary subspace is spanned by the induction images from all proper
attracting classes; the primitive subspace is the intersection of the
kernels of the symmetrized, projected restrictions to those classes, where
each class's own projection is built by the same construction one level
down.  Exactness is never assumed: the rank sum, the trivial intersection,
the idempotency of the projector, the invertibility of the assembled block
map, and the agreement of the kernel-intersection and elimination
constructions are all verified as exact rational identities and a failure
raises :class:`~weylwin.errors.DecompositionError`.

Classes are attracting data up to equivalence.  Two cocharacters with the
same centralizer and the same fixed weight multiset have equal induction
images, so classes are keyed by that pair ("fixed" mode) or by the
centralizer alone ("levi" mode, the coarser reading); representatives are
the lexicographically first vectors of minimal size found in the bounded
enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DecompositionError, InputError
from .groups import (
    GroupSpec,
    combine_cocharacters,
    levi_partition,
    partition_key,
    partition_refines,
    symmetry_group,
    vdot,
)
from .linalg import (
    identity as mat_identity,
    is_zero_matrix,
    det,
    mat_mul,
    mat_vec,
    nullspace,
    projection_onto,
    rank as mat_rank,
    span_of_vectors,
    stack_rows,
    transpose,
)
from .reps import SymmetricRep, relative
from .shuffle import (
    OperatorMatrix,
    induction_matrix,
    restriction_matrix,
    zero_operator,
)
from .windows import FaceBasis, check_delta, face_basis

ZERO = Fraction(0)


@dataclass(frozen=True)
class BoundaryClass:
    """An equivalence class of proper attracting data at some level."""

    rep: tuple[int, ...]          # representative sub-cocharacter, bounded entries
    xi: tuple[int, ...]           # combined ambient cocharacter of the class
    levi: tuple                   # canonical centralizer partition
    fixed: tuple                  # fixed weight multiset of the class
    key: tuple
    face_rank: int


@dataclass(frozen=True)
class Subspace:
    """A subspace of the free module on a basis, in canonical echelon form."""

    basis: FaceBasis
    rows: tuple

    @property
    def rank(self) -> int:
        return len(self.rows)

    def columns(self):
        return transpose(self.rows)

    def contains(self, vector) -> bool:
        target = span_of_vectors(self.rows)
        return span_of_vectors(list(self.rows) + [tuple(vector)]) == target


@dataclass
class _ClassData:
    cls: BoundaryClass
    child: "_LevelData"
    delta_m: tuple      # restriction level -> class face
    m: tuple            # induction class face -> level
    sym: tuple          # sum of swap actions of the class symmetry group
    sym_order: int
    phi: tuple          # sym . child_projection . delta_m


@dataclass
class _LevelData:
    xi: tuple
    basis: FaceBasis
    classes: list
    bk_rows: tuple
    pk_rows: tuple
    pi: tuple
    pk_sym_rows: dict
    deco_det: Fraction
    elimination_rows: tuple
    flags: dict


def _sorted_key(nu):
    return (max((abs(c) for c in nu), default=0), sum(abs(c) for c in nu), nu)


class Decomposition:
    """Recursive primitive/boundary splitting engine for one input."""

    def __init__(self, G: GroupSpec, V: SymmetricRep, delta=None, bound: int = 2, mode: str = "fixed", check_elimination: bool = True):
        if mode not in ("fixed", "levi"):
            raise InputError("mode must be 'fixed' or 'levi'")
        self.G = G
        self.V = V
        self.delta = check_delta(G, delta)
        self.bound = int(bound)
        self.mode = mode
        self.check_elimination = check_elimination
        self.scale_vectors = V.flat() + G.all_roots()
        self._levels: dict[tuple, _LevelData] = {}

    # -- class enumeration ---------------------------------------------------

    def class_key(self, xi_combined):
        levi = partition_key(levi_partition(self.G, xi_combined))
        fixed = tuple(sorted(b for b in self.V.flat() if vdot(xi_combined, b) == 0))
        return (levi, fixed) if self.mode == "fixed" else (levi,), levi, fixed

    def boundary_classes(self, xi, include_empty_faces: bool = False):
        """Deduplicated proper attracting classes at the level of ``xi``."""
        G = self.G
        parts = levi_partition(G, xi)
        fixed_here = tuple(sorted(b for b in self.V.flat() if vdot(xi, b) == 0))
        best: dict = {}
        for nu in itertools.product(range(-self.bound, self.bound + 1), repeat=G.rank):
            if not any(nu):
                continue
            if not _parts_dominant(parts, nu):
                continue
            combined = combine_cocharacters(xi, nu, self.scale_vectors)
            key, levi, fixed = self.class_key(combined)
            if partition_key(levi_partition(G, combined)) == partition_key(parts) and fixed == fixed_here:
                continue  # acts trivially on this level
            item = (_sorted_key(nu), nu, combined, levi, fixed)
            if key not in best or item[0] < best[key][0]:
                best[key] = item
        out = []
        for key, (_, nu, combined, levi, fixed) in sorted(best.items()):
            face_rank = len(face_basis(self.G, self.V, combined, self.delta))
            if face_rank == 0 and not include_empty_faces:
                continue
            out.append(BoundaryClass(rep=nu, xi=combined, levi=levi, fixed=fixed, key=key, face_rank=face_rank))
        # big centralizers first; deterministic tie-break on the key
        out.sort(key=lambda c: (-sum(len(p) ** 2 for p in c.levi), c.key))
        return out

    # -- recursion -----------------------------------------------------------

    def level(self, xi) -> _LevelData:
        xi = tuple(xi)
        if xi in self._levels:
            return self._levels[xi]
        basis = face_basis(self.G, self.V, xi, self.delta)
        n = len(basis)
        flags: dict = {}
        classes = []
        if n > 0:
            for cls in self.boundary_classes(xi):
                child = self.level(cls.xi)
                dm = restriction_matrix(self.V, basis, child.basis)
                m = induction_matrix(self.V, child.basis, basis)
                sym, order = self._symmetry_action(xi, cls, child.basis)
                phi = mat_mul(mat_mul(sym, child.pi), dm.entries)
                classes.append(_ClassData(cls=cls, child=child, delta_m=dm.entries, m=m.entries, sym=sym, sym_order=order, phi=phi))
        bk_rows = span_of_vectors(
            [col for cd in classes for col in transpose(cd.m)]
        ) if classes else ()
        if n == 0:
            pk_rows: tuple = ()
        elif not classes:
            pk_rows = span_of_vectors(mat_identity(n))
        else:
            pk_rows = nullspace(stack_rows([cd.phi for cd in classes]))
        flags["rank_sum"] = len(pk_rows) + len(bk_rows) == n
        inter = ()
        if pk_rows and bk_rows:
            from .linalg import intersect_spans

            inter = intersect_spans(pk_rows, bk_rows)
        flags["intersection_trivial"] = len(inter) == 0
        if not (flags["rank_sum"] and flags["intersection_trivial"]):
            raise DecompositionError(
                f"decomposition failure at level {xi}: pk={len(pk_rows)}, bk={len(bk_rows)}, dim={n}, overlap={len(inter)}",
                report={"xi": xi, "pk": pk_rows, "bk": bk_rows},
            )
        pi = projection_onto(pk_rows, bk_rows, n) if n else ()
        flags["idempotent"] = pi == () or mat_mul(pi, pi) == pi
        # symmetric parts of the child primitives, for the block assembly
        pk_sym_rows = {}
        for cd in classes:
            avg = [[c / cd.sym_order for c in row] for row in cd.sym]
            images = [mat_vec(tuple(tuple(r) for r in avg), v) for v in cd.child.pk_rows]
            sym_rows = span_of_vectors(images)
            if span_of_vectors(list(cd.child.pk_rows) + list(sym_rows)) != span_of_vectors(cd.child.pk_rows):
                raise DecompositionError(f"symmetrization left the primitive subspace at level {xi}")
            pk_sym_rows[cd.cls.key] = sym_rows
        deco_det = self._deco_determinant(n, pk_rows, classes, pk_sym_rows)
        flags["deco_invertible"] = n == 0 or deco_det != 0
        if not flags["deco_invertible"]:
            raise DecompositionError(f"assembled block map is singular at level {xi}")
        elim_rows: tuple = ()
        if self.check_elimination:
            elim_rows = self._elimination(n, classes)
            flags["elimination_agrees"] = elim_rows == pk_rows
        data = _LevelData(
            xi=xi,
            basis=basis,
            classes=classes,
            bk_rows=bk_rows,
            pk_rows=pk_rows,
            pi=pi,
            pk_sym_rows=pk_sym_rows,
            deco_det=deco_det,
            elimination_rows=elim_rows,
            flags=flags,
        )
        self._levels[xi] = data
        return data

    def _symmetry_action(self, xi, cls: BoundaryClass, child_basis: FaceBasis):
        """Sum of the signed twist actions of the class symmetry group."""
        G = self.G
        sym = symmetry_group(G, cls.xi, within=levi_partition(G, xi))
        n = len(child_basis)
        total = [[ZERO] * n for _ in range(n)]
        for w in sym.elements:
            rel = relative(self.V, cls.xi, w.act(cls.xi))
            sign = Fraction(-1) ** rel.c
            w_inv = w.inverse()
            for j, chi in enumerate(child_basis.weights):
                image = w_inv.act(tuple(a - b for a, b in zip(chi, rel.script_N)))
                idx = child_basis.index_of(image)
                if idx is None:
                    from .errors import FaceMismatchError

                    raise FaceMismatchError(f"symmetry image {image} left the face basis of {cls.xi}")
                total[idx][j] += sign
        return tuple(tuple(row) for row in total), len(sym.elements)

    def _deco_determinant(self, n, pk_rows, classes, pk_sym_rows) -> Fraction:
        cols = [list(v) for v in pk_rows]
        for cd in classes:
            for v in pk_sym_rows[cd.cls.key]:
                cols.append(list(mat_vec(cd.m, v)))
        if len(cols) != n:
            return ZERO
        if n == 0:
            return Fraction(1)
        M = transpose(tuple(tuple(c) for c in cols))
        return det(M)

    def _elimination(self, n, classes):
        """The sweep construction: subtract class inductions of the
        symmetrized restrictions until every class map vanishes."""
        vectors = [tuple(row) for row in mat_identity(n)]
        for _ in range(max(1, len(classes))):
            changed = False
            for cd in classes:  # already ordered by decreasing centralizer size
                new_vectors = []
                for v in vectors:
                    fv = mat_vec(cd.phi, v)
                    if all(c == 0 for c in fv):
                        new_vectors.append(v)
                        continue
                    u = mat_vec(cd.m, fv)
                    fu = mat_vec(cd.phi, u)
                    c = _ratio(fv, fu)
                    if c is None:
                        raise DecompositionError("elimination step has no one-dimensional solution")
                    new_vectors.append(tuple(a - c * b for a, b in zip(v, u)))
                    changed = True
                vectors = new_vectors
            if not changed:
                break
        for cd in classes:
            for v in vectors:
                if any(c != 0 for c in mat_vec(cd.phi, v)):
                    raise DecompositionError("elimination sweep failed to clear a class map")
        return span_of_vectors(vectors)

    # -- public surface --------------------------------------------------

    def top(self) -> _LevelData:
        return self.level((0,) * self.G.rank)


def _parts_dominant(parts, nu) -> bool:
    for part in parts:
        for a, b in zip(part, part[1:]):
            if nu[a] < nu[b]:
                return False
    return True


def _ratio(fv, fu):
    """The exact c with fv == c * fu, or None."""
    c = None
    for a, b in zip(fv, fu):
        if b == 0:
            if a != 0:
                return None
            continue
        r = Fraction(a, 1) / b
        if c is None:
            c = r
        elif c != r:
            return None
    if c is None:
        return None
    if any(a != c * b for a, b in zip(fv, fu)):
        return None
    return c


# ---------------------------------------------------------------------------
# Spec-level operations


def boundary_classes(G: GroupSpec, V: SymmetricRep, delta=None, bound: int = 2, mode: str = "fixed", include_empty_faces: bool = False):
    engine = Decomposition(G, V, delta, bound, mode, check_elimination=False)
    return engine.boundary_classes((0,) * G.rank, include_empty_faces=include_empty_faces)


def compute_BK(G: GroupSpec, V: SymmetricRep, delta=None, bound: int = 2, mode: str = "fixed") -> Subspace:
    engine = Decomposition(G, V, delta, bound, mode, check_elimination=False)
    top = engine.top()
    return Subspace(basis=top.basis, rows=top.bk_rows)


def compute_PK(G: GroupSpec, V: SymmetricRep, delta=None, bound: int = 2, mode: str = "fixed") -> Subspace:
    engine = Decomposition(G, V, delta, bound, mode)
    top = engine.top()
    return Subspace(basis=top.basis, rows=top.pk_rows)


@dataclass(frozen=True)
class DecompositionReport:
    window_rank: int
    bk_rank: int
    pk_rank: int
    per_class: tuple
    flags: dict
    deco_det: Fraction
    pk: Subspace
    bk: Subspace


def idempotent_e(G: GroupSpec, V: SymmetricRep, delta=None, bound: int = 2, mode: str = "fixed"):
    """The exact projection onto the primitive part along the boundary part.

    Returns the operator matrix on the window basis and a report with the
    ranks, the per-class contributions and every verification flag.
    """
    engine = Decomposition(G, V, delta, bound, mode)
    top = engine.top()
    n = len(top.basis)
    entries = top.pi if n else ()
    e = OperatorMatrix(domain=top.basis, codomain=top.basis, entries=entries if n else ())
    flags = dict(top.flags)
    if n:
        flags["projection_rank"] = mat_rank(top.pi) == len(top.pk_rows)
        image_rows = span_of_vectors([mat_vec(top.pi, v) for v in mat_identity(n)])
        flags["projection_image"] = image_rows == top.pk_rows
        kernel_rows = nullspace(top.pi)
        flags["projection_kernel"] = kernel_rows == span_of_vectors(top.bk_rows) if top.bk_rows else len(kernel_rows) == 0
    per_class = []
    for cd in top.classes:
        image_rank = mat_rank(transpose(cd.m))
        per_class.append(
            {
                "rep": cd.cls.rep,
                "levi": cd.cls.levi,
                "fixed_count": len(cd.cls.fixed),
                "face_rank": cd.cls.face_rank,
                "sym_order": cd.sym_order,
                "child_pk_rank": len(cd.child.pk_rows),
                "pk_sym_rank": len(top.pk_sym_rows[cd.cls.key]),
                "image_rank": image_rank,
            }
        )
    report = DecompositionReport(
        window_rank=n,
        bk_rank=len(top.bk_rows),
        pk_rank=len(top.pk_rows),
        per_class=tuple(per_class),
        flags=flags,
        deco_det=top.deco_det,
        pk=Subspace(basis=top.basis, rows=top.pk_rows),
        bk=Subspace(basis=top.basis, rows=top.bk_rows),
    )
    return e, report


def check_compequal(G: GroupSpec, V: SymmetricRep, lam_L, delta=None, bound: int = 2, mode: str = "fixed") -> bool:
    """On the class primitives, projected restriction of the class induction
    equals the symmetry-group average times its order (the plain sum)."""
    engine = Decomposition(G, V, delta, bound, mode)
    top = engine.top()
    cd = _find_class(engine, top, lam_L)
    lhs = mat_mul(mat_mul(cd.child.pi, cd.delta_m), cd.m)
    rhs = cd.sym
    diff = tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(lhs, rhs))
    return all(all(c == 0 for c in mat_vec(diff, v)) for v in cd.child.pk_rows)


def check_compdiff(G: GroupSpec, V: SymmetricRep, lam_L, mu_E, delta=None, bound: int = 2, mode: str = "fixed") -> bool:
    """Projected restriction to an incomparable class kills the induction."""
    engine = Decomposition(G, V, delta, bound, mode)
    top = engine.top()
    cl = _find_class(engine, top, lam_L)
    ce = _find_class(engine, top, mu_E)
    if partition_refines(ce.cls.levi, cl.cls.levi):
        raise InputError("containment holds: the test requires E not inside L")
    composite = mat_mul(mat_mul(mat_mul(ce.child.pi, ce.delta_m), cl.m), transpose(cl.child.pk_rows))
    return is_zero_matrix(composite)


def _find_class(engine: Decomposition, top: _LevelData, lam):
    lam = engine.G.check_vector(lam, "class cocharacter")
    combined = combine_cocharacters((0,) * engine.G.rank, lam, engine.scale_vectors)
    key, _, _ = engine.class_key(combined)
    for cd in top.classes:
        if cd.cls.key == key:
            return cd
    raise InputError(f"no boundary class for {lam}")
