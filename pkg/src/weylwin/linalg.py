"""Exact rational linear algebra on small dense matrices.

Matrices are tuples of row tuples of fractions.  Everything is
fraction-exact Gauss elimination; canonical subspaces are reduced row
echelon bases of the row space, so two spans are equal iff their canonical
forms are equal tuples.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def mat(rows):
    return tuple(tuple(Fraction(c) for c in row) for row in rows)


def zeros(m, n):
    return tuple(tuple(ZERO for _ in range(n)) for _ in range(m))


def identity(n):
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def transpose(A):
    if not A:
        return ()
    return tuple(tuple(col) for col in zip(*A))


def mat_mul(A, B):
    if not A or not B:
        return ()
    n = len(B)
    assert all(len(row) == n for row in A), "shape mismatch"
    Bt = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def mat_add(A, B):
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(A, B):
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(A, c):
    c = Fraction(c)
    return tuple(tuple(c * a for a in row) for row in A)


def mat_vec(A, v):
    return tuple(sum(a * b for a, b in zip(row, v)) for row in A)


def is_zero_matrix(A) -> bool:
    return all(all(c == 0 for c in row) for row in A)


def rref(A):
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in A]
    if not rows:
        return (), ()
    n = len(rows[0])
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    clean = tuple(tuple(row) for row in rows[:r])
    return clean, tuple(pivots)


def rank(A) -> int:
    return len(rref(A)[0])


def row_space(A):
    """Canonical (rref) basis of the row span."""
    return rref(A)[0]


def column_space(A):
    """Canonical basis of the column span, as rref rows of the transpose."""
    return row_space(transpose(A)) if A else ()


def span_of_vectors(vectors):
    """Canonical basis (rref rows) of the span of the given vectors."""
    vecs = [tuple(v) for v in vectors]
    return row_space(tuple(vecs)) if vecs else ()


def nullspace(A):
    """Canonical basis of the right kernel ``{x : Ax = 0}``."""
    if not A:
        return ()
    n = len(A[0])
    R, pivots = rref(A)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        basis.append(tuple(v))
    return span_of_vectors(basis)


def stack_rows(mats):
    out = []
    for A in mats:
        out.extend(A)
    return tuple(out)


def intersect_spans(U, V):
    """Canonical basis of span(U) ∩ span(V), U and V given as row lists."""
    U = [tuple(u) for u in U]
    V = [tuple(v) for v in V]
    if not U or not V:
        return ()
    n = len(U[0])
    # solve sum a_i U_i - sum b_j V_j = 0
    cols = [list(u) for u in U] + [[-c for c in v] for v in V]
    A = tuple(zip(*cols))
    combos = nullspace(tuple(tuple(row) for row in A))
    vecs = []
    for combo in combos:
        a = combo[: len(U)]
        vec = tuple(sum(ai * u[k] for ai, u in zip(a, U)) for k in range(n))
        vecs.append(vec)
    return span_of_vectors(vecs)


def solve(A, b):
    """One exact solution of ``Ax = b`` or None."""
    if not A:
        return None
    n = len(A[0])
    aug = tuple(tuple(list(row) + [bv]) for row, bv in zip(A, b))
    R, pivots = rref(aug)
    for row in R:
        if all(c == 0 for c in row[:-1]) and row[-1] != 0:
            return None
    x = [ZERO] * n
    for i, p in enumerate(pivots):
        if p == n:
            return None
        x[p] = R[i][-1]
    return tuple(x)


def inverse(A):
    n = len(A)
    if n == 0:
        return ()
    aug = tuple(tuple(list(row) + list(e)) for row, e in zip(A, identity(n)))
    R, pivots = rref(aug)
    if tuple(pivots) != tuple(range(n)):
        return None
    return tuple(tuple(row[n:]) for row in R)


def det(A) -> Fraction:
    n = len(A)
    if n == 0:
        return ONE
    rows = [list(r) for r in A]
    sign = ONE
    result = ONE
    for c in range(n):
        pr = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pr is None:
            return ZERO
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            sign = -sign
        pv = rows[c][c]
        result *= pv
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] / pv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return sign * result


def projection_onto(image_rows, kernel_rows, n):
    """The idempotent with the given image and kernel (spans of rows).

    Requires image ⊕ kernel to fill Q^n; returns the n x n matrix fixing the
    image and killing the kernel, or None when the sum is not direct.
    """
    P = list(image_rows)
    B = list(kernel_rows)
    if len(P) + len(B) != n:
        return None
    M = transpose(tuple(tuple(v) for v in (P + B)))  # basis vectors as columns
    Minv = inverse(M)
    if Minv is None:
        return None
    D = tuple(tuple(ONE if (i == j and i < len(P)) else ZERO for j in range(n)) for i in range(n))
    return mat_mul(mat_mul(M, D), Minv)
