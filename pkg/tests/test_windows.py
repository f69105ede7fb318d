import itertools
from fractions import Fraction

import pytest

from weylwin import (
    GroupSpec,
    enumerate_window,
    face_basis,
    face_decompose,
    half_zonotope_contains,
    shifted_dominant,
    sigma_sums,
)
from weylwin.errors import InputError
from weylwin.groups import is_dominant, levi_partition, levi_weyl_group, rho, vadd, vdot, vsub
from weylwin.reps import attracting
from weylwin.windows import check_delta
from weylwin.zonotope import build_zonotope


def test_half_zonotope_examples():
    Z = build_zonotope([(1,), (-1,)], 1)
    assert half_zonotope_contains(Z, (0,))
    assert not half_zonotope_contains(Z, (Fraction(3, 4),))
    assert half_zonotope_contains(Z, (Fraction(1, 2),))  # boundary included
    assert half_zonotope_contains(Z, (Fraction(-1, 2),))
    assert not half_zonotope_contains(Z, (Fraction(-5, 8),))


def test_half_zonotope_empty_generators():
    Z = build_zonotope([], 2)
    assert half_zonotope_contains(Z, (0, 0))
    assert not half_zonotope_contains(Z, (0, 1))


def test_window_examples(torus2, torus4, gl2_adjoint, gl2_2std, gl3_std):
    assert enumerate_window(torus2.group, torus2).weights == ((0,),)
    assert enumerate_window(torus4.group, torus4).weights == ((-1,), (0,), (1,))
    assert enumerate_window(gl2_adjoint.group, gl2_adjoint).weights == ((0, 0),)
    assert enumerate_window(gl2_2std.group, gl2_2std).weights == ((0, 0),)
    assert enumerate_window(gl3_std.group, gl3_std).weights == ()


def _brute_window(V, delta=None):
    """Independent scan: wider box, direct zonotope membership per point."""
    G = V.group
    delta = check_delta(G, delta)
    Z = build_zonotope(V.flat(), G.rank)
    lo, hi = Z.coordinate_extents()
    rh = rho(G)
    ranges = []
    for i in range(G.rank):
        a = lo[i] - rh[i] - delta[i] - 2
        b = hi[i] - rh[i] - delta[i] + 2
        import math

        ranges.append(range(math.ceil(a), math.floor(b) + 1))
    found = []
    for chi in itertools.product(*ranges):
        if is_dominant(G, chi) and Z.contains_half(vadd(vadd(chi, rh), delta)):
            found.append(chi)
    return tuple(sorted(found))


def test_window_against_brute_force(acceptance_reps):
    for V in acceptance_reps.values():
        assert enumerate_window(V.group, V).weights == _brute_window(V)


def test_window_with_delta(torus4):
    half = (Fraction(1, 2),)
    basis = enumerate_window(torus4.group, torus4, half)
    assert basis.weights == _brute_window(torus4, half)
    assert basis.weights == ((-1,), (0,))


def test_window_negation_duality(acceptance_reps):
    # chi in window <=> shifted-dominant representative of -chi in window
    for V in acceptance_reps.values():
        G = V.group
        window = set(enumerate_window(G, V).weights)
        for chi in window:
            sd = shifted_dominant(G, tuple(-c for c in chi))
            assert sd is not None
            assert sd[0] in window


def test_face_examples(torus2, torus4, gl2_adjoint):
    fb = face_basis(torus4.group, torus4, (1,))
    assert fb.weights == ((1,),)
    assert fb.threshold == 1 and fb.shift == (1,)

    assert face_basis(torus2.group, torus2, (1,)).weights == ()  # n odd

    window = enumerate_window(torus4.group, torus4)
    zero_face = face_basis(torus4.group, torus4, (0,))
    assert zero_face.weights == window.weights

    fb = face_basis(gl2_adjoint.group, gl2_adjoint, (1, 0))
    assert fb.weights == ((0, 0),)
    assert fb.threshold == 0


def test_face_weights_satisfy_global_bounds(acceptance_reps):
    # orbit extremes of each face weight satisfy the width bounds for a
    # generating set of cocharacters
    for V in acceptance_reps.values():
        G = V.group
        r = G.rank
        cochars = set()
        for i in range(r):
            e = [0] * r
            e[i] = 1
            cochars.add(tuple(e))
            cochars.add(tuple(-c for c in e))
        for tau in itertools.product((-1, 0, 1), repeat=r):
            if is_dominant(G, tau):
                cochars.add(tau)
        cochars.discard((0,) * r)
        for lam in _small_dominant(G):
            fb = face_basis(G, V, lam)
            parts = levi_partition(G, lam)
            for chi in fb.weights:
                for tau in cochars:
                    n_tau = attracting(V, tau).n
                    pairings = [vdot(tau, w.act(chi)) for w in levi_weyl_group(G, parts)]
                    assert 2 * max(pairings) <= n_tau
                    assert 2 * min(pairings) >= -n_tau


def test_face_decompose_examples(torus4, gl2_adjoint):
    psi, w = face_decompose(torus4.group, torus4, (1,), (1,))
    assert psi == (0,) and w.is_identity()

    window = enumerate_window(gl2_adjoint.group, gl2_adjoint)
    for chi in window.weights:
        psi, w = face_decompose(gl2_adjoint.group, gl2_adjoint, (0, 0), chi)
        assert psi == tuple(Fraction(c) for c in chi)

    with pytest.raises(InputError):
        face_decompose(torus4.group, torus4, (1,), (0,))


def test_sigma_sums_examples(torus4):
    T = torus4.group
    out = sigma_sums(T, torus4, (1,), (-1,), (1,))
    assert [(w.is_identity(), s) for w, s in out] == [(True, (2,))]

    # mu = lam keeps the empty sum
    out = sigma_sums(T, torus4, (1,), (1,), (1,))
    assert ((True, (0,))) in [(w.is_identity(), s) for w, s in out]


def _brute_sigma(G, V, lam, mu, chi):
    from weylwin.groups import dominant_sort

    data = attracting(V, lam)
    tau, _ = dominant_sort(G, mu)
    b_tau = attracting(V, tau).b
    out = set()
    for mask in range(1 << len(data.A)):
        sigma = [0] * G.rank
        for k, beta in enumerate(data.A):
            if mask >> k & 1:
                for i, c in enumerate(beta):
                    sigma[i] += c
        sd = shifted_dominant(G, vsub(chi, tuple(sigma)))
        if sd is None:
            continue
        if vdot(tau, sd[0]) == b_tau:
            out.add((sd[1].perm, tuple(sigma)))
    return out


def test_sigma_sums_against_subset_oracle(acceptance_reps):
    for V in acceptance_reps.values():
        G = V.group
        for lam in _small_dominant(G):
            fb = face_basis(G, V, lam)
            for mu in _small_dominant(G):
                for chi in fb.weights:
                    got = {(w.perm, s) for w, s in sigma_sums(G, V, lam, mu, chi)}
                    assert got == _brute_sigma(G, V, lam, mu, chi)


def _small_dominant(G):
    out = []
    for tau in itertools.product((1, 0, -1), repeat=G.rank):
        if is_dominant(G, tau):
            out.append(tau)
    return out
