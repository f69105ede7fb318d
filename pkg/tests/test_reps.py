from fractions import Fraction

import pytest

from weylwin import GroupSpec, attracting, check_symmetric, relative, symmetric_rep, weyl_group
from weylwin.groups import vdot, vneg
from weylwin.reps import attracting_shift


def test_check_symmetric():
    assert check_symmetric(symmetric_rep((1,), [((1,), 1), ((-1,), 1)]))
    assert not check_symmetric(symmetric_rep((1,), [((1,), 2), ((-1,), 1)]))
    assert check_symmetric(symmetric_rep((2,), [((0, 0), 2), ((1, -1), 1), ((-1, 1), 1)]))


def test_multiset_merge():
    V = symmetric_rep((1,), [((1,), 1), ((1,), 1), ((-1,), 2)])
    assert V.weights == (((-1,), 2), ((1,), 2))
    assert V.dimension == 4


def test_attracting_examples(torus4, gl2_adjoint):
    a = attracting(torus4, (1,))
    assert a.A == ((1,), (1,))
    assert a.g == ()
    assert (a.n, a.b) == (2, 1)

    b = attracting(gl2_adjoint, (1, 0))
    assert b.A == ((1, -1),)
    assert b.g == ((1, -1),)
    assert b.n == 0

    c = attracting(torus4, (0,))
    assert c.A == () and c.n == 0


def test_attracting_rank1_single():
    V = symmetric_rep((1,), [((1,), 1), ((-1,), 1)])
    a = attracting(V, (1,))
    assert a.A == ((1,),) and a.n == 1 and a.b == Fraction(1, 2)


def test_relative_examples(torus4, gl2_adjoint):
    r = relative(torus4, (1,), (1,))
    assert r.I == () and r.c == 0 and r.script_N == (0,)

    r = relative(torus4, (1,), (-1,))
    assert r.I == ((1,), (1,))
    assert (r.d, r.e, r.c) == (2, 0, 2)
    assert r.N == (2,) and r.script_N == (2,)

    r = relative(gl2_adjoint, (1, 0), (0, 1))
    assert r.I == ((1, -1),) and r.J == ((1, -1),)
    assert r.c == 0 and r.script_N == (0, 0)


def test_negation_symmetry(acceptance_reps):
    for V in acceptance_reps.values():
        G = V.group
        for lam in _small_cochars(G):
            a = attracting(V, lam)
            am = attracting(V, vneg(lam))
            assert len(a.A) == len(am.A)
            assert sorted(a.A) == sorted(vneg(b) for b in am.A)
            assert a.n == am.n


def test_n_weyl_invariance(acceptance_reps):
    for V in acceptance_reps.values():
        G = V.group
        for lam in _small_cochars(G):
            n = attracting(V, lam).n
            for w in weyl_group(G):
                assert attracting(V, w.act(lam)).n == n


def test_relative_negation(acceptance_reps):
    for V in acceptance_reps.values():
        G = V.group
        for lam in _small_cochars(G):
            for mu in _small_cochars(G):
                I1 = sorted(relative(V, lam, mu).I)
                I2 = sorted(vneg(b) for b in relative(V, mu, lam).I)
                # I^lam_mu = {<lam,.> > 0, <mu,.> < 0}; negate to swap roles
                assert I1 == I2


def test_attracting_shift(torus4, gl2_adjoint):
    assert attracting_shift(torus4, (1,)) == (1,)
    assert attracting_shift(gl2_adjoint, (1, 0)) == (0, 0)


def _small_cochars(G):
    import itertools

    r = G.rank
    vals = [-1, 0, 1]
    return [v for v in itertools.product(vals, repeat=r)][:40]
