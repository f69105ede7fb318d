import random
from fractions import Fraction

import pytest

from weylwin import (
    GroupSpec,
    LaurentPoly,
    bbw_pushforward,
    enumerate_window,
    expand_in_characters,
    monomial,
    symmetrize_full,
    symmetrize_induction,
    weyl_act,
    weyl_character,
    weyl_group,
)
from weylwin.errors import InexactDivisionError, NotInvariantError
from weylwin.groups import identity_element, levi_partition, levi_weyl_group, vneg
from weylwin.laurent import divide_by_factor, laurent_zero
from weylwin.reps import attracting


def _random_poly(rng, rank, nterms=4, span=3):
    terms = {}
    for _ in range(nterms):
        e = tuple(rng.randrange(-span, span + 1) for _ in range(rank))
        terms[e] = Fraction(rng.randrange(-5, 6), rng.randrange(1, 4))
    return LaurentPoly(terms)


def test_weyl_act_examples():
    G = GroupSpec((2,))
    f = monomial((1, 0))
    swap = weyl_group(G)[1]
    assert weyl_act(identity_element(G), f) == f
    assert weyl_act(swap, f) == monomial((0, 1))


def test_weyl_act_action_axiom():
    G = GroupSpec((2, 1))
    W = weyl_group(G)
    rng = random.Random(3)
    for _ in range(25):
        a, b = rng.choice(W), rng.choice(W)
        f = _random_poly(rng, G.rank)
        assert weyl_act(a * b, f) == weyl_act(a, weyl_act(b, f))


def test_divide_by_factor_roundtrip():
    rng = random.Random(5)
    for _ in range(30):
        f = _random_poly(rng, 2)
        beta = (1, -1)
        one = monomial((0, 0))
        prod = f * (one - monomial((-1, 1)))
        assert divide_by_factor(prod, beta) == f


def test_divide_by_factor_inexact():
    with pytest.raises(InexactDivisionError):
        divide_by_factor(monomial((1, 0)) + monomial((0, 0)), (1, -1))


def test_symmetrize_full_examples():
    T = GroupSpec((1, 1))
    y = monomial((2, -1), 3)
    assert symmetrize_full(T, y) == y  # no roots: unchanged

    G = GroupSpec((2,))
    assert symmetrize_full(G, monomial((1, 0))) == monomial((1, 0)) + monomial((0, 1))
    assert symmetrize_full(G, monomial((0, 0))) == monomial((0, 0))


def _dimension_formula(G, chi):
    # prod over blocks of prod_{i<j} (chi_i - chi_j + j - i) / (j - i)
    dim = Fraction(1)
    for rng in G.block_ranges():
        idx = list(rng)
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                i, j = idx[a], idx[b]
                dim *= Fraction(chi[i] - chi[j] + (b - a), b - a)
    return dim


@pytest.mark.parametrize("blocks,chis", [
    ((2,), [(0, 0), (1, 0), (2, 1), (3, -1), (2, -2)]),
    ((3,), [(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 1, 0), (2, 0, -2)]),
])
def test_character_dimensions(blocks, chis):
    G = GroupSpec(blocks)
    for chi in chis:
        char = symmetrize_full(G, monomial(chi))
        coeffs = list(char.terms.values())
        assert all(c > 0 and c.denominator == 1 for c in coeffs)
        assert sum(coeffs) == _dimension_formula(G, chi)


def test_character_dimensions_on_windows(acceptance_reps):
    for V in acceptance_reps.values():
        G = V.group
        for chi in enumerate_window(G, V).weights:
            char = symmetrize_full(G, monomial(chi))
            assert sum(char.terms.values()) == _dimension_formula(G, chi)


def test_expand_in_characters_examples():
    G = GroupSpec((2,))
    char10 = weyl_character(G, (1, 0))
    assert expand_in_characters(G, char10) == {(1, 0): 1}
    square = char10 * char10
    assert expand_in_characters(G, square) == {(1, 1): 1, (2, 0): 1}
    assert expand_in_characters(G, laurent_zero()) == {}


def test_expand_roundtrip_windows(acceptance_reps):
    for V in acceptance_reps.values():
        G = V.group
        for chi in enumerate_window(G, V).weights:
            assert expand_in_characters(G, weyl_character(G, chi)) == {chi: 1}


def test_expand_rejects_noninvariant():
    G = GroupSpec((2,))
    with pytest.raises(NotInvariantError):
        expand_in_characters(G, monomial((1, 0)))


def test_symmetrize_induction_identity_coset():
    # lam = 0: single coset, empty products: x unchanged
    G = GroupSpec((2,))
    x = weyl_character(G, (1, 0))
    assert symmetrize_induction(G, (0, 0), x, (), ()) == x


def test_symmetrize_induction_torus():
    T = GroupSpec((1,))
    V = [((1,), 2), ((-1,), 2)]
    x = monomial((1,))
    out = symmetrize_induction(T, (1,), x, ((1,), (1,)), ())
    assert out == monomial((1,)) - 2 * monomial((0,)) + monomial((-1,))


def test_symmetrize_induction_gl2_adjoint(gl2_adjoint):
    G = gl2_adjoint.group
    a = attracting(gl2_adjoint, (1, 0))
    out = symmetrize_induction(G, (1, 0), monomial((0, 0)), a.A, a.g)
    assert out == 2 * monomial((0, 0))


def test_symmetrize_induction_invariance_check(gl2_adjoint):
    G = gl2_adjoint.group
    a = attracting(gl2_adjoint, (0, 0))
    with pytest.raises(NotInvariantError):
        symmetrize_induction(G, (0, 0), monomial((1, 0)), a.A, a.g)


def test_induction_full_group_multiple(gl2_adjoint, torus4):
    # summing over all of W with W^lam-invariant input gives |W^lam| times the coset sum
    for V, lam in [(gl2_adjoint, (1, 1)), (gl2_adjoint, (1, 0)), (torus4, (1,))]:
        G = V.group
        a = attracting(V, lam)
        x = weyl_character(G, (0,) * G.rank, levi=levi_partition(G, lam))
        coset = symmetrize_induction(G, lam, x, a.A, a.g)
        parts = levi_partition(G, lam)
        order = 1
        for p in parts:
            for i in range(2, len(p) + 1):
                order *= i
        full = laurent_zero()
        from weylwin.laurent import RationalSection, apply_weyl_to_section, _numerator_product

        base = RationalSection(_numerator_product(x, a.A), a.g)
        sections = [apply_weyl_to_section(w, base) for w in weyl_group(G)]
        full = RationalSection.sum_to_laurent(sections)
        assert full == order * coset


def test_bbw_trivial_cases():
    G = GroupSpec((2,))
    V = None

    class Flat:
        def flat(self):
            return ()

    out = bbw_pushforward(G, Flat(), (1, 0), (2, 1))
    assert out == {(2, 1): 1}


def test_bbw_torus_product_expansion(torus4):
    T = torus4.group
    # result equals the expansion of q^chi * prod_{<lam,b> < 0}(1 - q^{-b})
    out = bbw_pushforward(T, torus4, (-1,), (1,))
    assert out == {(1,): 1, (0,): -2, (-1,): 1}


def test_bbw_oracle_equivalence_example(gl2_adjoint):
    G = gl2_adjoint.group
    a = attracting(gl2_adjoint, (1, 0))
    column = expand_in_characters(
        G, symmetrize_induction(G, (1, 0), monomial((0, 0)), a.A, a.g)
    )
    oracle = bbw_pushforward(G, gl2_adjoint, (-1, 0), (0, 0))
    assert column == oracle


def test_parallel_matches_serial(gl3_std):
    G = GroupSpec((3,))
    chi = (2, 1, 0)
    serial = symmetrize_full(G, monomial(chi))
    parallel = symmetrize_full(G, monomial(chi), parallel=True)
    assert serial == parallel
    a = attracting(gl3_std, (1, 1, 0))
    x = weyl_character(G, (0, 0, 0), levi=levi_partition(G, (1, 1, 0)))
    s = symmetrize_induction(G, (1, 1, 0), x, a.A, a.g)
    p = symmetrize_induction(G, (1, 1, 0), x, a.A, a.g, parallel=True)
    assert s == p
