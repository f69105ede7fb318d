import random
from fractions import Fraction

import pytest

from weylwin import (
    GroupSpec,
    WeylElement,
    coset_reps,
    double_cosets,
    is_dominant,
    levi_datum,
    rho,
    shifted_dominant,
    symmetry_group,
    weyl_group,
)
from weylwin.errors import InputError
from weylwin.groups import (
    identity_element,
    levi_partition,
    levi_weyl_group,
    vdot,
)


def test_rho_values():
    assert rho(GroupSpec((2,))) == (Fraction(1, 2), Fraction(-1, 2))
    assert rho(GroupSpec((3,))) == (1, 0, -1)
    assert rho(GroupSpec((1, 1))) == (0, 0)


def test_positive_root_count():
    for blocks in [(2,), (3,), (2, 2), (1, 1), (4,)]:
        G = GroupSpec(blocks)
        assert len(G.positive_roots()) == sum(n * (n - 1) // 2 for n in blocks)


def test_shifted_dominant_examples():
    G = GroupSpec((2,))
    chi_plus, w, length = shifted_dominant(G, (-1, 1))
    assert chi_plus == (0, 0)
    assert w.perm == (1, 0)
    assert length == 1
    # already dominant: identity, length 0
    chi_plus, w, length = shifted_dominant(G, (3, 1))
    assert (chi_plus, length) == ((3, 1), 0)
    assert w.is_identity()
    # wall: chi + rho has equal coordinates
    assert shifted_dominant(G, (-1, 0)) is None


def test_weyl_element_axioms():
    G = GroupSpec((2, 2))
    W = weyl_group(G)
    rng = random.Random(11)
    for _ in range(50):
        a, b = rng.choice(W), rng.choice(W)
        v = tuple(rng.randrange(-5, 6) for _ in range(G.rank))
        assert (a * b).act(v) == a.act(b.act(v))
        assert a.inverse().act(a.act(v)) == v
        assert a.preserves_blocks(G)


def _brute_left_cosets(G, lam):
    W = weyl_group(G)
    Wl = levi_weyl_group(G, levi_partition(G, lam))
    seen, classes = set(), []
    for w in W:
        if w.perm in seen:
            continue
        cls = {(w * h).perm for h in Wl}
        seen |= cls
        classes.append(frozenset(cls))
    return classes


@pytest.mark.parametrize(
    "blocks,lam,count",
    [
        ((2,), (0, 0), 1),
        ((2,), (1, 0), 2),
        ((3,), (1, 1, 0), 3),
        ((3,), (2, 1, 0), 6),
        ((2, 2), (1, 0, 3, 3), 2),
        ((4,), (1, 1, 0, 0), 6),
    ],
)
def test_coset_reps_against_brute_force(blocks, lam, count):
    G = GroupSpec(blocks)
    reps = coset_reps(G, lam)
    assert len(reps) == count
    classes = _brute_left_cosets(G, lam)
    assert len(classes) == count
    hit = set()
    for w in reps:
        cls = next(c for c in classes if w.perm in c)
        assert cls not in hit, "two representatives in one coset"
        hit.add(cls)
        # minimal length within the coset
        lengths = {WeylElement(p).length(G) for p in cls}
        assert w.length(G) == min(lengths)
    assert len(hit) == len(classes)


def _brute_double_coset_count(G, lam, mu):
    W = weyl_group(G)
    Wl = levi_weyl_group(G, levi_partition(G, lam))
    Wm = levi_weyl_group(G, levi_partition(G, mu))
    seen, count = set(), 0
    for w in W:
        if w.perm in seen:
            continue
        orbit = {(a * w * b).perm for a in Wl for b in Wm}
        seen |= orbit
        count += 1
    return count


@pytest.mark.parametrize(
    "blocks,lam,mu",
    [
        ((2,), (1, 0), (1, 0)),
        ((2,), (0, 0), (1, 0)),
        ((3,), (1, 0, 0), (1, 0, 0)),
        ((3,), (1, 1, 0), (1, 1, 0)),
        ((3,), (2, 1, 0), (1, 1, 0)),
        ((2, 2), (1, 0, 2, 2), (1, 1, 3, 0)),
        ((4,), (1, 1, 0, 0), (1, 1, 0, 0)),
    ],
)
def test_double_cosets_against_brute_force(blocks, lam, mu):
    G = GroupSpec(blocks)
    data = double_cosets(G, lam, mu)
    assert len(data) == _brute_double_coset_count(G, lam, mu)
    lam_parts = levi_partition(G, lam)
    mu_parts = levi_partition(G, mu)
    seen = set()
    for d in data:
        assert d.w_s.perm not in seen
        seen.add(d.w_s.perm)
        # nu refines lam and w_s.mu; nu' refines mu and w_s^{-1}.lam
        nu_parts = levi_partition(G, d.nu)
        nup_parts = levi_partition(G, d.nu_prime)
        assert is_dominant(G, d.nu) and is_dominant(G, d.nu_prime)
        from weylwin.groups import partition_refines

        assert partition_refines(nu_parts, lam_parts)
        assert partition_refines(nu_parts, levi_partition(G, d.w_s.act(mu)))
        assert partition_refines(nup_parts, mu_parts)
        assert partition_refines(nup_parts, levi_partition(G, d.w_s.inverse().act(lam)))
        # minimal-length representative of its double coset
        Wl = levi_weyl_group(G, lam_parts)
        Wm = levi_weyl_group(G, mu_parts)
        lengths = {(a * d.w_s * b).length(G) for a in Wl for b in Wm}
        assert d.w_s.length(G) == min(lengths)


def test_double_coset_quadruples_gl2():
    G = GroupSpec((2,))
    data = double_cosets(G, (1, 0), (1, 0))
    assert len(data) == 2
    perms = sorted(d.w_s.perm for d in data)
    assert perms == [(0, 1), (1, 0)]


def test_double_coset_lambda_zero():
    G = GroupSpec((3,))
    data = double_cosets(G, (0, 0, 0), (1, 1, 0))
    assert len(data) == 1
    d = data[0]
    assert d.w_s.is_identity()
    assert levi_partition(G, d.nu) == levi_partition(G, (1, 1, 0))


def test_double_coset_attracting_identity(gl2_adjoint, gl2_2std):
    # {b in V : <lam,b> > 0, <w_s mu, b> < 0} == {b : <nu,b> > 0, <w_s nu', b> < 0}
    for V in (gl2_adjoint, gl2_2std):
        G = V.group
        vectors = V.flat() + G.all_roots()
        for lam in [(1, 0), (1, 1), (2, 1)]:
            for mu in [(1, 0), (1, 1)]:
                for d in double_cosets(G, lam, mu, scale_vectors=vectors):
                    w_mu = d.w_s.act(mu)
                    w_nup = d.w_s.act(d.nu_prime)
                    lhs = sorted(b for b in vectors if vdot(lam, b) > 0 and vdot(w_mu, b) < 0)
                    rhs = sorted(b for b in vectors if vdot(d.nu, b) > 0 and vdot(w_nup, b) < 0)
                    assert lhs == rhs


@pytest.mark.parametrize(
    "blocks,lam,order",
    [
        ((2,), (1, 0), 2),
        ((2,), (0, 0), 1),
        ((4,), (1, 1, 0, 0), 2),
        ((4,), (2, 1, 1, 0), 2),
        ((4,), (1, 1, 1, 0), 1),
        ((2, 2), (1, 0, 1, 0), 4),
        ((3,), (2, 1, 0), 6),
    ],
)
def test_symmetry_group_order(blocks, lam, order):
    G = GroupSpec(blocks)
    S = symmetry_group(G, lam)
    assert len(S) == order
    # closure, identity, inverses; elements preserve the level partition
    elems = set(S.elements)
    assert identity_element(G) in elems
    parts_key = sorted(tuple(p) for p in levi_partition(G, lam))
    for a in S.elements:
        assert a.inverse() in elems
        moved = sorted(tuple(sorted(a.perm[i] for i in p)) for p in levi_partition(G, lam))
        assert moved == parts_key
        for b in S.elements:
            assert a * b in elems


def test_levi_datum():
    G = GroupSpec((4,))
    d = levi_datum(G, (3, 1, 1, 0))
    assert d.parts == ((0,), (1, 2), (3,))
    assert d.weyl_order == 2
    assert d.levi_dimension == 1 + 4 + 1
    rl = d.rho_levi(G)
    assert rl == (0, Fraction(1, 2), Fraction(-1, 2), 0)


def test_group_spec_validation():
    with pytest.raises(InputError):
        GroupSpec((0,))
    with pytest.raises(InputError):
        GroupSpec(())
