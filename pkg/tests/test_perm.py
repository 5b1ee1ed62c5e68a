import math
import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gqkit.perm import (
    BlockSystem,
    Permutation,
    PermGroup,
    compose,
    group_from_generators,
    identity_perm,
    inverse,
    minimal_block,
)


def closure(gens, degree):
    """All elements by breadth-first multiplication; the reference oracle."""
    e = identity_perm(degree)
    seen = {e}
    queue = [e]
    for g in queue:
        for s in gens:
            h = compose(g, s)
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return seen


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


perm_lists = st.integers(2, 7).flatmap(
    lambda n: st.lists(st.permutations(range(n)).map(tuple), min_size=1, max_size=3)
)


def test_permutation_basics():
    p = Permutation.from_cycles(5, [(0, 1, 2)])
    assert p(0) == 1 and p(2) == 0 and p(4) == 4
    assert (p**3).is_identity()
    assert (p * ~p).is_identity()
    assert p.cycles() == [(0, 1, 2)]
    q = Permutation([1, 0, 2, 3, 4])
    # composition applies the left factor first
    assert (p * q)(0) == q(p(0))
    assert compose(p.images, inverse(p.images)) == identity_perm(5)
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_small_examples():
    S3 = group_from_generators([Permutation.from_cycles(3, [(0, 1)]), Permutation.from_cycles(3, [(0, 1, 2)])])
    assert S3.order() == 6
    assert S3.stabilizer(0).order() == 2
    assert PermGroup([], degree=10).order() == 1
    C3 = PermGroup([Permutation.from_cycles(4, [(0, 1, 2)])])
    assert C3.orbit(3) == {3}
    assert not C3.is_transitive()
    C4 = PermGroup([Permutation.from_cycles(4, [(0, 1, 2, 3)])])
    assert C4.transitivity_degree(4) == 1
    assert [B.blocks for B in C4.minimal_block_systems()] == [((0, 2), (1, 3))]
    assert not C4.is_primitive()
    with pytest.raises(ValueError):
        C3.minimal_block_systems()


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 8, 10])
def test_symmetric_and_alternating(n):
    if n == 1:
        assert PermGroup([], degree=1).order() == 1
        return
    cyc = Permutation.from_cycles(n, [tuple(range(n))])
    sn = PermGroup([Permutation.from_cycles(n, [(0, 1)]), cyc])
    assert sn.order() == math.factorial(n)
    assert sn.transitivity_degree(4) == min(n, 4)
    if n >= 3:
        three = [Permutation.from_cycles(n, [(0, 1, k)]) for k in range(2, n)]
        an = PermGroup(three)
        assert an.order() == math.factorial(n) // 2
        assert an.is_subgroup_of(sn) and not sn.is_subgroup_of(an)
        assert an.transitivity_degree(4) == min(n - 2, 4)


@settings(max_examples=80, deadline=None)
@given(perm_lists, st.integers(0, 2**32))
def test_group_against_closure(gens, seed):
    n = len(gens[0])
    G = PermGroup(gens, seed=seed)
    elems = closure(gens, n)
    assert G.order() == len(elems)
    assert G.verify_chain()
    assert {g.images for g in G.elements()} == elems
    rng = random.Random(seed)
    for _ in range(10):
        g = tuple(rng.sample(range(n), n))
        assert G.contains(g) == (g in elems)
    for x in range(n):
        orbit = {g[x] for g in elems}
        assert G.orbit(x) == orbit
        stab = {g for g in elems if g[x] == x}
        assert G.stabilizer(x).order() == len(stab)
        assert len(orbit) * len(stab) == len(elems)
        assert G.order() % len(orbit) == 0
    assert G.random_element(rng).images in elems


@settings(max_examples=60, deadline=None)
@given(perm_lists)
def test_transitivity_degree_against_brute_force(gens):
    n = len(gens[0])
    elems = closure(gens, n)
    expected = 0
    for k in range(1, min(n, 4) + 1):
        tuples = set(permutations(range(n), k))
        image = {tuple(g[x] for x in tuple(range(k))) for g in elems}
        if image != tuples:
            break
        expected = k
    assert PermGroup(gens).transitivity_degree(4) == expected


@settings(max_examples=60, deadline=None)
@given(perm_lists.filter(lambda gs: len(gs[0]) <= 6))
def test_block_systems_against_partitions(gens):
    n = len(gens[0])
    G = PermGroup(gens)
    if not G.is_transitive():
        with pytest.raises(ValueError):
            G.block_systems()
        return
    elems = closure(gens, n)
    expected = set()
    for part in set_partitions(list(range(n))):
        if len(part) in (1, n):
            continue
        blocks = tuple(sorted(tuple(sorted(b)) for b in part))
        keys = set(blocks)
        if all(tuple(sorted(g[x] for x in b)) in keys for g in elems for b in blocks):
            expected.add(blocks)
    found = G.block_systems()
    assert {B.blocks for B in found} == expected
    assert all(B.is_invariant(G) for B in found)
    minimal = {B.blocks for B in G.minimal_block_systems()}
    assert minimal == {b for b in expected if not any(
        c != b and BlockSystem(c).refines(BlockSystem(b)) for c in expected)}
    assert G.is_primitive() == (not expected)


def test_minimal_block_closure():
    C6 = PermGroup([Permutation.from_cycles(6, [tuple(range(6))])])
    assert minimal_block(C6, [0, 3]).blocks == ((0, 3), (1, 4), (2, 5))
    assert minimal_block(C6, [0, 2]).blocks == ((0, 2, 4), (1, 3, 5))
    assert minimal_block(C6, [0, 1]).block_count == 1
    assert len(C6.block_systems()) == 2


def test_base_and_pointwise_stabilizer():
    n = 6
    sn = PermGroup([Permutation.from_cycles(n, [(0, 1)]), Permutation.from_cycles(n, [tuple(range(n))])])
    H = sn.with_base([3, 5])
    assert H.base[:2] == [3, 5] and H.order() == 720
    assert sn.pointwise_stabilizer([3, 5]).order() == 24
    assert sn.restrict(range(6)).order() == 720
    with pytest.raises(ValueError):
        PermGroup([Permutation.from_cycles(4, [(0, 1)])]).restrict([0, 2])
    with pytest.raises(ValueError):
        PermGroup([(1, 0)], degree=3)
    with pytest.raises(ValueError):
        sn.orbit(6)


def test_seed_does_not_change_results():
    gens = [Permutation.from_cycles(8, [(0, 1, 2, 3, 4, 5, 6)]), Permutation.from_cycles(8, [(0, 7), (1, 2)])]
    orders = {PermGroup(gens, seed=s).order() for s in range(5)}
    assert len(orders) == 1
