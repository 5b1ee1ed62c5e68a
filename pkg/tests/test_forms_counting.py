from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gqkit.counting import canonical_kind, count_totally_singular, gaussian_binomial, witt_parameters
from gqkit.fields import GF
from gqkit.forms import (
    FormSpace,
    ResourceCapError,
    Subspace,
    enumerate_totally_singular,
    evaluate_form,
    singular_points,
    singular_value,
)
from gqkit.linalg import all_subspaces, mat_inv, mat_mul, identity, normalize, projective_points, rank, rref


def spans_by_brute_force(n, k, F):
    """Distinct k-dimensional spans of k-tuples of vectors, as frozensets of vectors."""
    vectors = list(product(range(F.q), repeat=n))
    seen = set()
    for combo in product(vectors, repeat=k):
        span = set()
        for coeffs in product(range(F.q), repeat=k):
            v = [0] * n
            for c, w in zip(coeffs, combo):
                v = [F.add(a, F.mul(c, b)) for a, b in zip(v, w)]
            span.add(tuple(v))
        if len(span) == F.q**k:
            seen.add(frozenset(span))
    return seen


@pytest.mark.parametrize("n,k,q", [(2, 1, 2), (3, 1, 2), (3, 2, 2), (4, 2, 2), (3, 1, 3), (4, 2, 3), (2, 1, 4)])
def test_subspace_enumeration_against_spans(n, k, q):
    F = GF(q)
    brute = spans_by_brute_force(n, k, F)
    listed = list(all_subspaces(n, k, F))
    assert len(listed) == len(set(listed)) == len(brute)
    assert gaussian_binomial(n, k, q) == len(brute)


def test_gaussian_binomial_examples():
    assert gaussian_binomial(2, 1, 2) == 3
    assert gaussian_binomial(5, 2, 2) == 155
    assert gaussian_binomial(4, 2, 3) == 130
    with pytest.raises(ValueError):
        gaussian_binomial(2, 3, 2)
    with pytest.raises(ValueError):
        gaussian_binomial(2, 1, 1)


@given(st.integers(1, 12), st.data(), st.sampled_from([2, 3, 4, 5, 7, 9]))
def test_gaussian_pascal_and_symmetry(n, data, q):
    k = data.draw(st.integers(0, n))
    assert gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q)
    if 0 < k < n:
        assert gaussian_binomial(n, k, q) == gaussian_binomial(n - 1, k - 1, q) + q**k * gaussian_binomial(n - 1, k, q)


def test_kind_aliases_and_witt():
    assert canonical_kind("Quadratic−") == "elliptic"
    assert canonical_kind("unitary") == "hermitian"
    with pytest.raises(ValueError):
        canonical_kind("affine")
    assert witt_parameters("symplectic", 4) == (2, 2)
    with pytest.raises(ValueError):
        witt_parameters("symplectic", 5)
    with pytest.raises(ValueError):
        witt_parameters("parabolic", 4)


def test_count_examples():
    assert count_totally_singular("symplectic", 4, 1, 2) == 15
    assert count_totally_singular("unitary", 5, 1, 2) == 165
    assert count_totally_singular("quadratic−", 6, 1, 2) == 27
    assert count_totally_singular("hyperbolic", 4, 0, 3) == 1
    with pytest.raises(ValueError):
        count_totally_singular("symplectic", 4, 3, 2)


def brute_count(space, k):
    return sum(1 for B in all_subspaces(space.n, k, space.field) if space.is_totally_singular(B))


@pytest.mark.parametrize("n,q", [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3)])
def test_hermitian_counts_against_brute_force(n, q):
    space = FormSpace.standard("hermitian", n, q)
    for k in range(space.witt_index + 1):
        assert brute_count(space, k) == count_totally_singular("hermitian", n, k, q)


def test_enumeration_examples():
    assert len(enumerate_totally_singular(FormSpace.standard("symplectic", 4, 2), 2)) == 15
    par = FormSpace.standard("quadratic∘", 5, 3)
    assert len(enumerate_totally_singular(par, 1)) == 40 == brute_count(par, 1)
    herm = FormSpace.standard("hermitian", 3, 2)
    assert len(projective_points(3, herm.field)) == 21
    assert len(enumerate_totally_singular(herm, 1)) == 9
    assert len(singular_points(herm)) == 9


@pytest.mark.parametrize("kind,n,q", [("symplectic", 6, 2), ("elliptic", 6, 2), ("hyperbolic", 6, 3), ("parabolic", 5, 2)])
def test_enumeration_matches_brute_force(kind, n, q):
    space = FormSpace.standard(kind, n, q)
    for k in range(1, space.witt_index + 1):
        got = enumerate_totally_singular(space, k)
        brute = {B for B in all_subspaces(n, k, space.field) if space.is_totally_singular(B)}
        assert {S.basis for S in got} == brute


def test_enumeration_cap_and_range():
    space = FormSpace.standard("symplectic", 4, 3)
    with pytest.raises(ResourceCapError):
        enumerate_totally_singular(space, 2, cap=10)
    with pytest.raises(ValueError):
        enumerate_totally_singular(space, 3)


def test_evaluation_examples():
    sp = FormSpace.standard("symplectic", 4, 2)
    assert int(evaluate_form(sp, (1, 0, 0, 0), (0, 1, 0, 0))) == 1
    herm = FormSpace.standard("hermitian", 4, 2)
    assert int(evaluate_form(herm, (1, 0, 0, 0), (1, 0, 0, 0))) == 0
    hyp = FormSpace.standard("quadratic+", 4, 3)
    assert int(singular_value(hyp, (1, 1, 1, 1))) == 2
    with pytest.raises(ValueError):
        evaluate_form(sp, (1, 0, 0), (0, 1, 0, 0))


ALL_SPACES = [
    ("symplectic", 4, 2), ("symplectic", 4, 3), ("symplectic", 6, 2),
    ("parabolic", 3, 2), ("parabolic", 5, 3), ("parabolic", 5, 2),
    ("hyperbolic", 4, 2), ("hyperbolic", 4, 3),
    ("elliptic", 4, 2), ("elliptic", 4, 3), ("elliptic", 6, 2),
    ("hermitian", 3, 2), ("hermitian", 4, 2), ("hermitian", 3, 3),
]


@pytest.mark.parametrize("kind,n,q", ALL_SPACES)
def test_form_invariants(kind, n, q):
    S = FormSpace.standard(kind, n, q)
    F = S.field
    G = S.gram
    if kind == "symplectic":
        assert all(G[i][i] == 0 for i in range(n))
        assert all(G[i][j] == F.neg(G[j][i]) for i in range(n) for j in range(n))
        assert S.radical_dimension == 0
    elif kind == "hermitian":
        assert all(G[i][j] == S.conj(G[j][i]) for i in range(n) for j in range(n))
        assert S.radical_dimension == 0
    else:
        # polar form of Q is the Gram form
        pts = projective_points(n, F)
        for u in pts[:20]:
            for v in pts[-20:]:
                w = tuple(F.add(a, b) for a, b in zip(u, v))
                assert S.b(u, v) == F.sub(F.sub(S.Q(w), S.Q(u)), S.Q(v))
        if F.p == 2 and n % 2:
            assert S.radical_dimension == 1
        else:
            assert S.radical_dimension == 0


@pytest.mark.parametrize("kind,n,q", [s for s in ALL_SPACES if s[1] <= 5 and s[0] != "hermitian" or s[1] <= 4])
def test_witt_index_is_maximal(kind, n, q):
    S = FormSpace.standard(kind, n, q)
    d = S.witt_index
    assert brute_count(S, d) > 0
    if d + 1 <= n:
        assert brute_count(S, d + 1) == 0


def test_linalg_helpers():
    F = GF(3)
    assert normalize((0, 2, 1), F) == (0, 1, 2)
    with pytest.raises(ValueError):
        normalize((0, 0), F)
    assert rank([(1, 2, 0), (2, 1, 0), (0, 0, 1)], F) == 2
    M = ((1, 1, 0), (0, 1, 2), (1, 0, 2))
    assert mat_mul(M, mat_inv(M, F), F) == identity(3)
    with pytest.raises(ValueError):
        mat_inv(((1, 2), (2, 1)), F)
    sub = Subspace.spanned_by(FormSpace.standard("symplectic", 4, 3), [(1, 0, 0, 0), (2, 0, 1, 0)])
    assert sub.dimension == 2 and len(sub.points()) == 4
    assert sub.basis == rref([(1, 0, 0, 0), (0, 0, 1, 0)], F)
