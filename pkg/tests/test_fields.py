from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gqkit.fields import CONWAY_POLYNOMIALS, GF, FiniteField, is_irreducible, is_prime, prime_power

ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64]


def naive_mul(F, a, b):
    """Schoolbook product of coefficient vectors reduced by long division."""
    p, m = F.p, F.modulus
    x, y = F.coefficients(a), F.coefficients(b)
    prod = [0] * (len(x) + len(y) - 1)
    for i, xi in enumerate(x):
        for j, yj in enumerate(y):
            prod[i + j] = (prod[i + j] + xi * yj) % p
    for deg in range(len(prod) - 1, F.f - 1, -1):
        c = prod[deg]
        if c:
            for k, mk in enumerate(m):
                prod[deg - F.f + k] = (prod[deg - F.f + k] - c * mk) % p
    return sum(c * p**i for i, c in enumerate(prod[: F.f]))


def naive_add(F, a, b):
    x, y = F.coefficients(a), F.coefficients(b)
    return sum(((xi + yi) % F.p) * F.p**i for i, (xi, yi) in enumerate(zip(x, y)))


def field_and_elements(n=3):
    return st.sampled_from(ORDERS).flatmap(
        lambda q: st.tuples(st.just(GF(q)), *[st.integers(0, q - 1)] * n)
    )


@pytest.mark.parametrize("n,expected", [(1, False), (2, True), (9, False), (97, True), (91, False)])
def test_is_prime(n, expected):
    assert is_prime(n) is expected


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(49) == (7, 2)
    assert prime_power(13) == (13, 1)
    for bad in (0, 1, 6, 12, 100):
        with pytest.raises(ValueError):
            prime_power(bad)


def test_is_irreducible_against_root_and_factor_search():
    # over GF(2), degree <= 3 polynomials are irreducible iff they have no root
    for coeffs in product(range(2), repeat=3):
        poly = (*coeffs, 1)
        has_root = any(sum(c * x**i for i, c in enumerate(poly)) % 2 == 0 for x in range(2))
        assert is_irreducible(poly, 2) is (not has_root)
    # x^4 + x^2 + 1 = (x^2 + x + 1)^2 has no root but is reducible
    assert not is_irreducible((1, 0, 1, 0, 1), 2)


def test_conway_table_irreducible():
    for (p, f), poly in CONWAY_POLYNOMIALS.items():
        assert is_irreducible(poly, p), (p, f)


@pytest.mark.parametrize("q", ORDERS)
def test_tables_match_schoolbook(q):
    F = GF(q)
    assert len(F.elements()) == q
    for a in F.elements():
        for b in F.elements():
            assert F.mul(a, b) == naive_mul(F, a, b)
            assert F.add(a, b) == naive_add(F, a, b)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_prime_field_is_integers_mod_p(p):
    F = GF(p)
    for a in range(p):
        for b in range(p):
            assert F.add(a, b) == (a + b) % p
            assert F.mul(a, b) == (a * b) % p
            assert F.sub(a, b) == (a - b) % p


@pytest.mark.parametrize("q", ORDERS + [81, 128, 243])
def test_multiplicative_group_cyclic(q):
    F = GF(q)
    g = F.primitive_element
    assert F.element_order(g) == q - 1
    seen = {F.exp(e) for e in range(q - 1)}
    assert seen == set(F.nonzero())
    for a in F.nonzero():
        assert F.exp(F.log(a)) == a


@settings(max_examples=300, deadline=None)
@given(field_and_elements())
def test_field_axioms(data):
    F, a, b, c = data
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a
    if b:
        assert F.mul(F.div(a, b), b) == a
        assert F.mul(b, F.inv(b)) == 1


@settings(max_examples=200, deadline=None)
@given(field_and_elements(2), st.integers(0, 50))
def test_pow_and_frobenius(data, e):
    F, a, b = data
    expected = 1
    for _ in range(e):
        expected = F.mul(expected, a)
    assert F.pow(a, e) == expected
    # x -> x^p is a ring automorphism of order f
    fr = F.frobenius
    assert fr(F.add(a, b)) == F.add(fr(a), fr(b))
    assert fr(F.mul(a, b)) == F.mul(fr(a), fr(b))
    assert fr(a) == F.pow(a, F.p)
    assert fr(a, F.f) == a


@pytest.mark.parametrize("q", [3, 5, 9, 25, 27])
def test_squares_are_half(q):
    F = GF(q)
    squares = {F.mul(a, a) for a in F.nonzero()}
    assert len(squares) == (q - 1) // 2
    assert all(F.is_square(a) == (a in squares) for a in F.nonzero())


def test_field_element_wrapper():
    F = GF(4)
    w = F([0, 1])
    assert w * w == w + 1
    assert w**3 == F(1)
    assert (w / w) == F(1)
    assert 1 - w == F(1) + w
    assert w.frobenius() == w * w
    assert int(w.inverse() * w) == 1
    assert not F(0)
    assert F(1) == GF(4)(1)
    with pytest.raises(ValueError):
        F(4)
    with pytest.raises(ValueError):
        GF(8)(w)


def test_construction_errors():
    with pytest.raises(ValueError):
        FiniteField(4)
    with pytest.raises(ValueError):
        FiniteField(2, 2, modulus=(1, 0, 1))  # x^2 + 1 = (x + 1)^2
    with pytest.raises(ValueError):
        GF(6)
    assert FiniteField(2, 3, modulus=(1, 0, 1, 1)) != GF(8)
