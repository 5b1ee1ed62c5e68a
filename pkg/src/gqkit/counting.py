"""Closed-form subspace counts: Gaussian binomials and totally singular spaces."""

from __future__ import annotations

from .fields import prime_power

# canonical kind names, with the aliases accepted on input
KIND_ALIASES = {
    "symplectic": "symplectic",
    "sp": "symplectic",
    "parabolic": "parabolic",
    "quadratic0": "parabolic",
    "quadratic∘": "parabolic",
    "quadratic": "parabolic",
    "orthogonal": "parabolic",
    "hyperbolic": "hyperbolic",
    "quadratic+": "hyperbolic",
    "elliptic": "elliptic",
    "quadratic-": "elliptic",
    "quadratic−": "elliptic",
    "hermitian": "hermitian",
    "unitary": "hermitian",
}


def canonical_kind(kind: str) -> str:
    try:
        return KIND_ALIASES[str(kind).lower()]
    except KeyError:
        raise ValueError(f"unknown form kind {kind!r}") from None


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """The q-binomial coefficient [n choose k]_q, computed exactly."""
    if q < 2:
        raise ValueError("q must be at least 2")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    num = den = 1
    for i in range(1, k + 1):
        num *= q ** (n - k + i) - 1
        den *= q**i - 1
    out, rem = divmod(num, den)
    assert rem == 0
    return out


def witt_parameters(kind: str, n: int) -> tuple[int, int]:
    """Return ``(d, 2e)`` for a nondegenerate form of the given kind on GF^n.

    ``d`` is the Witt index and ``e`` the exponent offset in the singular
    subspace count (doubled, so the unitary half-integers stay integral).
    """
    kind = canonical_kind(kind)
    if n < 1:
        raise ValueError("dimension must be positive")
    if kind == "symplectic":
        if n % 2:
            raise ValueError("symplectic spaces have even dimension")
        return n // 2, 2
    if kind == "parabolic":
        if n % 2 == 0:
            raise ValueError("parabolic quadrics live in odd dimension")
        return (n - 1) // 2, 2
    if kind == "hyperbolic":
        if n % 2:
            raise ValueError("hyperbolic quadrics live in even dimension")
        return n // 2, 0
    if kind == "elliptic":
        if n % 2 or n < 2:
            raise ValueError("elliptic quadrics live in even dimension >= 2")
        return (n - 2) // 2, 4
    # hermitian
    if n % 2:
        return (n - 1) // 2, 3
    return n // 2, 1


def count_totally_singular(kind: str, n: int, k: int, q: int) -> int:
    """Number of totally singular k-spaces of the standard form of ``kind`` on GF^n.

    For hermitian forms ``q`` is the order of the fixed field, so the space
    lives over GF(q^2); the Gaussian binomial is then taken in base q^2.
    """
    prime_power(q)
    kind = canonical_kind(kind)
    d, e2 = witt_parameters(kind, n)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > d:
        raise ValueError(f"k={k} exceeds the Witt index {d} of {kind} n={n}")
    if kind == "hermitian":
        # r^(d+e-i) with r = q^2 is q^(2d + 2e - 2i)
        base = q * q
        factors = [q ** (2 * d + e2 - 2 * i) + 1 for i in range(1, k + 1)]
    else:
        base = q
        factors = [q ** (d + e2 // 2 - i) + 1 for i in range(1, k + 1)]
    out = gaussian_binomial(d, k, base)
    for f in factors:
        out *= f
    return out
