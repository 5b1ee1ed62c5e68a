"""Arithmetic in the finite fields GF(p^f).

Elements are encoded as integers ``0 <= x < p**f``: the integer
``c_0 + c_1 p + ... + c_{f-1} p^{f-1}`` stands for the residue class of the
polynomial ``c_0 + c_1 X + ... + c_{f-1} X^{f-1}`` modulo the field's
irreducible modulus.  In particular the prime subfield is ``{0, ..., p-1}``.

All arithmetic goes through lookup tables built once per field, so the hot
loops elsewhere in the package work on plain ints.  :class:`FieldElement` is a
thin operator-overloading wrapper for interactive use and for the public
form-evaluation API.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

MAX_FIELD_SIZE = 2**20

# Conway polynomials, coefficients listed from the constant term up.
CONWAY_POLYNOMIALS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (11, 1): (9, 1),
    (11, 2): (2, 7, 1),
    (13, 1): (11, 1),
    (13, 2): (2, 12, 1),
    (17, 2): (3, 16, 1),
    (19, 2): (2, 18, 1),
    (23, 2): (5, 21, 1),
    (29, 2): (2, 24, 1),
    (31, 2): (3, 29, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, f)`` with ``q == p**f``; raise ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    f, m = 0, q
    while m % p == 0:
        m //= p
        f += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, f


# -- polynomials over GF(p), coefficient lists constant term first ----------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    a = _trim(a)
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        a = _trim(a)
    return a


def is_irreducible(modulus, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = _trim(modulus)
    deg = len(m) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for coeffs in product(range(p), repeat=d):
            if not _poly_mod(m, list(coeffs) + [1], p):
                return False
    return True


def _find_irreducible(p, f):
    for coeffs in product(range(p), repeat=f):
        m = list(reversed(coeffs)) + [1]
        if m[0] != 0 and is_irreducible(m, p):
            return tuple(m)
    raise ValueError(f"no irreducible polynomial of degree {f} over GF({p})")


def _factorize(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FiniteField:
    """The field GF(p^f) with a fixed irreducible modulus.

    Use :func:`GF` to get cached instances; two fields compare equal when their
    characteristic, degree and modulus agree.
    """

    def __init__(self, p: int, f: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if f < 1:
            raise ValueError("degree must be at least 1")
        q = p**f
        if q > MAX_FIELD_SIZE:
            raise ValueError(f"GF({q}) exceeds the supported size {MAX_FIELD_SIZE}")
        if modulus is None:
            modulus = CONWAY_POLYNOMIALS.get((p, f)) or _find_irreducible(p, f)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != f + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree f")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p, self.f, self.q = p, f, q
        self.order = q
        self.modulus = modulus
        self._build_tables()

    # -- construction ------------------------------------------------------

    def _digits(self, x):
        p = self.p
        out = []
        for _ in range(self.f):
            out.append(x % p)
            x //= p
        return out

    def _encode(self, digits):
        x = 0
        for c in reversed(digits):
            x = x * self.p + c
        return x

    def _poly_mulmod(self, a, b):
        p, f = self.p, self.f
        prod_ = [0] * (2 * f - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod_[i + j] = (prod_[i + j] + ai * bj) % p
        r = _poly_mod(prod_, list(self.modulus), p)
        return r + [0] * (f - len(r))

    def _build_tables(self):
        p, f, q = self.p, self.f, self.q
        if f == 1:
            self._add = None
        elif p == 2:
            self._add = None
        else:
            digits = [self._digits(x) for x in range(q)]
            enc = self._encode
            self._add = [
                [enc([(a + b) % p for a, b in zip(da, db)]) for db in digits]
                for da in digits
            ]
        self._neg = [self._encode([(-c) % p for c in self._digits(x)]) for x in range(q)]

        # find a primitive element, trying X first
        n = q - 1
        prime_divs = _factorize(n) if n > 1 else []
        candidates = ([p] if f > 1 else []) + list(range(2 if q > 2 else 1, q))
        for g in candidates:
            exp = self._powers_of(g)
            if exp is not None:
                break
        else:  # pragma: no cover - a finite field always has one
            raise RuntimeError("no primitive element found")
        self.primitive_element = g
        log = [0] * q
        for i, x in enumerate(exp[:n]):
            log[x] = i
        self._exp = exp[:n] * 2
        self._log = log
        self._prime_divs = prime_divs

    def _powers_of(self, g):
        n = self.q - 1
        out = [1]
        if self.f == 1:
            p = self.p
            x = 1
            for _ in range(n - 1):
                x = x * g % p
                if x == 1:
                    return None
                out.append(x)
            return out
        gd = self._digits(g)
        cur = [1] + [0] * (self.f - 1)
        for _ in range(n - 1):
            cur = self._poly_mulmod(cur, gd)
            x = self._encode(cur)
            if x == 1:
                return None
            out.append(x)
        return out

    # -- arithmetic on int encodings ----------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.f == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self._add[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def frobenius(self, a: int, times: int = 1) -> int:
        """The automorphism ``x -> x^(p^times)``."""
        return self.pow(a, self.p**times)

    def log(self, a: int) -> int:
        return self._log[a]

    def exp(self, e: int) -> int:
        return self._exp[e % (self.q - 1)]

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.q - 1
        k = self._log[a]
        from math import gcd
        return n // gcd(n, k)

    def is_square(self, a: int) -> bool:
        if a == 0 or self.p == 2:
            return True
        return self._log[a] % 2 == 0

    def elements(self):
        return range(self.q)

    def nonzero(self):
        return range(1, self.q)

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element of a different field")
            return value
        if isinstance(value, int):
            if self.f == 1:
                return FieldElement(self, value % self.p)
            if not 0 <= value < self.q:
                raise ValueError(f"{value} is not an element encoding of GF({self.q})")
            return FieldElement(self, value)
        digits = [int(c) % self.p for c in value]
        if len(digits) != self.f:
            raise ValueError("coefficient vector has wrong length")
        return FieldElement(self, self._encode(digits))

    def coefficients(self, a: int) -> tuple[int, ...]:
        return tuple(self._digits(a))

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and (self.p, self.f, self.modulus) == (other.p, other.f, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.f, self.modulus))

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def GF(q: int) -> FiniteField:
    """Cached field of order ``q`` using the shipped modulus table."""
    p, f = prime_power(q)
    return FiniteField(p, f)


class FieldElement:
    """An element of a :class:`FiniteField` with the usual operators."""

    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("operands live in different fields")
            return other.value
        if isinstance(other, int):
            return self.field(other).value
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.value, b))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def frobenius(self) -> "FieldElement":
        return FieldElement(self.field, self.field.frobenius(self.value))

    def coefficients(self) -> tuple[int, ...]:
        return self.field.coefficients(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field(other).value
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.field!r}({self.value})"
