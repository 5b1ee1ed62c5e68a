"""Exact orders of finite simple groups (and a few related groups)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import factorial, gcd, prod

from ..fields import prime_power

# prime factorizations of the sporadic groups; SPORADIC_ORDERS is derived
SPORADIC_FACTORS = {
    "M11": {2: 4, 3: 2, 5: 1, 11: 1},
    "M12": {2: 6, 3: 3, 5: 1, 11: 1},
    "M22": {2: 7, 3: 2, 5: 1, 7: 1, 11: 1},
    "M23": {2: 7, 3: 2, 5: 1, 7: 1, 11: 1, 23: 1},
    "M24": {2: 10, 3: 3, 5: 1, 7: 1, 11: 1, 23: 1},
    "J1": {2: 3, 3: 1, 5: 1, 7: 1, 11: 1, 19: 1},
    "J2": {2: 7, 3: 3, 5: 2, 7: 1},
    "J3": {2: 7, 3: 5, 5: 1, 17: 1, 19: 1},
    "J4": {2: 21, 3: 3, 5: 1, 7: 1, 11: 3, 23: 1, 29: 1, 31: 1, 37: 1, 43: 1},
    "Co1": {2: 21, 3: 9, 5: 4, 7: 2, 11: 1, 13: 1, 23: 1},
    "Co2": {2: 18, 3: 6, 5: 3, 7: 1, 11: 1, 23: 1},
    "Co3": {2: 10, 3: 7, 5: 3, 7: 1, 11: 1, 23: 1},
    "Fi22": {2: 17, 3: 9, 5: 2, 7: 1, 11: 1, 13: 1},
    "Fi23": {2: 18, 3: 13, 5: 2, 7: 1, 11: 1, 13: 1, 17: 1, 23: 1},
    "Fi24'": {2: 21, 3: 16, 5: 2, 7: 3, 11: 1, 13: 1, 17: 1, 23: 1, 29: 1},
    "HS": {2: 9, 3: 2, 5: 3, 7: 1, 11: 1},
    "McL": {2: 7, 3: 6, 5: 3, 7: 1, 11: 1},
    "He": {2: 10, 3: 3, 5: 2, 7: 3, 17: 1},
    "Ru": {2: 14, 3: 3, 5: 3, 7: 1, 13: 1, 29: 1},
    "Suz": {2: 13, 3: 7, 5: 2, 7: 1, 11: 1, 13: 1},
    "O'N": {2: 9, 3: 4, 5: 1, 7: 3, 11: 1, 19: 1, 31: 1},
    "HN": {2: 14, 3: 6, 5: 6, 7: 1, 11: 1, 19: 1},
    "Ly": {2: 8, 3: 7, 5: 6, 7: 1, 11: 1, 31: 1, 37: 1, 67: 1},
    "Th": {2: 15, 3: 10, 5: 3, 7: 2, 13: 1, 19: 1, 31: 1},
    "B": {2: 41, 3: 13, 5: 6, 7: 2, 11: 1, 13: 1, 17: 1, 19: 1, 23: 1, 31: 1, 47: 1},
    "M": {2: 46, 3: 20, 5: 9, 7: 6, 11: 2, 13: 3, 17: 1, 19: 1, 23: 1, 29: 1, 31: 1,
          41: 1, 47: 1, 59: 1, 71: 1},
}

SPORADIC_ORDERS = {name: prod(p**e for p, e in f.items()) for name, f in SPORADIC_FACTORS.items()}

CLASSICAL = ("PSL", "PSU", "PSp", "POmega", "POmega+", "POmega-")
EXCEPTIONAL = ("Sz", "Ree", "G2", "3D4", "2F4", "F4", "E6", "2E6", "E7", "E8")
FAMILY_ALIASES = {
    "POmega∘": "POmega", "POmega0": "POmega", "Omega": "POmega", "POmega−": "POmega-",
    "L": "PSL", "U": "PSU", "S": "PSp", "2B2": "Sz", "2G2": "Ree", "A": "Alt",
}


@dataclass(frozen=True)
class GroupOrderSpec:
    """A simple group named by family, dimension (or rank) and field size.

    Classical families take the dimension of the natural module as ``n``.
    Exceptional families ignore ``n``.  ``Alt`` takes the degree as ``n``;
    sporadic groups are named by ``family="sporadic", name=...``.
    """

    family: str
    n: int | None = None
    q: int | None = None
    name: str | None = None

    def __str__(self):
        if self.family == "sporadic":
            return str(self.name)
        if self.family == "Alt":
            return f"Alt{self.n}"
        if self.family in EXCEPTIONAL:
            return f"{self.family}({self.q})"
        return f"{self.family}{self.n}({self.q})"


def _prod_minus(q, exps, sign=-1):
    return prod(q**e + sign for e in exps)


def classical_order(family: str, n: int, q: int) -> int:
    """Orders of the simple classical groups, centers divided out."""
    family = FAMILY_ALIASES.get(family, family)
    prime_power(q)
    if family == "PSL":
        if n < 2:
            raise ValueError("PSL needs n >= 2")
        return q ** (n * (n - 1) // 2) * _prod_minus(q, range(2, n + 1)) // gcd(n, q - 1)
    if family == "PSU":
        if n < 2:
            raise ValueError("PSU needs n >= 2")
        return q ** (n * (n - 1) // 2) * prod(q**i - (-1) ** i for i in range(2, n + 1)) // gcd(n, q + 1)
    if family == "PSp":
        if n % 2 or n < 2:
            raise ValueError("PSp needs even n >= 2")
        m = n // 2
        return q ** (m * m) * _prod_minus(q, range(2, 2 * m + 1, 2)) // gcd(2, q - 1)
    if family == "POmega":
        if n % 2 == 0 or n < 3:
            raise ValueError("odd-dimensional orthogonal groups need odd n >= 3")
        m = (n - 1) // 2
        return q ** (m * m) * _prod_minus(q, range(2, 2 * m + 1, 2)) // gcd(2, q - 1)
    if family in ("POmega+", "POmega-"):
        if n % 2 or n < 2:
            raise ValueError("even-dimensional orthogonal groups need even n")
        m = n // 2
        eps = 1 if family == "POmega+" else -1
        top = q**m - eps
        return q ** (m * (m - 1)) * top * _prod_minus(q, range(2, 2 * m - 1, 2)) // gcd(4, top)
    raise ValueError(f"unknown classical family {family!r}")


def exceptional_order(family: str, q: int) -> int:
    family = FAMILY_ALIASES.get(family, family)
    p, f = prime_power(q)
    if family == "Sz":
        if p != 2 or f % 2 == 0:
            raise ValueError("Sz(q) needs q = 2^(2m+1)")
        return q**2 * (q**2 + 1) * (q - 1)
    if family == "Ree":
        if p != 3 or f % 2 == 0:
            raise ValueError("Ree(q) needs q = 3^(2m+1)")
        return q**3 * (q**3 + 1) * (q - 1)
    if family == "2F4":
        if p != 2 or f % 2 == 0:
            raise ValueError("2F4(q) needs q = 2^(2m+1)")
        return q**12 * (q**6 + 1) * (q**4 - 1) * (q**3 + 1) * (q - 1)
    if family == "G2":
        return q**6 * (q**6 - 1) * (q**2 - 1)
    if family == "3D4":
        return q**12 * (q**8 + q**4 + 1) * (q**6 - 1) * (q**2 - 1)
    if family == "F4":
        return q**24 * _prod_minus(q, (12, 8, 6, 2))
    if family == "E6":
        return q**36 * _prod_minus(q, (12, 9, 8, 6, 5, 2)) // gcd(3, q - 1)
    if family == "2E6":
        return q**36 * (q**12 - 1) * (q**9 + 1) * (q**8 - 1) * (q**6 - 1) * (q**5 + 1) * (q**2 - 1) // gcd(3, q + 1)
    if family == "E7":
        return q**63 * _prod_minus(q, (18, 14, 12, 10, 8, 6, 2)) // gcd(2, q - 1)
    if family == "E8":
        return q**120 * _prod_minus(q, (30, 24, 20, 18, 14, 12, 8, 2))
    raise ValueError(f"unknown exceptional family {family!r}")


def simple_group_order(spec) -> int:
    """Exact order of the group described by ``spec`` (a GroupOrderSpec or a name)."""
    if isinstance(spec, str):
        spec = parse_group(spec)
    family = FAMILY_ALIASES.get(spec.family, spec.family)
    if family == "sporadic":
        try:
            return SPORADIC_ORDERS[spec.name]
        except KeyError:
            raise ValueError(f"unknown sporadic group {spec.name!r}") from None
    if family == "Alt":
        if spec.n is None or spec.n < 1:
            raise ValueError("Alt needs a degree n >= 1")
        return max(1, factorial(spec.n) // 2)
    if family in EXCEPTIONAL:
        return exceptional_order(family, spec.q)
    if family in CLASSICAL:
        if spec.n is None or spec.q is None:
            raise ValueError(f"{family} needs n and q")
        return classical_order(family, spec.n, spec.q)
    raise ValueError(f"unsupported family {spec.family!r}")


_NAME = re.compile(r"^\s*([A-Za-z0-9'+\-∘−]+?)_?\{?(\d+)?\}?(?:\^\{?([+\-−∘])\}?)?\((\d+)\)\s*$")


def parse_group(text: str) -> GroupOrderSpec:
    """Parse names such as ``PSL2(19)``, ``PSp_4(3)``, ``POmega+8(2)``,
    ``POmega_8^+(2)``, ``G2(3)``, ``Alt7`` or ``M22``."""
    t = text.strip()
    if t in SPORADIC_ORDERS:
        return GroupOrderSpec("sporadic", name=t)
    m = re.fullmatch(r"(?:Alt|A)_?(\d+)", t)
    if m:
        return GroupOrderSpec("Alt", n=int(m.group(1)))
    for fam in sorted(EXCEPTIONAL + tuple(FAMILY_ALIASES), key=len, reverse=True):
        m = re.fullmatch(re.escape(fam) + r"\((\d+)\)", t)
        if m and FAMILY_ALIASES.get(fam, fam) in EXCEPTIONAL:
            return GroupOrderSpec(FAMILY_ALIASES.get(fam, fam), q=int(m.group(1)))
    m = re.fullmatch(r"(PSL|PSU|PSp|POmega|Omega|SL|SU|Sp)([+\-−∘]?)_?\{?(\d+)\}?(?:\^\{?([+\-−∘])\}?)?\((\d+)\)", t)
    if m:
        fam, sign1, n, sign2, q = m.groups()
        fam = {"SL": "PSL", "SU": "PSU", "Sp": "PSp", "Omega": "POmega"}.get(fam, fam)
        sign = (sign1 or sign2 or "").replace("−", "-").replace("∘", "")
        if fam == "POmega" and sign:
            fam = "POmega" + sign
        return GroupOrderSpec(fam, n=int(n), q=int(q))
    raise ValueError(f"cannot parse group name {text!r}")


def matrix_group_order(kind: str, n: int, q: int) -> int:
    """Orders of the matrix groups GL, SL, GU, SU, Sp, and full orthogonal groups.

    ``kind`` is one of GL, SL, GU, SU, Sp, O, O+, O-, SO, SO+, SO-,
    Omega, Omega+, Omega-.
    """
    p, _ = prime_power(q)
    if kind in ("GL", "SL"):
        out = q ** (n * (n - 1) // 2) * _prod_minus(q, range(1, n + 1))
        return out if kind == "GL" else out // (q - 1)
    if kind in ("GU", "SU"):
        out = q ** (n * (n - 1) // 2) * prod(q**i - (-1) ** i for i in range(1, n + 1))
        return out if kind == "GU" else out // (q + 1)
    if kind == "Sp":
        m = n // 2
        return q ** (m * m) * _prod_minus(q, range(2, 2 * m + 1, 2))
    base = kind.rstrip("+-")
    sign = kind[len(base):]
    if n % 2:
        if sign:
            raise ValueError("odd-dimensional orthogonal groups have no sign")
        m = (n - 1) // 2
        so = q ** (m * m) * _prod_minus(q, range(2, 2 * m + 1, 2))
        if p == 2:
            return so  # O = SO = Omega-extended; the odd-q factors do not arise
        return {"O": 2 * so, "SO": so, "Omega": so // 2}[base]
    if not sign:
        raise ValueError("even-dimensional orthogonal groups need a sign")
    m = n // 2
    eps = 1 if sign == "+" else -1
    so = q ** (m * (m - 1)) * (q**m - eps) * _prod_minus(q, range(2, 2 * m - 1, 2))
    if base == "O":
        return 2 * so
    if base == "SO":
        return so if p != 2 else 2 * so
    if base == "Omega":
        return so // 2 if p != 2 else so
    raise ValueError(f"unknown matrix group {kind!r}")
