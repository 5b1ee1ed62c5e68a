"""Arithmetic feasibility tests for quadrangle parameters and group orders.

Every test returns plain data: a :class:`Check` records what was compared and
the numbers that decided it, so a verdict can be printed or serialized
without recomputation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from ..fields import prime_power


@dataclass(frozen=True)
class OrderPair:
    s: int
    t: int

    def __post_init__(self):
        if self.s < 1 or self.t < 1:
            raise ValueError(f"order ({self.s}, {self.t}) needs s, t >= 1")

    @property
    def num_points(self) -> int:
        return (self.s + 1) * (self.s * self.t + 1)

    @property
    def num_lines(self) -> int:
        return (self.t + 1) * (self.s * self.t + 1)


@dataclass
class Check:
    name: str
    inputs: dict
    outcome: bool
    witness: dict | None = None

    def as_dict(self) -> dict:
        return {"name": self.name, "inputs": self.inputs, "outcome": self.outcome, "witness": self.witness}


@dataclass
class Verdict:
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.outcome for c in self.checks)

    @property
    def failed(self) -> list:
        return [c for c in self.checks if not c.outcome]

    def as_dict(self) -> dict:
        return {"ok": self.ok, "checks": [c.as_dict() for c in self.checks]}


def parameter_feasible(pair, t: int | None = None) -> Verdict:
    """Thickness, divisibility and the Higman inequalities for order (s, t).

    Accepts an :class:`OrderPair` or two integers.  Every check is run, even
    after a failure, so the verdict lists them all in a fixed order.
    """
    if not isinstance(pair, OrderPair):
        pair = OrderPair(pair, t)
    s, t = pair.s, pair.t
    v = Verdict()
    v.checks.append(Check("thick", {"s": s, "t": t}, s >= 2 and t >= 2))
    num = s * t * (s + 1) * (t + 1)
    rem = num % (s + t)
    v.checks.append(Check("divisibility", {"s": s, "t": t}, rem == 0,
                          {"numerator": num, "divisor": s + t, "remainder": rem}))
    v.checks.append(Check("higman_t", {"s": s, "t": t}, t <= s * s, {"s_squared": s * s}))
    v.checks.append(Check("higman_s", {"s": s, "t": t}, s <= t * t, {"t_squared": t * t}))
    v.checks.append(Check("gap_s", {"s": s, "t": t}, not (s < t * t) or s <= t * t - t,
                          {"t_squared_minus_t": t * t - t}))
    v.checks.append(Check("gap_t", {"s": s, "t": t}, not (t < s * s) or t <= s * s - s,
                          {"s_squared_minus_s": s * s - s}))
    return v


def pbounds_check(N: int, t: int) -> Verdict:
    """``(t+1)^2 < N < (t+1)^3`` for a point count N of a quadrangle with
    point degree t+1.  The bounds need s <= t, which the caller ensures
    (s is usually unknown here)."""
    lo, hi = (t + 1) ** 2, (t + 1) ** 3
    return Verdict([
        Check("points_lower", {"N": N, "t": t}, lo < N, {"bound": lo}),
        Check("points_upper", {"N": N, "t": t}, N < hi, {"bound": hi}),
    ])


def pbounds_with_s(N: int, s: int, t: int) -> Verdict:
    """``s^2 (t+1) < N < s (t+1)^2``; only valid for s <= t."""
    if s > t:
        raise ValueError(f"bounds in s need s <= t, got s={s}, t={t}")
    lo, hi = s * s * (t + 1), s * (t + 1) ** 2
    return Verdict([
        Check("points_lower_s", {"N": N, "s": s, "t": t}, lo < N, {"bound": lo}),
        Check("points_upper_s", {"N": N, "s": s, "t": t}, N < hi, {"bound": hi}),
    ])


def order_discriminant(N: int, t: int) -> int:
    """Discriminant of ``t s^2 + (t+1) s + 1 - N = 0`` in s."""
    return (t + 1) ** 2 - 4 * t * (1 - N)


def discriminant_td(t: int, d: int) -> int:
    """``(t-1)^2 + 4 d t``, equal to :func:`order_discriminant` at ``N = d``."""
    if t < 1 or d < 1:
        raise ValueError("t and d must be positive")
    return (t - 1) ** 2 + 4 * d * t


@dataclass(frozen=True)
class OrderSolution:
    N: int
    t: int
    delta: int
    root: int | None  # integer square root of delta, if delta is a square
    s: int | None  # positive integer solution, if any

    @property
    def s_value(self) -> float:
        return (-(self.t + 1) + self.delta ** 0.5) / (2 * self.t)


def order_equation(N: int, t: int) -> OrderSolution:
    if N < 1 or t < 1:
        raise ValueError("N and t must be positive")
    delta = order_discriminant(N, t)
    r = isqrt(delta)
    root = r if r * r == delta else None
    s = None
    if root is not None:
        num = root - (t + 1)
        if num > 0 and num % (2 * t) == 0:
            s = num // (2 * t)
    return OrderSolution(N, t, delta, root, s)


def solve_order_equation(N: int, t: int) -> int | None:
    """The positive integer s with ``(s+1)(st+1) = N``, or None."""
    return order_equation(N, t).s


def ratio_check(s: int, t: int, stab_point: int, stab_line: int) -> Check:
    """Point and line stabilizers of a flag-transitive group satisfy
    ``|G_P| (s+1) = |G_L| (t+1)``, since both count flags through ``|G|``."""
    lhs, rhs = (s + 1) * stab_point, (t + 1) * stab_line
    return Check("stabilizer_ratio", {"s": s, "t": t, "point_stabilizer": stab_point,
                                      "line_stabilizer": stab_line}, lhs == rhs, {"lhs": lhs, "rhs": rhs})


def stabilizer_bounds(group_order: int, stab_order: int, s: int, t: int) -> Verdict:
    """Size bounds on a point stabilizer of a point-transitive group.

    For s < t the stabilizer satisfies ``|G| < |G_P|^2``; for s = t,
    ``|G|^9 < |G_P|^19``.  The verdict also reports whether G_P is large,
    meaning ``|G| < |G_P|^3``.
    """
    if s > t:
        raise ValueError(f"stabilizer bounds need s <= t, got s={s}, t={t}")
    inputs = {"group_order": group_order, "stabilizer_order": stab_order, "s": s, "t": t}
    if s < t:
        main = Check("stabilizer_square", inputs, group_order < stab_order ** 2, {"bound": stab_order ** 2})
    else:
        main = Check("stabilizer_power", inputs, group_order ** 9 < stab_order ** 19,
                     {"lhs": group_order ** 9, "rhs": stab_order ** 19})
    large = Check("large_subgroup", inputs, group_order < stab_order ** 3, {"bound": stab_order ** 3})
    return Verdict([main, large])


def q_part(N: int, q: int) -> int:
    """The largest power of the characteristic of ``q`` dividing N."""
    if N == 0:
        raise ValueError("q-part of 0 is undefined")
    p, _ = prime_power(q)
    out = 1
    N = abs(N)
    while N % p == 0:
        N //= p
        out *= p
    return out


@dataclass
class SieveCase:
    """A candidate point count N with candidate values of t+1."""

    N: int
    t_plus_one: tuple
    q: int | None = None
    verdict: Verdict | None = None


def sieve_case(N: int, t_plus_one) -> SieveCase:
    """Run the point-count bounds and then the order equation for each t+1.

    The case survives if some t+1 passes both; the checks for every
    candidate are recorded.
    """
    v = Verdict()
    survivors = []
    for tp in t_plus_one:
        t = tp - 1
        b = pbounds_check(N, t)
        v.checks.extend(b.checks)
        if not b.ok:
            continue
        sol = order_equation(N, t)
        v.checks.append(Check("order_equation", {"N": N, "t": t}, sol.s is not None,
                              {"delta": sol.delta, "s": sol.s}))
        if sol.s is not None:
            survivors.append((sol.s, t))
    v.checks.append(Check("survives", {"N": N, "t_plus_one": list(t_plus_one)}, bool(survivors),
                          {"orders": survivors}))
    return SieveCase(N, tuple(t_plus_one), None, v)
