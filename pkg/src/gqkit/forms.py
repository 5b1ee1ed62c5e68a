"""Classical forms on GF(q)^n and their totally singular subspaces.

Only the standard (canonical) forms are supported:

* symplectic: block-diagonal with 2x2 blocks ``[[0, 1], [-1, 0]]``, so
  ``(e_{2i}, e_{2i+1})`` are hyperbolic pairs;
* quadratic: ``x0 x1 + x2 x3 + ...`` on the hyperbolic pairs, followed by
  ``x_{n-1}^2`` (parabolic) or by an anisotropic binary form
  ``x^2 + x y + delta y^2`` (elliptic);
* hermitian over GF(q^2): antidiagonal identity Gram matrix,
  ``h(u, v) = sum_i u_i v_{n-1-i}^q``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .counting import canonical_kind, count_totally_singular, witt_parameters
from .fields import GF, FieldElement, FiniteField, prime_power
from .linalg import normalize, projective_points, rref, span_points

DEFAULT_ENUMERATION_CAP = 10**7


class ResourceCapError(RuntimeError):
    """A requested computation exceeds a configured size limit."""


def anisotropic_delta(F: FiniteField) -> int:
    """Smallest ``delta`` (by encoding) with ``X^2 + X + delta`` irreducible over F."""
    for delta in F.nonzero():
        if all(F.add(F.add(F.mul(x, x), x), delta) for x in F.elements()):
            return delta
    raise ValueError(f"no anisotropic binary form over {F}")  # pragma: no cover


@dataclass(frozen=True, eq=False)
class FormSpace:
    """A vector space GF^n carrying one of the standard classical forms.

    ``field`` is GF(q) except for hermitian spaces, where it is GF(q^2) and
    ``q`` remains the order of the fixed field of the involution.
    """

    kind: str
    n: int
    q: int
    field: FiniteField
    gram: tuple
    quad: tuple = ()  # (i, j, c) terms of Q for quadratic kinds
    tail_delta: int | None = None

    @classmethod
    def standard(cls, kind: str, n: int, q: int) -> "FormSpace":
        kind = canonical_kind(kind)
        witt_parameters(kind, n)  # validates the (kind, n) combination
        prime_power(q)
        if kind == "hermitian":
            F = GF(q * q)
            gram = tuple(tuple(1 if i + j == n - 1 else 0 for j in range(n)) for i in range(n))
            return cls(kind, n, q, F, gram)
        F = GF(q)
        if kind == "symplectic":
            g = [[0] * n for _ in range(n)]
            for i in range(0, n, 2):
                g[i][i + 1] = 1
                g[i + 1][i] = F.neg(1)
            return cls(kind, n, q, F, tuple(map(tuple, g)))
        d = witt_parameters(kind, n)[0]
        terms = [(2 * i, 2 * i + 1, 1) for i in range(d)]
        delta = None
        if kind == "parabolic":
            terms.append((n - 1, n - 1, 1))
        elif kind == "elliptic":
            delta = anisotropic_delta(F)
            a = n - 2
            terms += [(a, a, 1), (a, a + 1, 1), (a + 1, a + 1, delta)]
        g = [[0] * n for _ in range(n)]
        for i, j, c in terms:
            g[i][j] = F.add(g[i][j], c)
            g[j][i] = F.add(g[j][i], c)
        return cls(kind, n, q, F, tuple(map(tuple, g)), tuple(terms), delta)

    # -- form evaluation on int vectors -------------------------------------

    @cached_property
    def _gram_terms(self):
        return tuple((i, j, c) for i, row in enumerate(self.gram) for j, c in enumerate(row) if c)

    def conj(self, x: int) -> int:
        """The involution ``x -> x^q`` (identity unless hermitian)."""
        if self.kind != "hermitian":
            return x
        return self.field.pow(x, self.q)

    def b(self, u, v) -> int:
        """Bilinear (sesquilinear for hermitian) form value as an int."""
        F = self.field
        add, mul = F.add, F.mul
        if self.kind == "hermitian":
            v = [self.conj(x) for x in v]
        s = 0
        for i, j, c in self._gram_terms:
            if u[i] and v[j]:
                s = add(s, mul(c, mul(u[i], v[j])))
        return s

    def Q(self, u) -> int:
        """Quadratic form value; ``b(u, u)`` for hermitian, 0 for symplectic."""
        if self.kind == "symplectic":
            return 0
        if self.kind == "hermitian":
            return self.b(u, u)
        F = self.field
        add, mul = F.add, F.mul
        s = 0
        for i, j, c in self.quad:
            if u[i] and u[j]:
                s = add(s, mul(c, mul(u[i], u[j])))
        return s

    def is_singular(self, u) -> bool:
        return self.Q(u) == 0

    def is_totally_singular(self, basis) -> bool:
        for i, u in enumerate(basis):
            if not self.is_singular(u):
                return False
            for v in basis[i + 1:]:
                if self.b(u, v):
                    return False
        return True

    @property
    def witt_index(self) -> int:
        return witt_parameters(self.kind, self.n)[0]

    @cached_property
    def radical_dimension(self) -> int:
        """Dimension of the radical of the bilinear (or sesquilinear) form."""
        return self.n - len(rref(self.gram, self.field))

    def __repr__(self):
        return f"FormSpace({self.kind}, n={self.n}, q={self.q})"


@dataclass(frozen=True)
class Subspace:
    """A subspace given by its reduced row-echelon basis."""

    space: FormSpace = field(compare=False, hash=False, repr=False)
    basis: tuple

    @classmethod
    def spanned_by(cls, space: FormSpace, vectors) -> "Subspace":
        return cls(space, rref(vectors, space.field))

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def points(self):
        return span_points(self.basis, self.space.field)


def _as_ints(space, vec):
    if len(vec) != space.n:
        raise ValueError(f"vector of length {len(vec)} in a space of dimension {space.n}")
    return tuple(int(space.field(x).value) if isinstance(x, FieldElement) else int(x) for x in vec)


def evaluate_form(space: FormSpace, u, v) -> FieldElement:
    """b(u, v) for the space's bilinear or sesquilinear form."""
    return FieldElement(space.field, space.b(_as_ints(space, u), _as_ints(space, v)))


def singular_value(space: FormSpace, u) -> FieldElement:
    """Q(u) for quadratic spaces, h(u, u) for hermitian, 0 for symplectic."""
    return FieldElement(space.field, space.Q(_as_ints(space, u)))


def singular_points(space: FormSpace):
    """All singular projective points, normalized, in lexicographic order."""
    return [v for v in projective_points(space.n, space.field) if space.is_singular(v)]


def _operation_tables(F: FiniteField):
    q = F.q
    add = np.array([[F.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    mul = np.array([[F.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    return add, mul


def perp_masks(space: FormSpace, pts) -> list[int]:
    """For each point, the bitmask of points in ``pts`` orthogonal to it."""
    F = space.field
    add, mul = _operation_tables(F)
    cols = np.array([[space.conj(x) for x in p] for p in pts], dtype=np.int64).reshape(len(pts), space.n)
    out = []
    for p in pts:
        # w = p G, then b(p, r) = sum_j w_j conj(r_j)
        w = [0] * space.n
        for i, j, c in space._gram_terms:
            if p[i]:
                w[j] = F.add(w[j], F.mul(p[i], c))
        acc = np.zeros(len(pts), dtype=np.int64)
        for j, wj in enumerate(w):
            if wj:
                acc = add[acc, mul[wj, cols[:, j]]]
        bits = np.packbits(acc == 0, bitorder="little")
        out.append(int.from_bytes(bits.tobytes(), "little"))
    return out


def _lead(v) -> int:
    return next(i for i, x in enumerate(v) if x)


def enumerate_totally_singular(space: FormSpace, k: int, cap: int = DEFAULT_ENUMERATION_CAP):
    """Every totally singular k-subspace of ``space`` as a set of :class:`Subspace`.

    Points are found by scanning all projective points.  A totally singular
    (j+1)-space U in echelon form is its first j rows W (a totally singular
    j-space) plus a last row, which is a singular point orthogonal to W that
    vanishes on the pivots of W, leads after them, and sits above zero
    entries of W.  Each U is therefore produced exactly once.
    """
    d = space.witt_index
    if k < 1 or k > d:
        raise ValueError(f"k={k} outside 1..{d} (Witt index)")
    predicted = count_totally_singular(space.kind, space.n, k, space.q)
    if predicted > cap:
        raise ResourceCapError(f"{predicted} totally singular {k}-spaces exceed the cap {cap}")
    pts = singular_points(space)
    if k == 1:
        return {Subspace(space, (p,)) for p in pts}
    n = space.n
    perp = perp_masks(space, pts)
    zero_at = [sum(1 << i for i, p in enumerate(pts) if not p[c]) for c in range(n)]
    lead_after = [sum(1 << i for i, p in enumerate(pts) if _lead(p) > c) for c in range(n)]
    # (basis, pivots, mask of points orthogonal to the span)
    level = [((p,), (_lead(p),), perp[i]) for i, p in enumerate(pts)]
    for _ in range(k - 1):
        nxt = []
        for W, pivots, mask in level:
            cand = mask & lead_after[pivots[-1]]
            for c in pivots:
                cand &= zero_at[c]
            while cand:
                low = cand & -cand
                j = low.bit_length() - 1
                cand ^= low
                p = pts[j]
                c = _lead(p)
                if any(row[c] for row in W):
                    continue
                nxt.append((W + (p,), pivots + (c,), mask & perp[j]))
        level = nxt
    return {Subspace(space, W) for W, _, _ in level}


def point_index(space: FormSpace, vectors) -> dict:
    """Map normalized vectors to their position in ``vectors``."""
    return {normalize(v, space.field): i for i, v in enumerate(vectors)}
