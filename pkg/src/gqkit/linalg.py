"""Vectors and subspaces over GF(q).

Vectors are tuples of field-element encodings (see :mod:`gqkit.fields`).  A
subspace is identified by the reduced row-echelon form of any basis, which is
unique, so subspaces can be hashed and compared directly.
"""

from __future__ import annotations

from itertools import product

from .fields import FiniteField


def normalize(v, F: FiniteField):
    """Scale ``v`` so its first nonzero coordinate is 1 (projective point)."""
    for c in v:
        if c:
            if c == 1:
                return tuple(v)
            inv = F.inv(c)
            mul = F.mul
            return tuple(mul(x, inv) for x in v)
    raise ValueError("the zero vector is not a projective point")


def rref(rows, F: FiniteField) -> tuple[tuple[int, ...], ...]:
    """Reduced row-echelon form with zero rows removed."""
    m = [list(r) for r in rows]
    if not m:
        return ()
    ncols = len(m[0])
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    pivot_row = 0
    for col in range(ncols):
        sel = next((i for i in range(pivot_row, len(m)) if m[i][col]), None)
        if sel is None:
            continue
        m[pivot_row], m[sel] = m[sel], m[pivot_row]
        pr = m[pivot_row]
        c = pr[col]
        if c != 1:
            ic = inv(c)
            pr = m[pivot_row] = [mul(x, ic) for x in pr]
        for i in range(len(m)):
            if i != pivot_row and m[i][col]:
                f = neg(m[i][col])
                row = m[i]
                m[i] = [add(a, mul(f, b)) for a, b in zip(row, pr)]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return tuple(tuple(r) for r in m[:pivot_row])


def rank(rows, F: FiniteField) -> int:
    return len(rref(rows, F))


def span_points(basis, F: FiniteField):
    """All projective points (normalized vectors) of the span of ``basis``."""
    basis = rref(basis, F)
    k = len(basis)
    if k == 0:
        return []
    n = len(basis[0])
    add, mul = F.add, F.mul
    out = []
    # leading coefficient 1 on the first nonzero combination coordinate keeps
    # the RREF combination normalized
    for lead in range(k):
        for tail in product(range(F.q), repeat=k - lead - 1):
            coeffs = (0,) * lead + (1,) + tail
            v = [0] * n
            for c, row in zip(coeffs, basis):
                if c:
                    v = [add(a, mul(c, b)) for a, b in zip(v, row)]
            out.append(tuple(v))
    return out


def projective_points(n: int, F: FiniteField):
    """All normalized nonzero vectors of GF(q)^n, in lexicographic order."""
    out = []
    for lead in range(n):
        for tail in product(range(F.q), repeat=n - lead - 1):
            out.append((0,) * lead + (1,) + tail)
    return out


def all_subspaces(n: int, k: int, F: FiniteField):
    """Yield every k-subspace of GF(q)^n as its RREF basis.

    Enumerates pivot sets and the free entries of the echelon form directly,
    without reference to any counting formula.
    """
    from itertools import combinations

    if not 0 <= k <= n:
        return
    if k == 0:
        yield ()
        return
    for pivots in combinations(range(n), k):
        free = []
        for r, pc in enumerate(pivots):
            for col in range(pc + 1, n):
                if col not in pivots:
                    free.append((r, col))
        for values in product(range(F.q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, col), v in zip(free, values):
                rows[r][col] = v
            yield tuple(tuple(r) for r in rows)


def vec_mat(v, M, F: FiniteField):
    """Row vector times matrix."""
    add, mul = F.add, F.mul
    n = len(M[0])
    out = [0] * n
    for a, row in zip(v, M):
        if a:
            for j in range(n):
                if row[j]:
                    out[j] = add(out[j], mul(a, row[j]))
    return tuple(out)


def mat_mul(A, B, F: FiniteField):
    return tuple(vec_mat(r, B, F) for r in A)


def mat_inv(M, F: FiniteField):
    n = len(M)
    aug = [tuple(row) + tuple(1 if i == j else 0 for j in range(n)) for i, row in enumerate(M)]
    red = rref(aug, F)
    if len(red) < n or any(red[i][i] != 1 for i in range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(r[n:]) for r in red)


def identity(n: int):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
