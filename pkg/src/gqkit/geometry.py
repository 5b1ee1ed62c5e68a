"""Incidence structures and generalized quadrangles.

Points are ``0..n-1``; a line is a sorted tuple of point indices.  Most
queries work with Python integers as bitsets: ``line_masks[i]`` has bit P
set when P is on line i, ``collinear_masks[P]`` has bit X set when X != P
shares a line with P.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property


class GQAxiomError(ValueError):
    """Raised by :func:`verify_gq`; ``code`` names the failed check."""

    def __init__(self, code: str, message: str, witness=None):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.witness = witness


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class IncidenceStructure:
    """A finite point-line geometry with lines given extensionally.

    Lines with identical point sets are rejected unless ``allow_repeated``
    is set; coset geometries of small groups can legitimately have them.
    """

    def __init__(self, num_points: int, lines, metadata: dict | None = None, allow_repeated: bool = False):
        if num_points < 0:
            raise ValueError("negative point count")
        canon = []
        for ln in lines:
            pts = tuple(sorted(int(x) for x in ln))
            if not pts:
                raise ValueError("empty line")
            if len(set(pts)) != len(pts):
                raise ValueError(f"line {pts} repeats a point")
            if pts[0] < 0 or pts[-1] >= num_points:
                raise ValueError(f"line {pts} has a point outside 0..{num_points - 1}")
            canon.append(pts)
        if not allow_repeated and len(set(canon)) != len(canon):
            raise ValueError("repeated line")
        self.num_points = num_points
        self.lines = tuple(canon)
        self.metadata = dict(metadata or {})

    @property
    def num_lines(self) -> int:
        return len(self.lines)

    @cached_property
    def line_masks(self) -> list[int]:
        return [sum(1 << p for p in ln) for ln in self.lines]

    @cached_property
    def lines_on(self) -> list[list[int]]:
        """``lines_on[P]``: indices of the lines through P, ascending."""
        out = [[] for _ in range(self.num_points)]
        for i, ln in enumerate(self.lines):
            for p in ln:
                out[p].append(i)
        return out

    @cached_property
    def collinear_masks(self) -> list[int]:
        out = []
        for p in range(self.num_points):
            m = 0
            for i in self.lines_on[p]:
                m |= self.line_masks[i]
            out.append(m & ~(1 << p))
        return out

    def is_incident(self, point: int, line: int) -> bool:
        return bool(self.line_masks[line] >> point & 1)

    def collinear(self, a: int, b: int) -> bool:
        return a == b or bool(self.collinear_masks[a] >> b & 1)

    def common_line(self, a: int, b: int) -> int | None:
        for i in self.lines_on[a]:
            if self.line_masks[i] >> b & 1:
                return i
        return None

    def __eq__(self, other):
        return (isinstance(other, IncidenceStructure) and self.num_points == other.num_points
                and self.lines == other.lines)

    def __hash__(self):
        return hash((self.num_points, self.lines))

    def __repr__(self):
        return f"{type(self).__name__}(points={self.num_points}, lines={self.num_lines})"


class GeneralizedQuadrangle(IncidenceStructure):
    """An incidence structure that passed :func:`verify_gq`, with order (s, t)."""

    def __init__(self, num_points, lines, s: int, t: int, metadata=None):
        super().__init__(num_points, lines, metadata)
        self.s = s
        self.t = t

    @property
    def order(self) -> tuple[int, int]:
        return self.s, self.t

    def __repr__(self):
        return f"GeneralizedQuadrangle(order=({self.s}, {self.t}), points={self.num_points}, lines={self.num_lines})"


def verify_gq(inc: IncidenceStructure, require_thick: bool = True) -> GeneralizedQuadrangle:
    """Check the quadrangle axioms exhaustively and return the tagged structure.

    Checks run in this order, each raising :class:`GQAxiomError` with a
    witness: two points on two lines (``TWO_LINES``), an antiflag with no
    or several collinear points (``ANTIFLAG_NONE``, ``ANTIFLAG_MULTIPLE``),
    non-uniform line sizes or point degrees (``NON_UNIFORM``), the point and
    line counts (``COUNTS``) and thickness (``THIN``).
    """
    n = inc.num_points
    if n == 0 or inc.num_lines == 0:
        raise GQAxiomError("EMPTY", "structure has no points or no lines")
    lines, masks = inc.lines, inc.line_masks
    # (i): the lines through P pairwise share only P
    for p in range(n):
        seen = 0
        for i in inc.lines_on[p]:
            m = masks[i] & ~(1 << p)
            clash = seen & m
            if clash:
                x = next(_bits(clash))
                two = [j for j in inc.lines_on[p] if masks[j] >> x & 1]
                raise GQAxiomError("TWO_LINES", f"points {p} and {x} share lines {two[:2]}",
                                   {"points": [p, x], "lines": two[:2]})
            seen |= m
    # (ii): each antiflag has exactly one point of the line collinear with P
    col = inc.collinear_masks
    for i, m in enumerate(masks):
        for p in range(n):
            if m >> p & 1:
                continue
            hit = col[p] & m
            if not hit:
                raise GQAxiomError("ANTIFLAG_NONE", f"no point of line {i} is collinear with point {p}",
                                   {"point": p, "line": i})
            if hit & (hit - 1):
                pts = list(_bits(hit))
                raise GQAxiomError("ANTIFLAG_MULTIPLE",
                                   f"points {pts} of line {i} are all collinear with point {p}",
                                   {"point": p, "line": i, "collinear": pts})
    sizes = {len(ln) for ln in lines}
    degrees = {len(ls) for ls in inc.lines_on}
    if len(sizes) != 1 or len(degrees) != 1:
        raise GQAxiomError("NON_UNIFORM", f"line sizes {sorted(sizes)}, point degrees {sorted(degrees)}",
                           {"line_sizes": sorted(sizes), "point_degrees": sorted(degrees)})
    s, t = sizes.pop() - 1, degrees.pop() - 1
    if n != (s + 1) * (s * t + 1) or inc.num_lines != (t + 1) * (s * t + 1):
        raise GQAxiomError("COUNTS", f"{n} points and {inc.num_lines} lines do not fit order ({s}, {t})",
                           {"s": s, "t": t})
    if require_thick and (s < 2 or t < 2):
        raise GQAxiomError("THIN", f"order ({s}, {t}) is not thick", {"s": s, "t": t})
    return GeneralizedQuadrangle(n, lines, s, t, inc.metadata)


def dual(Q: GeneralizedQuadrangle) -> GeneralizedQuadrangle:
    """Swap points and lines: point i of the dual is line i of Q, and line P
    of the dual is the set of lines through point P."""
    meta = dict(Q.metadata)
    meta["dual_of"] = meta.get("family", meta.get("construction"))
    return GeneralizedQuadrangle(Q.num_lines, Q.lines_on, Q.t, Q.s, meta)


class IncidenceGraph:
    """Bipartite point-line graph: vertices ``0..P-1`` are points, ``P..`` lines."""

    def __init__(self, inc: IncidenceStructure):
        self.num_points = P = inc.num_points
        self.num_lines = inc.num_lines
        adj = [[P + i for i in inc.lines_on[p]] for p in range(P)]
        adj += [list(ln) for ln in inc.lines]
        self.adjacency = adj

    @property
    def num_vertices(self) -> int:
        return len(self.adjacency)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency[:self.num_points])

    def neighbors(self, v: int) -> list[int]:
        return self.adjacency[v]

    def is_point(self, v: int) -> bool:
        return v < self.num_points

    def distances_from(self, v: int) -> list[int]:
        dist = [-1] * self.num_vertices
        dist[v] = 0
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in self.adjacency[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def is_connected(self) -> bool:
        return self.num_vertices == 0 or min(self.distances_from(0)) >= 0


def incidence_graph(Q: IncidenceStructure) -> IncidenceGraph:
    return IncidenceGraph(Q)


def girth(G: IncidenceGraph) -> int:
    """Length of a shortest cycle, by BFS from every vertex."""
    best = None
    for v in range(G.num_vertices):
        dist = [-1] * G.num_vertices
        parent = [-1] * G.num_vertices
        dist[v] = 0
        queue = deque([v])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] + 1 >= best:
                break
            for y in G.adjacency[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    cyc = dist[x] + dist[y] + 1
                    if best is None or cyc < best:
                        best = cyc
    if best is None:
        raise ValueError("graph is acyclic; girth undefined")
    return best


def diameter(G: IncidenceGraph) -> int:
    out = 0
    for v in range(G.num_vertices):
        dist = G.distances_from(v)
        if min(dist) < 0:
            raise ValueError("graph is disconnected; diameter undefined")
        out = max(out, max(dist))
    return out


def _check_point(Q, p):
    if not 0 <= p < Q.num_points:
        raise ValueError(f"point {p} outside 0..{Q.num_points - 1}")


def _perp_mask(Q, p) -> int:
    _check_point(Q, p)
    return Q.collinear_masks[p] | (1 << p)


def perp(Q: IncidenceStructure, p: int) -> set[int]:
    """P together with every point collinear with P."""
    return set(_bits(_perp_mask(Q, p)))


def perp_pair(Q: IncidenceStructure, a: int, b: int) -> set[int]:
    return set(_bits(_perp_mask(Q, a) & _perp_mask(Q, b)))


def _set_perp_mask(Q, S) -> int:
    m = (1 << Q.num_points) - 1
    for p in S:
        m &= _perp_mask(Q, p)
    return m


def perp_perp(Q: IncidenceStructure, S) -> set[int]:
    """``(S^perp)^perp`` where ``S^perp`` is the set of points collinear with
    (or equal to) every point of S.

    Sets containing two distinct collinear points are rejected.
    """
    S = sorted(set(S))
    for i, a in enumerate(S):
        for b in S[i + 1:]:
            if Q.collinear(a, b):
                raise ValueError(f"points {a} and {b} are collinear")
    return set(_bits(_set_perp_mask(Q, list(_bits(_set_perp_mask(Q, S))))))


def is_regular_pair(Q: GeneralizedQuadrangle, a: int, b: int) -> bool:
    _check_point(Q, a)
    _check_point(Q, b)
    if Q.collinear(a, b):
        raise ValueError(f"points {a} and {b} are collinear")
    return len(perp_perp(Q, [a, b])) == Q.t + 1


def is_ovoid(Q: GeneralizedQuadrangle, S) -> bool:
    """Every line meets S in exactly one point."""
    S = set(S)
    for p in S:
        _check_point(Q, p)
    m = sum(1 << p for p in S)
    for lm in Q.line_masks:
        hit = lm & m
        if not hit or hit & (hit - 1):
            return False
    assert len(S) == Q.s * Q.t + 1
    return True


def find_ovoid(Q: GeneralizedQuadrangle):
    """An ovoid found by exhaustive backtracking, or None if there is none.

    The first line not yet covered must meet the ovoid in one of its points,
    so branching on that line's points is complete.
    """
    L = Q.num_lines
    full = (1 << L) - 1
    line_sets = []  # lines through each point, as a bitmask of line indices
    for p in range(Q.num_points):
        line_sets.append(sum(1 << i for i in Q.lines_on[p]))

    def search(covered, chosen):
        if covered == full:
            return list(chosen)
        free = ~covered & full
        i = (free & -free).bit_length() - 1
        for p in Q.lines[i]:
            ls = line_sets[p]
            if ls & covered:
                continue
            chosen.append(p)
            out = search(covered | ls, chosen)
            if out is not None:
                return out
            chosen.pop()
        return None

    found = search(0, [])
    return sorted(found) if found is not None else None
