"""Collineation groups, flag and antiflag transitivity, and local arc-transitivity.

A collineation group acts on points followed by lines: vertex ``v < P`` is
point v and vertex ``P + i`` is line i, matching :class:`IncidenceGraph`.
"""

from __future__ import annotations

from itertools import permutations, product

from .constructions import FAMILIES, classical_gq
from .fields import GF, prime_power
from .geometry import GeneralizedQuadrangle, IncidenceGraph, IncidenceStructure, incidence_graph
from .linalg import mat_inv, mat_mul, normalize, projective_points
from .perm import DEFAULT_SEED, PermGroup, is_identity


class CollineationError(ValueError):
    pass


class CollineationGroup:
    """A permutation group on points and lines that preserves incidence."""

    def __init__(self, Q: IncidenceStructure, generators, order_hint: int | None = None, base=(),
                 seed: int = DEFAULT_SEED):
        self.geometry = Q
        P, L = Q.num_points, Q.num_lines
        gens = [tuple(g.images if hasattr(g, "images") else g) for g in generators]
        for k, g in enumerate(gens):
            if len(g) != P + L:
                raise CollineationError(f"generator {k} has degree {len(g)}, expected {P + L}")
            _check_collineation(Q, g, k)
        self.group = PermGroup(gens, degree=P + L, order_hint=order_hint, base=base, seed=seed)

    @classmethod
    def from_point_maps(cls, Q: IncidenceStructure, point_maps, **kw) -> "CollineationGroup":
        """Extend permutations of the points to lines; reject non-collineations."""
        index = {ln: i for i, ln in enumerate(Q.lines)}
        gens = []
        for k, pm in enumerate(point_maps):
            pm = tuple(pm)
            img = list(pm)
            for i, ln in enumerate(Q.lines):
                key = tuple(sorted(pm[x] for x in ln))
                if key not in index:
                    raise CollineationError(f"point map {k} sends line {i} to a non-line")
                img.append(Q.num_points + index[key])
            gens.append(tuple(img))
        return cls(Q, gens, **kw)

    @property
    def degree(self) -> int:
        return self.group.degree

    @property
    def generators(self):
        return self.group.generators

    def order(self) -> int:
        return self.group.order()

    def stabilizer(self, v: int) -> PermGroup:
        return self.group.stabilizer(v)

    def subgroup(self, generators) -> "CollineationGroup":
        return CollineationGroup(self.geometry, generators)

    def __repr__(self):
        return f"CollineationGroup(degree={self.degree}, generators={len(self.generators)})"


def _check_collineation(Q, g, k):
    P = Q.num_points
    if sorted(g) != list(range(len(g))):
        raise CollineationError(f"generator {k} is not a permutation")
    if any(g[x] >= P for x in range(P)):
        raise CollineationError(f"generator {k} maps a point to a line")
    for i, ln in enumerate(Q.lines):
        j = g[P + i] - P
        if j < 0:
            raise CollineationError(f"generator {k} maps line {i} to a point")
        if tuple(sorted(g[x] for x in ln)) != Q.lines[j]:
            raise CollineationError(f"generator {k} does not map line {i} onto line {j}")


def _as_perm_group(G) -> PermGroup:
    return G.group if isinstance(G, CollineationGroup) else G


# -- flags, antiflags and arcs -------------------------------------------


def flags(Q: IncidenceStructure) -> list[tuple[int, int]]:
    return [(p, i) for p in range(Q.num_points) for i in Q.lines_on[p]]


def antiflags(Q: IncidenceStructure) -> list[tuple[int, int]]:
    out = []
    for p in range(Q.num_points):
        on = set(Q.lines_on[p])
        out.extend((p, i) for i in range(Q.num_lines) if i not in on)
    return out


def pair_orbit(G, Q: IncidenceStructure, pair) -> set:
    """Orbit of a (point, line) pair under the group's action on both."""
    gens = _as_perm_group(G).generators
    P = Q.num_points
    if _as_perm_group(G).degree != P + Q.num_lines:
        raise ValueError("group degree does not match points + lines")
    start = (pair[0], pair[1])
    seen = {start}
    queue = [start]
    for p, i in queue:
        for g in gens:
            im = (g[p], g[P + i] - P)
            if im not in seen:
                seen.add(im)
                queue.append(im)
    return seen


def is_flag_transitive(G, Q: IncidenceStructure) -> bool:
    fl = flags(Q)
    return len(pair_orbit(G, Q, fl[0])) == len(fl)


def is_antiflag_transitive(G, Q: IncidenceStructure) -> bool:
    af = antiflags(Q)
    if not af:
        return True
    return len(pair_orbit(G, Q, af[0])) == len(af)


def s_arcs_from(graph: IncidenceGraph, v: int, s: int) -> list[tuple]:
    """Every s-arc (no immediate backtracking) starting at v."""
    if s < 0 or s > 4:
        raise ValueError("s must lie in 0..4")
    arcs = [(v,)]
    for _ in range(s):
        nxt = []
        for a in arcs:
            prev = a[-2] if len(a) > 1 else None
            for w in graph.neighbors(a[-1]):
                if w != prev:
                    nxt.append(a + (w,))
        arcs = nxt
    return arcs


def unique_3arc(Q: IncidenceStructure, antiflag) -> tuple:
    """The only 3-arc from point P to line l for an antiflag (P, l)."""
    p, line = antiflag
    if Q.is_incident(p, line):
        raise ValueError(f"({p}, {line}) is a flag")
    P = Q.num_points
    target = P + line
    arcs = [a for a in s_arcs_from(incidence_graph(Q), p, 3) if a[-1] == target]
    if len(arcs) != 1:
        raise ValueError(f"{len(arcs)} 3-arcs join point {p} to line {line}; not a generalized quadrangle")
    return arcs[0]


def _tuple_orbit_size(gens, start) -> int:
    seen = {start}
    queue = [start]
    for a in queue:
        for g in gens:
            im = tuple(g[x] for x in a)
            if im not in seen:
                seen.add(im)
                queue.append(im)
    return len(seen)


def vertex_orbit_representatives(G, graph: IncidenceGraph) -> list[int]:
    return [orb[0] for orb in _as_perm_group(G).orbits()]


def local_arc_orbits(G, graph: IncidenceGraph, s: int) -> list[tuple[int, int, int]]:
    """``(v, orbit, total)`` for the least vertex v of each vertex orbit:
    the size of the G_v-orbit of one s-arc from v and the number of s-arcs
    from v."""
    if not graph.is_connected():
        raise ValueError("graph is disconnected")
    H = _as_perm_group(G)
    if H.degree != graph.num_vertices:
        raise ValueError("group degree does not match the graph")
    out = []
    for v in vertex_orbit_representatives(H, graph):
        arcs = s_arcs_from(graph, v, s)
        if not arcs:
            out.append((v, 0, 0))
            continue
        Gv = H.stabilizer(v)
        out.append((v, _tuple_orbit_size(Gv.generators, arcs[0]), len(arcs)))
    return out


def is_locally_s_arc_transitive(G, graph: IncidenceGraph, s: int) -> bool:
    """For each vertex orbit, the stabilizer of its least vertex is
    transitive on the s-arcs starting there."""
    return all(orb == total for _, orb, total in local_arc_orbits(G, graph, s))


def local_action(G, graph: IncidenceGraph, v: int) -> PermGroup:
    """The group induced by the stabilizer of v on the neighbors of v."""
    H = _as_perm_group(G)
    nbrs = graph.neighbors(v)
    pos = {x: i for i, x in enumerate(nbrs)}
    gens = []
    for g in H.stabilizer(v).generators:
        img = tuple(pos[g[x]] for x in nbrs)
        if not is_identity(img):
            gens.append(img)
    return PermGroup(gens, degree=len(nbrs))


# -- collineation groups of the constructed quadrangles ------------------------


def _apply(v, M, frob, F):
    if frob:
        v = [F.frobenius(x, frob) for x in v]
    add, mul = F.add, F.mul
    out = [0] * len(M[0])
    for a, row in zip(v, M):
        if a:
            for j, m in enumerate(row):
                if m:
                    out[j] = add(out[j], mul(a, m))
    return tuple(out)


def _semilinear_point_map(points, index, M, frob, F):
    return tuple(index[normalize(_apply(v, M, frob, F), F)] for v in points)


def _matrix_of(f, n, F):
    return tuple(f(tuple(1 if i == j else 0 for j in range(n))) for i in range(n))


def _preserves_form(space, M, frob, ratio=None):
    """b(xM, yM) = ratio * frob(b(x, y)) on basis vectors and, for quadratic
    kinds, Q(xM) = ratio * frob(Q(x)) on basis vectors (which with b fixes Q)."""
    F = space.field
    n = space.n
    basis = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    imgs = [_apply(e, M, frob, F) for e in basis]
    r = 1 if ratio is None else ratio
    for i in range(n):
        for j in range(n):
            want = F.mul(r, F.frobenius(space.b(basis[i], basis[j]), frob))
            if space.b(imgs[i], imgs[j]) != want:
                return False
    if space.quad:
        for i in range(n):
            if space.Q(imgs[i]) != F.mul(r, F.frobenius(space.Q(basis[i]), frob)):
                return False
    return True


def _form_pool(space):
    """Candidate form-preserving linear maps: transvections, reflections and
    quasi-reflections attached to the points of the space."""
    F = space.field
    n = space.n
    kind = space.kind
    vectors = projective_points(n, F)
    pool = []
    if kind == "symplectic":
        for v in vectors:
            for lam in (1, F.primitive_element):
                f = lambda x, v=v, lam=lam: tuple(F.add(a, F.mul(F.mul(lam, space.b(x, v)), c)) for a, c in zip(x, v))
                pool.append(_matrix_of(f, n, F))
    elif kind == "hermitian":
        q = space.q
        trace0 = [x for x in F.nonzero() if F.add(x, F.pow(x, q)) == 0]
        # a generator of the norm-1 subgroup, so determinants cover it
        norm1 = [F.pow(F.primitive_element, q - 1)]
        for v in vectors:
            hv = space.b(v, v)
            if hv == 0:
                for lam in trace0[:1]:
                    f = lambda x, v=v, lam=lam: tuple(F.add(a, F.mul(F.mul(lam, space.b(x, v)), c)) for a, c in zip(x, v))
                    pool.append(_matrix_of(f, n, F))
            else:
                for mu in norm1:
                    coef = F.div(F.sub(mu, 1), hv)
                    f = lambda x, v=v, coef=coef: tuple(F.add(a, F.mul(F.mul(coef, space.b(x, v)), c)) for a, c in zip(x, v))
                    pool.append(_matrix_of(f, n, F))
    else:
        for v in vectors:
            Qv = space.Q(v)
            if Qv == 0:
                continue
            coef = F.neg(F.inv(Qv))
            f = lambda x, v=v, coef=coef: tuple(F.add(a, F.mul(F.mul(coef, space.b(x, v)), c)) for a, c in zip(x, v))
            M = _matrix_of(f, n, F)
            if M != tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)):
                pool.append(M)
    return [M for M in pool if _preserves_form(space, M, 0)]


def _tail_search(space, frob, ratio):
    """A 2x2 block on the last two coordinates completing a (semi)similitude.

    Hyperbolic coordinates ``x_{2i}`` are scaled by ``ratio``; the tail block
    is found by exhaustive search over GL(2, q).
    """
    F = space.field
    n = space.n
    for a, b, c, d in product(range(F.q), repeat=4):
        if F.sub(F.mul(a, d), F.mul(b, c)) == 0:
            continue
        M = [[0] * n for _ in range(n)]
        for i in range(n - 2):
            M[i][i] = ratio if i % 2 == 0 else 1
        M[n - 2][n - 2], M[n - 2][n - 1], M[n - 1][n - 2], M[n - 1][n - 1] = a, b, c, d
        M = tuple(map(tuple, M))
        if _preserves_form(space, M, frob, ratio):
            return M
    raise AssertionError("no tail block found")  # pragma: no cover


def _extra_generators(space):
    """Similitudes and field automorphisms, as (matrix, frobenius power)."""
    F = space.field
    n = space.n
    p, f = prime_power(F.q)
    ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    out = []
    if f > 1:
        if space.kind == "elliptic":
            out.append((_tail_search(space, 1, 1), 1))
        else:
            out.append((ident, 1))
    if p != 2:
        lam = F.primitive_element
        if space.kind == "symplectic":
            M = tuple(tuple((lam if i % 2 == 0 else 1) if i == j else 0 for j in range(n)) for i in range(n))
            out.append((M, 0))
        elif space.kind == "elliptic":
            out.append((_tail_search(space, 0, lam), 0))
    return out


def classical_collineation_order(tag: str, q: int, full: bool = True) -> int:
    """Order of the full collineation group (or, with ``full=False``, of the
    projective isometry group) of a classical quadrangle."""
    _, f = prime_power(q)
    if tag in ("W3", "Q4"):
        base = q**4 * (q**2 - 1) * (q**4 - 1)
        if full:
            return base * f
        return base // (2 if q % 2 else 1) if tag == "W3" else base
    if tag in ("Qminus5", "H3"):
        pgu = q**6 * (q**2 - 1) * (q**3 + 1) * (q**4 - 1)
        if full:
            return pgu * 2 * f
        # in even characteristic the orthogonal group has no scalar -1 to lose
        return pgu * 2 if tag == "Qminus5" and q % 2 == 0 else pgu
    if tag in ("H4", "H4dual"):
        pgu = q**10 * (q**2 - 1) * (q**3 + 1) * (q**4 - 1) * (q**5 + 1)
        if full:
            return pgu * 2 * f
        return pgu
    raise ValueError(f"unknown family {tag!r}")


def _grow(Q, point_maps, target=None) -> CollineationGroup:
    """Add point maps one at a time, keeping those not already generated.

    Stops when ``target`` is reached; overshooting it, or ending below it,
    means the generators or the expected order are wrong.
    """
    gens, group = [], None
    for pm in point_maps:
        if is_identity(pm):
            continue
        if group is not None and group.group.contains(_extend(Q, pm)):
            continue
        gens.append(pm)
        group = CollineationGroup.from_point_maps(Q, gens)
        order = group.order()
        if target is not None:
            if order == target:
                return group
            if target % order:
                raise AssertionError(f"group order {order} does not divide the expected {target}")
    if group is None:
        group = CollineationGroup.from_point_maps(Q, [])
    if target is not None and group.order() != target:
        raise AssertionError(f"generators only reach order {group.order()} of {target}")
    return group


def _extend(Q, pm):
    index = {ln: i for i, ln in enumerate(Q.lines)}
    return tuple(pm) + tuple(Q.num_points + index[tuple(sorted(pm[x] for x in ln))] for ln in Q.lines)


def induced_collineations(Q: GeneralizedQuadrangle, tag: str | None = None, full: bool = True) -> CollineationGroup:
    """The collineation group of a quadrangle built by this package.

    Classical families: transvections, reflections or quasi-reflections of
    the defining form (plus similitudes and field automorphisms when
    ``full``), added until the group reaches the classical order formula.
    With ``full=False`` only isometries are used.  ``t2star``: translations
    plus lifts of the hyperoval stabilizer and the scalars.
    """
    meta = Q.metadata
    actual = meta.get("family") or meta.get("construction")
    if tag is not None and tag != actual:
        raise ValueError(f"tag {tag!r} does not match the construction {actual!r}")
    if actual == "t2star":
        return _t2star_group(Q)
    if actual == "H4dual":
        H = classical_gq("H4", meta["q"])
        G = induced_collineations(H, full=full)
        P, L = H.num_points, H.num_lines
        # dual points are H4 lines and dual lines are H4 points
        gens = [tuple([g[P + i] - P for i in range(L)] + [L + g[p] for p in range(P)]) for g in G.generators]
        return CollineationGroup(Q, gens, order_hint=G.order())
    if actual not in FAMILIES or not hasattr(Q, "space"):
        raise ValueError(f"no collineation recipe for {actual!r}")
    space = Q.space
    F = space.field
    pts = Q.point_vectors
    index = {v: i for i, v in enumerate(pts)}
    pool = [(M, 0) for M in _form_pool(space)]
    if full:
        pool = _extra_generators(space) + pool
    maps = (_semilinear_point_map(pts, index, M, fr, F) for M, fr in pool)
    return _grow(Q, maps, classical_collineation_order(actual, meta["q"], full))


def hyperoval_stabilizer(O):
    """Semilinear maps (M, frobenius power) of PG(2, q) fixing O setwise.

    PGL(3, q) is regular on ordered frames, so each map is fixed by a field
    automorphism and the images of four points of O in general position.
    """
    F = GF(O.q)
    _, f = prime_power(O.q)
    pts = list(O.points)
    frame = pts[:4]
    ptset = set(pts)
    out = []
    for fr in range(f):
        src = [tuple(F.frobenius(x, fr) for x in v) for v in frame]
        A = _frame_matrix(src, F)
        Ainv = mat_inv(A, F)
        for img in permutations(pts, 4):
            B = _frame_matrix(list(img), F)
            M = mat_mul(Ainv, B, F)
            if all(normalize(_apply(v, M, fr, F), F) in ptset for v in pts):
                out.append((M, fr))
    return out


def _frame_matrix(four, F):
    """Rows c_i v_i (i < 3) scaled so that v_3 = sum of the rows."""
    a, b, c, d = four
    rows = (a, b, c)
    # solve (x0, x1, x2) rows = d
    Minv = mat_inv(rows, F)
    coeffs = _apply(d, Minv, 0, F)
    if any(x == 0 for x in coeffs):
        raise ValueError("points are not in general position")
    return tuple(tuple(F.mul(coeffs[i], x) for x in rows[i]) for i in range(3))


def _t2star_group(Q):
    O = Q.hyperoval
    q = O.q
    F = GF(q)
    coords = Q.point_vectors
    index = {v: i for i, v in enumerate(coords)}
    p, f = prime_power(q)
    maps = []
    # translations by a basis of GF(q)^3 over GF(p)
    for pos in range(3):
        for k in range(f):
            c = p**k
            maps.append(tuple(index[v[:pos] + (F.add(v[pos], c),) + v[pos + 1:]] for v in coords))
    for M, fr in hyperoval_stabilizer(O):
        maps.append(tuple(index[_apply(v, M, fr, F)] for v in coords))
    w = F.primitive_element
    maps.append(tuple(index[tuple(F.mul(w, x) for x in v)] for v in coords))
    return _grow(Q, maps)
