"""Generalized quadrangles from forms, hyperovals and coset geometries."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .fields import GF, prime_power
from .forms import FormSpace, ResourceCapError, enumerate_totally_singular, singular_points
from .geometry import GeneralizedQuadrangle, IncidenceStructure, dual, verify_gq
from .linalg import normalize, projective_points, span_points
from .perm import PermGroup, compose, inverse

# family tag -> (form kind, dimension, order as a function of q)
FAMILIES = {
    "W3": ("symplectic", 4, lambda q: (q, q)),
    "Q4": ("parabolic", 5, lambda q: (q, q)),
    "Qminus5": ("elliptic", 6, lambda q: (q, q * q)),
    "H3": ("hermitian", 4, lambda q: (q * q, q)),
    "H4": ("hermitian", 5, lambda q: (q * q, q ** 3)),
    "H4dual": ("hermitian", 5, lambda q: (q ** 3, q * q)),
}

MAX_Q = {"H4": 4, "H4dual": 4}
DEFAULT_MAX_Q = 8
# |P| * |L| bound for the exhaustive antiflag check
DEFAULT_SIZE_CAP = 5 * 10**7


@dataclass(frozen=True)
class ClassicalFamily:
    tag: str
    q: int

    def __post_init__(self):
        if self.tag not in FAMILIES:
            raise ValueError(f"unknown family {self.tag!r}; expected one of {sorted(FAMILIES)}")
        prime_power(self.q)

    @property
    def order(self) -> tuple[int, int]:
        return FAMILIES[self.tag][2](self.q)

    @property
    def form(self) -> tuple[str, int]:
        kind, n, _ = FAMILIES[self.tag]
        return kind, n

    def __str__(self):
        return f"{self.tag}({self.q})"


def _classical_incidence(kind, n, q):
    space = FormSpace.standard(kind, n, q)
    pts = singular_points(space)
    index = {p: i for i, p in enumerate(pts)}
    subspaces = sorted(enumerate_totally_singular(space, 2), key=lambda S: S.basis)
    lines = [sorted(index[p] for p in span_points(S.basis, space.field)) for S in subspaces]
    return space, pts, [S.basis for S in subspaces], lines


def classical_gq(family, q: int | None = None, size_cap: int = DEFAULT_SIZE_CAP) -> GeneralizedQuadrangle:
    """The classical quadrangle of a family: totally singular points and lines."""
    fam = family if isinstance(family, ClassicalFamily) else ClassicalFamily(family, q)
    cap = MAX_Q.get(fam.tag, DEFAULT_MAX_Q)
    if fam.q > cap:
        raise ResourceCapError(f"{fam} exceeds the cap q <= {cap}")
    s, t = fam.order
    if (s + 1) * (s * t + 1) * (t + 1) * (s * t + 1) > size_cap:
        raise ResourceCapError(f"{fam} has too many antiflags for exhaustive verification")
    if fam.tag == "H4dual":
        Q = dual(classical_gq(ClassicalFamily("H4", fam.q), size_cap=size_cap))
        Q.metadata.update(family="H4dual", q=fam.q)
        return Q
    kind, n = fam.form
    space, pts, bases, lines = _classical_incidence(kind, n, fam.q)
    inc = IncidenceStructure(len(pts), lines, {"family": fam.tag, "q": fam.q})
    Q = verify_gq(inc)
    if Q.order != fam.order:
        raise AssertionError(f"{fam} verified with order {Q.order}, expected {fam.order}")
    Q.space = space
    Q.point_vectors = pts
    Q.line_bases = bases
    return Q


@dataclass(frozen=True)
class Hyperoval:
    q: int
    points: tuple  # normalized vectors of PG(2, q)

    def __post_init__(self):
        if len(self.points) != self.q + 2:
            raise ValueError(f"a hyperoval of PG(2,{self.q}) has {self.q + 2} points")
        F = GF(self.q)
        for a, b, c in combinations(self.points, 3):
            if _det3(a, b, c, F) == 0:
                raise ValueError(f"points {a}, {b}, {c} are collinear")


def _det3(a, b, c, F):
    add, mul, sub = F.add, F.mul, F.sub
    t1 = mul(a[0], sub(mul(b[1], c[2]), mul(b[2], c[1])))
    t2 = mul(a[1], sub(mul(b[0], c[2]), mul(b[2], c[0])))
    t3 = mul(a[2], sub(mul(b[0], c[1]), mul(b[1], c[0])))
    return add(sub(t1, t2), t3)


def regular_hyperoval(q: int) -> Hyperoval:
    """The conic ``(1 : x : x^2)`` plus its nucleus and ``(0:0:1)``."""
    p, _ = prime_power(q)
    if p != 2:
        raise ValueError(f"hyperovals exist only for even q, got q={q}")
    F = GF(q)
    pts = [(1, x, F.mul(x, x)) for x in F.elements()]
    pts += [(0, 1, 0), (0, 0, 1)]
    return Hyperoval(q, tuple(pts))


def t2_star(O: Hyperoval) -> GeneralizedQuadrangle:
    """The quadrangle of order (q-1, q+1) on the affine points of AG(3, q).

    The hyperoval lies in the plane at infinity; lines are the affine lines
    whose direction is a point of O.  Point ``(a, b, c)`` has index
    ``a*q^2 + b*q + c`` in the field encoding.
    """
    if not isinstance(O, Hyperoval):
        raise TypeError("t2_star expects a Hyperoval")
    q = O.q
    F = GF(q)
    coords = list(product(range(q), repeat=3))
    index = {v: i for i, v in enumerate(coords)}
    lines = []
    for d in O.points:
        seen = set()
        for v in coords:
            if index[v] in seen:
                continue
            ln = sorted(index[tuple(F.add(x, F.mul(lam, y)) for x, y in zip(v, d))] for lam in F.elements())
            seen.update(ln)
            lines.append(ln)
    inc = IncidenceStructure(len(coords), lines, {"construction": "t2star", "q": q})
    Q = verify_gq(inc)
    Q.point_vectors = coords
    Q.hyperoval = O
    return Q


# -- coset geometries ------------------------------------------------------


class _CosetSpace:
    """Right cosets ``A x`` of a subgroup A of G, keyed canonically.

    A's chain is built on G's base, so an element of G is determined by its
    base images.  Walking down A's chain and at each level choosing the
    element of ``A x`` with the least image of the next base point yields a
    canonical element of the coset, whose base images are the key.
    """

    def __init__(self, G: PermGroup, A: PermGroup):
        self.base = G.base
        self.A = A.with_base(self.base)
        self.levels = self.A._chain()

    def key(self, x) -> tuple:
        g = x
        for lev in self.levels:
            best = None
            for beta, (u, _) in lev.transversal.items():
                img = g[beta]
                if best is None or img < best[0]:
                    best = (img, u)
            g = compose(best[1], g)
        return tuple(g[b] for b in self.base)

    def enumerate(self, G: PermGroup):
        """Coset representatives, by closure of ``A`` under right multiplication."""
        ident = tuple(range(G.degree))
        reps = [ident]
        index = {self.key(ident): 0}
        for x in reps:
            for g in G.generators:
                y = compose(x, g)
                k = self.key(y)
                if k not in index:
                    index[k] = len(reps)
                    reps.append(y)
        return reps, index


def _as_subgroup(G: PermGroup, H, name):
    if not isinstance(H, PermGroup):
        H = PermGroup(list(H), degree=G.degree)
    if H.degree != G.degree:
        raise ValueError(f"{name} has degree {H.degree}, G has degree {G.degree}")
    for h in H.generators:
        if not G.contains(h):
            raise ValueError(f"{name} is not a subgroup of G: a generator lies outside G")
    return H


@dataclass
class CosetGeometry:
    structure: IncidenceStructure
    point_reps: list
    line_reps: list
    action: list  # generator images on points followed by lines


def coset_geometry_action(G: PermGroup, A, B, cap: int = 10**6) -> CosetGeometry:
    """Build the coset geometry of (G; A, B) and G's action on it.

    ``A x`` and ``B y`` meet iff ``A x`` is one of the A-cosets ``A b y``
    with b in B; those are the images under y of the B-orbit of the coset A.
    """
    A = _as_subgroup(G, A, "A")
    B = _as_subgroup(G, B, "B")
    nG = G.order()
    nP, nL = nG // A.order(), nG // B.order()
    if nP * nL > cap:
        raise ResourceCapError(f"{nP} x {nL} coset pairs exceed the cap {cap}")
    ca, cb = _CosetSpace(G, A), _CosetSpace(G, B)
    preps, pindex = ca.enumerate(G)
    lreps, lindex = cb.enumerate(G)
    assert len(preps) == nP and len(lreps) == nL
    # A-cosets meeting B: the orbit of the coset A under right multiplication by B
    ident = tuple(range(G.degree))
    orbit = [ident]
    seen = {ca.key(ident)}
    for x in orbit:
        for b in B.generators:
            y = compose(x, b)
            k = ca.key(y)
            if k not in seen:
                seen.add(k)
                orbit.append(y)
    lines = []
    for y in lreps:
        lines.append(sorted(pindex[ca.key(compose(x, y))] for x in orbit))
    action = []
    for g in G.generators:
        img = [pindex[ca.key(compose(x, g))] for x in preps]
        img += [nP + lindex[cb.key(compose(y, g))] for y in lreps]
        action.append(tuple(img))
    inc = IncidenceStructure(nP, lines, {"construction": "coset"}, allow_repeated=True)
    return CosetGeometry(inc, preps, lreps, action)


def coset_geometry(G: PermGroup, A, B, cap: int = 10**6) -> IncidenceStructure:
    """Points are right cosets of A, lines right cosets of B, incident when they meet."""
    return coset_geometry_action(G, A, B, cap).structure
