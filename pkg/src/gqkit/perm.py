"""Permutation groups via stabilizer chains.

Permutations act on the right: ``x^(gh) = (x^g)^h``.  Internally a
permutation is a tuple of images, ``p[x]`` being the image of ``x``; the
:class:`Permutation` class wraps such a tuple for the public API.

Chains are built by random Schreier-Sims (product replacement, fixed seed)
and then certified by the deterministic Schreier-Sims test: every Schreier
generator at every level must sift to the identity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

DEFAULT_SEED = 20240601


def compose(p, q):
    """``p`` then ``q``."""
    return tuple(q[x] for x in p)


def inverse(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def identity_perm(n: int):
    return tuple(range(n))


def is_identity(p) -> bool:
    return all(i == x for i, x in enumerate(p))


def check_images(images):
    n = len(images)
    if sorted(images) != list(range(n)):
        raise ValueError("image sequence is not a bijection of 0..n-1")
    return tuple(int(x) for x in images)


class Permutation:
    """A bijection of ``{0, ..., degree-1}`` stored as an image tuple."""

    __slots__ = ("images",)

    def __init__(self, images, check: bool = True):
        self.images = check_images(images) if check else tuple(images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> "Permutation":
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if not 0 <= x < degree:
                    raise ValueError(f"point {x} outside 0..{degree - 1}")
                if x in seen:
                    raise ValueError("cycles are not disjoint")
                seen.add(x)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(img, check=False)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(compose(self.images, other.images), check=False)

    def __invert__(self) -> "Permutation":
        return Permutation(inverse(self.images), check=False)

    def __pow__(self, e: int) -> "Permutation":
        base = self if e >= 0 else ~self
        out = Permutation.identity(self.degree)
        for _ in range(abs(e)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return is_identity(self.images)

    def cycles(self):
        seen, out = set(), []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc, j = [i], self.images[i]
            seen.add(i)
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation<{self.degree}>{cyc or '()'}"


def _as_tuple(g):
    return g.images if isinstance(g, Permutation) else tuple(g)


@dataclass
class _Level:
    base_point: int
    gens: list  # strong generators fixing all earlier base points
    transversal: dict  # orbit point -> (u, u^-1) with base_point^u = point


class PermGroup:
    """A permutation group given by generators, with a lazily built chain.

    ``base`` is an optional base prefix; the chain then starts with those
    points.  ``order_hint`` (a known order) lets construction stop as soon
    as the random phase reaches it, which certifies the chain because the
    chain's transversal product never exceeds the true order.
    """

    def __init__(self, generators, degree: int | None = None, base=(), seed: int = DEFAULT_SEED,
                 order_hint: int | None = None):
        gens = [_as_tuple(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group without generators")
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree:
                raise ValueError(f"generator of degree {len(g)} in a group of degree {degree}")
            check_images(g)
        self.degree = degree
        self.generators = [g for g in gens if not is_identity(g)]
        self._base_prefix = [int(b) for b in base]
        for b in self._base_prefix:
            if not 0 <= b < degree:
                raise ValueError(f"base point {b} outside the domain")
        self._seed = seed
        self._order_hint = order_hint
        self._levels: list[_Level] | None = None

    @classmethod
    def _from_levels(cls, degree, levels, seed=DEFAULT_SEED):
        gens = list(levels[0].gens) if levels else []
        G = cls(gens, degree=degree, seed=seed)
        G._levels = levels
        return G

    # -- chain construction -------------------------------------------------

    def _chain(self) -> list[_Level]:
        if self._levels is None:
            self._levels = self._build_chain()
        return self._levels

    def _new_level(self, point, gens):
        lev = _Level(point, list(gens), {})
        self._orbit_transversal(lev)
        return lev

    def _orbit_transversal(self, lev: _Level):
        ident = identity_perm(self.degree)
        trans = {lev.base_point: (ident, ident)}
        queue = [lev.base_point]
        for x in queue:
            u = trans[x][0]
            for s in lev.gens:
                y = s[x]
                if y not in trans:
                    v = compose(u, s)
                    trans[y] = (v, inverse(v))
                    queue.append(y)
        lev.transversal = trans

    def _sift(self, g, levels, start: int = 0):
        """Strip ``g`` through ``levels[start:]``; return (residue, level reached)."""
        for i in range(start, len(levels)):
            lev = levels[i]
            beta = g[lev.base_point]
            hit = lev.transversal.get(beta)
            if hit is None:
                return g, i
            g = compose(g, hit[1])
        return g, len(levels)

    def _next_base_point(self, g, levels):
        used = {lev.base_point for lev in levels}
        for b in self._base_prefix:
            if b not in used and g[b] != b:
                return b
        for x in range(self.degree):
            if g[x] != x and x not in used:
                return x
        raise AssertionError("nontrivial residue fixes every point")  # pragma: no cover

    def _insert(self, h, j, levels):
        """Add residue ``h``, which fixes base points 0..j-1 but not level j."""
        if j == len(levels):
            levels.append(_Level(self._next_base_point(h, levels), [], {}))
        for k in range(j + 1):
            levels[k].gens.append(h)
            self._orbit_transversal(levels[k])

    def _build_chain(self) -> list[_Level]:
        levels: list[_Level] = []
        if not self.generators:
            return levels
        for b in self._base_prefix:
            if b not in [lev.base_point for lev in levels]:
                levels.append(self._new_level(b, []))
        for g in self.generators:
            h, j = self._sift(g, levels)
            if not is_identity(h):
                self._insert(h, j, levels)
        self._random_phase(levels)
        if self._order_hint is None or _product(levels) != self._order_hint:
            self._verify(levels)
        return levels

    def _random_phase(self, levels, quiet_rounds: int = 30):
        rng = random.Random(self._seed)
        pool = list(self.generators)
        while len(pool) < 10:
            pool.append(pool[len(pool) % len(self.generators)])
        acc = identity_perm(self.degree)
        quiet = 0
        target = self._order_hint
        for _ in range(50):
            pool, acc = _shake(pool, acc, rng)
        while quiet < quiet_rounds:
            if target is not None and _product(levels) == target:
                return
            pool, acc = _shake(pool, acc, rng)
            h, j = self._sift(acc, levels)
            if is_identity(h):
                quiet += 1
            else:
                quiet = 0
                self._insert(h, j, levels)

    def _verify(self, levels):
        """Deterministic Schreier-Sims: make every Schreier generator sift."""
        i = len(levels) - 1
        while i >= 0:
            bad = self._first_bad_schreier(levels, i)
            if bad is None:
                i -= 1
            else:
                h, j = bad
                self._insert(h, j, levels)
                i = j

    def _first_bad_schreier(self, levels, i):
        lev = levels[i]
        trans = lev.transversal
        for beta, (u, _) in trans.items():
            for s in lev.gens:
                us = compose(u, s)
                g = compose(us, trans[us[lev.base_point]][1])
                if is_identity(g):
                    continue
                h, j = self._sift(g, levels, i + 1)
                if not is_identity(h):
                    return h, j
        return None

    # -- queries ----------------------------------------------------------

    @property
    def base(self) -> list[int]:
        return [lev.base_point for lev in self._chain()]

    @property
    def strong_generators(self) -> list:
        levels = self._chain()
        return [Permutation(g, check=False) for g in levels[0].gens] if levels else []

    def transversal_sizes(self) -> list[int]:
        return [len(lev.transversal) for lev in self._chain()]

    def order(self) -> int:
        return _product(self._chain())

    def __len__(self):
        return self.order()

    def contains(self, g) -> bool:
        g = _as_tuple(g)
        if len(g) != self.degree:
            return False
        h, _ = self._sift(g, self._chain())
        return is_identity(h)

    __contains__ = contains

    def verify_chain(self) -> bool:
        """Recheck that every Schreier generator at every level sifts to 1."""
        levels = self._chain()
        return all(self._first_bad_schreier(levels, i) is None for i in range(len(levels)))

    def random_element(self, rng: random.Random) -> Permutation:
        g = identity_perm(self.degree)
        for lev in reversed(self._chain()):
            u = rng.choice(list(lev.transversal.values()))[0]
            g = compose(g, u)
        return Permutation(g, check=False)

    def elements(self):
        """Iterate over all elements (only sensible for small groups)."""
        levels = self._chain()

        def rec(i, g):
            if i < 0:
                yield Permutation(g, check=False)
                return
            for u, _ in levels[i].transversal.values():
                yield from rec(i - 1, compose(g, u))

        yield from rec(len(levels) - 1, identity_perm(self.degree))

    def orbit(self, x: int) -> set[int]:
        if not 0 <= x < self.degree:
            raise ValueError(f"point {x} outside 0..{self.degree - 1}")
        seen = {x}
        queue = [x]
        for y in queue:
            for g in self.generators:
                z = g[y]
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
        return seen

    def orbits(self) -> list[list[int]]:
        done = set()
        out = []
        for x in range(self.degree):
            if x not in done:
                orb = sorted(self.orbit(x))
                done.update(orb)
                out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return self.degree == 0 or len(self.orbit(0)) == self.degree

    def stabilizer(self, x: int) -> "PermGroup":
        """The point stabilizer G_x, read off a chain whose base starts at x."""
        if not 0 <= x < self.degree:
            raise ValueError(f"point {x} outside 0..{self.degree - 1}")
        levels = self._chain()
        if not levels:
            return PermGroup([], degree=self.degree, seed=self._seed)
        if levels[0].base_point != x:
            H = PermGroup(levels[0].gens, degree=self.degree, base=[x], seed=self._seed,
                          order_hint=self.order())
            levels = H._chain()
        return self._slice(levels, 1)

    def pointwise_stabilizer(self, points) -> "PermGroup":
        points = list(points)
        levels = self._chain()
        if not points or not levels:
            return self
        if self.base[:len(points)] != points:
            H = PermGroup(levels[0].gens, degree=self.degree, base=points, seed=self._seed,
                          order_hint=self.order())
            levels = H._chain()
        return self._slice(levels, len(points))

    def _slice(self, levels, k):
        tail = [_Level(lev.base_point, list(lev.gens), dict(lev.transversal)) for lev in levels[k:]]
        return PermGroup._from_levels(self.degree, tail, seed=self._seed)

    def with_base(self, base) -> "PermGroup":
        """The same group with a chain whose base starts with ``base``."""
        levels = self._chain()
        gens = levels[0].gens if levels else []
        return PermGroup(gens, degree=self.degree, base=base, seed=self._seed, order_hint=self.order())

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def restrict(self, domain) -> "PermGroup":
        """The action on an invariant subset ``domain`` (relabelled 0..k-1)."""
        domain = list(domain)
        pos = {x: i for i, x in enumerate(domain)}
        gens = []
        for g in self.generators:
            try:
                gens.append(tuple(pos[g[x]] for x in domain))
            except KeyError:
                raise ValueError("domain is not invariant under the group") from None
        return PermGroup(gens, degree=len(domain), seed=self._seed)

    def transitivity_degree(self, max_k: int = 4) -> int:
        """Largest k <= max_k such that the group is k-transitive."""
        if max_k > 4:
            raise ValueError("transitivity degree is only computed up to 4")
        H = self
        fixed: list[int] = []
        for k in range(1, max_k + 1):
            rest = [x for x in range(self.degree) if x not in fixed]
            if not rest or len(H.orbit(rest[0])) != len(rest):
                return k - 1
            fixed.append(rest[0])
            H = self.pointwise_stabilizer(fixed)
        return max_k

    def minimal_block_systems(self) -> list["BlockSystem"]:
        if not self.is_transitive():
            raise ValueError("block systems are only defined for transitive groups")
        systems = self._pair_block_systems()
        return [B for B in systems if not any(C != B and C.refines(B) for C in systems)]

    def is_primitive(self) -> bool:
        return not self.minimal_block_systems()

    def block_systems(self) -> list["BlockSystem"]:
        """Every nontrivial block system, as the join-closure of pair blocks."""
        if not self.is_transitive():
            raise ValueError("block systems are only defined for transitive groups")
        found = {B.blocks: B for B in self._pair_block_systems()}
        blocks0 = {B.block_of(0) for B in found.values()}
        frontier = list(blocks0)
        while frontier:
            new = []
            for A in frontier:
                for C in list(blocks0):
                    seed = sorted(set(A) | set(C))
                    B = minimal_block(self, seed)
                    if B.block_count > 1 and B.block_of(0) not in blocks0:
                        blocks0.add(B.block_of(0))
                        found[B.blocks] = B
                        new.append(B.block_of(0))
            frontier = new
        return sorted(found.values(), key=lambda B: (B.block_size, B.blocks))

    def _pair_block_systems(self):
        out = {}
        for j in range(1, self.degree):
            B = minimal_block(self, [0, j])
            if B.block_count > 1:
                out[B.blocks] = B
        return sorted(out.values(), key=lambda B: (B.block_size, B.blocks))

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, generators={len(self.generators)})"


def _product(levels) -> int:
    out = 1
    for lev in levels:
        out *= len(lev.transversal)
    return out


def _shake(pool, acc, rng):
    i, j = rng.sample(range(len(pool)), 2)
    if rng.random() < 0.5:
        pool[i] = compose(pool[i], pool[j])
    else:
        pool[i] = compose(pool[j], pool[i])
    acc = compose(acc, pool[i])
    return pool, acc


def group_from_generators(gens, degree: int | None = None, seed: int = DEFAULT_SEED) -> PermGroup:
    G = PermGroup(gens, degree=degree, seed=seed)
    G.order()
    return G


@dataclass(frozen=True)
class BlockSystem:
    """A G-invariant partition of the domain into equal blocks."""

    blocks: tuple  # sorted tuple of sorted tuples

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    def block_of(self, x: int) -> tuple:
        for b in self.blocks:
            if x in b:
                return b
        raise ValueError(f"point {x} not covered")

    def refines(self, other: "BlockSystem") -> bool:
        """Every block of self lies inside a block of other."""
        where = {x: i for i, b in enumerate(other.blocks) for x in b}
        return all(len({where[x] for x in b}) == 1 for b in self.blocks)

    def is_invariant(self, G: PermGroup) -> bool:
        keys = set(self.blocks)
        return all(tuple(sorted(g[x] for x in b)) in keys for g in G.generators for b in self.blocks)


def minimal_block(G: PermGroup, seed) -> BlockSystem:
    """The finest block system with ``seed`` inside one block.

    Union-find closure: once two points share a block, so must their images
    under every generator.
    """
    parent = list(range(G.degree))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = []
    a = seed[0]
    for b in seed[1:]:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
            queue.append((a, b))
    while queue:
        a, b = queue.pop()
        for g in G.generators:
            ra, rb = find(g[a]), find(g[b])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
                queue.append((g[a], g[b]))
    classes: dict[int, list[int]] = {}
    for x in range(G.degree):
        classes.setdefault(find(x), []).append(x)
    return BlockSystem(tuple(sorted(tuple(c) for c in classes.values())))
