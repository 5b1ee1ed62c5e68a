"""JSON documents for geometries, groups and sieve reports.

Every document carries ``format_version``.  Emission is deterministic:
keys in a fixed order, lines sorted ascending, LF line endings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .geometry import GeneralizedQuadrangle, IncidenceStructure
from .perm import PermGroup, check_images

FORMAT_VERSION = 1


class DocumentError(ValueError):
    """A document is unreadable or structurally malformed."""


class ClaimedOrderError(ValueError):
    """A group document's claimed order disagrees with the computed one."""


def _require(obj, key, kind, where):
    if key not in obj:
        raise DocumentError(f"{where}: missing field {key!r}")
    val = obj[key]
    if kind is int and (isinstance(val, bool) or not isinstance(val, int)):
        raise DocumentError(f"{where}: field {key!r} must be an integer")
    if kind is not int and not isinstance(val, kind):
        raise DocumentError(f"{where}: field {key!r} must be {kind.__name__}")
    return val


def _check_version(obj, where):
    v = _require(obj, "format_version", int, where)
    if v != FORMAT_VERSION:
        raise DocumentError(f"{where}: unsupported format_version {v}")


def _int_list(val, where):
    if not isinstance(val, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in val):
        raise DocumentError(f"{where}: expected an array of integers")
    return val


@dataclass
class GeometryDocument:
    points: int
    lines: list
    metadata: dict = field(default_factory=dict)
    order: tuple | None = None

    @classmethod
    def from_structure(cls, inc: IncidenceStructure) -> "GeometryDocument":
        order = inc.order if isinstance(inc, GeneralizedQuadrangle) else None
        return cls(inc.num_points, [list(ln) for ln in inc.lines], dict(inc.metadata), order)

    def structure(self) -> IncidenceStructure:
        return IncidenceStructure(self.points, self.lines, self.metadata)

    def to_json(self) -> dict:
        out = {"format_version": FORMAT_VERSION, "kind": "geometry", "metadata": self.metadata,
               "points": self.points, "lines": [sorted(ln) for ln in self.lines]}
        if self.order is not None:
            out["order"] = list(self.order)
        return out

    @classmethod
    def from_json(cls, obj) -> "GeometryDocument":
        where = "geometry document"
        if not isinstance(obj, dict):
            raise DocumentError(f"{where}: expected a JSON object")
        _check_version(obj, where)
        if obj.get("kind", "geometry") != "geometry":
            raise DocumentError(f"{where}: kind is {obj.get('kind')!r}")
        n = _require(obj, "points", int, where)
        if n < 0:
            raise DocumentError(f"{where}: negative point count")
        lines = _require(obj, "lines", list, where)
        lines = [sorted(_int_list(ln, f"{where}, line {i}")) for i, ln in enumerate(lines)]
        meta = obj.get("metadata", {})
        if not isinstance(meta, dict):
            raise DocumentError(f"{where}: metadata must be an object")
        order = obj.get("order")
        if order is not None:
            order = _int_list(order, f"{where}, order")
            if len(order) != 2:
                raise DocumentError(f"{where}: order must be [s, t]")
            order = tuple(order)
        return cls(n, lines, meta, order)


@dataclass
class GroupDocument:
    degree: int
    generators: list
    order: int | None = None

    @classmethod
    def from_group(cls, G, claim_order: bool = True) -> "GroupDocument":
        H = G.group if hasattr(G, "group") else G
        return cls(H.degree, [list(g) for g in H.generators], H.order() if claim_order else None)

    def group(self, seed: int | None = None) -> PermGroup:
        kw = {} if seed is None else {"seed": seed}
        G = PermGroup([tuple(g) for g in self.generators], degree=self.degree, **kw)
        if self.order is not None and G.order() != self.order:
            raise ClaimedOrderError(f"claimed order {self.order}, computed {G.order()}")
        return G

    def to_json(self) -> dict:
        out = {"format_version": FORMAT_VERSION, "kind": "group", "degree": self.degree,
               "generators": [list(g) for g in self.generators]}
        if self.order is not None:
            out["order"] = self.order
        return out

    @classmethod
    def from_json(cls, obj) -> "GroupDocument":
        where = "group document"
        if not isinstance(obj, dict):
            raise DocumentError(f"{where}: expected a JSON object")
        _check_version(obj, where)
        if obj.get("kind", "group") != "group":
            raise DocumentError(f"{where}: kind is {obj.get('kind')!r}")
        degree = _require(obj, "degree", int, where)
        gens = _require(obj, "generators", list, where)
        out = []
        for i, g in enumerate(gens):
            g = _int_list(g, f"{where}, generator {i}")
            if len(g) != degree:
                raise DocumentError(f"{where}: generator {i} has {len(g)} images, degree is {degree}")
            try:
                check_images(g)
            except ValueError as exc:
                raise DocumentError(f"{where}: generator {i}: {exc}") from None
            out.append(g)
        order = obj.get("order")
        if order is not None and (isinstance(order, bool) or not isinstance(order, int) or order < 1):
            raise DocumentError(f"{where}: order must be a positive integer")
        return cls(degree, out, order)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def write_json(path, obj) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8", newline="\n")


def read_json(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def load_geometry(path) -> GeometryDocument:
    return GeometryDocument.from_json(read_json(path))


def load_group(path) -> GroupDocument:
    return GroupDocument.from_json(read_json(path))
