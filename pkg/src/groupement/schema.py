"""JSON file schemas: parsing with position-annotated errors, and serialization.

Rationals are written as strings ``"p/q"`` (or ``"p"``) and normalized on load,
so ``"3/6"`` reads as ``1/2`` and is written back as ``"1/2"``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .alex import AlexandroffGroupement, FiniteTopology
from .core import ClassicCategory, FiniteGroupement, FiniteMonoid, StructureError
from .moore import CubeError, MooreCube
from .morph import GMorphism
from .trans import EndpointMismatch, GTransformation
from .twogr import TwoGroupement


class InputError(ValueError):
    """Anything wrong with an input file; ``path`` locates the offending value."""

    def __init__(self, message: str, path: str = "$"):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}")


class MalformedRational(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class SchemaError(InputError):
    """Missing keys, wrong JSON types, unparsable text."""


class InvalidValue(InputError):
    """Well-formed data that fails a construction-time check (e.g. not a monoid)."""


KINDS = (
    "structure",
    "alexandroff",
    "category",
    "morphism",
    "transformation",
    "topology",
    "cube",
    "twogr",
    "monoid",
)

_RATIONAL = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


# -- primitive readers --------------------------------------------------------


def _obj(d, path: str, keys: tuple[str, ...]) -> dict:
    if not isinstance(d, dict):
        raise SchemaError(f"expected an object, got {type(d).__name__}", path)
    for k in keys:
        if k not in d:
            raise SchemaError(f"missing key {k!r}", path)
    return d


def _list(v, path: str, length: int | None = None) -> list:
    if not isinstance(v, list):
        raise SchemaError(f"expected a list, got {type(v).__name__}", path)
    if length is not None and len(v) != length:
        raise ShapeMismatch(f"expected {length} entries, got {len(v)}", path)
    return v


def _int(v, path: str, minimum: int | None = None) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise SchemaError(f"expected an integer, got {v!r}", path)
    if minimum is not None and v < minimum:
        raise InvalidValue(f"must be at least {minimum}, got {v}", path)
    return v


def _index(v, n: int, path: str) -> int:
    v = _int(v, path)
    if not 0 <= v < n:
        raise IndexOutOfRange(f"index {v} out of range [0, {n})", path)
    return v


def _indices(v, n: int, path: str, length: int) -> list[int]:
    return [_index(x, n, f"{path}[{i}]") for i, x in enumerate(_list(v, path, length))]


def _table(v, n: int, path: str) -> list[list[int]]:
    return [_indices(row, n, f"{path}[{i}]", n) for i, row in enumerate(_list(v, path, n))]


def parse_rational(v, path: str = "$") -> Fraction:
    if isinstance(v, int) and not isinstance(v, bool):
        return Fraction(v)
    if not isinstance(v, str):
        raise MalformedRational(f"expected a rational string 'p/q', got {v!r}", path)
    m = _RATIONAL.match(v)
    if not m:
        raise MalformedRational(f"malformed rational {v!r}", path)
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise MalformedRational(f"zero denominator in {v!r}", path)
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


# -- per-schema parsers -------------------------------------------------------


def parse_structure(d, path: str = "$") -> FiniteGroupement:
    _obj(d, path, ("n", "s", "t", "comp"))
    n = _int(d["n"], f"{path}.n", minimum=1)
    s = _indices(d["s"], n, f"{path}.s", n)
    t = _indices(d["t"], n, f"{path}.t", n)
    comp = _table(d["comp"], n, f"{path}.comp")
    return FiniteGroupement(s, t, comp)


def parse_alexandroff(d, path: str = "$") -> AlexandroffGroupement:
    g = parse_structure(d, path)
    _obj(d, path, ("alpha",))
    a = _index(d["alpha"], g.n, f"{path}.alpha")
    try:
        return AlexandroffGroupement(g, a)
    except StructureError as e:
        raise InvalidValue(str(e), f"{path}.alpha") from None


def parse_category(d, path: str = "$") -> ClassicCategory:
    _obj(d, path, ("objects", "morphisms", "id", "comp"))
    objects = _int(d["objects"], f"{path}.objects", minimum=1)
    morphisms = [
        tuple(_indices(m, objects, f"{path}.morphisms[{i}]", 2))
        for i, m in enumerate(_list(d["morphisms"], f"{path}.morphisms"))
    ]
    nm = len(morphisms)
    ident = _indices(d["id"], nm, f"{path}.id", objects)
    comp = [
        tuple(_indices(c, nm, f"{path}.comp[{i}]", 3))
        for i, c in enumerate(_list(d["comp"], f"{path}.comp"))
    ]
    seen = set()
    for i, (f, g, _) in enumerate(comp):
        if (f, g) in seen:
            raise InvalidValue(f"composite of {f} and {g} listed twice", f"{path}.comp[{i}]")
        seen.add((f, g))
    try:
        return ClassicCategory(objects, morphisms, ident, comp)
    except StructureError as e:
        raise InvalidValue(str(e), path) from None


def parse_morphism(d, path: str = "$", base: Path | None = None) -> GMorphism:
    _obj(d, path, ("src", "dst", "map"))
    src = _structure_ref(d["src"], f"{path}.src", base)
    dst = _structure_ref(d["dst"], f"{path}.dst", base)
    mp = _indices(d["map"], dst.n, f"{path}.map", src.n)
    return GMorphism(src, dst, mp)


def _structure_ref(v, path: str, base: Path | None) -> FiniteGroupement:
    if isinstance(v, str):
        p = Path(v)
        if not p.is_absolute() and base is not None:
            p = base / p
        return parse_structure(_read_json(p), f"{p}:$")
    return parse_structure(v, path)


def parse_transformation(d, path: str = "$", base: Path | None = None) -> GTransformation:
    _obj(d, path, ("f1", "f2", "eta1", "eta2"))
    f1 = parse_morphism(d["f1"], f"{path}.f1", base)
    f2 = parse_morphism(d["f2"], f"{path}.f2", base)
    if f1.src != f2.src or f1.dst != f2.dst:
        raise InvalidValue("f1 and f2 must have the same source and destination", path)
    n1, n2 = f1.src.n, f1.dst.n
    eta1 = _indices(d["eta1"], n2, f"{path}.eta1", n1)
    eta2 = _indices(d["eta2"], n2, f"{path}.eta2", n1)
    try:
        return GTransformation(f1, f2, eta1, eta2)
    except EndpointMismatch as e:
        raise InvalidValue(str(e), path) from None


def parse_topology(d, path: str = "$") -> FiniteTopology:
    _obj(d, path, ("m", "opens"))
    m = _int(d["m"], f"{path}.m", minimum=1)
    opens = []
    for i, u in enumerate(_list(d["opens"], f"{path}.opens")):
        pts = [_index(p, m, f"{path}.opens[{i}][{j}]") for j, p in enumerate(_list(u, f"{path}.opens[{i}]"))]
        if len(set(pts)) != len(pts):
            raise InvalidValue("repeated point in an open set", f"{path}.opens[{i}]")
        opens.append(pts)
    try:
        return FiniteTopology.from_point_lists(m, opens)
    except StructureError as e:
        raise InvalidValue(str(e), f"{path}.opens") from None


def parse_cube(d, path: str = "$") -> MooreCube:
    _obj(d, path, ("k", "dim", "grids", "values"))
    k = _int(d["k"], f"{path}.k", minimum=1)
    dim = _int(d["dim"], f"{path}.dim", minimum=1)
    grids = []
    for i, g in enumerate(_list(d["grids"], f"{path}.grids", k)):
        gp = f"{path}.grids[{i}]"
        vals = [parse_rational(x, f"{gp}[{j}]") for j, x in enumerate(_list(g, gp))]
        if len(vals) < 2:
            raise ShapeMismatch("a grid needs at least 2 entries", gp)
        if vals[0] != 0:
            raise InvalidValue(f"grid must start at 0, got {vals[0]}", f"{gp}[0]")
        for j in range(1, len(vals)):
            if vals[j] <= vals[j - 1]:
                raise InvalidValue(
                    "grid must be strictly increasing (durations are positive)", f"{gp}[{j}]"
                )
        grids.append(vals)

    def walk(v, depth, p):
        if depth == k:
            return [parse_rational(x, f"{p}[{j}]") for j, x in enumerate(_list(v, p, dim))]
        return [walk(x, depth + 1, f"{p}[{j}]") for j, x in enumerate(_list(v, p, len(grids[depth])))]

    values = walk(d["values"], 0, f"{path}.values")
    try:
        return MooreCube(grids, values)
    except CubeError as e:
        raise InvalidValue(str(e), path) from None


def parse_twogr(d, path: str = "$") -> TwoGroupement:
    _obj(d, path, ("n", "st1", "st2"))
    n = _int(d["n"], f"{path}.n", minimum=1)
    a = parse_structure(d["st1"], f"{path}.st1")
    b = parse_structure(d["st2"], f"{path}.st2")
    for name, g in (("st1", a), ("st2", b)):
        if g.n != n:
            raise ShapeMismatch(f"carrier size {g.n} differs from n={n}", f"{path}.{name}.n")
    return TwoGroupement(a, b)


def parse_monoid(d, path: str = "$") -> FiniteMonoid:
    _obj(d, path, ("n", "table", "e"))
    n = _int(d["n"], f"{path}.n", minimum=1)
    table = _table(d["table"], n, f"{path}.table")
    e = _index(d["e"], n, f"{path}.e")
    try:
        return FiniteMonoid(table, e)
    except StructureError as e:
        raise InvalidValue(str(e), path) from None


_PARSERS = {
    "structure": parse_structure,
    "alexandroff": parse_alexandroff,
    "category": parse_category,
    "morphism": parse_morphism,
    "transformation": parse_transformation,
    "topology": parse_topology,
    "cube": parse_cube,
    "twogr": parse_twogr,
    "monoid": parse_monoid,
}


def detect_kind(d) -> str:
    if not isinstance(d, dict):
        raise SchemaError(f"expected an object, got {type(d).__name__}")
    for key, kind in (
        ("st1", "twogr"),
        ("objects", "category"),
        ("f1", "transformation"),
        ("map", "morphism"),
        ("opens", "topology"),
        ("grids", "cube"),
        ("table", "monoid"),
        ("alpha", "alexandroff"),
        ("s", "structure"),
    ):
        if key in d:
            return kind
    raise SchemaError("cannot tell which schema this object follows")


def parse(d, kind: str | None = None, base: Path | None = None):
    kind = kind or detect_kind(d)
    if kind not in _PARSERS:
        raise ValueError(f"unknown kind {kind!r}")
    if kind in ("morphism", "transformation"):
        return _PARSERS[kind](d, "$", base)
    return _PARSERS[kind](d)


def _read_json(path: Path):
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise SchemaError(f"cannot read file: {e.strerror}", str(path)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON: {e.msg} at line {e.lineno} column {e.colno}", str(path)) from None


def load(path, kind: str | None = None):
    """Read and parse a file; errors carry the file name in their position."""
    path = Path(path)
    d = _read_json(path)
    try:
        return parse(d, kind, base=path.parent)
    except InputError as e:
        if e.path.startswith("$"):
            raise type(e)(e.message, f"{path}:{e.path}") from None
        raise


# -- serialization ------------------------------------------------------------


def dump_structure(g: FiniteGroupement) -> dict:
    return {"n": g.n, "s": list(g.s), "t": list(g.t), "comp": [list(r) for r in g.comp]}


def dump_alexandroff(a: AlexandroffGroupement) -> dict:
    return {**dump_structure(a.base), "alpha": a.alpha}


def dump_category(c: ClassicCategory) -> dict:
    return {
        "objects": c.objects,
        "morphisms": [list(m) for m in c.morphisms],
        "id": list(c.identity),
        "comp": [[f, g, h] for (f, g), h in c.comp],
    }


def dump_morphism(f: GMorphism) -> dict:
    return {"src": dump_structure(f.src), "dst": dump_structure(f.dst), "map": list(f.map)}


def dump_transformation(T: GTransformation) -> dict:
    return {
        "f1": dump_morphism(T.f1),
        "f2": dump_morphism(T.f2),
        "eta1": list(T.eta1),
        "eta2": list(T.eta2),
    }


def dump_topology(T: FiniteTopology) -> dict:
    return {"m": T.m, "opens": T.point_lists()}


def dump_cube(c: MooreCube) -> dict:
    return {
        "k": c.k,
        "dim": c.dim,
        "grids": [[format_rational(x) for x in g] for g in c.grids],
        "values": _format_values(c.values),
    }


def _format_values(arr):
    if arr.ndim == 1:
        return [format_rational(x) for x in arr]
    return [_format_values(a) for a in arr]


def dump_twogr(tg: TwoGroupement) -> dict:
    return {"n": tg.n, "st1": dump_structure(tg.st1), "st2": dump_structure(tg.st2)}


def dump_monoid(m: FiniteMonoid) -> dict:
    return {"n": m.n, "table": [list(r) for r in m.table], "e": m.e}


def dump(value) -> dict:
    # AlexTransformation is a GTransformation; the alexis indices are recomputed on load
    for cls, fn in (
        (AlexandroffGroupement, dump_alexandroff),
        (FiniteGroupement, dump_structure),
        (ClassicCategory, dump_category),
        (GMorphism, dump_morphism),
        (GTransformation, dump_transformation),
        (FiniteTopology, dump_topology),
        (MooreCube, dump_cube),
        (TwoGroupement, dump_twogr),
        (FiniteMonoid, dump_monoid),
    ):
        if isinstance(value, cls):
            return fn(value)
    raise TypeError(f"no file schema for {type(value).__name__}")


def dumps(value, indent: int | None = None) -> str:
    return json.dumps(dump(value), indent=indent)
