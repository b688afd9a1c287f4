"""Finite groupements as explicit tables.

A groupement is a carrier ``{0, ..., n-1}`` with a source map ``s``, a target
map ``t`` and a *total* composition table ``comp`` where ``comp[x][y]`` is
``x # y``.  The axioms only constrain composable pairs, i.e. pairs with
``s(x) == t(y)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence


class StructureError(ValueError):
    """A table that cannot be a finite structure at all (bad shape, bad index)."""


class NotACategoryError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple[int, ...]
    values: tuple

    def __str__(self):
        names = "xyzw"
        where = " ".join(f"{names[i]}={v}" for i, v in enumerate(self.witness))
        lhs, rhs = self.values
        return f"{self.law} at {where}: {lhs} != {rhs}"


@dataclass
class AxiomReport:
    """Per-axiom verdicts; a failing axiom carries its first witness."""

    axioms: dict[str, Violation | None] = field(default_factory=dict)

    def record(self, name: str, violation: Violation | None) -> None:
        self.axioms[name] = violation

    @property
    def ok(self) -> bool:
        return all(v is None for v in self.axioms.values())

    def passed(self, name: str) -> bool:
        return self.axioms[name] is None

    def failures(self) -> dict[str, Violation]:
        return {k: v for k, v in self.axioms.items() if v is not None}

    def first_failure(self) -> tuple[str, Violation] | None:
        for k, v in self.axioms.items():
            if v is not None:
                return k, v
        return None

    def merge(self, other: "AxiomReport", prefix: str = "") -> "AxiomReport":
        for k, v in other.axioms.items():
            self.axioms[prefix + k] = v
        return self

    def to_dict(self) -> dict:
        out = {}
        for name, v in self.axioms.items():
            if v is None:
                out[name] = {"pass": True}
            else:
                out[name] = {
                    "pass": False,
                    "law": v.law,
                    "witness": list(v.witness),
                    "values": [_jsonable(x) for x in v.values],
                }
        return out

    def __str__(self):
        lines = []
        for name, v in self.axioms.items():
            lines.append(f"{name}: pass" if v is None else f"{name}: FAIL ({v})")
        return "\n".join(lines)


def _jsonable(x):
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    return str(x)


def _check_index_table(values, n, what):
    for i, v in enumerate(values):
        if not isinstance(v, int) or isinstance(v, bool):
            raise StructureError(f"{what}[{i}] is not an integer: {v!r}")
        if not 0 <= v < n:
            raise StructureError(f"{what}[{i}] = {v} out of range [0, {n})")


@dataclass(frozen=True)
class FiniteGroupement:
    """Tables ``s``, ``t`` and ``comp`` on the carrier ``range(n)``.

    Construction only validates shape and index ranges; use
    :func:`check_axioms` for GR 1-3.
    """

    s: tuple[int, ...]
    t: tuple[int, ...]
    comp: tuple[tuple[int, ...], ...]

    def __init__(self, s: Sequence[int], t: Sequence[int], comp: Sequence[Sequence[int]]):
        s = tuple(s)
        t = tuple(t)
        comp = tuple(tuple(row) for row in comp)
        n = len(s)
        if n == 0:
            raise StructureError("empty carrier")
        if len(t) != n:
            raise StructureError(f"t has length {len(t)}, expected {n}")
        if len(comp) != n:
            raise StructureError(f"comp has {len(comp)} rows, expected {n}")
        _check_index_table(s, n, "s")
        _check_index_table(t, n, "t")
        for x, row in enumerate(comp):
            if len(row) != n:
                raise StructureError(f"comp[{x}] has length {len(row)}, expected {n}")
            _check_index_table(row, n, f"comp[{x}]")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "comp", comp)
        object.__setattr__(self, "_hash", hash((s, t, comp)))

    def __hash__(self):
        return self._hash

    @property
    def n(self) -> int:
        return len(self.s)

    def mul(self, x: int, y: int) -> int:
        return self.comp[x][y]

    def composable(self, x: int, y: int) -> bool:
        return self.s[x] == self.t[y]

    def composable_pairs(self):
        t_fiber = self.target_fibers()
        for x in range(self.n):
            for y in t_fiber.get(self.s[x], ()):
                yield x, y

    def target_fibers(self) -> dict[int, list[int]]:
        """Map ``o -> [y with t(y) == o]`` in increasing order of ``y``."""
        fib: dict[int, list[int]] = {}
        for y, o in enumerate(self.t):
            fib.setdefault(o, []).append(y)
        return fib

    def source_fibers(self) -> dict[int, list[int]]:
        fib: dict[int, list[int]] = {}
        for x, o in enumerate(self.s):
            fib.setdefault(o, []).append(x)
        return fib

    def __repr__(self):
        return f"FiniteGroupement(s={list(self.s)}, t={list(self.t)}, comp={[list(r) for r in self.comp]})"


# -- axioms -----------------------------------------------------------------


def check_gr1(g: FiniteGroupement) -> Violation | None:
    s, t = g.s, g.t
    for x in range(g.n):
        for law, lhs, rhs in (
            ("ss=s", s[s[x]], s[x]),
            ("st=t", s[t[x]], t[x]),
            ("tt=t", t[t[x]], t[x]),
            ("ts=s", t[s[x]], s[x]),
        ):
            if lhs != rhs:
                return Violation(law, (x,), (lhs, rhs))
    return None


def check_gr2(g: FiniteGroupement) -> Violation | None:
    s, t, comp = g.s, g.t, g.comp
    for x, y in g.composable_pairs():
        xy = comp[x][y]
        if s[xy] != s[y]:
            return Violation("s(x#y)=s(y)", (x, y), (s[xy], s[y]))
        if t[xy] != t[x]:
            return Violation("t(x#y)=t(x)", (x, y), (t[xy], t[x]))
    return None


def check_gr3(g: FiniteGroupement) -> Violation | None:
    s, comp = g.s, g.comp
    t_fiber = g.target_fibers()
    for x in range(g.n):
        for y in t_fiber.get(s[x], ()):
            xy = comp[x][y]
            for z in t_fiber.get(s[y], ()):
                lhs = comp[xy][z]
                rhs = comp[x][comp[y][z]]
                if lhs != rhs:
                    return Violation("(x#y)#z=x#(y#z)", (x, y, z), (lhs, rhs))
    return None


def check_axioms(g: FiniteGroupement) -> AxiomReport:
    """Verdict for GR 1, GR 2 and GR 3 with lexicographically first witnesses."""
    report = AxiomReport()
    report.record("GR 1", check_gr1(g))
    report.record("GR 2", check_gr2(g))
    report.record("GR 3", check_gr3(g))
    return report


def is_groupement(g: FiniteGroupement) -> bool:
    return check_gr1(g) is None and check_gr2(g) is None and check_gr3(g) is None


def check_cat3(g: FiniteGroupement) -> Violation | None:
    for x in range(g.n):
        if g.comp[x][g.s[x]] != x:
            return Violation("x#s(x)=x", (x,), (g.comp[x][g.s[x]], x))
        if g.comp[g.t[x]][x] != x:
            return Violation("t(x)#x=x", (x,), (g.comp[g.t[x]][x], x))
    return None


def is_category(g: FiniteGroupement) -> bool:
    return check_cat3(g) is None


def check_star(g: FiniteGroupement) -> Violation | None:
    for x in range(g.n):
        lhs = g.comp[g.t[x]][x]
        rhs = g.comp[x][g.s[x]]
        if lhs != rhs:
            return Violation("t(x)#x=x#s(x)", (x,), (lhs, rhs))
    return None


def is_star(g: FiniteGroupement) -> bool:
    return check_star(g) is None


# -- derived sets -----------------------------------------------------------


def image(f: Sequence[int]) -> frozenset[int]:
    return frozenset(f)


def fixed_points(f: Sequence[int]) -> frozenset[int]:
    return frozenset(x for x, fx in enumerate(f) if fx == x)


def is_identity_element(g: FiniteGroupement, x: int) -> bool:
    for y in range(g.n):
        if g.s[y] == g.t[x] and g.comp[y][x] != y:
            return False
        if g.s[x] == g.t[y] and g.comp[x][y] != y:
            return False
    return True


def identities(g: FiniteGroupement) -> frozenset[int]:
    return frozenset(x for x in range(g.n) if is_identity_element(g, x))


def invertibles(g: FiniteGroupement) -> frozenset[int]:
    ids = identities(g)
    return frozenset(
        x
        for x in range(g.n)
        if any(g.comp[x][y] in ids and g.comp[y][x] in ids for y in range(g.n))
    )


# -- constructions ----------------------------------------------------------


def dual(g: FiniteGroupement) -> FiniteGroupement:
    n = g.n
    return FiniteGroupement(g.t, g.s, [[g.comp[y][x] for y in range(n)] for x in range(n)])


def presque_egal(g1: FiniteGroupement, g2: FiniteGroupement) -> bool:
    """Equal carriers, sources and targets, and equal composition on composable pairs."""
    if g1.n != g2.n or g1.s != g2.s or g1.t != g2.t:
        return False
    return all(g1.comp[x][y] == g2.comp[x][y] for x, y in g1.composable_pairs())


def canonicalize_comp(g: FiniteGroupement) -> FiniteGroupement:
    """Representative of the almost-equality class: ``x # y = y`` off the composable pairs."""
    n = g.n
    comp = [
        [g.comp[x][y] if g.s[x] == g.t[y] else y for y in range(n)]
        for x in range(n)
    ]
    return FiniteGroupement(g.s, g.t, comp)


def is_canonical(g: FiniteGroupement) -> bool:
    return all(
        g.comp[x][y] == y
        for x in range(g.n)
        for y in range(g.n)
        if g.s[x] != g.t[y]
    )


def one_point() -> FiniteGroupement:
    return FiniteGroupement([0], [0], [[0]])


@dataclass(frozen=True)
class FiniteMonoid:
    table: tuple[tuple[int, ...], ...]
    e: int

    def __init__(self, table: Sequence[Sequence[int]], e: int):
        table = tuple(tuple(r) for r in table)
        n = len(table)
        if n == 0:
            raise StructureError("empty monoid")
        for x, row in enumerate(table):
            if len(row) != n:
                raise StructureError(f"table[{x}] has length {len(row)}, expected {n}")
            _check_index_table(row, n, f"table[{x}]")
        if not 0 <= e < n:
            raise StructureError(f"identity {e} out of range [0, {n})")
        for a in range(n):
            if table[e][a] != a or table[a][e] != a:
                raise StructureError(f"{e} is not neutral for {a}")
            for b in range(n):
                for c in range(n):
                    if table[table[a][b]][c] != table[a][table[b][c]]:
                        raise StructureError(f"not associative at ({a}, {b}, {c})")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "e", e)

    @property
    def n(self) -> int:
        return len(self.table)


def cyclic_group(n: int) -> FiniteMonoid:
    return FiniteMonoid([[(a + b) % n for b in range(n)] for a in range(n)], 0)


def from_monoid(m: FiniteMonoid, c: int) -> FiniteGroupement:
    """The groupement with both structure maps constant at ``c``."""
    if not 0 <= c < m.n:
        raise StructureError(f"element {c} out of range [0, {m.n})")
    return FiniteGroupement([c] * m.n, [c] * m.n, m.table)


# -- classic categories -----------------------------------------------------


@dataclass(frozen=True)
class ClassicCategory:
    """Objects ``0..objects-1``; morphism ``f`` goes ``morphisms[f][0] -> morphisms[f][1]``.

    ``comp[(f, g)]`` is ``f o g`` and is defined exactly when ``src(f) == dst(g)``.
    """

    objects: int
    morphisms: tuple[tuple[int, int], ...]
    identity: tuple[int, ...]
    comp: tuple[tuple[tuple[int, int], int], ...]

    def __init__(self, objects: int, morphisms, identity, comp):
        morphisms = tuple((int(a), int(b)) for a, b in morphisms)
        identity = tuple(identity)
        if isinstance(comp, dict):
            items = comp.items()
        else:
            items = (((f, g), h) for f, g, h in comp)
        table = {}
        for (f, g), h in items:
            table[(f, g)] = h
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "morphisms", morphisms)
        object.__setattr__(self, "identity", identity)
        object.__setattr__(self, "comp", tuple(sorted(table.items())))
        self._validate(table)

    def _validate(self, table):
        nm = len(self.morphisms)
        if self.objects < 1:
            raise StructureError("a category needs at least one object")
        for f, (a, b) in enumerate(self.morphisms):
            if not (0 <= a < self.objects and 0 <= b < self.objects):
                raise StructureError(f"morphism {f} has endpoint out of range")
        if len(self.identity) != self.objects:
            raise StructureError("one identity per object required")
        for o, i in enumerate(self.identity):
            if not 0 <= i < nm or self.morphisms[i] != (o, o):
                raise StructureError(f"identity of object {o} must be a loop at {o}")
        for f in range(nm):
            for g in range(nm):
                key = (f, g)
                if self.src(f) == self.dst(g):
                    if key not in table:
                        raise StructureError(f"composite {f} o {g} missing")
                    h = table[key]
                    if not 0 <= h < nm or self.morphisms[h] != (self.src(g), self.dst(f)):
                        raise StructureError(f"composite {f} o {g} = {h} has wrong type")
                elif key in table:
                    raise StructureError(f"composite {f} o {g} given for a non-composable pair")
        for f in range(nm):
            if table[(f, self.identity[self.src(f)])] != f or table[(self.identity[self.dst(f)], f)] != f:
                raise StructureError(f"identity law fails at {f}")
        for (f, g), fg in table.items():
            for h in range(nm):
                if self.src(g) == self.dst(h) and table[(fg, h)] != table[(f, table[(g, h)])]:
                    raise StructureError(f"not associative at ({f}, {g}, {h})")

    def src(self, f: int) -> int:
        return self.morphisms[f][0]

    def dst(self, f: int) -> int:
        return self.morphisms[f][1]

    def compose(self, f: int, g: int) -> int:
        return dict(self.comp)[(f, g)]


def to_classic(g: FiniteGroupement) -> ClassicCategory:
    """Objects are the identities; the identity at object ``x`` is ``x`` itself."""
    if not is_category(g):
        raise NotACategoryError("to_classic needs a groupement satisfying CAT 3")
    objs = sorted(identities(g))
    index = {x: i for i, x in enumerate(objs)}
    morphisms = [(index[g.s[f]], index[g.t[f]]) for f in range(g.n)]
    comp = {(f, h): g.comp[f][h] for f, h in g.composable_pairs()}
    return ClassicCategory(len(objs), morphisms, objs, comp)


def from_classic(c: ClassicCategory) -> FiniteGroupement:
    nm = len(c.morphisms)
    table = dict(c.comp)
    s = [c.identity[c.src(f)] for f in range(nm)]
    t = [c.identity[c.dst(f)] for f in range(nm)]
    comp = [
        [table[(f, h)] if c.src(f) == c.dst(h) else h for h in range(nm)]
        for f in range(nm)
    ]
    return FiniteGroupement(s, t, comp)


def relabel(g: FiniteGroupement, perm: Sequence[int]) -> FiniteGroupement:
    """Image of ``g`` under the bijection ``x -> perm[x]``."""
    n = g.n
    inv = [0] * n
    for x, px in enumerate(perm):
        inv[px] = x
    s = [perm[g.s[inv[p]]] for p in range(n)]
    t = [perm[g.t[inv[p]]] for p in range(n)]
    comp = [[perm[g.comp[inv[p]][inv[q]]] for q in range(n)] for p in range(n)]
    return FiniteGroupement(s, t, comp)
