"""g-morphisms and g-functors between finite groupements."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    AxiomReport,
    FiniteGroupement,
    StructureError,
    Violation,
    check_axioms,
    check_cat3,
    dual,
)


class ClosureCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class GMorphism:
    src: FiniteGroupement
    dst: FiniteGroupement
    map: tuple[int, ...]

    def __init__(self, src: FiniteGroupement, dst: FiniteGroupement, map: Sequence[int]):
        map = tuple(map)
        if len(map) != src.n:
            raise StructureError(f"map has length {len(map)}, expected {src.n}")
        for i, v in enumerate(map):
            if not 0 <= v < dst.n:
                raise StructureError(f"map[{i}] = {v} out of range [0, {dst.n})")
        object.__setattr__(self, "src", src)
        object.__setattr__(self, "dst", dst)
        object.__setattr__(self, "map", map)
        object.__setattr__(self, "_hash", hash((src, dst, map)))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if not isinstance(other, GMorphism):
            return NotImplemented
        return self._hash == other._hash and self.map == other.map and self.src == other.src and self.dst == other.dst

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __repr__(self):
        return f"GMorphism(n={self.src.n}->{self.dst.n}, map={list(self.map)})"


def identity_gmor(g: FiniteGroupement) -> GMorphism:
    return GMorphism(g, g, range(g.n))


def check_gmor(f: GMorphism) -> AxiomReport:
    b1, b2, m = f.src, f.dst, f.map
    report = AxiomReport()
    violation = None
    for x, y in b1.composable_pairs():
        if b2.s[m[x]] != b2.t[m[y]]:
            violation = Violation("s2(f(x))=t2(f(y))", (x, y), (b2.s[m[x]], b2.t[m[y]]))
            break
        lhs, rhs = m[b1.comp[x][y]], b2.comp[m[x]][m[y]]
        if lhs != rhs:
            violation = Violation("f(x#y)=f(x)#f(y)", (x, y), (lhs, rhs))
            break
    report.record("GMOR", violation)
    return report


def is_gmor(f: GMorphism) -> bool:
    return check_gmor(f).ok


def check_gfonc(f: GMorphism) -> bool:
    """GFONC 1: ``f s1 = s2 f`` and ``f t1 = t2 f`` pointwise."""
    b1, b2, m = f.src, f.dst, f.map
    return all(
        m[b1.s[x]] == b2.s[m[x]] and m[b1.t[x]] == b2.t[m[x]] for x in range(b1.n)
    )


def is_gfonc(f: GMorphism) -> bool:
    return check_gfonc(f) and is_gmor(f)


def compose_gmor(f2: GMorphism, f1: GMorphism) -> GMorphism:
    """``f2 # f1``: the composite when ``f1.dst == f2.src``, otherwise ``f1``."""
    if f1.dst != f2.src:
        return f1
    return GMorphism(f1.src, f2.dst, [f2.map[v] for v in f1.map])


def dual_gmor(f: GMorphism) -> GMorphism:
    return GMorphism(dual(f.src), dual(f.dst), f.map)


def morphism_closure(fs: Iterable[GMorphism], cap: int = 10_000) -> list[GMorphism]:
    """Close ``fs`` under composition of chainable pairs, keeping first-seen order."""
    elems: list[GMorphism] = []
    seen: set[GMorphism] = set()
    for f in fs:
        if f not in seen:
            seen.add(f)
            elems.append(f)
    if len(elems) > cap:
        raise ClosureCapExceeded(f"{len(elems)} morphisms already exceed the cap {cap}")
    frontier = list(elems)
    while frontier:
        new: list[GMorphism] = []
        by_src: dict[FiniteGroupement, list[GMorphism]] = {}
        by_dst: dict[FiniteGroupement, list[GMorphism]] = {}
        for f in elems:
            by_src.setdefault(f.src, []).append(f)
            by_dst.setdefault(f.dst, []).append(f)
        for f in frontier:
            candidates = [(g, f) for g in by_src.get(f.dst, ())]
            candidates += [(f, g) for g in by_dst.get(f.src, ())]
            for a, b in candidates:
                h = compose_gmor(a, b)
                if h not in seen:
                    seen.add(h)
                    new.append(h)
                    if len(seen) > cap:
                        raise ClosureCapExceeded(f"closure exceeds {cap} elements")
        elems.extend(new)
        frontier = new
    return elems


def family_groupement(
    elems: Sequence,
    source,
    target,
    compose,
    composable_only: bool = False,
) -> FiniteGroupement:
    """Index a finite family closed under ``source``, ``target`` and ``compose``.

    ``compose(a, b)`` is the family's ``a # b``.  With ``composable_only`` the
    operation is evaluated only where ``source(a) == target(b)`` and the
    canonical fallback ``b`` is used elsewhere, which yields an almost-equal
    groupement for the usual "otherwise return the right operand" operations.
    Raises ``KeyError`` if the family is not closed.
    """
    index = {e: i for i, e in enumerate(elems)}
    s = [index[source(e)] for e in elems]
    t = [index[target(e)] for e in elems]
    if not composable_only:
        comp = [[index[compose(a, b)] for b in elems] for a in elems]
        return FiniteGroupement(s, t, comp)
    n = len(elems)
    by_target: dict[int, list[int]] = {}
    for j in range(n):
        by_target.setdefault(t[j], []).append(j)
    comp = []
    for i, a in enumerate(elems):
        row = list(range(n))
        for j in by_target.get(s[i], ()):
            row[j] = index[compose(a, elems[j])]
        comp.append(row)
    return FiniteGroupement(s, t, comp)


def verify_morphism_category(
    gs: Sequence[FiniteGroupement],
    fs: Sequence[GMorphism],
    cap: int = 10_000,
) -> AxiomReport:
    """Check GR 1-3 and CAT 3 for the closure of ``fs`` under ``compose_gmor``.

    ``s(f)`` is the identity g-morphism of ``f.src`` and ``t(f)`` that of
    ``f.dst``; both must belong to ``fs``.
    """
    gset = set(gs)
    for f in fs:
        if f.src not in gset or f.dst not in gset:
            raise ValueError("every morphism must have its endpoints in gs")
    ids = {identity_gmor(g) for g in gs}
    missing = ids.difference(fs)
    if missing:
        raise ValueError(f"{len(missing)} identity g-morphisms missing from fs")
    elems = morphism_closure(fs, cap)
    fam = family_groupement(
        elems,
        lambda f: identity_gmor(f.src),
        lambda f: identity_gmor(f.dst),
        compose_gmor,
    )
    report = check_axioms(fam)
    report.record("CAT 3", check_cat3(fam))
    return report
