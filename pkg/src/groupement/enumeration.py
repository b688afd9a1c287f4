"""Brute-force enumeration of small finite groupements, morphisms and transformations.

Everything here is deliberately naive and deterministic: it is the oracle the
rest of the package is tested against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .core import (
    FiniteGroupement,
    check_axioms,
    is_category,
    is_star,
)
from .morph import GMorphism, check_gfonc, is_gmor

CLASSES = ("groupement", "category", "star", "alexandroff", "two-groupement")

# largest carrier each class may be enumerated at by default
FEASIBLE_N = {
    "groupement": 3,
    "category": 3,
    "star": 3,
    "alexandroff": 4,
    "two-groupement": 2,
}

MAP_SPACE_CAP = 1_000_000


class BoundExceeded(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationQuery:
    n: int
    cls: str = "groupement"
    canonical: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.cls not in CLASSES:
            raise ValueError(f"unknown class {self.cls!r}; expected one of {CLASSES}")


def structure_maps(n: int, alpha: int | None = None) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All ``(s, t)`` satisfying GR 1, in lexicographic order.

    GR 1 forces ``Im(s) = Im(t) = Fix(s) = Fix(t)``: pick the fixed set, then
    send every other element to a fixed point.  With ``alpha`` given, no element
    other than ``alpha`` is sent to ``alpha``.
    """
    for s in itertools.product(range(n), repeat=n):
        if any(s[s[x]] != s[x] for x in range(n)):
            continue
        if alpha is not None and any(s[x] == alpha for x in range(n) if x != alpha):
            continue
        fixed = [x for x in range(n) if s[x] == x]
        choices = [(x,) if s[x] == x else tuple(fixed) for x in range(n)]
        for t in itertools.product(*choices):
            if alpha is not None and any(t[x] == alpha for x in range(n) if x != alpha):
                continue
            yield s, t


def _compositions(n, s, t, alpha=None) -> Iterator[list[list[int]]]:
    """Backtrack over composable entries, with GR 2 as domain and GR 3 as propagation."""
    comp = [[y for y in range(n)] for _ in range(n)]
    known = [[False] * n for _ in range(n)]
    t_fiber: dict[int, list[int]] = {}
    s_fiber: dict[int, list[int]] = {}
    for y in range(n):
        t_fiber.setdefault(t[y], []).append(y)
        s_fiber.setdefault(s[y], []).append(y)

    if alpha is not None:
        for x in range(n):
            comp[x][alpha] = x
            comp[alpha][x] = x
            known[x][alpha] = known[alpha][x] = True

    pairs = [
        (x, y)
        for x in range(n)
        for y in t_fiber.get(s[x], ())
        if not known[x][y]
    ]
    # hom(a, b) = elements with source a and target b
    hom: dict[tuple[int, int], list[int]] = {}
    for z in range(n):
        hom.setdefault((s[z], t[z]), []).append(z)

    def consistent(x, y):
        v = comp[x][y]
        # (x, y) as the inner pair (a, b): check (ab)c = a(bc)
        for c in t_fiber.get(s[y], ()):
            if known[y][c] and known[v][c] and known[x][comp[y][c]]:
                if comp[v][c] != comp[x][comp[y][c]]:
                    return False
        # (x, y) as the inner pair (b, c)
        for a in s_fiber.get(t[x], ()):
            if known[a][x] and known[comp[a][x]][y] and known[a][v]:
                if comp[comp[a][x]][y] != comp[a][v]:
                    return False
        # (x, y) as the outer pair ((ab), c) with ab = x
        for a in range(n):
            for b in t_fiber.get(s[a], ()):
                if known[a][b] and comp[a][b] == x and s[b] == t[y]:
                    if known[b][y] and known[a][comp[b][y]]:
                        if v != comp[a][comp[b][y]]:
                            return False
        # (x, y) as the outer pair (a, (bc)) with bc = y
        for b in t_fiber.get(s[x], ()):
            for c in t_fiber.get(s[b], ()):
                if known[b][c] and comp[b][c] == y:
                    if known[x][b] and known[comp[x][b]][c]:
                        if comp[comp[x][b]][c] != v:
                            return False
        return True

    def rec(i):
        if i == len(pairs):
            yield [row[:] for row in comp]
            return
        x, y = pairs[i]
        for v in hom.get((s[y], t[x]), ()):
            comp[x][y] = v
            known[x][y] = True
            if consistent(x, y):
                yield from rec(i + 1)
            known[x][y] = False
        comp[x][y] = y

    if alpha is not None:
        # alpha's row and column are pinned; check GR 2 and GR 3 on them once
        for x in range(n):
            for a, b in ((x, alpha), (alpha, x)):
                if s[a] == t[b] and (s[comp[a][b]] != s[b] or t[comp[a][b]] != t[a]):
                    return
                if not consistent(a, b):
                    return
    yield from rec(0)


def canonical_groupements(n: int, alpha: int | None = None) -> Iterator[FiniteGroupement]:
    """One representative (canonical fallback ``x # y = y``) per almost-equality class."""
    for s, t in structure_maps(n, alpha):
        for comp in _compositions(n, s, t, alpha):
            yield FiniteGroupement(s, t, comp)


def all_fillings(g: FiniteGroupement, alpha: int | None = None) -> Iterator[FiniteGroupement]:
    """Every groupement almost-equal to ``g`` (free values off the composable pairs).

    With ``alpha`` given, its row and column stay pinned.
    """
    n = g.n
    free = [
        (x, y)
        for x in range(n)
        for y in range(n)
        if g.s[x] != g.t[y] and alpha not in (x, y)
    ]
    for values in itertools.product(range(n), repeat=len(free)):
        comp = [list(r) for r in g.comp]
        for (x, y), v in zip(free, values):
            comp[x][y] = v
        yield FiniteGroupement(g.s, g.t, comp)


def naive_groupements(n: int) -> Iterator[FiniteGroupement]:
    """Scan every ``(s, t, comp)`` table on ``n`` elements and keep GR 1-3 passes."""
    if n > 2:
        raise BoundExceeded("naive full scan is limited to n <= 2")
    maps = list(itertools.product(range(n), repeat=n))
    for s in maps:
        for t in maps:
            for flat in itertools.product(range(n), repeat=n * n):
                comp = [flat[i * n:(i + 1) * n] for i in range(n)]
                g = FiniteGroupement(s, t, comp)
                if check_axioms(g).ok:
                    yield g


def _check_bound(q: EnumerationQuery, max_n: int | None):
    bound = FEASIBLE_N[q.cls] if max_n is None else max_n
    if q.n > bound:
        raise BoundExceeded(f"n={q.n} exceeds the feasibility bound {bound} for class {q.cls!r}")


def enum_structures(q: EnumerationQuery, max_n: int | None = None):
    """Stream every structure of class ``q.cls`` on ``q.n`` elements, deterministically."""
    _check_bound(q, max_n)
    if q.cls == "two-groupement":
        yield from _enum_two_groupements(q)
        return
    if q.cls == "alexandroff":
        from .alex import AlexandroffGroupement

        for a in range(q.n):
            for g in canonical_groupements(q.n, alpha=a):
                for h in ([g] if q.canonical else all_fillings(g, a)):
                    yield AlexandroffGroupement(h, a)
        return
    keep = {
        "groupement": lambda g: True,
        "category": is_category,
        "star": is_star,
    }[q.cls]
    for g in canonical_groupements(q.n):
        if not keep(g):
            continue
        if q.canonical:
            yield g
        else:
            # category and star only constrain composable pairs, so fillings stay in class
            yield from all_fillings(g)


def _enum_two_groupements(q: EnumerationQuery):
    from .twogr import TwoGroupement, check_2gr

    base = list(enum_structures(EnumerationQuery(q.n, "groupement", q.canonical), max_n=q.n))
    for a in base:
        for b in base:
            tg = TwoGroupement(a, b)
            if check_2gr(tg).ok:
                yield tg


def count(q: EnumerationQuery, max_n: int | None = None) -> int:
    return sum(1 for _ in enum_structures(q, max_n))


# -- maps -------------------------------------------------------------------


def _maps(n_from: int, n_to: int, choices=None):
    if choices is None:
        if n_to ** n_from > MAP_SPACE_CAP:
            raise BoundExceeded(f"{n_to}^{n_from} maps exceeds the map-space cap")
        return itertools.product(range(n_to), repeat=n_from)
    size = 1
    for c in choices:
        size *= len(c)
    if size > MAP_SPACE_CAP:
        raise BoundExceeded(f"{size} candidate maps exceeds the map-space cap")
    return itertools.product(*choices)


def enum_morphisms(g1: FiniteGroupement, g2: FiniteGroupement, functors_only: bool = False):
    for m in _maps(g1.n, g2.n):
        f = GMorphism(g1, g2, m)
        if is_gmor(f) and (not functors_only or check_gfonc(f)):
            yield f


def enum_transformations(f1: GMorphism, f2: GMorphism):
    """All ``(eta1, eta2): f1 ~> f2`` passing GTRANS 1-2."""
    from .trans import GTransformation, is_gtrans

    b2 = f1.dst
    n1 = f1.src.n
    # GTRANS 1 fixes the source and target of every eta value
    c1 = [
        [z for z in range(b2.n) if b2.s[z] == b2.s[f1.map[x]] and b2.t[z] == b2.s[f2.map[x]]]
        for x in range(n1)
    ]
    c2 = [
        [z for z in range(b2.n) if b2.s[z] == b2.t[f1.map[x]] and b2.t[z] == b2.t[f2.map[x]]]
        for x in range(n1)
    ]
    eta2_choices = list(_maps(n1, b2.n, c2))
    for eta1 in _maps(n1, b2.n, c1):
        for eta2 in eta2_choices:
            T = GTransformation(f1, f2, eta1, eta2)
            if is_gtrans(T):
                yield T


def enum_candidate_pairs(f1: GMorphism, f2: GMorphism):
    """Every pair of maps ``B1 -> B2`` with the endpoints of ``f1``/``f2``, unfiltered."""
    from .trans import GTransformation

    n1, n2 = f1.src.n, f1.dst.n
    all_maps = list(_maps(n1, n2))
    for eta1 in all_maps:
        for eta2 in all_maps:
            yield GTransformation(f1, f2, eta1, eta2)


def enum_alex_morphisms(a1, a2):
    """g-morphisms between Alexandroff groupements sending alexis to alexis."""
    n1, n2 = a1.base.n, a2.base.n
    choices = [[a2.alpha] if x == a1.alpha else list(range(n2)) for x in range(n1)]
    for m in _maps(n1, n2, choices):
        f = GMorphism(a1.base, a2.base, m)
        if is_gmor(f):
            yield f


def enum_alex_transformations(f1: GMorphism, f2: GMorphism, alpha1: int, alpha2: int):
    """All Alexandroff transformations ``f1 ~> f2``, pruned per element by the first axiom."""
    from .alex import AlexTransformation, is_gtralex

    b2 = f1.dst
    n1 = f1.src.n
    c1 = [
        sorted({alpha2} | {z for z in range(b2.n) if b2.s[z] == b2.s[f1.map[x]] and b2.t[z] == b2.s[f2.map[x]]})
        for x in range(n1)
    ]
    c2 = [
        sorted({alpha2} | {z for z in range(b2.n) if b2.s[z] == b2.t[f1.map[x]] and b2.t[z] == b2.t[f2.map[x]]})
        for x in range(n1)
    ]
    eta2_choices = list(_maps(n1, b2.n, c2))
    for eta1 in _maps(n1, b2.n, c1):
        for eta2 in eta2_choices:
            T = AlexTransformation(f1, f2, eta1, eta2, alpha1, alpha2)
            if is_gtralex(T):
                yield T


def monoids(n: int) -> Iterator:
    """Every monoid table on ``range(n)`` (labelled, any neutral element)."""
    from .core import FiniteMonoid, StructureError

    if n > 3:
        raise BoundExceeded("monoid enumeration is limited to n <= 3")
    for e in range(n):
        others = [x for x in range(n) if x != e]
        cells = [(a, b) for a in others for b in others]
        for values in itertools.product(range(n), repeat=len(cells)):
            table = [[0] * n for _ in range(n)]
            for x in range(n):
                table[e][x] = table[x][e] = x
            for (a, b), v in zip(cells, values):
                table[a][b] = v
            try:
                yield FiniteMonoid(table, e)
            except StructureError:
                continue
