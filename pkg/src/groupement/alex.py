"""Alexandroff groupements: a distinguished two-sided neutral element, the alexis."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import (
    AxiomReport,
    FiniteGroupement,
    FiniteMonoid,
    StructureError,
    Violation,
)
from .morph import GMorphism, compose_gmor, identity_gmor, is_gmor
from .trans import EndpointMismatch, GTransformation


class AlexisAmbiguity(RuntimeError):
    """Two distinct alexis candidates were found; impossible in a groupement."""


class DiscontinuousMap(ValueError):
    pass


def check_galex(g: FiniteGroupement, a: int) -> AxiomReport:
    report = AxiomReport()
    v1 = None
    for x in range(g.n):
        if x != a and (g.s[x] == a or g.t[x] == a):
            v1 = Violation("x!=a implies s(x),t(x)!=a", (x,), (g.s[x], g.t[x]))
            break
    report.record("GALEX 1", v1)
    v2 = None
    for x in range(g.n):
        if g.comp[x][a] != x:
            v2 = Violation("x#a=x", (x,), (g.comp[x][a], x))
            break
        if g.comp[a][x] != x:
            v2 = Violation("a#x=x", (x,), (g.comp[a][x], x))
            break
    report.record("GALEX 2", v2)
    return report


@dataclass(frozen=True)
class AlexandroffGroupement:
    base: FiniteGroupement
    alpha: int

    def __post_init__(self):
        if not 0 <= self.alpha < self.base.n:
            raise StructureError(f"alexis {self.alpha} out of range [0, {self.base.n})")
        report = check_galex(self.base, self.alpha)
        if not report.ok:
            raise StructureError(f"alexis {self.alpha} rejected: {report.first_failure()[1]}")

    @property
    def n(self) -> int:
        return self.base.n


def alexis_candidates(g: FiniteGroupement) -> list[int]:
    return [a for a in range(g.n) if check_galex(g, a).ok]


def find_alexis(g: FiniteGroupement) -> int | None:
    cands = alexis_candidates(g)
    if len(cands) > 1:
        a, b = cands[:2]
        raise AlexisAmbiguity(f"alexis candidates {a} and {b}; {a}#{b} = {g.comp[a][b]}")
    return cands[0] if cands else None


def complete(g: FiniteGroupement) -> AlexandroffGroupement:
    """Adjoin a fresh alexis at index ``n``."""
    n = g.n
    a = n
    s = list(g.s) + [a]
    t = list(g.t) + [a]
    comp = [list(row) + [x] for x, row in enumerate(g.comp)]
    comp.append(list(range(n + 1)))
    return AlexandroffGroupement(FiniteGroupement(s, t, comp), a)


def monoid_hat(m: FiniteMonoid) -> AlexandroffGroupement:
    """Monoid elements ``0..k-1``, then ``beta = k`` (common source/target), ``alpha = k+1``."""
    k = m.n
    beta, alpha = k, k + 1
    n = k + 2
    s = [beta] * (k + 1) + [alpha]
    comp = []
    for x in range(n):
        row = []
        for y in range(n):
            if x == alpha:
                row.append(y)
            elif y == alpha:
                row.append(x)
            elif x < k and y < k:
                row.append(m.table[x][y])
            else:
                row.append(beta)
        comp.append(row)
    return AlexandroffGroupement(FiniteGroupement(s, s, comp), alpha)


# -- finite topologies --------------------------------------------------------


def _bits(points: Iterable[int]) -> int:
    mask = 0
    for p in points:
        mask |= 1 << p
    return mask


def _points(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


@dataclass(frozen=True)
class FiniteTopology:
    """Open sets of a topology on ``range(m)``, as bitmasks in increasing order."""

    m: int
    opens: tuple[int, ...]

    def __init__(self, m: int, opens: Iterable[int]):
        opens = list(opens)
        if m < 1:
            raise StructureError("topology needs a non-empty ground set")
        full = (1 << m) - 1
        if len(set(opens)) != len(opens):
            raise StructureError("duplicate open sets")
        for u in opens:
            if not 0 <= u <= full:
                raise StructureError(f"open set {_points(u)} not inside range({m})")
        oset = set(opens)
        if 0 not in oset or full not in oset:
            raise StructureError("the empty set and the full set must be open")
        for u in opens:
            for v in opens:
                if u | v not in oset or u & v not in oset:
                    raise StructureError(f"opens {_points(u)} and {_points(v)} break closure")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "opens", tuple(sorted(opens)))

    @classmethod
    def from_point_lists(cls, m: int, opens: Iterable[Iterable[int]]) -> "FiniteTopology":
        masks = []
        for u in opens:
            u = list(u)
            if any(not 0 <= p < m for p in u):
                raise StructureError(f"open set {u} has points outside range({m})")
            masks.append(_bits(u))
        return cls(m, masks)

    @property
    def full(self) -> int:
        return (1 << self.m) - 1

    def point_lists(self) -> list[list[int]]:
        return [_points(u) for u in self.opens]

    def index(self, mask: int) -> int:
        return self.opens.index(mask)


def topologies(m: int) -> Iterator[FiniteTopology]:
    """Every topology on ``range(m)``; exhaustive over families of subsets, so keep ``m <= 3``."""
    if m > 3:
        raise ValueError("topology enumeration is limited to m <= 3")
    full = (1 << m) - 1
    middle = list(range(1, full))
    for r in range(len(middle) + 1):
        for chosen in itertools.combinations(middle, r):
            opens = {0, full, *chosen}
            if all(u | v in opens and u & v in opens for u in opens for v in opens):
                yield FiniteTopology(m, opens)


def discrete(m: int) -> FiniteTopology:
    return FiniteTopology(m, range(1 << m))


def indiscrete(m: int) -> FiniteTopology:
    return FiniteTopology(m, {0, (1 << m) - 1})


def sierpinski() -> FiniteTopology:
    return FiniteTopology(2, [0, 0b10, 0b11])


def topology_union_groupement(T: FiniteTopology) -> AlexandroffGroupement:
    """Opens under union; every open has source and target ``X``; alexis is the empty set."""
    ops = T.opens
    idx = {u: i for i, u in enumerate(ops)}
    x = idx[T.full]
    s = [x] * len(ops)
    comp = [[idx[u | v] for v in ops] for u in ops]
    return AlexandroffGroupement(FiniteGroupement(s, s, comp), idx[0])


def topology_inter_groupement(T: FiniteTopology) -> AlexandroffGroupement:
    """Opens under intersection; source and target are the identity; alexis is ``X``."""
    ops = T.opens
    idx = {u: i for i, u in enumerate(ops)}
    s = list(range(len(ops)))
    comp = [[idx[u & v] for v in ops] for u in ops]
    return AlexandroffGroupement(FiniteGroupement(s, s, comp), idx[T.full])


def preimage(f: Sequence[int], mask: int) -> int:
    return _bits(p for p, q in enumerate(f) if mask >> q & 1)


def is_continuous(f: Sequence[int], T1: FiniteTopology, T2: FiniteTopology) -> bool:
    if len(f) != T1.m or any(not 0 <= q < T2.m for q in f):
        return False
    opens1 = set(T1.opens)
    return all(preimage(f, u) in opens1 for u in T2.opens)


def preimage_morphism(
    f: Sequence[int], T1: FiniteTopology, T2: FiniteTopology, kind: str = "union"
) -> GMorphism:
    """``u -> f^-1(u)`` from the groupement of ``T2`` to that of ``T1`` (contravariant)."""
    f = list(f)
    if len(f) != T1.m or any(not 0 <= q < T2.m for q in f):
        raise DiscontinuousMap(f"point map must send range({T1.m}) into range({T2.m})")
    if not is_continuous(f, T1, T2):
        bad = next(u for u in T2.opens if preimage(f, u) not in set(T1.opens))
        raise DiscontinuousMap(f"preimage of open {_points(bad)} is {_points(preimage(f, bad))}, not open")
    build = {"union": topology_union_groupement, "inter": topology_inter_groupement}[kind]
    g1, g2 = build(T1), build(T2)
    return GMorphism(g2.base, g1.base, [T1.index(preimage(f, u)) for u in T2.opens])


def check_malex(f: GMorphism, a1: int, a2: int) -> bool:
    return f.map[a1] == a2


def is_alex_morphism(f: GMorphism, a1: int, a2: int) -> bool:
    return check_malex(f, a1, a2) and is_gmor(f)


def tilde_functor(f: GMorphism) -> GMorphism:
    """Extend ``f`` to the completions, sending the new alexis to the new alexis."""
    c1, c2 = complete(f.src), complete(f.dst)
    return GMorphism(c1.base, c2.base, list(f.map) + [c2.alpha])


# -- Alexandroff transformations ----------------------------------------------


class AlexTransformation(GTransformation):
    """A g-transformation whose endpoint groupements carry alexis ``alpha1``, ``alpha2``."""

    def __init__(self, f1, f2, eta1, eta2, alpha1: int | None = None, alpha2: int | None = None):
        super().__init__(f1, f2, eta1, eta2)
        if alpha1 is None:
            alpha1 = find_alexis(f1.src)
        if alpha2 is None:
            alpha2 = find_alexis(f1.dst)
        if alpha1 is None or alpha2 is None:
            raise StructureError("endpoint groupements must have an alexis")
        object.__setattr__(self, "alpha1", alpha1)
        object.__setattr__(self, "alpha2", alpha2)

    @classmethod
    def of(cls, T: GTransformation, alpha1=None, alpha2=None) -> "AlexTransformation":
        return cls(T.f1, T.f2, T.eta1, T.eta2, alpha1, alpha2)


def _alex1(T: AlexTransformation) -> Violation | None:
    b2 = T.dst
    s2, t2, a2 = b2.s, b2.t, T.alpha2
    f1, f2 = T.f1.map, T.f2.map
    for x in range(T.src.n):
        e1, e2 = T.eta1[x], T.eta2[x]
        if e1 != a2 and (s2[e1] != s2[f1[x]] or t2[e1] != s2[f2[x]]):
            return Violation("eta1(x)=a2 or endpoints of eta1(x) match", (x,), (e1, a2))
        if e2 != a2 and (s2[e2] != t2[f1[x]] or t2[e2] != t2[f2[x]]):
            return Violation("eta2(x)=a2 or endpoints of eta2(x) match", (x,), (e2, a2))
    return None


def _alex2(T: GTransformation) -> Violation | None:
    b1, c = T.src, T.dst.comp
    f1, f2, e1, e2 = T.f1.map, T.f2.map, T.eta1, T.eta2
    fib = b1.target_fibers()
    for x in range(b1.n):
        for y in fib.get(b1.s[x], ()):
            lhs, rhs = c[f2[x]][e1[x]], c[e2[x]][f1[x]]
            if lhs != rhs:
                return Violation("f2(x)#eta1(x)=eta2(x)#f1(x)", (x, y), (lhs, rhs))
            if e1[x] != e2[y]:
                return Violation("eta1(x)=eta2(y)", (x, y), (e1[x], e2[y]))
    return None


def _alex_consequences(T: GTransformation) -> Violation | None:
    s1, t1 = T.src.s, T.src.t
    e1, e2 = T.eta1, T.eta2
    for x in range(T.src.n):
        if e1[x] != e2[s1[x]]:
            return Violation("eta1(x)=eta2(s1 x)", (x,), (e1[x], e2[s1[x]]))
        if e1[t1[x]] != e2[x]:
            return Violation("eta1(t1 x)=eta2(x)", (x,), (e1[t1[x]], e2[x]))
    return None


def check_gtralex(T: AlexTransformation) -> AxiomReport:
    report = AxiomReport()
    report.record("GTRALEX 1", _alex1(T))
    report.record("GTRALEX 2", _alex2(T))
    report.record("consequences", _alex_consequences(T))
    return report


def is_gtralex(T: AlexTransformation) -> bool:
    return _alex1(T) is None and _alex2(T) is None


def const_alexis_trans(f: GMorphism, alpha1: int | None = None, alpha2: int | None = None) -> AlexTransformation:
    if alpha2 is None:
        alpha2 = find_alexis(f.dst)
    n = f.src.n
    return AlexTransformation(f, f, [alpha2] * n, [alpha2] * n, alpha1, alpha2)


def alex_compose(T2: AlexTransformation, T1: AlexTransformation) -> AlexTransformation:
    """Pointwise composite when ``T2.f1 == T1.f2``, otherwise ``T1``."""
    if T2.f1 != T1.f2:
        return T1
    c = T1.dst.comp
    return AlexTransformation(
        T1.f1,
        T2.f2,
        [c[a][b] for a, b in zip(T2.eta1, T1.eta1)],
        [c[a][b] for a, b in zip(T2.eta2, T1.eta2)],
        T1.alpha1,
        T1.alpha2,
    )


def alex_whisker_right(T: AlexTransformation, f: GMorphism, alpha0: int | None = None) -> AlexTransformation:
    if f.dst != T.src:
        raise EndpointMismatch("whisker_right needs f.dst to be the source groupement of T")
    return AlexTransformation(
        compose_gmor(T.f1, f),
        compose_gmor(T.f2, f),
        [T.eta1[v] for v in f.map],
        [T.eta2[v] for v in f.map],
        alpha0,
        T.alpha2,
    )


def alex_whisker_left(g: GMorphism, T: AlexTransformation, alpha3: int | None = None) -> AlexTransformation:
    if g.src != T.dst:
        raise EndpointMismatch("whisker_left needs g.src to be the destination groupement of T")
    return AlexTransformation(
        compose_gmor(g, T.f1),
        compose_gmor(g, T.f2),
        [g.map[v] for v in T.eta1],
        [g.map[v] for v in T.eta2],
        T.alpha1,
        alpha3,
    )


def alex_sigma0(T: AlexTransformation) -> AlexTransformation:
    i = identity_gmor(T.src)
    return const_alexis_trans(i, T.alpha1, T.alpha1)


def alex_tau0(T: AlexTransformation) -> AlexTransformation:
    i = identity_gmor(T.dst)
    return const_alexis_trans(i, T.alpha2, T.alpha2)


def alex_sigma1(T: AlexTransformation) -> AlexTransformation:
    return const_alexis_trans(T.f1, T.alpha1, T.alpha2)


def alex_tau1(T: AlexTransformation) -> AlexTransformation:
    return const_alexis_trans(T.f2, T.alpha1, T.alpha2)


def alex_boxtimes(T2: AlexTransformation, T1: AlexTransformation) -> AlexTransformation:
    """``(f2' T1) # (T2 f1)`` when ``T2`` starts where ``T1`` ends, otherwise ``T1``."""
    if T2.src != T1.dst:
        return T1
    return alex_compose(
        alex_whisker_left(T2.f2, T1, T2.alpha2),
        alex_whisker_right(T2, T1.f1, T1.alpha1),
    )


def alex_boxdot(T2: AlexTransformation, T1: AlexTransformation) -> AlexTransformation:
    """``(T2 f2) # (f1' T1)`` when ``T2`` starts where ``T1`` ends, otherwise ``T1``."""
    if T2.src != T1.dst:
        return T1
    return alex_compose(
        alex_whisker_right(T2, T1.f2, T1.alpha1),
        alex_whisker_left(T2.f1, T1, T2.alpha2),
    )
