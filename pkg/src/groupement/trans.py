"""g-transformations between parallel g-morphisms and their three compositions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import AxiomReport, FiniteGroupement, Violation, is_star
from .morph import GMorphism, check_gfonc, compose_gmor, identity_gmor


class NotStarError(ValueError):
    """Raised when an operation needs t(x)#x = x#s(x) and the groupement lacks it."""


class EndpointMismatch(ValueError):
    pass


class SingleMapError(ValueError):
    def __init__(self, failed: list[str]):
        self.failed = failed
        super().__init__("; ".join(failed))


@dataclass(frozen=True, eq=False)
class GTransformation:
    """``(eta1, eta2): f1 ~> f2`` for parallel ``f1, f2: B1 -> B2``."""

    f1: GMorphism
    f2: GMorphism
    eta1: tuple[int, ...]
    eta2: tuple[int, ...]

    def __init__(self, f1: GMorphism, f2: GMorphism, eta1: Sequence[int], eta2: Sequence[int]):
        if f1.src != f2.src or f1.dst != f2.dst:
            raise EndpointMismatch("f1 and f2 must share source and destination groupements")
        eta1, eta2 = tuple(eta1), tuple(eta2)
        n1, n2 = f1.src.n, f1.dst.n
        for name, eta in (("eta1", eta1), ("eta2", eta2)):
            if len(eta) != n1:
                raise EndpointMismatch(f"{name} has length {len(eta)}, expected {n1}")
            for i, v in enumerate(eta):
                if not 0 <= v < n2:
                    raise EndpointMismatch(f"{name}[{i}] = {v} out of range [0, {n2})")
        object.__setattr__(self, "f1", f1)
        object.__setattr__(self, "f2", f2)
        object.__setattr__(self, "eta1", eta1)
        object.__setattr__(self, "eta2", eta2)
        object.__setattr__(self, "_hash", hash((f1, f2, eta1, eta2)))

    @property
    def src(self) -> FiniteGroupement:
        return self.f1.src

    @property
    def dst(self) -> FiniteGroupement:
        return self.f1.dst

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if not isinstance(other, GTransformation):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.eta1 == other.eta1
            and self.eta2 == other.eta2
            and self.f1 == other.f1
            and self.f2 == other.f2
        )

    def __repr__(self):
        return (
            f"GTransformation(f1={list(self.f1.map)}, f2={list(self.f2.map)}, "
            f"eta1={list(self.eta1)}, eta2={list(self.eta2)})"
        )


def _gtrans1(T: GTransformation) -> Violation | None:
    b2 = T.dst
    s2, t2 = b2.s, b2.t
    f1, f2, e1, e2 = T.f1.map, T.f2.map, T.eta1, T.eta2
    for x in range(T.src.n):
        for law, lhs, rhs in (
            ("s2(eta1 x)=s2(f1 x)", s2[e1[x]], s2[f1[x]]),
            ("t2(eta1 x)=s2(f2 x)", t2[e1[x]], s2[f2[x]]),
            ("s2(eta2 x)=t2(f1 x)", s2[e2[x]], t2[f1[x]]),
            ("t2(eta2 x)=t2(f2 x)", t2[e2[x]], t2[f2[x]]),
        ):
            if lhs != rhs:
                return Violation(law, (x,), (lhs, rhs))
    return None


def _pairs_source_first(b1: FiniteGroupement):
    """Composable pairs, all the ``(x, s(x))`` ones first.

    A broken ``eta1 = eta1 s`` always shows up on one of those, so the
    reported witness has that shape.
    """
    fib = b1.target_fibers()
    for x in range(b1.n):
        yield x, b1.s[x]
    for x in range(b1.n):
        for y in fib[b1.s[x]]:
            if y != b1.s[x]:
                yield x, y


def _gtrans2(T: GTransformation, prime: bool = False) -> Violation | None:
    b2 = T.dst
    c = b2.comp
    f1, f2, e1, e2 = T.f1.map, T.f2.map, T.eta1, T.eta2
    law = "f2(y)#eta1(y)=eta2(y)#f1(y)" if prime else "f2(x)#eta1(x)=eta2(x)#f1(x)"
    for x, y in _pairs_source_first(T.src):
        z = y if prime else x
        lhs, rhs = c[f2[z]][e1[z]], c[e2[z]][f1[z]]
        if lhs != rhs:
            return Violation(law, (x, y), (lhs, rhs))
        if e1[x] != e2[y]:
            return Violation("eta1(x)=eta2(y)", (x, y), (e1[x], e2[y]))
    return None


def _derived(T: GTransformation) -> Violation | None:
    s1, t1 = T.src.s, T.src.t
    e1, e2 = T.eta1, T.eta2
    for x in range(T.src.n):
        for law, lhs, rhs in (
            ("eta1=eta2 s1", e1[x], e2[s1[x]]),
            ("eta2=eta1 t1", e2[x], e1[t1[x]]),
            ("eta1=eta1 s1", e1[x], e1[s1[x]]),
            ("eta2=eta2 t1", e2[x], e2[t1[x]]),
        ):
            if lhs != rhs:
                return Violation(law, (x,), (lhs, rhs))
    return None


def check_gtrans(T: GTransformation) -> AxiomReport:
    report = AxiomReport()
    report.record("GTRANS 1", _gtrans1(T))
    report.record("GTRANS 2", _gtrans2(T))
    report.record("derived", _derived(T))
    return report


def is_gtrans(T: GTransformation) -> bool:
    return _gtrans1(T) is None and _gtrans2(T) is None


def check_gtrans2_prime_equiv(T: GTransformation) -> bool:
    """Whether the primed variant of GTRANS 2 gives the same verdict as GTRANS 2."""
    return (_gtrans2(T) is None) == (_gtrans2(T, prime=True) is None)


# -- operators --------------------------------------------------------------


def _morphism_of(x) -> GMorphism:
    return x if isinstance(x, GMorphism) else x.f1


def sigma1(x: GMorphism | GTransformation) -> GTransformation:
    """``(s2 f1, t2 f1): f1 ~> f1``; accepts a g-morphism or a transformation."""
    f = _morphism_of(x)
    b2 = f.dst
    if not is_star(b2):
        raise NotStarError("sigma1 needs a destination satisfying t(x)#x = x#s(x)")
    return GTransformation(f, f, [b2.s[v] for v in f.map], [b2.t[v] for v in f.map])


def tau1(x: GMorphism | GTransformation) -> GTransformation:
    return sigma1(x if isinstance(x, GMorphism) else x.f2)


def otimes(T2: GTransformation, T1: GTransformation) -> GTransformation:
    """Vertical composite ``T2 (x) T1``; falls back to ``T1`` unless ``T2.f1 == T1.f2``."""
    if T2.f1 != T1.f2:
        return T1
    c = T1.dst.comp
    return GTransformation(
        T1.f1,
        T2.f2,
        [c[a][b] for a, b in zip(T2.eta1, T1.eta1)],
        [c[a][b] for a, b in zip(T2.eta2, T1.eta2)],
    )


def whisker_right(T: GTransformation, f: GMorphism) -> GTransformation:
    """``T f``: precompose every map of ``T`` with ``f``."""
    if f.dst != T.src:
        raise EndpointMismatch("whisker_right needs f.dst to be the source groupement of T")
    return GTransformation(
        compose_gmor(T.f1, f),
        compose_gmor(T.f2, f),
        [T.eta1[v] for v in f.map],
        [T.eta2[v] for v in f.map],
    )


def whisker_left(g: GMorphism, T: GTransformation) -> GTransformation:
    """``g T``: postcompose every map of ``T`` with ``g``."""
    if g.src != T.dst:
        raise EndpointMismatch("whisker_left needs g.src to be the destination groupement of T")
    return GTransformation(
        compose_gmor(g, T.f1),
        compose_gmor(g, T.f2),
        [g.map[v] for v in T.eta1],
        [g.map[v] for v in T.eta2],
    )


def sigma0(T: GTransformation) -> GTransformation:
    b = T.src
    i = identity_gmor(b)
    return GTransformation(i, i, b.s, b.t)


def tau0(T: GTransformation) -> GTransformation:
    b = T.dst
    i = identity_gmor(b)
    return GTransformation(i, i, b.s, b.t)


def boxtimes(T2: GTransformation, T1: GTransformation) -> GTransformation:
    """Horizontal composite ``(f2' T1) (x) (T2 f1)``, or ``T1`` when not chainable."""
    if T2.src != T1.dst:
        return T1
    return otimes(whisker_left(T2.f2, T1), whisker_right(T2, T1.f1))


def boxdot(T2: GTransformation, T1: GTransformation) -> GTransformation:
    """Horizontal composite ``(T2 f2) (x) (f1' T1)``, or ``T1`` when not chainable."""
    if T2.src != T1.dst:
        return T1
    return otimes(whisker_right(T2, T1.f2), whisker_left(T2.f1, T1))


# -- single-map presentation -------------------------------------------------


def to_single(T: GTransformation) -> tuple[int, ...]:
    return T.eta1


def single_map_conditions(eta: Sequence[int], f1: GMorphism, f2: GMorphism) -> list[str]:
    """Names of the failing preconditions of :func:`from_single` (empty when all hold)."""
    b1, b2 = f1.src, f1.dst
    s1, t1 = b1.s, b1.t
    s2, t2, c = b2.s, b2.t, b2.comp
    failed = []
    if not (check_gfonc(f1) and check_gfonc(f2)):
        failed.append("f1 and f2 must be g-functors")
    rng = range(b1.n)
    if not all(s2[eta[s1[x]]] == s2[f1.map[x]] and t2[eta[s1[x]]] == s2[f2.map[x]] for x in rng):
        failed.append("s2(eta(s1 x)) = s2(f1 x) and t2(eta(s1 x)) = s2(f2 x)")
    if not all(eta[x] == eta[s1[x]] for x in rng):
        failed.append("eta = eta s1")
    if not all(c[f2.map[x]][eta[s1[x]]] == c[eta[t1[x]]][f1.map[x]] for x in rng):
        failed.append("f2(x) # eta(s1 x) = eta(t1 x) # f1(x)")
    return failed


def from_single(eta: Sequence[int], f1: GMorphism, f2: GMorphism) -> GTransformation:
    """``(eta, eta t1): f1 ~> f2`` from a single component map."""
    eta = tuple(eta)
    if len(eta) != f1.src.n or any(not 0 <= v < f1.dst.n for v in eta):
        raise EndpointMismatch("eta must map the source carrier into the destination carrier")
    failed = single_map_conditions(eta, f1, f2)
    if failed:
        raise SingleMapError(failed)
    return GTransformation(f1, f2, eta, [eta[v] for v in f1.src.t])
