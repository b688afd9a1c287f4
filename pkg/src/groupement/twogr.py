"""Strict 2-groupements: two groupement structures on one carrier linked by interchange."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .alex import FiniteTopology, topology_inter_groupement, topology_union_groupement
from .core import (
    AxiomReport,
    FiniteGroupement,
    NotACategoryError,
    StructureError,
    Violation,
    check_axioms,
    is_category,
)


@dataclass(frozen=True)
class TwoGroupement:
    st1: FiniteGroupement
    st2: FiniteGroupement

    def __post_init__(self):
        if self.st1.n != self.st2.n:
            raise StructureError(f"structures have carriers of size {self.st1.n} and {self.st2.n}")

    @property
    def n(self) -> int:
        return self.st1.n

    def swapped(self) -> "TwoGroupement":
        return TwoGroupement(self.st2, self.st1)


def _check_commuting(tg: TwoGroupement) -> Violation | None:
    a, b = tg.st1, tg.st2
    for x in range(tg.n):
        for law, lhs, rhs in (
            ("s1s2=s2s1", a.s[b.s[x]], b.s[a.s[x]]),
            ("t1t2=t2t1", a.t[b.t[x]], b.t[a.t[x]]),
            ("s1t2=t2s1", a.s[b.t[x]], b.t[a.s[x]]),
            ("s2t1=t1s2", b.s[a.t[x]], a.t[b.s[x]]),
        ):
            if lhs != rhs:
                return Violation(law, (x,), (lhs, rhs))
    return None


def interchange_quadruples(tg: TwoGroupement):
    """Every ``(x1, x2, x3, x4)`` meeting the four boundary conditions."""
    a, b = tg.st1, tg.st2
    s2_fiber = b.source_fibers()
    s1_fiber = a.source_fibers()
    for x1 in range(tg.n):
        for x2 in s2_fiber.get(b.t[x1], ()):
            for x3 in s1_fiber.get(a.t[x1], ()):
                for x4 in s2_fiber.get(b.t[x3], ()):
                    if a.s[x4] == a.t[x2]:
                        yield x1, x2, x3, x4


def _check_interchange(tg: TwoGroupement) -> Violation | None:
    a, b = tg.st1, tg.st2
    c1, c2 = a.comp, b.comp
    for x1, x2, x3, x4 in interchange_quadruples(tg):
        top, bottom = c2[x4][x3], c2[x2][x1]
        right, left = c1[x4][x2], c1[x3][x1]
        w = (x1, x2, x3, x4)
        if a.s[top] != a.t[bottom]:
            return Violation("(x4#2x3)#1(x2#2x1) exists", w, (a.s[top], a.t[bottom]))
        if b.s[right] != b.t[left]:
            return Violation("(x4#1x2)#2(x3#1x1) exists", w, (b.s[right], b.t[left]))
        lhs, rhs = c1[top][bottom], c2[right][left]
        if lhs != rhs:
            return Violation("(x4#2x3)#1(x2#2x1)=(x4#1x2)#2(x3#1x1)", w, (lhs, rhs))
    return None


def check_2gr(tg: TwoGroupement) -> AxiomReport:
    report = AxiomReport()
    v = None
    for label, g in (("1", tg.st1), ("2", tg.st2)):
        failed = check_axioms(g).first_failure()
        if failed:
            name, viol = failed
            v = Violation(f"structure {label} {name}: {viol.law}", viol.witness, viol.values)
            break
    report.record("2-GR 1", v)
    report.record("2-GR 2", _check_commuting(tg))
    report.record("2-GR 3", _check_interchange(tg))
    return report


def topology_2gr(T: FiniteTopology) -> TwoGroupement:
    """Opens with intersection as the first structure and union as the second."""
    return TwoGroupement(topology_inter_groupement(T).base, topology_union_groupement(T).base)


# -- commuting squares ------------------------------------------------------------


def squares(c: FiniteGroupement) -> list[tuple[int, int, int, int]]:
    """Commuting squares ``(x1, x2, y1, y2)`` with ``x2 # y1 == y2 # x1``, in lexicographic order.

    ``x1`` and ``x2`` are the horizontal edges, ``y1`` and ``y2`` the vertical ones.
    """
    s, t, m = c.s, c.t, c.comp
    out = []
    for x1 in range(c.n):
        for x2 in range(c.n):
            for y1 in range(c.n):
                if s[y1] != s[x1] or t[y1] != s[x2]:
                    continue
                for y2 in range(c.n):
                    if s[y2] == t[x1] and t[y2] == t[x2] and m[x2][y1] == m[y2][x1]:
                        out.append((x1, x2, y1, y2))
    return out


def gcarres(c: FiniteGroupement) -> tuple[TwoGroupement, list[tuple[int, int, int, int]]]:
    """The double structure on commuting squares of a finite category.

    Returns the 2-groupement together with the square each index stands for.
    """
    if not is_category(c):
        raise NotACategoryError("commuting squares need a category")
    sq = squares(c)
    index = {q: i for i, q in enumerate(sq)}
    s, t, m = c.s, c.t, c.comp

    # identity squares: the object o is itself the identity element at o
    s1 = [index[(x1, x1, s[x1], t[x1])] for x1, x2, y1, y2 in sq]
    t1 = [index[(x2, x2, s[x2], t[x2])] for x1, x2, y1, y2 in sq]
    s2 = [index[(s[y1], t[y1], y1, y1)] for x1, x2, y1, y2 in sq]
    t2 = [index[(s[y2], t[y2], y2, y2)] for x1, x2, y1, y2 in sq]

    n = len(sq)
    comp1, comp2 = [], []
    for i, (x1, x2, y1, y2) in enumerate(sq):
        row1, row2 = [], []
        for j, (u1, u2, v1, v2) in enumerate(sq):
            # vertical pasting: q on top of q' along the shared horizontal edge
            row1.append(index[(u1, x2, m[y1][v1], m[y2][v2])] if s1[i] == t1[j] else j)
            # horizontal pasting along the shared vertical edge
            row2.append(index[(m[x1][u1], m[x2][u2], v1, y2)] if s2[i] == t2[j] else j)
        comp1.append(row1)
        comp2.append(row2)
    tg = TwoGroupement(FiniteGroupement(s1, t1, comp1), FiniteGroupement(s2, t2, comp2))
    assert tg.n == n
    return tg, sq


# -- Moore surfaces ---------------------------------------------------------------


def moore_surface_2gr_sampled(dim: int, trials: int, seed: int = 0) -> AxiomReport:
    """Sampled 2-GR 1-3 for Moore surfaces with axis 1 and axis 2 as the two structures."""
    from . import moore

    if trials < 1:
        raise ValueError("trials must be at least 1")
    report = AxiomReport()
    v1 = None
    for axis in (1, 2):
        failed = moore.check_groupement_sampled(2, dim, axis, trials, seed + axis).first_failure()
        if failed:
            name, viol = failed
            v1 = Violation(f"axis {axis} {name}: {viol.law}", viol.witness, viol.values)
            break
    report.record("2-GR 1", v1)
    rng = random.Random(seed)
    v2 = v3 = None
    for trial in range(trials):
        fam = moore.random_interchange_family(rng, 2, dim, 1, 2)
        if v2 is None and not moore.check_axis_commutation(fam[0], 1, 2):
            v2 = Violation("axis commutation", (trial,), (False, True))
        if v3 is None and not moore.check_interchange(*fam, 1, 2):
            v3 = Violation("(x4#2x3)#1(x2#2x1)=(x4#1x2)#2(x3#1x1)", (trial,), (False, True))
    report.record("2-GR 2", v2)
    report.record("2-GR 3", v3)
    return report
