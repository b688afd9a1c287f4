"""Bounded search for counterexamples to interchange-style identities between
Alexandroff transformations.

The family is every Alexandroff transformation between every pair of Alexandroff
g-morphisms over the completions of all canonical groupements up to a carrier
bound.  Three identities are checked on every well-typed instance:

* ``(h4 # h3) [x] (h2 # h1) == (h4 [x] h2) # (h3 [x] h1)`` for ``[x]`` each of
  the two horizontal composites;
* ``h2 boxtimes h1 == h2 boxdot h1``.

Both sides are pointwise formulas, so the bulk check runs as numpy gathers over
whole blocks of chains; every reported violation is re-verified with the
reference operators from :mod:`groupement.alex`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .alex import (
    AlexTransformation,
    AlexandroffGroupement,
    alex_boxdot,
    alex_boxtimes,
    alex_compose,
    check_gtralex,
    complete,
)
from .enumeration import (
    BoundExceeded,
    canonical_groupements,
    enum_alex_morphisms,
    enum_alex_transformations,
)
from .morph import compose_gmor

DEFAULT_CAP = 20_000_000
MAX_SEARCH_N = 2


# -- reference checks ---------------------------------------------------------


def interchange_holds(h1, h2, h3, h4, op) -> bool:
    """``(h4 # h3) op (h2 # h1) == (h4 op h2) # (h3 op h1)`` using the reference operators."""
    lhs = op(alex_compose(h4, h3), alex_compose(h2, h1))
    rhs = alex_compose(op(h4, h2), op(h3, h1))
    return lhs == rhs


def horizontal_agree(h2, h1) -> bool:
    return alex_boxtimes(h2, h1) == alex_boxdot(h2, h1)


def pasting_candidate(h: AlexTransformation, h_next: AlexTransformation) -> AlexTransformation | None:
    """Glue ``(eta1; eta2): f1 ~> f2`` and ``(eta2; eta3): f3 ~> f4`` into ``(eta1; eta3)``.

    Only well-typed when all four morphisms are endomorphisms of one groupement
    and the shared component really is shared; returns ``None`` otherwise.
    """
    b = h.src
    if not (h.dst == b and h_next.src == b and h_next.dst == b):
        return None
    if h_next.eta1 != h.eta2:
        return None
    f31 = compose_gmor(h_next.f1, h.f1)
    f42 = compose_gmor(h_next.f2, h.f2)
    return AlexTransformation(f31, f42, h.eta1, h_next.eta2, h.alpha1, h.alpha2)


# -- vectorised kernels -------------------------------------------------------


@dataclass
class _Hom:
    items: list
    f1: np.ndarray  # (N, n1)
    f2: np.ndarray
    eta: np.ndarray  # (2, N, n1)
    chains: np.ndarray = field(default=None)  # (C, 2) index pairs (i, j) with items[j].f1 == items[i].f2

    @classmethod
    def build(cls, items, n1):
        N = len(items)
        f1 = np.array([T.f1.map for T in items], dtype=np.int64).reshape(N, n1)
        f2 = np.array([T.f2.map for T in items], dtype=np.int64).reshape(N, n1)
        eta = np.array([[T.eta1 for T in items], [T.eta2 for T in items]], dtype=np.int64).reshape(2, N, n1)
        by_f1: dict = {}
        for j, T in enumerate(items):
            by_f1.setdefault(T.f1, []).append(j)
        chains = [(i, j) for i, T in enumerate(items) for j in by_f1.get(T.f2, ())]
        return cls(items, f1, f2, eta, np.array(chains, dtype=np.int64).reshape(len(chains), 2))


def horizontal_mismatch(c3, lo: _Hom, hi: _Hom) -> np.ndarray:
    """``(M, N)`` mask: ``hi[m] boxtimes lo[i] != hi[m] boxdot lo[i]``."""
    bad = np.zeros((len(hi.items), len(lo.items)), dtype=bool)
    for k in range(2):
        e_lo, e_hi = lo.eta[k], hi.eta[k]
        boxtimes = c3[hi.f2[:, e_lo], e_hi[:, lo.f1]]
        boxdot = c3[e_hi[:, lo.f2], hi.f1[:, e_lo]]
        bad |= (boxtimes != boxdot).any(axis=2)
    return bad


def interchange_mismatch(c2, c3, lo: _Hom, hi: _Hom) -> tuple[np.ndarray, np.ndarray]:
    """``(Q, P)`` masks over (chain in ``hi``, chain in ``lo``) for both horizontal composites.

    A ``lo`` chain is ``h1: a ~> b, h2: b ~> c``; a ``hi`` chain is
    ``h3: p ~> q, h4: q ~> r``.
    """
    i1, i2 = lo.chains[:, 0], lo.chains[:, 1]
    j3, j4 = hi.chains[:, 0], hi.chains[:, 1]
    a, b, c = lo.f1[i1], lo.f2[i1], lo.f2[i2]
    p, q, r = hi.f1[j3], hi.f2[j3], hi.f2[j4]
    bad_x = np.zeros((len(j3), len(i1)), dtype=bool)
    bad_d = np.zeros_like(bad_x)
    for k in range(2):
        y1, y2 = lo.eta[k][i1], lo.eta[k][i2]
        z3, z4 = hi.eta[k][j3], hi.eta[k][j4]
        y = c2[y2, y1]
        z3a = z3[:, a]
        z4c = z4[:, c]
        lhs = c3[r[:, y], c3[z4[:, a], z3a]]
        rhs = c3[c3[r[:, y2], z4[:, b]], c3[q[:, y1], z3a]]
        bad_x |= (lhs != rhs).any(axis=2)
        lhs = c3[c3[z4c, z3[:, c]], p[:, y]]
        rhs = c3[c3[z4c, q[:, y2]], c3[z3[:, b], p[:, y1]]]
        bad_d |= (lhs != rhs).any(axis=2)
    return bad_x, bad_d


# -- the search ----------------------------------------------------------------


def search_universe(n: int) -> list[AlexandroffGroupement]:
    return [complete(g) for k in range(1, n + 1) for g in canonical_groupements(k)]


def _encode(T, gindex) -> dict:
    return {
        "src": gindex[T.src],
        "dst": gindex[T.dst],
        "f1": list(T.f1.map),
        "f2": list(T.f2.map),
        "eta1": list(T.eta1),
        "eta2": list(T.eta2),
    }


def interchange_search(n: int = 2, cap: int = DEFAULT_CAP) -> dict:
    """Exhaustive check of the identities over completions of groupements with ``<= n`` elements.

    ``cap`` bounds the total number of instances examined; exceeding it raises
    :class:`BoundExceeded` before any work on the instances starts.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > MAX_SEARCH_N:
        raise BoundExceeded(f"search is limited to n <= {MAX_SEARCH_N}")
    universe = search_universe(n)
    gindex = {a.base: i for i, a in enumerate(universe)}
    homs: dict[tuple[int, int], _Hom] = {}
    n_morph = 0
    for i, a1 in enumerate(universe):
        for j, a2 in enumerate(universe):
            fs = list(enum_alex_morphisms(a1, a2))
            n_morph += len(fs)
            items = [
                T for f1 in fs for f2 in fs for T in enum_alex_transformations(f1, f2, a1.alpha, a2.alpha)
            ]
            homs[(i, j)] = _Hom.build(items, a1.n)
    m = len(universe)
    n_quads = sum(
        len(homs[(i, j)].chains) * len(homs[(j, k)].chains)
        for i in range(m) for j in range(m) for k in range(m)
    )
    n_pairs = sum(
        len(homs[(i, j)].items) * len(homs[(j, k)].items)
        for i in range(m) for j in range(m) for k in range(m)
    )
    n_paste = sum(len(homs[(i, i)].items) ** 2 for i in range(m))
    total = 2 * n_quads + n_pairs + n_paste
    if total > cap:
        raise BoundExceeded(f"{total} instances exceed the cap {cap}")

    viol_x, viol_d, viol_h = [], [], []
    for i in range(m):
        for j in range(m):
            lo = homs[(i, j)]
            if not lo.items:
                continue
            c2 = np.array(universe[j].base.comp, dtype=np.int64)
            for k in range(m):
                hi = homs[(j, k)]
                if not hi.items:
                    continue
                c3 = np.array(universe[k].base.comp, dtype=np.int64)
                for mm, ii in zip(*np.nonzero(horizontal_mismatch(c3, lo, hi))):
                    h2, h1 = hi.items[mm], lo.items[ii]
                    assert not horizontal_agree(h2, h1)
                    viol_h.append([_encode(h2, gindex), _encode(h1, gindex)])
                if not len(lo.chains) or not len(hi.chains):
                    continue
                bad_x, bad_d = interchange_mismatch(c2, c3, lo, hi)
                for bad, op, out in ((bad_x, alex_boxtimes, viol_x), (bad_d, alex_boxdot, viol_d)):
                    for qq, pp in zip(*np.nonzero(bad)):
                        h1, h2 = (lo.items[t] for t in lo.chains[pp])
                        h3, h4 = (hi.items[t] for t in hi.chains[qq])
                        assert not interchange_holds(h1, h2, h3, h4, op)
                        out.append([_encode(h, gindex) for h in (h1, h2, h3, h4)])

    well_typed = 0
    passing = 0
    failures = []
    for i in range(m):
        items = homs[(i, i)].items
        by_eta1: dict = {}
        for T in items:
            by_eta1.setdefault(T.eta1, []).append(T)
        for h in items:
            for h_next in by_eta1.get(h.eta2, ()):
                cand = pasting_candidate(h, h_next)
                well_typed += 1
                report = check_gtralex(cand)
                if report.ok:
                    passing += 1
                else:
                    name, v = report.first_failure()
                    failures.append({
                        "pair": [_encode(h, gindex), _encode(h_next, gindex)],
                        "axiom": name,
                        "law": v.law,
                        "witness": list(v.witness),
                    })

    found = bool(viol_x or viol_d or viol_h)
    return {
        "bounds": {"n": n, "cap": cap},
        "universe": {
            "groupements": [
                {"s": list(a.base.s), "t": list(a.base.t), "comp": [list(r) for r in a.base.comp], "alpha": a.alpha}
                for a in universe
            ],
            "alex_morphisms": n_morph,
            "alex_transformations": sum(len(h.items) for h in homs.values()),
        },
        "checks": {
            "boxtimes_interchange": {"checked": n_quads, "violations": viol_x},
            "boxdot_interchange": {"checked": n_quads, "violations": viol_d},
            "boxtimes_equals_boxdot": {"checked": n_pairs, "violations": viol_h},
        },
        "pasting": {
            "well_typed": well_typed,
            "satisfies_axioms": passing,
            "failures": failures,
        },
        "outcome": "counterexamples found" if found else "none within bounds",
    }
