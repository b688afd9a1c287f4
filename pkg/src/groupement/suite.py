"""Exhaustive law batteries over every small structure the enumerators produce.

Each battery returns a list of :class:`TheoremResult`.  A ``law`` passes when no
counterexample turns up; an ``existence`` entry records a fact of the form
"some structure does X" and succeeds when a witness is found.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass

from . import __version__
from . import moore
from .alex import (
    AlexisAmbiguity,
    alex_boxdot,
    alex_boxtimes,
    alex_compose,
    alex_sigma0,
    alex_sigma1,
    alex_tau0,
    alex_tau1,
    check_galex,
    check_gtralex,
    complete,
    find_alexis,
    is_alex_morphism,
    is_continuous,
    monoid_hat,
    preimage_morphism,
    tilde_functor,
    topologies,
    topology_inter_groupement,
    topology_union_groupement,
)
from .core import (
    FiniteGroupement,
    canonicalize_comp,
    check_axioms,
    check_cat3,
    dual,
    fixed_points,
    from_classic,
    identities,
    image,
    is_category,
    is_star,
    presque_egal,
    to_classic,
)
from .enumeration import (
    EnumerationQuery,
    all_fillings,
    canonical_groupements,
    enum_alex_morphisms,
    enum_alex_transformations,
    enum_candidate_pairs,
    enum_morphisms,
    enum_structures,
    enum_transformations,
    monoids,
    naive_groupements,
)
from .morph import (
    GMorphism,
    check_gfonc,
    compose_gmor,
    dual_gmor,
    family_groupement,
    identity_gmor,
    is_gmor,
    verify_morphism_category,
)
from .trans import (
    boxdot,
    boxtimes,
    check_gtrans2_prime_equiv,
    from_single,
    is_gtrans,
    otimes,
    sigma0,
    sigma1,
    tau0,
    tau1,
    to_single,
    whisker_left,
    whisker_right,
    _derived,
)
from .twogr import check_2gr, gcarres, moore_surface_2gr_sampled, topology_2gr

MAX_SUITE_N = 3
# morphism and transformation universes grow much faster than the structures
MAX_HOM_N = 2


@dataclass
class TheoremResult:
    name: str
    checked: int = 0
    counterexample: dict | None = None
    kind: str = "law"  # or "existence"

    @property
    def ok(self) -> bool:
        return self.kind == "existence" or self.counterexample is None

    @property
    def status(self) -> str:
        if self.kind == "existence":
            return "witness found" if self.counterexample else "no witness within bounds"
        return "pass" if self.counterexample is None else "fail"

    def to_dict(self) -> dict:
        out = {"name": self.name, "kind": self.kind, "status": self.status, "checked": self.checked}
        if self.counterexample is not None:
            out["witness" if self.kind == "existence" else "counterexample"] = self.counterexample
        return out


class _Law:
    """Accumulates checks for one law, keeping only the first counterexample."""

    def __init__(self, name: str, kind: str = "law"):
        self.result = TheoremResult(name, kind=kind)

    def check(self, holds: bool, witness) -> bool:
        self.result.checked += 1
        if not holds and self.result.counterexample is None:
            self.result.counterexample = witness() if callable(witness) else witness
        return holds

    def found(self, witness) -> None:
        self.result.checked += 1
        if self.result.counterexample is None:
            self.result.counterexample = witness() if callable(witness) else witness


def encode_groupement(g: FiniteGroupement) -> dict:
    return {"n": g.n, "s": list(g.s), "t": list(g.t), "comp": [list(r) for r in g.comp]}


def _encode_trans(T) -> dict:
    return {
        "src": encode_groupement(T.src),
        "dst": encode_groupement(T.dst),
        "f1": list(T.f1.map),
        "f2": list(T.f2.map),
        "eta1": list(T.eta1),
        "eta2": list(T.eta2),
    }


def _groupements(n: int) -> list[FiniteGroupement]:
    return [g for k in range(1, n + 1) for g in canonical_groupements(k)]


def _all_tables(n: int):
    maps = list(itertools.product(range(n), repeat=n))
    for s in maps:
        for t in maps:
            for flat in itertools.product(range(n), repeat=n * n):
                yield FiniteGroupement(s, t, [flat[i * n:(i + 1) * n] for i in range(n)])


def _family_report(law: _Law, elems, source, target, compose, extra=None):
    """Check GR 1-3 on a materialised family; a missing element counts as a failure."""
    try:
        fam = family_groupement(elems, source, target, compose, composable_only=True)
    except KeyError:
        law.check(False, {"detail": "family not closed under its operations", "size": len(elems)})
        return None
    report = check_axioms(fam)
    failed = report.first_failure()
    law.check(failed is None, lambda: {"axiom": failed[0], "violation": str(failed[1]), "size": len(elems)})
    return fam


# -- batteries ----------------------------------------------------------------


def structure_laws(n: int) -> list[TheoremResult]:
    gs = _groupements(n)
    axioms = _Law("enumerated structures satisfy GR 1-3")
    naive = _Law("pruned enumeration matches the naive scan up to almost-equality")
    distinct = _Law("canonical representatives are pairwise not almost equal")
    imfix = _Law("Im(s) = Im(t) = Fix(s) = Fix(t)")
    cat_ids = _Law("in a category, identities = Im(s) = Im(t) = Fix(s) = Fix(t)")
    cat_fixed = _Law("in a category, s(x) = x or t(x) = x makes x an identity")
    cat_star = _Law("every category satisfies t(x)#x = x#s(x)")
    id_fix = _Law("identities can differ from Fix(s)", kind="existence")
    invol = _Law("dual is an involution")
    dual_verdict = _Law("dual preserves GR 1-3 verdicts")
    dual_class = _Law("dual preserves categories and t(x)#x = x#s(x)")
    canon = _Law("canonicalize_comp is idempotent and decides almost-equality")
    classic = _Law("categories round-trip through the classical presentation")

    seen = set()
    for g in gs:
        r = check_axioms(g)
        axioms.check(r.ok, lambda: {"structure": encode_groupement(g), "report": r.to_dict()})
        distinct.check(g not in seen, lambda: {"structure": encode_groupement(g)})
        seen.add(g)
        fs = fixed_points(g.s)
        imfix.check(
            image(g.s) == image(g.t) == fs == fixed_points(g.t),
            lambda: {"structure": encode_groupement(g)},
        )
        ids = identities(g)
        if is_category(g):
            cat_ids.check(ids == fs, lambda: {"structure": encode_groupement(g), "identities": sorted(ids)})
            cat_fixed.check(
                all(x in ids for x in range(g.n) if g.s[x] == x or g.t[x] == x),
                lambda: {"structure": encode_groupement(g)},
            )
            cat_star.check(is_star(g), lambda: {"structure": encode_groupement(g)})
            back = from_classic(to_classic(g))
            classic.check(presque_egal(back, g), lambda: {"structure": encode_groupement(g)})
        if ids != fs:
            id_fix.found(lambda: {"structure": encode_groupement(g), "identities": sorted(ids), "fix_s": sorted(fs)})
        d = dual(g)
        invol.check(dual(d) == g, lambda: {"structure": encode_groupement(g)})
        dual_verdict.check(check_axioms(d).ok, lambda: {"structure": encode_groupement(g)})
        dual_class.check(
            is_category(d) == is_category(g) and is_star(d) == is_star(g),
            lambda: {"structure": encode_groupement(g)},
        )

    small = min(n, 2)
    for k in range(1, small + 1):
        canon_k = {g for g in gs if g.n == k}
        found = {canonicalize_comp(g) for g in naive_groupements(k)}
        naive.check(found == canon_k, lambda: {"n": k, "naive": len(found), "pruned": len(canon_k)})
        for g in canon_k:
            for h in all_fillings(g):
                c = canonicalize_comp(h)
                canon.check(
                    c == g and canonicalize_comp(c) == c and presque_egal(h, g),
                    lambda: {"structure": encode_groupement(h)},
                )
        # verdict preservation must also hold on tables that are not groupements
        for h in _all_tables(k):
            dh = dual(h)
            same = [a.passed(x) == b.passed(x) for a, b in [(check_axioms(h), check_axioms(dh))] for x in a.axioms]
            dual_verdict.check(all(same) and dual(dh) == h, lambda: {"structure": encode_groupement(h)})

    return [
        law.result
        for law in (axioms, naive, distinct, imfix, cat_ids, cat_fixed, cat_star, id_fix, invol,
                    dual_verdict, dual_class, canon, classic)
    ]


def morphism_laws(n: int) -> list[TheoremResult]:
    m = min(n, MAX_HOM_N)
    gs = _groupements(m)
    gfonc_gmor = _Law("GFONC 1 implies the source/target clause of GMOR")
    gfonc_ids = _Law("g-functors into a category send s and t values to identities")
    comp_closed = _Law("composites of g-morphisms (g-functors) are g-morphisms (g-functors)")
    dual_ok = _Law("dual of a g-morphism is a g-morphism with the same functor flag")
    dual_comp = _Law("dual commutes with composition")
    cat_all = _Law("g-morphisms form a category")
    cat_fonc = _Law("g-functors form a category")
    tilde = _Law("completion extends g-morphisms functorially")

    homs: dict[tuple[int, int], list[GMorphism]] = {}
    for i, g1 in enumerate(gs):
        for j, g2 in enumerate(gs):
            homs[(i, j)] = list(enum_morphisms(g1, g2))
            for mp in itertools.product(range(g2.n), repeat=g1.n):
                f = GMorphism(g1, g2, mp)
                if check_gfonc(f):
                    ok = all(g2.s[f.map[x]] == g2.t[f.map[y]] for x, y in g1.composable_pairs())
                    gfonc_gmor.check(ok, lambda: {"map": list(mp), "src": encode_groupement(g1), "dst": encode_groupement(g2)})
    flat = [f for fs in homs.values() for f in fs]
    for f in flat:
        fonc = check_gfonc(f)
        if fonc and is_category(f.dst):
            ids = identities(f.dst)
            gfonc_ids.check(
                all(f.map[f.src.s[x]] in ids and f.map[f.src.t[x]] in ids for x in range(f.src.n)),
                lambda: {"map": list(f.map), "dst": encode_groupement(f.dst)},
            )
        d = dual_gmor(f)
        dual_ok.check(is_gmor(d) and check_gfonc(d) == fonc and dual_gmor(d) == f, lambda: {"map": list(f.map)})
        ti = tilde_functor(f)
        tilde.check(
            is_alex_morphism(ti, f.src.n, f.dst.n) and check_gfonc(ti) == fonc,
            lambda: {"map": list(f.map), "src": encode_groupement(f.src)},
        )
    for g in gs:
        tilde.check(tilde_functor(identity_gmor(g)) == identity_gmor(complete(g).base), {"structure": encode_groupement(g)})
    k = len(gs)
    for i, j, l in itertools.product(range(k), repeat=3):
        for f in homs[(i, j)]:
            for g in homs[(j, l)]:
                h = compose_gmor(g, f)
                comp_closed.check(
                    is_gmor(h) and (not (check_gfonc(f) and check_gfonc(g)) or check_gfonc(h)),
                    lambda: {"f": list(f.map), "g": list(g.map)},
                )
                dual_comp.check(
                    dual_gmor(h) == compose_gmor(dual_gmor(g), dual_gmor(f)),
                    lambda: {"f": list(f.map), "g": list(g.map)},
                )
                tilde.check(
                    tilde_functor(h) == compose_gmor(tilde_functor(g), tilde_functor(f)),
                    lambda: {"f": list(f.map), "g": list(g.map)},
                )
    for law, fs in ((cat_all, flat), (cat_fonc, [f for f in flat if check_gfonc(f)])):
        r = verify_morphism_category(gs, fs)
        failed = r.first_failure()
        law.check(failed is None, lambda: {"axiom": failed[0], "violation": str(failed[1])})
    return [law.result for law in (gfonc_gmor, gfonc_ids, comp_closed, dual_ok, dual_comp, cat_all, cat_fonc, tilde)]


def star_universe(n: int):
    """⋆-groupements with at most ``n`` elements, all g-morphisms and all g-transformations."""
    gs = [g for g in _groupements(n) if is_star(g)]
    morphs = {(i, j): list(enum_morphisms(a, b)) for i, a in enumerate(gs) for j, b in enumerate(gs)}
    trans = []
    for fs in morphs.values():
        for f1 in fs:
            for f2 in fs:
                trans.extend(enum_transformations(f1, f2))
    return gs, morphs, trans


def transformation_laws(n: int) -> list[TheoremResult]:
    m = min(n, MAX_HOM_N)
    gs, morphs, trans = star_universe(m)
    prime = _Law("GTRANS 2 and its primed form agree on every candidate pair")
    derived = _Law("every g-transformation satisfies the derived component relations")
    sig = _Law("sigma1 and tau1 of every g-morphism are g-transformations")
    whisk = _Law("whiskering a g-transformation gives a g-transformation")
    groups = {
        "otimes": _Law("(sigma1, tau1, otimes) is a groupement"),
        "boxtimes": _Law("(sigma0, tau0, boxtimes) is a groupement"),
        "boxdot": _Law("(sigma0, tau0, boxdot) is a groupement"),
    }
    absorb = _Law("source/target operators satisfy the eight absorption equalities")
    commute = _Law("source/target operators satisfy the four commutations")
    single = _Law("single-map presentation round-trips for g-functor pairs")
    tau_side = _Law("source-side conditions imply target-side conditions for g-functor pairs")
    not_cat = _Law("the otimes structure can fail CAT 3", kind="existence")

    for fs in morphs.values():
        for f1 in fs:
            sig.check(is_gtrans(sigma1(f1)) and is_gtrans(tau1(f1)), lambda: {"map": list(f1.map)})
            for f2 in fs:
                for T in enum_candidate_pairs(f1, f2):
                    prime.check(check_gtrans2_prime_equiv(T), lambda: _encode_trans(T))
                if check_gfonc(f1) and check_gfonc(f2):
                    b1, b2 = f1.src, f1.dst
                    for eta in itertools.product(range(b2.n), repeat=b1.n):
                        src_side = all(
                            b2.s[eta[b1.s[x]]] == b2.s[f1.map[x]] and b2.t[eta[b1.s[x]]] == b2.s[f2.map[x]]
                            for x in range(b1.n)
                        )
                        if src_side:
                            tau_side.check(
                                all(
                                    b2.s[eta[b1.t[x]]] == b2.t[f1.map[x]] and b2.t[eta[b1.t[x]]] == b2.t[f2.map[x]]
                                    for x in range(b1.n)
                                ),
                                lambda: {"eta": list(eta), "f1": list(f1.map), "f2": list(f2.map)},
                            )
                    for T in enum_transformations(f1, f2):
                        single.check(from_single(to_single(T), f1, f2) == T, lambda: _encode_trans(T))

    index = {g: i for i, g in enumerate(gs)}
    for T in trans:
        derived.check(_derived(T) is None, lambda: _encode_trans(T))
        i, j = index[T.src], index[T.dst]
        for l in range(len(gs)):
            for f in morphs[(l, i)]:
                whisk.check(is_gtrans(whisker_right(T, f)), lambda: {"T": _encode_trans(T), "f": list(f.map)})
            for g in morphs[(j, l)]:
                whisk.check(is_gtrans(whisker_left(g, T)), lambda: {"T": _encode_trans(T), "g": list(g.map)})
        s0, t0, s1, t1 = sigma0(T), tau0(T), sigma1(T), tau1(T)
        absorb.check(
            sigma0(s1) == s0 and sigma0(t1) == s0 and tau0(s1) == t0 and tau0(t1) == t0
            and sigma1(s0) == s0 and sigma1(t0) == t0 and tau1(s0) == s0 and tau1(t0) == t0,
            lambda: _encode_trans(T),
        )
        commute.check(
            sigma0(s1) == sigma1(s0) and tau0(t1) == tau1(t0) and tau0(s1) == sigma1(t0) and sigma0(t1) == tau1(s0),
            lambda: _encode_trans(T),
        )

    fam = _family_report(groups["otimes"], trans, sigma1, tau1, otimes)
    _family_report(groups["boxtimes"], trans, sigma0, tau0, boxtimes)
    _family_report(groups["boxdot"], trans, sigma0, tau0, boxdot)
    if fam is not None:
        v = check_cat3(fam)
        if v is not None:
            x = v.witness[0]
            not_cat.found({"transformation": _encode_trans(trans[x]), "violation": str(v)})
        else:
            not_cat.result.checked += 1
    return [
        law.result
        for law in (prime, derived, sig, whisk, *groups.values(), absorb, commute, single, tau_side, not_cat)
    ]


def alex_laws(n: int) -> list[TheoremResult]:
    unique = _Law("alexis is unique")
    comp_ok = _Law("completion satisfies GALEX 1-2 and its alexis is recovered")
    hat = _Law("monoid_hat satisfies GR 1-3 and GALEX 1-2")
    topo = _Law("union and intersection groupements of a topology satisfy GR 1-3 and GALEX 1-2")
    pre = _Law("preimage morphisms are Alexandroff morphisms, contravariantly functorial")
    weaker = _Law("an Alexandroff transformation need not be a g-transformation", kind="existence")
    conseq = _Law("Alexandroff transformations satisfy the derived component relations")
    families = {
        "compose": _Law("Alexandroff transformations under # form a groupement"),
        "boxtimes": _Law("Alexandroff transformations under boxtimes form a groupement"),
        "boxdot": _Law("Alexandroff transformations under boxdot form a groupement"),
    }

    for k in range(1, n + 1):
        for a in enum_structures(EnumerationQuery(k, "alexandroff"), max_n=n):
            try:
                found = find_alexis(a.base)
                unique.check(found == a.alpha, lambda: {"structure": encode_groupement(a.base), "alpha": a.alpha})
            except AlexisAmbiguity as e:
                unique.check(False, {"structure": encode_groupement(a.base), "detail": str(e)})
    for g in _groupements(n):
        try:
            find_alexis(g)
            unique.check(True, None)
        except AlexisAmbiguity as e:
            unique.check(False, {"structure": encode_groupement(g), "detail": str(e)})
        c = complete(g)
        comp_ok.check(
            check_axioms(c.base).ok and check_galex(c.base, c.alpha).ok and find_alexis(c.base) == g.n,
            lambda: {"structure": encode_groupement(g)},
        )
    for k in range(1, n + 1):
        for mon in monoids(k):
            h = monoid_hat(mon)
            hat.check(
                check_axioms(h.base).ok and check_galex(h.base, h.alpha).ok,
                lambda: {"table": [list(r) for r in mon.table], "e": mon.e},
            )
    tops = [T for k in range(1, n + 1) for T in topologies(k)]
    for T in tops:
        for build in (topology_union_groupement, topology_inter_groupement):
            a = build(T)
            topo.check(
                check_axioms(a.base).ok and check_galex(a.base, a.alpha).ok and find_alexis(a.base) == a.alpha,
                lambda: {"m": T.m, "opens": T.point_lists()},
            )

    small = [T for T in tops if T.m <= min(n, 2)]
    cont = {}
    for T1 in small:
        for T2 in small:
            cont[(T1, T2)] = [
                list(f) for f in itertools.product(range(T2.m), repeat=T1.m) if is_continuous(f, T1, T2)
            ]
    for kind in ("union", "inter"):
        build = {"union": topology_union_groupement, "inter": topology_inter_groupement}[kind]
        for (T1, T2), maps in cont.items():
            a1, a2 = build(T1), build(T2)
            for f in maps:
                pf = preimage_morphism(f, T1, T2, kind)
                pre.check(is_alex_morphism(pf, a2.alpha, a1.alpha), {"kind": kind, "map": f})
                for T3 in small:
                    for g in cont[(T2, T3)]:
                        gf = [g[p] for p in f]
                        lhs = preimage_morphism(gf, T1, T3, kind)
                        rhs = compose_gmor(pf, preimage_morphism(g, T2, T3, kind))
                        pre.check(lhs == rhs, {"kind": kind, "f": f, "g": g})

    for g in _groupements(min(n, MAX_HOM_N)):
        a = complete(g)
        fs = list(enum_alex_morphisms(a, a))
        items = [T for f1 in fs for f2 in fs for T in enum_alex_transformations(f1, f2, a.alpha, a.alpha)]
        for T in items:
            r = check_gtralex(T)
            conseq.check(r.passed("consequences"), lambda: _encode_trans(T))
            if not is_gtrans(T):
                weaker.found(lambda: _encode_trans(T))
        _family_report(families["compose"], items, alex_sigma1, alex_tau1, alex_compose)
        _family_report(families["boxtimes"], items, alex_sigma0, alex_tau0, alex_boxtimes)
        _family_report(families["boxdot"], items, alex_sigma0, alex_tau0, alex_boxdot)

    return [law.result for law in (unique, comp_ok, hat, topo, pre, conseq, *families.values(), weaker)]


def twogr_laws(n: int) -> list[TheoremResult]:
    topo = _Law("open sets under intersection and union form a 2-groupement (either order)")
    guards = _Law("interchange guards on open sets force x1 = x3 and x2 = x4")
    squares = _Law("commuting squares of a category form a 2-groupement of categories")
    from .twogr import interchange_quadruples

    for k in range(1, n + 1):
        for T in topologies(k):
            tg = topology_2gr(T)
            topo.check(check_2gr(tg).ok and check_2gr(tg.swapped()).ok, {"m": T.m, "opens": T.point_lists()})
            for x1, x2, x3, x4 in interchange_quadruples(tg):
                guards.check(x1 == x3 and x2 == x4, {"m": T.m, "opens": T.point_lists(), "quadruple": [x1, x2, x3, x4]})
    for g in _groupements(n):
        if not is_category(g):
            continue
        tg, _ = gcarres(g)
        squares.check(
            check_2gr(tg).ok and check_2gr(tg.swapped()).ok and is_category(tg.st1) and is_category(tg.st2),
            lambda: {"category": encode_groupement(g)},
        )
    return [topo.result, guards.result, squares.result]


def moore_laws(trials: int, seed: int = 0) -> list[TheoremResult]:
    out = []
    for k, dim in ((1, 2), (2, 1), (3, 1)):
        for i in range(1, k + 1):
            law = _Law(f"Moore cubes with {k} axes form a groupement along axis {i}")
            r = moore.check_groupement_sampled(k, dim, i, trials, seed)
            law.result.checked = trials
            failed = r.first_failure()
            if failed:
                law.result.counterexample = {"axiom": failed[0], "violation": str(failed[1])}
            out.append(law.result)
    rng = random.Random(seed)
    law = _Law("Moore cubes satisfy axis commutation and interchange")
    for _ in range(trials):
        for k, (i, j) in ((2, (1, 2)), (3, (1, 3)), (3, (2, 3))):
            fam = moore.random_interchange_family(rng, k, 1, i, j)
            law.check(
                moore.check_axis_commutation(fam[0], i, j) and moore.check_interchange(*fam, i, j),
                {"k": k, "axes": [i, j]},
            )
    out.append(law.result)
    law = _Law("Moore surfaces form a 2-groupement")
    r = moore_surface_2gr_sampled(1, trials, seed)
    law.result.checked = trials
    failed = r.first_failure()
    if failed:
        law.result.counterexample = {"axiom": failed[0], "violation": str(failed[1])}
    out.append(law.result)
    return out


def observations(n: int) -> dict:
    """Empirical facts reported but never asserted."""
    gs = _groupements(n)
    star = [g for g in gs if is_star(g)]
    kept = sum(1 for g in star if is_star(complete(g).base))
    gained = sum(1 for g in gs if not is_star(g) and is_star(complete(g).base))
    return {
        "completion_keeps_star": {"star_inputs": len(star), "kept": kept},
        "completion_creates_star": {"non_star_inputs": len(gs) - len(star), "became_star": gained},
    }


def theorem_suite(n: int, seed: int = 0, moore_trials: int | None = None) -> dict:
    """Run every battery with structures of at most ``n`` elements.

    Morphism and transformation universes stop at ``min(n, 2)`` elements.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > MAX_SUITE_N:
        raise ValueError(f"the suite is limited to n <= {MAX_SUITE_N}")
    trials = 20 * n if moore_trials is None else moore_trials
    results: list[TheoremResult] = []
    timings = {}
    for name, run in (
        ("structures", lambda: structure_laws(n)),
        ("morphisms", lambda: morphism_laws(n)),
        ("transformations", lambda: transformation_laws(n)),
        ("alexandroff", lambda: alex_laws(n)),
        ("two-groupements", lambda: twogr_laws(n)),
        ("moore", lambda: moore_laws(trials, seed)),
    ):
        start = time.perf_counter()
        results.extend(run())
        timings[name] = round(time.perf_counter() - start, 3)
    return {
        "bounds": {"n": n, "hom_n": min(n, MAX_HOM_N), "moore_trials": trials, "seed": seed},
        "theorems": [r.to_dict() for r in results],
        "observations": observations(n),
        "ok": all(r.ok for r in results),
        "seconds": timings,
        "tool_version": __version__,
    }
