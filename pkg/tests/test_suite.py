import json

import pytest

from groupement import suite
from groupement.alex import AlexTransformation, is_gtralex
from groupement.core import FiniteGroupement, fixed_points, identities
from groupement.morph import GMorphism
from groupement.suite import (
    TheoremResult,
    _Law,
    alex_laws,
    observations,
    structure_laws,
    theorem_suite,
)
from groupement.trans import is_gtrans


def _decode(d):
    return FiniteGroupement(d["s"], d["t"], d["comp"])


def _by_name(results):
    return {r.name: r for r in results}


def test_suite_at_one():
    report = theorem_suite(1, moore_trials=5)
    assert report["ok"]
    names = [t["name"] for t in report["theorems"]]
    assert len(names) == len(set(names))
    assert all(t["checked"] > 0 for t in report["theorems"] if t["kind"] == "law")
    # nothing to witness on one element
    existence = [t for t in report["theorems"] if t["kind"] == "existence"]
    assert {t["status"] for t in existence} >= {"no witness within bounds"}
    json.dumps(report)


def test_suite_bounds():
    with pytest.raises(ValueError):
        theorem_suite(0)
    with pytest.raises(ValueError):
        theorem_suite(4)


def test_identity_witness_is_genuine():
    r = _by_name(structure_laws(2))["identities can differ from Fix(s)"]
    assert r.status == "witness found"
    g = _decode(r.counterexample["structure"])
    assert identities(g) != fixed_points(g.s)
    assert sorted(identities(g)) == r.counterexample["identities"]


def test_structure_laws_pass_at_three():
    results = structure_laws(3)
    assert all(r.ok for r in results)
    assert _by_name(results)["enumerated structures satisfy GR 1-3"].checked == 412


def test_alex_witness_is_genuine():
    results = _by_name(alex_laws(2))
    assert all(r.ok for r in results.values())
    r = results["an Alexandroff transformation need not be a g-transformation"]
    assert r.status == "witness found"
    w = r.counterexample
    src, dst = _decode(w["src"]), _decode(w["dst"])
    T = AlexTransformation(GMorphism(src, dst, w["f1"]), GMorphism(src, dst, w["f2"]), w["eta1"], w["eta2"])
    assert is_gtralex(T) and not is_gtrans(T)


def test_a_broken_operation_is_reported(monkeypatch):
    # a "dual" that forgets to transpose the composition
    monkeypatch.setattr(suite, "dual", lambda g: FiniteGroupement(g.t, g.s, g.comp))
    results = _by_name(structure_laws(2))
    bad = results["dual preserves GR 1-3 verdicts"]
    assert bad.status == "fail"
    g = _decode(bad.counterexample["structure"])
    assert g.comp != tuple(map(tuple, zip(*g.comp)))


def test_law_keeps_first_counterexample():
    law = _Law("x")
    law.check(True, "unused")
    law.check(False, lambda: 1)
    law.check(False, 2)
    assert law.result.checked == 3 and law.result.counterexample == 1
    assert law.result.status == "fail"
    assert law.result.to_dict() == {"name": "x", "kind": "law", "status": "fail", "checked": 3, "counterexample": 1}


def test_existence_status():
    r = TheoremResult("y", kind="existence")
    assert r.ok and r.status == "no witness within bounds"
    r.counterexample = {"a": 1}
    assert r.status == "witness found" and r.to_dict()["witness"] == {"a": 1}


def test_completion_observations():
    # reported, not asserted by the suite; pinned here so a change is noticed
    assert observations(3) == {
        "completion_keeps_star": {"star_inputs": 270, "kept": 270},
        "completion_creates_star": {"non_star_inputs": 142, "became_star": 0},
    }
