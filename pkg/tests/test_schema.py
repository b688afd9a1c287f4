import json
import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import CATEGORIES_3, SMALL_GROUPEMENTS, groupements
from groupement.alex import complete, sierpinski, topologies
from groupement.core import cyclic_group, to_classic
from groupement.moore import random_cube
from groupement.morph import identity_gmor
from groupement.schema import (
    IndexOutOfRange,
    InputError,
    InvalidValue,
    MalformedRational,
    SchemaError,
    ShapeMismatch,
    detect_kind,
    dump,
    dumps,
    format_rational,
    load,
    parse,
    parse_cube,
    parse_rational,
    parse_structure,
)
from groupement.trans import GTransformation
from groupement.twogr import topology_2gr


def _round_trip(value):
    return parse(json.loads(dumps(value)))


# -- rationals --------------------------------------------------------------------


def test_rationals_are_normalized():
    assert parse_rational("3/6") == F(1, 2)
    assert format_rational(parse_rational("3/6")) == "1/2"
    assert parse_rational("-4") == F(-4)
    assert parse_rational(" 2 / 3 ") == F(2, 3)
    assert parse_rational(7) == F(7)


@pytest.mark.parametrize("bad", ["1/0", "1.5", "abc", "", "1/-2", 1.5, True, None, [1]])
def test_malformed_rationals(bad):
    with pytest.raises(MalformedRational):
        parse_rational(bad)


@given(st.fractions())
def test_rational_round_trip(x):
    assert parse_rational(format_rational(x)) == x


# -- round trips -------------------------------------------------------------------


@given(groupements())
def test_structure_round_trip(g):
    assert _round_trip(g) == g


@pytest.mark.parametrize("g", CATEGORIES_3[:10])
def test_category_round_trip(g):
    c = to_classic(g)
    assert _round_trip(c) == c


def test_other_round_trips():
    a = complete(SMALL_GROUPEMENTS[5])
    assert _round_trip(a) == a
    i = identity_gmor(SMALL_GROUPEMENTS[5])
    assert _round_trip(i) == i
    g = SMALL_GROUPEMENTS[1]
    T = GTransformation(identity_gmor(g), identity_gmor(g), g.s, g.t)
    assert _round_trip(T) == T
    for top in topologies(3):
        assert _round_trip(top) == top
    tg = topology_2gr(sierpinski())
    assert _round_trip(tg) == tg
    m = cyclic_group(3)
    assert _round_trip(m) == m


@given(st.integers(0, 10**6), st.integers(1, 3), st.integers(1, 2))
def test_cube_round_trip(seed, k, dim):
    c = random_cube(random.Random(seed), k, dim, 4)
    d = dump(c)
    assert all(isinstance(x, str) for g in d["grids"] for x in g)
    assert _round_trip(c) == c


def test_cube_values_are_normalized():
    c = parse_cube({"k": 1, "dim": 1, "grids": [["0", "2/4"]], "values": [["3/6"], ["1"]]})
    assert c.grids == ((0, F(1, 2)),)
    assert dump(c)["values"] == [["1/2"], ["1"]]


def test_dump_rejects_unknown():
    with pytest.raises(TypeError):
        dump(object())


# -- errors -----------------------------------------------------------------------


ONE = {"n": 1, "s": [0], "t": [0], "comp": [[0]]}


@pytest.mark.parametrize(
    "doc,kind,err,where",
    [
        ({"n": 1, "s": [0], "t": [0]}, "structure", SchemaError, "$"),
        ({"n": 1, "s": [1], "t": [0], "comp": [[0]]}, "structure", IndexOutOfRange, "$.s[0]"),
        ({"n": 2, "s": [0, 1], "t": [0, 1], "comp": [[0, 0]]}, "structure", ShapeMismatch, "$.comp"),
        ({"n": 2, "s": [0, 1], "t": [0, 1], "comp": [[0, 0], [0, 5]]}, "structure", IndexOutOfRange, "$.comp[1][1]"),
        ({"n": 0, "s": [], "t": [], "comp": []}, "structure", InvalidValue, "$.n"),
        ({"n": "1", "s": [0], "t": [0], "comp": [[0]]}, "structure", SchemaError, "$.n"),
        ({**ONE, "alpha": 2}, "alexandroff", IndexOutOfRange, "$.alpha"),
        ({"n": 2, "s": [0, 0], "t": [0, 0], "comp": [[0, 1], [1, 0]], "alpha": 0}, "alexandroff", InvalidValue, "$.alpha"),
        ({"src": ONE, "dst": ONE, "map": [1]}, "morphism", IndexOutOfRange, "$.map[0]"),
        ({"m": 2, "opens": [[0, 1], [], [0, 0]]}, "topology", InvalidValue, "$.opens[2]"),
        ({"m": 2, "opens": [[0, 1], [0], [1]]}, "topology", InvalidValue, "$.opens"),
        ({"k": 1, "dim": 1, "grids": [["0", "x"]], "values": [["0"], ["0"]]}, "cube", MalformedRational, "$.grids[0][1]"),
        ({"k": 1, "dim": 1, "grids": [["0", "-1"]], "values": [["0"], ["0"]]}, "cube", InvalidValue, "$.grids[0][1]"),
        ({"k": 1, "dim": 1, "grids": [["1", "2"]], "values": [["0"], ["0"]]}, "cube", InvalidValue, "$.grids[0][0]"),
        ({"k": 1, "dim": 1, "grids": [["0", "1"]], "values": [["0"]]}, "cube", ShapeMismatch, "$.values"),
        ({"k": 1, "dim": 2, "grids": [["0", "1"]], "values": [["0", "0"], ["0"]]}, "cube", ShapeMismatch, "$.values[1]"),
        ({"k": 1, "dim": 1, "grids": [["0", "1"]], "values": [[0.5], ["0"]]}, "cube", MalformedRational, "$.values[0][0]"),
        ({"n": 2, "table": [[0, 1], [1, 1]], "e": 1}, "monoid", InvalidValue, "$"),
        ({"n": 2, "st1": ONE, "st2": ONE}, "twogr", ShapeMismatch, "$.st1.n"),
    ],
)
def test_distinct_errors(doc, kind, err, where):
    with pytest.raises(err) as e:
        parse(doc, kind)
    assert e.value.path == where
    assert str(e.value).startswith(where + ": ")


def test_detect_kind():
    assert detect_kind(ONE) == "structure"
    assert detect_kind({**ONE, "alpha": 0}) == "alexandroff"
    assert detect_kind({"m": 1, "opens": []}) == "topology"
    with pytest.raises(SchemaError):
        detect_kind({"x": 1})
    with pytest.raises(SchemaError):
        detect_kind([1])


def test_load_reports_file_and_position(tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"n": 1, "s": [3], "t": [0], "comp": [[0]]}))
    with pytest.raises(IndexOutOfRange) as e:
        load(p)
    assert e.value.path == f"{p}:$.s[0]"
    p.write_text("{\n  \"n\": 1,\n")
    with pytest.raises(SchemaError) as e:
        load(p)
    assert "line 3" in str(e.value)
    with pytest.raises(SchemaError):
        load(tmp_path / "missing.json")


def test_morphism_file_references(tmp_path):
    (tmp_path / "one.json").write_text(json.dumps(ONE))
    (tmp_path / "f.json").write_text(json.dumps({"src": "one.json", "dst": "one.json", "map": [0]}))
    f = load(tmp_path / "f.json")
    assert f == identity_gmor(parse_structure(ONE))


def test_all_errors_are_input_errors():
    for cls in (MalformedRational, IndexOutOfRange, ShapeMismatch, SchemaError, InvalidValue):
        assert issubclass(cls, InputError)
