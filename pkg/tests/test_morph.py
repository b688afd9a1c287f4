import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SMALL_GROUPEMENTS
from groupement.core import cyclic_group, dual, from_monoid, identities, is_category, one_point
from groupement.enumeration import enum_morphisms
from groupement.morph import (
    ClosureCapExceeded,
    GMorphism,
    check_gfonc,
    check_gmor,
    compose_gmor,
    dual_gmor,
    identity_gmor,
    is_gmor,
    morphism_closure,
    verify_morphism_category,
)

G2 = [g for g in SMALL_GROUPEMENTS if g.n <= 2]
HOMS = {(a, b): list(enum_morphisms(a, b)) for a in G2 for b in G2}
ALL = [f for fs in HOMS.values() for f in fs]


@pytest.fixture
def xor1():
    return from_monoid(cyclic_group(2), 1)


def test_identity_is_a_gfunctor(xor):
    i = identity_gmor(xor)
    assert check_gmor(i).ok
    assert check_gfonc(i)


def test_gmor_but_not_gfonc(xor, xor1):
    f = GMorphism(xor, xor1, [0, 1])
    assert check_gmor(f).ok
    assert not check_gfonc(f)


def test_constant_one_is_not_a_gmor(xor, xor1):
    f = GMorphism(xor, xor1, [1, 1])
    v = check_gmor(f).axioms["GMOR"]
    assert v is not None and v.witness == (0, 0)


def test_compose_units_and_fallback(xor, xor1):
    f = GMorphism(xor, xor1, [0, 1])
    assert compose_gmor(f, identity_gmor(xor)) == f
    assert compose_gmor(identity_gmor(xor1), f) == f
    # f.dst != f.src, so the pair is not chainable and the right operand comes back
    assert compose_gmor(f, f) == f


def test_dual_of_gfunctor_stays_gfunctor(xor):
    i = identity_gmor(xor)
    d = dual_gmor(i)
    assert d.src == dual(xor)
    assert check_gfonc(d)
    assert dual_gmor(d) == i


@pytest.mark.parametrize("f", ALL[::7])
def test_dual_of_enumerated_morphism(f):
    d = dual_gmor(f)
    assert is_gmor(d)
    assert check_gfonc(d) == check_gfonc(f)


@given(st.sampled_from(ALL), st.data())
def test_composites_and_duals(f, data):
    nexts = [g for g in ALL if g.src == f.dst]
    g = data.draw(st.sampled_from(nexts))
    h = compose_gmor(g, f)
    assert h.map == tuple(g.map[v] for v in f.map)
    assert is_gmor(h)
    if check_gfonc(f) and check_gfonc(g):
        assert check_gfonc(h)
    assert dual_gmor(h) == compose_gmor(dual_gmor(g), dual_gmor(f))
    more = [k for k in ALL if k.src == g.dst]
    k = data.draw(st.sampled_from(more))
    assert compose_gmor(k, compose_gmor(g, f)) == compose_gmor(compose_gmor(k, g), f)


@pytest.mark.parametrize("f", [f for f in ALL if check_gfonc(f) and is_category(f.dst)][::5])
def test_gfunctor_sends_endpoints_to_identities(f):
    ids = identities(f.dst)
    for x in range(f.src.n):
        assert f.map[f.src.s[x]] in ids and f.map[f.src.t[x]] in ids


def test_gfonc_implies_endpoint_clause():
    for a, b in itertools.product(G2, repeat=2):
        for m in itertools.product(range(b.n), repeat=a.n):
            f = GMorphism(a, b, m)
            if check_gfonc(f):
                assert all(b.s[f.map[x]] == b.t[f.map[y]] for x, y in a.composable_pairs())


def test_morphism_category_identities_only():
    gs = G2[:4]
    assert verify_morphism_category(gs, [identity_gmor(g) for g in gs]).ok


def test_morphism_category_requires_identities():
    with pytest.raises(ValueError):
        verify_morphism_category(G2, ALL[1:2])


def test_morphism_category_functors():
    fs = [f for f in ALL if check_gfonc(f)]
    r = verify_morphism_category(G2, fs)
    assert r.ok and "CAT 3" in r.axioms


def test_closure_cap():
    with pytest.raises(ClosureCapExceeded):
        morphism_closure(ALL, cap=10)


def test_map_validation():
    with pytest.raises(ValueError):
        GMorphism(one_point(), one_point(), [1])
