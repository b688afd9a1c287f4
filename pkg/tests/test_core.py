import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import AND, CATEGORIES_3, SMALL_GROUPEMENTS, groupements, tables
from groupement.core import (
    ClassicCategory,
    FiniteGroupement,
    FiniteMonoid,
    NotACategoryError,
    StructureError,
    canonicalize_comp,
    check_axioms,
    cyclic_group,
    dual,
    fixed_points,
    from_classic,
    from_monoid,
    identities,
    image,
    invertibles,
    is_canonical,
    is_category,
    is_star,
    one_point,
    presque_egal,
    relabel,
    to_classic,
)
from groupement.enumeration import all_fillings


def _reevaluate(g, name, witness):
    """Independently recompute whether ``witness`` breaks axiom ``name``."""
    s, t, c = g.s, g.t, g.comp
    if name == "GR 1":
        (x,) = witness
        return not (s[s[x]] == s[x] and s[t[x]] == t[x] and t[t[x]] == t[x] and t[s[x]] == s[x])
    if name == "GR 2":
        x, y = witness
        return s[x] == t[y] and (s[c[x][y]] != s[y] or t[c[x][y]] != t[x])
    x, y, z = witness
    return s[x] == t[y] and s[y] == t[z] and c[c[x][y]][z] != c[x][c[y][z]]


# -- check_axioms ------------------------------------------------------------


def test_one_point_passes():
    r = check_axioms(one_point())
    assert r.ok
    assert str(r) == "GR 1: pass\nGR 2: pass\nGR 3: pass"


def test_xor_with_constant_maps_is_a_groupement(xor):
    assert check_axioms(xor).ok


def test_gr2_failure_witness():
    g = FiniteGroupement([0, 1], [0, 1], [[0, 0], [0, 0]])
    r = check_axioms(g)
    assert r.passed("GR 1") and r.passed("GR 3")
    v = r.axioms["GR 2"]
    assert v.witness == (1, 1)
    assert v.values == (0, 1)


def test_empty_carrier_rejected():
    with pytest.raises(StructureError):
        FiniteGroupement([], [], [])


def test_out_of_range_is_a_structure_error():
    with pytest.raises(StructureError):
        FiniteGroupement([0, 2], [0, 1], [[0, 0], [0, 0]])


@given(tables())
def test_witnesses_really_violate(g):
    for name, v in check_axioms(g).failures().items():
        assert _reevaluate(g, name, v.witness)


@given(tables())
def test_passing_report_means_no_violation_anywhere(g):
    r = check_axioms(g)
    n = g.n
    for name, arity in (("GR 1", 1), ("GR 2", 2), ("GR 3", 3)):
        bad = [w for w in itertools.product(range(n), repeat=arity) if _reevaluate(g, name, w)]
        assert r.passed(name) == (not bad)
        if bad:
            # first witness in lexicographic order
            assert r.axioms[name].witness == bad[0]


# -- identities, invertibles, classification ---------------------------------


def test_identities_examples(and_g):
    assert identities(one_point()) == {0}
    assert identities(and_g) == {1}
    two = ClassicCategory(2, [(0, 0), (1, 1)], [0, 1], [(0, 0, 0), (1, 1, 1)])
    assert identities(from_classic(two)) == {0, 1}


def test_invertibles_examples(xor, and_g):
    assert invertibles(one_point()) == {0}
    assert invertibles(xor) == {0, 1}
    assert invertibles(and_g) == {1}


def test_category_examples(xor, and_g):
    assert is_category(xor)
    assert not is_category(and_g)
    assert is_category(one_point())


def test_and_groupement_is_star(and_g):
    assert is_star(and_g)


def test_identities_differ_from_fixed_points(and_g):
    assert identities(and_g) == {1}
    assert fixed_points(and_g.s) == {0}


def test_star_failure_exists_at_two():
    failing = [g for g in SMALL_GROUPEMENTS if g.n == 2 and not is_star(g)]
    assert len(failing) == 4
    g = failing[0]
    assert any(g.comp[g.t[x]][x] != g.comp[x][g.s[x]] for x in range(2))


@given(groupements())
def test_image_equals_fixed_points(g):
    assert image(g.s) == image(g.t) == fixed_points(g.s) == fixed_points(g.t)


@pytest.mark.parametrize("g", CATEGORIES_3)
def test_category_identities_are_the_fixed_points(g):
    ids = identities(g)
    assert ids == image(g.s) == image(g.t) == fixed_points(g.s) == fixed_points(g.t)
    assert is_star(g)
    for x in range(g.n):
        if g.s[x] == x or g.t[x] == x:
            assert x in ids


# -- dual ---------------------------------------------------------------------


def test_dual_of_xor_is_itself(xor):
    assert dual(xor) == xor


@given(tables())
def test_dual_is_an_involution_swapping_maps(g):
    d = dual(g)
    assert dual(d) == g
    assert d.s == g.t and d.t == g.s


@given(tables())
def test_dual_preserves_verdicts(g):
    a, b = check_axioms(g), check_axioms(dual(g))
    for name in a.axioms:
        assert a.passed(name) == b.passed(name)


@given(groupements())
def test_dual_preserves_classes(g):
    assert is_category(dual(g)) == is_category(g)
    assert is_star(dual(g)) == is_star(g)


# -- almost-equality and canonical forms -------------------------------------


def test_presque_egal_basics():
    g = SMALL_GROUPEMENTS[3]
    assert presque_egal(g, g)
    other = next(h for h in SMALL_GROUPEMENTS if h.n == g.n and h.s != g.s)
    assert not presque_egal(g, other)


def test_flipping_an_unconstrained_entry():
    g = next(g for g in SMALL_GROUPEMENTS if g.n == 2 and any(g.s[x] != g.t[y] for x in range(2) for y in range(2)))
    x, y = next((x, y) for x in range(2) for y in range(2) if g.s[x] != g.t[y])
    comp = [list(r) for r in g.comp]
    comp[x][y] = 1 - comp[x][y]
    h = FiniteGroupement(g.s, g.t, comp)
    assert h != g
    assert presque_egal(h, g)
    assert canonicalize_comp(h) == g


def test_fully_composable_is_unchanged(xor):
    assert canonicalize_comp(xor) == xor


@given(groupements())
def test_canonicalize_is_idempotent(g):
    c = canonicalize_comp(g)
    assert canonicalize_comp(c) == c
    assert is_canonical(c)
    assert presque_egal(g, c)


@pytest.mark.parametrize("g", [g for g in SMALL_GROUPEMENTS if g.n <= 2])
def test_canonical_form_decides_almost_equality(g):
    fills = list(all_fillings(g))
    for a in fills:
        assert canonicalize_comp(a) == g
        for b in fills[:5]:
            assert presque_egal(a, b)


# -- monoids ------------------------------------------------------------------


def test_from_monoid():
    z2 = cyclic_group(2)
    g1 = from_monoid(z2, 1)
    assert check_axioms(g1).ok
    assert not is_category(g1)
    assert g1.comp[0][g1.s[0]] == 1
    assert from_monoid(FiniteMonoid([[0]], 0), 0) == one_point()


def test_bad_monoid_rejected():
    with pytest.raises(StructureError):
        FiniteMonoid([[0, 0], [0, 0]], 1)


def test_and_monoid_is_valid():
    assert AND.e == 1


# -- classic presentation ----------------------------------------------------


def test_to_classic_examples(xor):
    c = to_classic(one_point())
    assert c.objects == 1 and c.morphisms == ((0, 0),)
    c = to_classic(xor)
    assert c.objects == 1
    assert c.morphisms == ((0, 0), (0, 0))
    assert dict(c.comp) == {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0}


def test_to_classic_rejects_non_categories(and_g):
    with pytest.raises(NotACategoryError):
        to_classic(and_g)


def test_discrete_two_object_category():
    c = ClassicCategory(2, [(0, 0), (1, 1)], [0, 1], [(0, 0, 0), (1, 1, 1)])
    g = from_classic(c)
    assert g.n == 2 and g.s == (0, 1) and g.t == (0, 1)
    assert is_canonical(g)


def test_arrow_category():
    # 0 = id_a, 1 = id_b, 2 = f: a -> b
    c = ClassicCategory(2, [(0, 0), (1, 1), (0, 1)], [0, 1], [(0, 0, 0), (1, 1, 1), (2, 0, 2), (1, 2, 2)])
    g = from_classic(c)
    assert g.n == 3
    assert g.s == (0, 1, 0) and g.t == (0, 1, 1)
    assert check_axioms(g).ok and is_category(g)
    assert identities(g) == {0, 1}


@pytest.mark.parametrize("g", CATEGORIES_3)
def test_classic_round_trip(g):
    assert presque_egal(from_classic(to_classic(g)), g)


def _relabel_objects(c: ClassicCategory, perm):
    return ClassicCategory(
        c.objects,
        [(perm[a], perm[b]) for a, b in c.morphisms],
        [c.identity[perm.index(o)] for o in range(c.objects)],
        [(f, g, h) for (f, g), h in c.comp],
    )


@pytest.mark.parametrize("g", CATEGORIES_3)
def test_round_trip_from_classic_up_to_object_order(g):
    c = to_classic(g)
    for perm in itertools.permutations(range(c.objects)):
        c2 = _relabel_objects(c, list(perm))
        back = to_classic(from_classic(c2))
        # objects come back ordered by identity index
        order = sorted(range(c2.objects), key=lambda o: c2.identity[o])
        assert back == _relabel_objects(c2, [order.index(o) for o in range(c2.objects)])


@given(groupements(), st.randoms(use_true_random=False))
def test_relabel_preserves_everything(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert check_axioms(h).ok
    assert is_category(h) == is_category(g)
    assert {perm[x] for x in identities(g)} == identities(h)
