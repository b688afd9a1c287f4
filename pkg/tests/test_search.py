import random

import numpy as np
import pytest

from groupement.alex import AlexTransformation, alex_boxdot, alex_boxtimes, complete
from groupement.core import FiniteGroupement, one_point
from groupement.enumeration import BoundExceeded
from groupement.morph import GMorphism
from groupement.search import (
    _Hom,
    horizontal_agree,
    horizontal_mismatch,
    interchange_holds,
    interchange_mismatch,
    interchange_search,
    pasting_candidate,
    search_universe,
)


def _random_hom(rng, a1, a2, count):
    """Random (mostly invalid) transformations a1 -> a2 over a small pool of maps."""
    pool = [
        GMorphism(a1.base, a2.base, [a2.alpha if x == a1.alpha else rng.randrange(a2.n) for x in range(a1.n)])
        for _ in range(2)
    ]
    items = []
    for _ in range(count):
        f1, f2 = rng.choice(pool), rng.choice(pool)
        eta1 = [rng.randrange(a2.n) for _ in range(a1.n)]
        eta2 = [rng.randrange(a2.n) for _ in range(a1.n)]
        items.append(AlexTransformation(f1, f2, eta1, eta2, a1.alpha, a2.alpha))
    return _Hom.build(items, a1.n)


@pytest.mark.parametrize("seed", range(6))
def test_kernels_match_reference_operators(seed):
    rng = random.Random(seed)
    universe = search_universe(2)
    a, b, c = (rng.choice(universe) for _ in range(3))
    lo, hi = _random_hom(rng, a, b, 12), _random_hom(rng, b, c, 12)
    c2 = np.array(b.base.comp, dtype=np.int64)
    c3 = np.array(c.base.comp, dtype=np.int64)

    mask = horizontal_mismatch(c3, lo, hi)
    for m, h2 in enumerate(hi.items):
        for i, h1 in enumerate(lo.items):
            assert mask[m, i] == (not horizontal_agree(h2, h1))

    assert len(lo.chains) and len(hi.chains)
    bad_x, bad_d = interchange_mismatch(c2, c3, lo, hi)
    for q, (j3, j4) in enumerate(hi.chains):
        for p, (i1, i2) in enumerate(lo.chains):
            h1, h2, h3, h4 = lo.items[i1], lo.items[i2], hi.items[j3], hi.items[j4]
            assert bad_x[q, p] == (not interchange_holds(h1, h2, h3, h4, alex_boxtimes))
            assert bad_d[q, p] == (not interchange_holds(h1, h2, h3, h4, alex_boxdot))


def test_random_data_does_break_the_identities():
    # guard against a kernel that never reports anything
    rng = random.Random(1)
    universe = search_universe(2)
    a = universe[-1]
    lo, hi = _random_hom(rng, a, a, 20), _random_hom(rng, a, a, 20)
    c = np.array(a.base.comp, dtype=np.int64)
    assert horizontal_mismatch(c, lo, hi).any()
    bad_x, bad_d = interchange_mismatch(c, c, lo, hi)
    assert bad_x.any() and bad_d.any()


def test_search_at_one():
    r = interchange_search(1)
    assert r["outcome"] == "none within bounds"
    assert r["universe"]["alex_morphisms"] == 2
    assert r["universe"]["alex_transformations"] == 3
    assert [r["checks"][k]["checked"] for k in ("boxtimes_interchange", "boxdot_interchange", "boxtimes_equals_boxdot")] == [25, 25, 9]
    assert r["pasting"] == {"well_typed": 5, "satisfies_axioms": 5, "failures": []}


def test_search_universe():
    assert [a.base for a in search_universe(1)] == [complete(one_point()).base]
    assert len(search_universe(2)) == 18


def test_search_bounds():
    with pytest.raises(BoundExceeded):
        interchange_search(3)
    with pytest.raises(BoundExceeded):
        interchange_search(2, cap=1000)
    with pytest.raises(ValueError):
        interchange_search(0)


def test_pasting_candidate():
    c = complete(FiniteGroupement([0, 1], [0, 1], [[0, 1], [0, 1]]))
    d = complete(one_point())
    i = GMorphism(c.base, c.base, [0, 1, 2])
    h = AlexTransformation(i, i, [0, 2, 2], [1, 2, 2])
    glued = pasting_candidate(h, AlexTransformation(i, i, [1, 2, 2], [2, 2, 2]))
    assert glued.eta1 == (0, 2, 2) and glued.eta2 == (2, 2, 2)
    # shared component differs
    assert pasting_candidate(h, AlexTransformation(i, i, [0, 2, 2], [2, 2, 2])) is None
    # different groupements
    j = GMorphism(d.base, d.base, [0, 1])
    assert pasting_candidate(h, AlexTransformation(j, j, [1, 1], [1, 1])) is None
