import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (lin, pairs6_components, pp, triangle_components,
                      xyline_components)
from sumposet import (AmbientRing, InputError, Poset, build_poset,
                      hasse_edges, ideal_sum, label, open_upper_interval,
                      order_complex, poset_rank, poset_to_json)
from sumposet.ideals import contains


def labels(poset):
    return [label(e) for e in poset.elements]


def test_pairs6_has_seven_elements():
    poset = build_poset(pairs6_components())
    assert poset.n == 7
    assert sorted(poset.heights) == [2, 2, 2, 4, 4, 4, 6]
    assert len(poset.component_ids) == 3


def test_triangle_collapses_to_four():
    poset = build_poset(triangle_components())
    assert poset.n == 4
    assert labels(poset)[-1] == "(x1, x2, x3)"


def test_single_component():
    amb = AmbientRing.make(2)
    poset = build_poset([pp(amb, {0: 1})])
    assert poset.n == 1 and hasse_edges(poset) == []
    assert poset_rank(poset) == 0


def test_duplicates_rejected_by_name():
    amb = AmbientRing.make(2, names=("x", "y"))
    with pytest.raises(InputError, match=r"\(x\)"):
        build_poset([lin(amb, [1, 0]), lin(amb, [2, 0])])


def test_order_is_reverse_inclusion():
    poset = build_poset(xyline_components())
    for p in range(poset.n):
        for q in range(poset.n):
            if poset.less(p, q):
                assert contains(poset.elements[p], poset.elements[q])
                assert poset.dims[p] <= poset.dims[q]
                assert poset.heights[p] >= poset.heights[q]


def test_closure_under_sums():
    poset = build_poset(pairs6_components())
    elems = set(poset.elements)
    for a in poset.elements:
        for b in poset.elements:
            assert ideal_sum(a, b) in elems


def test_components_are_maximal():
    poset = build_poset(triangle_components())
    assert set(poset.maximal_elements()) == set(poset.component_ids)


def test_triangle_intervals():
    poset = build_poset(triangle_components())
    bottom = poset.n - 1
    iv = open_upper_interval(poset, bottom)
    assert set(iv.members) == set(poset.component_ids)
    for c in poset.component_ids:
        assert open_upper_interval(poset, c).members == ()


def test_pairs6_bottom_interval_is_everything_else():
    poset = build_poset(pairs6_components())
    bottom = next(p for p in range(poset.n) if poset.heights[p] == 6)
    iv = open_upper_interval(poset, bottom)
    assert len(iv.members) == 6


def test_order_complex_shapes():
    amb = AmbientRing.make(3)
    antichain = Poset.raw("abc", [[i == j for j in range(3)] for i in range(3)])
    cx = order_complex(antichain)
    assert cx.faces(0) == [frozenset([0]), frozenset([1]), frozenset([2])]
    assert cx.faces(1) == []

    chain = Poset.raw("abc", [[j >= i for j in range(3)] for i in range(3)])
    cx = order_complex(chain)
    assert cx.facets == (frozenset([0, 1, 2]),)
    assert len(cx.all_faces()) == 8  # the 2-simplex with all its faces


def test_order_complex_empty_interval_is_void():
    poset = build_poset(triangle_components())
    iv = open_upper_interval(poset, poset.component_ids[0])
    assert order_complex(iv).is_void


def test_rank_examples():
    assert poset_rank(build_poset(triangle_components())) == 1
    chain2 = Poset.raw("ab", [[True, True], [False, True]])
    assert poset_rank(chain2) == 1
    assert poset_rank(build_poset(pairs6_components())) == 2


def test_rank_equals_order_complex_dimension():
    for comps in (triangle_components(), pairs6_components(), xyline_components()):
        poset = build_poset(comps)
        assert poset_rank(poset) == order_complex(poset).dim
        for q in range(poset.n):
            iv = open_upper_interval(poset, q)
            assert poset_rank(iv) == order_complex(iv).dim


def test_hasse_edges_triangle():
    poset = build_poset(triangle_components())
    bottom = poset.n - 1
    assert sorted(hasse_edges(poset)) == [(bottom, c) for c in sorted(poset.component_ids)]


def test_hasse_edges_raw_chain_and_antichain():
    chain = Poset.raw("abc", [[j >= i for j in range(3)] for i in range(3)])
    assert hasse_edges(chain) == [(0, 1), (1, 2)]
    anti = Poset.raw("abc", [[i == j for j in range(3)] for i in range(3)])
    assert hasse_edges(anti) == []


def test_hasse_edges_pairs6():
    poset = build_poset(pairs6_components())
    edges = hasse_edges(poset)
    assert len(edges) == 9
    bottom = next(p for p in range(poset.n) if poset.heights[p] == 6)
    sums = [p for p in range(poset.n) if poset.heights[p] == 4]
    assert {(bottom, s) for s in sums} <= set(edges)
    for p, q in edges:
        assert poset.less(p, q)
        assert not any(poset.less(p, z) and poset.less(z, q) for z in range(poset.n))


def test_raw_poset_validation():
    with pytest.raises(InputError):
        Poset.raw("ab", [[True, True], [True, True]])  # not antisymmetric
    with pytest.raises(InputError):
        Poset.raw("ab", [[False, False], [False, True]])  # not reflexive


def test_json_round_trip():
    poset = build_poset(pairs6_components())
    payload = poset_to_json(poset)
    assert json.loads(json.dumps(payload)) == payload
    assert len(payload["elements"]) == 7
    assert payload["components"] == list(poset.component_ids)


def test_redundant_components_accepted():
    amb = AmbientRing.make(3)
    inner = pp(amb, {0: 1})
    outer = pp(amb, {0: 1, 1: 1})
    poset = build_poset([inner, outer])
    assert poset.n == 2  # outer is inner + outer already
    assert set(poset.component_ids) == {0, 1}
    # only the non-redundant component is maximal
    maximal = {poset.elements[p] for p in poset.maximal_elements()}
    assert maximal == {inner}


@st.composite
def random_components(draw):
    amb = AmbientRing.make(4)
    n = draw(st.integers(1, 3))
    comps = []
    for _ in range(n):
        support = draw(st.lists(st.integers(0, 3), min_size=1, max_size=3, unique=True))
        cand = pp(amb, {v: draw(st.integers(1, 2)) for v in support})
        if cand not in comps:
            comps.append(cand)
    return comps


@settings(max_examples=30, deadline=None)
@given(random_components())
def test_random_posets_are_sum_closed_with_bottom(comps):
    poset = build_poset(comps)
    elems = set(poset.elements)
    for a in poset.elements:
        for b in poset.elements:
            assert ideal_sum(a, b) in elems
    total = comps[0]
    for c in comps[1:]:
        total = ideal_sum(total, c)
    bottom_idx = poset.elements.index(total)
    assert all(poset.leq[bottom_idx][q] for q in range(poset.n))
