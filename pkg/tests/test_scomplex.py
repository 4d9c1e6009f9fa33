import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import pp, triangle_components
from sumposet import (AmbientRing, FieldSpec, InputError, SimplicialComplex,
                      boundary_matrix, link, reduced_betti, sr_complex)
from sumposet.exactlin import rank
from sumposet.scomplex import euler_characteristic_reduced

QQ = FieldSpec()
F2 = FieldSpec("prime", 2)

POINTS3 = SimplicialComplex.from_facets([{0}, {1}, {2}])
HOLLOW = SimplicialComplex.from_facets([{0, 1}, {1, 2}, {0, 2}])
FULL = SimplicialComplex.from_facets([{0, 1, 2}])


def test_void_and_empty_are_distinct():
    void, empty = SimplicialComplex.void(), SimplicialComplex.empty()
    assert void.is_void and not void.is_empty
    assert empty.is_empty and not empty.is_void
    assert not void.has_face(set())
    assert empty.has_face(set())


def test_facet_normalization():
    c = SimplicialComplex.from_facets([{0}, {0, 1}, {1, 2}])
    assert c.facets == (frozenset({0, 1}), frozenset({1, 2}))


def test_betti_three_points():
    assert reduced_betti(POINTS3, QQ) == {0: 2}


def test_betti_void_convention():
    assert reduced_betti(SimplicialComplex.void(), QQ) == {-1: 1}
    assert reduced_betti(SimplicialComplex.empty(), QQ) == {-1: 1}


def test_betti_hollow_triangle():
    # rank bookkeeping: 3 edges, 3 vertices, rank d1 = 2, so b1 = 3 - 2 = 1
    assert rank(boundary_matrix(HOLLOW, 1, QQ)) == 2
    assert reduced_betti(HOLLOW, QQ) == {1: 1}
    assert reduced_betti(HOLLOW, F2) == {1: 1}


def test_betti_full_triangle():
    assert rank(boundary_matrix(FULL, 1, QQ)) == 2
    assert rank(boundary_matrix(FULL, 2, QQ)) == 1
    assert reduced_betti(FULL, QQ) == {}


def test_boundary_edge_orientation():
    edge = SimplicialComplex.from_facets([{0, 1}])
    d1 = boundary_matrix(edge, 1, QQ)
    assert d1.col(0) == (-1, 1)


def test_boundary_augmentation_row():
    two = SimplicialComplex.from_facets([{0}, {1}])
    d0 = boundary_matrix(two, 0, QQ)
    assert d0.rows == 1 and d0.row(0) == (1, 1)


def test_link_of_vertex_in_hollow_triangle():
    lk = link(HOLLOW, {0})
    assert lk.faces(0) == [frozenset({1}), frozenset({2})]
    assert lk.faces(1) == []


def test_link_identity_on_empty_face():
    assert link(HOLLOW, set()) == HOLLOW


def test_link_of_edge_in_full_triangle():
    lk = link(FULL, {0, 1})
    assert lk.facets == (frozenset({2}),)


def test_link_requires_face():
    with pytest.raises(InputError):
        link(HOLLOW, {0, 1, 2})


def test_sr_complex_triangle():
    delta = sr_complex(triangle_components())
    assert delta.facets == (frozenset({0}), frozenset({1}), frozenset({2}))


def test_sr_complex_maximal_ideal_is_empty_complex():
    amb = AmbientRing.make(3)
    delta = sr_complex([pp(amb, {0: 1, 1: 1, 2: 1})])
    assert delta.is_empty


def test_sr_complex_single_variable():
    amb = AmbientRing.make(2)
    delta = sr_complex([pp(amb, {0: 1})])
    assert delta.facets == (frozenset({1}),)


def test_sr_complex_rejects_non_squarefree():
    amb = AmbientRing.make(2)
    with pytest.raises(InputError):
        sr_complex([pp(amb, {0: 2})])


def test_projective_plane_betti_depends_on_characteristic():
    # six-vertex triangulation; validated structurally before use
    faces = [{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
             {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}]
    rp2 = SimplicialComplex.from_facets(faces)
    assert len(rp2.facets) == 10
    edges = rp2.faces(1)
    assert len(edges) == 15  # the full edge set on 6 vertices
    for e in edges:
        assert sum(1 for f in rp2.facets if e <= f) == 2  # closed surface
    assert reduced_betti(rp2, QQ) == {}
    assert reduced_betti(rp2, F2) == {1: 1, 2: 1}


@st.composite
def small_complex(draw):
    n = draw(st.integers(1, 5))
    k = draw(st.integers(1, 5))
    faces = [frozenset(draw(st.lists(st.integers(0, n - 1), min_size=1,
                                     max_size=n, unique=True)))
             for _ in range(k)]
    return SimplicialComplex.from_facets(faces)


@settings(max_examples=40, deadline=None)
@given(small_complex(), st.sampled_from([QQ, F2]))
def test_boundary_squares_to_zero(c, field):
    for k in range(1, c.dim + 1):
        prod = boundary_matrix(c, k - 1, field).matmul(boundary_matrix(c, k, field))
        assert prod.is_zero()


@settings(max_examples=40, deadline=None)
@given(small_complex(), st.sampled_from([QQ, F2]))
def test_euler_relation(c, field):
    betti = reduced_betti(c, field)
    alt = sum(b if k % 2 == 0 else -b for k, b in betti.items() if k >= 0)
    alt -= betti.get(-1, 0)
    assert euler_characteristic_reduced(c) == alt


@settings(max_examples=40, deadline=None)
@given(small_complex(), st.sampled_from([QQ, F2]))
def test_cone_is_acyclic(c, field):
    apex = max(c.vertices, default=0) + 1
    cone = SimplicialComplex.from_facets([f | {apex} for f in c.facets])
    assert reduced_betti(cone, field) == {}
