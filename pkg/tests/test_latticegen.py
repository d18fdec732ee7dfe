import random
from fractions import Fraction

import pytest

from superchar.capgraph import Forest, gamma, subgraphs
from superchar.caps import cap_diagram
from superchar.latticegen import (
    OrderPolyhedron,
    chain_decomposition_check,
    chain_decomposition_report,
    cone_genfun,
    enumerate_lattice,
    polyhedron_of_forest,
    tangent_cone,
    vertices,
)
from superchar.weights import CROSS, WeightDiagram

from helpers import brute_lattice_points, random_diagram


def gl33_forest():
    return gamma(cap_diagram(WeightDiagram({0: CROSS, 1: CROSS, 3: CROSS})))


def test_vertices_gl33():
    points = {p for _, p in vertices(gl33_forest())}
    assert points == {(0, 0, 0), (0, 1, 0), (0, 0, 3), (0, 1, 3)}


def test_vertices_edgeless():
    forest = Forest((2, 5, 9), frozenset())
    assert [p for _, p in vertices(forest)] == [(2, 5, 9)]


def test_vertices_chain():
    forest = gamma(cap_diagram(WeightDiagram({0: CROSS, 1: CROSS, 2: CROSS})))
    assert len(vertices(forest)) == 4


def test_vertex_bijection_on_corpus():
    rng = random.Random(37)
    for _ in range(40):
        f = random_diagram(rng, r_max=4, with_core=False)
        if not f.crosses:
            continue
        forest = gamma(cap_diagram(f))
        vs = vertices(forest)
        r = len(forest.labels)
        s = forest.component_count()
        assert len(vs) == 2 ** (r - s)
        assert len({p for _, p in vs}) == len(vs)


def test_tangent_cone_full_delta():
    forest = gl33_forest()
    bounds, edges = tangent_cone(forest)
    assert bounds == [(0, 0)]
    assert edges == [(0, 1), (0, 2)]


def test_tangent_cone_edgeless():
    forest = Forest((0, 1, 3), frozenset())
    bounds, edges = tangent_cone(forest)
    assert bounds == [(0, 0), (1, 1), (2, 3)]
    assert edges == []


def test_tangent_cone_partial():
    delta = Forest((0, 1, 3), frozenset({(0, 1)}))
    bounds, edges = tangent_cone(delta)
    assert bounds == [(0, 0), (2, 3)]
    assert edges == [(0, 1)]


def test_cone_genfun_scalars_gl33():
    forest = gl33_forest()
    scalars = sorted(cone_genfun(d).scalar for d in subgraphs(forest))
    assert scalars == [Fraction(1, 3), Fraction(1, 2), Fraction(1, 2), 1]
    full = cone_genfun(forest)
    assert full.scalar == Fraction(1, 3)
    assert full.numerator_exp == (0, 0, 0)


def test_cone_genfun_edgeless():
    forest = Forest((0, 1, 3), frozenset())
    desc = cone_genfun(forest)
    assert desc.scalar == 1
    assert desc.numerator_exp == (0, 1, 3)
    assert desc.denominator_vars == (0, 1, 2)


def test_enumerate_lattice_interval():
    poly = OrderPolyhedron(1, {0: 5}, frozenset())
    assert enumerate_lattice(poly, 3) == [(3,), (4,), (5,)]


def test_enumerate_lattice_box_product():
    poly = OrderPolyhedron(2, {0: 1, 1: 0}, frozenset())
    points = enumerate_lattice(poly, -1)
    assert points == sorted((a, b) for a in (-1, 0, 1) for b in (-1, 0))


def test_enumerate_lattice_gl33_against_brute():
    forest = gl33_forest()
    poly = polyhedron_of_forest(forest)
    got = enumerate_lattice(poly, -1)
    expected = brute_lattice_points((0, 1, 3), [(0, 1), (0, 2)], -1)
    assert got == expected
    assert len(got) == 23


def test_enumerate_lattice_pinned_coordinates():
    poly = OrderPolyhedron(2, {1: 2}, frozenset({(0, 1)}), pinned={0: -5})
    points = enumerate_lattice(poly, 0)
    assert points == [(-5, b) for b in range(0, 3)]


def test_enumerate_lattice_empty_when_cutoff_beats_bound():
    poly = OrderPolyhedron(1, {0: 2}, frozenset())
    assert enumerate_lattice(poly, 3) == []


def test_order_polyhedron_validation():
    with pytest.raises(ValueError):
        OrderPolyhedron(1, {}, frozenset())
    with pytest.raises(ValueError):
        OrderPolyhedron(1, {0: 1}, frozenset(), pinned={0: 1})


def test_chain_decomposition_two_chain():
    forest = Forest((0, 1), frozenset({(0, 1)}))
    report = chain_decomposition_report(forest, 0, -3)
    assert report.ok
    assert report.total_points == sum(1 for a in range(-3, 1)
                                      for b in range(a, 1))
    assert report.diagonal_points == 4  # the tied points (a, a)
    assert set(report.region_counts) == {(0, 1)}


def test_chain_decomposition_single_vertex():
    forest = Forest((0,), frozenset())
    assert chain_decomposition_check(forest, 0, -4)


def test_chain_decomposition_gl33_bound_zero():
    forest = gl33_forest()
    report = chain_decomposition_report(forest, 0, -3)
    assert report.ok
    assert len(report.region_counts) == 2  # one region per compatible ordering


def test_chain_decomposition_antichain():
    forest = Forest((0, 2), frozenset())
    report = chain_decomposition_report(forest, 1, -2)
    assert report.ok
    assert len(report.region_counts) == 2
    # every point lands somewhere, ties broken by coordinate index
    assert sum(report.region_counts.values()) == report.total_points
