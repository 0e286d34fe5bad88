"""Multigraph mechanics, family builders, duality, and link bookkeeping."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linkzeros.graphs import (
    FAMILY_BOUNDS,
    GRAPH_KINDS,
    Multigraph,
    SignedMultigraph,
    build_graph,
    dual_pair,
    link_component_count,
    link_presentation,
)


def _random_connected(n, edges_extra):
    edges = [(i, i + 1) for i in range(n - 1)]
    edges += [(u % n, v % n) for u, v in edges_extra]
    return Multigraph(n, edges)


small_graphs = st.builds(
    _random_connected,
    st.integers(2, 5),
    st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=5),
)


# --- basic mechanics --------------------------------------------------------


def test_edge_normalization_and_counts():
    g = Multigraph(3, [(2, 0), (1, 1), (0, 1)])
    assert g.edges == ((0, 2), (1, 1), (0, 1))
    assert g.edge_count == 3
    assert g.is_loop(1) and not g.is_loop(0)
    assert g.degree(1) == 3  # the loop counts twice


def test_component_count_and_cyclomatic():
    g = Multigraph(4, [(0, 1), (2, 3)])
    assert g.component_count() == 2
    assert g.cyclomatic() == 0
    c4 = build_graph("C", 4)
    assert c4.component_count() == 1
    assert c4.cyclomatic() == 1


def test_bridges_and_loops():
    g = Multigraph(3, [(0, 1), (1, 2), (1, 2), (0, 0)])
    assert g.is_bridge(0)
    assert not g.is_bridge(1)  # doubled edge
    assert not g.is_bridge(3)  # loop


def test_delete_and_contract():
    c3 = build_graph("C", 3)
    assert c3.delete_edge(0).edge_count == 2
    assert c3.delete_edge(0).n == 3
    contracted = c3.contract_edge(0)
    assert contracted.n == 2
    assert contracted.edge_count == 2  # the triangle collapses to a digon
    # contracting a parallel pair leaves a loop
    digon = Multigraph(2, [(0, 1), (0, 1)])
    assert digon.contract_edge(0).edges == ((0, 0),)


@given(small_graphs, st.randoms())
@settings(max_examples=40)
def test_relabeling_preserves_isomorphism(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert g.relabeled(perm).is_isomorphic(g)
    assert g.relabeled(perm).iso_invariant() == g.iso_invariant()


def test_non_isomorphic_same_counts():
    hexagon = build_graph("C", 6)
    two_triangles = Multigraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert hexagon.n == two_triangles.n
    assert hexagon.edge_count == two_triangles.edge_count
    assert not hexagon.is_isomorphic(two_triangles)


@given(small_graphs)
def test_graph_json_round_trip(g):
    assert Multigraph.from_json(g.to_json()) == g


def test_signed_graph_json_round_trip():
    sg = SignedMultigraph(3, [(0, 1), (1, 2), (0, 2)], [1, -1, 1])
    assert SignedMultigraph.from_json(sg.to_json()) == sg
    assert sg.count_sign(-1) == 1
    assert not sg.all_positive()


# --- family builders --------------------------------------------------------


def test_family_kind_sizes():
    # (vertices, edges) for each parametric kind
    assert (build_graph("C", 7).n, build_graph("C", 7).edge_count) == (7, 7)
    assert (build_graph("FL", 7).n, build_graph("FL", 7).edge_count) == (2, 7)
    assert (build_graph("D1C", 6).n, build_graph("D1C", 6).edge_count) == (6, 7)
    assert (build_graph("Wheel", 6).n, build_graph("Wheel", 6).edge_count) == (6, 10)
    assert (build_graph("H3", 6).n, build_graph("H3", 6).edge_count) == (8, 12)
    assert (build_graph("DC", 6).n, build_graph("DC", 6).edge_count) == (6, 12)
    assert (build_graph("HW", 7).n, build_graph("HW", 7).edge_count) == (7, 9)


def test_build_graph_validation():
    with pytest.raises(ValueError):
        build_graph("nope", 3)
    with pytest.raises(ValueError):
        build_graph("HW", 6)  # even n has no half wheel
    with pytest.raises(ValueError):
        build_graph("Wheel", 2)


def test_wheel_structure():
    # n vertices total: a hub joined to every vertex of an (n-1)-cycle rim
    w = build_graph("Wheel", 5)
    assert sorted(w.degree(v) for v in range(w.n)) == [3, 3, 3, 3, 4]


def test_dual_pairs_obey_euler():
    for kind in ("C", "FL", "H3", "DC", "Wheel"):
        g, d = dual_pair(kind, 5)
        assert g.edge_count == d.edge_count
        # V - E + F = 2 with F the dual's vertex count
        assert g.n - g.edge_count + d.n == 2
    with pytest.raises(ValueError):
        dual_pair("D1C", 5)


# --- link bookkeeping -------------------------------------------------------


def test_link_component_counts_on_known_links():
    # (2, n) torus links: gcd(2, n) components
    for n in range(1, 9):
        assert link_component_count(build_graph("C", n)) == (1 if n % 2 else 2)
        if n >= 2:
            assert link_component_count(build_graph("FL", n)) == (1 if n % 2 else 2)
    # one-crossing unknot diagrams, both checkerboard shadings
    assert link_component_count(Multigraph(1, [(0, 0)])) == 1
    assert link_component_count(Multigraph(2, [(0, 1)])) == 1
    # chain of n clasped rings
    for n in range(2, 8):
        assert link_component_count(build_graph("H3", n)) == n


def test_presentation_euler_and_components():
    for family, lo in FAMILY_BOUNDS.items():
        for n in range(lo, 11):
            if family == "F" and n % 2 == 0:
                continue
            p = link_presentation(family, n)
            assert p.n_dark + p.n_light == p.crossings + 2
            assert p.n_dark == p.graph.n
            assert p.n_components >= 1


def test_presentation_values():
    p = link_presentation("A", 9)
    assert (p.crossings, p.writhe, p.n_components) == (9, -9, 1)
    p = link_presentation("B", 5)
    assert (p.crossings, p.writhe) == (8, 0)
    p = link_presentation("E", 2)
    assert (p.crossings, p.writhe, p.n_components) == (4, -4, 2)
    p = link_presentation("F", 7)
    assert (p.crossings, p.writhe) == (9, -3)
    with pytest.raises(ValueError):
        link_presentation("F", 6)
    with pytest.raises(ValueError):
        link_presentation("A", 2)
    with pytest.raises(ValueError):
        link_presentation("Q", 5)
