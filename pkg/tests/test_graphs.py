import json

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import EXTRA
from semigraphs import (
    Semigroup,
    commuting_graph,
    cyclic_graph,
    enhanced_power_graph,
    export_graph,
    graphs_equal,
    is_complete,
    is_spanning_subgraph,
    make_brandt,
    make_cyclic_group,
    make_monogenic,
    make_zn_mult,
    power_graph,
    signs_semigroup,
)
from semigraphs.constructors import brandt_id
from semigraphs.enumeration import enumerate_semigroups
from semigraphs.errors import SourceMismatch, UnknownFormat
from semigraphs.graphs import GraphKind, SimpleGraph, build_graph, edge_difference, graph_from_json

CHAIN = [GraphKind.POWER, GraphKind.CYCLIC, GraphKind.ENHANCED_POWER, GraphKind.COMMUTING]


def test_power_graph_examples(m26, b2):
    G = power_graph(m26)
    assert not G.has_edge(1, 2)  # a^2, a^3
    assert G.has_edge(0, 1)  # a, a^2
    assert not power_graph(b2).has_edge(0, brandt_id(2, 1, 1))


def test_cyclic_graph_examples(z4, m32, m26):
    assert not cyclic_graph(z4).has_edge(0, 1)
    assert not cyclic_graph(m32).has_edge(1, 2)
    G = cyclic_graph(m26)
    assert is_complete(G) and G.edge_count == 21


def test_enhanced_power_graph_examples(m32, signs):
    assert is_complete(enhanced_power_graph(m32))
    assert not enhanced_power_graph(signs).has_edge(1, 2)  # 0 and 1
    G = enhanced_power_graph(make_cyclic_group(6))
    assert is_complete(G)
    assert G.edges() == sorted(oracles.enhanced_edges(make_cyclic_group(6).table))


def test_commuting_graph_examples(signs, b2):
    assert is_complete(commuting_graph(signs))
    G = commuting_graph(b2)
    assert G.neighbours(0) == [1, 2, 3, 4]
    assert not G.has_edge(brandt_id(2, 1, 1), brandt_id(2, 1, 2))


def test_is_complete_examples(m32):
    assert is_complete(enhanced_power_graph(m32))
    assert not is_complete(cyclic_graph(m32))
    assert is_complete(power_graph(make_cyclic_group(1)))


def test_equality_and_spanning(m26):
    pw, cy = power_graph(m26), cyclic_graph(m26)
    assert not graphs_equal(pw, cy)
    assert is_spanning_subgraph(pw, cy)
    assert not is_spanning_subgraph(cy, pw)
    assert graphs_equal(cy, cy)
    assert edge_difference(pw, cy)[0] == (1, 2)


@pytest.mark.parametrize("name", ["S3", "Q8", "D4"])
def test_cyclic_equals_enhanced_on_groups(name):
    G = EXTRA[name]()
    assert graphs_equal(cyclic_graph(G), enhanced_power_graph(G))


def test_source_mismatch(m32, z4):
    with pytest.raises(SourceMismatch):
        graphs_equal(power_graph(m32), power_graph(z4))
    with pytest.raises(SourceMismatch):
        is_spanning_subgraph(power_graph(make_monogenic(2, 3)), power_graph(make_zn_mult(4)))


def test_simple_graph_rejects_loops_and_asymmetry():
    with pytest.raises(ValueError):
        SimpleGraph(2, (0b01, 0), GraphKind.POWER)
    with pytest.raises(ValueError):
        SimpleGraph(2, (0b10, 0), GraphKind.POWER)


def test_export_one_vertex():
    G = power_graph(make_cyclic_group(1))
    dot = export_graph(G, "dot")
    assert dot == 'graph power {\n  0 [label="a"];\n}\n'
    assert json.loads(export_graph(G, "json")) == {"order": 1, "kind": "power", "edges": []}


def test_export_counts(signs, b2):
    assert len(json.loads(export_graph(commuting_graph(signs)))["edges"]) == 3
    # oracle scan: only (1,2) and (2,1) have a non-trivial power, namely 0
    edges = json.loads(export_graph(power_graph(b2)))["edges"]
    assert {tuple(e) for e in edges} == oracles.power_edges(b2.table)
    assert edges == [[0, 2], [0, 3]]


def test_export_dot_is_sorted(m32):
    dot = export_graph(cyclic_graph(m32), "dot")
    edges = [line.strip() for line in dot.splitlines() if "--" in line]
    assert edges == ["0 -- 1;", "0 -- 2;", "0 -- 3;", "1 -- 3;", "2 -- 3;"]
    assert '1 [label="a^2"];' in dot


def test_export_unknown_format(m32):
    with pytest.raises(UnknownFormat):
        export_graph(power_graph(m32), "gml")


@pytest.mark.parametrize("kind", list(GraphKind))
def test_json_round_trip(kind, b2):
    G = build_graph(b2, kind)
    H = graph_from_json(export_graph(G, "json"), b2)
    assert H == G and graphs_equal(G, H)


# --- builders against brute force, and the spanning chain ---

SMALL = [S for n in range(1, 4) for S in enumerate_semigroups(n)] + [
    make_monogenic(m, r) for m in range(1, 6) for r in range(1, 7)
] + [make_brandt(2), make_zn_mult(8), make_zn_mult(9), signs_semigroup()] + [
    EXTRA[k]() for k in ("S3", "Q8", "D4", "T2")
]


@pytest.mark.parametrize("S", SMALL, ids=lambda S: f"n{S.order}")
def test_builders_match_oracles(S):
    for kind in GraphKind:
        G = build_graph(S, kind)
        assert set(G.edges()) == oracles.EDGE_ORACLES[kind.value](S.table), kind


@pytest.mark.parametrize("S", SMALL, ids=lambda S: f"n{S.order}")
def test_spanning_chain(S):
    graphs = [build_graph(S, k) for k in CHAIN]
    for small, big in zip(graphs, graphs[1:]):
        assert is_spanning_subgraph(small, big)


@pytest.mark.parametrize("m", range(2, 7))
@pytest.mark.parametrize("r", range(1, 9))
def test_power_nonadjacency_below_index_persists_in_cyclic_graph(m, r):
    S = make_monogenic(m, r)
    pw, cy = power_graph(S), cyclic_graph(S)
    for i in range(1, m):  # exponent i < m is id i-1
        for j in range(1, m + r):
            if i != j and not pw.has_edge(i - 1, j - 1):
                assert not cy.has_edge(i - 1, j - 1)


def transformation_semigroups():
    return st.integers(1, 3).flatmap(
        lambda k: st.lists(st.tuples(*[st.integers(0, k - 1)] * k), min_size=1, max_size=3)
    ).map(lambda maps: Semigroup(oracles.transformation_semigroup_table(maps)))


@settings(max_examples=80, deadline=None)
@given(transformation_semigroups())
def test_chain_and_oracles_on_random_transformation_semigroups(S):
    graphs = [build_graph(S, k) for k in CHAIN]
    for small, big in zip(graphs, graphs[1:]):
        assert is_spanning_subgraph(small, big)
    for kind, G in zip(CHAIN, graphs):
        assert set(G.edges()) == oracles.EDGE_ORACLES[kind.value](S.table)
        assert all(G.has_edge(y, x) for x, y in G.edges())
