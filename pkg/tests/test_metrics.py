"""Betweenness and degree metric tests."""

import itertools
import random

import pytest

from oracles import networkx_betweenness
from hybridweave.hybridnet.metrics import compute_metrics
from hybridweave.hybridnet.snapshot import HybridSnapshot


def make_snapshot(persons, comm=None, artifacts=None, contrib=None):
    nodes = {p: "person" for p in persons}
    for a in artifacts or []:
        nodes[a] = "artifact"
    return HybridSnapshot(
        window=(0, 1),
        nodes=nodes,
        labels={v: v for v in nodes},
        comm_edges=dict(comm or {}),
        contrib_edges=dict(contrib or {}),
    )


def betweenness(snapshot):
    return {v: m.betweenness for v, m in compute_metrics(snapshot).metrics.items()}


def test_path_of_three():
    snap = make_snapshot(["a", "b", "c"], {("a", "b"): 1, ("b", "c"): 1})
    assert betweenness(snap) == {"a": 0.0, "b": 1.0, "c": 0.0}


def test_star_center():
    snap = make_snapshot(
        ["hub", "l1", "l2", "l3", "l4"],
        {("hub", leaf): 1 for leaf in ["l1", "l2", "l3", "l4"]},
    )
    values = betweenness(snap)
    assert values["hub"] == 1.0
    assert all(values[leaf] == 0.0 for leaf in ["l1", "l2", "l3", "l4"])


def test_four_cycle():
    snap = make_snapshot(
        ["a", "b", "c", "d"],
        {("a", "b"): 1, ("b", "c"): 1, ("c", "d"): 1, ("a", "d"): 1},
    )
    values = betweenness(snap)
    # Each opposite pair has two shortest paths; every node carries half a
    # pair, scaled by (n-1)(n-2)/2 = 3.
    for v in "abcd":
        assert values[v] == pytest.approx(0.5 / 3)


def test_fewer_than_three_persons_is_zero():
    snap = make_snapshot(["a", "b"], {("a", "b"): 5})
    assert betweenness(snap) == {"a": 0.0, "b": 0.0}


def test_artifacts_always_zero_and_excluded_from_paths():
    # Two persons joined only through an artifact: no person-person path.
    snap = make_snapshot(
        ["a", "b", "c"],
        {("a", "b"): 1, ("b", "c"): 1},
        artifacts=["a:hub"],
        contrib={("a", "a:hub"): 9, ("c", "a:hub"): 9},
    )
    values = betweenness(snap)
    assert values["a:hub"] == 0.0
    # The artifact shortcut a - a:hub - c must not drain b's centrality.
    assert values["b"] == 1.0


def test_degree_and_weighted_degree_count_both_edge_kinds():
    snap = make_snapshot(
        ["a", "b"],
        {("a", "b"): 3},
        artifacts=["a:lib"],
        contrib={("a", "a:lib"): 4},
    )
    metrics = compute_metrics(snap).metrics
    assert metrics["a"].degree == 2
    assert metrics["a"].weighted_degree == 7
    assert metrics["b"].degree == 1
    assert metrics["b"].weighted_degree == 3
    assert metrics["a:lib"].degree == 1
    assert metrics["a:lib"].weighted_degree == 4


def test_disconnected_components():
    snap = make_snapshot(
        ["a", "b", "c", "d", "e"],
        {("a", "b"): 1, ("b", "c"): 1, ("d", "e"): 1},
    )
    values = betweenness(snap)
    oracle = networkx_betweenness(snap)
    for v in values:
        assert values[v] == pytest.approx(oracle[v], abs=1e-12)


def test_exhaustive_five_node_graphs_match_networkx():
    persons = ["a", "b", "c", "d", "e"]
    pairs = list(itertools.combinations(persons, 2))
    for mask in range(1 << len(pairs)):
        comm = {pairs[i]: 1 for i in range(len(pairs)) if mask >> i & 1}
        snap = make_snapshot(persons, comm)
        values = betweenness(snap)
        oracle = networkx_betweenness(snap)
        for v in persons:
            assert values[v] == pytest.approx(oracle[v], abs=1e-12), (mask, v)


def test_random_eight_node_graphs_match_networkx():
    rng = random.Random(808)
    persons = [f"p{i}" for i in range(8)]
    pairs = list(itertools.combinations(persons, 2))
    for _ in range(50):
        comm = {pair: rng.randint(1, 5) for pair in pairs if rng.random() < 0.4}
        snap = make_snapshot(persons, comm)
        values = betweenness(snap)
        oracle = networkx_betweenness(snap)
        for v in persons:
            assert values[v] == pytest.approx(oracle[v], abs=1e-12)
