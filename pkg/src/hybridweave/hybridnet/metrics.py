"""Node metrics for hybrid snapshots.

Betweenness is computed on the person-person communication subgraph only
(Brandes' algorithm, unweighted shortest paths): at coarse artifact
granularity the artifact nodes would dominate every shortest path and say
nothing about the participants.  Values are normalized by (n-1)(n-2)/2 over
the person count n, so a 3-node path scores 1.0 for its middle node.
"""

from __future__ import annotations

from collections import deque

from hybridweave.ingest.records import PERSON
from hybridweave.hybridnet.snapshot import HybridSnapshot, MetricBundle


def _brandes(nodes: list[str], adjacency: dict[str, list[str]]) -> dict[str, float]:
    """Raw betweenness over unordered pairs for an undirected graph."""
    centrality = {v: 0.0 for v in nodes}
    for source in nodes:
        stack: list[str] = []
        predecessors: dict[str, list[str]] = {v: [] for v in nodes}
        sigma = {v: 0 for v in nodes}
        sigma[source] = 1
        dist = {v: -1 for v in nodes}
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            stack.append(v)
            for w in adjacency[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    predecessors[w].append(v)
        delta = {v: 0.0 for v in nodes}
        while stack:
            w = stack.pop()
            for v in predecessors[w]:
                delta[v] += sigma[v] / sigma[w] * (1 + delta[w])
            if w != source:
                centrality[w] += delta[w]
    # Each unordered pair was counted from both endpoints.
    return {v: c / 2.0 for v, c in centrality.items()}


def compute_metrics(snapshot: HybridSnapshot) -> HybridSnapshot:
    """Fill per-node degree, weighted degree, and betweenness."""
    degree = {v: 0 for v in snapshot.nodes}
    weighted = {v: 0 for v in snapshot.nodes}
    for edges in (snapshot.comm_edges, snapshot.contrib_edges):
        for (a, b), w in edges.items():
            degree[a] += 1
            degree[b] += 1
            weighted[a] += w
            weighted[b] += w

    persons = sorted(v for v, kind in snapshot.nodes.items() if kind == PERSON)
    adjacency: dict[str, list[str]] = {v: [] for v in persons}
    for (a, b) in snapshot.comm_edges:
        adjacency[a].append(b)
        adjacency[b].append(a)
    for neighbors in adjacency.values():
        neighbors.sort()

    n = len(persons)
    betweenness = {v: 0.0 for v in snapshot.nodes}
    if n >= 3:
        raw = _brandes(persons, adjacency)
        scale = (n - 1) * (n - 2) / 2.0
        for v in persons:
            betweenness[v] = raw[v] / scale

    snapshot.metrics = {
        v: MetricBundle(degree[v], weighted[v], betweenness[v]) for v in snapshot.nodes
    }
    return snapshot
