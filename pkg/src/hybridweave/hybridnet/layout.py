"""Deterministic force-directed snapshot layout.

Every edge gets a desired length L(w) = L0 / (1 + w): the heavier the edge,
the shorter the line.  Springs relax edges toward their desired length;
a repulsive force acts only between non-adjacent node pairs, so a two-node
graph converges to exactly L(w) and heavier edges always end up strictly
shorter.  Initial positions come from a seeded RNG and all arithmetic runs
in sorted node order, which makes the result bit-identical for identical
(snapshot, seed, iterations) inputs.
"""

from __future__ import annotations

import math
import random

from hybridweave.hybridnet.snapshot import HybridSnapshot

BASE_LENGTH = 100.0
_SPRING_STEP = 0.1
_REPULSION = BASE_LENGTH * BASE_LENGTH
_MAX_PUSH = 5.0
_MIN_DIST = 1e-9


def desired_length(weight: int) -> float:
    return BASE_LENGTH / (1.0 + weight)


def layout_snapshot(
    snapshot: HybridSnapshot, seed: int, iterations: int = 300
) -> dict[str, tuple[float, float]]:
    """Positions for every snapshot node; an isolated single node keeps its
    seeded initial position."""
    ids = sorted(snapshot.nodes)
    rng = random.Random(seed)
    pos = {v: [rng.uniform(0.0, BASE_LENGTH), rng.uniform(0.0, BASE_LENGTH)] for v in ids}
    if len(ids) < 2:
        return {v: (p[0], p[1]) for v, p in pos.items()}

    springs: list[tuple[str, str, float]] = []
    adjacent: set[tuple[str, str]] = set()
    for edges in (snapshot.comm_edges, snapshot.contrib_edges):
        for (a, b), w in sorted(edges.items()):
            u, v = (a, b) if a < b else (b, a)
            springs.append((u, v, desired_length(w)))
            adjacent.add((u, v))

    for it in range(iterations):
        disp = {v: [0.0, 0.0] for v in ids}
        for i, u in enumerate(ids):
            for v in ids[i + 1:]:
                if (u, v) in adjacent:
                    continue
                dx = pos[u][0] - pos[v][0]
                dy = pos[u][1] - pos[v][1]
                dist = math.hypot(dx, dy)
                if dist < _MIN_DIST:
                    # Coincident non-adjacent nodes: nudge along x, sorted
                    # order decides who goes which way.
                    dx, dy, dist = 1.0, 0.0, 1.0
                push = min(_SPRING_STEP * _REPULSION / (dist * dist), _MAX_PUSH)
                disp[u][0] += push * dx / dist
                disp[u][1] += push * dy / dist
                disp[v][0] -= push * dx / dist
                disp[v][1] -= push * dy / dist
        for u, v, length in springs:
            dx = pos[v][0] - pos[u][0]
            dy = pos[v][1] - pos[u][1]
            dist = math.hypot(dx, dy)
            if dist < _MIN_DIST:
                dx, dy, dist = 1.0, 0.0, 1.0
            pull = _SPRING_STEP * (dist - length) / 2.0
            disp[u][0] += pull * dx / dist
            disp[u][1] += pull * dy / dist
            disp[v][0] -= pull * dx / dist
            disp[v][1] -= pull * dy / dist
        for v in ids:
            pos[v][0] += disp[v][0]
            pos[v][1] += disp[v][1]

    return {v: (pos[v][0], pos[v][1]) for v in ids}
