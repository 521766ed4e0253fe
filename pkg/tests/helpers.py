"""Shared fixtures-in-code for the test suite."""

from __future__ import annotations

import random

from iwnet import Interval, IWNetwork, ZERO


def normalize_lines(text: str) -> list[str]:
    """Collapse runs of whitespace and drop blank lines for trace comparison."""
    out = []
    for line in text.splitlines():
        squeezed = " ".join(line.split())
        if squeezed:
            out.append(squeezed)
    return out


def toy_network() -> IWNetwork:
    """The four-vertex interval network used by the reference traces."""
    return IWNetwork.from_edges(
        ["v1", "v2", "v3", "v4"],
        [
            ("v1", "v2", 1, 3),
            ("v1", "v3", 1, 1),
            ("v2", "v3", 1, 1),
            ("v3", "v4", 2, 4),
        ],
    )


def toy_midpoints() -> list[list[float]]:
    """Midpoint projection of the four-vertex network (2w = 14)."""
    return toy_network().midpoints()


def triplet_midpoints() -> list[list[float]]:
    """Three-vertex scalar network: edges v1-v2 = 2 and v1-v3 = 1."""
    return [
        [0.0, 2.0, 1.0],
        [2.0, 0.0, 0.0],
        [1.0, 0.0, 0.0],
    ]


def random_network(
    rng: random.Random,
    n: int,
    *,
    max_radius: float = 3.0,
    density: float = 0.6,
) -> IWNetwork:
    """Random interval network with positive lower bounds and >= 1 edge."""
    while True:
        w = [[ZERO] * n for _ in range(n)]
        edges = 0
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < density:
                    radius = rng.uniform(0.0, max_radius)
                    mid = rng.uniform(radius + 0.1, radius + 10.0)
                    w[i][j] = w[j][i] = Interval(mid - radius, mid + radius)
                    edges += 1
        if edges:
            labels = tuple(f"n{i}" for i in range(n))
            return IWNetwork(labels, tuple(tuple(row) for row in w))


def random_degenerate_network(
    rng: random.Random, n: int, *, density: float = 0.6
) -> IWNetwork:
    """Random network whose weights are all degenerate intervals."""
    while True:
        w = [[ZERO] * n for _ in range(n)]
        edges = 0
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < density:
                    x = rng.uniform(0.5, 10.0)
                    w[i][j] = w[j][i] = Interval(x, x)
                    edges += 1
        if edges:
            labels = tuple(f"n{i}" for i in range(n))
            return IWNetwork(labels, tuple(tuple(row) for row in w))


def random_interval(rng: random.Random, span: float = 10.0) -> Interval:
    a = rng.uniform(-span, span)
    b = rng.uniform(-span, span)
    return Interval(min(a, b), max(a, b))
