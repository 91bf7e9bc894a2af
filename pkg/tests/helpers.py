"""Seeded random builders shared across the test modules."""

from __future__ import annotations

import random

from starpcg import Graph


def random_graph(rng: random.Random, n_min: int = 1, n_max: int = 10) -> Graph:
    """Random simple graph; occasionally edgeless or complete."""
    n = rng.randint(n_min, n_max)
    roll = rng.random()
    p = 0.0 if roll < 0.08 else 1.0 if roll > 0.92 else rng.random()
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_weights(rng: random.Random, n: int, bound: int) -> tuple[int, ...]:
    return tuple(rng.randint(0, bound) for _ in range(n))
