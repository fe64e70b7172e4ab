"""Seeded random instance generators.

All generators are pure functions of (parameters, seed): the same call
always returns the same digraph.  Vertex pairs are visited in sorted order
and all randomness flows through one ``random.Random(seed)``, which pins the
draw sequence.
"""

from __future__ import annotations

import random
from typing import Sequence

from .errors import BadParameter
from .graph import ColoredDigraph

GENERATOR_KINDS = (
    "random-digraph",
    "random-tournament",
    "random-bipartite-tournament",
    "colored-cycle",
)


def random_digraph(n: int, arc_prob: float, m: int, seed: int) -> ColoredDigraph:
    """Each ordered pair (u, v), u != v, carries an arc with probability
    `arc_prob`, colored uniformly from 1..m."""
    if n < 0 or m < 1 or not (0.0 <= arc_prob <= 1.0):
        raise BadParameter(f"bad random-digraph parameters n={n}, p={arc_prob}, m={m}")
    rng = random.Random(seed)
    arcs = []
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < arc_prob:
                arcs.append((u, v, rng.randint(1, m)))
    return ColoredDigraph(n, arcs)


def random_tournament(n: int, m: int, seed: int) -> ColoredDigraph:
    """Random orientation of the complete graph, colors uniform from 1..m."""
    if n < 0 or m < 1:
        raise BadParameter(f"bad random-tournament parameters n={n}, m={m}")
    rng = random.Random(seed)
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.5:
                arcs.append((u, v, rng.randint(1, m)))
            else:
                arcs.append((v, u, rng.randint(1, m)))
    return ColoredDigraph(n, arcs)


def random_semicomplete(n: int, m: int, seed: int, both_prob: float = 0.3) -> ColoredDigraph:
    """Random semi-complete digraph: every pair gets one arc or both.

    With probability `both_prob` a pair carries a 2-cycle, otherwise a single
    uniformly oriented arc.  Colors uniform from 1..m.
    """
    if n < 0 or m < 1 or not (0.0 <= both_prob <= 1.0):
        raise BadParameter(f"bad random-semicomplete parameters n={n}, m={m}")
    rng = random.Random(seed)
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < both_prob:
                arcs.append((u, v, rng.randint(1, m)))
                arcs.append((v, u, rng.randint(1, m)))
            elif rng.random() < 0.5:
                arcs.append((u, v, rng.randint(1, m)))
            else:
                arcs.append((v, u, rng.randint(1, m)))
    return ColoredDigraph(n, arcs)


def random_bipartite_tournament(nx: int, ny: int, m: int, seed: int) -> ColoredDigraph:
    """Random orientation of the complete bipartite graph on X = x0..x{nx-1},
    Y = y0..y{ny-1}; every (x, y) pair carries exactly one arc."""
    if nx < 0 or ny < 0 or m < 1:
        raise BadParameter(f"bad random-bipartite-tournament parameters {nx},{ny},{m}")
    rng = random.Random(seed)
    labels = [f"x{i}" for i in range(nx)] + [f"y{j}" for j in range(ny)]
    arcs = []
    for x in range(nx):
        for y in range(nx, nx + ny):
            if rng.random() < 0.5:
                arcs.append((x, y, rng.randint(1, m)))
            else:
                arcs.append((y, x, rng.randint(1, m)))
    return ColoredDigraph(nx + ny, arcs, labels)


def colored_cycle(colors: Sequence[int]) -> ColoredDigraph:
    """The cycle (v0, ..., v_{n-1}, v0) with c(v_i v_{i+1}) = colors[i]."""
    n = len(colors)
    if n < 2:
        raise BadParameter(f"a cycle needs at least 2 vertices, got {n}")
    arcs = [(i, (i + 1) % n, colors[i]) for i in range(n)]
    return ColoredDigraph(n, arcs)


def generate(kind: str, params: dict, seed: int = 0) -> ColoredDigraph:
    """Dispatch by generator kind; deterministic for fixed (kind, params, seed)."""
    if kind == "random-digraph":
        return random_digraph(
            params["n"], params.get("arc_prob", 0.3), params.get("m", 2), seed
        )
    if kind == "random-tournament":
        return random_tournament(params["n"], params.get("m", 2), seed)
    if kind == "random-bipartite-tournament":
        return random_bipartite_tournament(
            params["nx"], params["ny"], params.get("m", 2), seed
        )
    if kind == "colored-cycle":
        return colored_cycle(params["colors"])
    raise BadParameter(f"unknown generator kind {kind!r}")


def derive_seed(base: int, index: int) -> int:
    """Stable per-instance seed stream: a splitmix-style mix of (base, index).

    Independent of Python's salted ``hash``; identical across runs and
    platforms, so reports stay reproducible under any scheduling.
    """
    z = (base * 0x9E3779B97F4A7C15 + index * 0xBF58476D1CE4E5B9 + 0x94D049BB133111EB) % 2**64
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) % 2**64
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) % 2**64
    return z ^ (z >> 31)
