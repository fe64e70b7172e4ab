"""Named counterexample instances and their stretched families.

The four named instances are small arc-colored digraphs with no kernel by
properly colored paths; the families extend two of them to every larger
order while preserving that property.
"""

from __future__ import annotations

import random

from .errors import BadParameter, UnknownInstance
from .graph import ColoredDigraph

NAMED_INSTANCES = ("fig1-left", "fig1-right", "fig2-tournament", "fig3-d6")

FAMILY_NAMES = ("remark1-even", "remark1-odd", "remark4")


def _build(labels: list[str], colored_arcs: dict[int, list[tuple[str, str]]]) -> ColoredDigraph:
    index = {lab: i for i, lab in enumerate(labels)}
    arcs = [
        (index[u], index[v], c)
        for c, pairs in sorted(colored_arcs.items())
        for u, v in pairs
    ]
    return ColoredDigraph(len(labels), arcs, labels)


def named_instance(name: str) -> ColoredDigraph:
    """One of the four embedded no-kernel instances."""
    if name == "fig1-left":
        return _build(
            [f"v{i}" for i in range(1, 7)],
            {
                1: [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v5", "v6"), ("v6", "v1")],
                2: [("v3", "v5"), ("v5", "v4")],
            },
        )
    if name == "fig1-right":
        return _build(
            [f"u{i}" for i in range(1, 10)],
            {
                1: [
                    ("u1", "u2"),
                    ("u2", "u3"),
                    ("u3", "u4"),
                    ("u5", "u6"),
                    ("u6", "u7"),
                    ("u8", "u9"),
                    ("u9", "u1"),
                ],
                2: [("u3", "u5"), ("u5", "u4")],
                3: [("u6", "u8"), ("u8", "u7")],
            },
        )
    if name == "fig2-tournament":
        return _build(
            [f"v{i}" for i in range(1, 5)],
            {
                1: [("v1", "v2"), ("v1", "v3"), ("v1", "v4")],
                2: [("v2", "v3"), ("v3", "v4"), ("v4", "v2")],
            },
        )
    if name == "fig3-d6":
        return _build(
            ["x1", "x2", "x3", "y1", "y2", "y3"],
            {
                1: [("x1", "y1"), ("y1", "x2"), ("y2", "x1")],
                2: [("x2", "y2"), ("y2", "x3"), ("y3", "x2")],
                3: [("x3", "y3"), ("y1", "x3"), ("y3", "x1")],
            },
        )
    raise UnknownInstance(name)


def remark1_even(n: int) -> ColoredDigraph:
    """Even-order stretch of fig1-left: the 2-arc color-1 path through v1 is
    replaced by a color-1 path of length n-4, giving n vertices total.

    ``remark1_even(6)`` is exactly fig1-left.
    """
    if n < 6 or n % 2 != 0:
        raise BadParameter(f"remark1-even needs an even n >= 6, got {n}")
    labels = [f"v{i}" for i in range(1, 7)] + [f"v{i}" for i in range(7, n + 1)]
    colored: dict[int, list[tuple[str, str]]] = {
        1: [("v2", "v3"), ("v3", "v4"), ("v5", "v6")],
        2: [("v3", "v5"), ("v5", "v4")],
    }
    chain = ["v6", "v1"] + [f"v{i}" for i in range(7, n + 1)] + ["v2"]
    colored[1].extend(zip(chain, chain[1:]))
    return _build(labels, colored)


def remark1_odd(n: int) -> ColoredDigraph:
    """Odd-order stretch of fig1-right: the 2-arc color-1 path through u1 is
    replaced by a color-1 path of length n-7.

    ``remark1_odd(9)`` is exactly fig1-right; at n=7 the replacement path has
    length zero, which merges u9 into u2 and drops u1.
    """
    if n < 7 or n % 2 != 1:
        raise BadParameter(f"remark1-odd needs an odd n >= 7, got {n}")
    if n == 7:
        return _build(
            [f"u{i}" for i in range(2, 9)],
            {
                1: [("u2", "u3"), ("u3", "u4"), ("u5", "u6"), ("u6", "u7"), ("u8", "u2")],
                2: [("u3", "u5"), ("u5", "u4")],
                3: [("u6", "u8"), ("u8", "u7")],
            },
        )
    labels = [f"u{i}" for i in range(1, 10)] + [f"u{i}" for i in range(10, n + 1)]
    colored: dict[int, list[tuple[str, str]]] = {
        1: [("u2", "u3"), ("u3", "u4"), ("u5", "u6"), ("u6", "u7"), ("u8", "u9")],
        2: [("u3", "u5"), ("u5", "u4")],
        3: [("u6", "u8"), ("u8", "u7")],
    }
    chain = ["u9", "u1"] + [f"u{i}" for i in range(10, n + 1)] + ["u2"]
    colored[1].extend(zip(chain, chain[1:]))
    return _build(labels, colored)


def remark4(
    base: ColoredDigraph,
    connector: str = "const",
    color: int = 1,
    seed: int = 0,
) -> ColoredDigraph:
    """Union of fig3-d6 and `base` with all arcs oriented from base into the
    six-vertex part.

    The six-vertex part keeps its three colors; base colors are shifted past
    them so both colorings "remain the same" as equality classes.  Connector
    arcs (one per (base vertex, d6 vertex) pair, in sorted order) are colored
    per `connector`:

    - ``const``: every connector arc gets `color`;
    - ``cyclic``: connector arcs cycle through 1..max(3, base max color);
    - ``random``: uniform over the same range, from `seed`.
    """
    if base.n < 1:
        raise BadParameter("remark4 base digraph must have at least one vertex")
    d6 = named_instance("fig3-d6")
    shift = d6.m
    labels = list(d6.labels) + [f"b:{lab}" for lab in base.labels]
    arcs = [(u, v, c) for u, v, c in d6.arcs()]
    arcs += [(d6.n + u, d6.n + v, c + shift) for u, v, c in base.arcs()]

    ncolors = max(3, base.m + shift)
    if connector == "random":
        rng = random.Random(seed)
    k = 0
    for bu in range(base.n):
        for dv in range(d6.n):
            if connector == "const":
                c = color
                if c < 1:
                    raise BadParameter("connector color must be >= 1")
            elif connector == "cyclic":
                c = 1 + k % ncolors
            elif connector == "random":
                c = rng.randint(1, ncolors)
            else:
                raise BadParameter(f"unknown connector policy {connector!r}")
            arcs.append((d6.n + bu, dv, c))
            k += 1
    return ColoredDigraph(d6.n + base.n, arcs, labels)


def family_instance(name: str, **params) -> ColoredDigraph:
    """Dispatch to one of the counterexample families by name."""
    if name == "remark1-even":
        return remark1_even(**params)
    if name == "remark1-odd":
        return remark1_odd(**params)
    if name == "remark4":
        return remark4(**params)
    raise UnknownInstance(name)
