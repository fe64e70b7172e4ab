"""Structural class tags for arc-colored digraphs.

Every flag is recomputable from the digraph alone; tags carry no authority
beyond recomputation.  The class-specific kernel constructors dispatch on
these.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cycles import CYCLE_BUDGET, count_cycles_up_to, is_acyclic
from .graph import ColoredDigraph
from .reach import MODE_PC, _pc_walk_targets, pc_path_exists


@dataclass(frozen=True)
class BipartitePartition:
    """The two sides of a bipartite tournament, each sorted ascending."""

    xs: tuple[int, ...]
    ys: tuple[int, ...]

    def side_of(self, v: int) -> int:
        return 0 if v in self.xs else 1


@dataclass(frozen=True)
class ClassTags:
    acyclic: bool
    is_cycle: bool
    unicyclic: bool
    tournament: bool
    semi_complete: bool
    bipartite_tournament: bool
    partition: BipartitePartition | None
    monochromatic: bool
    properly_arc_colored: bool
    properly_connected: bool


def _out_adj(d: ColoredDigraph) -> list[list[int]]:
    return [[w for w, _ in d.out(u)] for u in range(d.n)]


def _is_single_cycle(d: ColoredDigraph) -> bool:
    """True when the digraph is exactly one directed cycle through all
    vertices (length >= 2)."""
    if d.n < 2 or d.arc_count != d.n:
        return False
    if any(d.out_degree(v) != 1 or d.in_degree(v) != 1 for v in range(d.n)):
        return False
    # Follow the unique out-arcs; one cycle through everything comes back to
    # 0 after exactly n hops.
    v, steps = 0, 0
    while True:
        v = d.out(v)[0][0]
        steps += 1
        if v == 0:
            return steps == d.n
        if steps > d.n:
            return False


def find_bipartition(d: ColoredDigraph) -> BipartitePartition | None:
    """Partition witnessing that `d` is an orientation of a complete
    bipartite graph, or None.

    The complement of the underlying adjacency graph of a complete
    bipartite graph is a disjoint union of at most two cliques; those
    cliques are the sides.
    """
    n = d.n
    if n == 0:
        return BipartitePartition((), ())
    full = (1 << n) - 1
    comp_mask = [full & ~d.adj_mask(v) & ~(1 << v) for v in range(n)]
    # Connected components of the complement graph.
    comp_id = [-1] * n
    comps: list[list[int]] = []
    for v in range(n):
        if comp_id[v] != -1:
            continue
        cid = len(comps)
        stack = [v]
        comp_id[v] = cid
        members = [v]
        while stack:
            x = stack.pop()
            mask = comp_mask[x]
            while mask:
                w = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                if comp_id[w] == -1:
                    comp_id[w] = cid
                    members.append(w)
                    stack.append(w)
        comps.append(sorted(members))
    if len(comps) > 2:
        return None
    # Each component must be a clique of the complement, i.e. independent
    # in the underlying graph.
    for comp in comps:
        for i, u in enumerate(comp):
            for w in comp[i + 1 :]:
                if d.adjacent(u, w):
                    return None
    xs = comps[0]
    ys = comps[1] if len(comps) == 2 else []
    # Exactly one arc per cross pair and no arcs within a side.
    for x in xs:
        for y in ys:
            if d.has_arc(x, y) == d.has_arc(y, x):
                return None
    return BipartitePartition(tuple(xs), tuple(ys))


def is_properly_arc_colored(d: ColoredDigraph) -> bool:
    """Every directed 2-path u->v->w (w != u) changes color, and the two
    arcs of every 2-cycle have distinct colors."""
    for v in range(d.n):
        for u, cin in d.in_(v):
            for w, cout in d.out(v):
                if w == u:
                    continue
                if cin == cout:
                    return False
    for u, v, c in d.arcs():
        if u < v and d.color_or_none(v, u) == c:
            return False
    return True


def is_properly_connected(d: ColoredDigraph) -> bool:
    """Each vertex reaches every other vertex by a PC path."""
    if d.n <= 1:
        return True
    everyone = frozenset(range(d.n))
    for u in range(d.n):
        targets = everyone - {u}
        # Walk-level screen first: misses here are definitive.
        if not targets <= _pc_walk_targets(d, u):
            return False
        for v in sorted(targets):
            if pc_path_exists(d, u, v, MODE_PC) is None:
                return False
    return True


def classify(d: ColoredDigraph, cycle_budget: int = CYCLE_BUDGET) -> ClassTags:
    """Compute every class flag per its definition."""
    n = d.n
    adj = _out_adj(d)
    acyclic = is_acyclic(n, adj)
    if acyclic:
        n_cycles = 0
    else:
        n_cycles = count_cycles_up_to(n, adj, stop_at=2, budget=cycle_budget)

    pairs_one_arc = True
    pairs_some_arc = True
    for u in range(n):
        for v in range(u + 1, n):
            fwd = d.has_arc(u, v)
            bwd = d.has_arc(v, u)
            if not (fwd or bwd):
                pairs_one_arc = False
                pairs_some_arc = False
            elif fwd and bwd:
                pairs_one_arc = False

    partition = find_bipartition(d)

    return ClassTags(
        acyclic=acyclic,
        is_cycle=_is_single_cycle(d),
        unicyclic=n_cycles == 1,
        tournament=pairs_one_arc,
        semi_complete=pairs_some_arc,
        bipartite_tournament=partition is not None,
        partition=partition,
        monochromatic=d.m <= 1,
        properly_arc_colored=is_properly_arc_colored(d),
        properly_connected=is_properly_connected(d),
    )
