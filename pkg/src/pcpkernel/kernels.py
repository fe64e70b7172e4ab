"""Kernels of plain (uncolored) digraphs.

A kernel is an independent vertex set S (no arc between two members in
either direction) that absorbs every outsider (each vertex outside S has an
arc into S).  Recognition is NP-complete in general, so the finder here is
an exact branch-and-bound over include/exclude decisions; the acyclic case
has the classic linear-time sink-peeling construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .cycles import CYCLE_BUDGET, is_acyclic, simple_cycles
from .errors import LoopArc, NotAcyclic, TooLarge, VertexOutOfRange

ALL_KERNELS_GUARD = 24


class PlainDigraph:
    """Simple digraph without colors, vertices 0..n-1."""

    __slots__ = ("n", "arcs", "out_adj", "in_adj", "out_mask", "in_mask", "adj_mask")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        arc_set = set()
        for u, v in arcs:
            if not (0 <= u < n):
                raise VertexOutOfRange(u, n)
            if not (0 <= v < n):
                raise VertexOutOfRange(v, n)
            if u == v:
                raise LoopArc(u)
            arc_set.add((u, v))
        self.n = n
        self.arcs = frozenset(arc_set)
        out = [[] for _ in range(n)]
        inc = [[] for _ in range(n)]
        out_mask = [0] * n
        in_mask = [0] * n
        for u, v in sorted(arc_set):
            out[u].append(v)
            inc[v].append(u)
            out_mask[u] |= 1 << v
            in_mask[v] |= 1 << u
        self.out_adj = tuple(tuple(x) for x in out)
        self.in_adj = tuple(tuple(sorted(x)) for x in inc)
        self.out_mask = tuple(out_mask)
        self.in_mask = tuple(in_mask)
        self.adj_mask = tuple(o | i for o, i in zip(out_mask, in_mask))

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def __repr__(self) -> str:
        return f"PlainDigraph(n={self.n}, arcs={len(self.arcs)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlainDigraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))


@dataclass(frozen=True)
class KernelSet:
    """A kernel plus its absorption witnesses.

    `absorption` maps every non-member to one of its out-neighbors inside
    the kernel; `attestation` records how independence was established.
    """

    members: tuple[int, ...]
    absorption: dict[int, int]
    attestation: str = "exhaustively-checked"

    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)


def _check_subset(h: PlainDigraph, s: Iterable[int]) -> frozenset[int]:
    ss = frozenset(s)
    for v in ss:
        if not (0 <= v < h.n):
            raise VertexOutOfRange(v, h.n)
    return ss


def is_kernel(h: PlainDigraph, s: Iterable[int]) -> bool:
    """Exact check of both kernel conditions."""
    ss = _check_subset(h, s)
    mask = 0
    for v in ss:
        mask |= 1 << v
    for v in ss:
        if h.adj_mask[v] & mask:
            return False
    for v in range(h.n):
        if v in ss:
            continue
        if not h.out_mask[v] & mask:
            return False
    return True


def _witnesses(h: PlainDigraph, members: frozenset[int]) -> dict[int, int]:
    absorption = {}
    for v in range(h.n):
        if v in members:
            continue
        absorption[v] = min(w for w in h.out_adj[v] if w in members)
    return absorption


def _make_kernel_set(h: PlainDigraph, members: Iterable[int]) -> KernelSet:
    ms = frozenset(members)
    return KernelSet(tuple(sorted(ms)), _witnesses(h, ms))


def branch_order(h: PlainDigraph) -> list[int]:
    """Descending out-degree, index as tie-break: vertices with many
    out-arcs are decided first so absorption pruning bites early."""
    return sorted(range(h.n), key=lambda v: (-len(h.out_adj[v]), v))


def _search_kernels(h: PlainDigraph, order: Sequence[int], want_all: bool):
    """Include/exclude branch-and-bound.

    Prunes a branch when (a) an inclusion would sit adjacent to a member,
    or (b) some excluded vertex has its whole out-neighborhood excluded and
    so can never be absorbed.  Deterministic: include is tried before
    exclude along `order`, so the first kernel found is stable.
    """
    n = h.n
    full = (1 << n) - 1
    found: list[int] = []

    def rec(i: int, included: int, excluded: int, pending: int) -> bool:
        # pending: excluded vertices not yet absorbed by `included`.
        if i == len(order):
            if pending == 0:
                found.append(included)
                return True
            return False
        undecided = full & ~included & ~excluded
        v = order[i]
        bit = 1 << v
        # Include v: absorbs pending vertices with an arc into v.
        if not h.adj_mask[v] & included:
            new_pending = pending & ~h.in_mask[v]
            if rec(i + 1, included | bit, excluded, new_pending) and not want_all:
                return True
        # Exclude v: v joins pending unless already absorbed; check that no
        # pending vertex is starved of potential absorbers.
        excluded2 = excluded | bit
        undecided2 = undecided & ~bit
        pending2 = pending
        if not h.out_mask[v] & included:
            if not h.out_mask[v] & undecided2:
                return False
            pending2 |= bit
        scan = pending2
        while scan:
            pbit = scan & -scan
            scan &= scan - 1
            p = pbit.bit_length() - 1
            if not h.out_mask[p] & (included | undecided2):
                return False
        return rec(i + 1, included, excluded2, pending2)

    rec(0, 0, 0, 0)
    return found


def find_kernel(h: PlainDigraph) -> KernelSet | None:
    """Some kernel of `h`, or None exactly when none exists."""
    order = branch_order(h)
    found = _search_kernels(h, order, want_all=False)
    if not found:
        return None
    members = frozenset(v for v in range(h.n) if found[0] >> v & 1)
    return _make_kernel_set(h, members)


def all_kernels(h: PlainDigraph) -> list[KernelSet]:
    """Every kernel of `h`, enumeration-guarded to n <= 24."""
    if h.n > ALL_KERNELS_GUARD:
        raise TooLarge(h.n, ALL_KERNELS_GUARD)
    order = branch_order(h)
    masks = _search_kernels(h, order, want_all=True)
    kernels = [
        _make_kernel_set(h, frozenset(v for v in range(h.n) if mask >> v & 1))
        for mask in masks
    ]
    kernels.sort(key=lambda k: k.members)
    return kernels


def kernel_of_acyclic(h: PlainDigraph) -> KernelSet:
    """The unique kernel of an acyclic digraph: repeatedly take all current
    sinks, then delete them together with their in-neighbors."""
    alive = set(range(h.n))
    members: set[int] = set()
    absorption: dict[int, int] = {}
    while alive:
        sinks = {v for v in alive if not any(w in alive for w in h.out_adj[v])}
        if not sinks:
            raise NotAcyclic("digraph has a cycle")
        members |= sinks
        removed_in = set()
        for v in sorted(alive - sinks):
            hits = [w for w in h.out_adj[v] if w in sinks]
            if hits:
                removed_in.add(v)
                absorption.setdefault(v, min(hits))
        alive -= sinks
        alive -= removed_in
    return KernelSet(tuple(sorted(members)), absorption)


@dataclass(frozen=True)
class PreconditionReport:
    """Checkable sufficient-condition diagnostics for kernel existence."""

    has_odd_cycle: bool
    has_even_cycle: bool
    every_cycle_has_symmetrical_arc: bool
    every_odd_cycle_has_crossing_consecutive: bool
    every_odd_cycle_has_two_chords_adjacent_heads: bool


def _cycle_has_crossing_consecutive(h: PlainDigraph, cyc: tuple[int, ...]) -> bool:
    k = len(cyc)
    for i in range(k):
        if h.has_arc(cyc[i], cyc[(i + 2) % k]) and h.has_arc(
            cyc[(i + 1) % k], cyc[(i + 3) % k]
        ):
            return True
    return False


def _cycle_has_two_chords_adjacent_heads(h: PlainDigraph, cyc: tuple[int, ...]) -> bool:
    """Two chords of the cycle whose head vertices are joined by an arc.

    "Adjacent" is read as adjacency in the digraph (an arc in either
    direction); consecutive cycle vertices qualify automatically.  This
    checker is a diagnostic only.
    """
    k = len(cyc)
    pos = {v: i for i, v in enumerate(cyc)}
    heads = set()
    for i, u in enumerate(cyc):
        for w in h.out_adj[u]:
            if w in pos and pos[w] != (i + 1) % k and w != u:
                heads.add(w)
    heads_sorted = sorted(heads)
    for a in range(len(heads_sorted)):
        for b in range(a + 1, len(heads_sorted)):
            u, w = heads_sorted[a], heads_sorted[b]
            if h.has_arc(u, w) or h.has_arc(w, u):
                return True
    return False


def precondition_checks(
    h: PlainDigraph, cycle_budget: int = CYCLE_BUDGET
) -> PreconditionReport:
    """Evaluate the classic sufficient conditions on `h`.

    The symmetrical-arc condition is exact and polynomial: every cycle has
    a symmetrical arc iff the subdigraph of non-symmetrical arcs is
    acyclic.  The parity flags and the two odd-cycle chord conditions come
    from one cycle-enumeration pass sharing `cycle_budget`.
    """
    nonsym = [[] for _ in range(h.n)]
    for u, v in h.arcs:
        if (v, u) not in h.arcs:
            nonsym[u].append(v)
    every_sym = is_acyclic(h.n, nonsym)

    has_odd = False
    has_even = False
    crossing_ok = True
    chords_ok = True
    for cyc in simple_cycles(h.n, h.out_adj, budget=cycle_budget):
        if len(cyc) % 2 == 1:
            has_odd = True
            if crossing_ok and not _cycle_has_crossing_consecutive(h, cyc):
                crossing_ok = False
            if chords_ok and not _cycle_has_two_chords_adjacent_heads(h, cyc):
                chords_ok = False
        else:
            has_even = True
        if has_odd and has_even and not crossing_ok and not chords_ok:
            break
    return PreconditionReport(
        has_odd_cycle=has_odd,
        has_even_cycle=has_even,
        every_cycle_has_symmetrical_arc=every_sym,
        every_odd_cycle_has_crossing_consecutive=crossing_ok,
        every_odd_cycle_has_two_chords_adjacent_heads=chords_ok,
    )


def format_kernel(k: KernelSet, labels: Sequence[str]) -> str:
    """Printable form: `K: {labels}` plus one absorption line per outsider."""
    lines = ["K: {" + " ".join(labels[v] for v in k.members) + "}"]
    for v in sorted(k.absorption, key=lambda v: labels[v]):
        lines.append(f"abs {labels[v]} -> {labels[k.absorption[v]]}")
    return "\n".join(lines) + "\n"
