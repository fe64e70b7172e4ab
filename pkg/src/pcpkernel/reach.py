"""Exact properly-colored / rainbow path search and the closure digraph.

Paths are always vertex-simple; "properly colored" means consecutive arcs
differ in color, "rainbow" means all arc colors are pairwise distinct, and
every single arc qualifies under both modes.  The searches are exhaustive
backtracking over simple paths, pre-filtered by a walk-level relaxation
that can only say "no" when the exact answer is "no".

A hard step budget (default 10^7 extensions per query) turns pathological
searches into a loud :class:`BudgetExceeded` instead of a wrong answer.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import BadParameter, BudgetExceeded, SameVertex, VertexOutOfRange
from .graph import ColoredDigraph

MODE_PC = "pc"
MODE_RAINBOW = "rainbow"

_MODE_ALIASES = {
    "pc": MODE_PC,
    "properly-colored": MODE_PC,
    "rainbow": MODE_RAINBOW,
}

DEFAULT_SEARCH_BUDGET = 10**7


def normalize_mode(mode: str) -> str:
    try:
        return _MODE_ALIASES[mode]
    except KeyError:
        raise BadParameter(f"unknown path mode {mode!r}") from None


class _Budget:
    """Mutable extension-step counter shared by one logical query."""

    __slots__ = ("remaining",)

    def __init__(self, steps: int):
        self.remaining = steps

    def spend(self, amount: int = 1) -> None:
        self.remaining -= amount
        if self.remaining < 0:
            raise BudgetExceeded("path search step budget exhausted")


@dataclass(frozen=True)
class PcPathCertificate:
    """A concrete vertex/color sequence witnessing a PC or rainbow path."""

    vertices: tuple[int, ...]
    colors: tuple[int, ...]
    mode: str

    @property
    def length(self) -> int:
        return len(self.colors)

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def validate_against(self, d: ColoredDigraph) -> bool:
        """Full re-check of every certificate invariant against `d`."""
        vs, cs = self.vertices, self.colors
        if len(vs) < 2 or len(cs) != len(vs) - 1:
            return False
        if len(set(vs)) != len(vs):
            return False
        for i, c in enumerate(cs):
            u, v = vs[i], vs[i + 1]
            if not (0 <= u < d.n and 0 <= v < d.n):
                return False
            if d.color_or_none(u, v) != c:
                return False
        if self.mode == MODE_PC:
            return all(cs[i] != cs[i + 1] for i in range(len(cs) - 1))
        if self.mode == MODE_RAINBOW:
            return len(set(cs)) == len(cs)
        return False


@dataclass(frozen=True)
class ClosureDigraph:
    """Plain digraph holding one arc per PC-connected ordered pair, with a
    witness path certificate for each arc."""

    n: int
    labels: tuple[str, ...]
    arcs: frozenset[tuple[int, int]]
    witness: dict[tuple[int, int], PcPathCertificate]
    mode: str

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs


def _check_pair(d: ColoredDigraph, u: int, v: int) -> None:
    for x in (u, v):
        if not (0 <= x < d.n):
            raise VertexOutOfRange(x, d.n)
    if u == v:
        raise SameVertex(u)


def pc_walk_reachable(d: ColoredDigraph, u: int, v: int, mode: str = MODE_PC) -> bool:
    """Walk-level reachability: sound pruning bound for the path search.

    For mode "pc" this is an exact BFS over (vertex, last color) states: a
    PC walk exists iff it returns True, and since every PC path is a PC
    walk, False here implies no PC path.  For mode "rainbow" it falls back
    to color-blind reachability, which is the analogous sound relaxation.
    """
    mode = normalize_mode(mode)
    _check_pair(d, u, v)
    if mode == MODE_RAINBOW:
        return _reachable_colorblind(d, u, frozenset((v,))) is not None
    return v in _pc_walk_targets(d, u)


def _pc_walk_targets(d: ColoredDigraph, u: int) -> set[int]:
    """All vertices reachable from u by a PC walk (one product-space BFS)."""
    seen_states: set[tuple[int, int]] = set()
    reached: set[int] = set()
    queue: deque[tuple[int, int]] = deque()
    for w, c in d.out(u):
        if (w, c) not in seen_states:
            seen_states.add((w, c))
            reached.add(w)
            queue.append((w, c))
    while queue:
        x, last = queue.popleft()
        for w, c in d.out(x):
            if c != last and (w, c) not in seen_states:
                seen_states.add((w, c))
                reached.add(w)
                queue.append((w, c))
    return reached


def _reachable_colorblind(d: ColoredDigraph, u: int, targets: frozenset[int]) -> int | None:
    seen = {u}
    queue = deque((u,))
    while queue:
        x = queue.popleft()
        for w, _ in d.out(x):
            if w in targets:
                return w
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return None


def pc_path_exists(
    d: ColoredDigraph,
    u: int,
    v: int,
    mode: str = MODE_PC,
    max_len: int | None = None,
    budget: int | None = None,
) -> PcPathCertificate | None:
    """First properly colored (or rainbow) simple (u, v)-path in DFS order,
    None if no such path exists within the length bound.

    Out-arcs are explored in ascending neighbor order, so the returned
    certificate is deterministic.
    """
    return pc_path_to_set(d, u, frozenset((v,)), mode, max_len, budget)


def pc_path_to_set(
    d: ColoredDigraph,
    u: int,
    targets: Iterable[int],
    mode: str = MODE_PC,
    max_len: int | None = None,
    budget: int | None = None,
) -> PcPathCertificate | None:
    """Like :func:`pc_path_exists` but stops at the first path reaching any
    target; used for absorption queries against a candidate kernel."""
    mode = normalize_mode(mode)
    target_set = frozenset(targets)
    if not (0 <= u < d.n):
        raise VertexOutOfRange(u, d.n)
    for t in target_set:
        if not (0 <= t < d.n):
            raise VertexOutOfRange(t, d.n)
    if u in target_set:
        raise SameVertex(u)
    if not target_set:
        return None

    # Walk-level prefilter: no PC walk to any target means no PC path.
    if mode == MODE_PC:
        if not (_pc_walk_targets(d, u) & target_set):
            return None
    else:
        if _reachable_colorblind(d, u, target_set) is None:
            return None

    b = _Budget(budget if budget is not None else DEFAULT_SEARCH_BUDGET)
    limit = max_len if max_len is not None else d.n
    path_v = [u]
    path_c: list[int] = []
    visited = 1 << u

    def extend(x: int, last: int, used_colors: int) -> PcPathCertificate | None:
        nonlocal visited
        if len(path_c) >= limit:
            return None
        for w, c in d.out(x):
            if visited >> w & 1:
                continue
            if mode == MODE_PC:
                if c == last:
                    continue
            else:
                if used_colors >> c & 1:
                    continue
            b.spend()
            path_v.append(w)
            path_c.append(c)
            if w in target_set:
                cert = PcPathCertificate(tuple(path_v), tuple(path_c), mode)
                path_v.pop()
                path_c.pop()
                return cert
            visited |= 1 << w
            found = extend(w, c, used_colors | (1 << c))
            visited &= ~(1 << w)
            path_v.pop()
            path_c.pop()
            if found is not None:
                return found
        return None

    return extend(u, 0, 0)


def closure(
    d: ColoredDigraph, mode: str = MODE_PC, budget: int | None = None
) -> ClosureDigraph:
    """The closure digraph: arc (u, v) present exactly when a PC (rainbow)
    (u, v)-path exists in `d`, each arc carrying one witness path."""
    mode = normalize_mode(mode)
    arcs = set()
    witness: dict[tuple[int, int], PcPathCertificate] = {}
    for u in range(d.n):
        if mode == MODE_PC:
            candidates = _pc_walk_targets(d, u)
        else:
            candidates = _colorblind_reach_set(d, u)
        for v in sorted(candidates):
            if v == u:
                continue
            cert = pc_path_to_set(d, u, (v,), mode, None, budget)
            if cert is not None:
                arcs.add((u, v))
                witness[(u, v)] = cert
    return ClosureDigraph(d.n, d.labels, frozenset(arcs), witness, mode)


def _colorblind_reach_set(d: ColoredDigraph, u: int) -> set[int]:
    seen = {u}
    queue = deque((u,))
    while queue:
        x = queue.popleft()
        for w, _ in d.out(x):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    seen.discard(u)
    return seen


def distance(d: ColoredDigraph, u: int, v: int) -> int | None:
    """Length of the shortest color-blind directed (u, v)-path, None if
    unreachable."""
    _check_pair(d, u, v)
    dist = {u: 0}
    queue = deque((u,))
    while queue:
        x = queue.popleft()
        for w, _ in d.out(x):
            if w not in dist:
                dist[w] = dist[x] + 1
                if w == v:
                    return dist[w]
                queue.append(w)
    return None


def serialize_witnesses(c: ClosureDigraph) -> str:
    """Sidecar witness file: one `w <u> <v> : <v0> ... <vk>` line per arc."""
    lines = []
    for (u, v) in sorted(c.arcs):
        path = " ".join(c.labels[x] for x in c.witness[(u, v)].vertices)
        lines.append(f"w {c.labels[u]} {c.labels[v]} : {path}")
    return "\n".join(lines) + ("\n" if lines else "")
