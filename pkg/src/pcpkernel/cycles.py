"""Directed simple-cycle enumeration and SCC machinery.

Cycles are emitted as vertex tuples rotated so the least vertex comes
first, each cycle exactly once, in a deterministic order.  Enumeration
honors an explicit cycle budget and raises :class:`BudgetExceeded` beyond
it, so classification terminates on adversarial inputs instead of silently
truncating.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceeded

CYCLE_BUDGET = 10**6


def is_acyclic(n: int, adj: Sequence[Iterable[int]]) -> bool:
    """Kahn peeling on plain adjacency lists."""
    indeg = [0] * n
    for u in range(n):
        for w in adj[u]:
            indeg[w] += 1
    queue = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in adj[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == n


def strongly_connected_components(n: int, adj: Sequence[Iterable[int]]) -> list[list[int]]:
    """Tarjan SCC; components returned in topological order (sources first),
    each sorted ascending.

    Every arc between two components goes from the lower-indexed component
    to the higher-indexed one.
    """
    index_of: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0

    def strongconnect(v: int) -> None:
        nonlocal counter
        index_of[v] = low[v] = counter
        counter += 1
        stack.append(v)
        on_stack.add(v)
        for w in adj[v]:
            if w not in index_of:
                strongconnect(w)
                low[v] = min(low[v], low[w])
            elif w in on_stack:
                low[v] = min(low[v], index_of[w])
        if low[v] == index_of[v]:
            comp = []
            while True:
                w = stack.pop()
                on_stack.discard(w)
                comp.append(w)
                if w == v:
                    break
            comps.append(sorted(comp))

    for v in range(n):
        if v not in index_of:
            strongconnect(v)
    # Tarjan emits a component only after everything it reaches, i.e. in
    # reverse topological order.
    comps.reverse()
    return comps


def condensation_order(n: int, adj: Sequence[Iterable[int]]) -> tuple[list[list[int]], list[int]]:
    """(components in topological order, vertex -> component index)."""
    comps = strongly_connected_components(n, adj)
    comp_of = [0] * n
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    return comps, comp_of


def simple_cycles(
    n: int,
    adj: Sequence[Sequence[int]],
    budget: int | None = CYCLE_BUDGET,
) -> Iterator[tuple[int, ...]]:
    """All directed simple cycles (length >= 2), Johnson-style.

    Output-sensitive: consuming only a prefix of the iterator does only the
    work needed for that prefix, so "is there more than one cycle?" is cheap
    even on cycle-rich digraphs.
    """
    emitted = 0
    for s in range(n):
        # Cycles whose least vertex is s live in the SCC of s within the
        # subgraph induced on {s, ..., n-1}.
        verts = range(s, n)
        sub = {v: [w for w in adj[v] if w >= s] for v in verts}
        comp = _component_of(s, sub)
        if len(comp) < 2:
            continue
        cadj = {v: [w for w in sub[v] if w in comp] for v in comp}
        blocked = {v: False for v in comp}
        blist: dict[int, set[int]] = {v: set() for v in comp}
        path: list[int] = []

        def unblock(v: int) -> None:
            blocked[v] = False
            while blist[v]:
                w = blist[v].pop()
                if blocked[w]:
                    unblock(w)

        def circuit(v: int) -> Iterator[tuple[int, ...]]:
            nonlocal emitted
            found = False
            path.append(v)
            blocked[v] = True
            for w in cadj[v]:
                if w == s:
                    emitted += 1
                    if budget is not None and emitted > budget:
                        raise BudgetExceeded(f"more than {budget} simple cycles")
                    yield tuple(path)
                    found = True
                elif not blocked[w]:
                    sub_found = yield from circuit(w)
                    found = found or sub_found
            if found:
                unblock(v)
            else:
                for w in cadj[v]:
                    blist[w].add(v)
            path.pop()
            return found

        yield from circuit(s)


def _component_of(s: int, sub: dict[int, list[int]]) -> set[int]:
    """The SCC containing s in the dict-adjacency subgraph `sub`."""
    order = sorted(sub)
    pos = {v: i for i, v in enumerate(order)}
    adj = [[pos[w] for w in sub[v]] for v in order]
    for comp in strongly_connected_components(len(order), adj):
        members = {order[i] for i in comp}
        if s in members:
            return members
    return {s}


def bounded_cycles(
    n: int,
    adj: Sequence[Sequence[int]],
    max_len: int,
    budget: int | None = CYCLE_BUDGET,
) -> Iterator[tuple[int, ...]]:
    """All directed simple cycles of length <= max_len, rooted DFS.

    Exploration work is bounded separately from emissions (paths that never
    close contribute steps), so both counts share the budget.
    """
    steps = 0
    emitted = 0
    for r in range(n):
        path = [r]
        on_path = {r}

        def dfs(v: int) -> Iterator[tuple[int, ...]]:
            nonlocal steps, emitted
            for w in adj[v]:
                if w < r:
                    continue
                steps += 1
                if budget is not None and steps > budget:
                    raise BudgetExceeded("cycle enumeration step budget exhausted")
                if w == r:
                    if len(path) >= 2:
                        emitted += 1
                        if budget is not None and emitted > budget:
                            raise BudgetExceeded(f"more than {budget} bounded cycles")
                        yield tuple(path)
                elif w not in on_path and len(path) < max_len:
                    path.append(w)
                    on_path.add(w)
                    yield from dfs(w)
                    path.pop()
                    on_path.discard(w)

        yield from dfs(r)


def count_cycles_up_to(
    n: int,
    adj: Sequence[Sequence[int]],
    stop_at: int,
    budget: int | None = CYCLE_BUDGET,
) -> int:
    """Number of simple cycles, counting stops once it reaches `stop_at`."""
    count = 0
    for _ in simple_cycles(n, adj, budget):
        count += 1
        if count >= stop_at:
            break
    return count
