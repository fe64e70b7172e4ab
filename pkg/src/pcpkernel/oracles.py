"""Independent brute-force oracles.

These deliberately share no search machinery with the production solvers:
path existence is decided by enumerating every simple path, kernel
existence by sweeping all 2^n vertex subsets.  Sweeps and tests compare
production answers against these on small instances.
"""

from __future__ import annotations

from typing import Iterator

from .errors import TooLarge
from .graph import ColoredDigraph
from .kernels import PlainDigraph
from .reach import MODE_PC, MODE_RAINBOW, normalize_mode

SUBSET_GUARD = 22


def enumerate_simple_paths(
    d: ColoredDigraph, u: int, v: int
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every simple directed (u, v)-path as (vertices, colors)."""
    path = [u]
    colors: list[int] = []
    seen = {u}

    def walk(x: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        for w, c in d.out(x):
            if w in seen:
                continue
            path.append(w)
            colors.append(c)
            if w == v:
                yield tuple(path), tuple(colors)
            else:
                seen.add(w)
                yield from walk(w)
                seen.discard(w)
            path.pop()
            colors.pop()

    yield from walk(u)


def _mode_ok(colors: tuple[int, ...], mode: str) -> bool:
    if mode == MODE_PC:
        return all(colors[i] != colors[i + 1] for i in range(len(colors) - 1))
    return len(set(colors)) == len(colors)


def pc_path_exists_naive(
    d: ColoredDigraph, u: int, v: int, mode: str = MODE_PC, max_len: int | None = None
) -> bool:
    """Path existence by filtering the full simple-path enumeration."""
    mode = normalize_mode(mode)
    for _, colors in enumerate_simple_paths(d, u, v):
        if max_len is not None and len(colors) > max_len:
            continue
        if _mode_ok(colors, mode):
            return True
    return False


def pc_matrix_naive(d: ColoredDigraph, mode: str = MODE_PC) -> list[int]:
    """Row bitmasks: bit v of row u set iff a PC (u, v)-path exists."""
    rows = [0] * d.n
    for u in range(d.n):
        for v in range(d.n):
            if u != v and pc_path_exists_naive(d, u, v, mode):
                rows[u] |= 1 << v
    return rows


def kernels_by_subsets(h: PlainDigraph) -> list[frozenset[int]]:
    """All kernels by checking each of the 2^n subsets.

    Uses the identity: S is a kernel iff the union of in-neighborhoods of S
    equals V minus S.  The union is built bottom-up over subset masks.
    """
    n = h.n
    if n > SUBSET_GUARD:
        raise TooLarge(n, SUBSET_GUARD)
    full = (1 << n) - 1
    in_of = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        in_of[mask] = in_of[mask ^ low] | h.in_mask[v]
    out = []
    for mask in range(1 << n):
        if in_of[mask] == full & ~mask:
            out.append(frozenset(v for v in range(n) if mask >> v & 1))
    return out


def kernel_exists_by_subsets(h: PlainDigraph) -> bool:
    n = h.n
    if n > SUBSET_GUARD:
        raise TooLarge(n, SUBSET_GUARD)
    full = (1 << n) - 1
    in_of = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        acc = in_of[mask ^ low] | h.in_mask[v]
        in_of[mask] = acc
        if acc == full & ~mask:
            return True
    return in_of[0] == full  # n == 0: the empty set is a kernel

def pcp_kernel_exists_naive(d: ColoredDigraph, mode: str = MODE_PC) -> bool:
    """PCP/rainbow kernel existence decided entirely by brute force: naive
    path matrix, then subset sweep on it."""
    mode = normalize_mode(mode)
    rows = pc_matrix_naive(d, mode)
    arcs = [
        (u, v) for u in range(d.n) for v in range(d.n) if rows[u] >> v & 1
    ]
    return kernel_exists_by_subsets(PlainDigraph(d.n, arcs))


def all_simple_cycles_naive(d: ColoredDigraph) -> list[tuple[int, ...]]:
    """Every directed simple cycle by path enumeration: for each arc (v, u),
    every simple (u, v)-path closes one cycle.  Cycles are rotated so the
    least vertex leads and deduplicated."""
    seen: set[tuple[int, ...]] = set()
    for u, v, _ in d.arcs():
        # cycles through the arc v->u are (u ... v) paths; here iterate arcs
        # (v, u) and close them backward.
        pass
    for v, u, _ in d.arcs():
        for vertices, _colors in enumerate_simple_paths(d, u, v):
            k = len(vertices)
            i = vertices.index(min(vertices))
            rotated = vertices[i:] + vertices[:i]
            if k >= 2:
                seen.add(rotated)
    return sorted(seen)
