"""Arc-colored digraph representation.

The universe every operation in this package consumes: a finite simple
digraph (no loops, at most one arc per ordered pair; a 2-cycle is two
distinct arcs) with one positive-integer color per arc.  Colors are opaque:
equality is the only operation ever applied to them, and on construction
they are compacted to ``1..m`` preserving equality classes so that ``m`` is
always tight.

Instances are immutable after construction and safe to share across
workers; all derived adjacency structures are precomputed once.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import (
    BadParameter,
    DuplicateArc,
    LoopArc,
    NonPositiveColor,
    VertexOutOfRange,
)

Arc = tuple[int, int]
ColoredArc = tuple[int, int, int]


class ColoredDigraph:
    """Simple digraph with one color per arc, vertices ``0..n-1``."""

    __slots__ = ("n", "m", "labels", "_color", "_out", "_in", "_adj_mask", "_out_mask")

    def __init__(
        self,
        n: int,
        arcs: Iterable[ColoredArc],
        labels: Sequence[str] | None = None,
    ):
        if n < 0:
            raise BadParameter(f"vertex count must be nonnegative, got {n}")
        color: dict[Arc, int] = {}
        for u, v, c in arcs:
            if not (0 <= u < n):
                raise VertexOutOfRange(u, n)
            if not (0 <= v < n):
                raise VertexOutOfRange(v, n)
            if u == v:
                raise LoopArc(u)
            if (u, v) in color:
                raise DuplicateArc(u, v)
            if not isinstance(c, int) or c < 1:
                raise NonPositiveColor(c)
            color[(u, v)] = c

        # Compact colors to 1..m, smallest original color first.
        palette = sorted(set(color.values()))
        rank = {c: i + 1 for i, c in enumerate(palette)}
        self.n = n
        self.m = len(palette)
        self._color = {arc: rank[c] for arc, c in color.items()}

        if labels is None:
            labels = tuple(f"v{i}" for i in range(n))
        else:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise BadParameter(f"expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                raise BadParameter("vertex labels must be distinct")
            for lab in labels:
                if not lab or any(ch.isspace() for ch in lab):
                    raise BadParameter(f"label {lab!r} must be a non-whitespace token")
        self.labels = labels

        out: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        adj_mask = [0] * n
        out_mask = [0] * n
        for (u, v), c in sorted(self._color.items()):
            out[u].append((v, c))
            inc[v].append((u, c))
            adj_mask[u] |= 1 << v
            adj_mask[v] |= 1 << u
            out_mask[u] |= 1 << v
        self._out = tuple(tuple(row) for row in out)
        self._in = tuple(tuple(sorted(row)) for row in inc)
        self._adj_mask = tuple(adj_mask)
        self._out_mask = tuple(out_mask)

    # -- basic queries ------------------------------------------------------

    @property
    def arc_count(self) -> int:
        return len(self._color)

    def vertices(self) -> range:
        return range(self.n)

    def arcs(self) -> Iterator[ColoredArc]:
        """Arcs as (u, v, color), sorted by (u, v)."""
        for (u, v), c in sorted(self._color.items()):
            yield u, v, c

    def arc_pairs(self) -> frozenset[Arc]:
        return frozenset(self._color)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._color

    def color(self, u: int, v: int) -> int:
        return self._color[(u, v)]

    def color_or_none(self, u: int, v: int) -> int | None:
        return self._color.get((u, v))

    def out(self, u: int) -> tuple[tuple[int, int], ...]:
        """Out-neighbors of u as (v, color), ascending by v."""
        return self._out[u]

    def in_(self, v: int) -> tuple[tuple[int, int], ...]:
        """In-neighbors of v as (u, color), ascending by u."""
        return self._in[v]

    def out_degree(self, u: int) -> int:
        return len(self._out[u])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def adjacent(self, u: int, v: int) -> bool:
        """True if an arc joins u and v in either direction."""
        return (u, v) in self._color or (v, u) in self._color

    def adj_mask(self, u: int) -> int:
        return self._adj_mask[u]

    def out_mask(self, u: int) -> int:
        return self._out_mask[u]

    def label(self, v: int) -> str:
        return self.labels[v]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    # -- structural helpers -------------------------------------------------

    def induced(self, keep: Iterable[int]) -> tuple["ColoredDigraph", dict[int, int]]:
        """Induced subdigraph on `keep`; returns (subdigraph, old->new map).

        Colors are recompacted, preserving equality classes.
        """
        kept = sorted(set(keep))
        for v in kept:
            if not (0 <= v < self.n):
                raise VertexOutOfRange(v, self.n)
        remap = {old: new for new, old in enumerate(kept)}
        arcs = [
            (remap[u], remap[v], c)
            for (u, v), c in self._color.items()
            if u in remap and v in remap
        ]
        sub = ColoredDigraph(len(kept), arcs, [self.labels[v] for v in kept])
        return sub, remap

    def remove_vertex(self, v: int) -> tuple["ColoredDigraph", dict[int, int]]:
        return self.induced(u for u in range(self.n) if u != v)

    def relabeled(self, labels: Sequence[str]) -> "ColoredDigraph":
        return ColoredDigraph(self.n, list(self.arcs()), labels)

    # -- equality / repr ----------------------------------------------------

    def _key(self):
        return (self.n, self.labels, tuple(sorted(self._color.items())))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredDigraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"ColoredDigraph(n={self.n}, arcs={self.arc_count}, m={self.m})"

    def same_arcs_by_label(self, other: "ColoredDigraph") -> bool:
        """True if both digraphs have the same labeled arc sets and colors."""
        if sorted(self.labels) != sorted(other.labels):
            return False
        mine = {(self.labels[u], self.labels[v]): c for (u, v), c in self._color.items()}
        theirs = {
            (other.labels[u], other.labels[v]): c for (u, v), c in other._color.items()
        }
        return mine == theirs


def validate(
    arcs: Iterable[ColoredArc],
    n: int | None = None,
    labels: Sequence[str] | None = None,
) -> ColoredDigraph:
    """Build a :class:`ColoredDigraph` from raw (u, v, color) triples.

    ``n`` defaults to one past the largest vertex index mentioned (or
    ``len(labels)`` when labels are given), so isolated trailing vertices
    need an explicit ``n``.
    """
    triples = list(arcs)
    if n is None:
        if labels is not None:
            n = len(labels)
        else:
            n = 1 + max((max(u, v) for u, v, _ in triples), default=-1)
    return ColoredDigraph(n, triples, labels)
