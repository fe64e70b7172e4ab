"""ACD text format and DOT export for arc-colored digraphs.

ACD is a line-oriented format, one statement per line, ``#`` starts a
comment (whole line or trailing):

    acd 1               # header, must come first
    v <label>           # vertex declaration; labels are non-whitespace tokens
    a <src> <dst> <c>   # arc declaration, color c >= 1

Canonical form (produced by :func:`serialize`): header, then vertices
sorted by label, then arcs sorted by (src label, dst label).  ``parse`` of a
canonical document followed by ``serialize`` is the identity.
"""

from __future__ import annotations

from .errors import AcdSyntaxError, UnknownVertexLabel
from .graph import ColoredDigraph

HEADER = "acd 1"

# Fixed DOT palette: color c maps to PALETTE[(c - 1) % len(PALETTE)].  Kept
# stable so exported figures are reproducible bit-exact.
PALETTE = (
    "black",
    "red",
    "blue",
    "forestgreen",
    "darkorange",
    "purple",
    "saddlebrown",
    "deeppink",
    "teal",
    "goldenrod",
    "navy",
    "crimson",
)


def dot_color(c: int) -> str:
    return PALETTE[(c - 1) % len(PALETTE)]


def parse(text: str) -> ColoredDigraph:
    """Parse an ACD document into a validated :class:`ColoredDigraph`.

    Vertex indices follow declaration order, so parsing a canonical
    document yields label-sorted indices.
    """
    labels: list[str] = []
    seen: set[str] = set()
    arcs: list[tuple[str, str, int]] = []
    got_header = False

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if not got_header:
            if line != HEADER:
                raise AcdSyntaxError(line_no, f"expected header {HEADER!r}, got {line!r}")
            got_header = True
            continue
        if parts[0] == "v":
            if len(parts) != 2:
                raise AcdSyntaxError(line_no, "vertex declaration must be 'v <label>'")
            label = parts[1]
            if label in seen:
                raise AcdSyntaxError(line_no, f"duplicate vertex label {label!r}")
            seen.add(label)
            labels.append(label)
        elif parts[0] == "a":
            if len(parts) != 4:
                raise AcdSyntaxError(line_no, "arc declaration must be 'a <src> <dst> <color>'")
            try:
                color = int(parts[3])
            except ValueError:
                raise AcdSyntaxError(line_no, f"color must be an integer, got {parts[3]!r}")
            if color < 1:
                raise AcdSyntaxError(line_no, f"colors are >= 1, got {color}")
            arcs.append((parts[1], parts[2], color))
        else:
            raise AcdSyntaxError(line_no, f"unknown statement {parts[0]!r}")

    if not got_header:
        raise AcdSyntaxError(1, "empty document: missing 'acd 1' header")

    index = {label: i for i, label in enumerate(labels)}
    resolved = []
    for src, dst, color in arcs:
        if src not in index:
            raise UnknownVertexLabel(src)
        if dst not in index:
            raise UnknownVertexLabel(dst)
        resolved.append((index[src], index[dst], color))
    return ColoredDigraph(len(labels), resolved, labels)


def serialize(d: ColoredDigraph) -> str:
    """Canonical ACD text: vertices by label, arcs lexicographically."""
    lines = [HEADER]
    for label in sorted(d.labels):
        lines.append(f"v {label}")
    arcs = sorted(
        (d.labels[u], d.labels[v], c) for u, v, c in d.arcs()
    )
    for src, dst, c in arcs:
        lines.append(f"a {src} {dst} {c}")
    return "\n".join(lines) + "\n"


def canonical(d: ColoredDigraph) -> ColoredDigraph:
    """The digraph re-indexed into canonical (label-sorted) vertex order."""
    return parse(serialize(d))


def to_dot(d: ColoredDigraph, name: str = "D") -> str:
    """DOT export; arc colors map through the fixed palette, labels show c."""
    lines = [f'digraph "{name}" {{']
    for label in sorted(d.labels):
        lines.append(f'  "{label}";')
    arcs = sorted((d.labels[u], d.labels[v], c) for u, v, c in d.arcs())
    for src, dst, c in arcs:
        lines.append(f'  "{src}" -> "{dst}" [color="{dot_color(c)}", label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
