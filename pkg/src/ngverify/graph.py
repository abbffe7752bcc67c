"""Immutable simple undirected graphs and the structural operators on them.

Vertices are always the dense range ``0..n-1``.  Every operator returns a new
:class:`Graph`; nothing is mutated after construction, so instances can be
shared freely between threads.

Interchange formats live here as well: graph6, DOT and a plain edge list
(``"n m"`` header followed by one ``"u v"`` line per edge, ``u < v``,
ascending).
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from itertools import combinations

__all__ = [
    "Graph",
    "GraphFormatError",
    "from_edge_list",
    "empty_graph",
    "complement",
    "line_graph",
    "join",
    "disjoint_union",
    "encode_graph6",
    "decode_graph6",
    "to_dot",
    "to_edge_list_text",
    "parse_edge_list_text",
]

GRAPH6_MAX_N = 68719476735
_GRAPH6_HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    """Raised when serialized graph text cannot be parsed.

    ``offset`` is the 0-based byte position of the offending character, or
    ``None`` when the error is not tied to a single position.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Adjacency is stored twice: as per-vertex ``frozenset`` neighbourhoods for
    readable access and as integer bitmasks for the solvers.  Equality is
    label-exact (same ``n`` and same edge set), not isomorphism.
    """

    __slots__ = ("_n", "_adj", "_masks", "_m")

    def __init__(self, n: int, masks: Sequence[int]):
        # Internal constructor; use from_edge_list() for validated input.
        self._n = n
        self._masks = tuple(masks)
        self._adj = tuple(
            frozenset(_bits(mask)) for mask in self._masks
        )
        self._m = sum(len(nb) for nb in self._adj) // 2

    @property
    def n(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return self._m

    m = edge_count

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks: bit ``u`` of ``masks[v]`` is set iff ``uv`` is an edge."""
        return self._masks

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and (self._masks[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [
            (u, v) for u in range(self._n) for v in sorted(self._adj[u]) if u < v
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self._n, self._masks))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from unordered vertex pairs.

    Duplicate pairs (in either orientation) collapse to one edge.  Self-loops
    and out-of-range endpoints raise ``ValueError``.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    masks = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop ({u}, {u}) is not allowed in a simple graph")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, masks)


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, ())


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [(full ^ mask) & ~(1 << v) for v, mask in enumerate(g.masks)])


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Return the line graph of ``g`` and its edge index map.

    Vertex ``i`` of the line graph is ``edge_map[i]``, the ``i``-th edge of
    ``g`` in lexicographic order.
    """
    edge_map = g.edges()
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(edge_map):
        incident[u].append(idx)
        incident[v].append(idx)
    pairs = set()
    for around in incident:
        pairs.update(combinations(around, 2))
    return from_edge_list(len(edge_map), pairs), edge_map


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint copies of ``g`` then ``h`` plus every edge between them."""
    shift = g.n
    left_all = (1 << g.n) - 1
    right_all = ((1 << h.n) - 1) << shift
    masks = [mask | right_all for mask in g.masks]
    masks += [(mask << shift) | left_all for mask in h.masks]
    return Graph(g.n + h.n, masks)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, list(g.masks) + [mask << shift for mask in h.masks])


# -- graph6 -----------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (no header, no trailing newline)."""
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 supports at most {GRAPH6_MAX_N} vertices")
    out = [_encode_n(g.n)]
    word = 0
    filled = 0
    masks = g.masks
    for j in range(1, g.n):
        col = masks[j]
        for i in range(j):
            word = (word << 1) | ((col >> i) & 1)
            filled += 1
            if filled == 6:
                out.append(chr(word + 63))
                word = 0
                filled = 0
    if filled:
        out.append(chr((word << (6 - filled)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    """Parse one graph6 record (an optional ``>>graph6<<`` header is accepted)."""
    data = text.strip("\r\n")
    base = 0
    if data.startswith(_GRAPH6_HEADER):
        base = len(_GRAPH6_HEADER)
        data = data[base:]
    if not data:
        raise GraphFormatError("empty graph6 record", base)
    for pos, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside graph6 range", base + pos)

    if data[0] != "~":
        n, pos = ord(data[0]) - 63, 1
    else:
        width = 6 if data[1:2] == "~" else 3
        start = 2 if width == 6 else 1
        chunk = data[start:start + width]
        if len(chunk) < width:
            raise GraphFormatError("truncated vertex count", base + len(data))
        n = 0
        for ch in chunk:
            n = (n << 6) | (ord(ch) - 63)
        pos = start + width

    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = data[pos:]
    if len(body) < need:
        raise GraphFormatError(
            f"truncated adjacency data: expected {need} bytes, found {len(body)}",
            base + len(data),
        )
    if len(body) > need:
        raise GraphFormatError("trailing bytes after adjacency data", base + pos + need)

    masks = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
    return Graph(n, masks)


# -- DOT and edge list ------------------------------------------------------


def to_dot(g: Graph, labels: Sequence[str] | None = None, name: str = "G") -> str:
    if labels is not None and len(labels) != g.n:
        raise ValueError(f"expected {g.n} labels, got {len(labels)}")
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if labels is None:
            lines.append(f"  {v};")
        else:
            escaped = str(labels[v]).replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  {v} [label="{escaped}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list_text(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise GraphFormatError("empty edge list")
    try:
        n, m = (int(x) for x in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphFormatError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    try:
        g = from_edge_list(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None
    if g.edge_count != m:
        raise GraphFormatError("edge list contains duplicate edges")
    return g
