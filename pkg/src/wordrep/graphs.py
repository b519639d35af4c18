"""Small simple graphs: bitmask adjacency, graph6 text I/O, induced
subgraphs, isomorphism testing, and exhaustive enumeration of
isomorphism classes.

Vertices are always the integers 0..n-1.  A graph stores one adjacency
bitmask per vertex, which keeps the search loops elsewhere in this
package (orientation backtracking, censuses over all graphs of a given
order) fast enough in pure Python.  Graphs are immutable value objects:
every function returns fresh values and nothing here keeps hidden
state, so concurrent use from several threads is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

GRAPH6_MAX_N = 62     # short-form graph6 only
ENUMERATION_GUARD = 8  # enumerate_graphs refuses larger n unless overridden


class Graph6Error(ValueError):
    """Malformed graph6 text.  ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph:
    """Undirected simple graph on vertices 0..n-1.

    ``adj[u]`` is a bitmask with bit v set iff {u,v} is an edge; the
    relation is kept symmetric and loop-free by construction.
    """

    __slots__ = ("n", "adj", "_wl")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self._wl = None

    @classmethod
    def _from_adj(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        """Internal fast constructor; ``adj`` must already be consistent."""
        g = object.__new__(cls)
        g.n = n
        g.adj = adj
        g._wl = None
        return g

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def neighbors(self, u: int) -> list[int]:
        return _bits(self.adj[u])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            while m:
                lb = m & -m
                out.append((u, lb.bit_length() - 1))
                m ^= lb
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(m.bit_count() for m in self.adj))

    def delete_vertex(self, v: int) -> "Graph":
        """Induced subgraph on all vertices but v (relabelled)."""
        return induced_subgraph(self, [u for u in range(self.n) if u != v])

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()!r})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        lb = mask & -mask
        out.append(lb.bit_length() - 1)
        mask ^= lb
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen, frontier = 1, [0]
    while frontier:
        v = frontier.pop()
        rest = g.adj[v] & ~seen
        seen |= rest
        frontier.extend(_bits(rest))
    return seen == (1 << g.n) - 1


# ---------------------------------------------------------------------------
# graph6 text format (short form, n <= 62): one printable line per graph.
# Header byte encodes n+63; the upper triangle follows column by column,
# packed 6 bits per byte, each byte offset by 63.


def write_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 short form supports n <= {GRAPH6_MAX_N}, got {g.n}")
    chars = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        col = g.adj[v]
        for u in range(v):
            acc = acc << 1 | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                chars.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        chars.append(chr((acc << (6 - nbits)) + 63))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(">>graph6<<"):
        base = len(">>graph6<<")
        line = line[base:]
    if not line:
        raise Graph6Error("empty graph6 line", base)
    head = ord(line[0])
    if head == 126:
        raise Graph6Error(f"long-form graph6 (n > {GRAPH6_MAX_N}) not supported", base)
    if not 63 <= head <= 126:
        raise Graph6Error(f"invalid header byte {head}", base)
    n = head - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(line) - 1 < nbytes:
        raise Graph6Error(
            f"truncated bit field: need {nbytes} data bytes, got {len(line) - 1}",
            base + len(line),
        )
    if len(line) - 1 > nbytes:
        raise Graph6Error("trailing data after graph6 encoding", base + 1 + nbytes)
    adj = [0] * n
    pos = 0  # bit cursor over the upper triangle, column-major
    for i in range(nbytes):
        c = ord(line[1 + i])
        if not 63 <= c <= 126:
            raise Graph6Error(f"data byte {c} out of range 63..126", base + 1 + i)
        group = c - 63
        for k in range(5, -1, -1):
            if pos >= nbits:
                break
            if group >> k & 1:
                u, v = _triangle_coords(pos)
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            pos += 1
    return Graph._from_adj(n, tuple(adj))


@lru_cache(maxsize=None)
def _triangle_offsets(limit: int = GRAPH6_MAX_N + 1) -> tuple[int, ...]:
    return tuple(v * (v - 1) // 2 for v in range(limit + 1))


def _triangle_coords(pos: int) -> tuple[int, int]:
    """Inverse of column-major upper-triangle bit numbering."""
    offs = _triangle_offsets()
    v = 1
    while offs[v + 1] <= pos:
        v += 1
    return pos - offs[v], v


# ---------------------------------------------------------------------------
# Induced subgraphs and embeddings.


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on ``vertices``, relabelled 0..k-1 in ascending
    order of the original labels."""
    vs = sorted(vertices)
    for i, v in enumerate(vs):
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        if i and vs[i - 1] == v:
            raise ValueError(f"duplicate vertex {v}")
    k = len(vs)
    adj = [0] * k
    for i in range(k):
        row = g.adj[vs[i]]
        for j in range(i + 1, k):
            if row >> vs[j] & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph._from_adj(k, tuple(adj))


@dataclass(frozen=True)
class Embedding:
    """Injective map pattern-vertex -> host-vertex realising an induced copy.

    ``mapping[i]`` is the host vertex that pattern vertex i lands on.
    """

    mapping: tuple[int, ...]

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(self.mapping))

    def is_valid(self, host: Graph, pattern: Graph) -> bool:
        m = self.mapping
        if len(m) != pattern.n or len(set(m)) != len(m):
            return False
        if any(not 0 <= w < host.n for w in m):
            return False
        for a in range(pattern.n):
            for b in range(a + 1, pattern.n):
                if pattern.adjacent(a, b) != host.adjacent(m[a], m[b]):
                    return False
        return True


def contains_induced(host: Graph, pattern: Graph) -> Embedding | None:
    """First embedding of ``pattern`` as an induced subgraph of ``host``,
    or None.

    Pattern vertices are matched in label order and host candidates are
    tried in ascending order, so the returned embedding is the
    lexicographically least one.
    """
    np_, nh = pattern.n, host.n
    if np_ > nh:
        return None
    pdeg = [pattern.degree(v) for v in range(np_)]
    hdeg = [host.degree(v) for v in range(nh)]
    mapping = [-1] * np_
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == np_:
            return True
        prow = pattern.adj[i]
        for w in range(nh):
            if used >> w & 1:
                continue
            if hdeg[w] < pdeg[i] or (nh - 1 - hdeg[w]) < (np_ - 1 - pdeg[i]):
                continue
            hrow = host.adj[w]
            ok = True
            for j in range(i):
                if (prow >> j & 1) != (hrow >> mapping[j] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[i] = w
            used |= 1 << w
            if extend(i + 1):
                return True
            used ^= 1 << w
            mapping[i] = -1
        return False

    if extend(0):
        return Embedding(tuple(mapping))
    return None


# ---------------------------------------------------------------------------
# Isomorphism.  Colour refinement narrows the candidate maps, then a
# backtracking search settles the question; adequate for the small
# graphs this package deals in (no attempt at nauty-grade performance).


def _refine_colors(g: Graph) -> tuple[int, ...]:
    """Stable vertex colouring by iterated neighbourhood refinement,
    cached on the graph.

    Colour names are derived from sorted signatures each round, so equal
    colour multisets on two graphs mean the refinement cannot tell them
    apart (the converse, of course, does not hold).
    """
    if g._wl is not None:
        return g._wl
    n = g.n
    nbrs = [_bits(g.adj[v]) for v in range(n)]
    colors = [len(nbrs[v]) for v in range(n)]
    ncolors = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            sigs.append((colors[v], tuple(sorted(colors[w] for w in nbrs[v]))))
        names = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [names[s] for s in sigs]
        if len(names) == ncolors:
            g._wl = tuple(colors)
            return g._wl
        ncolors = len(names)


def iso_invariant(g: Graph) -> tuple:
    """Cheap isomorphism-invariant key used to bucket graphs."""
    return (g.n, g.edge_count, tuple(sorted(_refine_colors(g))))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """True iff some bijection of vertex sets preserves adjacency both ways."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.adj == h.adj:
        return True
    n = g.n
    gc = _refine_colors(g)
    hc = _refine_colors(h)
    if sorted(gc) != sorted(hc):
        return False
    by_color: dict[int, list[int]] = {}
    for w in range(n):
        by_color.setdefault(hc[w], []).append(w)
    # match most-constrained vertices first
    order = sorted(range(n), key=lambda v: (len(by_color[gc[v]]), -g.degree(v), v))
    mapping = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        grow = g.adj[v]
        for w in by_color[gc[v]]:
            if used >> w & 1:
                continue
            hrow = h.adj[w]
            ok = True
            for j in range(i):
                if (grow >> order[j] & 1) != (hrow >> mapping[order[j]] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(i + 1):
                return True
            used ^= 1 << w
            mapping[v] = -1
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# Exhaustive enumeration of isomorphism classes, one representative per
# class, by vertex augmentation.  Known class counts for n = 0..7:
# 1, 1, 2, 4, 11, 34, 156, 1044.


def enumerate_graphs(n: int, *, allow_large: bool = False) -> Iterator[Graph]:
    """Yield one representative per isomorphism class of simple graphs
    on n vertices, in a deterministic order.

    Guarded at n <= 8; pass allow_large=True to go beyond (the run time
    grows steeply).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > ENUMERATION_GUARD and not allow_large:
        raise ValueError(
            f"enumerate_graphs(n={n}) exceeds the guard ({ENUMERATION_GUARD}); "
            "pass allow_large=True to override"
        )
    yield from _catalog(n)


@lru_cache(maxsize=None)
def _catalog(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0),)
    out: list[Graph] = []
    buckets: dict[tuple, list[Graph]] = {}
    newbit = 1 << (n - 1)
    for parent in _catalog(n - 1):
        for mask in range(newbit):
            rows = list(parent.adj)
            for u in _bits(mask):
                rows[u] |= newbit
            rows.append(mask)
            g = Graph._from_adj(n, tuple(rows))
            bucket = buckets.setdefault(iso_invariant(g), [])
            if not any(is_isomorphic(g, rep) for rep in bucket):
                bucket.append(g)
                out.append(g)
    return tuple(out)
