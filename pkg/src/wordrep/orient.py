"""Directed machinery over undirected base graphs: acyclicity,
transitivity, shortcut detection, semi-transitivity, and the
backtracking decision procedure for word-representability.

An orientation is semi-transitive when it is acyclic and shortcut-free.
A shortcut is an induced subdigraph on at least four vertices that is
acyclic and non-transitive, has a unique source s, a unique sink t, a
directed Hamiltonian s->t path, and the shortcutting edge s->t.  A
graph is word-representable exactly when it admits a semi-transitive
orientation, which turns the bounded search below into a decision
procedure.

Two independent shortcut checkers live here: a fast reachability-based
decision used inside searches, and a path-enumerating witness finder.
They are kept separate on purpose so tests can play one against the
other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graphs import Graph, _bits


class OracleDisagreement(AssertionError):
    """Two routes that must agree produced different answers.

    This never fires unless an internal cross-check (or one of the
    structure theorems the package encodes) fails on a concrete input;
    such an input is signal, not noise, and should be reported.
    """


class OrientedGraph:
    """An undirected base graph plus one direction per edge.

    ``out[u]`` masks the heads of edges leaving u.  Exactly one of
    u->v, v->u holds for every base edge {u,v}.
    """

    __slots__ = ("base", "out")

    def __init__(self, base: Graph, directed_edges: Iterable[tuple[int, int]]):
        out = [0] * base.n
        seen = [0] * base.n
        for a, b in directed_edges:
            if not base.adjacent(a, b):
                raise ValueError(f"({a},{b}) is not an edge of the base graph")
            if seen[a] >> b & 1 or seen[b] >> a & 1:
                raise ValueError(f"edge {{{a},{b}}} directed more than once")
            seen[a] |= 1 << b
            seen[b] |= 1 << a
            out[a] |= 1 << b
        for u in range(base.n):
            if seen[u] != base.adj[u]:
                raise ValueError(f"edges at vertex {u} left undirected")
        self.base = base
        self.out = tuple(out)

    @classmethod
    def _from_out(cls, base: Graph, out: tuple[int, ...]) -> "OrientedGraph":
        og = object.__new__(cls)
        og.base = base
        og.out = out
        return og

    @property
    def n(self) -> int:
        return self.base.n

    def has_arc(self, a: int, b: int) -> bool:
        return bool(self.out[a] >> b & 1)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.out[u])]

    def reversed_at(self, x: int) -> "OrientedGraph":
        """Copy with every edge at vertex x flipped."""
        out = list(self.out)
        for w in _bits(self.base.adj[x]):
            if out[x] >> w & 1:
                out[x] &= ~(1 << w)
                out[w] |= 1 << x
            else:
                out[w] &= ~(1 << x)
                out[x] |= 1 << w
        return OrientedGraph._from_out(self.base, tuple(out))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrientedGraph)
            and self.base == other.base
            and self.out == other.out
        )

    def __hash__(self) -> int:
        return hash((self.base, self.out))

    def __repr__(self) -> str:
        return f"OrientedGraph({self.base.n}, {self.arcs()!r})"


def all_orientations(g: Graph) -> Iterator[OrientedGraph]:
    """All 2^|E| orientations of g, in lexicographic bitstring order."""
    edges = g.edges()
    for mask in range(1 << len(edges)):
        yield orient_by_bits(g, _mask_to_bits(mask, len(edges)))


def _mask_to_bits(mask: int, width: int) -> str:
    return format(mask, f"0{width}b")[::-1] if width else ""


# ---------------------------------------------------------------------------
# Serialization: "graph6 + direction bitstring" for exact round trips
# (one bit per edge in lexicographic edge order, 0 = low->high), and
# DOT digraph text for human inspection.


def orientation_bits(og: OrientedGraph) -> str:
    return "".join(
        "0" if og.has_arc(u, v) else "1" for u, v in og.base.edges()
    )


def orient_by_bits(g: Graph, bits: str) -> OrientedGraph:
    edges = g.edges()
    if len(bits) != len(edges) or any(c not in "01" for c in bits):
        raise ValueError(f"need {len(edges)} direction bits, got {bits!r}")
    out = [0] * g.n
    for (u, v), c in zip(edges, bits):
        if c == "0":
            out[u] |= 1 << v
        else:
            out[v] |= 1 << u
    return OrientedGraph._from_out(g, tuple(out))


def to_dot(og: OrientedGraph) -> str:
    lines = ["digraph G {"]
    isolated = [v for v in range(og.n) if og.base.adj[v] == 0]
    for v in isolated:
        lines.append(f"  {v};")
    for a, b in og.arcs():
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Basic digraph predicates.


def _topological_order(out: Sequence[int], n: int) -> list[int] | None:
    indeg = [0] * n
    for u in range(n):
        for v in _bits(out[u]):
            indeg[v] += 1
    ready = [v for v in range(n) if indeg[v] == 0]
    order = []
    while ready:
        v = ready.pop()
        order.append(v)
        for w in _bits(out[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return order if len(order) == n else None


def is_acyclic(og: OrientedGraph) -> bool:
    return _topological_order(og.out, og.n) is not None


def is_transitive(og: OrientedGraph) -> bool:
    """Is the arc relation transitively closed (u->v->z implies u->z)?"""
    for u in range(og.n):
        succ = 0
        for v in _bits(og.out[u]):
            succ |= og.out[v]
        if succ & ~og.out[u]:
            return False
    return True


def _descendants(out: Sequence[int], n: int) -> list[int]:
    """reach[v] = vertices reachable from v, v included.  Assumes a DAG."""
    order = _topological_order(out, n)
    if order is None:
        raise ValueError("orientation contains a directed cycle")
    reach = [0] * n
    for v in reversed(order):
        r = 1 << v
        for w in _bits(out[v]):
            r |= reach[w]
        reach[v] = r
    return reach


def _has_shortcut_masks(n: int, out: Sequence[int], base_adj: Sequence[int]) -> bool:
    """Fast shortcut decision on a DAG given as out-masks.

    A shortcut exists iff there are vertices u, v, non-adjacent in the
    base graph, with u reaching v, and a directed edge a->b such that a
    reaches u and v reaches b: stitching a->..->u->..->v->..->b gives a
    path of length >= 3 below the shortcutting edge a->b whose vertex
    set induces a non-transitive subgraph (the pair (u,v) is missing).
    """
    reach = _descendants(out, n)
    anc = [1 << v for v in range(n)]
    for u in range(n):
        ru = reach[u]
        for v in _bits(ru & ~(1 << u)):
            anc[v] |= 1 << u
    for u in range(n):
        cand = reach[u] & ~(1 << u) & ~base_adj[u]
        if not cand:
            continue
        heads = 0
        for a in _bits(anc[u]):
            heads |= out[a]
        while cand:
            lb = cand & -cand
            v = lb.bit_length() - 1
            cand ^= lb
            if heads & reach[v]:
                return True
    return False


def is_semi_transitive(og: OrientedGraph) -> bool:
    """Acyclic and shortcut-free."""
    if _topological_order(og.out, og.n) is None:
        return False
    return not _has_shortcut_masks(og.n, og.out, og.base.adj)


# ---------------------------------------------------------------------------
# Witness-producing shortcut search.


@dataclass(frozen=True)
class ShortcutWitness:
    """A directed path plus the shortcutting edge and one missing pair.

    ``path`` runs v_0 -> ... -> v_k with k >= 3 along directed edges,
    ``shortcutting_edge`` is (v_0, v_k), and ``missing_pair`` is a pair
    (v_i, v_j), i < j, with no arc v_i -> v_j, certifying that the
    subgraph induced by the path vertices is not transitive.
    """

    path: tuple[int, ...]
    shortcutting_edge: tuple[int, int]
    missing_pair: tuple[int, int]

    def is_valid(self, og: OrientedGraph) -> bool:
        p = self.path
        if len(p) < 4 or len(set(p)) != len(p):
            return False
        if any(not og.has_arc(p[i], p[i + 1]) for i in range(len(p) - 1)):
            return False
        if self.shortcutting_edge != (p[0], p[-1]):
            return False
        if not og.has_arc(p[0], p[-1]):
            return False
        u, v = self.missing_pair
        iu, iv = p.index(u), p.index(v)
        if iu >= iv or og.has_arc(u, v) or og.has_arc(v, u):
            return False
        # the induced subgraph is a DAG with p[0] its only source and
        # p[-1] its only sink, both witnessed by the Hamiltonian path
        sub = set(p)
        for w in p[1:]:
            if not any(og.has_arc(q, w) for q in sub):
                return False
        for w in p[:-1]:
            if not any(og.has_arc(w, q) for q in sub):
                return False
        return True


def find_shortcut(og: OrientedGraph) -> ShortcutWitness | None:
    """First shortcut witness under deterministic ordering, or None.

    For every directed edge (a, b) in lexicographic order, enumerate
    directed a->..->b paths depth-first (smallest next vertex first);
    a path of length >= 3 whose vertex set induces a non-transitive
    subgraph yields the witness.  The input must be acyclic.
    """
    n = og.n
    reach = _descendants(og.out, n)  # raises on cyclic input
    for a in range(n):
        for b in _bits(og.out[a]):
            witness = _shortcut_via_edge(og, a, b, reach)
            if witness is not None:
                return witness
    return None


def _shortcut_via_edge(
    og: OrientedGraph, a: int, b: int, reach: Sequence[int]
) -> ShortcutWitness | None:
    out = og.out
    path = [a]

    def walk(v: int, on_path: int) -> ShortcutWitness | None:
        if v == b:
            if len(path) >= 4:
                for i in range(len(path)):
                    pi = path[i]
                    for j in range(i + 1, len(path)):
                        if not out[pi] >> path[j] & 1:
                            return ShortcutWitness(tuple(path), (a, b), (pi, path[j]))
            return None
        for w in _bits(out[v] & ~on_path):
            if w != b and not reach[w] >> b & 1:
                continue
            path.append(w)
            result = walk(w, on_path | (1 << w))
            path.pop()
            if result is not None:
                return result
        return None

    return walk(a, 1 << a)


# ---------------------------------------------------------------------------
# The decision procedure: backtracking over edge directions with cycle
# pruning on every assignment and sound partial shortcut pruning (the
# missing pair of a partial witness is always a base non-edge, so any
# completion keeps the witness).


def _search_semi_transitive(
    g: Graph,
    fixed: Sequence[tuple[int, int]] = (),
    count_all: bool = False,
) -> tuple[int, tuple[int, ...] | None]:
    """Shared engine: find the first semi-transitive orientation
    extending ``fixed``, or count all of them.

    Returns (count, out_masks_of_first_found_or_None).  With
    count_all=False the search stops at the first success.
    """
    n = g.n
    out = [0] * n
    reach = [1 << v for v in range(n)]
    anc = [1 << v for v in range(n)]

    def add_arc(a: int, b: int) -> list | None:
        """Direct a->b; returns an undo record, or None on a cycle."""
        if reach[b] >> a & 1:
            return None
        undo = []
        rb = reach[b]
        for w in _bits(anc[a]):
            if rb & ~reach[w]:
                undo.append((w, reach[w], anc[w]))
                reach[w] |= rb
        # descendants of b and ancestors of a are disjoint here (else a
        # cycle would have been detected), so no double bookkeeping
        ab = anc[a]
        for w in _bits(rb):
            if ab & ~anc[w]:
                undo.append((w, reach[w], anc[w]))
                anc[w] |= ab
        out[a] |= 1 << b
        return undo

    def remove_arc(a: int, b: int, undo: list) -> None:
        out[a] &= ~(1 << b)
        for w, r, an in undo:
            reach[w] = r
            anc[w] = an

    def partial_shortcut() -> bool:
        for u in range(n):
            cand = reach[u] & ~(1 << u) & ~g.adj[u]
            if not cand:
                continue
            heads = 0
            for a in _bits(anc[u]):
                heads |= out[a]
            while cand:
                lb = cand & -cand
                v = lb.bit_length() - 1
                cand ^= lb
                if heads & reach[v]:
                    return True
        return False

    for a, b in fixed:
        undo = add_arc(a, b)
        if undo is None or partial_shortcut():
            return 0, None

    fixed_mask = [0] * n
    for a, b in fixed:
        fixed_mask[a] |= 1 << b
        fixed_mask[b] |= 1 << a
    free = [
        (u, v)
        for u, v in g.edges()
        if not fixed_mask[u] >> v & 1
    ]
    # most-constrained first: descending endpoint-degree sum, then lex
    free.sort(key=lambda e: (-(g.degree(e[0]) + g.degree(e[1])), e))

    found: list[tuple[int, ...] | None] = [None]
    count = 0

    def assign(i: int) -> bool:
        """Returns True when the search can stop (first hit found)."""
        nonlocal count
        if i == len(free):
            count += 1
            if found[0] is None:
                found[0] = tuple(out)
            return not count_all
        u, v = free[i]
        for a, b in ((u, v), (v, u)):
            undo = add_arc(a, b)
            if undo is None:
                continue
            if not partial_shortcut():
                if assign(i + 1):
                    remove_arc(a, b, undo)
                    return True
            remove_arc(a, b, undo)
        return False

    assign(0)
    return count, found[0]


def find_semi_transitive_orientation(g: Graph) -> OrientedGraph | None:
    """Some semi-transitive orientation of g, or None when none exists.

    Exhaustive backtracking, hence a decision procedure; the result is
    the first orientation found under the fixed branching order (edges
    by descending endpoint-degree sum, u->v tried before v->u for u<v).
    """
    _, masks = _search_semi_transitive(g)
    if masks is None:
        return None
    og = OrientedGraph._from_out(g, masks)
    assert is_semi_transitive(og)
    return og


def is_word_representable(g: Graph) -> bool:
    """Decided via the orientation criterion: representable iff some
    semi-transitive orientation exists."""
    return find_semi_transitive_orientation(g) is not None


def count_semi_transitive_extensions(
    g: Graph, partial: Iterable[tuple[int, int]]
) -> int:
    """Number of semi-transitive orientations of g agreeing with the
    partial assignment, by plain exhaustive enumeration."""
    fixed = list(partial)
    seen = set()
    for a, b in fixed:
        if not g.adjacent(a, b):
            raise ValueError(f"({a},{b}) is not an edge of g")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ValueError(f"edge {{{a},{b}}} fixed more than once")
        seen.add(key)
    fixed_mask = [0] * g.n
    for a, b in fixed:
        fixed_mask[a] |= 1 << b
        fixed_mask[b] |= 1 << a
    free = [(u, v) for u, v in g.edges() if not fixed_mask[u] >> v & 1]
    base_out = [0] * g.n
    for a, b in fixed:
        base_out[a] |= 1 << b
    count = 0
    for mask in range(1 << len(free)):
        out = base_out[:]
        m = mask
        for u, v in free:
            if m & 1:
                out[v] |= 1 << u
            else:
                out[u] |= 1 << v
            m >>= 1
        if _topological_order(out, g.n) is not None and not _has_shortcut_masks(
            g.n, out, g.adj
        ):
            count += 1
    return count


# ---------------------------------------------------------------------------
# Transitive orientations (comparability testing support).


def find_transitive_orientation(g: Graph) -> OrientedGraph | None:
    """A transitive orientation of g, or None; backtracking with
    implication propagation (u->v and v->z force u->z when {u,z} is an
    edge, and contradict when it is not)."""
    n = g.n
    edges = g.edges()
    state: dict[tuple[int, int], int] = {}  # (u,v) u<v -> 0 undecided, 1 u->v, 2 v->u

    def arc_of(u: int, v: int) -> int:
        """1 if u->v decided, -1 if v->u, 0 undecided."""
        a, b = (u, v) if u < v else (v, u)
        s = state.get((a, b), 0)
        if s == 0:
            return 0
        forward = s == 1
        return 1 if forward == (u < v) else -1

    def set_arc(u: int, v: int, trail: list) -> bool:
        """Orient u->v, propagating closure; False on contradiction."""
        cur = arc_of(u, v)
        if cur == 1:
            return True
        if cur == -1:
            return False
        a, b = (u, v) if u < v else (v, u)
        state[(a, b)] = 1 if u < v else 2
        trail.append((a, b))
        # close through every vertex z
        for z in range(n):
            if z == u or z == v:
                continue
            # u->v and v->z  =>  u->z
            if g.adjacent(v, z) and arc_of(v, z) == 1:
                if not g.adjacent(u, z):
                    return False
                if not set_arc(u, z, trail):
                    return False
            # z->u and u->v  =>  z->v
            if g.adjacent(z, u) and arc_of(z, u) == 1:
                if not g.adjacent(z, v):
                    return False
                if not set_arc(z, v, trail):
                    return False
        return True

    def solve(i: int) -> bool:
        while i < len(edges) and state.get(edges[i], 0) != 0:
            i += 1
        if i == len(edges):
            return True
        u, v = edges[i]
        for x, y in ((u, v), (v, u)):
            trail: list = []
            if set_arc(x, y, trail) and solve(i + 1):
                return True
            for key in trail:
                del state[key]
        return False

    if not solve(0):
        return None
    arcs = []
    for (a, b), s in state.items():
        arcs.append((a, b) if s == 1 else (b, a))
    og = OrientedGraph(g, arcs)
    assert is_transitive(og)
    return og


def has_transitive_orientation(g: Graph) -> bool:
    return find_transitive_orientation(g) is not None
