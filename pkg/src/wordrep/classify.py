"""Forbidden-subgraph characterizations of word-representable split
graphs and a top-level classification dispatcher.

Two exact characterizations are implemented: for split graphs whose
independent vertices all have degree at most two (avoid T2 and the
A_l family), and for split graphs with clique size exactly four (avoid
T1, T2, T3, T4).  Everything else falls back to the exhaustive
orientation search.  Each fast path can be cross-checked against that
oracle; a disagreement raises rather than being papered over, because
it would falsify one of the encoded theorems.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from . import families
from .graphs import Embedding, Graph, _bits, contains_induced
from .orient import (
    OracleDisagreement,
    OrientedGraph,
    find_semi_transitive_orientation,
    is_word_representable,
)
from .split import (
    SplitPartition,
    _reduce_with_map,
    is_split_comparability,
    split_partition,
)

REASON_CLIQUE_LE_3 = "CLIQUE_LE_3"
REASON_COMPARABILITY = "COMPARABILITY"
REASON_MAIN1 = "THEOREM_MAIN1"
REASON_MAIN2 = "THEOREM_MAIN2"
REASON_ORACLE = "ORACLE_SEARCH"


@dataclass(frozen=True)
class Verdict:
    """Outcome of classifying one graph.

    ``witness_pattern`` names a forbidden induced subgraph and its
    embedding (host labels) when non-representable via a
    characterization; ``witness_orientation`` carries a semi-transitive
    orientation when representable and one was requested.
    """

    representable: bool
    reason: str
    witness_pattern: tuple[str, Embedding] | None = None
    witness_orientation: OrientedGraph | None = None

    def to_json(self) -> dict:
        from .orient import orientation_bits

        witness = None
        if self.witness_pattern is not None:
            name, emb = self.witness_pattern
            witness = {"pattern": name, "vertices": list(emb.mapping)}
        elif self.witness_orientation is not None:
            witness = {"orientation": orientation_bits(self.witness_orientation)}
        return {
            "representable": self.representable,
            "reason": self.reason,
            "witness": witness,
        }


# ---------------------------------------------------------------------------
# The A_l family scan, run through two independent routes that must
# agree: a generic induced-subgraph search per l, and a structural
# search for a covered clique cycle plus apex.


def find_a_ell(g: Graph) -> tuple[int, Embedding] | None:
    """Least l >= 4 with a_graph(l) induced in g, with an embedding, or
    None.  On split inputs the structural route is run as well and any
    disagreement raises."""
    generic = _find_a_ell_generic(g)
    sp = split_partition(g)
    if sp is not None:
        structural = _find_a_ell_structural(sp)
        generic_l = generic[0] if generic else None
        if generic_l != structural:
            raise OracleDisagreement(
                f"A_l scan mismatch on {g!r}: generic={generic_l}, "
                f"structural={structural}"
            )
    return generic


def _find_a_ell_generic(g: Graph) -> tuple[int, Embedding] | None:
    l = 4
    while 2 * l - 1 <= g.n:
        emb = contains_induced(g, families.a_graph(l))
        if emb is not None:
            return l, emb
        l += 1
    return None


def _find_a_ell_structural(sp: SplitPartition) -> int | None:
    """Least l such that some (l-1)-cycle in the clique is fully covered
    by independent vertices (each seeing exactly its two cycle
    neighbours within the cycle set) together with an apex vertex seeing
    the whole cycle and none of the covers."""
    g = sp.graph
    clique = sp.clique
    m = len(clique)
    for r in range(3, m + 1):
        if 2 * (r + 1) - 1 > g.n:
            break
        for cset in combinations(clique, r):
            cmask = sum(1 << v for v in cset)
            apexes = [z for z in clique if not cmask >> z & 1]
            apexes += [
                z for z in sp.independent if g.adj[z] & cmask == cmask
            ]
            for z in apexes:
                pairs = set()
                for p in sp.independent:
                    if p == z or g.adjacent(p, z):
                        continue
                    hit = g.adj[p] & cmask
                    if hit.bit_count() == 2:
                        pairs.add(tuple(_bits(hit)))
                if len(pairs) >= r and _has_hamiltonian_cycle(cset, pairs):
                    return r + 1
    return None


def _has_hamiltonian_cycle(vertices: tuple[int, ...], pairs: set) -> bool:
    first, rest = vertices[0], vertices[1:]

    def linked(a: int, b: int) -> bool:
        return ((a, b) if a < b else (b, a)) in pairs

    for perm in permutations(rest):
        cyc = (first,) + perm
        if all(linked(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))):
            return True
    return False


# ---------------------------------------------------------------------------
# The two characterizations.  Reason tokens name the serialized verdict
# contract; the functions are named for the cases they decide.


def classify_degree_two(sp: SplitPartition) -> Verdict:
    """Split graphs whose independent vertices have degree at most two
    are word-representable iff they avoid T2 and every A_l as induced
    subgraphs."""
    g = sp.graph
    if any(g.degree(v) > 2 for v in sp.independent):
        raise ValueError("an independent vertex has degree above two")
    emb = contains_induced(g, families.named("T2"))
    if emb is not None:
        return Verdict(False, REASON_MAIN1, witness_pattern=("T2", emb))
    hit = find_a_ell(g)
    if hit is not None:
        l, emb = hit
        return Verdict(False, REASON_MAIN1, witness_pattern=(f"A_{l}", emb))
    return Verdict(True, REASON_MAIN1)


def classify_clique_four(sp: SplitPartition) -> Verdict:
    """Split graphs with clique size exactly four are word-representable
    iff they avoid T1, T2, T3 and T4 as induced subgraphs.  Patterns are
    scanned smallest first so the reported witness is minimal."""
    if sp.m != 4:
        raise ValueError(f"clique size is {sp.m}, need exactly 4")
    for name in ("T1", "T2", "T3", "T4"):
        emb = contains_induced(sp.graph, families.named(name))
        if emb is not None:
            return Verdict(False, REASON_MAIN2, witness_pattern=(name, emb))
    return Verdict(True, REASON_MAIN2)


# ---------------------------------------------------------------------------
# Dispatcher.


def classify_split(
    g: Graph, *, verify: bool = False, want_orientation: bool = False
) -> Verdict:
    """Classify a split graph, fast paths first:

    after reduction, clique size <= 3 means representable (the graph is
    3-colorable); split comparability graphs are representable; then
    the degree-two and clique-four characterizations apply; anything
    left goes to the orientation search.

    verify=True re-decides via the oracle and raises on mismatch;
    want_orientation=True attaches a semi-transitive orientation of the
    input graph to representable verdicts.
    """
    sp = split_partition(g)
    if sp is None:
        raise ValueError("input graph is not split")
    reduced, labels = _reduce_with_map(g)
    rsp = split_partition(reduced)
    assert rsp is not None

    if rsp.m <= 3:
        verdict = Verdict(True, REASON_CLIQUE_LE_3)
    elif is_split_comparability(reduced):
        verdict = Verdict(True, REASON_COMPARABILITY)
    elif all(reduced.degree(v) <= 2 for v in rsp.independent):
        verdict = _relabel(classify_degree_two(rsp), labels)
    elif rsp.m == 4:
        verdict = _relabel(classify_clique_four(rsp), labels)
    else:
        found = find_semi_transitive_orientation(reduced)
        verdict = Verdict(found is not None, REASON_ORACLE)

    if want_orientation and verdict.representable:
        og = find_semi_transitive_orientation(g)
        assert og is not None, "fast path said representable, search disagrees"
        verdict = Verdict(
            verdict.representable, verdict.reason, verdict.witness_pattern, og
        )
    if verify and is_word_representable(g) != verdict.representable:
        raise OracleDisagreement(
            f"classification disagrees with the orientation oracle on "
            f"{g!r}: {verdict.reason} said {verdict.representable}"
        )
    return verdict


def _relabel(verdict: Verdict, labels: tuple[int, ...]) -> Verdict:
    """Map a witness found in the reduced graph back to input labels."""
    if verdict.witness_pattern is None:
        return verdict
    name, emb = verdict.witness_pattern
    lifted = Embedding(tuple(labels[w] for w in emb.mapping))
    return Verdict(verdict.representable, verdict.reason, (name, lifted))
