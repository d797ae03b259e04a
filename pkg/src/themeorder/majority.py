"""Majority ordering: linearize the precedence graph built from the
relative theme orders observed in the input documents.

Finding the maximum-weight linear order is NP-complete, so the strategy
uses a greedy modified topological sort; an exhaustive optimizer is
provided as an oracle for small graphs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Mapping

from .model import Corpus, OrderingResult

TieBreak = str | int


@dataclass(frozen=True)
class PrecedenceGraph:
    """Directed pair counts: counts[(i, j)] is the number of documents in
    which theme i's sentences come before theme j's."""

    theme_ids: tuple[str, ...]
    counts: Mapping[tuple[str, str], int]

    def count(self, i: str, j: str) -> int:
        return self.counts.get((i, j), 0)

    def edge_lines(self) -> list[str]:
        """Positive edges as `i j count`, sorted lexicographically."""
        return [
            f"{i} {j} {c}" for (i, j), c in sorted(self.counts.items()) if c > 0
        ]


@dataclass(frozen=True)
class MajorityDiagnostics:
    graph: PrecedenceGraph
    weight: int


def build_precedence_counts(corpus: Corpus) -> PrecedenceGraph:
    """Count, for every theme pair, how many documents present one theme
    before the other.

    A theme's position within a document is the minimum position of its
    members there; documents containing at most one theme of a pair
    contribute nothing to that pair.
    """
    counts: dict[tuple[str, str], int] = {}
    theme_ids = corpus.theme_ids
    for doc in corpus.documents:
        positions: dict[str, int] = {}
        for theme in corpus.themes:
            in_doc = [ref.position for ref in theme.members if ref.doc_id == doc.doc_id]
            if in_doc:
                positions[theme.theme_id] = min(in_doc)
        for i, j in combinations(sorted(positions), 2):
            if positions[i] < positions[j]:
                counts[(i, j)] = counts.get((i, j), 0) + 1
            else:
                counts[(j, i)] = counts.get((j, i), 0) + 1
    return PrecedenceGraph(theme_ids=theme_ids, counts=counts)


def order_weight(sequence: tuple[str, ...] | list[str], graph: PrecedenceGraph) -> int:
    """Sum of pair counts concordant with the given linear order."""
    sequence = tuple(sequence)
    if sorted(sequence) != sorted(graph.theme_ids):
        raise ValueError("sequence must be a permutation of the graph's theme ids")
    total = 0
    for k, earlier in enumerate(sequence):
        for later in sequence[k + 1 :]:
            total += graph.count(earlier, later)
    return total


def greedy_linearize(graph: PrecedenceGraph, tie_break: TieBreak = "id") -> tuple[str, ...]:
    """Greedy modified topological sort of the precedence graph.

    Repeatedly emits a remaining node with maximal potential, where the
    potential is its outgoing count sum minus its incoming count sum
    over the remaining nodes, then drops the node and all its incident
    edges. Ties go to the smallest theme id, or to a uniform random pick
    when `tie_break` is an integer seed.
    """
    rng = _tie_rng(tie_break)
    remaining = set(graph.theme_ids)
    potential = {
        v: sum(graph.count(v, u) - graph.count(u, v) for u in remaining if u != v)
        for v in remaining
    }
    out: list[str] = []
    while remaining:
        best = max(potential[v] for v in remaining)
        candidates = sorted(v for v in remaining if potential[v] == best)
        pick = candidates[0] if rng is None else rng.choice(candidates)
        out.append(pick)
        remaining.remove(pick)
        for v in remaining:
            potential[v] += graph.count(pick, v) - graph.count(v, pick)
    return tuple(out)


def _tie_rng(tie_break: TieBreak) -> random.Random | None:
    if tie_break == "id":
        return None
    if isinstance(tie_break, int) and not isinstance(tie_break, bool):
        return random.Random(tie_break)
    raise ValueError(f"tie_break must be 'id' or an integer seed, got {tie_break!r}")


def brute_force_optimal(
    graph: PrecedenceGraph, max_n: int = 8
) -> tuple[tuple[str, ...], int]:
    """Exhaustive maximum-weight linear order, for use as a test oracle.

    Enumerates every permutation, so the graph is capped at `max_n`
    nodes; ties resolve to the lexicographically smallest sequence.
    """
    if len(graph.theme_ids) > max_n:
        raise ValueError(
            f"brute force is limited to {max_n} themes, got {len(graph.theme_ids)}"
        )
    best_seq: tuple[str, ...] = ()
    best_weight = -1
    for candidate in permutations(sorted(graph.theme_ids)):
        weight = order_weight(candidate, graph)
        if weight > best_weight:
            best_seq, best_weight = candidate, weight
    return best_seq, max(best_weight, 0)


def majority_order(corpus: Corpus, tie_break: TieBreak = "id") -> OrderingResult:
    """Run the full majority strategy on a validated corpus."""
    graph = build_precedence_counts(corpus)
    sequence = greedy_linearize(graph, tie_break=tie_break)
    return OrderingResult(
        strategy="majority",
        sequence=sequence,
        diagnostics=MajorityDiagnostics(graph=graph, weight=order_weight(sequence, graph)),
    )
