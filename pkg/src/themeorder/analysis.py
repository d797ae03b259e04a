"""Analysis toolkit for collections of alternative orderings.

Distances between items are measured as the average number of positions
separating them across all orderings; blocks of items that travel
together are recovered by agglomerative clustering of that matrix. The
module also provides the agreement statistics used to compare ordering
strategies: Kendall tau distance and the exact one-sided Fisher test.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .model import Block, BlockPartition, OrderingSet

Rational = Fraction | int | float


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric pairwise distances with a zero diagonal, kept exact."""

    item_labels: tuple[str, ...]
    values: tuple[tuple[Fraction, ...], ...]

    def distance(self, a: str, b: str) -> Fraction:
        index = {label: k for k, label in enumerate(self.item_labels)}
        return self.values[index[a]][index[b]]

    def tsv(self) -> str:
        """Tab-separated rendering: header row of labels, then one row
        per label with exact rational entries."""
        lines = ["\t".join(("",) + self.item_labels)]
        for label, row in zip(self.item_labels, self.values):
            lines.append("\t".join((label,) + tuple(str(v) for v in row)))
        return "\n".join(lines) + "\n"


def pair_distance(a: str, b: str, ordering_set: OrderingSet) -> Fraction:
    """Average number of positions separating two labels across all
    orderings of the set."""
    for label in (a, b):
        if label not in ordering_set.item_labels:
            raise KeyError(f"unknown label {label!r}")
    total = sum(abs(row.index(a) - row.index(b)) for row in ordering_set.orderings)
    return Fraction(total, len(ordering_set.orderings))


def distance_matrix(ordering_set: OrderingSet) -> DistanceMatrix:
    labels = ordering_set.item_labels
    values = tuple(
        tuple(pair_distance(a, b, ordering_set) if a != b else Fraction(0) for b in labels)
        for a in labels
    )
    return DistanceMatrix(item_labels=labels, values=values)


def cluster_blocks(
    matrix: DistanceMatrix,
    *,
    n_clusters: int | None = None,
    threshold: Rational | None = None,
) -> BlockPartition:
    """Agglomerative clustering of the distance matrix into blocks.

    Clusters merge by Ward's minimum-variance criterion (Lance-Williams
    update, exact rational arithmetic): the closest pair merges first,
    with ties resolved towards the lexicographically smallest member
    labels. Stop either at `n_clusters` clusters or, with `threshold`,
    once the cheapest merge would cost more than the threshold
    (expressed in the same units as the input distances).

    Returns the blocks without time stamps, ordered by their smallest
    member label.
    """
    if (n_clusters is None) == (threshold is None):
        raise ValueError("specify exactly one of n_clusters or threshold")
    labels = matrix.item_labels
    if n_clusters is not None and not 1 <= n_clusters <= len(labels):
        raise ValueError(f"n_clusters must be in 1..{len(labels)}, got {n_clusters}")
    limit = None if threshold is None else Fraction(threshold) ** 2

    clusters: list[frozenset[str]] = [frozenset([label]) for label in labels]
    cost: dict[frozenset[frozenset[str]], Fraction] = {}
    for i, a in enumerate(clusters):
        for b in clusters[i + 1 :]:
            cost[frozenset((a, b))] = matrix.distance(min(a), min(b)) ** 2

    while len(clusters) > (n_clusters or 1):
        best = None
        for i in range(len(clusters)):
            for j in range(i + 1, len(clusters)):
                key = (
                    cost[frozenset((clusters[i], clusters[j]))],
                    tuple(sorted((min(clusters[i]), min(clusters[j])))),
                )
                if best is None or key < best[0]:
                    best = (key, clusters[i], clusters[j])
        (merge_cost, _), left, right = best
        if limit is not None and merge_cost > limit:
            break
        merged = left | right
        clusters = [c for c in clusters if c not in (left, right)]
        for other in clusters:
            no, nl, nr = len(other), len(left), len(right)
            cost[frozenset((other, merged))] = (
                (no + nl) * cost[frozenset((other, left))]
                + (no + nr) * cost[frozenset((other, right))]
                - no * cost[frozenset((left, right))]
            ) / (no + nl + nr)
        clusters.append(merged)

    blocks = sorted((Block(members=tuple(sorted(c))) for c in clusters), key=lambda b: b.members)
    return BlockPartition(blocks=tuple(blocks))


def count_unique_orderings(ordering_set: OrderingSet) -> int:
    """Number of distinct permutations in the set."""
    return len(set(ordering_set.orderings))


def kendall_tau_distance(o1: Sequence[str], o2: Sequence[str]) -> int:
    """Number of item pairs the two permutations order oppositely."""
    if sorted(o1) != sorted(o2) or len(set(o1)) != len(o1):
        raise ValueError("orderings must be permutations of the same labels")
    rank = {label: k for k, label in enumerate(o1)}
    ranks = [rank[label] for label in o2]
    inversions = 0
    seen: list[int] = []
    for k, r in enumerate(ranks):
        lo, hi = 0, len(seen)
        while lo < hi:
            mid = (lo + hi) // 2
            if seen[mid] <= r:
                lo = mid + 1
            else:
                hi = mid
        inversions += k - lo
        insort(seen, r)
    return inversions


def fisher_exact_one_sided(table: Sequence[Sequence[int]]) -> Fraction:
    """Exact one-sided Fisher test on a 2x2 contingency table.

    Returns the hypergeometric upper-tail probability of the top-left
    cell being at least as large as observed, with both margins fixed.
    Exact integer arithmetic throughout, so the result is a Fraction
    in (0, 1].
    """
    try:
        (a, b), (c, d) = table
    except (TypeError, ValueError) as exc:
        raise ValueError("table must be 2x2") from exc
    cells = []
    for x in (a, b, c, d):
        if isinstance(x, bool) or int(x) != x or x < 0:
            raise ValueError("table cells must be non-negative integers")
        cells.append(int(x))
    a, b, c, d = cells
    total = a + b + c + d
    if total == 0:
        raise ValueError("Fisher test is undefined for an all-zero table")
    row1 = a + b
    col1 = a + c
    numerator = sum(
        comb(col1, x) * comb(total - col1, row1 - x)
        for x in range(a, min(row1, col1) + 1)
    )
    return Fraction(numerator, comb(total, row1))
