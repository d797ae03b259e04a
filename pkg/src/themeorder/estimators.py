"""Scikit-learn style wrappers around the ordering strategies.

Each orderer is a transductive estimator in the spirit of sklearn's
clusterers: ``fit(corpus)`` validates the input, runs the strategy and
exposes the outcome through trailing-underscore attributes, while
``get_params``/``set_params`` come from ``BaseEstimator`` so the
objects compose with pipelines and grids.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator

from .analysis import cluster_blocks, distance_matrix
from .chronological import chronological_order
from .cohesion import DEFAULT_THRESHOLD, augmented_order
from .majority import majority_order
from .model import Corpus, OrderingSet, check_corpus


class _BaseOrderer(BaseEstimator):
    def fit(self, corpus: Corpus, y=None):
        check_corpus(corpus)
        self.result_ = self._order(corpus)
        self.ordering_ = self.result_.sequence
        return self

    def fit_predict(self, corpus: Corpus, y=None) -> tuple[str, ...]:
        return self.fit(corpus).ordering_

    def _order(self, corpus: Corpus):
        raise NotImplementedError


class MajorityOrderer(_BaseOrderer):
    """Order themes to maximize agreement with the input documents.

    Parameters
    ----------
    tie_break : "id" or int
        "id" resolves greedy ties to the smallest theme id; an integer
        is used as a seed for random tie resolution.
    """

    def __init__(self, tie_break: str | int = "id"):
        self.tie_break = tie_break

    def _order(self, corpus: Corpus):
        result = majority_order(corpus, tie_break=self.tie_break)
        self.graph_ = result.diagnostics.graph
        self.weight_ = result.diagnostics.weight
        return result


class ChronologicalOrderer(_BaseOrderer):
    """Order themes by their first publication time."""

    def _order(self, corpus: Corpus):
        result = chronological_order(corpus)
        self.timestamps_ = result.diagnostics.timestamps
        return result


class AugmentedOrderer(_BaseOrderer):
    """Chronological ordering over cohesion blocks, then within blocks.

    Parameters
    ----------
    threshold : rational
        Relatedness ratio two themes must exceed to be linked.
    inclusive : bool
        Link at ratio == threshold too (default strict).
    """

    def __init__(self, threshold=DEFAULT_THRESHOLD, inclusive: bool = False):
        self.threshold = threshold
        self.inclusive = inclusive

    def _order(self, corpus: Corpus):
        result = augmented_order(
            corpus, threshold=self.threshold, inclusive=self.inclusive
        )
        self.blocks_ = result.diagnostics.partition
        return result


class OrderingBlockClusterer(BaseEstimator):
    """Recover blocks of items that stay adjacent across alternative
    orderings of the same items.

    Fits on an OrderingSet: builds the average-separation distance
    matrix and clusters it agglomeratively, stopping at ``n_clusters``
    clusters or at the merge-cost ``threshold``.
    """

    def __init__(self, n_clusters: int | None = None, threshold=None):
        self.n_clusters = n_clusters
        self.threshold = threshold

    def fit(self, ordering_set: OrderingSet, y=None):
        self.distances_ = distance_matrix(ordering_set)
        self.partition_ = cluster_blocks(
            self.distances_, n_clusters=self.n_clusters, threshold=self.threshold
        )
        self.blocks_ = self.partition_.member_sets()
        by_label = {
            label: k
            for k, block in enumerate(self.partition_.blocks)
            for label in block.members
        }
        self.labels_ = tuple(by_label[label] for label in ordering_set.item_labels)
        return self

    def fit_predict(self, ordering_set: OrderingSet, y=None) -> tuple[int, ...]:
        return self.fit(ordering_set).labels_


__all__ = [
    "MajorityOrderer",
    "ChronologicalOrderer",
    "AugmentedOrderer",
    "OrderingBlockClusterer",
]
