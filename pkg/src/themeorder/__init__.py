"""themeorder: ordering strategies for cross-document sentence themes.

Three strategies order the themes of a news corpus: majority ordering
(maximize agreement with the input documents), chronological ordering
(earliest publication first) and the cohesion-augmented strategy
(chronological over topically related blocks). An analysis toolkit
studies collections of alternative orderings of the same items.
"""

from .analysis import (
    DistanceMatrix,
    cluster_blocks,
    count_unique_orderings,
    distance_matrix,
    fisher_exact_one_sided,
    kendall_tau_distance,
    pair_distance,
)
from .chronological import ThemeTimeStamp, chronological_order, theme_timestamp
from .cohesion import (
    DEFAULT_THRESHOLD,
    RelatednessScore,
    augmented_order,
    build_blocks,
    cooccurrence_counts,
    naive_segment,
    relatedness,
)
from .estimators import (
    AugmentedOrderer,
    ChronologicalOrderer,
    MajorityOrderer,
    OrderingBlockClusterer,
)
from .io import (
    CorpusFormatError,
    OrderingFormatError,
    load_sample_orderings,
    parse_corpus,
    parse_ordering_set,
    parse_publication_time,
    serialize_corpus,
    serialize_ordering_set,
)
from .majority import (
    PrecedenceGraph,
    brute_force_optimal,
    build_precedence_counts,
    greedy_linearize,
    majority_order,
    order_weight,
)
from .model import (
    Block,
    BlockPartition,
    Corpus,
    CorpusValidationError,
    Document,
    OrderingResult,
    OrderingSet,
    PublicationTime,
    SentenceRef,
    Theme,
    check_corpus,
    validate_corpus,
)

__version__ = "0.1.0"

__all__ = [
    "AugmentedOrderer",
    "Block",
    "BlockPartition",
    "ChronologicalOrderer",
    "Corpus",
    "CorpusFormatError",
    "CorpusValidationError",
    "DEFAULT_THRESHOLD",
    "DistanceMatrix",
    "Document",
    "MajorityOrderer",
    "OrderingBlockClusterer",
    "OrderingFormatError",
    "OrderingResult",
    "OrderingSet",
    "PrecedenceGraph",
    "PublicationTime",
    "RelatednessScore",
    "SentenceRef",
    "Theme",
    "ThemeTimeStamp",
    "augmented_order",
    "brute_force_optimal",
    "build_blocks",
    "build_precedence_counts",
    "check_corpus",
    "chronological_order",
    "cluster_blocks",
    "cooccurrence_counts",
    "count_unique_orderings",
    "distance_matrix",
    "fisher_exact_one_sided",
    "greedy_linearize",
    "kendall_tau_distance",
    "load_sample_orderings",
    "majority_order",
    "naive_segment",
    "order_weight",
    "pair_distance",
    "parse_corpus",
    "parse_ordering_set",
    "parse_publication_time",
    "relatedness",
    "serialize_corpus",
    "serialize_ordering_set",
    "theme_timestamp",
    "validate_corpus",
]
