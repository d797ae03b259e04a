"""Cohesion-augmented ordering: group topically related themes into
blocks via segment co-occurrence, order the blocks chronologically, and
order themes chronologically inside each block.

Relatedness of two themes is the fraction of their same-document
sentence pairs that also fall in the same segment; pairs above a
threshold are linked and blocks are the transitive closure of the
links. A naive word-overlap segmenter is included for corpora that
arrive without segment ids. It is never applied implicitly.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt
from statistics import fmean, pstdev

from .chronological import theme_timestamp, timestamp_sort_key
from .model import Block, BlockPartition, Corpus, Document, OrderingResult, Theme

DEFAULT_THRESHOLD = Fraction(3, 5)

Rational = Fraction | int | float


@dataclass(frozen=True)
class RelatednessScore:
    """Segment co-occurrence evidence for one unordered theme pair."""

    theme_pair: tuple[str, str]
    pairs_same_text: int
    pairs_same_segment: int
    ratio: Fraction


@dataclass(frozen=True)
class AugmentedDiagnostics:
    partition: BlockPartition


def cooccurrence_counts(a: Theme, b: Theme, corpus: Corpus) -> tuple[int, int]:
    """Count cross-theme sentence pairs sharing a document, and the
    subset of those also sharing a segment."""
    if a.theme_id == b.theme_id:
        raise ValueError("co-occurrence is defined for two distinct themes")
    same_text = 0
    same_segment = 0
    for doc in corpus.documents:
        segs_a = Counter(
            doc.segment_ids[ref.position] for ref in a.members if ref.doc_id == doc.doc_id
        )
        if not segs_a:
            continue
        segs_b = Counter(
            doc.segment_ids[ref.position] for ref in b.members if ref.doc_id == doc.doc_id
        )
        same_text += segs_a.total() * segs_b.total()
        same_segment += sum(n * segs_b[seg] for seg, n in segs_a.items())
    return same_text, same_segment


def relatedness(a: Theme, b: Theme, corpus: Corpus) -> RelatednessScore:
    """Symmetric relatedness score; themes sharing no document score 0."""
    same_text, same_segment = cooccurrence_counts(a, b, corpus)
    ratio = Fraction(same_segment, same_text) if same_text else Fraction(0)
    return RelatednessScore(
        theme_pair=tuple(sorted((a.theme_id, b.theme_id))),
        pairs_same_text=same_text,
        pairs_same_segment=same_segment,
        ratio=ratio,
    )


class _UnionFind:
    def __init__(self, items):
        self.parent = {item: item for item in items}

    def find(self, item):
        root = item
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[item] != root:
            self.parent[item], item = root, self.parent[item]
        return root

    def union(self, a, b):
        self.parent[self.find(b)] = self.find(a)


def build_blocks(
    corpus: Corpus,
    threshold: Rational = DEFAULT_THRESHOLD,
    inclusive: bool = False,
) -> BlockPartition:
    """Partition the themes into cohesion blocks.

    Two themes are linked when their relatedness ratio is strictly above
    the threshold (at or above it with ``inclusive``); blocks are the
    connected components of the link relation because topical relatedness
    spreads through shared neighbours. Each block carries the earliest
    time stamp among its themes, and the blocks come back sorted into
    output order: earliest stamp first, stamp-sentence position within
    the shared article breaking ties.
    """
    themes = sorted(corpus.themes, key=lambda t: t.theme_id)
    links = _UnionFind([t.theme_id for t in themes])
    for i, a in enumerate(themes):
        for b in themes[i + 1 :]:
            score = relatedness(a, b, corpus)
            if score.ratio > threshold or (inclusive and score.ratio == threshold):
                links.union(a.theme_id, b.theme_id)

    groups: dict[str, list[str]] = {}
    for theme in themes:
        groups.setdefault(links.find(theme.theme_id), []).append(theme.theme_id)

    stamps = {
        theme.theme_id: theme_timestamp(theme, corpus) for theme in corpus.themes
    }
    blocks = []
    for members in groups.values():
        ordered = sorted(members, key=lambda tid: timestamp_sort_key(stamps[tid]))
        blocks.append(
            Block(
                members=tuple(ordered),
                time=stamps[ordered[0]].time,
                stamp_theme=ordered[0],
            )
        )
    blocks.sort(key=lambda blk: timestamp_sort_key(stamps[blk.stamp_theme]))
    return BlockPartition(blocks=tuple(blocks))


def augmented_order(
    corpus: Corpus,
    threshold: Rational = DEFAULT_THRESHOLD,
    inclusive: bool = False,
) -> OrderingResult:
    """Chronological ordering applied at block level, then inside blocks.

    Blocks play the role themes play for the plain chronological
    strategy; each block's themes stay contiguous in the output.
    """
    partition = build_blocks(corpus, threshold=threshold, inclusive=inclusive)
    sequence = tuple(tid for block in partition.blocks for tid in block.members)
    return OrderingResult(
        strategy="augmented",
        sequence=sequence,
        diagnostics=AugmentedDiagnostics(partition=partition),
    )


_WORD = re.compile(r"[a-z0-9']+")

_STOPWORDS = frozenset(
    """a an the and or but if then than of in on at to for with by from as is are
    was were be been being it its this that these those he she they we you i his
    her their our your not no nor so too very do did does done has have had will
    would shall should can could may might must about into over under after
    before when while where which who whom what why how all any both each few
    more most other some such only own same s t just now""".split()
)


def _content_words(sentence: str) -> Counter[str]:
    return Counter(w for w in _WORD.findall(sentence.lower()) if w not in _STOPWORDS)


def _cosine(left: Counter[str], right: Counter[str]) -> float:
    dot = sum(n * right[w] for w, n in left.items())
    if dot == 0:
        return 0.0
    norm = sqrt(sum(n * n for n in left.values())) * sqrt(sum(n * n for n in right.values()))
    return dot / norm


def naive_segment(document: Document, window: int = 2) -> tuple[int, ...]:
    """Fallback topical segmentation by a word-overlap valley heuristic.

    For each gap between adjacent sentences, compute the cosine
    similarity of the content-word bags in the up-to-`window` sentences
    on either side. A gap becomes a segment boundary when it is a local
    minimum of that similarity curve (no neighbouring gap is lower) and
    its similarity falls below the curve's mean minus one standard
    deviation. Deterministic; intended only for corpora that lack real
    segment ids, and never invoked implicitly.
    """
    if window < 1:
        raise ValueError("window must be at least 1")
    n = len(document.sentences)
    if n <= 1:
        return (0,) * n
    bags = [_content_words(s) for s in document.sentences]
    sims = []
    for gap in range(n - 1):
        left: Counter[str] = Counter()
        for bag in bags[max(0, gap - window + 1) : gap + 1]:
            left.update(bag)
        right: Counter[str] = Counter()
        for bag in bags[gap + 1 : gap + 1 + window]:
            right.update(bag)
        sims.append(_cosine(left, right))

    cutoff = fmean(sims) - pstdev(sims)
    boundaries = set()
    for gap, sim in enumerate(sims):
        if sim >= cutoff:
            continue
        if gap > 0 and sims[gap - 1] < sim:
            continue
        if gap + 1 < len(sims) and sims[gap + 1] < sim:
            continue
        boundaries.add(gap)

    segment_ids = [0] * n
    current = 0
    for pos in range(1, n):
        if pos - 1 in boundaries:
            current += 1
        segment_ids[pos] = current
    return tuple(segment_ids)
