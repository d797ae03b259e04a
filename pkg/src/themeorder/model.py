"""Domain model for cross-document theme ordering.

All types are immutable after construction and safe to share across
threads; every operation in this package is a pure function of its
inputs unless it takes an explicit seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date
from functools import cached_property
from typing import Any


class CorpusValidationError(ValueError):
    """Raised when a corpus violates its structural invariants."""

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__(
            "corpus failed validation:\n" + "\n".join(f"  - {v}" for v in violations)
        )


@dataclass(frozen=True, order=True)
class PublicationTime:
    """Minute-resolution publication time of a wire article.

    Ordered by (day, hour, minute). Within one corpus no two documents
    may share a publication time, so it doubles as a document key.
    """

    day: date
    hour: int
    minute: int

    def __post_init__(self):
        if not 0 <= self.hour <= 23:
            raise ValueError(f"hour must be in 0..23, got {self.hour}")
        if not 0 <= self.minute <= 59:
            raise ValueError(f"minute must be in 0..59, got {self.minute}")

    def isoformat(self) -> str:
        return f"{self.day.isoformat()}T{self.hour:02d}:{self.minute:02d}"


@dataclass(frozen=True)
class Document:
    """One input article: ordered sentences plus per-sentence segment ids.

    Segment ids mark contiguous topical spans and must be supplied with
    the corpus; see cohesion.naive_segment for a fallback when the input
    lacks them.
    """

    doc_id: str
    publication_time: PublicationTime
    sentences: tuple[str, ...]
    segment_ids: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))
        object.__setattr__(self, "segment_ids", tuple(self.segment_ids))


@dataclass(frozen=True, order=True)
class SentenceRef:
    """Reference to one sentence: document id plus 0-based position."""

    doc_id: str
    position: int


@dataclass(frozen=True)
class Theme:
    """A set of sentences from different articles conveying one piece of
    information; the unit being ordered."""

    theme_id: str
    members: tuple[SentenceRef, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))


@dataclass(frozen=True)
class Corpus:
    """A document collection together with the themes drawn from it."""

    documents: tuple[Document, ...]
    themes: tuple[Theme, ...]

    def __post_init__(self):
        object.__setattr__(self, "documents", tuple(self.documents))
        object.__setattr__(self, "themes", tuple(self.themes))

    @cached_property
    def documents_by_id(self) -> dict[str, Document]:
        # first occurrence wins; duplicates are reported by validate_corpus
        table: dict[str, Document] = {}
        for doc in self.documents:
            table.setdefault(doc.doc_id, doc)
        return table

    @cached_property
    def themes_by_id(self) -> dict[str, Theme]:
        table: dict[str, Theme] = {}
        for theme in self.themes:
            table.setdefault(theme.theme_id, theme)
        return table

    @property
    def theme_ids(self) -> tuple[str, ...]:
        return tuple(t.theme_id for t in self.themes)

    def sentence(self, ref: SentenceRef) -> str:
        return self.documents_by_id[ref.doc_id].sentences[ref.position]


@dataclass(frozen=True)
class OrderingResult:
    """Output of one ordering strategy: a permutation of all theme ids
    plus strategy-specific diagnostics."""

    strategy: str
    sequence: tuple[str, ...]
    diagnostics: Any


@dataclass(frozen=True)
class OrderingSet:
    """Multiple alternative total orders over the same item labels."""

    item_labels: tuple[str, ...]
    orderings: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "item_labels", tuple(self.item_labels))
        object.__setattr__(
            self, "orderings", tuple(tuple(o) for o in self.orderings)
        )
        if len(set(self.item_labels)) != len(self.item_labels):
            raise ValueError("item labels must be distinct")
        if not self.orderings:
            raise ValueError("an ordering set needs at least one ordering")
        inventory = set(self.item_labels)
        for i, ordering in enumerate(self.orderings):
            if set(ordering) != inventory or len(ordering) != len(inventory):
                raise ValueError(f"ordering {i} is not a permutation of the labels")


@dataclass(frozen=True)
class Block:
    """A group of items that belong together in output.

    For the cohesion-augmented strategy the members are theme ids,
    `time` is the earliest time stamp among them and `stamp_theme` the
    theme achieving it; analysis-mode blocks over plain labels carry
    neither.
    """

    members: tuple[str, ...]
    time: PublicationTime | None = None
    stamp_theme: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))


@dataclass(frozen=True)
class BlockPartition:
    """Disjoint blocks covering every item, listed in output order."""

    blocks: tuple[Block, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))

    def member_sets(self) -> tuple[frozenset[str], ...]:
        return tuple(frozenset(b.members) for b in self.blocks)


def validate_corpus(corpus: Corpus) -> list[str]:
    """Check every corpus invariant and describe each violation found.

    Violations are data, not failures: the empty list means the corpus
    is accepted by every ordering strategy. Each entry names the
    offending entity and the rule it breaks.
    """
    violations: list[str] = []

    seen_docs: set[str] = set()
    for doc in corpus.documents:
        if doc.doc_id in seen_docs:
            violations.append(f"duplicate doc_id {doc.doc_id!r}")
        seen_docs.add(doc.doc_id)

    by_time: dict[PublicationTime, list[str]] = {}
    for doc in corpus.documents:
        by_time.setdefault(doc.publication_time, []).append(doc.doc_id)
    for time, ids in sorted(by_time.items()):
        if len(ids) > 1:
            violations.append(
                f"documents {', '.join(ids)} share publication time {time.isoformat()}"
            )

    for doc in corpus.documents:
        if not doc.sentences:
            violations.append(f"document {doc.doc_id!r} has no sentences")
            continue
        if len(doc.segment_ids) != len(doc.sentences):
            violations.append(
                f"document {doc.doc_id!r} has {len(doc.segment_ids)} segment ids "
                f"for {len(doc.sentences)} sentences"
            )
            continue
        if doc.segment_ids[0] != 0 or any(
            later - earlier not in (0, 1)
            for earlier, later in zip(doc.segment_ids, doc.segment_ids[1:])
        ):
            violations.append(
                f"document {doc.doc_id!r} segment ids must start at 0 and be "
                f"contiguous and non-decreasing"
            )

    seen_themes: set[str] = set()
    for theme in corpus.themes:
        if theme.theme_id in seen_themes:
            violations.append(f"duplicate theme_id {theme.theme_id!r}")
        seen_themes.add(theme.theme_id)

    for theme in corpus.themes:
        if not theme.members:
            violations.append(f"theme {theme.theme_id!r} has no members")
        if len(set(theme.members)) != len(theme.members):
            violations.append(f"theme {theme.theme_id!r} lists a member more than once")
        for ref in theme.members:
            doc = corpus.documents_by_id.get(ref.doc_id)
            if doc is None:
                violations.append(
                    f"theme {theme.theme_id!r} references unknown document {ref.doc_id!r}"
                )
            elif not 0 <= ref.position < len(doc.sentences):
                violations.append(
                    f"theme {theme.theme_id!r} references position {ref.position} "
                    f"outside document {ref.doc_id!r} ({len(doc.sentences)} sentences)"
                )

    return violations


def check_corpus(corpus: Corpus) -> Corpus:
    """Validation helper: return the corpus or raise with all violations."""
    violations = validate_corpus(corpus)
    if violations:
        raise CorpusValidationError(violations)
    return corpus
