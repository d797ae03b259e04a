"""Chronological ordering: sort themes by first publication time.

Event time is approximated by the earliest publication time among a
theme's members; themes first reported in the same article keep that
article's order of presentation, which makes the order total.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Corpus, OrderingResult, PublicationTime, SentenceRef, Theme


@dataclass(frozen=True)
class ThemeTimeStamp:
    """A theme's earliest publication time and the member establishing it."""

    theme_id: str
    time: PublicationTime
    stamp_sentence: SentenceRef


@dataclass(frozen=True)
class ChronologicalDiagnostics:
    timestamps: tuple[ThemeTimeStamp, ...]


def theme_timestamp(theme: Theme, corpus: Corpus) -> ThemeTimeStamp:
    """Pick the theme member with the earliest publication time.

    When several members come from that earliest document, the one at
    the smallest position wins.
    """
    ref = min(
        theme.members,
        key=lambda m: (corpus.documents_by_id[m.doc_id].publication_time, m.position),
    )
    return ThemeTimeStamp(
        theme_id=theme.theme_id,
        time=corpus.documents_by_id[ref.doc_id].publication_time,
        stamp_sentence=ref,
    )


def timestamp_sort_key(stamp: ThemeTimeStamp) -> tuple[PublicationTime, int, str]:
    # position breaks ties within the shared stamping article; theme id is
    # a final fallback for themes stamped by the very same sentence
    return (stamp.time, stamp.stamp_sentence.position, stamp.theme_id)


def chronological_order(corpus: Corpus) -> OrderingResult:
    """Order all themes by time stamp, earliest first."""
    stamps = sorted(
        (theme_timestamp(theme, corpus) for theme in corpus.themes),
        key=timestamp_sort_key,
    )
    return OrderingResult(
        strategy="chronological",
        sequence=tuple(s.theme_id for s in stamps),
        diagnostics=ChronologicalDiagnostics(timestamps=tuple(stamps)),
    )
