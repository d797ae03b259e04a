"""On-disk formats: the JSON corpus file and the plain-text orderings file.

Both parsers are strict: syntax problems raise a format error naming the
location, and a corpus that parses but breaks an invariant raises
CorpusValidationError listing every violation. parse(serialize(x)) == x
for all valid values.
"""

from __future__ import annotations

import json
import warnings
from datetime import datetime
from importlib import resources

from .model import (
    Corpus,
    Document,
    OrderingSet,
    PublicationTime,
    SentenceRef,
    Theme,
    check_corpus,
)


class CorpusFormatError(ValueError):
    """Malformed corpus file: bad syntax or a missing/mistyped field."""


class OrderingFormatError(ValueError):
    """Malformed orderings file: a row that is not a permutation."""


def parse_publication_time(text: str) -> PublicationTime:
    """Parse a local-naive ISO-8601 timestamp, minute precision.

    Seconds or finer are accepted but truncated with a warning; time
    zone offsets are rejected outright.
    """
    if not isinstance(text, str):
        raise CorpusFormatError(f"publication time must be a string, got {text!r}")
    try:
        moment = datetime.fromisoformat(text)
    except ValueError as exc:
        raise CorpusFormatError(f"invalid publication time {text!r}: {exc}") from exc
    if moment.tzinfo is not None:
        raise CorpusFormatError(
            f"publication time {text!r} carries a zone offset; times are local-naive"
        )
    if len(text) > 16:
        warnings.warn(
            f"publication time {text!r} truncated to minute precision", stacklevel=2
        )
    return PublicationTime(day=moment.date(), hour=moment.hour, minute=moment.minute)


def _require(mapping, key, kind, where):
    if not isinstance(mapping, dict):
        raise CorpusFormatError(f"{where}: expected an object")
    if key not in mapping:
        raise CorpusFormatError(f"{where}: missing field {key!r}")
    value = mapping[key]
    if kind is int and isinstance(value, bool):
        raise CorpusFormatError(f"{where}.{key}: expected an integer")
    if not isinstance(value, kind):
        raise CorpusFormatError(f"{where}.{key}: expected {kind.__name__}")
    return value


def parse_corpus(data: bytes | str) -> Corpus:
    """Parse corpus JSON. The returned corpus always validates cleanly."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CorpusFormatError(f"corpus file is not UTF-8: {exc}") from exc
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise CorpusFormatError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc

    documents = []
    for i, entry in enumerate(_require(raw, "documents", list, "corpus")):
        where = f"documents[{i}]"
        sentences = _require(entry, "sentences", list, where)
        segments = _require(entry, "segments", list, where)
        for j, s in enumerate(sentences):
            if not isinstance(s, str):
                raise CorpusFormatError(f"{where}.sentences[{j}]: expected a string")
        for j, s in enumerate(segments):
            if isinstance(s, bool) or not isinstance(s, int):
                raise CorpusFormatError(f"{where}.segments[{j}]: expected an integer")
        documents.append(
            Document(
                doc_id=_require(entry, "id", str, where),
                publication_time=parse_publication_time(
                    _require(entry, "published", str, where)
                ),
                sentences=tuple(sentences),
                segment_ids=tuple(segments),
            )
        )

    themes = []
    for i, entry in enumerate(_require(raw, "themes", list, "corpus")):
        where = f"themes[{i}]"
        members = []
        for j, member in enumerate(_require(entry, "members", list, where)):
            ref_where = f"{where}.members[{j}]"
            members.append(
                SentenceRef(
                    doc_id=_require(member, "doc", str, ref_where),
                    position=_require(member, "pos", int, ref_where),
                )
            )
        themes.append(Theme(theme_id=_require(entry, "id", str, where), members=tuple(members)))

    return check_corpus(Corpus(documents=tuple(documents), themes=tuple(themes)))


def serialize_corpus(corpus: Corpus) -> bytes:
    """Render a corpus back to its JSON file format."""
    payload = {
        "documents": [
            {
                "id": doc.doc_id,
                "published": doc.publication_time.isoformat(),
                "sentences": list(doc.sentences),
                "segments": list(doc.segment_ids),
            }
            for doc in corpus.documents
        ],
        "themes": [
            {
                "id": theme.theme_id,
                "members": [{"doc": ref.doc_id, "pos": ref.position} for ref in theme.members],
            }
            for theme in corpus.themes
        ],
    }
    return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def parse_ordering_set(data: bytes | str) -> OrderingSet:
    """Parse the orderings format: a label inventory line, then one
    space-separated permutation per non-empty line."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise OrderingFormatError(f"orderings file is not UTF-8: {exc}") from exc
    lines = data.splitlines()
    if not lines or not lines[0].split():
        raise OrderingFormatError("line 1 must list the item labels")
    labels = tuple(lines[0].split())
    if len(set(labels)) != len(labels):
        raise OrderingFormatError("line 1 repeats a label")
    inventory = set(labels)

    orderings = []
    for lineno, line in enumerate(lines[1:], start=2):
        row = line.split()
        if not row:
            continue
        seen: set[str] = set()
        for label in row:
            if label not in inventory:
                raise OrderingFormatError(f"line {lineno} contains unknown label {label!r}")
            if label in seen:
                raise OrderingFormatError(f"line {lineno} repeats label {label!r}")
            seen.add(label)
        if seen != inventory:
            missing = sorted(inventory - seen)
            raise OrderingFormatError(
                f"line {lineno} is missing label(s) {', '.join(repr(m) for m in missing)}"
            )
        orderings.append(tuple(row))

    if not orderings:
        raise OrderingFormatError("no orderings found after the label line")
    return OrderingSet(item_labels=labels, orderings=tuple(orderings))


def serialize_ordering_set(ordering_set: OrderingSet) -> bytes:
    lines = [" ".join(ordering_set.item_labels)]
    lines.extend(" ".join(row) for row in ordering_set.orderings)
    return ("\n".join(lines) + "\n").encode("utf-8")


def load_sample_orderings() -> OrderingSet:
    """Ten alternative human orderings of one ten-sentence set, bundled
    with the package as test and demo data."""
    text = resources.files("themeorder").joinpath("data/sample_orderings.txt").read_bytes()
    return parse_ordering_set(text)
