"""Annotated document model and the JSONL interchange format.

A corpus file is UTF-8 text with one JSON object per line:

    {"doc_id": "d1",
     "sentences": [[{"t": "He", "p": "PRP"}, {"t": "slept", "p": "VBD"}]],
     "entities": [{"s": 0, "b": 0, "e": 1, "tag": "PERSON"}],
     "ambiguity": [{"s": 0, "term": "slept"}]}

`sentences` is a list of sentences, each a list of token objects with surface
form `t` and POS tag `p` (`p` may be empty or omitted). `entities` holds
mention spans, token-indexed within their sentence, with the fine NER tag as
produced by whatever tagger annotated the file. `ambiguity` is optional and
carries human-annotated ambiguous terms by reference-side surface form.

Fine NER tags are merged into the two coarse categories PERSON / NON_PERSON
at load time via the language profile; mentions whose tag maps to IGNORE are
dropped. Documents are immutable after construction and safe to share across
workers.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, TextIO

from blond.errors import CorpusError

logger = logging.getLogger("blond")

PERSON = "PERSON"
NON_PERSON = "NON_PERSON"
IGNORE = "IGNORE"

COARSE_CATEGORIES = (PERSON, NON_PERSON)


@dataclass(frozen=True)
class Token:
    """One surface token with its POS tag (tag may be empty)."""

    surface: str
    pos: str = ""

    def __post_init__(self):
        if not self.surface:
            raise CorpusError("token surface must be non-empty")


@dataclass(frozen=True)
class EntityMention:
    """A named-entity mention, span [start, end) in token indexes of its sentence.

    `text` is the whitespace-normalized surface of the mention, which is the
    identity used when counting occurrences. The fine tag is retained so a
    loaded corpus can be serialized back without loss.
    """

    start: int
    end: int
    text: str
    coarse: str
    fine_tag: str = ""

    def __post_init__(self):
        if self.coarse not in COARSE_CATEGORIES:
            raise CorpusError(f"bad coarse entity category {self.coarse!r}")
        if not (0 <= self.start < self.end):
            raise CorpusError(f"bad entity span [{self.start}, {self.end})")


@dataclass(frozen=True)
class AmbiguityAnnotation:
    """A human-annotated ambiguous term, by reference-side surface form."""

    sentence_index: int
    term: str

    def __post_init__(self):
        if not self.term:
            raise CorpusError("ambiguity term must be non-empty")


@dataclass(frozen=True)
class AnnotatedDocument:
    """A sentence-segmented, tokenized, entity-annotated document.

    `entities` is parallel to `sentences`: entities[i] lists the mentions in
    sentence i. Use :func:`document_from_tokens` to build one from plain
    Python data, or :func:`load_corpus` to read the interchange format.
    """

    doc_id: str
    sentences: tuple[tuple[Token, ...], ...]
    entities: tuple[tuple[EntityMention, ...], ...]
    ambiguity: tuple[AmbiguityAnnotation, ...] = ()

    def __post_init__(self):
        if not self.doc_id:
            raise CorpusError("doc_id must be non-empty")
        if len(self.sentences) < 1:
            raise CorpusError("document needs at least one sentence", doc_id=self.doc_id)
        if len(self.entities) != len(self.sentences):
            raise CorpusError(
                "entities must have one (possibly empty) list per sentence",
                doc_id=self.doc_id,
            )
        for i, mentions in enumerate(self.entities):
            for m in mentions:
                if m.end > len(self.sentences[i]):
                    raise CorpusError(
                        f"entity span [{m.start}, {m.end}) exceeds sentence {i} "
                        f"length {len(self.sentences[i])}",
                        doc_id=self.doc_id,
                    )
        for a in self.ambiguity:
            if not (0 <= a.sentence_index < len(self.sentences)):
                raise CorpusError(
                    f"ambiguity annotation addresses missing sentence {a.sentence_index}",
                    doc_id=self.doc_id,
                )

    @property
    def token_count(self) -> int:
        return sum(len(s) for s in self.sentences)

    def mentions(self) -> Iterable[EntityMention]:
        for group in self.entities:
            yield from group


def normalize_text(text: str) -> str:
    """Collapse runs of whitespace to single spaces and strip the ends."""
    return " ".join(text.split())


def document_from_tokens(doc_id, sentences, entities=(), ambiguity=(), profile=None):
    """Build a validated AnnotatedDocument from plain data.

    :param sentences: list of sentences; each token is a Token, a
        (surface, pos) pair, or a bare surface string.
    :param entities: (sentence_idx, start, end, tag) tuples. With a profile
        the tag is treated as a fine NER tag and merged to a coarse category
        (IGNORE drops the mention, unknown tags raise); without one the tag
        must already be PERSON or NON_PERSON.
    :param ambiguity: (sentence_idx, term) pairs.
    """
    sent_rows = []
    for sent in sentences:
        row = []
        for tok in sent:
            if isinstance(tok, Token):
                row.append(tok)
            elif isinstance(tok, str):
                row.append(Token(tok))
            else:
                surface, pos = tok
                row.append(Token(surface, pos))
        sent_rows.append(tuple(row))

    per_sentence = [[] for _ in sent_rows]
    for s, b, e, tag in entities:
        if not (0 <= s < len(sent_rows)):
            raise CorpusError(f"entity addresses missing sentence {s}", doc_id=doc_id)
        if not (0 <= b < e <= len(sent_rows[s])):
            raise CorpusError(
                f"entity span [{b}, {e}) out of range in sentence {s}", doc_id=doc_id
            )
        if profile is not None:
            coarse = profile.coarse_of(tag)
            if coarse is None:
                raise CorpusError(f"unknown fine NER tag {tag!r}", doc_id=doc_id)
            if coarse == IGNORE:
                continue
        else:
            coarse = tag
        text = normalize_text(" ".join(t.surface for t in sent_rows[s][b:e]))
        per_sentence[s].append(EntityMention(b, e, text, coarse, fine_tag=tag))

    return AnnotatedDocument(
        doc_id=doc_id,
        sentences=tuple(sent_rows),
        entities=tuple(tuple(group) for group in per_sentence),
        ambiguity=tuple(AmbiguityAnnotation(s, term) for s, term in ambiguity),
    )


def _parse_record(obj, profile, *, strict, path, line):
    if not isinstance(obj, dict):
        raise CorpusError("record is not a JSON object", path=path, line=line)
    doc_id = obj.get("doc_id")
    if not isinstance(doc_id, str) or not doc_id:
        raise CorpusError("missing or empty doc_id", path=path, line=line)

    raw_sentences = obj.get("sentences")
    if not isinstance(raw_sentences, list) or not raw_sentences:
        raise CorpusError(
            "missing or empty sentences array", path=path, line=line, doc_id=doc_id
        )
    sentences = []
    for i, raw_sent in enumerate(raw_sentences):
        if not isinstance(raw_sent, list):
            raise CorpusError(
                f"sentence {i} is not an array", path=path, line=line, doc_id=doc_id
            )
        row = []
        for j, raw_tok in enumerate(raw_sent):
            if not isinstance(raw_tok, dict) or "t" not in raw_tok:
                raise CorpusError(
                    f"token {j} of sentence {i} is not a {{'t': ..., 'p': ...}} object",
                    path=path,
                    line=line,
                    doc_id=doc_id,
                )
            surface = raw_tok["t"]
            pos = raw_tok.get("p", "")
            if not isinstance(surface, str) or not surface:
                raise CorpusError(
                    f"empty surface for token {j} of sentence {i}",
                    path=path,
                    line=line,
                    doc_id=doc_id,
                )
            row.append(Token(surface, pos if isinstance(pos, str) else ""))
        sentences.append(tuple(row))

    per_sentence = [[] for _ in sentences]
    for k, raw_ent in enumerate(obj.get("entities", [])):
        try:
            s, b, e, tag = raw_ent["s"], raw_ent["b"], raw_ent["e"], raw_ent["tag"]
        except (TypeError, KeyError):
            raise CorpusError(
                f"entity {k} is not a {{'s','b','e','tag'}} object",
                path=path,
                line=line,
                doc_id=doc_id,
            ) from None
        if not (isinstance(s, int) and 0 <= s < len(sentences)):
            raise CorpusError(
                f"entity {k} addresses missing sentence {s}",
                path=path,
                line=line,
                doc_id=doc_id,
            )
        if not (isinstance(b, int) and isinstance(e, int) and 0 <= b < e <= len(sentences[s])):
            raise CorpusError(
                f"entity span [{b}, {e}) out of range in sentence {s} "
                f"(length {len(sentences[s])})",
                path=path,
                line=line,
                doc_id=doc_id,
            )
        coarse = profile.coarse_of(tag)
        if coarse is None:
            if strict:
                raise CorpusError(
                    f"unknown fine NER tag {tag!r}", path=path, line=line, doc_id=doc_id
                )
            logger.warning(
                "%s line %s doc %s: unknown fine NER tag %r ignored",
                path,
                line,
                doc_id,
                tag,
            )
            continue
        if coarse == IGNORE:
            continue
        text = normalize_text(" ".join(t.surface for t in sentences[s][b:e]))
        per_sentence[s].append(EntityMention(b, e, text, coarse, fine_tag=tag))

    ambiguity = []
    for k, raw_amb in enumerate(obj.get("ambiguity", [])):
        try:
            s, term = raw_amb["s"], raw_amb["term"]
        except (TypeError, KeyError):
            raise CorpusError(
                f"ambiguity entry {k} is not a {{'s','term'}} object",
                path=path,
                line=line,
                doc_id=doc_id,
            ) from None
        if not (isinstance(s, int) and 0 <= s < len(sentences)):
            raise CorpusError(
                f"ambiguity entry {k} addresses missing sentence {s}",
                path=path,
                line=line,
                doc_id=doc_id,
            )
        if not isinstance(term, str) or not term:
            raise CorpusError(
                f"ambiguity entry {k} has an empty term", path=path, line=line, doc_id=doc_id
            )
        ambiguity.append(AmbiguityAnnotation(s, term))

    return AnnotatedDocument(
        doc_id=doc_id,
        sentences=tuple(sentences),
        entities=tuple(tuple(group) for group in per_sentence),
        ambiguity=tuple(ambiguity),
    )


def load_corpus(path, profile, *, strict=False) -> list[AnnotatedDocument]:
    """Load and validate a JSONL corpus file.

    Unknown fine NER tags are warned about and ignored unless `strict` is
    set, in which case they are errors. Raises CorpusError with the file,
    line number, and doc_id on any malformed record.
    """
    path = Path(path)
    docs = []
    seen = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, 1):
            raw = raw.strip()
            if not raw:
                continue
            try:
                obj = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"invalid JSON ({exc.msg})", path=path, line=line_no) from None
            doc = _parse_record(obj, profile, strict=strict, path=path, line=line_no)
            if doc.doc_id in seen:
                raise CorpusError(
                    f"duplicate doc_id (first seen on line {seen[doc.doc_id]})",
                    path=path,
                    line=line_no,
                    doc_id=doc.doc_id,
                )
            seen[doc.doc_id] = line_no
            docs.append(doc)
    return docs


def document_to_record(doc: AnnotatedDocument) -> dict:
    """Serialize a document to the interchange record shape."""
    record = {
        "doc_id": doc.doc_id,
        "sentences": [
            [{"t": t.surface, "p": t.pos} for t in sent] for sent in doc.sentences
        ],
        "entities": [
            {"s": i, "b": m.start, "e": m.end, "tag": m.fine_tag or m.coarse}
            for i, group in enumerate(doc.entities)
            for m in group
        ],
    }
    if doc.ambiguity:
        record["ambiguity"] = [
            {"s": a.sentence_index, "term": a.term} for a in doc.ambiguity
        ]
    return record


def serialize_corpus(docs: Iterable[AnnotatedDocument], target: TextIO | str | Path) -> None:
    """Write documents to a JSONL file (or open text handle), one per line."""
    if hasattr(target, "write"):
        for doc in docs:
            target.write(json.dumps(document_to_record(doc), ensure_ascii=False))
            target.write("\n")
    else:
        with open(target, "w", encoding="utf-8") as handle:
            serialize_corpus(docs, handle)
