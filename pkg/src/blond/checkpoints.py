"""Checkpoint counting: turn documents into per-sentence count matrices.

Five axis families are counted:

  ENTITY     one column per distinct reference mention (coarse category, text)
  TENSE      one column per profile tense tag
  PRONOUN    one column per profile pronoun group (case-insensitive surfaces)
  NGRAM(n)   one column per distinct reference n-gram, per configured order
  AMBIGUITY  one column per annotated ambiguous term

Entity and ambiguity axes always come from the reference side: candidate
occurrences are found by token subsequence, never by candidate-side NER.
All counting is per sentence (one matrix row per sentence); combining rows
is the scorer's business. Everything here is a pure function over immutable
inputs, so documents can be processed in parallel freely.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from blond.corpus import AnnotatedDocument
from blond.profiles import LanguageProfile

ENTITY = "entity"
TENSE = "tense"
PRONOUN = "pronoun"
NGRAM = "ngram"
AMBIGUITY = "ambiguity"


@dataclass(frozen=True)
class CountAxis:
    """An ordered set of countable labels for one checkpoint family.

    Labels are (coarse, text) pairs for ENTITY, tag names for TENSE, group
    ids for PRONOUN (with the member forms in `groups`), token tuples for
    NGRAM, and term strings for AMBIGUITY.
    """

    family: str
    labels: tuple
    order: int | None = None
    groups: tuple | None = None

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate labels on {self.family} axis")
        if self.family == NGRAM and not (isinstance(self.order, int) and self.order >= 1):
            raise ValueError("ngram axis needs a positive order")
        if self.family == PRONOUN:
            if self.groups is None or len(self.groups) != len(self.labels):
                raise ValueError("pronoun axis needs one form set per label")

    @property
    def key(self) -> str:
        """Component name this axis feeds: E, V, P, A, or <n>g."""
        if self.family == NGRAM:
            return f"{self.order}g"
        return {ENTITY: "E", TENSE: "V", PRONOUN: "P", AMBIGUITY: "A"}[self.family]


@dataclass(frozen=True)
class CheckpointCounts:
    """Raw nonnegative integer counts, one row per sentence, one column per label."""

    axis: CountAxis
    per_sentence: np.ndarray


@dataclass(frozen=True)
class WeightedCounts:
    """Counts with the profile's per-column weights applied."""

    axis: CountAxis
    per_sentence: np.ndarray

    def column_totals(self) -> np.ndarray:
        return self.per_sentence.sum(axis=0)


def _freeze(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


def sentence_ngrams(tokens, order: int):
    """Sliding-window n-grams of one sentence as tuples of surfaces."""
    surfaces = [t.surface for t in tokens]
    return [tuple(surfaces[i : i + order]) for i in range(len(surfaces) - order + 1)]


def build_axes(reference: AnnotatedDocument, profile: LanguageProfile) -> list[CountAxis]:
    """Build every count axis for a document from the reference side.

    Entity labels appear in first-mention order, n-gram labels in first
    occurrence order; both may be empty. The ambiguity axis exists only when
    the reference carries annotations.
    """
    entity_labels = []
    seen = set()
    for mention in reference.mentions():
        label = (mention.coarse, mention.text)
        if label not in seen:
            seen.add(label)
            entity_labels.append(label)

    axes = [
        CountAxis(ENTITY, tuple(entity_labels)),
        CountAxis(TENSE, profile.tense_tags),
        CountAxis(
            PRONOUN, profile.pronoun_group_ids, groups=profile.pronoun_groups
        ),
    ]

    for order in profile.ngram_orders:
        labels = []
        seen = set()
        for sent in reference.sentences:
            for gram in sentence_ngrams(sent, order):
                if gram not in seen:
                    seen.add(gram)
                    labels.append(gram)
        axes.append(CountAxis(NGRAM, tuple(labels), order=order))

    if reference.ambiguity:
        labels = []
        seen = set()
        for ann in reference.ambiguity:
            if ann.term not in seen:
                seen.add(ann.term)
                labels.append(ann.term)
        axes.append(CountAxis(AMBIGUITY, tuple(labels)))

    return axes


def count_token_subsequence(surfaces, needle) -> int:
    """Non-overlapping occurrences of `needle`, scanning left to right greedily."""
    n = len(needle)
    count = 0
    i = 0
    while i + n <= len(surfaces):
        if tuple(surfaces[i : i + n]) == needle:
            count += 1
            i += n
        else:
            i += 1
    return count


def count_checkpoints(doc: AnnotatedDocument, axis: CountAxis) -> CheckpointCounts:
    """Count axis labels in every sentence of `doc`.

    Entity and ambiguity labels are counted as token subsequences of the
    label text (case-sensitive, non-overlapping); tense by POS tag equality;
    pronouns by lowercased surface membership in each group; n-grams by
    sliding window.
    """
    rows = len(doc.sentences)
    matrix = np.zeros((rows, len(axis.labels)), dtype=np.int64)

    if axis.family in (ENTITY, AMBIGUITY):
        needles = [
            tuple((label[1] if axis.family == ENTITY else label).split())
            for label in axis.labels
        ]
        for i, sent in enumerate(doc.sentences):
            surfaces = [t.surface for t in sent]
            for j, needle in enumerate(needles):
                matrix[i, j] = count_token_subsequence(surfaces, needle)
    elif axis.family == TENSE:
        index = {tag: j for j, tag in enumerate(axis.labels)}
        for i, sent in enumerate(doc.sentences):
            for tok in sent:
                j = index.get(tok.pos)
                if j is not None:
                    matrix[i, j] += 1
    elif axis.family == PRONOUN:
        for i, sent in enumerate(doc.sentences):
            lowered = [t.surface.lower() for t in sent]
            for j, forms in enumerate(axis.groups):
                matrix[i, j] = sum(1 for s in lowered if s in forms)
    elif axis.family == NGRAM:
        index = {gram: j for j, gram in enumerate(axis.labels)}
        for i, sent in enumerate(doc.sentences):
            counts = Counter(sentence_ngrams(sent, axis.order))
            for gram, c in counts.items():
                j = index.get(gram)
                if j is not None:
                    matrix[i, j] = c
    else:
        raise ValueError(f"unknown axis family {axis.family!r}")

    return CheckpointCounts(axis, _freeze(matrix))


def axis_weights(axis: CountAxis, profile: LanguageProfile) -> np.ndarray:
    """Per-column weight vector for an axis under a profile."""
    if axis.family == ENTITY:
        return np.array([profile.entity_weight(cat) for cat, _ in axis.labels])
    if axis.family == TENSE:
        if len(profile.tense_weights) != len(axis.labels):
            raise ValueError(
                f"tense axis has {len(axis.labels)} labels but the profile "
                f"carries {len(profile.tense_weights)} weights"
            )
        return np.array(profile.tense_weights)
    if axis.family == PRONOUN:
        if len(profile.pronoun_weights) != len(axis.labels):
            raise ValueError(
                f"pronoun axis has {len(axis.labels)} labels but the profile "
                f"carries {len(profile.pronoun_weights)} weights"
            )
        return np.array(profile.pronoun_weights)
    # n-grams and ambiguity terms count with unit weight
    return np.ones(len(axis.labels))


def apply_weights(counts: CheckpointCounts, profile: LanguageProfile) -> WeightedCounts:
    """Multiply each count column by its profile weight; raw counts are untouched."""
    weights = axis_weights(counts.axis, profile)
    weighted = counts.per_sentence.astype(np.float64) * weights[np.newaxis, :]
    return WeightedCounts(counts.axis, _freeze(weighted))


def label_text(axis: CountAxis, label) -> str:
    """Human-readable form of one axis label, for dumps and reports."""
    if axis.family == ENTITY:
        return f"{label[0]}:{label[1]}"
    if axis.family == NGRAM:
        return " ".join(label)
    return str(label)


def counts_to_tsv(counts: CheckpointCounts | WeightedCounts) -> str:
    """Tab-separated dump of a count matrix, one row per sentence."""
    axis = counts.axis
    lines = ["\t".join(label_text(axis, label) for label in axis.labels)]
    for row in counts.per_sentence:
        lines.append("\t".join(str(v) for v in row.tolist()))
    return "\n".join(lines) + "\n"
