"""Document scores: recall and distance over checkpoint count vectors.

For each checkpoint family the reference and candidate count columns are
totalled over the whole document, then compared:

  recall    sum(min(ref, cand)) / sum(ref)            in [0, 1], higher is better
  distance  ||ref - cand||_alpha / ||ref||_alpha      >= 0, lower is better

where ||x||_alpha = (sum |x_i|^alpha)^(1/alpha). Working on per-label totals
makes the score independent of how either side segmented its sentences,
which matters for document-level systems that merge or split lines.

With multiple references each component independently keeps the reference
that flatters the candidate most: the largest recall, or the smallest
distance. Components whose reference mass is zero everywhere (say, a
document without entities) are undefined and drop out of the combination
with the remaining weights renormalized.

Components combine by weighted geometric mean, scaled by 100. Recall values
are smoothed as (value * mass + eps) / (mass + eps) so a single zero does
not annihilate the product; distance values are combined raw. The full
n-gram variants multiply in a long penalty exp(1 - c/r) for candidates
longer than the reference, mirroring (in reverse) the brevity penalty of
precision-based metrics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from blond.checkpoints import (
    WeightedCounts,
    apply_weights,
    build_axes,
    count_checkpoints,
)
from blond.corpus import AnnotatedDocument
from blond.errors import ScoringError
from blond.profiles import LanguageProfile

RECALL = "recall"
DISTANCE = "distance"


@dataclass(frozen=True)
class Variant:
    """One member of the metric family."""

    name: str
    distance: bool
    ngrams: bool
    ambiguity: bool
    long_penalty: bool


VARIANTS = {
    "blond": Variant("blond", distance=False, ngrams=True, ambiguity=False, long_penalty=True),
    "dblond": Variant("dblond", distance=False, ngrams=False, ambiguity=False, long_penalty=False),
    "blond+": Variant("blond+", distance=False, ngrams=True, ambiguity=True, long_penalty=True),
    "dblond+": Variant("dblond+", distance=False, ngrams=False, ambiguity=True, long_penalty=False),
    "blond-d": Variant("blond-d", distance=True, ngrams=True, ambiguity=False, long_penalty=False),
    "dblond-d": Variant("dblond-d", distance=True, ngrams=False, ambiguity=False, long_penalty=False),
    "blond-d+": Variant("blond-d+", distance=True, ngrams=True, ambiguity=True, long_penalty=False),
    "dblond-d+": Variant("dblond-d+", distance=True, ngrams=False, ambiguity=True, long_penalty=False),
}

# short table-header spellings accepted as aliases
VARIANT_ALIASES = {
    "bd": "blond",
    "dbd": "dblond",
    "bd+": "blond+",
    "dbd+": "dblond+",
    "bd-d": "blond-d",
    "dbd-d": "dblond-d",
    "bd-d+": "blond-d+",
    "dbd-d+": "dblond-d+",
}


def resolve_variant(name) -> Variant:
    if isinstance(name, Variant):
        return name
    key = str(name).strip().lower()
    key = VARIANT_ALIASES.get(key, key)
    if key not in VARIANTS:
        known = ", ".join(sorted(VARIANTS))
        raise ScoringError(f"unknown variant {name!r} (expected one of: {known})")
    return VARIANTS[key]


@dataclass(frozen=True)
class ComponentScore:
    """One family's score against the best reference for that family.

    `defined` is False when every reference has zero mass on this family's
    axis; then value, chosen_reference, and ref_mass are meaningless.
    `ref_mass` is the denominator mass of the chosen reference, needed for
    recall smoothing.
    """

    component: str
    value: float
    chosen_reference: int
    defined: bool
    ref_mass: float = 0.0

    @classmethod
    def undefined(cls, component: str) -> "ComponentScore":
        return cls(component, 0.0, -1, False)


@dataclass(frozen=True)
class ScoreReport:
    doc_id: str
    variant: str
    components: tuple[ComponentScore, ...]
    length_penalty: float
    total: float

    def component(self, name: str) -> ComponentScore:
        for cs in self.components:
            if cs.component == name:
                return cs
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "variant": self.variant,
            "total": self.total,
            "lp": self.length_penalty,
            "components": {
                cs.component: {
                    "value": cs.value if cs.defined else None,
                    "chosen_reference": cs.chosen_reference if cs.defined else None,
                    "defined": cs.defined,
                }
                for cs in self.components
            },
        }


@dataclass(frozen=True)
class CorpusSummary:
    mean: float
    variance: float
    n_docs: int

    def to_dict(self) -> dict:
        return {"mean": self.mean, "variance": self.variance, "n_docs": self.n_docs}


def _check_same_axis(ref_w: WeightedCounts, cand_w: WeightedCounts):
    a, b = ref_w.axis, cand_w.axis
    if a.family != b.family or a.labels != b.labels or a.order != b.order:
        raise ScoringError(
            f"axis mismatch: {a.family}/{a.order} vs {b.family}/{b.order}"
        )


def recall_component(ref_w: WeightedCounts, cand_w: WeightedCounts) -> float | None:
    """Matched weighted mass over reference weighted mass, None when the
    reference mass is zero (the component is undefined for this reference)."""
    _check_same_axis(ref_w, cand_w)
    ref_tot = ref_w.column_totals()
    den = float(ref_tot.sum())
    if den == 0.0:
        return None
    matched = float(np.minimum(ref_tot, cand_w.column_totals()).sum())
    return matched / den


def distance_component(
    ref_w: WeightedCounts, cand_w: WeightedCounts, alpha: float
) -> float | None:
    """Alpha-norm of the count difference over the alpha-norm of the
    reference counts, None when the reference side is all zero."""
    if not alpha > 0:
        raise ScoringError(f"alpha must be positive, got {alpha}")
    _check_same_axis(ref_w, cand_w)
    ref_tot = ref_w.column_totals()
    den = alpha_norm(ref_tot, alpha)
    if den == 0.0:
        return None
    diff = abs(ref_tot - cand_w.column_totals())
    return alpha_norm(diff, alpha) / den


def alpha_norm(vector, alpha: float) -> float:
    """(sum |x_i|^alpha)^(1/alpha)."""
    total = float((np.abs(np.asarray(vector, dtype=np.float64)) ** alpha).sum())
    return total ** (1.0 / alpha)


def select_reference(
    per_reference, mode: str, *, component: str = "", masses=None
) -> ComponentScore:
    """Pick the best reference for one component.

    `per_reference` holds one value per reference, None meaning undefined.
    Recall keeps the largest value, distance the smallest; ties go to the
    lowest reference index. All-None yields an undefined ComponentScore.
    """
    if not per_reference:
        raise ScoringError("select_reference needs at least one reference value")
    if mode not in (RECALL, DISTANCE):
        raise ScoringError(f"unknown selection mode {mode!r}")
    best_idx = -1
    best = None
    for idx, value in enumerate(per_reference):
        if value is None:
            continue
        if best is None or (value > best if mode == RECALL else value < best):
            best, best_idx = value, idx
    if best is None:
        return ComponentScore.undefined(component)
    mass = masses[best_idx] if masses is not None else 0.0
    return ComponentScore(component, best, best_idx, True, ref_mass=mass)


def length_penalty(candidate_tokens: int, reference_tokens: int) -> float:
    """exp(1 - c/r) once the candidate outgrows the reference, else 1."""
    if reference_tokens <= 0:
        raise ScoringError("length penalty needs a non-empty reference")
    if candidate_tokens >= reference_tokens:
        return math.exp(1.0 - candidate_tokens / reference_tokens)
    return 1.0


def aggregate(
    components,
    weights,
    penalty: float,
    *,
    epsilon: float = 1e-9,
    distance: bool = False,
) -> float:
    """Weighted geometric mean of the defined components, times penalty, times 100.

    `weights` maps component name to weight; zero-weight and undefined
    components are excluded and the remaining weights renormalize through
    the 1/sum(w) exponent. Recall values are smoothed against their
    reference mass; distance values enter raw, so a zero distance anywhere
    zeroes the whole product.
    """
    chosen = []
    for cs in components:
        if not cs.defined:
            continue
        w = weights.get(cs.component, 1.0) if hasattr(weights, "get") else weights(cs.component)
        if w <= 0:
            continue
        chosen.append((cs, w))
    if not chosen:
        raise ScoringError("no defined components to aggregate")

    total_weight = sum(w for _, w in chosen)
    log_sum = 0.0
    for cs, w in chosen:
        value = cs.value
        if not distance:
            value = (value * cs.ref_mass + epsilon) / (cs.ref_mass + epsilon)
        if value == 0.0:
            return 0.0
        log_sum += w * math.log(value)
    return penalty * math.exp(log_sum / total_weight) * 100.0


def _weighted_tables(cand, refs, profile):
    """Per-reference map of component name -> (reference, candidate) weighted counts."""
    tables = []
    for ref in refs:
        table = {}
        for axis in build_axes(ref, profile):
            ref_w = apply_weights(count_checkpoints(ref, axis), profile)
            cand_w = apply_weights(count_checkpoints(cand, axis), profile)
            table[axis.key] = (ref_w, cand_w)
        tables.append(table)
    return tables


def _component_names(variant: Variant, profile: LanguageProfile):
    names = []
    if variant.ngrams:
        names.extend(f"{n}g" for n in profile.ngram_orders)
    names.extend(("E", "V", "P"))
    if variant.ambiguity:
        names.append("A")
    return names


def _assemble(cand, refs, profile, variant, tables) -> ScoreReport:
    mode = DISTANCE if variant.distance else RECALL
    components = []
    for name in _component_names(variant, profile):
        values = []
        masses = []
        for table in tables:
            pair = table.get(name)
            if pair is None:
                values.append(None)
                masses.append(0.0)
                continue
            ref_w, cand_w = pair
            if variant.distance:
                values.append(distance_component(ref_w, cand_w, profile.alpha))
                masses.append(alpha_norm(ref_w.column_totals(), profile.alpha))
            else:
                values.append(recall_component(ref_w, cand_w))
                masses.append(float(ref_w.column_totals().sum()))
        components.append(
            select_reference(values, mode, component=name, masses=masses)
        )

    if variant.long_penalty:
        # the reference chosen for unigram recall fixes the length baseline
        one_gram = next((cs for cs in components if cs.component == "1g"), None)
        ref_idx = one_gram.chosen_reference if one_gram is not None and one_gram.defined else 0
        penalty = length_penalty(cand.token_count, refs[ref_idx].token_count)
    else:
        penalty = 1.0

    total = aggregate(
        components,
        {name: profile.component_weight(name) for name in _component_names(variant, profile)},
        penalty,
        epsilon=profile.smoothing_epsilon,
        distance=variant.distance,
    )
    return ScoreReport(
        doc_id=cand.doc_id,
        variant=variant.name,
        components=tuple(components),
        length_penalty=penalty,
        total=total,
    )


def _check_scorable(cand, refs, variant):
    if not refs:
        raise ScoringError(f"doc {cand.doc_id!r}: at least one reference is required")
    for i, ref in enumerate(refs):
        if ref.doc_id != cand.doc_id:
            raise ScoringError(
                f"doc_id mismatch: candidate {cand.doc_id!r} vs reference {i} {ref.doc_id!r}"
            )
        if ref.token_count == 0:
            raise ScoringError(f"doc {cand.doc_id!r}: reference {i} has no tokens")
    if variant.ambiguity and not any(ref.ambiguity for ref in refs):
        raise ScoringError(
            f"doc {cand.doc_id!r}: variant {variant.name!r} needs ambiguity "
            "annotations on at least one reference"
        )


def score_document(
    cand: AnnotatedDocument, refs, profile: LanguageProfile, variant
) -> ScoreReport:
    """Score one candidate document against its references under one variant."""
    variant = resolve_variant(variant)
    _check_scorable(cand, refs, variant)
    return _assemble(cand, refs, profile, variant, _weighted_tables(cand, refs, profile))


def score_document_all(
    cand: AnnotatedDocument, refs, profile: LanguageProfile, variants
) -> list[ScoreReport]:
    """Score one document under several variants, counting checkpoints once."""
    resolved = [resolve_variant(v) for v in variants]
    for variant in resolved:
        _check_scorable(cand, refs, variant)
    tables = _weighted_tables(cand, refs, profile)
    return [_assemble(cand, refs, profile, v, tables) for v in resolved]


def _mean_variance(values):
    n = len(values)
    mean = sum(values) / n
    variance = sum((v - mean) ** 2 for v in values) / n
    return mean, variance


def score_corpus(cands, refs_corpora, profile: LanguageProfile, variant):
    """Score a whole corpus; returns (reports sorted by doc_id, CorpusSummary).

    `refs_corpora` is a list of reference corpora (multi-reference scoring),
    each a list of documents. Every corpus must cover exactly the candidate
    doc_id set; population variance is reported in the summary.
    """
    variant = resolve_variant(variant)
    by_id = _index_corpora(cands, refs_corpora)
    reports = []
    for doc_id in sorted(by_id):
        cand, refs = by_id[doc_id]
        reports.append(score_document(cand, refs, profile, variant))
    mean, variance = _mean_variance([r.total for r in reports])
    return reports, CorpusSummary(mean, variance, len(reports))


def _index_corpora(cands, refs_corpora):
    if not cands:
        raise ScoringError("empty candidate corpus")
    if not refs_corpora:
        raise ScoringError("at least one reference corpus is required")
    cand_ids = {doc.doc_id for doc in cands}
    for i, corpus in enumerate(refs_corpora):
        ref_ids = {doc.doc_id for doc in corpus}
        if ref_ids != cand_ids:
            missing = sorted(cand_ids - ref_ids)
            extra = sorted(ref_ids - cand_ids)
            raise ScoringError(
                f"reference corpus {i} doc_ids do not match the candidate: "
                f"missing {missing or 'none'}, extra {extra or 'none'}"
            )
    ref_maps = [{doc.doc_id: doc for doc in corpus} for corpus in refs_corpora]
    return {
        doc.doc_id: (doc, [ref_map[doc.doc_id] for ref_map in ref_maps])
        for doc in cands
    }
