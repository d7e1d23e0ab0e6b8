"""blond: document-level machine translation evaluation.

Scores candidate translations against references by the recall (or distance)
of discourse checkpoints: named entities, tense tags, pronoun groups,
n-grams, and optionally human-annotated ambiguous terms. The package also
ships the meta-evaluation statistics used to compare systems and validate
metrics: paired t-tests and Pearson correlations with confidence intervals.

Typical use:

    from blond import builtin_profile, load_corpus, score_corpus

    profile = builtin_profile("english")
    cands = load_corpus("cand.jsonl", profile)
    refs = load_corpus("ref.jsonl", profile)
    reports, summary = score_corpus(cands, [refs], profile, "blond")
"""

from blond.corpus import (
    IGNORE,
    NON_PERSON,
    PERSON,
    AmbiguityAnnotation,
    AnnotatedDocument,
    EntityMention,
    Token,
    document_from_tokens,
    document_to_record,
    load_corpus,
    serialize_corpus,
)
from blond.checkpoints import (
    AMBIGUITY,
    ENTITY,
    NGRAM,
    PRONOUN,
    TENSE,
    CheckpointCounts,
    CountAxis,
    WeightedCounts,
    apply_weights,
    build_axes,
    count_checkpoints,
    counts_to_tsv,
)
from blond.errors import (
    CorpusError,
    ProfileError,
    ScoringError,
    StatsError,
    ValidationError,
)
from blond.profiles import LanguageProfile, builtin_profile, load_profile, resolve_profile
from blond.scoring import (
    VARIANTS,
    ComponentScore,
    CorpusSummary,
    ScoreReport,
    Variant,
    aggregate,
    alpha_norm,
    distance_component,
    length_penalty,
    recall_component,
    resolve_variant,
    score_corpus,
    score_document,
    score_document_all,
    select_reference,
)
from blond.stats import (
    CorrelationResult,
    PairedTResult,
    ScoreVector,
    correlation_matrix,
    load_score_csv,
    paired_t,
    pearson,
    pearson_r,
    significance_band,
    student_t_two_sided_p,
    summarize,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguityAnnotation",
    "AnnotatedDocument",
    "CheckpointCounts",
    "ComponentScore",
    "CorpusError",
    "CorpusSummary",
    "CorrelationResult",
    "CountAxis",
    "EntityMention",
    "LanguageProfile",
    "PairedTResult",
    "ProfileError",
    "ScoreReport",
    "ScoreVector",
    "ScoringError",
    "StatsError",
    "Token",
    "ValidationError",
    "Variant",
    "VARIANTS",
    "aggregate",
    "alpha_norm",
    "apply_weights",
    "build_axes",
    "builtin_profile",
    "correlation_matrix",
    "count_checkpoints",
    "counts_to_tsv",
    "distance_component",
    "document_from_tokens",
    "document_to_record",
    "length_penalty",
    "load_corpus",
    "load_profile",
    "load_score_csv",
    "paired_t",
    "pearson",
    "pearson_r",
    "recall_component",
    "resolve_profile",
    "resolve_variant",
    "score_corpus",
    "score_document",
    "score_document_all",
    "select_reference",
    "serialize_corpus",
    "significance_band",
    "student_t_two_sided_p",
    "summarize",
    "ENTITY",
    "TENSE",
    "PRONOUN",
    "NGRAM",
    "AMBIGUITY",
    "PERSON",
    "NON_PERSON",
    "IGNORE",
]
