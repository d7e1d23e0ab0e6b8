"""Meta-evaluation statistics: system summaries, paired t-tests, correlations.

Score files are CSV with a `doc_id,score` header, one row per document.
Comparisons are two-sided paired Student t-tests; significance is also
reported as one of the bands <.001, <.01, <.05, >.05, >.1, >.5, where a
"<" band means p is strictly below the threshold and the ">" bands
partition the rest ( >.05 covers .05 <= p <= .1, and so on ). Correlations
are Pearson product-moment r with a 95% confidence interval from the
Fisher transform, tanh(atanh(r) +- 1.96/sqrt(n-3)).

The Student-t tail probability is evaluated through the regularized
incomplete beta function (continued fraction), accurate to well under 1e-10.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

from blond.errors import StatsError


@dataclass(frozen=True)
class ScoreVector:
    """Per-document scores for one (system, metric) pair, sorted by doc_id."""

    system_id: str
    metric_id: str
    values: tuple[tuple[str, float], ...]

    def __post_init__(self):
        ids = [doc_id for doc_id, _ in self.values]
        if len(set(ids)) != len(ids):
            raise StatsError(f"duplicate doc_ids in scores for {self.metric_id!r}")
        if ids != sorted(ids):
            raise StatsError("score vector must be sorted by doc_id")

    @classmethod
    def from_pairs(cls, pairs, *, system_id="", metric_id="") -> "ScoreVector":
        return cls(system_id, metric_id, tuple(sorted(pairs)))

    @property
    def n(self) -> int:
        return len(self.values)

    def doc_ids(self):
        return [doc_id for doc_id, _ in self.values]

    def scores(self):
        return [score for _, score in self.values]


@dataclass(frozen=True)
class PairedTResult:
    t: float
    n: int
    p_two_sided: float
    significance_band: str

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "p": self.p_two_sided,
            "band": self.significance_band,
            "n": self.n,
            "test": "paired t, two-sided",
        }


@dataclass(frozen=True)
class CorrelationResult:
    r: float
    ci_low: float
    ci_high: float
    n: int

    def to_dict(self) -> dict:
        return {"r": self.r, "ci_low": self.ci_low, "ci_high": self.ci_high, "n": self.n}


def load_score_csv(path, *, system_id="", metric_id=None) -> ScoreVector:
    """Read a `doc_id,score` CSV into a ScoreVector (metric_id defaults to the stem)."""
    path = Path(path)
    pairs = []
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None or [h.strip().lower() for h in header[:2]] != ["doc_id", "score"]:
            raise StatsError(f"{path}: expected a 'doc_id,score' header")
        for row_no, row in enumerate(reader, 2):
            if not row or not "".join(row).strip():
                continue
            if len(row) < 2:
                raise StatsError(f"{path} row {row_no}: expected doc_id,score")
            try:
                pairs.append((row[0], float(row[1])))
            except ValueError:
                raise StatsError(f"{path} row {row_no}: bad score {row[1]!r}") from None
    if not pairs:
        raise StatsError(f"{path}: no score rows")
    return ScoreVector.from_pairs(
        pairs, system_id=system_id, metric_id=metric_id if metric_id is not None else path.stem
    )


def _aligned(a: ScoreVector, b: ScoreVector):
    ids_a, ids_b = set(a.doc_ids()), set(b.doc_ids())
    if ids_a != ids_b:
        only_a = sorted(ids_a - ids_b)
        only_b = sorted(ids_b - ids_a)
        raise StatsError(
            f"doc_id mismatch: only in {a.metric_id or 'first'}: {only_a or 'none'}, "
            f"only in {b.metric_id or 'second'}: {only_b or 'none'}"
        )
    return a.scores(), b.scores()


def significance_band(p: float) -> str:
    """Band label for a p-value; '<' bands are strict, '>' bands partition the rest."""
    if p < 0.001:
        return "<.001"
    if p < 0.01:
        return "<.01"
    if p < 0.05:
        return "<.05"
    if p > 0.5:
        return ">.5"
    if p > 0.1:
        return ">.1"
    return ">.05"


def paired_t(a: ScoreVector, b: ScoreVector) -> PairedTResult:
    """Two-sided paired Student t-test on per-document score differences.

    Uses the sample standard deviation (n-1). When every difference is zero
    the result is t=0, p=1; when the differences are constant but nonzero
    the t statistic is reported as +-inf with p=0.
    """
    xs, ys = _aligned(a, b)
    n = len(xs)
    if n < 2:
        raise StatsError("paired t-test needs at least 2 paired scores")
    diffs = [x - y for x, y in zip(xs, ys)]
    mean = sum(diffs) / n
    var = sum((d - mean) ** 2 for d in diffs) / (n - 1)
    if var == 0.0:
        if mean == 0.0:
            return PairedTResult(0.0, n, 1.0, significance_band(1.0))
        t = math.inf if mean > 0 else -math.inf
        return PairedTResult(t, n, 0.0, significance_band(0.0))
    t = mean / math.sqrt(var / n)
    p = student_t_two_sided_p(t, n - 1)
    return PairedTResult(t, n, p, significance_band(p))


def pearson(x: ScoreVector, y: ScoreVector) -> CorrelationResult:
    """Pearson r with a 95% Fisher-transform confidence interval (needs n >= 4)."""
    xs, ys = _aligned(x, y)
    n = len(xs)
    if n < 4:
        raise StatsError("pearson with a confidence interval needs n >= 4")
    r = pearson_r(xs, ys)
    if abs(r) >= 1.0:
        return CorrelationResult(r, r, r, n)
    half_width = 1.96 / math.sqrt(n - 3)
    z = math.atanh(r)
    return CorrelationResult(r, math.tanh(z - half_width), math.tanh(z + half_width), n)


def pearson_r(xs, ys) -> float:
    """Product-moment correlation of two equal-length sequences."""
    n = len(xs)
    mean_x = sum(xs) / n
    mean_y = sum(ys) / n
    dx = [x - mean_x for x in xs]
    dy = [y - mean_y for y in ys]
    sxx = sum(v * v for v in dx)
    syy = sum(v * v for v in dy)
    if sxx == 0.0 or syy == 0.0:
        raise StatsError("pearson is undefined for a zero-variance vector")
    r = sum(a * b for a, b in zip(dx, dy)) / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


def summarize(scores: ScoreVector):
    """Mean and population variance (n denominator) of one score vector."""
    values = scores.scores()
    if not values:
        raise StatsError("cannot summarize an empty score vector")
    n = len(values)
    mean = sum(values) / n
    variance = sum((v - mean) ** 2 for v in values) / n
    return mean, variance


def correlation_matrix(vectors):
    """Pairwise Pearson r between score vectors sharing one doc_id set.

    Returns (labels, matrix) where matrix[i][j] = r(vectors[i], vectors[j]).
    """
    if len(vectors) < 2:
        raise StatsError("a correlation matrix needs at least two score vectors")
    labels = [v.metric_id or f"metric{i}" for i, v in enumerate(vectors)]
    size = len(vectors)
    matrix = [[1.0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            r = pearson(vectors[i], vectors[j]).r
            matrix[i][j] = matrix[j][i] = r
    return labels, matrix


# --- Student t tail probability via the regularized incomplete beta ---------


def _beta_continued_fraction(a: float, b: float, x: float) -> float:
    # modified Lentz evaluation of the incomplete beta continued fraction
    tiny = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, 400):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-15:
            return h
    raise StatsError("incomplete beta continued fraction failed to converge")


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b) for a, b > 0 and x in [0, 1]."""
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    # the continued fraction converges fast only below the distribution bulk
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_continued_fraction(a, b, x) / a
    return 1.0 - front * _beta_continued_fraction(b, a, 1.0 - x) / b


def student_t_two_sided_p(t: float, df: int) -> float:
    """Two-sided p-value of a Student t statistic with df degrees of freedom."""
    if df < 1:
        raise StatsError("degrees of freedom must be >= 1")
    if math.isinf(t):
        return 0.0
    x = df / (df + t * t)
    return regularized_incomplete_beta(df / 2.0, 0.5, x)
