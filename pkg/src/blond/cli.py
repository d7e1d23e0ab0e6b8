"""Command-line interface: score corpora, compare systems, correlate metrics.

    blond score --candidate cand.jsonl --reference ref.jsonl [--reference ref2.jsonl]
                [--profile english] [--variant blond,dblond] [--output json|tsv|pretty]
                [--strict] [--alpha A] [--epsilon E] [--dump-counts FILE]
    blond compare sysA.csv sysB.csv [--output json|pretty]
    blond correlate metric.csv human.csv [--output json|pretty]
    blond correlate --matrix a.csv b.csv c.csv ...
    blond dump-counts --candidate cand.jsonl --reference ref.jsonl [--profile english]

Exit codes: 0 success, 1 invalid input, 2 I/O failure. Diagnostics go to
stderr; the data stream is written only after a command fully succeeds, so
a failing run emits nothing on stdout. JSON and TSV output is deterministic:
documents ordered by doc_id, floats fixed to 4 decimal places.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys

from blond.checkpoints import apply_weights, build_axes, count_checkpoints, counts_to_tsv
from blond.corpus import load_corpus
from blond.errors import ValidationError
from blond.profiles import resolve_profile
from blond.scoring import (
    resolve_variant,
    score_document_all,
    _index_corpora,
    _mean_variance,
    CorpusSummary,
)
from blond.stats import correlation_matrix, load_score_csv, paired_t, pearson

logger = logging.getLogger("blond")


def _round(value):
    if isinstance(value, float):
        # strict JSON has no Infinity/NaN literals
        if math.isinf(value) or math.isnan(value):
            return str(value)
        if value != 0.0 and abs(value) < 1e-4:
            # keep 4 significant digits where 4 decimals would flatten to 0
            # (small p-values, near-zero correlations)
            return float(f"{value:.4g}")
        return round(value, 4)
    return value


def _json_line(obj) -> str:
    return json.dumps({k: _round(v) for k, v in obj.items()}, ensure_ascii=False)


def _report_json(report) -> str:
    data = report.to_dict()
    data["total"] = _round(data["total"])
    data["lp"] = _round(data["lp"])
    for comp in data["components"].values():
        comp["value"] = _round(comp["value"])
    return json.dumps(data, ensure_ascii=False)


COMPONENT_COLUMNS = ("1g", "2g", "3g", "4g", "E", "V", "P", "A")


def _report_tsv_rows(reports):
    yield "\t".join(("doc_id", "variant", "total", "lp") + COMPONENT_COLUMNS)
    for report in reports:
        cells = [report.doc_id, report.variant, f"{report.total:.4f}", f"{report.length_penalty:.4f}"]
        by_name = {cs.component: cs for cs in report.components}
        for name in COMPONENT_COLUMNS:
            cs = by_name.get(name)
            cells.append(f"{cs.value:.4f}" if cs is not None and cs.defined else "")
        yield "\t".join(cells)


def _cmd_score(args) -> str:
    profile = resolve_profile(args.profile).with_overrides(
        alpha=args.alpha, smoothing_epsilon=args.epsilon
    )
    variants = [resolve_variant(v) for v in args.variant.split(",") if v.strip()]
    if not variants:
        raise ValidationError("no variants requested")
    cands = load_corpus(args.candidate, profile, strict=args.strict)
    refs_corpora = [load_corpus(p, profile, strict=args.strict) for p in args.reference]
    by_id = _index_corpora(cands, refs_corpora)

    per_variant = {v.name: [] for v in variants}
    for doc_id in sorted(by_id):
        cand, refs = by_id[doc_id]
        for report in score_document_all(cand, refs, profile, variants):
            per_variant[report.variant].append(report)

    if args.dump_counts:
        with open(args.dump_counts, "w", encoding="utf-8") as handle:
            handle.write(_dump_counts_text(by_id, profile))

    lines = []
    if args.output == "json":
        for variant in variants:
            reports = per_variant[variant.name]
            lines.extend(_report_json(r) for r in reports)
            mean, variance = _mean_variance([r.total for r in reports])
            summary = CorpusSummary(mean, variance, len(reports)).to_dict()
            summary["variant"] = variant.name
            summary["variance_kind"] = "population"
            lines.append(_json_line(summary))
    elif args.output == "tsv":
        for variant in variants:
            lines.extend(_report_tsv_rows(per_variant[variant.name]))
    else:
        for variant in variants:
            reports = per_variant[variant.name]
            for report in reports:
                lines.append(f"{report.doc_id}\t{variant.name}\t{report.total:.2f}")
            mean, variance = _mean_variance([r.total for r in reports])
            lines.append(
                f"# {variant.name}: mean {mean:.2f}, population variance {variance:.2f}, "
                f"n {len(reports)}"
            )
    return "\n".join(lines) + "\n"


def _dump_counts_text(by_id, profile) -> str:
    chunks = []
    for doc_id in sorted(by_id):
        cand, refs = by_id[doc_id]
        for i, ref in enumerate(refs):
            for axis in build_axes(ref, profile):
                for side, doc in (("ref", ref), ("cand", cand)):
                    counts = count_checkpoints(doc, axis)
                    weighted = apply_weights(counts, profile)
                    chunks.append(
                        f"# doc={doc_id}\tref={i}\tfamily={axis.key}\tside={side}\n"
                        + counts_to_tsv(weighted)
                    )
    return "".join(chunks)


def _cmd_dump_counts(args) -> str:
    profile = resolve_profile(args.profile)
    cands = load_corpus(args.candidate, profile, strict=args.strict)
    refs_corpora = [load_corpus(p, profile, strict=args.strict) for p in args.reference]
    return _dump_counts_text(_index_corpora(cands, refs_corpora), profile)


def _cmd_compare(args) -> str:
    a = load_score_csv(args.scores_a)
    b = load_score_csv(args.scores_b)
    result = paired_t(a, b)
    if args.output == "pretty":
        return (
            f"t = {result.t:.4f}  (n = {result.n}, two-sided p = {result.p_two_sided:.4f}, "
            f"p {result.significance_band})\n"
        )
    return _json_line(result.to_dict()) + "\n"


def _cmd_correlate(args) -> str:
    if args.matrix:
        vectors = [load_score_csv(p) for p in args.scores]
        labels, matrix = correlation_matrix(vectors)
        lines = ["\t".join(["metric"] + labels)]
        for label, row in zip(labels, matrix):
            lines.append("\t".join([label] + [f"{r:.4f}" for r in row]))
        return "\n".join(lines) + "\n"
    if len(args.scores) != 2:
        raise ValidationError("correlate needs exactly two score files (or --matrix)")
    metric = load_score_csv(args.scores[0])
    human = load_score_csv(args.scores[1])
    result = pearson(metric, human)
    if args.output == "pretty":
        return (
            f"r = {result.r:.4f}  95% CI ({result.ci_low:.4f}, {result.ci_high:.4f})"
            f"  n = {result.n}\n"
        )
    return _json_line(result.to_dict()) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blond", description="Document-level MT evaluation."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    score = sub.add_parser("score", help="score candidate documents against references")
    score.add_argument("--candidate", required=True, help="candidate corpus (JSONL)")
    score.add_argument(
        "--reference",
        action="append",
        required=True,
        help="reference corpus (JSONL); repeat for multiple references",
    )
    score.add_argument("--profile", default="english", help="profile name or path")
    score.add_argument(
        "--variant",
        default="blond",
        help="comma-separated list: blond, dblond, blond+, dblond+, "
        "blond-d, dblond-d, blond-d+, dblond-d+ (table-style aliases accepted)",
    )
    score.add_argument("--output", choices=("json", "tsv", "pretty"), default="json")
    score.add_argument("--strict", action="store_true", help="fail on unknown NER tags")
    score.add_argument("--alpha", type=float, default=None, help="distance norm exponent")
    score.add_argument("--epsilon", type=float, default=None, help="recall smoothing epsilon")
    score.add_argument(
        "--dump-counts", metavar="FILE", default=None, help="also dump count matrices as TSV"
    )
    score.set_defaults(func=_cmd_score)

    compare = sub.add_parser("compare", help="paired t-test between two score files")
    compare.add_argument("scores_a", help="CSV with doc_id,score header")
    compare.add_argument("scores_b", help="CSV with doc_id,score header")
    compare.add_argument("--output", choices=("json", "pretty"), default="json")
    compare.set_defaults(func=_cmd_compare)

    correlate = sub.add_parser(
        "correlate", help="Pearson correlation between score files"
    )
    correlate.add_argument("scores", nargs="+", help="CSV score files")
    correlate.add_argument(
        "--matrix", action="store_true", help="emit a pairwise correlation matrix as TSV"
    )
    correlate.add_argument("--output", choices=("json", "pretty"), default="json")
    correlate.set_defaults(func=_cmd_correlate)

    dump = sub.add_parser("dump-counts", help="dump checkpoint count matrices as TSV")
    dump.add_argument("--candidate", required=True)
    dump.add_argument("--reference", action="append", required=True)
    dump.add_argument("--profile", default="english")
    dump.add_argument("--strict", action="store_true")
    dump.set_defaults(func=_cmd_dump_counts)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING, format="%(message)s")
    args = build_parser().parse_args(argv)
    try:
        output = args.func(args)
    except ValidationError as exc:
        print(f"blond: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"blond: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
