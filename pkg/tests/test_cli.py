"""Command-line surface: exit codes, output formats, determinism."""

import json
import random

import pytest

from blond import builtin_profile, serialize_corpus
from blond.cli import main

from fixtures import random_corpus, random_document

ENGLISH = builtin_profile("english")


@pytest.fixture
def identity_corpus(tmp_path):
    rng = random.Random(30)
    docs = random_corpus(rng, 4)
    cand = tmp_path / "cand.jsonl"
    ref = tmp_path / "ref.jsonl"
    serialize_corpus(docs, cand)
    serialize_corpus(docs, ref)
    return str(cand), str(ref)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(out):
    return [json.loads(line) for line in out.strip().splitlines()]


def write_csv(path, pairs):
    path.write_text(
        "doc_id,score\n" + "".join(f"{d},{s}\n" for d, s in pairs), encoding="utf-8"
    )
    return str(path)


class TestScore:
    def test_identity_scores_one_hundred_and_zero(self, capsys, identity_corpus):
        cand, ref = identity_corpus
        code, out, _ = run(
            capsys,
            ["score", "--candidate", cand, "--reference", ref,
             "--variant", "blond,dblond,blond-d", "--output", "json"],
        )
        assert code == 0
        records = json_lines(out)
        docs = [r for r in records if "doc_id" in r]
        summaries = [r for r in records if "mean" in r]
        assert {r["variant"] for r in summaries} == {"blond", "dblond", "blond-d"}
        for record in docs:
            expected = 0.0 if record["variant"] == "blond-d" else 100.0
            assert record["total"] == expected
            assert record["lp"] == 1.0
        by_variant = {r["variant"]: r for r in summaries}
        assert by_variant["blond"]["mean"] == 100.0
        assert by_variant["blond-d"]["mean"] == 0.0
        assert by_variant["blond"]["variance_kind"] == "population"

    def test_documents_are_ordered_by_doc_id(self, capsys, identity_corpus):
        cand, ref = identity_corpus
        _, out, _ = run(capsys, ["score", "--candidate", cand, "--reference", ref])
        ids = [r["doc_id"] for r in json_lines(out) if "doc_id" in r]
        assert ids == sorted(ids)

    def test_plus_without_annotations_is_a_clean_failure(self, capsys, tmp_path):
        rng = random.Random(31)
        docs = [random_document(rng, "d0", with_ambiguity=False)]
        cand = tmp_path / "cand.jsonl"
        ref = tmp_path / "ref.jsonl"
        serialize_corpus(docs, cand)
        serialize_corpus(docs, ref)
        code, out, err = run(
            capsys,
            ["score", "--candidate", str(cand), "--reference", str(ref), "--variant", "blond+"],
        )
        assert code == 1
        assert out == ""
        assert "ambiguity" in err

    def test_missing_file_exits_two(self, capsys, tmp_path):
        code, out, err = run(
            capsys,
            ["score", "--candidate", str(tmp_path / "nope.jsonl"),
             "--reference", str(tmp_path / "nope.jsonl")],
        )
        assert code == 2
        assert out == ""
        assert err

    def test_invalid_corpus_exits_one(self, capsys, tmp_path):
        bad = tmp_path / "bad.jsonl"
        bad.write_text('{"doc_id": "d", "sentences": []}\n', encoding="utf-8")
        code, out, err = run(
            capsys, ["score", "--candidate", str(bad), "--reference", str(bad)]
        )
        assert code == 1
        assert out == ""
        assert "sentences" in err

    def test_unknown_variant_exits_one(self, capsys, identity_corpus):
        cand, ref = identity_corpus
        code, out, err = run(
            capsys,
            ["score", "--candidate", cand, "--reference", ref, "--variant", "bleu"],
        )
        assert code == 1
        assert "unknown variant" in err

    def test_tsv_and_pretty_outputs(self, capsys, identity_corpus):
        cand, ref = identity_corpus
        code, out, _ = run(
            capsys,
            ["score", "--candidate", cand, "--reference", ref, "--output", "tsv"],
        )
        assert code == 0
        header, *rows = out.strip().splitlines()
        assert header.split("\t")[:4] == ["doc_id", "variant", "total", "lp"]
        assert all(row.split("\t")[2] == "100.0000" for row in rows)

        code, out, _ = run(
            capsys,
            ["score", "--candidate", cand, "--reference", ref, "--output", "pretty"],
        )
        assert code == 0
        assert "mean 100.00" in out

    def test_multi_reference_scoring(self, capsys, tmp_path):
        rng = random.Random(32)
        docs = random_corpus(rng, 3)
        others = [random_document(rng, doc.doc_id) for doc in docs]
        cand = tmp_path / "cand.jsonl"
        ref1 = tmp_path / "ref1.jsonl"
        ref2 = tmp_path / "ref2.jsonl"
        serialize_corpus(docs, cand)
        serialize_corpus(others, ref1)
        serialize_corpus(docs, ref2)  # second reference equals the candidate
        code, out, _ = run(
            capsys,
            ["score", "--candidate", str(cand), "--reference", str(ref1),
             "--reference", str(ref2), "--variant", "blond"],
        )
        assert code == 0
        for record in json_lines(out):
            if "doc_id" in record:
                assert record["total"] == 100.0

    def test_dump_counts_flag_writes_tsv(self, capsys, identity_corpus, tmp_path):
        cand, ref = identity_corpus
        dump = tmp_path / "counts.tsv"
        code, _, _ = run(
            capsys,
            ["score", "--candidate", cand, "--reference", ref, "--dump-counts", str(dump)],
        )
        assert code == 0
        text = dump.read_text(encoding="utf-8")
        assert "family=V" in text
        assert "side=cand" in text

    def test_determinism_across_runs(self, capsys, identity_corpus):
        cand, ref = identity_corpus
        argv = ["score", "--candidate", cand, "--reference", ref, "--variant", "blond,dblond-d"]
        _, out_1, _ = run(capsys, argv)
        _, out_2, _ = run(capsys, argv)
        assert out_1 == out_2


class TestDumpCountsCommand:
    def test_dump_counts_streams_matrices(self, capsys, identity_corpus):
        cand, ref = identity_corpus
        code, out, _ = run(
            capsys, ["dump-counts", "--candidate", cand, "--reference", ref]
        )
        assert code == 0
        assert out.startswith("# doc=")
        families = {
            line.split("\t")[2] for line in out.splitlines() if line.startswith("# doc=")
        }
        assert {"family=E", "family=V", "family=P", "family=1g"} <= families


class TestCompare:
    def test_file_against_itself(self, capsys, tmp_path):
        path = write_csv(tmp_path / "a.csv", [(f"d{i}", 10.0 + i) for i in range(6)])
        code, out, _ = run(capsys, ["compare", path, path])
        assert code == 0
        record = json.loads(out)
        assert record["t"] == 0.0
        assert record["band"] == ">.5"
        assert record["n"] == 6

    def test_constant_shift_reports_infinity(self, capsys, tmp_path):
        a = write_csv(tmp_path / "a.csv", [(f"d{i}", 10.0 + i) for i in range(5)])
        b = write_csv(tmp_path / "b.csv", [(f"d{i}", 11.0 + i) for i in range(5)])
        code, out, _ = run(capsys, ["compare", b, a])
        assert code == 0
        record = json.loads(out)
        assert record["t"] == "inf"
        assert record["band"] == "<.001"

    def test_golden_sqrt3(self, capsys, tmp_path):
        a = write_csv(tmp_path / "a.csv", [("d1", 2.0), ("d2", 0.0), ("d3", 2.0), ("d4", 0.0)])
        b = write_csv(tmp_path / "b.csv", [("d1", 0.0), ("d2", 0.0), ("d3", 0.0), ("d4", 0.0)])
        code, out, _ = run(capsys, ["compare", a, b])
        record = json.loads(out)
        assert record["t"] == pytest.approx(1.7321, abs=1e-4)
        assert record["band"] == ">.1"

    def test_doc_id_mismatch_exits_one(self, capsys, tmp_path):
        a = write_csv(tmp_path / "a.csv", [("d1", 1.0), ("d2", 2.0)])
        b = write_csv(tmp_path / "b.csv", [("d1", 1.0), ("dX", 2.0)])
        code, out, err = run(capsys, ["compare", a, b])
        assert code == 1
        assert out == ""
        assert "dX" in err


class TestCorrelate:
    def test_metric_equals_human(self, capsys, tmp_path):
        m = write_csv(tmp_path / "m.csv", [(f"d{i}", float(i)) for i in range(5)])
        code, out, _ = run(capsys, ["correlate", m, m])
        record = json.loads(out)
        assert record["r"] == 1.0
        assert record["ci_low"] == 1.0

    def test_anticorrelated(self, capsys, tmp_path):
        m = write_csv(tmp_path / "m.csv", [(f"d{i}", float(i)) for i in range(5)])
        h = write_csv(tmp_path / "h.csv", [(f"d{i}", float(-i)) for i in range(5)])
        code, out, _ = run(capsys, ["correlate", m, h])
        assert json.loads(out)["r"] == -1.0

    def test_golden_fixture(self, capsys, tmp_path):
        m = write_csv(tmp_path / "m.csv", [(f"d{i}", v) for i, v in enumerate([1, 2, 3, 4, 5])])
        h = write_csv(tmp_path / "h.csv", [(f"d{i}", v) for i, v in enumerate([2, 1, 4, 3, 6])])
        code, out, _ = run(capsys, ["correlate", m, h])
        record = json.loads(out)
        assert record["r"] == pytest.approx(0.822, abs=1e-3)
        assert record["n"] == 5

    def test_matrix_output(self, capsys, tmp_path):
        rng = random.Random(33)
        paths = []
        for name in ("bleu", "meteor", "ours"):
            paths.append(
                write_csv(
                    tmp_path / f"{name}.csv",
                    [(f"d{i}", rng.uniform(0, 100)) for i in range(10)],
                )
            )
        code, out, _ = run(capsys, ["correlate", "--matrix", *paths])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].split("\t") == ["metric", "bleu", "meteor", "ours"]
        cells = [line.split("\t") for line in lines[1:]]
        assert cells[0][1] == "1.0000"
        assert cells[0][2] == cells[1][1]

    def test_wrong_file_count_exits_one(self, capsys, tmp_path):
        m = write_csv(tmp_path / "m.csv", [(f"d{i}", float(i)) for i in range(5)])
        code, _, err = run(capsys, ["correlate", m])
        assert code == 1
        assert "exactly two" in err
