"""Corpus model: loading, validation, and the JSONL interchange format."""

import json

import pytest

from blond import (
    CorpusError,
    Token,
    build_axes,
    builtin_profile,
    document_from_tokens,
    document_to_record,
    load_corpus,
    serialize_corpus,
)

ENGLISH = builtin_profile("english")


def write_jsonl(path, records):
    with open(path, "w", encoding="utf-8") as handle:
        for record in records:
            handle.write(json.dumps(record) + "\n")


def simple_record(doc_id="d1"):
    return {
        "doc_id": doc_id,
        "sentences": [
            [{"t": "Qiao", "p": "NNP"}, {"t": "Lian", "p": "NNP"}, {"t": "slept", "p": "VBD"}],
            [{"t": "She", "p": "PRP"}, {"t": "smiled", "p": "VBD"}],
        ],
        "entities": [{"s": 0, "b": 0, "e": 2, "tag": "PERSON"}],
    }


class TestLoading:
    def test_single_document_round_trip(self, tmp_path):
        path = tmp_path / "c.jsonl"
        write_jsonl(path, [simple_record()])
        docs = load_corpus(path, ENGLISH)
        assert len(docs) == 1
        doc = docs[0]
        assert len(doc.sentences) == 2
        mentions = list(doc.mentions())
        assert len(mentions) == 1
        assert mentions[0].text == "Qiao Lian"
        assert mentions[0].coarse == "PERSON"
        assert document_to_record(doc) == simple_record()

    def test_serialize_load_round_trip(self, tmp_path):
        record = simple_record()
        record["ambiguity"] = [{"s": 1, "term": "smiled"}]
        path = tmp_path / "c.jsonl"
        write_jsonl(path, [record])
        docs = load_corpus(path, ENGLISH)
        out = tmp_path / "out.jsonl"
        serialize_corpus(docs, out)
        original = [json.loads(line) for line in path.read_text().splitlines()]
        rewritten = [json.loads(line) for line in out.read_text().splitlines()]
        assert original == rewritten

    def test_span_end_beyond_sentence_is_an_error(self, tmp_path):
        record = simple_record()
        record["entities"] = [{"s": 1, "b": 0, "e": 6, "tag": "PERSON"}]
        path = tmp_path / "c.jsonl"
        write_jsonl(path, [record])
        with pytest.raises(CorpusError) as err:
            load_corpus(path, ENGLISH)
        assert "d1" in str(err.value)
        assert "sentence 1" in str(err.value)

    def test_work_of_art_merges_to_non_person(self, tmp_path):
        record = simple_record()
        record["entities"] = [{"s": 0, "b": 0, "e": 1, "tag": "WORK_OF_ART"}]
        path = tmp_path / "c.jsonl"
        write_jsonl(path, [record])
        (doc,) = load_corpus(path, ENGLISH)
        (mention,) = list(doc.mentions())
        assert mention.coarse == "NON_PERSON"
        assert mention.fine_tag == "WORK_OF_ART"

    def test_unknown_tag_warns_and_ignores_by_default(self, tmp_path, caplog):
        record = simple_record()
        record["entities"] = [{"s": 0, "b": 0, "e": 1, "tag": "MADE_UP"}]
        path = tmp_path / "c.jsonl"
        write_jsonl(path, [record])
        with caplog.at_level("WARNING", logger="blond"):
            (doc,) = load_corpus(path, ENGLISH)
        assert list(doc.mentions()) == []
        assert any("MADE_UP" in message for message in caplog.messages)

    def test_unknown_tag_fails_under_strict(self, tmp_path):
        record = simple_record()
        record["entities"] = [{"s": 0, "b": 0, "e": 1, "tag": "MADE_UP"}]
        path = tmp_path / "c.jsonl"
        write_jsonl(path, [record])
        with pytest.raises(CorpusError, match="MADE_UP"):
            load_corpus(path, ENGLISH, strict=True)

    def test_ignore_tags_never_reach_count_axes(self, tmp_path):
        record = simple_record()
        record["entities"].append({"s": 1, "b": 0, "e": 1, "tag": "DATE"})
        path = tmp_path / "c.jsonl"
        write_jsonl(path, [record])
        (doc,) = load_corpus(path, ENGLISH)
        entity_axis = next(a for a in build_axes(doc, ENGLISH) if a.family == "entity")
        assert entity_axis.labels == (("PERSON", "Qiao Lian"),)

    def test_duplicate_doc_id_is_an_error(self, tmp_path):
        path = tmp_path / "c.jsonl"
        write_jsonl(path, [simple_record(), simple_record()])
        with pytest.raises(CorpusError, match="duplicate doc_id"):
            load_corpus(path, ENGLISH)

    def test_malformed_json_reports_line_number(self, tmp_path):
        path = tmp_path / "c.jsonl"
        path.write_text(json.dumps(simple_record()) + "\n{not json\n", encoding="utf-8")
        with pytest.raises(CorpusError, match="line 2"):
            load_corpus(path, ENGLISH)

    def test_blank_lines_are_skipped(self, tmp_path):
        path = tmp_path / "c.jsonl"
        path.write_text("\n" + json.dumps(simple_record()) + "\n\n", encoding="utf-8")
        assert len(load_corpus(path, ENGLISH)) == 1

    @pytest.mark.parametrize(
        "mutate, message",
        [
            (lambda r: r.pop("doc_id"), "doc_id"),
            (lambda r: r.update(sentences=[]), "sentences"),
            (lambda r: r.update(sentences=[[{"p": "NN"}]]), "token"),
            (lambda r: r.update(sentences=[[{"t": ""}]]), "surface"),
            (lambda r: r.update(entities=[{"s": 5, "b": 0, "e": 1, "tag": "PERSON"}]), "sentence 5"),
            (lambda r: r.update(entities=[{"s": 0, "b": 2, "e": 2, "tag": "PERSON"}]), "span"),
            (lambda r: r.update(ambiguity=[{"s": 9, "term": "x"}]), "sentence 9"),
            (lambda r: r.update(ambiguity=[{"s": 0, "term": ""}]), "term"),
        ],
    )
    def test_invalid_records_are_rejected(self, tmp_path, mutate, message):
        record = simple_record()
        mutate(record)
        path = tmp_path / "c.jsonl"
        write_jsonl(path, [record])
        with pytest.raises(CorpusError, match=message):
            load_corpus(path, ENGLISH)


class TestDirectConstruction:
    def test_document_from_tokens_accepts_mixed_token_shapes(self):
        doc = document_from_tokens(
            "d1", [["Hello", ("world", "NN"), Token("!", ".")]]
        )
        assert [t.surface for t in doc.sentences[0]] == ["Hello", "world", "!"]
        assert doc.sentences[0][1].pos == "NN"

    def test_entity_text_is_whitespace_normalized(self):
        doc = document_from_tokens(
            "d1",
            [[("New", "NNP"), ("York", "NNP")]],
            entities=[(0, 0, 2, "GPE")],
            profile=ENGLISH,
        )
        (mention,) = list(doc.mentions())
        assert mention.text == "New York"
        assert mention.coarse == "NON_PERSON"

    def test_out_of_range_entity_rejected(self):
        with pytest.raises(CorpusError):
            document_from_tokens(
                "d1", [[("a", "NN")]], entities=[(0, 0, 2, "PERSON")], profile=ENGLISH
            )

    def test_empty_document_rejected(self):
        with pytest.raises(CorpusError):
            document_from_tokens("d1", [])

    def test_token_count(self):
        doc = document_from_tokens("d1", [["a", "b"], ["c"]])
        assert doc.token_count == 3
