import assert from "node:assert/strict";
import { test } from "node:test";

import { mergeAmbiguity, parseAmbiguityCsv } from "../src/mergeAmbiguity";
import { CorpusRecord } from "../src/types";

function corpus(): CorpusRecord[] {
  return [
    {
      doc_id: "d1",
      sentences: [
        [{ t: "What", p: "WP" }, { t: "are", p: "VBP" }, { t: "you", p: "PRP" },
         { t: "watching", p: "VBG" }, { t: "?", p: "." }],
        [{ t: "The", p: "DT" }, { t: "Avengers", p: "NNP" }, { t: ".", p: "." }],
      ],
      entities: [],
    },
  ];
}

test("csv rows parse with or without a header", () => {
  const withHeader = parseAmbiguityCsv("doc_id,sentence_idx,term\nd1,0,watching\n");
  const bare = parseAmbiguityCsv("d1,0,watching\n");
  assert.deepEqual(withHeader, bare);
  assert.deepEqual(withHeader, [{ docId: "d1", sentenceIdx: 0, term: "watching" }]);
});

test("quoted terms may contain commas", () => {
  const rows = parseAmbiguityCsv('d1,0,"watching, closely"\n');
  assert.equal(rows[0].term, "watching, closely");
});

test("a row lands as one ambiguity annotation", () => {
  const result = mergeAmbiguity(corpus(), [{ docId: "d1", sentenceIdx: 0, term: "watching" }]);
  assert.equal(result.added, 1);
  assert.deepEqual(result.records[0].ambiguity, [{ s: 0, term: "watching" }]);
});

test("re-merging the same rows is idempotent", () => {
  const rows = [{ docId: "d1", sentenceIdx: 0, term: "watching" }];
  const once = mergeAmbiguity(corpus(), rows);
  const twice = mergeAmbiguity(once.records, rows);
  assert.equal(twice.added, 0);
  assert.equal(twice.skippedExisting, 1);
  assert.deepEqual(twice.records, once.records);
});

test("an empty csv leaves the corpus untouched", () => {
  assert.deepEqual(parseAmbiguityCsv(""), []);
  const result = mergeAmbiguity(corpus(), []);
  assert.deepEqual(result.records, corpus());
});

test("dangling doc ids name the row", () => {
  assert.throws(
    () => mergeAmbiguity(corpus(), [{ docId: "nope", sentenceIdx: 0, term: "x" }]),
    /row 1.*nope/
  );
});

test("out-of-range sentence indexes name the row", () => {
  assert.throws(
    () => mergeAmbiguity(corpus(), [{ docId: "d1", sentenceIdx: 9, term: "x" }]),
    /row 1.*sentence 9/
  );
});

test("terms missing from the addressed sentence warn but merge", () => {
  const result = mergeAmbiguity(corpus(), [{ docId: "d1", sentenceIdx: 1, term: "watching" }]);
  assert.equal(result.added, 1);
  assert.equal(result.warnings.length, 1);
  assert.match(result.warnings[0], /not found/);
});

test("bad sentence indexes in the csv are rejected", () => {
  assert.throws(() => parseAmbiguityCsv("d1,x,term\n"), /bad sentence index/);
});
