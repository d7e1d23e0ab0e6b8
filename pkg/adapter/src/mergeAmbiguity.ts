/**
 * Merge human ambiguity annotations (CSV rows of doc_id,sentence_idx,term)
 * into interchange records. Re-merging the same rows is a no-op, so the
 * operation is idempotent; rows pointing at unknown documents or sentences
 * are hard errors that name the offending row.
 */

import { AdapterError } from "./pipeline";
import { AmbiguityJson, CorpusRecord } from "./types";

export interface AmbiguityRow {
  docId: string;
  sentenceIdx: number;
  term: string;
}

/** Parse the annotation CSV; a leading `doc_id,sentence_idx,term` header is optional. */
export function parseAmbiguityCsv(text: string, source = "<csv>"): AmbiguityRow[] {
  const rows: AmbiguityRow[] = [];
  const lines = text.split("\n");
  lines.forEach((line, i) => {
    const trimmed = line.trim();
    if (!trimmed) return;
    if (i === 0 && /^doc_id\s*,\s*sentence_idx\s*,\s*term$/i.test(trimmed)) return;
    const cells = splitCsvRow(trimmed);
    if (cells.length < 3) {
      throw new AdapterError(`${source} row ${i + 1}: expected doc_id,sentence_idx,term`);
    }
    const sentenceIdx = Number(cells[1]);
    if (!Number.isInteger(sentenceIdx) || sentenceIdx < 0) {
      throw new AdapterError(`${source} row ${i + 1}: bad sentence index ${cells[1]}`);
    }
    if (!cells[2]) {
      throw new AdapterError(`${source} row ${i + 1}: empty term`);
    }
    rows.push({ docId: cells[0], sentenceIdx, term: cells[2] });
  });
  return rows;
}

function splitCsvRow(line: string): string[] {
  // just enough CSV: quoted cells may contain commas and doubled quotes
  const cells: string[] = [];
  let cell = "";
  let quoted = false;
  for (let i = 0; i < line.length; i++) {
    const ch = line[i];
    if (quoted) {
      if (ch === '"' && line[i + 1] === '"') {
        cell += '"';
        i += 1;
      } else if (ch === '"') {
        quoted = false;
      } else {
        cell += ch;
      }
    } else if (ch === '"') {
      quoted = true;
    } else if (ch === ",") {
      cells.push(cell);
      cell = "";
    } else {
      cell += ch;
    }
  }
  cells.push(cell);
  return cells.map((c) => c.trim());
}

export interface MergeResult {
  records: CorpusRecord[];
  added: number;
  skippedExisting: number;
  warnings: string[];
}

export function mergeAmbiguity(records: CorpusRecord[], rows: AmbiguityRow[]): MergeResult {
  const byId = new Map<string, CorpusRecord>();
  for (const record of records) byId.set(record.doc_id, record);

  let added = 0;
  let skippedExisting = 0;
  const warnings: string[] = [];

  rows.forEach((row, i) => {
    const record = byId.get(row.docId);
    if (!record) {
      throw new AdapterError(
        `row ${i + 1}: doc_id ${JSON.stringify(row.docId)} not present in the corpus`
      );
    }
    if (row.sentenceIdx >= record.sentences.length) {
      throw new AdapterError(
        `row ${i + 1}: sentence ${row.sentenceIdx} out of range for ` +
          `${row.docId} (${record.sentences.length} sentences)`
      );
    }
    const entry: AmbiguityJson = { s: row.sentenceIdx, term: row.term };
    const existing = record.ambiguity ?? [];
    if (existing.some((a) => a.s === entry.s && a.term === entry.term)) {
      skippedExisting += 1;
      return;
    }
    const sentenceText = record.sentences[row.sentenceIdx].map((t) => t.t).join(" ");
    if (!sentenceText.includes(row.term)) {
      warnings.push(
        `row ${i + 1}: term ${JSON.stringify(row.term)} not found in ` +
          `${row.docId} sentence ${row.sentenceIdx}`
      );
    }
    record.ambiguity = [...existing, entry];
    added += 1;
  });

  return { records, added, skippedExisting, warnings };
}
