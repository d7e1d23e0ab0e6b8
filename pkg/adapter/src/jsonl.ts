/** Minimal JSONL reading/writing for the interchange files. */

import * as fs from "fs";

import { CorpusRecord } from "./types";

export function readCorpus(path: string): CorpusRecord[] {
  const records: CorpusRecord[] = [];
  const lines = fs.readFileSync(path, "utf-8").split("\n");
  lines.forEach((line, i) => {
    const trimmed = line.trim();
    if (!trimmed) return;
    try {
      records.push(JSON.parse(trimmed) as CorpusRecord);
    } catch (err) {
      throw new Error(`${path} line ${i + 1}: invalid JSON (${(err as Error).message})`);
    }
  });
  return records;
}

export function writeCorpus(path: string, records: CorpusRecord[]): void {
  const body = records.map((r) => JSON.stringify(r)).join("\n");
  fs.writeFileSync(path, body + (records.length ? "\n" : ""), "utf-8");
}
