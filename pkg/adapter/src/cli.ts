#!/usr/bin/env node
/**
 * blond-annotate: turn raw text into scoring-ready JSONL, and merge human
 * ambiguity annotations into existing corpora.
 *
 *   blond-annotate annotate --lang en --in raw.txt --out corpus.jsonl
 *   blond-annotate merge-ambiguity --in corpus.jsonl --csv amb.csv --out corpus.plus.jsonl
 *
 * `annotate` also writes <out>.manifest.json recording the pipeline and tag
 * inventory (the interchange format itself has no room for metadata).
 */

import * as fs from "fs";

import { annotateText } from "./annotate";
import { readCorpus, writeCorpus } from "./jsonl";
import { mergeAmbiguity, parseAmbiguityCsv } from "./mergeAmbiguity";
import { AdapterError } from "./pipeline";

function parseFlags(argv: string[], allowed: string[]): Map<string, string> {
  const flags = new Map<string, string>();
  for (let i = 0; i < argv.length; i += 2) {
    const key = argv[i];
    const value = argv[i + 1];
    if (!key.startsWith("--") || !allowed.includes(key.slice(2))) {
      throw new AdapterError(`unknown or misplaced argument ${key}`);
    }
    if (value === undefined) {
      throw new AdapterError(`${key} needs a value`);
    }
    flags.set(key.slice(2), value);
  }
  return flags;
}

function need(flags: Map<string, string>, name: string): string {
  const value = flags.get(name);
  if (value === undefined) throw new AdapterError(`--${name} is required`);
  return value;
}

function cmdAnnotate(argv: string[]): number {
  const flags = parseFlags(argv, ["lang", "in", "out"]);
  const input = need(flags, "in");
  const output = need(flags, "out");
  const text = fs.readFileSync(input, "utf-8");
  const result = annotateText(text, flags.get("lang") ?? "en", input);
  for (const warning of result.warnings) {
    console.error(`warning: ${warning}`);
  }
  writeCorpus(output, result.records);
  fs.writeFileSync(
    `${output}.manifest.json`,
    JSON.stringify(result.manifest, null, 2) + "\n",
    "utf-8"
  );
  console.error(
    `annotated ${result.manifest.documents} document(s), ` +
      `${result.manifest.sentences} sentence(s) -> ${output}`
  );
  return 0;
}

function cmdMergeAmbiguity(argv: string[]): number {
  const flags = parseFlags(argv, ["in", "csv", "out"]);
  const input = need(flags, "in");
  const csvPath = need(flags, "csv");
  const output = need(flags, "out");
  const records = readCorpus(input);
  const rows = parseAmbiguityCsv(fs.readFileSync(csvPath, "utf-8"), csvPath);
  const result = mergeAmbiguity(records, rows);
  for (const warning of result.warnings) {
    console.error(`warning: ${warning}`);
  }
  writeCorpus(output, result.records);
  console.error(
    `merged ${result.added} annotation(s), ${result.skippedExisting} already present -> ${output}`
  );
  return 0;
}

export function main(argv: string[]): number {
  const [command, ...rest] = argv;
  try {
    if (command === "annotate") return cmdAnnotate(rest);
    if (command === "merge-ambiguity") return cmdMergeAmbiguity(rest);
    throw new AdapterError(
      `usage: blond-annotate annotate --lang en --in raw.txt --out corpus.jsonl\n` +
        `       blond-annotate merge-ambiguity --in corpus.jsonl --csv amb.csv --out merged.jsonl`
    );
  } catch (err) {
    if (err instanceof AdapterError) {
      console.error(`blond-annotate: ${err.message}`);
      return 1;
    }
    if ((err as NodeJS.ErrnoException).code) {
      console.error(`blond-annotate: ${(err as Error).message}`);
      return 2;
    }
    throw err;
  }
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
