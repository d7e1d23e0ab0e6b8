/**
 * English annotation pipeline built on compromise: tokenization, Penn-style
 * POS tags, and named entity spans (PERSON / GPE / ORG fine tags).
 *
 * Each input line is treated as exactly one sentence of the output document,
 * even when the tagger sees several sentences inside it; authorial
 * segmentation is part of what gets evaluated downstream. Punctuation glued
 * to a word is split off into its own token, so entity spans index the
 * emitted token list, not the tagger's terms.
 */

import nlp from "compromise";

import { EntityJson, TokenJson } from "./types";

export const PIPELINE_NAME = "compromise";
export const PIPELINE_VERSION: string = (nlp as unknown as { version: string }).version;

export class AdapterError extends Error {}

interface Term {
  text: string;
  pre: string;
  post: string;
  tags: string[];
  normal: string;
}

interface SentenceAnnotation {
  tokens: TokenJson[];
  /** spans over `tokens`, sentence-local, fine tag attached */
  entities: { b: number; e: number; tag: string }[];
}

// frequent auxiliaries whose tense the tagger often leaves implicit
const AUX_TAGS: Record<string, string> = {
  is: "VBZ", are: "VBP", am: "VBP", was: "VBD", were: "VBD",
  be: "VB", been: "VBN", being: "VBG",
  has: "VBZ", have: "VBP", had: "VBD",
  does: "VBZ", do: "VBP", did: "VBD",
};

/** Map one tagger term to a Penn Treebank style tag. */
export function pennTag(tagList: string[], normal: string): string {
  const tags = new Set(tagList);
  if (tags.has("Modal")) return "MD";
  if (tags.has("Particle")) return "RP";
  if (tags.has("Verb") || tags.has("Auxiliary") || tags.has("Copula")) {
    if (normal in AUX_TAGS) return AUX_TAGS[normal];
    if (tags.has("PastTense")) return "VBD";
    if (tags.has("Participle") || tags.has("PastParticiple")) return "VBN";
    if (tags.has("Gerund")) return "VBG";
    if (tags.has("Infinitive")) return "VB";
    if (tags.has("PresentTense")) return normal.endsWith("s") ? "VBZ" : "VBP";
    return "VB";
  }
  if (tags.has("Pronoun")) return tags.has("Possessive") ? "PRP$" : "PRP";
  if (tags.has("ProperNoun")) return tags.has("Plural") ? "NNPS" : "NNP";
  if (tags.has("Noun")) return tags.has("Plural") ? "NNS" : "NN";
  if (tags.has("Adjective")) {
    if (tags.has("Comparative")) return "JJR";
    if (tags.has("Superlative")) return "JJS";
    return "JJ";
  }
  if (tags.has("Adverb")) return "RB";
  if (tags.has("Determiner")) return "DT";
  if (tags.has("Preposition")) return "IN";
  if (tags.has("Conjunction")) return "CC";
  if (tags.has("Value") || tags.has("Cardinal") || tags.has("Ordinal")) return "CD";
  if (tags.has("QuestionWord")) return "WP";
  if (tags.has("Expression")) return "UH";
  return "FW";
}

const OPENERS = new Set(["(", "[", "{"]);
const CLOSERS = new Set([")", "]", "}"]);

function punctTag(run: string, side: "pre" | "post"): string {
  const ch = run[0];
  if (ch === "." || ch === "!" || ch === "?" || run === "...") return ".";
  if (ch === ",") return ",";
  if (ch === ";" || ch === ":") return ":";
  if (ch === '"' || ch === "'" || ch === "“" || ch === "”") {
    return side === "pre" ? "``" : "''";
  }
  if (OPENERS.has(ch)) return "(";
  if (CLOSERS.has(ch)) return ")";
  return run;
}

/** Split a pre/post string into punctuation runs (consecutive identical chars pool). */
function punctRuns(text: string): string[] {
  const runs: string[] = [];
  for (const ch of text) {
    if (/\s/.test(ch)) continue;
    if (runs.length > 0 && runs[runs.length - 1][0] === ch) {
      runs[runs.length - 1] += ch;
    } else {
      runs.push(ch);
    }
  }
  return runs;
}

type EntitySpan = { start: number; length: number; tag: string };

function entitySpans(doc: ReturnType<typeof nlp>): EntitySpan[] {
  const spans: EntitySpan[] = [];
  const taken = new Set<number>();
  // person wins over org wins over place when the tagger overlaps them
  const sources: [string, () => { json: (opts: object) => unknown }][] = [
    ["PERSON", () => doc.people()],
    ["ORG", () => doc.organizations()],
    ["GPE", () => doc.places()],
  ];
  for (const [tag, select] of sources) {
    for (const match of select().json({ offset: true }) as any[]) {
      const start: number = match.offset.index;
      const length: number = match.terms.length;
      const indexes = Array.from({ length }, (_, k) => start + k);
      if (indexes.some((i) => taken.has(i))) continue;
      indexes.forEach((i) => taken.add(i));
      spans.push({ start, length, tag });
    }
  }
  return spans.sort((a, b) => a.start - b.start);
}

/**
 * Annotate one raw line as one sentence.
 * Throws AdapterError when a non-empty line produces no tokens.
 */
export function annotateLine(line: string): SentenceAnnotation {
  const doc = nlp(line);
  const tokens: TokenJson[] = [];
  // document-level term index -> emitted index of that term's word token
  const emittedIndex = new Map<number, number>();

  let termIndex = 0;
  for (const sentence of doc.json({ offset: true }) as any[]) {
    for (const raw of sentence.terms as Term[]) {
      for (const run of punctRuns(raw.pre)) {
        tokens.push({ t: run, p: punctTag(run, "pre") });
      }
      if (raw.text.length > 0) {
        emittedIndex.set(termIndex, tokens.length);
        tokens.push({ t: raw.text, p: pennTag(raw.tags ?? [], raw.normal ?? "") });
      }
      for (const run of punctRuns(raw.post)) {
        tokens.push({ t: run, p: punctTag(run, "post") });
      }
      termIndex += 1;
    }
  }
  if (tokens.length === 0) {
    throw new AdapterError("line produced no tokens");
  }

  const entities: SentenceAnnotation["entities"] = [];
  for (const span of entitySpans(doc)) {
    const first = emittedIndex.get(span.start);
    const last = emittedIndex.get(span.start + span.length - 1);
    if (first === undefined || last === undefined) continue;
    entities.push({ b: first, e: last + 1, tag: span.tag });
  }
  return { tokens, entities };
}

/**
 * Reverse of tokenization for round-trip checks: join with spaces, then
 * reattach punctuation (no space before closers/clause marks, none after
 * openers and opening quotes).
 */
export function detokenize(tokens: TokenJson[]): string {
  let out = "";
  let glueNext = false;
  let quoteOpen = false;
  for (const token of tokens) {
    const t = token.t;
    const isClosing =
      /^[.,!?;:%]+$/.test(t) || CLOSERS.has(t[0]) || (quoteOpen && (t === '"' || t === "'"));
    const isOpening = OPENERS.has(t[0]) || (!quoteOpen && (t === '"' || t === "'"));
    if (t === '"' || t === "'") quoteOpen = !quoteOpen;
    if (out === "" || glueNext || isClosing) {
      out += t;
    } else {
      out += " " + t;
    }
    glueNext = isOpening;
  }
  return out;
}
