/**
 * Shapes of the JSONL interchange format the scoring engine consumes.
 * One JSON object per line; entity spans are token-indexed within their
 * sentence and carry the fine NER tag unmapped (the engine's language
 * profile does the coarse merge).
 */

export interface TokenJson {
  t: string;
  p: string;
}

export interface EntityJson {
  s: number;
  b: number;
  e: number;
  tag: string;
}

export interface AmbiguityJson {
  s: number;
  term: string;
}

export interface CorpusRecord {
  doc_id: string;
  sentences: TokenJson[][];
  entities: EntityJson[];
  ambiguity?: AmbiguityJson[];
}

/** A raw input document: one sentence per non-empty line. */
export interface RawDocument {
  docId: string;
  lines: string[];
}

/** Recorded next to every annotate run for reproducibility. */
export interface AnnotationManifest {
  pipeline: string;
  pipeline_version: string;
  language: string;
  pos_tagset: string;
  emitted_fine_tags: string[];
  profile_compatibility: string;
  input: string;
  documents: number;
  sentences: number;
}
