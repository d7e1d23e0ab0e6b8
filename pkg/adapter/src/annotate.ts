/**
 * Turn raw sentence-per-line text into annotated interchange records.
 *
 * Input files hold one or more documents: a line of the form `# doc: <id>`
 * starts a new document; without any header the whole file is one document
 * named after the file. Blank lines are skipped with a warning. Fine NER
 * tags from the pipeline pass through unmapped; the engine's language
 * profile owns the coarse merge.
 */

import * as path from "path";

import { AdapterError, PIPELINE_NAME, PIPELINE_VERSION, annotateLine } from "./pipeline";
import { AnnotationManifest, CorpusRecord, EntityJson, RawDocument } from "./types";

const DOC_HEADER = /^#\s*doc:\s*(\S.*)$/;

export interface AnnotateResult {
  records: CorpusRecord[];
  manifest: AnnotationManifest;
  warnings: string[];
}

/** Split raw text into documents by `# doc:` headers. */
export function parseRawText(text: string, fallbackId: string): RawDocument[] {
  const docs: RawDocument[] = [];
  let current: RawDocument | null = null;
  for (const line of text.split("\n")) {
    const header = line.match(DOC_HEADER);
    if (header) {
      current = { docId: header[1].trim(), lines: [] };
      docs.push(current);
      continue;
    }
    if (current === null) {
      current = { docId: fallbackId, lines: [] };
      docs.push(current);
    }
    current.lines.push(line);
  }
  for (const doc of docs) {
    // a trailing newline or blank separator before the next header is not
    // worth a warning; interior blanks still are
    while (doc.lines.length > 0 && !doc.lines[doc.lines.length - 1].trim()) {
      doc.lines.pop();
    }
  }
  return docs.filter((doc) => doc.lines.length > 0);
}

export function annotateText(
  text: string,
  language: string,
  inputName: string
): AnnotateResult {
  if (language !== "en" && language !== "english") {
    throw new AdapterError(
      `no pipeline installed for language ${JSON.stringify(language)}; only "en" is available`
    );
  }
  const fallbackId = path.basename(inputName).replace(/\.[^.]*$/, "") || "doc";
  const docs = parseRawText(text, fallbackId);
  if (docs.length === 0) {
    throw new AdapterError(`${inputName}: no document content found`);
  }

  const warnings: string[] = [];
  const fineTags = new Set<string>();
  const seenIds = new Set<string>();
  const records: CorpusRecord[] = [];
  let sentenceTotal = 0;

  for (const doc of docs) {
    if (seenIds.has(doc.docId)) {
      throw new AdapterError(`duplicate doc id ${JSON.stringify(doc.docId)} in ${inputName}`);
    }
    seenIds.add(doc.docId);

    const sentences: CorpusRecord["sentences"] = [];
    const entities: EntityJson[] = [];
    doc.lines.forEach((line, lineIdx) => {
      if (!line.trim()) {
        warnings.push(`${doc.docId}: empty line ${lineIdx + 1} skipped`);
        return;
      }
      let annotated;
      try {
        annotated = annotateLine(line);
      } catch (err) {
        throw new AdapterError(
          `${doc.docId} line ${lineIdx + 1}: ${(err as Error).message}`
        );
      }
      const s = sentences.length;
      sentences.push(annotated.tokens);
      for (const span of annotated.entities) {
        entities.push({ s, b: span.b, e: span.e, tag: span.tag });
        fineTags.add(span.tag);
      }
    });
    sentenceTotal += sentences.length;
    records.push({ doc_id: doc.docId, sentences, entities });
  }

  const manifest: AnnotationManifest = {
    pipeline: PIPELINE_NAME,
    pipeline_version: PIPELINE_VERSION,
    language: "en",
    pos_tagset: "Penn Treebank verb/noun inventory approximated from compromise tags",
    emitted_fine_tags: [...fineTags].sort(),
    profile_compatibility:
      "fine tags PERSON/GPE/ORG merge under the engine's shipped english profile; " +
      "tense tags use the MD/VB* set that profile counts",
    input: inputName,
    documents: records.length,
    sentences: sentenceTotal,
  };
  return { records, manifest, warnings };
}
