/**
 * Browser-side port of the promptmark core transforms.
 *
 * The fold table and the preset payloads are loaded verbatim from the
 * Python package's versioned data files (regenerated into data.ts by
 * scripts/sync-data.mjs), and the test suite checks every transform
 * code-point-for-code-point against the CLI, so this file never drifts
 * from the core.
 *
 * Everything works on Unicode code points (Array.from / fromCodePoint),
 * never on UTF-16 units: the tag range lies above the BMP and unit-level
 * indexing would split surrogate pairs.
 */

import { FOLD_TABLE, PRESETS, Preset } from "./data";

export const TAG_BASE = 0xe0000;
export const TAG_RANGE_END = 0xe007f;

export type Placement = "start" | "mid" | "end";

export interface DecodeResult {
  text: string;
  dropped: number; // tag code points with no mirror in the alphabet
}

export interface NormalizationReport {
  output: string;
  foldedCount: number;
  droppedCount: number;
  droppedSamples: Array<[number, number]>; // [offset, codePoint], capped at 20
}

const MAX_DROPPED_SAMPLES = 20;

function isAlphabet(cp: number): boolean {
  return (cp >= 0x20 && cp <= 0x7e) || cp === 0x09 || cp === 0x0a;
}

function isTag(cp: number): boolean {
  return cp >= TAG_BASE && cp <= TAG_RANGE_END;
}

export function encodeTags(payload: string): string {
  let out = "";
  for (const ch of payload) {
    const cp = ch.codePointAt(0)!;
    if (!isAlphabet(cp)) {
      throw new Error(
        `unnormalized input: U+${cp.toString(16).toUpperCase()} is not encodable`,
      );
    }
    out += String.fromCodePoint(cp + TAG_BASE);
  }
  return out;
}

export function decodeTags(tags: string): DecodeResult {
  let text = "";
  let dropped = 0;
  for (const ch of tags) {
    const cp = ch.codePointAt(0)!;
    if (!isTag(cp)) {
      throw new Error(
        `not a tag string: U+${cp.toString(16).toUpperCase()} is outside the Tags block`,
      );
    }
    const mirrored = cp - TAG_BASE;
    if (isAlphabet(mirrored)) {
      text += String.fromCodePoint(mirrored);
    } else {
      dropped += 1;
    }
  }
  return { text, dropped };
}

export function projectTags(text: string): string {
  return Array.from(text)
    .filter((ch) => isTag(ch.codePointAt(0)!))
    .join("");
}

export function stripTags(text: string): string {
  return Array.from(text)
    .filter((ch) => !isTag(ch.codePointAt(0)!))
    .join("");
}

export function verify(text: string): DecodeResult {
  return decodeTags(projectTags(text));
}

export function normalizeForEncoding(text: string): NormalizationReport {
  let out = "";
  let foldedCount = 0;
  let droppedCount = 0;
  const droppedSamples: Array<[number, number]> = [];
  let offset = 0;
  for (const ch of text) {
    const cp = ch.codePointAt(0)!;
    const fold = FOLD_TABLE[cp];
    if (fold !== undefined) {
      out += fold;
      foldedCount += 1;
    } else if (cp === 0x0d) {
      // carriage returns are stripped, never counted
    } else if (isAlphabet(cp)) {
      out += ch;
    } else {
      droppedCount += 1;
      if (droppedSamples.length < MAX_DROPPED_SAMPLES) {
        droppedSamples.push([offset, cp]);
      }
    }
    offset += 1;
  }
  return { output: out, foldedCount, droppedCount, droppedSamples };
}

export function countUnencodable(text: string): number {
  return normalizeForEncoding(text).droppedCount;
}

export function sentenceBoundary(visible: string): number {
  const cps = Array.from(visible);
  for (let j = 0; j < cps.length - 1; j++) {
    if (".!?".includes(cps[j]) && "\t\n".includes(cps[j + 1])) {
      return j + 1;
    }
  }
  return cps.length;
}

export function insertionIndex(visible: string, placement: Placement): number {
  if (placement === "start") return 0;
  if (placement === "end") return Array.from(visible).length;
  return sentenceBoundary(visible);
}

/** Embed a normalized payload into normalized visible text. */
export function smuggle(
  visible: string,
  payload: string,
  placement: Placement = "end",
): string {
  for (const ch of visible) {
    if (!isAlphabet(ch.codePointAt(0)!)) {
      throw new Error("visible text is not normalized");
    }
  }
  const cps = Array.from(visible);
  const k = insertionIndex(visible, placement);
  return cps.slice(0, k).join("") + encodeTags(payload) + cps.slice(k).join("");
}

export function getPreset(id: string): Preset {
  const preset = PRESETS.find((p) => p.id === id);
  if (!preset) throw new Error(`unknown preset: ${id}`);
  return preset;
}

export { PRESETS };
export type { Preset };
