// UI-core equivalence: the browser port must produce output that is
// code-point-identical to the CLI for the same inputs. The fixtures cover
// all three placements, smart typography, unencodable drops, multi-line
// payloads, and every shipped preset.

import { spawnSync } from "node:child_process";
import { describe, expect, it } from "vitest";

import { PRESETS, Placement, normalizeForEncoding, smuggle } from "../src/core";

const PYTHON = process.env.PYTHON ?? "python3";

function cliEncode(visible: string, payload: string, placement: Placement): string {
  const proc = spawnSync(
    PYTHON,
    ["-m", "promptmark.cli", "encode", "--payload", payload, "--placement", placement],
    { input: visible, encoding: "utf-8" },
  );
  expect(proc.status, proc.stderr).toBe(0);
  return proc.stdout;
}

function uiEncode(visible: string, payload: string, placement: Placement): string {
  return smuggle(
    normalizeForEncoding(visible).output,
    normalizeForEncoding(payload).output,
    placement,
  );
}

const BRIEF = "Q1. Compare BFS and DFS.\nQ2. Prove your answer.\n";

const FIXTURES: Array<[string, string, Placement]> = [
  [BRIEF, "hidden instruction", "end"],
  [BRIEF, "hidden instruction", "start"],
  [BRIEF, "hidden instruction", "mid"],
  ["", "x", "end"],
  [BRIEF, "", "end"],
  ["Hi!\nBye.", "w", "mid"],
  ["One sentence. Second.", "w", "mid"],
  ["don’t — wait…", "fold the visible text", "end"],
  [BRIEF, "smart “quotes” in the payload…", "end"],
  ["café au lait 你好", "drops in the visible text", "end"],
  [BRIEF, "unencodable payload 你好 parts", "start"],
  ["line one\r\nline two\r\n", "CR stripping", "end"],
  [BRIEF, "multi\nline\npayload\n", "mid"],
  [BRIEF, "tabs\tand\ttabs", "end"],
  ["A.\tTab boundary follows.", "w", "mid"],
  ["No boundary here at all", "w", "mid"],
  ["!?.\n", "punctuation soup", "mid"],
  [" ", " ", "start"],
  [BRIEF + BRIEF + BRIEF, "long".repeat(100), "end"],
  ["• bullet – dash space", "typography everywhere…", "mid"],
];

describe("UI-core equivalence", () => {
  it("covers the required 20 fixtures", () => {
    expect(FIXTURES.length).toBe(20);
  });

  it.each(FIXTURES.map((f, i) => [i, ...f] as const))(
    "fixture %i matches the CLI",
    (_i, visible, payload, placement) => {
      expect(uiEncode(visible, payload, placement)).toBe(
        cliEncode(visible, payload, placement),
      );
    },
  );

  it.each(PRESETS.map((p) => [p.id] as const))(
    "preset %s matches the CLI",
    (id) => {
      const proc = spawnSync(
        PYTHON,
        ["-m", "promptmark.cli", "encode", "--preset", id],
        { input: BRIEF, encoding: "utf-8" },
      );
      expect(proc.status, proc.stderr).toBe(0);
      const preset = PRESETS.find((p) => p.id === id)!;
      expect(uiEncode(BRIEF, preset.payload_text, "end")).toBe(proc.stdout);
    },
  );
});
