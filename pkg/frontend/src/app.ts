/**
 * Three-panel encoder app: visible text, hidden instruction (with preset
 * picker), encoded output with copy-to-clipboard, plus a Verify tab.
 *
 * Static and offline: no network requests after page load, no storage
 * writes. Re-encodes live (debounced) on any input change; the button
 * only copies.
 */

import {
  NormalizationReport,
  Placement,
  PRESETS,
  getPreset,
  normalizeForEncoding,
  smuggle,
  verify,
} from "./core";

const DEBOUNCE_MS = 150;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function warningText(label: string, rep: NormalizationReport): string {
  const parts: string[] = [];
  if (rep.foldedCount > 0) parts.push(`folded ${rep.foldedCount}`);
  if (rep.droppedCount > 0) parts.push(`dropped ${rep.droppedCount} unencodable`);
  return parts.length ? `${label}: ${parts.join(", ")} code point(s)` : "";
}

export function setupApp(doc: Document = document): void {
  const visibleInput = el<HTMLTextAreaElement>("visible-text");
  const payloadInput = el<HTMLTextAreaElement>("payload-text");
  const presetSelect = el<HTMLSelectElement>("preset-select");
  const placementSelect = el<HTMLSelectElement>("placement-select");
  const encodedOutput = el<HTMLTextAreaElement>("encoded-output");
  const warningBanner = el<HTMLDivElement>("warning-banner");
  const copyButton = el<HTMLButtonElement>("copy-button");
  const copyStatus = el<HTMLSpanElement>("copy-status");
  const verifyInput = el<HTMLTextAreaElement>("verify-input");
  const verifyOutput = el<HTMLTextAreaElement>("verify-output");
  const verifyExpected = el<HTMLInputElement>("verify-expected");
  const verifyMatch = el<HTMLSpanElement>("verify-match");

  for (const preset of PRESETS) {
    const option = doc.createElement("option");
    option.value = preset.id;
    option.textContent = preset.title;
    presetSelect.appendChild(option);
  }
  const custom = doc.createElement("option");
  custom.value = "";
  custom.textContent = "Custom payload";
  presetSelect.insertBefore(custom, presetSelect.firstChild);
  presetSelect.value = "integrity";
  payloadInput.value = getPreset("integrity").payload_text;

  function reencode(): void {
    try {
      const visibleRep = normalizeForEncoding(visibleInput.value);
      const payloadRep = normalizeForEncoding(payloadInput.value);
      encodedOutput.value = smuggle(
        visibleRep.output,
        payloadRep.output,
        placementSelect.value as Placement,
      );
      const warnings = [
        warningText("visible text", visibleRep),
        warningText("hidden instruction", payloadRep),
      ].filter(Boolean);
      warningBanner.textContent = warnings.join(" — ").replace(/ — /g, "; ");
      warningBanner.hidden = warnings.length === 0;
      warningBanner.className = "banner warn";
    } catch (err) {
      // never fail silently: surface a visible error state
      warningBanner.textContent = `encoding failed: ${String(err)}`;
      warningBanner.hidden = false;
      warningBanner.className = "banner error";
      encodedOutput.value = "";
    }
  }

  function reverify(): void {
    try {
      const result = verify(verifyInput.value);
      verifyOutput.value = result.text;
      const expected = verifyExpected.value;
      if (!expected) {
        verifyMatch.textContent =
          result.dropped > 0 ? `${result.dropped} mangled tag code point(s) dropped` : "";
        verifyMatch.className = "status";
      } else if (result.text === expected) {
        verifyMatch.textContent = "match";
        verifyMatch.className = "status ok";
      } else {
        verifyMatch.textContent = "MISMATCH";
        verifyMatch.className = "status bad";
      }
    } catch (err) {
      verifyOutput.value = "";
      verifyMatch.textContent = `verify failed: ${String(err)}`;
      verifyMatch.className = "status bad";
    }
  }

  let timer: ReturnType<typeof setTimeout> | undefined;
  function debounced(fn: () => void): () => void {
    return () => {
      if (timer !== undefined) clearTimeout(timer);
      timer = setTimeout(fn, DEBOUNCE_MS);
    };
  }

  visibleInput.addEventListener("input", debounced(reencode));
  payloadInput.addEventListener("input", debounced(reencode));
  placementSelect.addEventListener("change", reencode);
  presetSelect.addEventListener("change", () => {
    if (presetSelect.value !== "") {
      payloadInput.value = getPreset(presetSelect.value).payload_text;
    }
    reencode();
  });
  payloadInput.addEventListener("input", () => {
    // typing over a preset makes it a custom payload
    const preset = PRESETS.find((p) => p.id === presetSelect.value);
    if (preset && payloadInput.value !== preset.payload_text) {
      presetSelect.value = "";
    }
  });

  verifyInput.addEventListener("input", debounced(reverify));
  verifyExpected.addEventListener("input", debounced(reverify));

  copyButton.addEventListener("click", async () => {
    reencode();
    const text = encodedOutput.value;
    try {
      if (navigator.clipboard && navigator.clipboard.writeText) {
        await navigator.clipboard.writeText(text);
        // self-check where the platform allows reading back
        if (navigator.clipboard.readText) {
          const back = await navigator.clipboard.readText();
          if (back !== text) {
            copyStatus.textContent = "copied, but clipboard read-back differs!";
            copyStatus.className = "status bad";
            return;
          }
        }
      } else {
        encodedOutput.select();
        doc.execCommand("copy");
      }
      copyStatus.textContent = "copied";
      copyStatus.className = "status ok";
    } catch (err) {
      copyStatus.textContent = `copy failed: ${String(err)}`;
      copyStatus.className = "status bad";
    }
  });

  for (const tab of Array.from(doc.querySelectorAll<HTMLButtonElement>("[data-tab]"))) {
    tab.addEventListener("click", () => {
      for (const other of Array.from(doc.querySelectorAll<HTMLElement>("[data-panel]"))) {
        other.hidden = other.dataset.panel !== tab.dataset.tab;
      }
      for (const b of Array.from(doc.querySelectorAll<HTMLButtonElement>("[data-tab]"))) {
        b.classList.toggle("active", b === tab);
      }
    });
  }

  reencode();
  reverify();
}

if (typeof document !== "undefined" && document.getElementById("visible-text")) {
  setupApp();
}
