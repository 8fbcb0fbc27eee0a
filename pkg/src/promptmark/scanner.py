"""Grading-time directory scan for detection tokens and hidden payloads.

Reports evidence only: a literal-token hit or a residual tag run is a
starting point for a conversation, never a verdict, so there is no score
and no threshold beyond the minimum run length.
"""

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .codec import decode_tags

REPORT_VERSION = 1
EXCERPT_WIDTH = 80  # code points of context around a match
MIN_TAG_RUN = 4     # shorter runs are likely channel-mangling noise
_BINARY_SNIFF_BYTES = 8192

_TAG_RUN_RE = re.compile(r"[\U000E0000-\U000E007F]+")


@dataclass(frozen=True)
class ScanHit:
    file: str
    kind: str  # "literal_token" | "hidden_payload"
    offset: int  # code-point index into the decoded file
    excerpt: str
    decoded: str | None = None  # hidden_payload only


@dataclass
class ScanReport:
    scanned_files: int = 0
    hits: list[ScanHit] = field(default_factory=list)
    errors: list[tuple[str, str]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "version": REPORT_VERSION,
            "scanned_files": self.scanned_files,
            "hits": [
                {"file": h.file, "kind": h.kind, "offset": h.offset,
                 "excerpt": h.excerpt, "decoded": h.decoded}
                for h in self.hits
            ],
            "errors": [{"path": p, "reason": r} for p, r in self.errors],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _excerpt(text: str, start: int, end: int) -> str:
    """Up to EXCERPT_WIDTH code points containing [start, end)."""
    span = end - start
    if span >= EXCERPT_WIDTH:
        return text[start:start + EXCERPT_WIDTH]
    pad = (EXCERPT_WIDTH - span) // 2
    lo = max(0, start - pad)
    return text[lo:lo + EXCERPT_WIDTH]


def _scan_text(path: str, text: str, tokens: list[str]) -> list[ScanHit]:
    hits = []
    for token in tokens:
        at = text.find(token)
        while at != -1:
            hits.append(ScanHit(path, "literal_token", at,
                                _excerpt(text, at, at + len(token))))
            at = text.find(token, at + 1)
    for m in _TAG_RUN_RE.finditer(text):
        if m.end() - m.start() < MIN_TAG_RUN:
            continue
        hits.append(ScanHit(path, "hidden_payload", m.start(),
                            _excerpt(text, m.start(), m.end()),
                            decoded=decode_tags(m.group()).text))
    hits.sort(key=lambda h: (h.offset, h.kind))
    return hits


def scan(root: str | Path, tokens: list[str],
         recursive: bool = True,
         extensions: list[str] | None = None) -> ScanReport:
    """Scan every text file under *root* for tokens and tag runs.

    Read-only; unreadable and binary files are recorded in the errors list
    and the scan continues.  A nonexistent root raises FileNotFoundError.
    Results are deterministically ordered by path, then offset.
    """
    if not tokens:
        raise ValueError("tokens must be nonempty")
    root = Path(root)
    if not root.is_dir():
        raise FileNotFoundError(f"scan root {root} is not a directory")

    pattern = "**/*" if recursive else "*"
    files = sorted(p for p in root.glob(pattern) if p.is_file())
    if extensions is not None:
        allowed = {e if e.startswith(".") else "." + e for e in extensions}
        files = [p for p in files if p.suffix in allowed]

    report = ScanReport()
    for p in files:
        rel = str(p)
        try:
            raw = p.read_bytes()
        except OSError as exc:
            report.errors.append((rel, f"unreadable: {exc}"))
            continue
        if b"\x00" in raw[:_BINARY_SNIFF_BYTES]:
            report.errors.append((rel, "binary file skipped"))
            continue
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError:
            text = raw.decode("utf-8", errors="replace")
            report.errors.append((rel, "invalid UTF-8; bad sequences replaced"))
        report.scanned_files += 1
        report.hits.extend(_scan_text(rel, text, tokens))
    report.hits.sort(key=lambda h: (h.file, h.offset, h.kind))
    return report
