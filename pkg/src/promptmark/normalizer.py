"""Pre-encoding normalization: fold smart typography to ASCII, strip CR,
drop and count everything else.

The fold table handles exactly the categories produced by word processors:
curly quotes, dashes, ellipses, non-breaking/typographic spaces, and
bullets.  Accented letters are NOT transliterated (that would change the
visible words) and zero-width characters are dropped rather than folded
(they have no visible ASCII equivalent).

The table lives in ``data/fold_table.json`` so the web UI and the tests
share one source of truth with this module.
"""

import json
from dataclasses import dataclass, field
from importlib import resources

from .codec import ALPHABET

MAX_DROPPED_SAMPLES = 20

_CR = 0x0D


def _load_fold_table() -> dict[int, str]:
    raw = json.loads(
        resources.files("promptmark").joinpath("data/fold_table.json").read_text("utf-8")
    )
    return {int(k, 16): v for k, v in raw["folds"].items()}


FOLD_TABLE: dict[int, str] = _load_fold_table()


@dataclass
class NormalizationReport:
    output: str
    folded_count: int = 0
    dropped_count: int = 0
    # (offset in the original input, code point), capped
    dropped_samples: list[tuple[int, int]] = field(default_factory=list)


def normalize_for_encoding(text: str) -> NormalizationReport:
    """Reduce arbitrary Unicode to the encodable alphabet.

    Order of operations: fold, then strip carriage returns, then drop and
    count the remaining non-members.  Idempotent: re-normalizing the
    output reports zero folds and zero drops.
    """
    out: list[str] = []
    folded = 0
    dropped = 0
    samples: list[tuple[int, int]] = []
    for i, ch in enumerate(text):
        cp = ord(ch)
        if cp in FOLD_TABLE:
            out.append(FOLD_TABLE[cp])
            folded += 1
        elif cp == _CR:
            continue
        elif cp in ALPHABET:
            out.append(ch)
        else:
            dropped += 1
            if len(samples) < MAX_DROPPED_SAMPLES:
                samples.append((i, cp))
    return NormalizationReport("".join(out), folded, dropped, samples)


def count_unencodable(text: str) -> int:
    """Code points that survive folding and CR-stripping yet cannot encode."""
    return sum(
        1 for ch in text
        if ord(ch) not in FOLD_TABLE and ord(ch) != _CR and ord(ch) not in ALPHABET
    )
