"""Bijection between encodable ASCII and the Unicode Tags block.

The encodable alphabet is the 95 printable ASCII code points (0x20-0x7E)
plus horizontal tab and line feed.  Each member maps to its mirror in the
deprecated Tags block by adding 0xE0000; the mirror renders no glyph in
common fonts, so a mirrored string is invisible when interleaved with
ordinary text.

Everything here operates on Unicode scalar values, never on 8-bit or
16-bit code units: the Tags block lies outside the Basic Multilingual
Plane and unit-level slicing would corrupt it.  Note that while encoding
preserves length in code points, each tag code point costs 4 bytes in
UTF-8 where the original ASCII character cost 1.
"""

import re
from typing import NamedTuple

TAG_BASE = 0xE0000
TAG_RANGE_END = 0xE007F  # inclusive

# Printable ASCII plus tab and line feed; 97 members.  CR is deliberately
# absent (it is stripped by normalization, never encoded).
ALPHABET = frozenset(range(0x20, 0x7F)) | {0x09, 0x0A}
TAG_MIRROR = frozenset(c + TAG_BASE for c in ALPHABET)

_ENCODE_TABLE = {c: c + TAG_BASE for c in ALPHABET}
# Non-mirror tag code points map to None (deleted on translate).
_DECODE_TABLE = {t: t - TAG_BASE if t in TAG_MIRROR else None
                 for t in range(TAG_BASE, TAG_RANGE_END + 1)}

_NOT_ENCODABLE_RE = re.compile(r"[^\x20-\x7E\t\n]")
_NOT_TAG_RE = re.compile(r"[^\U000E0000-\U000E007F]")
_TAG_CHAR_RE = re.compile(r"[\U000E0000-\U000E007F]")


class UnnormalizedInputError(ValueError):
    """Input contains code points outside the encodable alphabet.

    Normalization is a separate, explicit step; the codec never folds or
    drops silently.
    """


class NotTagStringError(ValueError):
    """Input to the decoder contains code points outside the Tags block."""


class DecodeResult(NamedTuple):
    text: str
    dropped: int  # tag code points with no mirror in the alphabet


def is_encodable(text: str) -> bool:
    """True if every code point of *text* is in the encodable alphabet."""
    return _NOT_ENCODABLE_RE.search(text) is None


def encode_tags(payload: str) -> str:
    """Mirror an encodable-ASCII payload into the Tags block.

    Length-preserving in code points; output[i] == payload[i] + 0xE0000.
    Raises UnnormalizedInputError on any code point outside the alphabet.
    """
    if not is_encodable(payload):
        bad = _NOT_ENCODABLE_RE.search(payload)
        raise UnnormalizedInputError(
            "unnormalized input: U+%04X at offset %d is not encodable; "
            "run normalize_for_encoding first" % (ord(bad.group()), bad.start())
        )
    return payload.translate(_ENCODE_TABLE)


def decode_tags(tags: str) -> DecodeResult:
    """Mirror a tag string back to ASCII.

    Tag-block code points whose mirror falls outside the alphabet (for
    example U+E0001) are dropped and counted, so channel-mangled input
    degrades gracefully.  Code points outside the Tags block are rejected
    with NotTagStringError.
    """
    bad = _NOT_TAG_RE.search(tags)
    if bad is not None:
        raise NotTagStringError(
            "not a tag string: U+%04X at offset %d is outside the Tags block"
            % (ord(bad.group()), bad.start())
        )
    text = tags.translate(_DECODE_TABLE)
    return DecodeResult(text, len(tags) - len(text))


def project_tags(text: str) -> str:
    """Keep only Tags-block code points, order preserved.

    All tag runs in the document are concatenated; multi-run detection is
    the scanner's job, not the codec's.
    """
    return _NOT_TAG_RE.sub("", text)


def strip_tags(text: str) -> str:
    """Remove every Tags-block code point; complement of project_tags."""
    return _TAG_CHAR_RE.sub("", text)


def verify(text: str) -> DecodeResult:
    """Recover the hidden payload from an arbitrary document."""
    return decode_tags(project_tags(text))
