"""Insertion-point computation and watermark assembly.

A watermarked document is visible[:k] + encoded payload + visible[k:].
The split index k is 0-based ("insert before code point k").  Three
placements: start (k = 0), end (k = len, the default, most robust to
truncation by lossy renderers), and mid (the first sentence boundary).
"""

from dataclasses import dataclass
from enum import Enum

from .codec import UnnormalizedInputError, encode_tags, is_encodable

_SENTENCE_END = frozenset(".!?")
_BOUNDARY_FOLLOWERS = frozenset("\t\n")


class Placement(str, Enum):
    START = "start"
    MID = "mid"
    END = "end"


@dataclass(frozen=True)
class WatermarkedDocument:
    content: str
    placement: Placement
    payload_length: int  # code points, pre-encoding


def sentence_boundary(visible: str, followers: frozenset[str] = _BOUNDARY_FOLLOWERS) -> int:
    """Split index just after the first sentence-ending punctuation that is
    immediately followed by tab or line feed; len(visible) if none exists.

    The follower set deliberately excludes the space character, so running
    prose without line breaks degrades to end placement.  Pass
    ``followers=frozenset("\\t\\n ")`` to opt into space as a boundary.
    """
    for j in range(len(visible) - 1):
        if visible[j] in _SENTENCE_END and visible[j + 1] in followers:
            return j + 1
    return len(visible)


def insertion_index(visible: str, placement: Placement) -> int:
    """Split index for the given placement; always in [0, len(visible)]."""
    if placement is Placement.START:
        return 0
    if placement is Placement.END:
        return len(visible)
    return sentence_boundary(visible)


def smuggle(visible: str, payload: str,
            placement: Placement = Placement.END) -> WatermarkedDocument:
    """Embed the payload invisibly into the visible text.

    Both inputs must already be normalized (same contract as encode_tags).
    The result strips back to *visible* exactly and verifies back to
    *payload* exactly.
    """
    if not is_encodable(visible):
        raise UnnormalizedInputError("visible text is not normalized")
    k = insertion_index(visible, placement)
    content = visible[:k] + encode_tags(payload) + visible[k:]
    return WatermarkedDocument(content, placement, len(payload))
