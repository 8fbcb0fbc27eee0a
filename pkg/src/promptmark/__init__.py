"""Invisible-ink watermarking for assignment prompts.

Embeds, recovers, and verifies printable-ASCII payloads inside visible
text using the deprecated Unicode Tags block, plus a channel-pipeline
simulator and a submission scanner for the grading workflow.
"""

from .codec import (
    DecodeResult,
    NotTagStringError,
    UnnormalizedInputError,
    decode_tags,
    encode_tags,
    project_tags,
    strip_tags,
    verify,
)
from .normalizer import NormalizationReport, count_unencodable, normalize_for_encoding
from .placement import Placement, WatermarkedDocument, insertion_index, sentence_boundary, smuggle
from .presets_auth import (
    AssignmentMetadata,
    MalformedTokenError,
    Preset,
    PresetNotFoundError,
    check_token,
    get_preset,
    list_presets,
    mint_token,
)

__version__ = "0.1.0"

__all__ = [
    "AssignmentMetadata",
    "DecodeResult",
    "MalformedTokenError",
    "NormalizationReport",
    "NotTagStringError",
    "Placement",
    "Preset",
    "PresetNotFoundError",
    "UnnormalizedInputError",
    "WatermarkedDocument",
    "check_token",
    "count_unencodable",
    "decode_tags",
    "encode_tags",
    "get_preset",
    "insertion_index",
    "list_presets",
    "mint_token",
    "normalize_for_encoding",
    "project_tags",
    "sentence_boundary",
    "smuggle",
    "strip_tags",
    "verify",
]
