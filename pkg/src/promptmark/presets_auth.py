"""Preset payloads and keyed detection tokens.

The three shipped presets live in ``data/presets.json`` (versioned, shared
with the web UI).  All preset texts are plain encodable ASCII and pass
normalization unchanged.

The keyed-token extension binds a watermark to assignment metadata:
``mint_token`` derives a short token from an HMAC-SHA-256 over a canonical
serialization of the metadata, so a grader can check not just that *a*
watermark is present but that it is the one issued for this course, term,
section, and assignment.  The MAC is truncated to 64 bits (16 hex chars):
enough for a classroom tripwire, short enough to keep the hidden payload
small.  This is a tripwire, not a cryptographic commitment.
"""

import hmac
import json
import re
from dataclasses import dataclass, fields
from hashlib import sha256
from importlib import resources

TOKEN_PREFIX = "SPv1"
MAC_HEX_LEN = 16
MIN_KEY_BYTES = 16

_KEY_ID_RE = re.compile(r"^[A-Za-z0-9_.]+$")
_TOKEN_RE = re.compile(r"^SPv1-([A-Za-z0-9_.]+)-([0-9a-f]{16})$")


class PresetNotFoundError(KeyError):
    pass


class MalformedTokenError(ValueError):
    """Token does not match the SPv1-<key_id>-<16 hex> shape.

    Distinct from a MAC mismatch, which check_token reports as False.
    """


@dataclass(frozen=True)
class Preset:
    id: str
    title: str
    payload_text: str
    detection_token: str | None = None


@dataclass(frozen=True)
class AssignmentMetadata:
    course: str
    term: str
    section: str
    assignment_id: str
    key_id: str

    def __post_init__(self):
        for f in fields(self):
            if not getattr(self, f.name):
                raise ValueError(f"metadata field {f.name!r} must be nonempty")
        if not _KEY_ID_RE.match(self.key_id):
            raise ValueError("key_id must match [A-Za-z0-9_.]+")

    def canonical(self) -> str:
        """Deterministic serialization: sorted name=value lines, LF-joined."""
        pairs = sorted((f.name, getattr(self, f.name)) for f in fields(self))
        return "\n".join(f"{name}={value}" for name, value in pairs)


def _load_presets() -> dict[str, Preset]:
    raw = json.loads(
        resources.files("promptmark").joinpath("data/presets.json").read_text("utf-8")
    )
    return {p["id"]: Preset(**p) for p in raw["presets"]}


_PRESETS = _load_presets()


def list_presets() -> list[Preset]:
    return list(_PRESETS.values())


def get_preset(preset_id: str) -> Preset:
    try:
        return _PRESETS[preset_id]
    except KeyError:
        raise PresetNotFoundError(
            f"unknown preset {preset_id!r}; known: {', '.join(_PRESETS)}"
        ) from None


def mint_token(metadata: AssignmentMetadata, secret_key: bytes) -> str:
    """Derive the detection token bound to *metadata* under *secret_key*."""
    if len(secret_key) < MIN_KEY_BYTES:
        raise ValueError(f"secret key must be at least {MIN_KEY_BYTES} bytes")
    mac = hmac.new(secret_key, metadata.canonical().encode("utf-8"), sha256)
    return f"{TOKEN_PREFIX}-{metadata.key_id}-{mac.hexdigest()[:MAC_HEX_LEN]}"


def check_token(token: str, metadata: AssignmentMetadata, secret_key: bytes) -> bool:
    """True iff *token* was minted for *metadata* under *secret_key*.

    Raises MalformedTokenError for syntactically invalid tokens; a wrong
    key_id or MAC is an ordinary False.  MAC comparison is constant-time.
    """
    m = _TOKEN_RE.match(token)
    if m is None:
        raise MalformedTokenError(f"token does not match {TOKEN_PREFIX}-<key_id>-<hex> form")
    key_id, mac_hex = m.groups()
    if key_id != metadata.key_id:
        return False
    expected = mint_token(metadata, secret_key).rsplit("-", 1)[1]
    return hmac.compare_digest(mac_hex, expected)
