import random

import pytest

from promptmark.codec import (
    ALPHABET,
    TAG_BASE,
    NotTagStringError,
    UnnormalizedInputError,
    decode_tags,
    encode_tags,
    project_tags,
    strip_tags,
    verify,
)

ALPHABET_CHARS = [chr(c) for c in sorted(ALPHABET)]


def random_payload(rng, max_len=4096):
    return "".join(rng.choices(ALPHABET_CHARS, k=rng.randrange(max_len + 1)))


def test_alphabet_shape():
    assert len(ALPHABET) == 97
    assert 0x0D not in ALPHABET
    assert 0x09 in ALPHABET and 0x0A in ALPHABET
    assert 0x7F not in ALPHABET


def test_worked_example():
    assert encode_tags("Hi!\n") == "\U000E0048\U000E0069\U000E0021\U000E000A"


@pytest.mark.parametrize("payload,expected", [
    ("", ""),
    (" ", "\U000E0020"),
])
def test_encode_trivial(payload, expected):
    assert encode_tags(payload) == expected


def test_encode_is_shift_by_tag_base():
    payload = "The quick brown fox.\tjumps\n"
    encoded = encode_tags(payload)
    assert len(encoded) == len(payload)
    assert all(ord(t) == ord(c) + TAG_BASE for c, t in zip(payload, encoded))


@pytest.mark.parametrize("bad", ["café", "a\rb", "é", "a\x00b", "—"])
def test_encode_rejects_unnormalized(bad):
    with pytest.raises(UnnormalizedInputError):
        encode_tags(bad)


def test_decode_worked_example():
    assert decode_tags("\U000E0048\U000E0069\U000E0021\U000E000A") == ("Hi!\n", 0)


def test_decode_empty():
    assert decode_tags("") == ("", 0)


def test_decode_drops_non_mirror_with_warning():
    # U+E0001 mirrors to 0x01, outside the alphabet
    assert decode_tags("\U000E0001\U000E0041") == ("A", 1)
    assert decode_tags("\U000E0000\U000E007F") == ("", 2)


def test_decode_rejects_non_tag_codepoints():
    with pytest.raises(NotTagStringError):
        decode_tags("a\U000E0041")


def test_project_tags():
    assert project_tags("plain ascii") == ""
    assert project_tags("a\U000E0041b\U000E0042") == "\U000E0041\U000E0042"


def test_strip_tags():
    assert strip_tags("no tags here") == "no tags here"
    assert strip_tags(encode_tags("secret")) == ""
    assert strip_tags("a\U000E0041b") == "ab"


def test_roundtrip_property():
    rng = random.Random(0xC0DEC)
    for _ in range(500):
        w = random_payload(rng, max_len=512)
        assert decode_tags(encode_tags(w)) == (w, 0)


def test_partition_property():
    rng = random.Random(7)
    pool = ALPHABET_CHARS + [chr(TAG_BASE + c) for c in range(0x80)] + ["é", "你", "\U0001F600"]
    for _ in range(200):
        x = "".join(rng.choices(pool, k=rng.randrange(128)))
        kept, removed = strip_tags(x), project_tags(x)
        assert len(kept) + len(removed) == len(x)
        # interleaving back in original positions reconstructs x
        it_kept, it_removed = iter(kept), iter(removed)
        rebuilt = "".join(
            next(it_removed) if 0xE0000 <= ord(c) <= 0xE007F else next(it_kept)
            for c in x
        )
        assert rebuilt == x


def test_strip_idempotent():
    x = "a\U000E0041b\U000E0042c"
    assert strip_tags(strip_tags(x)) == strip_tags(x)


def test_verify_composes_projection_and_decode():
    doc = "visible " + encode_tags("hidden") + " more"
    assert verify(doc) == ("hidden", 0)


def test_multiple_runs_concatenate():
    doc = encode_tags("ab") + "visible" + encode_tags("cd")
    assert verify(doc).text == "abcd"
