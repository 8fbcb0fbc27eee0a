import random

import pytest

from promptmark.codec import ALPHABET, encode_tags
from promptmark.normalizer import (
    FOLD_TABLE,
    count_unencodable,
    normalize_for_encoding,
)


def test_smart_typography_folds():
    rep = normalize_for_encoding("don’t — wait…")
    assert rep.output == "don't - wait..."
    assert rep.folded_count == 3
    assert rep.dropped_count == 0


def test_members_pass_through():
    rep = normalize_for_encoding("plain\ttext\n")
    assert rep.output == "plain\ttext\n"
    assert rep.folded_count == 0
    assert rep.dropped_count == 0


def test_unencodable_dropped_and_counted():
    rep = normalize_for_encoding("café 你")
    assert rep.output == "caf "
    assert rep.dropped_count == 2
    assert rep.dropped_samples == [(3, 0xE9), (5, 0x4F60)]


def test_cr_stripped_not_counted():
    rep = normalize_for_encoding("a\rb\r\n")
    assert rep.output == "ab\n"
    assert rep.dropped_count == 0


@pytest.mark.parametrize("text,expected", [
    ("abc", 0),
    ("éé", 2),
    ("\r\r\n", 0),
])
def test_count_unencodable(text, expected):
    assert count_unencodable(text) == expected
    assert normalize_for_encoding(text).dropped_count == expected


def test_quotes_dashes_spaces_bullets():
    rep = normalize_for_encoding("“x” ‘y’ a–b   • item")
    assert rep.output == '"x" \'y\' a-b   - item'
    assert rep.dropped_count == 0


def test_zero_width_dropped_not_folded():
    for zw in ("\u200b", "\u200c", "\u200d", "\ufeff"):
        rep = normalize_for_encoding(f"a{zw}b")
        assert rep.output == "ab"
        assert rep.dropped_count == 1


def test_no_transliteration_of_accents():
    assert normalize_for_encoding("é").output == ""


def test_fold_outputs_are_encodable():
    for cp, repl in FOLD_TABLE.items():
        assert all(ord(c) in ALPHABET for c in repl), hex(cp)


def test_dropped_samples_capped_at_20():
    rep = normalize_for_encoding("é" * 50)
    assert rep.dropped_count == 50
    assert len(rep.dropped_samples) == 20


def test_idempotence_random():
    rng = random.Random(42)
    for _ in range(500):
        s = "".join(chr(rng.randrange(0x20, 0x3000)) for _ in range(rng.randrange(64)))
        once = normalize_for_encoding(s)
        twice = normalize_for_encoding(once.output)
        assert twice.output == once.output
        assert twice.folded_count == 0
        assert twice.dropped_count == 0
        encode_tags(once.output)  # must not raise
