from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibcube.numeric import fibonacci, lucas
from fibcube.words import (
    BitWord,
    SuffixCase,
    WordClass,
    enumerate_bits,
    enumerate_words,
    is_fibonacci,
    is_lucas,
    suffix_class,
)

W = BitWord.from_string


def fib_str(s: str) -> bool:
    """Independent string oracle."""
    return "11" not in s


def lucas_str(s: str) -> bool:
    return fib_str(s) and not (s and s[0] == "1" and s[-1] == "1")


def brute_words(n: int, pred) -> list[str]:
    return ["".join(p) for p in product("01", repeat=n) if pred("".join(p))]


def test_is_fibonacci_examples():
    assert is_fibonacci(W("0101"))
    assert not is_fibonacci(W("0110"))
    assert is_fibonacci(W(""))


def test_is_lucas_examples():
    assert is_lucas(W("1010"))
    assert not is_lucas(W("1001"))
    assert not is_lucas(W("1"))
    assert is_lucas(W("0"))


def test_enumerate_small_cases():
    assert [str(w) for w in enumerate_words(3, WordClass.FIBONACCI)] == ["000", "001", "010", "100", "101"]
    assert [str(w) for w in enumerate_words(3, WordClass.LUCAS)] == ["000", "001", "010", "100"]
    assert [str(w) for w in enumerate_words(0, WordClass.FIBONACCI)] == [""]
    assert [str(w) for w in enumerate_words(2, WordClass.UNRESTRICTED)] == ["00", "01", "10", "11"]


def test_enumeration_counts_match_closed_forms():
    for n in range(21):
        assert len(enumerate_bits(n, WordClass.FIBONACCI)) == fibonacci(n + 2)
        assert len(enumerate_bits(n, WordClass.UNRESTRICTED)) == 2**n
    for n in range(1, 21):
        assert len(enumerate_bits(n, WordClass.LUCAS)) == lucas(n)


def test_enumeration_matches_brute_force_in_order():
    for n in range(13):
        assert [str(w) for w in enumerate_words(n, WordClass.FIBONACCI)] == brute_words(n, fib_str)
        assert [str(w) for w in enumerate_words(n, WordClass.LUCAS)] == brute_words(n, lucas_str)


def test_enumeration_is_lexicographic():
    for n in range(2, 16):
        ws = [str(w) for w in enumerate_words(n, WordClass.FIBONACCI)]
        assert ws == sorted(ws)


def test_lucas_is_fibonacci_minus_wraparound():
    for n in range(1, 21):
        fib = enumerate_words(n, WordClass.FIBONACCI)
        luc = set(enumerate_words(n, WordClass.LUCAS))
        expected = {w for w in fib if not (w.bit(1) == 1 and w.bit(n) == 1)}
        assert luc == expected


def test_suffix_class_examples():
    assert suffix_class(W("0100")) == (SuffixCase.ENDS_00, W("01"))
    assert suffix_class(W("010")) == (SuffixCase.ENDS_10, W("01"))
    assert suffix_class(W("001")) == (SuffixCase.ENDS_01, W("00"))


def test_suffix_class_rejects_short_words():
    with pytest.raises(ValueError):
        suffix_class(W("0"))
    with pytest.raises(ValueError):
        suffix_class(W(""))


def test_suffix_class_rejects_adjacent_ones():
    with pytest.raises(ValueError):
        suffix_class(W("011"))


def test_suffix_classes_partition_words():
    # every word falls in exactly one case and the parent is the stripped word
    for n in range(2, 21):
        seen = {case: 0 for case in SuffixCase}
        for w in enumerate_words(n, WordClass.FIBONACCI):
            case, parent = suffix_class(w)
            seen[case] += 1
            s = str(w)
            if case is SuffixCase.ENDS_00:
                assert s.endswith("00") and str(parent) == s[:-2]
            elif case is SuffixCase.ENDS_10:
                assert s.endswith("10") and str(parent) == s[:-1]
            else:
                assert s.endswith("01") and str(parent) == s[:-1]
            assert is_fibonacci(parent)
        assert sum(seen.values()) == fibonacci(n + 2)


def test_bitword_accessors():
    w = W("0110")
    assert (w.n, w.bits) == (4, 0b0110)
    assert [w.bit(i) for i in (1, 2, 3, 4)] == [0, 1, 1, 0]
    assert str(w.flip(1)) == "1110"
    assert str(w.flip(4)) == "0111"
    assert w.hamming(W("0101")) == 2
    assert str(W("10").concat(W("01"))) == "1001"
    assert W("").concat(W("1")) == W("1")


def test_bitword_validation():
    with pytest.raises(ValueError):
        BitWord(-1, 0)
    with pytest.raises(ValueError):
        BitWord(2, 4)
    with pytest.raises(ValueError):
        W("01").bit(3)
    with pytest.raises(ValueError):
        W("01").hamming(W("011"))


def test_bitword_ordering_is_lexicographic_for_equal_lengths():
    assert W("001") < W("010") < W("100")


@given(st.text(alphabet="01", max_size=40))
def test_predicates_match_string_oracle(s):
    w = W(s)
    assert is_fibonacci(w) == fib_str(s)
    assert is_lucas(w) == lucas_str(s)
    assert str(w) == s


@given(st.text(alphabet="01", min_size=2, max_size=40).filter(lambda s: "11" not in s))
def test_suffix_strip_round_trip(s):
    case, parent = suffix_class(W(s))
    suffix = {SuffixCase.ENDS_00: "00", SuffixCase.ENDS_10: "0", SuffixCase.ENDS_01: "1"}[case]
    assert str(parent) + suffix == s
