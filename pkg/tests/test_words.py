import pytest
from hypothesis import given, strategies as st

from onerel.words import (
    RelatorExponents,
    WordSyntaxError,
    blocks,
    border_lengths,
    format_word,
    parse_word,
    relator_word,
)


def brute_border_lengths(word: str) -> set[int]:
    # Independent oracle: direct definition, quadratic.
    return {
        k
        for k in range(1, len(word))
        if word[:k] == word[len(word) - k :]
    }


class TestParseFormat:
    def test_flat(self):
        assert parse_word("aabaaa") == "aabaaa"

    def test_exponents(self):
        assert parse_word("a^2 b a^3") == "aabaaa"

    def test_no_spaces(self):
        assert parse_word("a^2b") == "aab"

    def test_exponent_one_explicit(self):
        assert parse_word("a^1 b^1") == "ab"

    def test_empty(self):
        assert parse_word("") == ""
        assert parse_word("   ") == ""

    def test_format_basic(self):
        assert format_word("aabaaa") == "a^2 b a^3"
        assert format_word("ab") == "a b"
        assert format_word("") == ""

    def test_bad_literal(self):
        with pytest.raises(WordSyntaxError):
            parse_word("a^")
        with pytest.raises(WordSyntaxError):
            parse_word("a^0")
        with pytest.raises(WordSyntaxError):
            parse_word("A b")

    def test_alphabet_restriction(self):
        assert parse_word("x b", alphabet=frozenset("abx")) == "xb"
        with pytest.raises(WordSyntaxError):
            parse_word("x b", alphabet=frozenset("ab"))

    @given(st.text(alphabet="abxyz", max_size=40))
    def test_round_trip(self, w):
        assert parse_word(format_word(w)) == w


class TestBlocks:
    def test_basic(self):
        assert blocks("aabaaa") == [("a", 2), ("b", 1), ("a", 3)]
        assert blocks("") == []
        assert blocks("b") == [("b", 1)]

    @given(st.text(alphabet="ab", max_size=40))
    def test_reassembly(self, w):
        assert "".join(c * n for c, n in blocks(w)) == w
        # maximality: adjacent blocks use different letters
        bs = blocks(w)
        assert all(bs[i][0] != bs[i + 1][0] for i in range(len(bs) - 1))


class TestBorders:
    def test_frozen_examples(self):
        assert border_lengths("ababab") == {2, 4}
        assert border_lengths("abbab") == {2}
        assert border_lengths("aaaa") == {1, 2, 3}
        assert border_lengths("ab") == set()
        assert border_lengths("") == set()
        assert border_lengths("a") == set()

    @given(st.text(alphabet="ab", max_size=60))
    def test_matches_brute_force(self, w):
        assert border_lengths(w) == brute_border_lengths(w)

    @given(
        st.tuples(*[st.integers(min_value=1, max_value=4)] * 6)
    )
    def test_relator_borders_match_brute_force(self, exps):
        w = relator_word(RelatorExponents(*exps))
        assert border_lengths(w) == brute_border_lengths(w)


class TestRelator:
    def test_word(self):
        e = RelatorExponents(1, 1, 1, 1, 1, 1)
        assert relator_word(e) == "ababab"
        e2 = RelatorExponents(2, 1, 3, 1, 5, 1)
        assert relator_word(e2) == "aab" + "aaab" + "aaaaab"

    def test_validation(self):
        with pytest.raises(ValueError):
            RelatorExponents(0, 1, 1, 1, 1, 1)
        with pytest.raises(ValueError):
            RelatorExponents(1, 1, 1, 1, 1, -2)

    def test_round_trip_dict(self):
        e = RelatorExponents(1, 2, 3, 4, 5, 6)
        assert RelatorExponents(**e.as_dict()) == e
        assert e.as_tuple() == (1, 2, 3, 4, 5, 6)
