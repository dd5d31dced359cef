import random

import pytest
from hypothesis import given, settings, strategies as st

from onerel.rewriting import (
    Normalization,
    RewriteSystem,
    Rule,
    all_redexes,
    apply_at,
    find_redex,
    from_dict,
    from_json,
    normalize,
    random_normalize,
    to_dict,
    to_json,
)


def smallest_system() -> RewriteSystem:
    # Complete system for the all-ones exponent tuple.
    return RewriteSystem(
        alphabet=frozenset("ab"),
        rules=(Rule("ababab", "b"), Rule("abb", "bab")),
    )


def naive_normalize(system: RewriteSystem, word: str, step_limit: int = 10**6):
    # Reference implementation: full re-scan from position 0 every step.
    steps = 0
    while steps < step_limit:
        hit = find_redex(system, word, 0)
        if hit is None:
            return Normalization(word, steps, True)
        word = apply_at(system, word, *hit)
        steps += 1
    return Normalization(word, steps, find_redex(system, word) is None)


class TestRedexSearch:
    def test_leftmost(self):
        s = smallest_system()
        assert find_redex(s, "ababb") == (2, 1)
        assert find_redex(s, "bb") is None
        assert find_redex(s, "ababab") == (0, 0)

    def test_lowest_rule_index_on_tie(self):
        s = RewriteSystem(frozenset("ab"), (Rule("ab", "b"), Rule("aba", "a")))
        assert find_redex(s, "aba") == (0, 0)

    def test_all_redexes(self):
        s = smallest_system()
        assert all_redexes(s, "abababab") == [(0, 0), (2, 0)]
        assert all_redexes(s, "bb") == []
        assert all_redexes(s, "ababbabb") == [(2, 1), (5, 1)]


class TestNormalize:
    def test_chain(self):
        s = smallest_system()
        r = normalize(s, "ababbab")
        assert r == Normalization("bb", 3, True)

    def test_already_normal(self):
        s = smallest_system()
        assert normalize(s, "b") == Normalization("b", 0, True)
        assert normalize(s, "") == Normalization("", 0, True)

    def test_step_limit(self):
        s = RewriteSystem(frozenset("ab"), (Rule("b", "bb"),))
        r = normalize(s, "b", step_limit=50)
        assert not r.completed
        assert r.steps == 50
        assert r.word == "b" * 51

    @given(st.text(alphabet="ab", max_size=30))
    @settings(max_examples=200)
    def test_window_matches_naive(self, w):
        s = smallest_system()
        assert normalize(s, w) == naive_normalize(s, w)

    @given(st.text(alphabet="ab", max_size=20), st.integers(0, 3))
    def test_random_strategy_same_normal_form(self, w, seed):
        # The sample system is complete, so every strategy must agree.
        s = smallest_system()
        det = normalize(s, w)
        rnd = random_normalize(s, w, random.Random(seed))
        assert det.completed and rnd.completed
        assert det.word == rnd.word


class TestValidation:
    def test_empty_lhs_rejected(self):
        with pytest.raises(ValueError):
            Rule("", "b")

    def test_alphabet_mismatch(self):
        with pytest.raises(ValueError):
            RewriteSystem(frozenset("ab"), (Rule("x", "b"),))

    def test_definitions_checked(self):
        with pytest.raises(ValueError):
            RewriteSystem(frozenset("abx"), (), {"x": "xx"})
        with pytest.raises(ValueError):
            RewriteSystem(frozenset("ab"), (), {"a": "ab"})
        ok = RewriteSystem(frozenset("abx"), (Rule("ab", "x"),), {"x": "ab"})
        assert ok.definitions["x"] == "ab"


class TestSerialization:
    def test_dict_form(self):
        s = smallest_system()
        d = to_dict(s)
        assert d["alphabet"] == ["a", "b"]
        assert d["rules"] == [
            {"lhs": "a b a b a b", "rhs": "b"},
            {"lhs": "a b^2", "rhs": "b a b"},
        ]
        assert from_dict(d) == s

    def test_json_round_trip_bit_exact(self):
        s = RewriteSystem(
            frozenset("abx"),
            (Rule("ab", "x"), Rule("xxx", "b")),
            {"x": "ab"},
            meta={"case": "test", "params": {"p": 1}},
        )
        text = to_json(s)
        assert from_json(text) == s
        assert to_json(from_json(text)) == text
        assert text.endswith("\n")

    def test_meta_absent(self):
        s = smallest_system()
        assert "meta" not in to_dict(s)
        assert from_json(to_json(s)) == s
