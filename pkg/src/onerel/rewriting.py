"""String rewriting systems: rules, deterministic and random normalization,
and a canonical JSON serialization.

The deterministic strategy always rewrites at the leftmost matching
position, breaking ties by lowest rule index.  Normalization never raises
on long reductions; it returns a result whose ``completed`` flag records
whether a normal form was reached within the step limit.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from onerel.words import LETTER_ORDER, format_word, parse_word

DEFAULT_STEP_LIMIT = 10**6


@dataclass(frozen=True)
class Rule:
    lhs: str
    rhs: str

    def __post_init__(self) -> None:
        if not self.lhs:
            raise ValueError("rule left-hand side must be nonempty")


@dataclass
class RewriteSystem:
    """A finite string rewriting system over a single-letter alphabet.

    ``definitions`` maps each auxiliary letter (anything outside {a, b})
    to the {a, b}-word it abbreviates.  ``meta`` is free-form metadata
    preserved by serialization; it never affects rewriting.
    """

    alphabet: frozenset[str]
    rules: tuple[Rule, ...]
    definitions: dict[str, str] = field(default_factory=dict)
    meta: dict | None = None

    def __post_init__(self) -> None:
        if isinstance(self.rules, list):
            self.rules = tuple(self.rules)
        for letter in self.alphabet:
            if len(letter) != 1 or letter not in LETTER_ORDER:
                raise ValueError(f"unsupported alphabet letter {letter!r}")
        for rule in self.rules:
            for w in (rule.lhs, rule.rhs):
                bad = set(w) - self.alphabet
                if bad:
                    raise ValueError(f"rule uses letters outside alphabet: {sorted(bad)}")
        for name, body in self.definitions.items():
            if name in "ab" or name not in self.alphabet:
                raise ValueError(f"bad defined letter {name!r}")
            if set(body) - {"a", "b"}:
                raise ValueError(f"definition of {name!r} must be over {{a, b}}")

    @property
    def max_lhs_len(self) -> int:
        return max((len(r.lhs) for r in self.rules), default=0)


@dataclass(frozen=True)
class Normalization:
    word: str
    steps: int
    completed: bool


def find_redex(system: RewriteSystem, word: str, start: int = 0) -> tuple[int, int] | None:
    """Leftmost redex at position >= start, as ``(position, rule_index)``.

    Ties at the same position go to the lowest rule index.
    """
    best: tuple[int, int] | None = None
    for idx, rule in enumerate(system.rules):
        pos = word.find(rule.lhs, start)
        if pos >= 0 and (best is None or pos < best[0]):
            best = (pos, idx)
    return best


def all_redexes(system: RewriteSystem, word: str) -> list[tuple[int, int]]:
    """Every ``(position, rule_index)`` where some rule matches, sorted."""
    out: list[tuple[int, int]] = []
    for idx, rule in enumerate(system.rules):
        pos = word.find(rule.lhs)
        while pos >= 0:
            out.append((pos, idx))
            pos = word.find(rule.lhs, pos + 1)
    out.sort()
    return out


def apply_at(system: RewriteSystem, word: str, pos: int, rule_index: int) -> str:
    rule = system.rules[rule_index]
    assert word[pos : pos + len(rule.lhs)] == rule.lhs
    return word[:pos] + rule.rhs + word[pos + len(rule.lhs) :]


def normalize(
    system: RewriteSystem,
    word: str,
    step_limit: int = DEFAULT_STEP_LIMIT,
) -> Normalization:
    """Rewrite *word* to normal form under the deterministic strategy.

    Returns after at most *step_limit* steps; ``completed`` is False when
    the limit was hit with the word still reducible.
    """
    steps = 0
    # Positions below `clean` are known not to start a redex.  A rewrite at
    # position p only invalidates that knowledge from p - max_lhs_len + 1 on.
    clean = 0
    max_len = system.max_lhs_len
    while steps < step_limit:
        hit = find_redex(system, word, clean)
        if hit is None:
            return Normalization(word, steps, True)
        pos, idx = hit
        word = apply_at(system, word, pos, idx)
        clean = max(0, pos - max_len + 1)
        steps += 1
    done = find_redex(system, word, clean) is None
    return Normalization(word, steps, done)


def random_normalize(
    system: RewriteSystem,
    word: str,
    rng: random.Random,
    step_limit: int = DEFAULT_STEP_LIMIT,
) -> Normalization:
    """Rewrite *word* choosing a uniformly random redex at every step."""
    steps = 0
    while steps < step_limit:
        redexes = all_redexes(system, word)
        if not redexes:
            return Normalization(word, steps, True)
        pos, idx = rng.choice(redexes)
        word = apply_at(system, word, pos, idx)
        steps += 1
    return Normalization(word, steps, not all_redexes(system, word))


def to_dict(system: RewriteSystem) -> dict:
    """Plain-data form of a system, with words in exponent notation."""
    d: dict = {
        "alphabet": sorted(system.alphabet, key=LETTER_ORDER.index),
        "definitions": {
            name: format_word(system.definitions[name])
            for name in sorted(system.definitions, key=LETTER_ORDER.index)
        },
        "rules": [
            {"lhs": format_word(r.lhs), "rhs": format_word(r.rhs)}
            for r in system.rules
        ],
    }
    if system.meta is not None:
        d["meta"] = system.meta
    return d


def from_dict(d: dict) -> RewriteSystem:
    alphabet = frozenset(d["alphabet"])
    rules = tuple(
        Rule(parse_word(r["lhs"], alphabet), parse_word(r["rhs"], alphabet))
        for r in d["rules"]
    )
    definitions = {
        name: parse_word(body) for name, body in d.get("definitions", {}).items()
    }
    return RewriteSystem(alphabet, rules, definitions, d.get("meta"))


def to_json(system: RewriteSystem) -> str:
    """Canonical JSON text: sorted keys, two-space indent, newline-terminated."""
    return json.dumps(to_dict(system), sort_keys=True, indent=2) + "\n"


def from_json(text: str) -> RewriteSystem:
    return from_dict(json.loads(text))
