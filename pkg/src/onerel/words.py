"""Words over small alphabets, exponent notation, and border computation.

Words are plain Python strings over single-letter alphabets such as
``{"a", "b"}`` or ``{"a", "b", "x", "y", "z"}``.  The empty string is the
identity.  A human-readable exponent notation is supported for I/O:
``"a^2 b a^3"`` denotes ``"aabaaa"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

# Fixed display order for letters in alphabets and interpretations.
LETTER_ORDER = "abxyz"

_TOKEN_RE = re.compile(r"([a-z])(?:\^(\d+))?")


class WordSyntaxError(ValueError):
    """Raised when a word literal cannot be parsed."""


def parse_word(text: str, alphabet: frozenset[str] | None = None) -> str:
    """Parse a word literal into a flat string.

    Accepts both flat strings (``"aabaaa"``) and exponent notation
    (``"a^2 b a^3"``).  Whitespace separates tokens but is otherwise
    ignored, so ``"a^2b"`` and ``"a^2 b"`` parse the same way.  ``""``
    parses to the empty word.  If *alphabet* is given, letters outside
    it are rejected.
    """
    out: list[str] = []
    pos = 0
    stripped = text.strip()
    while pos < len(stripped):
        if stripped[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(stripped, pos)
        if m is None:
            raise WordSyntaxError(f"bad word literal at offset {pos}: {text!r}")
        letter, exp = m.group(1), m.group(2)
        if alphabet is not None and letter not in alphabet:
            raise WordSyntaxError(f"letter {letter!r} not in alphabet: {text!r}")
        n = 1 if exp is None else int(exp)
        if exp is not None and n < 1:
            raise WordSyntaxError(f"exponent must be positive: {text!r}")
        out.append(letter * n)
        pos = m.end()
    return "".join(out)


def format_word(word: str) -> str:
    """Render a flat word in canonical exponent notation.

    Maximal runs of a letter become ``letter^n`` for ``n >= 2`` and a bare
    letter for ``n == 1``, joined by single spaces.  The empty word renders
    as ``""``.
    """
    return " ".join(
        letter if count == 1 else f"{letter}^{count}"
        for letter, count in blocks(word)
    )


def blocks(word: str) -> list[tuple[str, int]]:
    """Split a word into maximal runs: ``"aabaaa"`` -> ``[("a",2),("b",1),("a",3)]``."""
    out: list[tuple[str, int]] = []
    for ch in word:
        if out and out[-1][0] == ch:
            out[-1] = (ch, out[-1][1] + 1)
        else:
            out.append((ch, 1))
    return out


def border_lengths(word: str) -> set[int]:
    """Lengths of proper borders of *word*.

    A border is a string that is simultaneously a proper prefix and a
    proper suffix.  Only nonempty borders are reported, so the result is
    a subset of ``{1, ..., len(word)-1}``.  Computed via the failure
    function of Knuth-Morris-Pratt.
    """
    n = len(word)
    if n == 0:
        return set()
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k > 0 and word[i] != word[k]:
            k = fail[k - 1]
        if word[i] == word[k]:
            k += 1
        fail[i] = k
    out: set[int] = set()
    k = fail[n - 1]
    while k > 0:
        out.add(k)
        k = fail[k - 1]
    return out


@dataclass(frozen=True)
class RelatorExponents:
    """The six positive exponents (alpha, beta, gamma, delta, epsilon, phi)
    defining the relation a^alpha b^beta a^gamma b^delta a^epsilon b^phi = b.
    """

    alpha: int
    beta: int
    gamma: int
    delta: int
    epsilon: int
    phi: int

    def __post_init__(self) -> None:
        for name, value in self.as_dict().items():
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.alpha, self.beta, self.gamma, self.delta, self.epsilon, self.phi)

    def as_dict(self) -> dict[str, int]:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma": self.gamma,
            "delta": self.delta,
            "epsilon": self.epsilon,
            "phi": self.phi,
        }


def relator_word(e: RelatorExponents) -> str:
    """The left-hand side a^alpha b^beta a^gamma b^delta a^epsilon b^phi."""
    return (
        "a" * e.alpha + "b" * e.beta + "a" * e.gamma
        + "b" * e.delta + "a" * e.epsilon + "b" * e.phi
    )
