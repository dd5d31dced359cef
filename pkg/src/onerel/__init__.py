"""Finite complete rewriting systems for one-relator monoids of the form
Mon<a,b | a^alpha b^beta a^gamma b^delta a^epsilon b^phi = b>, together with
machine verification of completeness and of presentation equivalence.
"""

from onerel.words import (
    LETTER_ORDER,
    RelatorExponents,
    WordSyntaxError,
    blocks,
    border_lengths,
    format_word,
    parse_word,
    relator_word,
)

__all__ = [
    "LETTER_ORDER",
    "RelatorExponents",
    "WordSyntaxError",
    "blocks",
    "border_lengths",
    "format_word",
    "parse_word",
    "relator_word",
]

__version__ = "0.1.0"
