"""Checks that a rewriting system presents the intended one-relator monoid.

The monoid is Mon<a, b | relator = b>.  Two words are equal iff one can be
turned into the other by repeatedly replacing a factor equal to the relator
with the single letter b, or vice versa.  This module provides:

* a bounded bidirectional search deciding such equalities with a
  replayable witness chain,
* per-rule soundness (each rule, after expanding auxiliary letters, is an
  equality of the monoid),
* derivability (the defining relation and the auxiliary definitions hold
  inside the rewriting system),
* a brute-force cross-check of the word problem on all short words.
"""

from __future__ import annotations

import itertools
from collections import defaultdict, deque
from dataclasses import dataclass, field

from onerel.rewriting import (
    DEFAULT_STEP_LIMIT,
    RewriteSystem,
    find_redex,
    normalize,
)

DEFAULT_DEPTH_LIMIT = 20
DEFAULT_LENGTH_SLACK = 24
DEFAULT_NODE_CAP = 2_000_000
DEFAULT_CLOSURE_BUDGET = 100_000


@dataclass(frozen=True)
class Presentation:
    """The one-relator presentation Mon<a, b | relator = b>."""

    relator: str

    def __post_init__(self) -> None:
        if set(self.relator) - {"a", "b"}:
            raise ValueError("relator must be a word over {a, b}")
        if len(self.relator) < 2 or not self.relator.endswith("b"):
            raise ValueError("relator must have length >= 2 and end in b")


def expand(word: str, definitions: dict[str, str]) -> str:
    """Substitute auxiliary letters by their {a, b}-definitions."""
    out: list[str] = []
    for ch in word:
        if ch in ("a", "b"):
            out.append(ch)
        elif ch in definitions:
            out.append(definitions[ch])
        else:
            raise ValueError(f"undefined auxiliary letter {ch!r}")
    return "".join(out)


def relation_neighbors(
    word: str, relator: str, length_limit: int | None = None
) -> list[tuple[str, tuple[int, str]]]:
    """Single relation applications from *word*.

    Each result is ``(new_word, (position, kind))`` with kind
    ``"contract"`` (relator replaced by b at position) or ``"expand"``
    (b replaced by relator).  Expansions are suppressed when they would
    exceed *length_limit*.
    """
    out: list[tuple[str, tuple[int, str]]] = []
    start = 0
    while True:
        pos = word.find(relator, start)
        if pos < 0:
            break
        out.append((word[:pos] + "b" + word[pos + len(relator) :], (pos, "contract")))
        start = pos + 1
    if length_limit is None or len(word) + len(relator) - 1 <= length_limit:
        for pos, ch in enumerate(word):
            if ch == "b":
                out.append((word[:pos] + relator + word[pos + 1 :], (pos, "expand")))
    return out


def apply_relation_move(word: str, move: tuple[int, str], relator: str) -> str:
    """Replay one recorded step; raises if the move does not fit."""
    pos, kind = move
    if kind == "contract":
        if word[pos : pos + len(relator)] != relator:
            raise ValueError(f"no relator occurrence at {pos} in {word!r}")
        return word[:pos] + "b" + word[pos + len(relator) :]
    if kind == "expand":
        if pos >= len(word) or word[pos] != "b":
            raise ValueError(f"no b at {pos} in {word!r}")
        return word[:pos] + relator + word[pos + 1 :]
    raise ValueError(f"unknown move kind {kind!r}")


@dataclass(frozen=True)
class EqualityVerdict:
    """Outcome of a bounded equality search.

    When proved, ``witness`` is the full chain of words and ``moves[i]``
    transforms ``witness[i]`` into ``witness[i+1]``; the chain replays
    exactly.  Otherwise ``reason`` says which bound gave out.
    """

    proved: bool
    depth: int | None = None
    witness: tuple[str, ...] | None = None
    moves: tuple[tuple[int, str], ...] | None = None
    reason: str = ""

    @property
    def status(self) -> str:
        return "proved" if self.proved else "unknown"


def _chain_to(seen: dict[str, tuple | None], word: str) -> tuple[list[str], list]:
    """Walk parent pointers back to the search root."""
    words = [word]
    moves: list[tuple[int, str]] = []
    while seen[words[-1]] is not None:
        prev, move = seen[words[-1]]
        words.append(prev)
        moves.append(move)
    words.reverse()
    moves.reverse()
    return words, moves


_INVERSE = {"contract": "expand", "expand": "contract"}


def bfs_equal(
    u: str,
    v: str,
    presentation: Presentation,
    depth_limit: int = DEFAULT_DEPTH_LIMIT,
    length_limit: int | None = None,
    node_cap: int = DEFAULT_NODE_CAP,
) -> EqualityVerdict:
    """Bidirectional breadth-first equality search between {a, b}-words.

    Explores full levels alternately from both endpoints, preferring the
    smaller frontier, until the explored balls meet, the combined depth
    budget is spent, or a cap trips.  Any meeting found within the bounds
    is returned with its replayable chain; absence of a meeting is only
    ever reported as unknown.
    """
    relator = presentation.relator
    for w in (u, v):
        if set(w) - {"a", "b"}:
            raise ValueError("equality search expects words over {a, b}")
    if length_limit is None:
        # leave room for two stacked relator expansions: chains between
        # words that both contain compressed relator-sized blocks routinely
        # climb that high before contracting
        slack = max(DEFAULT_LENGTH_SLACK, 2 * (len(relator) - 1))
        length_limit = max(len(u), len(v), len(relator)) + slack
    if u == v:
        return EqualityVerdict(True, 0, (u,), ())

    seen: tuple[dict, dict] = ({u: None}, {v: None})
    frontier: list[list[str]] = [[u], [v]]
    depths = [0, 0]
    meet: str | None = None

    while meet is None:
        if depths[0] + depths[1] >= depth_limit:
            return EqualityVerdict(False, reason="depth limit")
        if not frontier[0] and not frontier[1]:
            return EqualityVerdict(False, reason="reachable sets exhausted within bounds")
        if frontier[0] and (not frontier[1] or len(frontier[0]) <= len(frontier[1])):
            side = 0
        else:
            side = 1
        nxt: list[str] = []
        for w in frontier[side]:
            for nw, move in relation_neighbors(w, relator, length_limit):
                if nw in seen[side]:
                    continue
                if len(seen[0]) + len(seen[1]) >= node_cap:
                    return EqualityVerdict(False, reason="node cap")
                seen[side][nw] = (w, move)
                if nw in seen[1 - side]:
                    meet = nw
                    break
                nxt.append(nw)
            if meet is not None:
                break
        frontier[side] = nxt
        depths[side] += 1

    words_u, moves_u = _chain_to(seen[0], meet)
    words_v, moves_v = _chain_to(seen[1], meet)
    # the v-side chain runs v -> meet; flip it to meet -> v, inverting moves
    witness = words_u + words_v[-2::-1]
    moves = moves_u + [
        (pos, _INVERSE[kind]) for pos, kind in reversed(moves_v)
    ]
    return EqualityVerdict(
        True,
        depth=len(moves),
        witness=tuple(witness),
        moves=tuple(moves),
    )


@dataclass
class SoundnessReport:
    ok: bool
    rules: list[dict] = field(default_factory=list)


def check_soundness(
    system: RewriteSystem,
    presentation: Presentation,
    depth_limit: int = DEFAULT_DEPTH_LIMIT,
    length_limit: int | None = None,
    node_cap: int = DEFAULT_NODE_CAP,
) -> SoundnessReport:
    """Every rule, expanded to {a, b}, must be an equality of the monoid."""
    report = SoundnessReport(ok=True)
    for i, rule in enumerate(system.rules):
        verdict = bfs_equal(
            expand(rule.lhs, system.definitions),
            expand(rule.rhs, system.definitions),
            presentation,
            depth_limit=depth_limit,
            length_limit=length_limit,
            node_cap=node_cap,
        )
        report.rules.append(
            {
                "index": i,
                "lhs": rule.lhs,
                "rhs": rule.rhs,
                "status": verdict.status,
                "depth": verdict.depth,
                "reason": verdict.reason,
            }
        )
        report.ok = report.ok and verdict.proved
    return report


@dataclass
class DerivabilityReport:
    ok: bool
    undecided: bool
    relator_reduces_to_b: bool | None
    b_irreducible: bool
    definitions_recovered: dict[str, bool | None] = field(default_factory=dict)


def check_derivability(
    system: RewriteSystem,
    presentation: Presentation,
    step_limit: int = DEFAULT_STEP_LIMIT,
) -> DerivabilityReport:
    """The defining relation and the definitions must hold in the system:
    the relator normalizes to b, b is irreducible, and each auxiliary
    letter's definition word normalizes to that letter.
    """
    r = normalize(system, presentation.relator, step_limit)
    relator_ok: bool | None = (r.word == "b") if r.completed else None
    b_irr = find_redex(system, "b") is None
    defs: dict[str, bool | None] = {}
    for letter in sorted(system.definitions):
        n = normalize(system, system.definitions[letter], step_limit)
        defs[letter] = (n.word == letter) if n.completed else None
    values = [relator_ok, b_irr, *defs.values()]
    return DerivabilityReport(
        ok=all(v is True for v in values),
        undecided=any(v is None for v in values),
        relator_reduces_to_b=relator_ok,
        b_irreducible=b_irr,
        definitions_recovered=defs,
    )


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict[str, str] = {}

    def add(self, w: str) -> None:
        self.parent.setdefault(w, w)

    def find(self, w: str) -> str:
        root = w
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[w] != root:
            self.parent[w], w = root, self.parent[w]
        return root

    def union(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _bounded_closure(
    seeds: list[str], relator: str, length_limit: int, budget: int
) -> tuple[_UnionFind, bool]:
    """Merge words connected by relation applications, breadth-first from
    all seeds at once, visiting at most *budget* words.  Every union is a
    genuine equality; the budget only limits how many are found.
    """
    uf = _UnionFind()
    visited = set(seeds)
    for w in seeds:
        uf.add(w)
    queue = deque(seeds)
    truncated = False
    while queue:
        w = queue.popleft()
        for nw, _move in relation_neighbors(w, relator, length_limit):
            if nw in visited:
                uf.union(w, nw)
            elif len(visited) < budget:
                visited.add(nw)
                uf.add(nw)
                uf.union(w, nw)
                queue.append(nw)
            else:
                truncated = True
    return uf, truncated


def base_words(maxlen: int) -> list[str]:
    """All words over {a, b} of length 0..maxlen, by length then lexicographic."""
    out = [""]
    for n in range(1, maxlen + 1):
        out.extend("".join(t) for t in itertools.product("ab", repeat=n))
    return out


@dataclass
class CrossCheckReport:
    ok: bool
    words_checked: int
    class_count: int
    classes: dict[str, list[str]] = field(default_factory=dict)
    hard_failures: list[tuple[str, str, str]] = field(default_factory=list)
    soft_failures: list[tuple[str, str, str]] = field(default_factory=list)
    nf_incomplete: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


def cross_check(
    system: RewriteSystem,
    presentation: Presentation,
    maxlen: int = 7,
    depth_limit: int = DEFAULT_DEPTH_LIMIT,
    length_limit: int | None = None,
    node_cap: int = DEFAULT_NODE_CAP,
    doubling_factors: tuple[int, ...] = (1, 2, 4),
    closure_budget: int = DEFAULT_CLOSURE_BUDGET,
    step_limit: int = DEFAULT_STEP_LIMIT,
) -> CrossCheckReport:
    """Compare the system's word-problem answers against direct search.

    Both directions are checked over all {a, b}-words up to *maxlen*:

    * words with equal normal forms must be provably equal in the monoid
      (retried under doubled bounds before counting as a soft failure);
    * words proved equal by a bounded congruence closure must have equal
      normal forms (anything else is a hard failure: the system merges
      too little or too much).

    Soft failures mean the search bounds gave out; hard failures are
    logical defects of the system.
    """
    relator = presentation.relator
    base_len = (
        length_limit
        if length_limit is not None
        else max(maxlen, len(relator)) + DEFAULT_LENGTH_SLACK
    )
    report = CrossCheckReport(ok=True, words_checked=0, class_count=0)
    words = base_words(maxlen)
    report.words_checked = len(words)

    nf: dict[str, str] = {}
    classes: dict[str, list[str]] = defaultdict(list)
    for w in words:
        r = normalize(system, w, step_limit)
        if not r.completed:
            report.nf_incomplete.append(w)
            continue
        nf[w] = r.word
        classes[r.word].append(w)
    report.classes = dict(classes)
    report.class_count = len(classes)
    if report.nf_incomplete:
        report.ok = False

    for members in classes.values():
        rep_word = members[0]
        for m in members[1:]:
            verdict = None
            for f in doubling_factors:
                verdict = bfs_equal(
                    m,
                    rep_word,
                    presentation,
                    depth_limit=depth_limit * f,
                    length_limit=base_len * f,
                    node_cap=node_cap,
                )
                if verdict.proved:
                    break
            if verdict is None or not verdict.proved:
                reason = verdict.reason if verdict else "no attempt"
                report.soft_failures.append((m, rep_word, reason))
                report.ok = False

    uf, truncated = _bounded_closure(words, relator, base_len, closure_budget)
    if truncated:
        report.notes.append(
            f"congruence closure truncated at {closure_budget} words"
        )
    grouped: dict[str, list[str]] = defaultdict(list)
    for w in words:
        if w in nf:
            grouped[uf.find(w)].append(w)
    for group in grouped.values():
        first_by_nf: dict[str, str] = {}
        for w in group:
            first_by_nf.setdefault(nf[w], w)
        if len(first_by_nf) > 1:
            (n1, w1), (n2, w2) = sorted(first_by_nf.items())[:2]
            report.hard_failures.append(
                (w1, w2, f"provably equal words with distinct normal forms {n1!r}, {n2!r}")
            )
            report.ok = False
    return report
