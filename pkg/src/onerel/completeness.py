"""Machine verification that a rewriting system is complete.

Two independent checks:

* Local confluence, by enumerating all critical pairs (suffix-prefix
  overlaps, factor containments, and self-overlaps through proper
  borders) and reducing both sides to a common word.

* Termination, by searching for an affine interpretation: each letter
  maps to a strictly monotone function n |-> coef*n + const on the
  naturals (coef >= 1, const >= 0), words compose left to right, and
  every rule must strictly decrease the constant part while not
  increasing the coefficient.  Such an interpretation certifies that
  every rewrite strictly decreases a natural number.

Together with termination, joinability of all critical pairs gives
confluence by Newman's lemma, hence unique normal forms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from onerel.rewriting import (
    DEFAULT_STEP_LIMIT,
    RewriteSystem,
    apply_at,
    normalize,
    random_normalize,
)
from onerel.words import LETTER_ORDER, border_lengths

Interpretation = dict[str, tuple[int, int]]


@dataclass(frozen=True)
class CriticalPair:
    """Two one-step reducts of a minimal ambiguous word.

    ``source`` records how the ambiguity arises: ``(i, j, kind, offset)``
    where *kind* is ``"overlap"`` (a proper suffix of rule i's lhs equals
    a proper prefix of rule j's lhs, *offset* = overlap length) or
    ``"containment"`` (rule j's lhs occurs inside rule i's lhs at
    position *offset*).
    """

    overlap: str
    left: str
    right: str
    source: tuple[int, int, str, int]


def critical_pairs(system: RewriteSystem) -> list[CriticalPair]:
    """All critical pairs of *system*, in a fixed deterministic order.

    Containments include the degenerate case of two distinct rules with
    identical left-hand sides, which is still a genuine ambiguity.
    """
    out: list[CriticalPair] = []
    rules = system.rules
    for i, ri in enumerate(rules):
        for j, rj in enumerate(rules):
            l1, l2 = ri.lhs, rj.lhs
            for t in range(1, min(len(l1), len(l2))):
                if l1.endswith(l2[:t]):
                    word = l1 + l2[t:]
                    left = ri.rhs + l2[t:]
                    right = l1[: len(l1) - t] + rj.rhs
                    out.append(CriticalPair(word, left, right, (i, j, "overlap", t)))
            start = 0
            while True:
                o = l1.find(l2, start)
                if o < 0:
                    break
                trivial = i == j and o == 0 and len(l2) == len(l1)
                if not trivial:
                    left = ri.rhs
                    right = l1[:o] + rj.rhs + l1[o + len(l2) :]
                    out.append(CriticalPair(l1, left, right, (i, j, "containment", o)))
                start = o + 1
    return out


@dataclass(frozen=True)
class PairVerdict:
    pair: CriticalPair
    joinable: bool | None  # None: undecided within limits
    left_nf: str | None
    right_nf: str | None
    note: str = ""


@dataclass
class ConfluenceReport:
    ok: bool
    pairs_checked: int
    failures: list[PairVerdict] = field(default_factory=list)
    undecided: list[PairVerdict] = field(default_factory=list)


def check_local_confluence(
    system: RewriteSystem,
    step_limit: int = DEFAULT_STEP_LIMIT,
    recheck_strategies: int = 10,
    rng_seed: int = 0,
) -> ConfluenceReport:
    """Reduce both sides of every critical pair and compare.

    When the deterministic strategy yields distinct results, the pair is
    retried under random strategies; joinability only needs some common
    reduct, so any intersection of reachable normal forms settles it.
    Pairs whose reductions exhaust the step limit are reported as
    undecided rather than failed.
    """
    report = ConfluenceReport(ok=True, pairs_checked=0)
    for k, pair in enumerate(critical_pairs(system)):
        report.pairs_checked += 1
        ln = normalize(system, pair.left, step_limit)
        rn = normalize(system, pair.right, step_limit)
        if ln.completed and rn.completed and ln.word == rn.word:
            continue
        left_nfs = {ln.word} if ln.completed else set()
        right_nfs = {rn.word} if rn.completed else set()
        rng = random.Random(f"{rng_seed}:{k}")
        for _ in range(recheck_strategies):
            lr = random_normalize(system, pair.left, rng, step_limit)
            if lr.completed:
                left_nfs.add(lr.word)
            rr = random_normalize(system, pair.right, rng, step_limit)
            if rr.completed:
                right_nfs.add(rr.word)
            if left_nfs & right_nfs:
                break
        if left_nfs & right_nfs:
            continue
        verdict = PairVerdict(
            pair,
            joinable=False if (left_nfs and right_nfs) else None,
            left_nf=ln.word if ln.completed else None,
            right_nf=rn.word if rn.completed else None,
            note="" if (left_nfs and right_nfs) else "step limit exhausted",
        )
        if verdict.joinable is False:
            report.failures.append(verdict)
        else:
            report.undecided.append(verdict)
        report.ok = False
    return report


def evaluate_affine(interp: Interpretation, word: str) -> tuple[int, int]:
    """Compose the letter functions of *word* and return (coef, const).

    Letters act on the left: the word ``uv`` is the function of ``u``
    applied after that of ``v``, so evaluation folds right to left.
    """
    coef, const = 1, 0
    for ch in reversed(word):
        c, k = interp[ch]
        coef, const = c * coef, c * const + k
    return coef, const


def check_certificate(
    system: RewriteSystem, interp: Interpretation
) -> tuple[bool, list[dict]]:
    """Check an affine interpretation against every rule.

    A rule passes when its left side has coefficient >= the right side's
    and strictly larger constant.  Returns overall validity plus a
    per-rule table.
    """
    for letter in system.alphabet:
        if letter not in interp:
            raise ValueError(f"interpretation missing letter {letter!r}")
        c, k = interp[letter]
        if c < 1 or k < 0:
            raise ValueError(f"letter {letter!r} must map to coef >= 1, const >= 0")
    table: list[dict] = []
    ok = True
    for rule in system.rules:
        lc, lk = evaluate_affine(interp, rule.lhs)
        rc, rk = evaluate_affine(interp, rule.rhs)
        coef_ok = lc >= rc
        const_ok = lk > rk
        table.append(
            {
                "lhs": rule.lhs,
                "rhs": rule.rhs,
                "lhs_value": (lc, lk),
                "rhs_value": (rc, rk),
                "coef_ok": coef_ok,
                "const_ok": const_ok,
            }
        )
        ok = ok and coef_ok and const_ok
    return ok, table


def find_affine_interpretation(
    system: RewriteSystem,
    coef_bound: int = 8,
    const_bound: int = 8,
) -> Interpretation | None:
    """Search for a valid affine interpretation, deterministically.

    Iterative deepening on the maximum coefficient, then depth-first in
    a fixed letter order with per-letter assignments tried in increasing
    (coef, const) order.  The first valid assignment wins, so results
    are reproducible.  Returns None when the bounded space is exhausted.
    """
    letters = sorted(system.alphabet, key=LETTER_ORDER.index)
    index = {ch: d for d, ch in enumerate(letters)}
    # Rules become checkable once all their letters are assigned.
    ready: list[list[int]] = [[] for _ in letters]
    for ri, rule in enumerate(system.rules):
        used = set(rule.lhs) | set(rule.rhs)
        if used:
            ready[max(index[ch] for ch in used)].append(ri)
    interp: Interpretation = {}

    def rules_pass(depth: int) -> bool:
        for ri in ready[depth]:
            rule = system.rules[ri]
            lc, lk = evaluate_affine(interp, rule.lhs)
            rc, rk = evaluate_affine(interp, rule.rhs)
            if lc < rc or lk <= rk:
                return False
        return True

    def dfs(depth: int, max_coef: int, target: int) -> bool:
        if depth == len(letters):
            return max_coef == target
        coef_lo = target if depth == len(letters) - 1 and max_coef < target else 1
        for coef in range(coef_lo, target + 1):
            for const in range(const_bound + 1):
                interp[letters[depth]] = (coef, const)
                if rules_pass(depth) and dfs(depth + 1, max(max_coef, coef), target):
                    return True
        del interp[letters[depth]]
        return False

    for target in range(1, coef_bound + 1):
        if dfs(0, 0, target):
            return dict(interp)
    return None


def affine_obstructions(system: RewriteSystem) -> list[dict]:
    """Rules that no affine interpretation can orient, at any bound.

    If every letter occurring in a rule occurs strictly more often in
    the right side than in the left, the rule defeats every assignment:
    coefficients at least 1 force the right coefficient product to
    dominate, so a valid assignment needs coefficient 1 on each letter
    whose counts differ, and then the constant term becomes a plain sum
    of per-letter constants, which cannot strictly decrease when every
    count grows.  Such rules make the certificate search pointless, so
    callers can skip it and fall back to probing.
    """
    found = []
    for ri, rule in enumerate(system.rules):
        letters = set(rule.lhs) | set(rule.rhs)
        if not letters:
            continue
        if all(rule.rhs.count(ch) > rule.lhs.count(ch) for ch in letters):
            found.append(
                {
                    "index": ri,
                    "lhs": rule.lhs,
                    "rhs": rule.rhs,
                    "reason": "every letter strictly more frequent on the right",
                }
            )
    return found


@dataclass
class TerminationProbe:
    ok: bool
    samples: int
    incomplete: list[str] = field(default_factory=list)


def probe_termination(
    system: RewriteSystem,
    samples: int = 300,
    maxlen: int = 12,
    step_limit: int = 10**5,
    rng_seed: int = 0,
) -> TerminationProbe:
    """Heuristic fallback when no certificate is found: normalize random
    words under random strategies and report any that exhaust the step
    limit.  Can only refute termination, never certify it.
    """
    rng = random.Random(rng_seed)
    letters = sorted(system.alphabet, key=LETTER_ORDER.index)
    probe = TerminationProbe(ok=True, samples=samples)
    for _ in range(samples):
        n = rng.randint(0, maxlen)
        word = "".join(rng.choice(letters) for _ in range(n))
        result = random_normalize(system, word, rng, step_limit)
        if not result.completed:
            probe.ok = False
            probe.incomplete.append(word)
            if len(probe.incomplete) >= 5:
                break
    return probe
