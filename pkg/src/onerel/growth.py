"""Empirical probes of derivation cost between equal base words.

The decision procedure for equality is the constructed rewriting
system; the cost measurements replay single relation applications on
words over the base alphabet, so they are meaningful for the original
presentation regardless of which auxiliary letters the system uses.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import product

from .presentation import Presentation, relation_neighbors
from .rewriting import RewriteSystem, normalize

__all__ = [
    "DistanceResult",
    "GrowthReport",
    "derivation_distance",
    "minimal_peak",
    "probe",
]

_DEFAULT_NODE_CAP = 200_000


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of one geodesic search.

    ``distance`` is the exact minimal number of relation applications,
    or None when the bounded search gave out.  A found geodesic is
    replayable: consecutive chain entries differ by one relator <-> b
    replacement.
    """

    distance: int | None
    chain: tuple[str, ...] | None
    expanded: int


def derivation_distance(
    u: str,
    v: str,
    presentation: Presentation,
    depth_limit: int = 20,
    length_limit: int | None = None,
    node_cap: int = _DEFAULT_NODE_CAP,
) -> DistanceResult:
    """Breadth-first geodesic between two base words.

    Unidirectional so the witness chain falls out of the parent map;
    the move set is symmetric, so distance(u, v) = distance(v, u)
    whenever both searches stay within bounds.
    """
    relator = presentation.relator
    if length_limit is None:
        length_limit = len(relator) + 24
    if u == v:
        return DistanceResult(0, (u,), 0)
    parents: dict[str, str | None] = {u: None}
    frontier = deque([u])
    expanded = 0
    for depth in range(1, depth_limit + 1):
        if not frontier:
            break
        next_frontier: deque[str] = deque()
        while frontier:
            word = frontier.popleft()
            expanded += 1
            for nxt, _move in relation_neighbors(word, relator, length_limit):
                if nxt in parents:
                    continue
                parents[nxt] = word
                if nxt == v:
                    chain = [nxt]
                    back: str | None = word
                    while back is not None:
                        chain.append(back)
                        back = parents[back]
                    chain.reverse()
                    return DistanceResult(depth, tuple(chain), expanded)
                if len(parents) > node_cap:
                    return DistanceResult(None, None, expanded)
                next_frontier.append(nxt)
        frontier = next_frontier
    return DistanceResult(None, None, expanded)


def _connected_within(
    u: str,
    v: str,
    relator: str,
    peak: int,
    depth_limit: int,
    node_cap: int,
) -> bool:
    """Can u reach v while no intermediate word exceeds ``peak`` letters?"""
    if max(len(u), len(v)) > peak:
        return False
    if u == v:
        return True
    seen = {u}
    frontier = deque([u])
    for _ in range(depth_limit):
        if not frontier:
            break
        next_frontier: deque[str] = deque()
        while frontier:
            word = frontier.popleft()
            for nxt, _move in relation_neighbors(word, relator, peak):
                if nxt in seen:
                    continue
                if nxt == v:
                    return True
                if len(seen) > node_cap:
                    return False
                seen.add(nxt)
                next_frontier.append(nxt)
        frontier = next_frontier
    return False


def minimal_peak(
    u: str,
    v: str,
    presentation: Presentation,
    depth_limit: int = 20,
    length_limit: int | None = None,
    node_cap: int = _DEFAULT_NODE_CAP,
) -> int | None:
    """Smallest length bound under which some derivation joins u and v.

    Every derivation visits both endpoints, so the answer is at least
    max(|u|, |v|); the search raises the bound one letter at a time
    until the words connect or the overall length limit is exhausted.
    """
    relator = presentation.relator
    if length_limit is None:
        length_limit = len(relator) + 24
    for peak in range(max(len(u), len(v)), length_limit + 1):
        if _connected_within(u, v, relator, peak, depth_limit, node_cap):
            return peak
    return None


@dataclass
class GrowthReport:
    """Aggregated derivation-cost table.

    ``dehn[n]``  = max geodesic length over decided equal pairs with
    |u| + |v| <= n; ``space[n]`` = max over the same pairs of the
    minimal derivation peak (peak convention: longest word on the
    chain, endpoints included).  Pairs whose searches exhausted their
    bounds are counted in ``undecided`` rather than dropped.
    """

    n_max: int
    dehn: dict[int, int] = field(default_factory=dict)
    space: dict[int, int] = field(default_factory=dict)
    undecided: dict[int, int] = field(default_factory=dict)
    equal_pairs: int = 0
    decided_pairs: int = 0
    fit_exponent: float | None = None
    notes: list[str] = field(default_factory=list)

    def table(self) -> str:
        lines = [f"{'n':>3} {'D(n)':>6} {'S(n)':>6} {'undecided':>10}"]
        for n in range(1, self.n_max + 1):
            lines.append(
                f"{n:>3} {self.dehn.get(n, 0):>6} {self.space.get(n, 0):>6} "
                f"{self.undecided.get(n, 0):>10}"
            )
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "dehn": dict(self.dehn),
            "space": dict(self.space),
            "undecided": dict(self.undecided),
            "equal_pairs": self.equal_pairs,
            "decided_pairs": self.decided_pairs,
            "fit_exponent": self.fit_exponent,
            "notes": list(self.notes),
        }


def _base_words_through(n: int) -> list[str]:
    out = [""]
    for length in range(1, n + 1):
        out.extend("".join(t) for t in product("ab", repeat=length))
    return out


def probe(
    presentation: Presentation,
    system: RewriteSystem,
    n_max: int,
    depth_limit: int = 20,
    length_limit: int | None = None,
    node_cap: int = _DEFAULT_NODE_CAP,
    step_limit: int = 10**5,
) -> GrowthReport:
    """Measure derivation cost over all equal pairs with |u|+|v| <= n_max.

    Equality is decided by normal forms under ``system``; the distance
    and peak searches are independent of it.  The exponent fit at the
    end is least squares on log D(n) against log n, reported for
    inspection only.
    """
    report = GrowthReport(n_max=n_max)
    report.notes.append(
        "space convention: per pair, the minimal over derivations of the "
        "longest intermediate word, endpoints included"
    )
    classes: dict[str, list[str]] = {}
    for word in _base_words_through(max(n_max - 1, 0)):
        result = normalize(system, word, step_limit)
        if not result.completed:
            report.notes.append(f"normalization gave out on {word!r}")
            continue
        classes.setdefault(result.word, []).append(word)

    per_pair: list[tuple[int, int | None, int | None]] = []
    for members in classes.values():
        if len(members) < 2:
            continue
        members.sort(key=lambda w: (len(w), w))
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                total = len(u) + len(v)
                if total > n_max:
                    continue
                report.equal_pairs += 1
                dist = derivation_distance(
                    u, v, presentation, depth_limit, length_limit, node_cap
                )
                peak = minimal_peak(
                    u, v, presentation, depth_limit, length_limit, node_cap
                )
                if dist.distance is not None:
                    report.decided_pairs += 1
                per_pair.append((total, dist.distance, peak))

    for total, distance, peak in per_pair:
        for n in range(total, n_max + 1):
            if distance is None:
                report.undecided[n] = report.undecided.get(n, 0) + 1
                continue
            if distance > report.dehn.get(n, 0):
                report.dehn[n] = distance
            if peak is not None and peak > report.space.get(n, 0):
                report.space[n] = peak

    points = [
        (math.log(n), math.log(d))
        for n, d in sorted(report.dehn.items())
        if d >= 1
    ]
    if len(points) >= 2:
        mean_x = sum(x for x, _ in points) / len(points)
        mean_y = sum(y for _, y in points) / len(points)
        var = sum((x - mean_x) ** 2 for x, _ in points)
        if var > 0:
            cov = sum((x - mean_x) * (y - mean_y) for x, y in points)
            report.fit_exponent = cov / var
    return report
