"""Acceptance gate for the whole artifact.

Each test is one clause of the project's acceptance bar.  Expected-red
clauses are implemented faithfully and allowed to fail: a failing test
here documents a verified defect of the prescribed construction, not a
bug in the checkers.  The analysis behind every expected failure lives
in the engineering ledger at /root/notes/decisions.md.
"""

import time
from itertools import product

import pytest

from onerel.casework import classify, emit_system
from onerel.completeness import (
    affine_obstructions,
    check_certificate,
    check_local_confluence,
    find_affine_interpretation,
    probe_termination,
)
from onerel.growth import probe
from onerel.presentation import Presentation, check_derivability
from onerel.report import Bounds, verify_tuple
from onerel.rewriting import RewriteSystem, Rule, normalize
from onerel.words import RelatorExponents, relator_word

# --------------------------------------------------------------------------
# shared fixtures

GRID = [
    ("C1a", (1, 1, 1, 1, 1, 1)),
    ("C1b", (2, 2, 3, 2, 3, 2)),
    ("C1c", (1, 2, 1, 2, 1, 2)),
    ("C1d_lo", (1, 2, 2, 2, 2, 2)),
    ("C1d_hi", (1, 3, 2, 3, 2, 2)),
    ("C2a_basic", (2, 1, 1, 1, 3, 1)),
    ("C2a_special", (2, 1, 3, 1, 5, 1)),
    ("C2b_basic", (2, 2, 1, 1, 3, 2)),
    ("C2b_special", (2, 2, 3, 2, 5, 2)),
    ("C2c_lo", (1, 2, 1, 1, 2, 2)),
    ("C2c_hi", (1, 1, 1, 2, 2, 1)),
    ("C2d_gamma_lt_p", (2, 1, 1, 1, 2, 1)),
    ("C2d_u_pos_delta_lt_s", (2, 2, 3, 1, 2, 2)),
    ("C2d_u_pos_delta_ge_s_lo", (2, 2, 3, 3, 2, 2)),
    ("C2d_u_pos_delta_ge_s_hi", (2, 4, 3, 3, 2, 2)),
    ("C2d_u0_t_ge2_delta_ge", (1, 1, 2, 1, 1, 1)),
    ("C2d_u0_t_ge2_delta_lt", (1, 2, 2, 1, 1, 1)),
    ("C2d_u0_t1_delta_lt_s", (1, 2, 1, 1, 1, 2)),
    ("C2d_u0_t1_delta_ge_s_lo", (1, 1, 1, 2, 1, 1)),
    ("C2d_u0_t1_delta_ge_s_hi", (1, 3, 1, 2, 1, 1)),
]

# Branches whose prescribed template is defective at the witness tuple;
# the tests below still run the full check and fail honestly there.
KNOWN_INCOMPLETE = {
    "C2c_lo": "equal left sides collide and one auxiliary rule is mis-oriented",
    "C2c_hi": "the instantiated template leaves non-joinable pairs",
    "C2d_u0_t_ge2_delta_lt": "one self-overlap of the cascade rule is not joinable",
}

LEDGER = "/root/notes/decisions.md"


@pytest.fixture(scope="module")
def grid_reports():
    """Verify each witness tuple once; later clauses reuse the report."""
    cache = {}

    def get(label, tup):
        if label not in cache:
            cache[label] = verify_tuple(RelatorExponents(*tup))
        return cache[label]

    return get


def _context(label, tup):
    note = KNOWN_INCOMPLETE.get(label)
    suffix = f"; known-incomplete branch, analysis in {LEDGER}" if note else ""
    return f"{label} at {tup}{suffix}"


# --------------------------------------------------------------------------
# clause 1: every branch witness verifies fully green, under a minute each


@pytest.mark.parametrize("label,tup", GRID, ids=[g[0] for g in GRID])
def test_branch_witness_fully_green(grid_reports, label, tup):
    assert classify(RelatorExponents(*tup)).label == label, (
        f"witness {tup} does not land in branch {label}"
    )
    report = grid_reports(label, tup)
    ctx = _context(label, tup)

    assert report.elapsed < 60.0, f"{ctx}: took {report.elapsed:.1f}s"

    conf = report.confluence
    assert not conf.undecided, f"{ctx}: {len(conf.undecided)} undecided overlap(s)"
    assert not conf.failures, (
        f"{ctx}: {len(conf.failures)} non-joinable overlap(s), e.g. "
        f"{conf.failures[0].pair.overlap!r} -> "
        f"{conf.failures[0].left_nf!r} / {conf.failures[0].right_nf!r}"
    )

    term = report.termination
    if term.status == "certified":
        assert all(
            coef <= 8 and const <= 8 for coef, const in term.certificate.values()
        ), f"{ctx}: certificate exceeds the pinned bound"
    else:
        # documented fallback: a machine-checked impossibility argument
        # plus a clean bounded-rewriting probe stand in for a certificate
        assert term.obstructions, f"{ctx}: no certificate and no obstruction"
        assert term.probe is not None and term.probe.ok, (
            f"{ctx}: bounded termination probe flagged a runaway rewrite"
        )

    snd = report.soundness
    bad = [r for r in snd.rules if r["status"] != "proved"]
    assert not bad, f"{ctx}: rules not proved sound: {bad}"
    assert all(r["depth"] <= 20 for r in snd.rules), f"{ctx}: proof depth over 20"

    der = report.derivability
    assert der.ok, (
        f"{ctx}: derivability failed "
        f"(relator->b {der.relator_reduces_to_b}, b irreducible {der.b_irreducible}, "
        f"definitions {der.definitions_recovered})"
    )


# --------------------------------------------------------------------------
# clause 2: exhaustive cube with entries in [1, 3]


def test_small_cube_exhaustive_sweep():
    started = time.monotonic()
    failures = {}
    for index, combo in enumerate(product((1, 2, 3), repeat=6)):
        e = RelatorExponents(*combo)
        label = classify(e).label  # totality: must not raise
        system = emit_system(e)  # well-formedness enforced on construction
        presentation = Presentation(relator_word(e))
        bad_parts = []
        conf = check_local_confluence(system, 10_000)
        if not conf.ok:
            bad_parts.append(f"confluence({len(conf.failures)})")
        der = check_derivability(system, presentation, step_limit=10_000)
        if not der.ok:
            bad_parts.append("derivability")
        if index % 10 == 0:
            from onerel.presentation import check_soundness

            snd = check_soundness(system, presentation, depth_limit=20)
            if not snd.ok:
                bad_parts.append("soundness")
        if bad_parts:
            failures.setdefault(label, []).append((combo, bad_parts))
    elapsed = time.monotonic() - started
    assert elapsed < 1800.0, f"sweep took {elapsed:.0f}s, budget is 1800s"
    summary = {
        label: (len(items), items[:2]) for label, items in sorted(failures.items())
    }
    assert not failures, (
        f"{sum(len(v) for v in failures.values())} of 729 tuples not green; "
        f"by branch: {summary}; analysis in {LEDGER}"
    )


# --------------------------------------------------------------------------
# clause 3: pinned unit fixtures for the minimal presentation


def test_minimal_system_and_certificate_fixtures():
    system = emit_system(RelatorExponents(1, 1, 1, 1, 1, 1))
    assert [(r.lhs, r.rhs) for r in system.rules] == [
        ("ababab", "b"),
        ("abb", "bab"),
    ]

    ok, table = check_certificate(system, {"a": (2, 0), "b": (1, 1)})
    assert ok, f"pinned certificate rejected: {table}"

    # pinned rewrite chains, step for step under the leftmost strategy
    collapse = normalize(system, "ababab")
    assert (collapse.word, collapse.steps, collapse.completed) == ("b", 1, True)
    swap = normalize(system, "abb")
    assert (swap.word, swap.steps, swap.completed) == ("bab", 1, True)
    eight = normalize(system, "abababab")
    assert (eight.word, eight.steps) == ("bab", 1)


# --------------------------------------------------------------------------
# clause 4: normal-form oracle agreement across the witness grid


@pytest.mark.parametrize("label,tup", GRID, ids=[g[0] for g in GRID])
def test_grid_cross_check_against_search_oracle(grid_reports, label, tup):
    report = grid_reports(label, tup)
    ctx = _context(label, tup)
    cc = report.crosscheck
    assert not cc.hard_failures, (
        f"{ctx}: {len(cc.hard_failures)} oracle disagreement(s), e.g. "
        f"{cc.hard_failures[0]}"
    )
    assert not cc.soft_failures, f"{ctx}: oracle ran out of bounds on some pair"
    assert not cc.nf_incomplete, f"{ctx}: {len(cc.nf_incomplete)} normalization(s) hit the step cap"


# --------------------------------------------------------------------------
# clause 5: corrupted systems must trigger the intended red verdicts


def _minimal_rules():
    return (Rule("ababab", "b"), Rule("abb", "bab"))


def test_corrupted_reversed_rule_breaks_joinability():
    corrupted = RewriteSystem(frozenset("ab"), (Rule("ababab", "b"), Rule("bab", "abb")))
    conf = check_local_confluence(corrupted, 10_000)
    assert not conf.ok
    assert conf.failures, "reversing a rule must produce a non-joinable overlap"


def test_corrupted_collapsing_b_breaks_derivability():
    corrupted = RewriteSystem(frozenset("ab"), _minimal_rules() + (Rule("b", "a"),))
    der = check_derivability(corrupted, Presentation("ababab"), step_limit=10_000)
    assert not der.ok
    assert not der.b_irreducible


def test_corrupted_looping_rule_defeats_termination():
    corrupted = RewriteSystem(frozenset("ab"), _minimal_rules() + (Rule("b", "bb"),))
    assert find_affine_interpretation(corrupted) is None
    assert affine_obstructions(corrupted), "the duplicating rule must be flagged"
    report = probe_termination(corrupted, samples=50, maxlen=6, step_limit=2_000)
    assert not report.ok, "bounded probe must notice the runaway rewrite"


# --------------------------------------------------------------------------
# clause 6: growth probe on the minimal presentation


@pytest.fixture(scope="module")
def growth_report():
    system = emit_system(RelatorExponents(1, 1, 1, 1, 1, 1))
    return probe(Presentation("ababab"), system, 10)


def test_probe_claims_no_equal_pairs_up_to_six(growth_report):
    # Expected red: the claim ignores that two relation applications can
    # cancel each other's length change.  The pair (ab^2, bab) is equal,
    # has total length 6, and sits at distance 2; see the ledger.
    assert growth_report.dehn.get(6, 0) == 0, (
        f"distinct equal pair of total length 6 exists: D(6) = "
        f"{growth_report.dehn[6]} (witness: ab^2 = bab at distance 2); "
        f"defect analysis in {LEDGER}"
    )


def test_probe_first_collapse_visible_at_seven(growth_report):
    assert growth_report.dehn[7] >= 1


def test_probe_space_at_seven_contains_relator(growth_report):
    assert growth_report.space[7] >= 6


def test_probe_invariants_to_ten(growth_report):
    assert growth_report.n_max == 10
    assert all(count == 0 for count in growth_report.undecided.values()), (
        "bounded searches must decide every pair at this scale"
    )
    ns = sorted(growth_report.dehn)
    for prev, here in zip(ns, ns[1:]):
        assert growth_report.dehn[here] >= growth_report.dehn[prev]
        assert growth_report.space[here] >= growth_report.space[prev]

    # the search measure itself is symmetric on decided pairs
    from onerel.growth import derivation_distance

    presentation = Presentation("ababab")
    for u, v in [("ababab", "b"), ("abb", "bab"), ("abababab", "bab")]:
        assert (
            derivation_distance(u, v, presentation).distance
            == derivation_distance(v, u, presentation).distance
        )


def test_probe_fit_is_reported_not_asserted(growth_report):
    # the exponent estimate is a diagnostic; nothing in the artifact may
    # depend on it being near any particular value
    assert growth_report.fit_exponent is not None
