"""One-call verification pipeline for a single exponent tuple.

Bundles classification, emission, local confluence, termination
evidence, soundness, derivability, and the brute-force cross-check
into a single report with text and dict renderings, so the CLI, the
sweep, and the test suite all consume the same object.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

from .casework import classify, emit_system
from .completeness import (
    ConfluenceReport,
    Interpretation,
    TerminationProbe,
    affine_obstructions,
    check_local_confluence,
    find_affine_interpretation,
    probe_termination,
)
from .presentation import (
    CrossCheckReport,
    DerivabilityReport,
    Presentation,
    SoundnessReport,
    check_derivability,
    check_soundness,
    cross_check,
)
from .rewriting import RewriteSystem, to_dict as system_to_dict
from .words import RelatorExponents, relator_word

__all__ = ["Bounds", "TerminationReport", "TupleReport", "verify_tuple", "ALL_PARTS"]

ALL_PARTS = frozenset(
    {"confluence", "termination", "soundness", "derivability", "crosscheck"}
)


@dataclass(frozen=True)
class Bounds:
    """Shared bound knobs; defaults match the documented check defaults."""

    step_limit: int = 10_000
    depth_limit: int = 20
    length_limit: int | None = None
    coef_bound: int = 8
    const_bound: int = 8
    maxlen: int = 7
    probe_samples: int = 1000
    probe_maxlen: int = 12


@dataclass
class TerminationReport:
    """Certificate if one exists in bounds, otherwise the fallbacks.

    status: "certified" when an affine certificate was found;
    "unverified" when none exists in bounds but random probing found no
    runaway reduction (obstructions list the rules provably beyond any
    bound); "failed" when probing hit the step limit.
    """

    status: str
    certificate: Interpretation | None = None
    obstructions: list[dict] = field(default_factory=list)
    probe: TerminationProbe | None = None

    @property
    def ok(self) -> bool:
        if self.status == "certified":
            return True
        return self.status == "unverified" and bool(self.obstructions)


@dataclass
class TupleReport:
    exponents: RelatorExponents
    label: str
    params: dict
    reading: str
    system: RewriteSystem
    confluence: ConfluenceReport | None = None
    termination: TerminationReport | None = None
    soundness: SoundnessReport | None = None
    derivability: DerivabilityReport | None = None
    crosscheck: CrossCheckReport | None = None
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        checks = [
            self.confluence.ok if self.confluence is not None else True,
            self.termination.ok if self.termination is not None else True,
            self.soundness.ok if self.soundness is not None else True,
            self.derivability.ok if self.derivability is not None else True,
            self.crosscheck.ok if self.crosscheck is not None else True,
        ]
        return all(checks)

    @property
    def undecided(self) -> bool:
        if self.confluence is not None and self.confluence.undecided:
            return True
        if self.soundness is not None and any(
            r["status"] == "unknown" for r in self.soundness.rules
        ):
            return True
        if self.derivability is not None and self.derivability.undecided:
            return True
        return False

    def to_dict(self) -> dict:
        out: dict = {
            "exponents": list(self.exponents.as_tuple()),
            "label": self.label,
            "params": self.params,
            "reading": self.reading,
            "system": system_to_dict(self.system),
            "ok": self.ok,
            "elapsed": round(self.elapsed, 3),
        }
        if self.confluence is not None:
            out["confluence"] = {
                "ok": self.confluence.ok,
                "pairs_checked": self.confluence.pairs_checked,
                "failures": [
                    {
                        "overlap": v.pair.overlap,
                        "left_nf": v.left_nf,
                        "right_nf": v.right_nf,
                        "source": list(v.pair.source),
                    }
                    for v in self.confluence.failures
                ],
                "undecided": len(self.confluence.undecided),
            }
        if self.termination is not None:
            out["termination"] = {
                "status": self.termination.status,
                "ok": self.termination.ok,
                "certificate": self.termination.certificate,
                "obstructions": self.termination.obstructions,
                "probe": None
                if self.termination.probe is None
                else asdict(self.termination.probe),
            }
        if self.soundness is not None:
            out["soundness"] = {
                "ok": self.soundness.ok,
                "rules": self.soundness.rules,
            }
        if self.derivability is not None:
            out["derivability"] = asdict(self.derivability)
        if self.crosscheck is not None:
            out["crosscheck"] = {
                "ok": self.crosscheck.ok,
                "words_checked": self.crosscheck.words_checked,
                "class_count": self.crosscheck.class_count,
                "hard_failures": self.crosscheck.hard_failures,
                "soft_failures": self.crosscheck.soft_failures,
                "nf_incomplete": self.crosscheck.nf_incomplete,
                "notes": self.crosscheck.notes,
            }
        return out

    def render_text(self) -> str:
        mark = lambda ok: "pass" if ok else "FAIL"  # noqa: E731
        lines = [
            f"tuple {self.exponents.as_tuple()}  label {self.label}  "
            f"reading {self.reading}",
            "params "
            + " ".join(f"{k}={v}" for k, v in self.params.items() if v is not None),
            f"rules ({len(self.system.rules)}):",
        ]
        for rule in self.system.rules:
            lines.append(f"  {rule.lhs} -> {rule.rhs or '(empty)'}")
        if self.system.definitions:
            lines.append(
                "definitions: "
                + ", ".join(f"{k} = {v}" for k, v in self.system.definitions.items())
            )
        if self.confluence is not None:
            c = self.confluence
            lines.append(
                f"confluence: {mark(c.ok)} ({c.pairs_checked} pairs, "
                f"{len(c.failures)} failures, {len(c.undecided)} undecided)"
            )
            for v in c.failures[:10]:
                lines.append(
                    f"  pair {v.pair.overlap}: {v.left_nf!r} vs {v.right_nf!r}"
                )
        if self.termination is not None:
            t = self.termination
            lines.append(f"termination: {mark(t.ok)} ({t.status})")
            if t.certificate:
                cert = ", ".join(
                    f"{ch} -> (coef {co}, const {ko})"
                    for ch, (co, ko) in sorted(t.certificate.items())
                )
                lines.append(f"  certificate: {cert}")
            for ob in t.obstructions:
                lines.append(
                    f"  no certificate can exist for rule {ob['index']} "
                    f"({ob['lhs']} -> {ob['rhs']}): {ob['reason']}"
                )
            if t.probe is not None:
                lines.append(
                    f"  probe: {t.probe.samples} samples, "
                    f"{'all reduced' if t.probe.ok else 'step limit hit'}"
                )
        if self.soundness is not None:
            s = self.soundness
            lines.append(f"soundness: {mark(s.ok)}")
            for r in s.rules:
                depth = r.get("depth")
                extra = f" depth {depth}" if depth is not None else ""
                lines.append(f"  rule {r['index']}: {r['status']}{extra}")
        if self.derivability is not None:
            d = self.derivability
            lines.append(
                f"derivability: {mark(d.ok)} (relator->b {d.relator_reduces_to_b}, "
                f"b irreducible {d.b_irreducible}, definitions "
                f"{d.definitions_recovered})"
            )
        if self.crosscheck is not None:
            x = self.crosscheck
            lines.append(
                f"cross-check: {mark(x.ok)} ({x.words_checked} words, "
                f"{x.class_count} classes, {len(x.hard_failures)} hard, "
                f"{len(x.soft_failures)} soft)"
            )
            for u, v, why in x.hard_failures[:5]:
                lines.append(f"  {u} vs {v}: {why}")
        lines.append(f"overall: {mark(self.ok)}  ({self.elapsed:.2f}s)")
        return "\n".join(lines)


def verify_system(
    system: RewriteSystem,
    presentation: Presentation,
    bounds: Bounds = Bounds(),
    parts: frozenset[str] = ALL_PARTS,
) -> dict:
    """Run the requested checks on an explicit system.

    Returns the pieces keyed by part name; verify_tuple assembles the
    same pieces into a TupleReport.
    """
    pieces: dict = {}
    if "confluence" in parts:
        pieces["confluence"] = check_local_confluence(system, bounds.step_limit)
    if "termination" in parts:
        cert = find_affine_interpretation(
            system, coef_bound=bounds.coef_bound, const_bound=bounds.const_bound
        )
        if cert is not None:
            pieces["termination"] = TerminationReport("certified", certificate=cert)
        else:
            probe = probe_termination(
                system,
                samples=bounds.probe_samples,
                maxlen=bounds.probe_maxlen,
                step_limit=bounds.step_limit * 10,
            )
            pieces["termination"] = TerminationReport(
                "unverified" if probe.ok else "failed",
                obstructions=affine_obstructions(system),
                probe=probe,
            )
    if "soundness" in parts:
        pieces["soundness"] = check_soundness(
            system,
            presentation,
            depth_limit=bounds.depth_limit,
            length_limit=bounds.length_limit,
        )
    if "derivability" in parts:
        pieces["derivability"] = check_derivability(
            system, presentation, step_limit=bounds.step_limit
        )
    if "crosscheck" in parts:
        pieces["crosscheck"] = cross_check(
            system, presentation, maxlen=bounds.maxlen
        )
    return pieces


def verify_tuple(
    exponents: RelatorExponents,
    reading: str = "canonical",
    bounds: Bounds = Bounds(),
    parts: frozenset[str] = ALL_PARTS,
) -> TupleReport:
    """Emit the system for a tuple and verify it end to end."""
    start = time.monotonic()
    c = classify(exponents)
    system = emit_system(exponents, reading)
    presentation = Presentation(relator_word(exponents))
    report = TupleReport(
        exponents=exponents,
        label=c.label,
        params=c.params(),
        reading=reading,
        system=system,
    )
    pieces = verify_system(system, presentation, bounds, parts)
    report.confluence = pieces.get("confluence")
    report.termination = pieces.get("termination")
    report.soundness = pieces.get("soundness")
    report.derivability = pieces.get("derivability")
    report.crosscheck = pieces.get("crosscheck")
    report.elapsed = time.monotonic() - start
    return report
