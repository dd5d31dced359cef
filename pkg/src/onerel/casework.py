"""Classification of six-exponent relators and construction of the
prescribed finite complete rewriting system for each class.

The relation is a^alpha b^beta a^gamma b^delta a^epsilon b^phi = b.  When
the relator has no self-overlap (no border), the single oriented rule is
already complete.  Otherwise the border forces phi <= beta and
epsilon >= alpha, and the derived parameters

    p = alpha,  s = phi,  q = beta - phi,
    r, k by Euclidean division (of gamma in the symmetric case,
    epsilon otherwise),  and for the k = 1 branches t, u with
    gamma = p*t + u

route the tuple to one of twenty-one templates.  Each template emits an
ordered rule list, possibly over an extended alphabet with defined
auxiliary letters.
"""

from __future__ import annotations

from dataclasses import dataclass

from onerel.rewriting import RewriteSystem, Rule
from onerel.words import RelatorExponents, border_lengths, relator_word

LABELS = (
    "NoOverlap",
    "C1a",
    "C1b",
    "C1c",
    "C1d_lo",
    "C1d_hi",
    "C2a_basic",
    "C2a_special",
    "C2b_basic",
    "C2b_special",
    "C2c_lo",
    "C2c_hi",
    "C2d_gamma_lt_p",
    "C2d_u_pos_delta_lt_s",
    "C2d_u_pos_delta_ge_s_lo",
    "C2d_u_pos_delta_ge_s_hi",
    "C2d_u0_t_ge2_delta_ge",
    "C2d_u0_t_ge2_delta_lt",
    "C2d_u0_t1_delta_lt_s",
    "C2d_u0_t1_delta_ge_s_lo",
    "C2d_u0_t1_delta_ge_s_hi",
)

READINGS = ("canonical", "alternate")


class UnclassifiedOverlap(Exception):
    """The relator has a border but fits no template's side conditions.

    This is a safety valve: the case analysis is intended to be total, so
    any instance reaching here is a reportable finding, not a normal
    outcome.
    """


@dataclass(frozen=True)
class CaseClassification:
    label: str
    p: int
    q: int
    r: int
    s: int
    k: int
    x_index: int | None
    t: int | None
    u: int | None
    exponents: RelatorExponents

    def params(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "r": self.r,
            "s": self.s,
            "k": self.k,
            "x_index": self.x_index,
            "t": self.t,
            "u": self.u,
        }


def classify(e: RelatorExponents) -> CaseClassification:
    """Route a tuple to its template label with derived parameters.

    Absence of a border is decided from the relator word itself; the
    analytic shortcut (phi <= beta and epsilon >= alpha) is only a
    cross-checked consequence.
    """
    word = relator_word(e)
    if not border_lengths(word):
        return CaseClassification(
            "NoOverlap", e.alpha, e.beta - e.phi, 0, e.phi, 0, None, None, None, e
        )
    p, s, q = e.alpha, e.phi, e.beta - e.phi
    if q < 0 or e.epsilon < e.alpha:
        raise UnclassifiedOverlap(
            f"bordered relator violates the derived-parameter preconditions: {e}"
        )
    if e.beta == e.delta and e.gamma == e.epsilon:
        r, k = e.gamma % p, e.gamma // p
        if k < 1:
            raise UnclassifiedOverlap(f"symmetric case with k = 0: {e}")
        if s == 1:
            label = "C1a"
        elif r > 0:
            label = "C1b"
        elif k == 1:
            label = "C1c"
        else:
            label = "C1d_lo" if q < s - 1 else "C1d_hi"
        return CaseClassification(label, p, q, r, s, k, None, None, None, e)

    r, k = e.epsilon % p, e.epsilon // p
    if k < 1:
        raise UnclassifiedOverlap(f"asymmetric case with k = 0: {e}")
    if r > 0:
        special_x = None
        if e.delta == q + s and e.gamma % p == r:
            x = (e.gamma - r) // p
            if 1 <= x <= k - 1:
                special_x = x
        if s == 1:
            label = "C2a_special" if special_x is not None else "C2a_basic"
        else:
            label = "C2b_special" if special_x is not None else "C2b_basic"
        return CaseClassification(label, p, q, r, s, k, special_x, None, None, e)
    if k > 1:
        label = "C2c_lo" if q < s - 1 else "C2c_hi"
        return CaseClassification(label, p, q, r, s, k, None, None, None, e)
    # r = 0, k = 1
    if e.gamma < p:
        return CaseClassification(
            "C2d_gamma_lt_p", p, q, r, s, k, None, 0, e.gamma, e
        )
    t, u = divmod(e.gamma, p)
    if u != 0:
        if e.delta < s:
            label = "C2d_u_pos_delta_lt_s"
        elif q < e.delta + 1 - s:
            label = "C2d_u_pos_delta_ge_s_lo"
        else:
            label = "C2d_u_pos_delta_ge_s_hi"
    elif t >= 2:
        label = "C2d_u0_t_ge2_delta_ge" if e.delta >= q + s else "C2d_u0_t_ge2_delta_lt"
    else:
        if e.delta < s:
            label = "C2d_u0_t1_delta_lt_s"
        elif q < e.delta - s + 1:
            label = "C2d_u0_t1_delta_ge_s_lo"
        else:
            label = "C2d_u0_t1_delta_ge_s_hi"
    return CaseClassification(label, p, q, r, s, k, None, t, u, e)


def _A(n: int) -> str:
    return "a" * n


def _B(n: int) -> str:
    return "b" * n


def _emit_1a(c: CaseClassification, rel: str, alt: bool) -> tuple[list, dict]:
    p, q, r, k = c.p, c.q, c.r, c.k
    rules = [(rel, "b")]
    for i in range(k):
        rules.append(
            (
                _A(p) + _B(q + 1) + _A(r + p * i) + "b",
                _B(q + 1) + _A(r + p * (i + 1)) + "b",
            )
        )
    return rules, {}


def _emit_1b(c: CaseClassification, rel: str, alt: bool) -> tuple[list, dict]:
    p, q, r, s, k = c.p, c.q, c.r, c.s, c.k
    tail = _B(q + s - 1) + _A(r + p * k) + _B(q + s) + _A(r + p * k) + _B(s)
    rules = [(rel, "b")]
    for i in range(k):
        rules.append(
            (
                _A(p) + _B(q + s) + _A(r + p * i) + "b",
                _B(q + 1) + _A(r + p * k) + _B(s) + tail * (k - 1 - i),
            )
        )
    return rules, {}


def _emit_1c(c: CaseClassification, rel: str, alt: bool) -> tuple[list, dict]:
    p, q, s = c.p, c.q, c.s
    body = _A(p) + _B(s)
    rules = [
        (body, "x"),
        ("x" + _B(q) + "x" + _B(q) + "x", "b"),
        ("x" + _B(q + 1), _B(q + 1) + "x"),
    ]
    return rules, {"x": body}


def _emit_1d(c: CaseClassification, rel: str, alt: bool) -> tuple[list, dict]:
    p, q, s, k = c.p, c.q, c.s, c.k
    body = _A(p * k) + _B(s)
    core = "x" + _B(q) + "x" + _B(q) + "x"
    blk = _B(q + s - 1) + "x" + _B(q) + "x"
    rules = [
        (_A(p) + core + _B(s - 1), "x"),
        (_A(p) + "b", core + blk * (k - 2)),
        (core + blk * (k - 1), "b"),
        (core + blk * (k - 2) + _B(q + s), _B(q + 1) + "x" + blk * (k - 1)),
        (
            core + blk * (k - 2) + _B(q + s - 1) + "x" + _B(q + 1),
            _B(q + 1) + "x" + _B(q) + "x" + blk * (k - 1),
        ),
    ]
    if c.label == "C1d_hi":
        rules.append(
            (_A(p) + "x" + _B(q + 1), "x" + _B(q - (s - 1)) + "x" + blk * (k - 1))
        )
        rules.append(
            (
                _A(p) + "x" + _B(q) + "x" + _B(q + 1),
                "x" + _B(q - (s - 1)) + "x" + _B(q) + "x" + blk * (k - 1),
            )
        )
    return rules, {"x": body}


def _emit_2a(c: CaseClassification, rel: str, alt: bool) -> tuple[list, dict]:
    e = c.exponents
    p, q, r, k = c.p, c.q, c.r, c.k
    mid = _A(e.gamma) + _B(e.delta)
    rules = [(rel, "b")]
    for i in range(k):
        run = _A(p * (i + r)) if alt else _A(p * i + r)
        rules.append(
            (
                _A(p) + _B(q + 1) + mid + run + "b",
                _B(q + 1) + mid + _A(p * (i + 1) + r) + "b",
            )
        )
    return rules, {}


def _emit_2a_special(c: CaseClassification, rel: str, alt: bool) -> tuple[list, dict]:
    p, q, r, k, x = c.p, c.q, c.r, c.k, c.x_index
    mid = _A(p * x + r)
    rules = [(rel, "b")]
    for i in range(x, k):
        run = _A(p * (i + r)) if alt else _A(p * i + r)
        rules.append(
            (
                _A(p) + _B(q + 1) + mid + _B(q + 1) + run + "b",
                _B(q + 1) + mid + _B(q + 1) + _A(p * (i + 1) + r) + "b",
            )
        )
    for j in range(x):
        rules.append(
            (
                _A(p) + _B(q + 1) + _A(p * j + r) + "b",
                _B(q + 1)
                + mid
                + _B(q + 1)
                + _A(p * (x + 1) + r)
                + _B(q + 1)
                + _A(p * (j + k - x + 1) + r)
                + "b",
            )
        )
    return rules, {}


def _emit_2b(c: CaseClassification, rel: str, alt: bool) -> tuple[list, dict]:
    e = c.exponents
    p, q, r, s, k = c.p, c.q, c.r, c.s, c.k
    mid = _A(e.gamma) + _B(e.delta)
    last = _A(p + k + r) if alt else _A(p * k + r)
    tail = _B(q + s - 1) + mid + last + _B(s)
    first_lhs = _A(p) + _B(q + s) + mid + last + _B(s) if alt else rel
    rules = [(first_lhs, "b")]
    for i in range(k):
        rules.append(
            (
                _A(p) + _B(q + s) + mid + _A(p * i + r) + "b",
                _B(q + 1) + mid + last + _B(s) + tail * (k - 1 - i),
            )
        )
    return rules, {}


def _emit_2b_special(c: CaseClassification, rel: str, alt: bool) -> tuple[list, dict]:
    p, q, r, s, k, x = c.p, c.q, c.r, c.s, c.k, c.x_index
    mid = _A(p * x + r)
    last = _A(p + k + r) if alt else _A(p * k + r)
    tail = _B(q + s - 1) + mid + _B(q + s) + last + _B(s)
    first_lhs = _A(p) + _B(q + s) + mid + _B(q + s) + last + _B(s) if alt else rel
    rules = [(first_lhs, "b")]
    for i in range(x, k):
        rules.append(
            (
                _A(p) + _B(q + s) + mid + _B(q + s) + _A(p * i + r) + "b",
                _B(q + 1) + mid + _B(q + s) + last + _B(s) + tail * (k - 1 - i),
            )
        )
    for j in range(x):
        rules.append(
            (
                _A(p) + _B(q + s) + _A(p * j + r) + "b",
                _B(q + 1)
                + mid
                + _B(q + s)
                + last
                + _B(s)
                + tail * (k - 1 - x)
                + _B(q + s - 1)
                + last
                + _B(s)
                + tail * (x - 1 - j),
            )
        )
    return rules, {}


def _emit_2c(c: CaseClassification, rel: str, alt: bool) -> tuple[list, dict]:
    e = c.exponents
    p, q, s, k = c.p, c.q, c.s, c.k
    defs = {
        "x": _A(p) + _B(q + s),
        "y": _A(e.gamma) + _B(e.delta),
        "z": _A(p * k) + _B(s),
    }
    blk = "yz" + _B(q + s - 1)
    rules = [
        (defs["y"], "y"),
        (_A(p) + "z" + _B(q) + "yz" + _B(s - 1), "z"),
        (_A(p) + "x", "z" + _B(q) + blk * (k - 2)),
        (_A(p) + "b", "z" + _B(q) + blk * (k - 2) + "yz"),
        ("xyz", "b"),
        ("z" + _B(q) + blk * (k - 1), "x"),
        ("xyx", _B(q + 1) + blk * (k - 1)),
        ("xyb", _B(q + 1) + blk * (k - 1) + "yz"),
    ]
    if c.label == "C2c_hi":
        rules.append(
            (_A(p) + "z" + _B(q) + "yx", "z" + _B(q - (s - 1)) + blk * (k - 1))
        )
        rules.append(
            (_A(p) + "z" + _B(q) + "yb", "z" + _B(q - (s - 1)) + blk * (k - 1) + "yz")
        )
    # The y-introduction rule swallows the a-block eliminator whenever
    # gamma >= p, leaving a second reduct of a^gamma b^delta that must
    # also reach y.  Close that pair for the parameter ranges where the
    # reduct's normal form has a uniform shape.
    gamma, delta = e.gamma, e.delta
    if gamma == p:
        if delta >= q + s:
            rules.append(("x" + _B(delta - (q + s)), "y"))
        else:
            rules.append(("z" + _B(q) + blk * (k - 2) + "yz" + _B(delta - 1), "y"))
    elif gamma >= k * p and delta >= s:
        rules.append((_A(gamma - k * p) + "z" + _B(delta - s), "y"))
    # With s = 1 the x-recovery rule overlaps its own tail; the extra
    # reduct pair needs one more rule to come back together.
    if s == 1:
        blk1 = "yz" + _B(q)
        rules.append(
            ("z" + _B(q) + blk1 * (k - 2) + "yx", _B(q + 1) + blk1 * (k - 2))
        )
    return rules, defs


def _emit_2d_gamma_lt_p(c: CaseClassification, rel: str, alt: bool) -> tuple[list, dict]:
    e = c.exponents
    p, q, s = c.p, c.q, c.s
    body = _A(p) + _B(s)
    g = _A(e.gamma)
    rules = [
        (body, "x"),
        ("x" + _B(q) + g + _B(e.delta) + "x", "b"),
        ("x" + _B(q) + g + _B(e.delta + 1), _B(q + 1) + g + _B(e.delta) + "x"),
    ]
    return rules, {"x": body}


def _emit_2d_u_pos_delta_lt_s(
    c: CaseClassification, rel: str, alt: bool
) -> tuple[list, dict]:
    e = c.exponents
    p, q, s, t, u = c.p, c.q, c.s, c.t, c.u
    body = _A(p) + _B(s)
    g = _A(p * t + u)
    head = _B(q + 1) + g + _B(e.delta) + "x"
    core = head + _B(s - (e.delta + 1))
    blk = _B(q) + g + _B(e.delta) + "x" + _B(s - 1)
    rules = [
        (body, "x"),
        ("x" + _B(q) + g + _B(e.delta) + "x", "b"),
        ("x" + _B(q) + g + _B(e.delta + 1), head),
    ]
    for i in range(t):
        rules.append(("x" + _B(q) + _A(p * i + u) + "x", core + blk * (t - 1 - i)))
    for i in range(t):
        rules.append(
            (
                "x" + _B(q) + _A(p * i + u) + "b",
                core + blk * (t - 1 - i) + _B(q) + g + _B(e.delta) + "x",
            )
        )
    return rules, {"x": body}


def _emit_2d_u_pos_delta_ge_s(
    c: CaseClassification, rel: str, alt: bool
) -> tuple[list, dict]:
    e = c.exponents
    p, q, s, t, u = c.p, c.q, c.s, c.t, c.u
    body = _A(p) + _B(s)
    run = _A(p * (t - 1) + u)
    w = run + "x" + _B(e.delta - s) + "x"
    rules = [
        (body, "x"),
        ("x" + _B(q) + w, "b"),
        ("x" + _B(q) + run + "x" + _B(e.delta + 1 - s), _B(q + 1) + w),
    ]
    if c.label == "C2d_u_pos_delta_ge_s_hi":

        def rhs_b(i: int) -> str:
            return (
                _B(q + 1)
                + w
                + _B(q - (e.delta + 1 - s))
                + w
                + (_B(q + s - 1) + w) * (t - 1 - i)
            )

        for i in range(t):
            rules.append(("x" + _B(q) + _A(p * i + u) + "b", rhs_b(i)))
        for i in range(t - 1):
            rules.append(("x" + _B(q) + _A(p * i + u) + "x", rhs_b(i + 1) + _B(s - 1)))
    return rules, {"x": body}


def _emit_2d_u0_t_ge2(c: CaseClassification, rel: str, alt: bool) -> tuple[list, dict]:
    e = c.exponents
    p, q, s, t = c.p, c.q, c.s, c.t
    body = _A(p * t) + _B(e.delta) + _A(p) + _B(s)
    rules = [
        (body, "x"),
        (_A(p) + _B(q + s) + "x", "b"),
        (_A(p * t) + _B(e.delta + 1), "x" + _B(q) + "x"),
    ]
    if c.label == "C2d_u0_t_ge2_delta_lt":
        # The low-delta branch needs the cascade words spelled out: the
        # base three rules overlap on a^{pt} b^{delta+1} and the resolvent
        # chain only closes when the a-block eliminator rewrites straight
        # into the cascade word.  Known gap: the resulting system is sound
        # and derives the defining relation but one self-overlap of the
        # cascade rule is not joinable, so local confluence fails; see the
        # acceptance suite, which documents this as an expected failure.
        core = "x" + _B(q) + "x" + _B(q + s - (e.delta + 1)) + "x"
        blk = _B(q + s - 1) + "x"
        cascade = core + blk * (t - 2)
        rules = [
            (_A(p) + "b", cascade),
            (_A(p) + core + cascade + _B(s - 1), "x"),
            (core + blk * (t - 1), "b"),
            (_A(p) + core + _B(e.delta), "x" + _B(q) + "x"),
        ]
    return rules, {"x": body}


def _emit_2d_u0_t1_delta_lt_s(
    c: CaseClassification, rel: str, alt: bool
) -> tuple[list, dict]:
    e = c.exponents
    p, q, s = c.p, c.q, c.s
    d = e.delta
    m = s - d
    body = _A(p) + _B(s)
    core = _A(p) + _B(d)
    head = _B(q + 1) + core + "x"
    rules = [
        (body, "x"),
        ("x" + _B(q) + core + "x", "b"),
        ("x" + _B(q) + core + "b", head),
    ]
    if m == 1:
        # one missing b: expansion rules oriented this way close the system
        rules += [
            ("x" + _B(q) + "x", head + _B(m - 1)),
            ("x" + _B(q + 1), head + _B(q + m - 1) + core + "x"),
        ]
    elif q == 0:
        # wider gap: expanding x b would reproduce its own left side inside
        # the right side and rewrite forever; orienting that rule the other
        # way around and closing the new overlaps gives five replacement
        # rules
        rules += [
            (_A(p) + _B(s - 1) + "xb", _B(m) + core + "x"),
            (_A(p) + _B(s - 1) + "xx", _B(m)),
            (head + _B(m - 1), "xx"),
            (head + _B(m - 2) + "xb", "x" + _B(m) + core + "x"),
            (head + _B(m - 2) + "xx", "x" + _B(m)),
        ]
    else:
        # wide gap with leading b-surplus: reversing the two looping
        # rules keeps every rule sound and the rewriting terminating,
        # but no finite closure of the remaining overlaps is known; the
        # emitted system is honest about that and fails confluence
        rules += [
            (head + _B(m - 1), "x" + _B(q) + "x"),
            (head + _B(q + m - 1) + core + "x", "x" + _B(q + 1)),
        ]
    return rules, {"x": body}


def _emit_2d_u0_t1_delta_ge_s(
    c: CaseClassification, rel: str, alt: bool
) -> tuple[list, dict]:
    e = c.exponents
    p, q, s = c.p, c.q, c.s
    body = _A(p) + _B(s)
    w = "x" + _B(e.delta - s) + "x"
    rules = [
        (body, "x"),
        ("x" + _B(q) + w, "b"),
        ("x" + _B(q) + "x" + _B(e.delta - s + 1), _B(q + 1) + w),
    ]
    if c.label == "C2d_u0_t1_delta_ge_s_hi":
        rules.append(
            ("x" + _B(q + 1), _B(q + 1) + w + _B(q - (e.delta - s + 1)) + w)
        )
    return rules, {"x": body}


_EMITTERS = {
    "C1a": _emit_1a,
    "C1b": _emit_1b,
    "C1c": _emit_1c,
    "C1d_lo": _emit_1d,
    "C1d_hi": _emit_1d,
    "C2a_basic": _emit_2a,
    "C2a_special": _emit_2a_special,
    "C2b_basic": _emit_2b,
    "C2b_special": _emit_2b_special,
    "C2c_lo": _emit_2c,
    "C2c_hi": _emit_2c,
    "C2d_gamma_lt_p": _emit_2d_gamma_lt_p,
    "C2d_u_pos_delta_lt_s": _emit_2d_u_pos_delta_lt_s,
    "C2d_u_pos_delta_ge_s_lo": _emit_2d_u_pos_delta_ge_s,
    "C2d_u_pos_delta_ge_s_hi": _emit_2d_u_pos_delta_ge_s,
    "C2d_u0_t_ge2_delta_ge": _emit_2d_u0_t_ge2,
    "C2d_u0_t_ge2_delta_lt": _emit_2d_u0_t_ge2,
    "C2d_u0_t1_delta_lt_s": _emit_2d_u0_t1_delta_lt_s,
    "C2d_u0_t1_delta_ge_s_lo": _emit_2d_u0_t1_delta_ge_s,
    "C2d_u0_t1_delta_ge_s_hi": _emit_2d_u0_t1_delta_ge_s,
}


def emit_system(e: RelatorExponents, reading: str = "canonical") -> RewriteSystem:
    """Instantiate the template selected by classify.

    ``reading`` selects between the canonical exponent reading and the
    alternate one retained for the templates whose sources are
    typographically ambiguous; labels without an ambiguity emit the same
    system under both readings.
    """
    if reading not in READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    c = classify(e)
    rel = relator_word(e)
    if c.label == "NoOverlap":
        pairs, defs = [(rel, "b")], {}
    else:
        pairs, defs = _EMITTERS[c.label](c, rel, reading == "alternate")
    alphabet = frozenset("ab") | set(defs)
    meta = {
        "case": c.label,
        "params": c.params(),
        "exponents": list(e.as_tuple()),
        "reading": reading,
        "anchors": [t for t in template_registry() if t.label == c.label][0].rules,
    }
    return RewriteSystem(
        alphabet=alphabet,
        rules=tuple(Rule(lhs, rhs) for lhs, rhs in pairs),
        definitions=defs,
        meta=meta,
    )


@dataclass(frozen=True)
class Template:
    """Symbolic description of one template: its side conditions, the
    auxiliary-letter definitions, and the rule schemas (with index
    families annotated in the schema string)."""

    label: str
    conditions: str
    extension: tuple[str, ...]
    definitions: dict
    rules: tuple[str, ...]


def template_registry() -> list[Template]:
    """All templates, one per label, as symbolic rule schemas."""
    lo_hi = "q < s-1 (lo) / q >= s-1 (hi)"
    return [
        Template(
            "NoOverlap",
            "relator has no border",
            (),
            {},
            ("relator -> b",),
        ),
        Template(
            "C1a",
            "beta = delta, gamma = epsilon, s = 1",
            (),
            {},
            (
                "relator -> b",
                "a^p b^{q+1} a^{r+pi} b -> b^{q+1} a^{r+p(i+1)} b, 0 <= i <= k-1",
            ),
        ),
        Template(
            "C1b",
            "beta = delta, gamma = epsilon, s > 1, r > 0",
            (),
            {},
            (
                "relator -> b",
                "a^p b^{q+s} a^{r+pi} b -> b^{q+1} a^{r+pk} b^s"
                " (b^{q+s-1} a^{r+pk} b^{q+s} a^{r+pk} b^s)^{k-1-i}, 0 <= i <= k-1",
            ),
        ),
        Template(
            "C1c",
            "beta = delta, gamma = epsilon, s > 1, r = 0, k = 1",
            ("x",),
            {"x": "a^p b^s"},
            (
                "a^p b^s -> x",
                "x b^q x b^q x -> b",
                "x b^{q+1} -> b^{q+1} x",
            ),
        ),
        Template(
            "C1d_lo",
            "beta = delta, gamma = epsilon, s > 1, r = 0, k >= 2, q < s-1",
            ("x",),
            {"x": "a^{pk} b^s"},
            (
                "a^p x b^q x b^q x b^{s-1} -> x",
                "a^p b -> x b^q x b^q x (b^{q+s-1} x b^q x)^{k-2}",
                "x b^q x b^q x (b^{q+s-1} x b^q x)^{k-1} -> b",
                "x b^q x b^q x (b^{q+s-1} x b^q x)^{k-2} b^{q+s}"
                " -> b^{q+1} x (b^{q+s-1} x b^q x)^{k-1}",
                "x b^q x b^q x (b^{q+s-1} x b^q x)^{k-2} b^{q+s-1} x b^{q+1}"
                " -> b^{q+1} x b^q x (b^{q+s-1} x b^q x)^{k-1}",
            ),
        ),
        Template(
            "C1d_hi",
            "beta = delta, gamma = epsilon, s > 1, r = 0, k >= 2, q >= s-1",
            ("x",),
            {"x": "a^{pk} b^s"},
            (
                "a^p x b^q x b^q x b^{s-1} -> x",
                "a^p b -> x b^q x b^q x (b^{q+s-1} x b^q x)^{k-2}",
                "x b^q x b^q x (b^{q+s-1} x b^q x)^{k-1} -> b",
                "x b^q x b^q x (b^{q+s-1} x b^q x)^{k-2} b^{q+s}"
                " -> b^{q+1} x (b^{q+s-1} x b^q x)^{k-1}",
                "x b^q x b^q x (b^{q+s-1} x b^q x)^{k-2} b^{q+s-1} x b^{q+1}"
                " -> b^{q+1} x b^q x (b^{q+s-1} x b^q x)^{k-1}",
                "a^p x b^{q+1} -> x b^{q-(s-1)} x (b^{q+s-1} x b^q x)^{k-1}",
                "a^p x b^q x b^{q+1} -> x b^{q-(s-1)} x b^q x (b^{q+s-1} x b^q x)^{k-1}",
            ),
        ),
        Template(
            "C2a_basic",
            "asymmetric, r > 0, s = 1, not (delta = q+1 and gamma = px+r, 1 <= x <= k-1)",
            (),
            {},
            (
                "relator -> b",
                "a^p b^{q+1} a^gamma b^delta a^{pi+r} b"
                " -> b^{q+1} a^gamma b^delta a^{p(i+1)+r} b, 0 <= i <= k-1",
            ),
        ),
        Template(
            "C2a_special",
            "asymmetric, r > 0, s = 1, delta = q+1, gamma = px+r with 1 <= x <= k-1",
            (),
            {},
            (
                "a^p b^{q+1} a^{px+r} b^{q+1} a^{pk+r} b -> b",
                "a^p b^{q+1} a^{px+r} b^{q+1} a^{pi+r} b"
                " -> b^{q+1} a^{px+r} b^{q+1} a^{p(i+1)+r} b, x <= i <= k-1",
                "a^p b^{q+1} a^{pj+r} b -> b^{q+1} a^{px+r} b^{q+1} a^{p(x+1)+r}"
                " b^{q+1} a^{p(j+k-x+1)+r} b, 0 <= j <= x-1",
            ),
        ),
        Template(
            "C2b_basic",
            "asymmetric, r > 0, s > 1, not (delta = q+s and gamma = px+r, 1 <= x <= k-1)",
            (),
            {},
            (
                "relator -> b",
                "a^p b^{q+s} a^gamma b^delta a^{pi+r} b -> b^{q+1} a^gamma b^delta"
                " a^{pk+r} b^s (b^{q+s-1} a^gamma b^delta a^{pk+r} b^s)^{k-1-i},"
                " 0 <= i <= k-1",
            ),
        ),
        Template(
            "C2b_special",
            "asymmetric, r > 0, s > 1, delta = q+s, gamma = px+r with 1 <= x <= k-1",
            (),
            {},
            (
                "a^p b^{q+s} a^{px+r} b^{q+s} a^{pk+r} b^s -> b",
                "a^p b^{q+s} a^{px+r} b^{q+s} a^{pi+r} b -> b^{q+1} a^{px+r} b^{q+s}"
                " a^{pk+r} b^s (b^{q+s-1} a^{px+r} b^{q+s} a^{pk+r} b^s)^{k-1-i},"
                " x <= i <= k-1",
                "a^p b^{q+s} a^{pj+r} b -> b^{q+1} a^{px+r} b^{q+s} a^{pk+r} b^s"
                " (b^{q+s-1} a^{px+r} b^{q+s} a^{pk+r} b^s)^{k-1-x} b^{q+s-1}"
                " a^{pk+r} b^s (b^{q+s-1} a^{px+r} b^{q+s} a^{pk+r} b^s)^{x-1-j},"
                " 0 <= j <= x-1",
            ),
        ),
        Template(
            "C2c_lo",
            "asymmetric, r = 0, k > 1, q < s-1",
            ("x", "y", "z"),
            {"x": "a^p b^{q+s}", "y": "a^gamma b^delta", "z": "a^{pk} b^s"},
            (
                "a^gamma b^delta -> y",
                "a^p z b^q y z b^{s-1} -> z",
                "a^p x -> z b^q (y z b^{q+s-1})^{k-2}",
                "a^p b -> z b^q (y z b^{q+s-1})^{k-2} y z",
                "x y z -> b",
                "z b^q (y z b^{q+s-1})^{k-1} -> x",
                "x y x -> b^{q+1} (y z b^{q+s-1})^{k-1}",
                "x y b -> b^{q+1} (y z b^{q+s-1})^{k-1} y z",
            ),
        ),
        Template(
            "C2c_hi",
            "asymmetric, r = 0, k > 1, q >= s-1",
            ("x", "y", "z"),
            {"x": "a^p b^{q+s}", "y": "a^gamma b^delta", "z": "a^{pk} b^s"},
            (
                "a^gamma b^delta -> y",
                "a^p z b^q y z b^{s-1} -> z",
                "a^p x -> z b^q (y z b^{q+s-1})^{k-2}",
                "a^p b -> z b^q (y z b^{q+s-1})^{k-2} y z",
                "x y z -> b",
                "z b^q (y z b^{q+s-1})^{k-1} -> x",
                "x y x -> b^{q+1} (y z b^{q+s-1})^{k-1}",
                "x y b -> b^{q+1} (y z b^{q+s-1})^{k-1} y z",
                "a^p z b^q y x -> z b^{q-(s-1)} (y z b^{q+s-1})^{k-1}",
                "a^p z b^q y b -> z b^{q-(s-1)} (y z b^{q+s-1})^{k-1} y z",
            ),
        ),
        Template(
            "C2d_gamma_lt_p",
            "asymmetric, r = 0, k = 1, gamma < p",
            ("x",),
            {"x": "a^p b^s"},
            (
                "a^p b^s -> x",
                "x b^q a^gamma b^delta x -> b",
                "x b^q a^gamma b^{delta+1} -> b^{q+1} a^gamma b^delta x",
            ),
        ),
        Template(
            "C2d_u_pos_delta_lt_s",
            "asymmetric, r = 0, k = 1, gamma = pt+u, u > 0, delta < s",
            ("x",),
            {"x": "a^p b^s"},
            (
                "a^p b^s -> x",
                "x b^q a^{pt+u} b^delta x -> b",
                "x b^q a^{pt+u} b^{delta+1} -> b^{q+1} a^{pt+u} b^delta x",
                "x b^q a^{pi+u} x -> b^{q+1} a^{pt+u} b^delta x b^{s-(delta+1)}"
                " (b^q a^{pt+u} b^delta x b^{s-1})^{t-1-i}, 0 <= i <= t-1",
                "x b^q a^{pi+u} b -> b^{q+1} a^{pt+u} b^delta x b^{s-(delta+1)}"
                " (b^q a^{pt+u} b^delta x b^{s-1})^{t-1-i} b^q a^{pt+u} b^delta x,"
                " 0 <= i <= t-1",
            ),
        ),
        Template(
            "C2d_u_pos_delta_ge_s_lo",
            "asymmetric, r = 0, k = 1, gamma = pt+u, u > 0, delta >= s, q < delta+1-s",
            ("x",),
            {"x": "a^p b^s"},
            (
                "a^p b^s -> x",
                "x b^q a^{p(t-1)+u} x b^{delta-s} x -> b",
                "x b^q a^{p(t-1)+u} x b^{delta+1-s} -> b^{q+1} a^{p(t-1)+u} x b^{delta-s} x",
            ),
        ),
        Template(
            "C2d_u_pos_delta_ge_s_hi",
            "asymmetric, r = 0, k = 1, gamma = pt+u, u > 0, delta >= s, q >= delta+1-s",
            ("x",),
            {"x": "a^p b^s"},
            (
                "a^p b^s -> x",
                "x b^q a^{p(t-1)+u} x b^{delta-s} x -> b",
                "x b^q a^{p(t-1)+u} x b^{delta+1-s} -> b^{q+1} a^{p(t-1)+u} x b^{delta-s} x",
                "x b^q a^{pi+u} b -> b^{q+1} a^{p(t-1)+u} x b^{delta-s} x"
                " b^{q-(delta+1-s)} a^{p(t-1)+u} x b^{delta-s} x"
                " (b^{q+s-1} a^{p(t-1)+u} x b^{delta-s} x)^{t-1-i}, 0 <= i <= t-1",
                "x b^q a^{pi+u} x -> b^{q+1} a^{p(t-1)+u} x b^{delta-s} x"
                " b^{q-(delta+1-s)} a^{p(t-1)+u} x b^{delta-s} x"
                " (b^{q+s-1} a^{p(t-1)+u} x b^{delta-s} x)^{t-2-i} b^{s-1},"
                " 0 <= i <= t-2",
            ),
        ),
        Template(
            "C2d_u0_t_ge2_delta_ge",
            "asymmetric, r = 0, k = 1, gamma = pt, t >= 2, delta >= q+s",
            ("x",),
            {"x": "a^{pt} b^delta a^p b^s"},
            (
                "a^{pt} b^delta a^p b^s -> x",
                "a^p b^{q+s} x -> b",
                "a^{pt} b^{delta+1} -> x b^q x",
            ),
        ),
        Template(
            "C2d_u0_t_ge2_delta_lt",
            "asymmetric, r = 0, k = 1, gamma = pt, t >= 2, delta <= q+s-1",
            ("x",),
            {"x": "a^{pt} b^delta a^p b^s"},
            (
                "a^p b -> C (b^{q+s-1} x)^{t-2}  with C = x b^q x b^{q+s-(delta+1)} x",
                "a^p C C (b^{q+s-1} x)^{t-2} b^{s-1} -> x",
                "C (b^{q+s-1} x)^{t-1} -> b",
                "a^p C b^delta -> x b^q x",
            ),
        ),
        Template(
            "C2d_u0_t1_delta_lt_s",
            "asymmetric, r = 0, k = 1, gamma = p, delta < s",
            ("x",),
            {"x": "a^p b^s"},
            (
                "a^p b^s -> x",
                "x b^q a^p b^delta x -> b",
                "x b^q a^p b^{delta+1} -> b^{q+1} a^p b^delta x",
                "[delta = s-1] x b^q x -> b^{q+1} a^p b^delta x",
                "[delta = s-1] x b^{q+1} ->"
                " b^{q+1} a^p b^delta x b^q a^p b^delta x",
                "[delta <= s-2, q = 0] a^p b^{s-1} x b -> b^{s-delta} a^p b^delta x",
                "[delta <= s-2, q = 0] a^p b^{s-1} x x -> b^{s-delta}",
                "[delta <= s-2, q = 0] b a^p b^delta x b^{s-delta-1} -> x x",
                "[delta <= s-2, q = 0] b a^p b^delta x b^{s-delta-2} x b ->"
                " x b^{s-delta} a^p b^delta x",
                "[delta <= s-2, q = 0] b a^p b^delta x b^{s-delta-2} x x ->"
                " x b^{s-delta}",
                "[delta <= s-2, q >= 1] b^{q+1} a^p b^delta x b^{s-delta-1} ->"
                " x b^q x",
                "[delta <= s-2, q >= 1] b^{q+1} a^p b^delta x b^{q+s-delta-1}"
                " a^p b^delta x -> x b^{q+1}",
            ),
        ),
        Template(
            "C2d_u0_t1_delta_ge_s_lo",
            "asymmetric, r = 0, k = 1, gamma = p, delta >= s, q < delta-s+1",
            ("x",),
            {"x": "a^p b^s"},
            (
                "a^p b^s -> x",
                "x b^q x b^{delta-s} x -> b",
                "x b^q x b^{delta-s+1} -> b^{q+1} x b^{delta-s} x",
            ),
        ),
        Template(
            "C2d_u0_t1_delta_ge_s_hi",
            "asymmetric, r = 0, k = 1, gamma = p, delta >= s, q >= delta-s+1",
            ("x",),
            {"x": "a^p b^s"},
            (
                "a^p b^s -> x",
                "x b^q x b^{delta-s} x -> b",
                "x b^q x b^{delta-s+1} -> b^{q+1} x b^{delta-s} x",
                "x b^{q+1} -> b^{q+1} x b^{delta-s} x b^{q-(delta-s+1)} x b^{delta-s} x",
            ),
        ),
    ]
