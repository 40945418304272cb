"""Randomized oracle suites, reference-instance fixtures and saturation tables.

Every suite compares a closed formula against the brute-force colon chain
computed with ``method="general"`` (no strongly-stable shortcut), so the
oracle never relies on the statement being checked.  Trial ``t`` of a run
with seed ``s`` draws from ``random.Random(s ^ t)``.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .borel import (
    borel_closure,
    bounded_borel_closure,
    bounded_stable_closure,
    principal_power,
    principal_power_layer,
    sat_principal_power,
    stable_closure,
)
from .ideal import (
    MonomialIdeal,
    contains,
    generator_degree,
    ideal_sum,
    is_bounded_stable,
    is_bounded_strongly_stable,
    is_equigenerated,
    is_strongly_stable,
    parse_ideal,
    power,
    product,
    to_json_obj,
)
from .monomial import Monomial, parse_monomial
from .saturation import (
    colon_max,
    colon_var,
    equigen_formula_value,
    layer_formula_equigen,
    sat_equigen_bounded_formula,
    sat_strongly_stable_formula,
    saturate,
    socle_equigen_bounded,
)
from .veronese import (
    VeroneseSpec,
    quasilinear,
    sat_veronese,
    sat_veronese_power,
    veronese_colon_identity,
    veronese_ideal,
    veronese_is_zero,
    veronese_layer,
)

ORACLE = "general"

SUITES = (
    "proffind",
    "socle",
    "sat-formula",
    "subadditivity",
    "layers-jk",
    "soclepower",
    "veronese",
    "quasilinear",
    "stable-conjecture",
)


@dataclass(frozen=True)
class VerifyConfig:
    suite: str
    trials: int = 200
    seed: int = 42
    n_max: int = 4
    deg_max: int = 5
    bound_max: int = 4
    k_max: int = 3

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES)}")
        if self.trials < 1:
            raise ValueError("trials must be positive")


@dataclass
class VerifyReport:
    suite: str
    trials: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    seed: int | None = None
    observations: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, trial: int, check: str, instance: dict, detail: str = "") -> None:
        self.failures.append({"trial": trial, "check": check, "instance": instance, "detail": detail})

    def to_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "trials": self.trials,
            "failures": sorted(self.failures, key=lambda f: (f["trial"], f["check"])),
            "observations": self.observations,
        }

    def summary(self) -> str:
        head = f"{self.suite}: {self.trials} trials, {len(self.failures)} failures"
        lines = [head]
        for k, v in self.observations.items():
            lines.append(f"  {k}: {v}")
        for f in sorted(self.failures, key=lambda f: (f["trial"], f["check"])):
            inst = json.dumps(f["instance"], sort_keys=True)
            lines.append(f"  FAIL trial {f['trial']} [{f['check']}] {f['detail']}")
            lines.append(f"    instance: {inst}")
            if "ideal" in f["instance"]:
                lines.append(f"    replay: satmon sat '{json.dumps(f['instance']['ideal'])}'")
        return "\n".join(lines)


# -- instance generators ------------------------------------------------------


def random_composition(rng: random.Random, d: int, n: int, bound=None, tail_bias: bool = False) -> tuple:
    """A random exponent vector of total ``d``, optionally bounded, built one unit at a time.

    With ``tail_bias`` slot ``i`` is weighted by ``i + 1``, which favours seeds
    divisible by high powers of the last variable.
    """
    exps = [0] * n
    for _ in range(d):
        open_slots = [i for i in range(n) if bound is None or exps[i] < bound[i]]
        if not open_slots:
            raise ValueError(f"no vector of degree {d} fits under {bound}")
        if tail_bias:
            exps[rng.choices(open_slots, weights=[i + 1 for i in open_slots])[0]] += 1
        else:
            exps[rng.choice(open_slots)] += 1
    return tuple(exps)


def random_strongly_stable(
    rng: random.Random,
    n_max: int = 4,
    deg_max: int = 5,
    *,
    equigenerated: bool = False,
    bounded: bool = False,
    bound_max: int = 4,
    stable_only: bool = False,
    n: int | None = None,
):
    """A random (bounded) Borel ideal over 1-3 random seeds.

    Returns ``(ideal, bound)`` where ``bound`` is None for unbounded instances.
    ``stable_only`` closes under the stable moves instead.
    """
    n = n if n is not None else rng.randint(2, n_max)
    m = rng.randint(1, 3)
    if bounded:
        # mostly positive entries, so that bounded moves are not all blocked
        c = tuple(rng.randint(1, bound_max) if rng.random() < 0.9 else 0 for _ in range(n))
        while sum(c) == 0:
            c = tuple(rng.randint(0, bound_max) for _ in range(n))
        top = min(deg_max, sum(c))
        d = rng.randint(1, top)
        degs = [d] * m if equigenerated else [rng.randint(1, top) for _ in range(m)]
        seeds = [random_composition(rng, e, n, c, tail_bias=rng.random() < 0.5) for e in degs]
        close = bounded_stable_closure if stable_only else bounded_borel_closure
        return close(seeds, c, n), c
    d = rng.randint(1, deg_max)
    degs = [d] * m if equigenerated else [rng.randint(1, deg_max) for _ in range(m)]
    seeds = [random_composition(rng, e, n) for e in degs]
    close = stable_closure if stable_only else borel_closure
    return close(seeds, n), None


def _inst(I: MonomialIdeal, c=None, **extra) -> dict:
    out = {"ideal": to_json_obj(I)}
    if c is not None:
        out["bound"] = list(c)
    out.update(extra)
    return out


def veronese_grid(n_values=(2, 3, 4), a_max: int = 4, d_max: int = 8):
    """Every Veronese datum with non-increasing ``0 <= a_i <= a_max``, ``0 <= d <= d_max`` and ``sum(a) >= d``."""
    for n in n_values:
        for a in itertools.combinations_with_replacement(range(a_max, -1, -1), n):
            for d in range(0, min(d_max, sum(a)) + 1):
                yield VeroneseSpec(a, d)


# -- individual checks (each returns a list of (check, detail) failures) ------


def check_proffind(I: MonomialIdeal) -> list:
    out = []
    oracle = saturate(I, ORACLE).sat
    formula = sat_strongly_stable_formula(I)
    if formula != oracle:
        out.append(("sat", f"formula {formula} != oracle {oracle}"))
    if colon_max(I, ORACLE) != colon_var(I, I.n):
        out.append(("colon-xn", "I:m != I:x_n"))
    return out


def check_socle(I: MonomialIdeal, c) -> list:
    out = []
    J = socle_equigen_bounded(I, c)
    if colon_max(I, ORACLE) != ideal_sum(I, J):
        out.append(("socle", f"I:m != I + J with J = {J}"))
    d = generator_degree(I)
    if not J.is_zero() and generator_degree(J) != d - 1:
        out.append(("socle-degree", f"J = {J} not generated in degree {d - 1}"))
    cm = tuple(x - 1 for x in c)
    if not J.is_zero() and is_bounded_strongly_stable(I, c) and not is_bounded_strongly_stable(J, cm):
        out.append(("socle-stability", f"J = {J} is not (c-e)-bounded strongly stable"))
    return out


def check_sat_formula(I: MonomialIdeal, c) -> list:
    out = []
    rep = saturate(I, ORACLE)
    formula = sat_equigen_bounded_formula(I, c)
    if formula != rep.sat:
        out.append(("sat", f"formula {formula} != oracle {rep.sat}"))
    for ell in range(1, len(rep.layers)):
        got = layer_formula_equigen(I, c, ell)
        if got != rep.layers[ell]:
            out.append(("layer", f"layer {ell}: formula {got} != oracle {rep.layers[ell]}"))
    if colon_max(I, ORACLE) != ideal_sum(I, socle_equigen_bounded(I, c)):
        out.append(("socle", "I:m != I + J"))
    return out


def check_layers_jk(I: MonomialIdeal, linear: bool) -> list:
    """Layer structure of the colon chain; ``linear`` adds the equigenerated strongly stable checks."""
    out = []
    rep = saturate(I, ORACLE)
    acc = MonomialIdeal.zero(I.n)
    for ell, (C, J) in enumerate(zip(rep.chain, rep.layers)):
        acc = ideal_sum(acc, J)
        if acc != C:
            out.append(("sum", f"chain[{ell}] != sum of layers[0..{ell}]"))
    for ell, J in enumerate(rep.layers):
        if 1 <= ell <= rep.sat and J.is_zero():
            out.append(("nonvanishing", f"layer {ell} vanishes below sat = {rep.sat}"))
        if ell > rep.sat and not J.is_zero():
            out.append(("vanishing", f"layer {ell} nonzero above sat = {rep.sat}"))
    if linear and not I.is_zero():
        d = generator_degree(I)
        if rep.sat >= 1 and generator_degree(rep.layers[1]) != d - 1:
            out.append(("degree", f"layer 1 not generated in degree {d - 1}"))
        layers = list(rep.layers) + [MonomialIdeal.zero(I.n)]
        for ell in range(rep.sat + 1):
            lhs = colon_max(layers[ell], ORACLE)
            rhs = ideal_sum(layers[ell], layers[ell + 1])
            if lhs != rhs:
                out.append(("jk-d", f"J_{ell}:m != J_{ell} + J_{ell + 1}"))
    return out


def check_subadditivity(I: MonomialIdeal, J: MonomialIdeal) -> list:
    out = []
    IJ = product(I, J)
    if not is_strongly_stable(IJ):
        out.append(("product-stable", "IJ is not strongly stable"))
    si, sj, sij = (saturate(X, ORACLE).sat for X in (I, J, IJ))
    if sij > si + sj:
        out.append(("subadditive", f"sat(IJ) = {sij} > {si} + {sj}"))
    if is_equigenerated(I) and is_equigenerated(J) and sij != si + sj:
        out.append(("additive", f"equigenerated but sat(IJ) = {sij} != {si} + {sj}"))
    return out


def check_soclepower(u: Monomial, c, k: int) -> list:
    out = []
    n = u.n
    base = bounded_borel_closure([u], c, n)
    Ik = principal_power(u, c, k)
    direct = power(base, k)
    if direct != Ik:
        out.append(("power", f"B^c(u)^k = {direct} != B^kc(u^k) = {Ik}"))
    rep = saturate(direct, ORACLE)
    # a seed outside the bound k*c - e contributes nothing to I^k : m
    expected = ideal_sum(direct, principal_power_layer(u, c, k, 1)) if u.exps[-1] else direct
    if rep.chain[1] != expected:
        out.append(("socle", f"I^k:m = {rep.chain[1]} != {expected}"))
    for ell in range(0, k * u.exps[-1] + 1):
        got = principal_power_layer(u, c, k, ell)
        have = rep.layers[ell] if ell < len(rep.layers) else MonomialIdeal.zero(n)
        if got != have:
            out.append(("layer", f"layer {ell}: formula {got} != oracle {have}"))
    if not u.is_unit():
        formula = sat_principal_power(u, c, k)
        if formula != rep.sat:
            out.append(("sat", f"formula {formula} != oracle {rep.sat}"))
    return out


def check_veronese_cell(spec: VeroneseSpec) -> list:
    out = []
    I = veronese_ideal(spec)
    rep = saturate(I, ORACLE)
    formula = sat_veronese(spec)
    if formula != rep.sat:
        out.append(("sat", f"formula {formula} != oracle {rep.sat}"))
    for ell in range(rep.sat + 2):
        have = rep.layers[ell] if ell < len(rep.layers) else MonomialIdeal.zero(spec.n)
        if veronese_layer(spec, ell) != have:
            out.append(("layer", f"layer {ell} differs"))
    if not veronese_colon_identity(spec, ORACLE):
        out.append(("colon", "I:m != I + I_{a-e,n,d-1}"))
    if not I.is_zero() and not is_bounded_strongly_stable(I, spec.a):
        out.append(("bounded-strongly-stable", "not a-bounded strongly stable"))
    return out


def check_quasilinear_cell(spec: VeroneseSpec, k_oracle: int, k_formula: int = 20) -> list:
    out = []
    q = quasilinear(spec)
    for k in range(1, k_formula + 1):
        v = q.evaluate(k)
        if v != sat_veronese_power(spec, k):
            out.append(("quasilinear", f"k={k}: f(k) = {v} != {sat_veronese_power(spec, k)}"))
    I = veronese_ideal(spec)
    Ik = I
    for k in range(1, k_oracle + 1):
        if k > 1:
            Ik = product(Ik, I)
        if Ik != veronese_ideal(spec.scaled(k)):
            out.append(("power-identity", f"k={k}: I^k != I_(ka,n,kd)"))
        oracle = saturate(Ik, ORACLE).sat
        if oracle != sat_veronese_power(spec, k):
            out.append(("power-sat", f"k={k}: formula {sat_veronese_power(spec, k)} != oracle {oracle}"))
        if q.evaluate(k) != oracle:
            out.append(("quasilinear-oracle", f"k={k}: f(k) = {q.evaluate(k)} != oracle {oracle}"))
    return out


# -- suites -------------------------------------------------------------------


def _random_trials(cfg: VerifyConfig, report: VerifyReport, body: Callable) -> None:
    for t in range(cfg.trials):
        rng = random.Random(cfg.seed ^ t)
        for check, detail, inst in body(rng, t):
            report.fail(t, check, inst, detail)
        report.trials += 1


def proffind_instance(cfg: VerifyConfig, t: int) -> MonomialIdeal:
    """Trial ``t`` of the proffind suite; every third instance is equigenerated."""
    rng = random.Random(cfg.seed ^ t)
    I, _ = random_strongly_stable(rng, cfg.n_max, cfg.deg_max, equigenerated=(t % 3 == 0))
    return I


def sat_formula_instance(cfg: VerifyConfig, t: int):
    """Trial ``t`` of the sat-formula suite: ``(ideal, bound)``."""
    rng = random.Random(cfg.seed ^ t)
    return random_strongly_stable(
        rng, cfg.n_max, cfg.deg_max, equigenerated=True, bounded=True, bound_max=cfg.bound_max
    )


def _suite_proffind(cfg, report):
    def body(rng, t):
        I = proffind_instance(cfg, t)
        return [(c, d, _inst(I)) for c, d in check_proffind(I)]

    _random_trials(cfg, report, body)


def _suite_socle(cfg, report):
    def body(rng, t):
        # alternate strongly stable and merely stable bounded instances
        I, c = random_strongly_stable(
            rng, cfg.n_max, cfg.deg_max, equigenerated=True, bounded=True,
            bound_max=cfg.bound_max, stable_only=(t % 2 == 1),
        )
        return [(ch, d, _inst(I, c)) for ch, d in check_socle(I, c)]

    _random_trials(cfg, report, body)


def _suite_sat_formula(cfg, report):
    def body(rng, t):
        I, c = sat_formula_instance(cfg, t)
        return [(ch, d, _inst(I, c)) for ch, d in check_sat_formula(I, c)]

    _random_trials(cfg, report, body)


def _suite_layers_jk(cfg, report):
    def body(rng, t):
        kind = t % 3
        if kind == 0:
            I, c = random_strongly_stable(rng, cfg.n_max, cfg.deg_max)
        elif kind == 1:
            I, c = random_strongly_stable(rng, cfg.n_max, cfg.deg_max, equigenerated=True)
        else:
            I, c = random_strongly_stable(
                rng, cfg.n_max, cfg.deg_max, equigenerated=True, bounded=True, bound_max=cfg.bound_max
            )
        linear = kind == 1
        return [(ch, d, _inst(I, c)) for ch, d in check_layers_jk(I, linear)]

    _random_trials(cfg, report, body)


def _suite_subadditivity(cfg, report):
    I = borel_closure([parse_monomial("x2^2*x3^2", 3), parse_monomial("x1*x3", 3)], 3)
    J = borel_closure([parse_monomial("x1*x3^2", 3), parse_monomial("x2^2*x3", 3)], 3)
    pinned = tuple(saturate(X, ORACLE).sat for X in (I, J, product(I, J)))
    report.observations["pinned sat(I), sat(J), sat(IJ)"] = list(pinned)
    if pinned != (2, 2, 3):
        report.fail(-1, "pinned", {"I": to_json_obj(I), "J": to_json_obj(J)}, f"got {pinned}")

    def body(rng, t):
        n = rng.randint(2, cfg.n_max)
        equi = t % 2 == 0
        A, _ = random_strongly_stable(rng, cfg.n_max, cfg.deg_max, equigenerated=equi, n=n)
        B, _ = random_strongly_stable(rng, cfg.n_max, cfg.deg_max, equigenerated=equi, n=n)
        inst = {"I": to_json_obj(A), "J": to_json_obj(B), "ideal": to_json_obj(product(A, B))}
        return [(ch, d, inst) for ch, d in check_subadditivity(A, B)]

    _random_trials(cfg, report, body)


def random_principal_seed(rng: random.Random, n_max: int, deg_max: int, bound_max: int):
    n = rng.randint(2, n_max)
    c = tuple(rng.randint(1, bound_max) for _ in range(n))
    d = rng.randint(1, min(deg_max, sum(c)))
    return Monomial(random_composition(rng, d, n, c)), c


def _suite_soclepower(cfg, report):
    def body(rng, t):
        u, c = random_principal_seed(rng, cfg.n_max, min(cfg.deg_max, 4), cfg.bound_max)
        k = rng.randint(1, cfg.k_max)
        inst = {"u": list(u.exps), "bound": list(c), "k": k,
                "ideal": to_json_obj(bounded_borel_closure([u], c, u.n))}
        return [(ch, d, inst) for ch, d in check_soclepower(u, c, k)]

    _random_trials(cfg, report, body)


def _spec_inst(spec: VeroneseSpec) -> dict:
    return {"a": list(spec.a), "d": spec.d, "ideal": to_json_obj(veronese_ideal(spec))}


def _suite_veronese(cfg, report):
    for t, spec in enumerate(veronese_grid()):
        for ch, d in check_veronese_cell(spec):
            report.fail(t, ch, _spec_inst(spec), d)
        report.trials += 1
    # vanishing criterion against enumeration, negative entries and any order allowed
    cells = 0
    for n in range(1, 5):
        for a in itertools.product(range(-1, 4), repeat=n):
            for d in range(-1, 9):
                spec = VeroneseSpec(a, d)
                enumerated_empty = _brute_force_empty(a, d)
                if veronese_is_zero(spec) != enumerated_empty:
                    report.fail(-1, "vanishing", {"a": list(a), "d": d}, "criterion disagrees")
                cells += 1
    report.observations["vanishing cells"] = cells


def _brute_force_empty(a, d) -> bool:
    """True when no vector with entries ``0 <= b_i <= a_i`` sums to ``d``."""
    if d < 0:
        return True
    ranges = [range(0, x + 1) for x in a]
    return not any(sum(b) == d for b in itertools.product(*ranges))


def _suite_quasilinear(cfg, report):
    for t, spec in enumerate(veronese_grid()):
        k_oracle = max(cfg.k_max, 5) if spec.n == 2 else cfg.k_max
        for ch, d in check_quasilinear_cell(spec, k_oracle):
            report.fail(t, ch, _spec_inst(spec), d)
        report.trials += 1


def _suite_stable_conjecture(cfg, report):
    agree = disagree = 0
    examples = []

    def body(rng, t):
        nonlocal agree, disagree
        I, c = random_strongly_stable(
            rng, cfg.n_max, cfg.deg_max, equigenerated=True, bounded=True,
            bound_max=cfg.bound_max, stable_only=True,
        )
        if equigen_formula_value(I, c) == saturate(I, ORACLE).sat:
            agree += 1
        else:
            disagree += 1
            if len(examples) < 5:
                examples.append(_inst(I, c))
        return []

    _random_trials(cfg, report, body)
    report.observations["formula agrees"] = agree
    report.observations["formula disagrees"] = disagree
    if examples:
        report.observations["counterexamples"] = examples


_SUITE_FUNCS = {
    "proffind": _suite_proffind,
    "socle": _suite_socle,
    "sat-formula": _suite_sat_formula,
    "subadditivity": _suite_subadditivity,
    "layers-jk": _suite_layers_jk,
    "soclepower": _suite_soclepower,
    "veronese": _suite_veronese,
    "quasilinear": _suite_quasilinear,
    "stable-conjecture": _suite_stable_conjecture,
}


def run_suite(cfg: VerifyConfig) -> VerifyReport:
    """Run one suite.  ``stable-conjecture`` only records observations and never fails."""
    report = VerifyReport(suite=cfg.suite, seed=cfg.seed)
    start = time.perf_counter()
    _SUITE_FUNCS[cfg.suite](cfg, report)
    report.elapsed = time.perf_counter() - start
    return report


# -- reference fixtures -------------------------------------------------------


def _I(text: str, n: int) -> MonomialIdeal:
    return parse_ideal(text, n)


def _m(text: str, n: int) -> Monomial:
    return parse_monomial(text, n)


REFERENCE_LISTS = {
    "squarefree_square": (
        4,
        "x1^2*x2^2,x1^2*x2*x3,x1^2*x2*x4,x1*x2^2*x3,x1^2*x3^2,"
        "x1^2*x3*x4,x1*x2*x3^2,x1^2*x4^2,x1*x2*x3*x4,x2^2*x3^2",
    ),
    "stable_closure": (3, "x1^2*x2,x1*x2^2,x1*x2*x3"),
    "stable_closure_squared": (
        3, "x1^4*x2^2,x1^3*x2^3,x1^2*x2^4,x1^3*x2^2*x3,x1^2*x2^3*x3,x1^2*x2^2*x3^2"
    ),
    "stable_closure_of_square": (
        3,
        "x1^4*x2^2,x1^3*x2^3,x1^2*x2^4,x1^3*x2^2*x3,x1^2*x2^3*x3,x1^2*x2^2*x3^2,"
        "x1^4*x3^2,x1^3*x2*x3^2,x1^4*x2*x3",
    ),
    "bounded_product": (
        3,
        "x1^4*x2^2,x1^3*x2^3,x1^2*x2^4,x1^4*x2*x3,x1^3*x2^2*x3,x1^2*x2^3*x3,"
        "x1^3*x2*x3^2,x1^2*x2^2*x3^2",
    ),
    "bounded_closure_of_product": (
        3,
        "x1^4*x3^2,x1^4*x2^2,x1^3*x2^3,x1^2*x2^4,x1^4*x2*x3,"
        "x1^3*x2^2*x3,x1^2*x2^3*x3,x1^3*x2*x3^2,x1^2*x2^2*x3^2",
    ),
    "veronese_a": (
        4,
        "x1^3*x2^3,x1^3*x2^2*x3,x1^2*x2^3*x3,x1^3*x2^2*x4,x1^2*x2^3*x4,x1^3*x2*x3*x4,"
        "x1^2*x2^2*x3*x4,x1*x2^3*x3*x4,x1^3*x2*x4^2,x1^2*x2^2*x4^2,x1*x2^3*x4^2,"
        "x1^3*x3*x4^2,x1^2*x2*x3*x4^2,x1*x2^2*x3*x4^2,x2^3*x3*x4^2",
    ),
    "veronese_b": (4, "x1^2*x2^2*x4"),
    # the reference product lists x1^3*x2^5*x3*x4^2 twice; the ideal has 15 generators
    "veronese_ab": (
        4,
        "x1^5*x2^5*x4,x1^5*x2^4*x3*x4,x1^4*x2^5*x3*x4,x1^5*x2^3*x3*x4^2,x1^4*x2^4*x3*x4^2,"
        "x1^3*x2^5*x3*x4^2,x1^5*x2^3*x4^3,x1^4*x2^4*x4^3,x1^3*x2^5*x4^3,x1^5*x2^2*x3*x4^3,"
        "x1^4*x2^3*x3*x4^3,x1^3*x2^4*x3*x4^3,x1^2*x2^5*x3*x4^3,x1^3*x2^5*x3*x4^2,"
        "x1^5*x2^4*x4^2,x1^4*x2^5*x4^2",
    ),
    "veronese_c": (
        4,
        "x1^5*x2^5*x3,x1^5*x2^5*x4,x1^5*x2^4*x3*x4,x1^4*x2^5*x3*x4,x1^5*x2^3*x3*x4^2,"
        "x1^4*x2^4*x3*x4^2,x1^3*x2^5*x3*x4^2,x1^5*x2^3*x4^3,x1^4*x2^4*x4^3,x1^3*x2^5*x4^3,"
        "x1^5*x2^2*x3*x4^3,x1^4*x2^3*x3*x4^3,x1^3*x2^4*x3*x4^3,x1^2*x2^5*x3*x4^3,"
        "x1^3*x2^5*x3*x4^2,x1^5*x2^4*x4^2,x1^4*x2^5*x4^2",
    ),
}


def reference_list(name: str) -> MonomialIdeal:
    n, text = REFERENCE_LISTS[name]
    return _I(text, n)


def _fixture_checks():
    """Yield ``(fixture, check, expected, actual, instance)`` for every reference instance."""
    Q = _I("x1*x2,x1*x3,x2*x3", 3)
    yield "squarefree-power", "sat(I)", 0, saturate(Q, ORACLE).sat, _inst(Q)
    Q2 = power(Q, 2)
    yield "squarefree-power", "sat(I^2)", 1, saturate(Q2, ORACLE).sat, _inst(Q2)
    yield "squarefree-power", "I (1,1,1)-bounded strongly stable", True, is_bounded_strongly_stable(Q, (1, 1, 1)), _inst(Q)

    I = borel_closure([_m("x2^2*x3^2", 3), _m("x1*x3", 3)], 3)
    J = borel_closure([_m("x1*x3^2", 3), _m("x2^2*x3", 3)], 3)
    IJ = product(I, J)
    yield "strict-subadditivity", "sat(I)", 2, saturate(I, ORACLE).sat, _inst(I)
    yield "strict-subadditivity", "sat(J)", 2, saturate(J, ORACLE).sat, _inst(J)
    yield "strict-subadditivity", "sat(IJ)", 3, saturate(IJ, ORACLE).sat, _inst(IJ)

    C = _I("x1,x2^4,x2^3*x3,x2^2*x3^2", 3)
    c = (1, 4, 2)
    yield "cocoa", "sat(I)", 2, saturate(C, ORACLE).sat, _inst(C, c)
    yield "cocoa", "c-bounded strongly stable", True, is_bounded_strongly_stable(C, c), _inst(C, c)
    yield "cocoa", "divided-power formula value", 1, equigen_formula_value(C, c), _inst(C, c)

    S = _I("x1^3,x1^2*x2,x1*x2^2,x1*x2*x3", 3)
    c = (3, 2, 1)
    soc = socle_equigen_bounded(S, c)
    yield "stable-socle", "c-bounded stable", True, is_bounded_stable(S, c), _inst(S, c)
    yield "stable-socle", "J", str(_I("x1*x2", 3)), str(soc), _inst(S, c)
    yield "stable-socle", "I:m = I + J", True, colon_max(S, ORACLE) == ideal_sum(S, soc), _inst(S, c)
    yield "stable-socle", "J (2,1,0)-bounded stable", False, is_bounded_stable(soc, (2, 1, 0)), _inst(soc)

    R = _I("x1^3,x1^2*x2^2,x1^2*x2*x3,x1^2*x3^2", 3)
    c = (3, 2, 2)
    J1 = saturate(R, ORACLE).layers[1]
    yield "non-equigenerated-socle", "c-bounded strongly stable", True, is_bounded_strongly_stable(R, c), _inst(R, c)
    yield "non-equigenerated-socle", "J", str(_I("x1^2*x2,x1^2*x3", 3)), str(J1), _inst(R, c)

    P = _I("x1*x2,x1*x3,x1*x4,x2*x3", 4)
    P2 = power(P, 2)
    yield "bounded-product", "I^2", str(reference_list("squarefree_square")), str(P2), _inst(P)
    yield "bounded-product", "I (1,1,1,1)-bounded strongly stable", True, is_bounded_strongly_stable(P, (1,) * 4), _inst(P)
    yield "bounded-product", "x1*x2^2*x4 in I^2", False, contains(P2, _m("x1*x2^2*x4", 4)), _inst(P2)
    yield "bounded-product", "I^2 (2,2,2,2)-bounded strongly stable", False, is_bounded_strongly_stable(P2, (2,) * 4), _inst(P2)

    u = _m("x1*x2*x3", 3)
    st = bounded_stable_closure([u], (2, 2, 2), 3)
    yield "stable-power", "stable closure", str(reference_list("stable_closure")), str(st), _inst(st)
    yield "stable-power", "square", str(reference_list("stable_closure_squared")), str(power(st, 2)), _inst(st)
    big = bounded_stable_closure([u ** 2], (4, 4, 4), 3)
    yield "stable-power", "closure of square", str(reference_list("stable_closure_of_square")), str(big), _inst(big)
    # the nine reference generators are the strongly stable closure; the stable one has six
    strong = bounded_borel_closure([u ** 2], (4, 4, 4), 3)
    yield "stable-power", "strongly stable closure of square", str(reference_list("stable_closure_of_square")), str(strong), _inst(strong)

    c = (2, 2, 2)
    prod = product(bounded_borel_closure([_m("x1*x2^2", 3)], c, 3), bounded_borel_closure([_m("x1*x3^2", 3)], c, 3))
    clo = bounded_borel_closure([_m("x1^2*x2^2*x3^2", 3)], (4, 4, 4), 3)
    yield "borel-product", "B^c(u1)B^c(u2)", str(reference_list("bounded_product")), str(prod), _inst(prod)
    yield "borel-product", "B^2c(u1u2)", str(reference_list("bounded_closure_of_product")), str(clo), _inst(clo)

    Ia = veronese_ideal(VeroneseSpec((3, 3, 1, 2), 6))
    Ib = veronese_ideal(VeroneseSpec((2, 2, 0, 1), 5))
    Ic = veronese_ideal(VeroneseSpec((5, 5, 1, 3), 11))
    yield "veronese-product", "I_a", str(reference_list("veronese_a")), str(Ia), _inst(Ia)
    yield "veronese-product", "I_b", str(reference_list("veronese_b")), str(Ib), _inst(Ib)
    yield "veronese-product", "I_a*I_b", str(reference_list("veronese_ab")), str(product(Ia, Ib)), _inst(Ia)
    yield "veronese-product", "I_c", str(reference_list("veronese_c")), str(Ic), _inst(Ic)
    missing = [str(g) for g in Ic.gens if not contains(product(Ia, Ib), g)]
    yield "veronese-product", "generators of I_c missing from I_a*I_b", ["x1^5*x2^5*x3"], missing, _inst(Ic)


def run_fixtures() -> VerifyReport:
    report = VerifyReport(suite="fixtures")
    start = time.perf_counter()
    for t, (name, check, expected, actual, inst) in enumerate(_fixture_checks()):
        report.trials += 1
        if expected != actual:
            report.fail(t, f"{name}: {check}", inst, f"expected {expected}, got {actual}")
    report.elapsed = time.perf_counter() - start
    return report


# -- saturation tables ---------------------------------------------------------

TABLE_COLUMNS = ("k", "sat_bruteforce", "sat_formula", "quasilinear", "match")


def _capped_power(I: MonomialIdeal, k: int, gens_cap: int):
    P = MonomialIdeal.unit(I.n)
    for _ in range(k):
        if len(P) * len(I) > gens_cap * 50:
            return None
        P = product(P, I)
        if len(P) > gens_cap:
            return None
    return P


def table_rows(target, k_max: int, gens_cap: int = 20000) -> list[dict]:
    """Rows ``k = 1..k_max`` of brute-force and closed-form ``sat(I^k)``.

    ``target`` is a :class:`VeroneseSpec` or a :class:`MonomialIdeal`; for an
    ideal the closed form is only available when it is strongly stable.
    Brute force is skipped (None) once ``I^k`` exceeds ``gens_cap`` generators.
    """
    if isinstance(target, VeroneseSpec):
        I = veronese_ideal(target)
        q = quasilinear(target)
        formula = lambda k, P: sat_veronese_power(target, k)
        quasi = lambda k: q.evaluate(k)
    else:
        I = target
        ss = is_strongly_stable(I) and not I.is_zero()
        formula = (lambda k, P: sat_strongly_stable_formula(P) if P is not None else None) if ss else (lambda k, P: None)
        quasi = lambda k: None
    rows = []
    for k in range(1, k_max + 1):
        P = _capped_power(I, k, gens_cap)
        brute = saturate(P, ORACLE).sat if P is not None else None
        f = formula(k, P)
        ql = quasi(k)
        vals = [v for v in (brute, f, ql) if v is not None]
        rows.append({
            "k": k,
            "sat_bruteforce": brute,
            "sat_formula": f,
            "quasilinear": int(ql) if ql is not None and ql.denominator == 1 else (str(ql) if ql is not None else None),
            "match": len(set(vals)) <= 1,
        })
    return rows


def emit_table(target, k_max: int, fmt: str = "table", gens_cap: int = 20000) -> str:
    rows = table_rows(target, k_max, gens_cap)
    if fmt == "json":
        return json.dumps(rows) + "\n"
    cell = lambda v: "" if v is None else ("yes" if v is True else "no" if v is False else str(v))
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(TABLE_COLUMNS)
        for r in rows:
            w.writerow(["" if r[c] is None else str(r[c]).lower() if isinstance(r[c], bool) else r[c] for c in TABLE_COLUMNS])
        return buf.getvalue()
    if fmt != "table":
        raise ValueError(f"unknown table format {fmt!r}")
    body = [[cell(r[c]) for c in TABLE_COLUMNS] for r in rows]
    widths = [max(len(h), *(len(b[i]) for b in body)) if body else len(h) for i, h in enumerate(TABLE_COLUMNS)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(TABLE_COLUMNS, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(b, widths)) for b in body]
    return "\n".join(lines) + "\n"
