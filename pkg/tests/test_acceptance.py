"""Acceptance criteria 1-8.  All comparisons are exact; each test also enforces its runtime budget."""

import time
from functools import lru_cache

from satmon import (
    VeroneseSpec,
    borel_closure,
    bounded_borel_closure,
    bounded_stable_closure,
    is_equigenerated,
    is_strongly_stable,
    parse_ideal,
    parse_monomial,
    power,
    product,
    saturate,
    socle_equigen_bounded,
    veronese_ideal,
)
from satmon.verify import (
    ORACLE,
    REFERENCE_LISTS,
    VerifyConfig,
    check_layers_jk,
    proffind_instance,
    reference_list,
    run_suite,
    sat_formula_instance,
)

TRIALS = 200


def _sat(I):
    return saturate(I, ORACLE).sat


def _m(t, n=3):
    return parse_monomial(t, n)


def _failures(report, checks=None):
    fs = report.failures if checks is None else [f for f in report.failures if f["check"] in checks]
    return [f"trial {f['trial']} [{f['check']}] {f['detail']}" for f in fs]


@lru_cache(maxsize=None)
def _quasilinear_run():
    start = time.perf_counter()
    rep = run_suite(VerifyConfig(suite="quasilinear", k_max=3))
    return rep, time.perf_counter() - start


def test_criterion_1_fixture_sat_values():
    start = time.perf_counter()
    Q = parse_ideal("x1*x2,x1*x3,x2*x3")
    I = borel_closure([_m("x2^2*x3^2"), _m("x1*x3")], 3)
    J = borel_closure([_m("x1*x3^2"), _m("x2^2*x3")], 3)
    got = {
        "sat(Q)": _sat(Q),
        "sat(Q^2)": _sat(power(Q, 2)),
        "sat(I)": _sat(I),
        "sat(J)": _sat(J),
        "sat(IJ)": _sat(product(I, J)),
        "sat(x1,x2^4,x2^3x3,x2^2x3^2)": _sat(parse_ideal("x1,x2^4,x2^3*x3,x2^2*x3^2")),
        "J for c=(3,2,1)": str(socle_equigen_bounded(parse_ideal("x1^3,x1^2*x2,x1*x2^2,x1*x2*x3"), (3, 2, 1))),
    }
    elapsed = time.perf_counter() - start
    want = {
        "sat(Q)": 0, "sat(Q^2)": 1, "sat(I)": 2, "sat(J)": 2, "sat(IJ)": 3,
        "sat(x1,x2^4,x2^3x3,x2^2x3^2)": 2, "J for c=(3,2,1)": "(x1*x2)",
    }
    assert got == want
    assert elapsed < 1.0, f"{elapsed:.2f}s"


def test_criterion_2_generator_lists():
    start = time.perf_counter()
    u = _m("x1*x2*x3")
    st = bounded_stable_closure([u], (2, 2, 2), 3)
    c = (2, 2, 2)
    Ia = veronese_ideal(VeroneseSpec((3, 3, 1, 2), 6))
    Ib = veronese_ideal(VeroneseSpec((2, 2, 0, 1), 5))
    computed = {
        "squarefree_square": power(parse_ideal("x1*x2,x1*x3,x1*x4,x2*x3"), 2),
        "stable_closure": st,
        "stable_closure_squared": power(st, 2),
        "stable_closure_of_square": bounded_stable_closure([u ** 2], (4, 4, 4), 3),
        "bounded_product": product(
            bounded_borel_closure([_m("x1*x2^2")], c, 3), bounded_borel_closure([_m("x1*x3^2")], c, 3)
        ),
        "bounded_closure_of_product": bounded_borel_closure([_m("x1^2*x2^2*x3^2")], (4, 4, 4), 3),
        "veronese_a": Ia,
        "veronese_b": Ib,
        "veronese_ab": product(Ia, Ib),
        "veronese_c": veronese_ideal(VeroneseSpec((5, 5, 1, 3), 11)),
    }
    elapsed = time.perf_counter() - start
    assert set(computed) == set(REFERENCE_LISTS)
    mismatches = [
        f"{name}: expected {reference_list(name)}, computed {ideal}"
        for name, ideal in computed.items()
        if ideal.exps != reference_list(name).exps
    ]
    assert not mismatches, "\n".join(mismatches)
    assert elapsed < 5.0, f"{elapsed:.2f}s"


def test_criterion_3_strongly_stable_suite():
    rep = run_suite(VerifyConfig(suite="proffind", trials=TRIALS, seed=42, n_max=4, deg_max=5))
    assert rep.trials >= 200
    assert not rep.failures, _failures(rep)
    assert rep.elapsed < 60, f"{rep.elapsed:.1f}s"


def test_criterion_4_bounded_equigenerated_suite():
    rep = run_suite(VerifyConfig(suite="sat-formula", trials=TRIALS, seed=42, n_max=4, deg_max=5))
    assert rep.trials >= 200
    assert not rep.failures, _failures(rep)
    assert rep.elapsed < 120, f"{rep.elapsed:.1f}s"


def test_criterion_5_veronese_grid():
    rep = run_suite(VerifyConfig(suite="veronese"))
    assert rep.trials == 838
    assert rep.observations["vanishing cells"] > 0
    assert not rep.failures, _failures(rep)
    assert rep.elapsed < 120, f"{rep.elapsed:.1f}s"


def test_criterion_6_powers():
    rep, elapsed = _quasilinear_run()
    assert not _failures(rep, {"power-identity", "power-sat"})
    start = time.perf_counter()
    seeds = run_suite(VerifyConfig(suite="soclepower", trials=TRIALS, seed=42, k_max=3))
    elapsed += time.perf_counter() - start
    assert seeds.trials >= 100
    assert not _failures(seeds, {"power"}), _failures(seeds)
    assert elapsed < 300, f"{elapsed:.1f}s"


def test_criterion_7_quasilinearity():
    rep, elapsed = _quasilinear_run()
    assert rep.trials == 838
    assert not _failures(rep, {"quasilinear", "quasilinear-oracle"})
    assert elapsed < 300, f"{elapsed:.1f}s"


def test_criterion_8_layer_structure():
    cfg = VerifyConfig(suite="proffind", trials=TRIALS, seed=42)
    instances = [proffind_instance(cfg, t) for t in range(TRIALS)]
    instances += [sat_formula_instance(cfg, t)[0] for t in range(TRIALS)]
    bad = []
    for t, I in enumerate(instances):
        linear = is_equigenerated(I) and is_strongly_stable(I)
        for check, detail in check_layers_jk(I, linear):
            bad.append(f"instance {t} [{check}] {detail}: {I!r}")
    assert len(instances) == 2 * TRIALS
    assert not bad, bad[:5]
