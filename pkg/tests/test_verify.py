import csv
import io
import json
import random

import pytest

from satmon import MonomialIdeal, VeroneseSpec, is_bounded_strongly_stable, is_strongly_stable
from satmon.verify import (
    SUITES,
    TABLE_COLUMNS,
    VerifyConfig,
    emit_table,
    random_strongly_stable,
    run_fixtures,
    run_suite,
    table_rows,
)


def test_random_strongly_stable_deterministic():
    a, _ = random_strongly_stable(random.Random(7), 3, 3)
    b, _ = random_strongly_stable(random.Random(7), 3, 3)
    assert a == b
    assert is_strongly_stable(a)


def test_random_bounded_instances():
    for s in range(30):
        I, c = random_strongly_stable(random.Random(s), 4, 5, equigenerated=True, bounded=True)
        assert is_bounded_strongly_stable(I, c)
        assert len({g.degree for g in I.gens}) == 1


def test_squarefree_bound_gives_squarefree_ideal():
    rng = random.Random(3)
    for _ in range(20):
        I, c = random_strongly_stable(rng, 4, 4, bounded=True, bound_max=1)
        assert all(max(g.exps) <= 1 for g in I.gens)


@pytest.mark.parametrize("suite", [s for s in SUITES if s not in ("veronese", "quasilinear")])
def test_random_suites_pass(suite):
    rep = run_suite(VerifyConfig(suite=suite, trials=60, seed=5))
    assert rep.ok, rep.summary()
    assert rep.trials == 60


def test_subadditivity_pinned_values():
    rep = run_suite(VerifyConfig(suite="subadditivity", trials=1))
    assert rep.observations["pinned sat(I), sat(J), sat(IJ)"] == [2, 2, 3]


def test_report_is_deterministic():
    cfg = VerifyConfig(suite="layers-jk", trials=30, seed=11)
    a, b = run_suite(cfg).to_json_obj(), run_suite(cfg).to_json_obj()
    assert a == b


def test_bad_config():
    with pytest.raises(ValueError):
        VerifyConfig(suite="nope")
    with pytest.raises(ValueError):
        VerifyConfig(suite="socle", trials=0)


def test_fixture_failure_messages_are_replayable():
    rep = run_fixtures()
    assert rep.trials >= 25
    for f in rep.failures:
        assert "ideal" in f["instance"]
    text = rep.summary()
    for line in text.splitlines():
        if line.strip().startswith("replay:"):
            inst = line.split("'", 2)[1]
            assert json.loads(inst)["n"] >= 1


def test_table_formats():
    rows = table_rows(VeroneseSpec((1, 1, 1), 2), 6)
    assert [r["sat_bruteforce"] for r in rows] == [0, 1, 1, 2, 2, 3]
    assert all(r["match"] for r in rows)
    out = emit_table(VeroneseSpec((2, 2, 1), 3), 4, "csv")
    parsed = list(csv.reader(io.StringIO(out)))
    assert parsed[0] == list(TABLE_COLUMNS)
    assert [r[2] for r in parsed[1:]] == ["1", "2", "3", "4"]
    assert json.loads(emit_table(VeroneseSpec((1, 1), 1), 2, "json"))[1]["sat_formula"] == 2
    assert emit_table(VeroneseSpec((1, 1), 1), 2) == emit_table(VeroneseSpec((1, 1), 1), 2)


def test_table_for_unit_ideal():
    rows = table_rows(MonomialIdeal.unit(3), 4)
    assert [r["sat_bruteforce"] for r in rows] == [0, 0, 0, 0]
    assert [r["sat_formula"] for r in rows] == [0, 0, 0, 0]


def test_table_skips_brute_force_beyond_cap():
    rows = table_rows(VeroneseSpec((4, 4, 4), 6), 3, gens_cap=10)
    assert rows[1]["sat_bruteforce"] is None and rows[1]["sat_formula"] is not None
