import pytest
from hypothesis import given, settings, strategies as st

import oracle
from satmon import (
    MonomialIdeal,
    borel_closure,
    bounded_borel_closure,
    bounded_stable_closure,
    is_bounded_stable,
    is_bounded_strongly_stable,
    is_stable,
    is_strongly_stable,
    parse_ideal,
    parse_monomial,
    power,
    principal_power,
    principal_power_layer,
    product,
    sat_principal_power,
    saturate,
    stable_closure,
)
from satmon.errors import CapExceeded, NotApplicable, NotDivisible
from satmon.verify import reference_list


def m(t, n=3):
    return parse_monomial(t, n)


def I(t, n=3):
    return parse_ideal(t, n)


def test_borel_closure():
    assert borel_closure([m("x2^2", 2)], 2) == I("x1^2,x1*x2,x2^2", 2)
    assert borel_closure([m("x1^4")], 3) == I("x1^4")
    B = borel_closure([m("x2^2*x3^2"), m("x1*x3")], 3)
    assert max(g[-1] for g in B.exps) == 2
    assert is_strongly_stable(B)


def test_bounded_borel_closure():
    assert bounded_borel_closure([m("x1*x2*x3")], (1, 1, 1), 3) == I("x1*x2*x3")
    assert bounded_borel_closure([m("x1*x2*x3")], (2, 2, 2), 3) == I("x1*x2*x3,x1^2*x2,x1^2*x3,x1*x2^2")


def test_bounded_product_differs_from_closure():
    c = (2, 2, 2)
    P = product(bounded_borel_closure([m("x1*x2^2")], c, 3), bounded_borel_closure([m("x1*x3^2")], c, 3))
    C = bounded_borel_closure([m("x1^2*x2^2*x3^2")], (4, 4, 4), 3)
    assert P == reference_list("bounded_product")
    assert C == reference_list("bounded_closure_of_product")
    assert P != C


def test_bounded_stable_closure():
    S = bounded_stable_closure([m("x1*x2*x3")], (2, 2, 2), 3)
    assert S == I("x1^2*x2,x1*x2^2,x1*x2*x3")
    assert bounded_stable_closure([m("x1^3")], (3, 1, 1), 3) == I("x1^3")
    assert power(S, 2) == reference_list("stable_closure_squared")


def test_stable_closure_of_square():
    u2 = m("x1^2*x2^2*x3^2")
    big = bounded_stable_closure([u2], (4, 4, 4), 3)
    # six generators, equal to the square of the degree-3 closure
    assert len(big) == 6
    assert big == power(bounded_stable_closure([m("x1*x2*x3")], (2, 2, 2), 3), 2)
    assert set(big.exps) == oracle.closure([u2.exps], 3, (4, 4, 4), strong=False)
    # the nine-generator list is the strongly stable closure
    assert bounded_borel_closure([u2], (4, 4, 4), 3) == reference_list("stable_closure_of_square")


def test_bound_edge_cases():
    assert bounded_borel_closure([m("x1")], (-1, 2, 2), 3).is_zero()
    with pytest.raises(NotApplicable):
        bounded_borel_closure([m("x1^3")], (2, 2, 2), 3)


def test_node_cap(monkeypatch):
    monkeypatch.setenv("SATMON_CAP_NODES", "5")
    with pytest.raises(CapExceeded):
        borel_closure([m("x3^4")], 3)


def test_principal_power():
    assert principal_power(m("x1*x2*x3"), (1, 1, 1), 2) == I("x1^2*x2^2*x3^2")
    assert principal_power(m("x1*x2", 2), (1, 1), 3) == I("x1^3*x2^3", 2)
    u = m("x2^2", 2)
    P = principal_power(u, (2, 2), 2)
    assert P == I("x1^4,x1^3*x2,x1^2*x2^2,x1*x2^3,x2^4", 2)
    assert P == power(bounded_borel_closure([u], (2, 2), 2), 2)


def test_principal_power_layer():
    u, c = m("x1*x2*x3"), (2, 2, 2)
    assert principal_power_layer(u, c, 1, 0) == principal_power(u, c, 1)
    assert principal_power_layer(u, c, 1, 1) == I("x1*x2")
    assert principal_power_layer(u, c, 1, 1) == saturate(principal_power(u, c, 1), "general").layers[1]
    with pytest.raises(NotDivisible):
        principal_power_layer(m("x1*x2"), c, 1, 1)


def test_principal_power_layer_with_seed_outside_bound():
    # u^k/x_n is not (kc - e)-bounded; only its bounded Borel descendants survive
    u, c = m("x2*x3", 3), (1, 2, 2)
    got = principal_power_layer(u, c, 1, 1)
    assert got == saturate(bounded_borel_closure([u], c, 3), "general").layers[1]


def test_sat_principal_power():
    assert sat_principal_power(m("x1*x2*x3"), (2, 2, 2), 1) == 1
    assert sat_principal_power(m("x1^3"), (3, 3, 3), 2) == 0
    # (x1x2x3) with c = (1,1,1) is principal: every power is saturated
    u, c = m("x1*x2*x3"), (1, 1, 1)
    assert sat_principal_power(u, c, 2) == saturate(power(bounded_borel_closure([u], c, 3), 2), "general").sat == 0
    # the squarefree Veronese ideal is the principal closure of x2*x3
    v = m("x2*x3")
    assert bounded_borel_closure([v], c, 3) == I("x1*x2,x1*x3,x2*x3")
    assert sat_principal_power(v, c, 2) == 1
    with pytest.raises(NotApplicable):
        sat_principal_power(MonomialIdeal.unit(3).gens[0], c, 1)


seed = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
bound = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))


@given(st.lists(seed, min_size=1, max_size=3))
@settings(max_examples=60)
def test_closure_properties(seeds):
    B = borel_closure(seeds, 3)
    assert is_strongly_stable(B)
    assert borel_closure(B.exps, 3) == B
    assert set(B.exps) == oracle.closure(seeds, 3)
    S = stable_closure(seeds, 3)
    assert is_stable(S)
    assert set(S.exps) == oracle.closure(seeds, 3, strong=False)
    # monotone: the stable closure sits inside the strongly stable one
    assert all(g in B for g in S.gens)


@given(seed, bound)
@settings(max_examples=80)
def test_bounded_closure_properties(u, c):
    c = tuple(max(a, b) for a, b in zip(u, c))
    B = bounded_borel_closure([u], c, 3)
    assert is_bounded_strongly_stable(B, c)
    assert set(B.exps) == oracle.closure([u], 3, c)
    S = bounded_stable_closure([u], c, 3)
    assert is_bounded_stable(S, c)
    # bounded closures are the bounded part of the unbounded ones
    assert set(B.exps) == {g for g in borel_closure([u], 3).exps if all(x <= y for x, y in zip(g, c))}


@given(seed, bound, st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_power_of_principal(u, c, k):
    c = tuple(max(a, b) for a, b in zip(u, c))
    base = bounded_borel_closure([u], c, 3)
    assert power(base, k) == principal_power(m(str(list(u))), c, k)
