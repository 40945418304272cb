"""Borel closures: smallest (bounded) strongly stable or stable ideals over given seeds.

Closures are breadth-first searches over exchange moves ``x_i u / x_j`` with
``i < j``.  Moves preserve degree, so a seed of degree ``d`` in ``n``
variables visits at most ``binom(d + n - 1, n - 1)`` monomials; the search
stops with :class:`CapExceeded` beyond ``SATMON_CAP_NODES`` visited nodes.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from . import config
from .errors import CapExceeded, DimensionMismatch, NotApplicable, NotDivisible
from .ideal import MonomialIdeal, power as ideal_power, restrict_bounded
from .monomial import Monomial, format_monomial, power as mono_power
from .saturation import equigen_formula_value


def _seed_exps(us: Iterable, n: int) -> list[tuple]:
    out = []
    for u in us:
        e = u.exps if isinstance(u, Monomial) else tuple(u)
        if len(e) != n:
            raise DimensionMismatch(f"seed {list(e)} is not in {n} variables")
        out.append(e)
    return out


def _closure(seeds: list[tuple], n: int, c: tuple | None, strong: bool) -> MonomialIdeal:
    cap = config.closure_node_cap()
    seen = set(seeds)
    queue = deque(seen)
    while queue:
        u = queue.popleft()
        if strong:
            js = [j for j in range(1, n) if u[j]]
        else:
            top = max((j for j in range(n) if u[j]), default=0)
            js = [top] if top > 0 else []
        for j in js:
            for i in range(j):
                v = list(u)
                v[i] += 1
                v[j] -= 1
                v = tuple(v)
                if v in seen:
                    continue
                if c is not None and v[i] > c[i]:
                    continue  # only slot i grew
                seen.add(v)
                if len(seen) > cap:
                    raise CapExceeded(f"closure visited more than {cap} monomials")
                queue.append(v)
    return MonomialIdeal(n, seen)


def _bounded_seeds(us, c: Sequence[int], n: int) -> tuple[list[tuple], tuple] | None:
    c = tuple(c)
    if len(c) != n:
        raise DimensionMismatch(f"bound of length {len(c)} vs {n} variables")
    seeds = _seed_exps(us, n)
    if any(ci < 0 for ci in c):
        return None  # nothing is bounded by such a vector
    for e in seeds:
        if any(a > ci for a, ci in zip(e, c)):
            raise NotApplicable(f"seed {format_monomial(Monomial(e))} is not {list(c)}-bounded")
    return seeds, c


def borel_closure(us: Iterable, n: int) -> MonomialIdeal:
    """``B(u_1, ..., u_m)``: the smallest strongly stable ideal containing the seeds."""
    return _closure(_seed_exps(us, n), n, None, strong=True)


def stable_closure(us: Iterable, n: int) -> MonomialIdeal:
    """Smallest stable ideal containing the seeds (moves only at the largest variable)."""
    return _closure(_seed_exps(us, n), n, None, strong=False)


def bounded_borel_closure(us: Iterable, c: Sequence[int], n: int) -> MonomialIdeal:
    """``B^c(u_1, ..., u_m)``: the smallest ``c``-bounded strongly stable ideal over the seeds."""
    got = _bounded_seeds(us, c, n)
    if got is None:
        return MonomialIdeal.zero(n)
    return _closure(got[0], n, got[1], strong=True)


def bounded_stable_closure(us: Iterable, c: Sequence[int], n: int) -> MonomialIdeal:
    """The smallest ``c``-bounded stable ideal over the seeds."""
    got = _bounded_seeds(us, c, n)
    if got is None:
        return MonomialIdeal.zero(n)
    return _closure(got[0], n, got[1], strong=False)


def principal_power(u: Monomial, c: Sequence[int], k: int) -> MonomialIdeal:
    """``(B^c(u))^k``, computed as ``B^(kc)(u^k)``."""
    if k < 0:
        raise ValueError("negative power")
    if k == 0:
        return MonomialIdeal.unit(u.n)
    kc = tuple(k * ci for ci in c)
    result = bounded_borel_closure([mono_power(u, k)], kc, u.n)
    if config.DEBUG_CHECKS:
        direct = ideal_power(bounded_borel_closure([u], c, u.n), k)
        assert result == direct, f"B^kc(u^k) != B^c(u)^k for u={u}, c={c}, k={k}"
    return result


def principal_power_layer(u: Monomial, c: Sequence[int], k: int, ell: int) -> MonomialIdeal:
    """The layer ``J_l`` of ``(B^c(u))^k``: the ``(kc - l e)``-bounded part of ``B(u^k / x_n^l)``.

    For a bounded seed this is ``B^(kc - l e)(u^k / x_n^l)``.  The seed itself
    may exceed the bound, in which case only the bounded monomials below it
    in the Borel order survive.
    """
    uk = mono_power(u, k)
    if ell < 0 or uk.exps[-1] < ell:
        raise NotDivisible(f"x{u.n}^{ell} does not divide {format_monomial(uk)}")
    seed = uk.exps[:-1] + (uk.exps[-1] - ell,)
    bound = tuple(k * ci - ell for ci in c)
    if all(a <= b for a, b in zip(seed, bound)):
        return bounded_borel_closure([seed], bound, u.n)
    return restrict_bounded(borel_closure([seed], u.n), bound)


def sat_principal_power(u: Monomial, c: Sequence[int], k: int) -> int:
    """Saturation number of ``(B^c(u))^k`` from the generators of ``B^(kc)(u^k)``."""
    c = tuple(c)
    if len(c) != u.n:
        raise DimensionMismatch(f"bound of length {len(c)} vs {u.n} variables")
    if u.is_unit():
        raise NotApplicable("u must be a non-unit monomial")
    if any(a > ci for a, ci in zip(u.exps, c)):
        raise NotApplicable(f"{u} is not {list(c)}-bounded")
    if k < 1:
        raise ValueError("k must be positive")
    return equigen_formula_value(principal_power(u, c, k), tuple(k * ci for ci in c))
