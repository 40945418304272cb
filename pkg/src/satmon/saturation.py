"""Colon ideals by the graded maximal ideal, saturation chains and socle layers.

The chain ``I ⊆ I:m ⊆ I:m^2 ⊆ ...`` is computed by repeated colon by ``m``;
its length before stabilizing is the saturation number.  The layer ``J_l`` is
generated by the minimal generators of ``I:m^l`` that are not already in
``I:m^(l-1)``.  Every monomial of the difference is such a minimal generator,
since ``m * (I:m^l)`` lies in ``I:m^(l-1)``, so this matches the monomial basis
of the quotient ``(I:m^l)/(I:m^(l-1))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np

from . import config
from .errors import CapExceeded, DimensionMismatch, NotApplicable
from .ideal import (
    MonomialIdeal,
    _contains_exps,
    from_json_obj,
    generator_degree,
    intersect,
    is_bounded_stable,
    is_bounded_strongly_stable,
    is_strongly_stable,
    to_json_obj,
)

METHODS = ("auto", "general", "dense", "intersect", "strongly-stable")


def colon_var(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """``I : x_i`` for a 1-based variable index ``i``."""
    if not 1 <= i <= I.n:
        raise IndexError(f"variable index {i} out of range 1..{I.n}")
    k = i - 1
    gens = [g[:k] + (g[k] - 1,) + g[k + 1:] if g[k] else g for g in I.exps]
    return MonomialIdeal(I.n, gens)


def _colon_max_intersect(I: MonomialIdeal) -> MonomialIdeal:
    return reduce(intersect, (colon_var(I, i) for i in range(1, I.n + 1)))


def _socle_dense(I: MonomialIdeal):
    """Exponent vectors ``w`` outside ``I`` with ``x_i w`` in ``I`` for every ``i``.

    Each such ``w`` has ``w_i < max_exps[i]``: some generator ``g`` divides ``x_i w``
    but not ``w``, so ``g_i = w_i + 1``.  Returns None when the box is too large.
    """
    table = I.staircase
    if table is None:
        return None
    M = I.max_exps
    if min(M) == 0:
        return []
    inner = tuple(slice(0, m) for m in M)
    ok = ~table[inner]
    for axis in range(I.n):
        shifted = tuple(slice(1, m + 1) if a == axis else slice(0, m) for a, m in enumerate(M))
        ok &= table[shifted]
    return [tuple(int(x) for x in row) for row in np.argwhere(ok)]


def _colon_max_dense(I: MonomialIdeal) -> MonomialIdeal | None:
    socle = _socle_dense(I)
    if socle is None:
        return None
    if not socle:
        return I
    return MonomialIdeal(I.n, I.exps + tuple(socle))


def colon_max(I: MonomialIdeal, method: str = "auto") -> MonomialIdeal:
    """``I : m`` with ``m = (x_1, ..., x_n)``.

    ``general`` intersects the variable colons (through the dense staircase
    when it fits in memory); ``strongly-stable`` uses ``I : x_n``, which is
    only valid for strongly stable ``I``; ``auto`` picks the latter whenever
    ``I`` is strongly stable.
    """
    if method not in METHODS:
        raise ValueError(f"unknown colon method {method!r}")
    if I.is_zero() or I.is_unit():
        return I
    if method == "strongly-stable" or (method == "auto" and is_strongly_stable(I)):
        result = colon_var(I, I.n)
        if config.DEBUG_CHECKS:
            assert result == _colon_max_intersect(I), f"I:m != I:x_n for {I!r}"
        return result
    if method == "intersect":
        return _colon_max_intersect(I)
    dense = _colon_max_dense(I)
    if dense is not None:
        if config.DEBUG_CHECKS:
            assert dense == _colon_max_intersect(I), f"dense colon disagrees for {I!r}"
        return dense
    if method == "dense":
        raise CapExceeded(f"staircase box for {I!r} exceeds {config.DENSE_BOX_CAP} cells")
    return _colon_max_intersect(I)


def socle_monomials(I: MonomialIdeal, method: str = "auto") -> MonomialIdeal:
    """The generators of ``I : m`` that do not lie in ``I``."""
    C = colon_max(I, method)
    return MonomialIdeal(I.n, [g for g in C.exps if not _contains_exps(I, g)], _canonical=True)


@dataclass(frozen=True)
class SaturationReport:
    chain: tuple  # I:m^0, I:m^1, ..., ending with two equal entries
    sat: int
    layers: tuple  # J_0 = I, J_1, ..., J_{sat+1} = 0
    saturation: MonomialIdeal

    def to_json_obj(self) -> dict:
        return {
            "sat": self.sat,
            "chain": [to_json_obj(I) for I in self.chain],
            "layers": [to_json_obj(J) for J in self.layers],
            "saturation": to_json_obj(self.saturation),
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> SaturationReport:
        return cls(
            chain=tuple(from_json_obj(o) for o in obj["chain"]),
            sat=int(obj["sat"]),
            layers=tuple(from_json_obj(o) for o in obj["layers"]),
            saturation=from_json_obj(obj["saturation"]),
        )


def saturate(I: MonomialIdeal, method: str = "auto", step_cap: int | None = None) -> SaturationReport:
    """Run the colon chain of ``I`` until it stabilizes."""
    cap = config.SATURATE_STEP_CAP if step_cap is None else step_cap
    chain = [I]
    while True:
        nxt = colon_max(chain[-1], method)
        chain.append(nxt)
        if nxt == chain[-2]:
            break
        if len(chain) > cap + 1:
            raise CapExceeded(f"saturation chain did not stabilize within {cap} steps")
    layers = [I]
    for prev, cur in zip(chain, chain[1:]):
        new = [g for g in cur.exps if not _contains_exps(prev, g)]
        layers.append(MonomialIdeal(I.n, new, _canonical=True))
    return SaturationReport(chain=tuple(chain), sat=len(chain) - 2, layers=tuple(layers), saturation=chain[-1])


def sat(I: MonomialIdeal, method: str = "auto") -> int:
    return saturate(I, method).sat


# -- closed formulas ----------------------------------------------------------


def _check_bound(I: MonomialIdeal, c: Sequence[int]) -> tuple:
    c = tuple(c)
    if len(c) != I.n:
        raise DimensionMismatch(f"bound of length {len(c)} vs ideal in {I.n} variables")
    return c


def sat_strongly_stable_formula(I: MonomialIdeal) -> int:
    """Saturation number of a strongly stable ideal: the top ``x_n``-exponent in ``G(I)``."""
    if I.is_zero():
        raise NotApplicable("formula needs a nonzero ideal")
    if not is_strongly_stable(I):
        raise NotApplicable(f"{I} is not strongly stable")
    return max(g[-1] for g in I.exps)


def _witness_ok(u: tuple, c: tuple, ell: int) -> bool:
    # x_n^ell | u and Deg(u / x_n^ell) <= c - ell*e
    if u[-1] < ell:
        return False
    if any(a > ci - ell for a, ci in zip(u[:-1], c[:-1])):
        return False
    return u[-1] - ell <= c[-1] - ell


def equigen_formula_value(I: MonomialIdeal, c: Sequence[int]) -> int:
    """Largest ``l`` with a generator ``u`` such that ``x_n^l | u`` and ``u/x_n^l <= c - l*e``.

    No hypotheses are checked; -1 means no generator qualifies even for ``l = 0``.
    """
    c = _check_bound(I, c)
    best = -1
    for u in I.exps:
        for ell in range(u[-1], best, -1):
            if _witness_ok(u, c, ell):
                best = ell
                break
    return best


def _require_equigen_bsst(I: MonomialIdeal, c: tuple, strong: bool = True) -> None:
    if I.is_zero():
        raise NotApplicable("formula needs a nonzero ideal")
    if generator_degree(I) is None:
        raise NotApplicable(f"{I} is not equigenerated")
    check = is_bounded_strongly_stable if strong else is_bounded_stable
    if not check(I, c):
        kind = "strongly stable" if strong else "stable"
        raise NotApplicable(f"{I} is not {list(c)}-bounded {kind}")


def sat_equigen_bounded_formula(I: MonomialIdeal, c: Sequence[int]) -> int:
    """Saturation number of an equigenerated ``c``-bounded strongly stable ideal."""
    c = _check_bound(I, c)
    _require_equigen_bsst(I, c)
    return equigen_formula_value(I, c)


def _divided_layer(I: MonomialIdeal, c: tuple, ell: int) -> MonomialIdeal:
    gens = [u[:-1] + (u[-1] - ell,) for u in I.exps if _witness_ok(u, c, ell)]
    return MonomialIdeal(I.n, gens)


def socle_equigen_bounded(I: MonomialIdeal, c: Sequence[int]) -> MonomialIdeal:
    """The ideal ``J`` with ``I : m = I + J`` for equigenerated ``c``-bounded stable ``I``.

    ``J`` is generated by ``u/x_n`` over generators ``u`` divisible by ``x_n``
    with ``u/x_n`` bounded by ``c - e``.
    """
    c = _check_bound(I, c)
    _require_equigen_bsst(I, c, strong=False)
    return _divided_layer(I, c, 1)


def layer_formula_equigen(I: MonomialIdeal, c: Sequence[int], ell: int) -> MonomialIdeal:
    """Closed form of the layer ``J_ell`` of an equigenerated ``c``-bounded strongly stable ideal."""
    c = _check_bound(I, c)
    _require_equigen_bsst(I, c)
    if ell < 0:
        raise ValueError("layer index must be >= 0")
    if ell == 0:
        return I
    for m in range(1, ell):
        if _divided_layer(I, c, m).is_zero():
            return MonomialIdeal.zero(I.n)
    return _divided_layer(I, c, ell)
