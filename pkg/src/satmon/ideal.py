"""Monomial ideals stored as their canonical minimal generating set.

Generators are sorted by total degree ascending and then lexicographically
descending on exponent vectors, so two ideals are equal exactly when their
generator tuples are equal.
"""

from __future__ import annotations

import json
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import config
from .errors import DimensionMismatch, ParseError
from .monomial import (
    Monomial,
    exchange,
    format_monomial,
    is_bounded,
    mul,
    parse_monomial,
)

# below this many generators a linear scan beats building the staircase
_STAIRCASE_MIN_GENS = 24


def _sort_key(exps: tuple) -> tuple:
    return (sum(exps), tuple(-a for a in exps))


def _leq(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _minimal_exps(vectors: Iterable[tuple]) -> list[tuple]:
    """Canonically sorted antichain of minimal exponent vectors."""
    ordered = sorted(set(vectors), key=_sort_key)
    kept: list[tuple] = []
    lower: list[tuple] = []  # kept vectors of strictly smaller degree than the current one
    current_deg = None
    for v in ordered:
        d = sum(v)
        if d != current_deg:
            lower = kept[:]  # distinct vectors of equal degree never divide each other
            current_deg = d
        if not any(_leq(g, v) for g in lower):
            kept.append(v)
    return kept


class MonomialIdeal:
    """A monomial ideal in ``n`` variables given by its minimal generators.

    Construct through :func:`minimalize` (or ``MonomialIdeal(n, gens)``, which
    minimalizes).  Instances are immutable.
    """

    def __init__(self, n: int, gens: Iterable = (), *, _canonical: bool = False):
        if n < 1:
            raise ValueError("ambient dimension must be >= 1")
        vecs = []
        for g in gens:
            e = g.exps if isinstance(g, Monomial) else tuple(g)
            if len(e) != n:
                raise DimensionMismatch(f"generator {list(e)} is not in {n} variables")
            vecs.append(e)
        if not _canonical:
            vecs = _minimal_exps(vecs)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", tuple(Monomial(e) for e in vecs))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def zero(cls, n: int) -> MonomialIdeal:
        return cls(n, (), _canonical=True)

    @classmethod
    def unit(cls, n: int) -> MonomialIdeal:
        return cls(n, [(0,) * n], _canonical=True)

    @classmethod
    def maximal(cls, n: int) -> MonomialIdeal:
        return cls(n, [Monomial.var(i, n) for i in range(1, n + 1)])

    @cached_property
    def exps(self) -> tuple:
        return tuple(g.exps for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_unit()

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.exps == other.exps

    def __hash__(self) -> int:
        return hash((self.n, self.exps))

    def __contains__(self, u: Monomial) -> bool:
        return contains(self, u)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return product(self, other)

    def __pow__(self, k: int) -> MonomialIdeal:
        return power(self, k)

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        return intersect(self, other)

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.n}, {[list(e) for e in self.exps]})"

    def __str__(self) -> str:
        return format_ideal(self)

    @cached_property
    def max_exps(self) -> tuple:
        """Componentwise maximum over the generators."""
        if not self.gens:
            return (0,) * self.n
        return tuple(max(col) for col in zip(*self.exps))

    @cached_property
    def staircase(self):
        """Dense membership table over the box ``[0, max_exps]``, or None if too big.

        A monomial ``w`` lies in the ideal iff the table is true at ``min(w, max_exps)``.
        """
        shape = tuple(m + 1 for m in self.max_exps)
        if not self.gens or int(np.prod(shape)) > config.DENSE_BOX_CAP:
            return None
        table = np.zeros(shape, dtype=bool)
        idx = np.array(self.exps).T
        table[tuple(idx)] = True
        for axis in range(self.n):
            np.logical_or.accumulate(table, axis=axis, out=table)
        return table


def _as_exps(u) -> tuple:
    return u.exps if isinstance(u, Monomial) else tuple(u)


def _contains_exps(I: MonomialIdeal, w: tuple) -> bool:
    if len(I.gens) >= _STAIRCASE_MIN_GENS:
        table = I.staircase
        if table is not None:
            return bool(table[tuple(min(a, m) for a, m in zip(w, I.max_exps))])
    return any(_leq(g, w) for g in I.exps)


def minimalize(ms: Iterable, n: int) -> MonomialIdeal:
    """Ideal generated by ``ms``: drops duplicates and non-minimal monomials."""
    return MonomialIdeal(n, ms)


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    """Membership: some generator of ``I`` divides ``u``."""
    w = _as_exps(u)
    if len(w) != I.n:
        raise DimensionMismatch(f"monomial in {len(w)} variables vs ideal in {I.n}")
    return _contains_exps(I, w)


def contains_ideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff ``J`` is a subideal of ``I``."""
    _same_dim(I, J)
    return all(_contains_exps(I, g) for g in J.exps)


def _same_dim(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.n != J.n:
        raise DimensionMismatch(f"ideals in {I.n} and {J.n} variables")


def restrict_bounded(I: MonomialIdeal, c: Sequence[int]) -> MonomialIdeal:
    """The ideal generated by the ``c``-bounded generators of ``I``."""
    if len(c) != I.n:
        raise DimensionMismatch(f"bound of length {len(c)} vs ideal in {I.n} variables")
    return MonomialIdeal(I.n, [g for g in I.exps if _leq(g, c)], _canonical=True)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_dim(I, J)
    if J.is_zero():
        return I
    if I.is_zero():
        return J
    return MonomialIdeal(I.n, I.exps + J.exps)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_dim(I, J)
    if I.is_zero() or J.is_zero():
        return MonomialIdeal.zero(I.n)
    prods = {mul(u, v).exps for u in I.gens for v in J.gens}
    return MonomialIdeal(I.n, prods)


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """``I^k`` by repeated multiplication; ``I^0`` is the unit ideal."""
    if k < 0:
        raise ValueError("negative ideal power")
    result = MonomialIdeal.unit(I.n)
    for _ in range(k):
        result = product(result, I)
    return result


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``I ∩ J``, generated by the pairwise lcms of generators."""
    _same_dim(I, J)
    if I.is_zero() or J.is_zero():
        return MonomialIdeal.zero(I.n)
    # a generator of one ideal lying in the other already generates every lcm it takes part in
    shared, only_i, only_j = [], [], []
    for a in I.exps:
        (shared if _contains_exps(J, a) else only_i).append(a)
    for b in J.exps:
        (shared if _contains_exps(I, b) else only_j).append(b)
    lcms = [tuple(max(x, y) for x, y in zip(a, b)) for a in only_i for b in only_j]
    return MonomialIdeal(I.n, shared + lcms)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_dim(I, J)
    return I.exps == J.exps


def is_equigenerated(I: MonomialIdeal) -> bool:
    return len({g.degree for g in I.gens}) <= 1


def generator_degree(I: MonomialIdeal) -> int | None:
    """The common degree of an equigenerated nonzero ideal, else None."""
    degs = {g.degree for g in I.gens}
    return degs.pop() if len(degs) == 1 else None


# -- stability predicates -----------------------------------------------------


def _moves(u: Monomial, strong: bool):
    top = max((i for i, a in enumerate(u.exps, start=1) if a), default=0)
    js = [j for j in range(2, top + 1) if u.exps[j - 1]] if strong else ([top] if top > 1 else [])
    for j in js:
        for i in range(1, j):
            yield exchange(u, i, j)


def _stable_check(I: MonomialIdeal, c, strong: bool) -> bool:
    if c is not None:
        if len(c) != I.n:
            raise DimensionMismatch(f"bound of length {len(c)} vs ideal in {I.n} variables")
        if not all(_leq(g, c) for g in I.exps):
            return False
    for u in I.gens:
        for v in _moves(u, strong):
            if c is not None and not is_bounded(v, c):
                continue
            if not _contains_exps(I, v.exps):
                return False
    return True


def is_strongly_stable(I: MonomialIdeal) -> bool:
    return _stable_check(I, None, strong=True)


def is_stable(I: MonomialIdeal) -> bool:
    return _stable_check(I, None, strong=False)


def is_bounded_strongly_stable(I: MonomialIdeal, c: Sequence[int]) -> bool:
    return _stable_check(I, tuple(c), strong=True)


def is_bounded_stable(I: MonomialIdeal, c: Sequence[int]) -> bool:
    return _stable_check(I, tuple(c), strong=False)


# -- serialization ------------------------------------------------------------


def to_json_obj(I: MonomialIdeal) -> dict:
    return {"n": I.n, "gens": [list(e) for e in I.exps]}


def from_json_obj(obj: dict) -> MonomialIdeal:
    try:
        n = int(obj["n"])
        gens = [tuple(int(a) for a in g) for g in obj["gens"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad ideal JSON: {exc}") from None
    for g in gens:
        if any(a < 0 for a in g):
            raise ParseError(f"negative exponent in generator {list(g)}")
    return MonomialIdeal(n, gens)


def to_json(I: MonomialIdeal) -> str:
    return json.dumps(to_json_obj(I))


def from_json(text: str) -> MonomialIdeal:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad ideal JSON: {exc}") from None
    return from_json_obj(obj)


def parse_ideal(text: str, n: int | None = None) -> MonomialIdeal:
    """Parse ``x1*x2, x1*x3`` (optionally in parentheses) or the JSON format."""
    s = text.strip()
    if s.startswith("{"):
        I = from_json(s)
        if n is not None and I.n != n:
            raise DimensionMismatch(f"JSON ideal has n = {I.n}, expected {n}")
        return I
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    items = [t for t in (p.strip() for p in s.split(",")) if t]
    if items == ["0"] or not items:
        if n is None:
            raise ParseError("the zero ideal needs an explicit dimension")
        return MonomialIdeal.zero(n)
    if n is None:
        n = max(parse_monomial(t).n for t in items)
    return MonomialIdeal(n, [parse_monomial(t, n) for t in items])


def format_ideal(I: MonomialIdeal) -> str:
    if I.is_zero():
        return "(0)"
    return "(" + ", ".join(format_monomial(g) for g in I.gens) + ")"
