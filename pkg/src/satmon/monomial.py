"""Monomials as exponent vectors.

A monomial ``x1^a1*...*xn^an`` is stored as the tuple ``(a1, ..., an)``.
Variable indices in the public API are 1-based so that ``exchange(u, 1, 3)``
reads as the move ``x1*u/x3``.  Bound vectors are plain integer tuples.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import config
from .errors import DimensionMismatch, ExponentOverflow, InvalidMove, NotDivisible, ParseError

BoundVector = tuple  # tuple[int, ...]; entries may be negative


@dataclass(frozen=True, slots=True)
class Monomial:
    exps: tuple

    def __post_init__(self):
        if not isinstance(self.exps, tuple):
            object.__setattr__(self, "exps", tuple(self.exps))
        if not self.exps:
            raise ValueError("a monomial needs ambient dimension >= 1")
        for a in self.exps:
            if a < 0:
                raise ValueError(f"negative exponent in {self.exps}")

    @classmethod
    def unit(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def var(cls, i: int, n: int, power: int = 1) -> Monomial:
        """The monomial ``x_i^power`` in ``n`` variables (``i`` is 1-based)."""
        if not 1 <= i <= n:
            raise IndexError(f"variable index {i} out of range 1..{n}")
        exps = [0] * n
        exps[i - 1] = power
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def is_unit(self) -> bool:
        return not any(self.exps)

    def __mul__(self, other: Monomial) -> Monomial:
        return mul(self, other)

    def __pow__(self, k: int) -> Monomial:
        return power(self, k)

    def __truediv__(self, other: Monomial) -> Monomial:
        return quotient(self, other)

    def __str__(self) -> str:
        return format_monomial(self)

    def __repr__(self) -> str:
        return f"Monomial({list(self.exps)})"


def _check_dim(u: Monomial, v) -> None:
    m = v.n if isinstance(v, Monomial) else len(v)
    if u.n != m:
        raise DimensionMismatch(f"dimension {u.n} vs {m}")


def _checked(exps: Iterable[int]) -> Monomial:
    exps = tuple(exps)
    cap = config.EXPONENT_CAP
    for a in exps:
        if a > cap:
            raise ExponentOverflow(f"exponent {a} exceeds cap {cap}")
    return Monomial(exps)


def total_degree(u: Monomial) -> int:
    return u.degree


def max_index(u: Monomial) -> int:
    """Largest 1-based index of a variable dividing ``u``; 0 for the unit."""
    for i in range(u.n, 0, -1):
        if u.exps[i - 1]:
            return i
    return 0


def divides(u: Monomial, v: Monomial) -> bool:
    _check_dim(u, v)
    return all(a <= b for a, b in zip(u.exps, v.exps))


def quotient(v: Monomial, u: Monomial) -> Monomial:
    """``v / u``; ``u`` must divide ``v``."""
    _check_dim(u, v)
    exps = tuple(b - a for a, b in zip(u.exps, v.exps))
    if any(e < 0 for e in exps):
        raise NotDivisible(f"{format_monomial(u)} does not divide {format_monomial(v)}")
    return Monomial(exps)


def mul(u: Monomial, v: Monomial) -> Monomial:
    _check_dim(u, v)
    return _checked(a + b for a, b in zip(u.exps, v.exps))


def power(u: Monomial, k: int) -> Monomial:
    if k < 0:
        raise ValueError("negative power of a monomial")
    return _checked(a * k for a in u.exps)


def lcm(u: Monomial, v: Monomial) -> Monomial:
    _check_dim(u, v)
    return Monomial(tuple(max(a, b) for a, b in zip(u.exps, v.exps)))


def is_bounded(u: Monomial, c: Sequence[int]) -> bool:
    """True iff every exponent of ``u`` is at most the matching entry of ``c``."""
    _check_dim(u, c)
    return all(a <= b for a, b in zip(u.exps, c))


def exchange(u: Monomial, i: int, j: int) -> Monomial:
    """The move ``x_i * u / x_j`` for ``i < j`` with ``x_j | u``; degree is preserved."""
    if not (1 <= i < j <= u.n):
        raise InvalidMove(f"exchange needs 1 <= i < j <= n, got i={i}, j={j}")
    if u.exps[j - 1] == 0:
        raise InvalidMove(f"x{j} does not divide {format_monomial(u)}")
    exps = list(u.exps)
    exps[i - 1] += 1
    exps[j - 1] -= 1
    return _checked(exps)


def shift_bound(c: Sequence[int], scale: int = 1, minus: int = 0) -> BoundVector:
    """The bound vector ``scale*c - minus*e`` with ``e = (1, ..., 1)``."""
    return tuple(scale * ci - minus for ci in c)


# -- text syntax --------------------------------------------------------------

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int | None = None) -> Monomial:
    """Parse ``x1^2*x3`` (case-insensitive) or ``[2,0,1]``.

    Without ``n`` the ambient dimension is the largest variable index seen.
    """
    s = text.strip().lower().replace(" ", "")
    if s.startswith("["):
        try:
            exps = [int(t) for t in s.strip("[]").split(",") if t != ""]
        except ValueError:
            raise ParseError(f"bad exponent vector {text!r}") from None
        if n is not None and len(exps) != n:
            raise DimensionMismatch(f"{text!r} has length {len(exps)}, expected {n}")
        if not exps or any(a < 0 for a in exps):
            raise ParseError(f"bad exponent vector {text!r}")
        return _checked(exps)
    if s == "":
        raise ParseError("empty monomial")
    powers: dict[int, int] = {}
    if s != "1":
        for factor in s.split("*"):
            m = _FACTOR.match(factor)
            if m is None:
                raise ParseError(f"cannot parse factor {factor!r} in {text!r}")
            i = int(m.group(1))
            if i < 1:
                raise ParseError(f"variable index must be >= 1 in {text!r}")
            powers[i] = powers.get(i, 0) + int(m.group(2) or 1)
    top = max(powers, default=1)
    if n is None:
        n = top
    elif top > n:
        raise DimensionMismatch(f"{text!r} uses x{top} but n = {n}")
    exps = [0] * n
    for i, a in powers.items():
        exps[i - 1] = a
    return _checked(exps)


def format_monomial(u: Monomial) -> str:
    parts = []
    for i, a in enumerate(u.exps, start=1):
        if a == 1:
            parts.append(f"x{i}")
        elif a > 1:
            parts.append(f"x{i}^{a}")
    return "*".join(parts) if parts else "1"


def parse_bound(text: str) -> BoundVector:
    try:
        return tuple(int(t) for t in text.strip().strip("()[]").split(","))
    except ValueError:
        raise ParseError(f"bad bound vector {text!r}") from None
