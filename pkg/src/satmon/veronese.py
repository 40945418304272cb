"""Veronese-type ideals ``I_{a,n,d}`` and closed forms for the saturation of their powers.

``I_{a,n,d}`` is generated by every degree ``d`` monomial whose exponent
vector is bounded by ``a``.  Construction accepts any integer vector ``a``;
the closed formulas additionally need ``a`` to be non-increasing.  All arithmetic with
``s = (sum(a) - d) / (n - 1)`` is exact (``fractions.Fraction``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotApplicable
from .ideal import MonomialIdeal, ideal_sum, power
from .saturation import colon_max


@dataclass(frozen=True)
class VeroneseSpec:
    a: tuple
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if not self.a:
            raise ValueError("the bound vector a must be nonempty")

    @property
    def n(self) -> int:
        return len(self.a)

    def shifted(self, ell: int) -> VeroneseSpec:
        """``(a - l e, d - l)``."""
        return VeroneseSpec(tuple(x - ell for x in self.a), self.d - ell)

    def scaled(self, k: int) -> VeroneseSpec:
        return VeroneseSpec(tuple(k * x for x in self.a), k * self.d)

    @property
    def s(self) -> Fraction:
        if self.n < 2:
            raise NotApplicable("s is undefined for n = 1")
        return Fraction(sum(self.a) - self.d, self.n - 1)

    def is_non_increasing(self) -> bool:
        return all(x >= y for x, y in zip(self.a, self.a[1:]))

    def check_hypotheses(self) -> None:
        if not self.is_non_increasing():
            raise NotApplicable(f"a must be non-increasing, got {list(self.a)}")
        if self.d < 0:
            raise NotApplicable(f"d = {self.d} < 0")
        if self.a[-1] < 0:
            raise NotApplicable(f"a_n = {self.a[-1]} < 0")
        if sum(self.a) < self.d:
            raise NotApplicable(f"sum(a) = {sum(self.a)} < d = {self.d}")

    def __str__(self) -> str:
        return f"I_{{({','.join(map(str, self.a))}),{self.n},{self.d}}}"


def _compositions(d: int, bounds: Sequence[int]):
    """Exponent vectors of total ``d`` with ``0 <= b_i <= bounds[i]``, in lex-descending order."""
    if not bounds:
        if d == 0:
            yield ()
        return
    rest = sum(max(b, 0) for b in bounds[1:])
    for b in range(min(d, bounds[0]), max(d - rest, 0) - 1, -1):
        for tail in _compositions(d - b, bounds[1:]):
            yield (b,) + tail


def veronese_ideal(spec: VeroneseSpec) -> MonomialIdeal:
    if veronese_is_zero(spec):
        return MonomialIdeal.zero(spec.n)
    gens = list(_compositions(spec.d, spec.a))
    # one degree and lex-descending, which is already canonical
    return MonomialIdeal(spec.n, gens, _canonical=True)


def veronese_is_zero(spec: VeroneseSpec) -> bool:
    return min(spec.a) < 0 or sum(spec.a) < spec.d or spec.d < 0


def veronese_layer(spec: VeroneseSpec, ell: int) -> MonomialIdeal:
    """Closed form of the layer ``J_l(I_{a,n,d}) = I_{a - l e, n, d - l}``."""
    spec.check_hypotheses()
    if ell < 0:
        raise ValueError("layer index must be >= 0")
    return veronese_ideal(spec.shifted(ell))


def sat_veronese(spec: VeroneseSpec) -> int:
    spec.check_hypotheses()
    if spec.n == 1:
        return spec.d
    return min((sum(spec.a) - spec.d) // (spec.n - 1), spec.a[-1], spec.d)


def sat_veronese_power(spec: VeroneseSpec, k: int) -> int:
    spec.check_hypotheses()
    if k < 1:
        raise ValueError("k must be positive")
    if spec.n == 1:
        return k * spec.d
    return min(k * (sum(spec.a) - spec.d) // (spec.n - 1), k * spec.a[-1], k * spec.d)


def veronese_power_identity(spec: VeroneseSpec, k: int) -> bool:
    """Checks ``(I_{a,n,d})^k == I_{ka,n,kd}`` by multiplying out the left side."""
    return power(veronese_ideal(spec), k) == veronese_ideal(spec.scaled(k))


def veronese_colon_identity(spec: VeroneseSpec, method: str = "general") -> bool:
    """Checks ``I_{c,n,g} : m == I_{c,n,g} + I_{c-e,n,g-1}`` by a direct colon computation."""
    I = veronese_ideal(spec)
    return colon_max(I, method) == ideal_sum(I, veronese_ideal(spec.shifted(1)))


@dataclass(frozen=True)
class QuasiLinearForm:
    """``f(k) = p_i k + q_i`` for ``k ≡ i (mod period)``."""

    period: int
    pieces: tuple  # ((p_0, q_0), ..., (p_{m-1}, q_{m-1})) as Fractions

    def evaluate(self, k: int) -> Fraction:
        p, q = self.pieces[k % self.period]
        return p * k + q

    def __str__(self) -> str:
        rows = []
        for i, (p, q) in enumerate(self.pieces):
            sign = "-" if q < 0 else "+"
            rows.append(f"k = {i} mod {self.period}: {p}*k {sign} {abs(q)}")
        return "\n".join(rows)


def quasilinear(spec: VeroneseSpec) -> QuasiLinearForm:
    """The quasi-linear function ``k -> sat((I_{a,n,d})^k)``.

    When the minimum ``t = min(s, a_n, d)`` is attained by ``a_n`` or ``d`` the
    period-1 form is returned, even if ``s`` ties; the branches agree there.
    """
    spec.check_hypotheses()
    if spec.n == 1:
        return QuasiLinearForm(1, ((Fraction(spec.d), Fraction(0)),))
    s, an, d = spec.s, spec.a[-1], spec.d
    t = min(s, an, d)
    if t == an:
        form = QuasiLinearForm(1, ((Fraction(an), Fraction(0)),))
    elif t == d:
        form = QuasiLinearForm(1, ((Fraction(d), Fraction(0)),))
    else:
        m = spec.n - 1
        form = QuasiLinearForm(m, tuple((s, math.floor(s * i) - s * i) for i in range(m)))
    if t == s and form.period == 1:
        # s is then an integer and the s-branch collapses to s*k
        assert s.denominator == 1 and form.pieces[0][0] == s
    return form
