"""Truncated formal power series and operator-ordering schemes.

An ordering scheme is fixed by a series ``f(y)`` with ``f_0 = 1``.  The twist
series ``alpha(y) = f(y) * exp(i y / 2)`` and its reciprocal drive the
generalized star product; ``f`` alone gives the quantization coefficients
``g(m, n, s)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .errors import (
    IndexOutOfRange,
    InvalidOrdering,
    NonUnitConstantTerm,
    OrderMismatch,
    UnknownPreset,
)
from .scalar import I, ONE, ZERO, GaussianRational, Number

PRESETS = ("weyl", "standard", "antistandard", "symmetric", "born_jordan")
REAL_ALPHA_PRESETS = ("weyl", "symmetric", "born_jordan")


@dataclass(frozen=True)
class FormalSeries:
    coeffs: tuple[GaussianRational, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(GaussianRational.coerce(c) for c in self.coeffs))

    @classmethod
    def of(cls, coeffs: Iterable[Number], order: Optional[int] = None) -> FormalSeries:
        """Build from leading coefficients, zero-padded (or truncated) to ``order``."""
        cs = list(coeffs)
        if order is not None:
            cs = (cs + [ZERO] * (order + 1))[: order + 1]
        return cls(tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> GaussianRational:
        return self.coeffs[k]

    def __mul__(self, other: FormalSeries) -> FormalSeries:
        return series_mul(self, other)

    def reciprocal(self) -> FormalSeries:
        return series_reciprocal(self)

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coeffs)

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


def exp_series(rate: GaussianRational, order: int) -> FormalSeries:
    """Coefficients of ``exp(rate * y)``: ``rate^k / k!``."""
    return FormalSeries(tuple(rate**k / math.factorial(k) for k in range(order + 1)))


def exp_i_half(order: int) -> FormalSeries:
    return exp_series(I / 2, order)


def series_mul(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    """Cauchy product truncated at the common order."""
    if a.order != b.order:
        raise OrderMismatch(f"orders differ: {a.order} vs {b.order}")
    out = []
    for n in range(a.order + 1):
        acc = ZERO
        for k in range(n + 1):
            if a.coeffs[k] and b.coeffs[n - k]:
                acc = acc + a.coeffs[k] * b.coeffs[n - k]
        out.append(acc)
    return FormalSeries(tuple(out))


def series_reciprocal(a: FormalSeries) -> FormalSeries:
    a0 = a.coeffs[0]
    if not a0:
        raise NonUnitConstantTerm("constant term is zero; series is not invertible")
    inv0 = ONE / a0
    out = [inv0]
    for n in range(1, a.order + 1):
        acc = ZERO
        for k in range(1, n + 1):
            if a.coeffs[k]:
                acc = acc + a.coeffs[k] * out[n - k]
        out.append(-inv0 * acc)
    return FormalSeries(tuple(out))


def preset_f(name: str, order: int) -> FormalSeries:
    """The ordering series ``f`` of a named preset, to ``order``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    minus_i = -I
    if name == "weyl":
        return exp_series(minus_i / 2, order)
    if name == "standard":
        return exp_series(minus_i, order)
    if name == "antistandard":
        return FormalSeries.of([ONE], order)
    if name == "symmetric":
        # f = (1 + exp(-iy)) / 2
        std = exp_series(minus_i, order).coeffs
        return FormalSeries((ONE,) + tuple(c / 2 for c in std[1:]))
    if name == "born_jordan":
        # f = (1 - exp(-iy)) / (iy)
        return FormalSeries(tuple(minus_i**k / math.factorial(k + 1) for k in range(order + 1)))
    raise UnknownPreset(f"unknown ordering preset {name!r}; expected one of {', '.join(PRESETS)}")


@dataclass(frozen=True)
class Ordering:
    """An ordering scheme truncated at ``order``.

    ``source`` is the preset name, or for custom orderings the finite list of
    f-coefficients; coefficients beyond the list are zero, so any ordering can
    be re-expanded with :meth:`at_order`.
    """

    name: str
    f: FormalSeries
    alpha: FormalSeries = field(repr=False)
    alpha_inv: FormalSeries = field(repr=False)
    source: tuple = field(default=(), repr=False, compare=False)
    _g_cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    @classmethod
    def preset(cls, name: str, order: int = 12) -> Ordering:
        return cls._build(name, preset_f(name, order), ())

    @classmethod
    def custom(cls, coeffs: Sequence[Number], order: Optional[int] = None) -> Ordering:
        cs = tuple(GaussianRational.coerce(c) for c in coeffs)
        if not cs or cs[0] != 1:
            raise InvalidOrdering("custom ordering series must have f_0 = 1")
        if order is None:
            order = len(cs) - 1
        return cls._build("custom", FormalSeries.of(cs, order), cs)

    @classmethod
    def _build(cls, name: str, f: FormalSeries, source: tuple) -> Ordering:
        alpha = series_mul(f, exp_i_half(f.order))
        return cls(name, f, alpha, series_reciprocal(alpha), source)

    @property
    def order(self) -> int:
        return self.f.order

    def at_order(self, order: int) -> Ordering:
        if order == self.order:
            return self
        if self.name == "custom":
            return Ordering.custom(self.source, order)
        return Ordering.preset(self.name, order)

    def label(self) -> str:
        return self.name

    def g(self, m: int, n: int, s: int) -> GaussianRational:
        key = (m, n, s)
        value = self._g_cache.get(key)
        if value is None:
            value = self._g_cache[key] = g_from_f(self.f, m, n, s)
        return value


def ordering_from_file(path: str | Path, order: Optional[int] = None) -> Ordering:
    """Read a custom ordering: one ``re,im`` coefficient per line, each a fraction."""
    coeffs = []
    for lineno, line in enumerate(Path(path).read_text().splitlines()):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            re_text, im_text = line.split(",")
            coeffs.append(GaussianRational(Fraction(re_text.strip()), Fraction(im_text.strip())))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidOrdering(f"{path}:{lineno + 1}: cannot parse coefficient {line!r}") from exc
    return Ordering.custom(coeffs, order)


def resolve_ordering(source: str, order: int = 12) -> Ordering:
    """Preset name or path to a custom-f file."""
    if source in PRESETS:
        return Ordering.preset(source, order)
    path = Path(source)
    if not path.is_file():
        raise UnknownPreset(f"{source!r} is neither a preset ({', '.join(PRESETS)}) nor a file")
    return ordering_from_file(path, order)


def _check_index(series: FormalSeries, m: int, n: int, s: int) -> None:
    if min(m, n, s) < 0 or s > min(m, n) or s > series.order:
        raise IndexOutOfRange(f"g({m},{n},{s}) needs 0 <= s <= min(m,n) and s <= {series.order}")


def g_from_f(f: FormalSeries, m: int, n: int, s: int) -> GaussianRational:
    """``(-1)^s m! n! / (s! (m-s)! (n-s)!) * f^(s)(0)`` with ``f^(s)(0) = s! f_s``."""
    _check_index(f, m, n, s)
    derivative = f.coeffs[s] * math.factorial(s)
    weight = Fraction(
        (-1) ** s * math.factorial(m) * math.factorial(n),
        math.factorial(s) * math.factorial(m - s) * math.factorial(n - s),
    )
    return derivative * weight


def g_from_alpha(alpha: FormalSeries, m: int, n: int, s: int) -> GaussianRational:
    """``(i/2)^s m! n! / ((m-s)! (n-s)!) * sum_k (2i)^k / (s-k)! * alpha_k``."""
    _check_index(alpha, m, n, s)
    acc = ZERO
    two_i = I * 2
    for k in range(s + 1):
        acc = acc + two_i**k * alpha.coeffs[k] / math.factorial(s - k)
    weight = Fraction(math.factorial(m) * math.factorial(n), math.factorial(m - s) * math.factorial(n - s))
    return (I / 2) ** s * acc * weight
