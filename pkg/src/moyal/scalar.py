"""Exact coefficients: Gaussian rationals Q(i) and the radical ring used by Fock matrices.

``GaussianRational`` is the coefficient field of every polynomial in the package.
``RadicalScalar`` is a finite sum ``c * sqrt(r) * hbar^k`` with squarefree ``r``; it
holds the entries of truncated ladder-operator matrices.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import DivisionByZero

Number = Union[int, Fraction, "GaussianRational"]


class GaussianRational:
    """Exact complex number with rational real and imaginary parts.

    Stored as ``(a + b*i) / d`` with ``d > 0`` and ``gcd(a, b, d) == 1``; the
    ``re``/``im`` properties give the reduced fractions.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // math.gcd(re.denominator, im.denominator)
        self._set(re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d)

    def _set(self, a: int, b: int, d: int) -> None:
        if d < 0:
            a, b, d = -a, -b, -d
        g = math.gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._a = a
        self._b = b
        self._d = d

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> GaussianRational:
        obj = cls.__new__(cls)
        obj._set(a, b, d)
        return obj

    @classmethod
    def coerce(cls, value: Number) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_real(self) -> bool:
        return self._b == 0

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and Fraction(self._a, self._d) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __add__(self, other: Number) -> GaussianRational:
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if self._d == o._d:
            return GaussianRational._raw(self._a + o._a, self._b + o._b, self._d)
        return GaussianRational._raw(
            self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d, self._d * o._d
        )

    __radd__ = __add__

    def __neg__(self) -> GaussianRational:
        return GaussianRational._raw(-self._a, -self._b, self._d)

    def __sub__(self, other: Number) -> GaussianRational:
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Number) -> GaussianRational:
        return GaussianRational.coerce(other) - self

    def __mul__(self, other: Number) -> GaussianRational:
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, e = self._a, self._b, o._a, o._b
        return GaussianRational._raw(a * c - b * e, a * e + b * c, self._d * o._d)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> GaussianRational:
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if not o:
            raise DivisionByZero("division by zero in Q(i)")
        a, b, c, e = self._a, self._b, o._a, o._b
        # (a+bi)/d / ((c+ei)/f) = (a+bi)(c-ei) f / (d (c^2+e^2))
        return GaussianRational._raw(
            (a * c + b * e) * o._d, (b * c - a * e) * o._d, self._d * (c * c + e * e)
        )

    def __rtruediv__(self, other: Number) -> GaussianRational:
        return GaussianRational.coerce(other) / self

    def __pow__(self, k: int) -> GaussianRational:
        if k < 0:
            return ONE / (self**-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> GaussianRational:
        return GaussianRational._raw(self._a, -self._b, self._d)

    def __complex__(self) -> complex:
        return complex(self._a / self._d, self._b / self._d)

    def __repr__(self) -> str:
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self) -> str:
        re, im = self.re, self.im
        if im == 0:
            return str(re)
        imag = "i" if abs(im) == 1 else f"{abs(im)}i"
        if re == 0:
            return ("-" if im < 0 else "") + imag
        return f"({re}{'-' if im < 0 else '+'}{imag})"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gq_ops(a: Number, b: Number, kind: str) -> GaussianRational:
    """Field operation by name: add, sub, mul, div (binary) or conj, neg (on ``a``)."""
    a = GaussianRational.coerce(a)
    if kind == "conj":
        return a.conjugate()
    if kind == "neg":
        return -a
    b = GaussianRational.coerce(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown operation {kind!r}")


def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(s, r)`` with ``n == s*s*r`` and ``r`` squarefree (trial division)."""
    if n < 1:
        raise ValueError("radicand must be positive")
    outside, rest, f = 1, n, 2
    while f * f <= rest:
        while rest % (f * f) == 0:
            outside *= f
            rest //= f * f
        f += 1
    return outside, rest


Key = tuple[int, int]  # (radicand, hbar_power)


class RadicalScalar:
    """Finite sum of ``c * sqrt(radicand) * hbar^k`` with squarefree radicands."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Key, Number] | None = None):
        acc: dict[Key, GaussianRational] = {}
        for (radicand, k), c in (terms or {}).items():
            _accumulate(acc, radicand, k, GaussianRational.coerce(c))
        self._terms = {key: c for key, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: dict[Key, GaussianRational]) -> RadicalScalar:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self) -> Mapping[Key, GaussianRational]:
        return dict(self._terms)

    def items(self) -> Iterable[tuple[Key, GaussianRational]]:
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RadicalScalar):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == RadicalScalar({(1, 0): other})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: RadicalScalar) -> RadicalScalar:
        if not isinstance(other, RadicalScalar):
            return NotImplemented
        if not other._terms:
            return self
        acc = dict(self._terms)
        for key, c in other._terms.items():
            v = acc.get(key, ZERO) + c
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
        return RadicalScalar._from_clean(acc)

    def __neg__(self) -> RadicalScalar:
        return RadicalScalar._from_clean({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: RadicalScalar) -> RadicalScalar:
        return self + (-other)

    def __mul__(self, other: Union[RadicalScalar, Number]) -> RadicalScalar:
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = GaussianRational.coerce(other)
            if not c:
                return RAD_ZERO
            return RadicalScalar._from_clean({k: v * c for k, v in self._terms.items()})
        if not isinstance(other, RadicalScalar):
            return NotImplemented
        acc: dict[Key, GaussianRational] = {}
        for (r1, k1), c1 in self._terms.items():
            for (r2, k2), c2 in other._terms.items():
                _accumulate_product(acc, r1, r2, k1 + k2, c1 * c2)
        return RadicalScalar._from_clean({k: c for k, c in acc.items() if c})

    __rmul__ = __mul__

    def conjugate(self) -> RadicalScalar:
        """Complex conjugate with hbar treated as real."""
        return RadicalScalar._from_clean({k: c.conjugate() for k, c in self._terms.items()})

    def evaluate(self, hbar: float = 1.0) -> complex:
        return sum(
            (complex(c) * math.sqrt(r) * hbar**k for (r, k), c in self._terms.items()),
            0j,
        )

    def __repr__(self) -> str:
        return f"RadicalScalar({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for (r, k), c in sorted(self._terms.items(), key=lambda t: (t[0][1], t[0][0])):
            factors = []
            if r != 1:
                factors.append(f"sqrt({r})")
            if k == 1:
                factors.append("hbar")
            elif k > 1:
                factors.append(f"hbar^{k}")
            text = str(c)
            negative = text.startswith("-")
            if negative:
                text = text[1:]
            if factors and text == "1":
                text = "*".join(factors)
            else:
                text = "*".join([text, *factors])
            if not out:
                out = ("-" if negative else "") + text
            else:
                out += (" - " if negative else " + ") + text
        return out


def _accumulate(acc: dict[Key, GaussianRational], radicand: int, k: int, c: GaussianRational) -> None:
    if radicand == 0 or not c:
        return
    outside, inside = squarefree_split(radicand)
    key = (inside, k)
    acc[key] = acc.get(key, ZERO) + c * outside


def _accumulate_product(
    acc: dict[Key, GaussianRational], r1: int, r2: int, k: int, c: GaussianRational
) -> None:
    # r1, r2 squarefree: sqrt(r1 r2) = g * sqrt((r1/g)(r2/g)) with g = gcd(r1, r2)
    g = math.gcd(r1, r2)
    key = ((r1 // g) * (r2 // g), k)
    if g != 1:
        c = c * g
    acc[key] = acc.get(key, ZERO) + c


RAD_ZERO = RadicalScalar()
RAD_ONE = RadicalScalar({(1, 0): 1})


def rad_normalize(coefficient: Number, radicand: int, hbar_power: int = 0) -> RadicalScalar:
    """Build ``coefficient * sqrt(radicand) * hbar^hbar_power`` in squarefree form."""
    if radicand < 0 or hbar_power < 0:
        raise ValueError("radicand and hbar_power must be nonnegative")
    return RadicalScalar({(radicand, hbar_power): coefficient}) if radicand else RAD_ZERO


def rad_ops(a: RadicalScalar, b: RadicalScalar, kind: str) -> RadicalScalar:
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown operation {kind!r}")
