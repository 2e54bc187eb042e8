"""Shared sparse storage for the three polynomial types keyed by exponent triples."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, TypeVar

from .scalar import ZERO, GaussianRational, Number

Triple = tuple[int, int, int]
T = TypeVar("T", bound="SparsePoly")


def accumulate(acc: dict[Triple, GaussianRational], key: Triple, c: GaussianRational) -> None:
    acc[key] = acc.get(key, ZERO) + c


class SparsePoly:
    """Immutable map from exponent triples to nonzero Gaussian rationals.

    Subclasses fix the meaning of the triple and supply multiplication.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Triple, Number] | Iterable[tuple[Triple, Number]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Triple, GaussianRational] = {}
        for key, c in items:
            if len(key) != 3 or any(e < 0 for e in key):
                raise ValueError(f"bad exponent triple {key!r}")
            accumulate(acc, tuple(key), GaussianRational.coerce(c))
        self._terms = {k: c for k, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _from_acc(cls: type[T], acc: dict[Triple, GaussianRational]) -> T:
        obj = cls.__new__(cls)
        obj._terms = {k: c for k, c in acc.items() if c}
        obj._hash = None
        return obj

    @classmethod
    def constant(cls: type[T], c: Number) -> T:
        return cls({(0, 0, 0): c})

    @classmethod
    def zero(cls: type[T]) -> T:
        return cls()

    @classmethod
    def one(cls: type[T]) -> T:
        return cls.constant(1)

    @property
    def terms(self) -> dict[Triple, GaussianRational]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Triple, GaussianRational]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, key: Triple) -> GaussianRational:
        return self._terms.get(key, ZERO)

    def __eq__(self, other: object) -> bool:
        if type(other) is type(self):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == type(self).constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __add__(self: T, other: T | Number) -> T:
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = type(self).constant(other)
        elif type(other) is not type(self):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            accumulate(acc, k, c)
        return type(self)._from_acc(acc)

    __radd__ = __add__

    def __neg__(self: T) -> T:
        return type(self)._from_acc({k: -c for k, c in self._terms.items()})

    def __sub__(self: T, other: T | Number) -> T:
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = type(self).constant(other)
        elif type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __rsub__(self: T, other: Number) -> T:
        return (-self) + other

    def scale(self: T, c: Number) -> T:
        c = GaussianRational.coerce(c)
        return type(self)._from_acc({k: v * c for k, v in self._terms.items()})

    def __truediv__(self: T, c: Number) -> T:
        if not isinstance(c, (int, Fraction, GaussianRational)):
            return NotImplemented
        return self.scale(1 / GaussianRational.coerce(c))

    def _mul(self: T, other: T) -> T:
        raise NotImplementedError

    def __mul__(self: T, other: T | Number) -> T:
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        if type(other) is not type(self):
            return NotImplemented
        return self._mul(other)

    def __rmul__(self: T, other: Number) -> T:
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self: T, k: int) -> T:
        if k < 0:
            raise ValueError("negative power")
        result = type(self).one()
        for _ in range(k):
            result = result * self
        return result

    def conjugate_coeffs(self: T) -> T:
        return type(self)._from_acc({k: c.conjugate() for k, c in self._terms.items()})

    def is_real(self) -> bool:
        return all(c.is_real() for c in self._terms.values())

    def hbar_degree(self) -> int:
        return max((k[2] for k in self._terms), default=0)

    def degree(self) -> int:
        """Total degree in the two non-hbar generators."""
        return max((k[0] + k[1] for k in self._terms), default=0)

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {c}" for k, c in sorted(self._terms.items()))
        return f"{type(self).__name__}({{{body}}})"
