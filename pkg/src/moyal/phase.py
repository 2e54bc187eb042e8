"""Phase-space polynomials in (x, p, hbar) and the star products acting on them.

Monomial keys are ``(p_power, x_power, hbar_power)``, i.e. ``c * p^m x^n hbar^k``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ._sparse import SparsePoly, Triple, accumulate
from .errors import InsufficientOrder
from .scalar import I, GaussianRational
from .series import FormalSeries, Ordering


class PhasePoly(SparsePoly):
    """Commutative polynomial ``sum c * p^m x^n hbar^k``."""

    __slots__ = ()

    @classmethod
    def x(cls) -> PhasePoly:
        return cls({(0, 1, 0): 1})

    @classmethod
    def p(cls) -> PhasePoly:
        return cls({(1, 0, 0): 1})

    @classmethod
    def hbar(cls) -> PhasePoly:
        return cls({(0, 0, 1): 1})

    @classmethod
    def monomial(cls, m: int, n: int, k: int = 0, c=1) -> PhasePoly:
        return cls({(m, n, k): c})

    def _mul(self, other: PhasePoly) -> PhasePoly:
        acc: dict[Triple, GaussianRational] = {}
        for (m1, n1, k1), c1 in self._terms.items():
            for (m2, n2, k2), c2 in other._terms.items():
                accumulate(acc, (m1 + m2, n1 + n2, k1 + k2), c1 * c2)
        return PhasePoly._from_acc(acc)

    def mixed_order(self) -> int:
        """Largest ``min(p_power, x_power)`` over monomials: the series order a twist needs."""
        return max((min(m, n) for m, n, _ in self._terms), default=0)


def poly_ops(a: PhasePoly, b, kind: str) -> PhasePoly:
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "scale":
        return a.scale(b)
    raise ValueError(f"unknown operation {kind!r}")


def _falling(n: int, k: int) -> int:
    return math.perm(n, k)


def partial_derivative(a: PhasePoly, var: str, times: int = 1) -> PhasePoly:
    if var not in ("x", "p"):
        raise ValueError("var must be 'x' or 'p'")
    idx = 1 if var == "x" else 0
    acc: dict[Triple, GaussianRational] = {}
    for key, c in a.items():
        e = key[idx]
        if e < times:
            continue
        new = list(key)
        new[idx] = e - times
        accumulate(acc, tuple(new), c * _falling(e, times))
    return PhasePoly._from_acc(acc)


def poisson_bracket(a: PhasePoly, b: PhasePoly) -> PhasePoly:
    """``{A, B} = dA/dx dB/dp - dA/dp dB/dx``."""
    return partial_derivative(a, "x") * partial_derivative(b, "p") - partial_derivative(
        a, "p"
    ) * partial_derivative(b, "x")


def moyal_star(a: PhasePoly, b: PhasePoly) -> PhasePoly:
    """Moyal product ``A exp(i hbar/2 (<-d_x ->d_p - <-d_p ->d_x)) B``.

    The k-th order term is ``(i hbar/2)^k / k! * sum_j (-1)^j C(k,j)
    (d_x^{k-j} d_p^j A)(d_p^{k-j} d_x^j B)``; it vanishes once k exceeds the
    available derivatives, so the sum is finite.
    """
    acc: dict[Triple, GaussianRational] = {}
    half_i = I / 2
    for (m1, n1, h1), c1 in a.items():
        for (m2, n2, h2), c2 in b.items():
            c12 = c1 * c2
            # j derivatives: d_p on A, d_x on B; k-j: d_x on A, d_p on B
            for j in range(min(m1, n2) + 1):
                for r in range(min(n1, m2) + 1):
                    k = j + r
                    weight = Fraction(
                        (-1) ** j * _falling(m1, j) * _falling(n2, j) * _falling(n1, r) * _falling(m2, r),
                        math.factorial(j) * math.factorial(r),
                    )
                    key = (m1 - j + m2 - r, n1 - r + n2 - j, h1 + h2 + k)
                    accumulate(acc, key, c12 * half_i**k * weight)
    return PhasePoly._from_acc(acc)


def alpha_transform(a: PhasePoly, series: FormalSeries) -> PhasePoly:
    """Apply ``alpha(-hbar d^2/dx dp) = sum_k alpha_k (-hbar)^k d_x^k d_p^k``."""
    needed = a.mixed_order()
    if series.order < needed:
        raise InsufficientOrder(needed, series.order)
    acc: dict[Triple, GaussianRational] = {}
    for (m, n, h), c in a.items():
        for k in range(min(m, n) + 1):
            ak = series.coeffs[k]
            if not ak:
                continue
            weight = (-1) ** k * _falling(m, k) * _falling(n, k)
            accumulate(acc, (m - k, n - k, h + k), c * ak * weight)
    return PhasePoly._from_acc(acc)


def g_star(a: PhasePoly, b: PhasePoly, ordering: Ordering) -> PhasePoly:
    """Generalized star product ``alpha^-1[(alpha A) * (alpha B)]``."""
    product = moyal_star(alpha_transform(a, ordering.alpha), alpha_transform(b, ordering.alpha))
    return alpha_transform(product, ordering.alpha_inv)


def star_commutator(a: PhasePoly, b: PhasePoly, ordering: Ordering) -> PhasePoly:
    return g_star(a, b, ordering) - g_star(b, a, ordering)


def classical_limit(a: PhasePoly) -> PhasePoly:
    return PhasePoly._from_acc({k: c for k, c in a.items() if k[2] == 0})


def divide_by_i_hbar(a: PhasePoly) -> PhasePoly:
    """Exact division by ``i hbar``; every term must carry at least one hbar."""
    acc = {}
    for (m, n, h), c in a.items():
        if h == 0:
            raise ValueError("polynomial has hbar-free terms; not divisible by i*hbar")
        acc[(m, n, h - 1)] = c * -I
    return PhasePoly._from_acc(acc)


def required_order(*polys: PhasePoly) -> int:
    """Series order sufficient for ``g_star`` on these factors (sum of degrees)."""
    return sum(p.degree() for p in polys)


def hbar_parity_parts(a: PhasePoly) -> tuple[PhasePoly, PhasePoly]:
    """Split into (even-hbar, odd-hbar) parts."""
    even = {k: c for k, c in a.items() if k[2] % 2 == 0}
    odd = {k: c for k, c in a.items() if k[2] % 2 == 1}
    return PhasePoly._from_acc(even), PhasePoly._from_acc(odd)


__all__ = [
    "PhasePoly",
    "alpha_transform",
    "classical_limit",
    "divide_by_i_hbar",
    "g_star",
    "hbar_parity_parts",
    "moyal_star",
    "partial_derivative",
    "poisson_bracket",
    "poly_ops",
    "required_order",
    "star_commutator",
]

