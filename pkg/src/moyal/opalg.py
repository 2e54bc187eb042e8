"""Heisenberg-Weyl operator algebra in normal order, the quantization map, and the ladder algebra.

``OpPoly`` keys ``(a, b, k)`` mean ``hbar^k P^a X^b`` (all P left of all X), with
``[X, P] = i hbar``.  ``AAPoly`` keys ``(m, n, k)`` mean ``hbar^k A^m Ad^n`` (all A
left of all Ad), with ``[A, Ad] = 1``.  Products never store words: both reorder
the single misordered block in closed form.
"""

from __future__ import annotations

import math
from functools import lru_cache

from ._sparse import SparsePoly, Triple, accumulate
from .errors import InsufficientOrder
from .phase import PhasePoly, poisson_bracket
from .scalar import I, GaussianRational
from .series import Ordering


class OpPoly(SparsePoly):
    """Polynomial in the operators P, X and the central hbar, as ``sum c hbar^k P^a X^b``."""

    __slots__ = ()

    @classmethod
    def x(cls) -> OpPoly:
        return cls({(0, 1, 0): 1})

    @classmethod
    def p(cls) -> OpPoly:
        return cls({(1, 0, 0): 1})

    @classmethod
    def hbar(cls) -> OpPoly:
        return cls({(0, 0, 1): 1})

    def _mul(self, other: OpPoly) -> OpPoly:
        return op_mul(self, other)


class AAPoly(SparsePoly):
    """Polynomial in the ladder operators, as ``sum c hbar^k A^m Ad^n``."""

    __slots__ = ()

    @classmethod
    def a(cls) -> AAPoly:
        return cls({(1, 0, 0): 1})

    @classmethod
    def adag(cls) -> AAPoly:
        return cls({(0, 1, 0): 1})

    def _mul(self, other: AAPoly) -> AAPoly:
        return aa_mul(self, other)


@lru_cache(maxsize=None)
def _xp_reorder(b: int, c: int) -> tuple[tuple[int, GaussianRational], ...]:
    # X^b P^c = sum_k k! C(b,k) C(c,k) (i hbar)^k P^{c-k} X^{b-k}
    return tuple(
        (k, I**k * (math.factorial(k) * math.comb(b, k) * math.comb(c, k)))
        for k in range(min(b, c) + 1)
    )


@lru_cache(maxsize=None)
def _adag_a_reorder(n: int, c: int) -> tuple[tuple[int, int], ...]:
    # Ad^n A^c = sum_k (-1)^k k! C(n,k) C(c,k) A^{c-k} Ad^{n-k}
    return tuple(
        (k, (-1) ** k * math.factorial(k) * math.comb(n, k) * math.comb(c, k))
        for k in range(min(n, c) + 1)
    )


def normal_reduce_xp(b: int, c: int) -> OpPoly:
    """Normal-ordered form of the word ``X^b P^c``."""
    return OpPoly._from_acc({(c - k, b - k, k): w for k, w in _xp_reorder(b, c)})


def op_mul(a: OpPoly, b: OpPoly) -> OpPoly:
    acc: dict[Triple, GaussianRational] = {}
    for (pa, xa, ha), ca in a.items():
        for (pb, xb, hb), cb in b.items():
            c = ca * cb
            for k, w in _xp_reorder(xa, pb):
                accumulate(acc, (pa + pb - k, xa + xb - k, ha + hb + k), c * w)
    return OpPoly._from_acc(acc)


def op_commutator(a: OpPoly, b: OpPoly) -> OpPoly:
    return op_mul(a, b) - op_mul(b, a)


def op_adjoint(a: OpPoly) -> OpPoly:
    """Formal adjoint: conjugate coefficients, reverse words; hbar, P, X self-adjoint."""
    acc: dict[Triple, GaussianRational] = {}
    for (pa, xa, ha), c in a.items():
        cc = c.conjugate()
        # (P^a X^b)^dagger = X^b P^a
        for k, w in _xp_reorder(xa, pa):
            accumulate(acc, (pa - k, xa - k, ha + k), cc * w)
    return OpPoly._from_acc(acc)


def quantize_wg(a: PhasePoly, ordering: Ordering) -> OpPoly:
    """``W_g(p^m x^n) = sum_s g(m,n,s) hbar^s P^{m-s} X^{n-s}``, extended linearly."""
    needed = a.mixed_order()
    if ordering.order < needed:
        raise InsufficientOrder(needed, ordering.order)
    acc: dict[Triple, GaussianRational] = {}
    for (m, n, h), c in a.items():
        for s in range(min(m, n) + 1):
            g = ordering.g(m, n, s)
            if g:
                accumulate(acc, (m - s, n - s, h + s), c * g)
    return OpPoly._from_acc(acc)


def dirac_defect(a: PhasePoly, ordering: Ordering, var: str) -> OpPoly:
    """``i hbar W_g({v, A}) - [v_hat, W_g(A)]`` for ``v`` in {x, p}; zero for a valid ordering."""
    if var == "x":
        v, v_hat = PhasePoly.x(), OpPoly.x()
    elif var == "p":
        v, v_hat = PhasePoly.p(), OpPoly.p()
    else:
        raise ValueError("var must be 'x' or 'p'")
    i_hbar = OpPoly({(0, 0, 1): I})
    lhs = op_mul(i_hbar, quantize_wg(poisson_bracket(v, a), ordering))
    return lhs - op_commutator(v_hat, quantize_wg(a, ordering))


def l_map(a: OpPoly) -> AAPoly:
    """``X -> Ad``, ``P -> -i hbar A``: ``hbar^k P^a X^b -> (-i)^a hbar^{k+a} A^a Ad^b``."""
    minus_i = -I
    return AAPoly._from_acc({(pa, xa, h + pa): c * minus_i**pa for (pa, xa, h), c in a.items()})


def aa_mul(a: AAPoly, b: AAPoly) -> AAPoly:
    acc: dict[Triple, GaussianRational] = {}
    for (ma, na, ha), ca in a.items():
        for (mb, nb, hb), cb in b.items():
            c = ca * cb
            for k, w in _adag_a_reorder(na, mb):
                accumulate(acc, (ma + mb - k, na + nb - k, ha + hb), c * w)
    return AAPoly._from_acc(acc)


def is_formally_symmetric(a: OpPoly) -> bool:
    return op_adjoint(a) == a


__all__ = [
    "AAPoly",
    "OpPoly",
    "aa_mul",
    "dirac_defect",
    "is_formally_symmetric",
    "l_map",
    "normal_reduce_xp",
    "op_adjoint",
    "op_commutator",
    "op_mul",
    "quantize_wg",
]
