"""Truncated Fock-space matrices for the ladder operators and the matrix quantization map.

Indices are 1-based throughout, so ``(a)_{j,j+1} = sqrt(j)`` for ``j = 1..N-1``.
Products of truncated matrices differ from the infinite-matrix values near the
bottom-right corner; ``safe_block_equal`` compares only the block that a product
of ``margin`` ladder factors cannot reach past the truncation edge.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import DimMismatch, InsufficientOrder, MarginTooLarge, UndefinedForUnitCase
from .opalg import AAPoly, l_map, quantize_wg
from .phase import PhasePoly
from .scalar import I, RAD_ONE, RAD_ZERO, Number, RadicalScalar, rad_normalize
from .series import Ordering


class FockMatrix:
    """Dense ``dim x dim`` matrix of RadicalScalar entries (immutable)."""

    __slots__ = ("dim", "_rows")

    def __init__(self, rows: Sequence[Sequence[RadicalScalar]]):
        dim = len(rows)
        if dim < 1 or any(len(r) != dim for r in rows):
            raise ValueError("FockMatrix needs a nonempty square grid")
        self.dim = dim
        self._rows = tuple(tuple(r) for r in rows)

    @classmethod
    def zeros(cls, dim: int) -> FockMatrix:
        return cls([[RAD_ZERO] * dim for _ in range(dim)])

    @classmethod
    def identity(cls, dim: int) -> FockMatrix:
        return cls([[RAD_ONE if i == j else RAD_ZERO for j in range(dim)] for i in range(dim)])

    @classmethod
    def from_entries(cls, dim: int, entries: dict[tuple[int, int], RadicalScalar]) -> FockMatrix:
        """Build from a sparse ``{(row, col): value}`` map with 1-based indices."""
        rows = [[RAD_ZERO] * dim for _ in range(dim)]
        for (i, j), v in entries.items():
            rows[i - 1][j - 1] = v
        return cls(rows)

    def __getitem__(self, index: tuple[int, int]) -> RadicalScalar:
        """1-based entry access."""
        i, j = index
        if not (1 <= i <= self.dim and 1 <= j <= self.dim):
            raise IndexError(index)
        return self._rows[i - 1][j - 1]

    @property
    def rows(self) -> tuple[tuple[RadicalScalar, ...], ...]:
        return self._rows

    def nonzero(self):
        for i, row in enumerate(self._rows, 1):
            for j, v in enumerate(row, 1):
                if v:
                    yield (i, j), v

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FockMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def _check(self, other: FockMatrix) -> None:
        if self.dim != other.dim:
            raise DimMismatch(f"dimensions differ: {self.dim} vs {other.dim}")

    def __add__(self, other: FockMatrix) -> FockMatrix:
        self._check(other)
        return FockMatrix(
            [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)]
        )

    def __sub__(self, other: FockMatrix) -> FockMatrix:
        return self + other.scale(-1)

    def scale(self, c: Number | RadicalScalar) -> FockMatrix:
        return FockMatrix([[v * c if v else v for v in row] for row in self._rows])

    def __matmul__(self, other: FockMatrix) -> FockMatrix:
        self._check(other)
        n = self.dim
        out = [[RAD_ZERO] * n for _ in range(n)]
        other_nz = [[(j, v) for j, v in enumerate(row) if v] for row in other._rows]
        for i, row in enumerate(self._rows):
            out_row = out[i]
            for k, a_ik in enumerate(row):
                if not a_ik:
                    continue
                for j, b_kj in other_nz[k]:
                    out_row[j] = out_row[j] + a_ik * b_kj
        return FockMatrix(out)

    __mul__ = __matmul__

    def conjugate_transpose(self) -> FockMatrix:
        """Hermitian conjugate with hbar treated as real."""
        n = self.dim
        return FockMatrix([[self._rows[j][i].conjugate() for j in range(n)] for i in range(n)])

    def __repr__(self) -> str:
        return f"FockMatrix(dim={self.dim}, nonzero={sum(1 for _ in self.nonzero())})"


def matrix_ops(a: FockMatrix, b, kind: str) -> FockMatrix:
    if kind == "add":
        return a + b
    if kind == "mul":
        return a @ b
    if kind == "scale":
        return a.scale(b)
    raise ValueError(f"unknown operation {kind!r}")


@lru_cache(maxsize=None)
def ladder_matrices(dim: int) -> tuple[FockMatrix, FockMatrix]:
    """Truncated annihilation ``a`` and creation ``a^dagger`` matrices."""
    if dim < 1:
        raise ValueError("dim must be positive")
    a = {(j, j + 1): rad_normalize(1, j) for j in range(1, dim)}
    adag = {(j + 1, j): v for (j, _), v in a.items()}
    return FockMatrix.from_entries(dim, a), FockMatrix.from_entries(dim, adag)


@lru_cache(maxsize=None)
def ladder_word(m: int, n: int, dim: int) -> FockMatrix:
    """``a^m (a^dagger)^n`` by repeated truncated multiplication."""
    a, adag = ladder_matrices(dim)
    if m == 0 and n == 0:
        return FockMatrix.identity(dim)
    if m > 0:
        return a @ ladder_word(m - 1, n, dim)
    return ladder_word(0, n - 1, dim) @ adag


@lru_cache(maxsize=None)
def f_matrix_direct(m: int, n: int, dim: int) -> FockMatrix:
    """``F^(m,n) = (-i hbar a)^m (a^dagger)^n`` from truncated products."""
    if min(m, n) < 0:
        raise ValueError("powers must be nonnegative")
    prefactor = RadicalScalar({(1, m): (-I) ** m})
    return ladder_word(m, n, dim).scale(prefactor)


def _rising(j: int, count: int) -> int:
    """``j (j+1) ... (j+count-1)``; empty product is 1."""
    return math.prod(range(j, j + count))


def f_matrix_closed(m: int, n: int, dim: int) -> FockMatrix:
    """``F^(m,n)`` filled from the closed-form entry formulas over the whole window."""
    if m == 0 and n == 0:
        raise UndefinedForUnitCase("closed forms are stated for m + n > 0 only")
    if min(m, n) < 0:
        raise ValueError("powers must be nonnegative")
    phase = (-I) ** m
    entries: dict[tuple[int, int], RadicalScalar] = {}
    for j in range(1, dim + 1):
        if n == 0:
            row, col, value = j, j + m, rad_normalize(phase, _rising(j, m), m)
        elif m == 0:
            row, col, value = j + n, j, rad_normalize(1, _rising(j, n))
        elif m > n:
            row, col = j, j + m - n
            value = rad_normalize(phase * _rising(j + m - n, n), _rising(j, m - n), m)
        elif m == n:
            row, col, value = j, j, rad_normalize(phase * _rising(j, m), 1, m)
        else:
            row, col = j + n - m, j
            value = rad_normalize(phase * _rising(j + n - m, m), _rising(j, n - m), m)
        if row <= dim and col <= dim:
            entries[(row, col)] = value
    return FockMatrix.from_entries(dim, entries)


def substitute_aa(a: AAPoly, dim: int) -> FockMatrix:
    """Replace ``A``/``Ad`` by the truncated ladder matrices, term by term."""
    out = FockMatrix.zeros(dim)
    for (m, n, k), c in a.items():
        out = out + ladder_word(m, n, dim).scale(RadicalScalar({(1, k): c}))
    return out


def wg_matrix(a: PhasePoly, ordering: Ordering, dim: int) -> FockMatrix:
    """Matrix image of ``a``: ``sum_s g(m,n,s) hbar^s F^(m-s, n-s)`` per monomial ``p^m x^n``."""
    needed = a.mixed_order()
    if ordering.order < needed:
        raise InsufficientOrder(needed, ordering.order)
    out = FockMatrix.zeros(dim)
    for (m, n, h), c in a.items():
        for s in range(min(m, n) + 1):
            g = ordering.g(m, n, s)
            if not g:
                continue
            factor = RadicalScalar({(1, h + s): c * g})
            out = out + f_matrix_direct(m - s, n - s, dim).scale(factor)
    return out


def wg_matrix_via_ladder(a: PhasePoly, ordering: Ordering, dim: int) -> FockMatrix:
    """Same map routed through the operator algebra: ``substitute_aa(l_map(quantize_wg(a)))``."""
    return substitute_aa(l_map(quantize_wg(a, ordering)), dim)


@dataclass(frozen=True)
class BlockComparison:
    equal: bool
    index: Optional[tuple[int, int]] = None
    left: Optional[RadicalScalar] = None
    right: Optional[RadicalScalar] = None

    def __bool__(self) -> bool:
        return self.equal

    def describe(self) -> str:
        if self.equal:
            return "equal"
        return f"first mismatch at {self.index}: {self.left} != {self.right}"


def safe_block_equal(a: FockMatrix, b: FockMatrix, margin: int) -> BlockComparison:
    """Compare entries ``(i, j)`` with ``max(i, j) <= dim - margin`` (1-based)."""
    if a.dim != b.dim:
        raise DimMismatch(f"dimensions differ: {a.dim} vs {b.dim}")
    if margin < 0 or margin >= a.dim:
        raise MarginTooLarge(f"margin {margin} must satisfy 0 <= margin < dim = {a.dim}")
    limit = a.dim - margin
    for i in range(1, limit + 1):
        for j in range(1, limit + 1):
            if a[i, j] != b[i, j]:
                return BlockComparison(False, (i, j), a[i, j], b[i, j])
    return BlockComparison(True)


def matrix_to_json(matrix: FockMatrix, hbar: Optional[float] = None) -> str:
    """``{"dim": N, "entries": [{"row", "col", "value"}]}`` with zero entries omitted.

    With a numeric ``hbar`` each value is rendered as a ``"re,im"`` decimal pair.
    """
    entries = []
    for (i, j), v in matrix.nonzero():
        if hbar is None:
            value = str(v)
        else:
            z = v.evaluate(hbar)
            value = f"{z.real!r},{z.imag!r}"
        entries.append({"row": i, "col": j, "value": value})
    return json.dumps({"dim": matrix.dim, "entries": entries})

