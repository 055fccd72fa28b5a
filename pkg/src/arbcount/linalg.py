"""Exact integer linear algebra: determinants, minors, characteristic polynomials.

Nothing here touches floating point. Determinants use fraction-free
(Bareiss) elimination; small matrices whose minors provably fit in 64 bits
are routed to the compiled kernel when it is available.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import isqrt
from typing import Iterable, Sequence

from . import kernels


@dataclass(frozen=True)
class IntMatrix:
    """Dense matrix of Python integers (arbitrary precision)."""

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        frozen = tuple(tuple(int(x) for x in r) for r in rows)
        if not frozen or not frozen[0]:
            raise ValueError("matrix dimensions must be positive")
        width = len(frozen[0])
        if any(len(r) != width for r in frozen):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", frozen)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def is_square(self) -> bool:
        r, c = self.shape
        return r == c

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows))

    T = property(transpose)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        _same_shape(self, other)
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        _same_shape(self, other)
        return IntMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "IntMatrix":
        return self.scale(-1)

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> list[list[int]]:
        return [[self.rows[i][j] for j in cols] for i in rows]


def _same_shape(a: IntMatrix, b: IntMatrix) -> None:
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def identity(n: int) -> IntMatrix:
    return IntMatrix([[int(i == j) for j in range(n)] for i in range(n)])


def all_ones(n: int) -> IntMatrix:
    return IntMatrix([[1] * n for _ in range(n)])


def add(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return a + b


def subtract(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return a - b


def multiply(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return a @ b


def scale(a: IntMatrix, c: int) -> IntMatrix:
    return a.scale(c)


def transpose(a: IntMatrix) -> IntMatrix:
    return a.transpose()


# ----------------------------------------------------------------------------
# determinants


def det_rows(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square list-of-rows integer matrix (may be 0x0)."""
    n = len(rows)
    if n == 0:
        return 1
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    return kernels.det(rows)


def det(M: IntMatrix) -> int:
    if not M.is_square:
        raise ValueError(f"determinant needs a square matrix, got {M.shape}")
    return kernels.det(M.rows)


def minor_det(M: IntMatrix, i: int, j: int) -> int:
    """Determinant with row ``i`` and column ``j`` deleted."""
    if not M.is_square:
        raise ValueError(f"minor needs a square matrix, got {M.shape}")
    n = M.shape[0]
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"({i}, {j}) outside a {n}x{n} matrix")
    rows = [[x for c, x in enumerate(r) if c != j] for k, r in enumerate(M.rows) if k != i]
    return det_rows(rows)


def sum_principal_minors(M: IntMatrix, k: int, cap: int = 14) -> int:
    """Sum of ``det(M[S, S])`` over all ``k``-subsets ``S``."""
    if not M.is_square:
        raise ValueError("principal minors need a square matrix")
    n = M.shape[0]
    if not 0 <= k <= n:
        raise ValueError(f"minor size {k} outside 0..{n}")
    if n > cap:
        raise ValueError(f"subset enumeration capped at n={cap}; use char_poly coefficients")
    return sum(det_rows(M.submatrix(S, S)) for S in combinations(range(n), k))


def frobenius_norm_sq(M: IntMatrix) -> int:
    return sum(x * x for r in M.rows for x in r)


def is_perfect_square(x: int) -> tuple[bool, int | None]:
    """``(True, isqrt(x))`` for perfect squares, ``(False, None)`` otherwise."""
    if x < 0:
        return False, None
    r = isqrt(x)
    return (True, r) if r * r == x else (False, None)


# ----------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients in ascending degree, no trailing zeros."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self.coeff(k) + other.coeff(k) for k in range(m))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def __pow__(self, e: int) -> "IntPolynomial":
        out = IntPolynomial((1,))
        for _ in range(e):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


def eval_poly(p: IntPolynomial, x) -> Fraction:
    return Fraction(p(Fraction(x)))


def char_poly(M: IntMatrix) -> IntPolynomial:
    """``det(xI - M)`` by exact evaluation at ``x = 0..n`` and interpolation."""
    if not M.is_square:
        raise ValueError(f"characteristic polynomial needs a square matrix, got {M.shape}")
    n = M.shape[0]
    values = []
    for x in range(n + 1):
        rows = [[(x if i == j else 0) - a for j, a in enumerate(r)] for i, r in enumerate(M.rows)]
        values.append(det_rows(rows))
    return interpolate(list(range(n + 1)), values)


def interpolate(xs: Sequence[int], ys: Sequence[int]) -> IntPolynomial:
    """Newton interpolation over the rationals; the result must be integral."""
    m = len(xs)
    coef = [Fraction(y) for y in ys]
    for level in range(1, m):
        for i in range(m - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    # Expand the Newton form into monomials.
    poly = [Fraction(0)] * m
    basis = [Fraction(1)]
    for i in range(m):
        for k, b in enumerate(basis):
            poly[k] += coef[i] * b
        if i < m - 1:
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, b in enumerate(basis):
                nxt[k + 1] += b
                nxt[k] -= xs[i] * b
            basis = nxt
    if any(c.denominator != 1 for c in poly):
        raise ArithmeticError("interpolated polynomial is not integral")
    return IntPolynomial(int(c) for c in poly)
