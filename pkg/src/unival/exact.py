"""Exact dense linear algebra over the rationals.

Scalars are ``fractions.Fraction`` throughout: arbitrary precision, always in
lowest terms with positive denominator.  Matrices here are tiny (nothing in
the package exceeds ~20x20), so plain rational Gauss-Jordan with full
normalization after each pivot is used everywhere.  Pivots are always the
first nonzero entry in column order, which keeps every reduction
deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotInSpan, NotSymmetric, SingularMatrix

Rational = Fraction


def rational_from_str(text: str) -> Fraction:
    """Parse "p/q" (or "p") into an exact rational."""
    return Fraction(text.strip())


def rational_to_str(x: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    return str(x)


def _exact(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating-point values are not allowed in exact arithmetic")
    return Fraction(value)


def _row_reduce(rows: list[list[Fraction]], pivot_cols: int) -> list[int]:
    """Gauss-Jordan in place over the first ``pivot_cols`` columns.

    Each pivot is normalized to 1 and its column cleared above and below.
    Entries beyond ``pivot_cols`` ride along in every row operation.
    Returns the pivot column indices in order.
    """
    pivots: list[int] = []
    target = 0
    for col in range(pivot_cols):
        hit = next((r for r in range(target, len(rows)) if rows[r][col] != 0), None)
        if hit is None:
            continue
        rows[target], rows[hit] = rows[hit], rows[target]
        pivot = rows[target][col]
        if pivot != 1:
            rows[target] = [x / pivot for x in rows[target]]
        lead = rows[target]
        for r in range(len(rows)):
            if r != target and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], lead)]
        pivots.append(col)
        target += 1
        if target == len(rows):
            break
    return pivots


class ExactMatrix:
    """Immutable dense matrix with Fraction entries."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Iterable[Iterable]):
        data = tuple(tuple(_exact(x) for x in row) for row in entries)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("matrix rows must all have the same length")
        self.rows = len(data)
        self.cols = width
        self._data = data

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]]) -> "ExactMatrix":
        return cls([[Fraction(x) for x in row] for row in data])

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self._data]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self._data[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._data == other._data

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._data)
        return f"ExactMatrix[{body}]"

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._require_same_shape(other)
        return ExactMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._require_same_shape(other)
        return ExactMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)]
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-x for x in row] for row in self._data])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = list(zip(*other._data))
        return ExactMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self._data]
        )

    def scale(self, c) -> "ExactMatrix":
        c = _exact(c)
        return ExactMatrix([[c * x for x in row] for row in self._data])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self._data)))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._data[i][j] == self._data[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "ExactMatrix":
        return ExactMatrix([row[c0:c1] for row in self._data[r0:r1]])

    def det(self) -> Fraction:
        if not self.is_square():
            raise ValueError("determinant requires a square matrix")
        a = self.to_rows()
        n = self.rows
        result = Fraction(1)
        for col in range(n):
            hit = next((r for r in range(col, n) if a[r][col] != 0), None)
            if hit is None:
                return Fraction(0)
            if hit != col:
                a[col], a[hit] = a[hit], a[col]
                result = -result
            pivot = a[col][col]
            result *= pivot
            for r in range(col + 1, n):
                if a[r][col] != 0:
                    factor = a[r][col] / pivot
                    a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
        return result

    def inverse(self) -> "ExactMatrix":
        """Exact inverse by Gauss-Jordan elimination on [self | I]."""
        if not self.is_square():
            raise ValueError("only square matrices can be inverted")
        n = self.rows
        aug = [list(self._data[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        pivots = _row_reduce(aug, n)
        if len(pivots) != n:
            raise SingularMatrix(f"{n}x{n} matrix has rank {len(pivots)}")
        return ExactMatrix([row[n:] for row in aug])

    def _require_same_shape(self, other: "ExactMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("matrix shapes differ")


def solve_in_span(generators: Sequence[Sequence], target: Sequence) -> tuple[Fraction, ...]:
    """Express ``target`` as an exact linear combination of ``generators``.

    Returns coefficients lam with sum(lam[i] * generators[i]) == target;
    directions not pinned down by the system get coefficient 0.  Raises
    NotInSpan when no combination exists.
    """
    gens = [[_exact(x) for x in g] for g in generators]
    tgt = [_exact(x) for x in target]
    length = len(tgt)
    if any(len(g) != length for g in gens):
        raise ValueError("generators and target must share one vector length")
    m = len(gens)
    rows = [[gens[j][i] for j in range(m)] + [tgt[i]] for i in range(length)]
    pivots = _row_reduce(rows, m)
    for row in rows[len(pivots):]:
        if row[m] != 0:
            raise NotInSpan("target is independent of the generators")
    lam = [Fraction(0)] * m
    for r, col in enumerate(pivots):
        lam[col] = rows[r][m]
    return tuple(lam)


def is_positive_definite(m: ExactMatrix) -> bool:
    """Sylvester test: every leading principal minor is strictly positive."""
    if not m.is_square():
        raise NotSymmetric("matrix is not square")
    if not m.is_symmetric():
        raise NotSymmetric("matrix is not symmetric")
    for k in range(1, m.rows + 1):
        if m.block(0, k, 0, k).det() <= 0:
            return False
    return True
