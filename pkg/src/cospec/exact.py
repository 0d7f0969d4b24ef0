"""Exact rational matrices and polynomials.

Everything here is int/Fraction arithmetic; floats are rejected at
construction time so no rounding can creep in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .graphs import PreconditionError

Rational = Union[int, Fraction]


def _as_exact(x: object, what: str = "entry") -> Rational:
    # bool is an int subclass; reject it along with floats.
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise ValueError(f"{what} must be int or Fraction, got {type(x).__name__}")
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


@dataclass(frozen=True)
class ExactMatrix:
    """Square matrix over the rationals."""

    rows: tuple[tuple[Rational, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        for row in self.rows:
            if len(row) != n:
                raise ValueError(f"matrix is not square: {n} rows, a row of length {len(row)}")
            for x in row:
                _as_exact(x)

    @staticmethod
    def from_rows(rows: Iterable[Iterable[Rational]]) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(_as_exact(x) for x in row) for row in rows))

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def diagonal(values: Sequence[Rational]) -> "ExactMatrix":
        n = len(values)
        return ExactMatrix(
            tuple(tuple(_as_exact(values[i]) if i == j else 0 for j in range(n)) for i in range(n))
        )

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, key: tuple[int, int]) -> Rational:
        i, j = key
        return self.rows[i][j]

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        return ExactMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        return ExactMatrix(
            tuple(
                tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        cols = tuple(zip(*other.rows))
        return ExactMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows
            )
        )

    def scale(self, c: Rational) -> "ExactMatrix":
        c = _as_exact(c, "scalar")
        return ExactMatrix(tuple(tuple(_as_exact(c * x) for x in row) for row in self.rows))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.rows)))

    def trace(self) -> Rational:
        return sum(self.rows[i][i] for i in range(self.n))

    def is_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.n) for j in range(i + 1, self.n)
        )

    def permuted(self, order: Sequence[int]) -> "ExactMatrix":
        """Reindex so new entry (a, b) is old entry (order[a], order[b])."""
        if sorted(order) != list(range(self.n)):
            raise ValueError(f"order must be a permutation of 0..{self.n - 1}")
        return ExactMatrix(tuple(tuple(self.rows[i][j] for j in order) for i in order))

    def inverse_diagonal(self) -> "ExactMatrix":
        """Inverse, for diagonal matrices only."""
        for i in range(self.n):
            for j in range(self.n):
                if i != j and self.rows[i][j] != 0:
                    raise ValueError("inverse_diagonal requires a diagonal matrix")
            if self.rows[i][i] == 0:
                raise ValueError("diagonal matrix is singular")
        return ExactMatrix.diagonal(tuple(Fraction(1, 1) / self.rows[i][i] for i in range(self.n)))


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial, coefficients ascending; () is the zero polynomial."""

    coeffs: tuple[Rational, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(_as_exact(c, "coefficient") for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Rational:
        if self.is_zero:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Rational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def evaluate(self, x: Rational) -> Rational:
        x = _as_exact(x, "evaluation point")
        acc: Rational = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _as_exact(acc)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            tuple(self.coefficient(k) + other.coefficient(k) for k in range(size))
        )

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            tuple(self.coefficient(k) - other.coefficient(k) for k in range(size))
        )

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero or other.is_zero:
            return UniPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(tuple(out))

    def scale(self, c: Rational) -> "UniPoly":
        c = _as_exact(c, "scalar")
        return UniPoly(tuple(c * x for x in self.coeffs))

    def monic(self) -> "UniPoly":
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        lead = self.leading
        if lead == 1:
            return self
        return UniPoly(tuple(Fraction(c, 1) / lead for c in self.coeffs))

    def negate_variable(self) -> "UniPoly":
        """p(x) -> p(-x)."""
        return UniPoly(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)))

    def compose_linear(self, a: Rational, b: Rational) -> "UniPoly":
        """p(x) -> p(a*x + b)."""
        lin = UniPoly((_as_exact(b, "offset"), _as_exact(a, "slope")))
        acc = UniPoly(())
        for c in reversed(self.coeffs):
            acc = acc * lin + UniPoly((c,))
        return acc


@dataclass(frozen=True)
class BiPoly:
    """Bivariate polynomial; grid[i][j] is the coefficient of lam^i r^j."""

    grid: tuple[tuple[Rational, ...], ...]

    def __post_init__(self) -> None:
        rows = [list(_as_exact(c, "coefficient") for c in row) for row in self.grid]
        width = max((len(r) for r in rows), default=0)
        for r in rows:
            r.extend([0] * (width - len(r)))
        while width and all(r[width - 1] == 0 for r in rows):
            width -= 1
            for r in rows:
                r.pop()
        while rows and all(c == 0 for c in rows[-1]):
            rows.pop()
        object.__setattr__(self, "grid", tuple(tuple(r) for r in rows))

    @property
    def is_zero(self) -> bool:
        return not self.grid

    def coefficient(self, i: int, j: int) -> Rational:
        if 0 <= i < len(self.grid) and 0 <= j < len(self.grid[i]):
            return self.grid[i][j]
        return 0

    def evaluate(self, lam: Rational, r: Rational) -> Rational:
        lam = _as_exact(lam, "evaluation point")
        r = _as_exact(r, "evaluation point")
        total: Rational = 0
        for i, row in enumerate(self.grid):
            inner: Rational = 0
            for c in reversed(row):
                inner = inner * r + c
            total += inner * lam**i
        return _as_exact(total)

    def __add__(self, other: "BiPoly") -> "BiPoly":
        height = max(len(self.grid), len(other.grid))
        width = max(
            max((len(r) for r in self.grid), default=0),
            max((len(r) for r in other.grid), default=0),
        )
        return BiPoly(
            tuple(
                tuple(self.coefficient(i, j) + other.coefficient(i, j) for j in range(width))
                for i in range(height)
            )
        )

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        height = max(len(self.grid), len(other.grid))
        width = max(
            max((len(r) for r in self.grid), default=0),
            max((len(r) for r in other.grid), default=0),
        )
        return BiPoly(
            tuple(
                tuple(self.coefficient(i, j) - other.coefficient(i, j) for j in range(width))
                for i in range(height)
            )
        )

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        if self.is_zero or other.is_zero:
            return BiPoly(())
        height = len(self.grid) + len(other.grid) - 1
        width = len(self.grid[0]) + len(other.grid[0]) - 1
        out = [[0] * width for _ in range(height)]
        for i, row in enumerate(self.grid):
            for j, a in enumerate(row):
                if a == 0:
                    continue
                for k, orow in enumerate(other.grid):
                    for l, b in enumerate(orow):
                        if b:
                            out[i + k][j + l] += a * b
        return BiPoly(tuple(tuple(r) for r in out))

    def __neg__(self) -> "BiPoly":
        return BiPoly(tuple(tuple(-c for c in row) for row in self.grid))


def bipoly_eval(p: BiPoly, lam: Rational, r: Rational) -> Rational:
    return p.evaluate(lam, r)


def uni_slice(p: BiPoly, *, lam: Rational | None = None, r: Rational | None = None) -> UniPoly:
    """Fix one variable of a bivariate polynomial, leaving a polynomial in the other."""
    if (lam is None) == (r is None):
        raise ValueError("exactly one of lam and r must be given")
    if r is not None:
        r = _as_exact(r, "slice value")
        coeffs = []
        for row in p.grid:
            acc: Rational = 0
            for c in reversed(row):
                acc = acc * r + c
            coeffs.append(acc)
        return UniPoly(tuple(coeffs))
    lam = _as_exact(lam, "slice value")
    width = max((len(row) for row in p.grid), default=0)
    coeffs = []
    for j in range(width):
        acc = 0
        for i, row in enumerate(p.grid):
            if j < len(row) and row[j]:
                acc += row[j] * lam**i
        coeffs.append(acc)
    return UniPoly(tuple(coeffs))


def charpoly(mat: ExactMatrix) -> UniPoly:
    """Monic characteristic polynomial det(lam*I - M) by the
    Faddeev-LeVerrier recurrence.

    Integer matrices stay in integer arithmetic throughout: every trace in
    the recurrence is divisible by its step index, which is asserted.
    """
    n = mat.n
    if n == 0:
        return UniPoly((1,))
    rows = [list(row) for row in mat.rows]
    coeffs: list[Rational] = [0] * (n + 1)
    coeffs[n] = 1
    b = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        # a = M @ B_{k-1}
        a = [
            [sum(rows[i][x] * b[x][j] for x in range(n)) for j in range(n)]
            for i in range(n)
        ]
        t = sum(a[i][i] for i in range(n))
        if isinstance(t, int):
            q, rem = divmod(t, k)
            assert rem == 0, "integer Faddeev-LeVerrier trace not divisible by step"
            c: Rational = -q
        else:
            c = -(t / k)
        coeffs[n - k] = c
        b = a
        for i in range(n):
            b[i][i] += c
    return UniPoly(tuple(coeffs))


def _ring_det(rows: list[list], one):
    """Determinant by cofactor expansion over any exact ring element type."""
    n = len(rows)
    if n == 0:
        return one
    if n == 1:
        return rows[0][0]
    total = None
    for j, entry in enumerate(rows[0]):
        if entry.is_zero:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = entry * _ring_det(minor, one)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return one - one
    return total


def charpoly_oracle(mat: ExactMatrix) -> UniPoly:
    """Characteristic polynomial by symbolic cofactor expansion.

    Exponential-time reference implementation, guarded to n <= 7.
    """
    n = mat.n
    if n > 7:
        raise PreconditionError(f"charpoly_oracle is limited to 7x7 matrices, got {n}x{n}")
    rows = [
        [
            UniPoly((-mat[i, j], 1)) if i == j else UniPoly((-mat[i, j],))
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _ring_det(rows, UniPoly((1,)))


def anti_transpose(mat: ExactMatrix) -> ExactMatrix:
    """Reflect over the anti-diagonal: entry (i, j) becomes entry (n-1-j, n-1-i)."""
    n = mat.n
    return ExactMatrix(
        tuple(tuple(mat.rows[n - 1 - j][n - 1 - i] for j in range(n)) for i in range(n))
    )


def exchange_matrix(n: int) -> ExactMatrix:
    """Ones on the anti-diagonal."""
    return ExactMatrix(
        tuple(tuple(1 if i + j == n - 1 else 0 for j in range(n)) for i in range(n))
    )


def swap_similarity(m: int, ambient: int) -> ExactMatrix:
    """The block-diagonal involution diag((1/m)J - exchange, I).

    The leading block is 2m x 2m; the trailing identity covers the rest of
    an ambient space of at least 2m vertices.
    """
    if m <= 0:
        raise ValueError(f"block size must be positive, got {m}")
    if ambient < 2 * m:
        raise ValueError(f"ambient dimension {ambient} is smaller than 2m = {2 * m}")
    k = 2 * m
    rows = []
    for i in range(ambient):
        row: list[Rational] = []
        for j in range(ambient):
            if i < k and j < k:
                row.append(Fraction(1, m) - (1 if i + j == k - 1 else 0))
            else:
                row.append(1 if i == j else 0)
        rows.append(tuple(row))
    return ExactMatrix.from_rows(rows)


@dataclass(frozen=True)
class BlockConditionReport:
    """Structure of a matrix split after its leading 2m x 2m block."""

    n_constant_rowsum: bool
    q_column_pattern: bool
    rowsum_value: Rational | None


def check_block_conditions(mat: ExactMatrix, m: int) -> BlockConditionReport:
    """Check the leading-block row sums and the [p..p, r..r] column shape of
    the off-block columns."""
    if not mat.is_symmetric():
        raise ValueError("block conditions are defined for symmetric matrices only")
    if m <= 0:
        raise ValueError(f"block size must be positive, got {m}")
    k = 2 * m
    if k > mat.n:
        raise ValueError(f"leading block of size {k} does not fit in a {mat.n}x{mat.n} matrix")
    sums = [sum(mat.rows[i][:k]) for i in range(k)]
    constant = len(set(sums)) == 1
    pattern = True
    for j in range(k, mat.n):
        column = [mat.rows[i][j] for i in range(k)]
        if len(set(column[:m])) > 1 or len(set(column[m:])) > 1:
            pattern = False
            break
    return BlockConditionReport(
        n_constant_rowsum=constant,
        q_column_pattern=pattern,
        rowsum_value=sums[0] if constant else None,
    )


def conjugate(s: ExactMatrix, mat: ExactMatrix) -> ExactMatrix:
    """S @ M @ S for an involutory S."""
    if s.n != mat.n:
        raise ValueError(f"dimension mismatch: {s.n} vs {mat.n}")
    if s @ s != ExactMatrix.identity(s.n):
        raise ValueError("conjugation matrix is not an involution")
    return s @ mat @ s
