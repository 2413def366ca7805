"""Dense exact matrices over the golden field extension.

Entries are ``GoldenExt`` values; every operation here is exact.  The
characteristic polynomial uses the Faddeev-LeVerrier recursion, which only
ever divides by integers and therefore stays inside the field.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .field import GoldenExt, GoldenScalar, parse_scalar

EntryLike = object  # int | Fraction | GoldenScalar | GoldenExt


class SingularMatrixError(ValueError):
    """Raised when elimination finds no nonzero pivot."""

    def __init__(self, column: int) -> None:
        super().__init__(f"singular matrix: no nonzero pivot in column {column}")
        self.column = column


def _entry(value: EntryLike) -> GoldenExt:
    if isinstance(value, GoldenExt):
        return value
    if isinstance(value, (int, Fraction, GoldenScalar)):
        return GoldenExt(value)
    raise TypeError(f"cannot use {type(value).__name__} as a matrix entry")


class ExactMatrix:
    """Immutable square matrix over GoldenExt."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Iterable[Iterable[EntryLike]]) -> None:
        converted = tuple(tuple(_entry(e) for e in row) for row in rows)
        n = len(converted)
        if n == 0:
            raise ValueError("empty matrix")
        for row in converted:
            if len(row) != n:
                raise ValueError(f"matrix must be square, got row of length {len(row)} in {n}x{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", converted)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "ExactMatrix":
        return cls([[0] * n for _ in range(n)])

    def __getitem__(self, i: int) -> tuple[GoldenExt, ...]:
        return self.rows[i]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check_dim(other)
        return ExactMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check_dim(other)
        return ExactMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-e for e in row] for row in self.rows])

    def _check_dim(self, other: "ExactMatrix") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n}x{self.n} vs {other.n}x{other.n}")

    def __mul__(self, other: object) -> "ExactMatrix":
        if isinstance(other, ExactMatrix):
            self._check_dim(other)
            cols = tuple(zip(*other.rows))
            return ExactMatrix(
                [
                    [_dot(row, col) for col in cols]
                    for row in self.rows
                ]
            )
        try:
            s = _entry(other)
        except TypeError:
            return NotImplemented
        return ExactMatrix([[e * s for e in row] for row in self.rows])

    def __rmul__(self, other: object) -> "ExactMatrix":
        try:
            s = _entry(other)
        except TypeError:
            return NotImplemented
        return ExactMatrix([[s * e for e in row] for row in self.rows])

    def __truediv__(self, other: object) -> "ExactMatrix":
        try:
            s = _entry(other)
        except TypeError:
            return NotImplemented
        sinv = s.inverse()
        return ExactMatrix([[e * sinv for e in row] for row in self.rows])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.rows)))

    def trace(self) -> GoldenExt:
        t = GoldenExt(0)
        for i in range(self.n):
            t = t + self.rows[i][i]
        return t

    def inverse(self) -> "ExactMatrix":
        """Gauss-Jordan with the first nonzero pivot in each column."""
        n = self.n
        work = [list(row) + [GoldenExt(1 if i == j else 0) for j in range(n)]
                for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot_row = None
            for r in range(col, n):
                if work[r][col]:
                    pivot_row = r
                    break
            if pivot_row is None:
                raise SingularMatrixError(col)
            work[col], work[pivot_row] = work[pivot_row], work[col]
            pinv = work[col][col].inverse()
            work[col] = [e * pinv for e in work[col]]
            for r in range(n):
                if r == col or not work[r][col]:
                    continue
                factor = work[r][col]
                work[r] = [e - factor * p for e, p in zip(work[r], work[col])]
        return ExactMatrix([row[n:] for row in work])

    def __pow__(self, k: int) -> "ExactMatrix":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ExactMatrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def det(self) -> GoldenExt:
        """Exact elimination with row swaps tracked by sign."""
        n = self.n
        work = [list(row) for row in self.rows]
        sign = 1
        result = GoldenExt(1)
        for col in range(n):
            pivot_row = None
            for r in range(col, n):
                if work[r][col]:
                    pivot_row = r
                    break
            if pivot_row is None:
                return GoldenExt(0)
            if pivot_row != col:
                work[col], work[pivot_row] = work[pivot_row], work[col]
                sign = -sign
            pivot = work[col][col]
            result = result * pivot
            pinv = pivot.inverse()
            for r in range(col + 1, n):
                if not work[r][col]:
                    continue
                factor = work[r][col] * pinv
                work[r] = [e - factor * p for e, p in zip(work[r], work[col])]
        return result if sign > 0 else -result

    def char_poly(self) -> "CharPoly":
        """Faddeev-LeVerrier recursion; divides only by integers."""
        n = self.n
        coeffs: list[GoldenExt] = [GoldenExt(1)]
        m = self
        c = -(m.trace())
        coeffs.append(c)
        for k in range(2, n + 1):
            m = self * (m + ExactMatrix.identity(n) * c)
            c = -(m.trace()) / Fraction(k)
            coeffs.append(c)
        return CharPoly(tuple(coeffs))

    def is_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def is_orthogonal(self) -> bool:
        return self.transpose() * self == ExactMatrix.identity(self.n)

    def is_traceless(self) -> bool:
        return not self.trace()

    def predicates(self) -> dict[str, object]:
        return {
            "trace": self.trace(),
            "det": self.det(),
            "symmetric": self.is_symmetric(),
            "orthogonal": self.is_orthogonal(),
            "traceless": self.is_traceless(),
        }

    def to_float_rows(self) -> list[list[float]]:
        return [[e.to_float() for e in row] for row in self.rows]

    def to_literal(self) -> str:
        """Render as newline-separated rows of ';'-separated entries."""
        return "\n".join("; ".join(str(e) for e in row) for row in self.rows)

    @classmethod
    def from_literal(cls, text: str) -> "ExactMatrix":
        rows = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            rows.append([parse_scalar(cell) for cell in line.split(";")])
        if not rows:
            raise ValueError("no matrix rows found")
        return cls(rows)

    @classmethod
    def from_file(cls, path: str) -> "ExactMatrix":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_literal(fh.read())

    def pretty(self) -> str:
        cells = [[str(e) for e in row] for row in self.rows]
        widths = [max(len(cells[i][j]) for i in range(self.n)) for j in range(self.n)]
        return "\n".join(
            "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in cells
        )

    def __repr__(self) -> str:
        return f"ExactMatrix({self.n}x{self.n})"


def _dot(row: Sequence[GoldenExt], col: Sequence[GoldenExt]) -> GoldenExt:
    acc = GoldenExt(0)
    for a, b in zip(row, col):
        if a and b:
            acc = acc + a * b
    return acc


class CharPoly:
    """Monic characteristic polynomial, coefficients degree-descending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: tuple[GoldenExt, ...]) -> None:
        if not coeffs or coeffs[0] != GoldenExt(1):
            raise ValueError("characteristic polynomial must be monic")
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("CharPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CharPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def is_palindromic(self) -> bool:
        n = self.degree
        return all(self.coeffs[i] == self.coeffs[n - i] for i in range(n + 1))

    def scalar_coeffs(self) -> tuple[GoldenScalar, ...]:
        """Coefficients narrowed to the golden field; raises on residue."""
        return tuple(c.scalar_part() for c in self.coeffs)

    def rescaled(self, denom_sq: int | Fraction) -> "CharPoly":
        """Characteristic polynomial of A/s given this one for A, s^2 = denom_sq.

        Coefficient k picks up the factor s^-k; only even k stay rational,
        so every odd coefficient must vanish.
        """
        denom_sq = Fraction(denom_sq)
        if denom_sq <= 0:
            raise ValueError("denom_sq must be positive")
        out: list[GoldenExt] = []
        for k, c in enumerate(self.coeffs):
            if k % 2 == 0:
                out.append(c / denom_sq ** (k // 2))
            elif not c:
                out.append(c)
            else:
                raise ValueError(f"odd coefficient {k} is nonzero; rescale is irrational")
        return CharPoly(tuple(out))

    def __str__(self) -> str:
        n = self.degree
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            power = n - k
            if power == 0:
                term = f"({c})"
            elif power == 1:
                term = "x" if c == GoldenExt(1) else f"({c})*x"
            else:
                term = f"x^{power}" if c == GoldenExt(1) else f"({c})*x^{power}"
            parts.append(term)
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"CharPoly(degree={self.degree})"
