"""Exact arithmetic in the golden field and its square-root extension.

``GoldenScalar`` represents a + b*phi with rational a, b, where phi is the
golden ratio (phi**2 = phi + 1).  ``GoldenExt`` adjoins sqrt(phi) and holds
u + v*sqrt(phi) with GoldenScalar u, v.  All operations are exact; floats
appear only through the explicit ``to_float`` conversions.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering
from typing import Union

PHI_FLOAT: float = (1.0 + math.sqrt(5.0)) / 2.0
SQRT_PHI_FLOAT: float = math.sqrt(PHI_FLOAT)

ScalarLike = Union[int, Fraction, "GoldenScalar"]
ExtLike = Union[int, Fraction, "GoldenScalar", "GoldenExt"]


@total_ordering
class GoldenScalar:
    """a + b*phi with a, b rational, kept in lowest terms by Fraction."""

    __slots__ = ("a", "b")

    def __init__(self, a: ScalarLike = 0, b: int | Fraction = 0) -> None:
        if isinstance(a, GoldenScalar):
            if b:
                raise ValueError("cannot pass b alongside a GoldenScalar")
            object.__setattr__(self, "a", a.a)
            object.__setattr__(self, "b", a.b)
            return
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("GoldenScalar is immutable")

    @staticmethod
    def _coerce(other: object) -> "GoldenScalar | None":
        if isinstance(other, GoldenScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return GoldenScalar(other)
        return None

    def __add__(self, other: object) -> "GoldenScalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GoldenScalar(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: object) -> "GoldenScalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GoldenScalar(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: object) -> "GoldenScalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "GoldenScalar":
        return GoldenScalar(-self.a, -self.b)

    def __mul__(self, other: object) -> "GoldenScalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a1 + b1 phi)(a2 + b2 phi), phi^2 = phi + 1
        return GoldenScalar(
            self.a * o.a + self.b * o.b,
            self.a * o.b + self.b * o.a + self.b * o.b,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GoldenScalar":
        """Galois conjugate: phi -> 1 - phi."""
        return GoldenScalar(self.a + self.b, -self.b)

    def field_norm(self) -> Fraction:
        """Product with the conjugate; rational, zero only at zero."""
        return self.a * self.a + self.a * self.b - self.b * self.b

    def inverse(self) -> "GoldenScalar":
        n = self.field_norm()
        if n == 0:
            raise ZeroDivisionError("division by zero GoldenScalar")
        c = self.conjugate()
        return GoldenScalar(c.a / n, c.b / n)

    def __truediv__(self, other: object) -> "GoldenScalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "GoldenScalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "GoldenScalar":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = GoldenScalar(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __lt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def sign(self) -> int:
        """Exact sign of the real value a + b*(1+sqrt5)/2.

        Writing 2x = s + t*sqrt5 with s = 2a + b, t = b, the sign follows
        from the signs of s and t, comparing s^2 against 5 t^2 when they
        disagree.  No floating point is involved.
        """
        s = 2 * self.a + self.b
        t = self.b
        if t == 0:
            return 0 if s == 0 else (1 if s > 0 else -1)
        if s == 0:
            return 1 if t > 0 else -1
        if s > 0 and t > 0:
            return 1
        if s < 0 and t < 0:
            return -1
        d = s * s - 5 * t * t
        if d == 0:
            # impossible for rational s, t not both zero
            raise ArithmeticError("sqrt5 comparison degenerated")
        if s > 0:
            return 1 if d > 0 else -1
        return -1 if d > 0 else 1

    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def sqrt5_parts(self) -> tuple[Fraction, Fraction]:
        """(p, q) with value p + q*sqrt5."""
        return (self.a + self.b / 2, self.b / 2)

    def to_float(self) -> float:
        return float(self.a) + float(self.b) * PHI_FLOAT

    def __str__(self) -> str:
        return _render_terms([(self.a, ""), (self.b, "phi")])

    def __repr__(self) -> str:
        return f"GoldenScalar({self.a!r}, {self.b!r})"


@total_ordering
class GoldenExt:
    """u + v*sqrt(phi) with GoldenScalar u, v; (sqrt phi)^2 = phi."""

    __slots__ = ("u", "v")

    def __init__(self, u: ExtLike = 0, v: ScalarLike = 0) -> None:
        if isinstance(u, GoldenExt):
            if v:
                raise ValueError("cannot pass v alongside a GoldenExt")
            object.__setattr__(self, "u", u.u)
            object.__setattr__(self, "v", u.v)
            return
        object.__setattr__(self, "u", GoldenScalar(u))
        object.__setattr__(self, "v", GoldenScalar(v))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("GoldenExt is immutable")

    @staticmethod
    def _coerce(other: object) -> "GoldenExt | None":
        if isinstance(other, GoldenExt):
            return other
        if isinstance(other, (int, Fraction, GoldenScalar)):
            return GoldenExt(other)
        return None

    def __add__(self, other: object) -> "GoldenExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GoldenExt(self.u + o.u, self.v + o.v)

    __radd__ = __add__

    def __sub__(self, other: object) -> "GoldenExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GoldenExt(self.u - o.u, self.v - o.v)

    def __rsub__(self, other: object) -> "GoldenExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "GoldenExt":
        return GoldenExt(-self.u, -self.v)

    def __mul__(self, other: object) -> "GoldenExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        phi = GoldenScalar(0, 1)
        return GoldenExt(
            self.u * o.u + self.v * o.v * phi,
            self.u * o.v + self.v * o.u,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GoldenExt":
        """sqrt(phi) -> -sqrt(phi)."""
        return GoldenExt(self.u, -self.v)

    def ext_norm(self) -> GoldenScalar:
        """u^2 - v^2*phi; lies in the golden field, zero only at zero."""
        phi = GoldenScalar(0, 1)
        return self.u * self.u - self.v * self.v * phi

    def inverse(self) -> "GoldenExt":
        n = self.ext_norm()
        if not n:
            raise ZeroDivisionError("division by zero GoldenExt")
        ninv = n.inverse()
        return GoldenExt(self.u * ninv, -self.v * ninv)

    def __truediv__(self, other: object) -> "GoldenExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "GoldenExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "GoldenExt":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = GoldenExt(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.u == o.u and self.v == o.v

    def __lt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        return hash((self.u, self.v))

    def __bool__(self) -> bool:
        return bool(self.u) or bool(self.v)

    def sign(self) -> int:
        """Exact sign of u + v*sqrt(phi); sqrt(phi) is positive real."""
        su = self.u.sign()
        sv = self.v.sign()
        if sv == 0:
            return su
        if su == 0:
            return sv
        if su == sv:
            return su
        # opposite signs: compare u^2 against v^2*phi
        phi = GoldenScalar(0, 1)
        d = (self.u * self.u - self.v * self.v * phi).sign()
        if d == 0:
            # phi is not a square in the golden field
            raise ArithmeticError("sqrt(phi) comparison degenerated")
        return su if d > 0 else sv

    def is_scalar(self) -> bool:
        return not self.v

    def scalar_part(self) -> GoldenScalar:
        if self.v:
            raise ValueError(f"{self} has a sqrt(phi) component")
        return self.u

    def to_float(self) -> float:
        return self.u.to_float() + self.v.to_float() * SQRT_PHI_FLOAT

    def __str__(self) -> str:
        return _render_terms(
            [
                (self.u.a, ""),
                (self.u.b, "phi"),
                (self.v.a, "sqrt(phi)"),
                (self.v.b, "phi*sqrt(phi)"),
            ]
        )

    def __repr__(self) -> str:
        return f"GoldenExt({self.u!r}, {self.v!r})"


ZERO = GoldenScalar(0)
ONE = GoldenScalar(1)
PHI = GoldenScalar(0, 1)
SQRT5 = GoldenScalar(-1, 2)  # 2*phi - 1
HALF = GoldenScalar(Fraction(1, 2))
SQRT_PHI = GoldenExt(0, 1)


def _render_terms(terms: list[tuple[Fraction, str]]) -> str:
    parts: list[str] = []
    for coeff, unit in terms:
        if coeff == 0:
            continue
        if unit and coeff == 1:
            body = unit
        elif unit and coeff == -1:
            body = f"-{unit}"
        elif unit:
            body = f"{coeff}*{unit}"
        else:
            body = str(coeff)
        if not parts:
            parts.append(body)
        elif body.startswith("-"):
            parts.append(f" - {body[1:]}")
        else:
            parts.append(f" + {body}")
    return "".join(parts) if parts else "0"


def sqrt5_form(x: GoldenScalar) -> str:
    """Render in the {1, sqrt5} basis, e.g. '7' or '3*sqrt(5)'."""
    p, q = x.sqrt5_parts()
    return _render_terms([(p, ""), (q, "sqrt(5)")])


_TOKEN_RE = re.compile(r"\s*(sqrt\(phi\)|phi|\d+(?:/\d+)?|[+\-*])")


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ValueError(f"cannot parse scalar near {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


def parse_scalar(text: str) -> GoldenExt:
    """Parse a linear combination of 1, phi, sqrt(phi), phi*sqrt(phi).

    Terms are joined with + or -, each a '*'-separated product of rational
    literals (p or p/q), 'phi', and 'sqrt(phi)'.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty scalar literal")
    total = GoldenExt(0)
    i = 0
    while i < len(tokens):
        negate = False
        while i < len(tokens) and tokens[i] in "+-":
            if tokens[i] == "-":
                negate = not negate
            i += 1
        if i >= len(tokens):
            raise ValueError(f"dangling sign in {text!r}")
        term = GoldenExt(1)
        expect_factor = True
        while i < len(tokens):
            tok = tokens[i]
            if tok in "+-":
                break
            if tok == "*":
                if expect_factor:
                    raise ValueError(f"misplaced '*' in {text!r}")
                expect_factor = True
                i += 1
                continue
            if not expect_factor:
                raise ValueError(f"missing operator in {text!r}")
            if tok == "phi":
                term = term * PHI
            elif tok == "sqrt(phi)":
                term = term * SQRT_PHI
            else:
                term = term * Fraction(tok)
            expect_factor = False
            i += 1
        if expect_factor:
            raise ValueError(f"dangling operator in {text!r}")
        total = total + (-term if negate else term)
    return total
