"""Exact verification battery for the golden matrix family.

Each verifier returns IdentityReport values; a report either holds or
carries a witness naming the first mismatching entry.  The Schlafli
probe is informational: it documents a residual instead of asserting.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .constants import (
    bracket_minus,
    bracket_plus,
    build_cmU,
    build_hadamard,
    build_J,
    build_U,
    build_U_inv,
)
from .field import PHI, SQRT5, GoldenExt, GoldenScalar, sqrt5_form
from .matrix import CharPoly, ExactMatrix


@dataclass(frozen=True)
class Witness:
    row: int
    col: int
    expected: str
    actual: str

    def to_dict(self) -> dict[str, object]:
        return {"row": self.row, "col": self.col, "expected": self.expected, "actual": self.actual}


@dataclass(frozen=True)
class IdentityReport:
    name: str
    holds: bool
    witness: Witness | None = None
    informational: bool = False
    details: dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> dict[str, object]:
        return {
            "name": self.name,
            "holds": self.holds,
            "informational": self.informational,
            "witness": self.witness.to_dict() if self.witness else None,
            "details": dict(self.details),
        }


def _compare(name: str, actual: ExactMatrix, expected: ExactMatrix,
             details: dict[str, object] | None = None) -> IdentityReport:
    for i in range(actual.n):
        for j in range(actual.n):
            if actual[i][j] != expected[i][j]:
                w = Witness(i, j, str(expected[i][j]), str(actual[i][j]))
                return IdentityReport(name, False, w, details=details or {})
    return IdentityReport(name, True, details=details or {})


def verify_golden_cartan(U: ExactMatrix | None = None) -> IdentityReport:
    """cmU - cmU^-1 equals the exchange matrix J, with cmU = U*U."""
    cmU = (U * U) if U is not None else build_cmU()
    return _compare("golden_cartan_difference", cmU - cmU.inverse(), build_J())


def verify_identity_sum(U: ExactMatrix | None = None) -> IdentityReport:
    """(cmU + cmU^-1) / (2*phi - 1) equals the identity."""
    cmU = (U * U) if U is not None else build_cmU()
    lhs = (cmU + cmU.inverse()) / SQRT5
    return _compare("golden_cartan_sum", lhs, ExactMatrix.identity(cmU.n))


@dataclass(frozen=True)
class PowerPattern:
    n: int
    sum_scalar: GoldenScalar
    diff_scalar: GoldenScalar
    reports: tuple[IdentityReport, ...]


def verify_power_pattern(n: int) -> PowerPattern:
    """cmU^n + cmU^-n = (phi^n + phi^-n) I and the J-difference analogue.

    Even n puts the integer on the sum side, odd n on the difference
    side; the other scalar is an integer multiple of sqrt5.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    cmU = build_cmU()
    cm_pow = cmU ** n
    cm_neg = cmU ** (-n)
    sum_scalar = (PHI ** n + PHI ** (-n))
    diff_scalar = (PHI ** n - PHI ** (-n))
    ident = ExactMatrix.identity(8)
    sum_rep = _compare(
        f"power_{n}_sum", cm_pow + cm_neg, ident * sum_scalar,
        details={"scalar": sqrt5_form(sum_scalar)},
    )
    diff_rep = _compare(
        f"power_{n}_diff", cm_pow - cm_neg, build_J() * diff_scalar,
        details={"scalar": sqrt5_form(diff_scalar)},
    )
    sp, sq = sum_scalar.sqrt5_parts()
    dp, dq = diff_scalar.sqrt5_parts()
    if n % 2 == 0:
        parity_ok = sq == 0 and sp.denominator == 1 and dp == 0 and dq.denominator == 1
    else:
        parity_ok = sp == 0 and sq.denominator == 1 and dp.denominator == 1 and dq == 0
    parity_rep = IdentityReport(
        f"power_{n}_parity", parity_ok,
        details={
            "n_parity": "even" if n % 2 == 0 else "odd",
            "sum": sqrt5_form(sum_scalar),
            "diff": sqrt5_form(diff_scalar),
        },
    )
    return PowerPattern(n, sum_scalar, diff_scalar, (sum_rep, diff_rep, parity_rep))


def verify_row_reversed_swap() -> tuple[IdentityReport, ...]:
    """Row-reversed golden Cartan matrix swaps the sum and difference laws.

    R = J*cmU satisfies R - R^-1 = I and R + R^-1 = sqrt5*J.  Reversing
    rows or columns gives the same R because cmU is a polynomial in J.
    """
    cmU = build_cmU()
    J = build_J()
    left = J * cmU
    right = cmU * J
    orders_agree = left == right
    R = left
    Rinv = R.inverse()
    diff_rep = _compare(
        "row_reversed_difference", R - Rinv, ExactMatrix.identity(8),
        details={"row_and_column_reversal_agree": orders_agree},
    )
    sum_rep = _compare("row_reversed_sum", R + Rinv, J * SQRT5)
    return (diff_rep, sum_rep)


def _phi_half_power(n: int) -> GoldenExt:
    """phi^(n/2) for odd n, as phi^((n-1)/2) * sqrt(phi)."""
    return GoldenExt(0, PHI ** ((n - 1) // 2))


def verify_odd_power_forms(n: int) -> tuple[IdentityReport, ...]:
    """U^n +- U^-n = -B(+-) * (phi^n +- 1) / phi^(n/2) for odd n."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be odd and positive")
    U = build_U()
    Uinv = build_U_inv()
    denom = _phi_half_power(n)
    s_plus = (GoldenExt(PHI ** n) + 1) / denom
    s_minus = (GoldenExt(PHI ** n) - 1) / denom
    plus_rep = _compare(
        f"odd_power_{n}_sum", U ** n + Uinv ** n, -(bracket_plus() * s_plus),
        details={"scale": str(s_plus)},
    )
    minus_rep = _compare(
        f"odd_power_{n}_diff", U ** n - Uinv ** n, -(bracket_minus() * s_minus),
        details={"scale": str(s_minus)},
    )
    return (plus_rep, minus_rep)


def verify_bracket_properties() -> tuple[IdentityReport, ...]:
    """Both bracket matrices are traceless orthogonal involutions and
    Bminus is the row reversal J*Bplus, equal to the column reversal."""
    Bp = bracket_plus()
    Bm = bracket_minus()
    J = build_J()
    ident = ExactMatrix.identity(8)
    reports = []
    for name, B in (("bracket_plus", Bp), ("bracket_minus", Bm)):
        ok = B.is_traceless() and B.is_orthogonal() and B * B == ident
        reports.append(IdentityReport(
            f"{name}_traceless_orthogonal", ok,
            details={"trace": str(B.trace()), "involution": B * B == ident},
        ))
    exchange_ok = Bm == J * Bp and Bm == Bp * J
    reports.append(IdentityReport("bracket_exchange", exchange_ok))
    return tuple(reports)


def _quartic_even_poly(c6: GoldenScalar, c4: GoldenScalar) -> CharPoly:
    # x^8 + c6 x^6 + c4 x^4 + c6 x^2 + 1 (palindromic, even powers only)
    zero = GoldenExt(0)
    return CharPoly((
        GoldenExt(1), zero, GoldenExt(c6), zero, GoldenExt(c4),
        zero, GoldenExt(c6), zero, GoldenExt(1),
    ))


def expected_char_poly_U() -> CharPoly:
    """x^8 - 2*sqrt5*x^6 + 7*x^4 - 2*sqrt5*x^2 + 1."""
    return _quartic_even_poly(SQRT5 * -2, GoldenScalar(7))


def expected_char_poly_involution() -> CharPoly:
    """(x^2 - 1)^4 = x^8 - 4*x^6 + 6*x^4 - 4*x^2 + 1."""
    return _quartic_even_poly(GoldenScalar(-4), GoldenScalar(6))


def verify_char_polys() -> tuple[IdentityReport, ...]:
    """Characteristic polynomials of U and the normalized Hadamard matrix."""
    cp_u = build_U().char_poly()
    u_ok = cp_u == expected_char_poly_U() and cp_u.is_palindromic()
    u_rep = IdentityReport(
        "char_poly_U", u_ok,
        details={"coeffs": [str(c) for c in cp_u.coeffs], "palindromic": cp_u.is_palindromic()},
    )
    cp_h = build_hadamard(3).char_poly().rescaled(8)
    h_ok = cp_h == expected_char_poly_involution() and cp_h.is_palindromic()
    h_rep = IdentityReport(
        "char_poly_hadamard_normalized", h_ok,
        details={"coeffs": [str(c) for c in cp_h.coeffs], "palindromic": cp_h.is_palindromic()},
    )
    return (u_rep, h_rep)


def schlafli_probe() -> IdentityReport:
    """Probe whether (1/2)I - (3/2)J reproduces -U^-1.  It does not;
    the report records the residual instead of asserting."""
    probe = ExactMatrix.identity(8) * GoldenScalar(Fraction(1, 2)) \
        - build_J() * GoldenScalar(Fraction(3, 2))
    target = -build_U_inv()
    diff = probe - target
    witness = None
    mismatches = 0
    max_abs = 0.0
    for i in range(8):
        for j in range(8):
            if diff[i][j]:
                mismatches += 1
                max_abs = max(max_abs, abs(diff[i][j].to_float()))
                if witness is None:
                    witness = Witness(i, j, str(target[i][j]), str(probe[i][j]))
    return IdentityReport(
        "schlafli_probe", mismatches == 0, witness, informational=True,
        details={"mismatched_entries": mismatches, "max_abs_residual": max_abs},
    )


def verify_product_identities() -> tuple[IdentityReport, ...]:
    """U*U = cmU and U*U^-1 = I, with U^-1 both closed-form and eliminated."""
    U = build_U()
    Uinv = build_U_inv()
    reports = (
        _compare("U_squared_is_cmU", U * U, build_cmU()),
        _compare("U_times_Uinv", U * Uinv, ExactMatrix.identity(8)),
        _compare("Uinv_matches_elimination", Uinv, U.inverse()),
    )
    return reports


def run_all() -> list[IdentityReport]:
    """Every verifier in a fixed order; informational probes included."""
    reports: list[IdentityReport] = []
    reports.extend(verify_product_identities())
    reports.append(verify_golden_cartan())
    reports.append(verify_identity_sum())
    reports.extend(verify_row_reversed_swap())
    for n in range(1, 13):
        reports.extend(verify_power_pattern(n).reports)
    for n in (1, 3, 5, 7, 9):
        reports.extend(verify_odd_power_forms(n))
    reports.extend(verify_bracket_properties())
    reports.extend(verify_char_polys())
    reports.append(schlafli_probe())
    return reports


VERIFIER_GROUPS = {
    "products": verify_product_identities,
    "golden-cartan": lambda: [verify_golden_cartan(), verify_identity_sum()],
    "row-reversed": verify_row_reversed_swap,
    "powers": lambda: [r for n in range(1, 13) for r in verify_power_pattern(n).reports],
    "odd-powers": lambda: [r for n in (1, 3, 5, 7, 9) for r in verify_odd_power_forms(n)],
    "brackets": verify_bracket_properties,
    "char-polys": verify_char_polys,
    "schlafli-probe": lambda: [schlafli_probe()],
}


def run_group(name: str) -> list[IdentityReport]:
    if name not in VERIFIER_GROUPS:
        raise ValueError(f"unknown verifier group {name!r}; choose from {sorted(VERIFIER_GROUPS)}")
    result = VERIFIER_GROUPS[name]()
    return list(result) if not isinstance(result, IdentityReport) else [result]
