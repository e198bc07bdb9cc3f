"""The Tate curve y^2 + xy = x^3 + a4(q) x + a6(q) and its uniformization.

The modular coefficients come from s_k(q) = sum n^k q^n / (1 - q^n); the
coefficient a6 is summed termwise with the exact integer (5n^3 + 7n^5)/12 so
that p = 2 and p = 3 lose no precision.  Points are produced by the map
u -> (X(q,u), Y(q,u)) evaluated through the one-sided expansions

    X = u/(1-u)^2 + sum_d ( sum_{m|d} m (u^m + u^-m - 2) ) q^d
    Y = u^2/(1-u)^3 + sum_d ( sum_{m|d} ((m-1)m/2 u^m - m(m+1)/2 u^-m + m) ) q^d

whose d-th summand has valuation at least d (v(q) - v(u)); evaluation always
reduces u to the fundamental domain 0 <= v(u) < v(q) first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .dual import DualElement
from .errors import (
    DomainError,
    ImpreciseValuation,
    InsufficientPrecision,
    NonpositiveValuation,
    OffCurveInput,
    OnKernel,
    PrecisionCollapse,
    ZeroElement,
)
from .field import PadicElement, ValuationResult

Evaluable = Union[PadicElement, DualElement]

DEFAULT_SLACK = 10


@dataclass(frozen=True)
class TateCurve:
    q: PadicElement
    a4: PadicElement
    a6: PadicElement
    prec: int


@dataclass(frozen=True)
class TatePoint:
    kind: str                    # "affine" | "identity"
    x: Optional[PadicElement] = None
    y: Optional[PadicElement] = None

    @staticmethod
    def identity() -> "TatePoint":
        return TatePoint("identity")

    @staticmethod
    def affine(x: PadicElement, y: PadicElement) -> "TatePoint":
        return TatePoint("affine", x, y)

    @property
    def is_identity(self) -> bool:
        return self.kind == "identity"

    @property
    def prec(self) -> Optional[int]:
        if self.is_identity:
            return None
        return min(self.x.abs_prec, self.y.abs_prec)

    def __str__(self) -> str:
        if self.is_identity:
            return "identity"
        return f"({self.x}, {self.y})"


def _require_positive_valuation(q: PadicElement) -> int:
    if q.is_zero:
        raise NonpositiveValuation("q is an imprecise zero")
    if q.shift <= 0:
        raise NonpositiveValuation(f"v(q) = {q.valuation()} must be positive")
    return q.shift


def s_k(q: PadicElement, k: int) -> PadicElement:
    """sum_{n>=1} n^k q^n / (1 - q^n), truncated once n v(q) clears the target."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if q.is_zero:
        # v(q) >= abs_prec > 0, so every term sits below the precision floor
        return PadicElement.zero(q.field, q.abs_prec)
    sq = _require_positive_valuation(q)
    target = q.abs_prec
    terms = -(-target // sq)
    one = PadicElement.one(q.field, target + sq)
    acc = PadicElement.zero(q.field, target)
    qn = one
    for n in range(1, terms + 1):
        qn = qn * q
        acc = acc + qn * (n ** k) / (one - qn)
    return acc.truncate(target)


def a6_coefficient(n: int) -> int:
    """(5n^3 + 7n^5)/12, an exact integer for every n."""
    num = 5 * n ** 3 + 7 * n ** 5
    if num % 12:
        raise ArithmeticError(f"(5n^3+7n^5)/12 not integral at n={n}")
    return num // 12


def curve_coefficients(q: PadicElement) -> TateCurve:
    """a4 = -5 s_3(q); a6 summed termwise with integer coefficients."""
    sq = _require_positive_valuation(q)
    target = q.abs_prec
    a4 = s_k(q, 3) * (-5)
    one = PadicElement.one(q.field, target + sq)
    acc = PadicElement.zero(q.field, target)
    qn = one
    for n in range(1, -(-target // sq) + 1):
        qn = qn * q
        acc = acc + qn * (-a6_coefficient(n)) / (one - qn)
    return TateCurve(q=q, a4=a4.truncate(target), a6=acc.truncate(target), prec=target)


def reduce_to_fundamental(q: PadicElement, u: PadicElement) -> tuple[PadicElement, int]:
    """u * q^-n with n = floor(v(u)/v(q)), so 0 <= v(u q^-n) < v(q)."""
    sq = _require_positive_valuation(q)
    if u.is_zero:
        raise ImpreciseValuation("u has no exact valuation")
    n = u.shift // sq
    if n == 0:
        return u, 0
    u_red = u * q ** (-n)
    assert 0 <= u_red.shift < sq
    return u_red, n


def _divisors(d: int) -> list[int]:
    out = [m for m in range(1, d + 1) if d % m == 0]
    return out


def _value_part(x: Evaluable) -> PadicElement:
    return x.value if isinstance(x, DualElement) else x


def tate_series_point(curve: TateCurve, u: Evaluable,
                      slack: int = DEFAULT_SLACK) -> tuple[Evaluable, Evaluable]:
    """(X(q,u), Y(q,u)) for u already reduced to the fundamental domain."""
    q = curve.q
    sq = q.shift
    uval = _value_part(u)
    if uval.is_zero:
        raise ImpreciseValuation("u has no exact valuation")
    su = uval.shift
    if not 0 <= su < sq:
        raise DomainError("u must be reduced to the fundamental domain first")
    field = q.field
    target = curve.prec
    one_minus_u = -(u - 1)
    omu_val = _value_part(one_minus_u)
    if omu_val.is_zero:
        raise OnKernel("u is indistinguishable from 1 at this precision")
    w = omu_val.shift
    if 3 * w > target - slack:
        raise InsufficientPrecision(
            f"principal part at v(1-u) = {omu_val.valuation()} exhausts the budget")
    inv_omu = one_minus_u.invert()
    x_acc = u * inv_omu * inv_omu
    y_acc = u * u * inv_omu * inv_omu * inv_omu
    dmax = -(-target // (sq - su))
    u_inv = u.invert()
    upow = [None, u]
    unegpow = [None, u_inv]
    for m in range(2, dmax + 1):
        upow.append(upow[-1] * u)
        unegpow.append(unegpow[-1] * u_inv)
    qd = PadicElement.one(field, target + sq)
    for d in range(1, dmax + 1):
        qd = qd * q
        x_inner = None
        y_inner = None
        for m in _divisors(d):
            xt = (upow[m] + unegpow[m] - 2) * m
            yt = upow[m] * Fraction((m - 1) * m, 2) \
                - unegpow[m] * Fraction(m * (m + 1), 2) + m
            x_inner = xt if x_inner is None else x_inner + xt
            y_inner = yt if y_inner is None else y_inner + yt
        x_acc = x_acc + x_inner * qd
        y_acc = y_acc + y_inner * qd
    return x_acc, y_acc


def phi(curve: TateCurve, u: PadicElement, slack: int = DEFAULT_SLACK) -> TatePoint:
    """The uniformization map; q^Z lands on the identity."""
    if u.is_zero:
        raise ZeroElement("u must have a known nonzero digit or exact valuation")
    u_red, _ = reduce_to_fundamental(curve.q, u)
    if (u_red - 1).is_zero:
        return TatePoint.identity()
    x, y = tate_series_point(curve, u_red, slack=slack)
    return TatePoint.affine(x, y)


def curve_equation_residual(curve: TateCurve, point: TatePoint) -> ValuationResult:
    """Valuation of y^2 + xy - x^3 - a4 x - a6 at an affine point."""
    if point.is_identity:
        raise ValueError("identity point has no affine residual")
    x, y = point.x, point.y
    res = y * y + x * y - x * x * x - curve.a4 * x - curve.a6
    return res.valuation()


def _assert_on_curve(curve: TateCurve, point: TatePoint, slack: int) -> None:
    if point.is_identity:
        return
    res = curve_equation_residual(curve, point)
    threshold = Fraction(max(0, point.prec - slack), curve.q.field.e)
    if res.is_exact and res.value < threshold:
        raise OffCurveInput(f"curve equation residual has valuation {res}")


def curve_neg(curve: TateCurve, point: TatePoint) -> TatePoint:
    if point.is_identity:
        return point
    return TatePoint.affine(point.x, -point.y - point.x)


def curve_add(curve: TateCurve, P: TatePoint, Q: TatePoint,
              slack: int = DEFAULT_SLACK, check: bool = True) -> TatePoint:
    """Chord-tangent law for y^2 + xy = x^3 + a4 x + a6 (a1 = 1, a2 = a3 = 0)."""
    if P.is_identity:
        return Q
    if Q.is_identity:
        return P
    if check:
        _assert_on_curve(curve, P, slack)
        _assert_on_curve(curve, Q, slack)
    x1, y1 = P.x, P.y
    x2, y2 = Q.x, Q.y
    dx = x2 - x1
    if not dx.is_zero:
        lam = (y2 - y1) / dx
    else:
        if (y2 + y1 + x1).is_zero:
            return TatePoint.identity()
        if not (y2 - y1).is_zero:
            raise PrecisionCollapse(
                "x-coordinates agree to precision but y-coordinates conflict")
        den = y1 + y1 + x1
        num = x1 * x1 * 3 + curve.a4 - y1
        if den.is_zero:
            raise PrecisionCollapse(
                "doubling denominator 2y + x is indistinguishable from zero")
        lam = num / den
    x3 = lam * lam + lam - x1 - x2
    y3 = lam * (x1 - x3) - y1 - x3
    return TatePoint.affine(x3, y3)


def point_difference_valuation(P: TatePoint, Q: TatePoint) -> ValuationResult:
    """Coordinatewise agreement of two affine points, as a valuation bound."""
    if P.is_identity and Q.is_identity:
        # equal by kind; report an effectively unbounded agreement
        return ValuationResult("at_least", Fraction(10 ** 9))
    if P.is_identity or Q.is_identity:
        raise ValueError("cannot compare an affine point with the identity")
    vx = (P.x - Q.x).valuation()
    vy = (P.y - Q.y).valuation()
    lo = min(vx.value, vy.value)
    exact = (vx.is_exact and vx.value == lo) or (vy.is_exact and vy.value == lo)
    return ValuationResult("exact" if exact else "at_least", lo)


def j_invariant(curve: TateCurve) -> PadicElement:
    """j = c4^3 / Delta with b2 = 1, b4 = 2 a4, b6 = 4 a6, b8 = a6 - a4^2."""
    a4, a6 = curve.a4, curve.a6
    b4 = a4 * 2
    b6 = a6 * 4
    b8 = a6 - a4 * a4
    c4 = -(a4 * 48 - 1)
    delta = -b8 - (b4 * b4 * b4) * 8 - (b6 * b6) * 27 + b4 * b6 * 9
    if delta.is_zero:
        raise PrecisionCollapse("discriminant is indistinguishable from zero")
    return (c4 ** 3) / delta


def curve_discriminant(curve: TateCurve) -> PadicElement:
    a4, a6 = curve.a4, curve.a6
    b4 = a4 * 2
    b6 = a6 * 4
    b8 = a6 - a4 * a4
    return -b8 - (b4 * b4 * b4) * 8 - (b6 * b6) * 27 + b4 * b6 * 9


def tate_xy_with_derivative(curve: TateCurve, u: PadicElement,
                            slack: int = DEFAULT_SLACK):
    """(X, Y, X') at u via dual-number evaluation of the series."""
    xd, yd = tate_series_point(curve, DualElement.seed(u), slack=slack)
    return xd.value, yd.value, xd.deriv


def relation_residual(curve: TateCurve, u: PadicElement,
                      slack: int = DEFAULT_SLACK) -> ValuationResult:
    """Valuation of u X' - X - 2Y."""
    x, y, xp = tate_xy_with_derivative(curve, u, slack=slack)
    return (u * xp - x - y * 2).valuation()


def verify_ode(curve: TateCurve, u: PadicElement,
               slack: int = DEFAULT_SLACK) -> ValuationResult:
    """Valuation of (u X')^2 - 4X^3 - X^2 - 4 a4 X - 4 a6 at u."""
    x, _, xp = tate_xy_with_derivative(curve, u, slack=slack)
    uxp = u * xp
    res = uxp * uxp - (x ** 3) * 4 - x * x - curve.a4 * x * 4 - curve.a6 * 4
    return res.valuation()
