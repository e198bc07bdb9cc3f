"""Ball combinatorics: balls lambda-next to a finite set and the same-ball test.

For a finite set C and lambda >= 0 in the value group, the ball lambda-next
to C containing x is the open ball around x of radius max_c v(x-c) + lambda;
these balls partition the complement of C, and x, y share one exactly when
v(x-y) > lambda + v(x-c) for every c in C.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import ImpreciseDistance, MemberOfC
from .field import PadicElement, _vp

Rational = Union[int, Fraction]


@dataclass(frozen=True, eq=False)
class Ball:
    """Open ball {x : v(x - center) > lambda_radius}; centers are not canonical."""

    center: PadicElement
    lambda_radius: Fraction

    def contains(self, x: PadicElement) -> bool:
        diff = (x - self.center).valuation()
        if diff.exceeds(self.lambda_radius):
            return True
        if diff.is_exact:
            return False
        raise ImpreciseDistance(
            f"membership undecidable: v(x-center) >= {diff.value} vs radius {self.lambda_radius}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ball):
            return NotImplemented
        if self.lambda_radius != other.lambda_radius:
            return False
        return (self.center - other.center).valuation().exceeds(self.lambda_radius)

    def __str__(self) -> str:
        return f"B_>{self.lambda_radius}({self.center})"


def _exact_distance(x: PadicElement, c: PadicElement) -> Fraction:
    d = (x - c).valuation()
    if not d.is_exact:
        raise MemberOfC(f"point is indistinguishable from a member of C (v >= {d.value})")
    return d.value


def _check_lambda(lam: Rational, e: int) -> Fraction:
    lam = Fraction(lam)
    if lam < 0:
        raise ValueError("lambda must be >= 0")
    if (lam * e).denominator != 1:
        raise ValueError(f"lambda {lam} is not in the value group (1/{e})Z")
    return lam


def ball_next(C: Sequence[PadicElement], lam: Rational, x: PadicElement) -> Ball:
    """The ball lambda-next to C containing x: radius max_c v(x-c) + lambda."""
    if not C:
        raise ValueError("C must be a non-empty finite set")
    lam = _check_lambda(lam, x.field.e)
    radius = max(_exact_distance(x, c) for c in C) + lam
    return Ball(center=x, lambda_radius=radius)


def same_ball(C: Sequence[PadicElement], lam: Rational,
              x: PadicElement, y: PadicElement) -> bool:
    """True iff v(x-y) > lambda + v(x-c) for every c in C."""
    if not C:
        raise ValueError("C must be a non-empty finite set")
    lam = _check_lambda(lam, x.field.e)
    dxy = (x - y).valuation()
    for c in C:
        bound = lam + _exact_distance(x, c)
        if dxy.exceeds(bound):
            continue
        if dxy.is_exact:
            return False
        raise ImpreciseDistance(
            f"v(x-y) >= {dxy.value} cannot be compared with {bound}")
    return True


def integer_scale(m: int, p: int) -> Fraction:
    """v(m) for a nonzero integer m; 'm-next' means v(m)-next."""
    if m == 0:
        raise ValueError("m must be nonzero")
    return Fraction(_vp(m, p))
