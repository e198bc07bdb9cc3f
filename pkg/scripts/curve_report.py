#!/usr/bin/env python3
"""Print a worked report for one Tate curve: coefficients, j, sample points,
and the measured residuals of the differential identities.

Usage: python scripts/curve_report.py [p] [q-literal] [prec]
"""

import sys

from padic_tate.field import make_field
from padic_tate.parsing import parse_element
from padic_tate.prng import random_unit, stream
from padic_tate.tate import (
    curve_add,
    curve_coefficients,
    curve_discriminant,
    curve_equation_residual,
    j_invariant,
    phi,
    point_difference_valuation,
    relation_residual,
    verify_ode,
)


def main() -> int:
    p = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    q_lit = sys.argv[2] if len(sys.argv) > 2 else f"{p}^2"
    prec = int(sys.argv[3]) if len(sys.argv) > 3 else 40

    field = make_field(p)
    q = parse_element(q_lit, field, prec)
    curve = curve_coefficients(q)
    print(f"curve over Q_{p} with q = {q_lit}, precision {prec}")
    print(f"  a4 = {curve.a4}")
    print(f"  a6 = {curve.a6}")
    print(f"  discriminant valuation: {curve_discriminant(curve).valuation()}")
    j = j_invariant(curve)
    print(f"  v(j) = {j.valuation()}   (q has v = {q.valuation()})")
    print(f"  v(j - 1/q - 744) = {(j - q.invert() - 744).valuation()}")

    rng = stream(0, "report")
    u1, u2 = random_unit(rng, field, prec), random_unit(rng, field, prec)
    P1, P2 = phi(curve, u1), phi(curve, u2)
    print(f"  point residual at u1: {curve_equation_residual(curve, P1)}")
    agreement = point_difference_valuation(phi(curve, u1 * u2),
                                           curve_add(curve, P1, P2))
    print(f"  group-law agreement: {agreement}")
    print(f"  ode residual at u1: {verify_ode(curve, u1)}")
    print(f"  u X' - X - 2Y residual: {relation_residual(curve, u1)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
