from fractions import Fraction

import pytest

from padic_tate.dual import DualElement
from padic_tate.errors import OutsideConvergenceDomain
from padic_tate.field import PadicElement
from padic_tate.prng import random_element, stream
from padic_tate.series import (
    dual_eval,
    factorial_valuation,
    identity_map,
    p_exp,
    p_log,
    square_map,
)

from oracles import exp_partial_sum, from_fraction, legendre_sum, log_partial_sum


class TestFactorialValuation:
    def test_zero(self):
        assert factorial_valuation(0, 5) == 0

    def test_25_frozen(self):
        # Legendre sum floor(25/5) + floor(25/25) = 6
        assert factorial_valuation(25, 5) == 6

    def test_single_factor(self):
        for p in (2, 3, 5, 7, 11):
            assert factorial_valuation(p, p) == 1

    def test_legendre_agreement(self):
        for p in (2, 3, 5, 7):
            for n in range(0, 300):
                assert factorial_valuation(n, p) == legendre_sum(n, p)


class TestExp:
    def test_exp_zero(self, Q5):
        assert p_exp(PadicElement.zero(Q5, 10)).is_indistinguishable(
            PadicElement.one(Q5, 10))

    def test_exp_5_frozen(self, Q5):
        # partial sum of 5^n/n! to n=24 reduced mod 5^10, frozen: 3474831
        got = p_exp(PadicElement.from_int(Q5, 5, 10))
        assert got.is_indistinguishable(PadicElement.from_int(Q5, 3474831, 10))
        assert from_fraction(Q5, exp_partial_sum(Fraction(5), 24), 10) \
            .is_indistinguishable(got)

    def test_exp_eisenstein_against_vector_oracle(self, E54):
        # exp(pi^5) with the series summed in Q[pi]/(pi^4 + 5) over Fractions
        x = PadicElement.uniformizer(E54, 40, power=5)
        got = p_exp(x)
        vec = [Fraction(0)] * 4
        fact = 1
        for n in range(0, 30):
            if n:
                fact *= n
            power = 5 * n
            coeff = Fraction((-5) ** (power // 4), fact)
            vec[power % 4] += coeff
        want = PadicElement.zero(E54, 40)
        for i, c in enumerate(vec):
            want = want + PadicElement.from_rational(E54, c, 44) * \
                PadicElement.uniformizer(E54, 44, power=1) ** i if i else \
                want + PadicElement.from_rational(E54, c, 44)
        assert got.is_indistinguishable(want)
        assert (got - 1).valuation().value == Fraction(5, 4)

    def test_domain_rejected(self, Q5, E54):
        with pytest.raises(OutsideConvergenceDomain):
            p_exp(PadicElement.one(Q5, 10))            # v = 0
        with pytest.raises(OutsideConvergenceDomain):
            p_exp(PadicElement.uniformizer(E54, 12))   # v = 1/4 boundary

    def test_image_valuation_exact(self, Q5, E54):
        for field, lo in ((Q5, 1), (E54, 2)):
            for i in range(40):
                rng = stream(3, "img", field.kind, i)
                x = random_element(rng, field, 24, lo, lo + 3)
                assert (p_exp(x) - 1).valuation().value == x.valuation().value


class TestLog:
    def test_log_one(self, Q5):
        got = p_log(PadicElement.one(Q5, 10))
        assert got.is_zero

    def test_log_exp_inverse(self, Q5):
        x = PadicElement.from_int(Q5, 5, 10)
        assert p_log(p_exp(x)).is_indistinguishable(x)

    def test_log_1_plus_25_frozen(self, Q5):
        # alternating partial sum to n=11 reduced mod 5^10, frozen unit 237176
        got = p_log(PadicElement.from_int(Q5, 26, 10))
        want = PadicElement.from_int(Q5, 237176 * 25, 10)
        assert got.is_indistinguishable(want)
        assert from_fraction(Q5, log_partial_sum(Fraction(25), 11), 10) \
            .is_indistinguishable(got)

    def test_domain_rejected(self, Q5):
        with pytest.raises(OutsideConvergenceDomain):
            p_log(PadicElement.from_int(Q5, 2, 10))    # v(y-1) = 0

    def test_bijection_both_ways(self, Q5, E54):
        for field, lo in ((Q5, 1), (E54, 2)):
            for i in range(30):
                rng = stream(5, "bij", field.kind, i)
                x = random_element(rng, field, 20, lo, lo + 2)
                assert p_log(p_exp(x)).is_indistinguishable(x)
                y = PadicElement.one(field, 20) + x
                assert p_exp(p_log(y)).is_indistinguishable(y)

    def test_homomorphism(self, Q5):
        for i in range(50):
            rng = stream(7, "hom", i)
            x = random_element(rng, Q5, 20, 1, 3)
            y = random_element(rng, Q5, 20, 1, 3)
            res = p_exp(x + y) - p_exp(x) * p_exp(y)
            assert res.valuation().at_least(Fraction(18))


class TestDual:
    def test_identity_seed(self, Q5):
        x = PadicElement.from_int(Q5, 7, 10)
        d = dual_eval(identity_map, x)
        assert d.value.is_indistinguishable(x)
        assert d.deriv.is_indistinguishable(PadicElement.one(Q5, 10))

    def test_square_derivative(self, Q5):
        x = PadicElement.from_int(Q5, 7, 10)
        d = dual_eval(square_map, x)
        assert d.deriv.is_indistinguishable(x * 2)

    def test_exp_derivative_is_exp(self, Q5):
        x = PadicElement.from_int(Q5, 5, 12)
        d = dual_eval(p_exp, x)
        assert d.deriv.is_indistinguishable(d.value)

    def test_division_rule(self, Q5):
        x = DualElement.seed(PadicElement.from_int(Q5, 7, 12))
        r = (x * x + 1) / x             # f = x + 1/x, f' = 1 - 1/x^2
        xi = PadicElement.from_int(Q5, 7, 12).invert()
        want = PadicElement.one(Q5, 12) - xi * xi
        assert r.deriv.is_indistinguishable(want)

    def test_against_symmetric_difference(self, Q5):
        # (exp(x+h) - exp(x-h)) / 2h = exp'(x) + h^2/6 exp'''(x) + ...
        x = PadicElement.from_int(Q5, 5, 24)
        deriv = dual_eval(p_exp, x).deriv
        for k in (4, 6, 8):
            h = PadicElement.uniformizer(Q5, 24, power=k)
            fin = (p_exp(x + h) - p_exp(x - h)) * (h * 2).invert()
            err = (fin - deriv).valuation()
            assert err.at_least(Fraction(min(2 * k, fin.abs_prec - 1)))

    def test_leibniz_matches_finite_difference(self, Q5):
        # product rule on a hand-built map, checked against a difference quotient
        def f(t):
            return t * t * t + t * 2

        x = PadicElement.from_int(Q5, 3, 20)
        d = dual_eval(f, x)
        want = x * x * 3 + 2
        assert d.deriv.is_indistinguishable(want)


class TestDualWithCurveEvaluator:
    def test_dual_eval_of_curve_coordinate(self, Q5):
        # a fixed-q coordinate evaluator is a valid formula handle
        from padic_tate.tate import curve_coefficients, tate_series_point, \
            tate_xy_with_derivative
        q = PadicElement.from_int(Q5, 25, 40)
        curve = curve_coefficients(q)
        u = PadicElement.from_int(Q5, 7, 40)

        def x_at_fixed_q(t):
            return tate_series_point(curve, t)[0]

        d = dual_eval(x_at_fixed_q, u)
        x, y, xp = tate_xy_with_derivative(curve, u)
        assert d.value.is_indistinguishable(x)
        assert d.deriv.is_indistinguishable(xp)
        # and the derivative satisfies the coordinate relation at u
        assert (u * d.deriv - x - y * 2).valuation().at_least(Fraction(30))


class TestUnramifiedExp:
    def test_exp_log_round_trip_unramified(self, U22):
        # v(x) > 1/(p-1) = 1 forces shift >= 2 in the unramified field
        for i in range(10):
            rng = stream(29, "unram", i)
            x = random_element(rng, U22, 20, 2, 4)
            y = p_exp(x)
            assert (y - 1).valuation().value == x.valuation().value
            assert p_log(y).is_indistinguishable(x)
