import random
from decimal import Decimal, localcontext
from fractions import Fraction

import pytest

from zetaeven.euler_bernoulli import euler_polynomial, euler_polynomial_eval
from zetaeven.numeric_core import HighPrecisionReal
from zetaeven.reports import VerificationReport
from zetaeven.series_verifier import (
    PhiEvaluation,
    abel_limit_check,
    direct_zeta_partial,
    eta_partial,
    identity_check_expansion,
    phi_at_one,
    phi_series,
    phi_taylor_coeff,
)
from zetaeven.zeta_recurrence import zeta_even_decimal

F = Fraction


def abs_error(evaluation, exact):
    """|value - exact| as a Decimal, computed without quantizing the exact side."""
    with localcontext() as ctx:
        ctx.prec = 90
        exact_dec = Decimal(exact.numerator) / Decimal(exact.denominator)
        return abs(evaluation.value.value - exact_dec)


class TestPhiEvaluationType:
    def test_validates_domain(self):
        bound = HighPrecisionReal(Decimal(0), 10)
        with pytest.raises(ValueError):
            PhiEvaluation(0, F(1, 2), F(1), 1, bound)
        with pytest.raises(ValueError):
            PhiEvaluation(0, F(2), F(1), 0, bound)
        with pytest.raises(ValueError):
            PhiEvaluation(0, F(2), F(1), 1, HighPrecisionReal(Decimal(-1), 10))


class TestPhiSeries:
    def test_closed_form_at_three(self):
        evaluation = phi_series(0, F(3), 30)
        assert abs_error(evaluation, F(1, 2)) <= evaluation.error_bound.value

    def test_closed_form_random_points(self):
        # phi_0(u) = 2/(u+1); twenty seeded-random rational u > 1
        rng = random.Random(8161971)
        for _ in range(20):
            u = 1 + F(rng.randint(1, 99), rng.randint(1, 99))
            evaluation = phi_series(0, u, 25)
            assert abs_error(evaluation, F(2, u + 1)) <= evaluation.error_bound.value

    def test_matches_taylor_coefficients(self):
        for u in (F(3, 2), F(2), F(3)):
            for m in range(0, 21):
                evaluation = phi_series(m, u, 40)
                exact = phi_taylor_coeff(m, u, m)
                assert abs_error(evaluation, exact) <= evaluation.error_bound.value

    def test_negative_index_approaches_zeta_two(self):
        target = Decimal(zeta_even_decimal(1, 25))
        residuals = []
        for exponent in (1, 2, 3):
            u = 1 + F(1, 10**exponent)
            evaluation = phi_series(-2, u, 15)
            residuals.append(abs(target - evaluation.value.value))
        assert residuals[0] > residuals[1] > residuals[2]
        assert residuals[2] < Decimal("0.002")

    def test_alternating_harmonic_case(self):
        # phi_{-1}(3/2) = 2 ln(5/3) = 1.0216512475319814...
        evaluation = phi_series(-1, F(3, 2), 20)
        assert str(evaluation.value.rounded()).startswith("1.02165124753198")

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            phi_series(0, F(1), 20)
        with pytest.raises(ValueError):
            phi_series(2, F(1, 2), 20)
        with pytest.raises(ValueError):
            phi_series(0, F(2), 9)

    def test_reports_terms_used(self):
        evaluation = phi_series(0, F(10), 20)
        assert evaluation.terms_used >= 1
        # farther from 1 converges faster
        assert evaluation.terms_used < phi_series(0, F(11, 10), 20).terms_used


class TestPhiTaylor:
    def test_small_closed_forms(self):
        # phi_0(u) = 2/(u+1), phi_1(u) = 2u/(u+1)^2, phi_2(u) = 2u(u-1)/(u+1)^3
        assert phi_taylor_coeff(0, F(3)) == F(1, 2)
        assert phi_taylor_coeff(1, F(2)) == F(4, 9)
        assert phi_taylor_coeff(2, F(2)) == F(4, 27)
        assert phi_taylor_coeff(2, F(1)) == 0

    def test_at_one_equals_euler_polynomial_values(self):
        for m in range(0, 13):
            expected = euler_polynomial_eval(euler_polynomial(m), F(1))
            assert phi_taylor_coeff(m, F(1), m) == expected

    def test_order_must_cover_m(self):
        assert phi_taylor_coeff(3, F(2), 10) == phi_taylor_coeff(3, F(2))

    def test_rejects_negative_m_and_u_below_one(self):
        with pytest.raises(ValueError):
            phi_taylor_coeff(-1, F(2))
        with pytest.raises(ValueError):
            phi_taylor_coeff(1, F(1, 2))


class TestPhiAtOne:
    def test_matches_polynomial_evaluation(self):
        for m in range(0, 21):
            evaluation = phi_at_one(m)
            assert evaluation.value == euler_polynomial_eval(
                euler_polynomial(m), F(1)
            )
            assert evaluation.error_bound.value == 0

    def test_known_values(self):
        assert phi_at_one(0).value == 1
        assert phi_at_one(2).value == 0
        assert phi_at_one(3).value == F(-1, 4)


class TestEtaPartial:
    def test_single_term(self):
        value, bound = eta_partial(2, 1)
        assert value == HighPrecisionReal.from_int(-1)
        assert bound.value == Decimal("0.25")

    def test_converges_to_minus_half_zeta_two(self):
        value, bound = eta_partial(2, 2000)
        target = -Decimal(zeta_even_decimal(1, 30)) / 2
        assert abs(value.value - target) <= bound.value + Decimal("1e-25")

    def test_m_four_against_zeta_four(self):
        value, bound = eta_partial(4, 10**4)
        target = -Decimal(zeta_even_decimal(2, 30)) * 7 / 8
        assert abs(value.value - target) <= bound.value + Decimal("1e-20")

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            eta_partial(1, 10)
        with pytest.raises(ValueError):
            eta_partial(2, 0)


class TestDirectZetaPartial:
    def test_single_term(self):
        value, tail_low, tail_high = direct_zeta_partial(1, 1)
        assert value == HighPrecisionReal.from_int(1)
        assert tail_low == 0
        assert tail_high.value == 1

    def test_brackets_contain_decimal_values(self):
        for k in range(1, 11):
            target = HighPrecisionReal(Decimal(zeta_even_decimal(k, 50)), 50)
            for n in (100, 1000, 10000):
                value, _, tail_high = direct_zeta_partial(k, n)
                assert value <= target <= value + tail_high

    def test_tail_formula(self):
        _, _, tail_high = direct_zeta_partial(2, 100)
        # 100^(1-4)/(4-1) = 1/3e6
        assert tail_high.value == Decimal(
            "3.3333333333333333333333333333333333333333333333334E-7"
        )


class TestAbelLimit:
    DELTAS = [F(1, 10), F(1, 100), F(1, 1000)]

    def test_monotone_convergence(self):
        report = abel_limit_check(1, self.DELTAS, 20)
        assert report.passed
        assert report.identity_name == "zeta_even_abel_limit"
        assert report.parameters["monotone_from_below"] is True
        residuals = [Decimal(r) for r in report.parameters["residuals"].split(",")]
        assert residuals[0] > residuals[1] > residuals[2] > 0

    def test_reproducible(self):
        first = abel_limit_check(2, self.DELTAS, 15)
        second = abel_limit_check(2, self.DELTAS, 15)
        assert first.to_line() == second.to_line()

    def test_validation(self):
        with pytest.raises(ValueError):
            abel_limit_check(1, [], 20)
        with pytest.raises(ValueError):
            abel_limit_check(1, [F(1, 10), F(1, 10)], 20)
        with pytest.raises(ValueError):
            abel_limit_check(1, [F(0)], 20)
        with pytest.raises(ValueError):
            abel_limit_check(0, self.DELTAS, 20)
        with pytest.raises(ValueError):
            abel_limit_check(1, self.DELTAS, 9)


class TestExpansionIdentity:
    def test_passes_with_derived_tolerance(self):
        report = identity_check_expansion(1, F(3, 2), 12, 30)
        assert report.passed
        assert report.identity_name == "cosine_series_rearrangement"
        assert report.parameters["jmax"] == 12
        assert report.parameters["precision"] == 30
        assert int(report.parameters["lhs_terms"]) > 0
        assert Decimal(report.parameters["first_omitted"]) > 0

    def test_deeper_truncation_shrinks_residual(self):
        shallow = identity_check_expansion(1, F(3, 2), 6, 30)
        deep = identity_check_expansion(1, F(3, 2), 20, 30)
        assert abs(deep.residual.value) < abs(shallow.residual.value)

    def test_under_truncation_fails_near_first_omitted_term(self):
        report = identity_check_expansion(1, F(3, 2), 2, 50, tolerance="1e-30")
        assert not report.passed
        ratio = abs(report.residual.value) / Decimal(report.parameters["first_omitted"])
        assert Decimal("0.1") <= ratio <= Decimal("10")

    def test_explicit_rational_tolerance(self):
        report = identity_check_expansion(1, F(3, 2), 12, 30, tolerance=F(1, 10))
        assert report.passed
        assert report.tolerance.value == Decimal("0.1")

    def test_reproducible(self):
        first = identity_check_expansion(2, F(2), 10, 25)
        second = identity_check_expansion(2, F(2), 10, 25)
        assert first.to_line() == second.to_line()

    def test_validation(self):
        with pytest.raises(ValueError):
            identity_check_expansion(0, F(3, 2), 10, 30)
        with pytest.raises(ValueError):
            identity_check_expansion(1, F(1), 10, 30)
        with pytest.raises(ValueError):
            identity_check_expansion(3, F(3, 2), 2, 30)
        with pytest.raises(ValueError):
            identity_check_expansion(1, F(3, 2), 10, 9)


class TestReports:
    def test_passed_is_computed_not_supplied(self):
        report = VerificationReport(
            identity_name="example",
            parameters={"k": 1},
            lhs=F(1, 2),
            rhs=F(1, 2),
            residual=HighPrecisionReal(Decimal(2), 10),
            tolerance=HighPrecisionReal(Decimal(1), 10),
        )
        assert not report.passed

    def test_negative_tolerance_always_fails(self):
        report = VerificationReport(
            identity_name="example",
            parameters={},
            lhs="a",
            rhs="a",
            residual=HighPrecisionReal(Decimal(0), 10),
            tolerance=HighPrecisionReal(Decimal(-1), 10),
        )
        assert not report.passed

    def test_parameters_rendered(self):
        report = VerificationReport(
            identity_name="example",
            parameters={"u": F(3, 2), "k": 4},
            lhs=F(1, 3),
            rhs=Decimal("0.25"),
            residual=HighPrecisionReal(Decimal(0), 10),
            tolerance=HighPrecisionReal(Decimal(1), 10),
        )
        assert report.parameters == {"u": "3/2", "k": 4}
        assert report.lhs == "1/3"
        assert report.rhs == "0.25"

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            VerificationReport(
                identity_name="example",
                parameters={},
                lhs=0.5,
                rhs="x",
                residual=HighPrecisionReal(Decimal(0), 10),
                tolerance=HighPrecisionReal(Decimal(1), 10),
            )

    def test_tampered_line_rejected(self):
        line = identity_check_expansion(1, F(3, 2), 8, 25).to_line()
        tampered = line.replace('"passed": true', '"passed": false')
        with pytest.raises(ValueError):
            VerificationReport.from_line(tampered)
