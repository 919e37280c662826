"""Unit tests for pqfib.pq_arithmetic module."""

import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pqfib.errors import DomainError, ParameterError
from pqfib.pq_arithmetic import (
    FIBONACCI,
    LUCAS,
    PQParams,
    XPolynomial,
    _binomial_by_rows,
    binomial_inversion_holds,
    classical_binomial,
    exact_sqrt,
    factorial_shift_holds,
    jackson_derivative,
    jackson_difference_quotient,
    normalize_family,
    pq_binomial,
    pq_factorial,
    pq_number,
    pq_shifted_factorial,
    promote,
    q_binomial,
    q_number,
    quadratic_split_holds,
    verify_binomial_identities,
)
from pqfib.tests.strategies import distinct_params, nonzero_rationals


class TestPQParams:
    """Tests for the PQParams record."""

    @pytest.mark.unit
    def test_integers_become_fractions(self):
        """Test integer parameters are held as Fractions."""
        params = PQParams(2, 3)

        assert isinstance(params.p, Fraction)
        assert isinstance(params.q, Fraction)
        assert params.exact

    @pytest.mark.unit
    def test_zero_parameter_rejected(self):
        """Test p = 0 or q = 0 raises ParameterError."""
        with pytest.raises(ParameterError):
            PQParams(0, 1)
        with pytest.raises(ParameterError):
            PQParams(1, Fraction(0))

    @pytest.mark.unit
    def test_mpmath_parameters_convert_jointly(self):
        """Test one mpmath parameter pulls the other into mpmath."""
        params = PQParams(mpmath.mpf("1.5"), Fraction(1, 2))

        assert isinstance(params.q, mpmath.mpf)
        assert not params.exact

    @pytest.mark.unit
    def test_inverted_and_product(self):
        """Test inverse parameters and the product pq."""
        params = PQParams(2, 3)

        assert params.inverted() == PQParams(Fraction(1, 2), Fraction(1, 3))
        assert params.product == 6

    @pytest.mark.unit
    def test_promote_integer_and_mp(self):
        """Test promote into the rational and mpmath fields."""
        assert promote(3) == Fraction(3)
        assert isinstance(promote(Fraction(1, 3), like=mpmath.mpf(2)), mpmath.mpf)
        assert promote(0.5) == 0.5

    @pytest.mark.unit
    def test_normalize_family(self):
        """Test family spellings."""
        assert normalize_family("fib") == FIBONACCI
        assert normalize_family(" Lucas ") == LUCAS
        with pytest.raises(ParameterError):
            normalize_family("pell")


class TestXPolynomial:
    """Tests for the dense polynomial type."""

    @pytest.mark.unit
    def test_trailing_zeros_stripped(self):
        """Test trailing zero coefficients are dropped."""
        poly = XPolynomial((1, 2, 0, 0))

        assert poly.coeffs == (1, 2)
        assert poly.degree == 1

    @pytest.mark.unit
    def test_zero_polynomial(self):
        """Test the zero polynomial has degree -1."""
        zero = XPolynomial.zero()

        assert zero.is_zero()
        assert zero.degree == -1
        assert zero.leading_coefficient == 0
        assert zero.evaluate(5) == 0

    @pytest.mark.unit
    def test_arithmetic(self):
        """Test addition, subtraction and multiplication."""
        x = XPolynomial.monomial(1)
        one = XPolynomial.constant(1)

        assert (x + one) * (x - one) == XPolynomial((-1, 0, 1))
        assert 2 * x == XPolynomial((0, 2))
        assert 1 - x == XPolynomial((1, -1))
        assert (x - x).is_zero()

    @pytest.mark.unit
    def test_from_terms_accumulates(self):
        """Test from_terms places coefficients by power."""
        poly = XPolynomial.from_terms({2: 1, 0: 6})

        assert poly.coeffs == (6, 0, 1)
        assert poly.nonzero_terms() == [(0, 6), (2, 1)]

    @pytest.mark.unit
    def test_evaluate_numpy_array(self):
        """Test Horner evaluation broadcasts over arrays."""
        poly = XPolynomial((1, 0, 1))
        values = poly.evaluate(np.array([0.0, 1.0, 2.0]))

        assert np.allclose(values, [1.0, 2.0, 5.0])

    @pytest.mark.unit
    def test_scale_variable(self):
        """Test f(x) -> f(cx)."""
        poly = XPolynomial((1, 1, 1)).scale_variable(Fraction(2))

        assert poly == XPolynomial((1, 2, 4))


class TestPQNumber:
    """Tests for (p,q)-numbers and shifted factorials."""

    @pytest.mark.unit
    def test_small_values(self, params23):
        """Test [0] = 0, [1] = 1, [2] = p + q."""
        assert pq_number(0, params23) == 0
        assert pq_number(1, params23) == 1
        assert pq_number(2, params23) == 5
        assert pq_number(3, params23) == 19

    @pytest.mark.unit
    def test_defined_at_p_equals_q(self):
        """Test [n] stays defined at p = q."""
        assert pq_number(4, PQParams(1, 1)) == 4
        assert pq_number(3, PQParams(2, 2)) == 12

    @pytest.mark.unit
    def test_negative_index_rejected(self, params23):
        """Test n < 0 raises ParameterError."""
        with pytest.raises(ParameterError):
            pq_number(-1, params23)

    @pytest.mark.unit
    @settings(max_examples=40, deadline=None)
    @given(params=distinct_params(), n=st.integers(min_value=0, max_value=12))
    def test_quotient_form(self, params, n):
        """Test [n] = (p^n - q^n)/(p - q) for p != q."""
        p, q = params.p, params.q
        assert pq_number(n, params) == (p**n - q**n) / (p - q)

    @pytest.mark.unit
    @settings(max_examples=40, deadline=None)
    @given(p=nonzero_rationals(), q=nonzero_rationals(), n=st.integers(min_value=0, max_value=10))
    def test_symmetric_in_p_and_q(self, p, q, n):
        """Test [n]_(p,q) = [n]_(q,p)."""
        assert pq_number(n, PQParams(p, q)) == pq_number(n, PQParams(q, p))

    @pytest.mark.unit
    def test_shifted_factorial_examples(self, params23):
        """Test empty product, ((p,0);(p,q))_k and a vanishing product."""
        p = params23.p
        assert pq_shifted_factorial(1, 1, params23, 0) == 1
        assert pq_shifted_factorial(p, 0, params23, 4) == p**10
        assert pq_shifted_factorial(1, 1, params23, 2) == 0

    @pytest.mark.unit
    def test_factorial(self, params23):
        """Test ((p,q);(p,q))_2 = (p - q)(p^2 - q^2)."""
        assert pq_factorial(params23, 2) == (2 - 3) * (4 - 9)


class TestPQBinomial:
    """Tests for (p,q)-binomial coefficients."""

    @pytest.mark.unit
    def test_examples(self, params23):
        """Test [2,1] = p + q, [5,0] = 1 and the classical limit."""
        assert pq_binomial(2, 1, params23) == 5
        assert pq_binomial(5, 0, params23) == 1
        assert pq_binomial(4, 2, PQParams(1, 1)) == 6

    @pytest.mark.unit
    def test_zero_outside_range(self, params23):
        """Test k < 0 or k > n gives 0."""
        assert pq_binomial(3, -1, params23) == 0
        assert pq_binomial(3, 4, params23) == 0
        assert pq_binomial(-1, 0, params23) == 0

    @pytest.mark.unit
    def test_float_and_exact_kept_apart(self):
        """Test equal-valued float parameters get float coefficients."""
        exact = pq_binomial(4, 2, PQParams(2, 3))
        approx = pq_binomial(4, 2, PQParams(2.0, 3.0))

        assert isinstance(exact, Fraction)
        assert isinstance(approx, float)
        assert approx == pytest.approx(float(exact))

    @pytest.mark.unit
    def test_gaussian_limit(self):
        """Test p = 1 reproduces the Gaussian binomial."""
        assert q_binomial(4, 2, 2) == 35
        assert pq_binomial(4, 2, PQParams(1, 2)) == 35

    @pytest.mark.unit
    @settings(max_examples=30, deadline=None)
    @given(params=distinct_params(), n=st.integers(min_value=0, max_value=9), data=st.data())
    def test_symmetry(self, params, n, data):
        """Test [n,k] = [n,n-k]."""
        k = data.draw(st.integers(min_value=0, max_value=n))
        assert pq_binomial(n, k, params) == pq_binomial(n, n - k, params)

    @pytest.mark.unit
    @settings(max_examples=30, deadline=None)
    @given(params=distinct_params(), n=st.integers(min_value=0, max_value=9), data=st.data())
    def test_factorial_quotient(self, params, n, data):
        """Test the recursion agrees with the factorial quotient when p != q."""
        k = data.draw(st.integers(min_value=0, max_value=n))
        quotient = pq_factorial(params, n) / (pq_factorial(params, k) * pq_factorial(params, n - k))
        assert pq_binomial(n, k, params) == quotient

    @pytest.mark.unit
    @settings(max_examples=20, deadline=None)
    @given(params=distinct_params(), n=st.integers(min_value=0, max_value=12), data=st.data())
    def test_inversion(self, params, n, data):
        """Test [n-k,k] at inverse parameters."""
        k = data.draw(st.integers(min_value=0, max_value=n // 2))
        assert binomial_inversion_holds(n, k, params)

    @pytest.mark.unit
    def test_large_index(self):
        """Test n in the thousands at equal and at distinct parameters."""
        assert pq_binomial(1500, 1, PQParams(1, 1)) == 1500
        assert pq_binomial(2100, 1, PQParams(1, 1)) == 2100
        assert pq_binomial(2000, 2, PQParams(1, 1)) == math.comb(2000, 2)
        assert pq_binomial(2000, 1000, PQParams(2, 2)) == 2 ** (1000 * 1000) * math.comb(2000, 1000)
        assert pq_binomial(2000, 1, PQParams(1, 2)) == 2**2000 - 1

    @pytest.mark.unit
    def test_root_of_unity_ratio(self):
        """Test q = -p, where the Gaussian product has vanishing factors."""
        assert pq_binomial(2, 1, PQParams(1, -1)) == 0
        assert pq_binomial(3, 1, PQParams(1, -1)) == 1
        assert pq_binomial(4, 2, PQParams(1, -1)) == 2
        assert pq_binomial(4, 2, PQParams(2, -2)) == 32
        assert pq_binomial(2001, 2, PQParams(1, -1)) == math.comb(1000, 1)

    @pytest.mark.unit
    @settings(max_examples=30, deadline=None)
    @given(params=distinct_params(), n=st.integers(min_value=0, max_value=10), data=st.data())
    def test_product_matches_pascal_rows(self, params, n, data):
        """Test the closed product agrees with the Pascal-type recursion."""
        k = data.draw(st.integers(min_value=0, max_value=n))
        assert pq_binomial(n, k, params) == _binomial_by_rows(n, k, params)


class TestIdentitySweep:
    """Tests for verify_binomial_identities and the derivation identities."""

    @pytest.mark.unit
    def test_empty_sweep(self, params23):
        """Test n_max = 0 checks nothing and passes."""
        report = verify_binomial_identities(0, params23)

        assert report.checked == 0
        assert report.passed

    @pytest.mark.unit
    def test_sweep_passes(self):
        """Test the identities hold through n = 16 at rational parameters."""
        report = verify_binomial_identities(16, PQParams(Fraction(3, 2), Fraction(-2, 5)))

        assert report.passed, report.failures
        assert report.checked > 0

    @pytest.mark.unit
    def test_sweep_at_p_equals_q(self):
        """Test the identities also hold at p = q."""
        report = verify_binomial_identities(10, PQParams(2, 2))

        assert report.passed, report.failures

    @pytest.mark.unit
    def test_factorial_shift(self, params23):
        """Test the factorial shift identity."""
        for n in range(6):
            for k in range(n + 1):
                assert factorial_shift_holds(n, k, params23)

    @pytest.mark.unit
    def test_factorial_shift_vanishing(self):
        """Test a vanishing shifted factorial raises DomainError."""
        with pytest.raises(DomainError):
            factorial_shift_holds(2, 1, PQParams(1, 1))

    @pytest.mark.unit
    def test_quadratic_split(self, square_params):
        """Test the four-factor split with rational roots."""
        for n in range(5):
            for k in range(4):
                assert quadratic_split_holds(n, k, square_params)

    @pytest.mark.unit
    def test_quadratic_split_needs_roots(self, params23):
        """Test irrational roots raise ParameterError."""
        with pytest.raises(ParameterError):
            quadratic_split_holds(2, 1, params23)


class TestJacksonDerivative:
    """Tests for the (p,q)-derivative."""

    @pytest.mark.unit
    def test_examples(self, params23):
        """Test D x^3 = 19 x^2, D c = 0, D x = 1."""
        assert jackson_derivative(XPolynomial.monomial(3), params23) == XPolynomial.monomial(2, 19)
        assert jackson_derivative(XPolynomial.constant(7), params23).is_zero()
        assert jackson_derivative(XPolynomial.monomial(1), params23) == XPolynomial.constant(1)

    @pytest.mark.unit
    @settings(max_examples=30, deadline=None)
    @given(
        params=distinct_params(),
        coeffs=st.lists(nonzero_rationals(), min_size=1, max_size=6),
        x=nonzero_rationals(),
    )
    def test_matches_difference_quotient(self, params, coeffs, x):
        """Test termwise D agrees with (f(px) - f(qx))/((p-q)x)."""
        f = XPolynomial(tuple(coeffs))
        assert jackson_derivative(f, params).evaluate(x) == jackson_difference_quotient(f, params, x)

    @pytest.mark.unit
    @settings(max_examples=30, deadline=None)
    @given(
        params=distinct_params(),
        f_coeffs=st.lists(nonzero_rationals(), min_size=1, max_size=6),
        g_coeffs=st.lists(nonzero_rationals(), min_size=1, max_size=6),
        alpha=nonzero_rationals(),
        beta=nonzero_rationals(),
    )
    def test_linearity(self, params, f_coeffs, g_coeffs, alpha, beta):
        """Test D(alpha f + beta g) = alpha Df + beta Dg."""
        f, g = XPolynomial(tuple(f_coeffs)), XPolynomial(tuple(g_coeffs))

        combined = jackson_derivative(f * alpha + g * beta, params)
        assert combined == jackson_derivative(f, params) * alpha + jackson_derivative(g, params) * beta

    @pytest.mark.unit
    def test_difference_quotient_domain(self):
        """Test p = q or x = 0 raises DomainError."""
        f = XPolynomial.monomial(2)
        with pytest.raises(DomainError):
            jackson_difference_quotient(f, PQParams(2, 2), 1)
        with pytest.raises(DomainError):
            jackson_difference_quotient(f, PQParams(2, 3), 0)


class TestLimitHelpers:
    """Tests for q- and classical helpers."""

    @pytest.mark.unit
    def test_q_number(self):
        """Test [3]_q = 1 + q + q^2 and [n]_1 = n."""
        assert q_number(3, 2) == 7
        assert q_number(5, 1) == 5

    @pytest.mark.unit
    def test_q_binomial_root_of_unity(self):
        """Test q = 1 makes the literal quotient undefined."""
        with pytest.raises(DomainError):
            q_binomial(2, 1, 1)

    @pytest.mark.unit
    def test_classical_binomial(self):
        """Test math.comb with zero outside the range."""
        assert classical_binomial(6, 2) == 15
        assert classical_binomial(2, 3) == 0

    @pytest.mark.unit
    def test_exact_sqrt(self):
        """Test rational square roots."""
        assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert exact_sqrt(2) is None
        assert exact_sqrt(-4) is None
        assert exact_sqrt(2.25) is None
