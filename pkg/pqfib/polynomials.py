"""(p,q)-Fibonacci and (p,q)-Lucas polynomials.

Public ``n`` is always the subscript: ``fibonacci_poly(n)`` is F_n and
``lucas_poly(n)`` is L_n. The coefficient functions take the upper summation
index, so F_n is built from ``fib_coefficient(n - 1, k)``.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from pqfib.errors import ParameterError
from pqfib.pq_arithmetic import (
    FIBONACCI,
    LUCAS,
    PQParams,
    Scalar,
    XPolynomial,
    classical_binomial,
    jackson_derivative,
    normalize_family,
    pq_binomial,
    pq_number,
    promote,
    q_binomial,
    q_number,
)

FIB_VARIANTS = ("A", "B", "C")
LUCAS_VARIANTS = ("A", "B")


def _check_index(n: int, name: str = "n") -> None:
    if n < 0:
        raise ParameterError(f"{name} must be >= 0, got {n}")


def fib_coefficient(n: int, k: int, params: PQParams) -> Scalar:
    """c^F_{n,k} = (pq)^(k(k+1)/2) [n-k,k]; 0 outside 0 <= 2k <= n."""
    if k < 0 or 2 * k > n:
        return 0
    return params.product ** (k * (k + 1) // 2) * pq_binomial(n - k, k, params)


def lucas_coefficient(n: int, k: int, params: PQParams) -> Scalar:
    """
    c^L_{n,k} = (pq)^C(k,2) ([n]/[n-k]) [n-k,k]; 0 outside 0 <= 2k <= n.

    The k = 0 coefficient is 1 for every n, so L_0 = 1. When [n-k] vanishes
    (p^(n-k) = q^(n-k) with p != q) the division-free form
    q^k [n-k,k] + p^(n-k) [n-1-k,k-1] is used instead.
    """
    if k < 0 or 2 * k > n:
        return 0
    if k == 0:
        return 1
    binomial = pq_binomial(n - k, k, params)
    denominator = pq_number(n - k, params)
    if denominator != 0:
        ratio = pq_number(n, params) / denominator * binomial
    else:
        ratio = params.q**k * binomial + params.p ** (n - k) * pq_binomial(n - 1 - k, k - 1, params)
    return params.product ** math.comb(k, 2) * ratio


def fibonacci_poly(n: int, params: PQParams, s: Scalar) -> XPolynomial:
    """F_n(x, s | p, q) by the direct binomial sum; F_0 = 0, F_1 = 1."""
    _check_index(n)
    if n == 0:
        return XPolynomial.zero()
    s = params.scalar(s)
    m = n - 1
    return XPolynomial.from_terms(
        {m - 2 * k: fib_coefficient(m, k, params) * s**k for k in range(m // 2 + 1)}
    )


def lucas_poly(n: int, params: PQParams, s: Scalar) -> XPolynomial:
    """L_n(x, s | p, q) by the direct sum; L_0 = 1, L_1 = x."""
    _check_index(n)
    s = params.scalar(s)
    return XPolynomial.from_terms(
        {n - 2 * k: lucas_coefficient(n, k, params) * s**k for k in range(n // 2 + 1)}
    )


def fibonacci_poly_recursive(n: int, params: PQParams, s: Scalar, variant: str = "A") -> XPolynomial:
    """
    F_n built only from F_0 = 0, F_1 = 1 and one of the three-term recursions.

    With sigma the current s argument and m >= 1:

        A: F_(m+1)(sigma) = x F_m(q sigma) + sigma q p^(m-1) F_(m-1)(q sigma / p)
        B: F_(m+1)(sigma) = x F_m(p sigma) + sigma p q^(m-1) F_(m-1)(p sigma / q)
        C: F_(m+1)(sigma) = (x + sigma p (q - p) D) F_m(p sigma) + sigma p^m F_(m-1)(sigma)

    Every subproblem is F_level(x, s p^alpha q^beta) and is memoized on
    (level, alpha, beta), so the shifted arguments are never compared as
    scalars.

    Args:
        n: Subscript of F
        params: Deformation parameters
        s: Second polynomial argument
        variant: "A", "B" or "C"

    Returns:
        F_n as an XPolynomial
    """
    _check_index(n)
    return _recursion(params, s, variant)(n, 0, 0)


def fibonacci_sequence_recursive(n_max: int, params: PQParams, s: Scalar, variant: str = "A") -> List[XPolynomial]:
    """[F_0, ..., F_n_max] by one recursion variant, sharing a single memo table."""
    _check_index(n_max, "n_max")
    build = _recursion(params, s, variant)
    return [build(n, 0, 0) for n in range(n_max + 1)]


def _recursion(params: PQParams, s: Scalar, variant: str) -> Callable[[int, int, int], XPolynomial]:
    variant = str(variant).upper()
    if variant not in FIB_VARIANTS:
        raise ParameterError(f"Unknown Fibonacci recursion variant: {variant!r}")
    s = params.scalar(s)
    p, q = params.p, params.q
    x = XPolynomial.monomial(1)
    memo: Dict[Tuple[int, int, int], XPolynomial] = {}

    def sigma(alpha: int, beta: int) -> Scalar:
        return s * p**alpha * q**beta

    def build(level: int, alpha: int, beta: int) -> XPolynomial:
        key = (level, alpha, beta)
        if key in memo:
            return memo[key]
        if level == 0:
            result = XPolynomial.zero()
        elif level == 1:
            result = XPolynomial.constant(1)
        else:
            m = level - 1
            arg = sigma(alpha, beta)
            if variant == "A":
                result = x * build(m, alpha, beta + 1) + build(m - 1, alpha - 1, beta + 1) * (
                    arg * q * p ** (m - 1)
                )
            elif variant == "B":
                result = x * build(m, alpha + 1, beta) + build(m - 1, alpha + 1, beta - 1) * (
                    arg * p * q ** (m - 1)
                )
            else:
                shifted = build(m, alpha + 1, beta)
                result = (
                    x * shifted
                    + jackson_derivative(shifted, params) * (arg * p * (q - p))
                    + build(m - 1, alpha, beta) * (arg * p**m)
                )
        memo[key] = result
        return result

    return build


def lucas_from_fibonacci(n: int, params: PQParams, s: Scalar, variant: str = "A") -> XPolynomial:
    """
    Lucas polynomials assembled from Fibonacci polynomials at s/p.

    Variant A returns L_n(x, s):
        F_(n+1)(x, s/p) + s p^(n-1) F_(n-1)(x, s/p)
    Variant B returns L_n(x, s q/p):
        F_(n+1)(x, s/p) + s p^-1 q^n F_(n-1)(x, s/p)
    """
    if n < 1:
        raise ParameterError(f"Lucas assembly from Fibonacci needs n >= 1, got {n}")
    variant = str(variant).upper()
    if variant not in LUCAS_VARIANTS:
        raise ParameterError(f"Unknown Lucas recursion variant: {variant!r}")
    s = params.scalar(s)
    p, q = params.p, params.q
    shifted = s / p
    head = fibonacci_poly(n + 1, params, shifted)
    tail = fibonacci_poly(n - 1, params, shifted)
    if variant == "A":
        return head + tail * (s * p ** (n - 1))
    return head + tail * (s * q**n / p)


def inverse_param_poly(family: str, n: int, params: PQParams, s: Scalar) -> XPolynomial:
    """
    The (p⁻¹,q⁻¹) polynomial built from the (p,q) coefficients through

        c^F_{m,k}(p⁻¹,q⁻¹) = (pq)^(-k(m+1-k)) c^F_{m,k}(p,q)
        c^L_{n,k}(p⁻¹,q⁻¹) = (pq)^(k(k-n)) c^L_{n,k}(p,q)
    """
    family = normalize_family(family)
    _check_index(n)
    s = params.scalar(s)
    pq = params.product
    if family == FIBONACCI:
        if n == 0:
            return XPolynomial.zero()
        m = n - 1
        return XPolynomial.from_terms(
            {
                m - 2 * k: pq ** (-k * (m + 1 - k)) * fib_coefficient(m, k, params) * s**k
                for k in range(m // 2 + 1)
            }
        )
    return XPolynomial.from_terms(
        {n - 2 * k: pq ** (k * (k - n)) * lucas_coefficient(n, k, params) * s**k for k in range(n // 2 + 1)}
    )


def inverse_param_poly_direct(family: str, n: int, params: PQParams, s: Scalar) -> XPolynomial:
    """The direct definition evaluated at (p⁻¹, q⁻¹)."""
    return family_poly(family, n, params.inverted(), s)


def family_poly(family: str, n: int, params: PQParams, s: Scalar) -> XPolynomial:
    if normalize_family(family) == FIBONACCI:
        return fibonacci_poly(n, params, s)
    return lucas_poly(n, params, s)


def fibonacci_number(n: int, params: PQParams) -> Scalar:
    """F_n(p, q) = F_n(1, 1 | p, q)."""
    return fibonacci_poly(n, params, 1).evaluate(1)


def lucas_number(n: int, params: PQParams) -> Scalar:
    """L_n(p, q) = L_n(1, 1 | p, q)."""
    return lucas_poly(n, params, 1).evaluate(1)


def classical_number_formula(family: str, n: int) -> Fraction:
    """
    Binet-type binomial sums for the classical numbers:

        F_n = 2^(1-n) sum_k C(n, 2k+1) 5^k
        L_n = 2^(1-n) sum_k C(n, 2k) 5^k     (n >= 1)

    The Lucas sum gives 2 at n = 0, which disagrees with L_0 = 1, so n = 0 is
    rejected for Lucas.
    """
    family = normalize_family(family)
    _check_index(n)
    if family == LUCAS and n == 0:
        raise ParameterError("the Lucas binomial-sum formula starts at n = 1 (it gives 2, not L_0 = 1)")
    offset = 1 if family == FIBONACCI else 0
    total = sum(math.comb(n, 2 * k + offset) * 5**k for k in range(n // 2 + 1))
    return Fraction(total) / Fraction(2) ** (n - 1)


def check_derivative_relation(n: int, params: PQParams, s: Scalar, as_printed: bool = False) -> bool:
    """
    D L_n(x, s) == [n] F_n(x, s/(pq)), exactly.

    ``as_printed=True`` drops the s/(pq) shift; that form only holds when
    pq = 1 or n <= 2.
    """
    _check_index(n)
    s = params.scalar(s)
    target = s if as_printed else s / params.product
    lhs = jackson_derivative(lucas_poly(n, params, s), params)
    rhs = fibonacci_poly(n, params, target) * pq_number(n, params)
    return lhs == rhs


# p = 1 and p = q = 1 oracles, written from the q- and classical sums only.

def q_fibonacci_poly(n: int, q: Scalar, s: Scalar) -> XPolynomial:
    """sum_k q^(k(k+1)/2) [n-1-k, k]_q s^k x^(n-1-2k)."""
    _check_index(n)
    if n == 0:
        return XPolynomial.zero()
    q, s = promote(q), promote(s)
    m = n - 1
    return XPolynomial.from_terms(
        {m - 2 * k: q ** (k * (k + 1) // 2) * q_binomial(m - k, k, q) * s**k for k in range(m // 2 + 1)}
    )


def q_lucas_poly(n: int, q: Scalar, s: Scalar) -> XPolynomial:
    """sum_k q^C(k,2) ([n]_q/[n-k]_q) [n-k, k]_q s^k x^(n-2k)."""
    _check_index(n)
    q, s = promote(q), promote(s)
    terms = {n: 1}
    for k in range(1, n // 2 + 1):
        ratio = q_number(n, q) / q_number(n - k, q)
        terms[n - 2 * k] = q ** math.comb(k, 2) * ratio * q_binomial(n - k, k, q) * s**k
    return XPolynomial.from_terms(terms)


def classical_fibonacci_poly(n: int, s: Scalar) -> XPolynomial:
    """sum_k C(n-1-k, k) s^k x^(n-1-2k)."""
    _check_index(n)
    if n == 0:
        return XPolynomial.zero()
    s = promote(s)
    m = n - 1
    return XPolynomial.from_terms({m - 2 * k: classical_binomial(m - k, k) * s**k for k in range(m // 2 + 1)})


def classical_lucas_poly(n: int, s: Scalar) -> XPolynomial:
    """sum_k n/(n-k) C(n-k, k) s^k x^(n-2k), with L_0 = 1."""
    _check_index(n)
    s = promote(s)
    terms = {n: 1}
    for k in range(1, n // 2 + 1):
        terms[n - 2 * k] = Fraction(n, n - k) * classical_binomial(n - k, k) * s**k
    return XPolynomial.from_terms(terms)


def classical_recurrence_poly(family: str, n: int, s: Scalar) -> XPolynomial:
    """F_(j+1) = x F_j + s F_(j-1) from F_0 = 0, F_1 = 1; L_n = F_(n+1) + s F_(n-1)."""
    family = normalize_family(family)
    _check_index(n)
    s = promote(s)
    x = XPolynomial.monomial(1)
    top = n + 1 if family == LUCAS else n
    sequence = [XPolynomial.zero(), XPolynomial.constant(1)]
    while len(sequence) <= top:
        sequence.append(x * sequence[-1] + sequence[-2] * s)
    if family == FIBONACCI:
        return sequence[n]
    if n == 0:
        return XPolynomial.constant(1)
    return sequence[n + 1] + sequence[n - 1] * s


@dataclass(frozen=True)
class DeformedPolynomial:
    """A built F_n or L_n together with the arguments that produced it."""

    family: str
    n: int
    params: PQParams
    s: Scalar
    poly: XPolynomial

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def label(self) -> str:
        letter = "F" if self.family == FIBONACCI else "L"
        return f"{letter}_{self.n}"

    def __call__(self, x: Scalar) -> Scalar:
        return self.poly.evaluate(x)

    def coefficient_map(self) -> Dict[int, Scalar]:
        return dict(self.poly.nonzero_terms())


BUILDERS: Dict[str, Callable[..., XPolynomial]] = {
    "direct": family_poly,
    "inverse": inverse_param_poly,
    "inverse_direct": inverse_param_poly_direct,
}


def deformed_polynomial(
    family: str, n: int, params: PQParams, s: Scalar, method: str = "direct"
) -> DeformedPolynomial:
    """Build F_n or L_n as a DeformedPolynomial with the chosen construction."""
    family = normalize_family(family)
    if method not in BUILDERS:
        raise ParameterError(f"Unknown construction method: {method!r}")
    poly = BUILDERS[method](family, n, params, s)
    return DeformedPolynomial(family=family, n=n, params=params, s=params.scalar(s), poly=poly)
