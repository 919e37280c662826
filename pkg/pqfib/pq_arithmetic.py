"""Exact primitives of (p,q)-calculus.

Every deformed quantity here is a polynomial in p and q evaluated at concrete
parameter values. Rationals are ``fractions.Fraction`` and all arithmetic on
them is exact. The same functions run unchanged over floats, complex numbers
and mpmath numbers, which is how the numeric modules reuse them.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import mpmath

from pqfib.errors import DomainError, ParameterError

# Fraction | float | complex | mpmath.mpf | mpmath.mpc
Scalar = Any

MP_TYPES = (mpmath.mpf, mpmath.mpc)

FIBONACCI = "fibonacci"
LUCAS = "lucas"
FAMILIES = (FIBONACCI, LUCAS)

IDENTITY_FORMULAS = {
    "identity_1": "[n-k,k] = q^k [n-1-k,k] + p^(n-2k) [n-1-k,k-1]",
    "identity_2": "[n-k,k] = p^k [n-1-k,k] + q^(n-2k) [n-1-k,k-1]",
    "identity_3": (
        "[n-k,k] = p^k [n-1-k,k] + p^(n-k) q^-k [n-1-k,k-1]"
        " - (p^(n-2k+1) - q^(n-2k+1)) q^-k [n-k,k-1]"
    ),
    "lucas_1": "[n]/[n-k] [n-k,k] = q^k [n-k,k] + p^(n-k) [n-1-k,k-1]",
    "lucas_2": "[n]/[n-k] [n-k,k] = p^k [n-k,k] + q^(n-k) [n-1-k,k-1]",
}
IDENTITY_ANCHORS = {
    "identity_1": "(p,q)-Pascal recursion, q-weighted",
    "identity_2": "(p,q)-Pascal recursion, p-weighted",
    "identity_3": "(p,q)-binomial three-term recursion",
    "lucas_1": "Lucas coefficient recursion, q-weighted",
    "lucas_2": "Lucas coefficient recursion, p-weighted",
}


def normalize_family(family: str) -> str:
    """Map 'fib'/'fibonacci'/'lucas' spellings onto the two family names."""
    name = str(family).strip().lower()
    if name in ("fib", "f", FIBONACCI):
        return FIBONACCI
    if name in ("lucas", "luc", "l"):
        return LUCAS
    raise ParameterError(f"Unknown polynomial family: {family!r}")


def is_mp(value: Any) -> bool:
    return isinstance(value, MP_TYPES)


def is_exact(value: Any) -> bool:
    """True for values that take part in exact rational arithmetic."""
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def promote(value: Any, like: Any = None) -> Scalar:
    """
    Bring a user-supplied scalar into the field of ``like``.

    Integers become Fractions so that negative powers stay exact. When
    ``like`` is an mpmath number the value is converted to mpmath, since
    Fraction and mpmath numbers do not mix.
    """
    if isinstance(value, bool):
        value = int(value)
    if is_mp(like) and not is_mp(value):
        return mpmath.mpmathify(value)
    if isinstance(value, int):
        return Fraction(value)
    return value


@dataclass(frozen=True)
class PQParams:
    """The deformation parameters (p, q); both must be nonzero."""

    p: Scalar
    q: Scalar

    def __post_init__(self):
        p, q = self.p, self.q
        if is_mp(p) or is_mp(q):
            p, q = mpmath.mpmathify(p), mpmath.mpmathify(q)
        else:
            p, q = promote(p), promote(q)
        if p == 0 or q == 0:
            raise ParameterError(f"p and q must be nonzero, got p={p}, q={q}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def exact(self) -> bool:
        return is_exact(self.p) and is_exact(self.q)

    @property
    def product(self) -> Scalar:
        return self.p * self.q

    def inverted(self) -> "PQParams":
        """The parameters (p⁻¹, q⁻¹)."""
        return PQParams(1 / self.p, 1 / self.q)

    def scalar(self, value: Any) -> Scalar:
        """Promote a companion scalar (s, x, a, ...) into this field."""
        return promote(value, like=self.p)


@dataclass(frozen=True)
class XPolynomial:
    """Dense polynomial in x; ``coeffs[i]`` is the coefficient of x^i."""

    coeffs: Tuple[Scalar, ...] = ()

    def __post_init__(self):
        coeffs = list(self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def zero(cls) -> "XPolynomial":
        return cls(())

    @classmethod
    def constant(cls, value: Scalar) -> "XPolynomial":
        return cls((value,))

    @classmethod
    def monomial(cls, power: int, coefficient: Scalar = 1) -> "XPolynomial":
        return cls((0,) * power + (coefficient,))

    @classmethod
    def from_terms(cls, terms: Dict[int, Scalar]) -> "XPolynomial":
        if not terms:
            return cls.zero()
        coeffs: List[Scalar] = [0] * (max(terms) + 1)
        for power, value in terms.items():
            coeffs[power] = coeffs[power] + value
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, power: int) -> Scalar:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    def nonzero_terms(self) -> List[Tuple[int, Scalar]]:
        return [(i, c) for i, c in enumerate(self.coeffs) if c != 0]

    def __add__(self, other):
        if not isinstance(other, XPolynomial):
            other = XPolynomial.constant(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return XPolynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    __radd__ = __add__

    def __neg__(self):
        return XPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, XPolynomial):
            other = XPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return XPolynomial.constant(other) - self

    def __mul__(self, other):
        if isinstance(other, XPolynomial):
            if self.is_zero() or other.is_zero():
                return XPolynomial.zero()
            out: List[Scalar] = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return XPolynomial(tuple(out))
        return XPolynomial(tuple(c * other for c in self.coeffs))

    __rmul__ = __mul__

    def evaluate(self, x: Any) -> Any:
        """Horner evaluation; ``x`` may be a scalar or a numpy array."""
        acc: Any = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale_variable(self, factor: Scalar) -> "XPolynomial":
        """The polynomial x -> f(factor * x)."""
        return XPolynomial(tuple(c * factor**i for i, c in enumerate(self.coeffs)))

    def map_coefficients(self, func) -> "XPolynomial":
        return XPolynomial(tuple(func(c) for c in self.coeffs))


def pq_number(n: int, params: PQParams) -> Scalar:
    """
    The (p,q)-number [n] = sum_{k<n} p^(n-1-k) q^k.

    Equals (p^n - q^n)/(p - q) whenever p != q, and stays defined at p = q.
    """
    if n < 0:
        raise ParameterError(f"[n]_(p,q) needs n >= 0, got {n}")
    p, q = params.p, params.q
    total: Scalar = 0
    for k in range(n):
        total = total + p ** (n - 1 - k) * q**k
    return total


def pq_shifted_factorial(a: Scalar, b: Scalar, params: PQParams, n: int) -> Scalar:
    """((a,b);(p,q))_n = prod_{k<n} (a p^k - b q^k); 1 for n = 0."""
    if n < 0:
        raise ParameterError(f"shifted factorial needs n >= 0, got {n}")
    p, q = params.p, params.q
    result: Scalar = 1
    for k in range(n):
        result = result * (a * p**k - b * q**k)
    return result


def pq_factorial(params: PQParams, n: int) -> Scalar:
    """((p,q);(p,q))_n."""
    return pq_shifted_factorial(params.p, params.q, params, n)


def _binomial_by_rows(n: int, k: int, params: PQParams) -> Scalar:
    # [m,j] = q^j [m-1,j] + p^(m-j) [m-1,j-1], identity_1, keeping columns j <= k only.
    p, q = params.p, params.q
    row: List[Scalar] = [1] + [0] * k
    for m in range(1, n + 1):
        for j in range(min(m, k), 0, -1):
            row[j] = q**j * row[j] + p ** (m - j) * row[j - 1]
    return row[k]


def pq_binomial(n: int, k: int, params: PQParams) -> Scalar:
    """
    The (p,q)-binomial coefficient [n choose k]; zero outside 0 <= k <= n.

    With Q = q/p this is p^(k(n-k)) times the Gaussian binomial in Q, taken as
    p^(k(n-k)) C(n,k) at p = q and as the product of (1 - Q^(n-k+j))/(1 - Q^j)
    otherwise. When some 1 - Q^j vanishes (Q a root of unity) the Pascal-type
    recursion is run instead, so every p, q is legal.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    k = min(k, n - k)
    p, q = params.p, params.q
    scale = p ** (k * (n - k))
    if p == q:
        return scale * math.comb(n, k)
    ratio = q / p
    value: Scalar = 1
    for j in range(1, k + 1):
        denominator = 1 - ratio**j
        if denominator == 0:
            return _binomial_by_rows(n, k, params)
        value = value * (1 - ratio ** (n - k + j)) / denominator
    return scale * value


def jackson_derivative(f: XPolynomial, params: PQParams) -> XPolynomial:
    """D_(p,q) acting termwise: x^n -> [n]_(p,q) x^(n-1)."""
    return XPolynomial(
        tuple(pq_number(i, params) * c for i, c in enumerate(f.coeffs) if i >= 1)
    )


def jackson_difference_quotient(f: XPolynomial, params: PQParams, x: Scalar) -> Scalar:
    """(f(px) - f(qx)) / ((p - q) x) at a concrete x; needs p != q and x != 0."""
    p, q = params.p, params.q
    if p == q or x == 0:
        raise DomainError("difference quotient needs p != q and x != 0")
    return (f.evaluate(p * x) - f.evaluate(q * x)) / ((p - q) * x)


@dataclass
class BinomialIdentityReport:
    """Outcome of a binomial identity sweep; failures are (n, k, label)."""

    n_max: int
    params: PQParams
    checked: int = 0
    failures: List[Tuple[int, int, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_binomial_identities(n_max: int, params: PQParams) -> BinomialIdentityReport:
    """
    Check the three binomial identities, plus the two Lucas-coefficient
    identities, for every 1 <= n <= n_max and 0 <= 2k <= n.

    Args:
        n_max: Largest n in the sweep
        params: Deformation parameters (exact rationals for bit-exact checks)

    Returns:
        BinomialIdentityReport listing every failing (n, k, identity)
    """
    report = BinomialIdentityReport(n_max=n_max, params=params)
    p, q = params.p, params.q

    def B(top: int, bottom: int) -> Scalar:
        return pq_binomial(top, bottom, params)

    # n = 0 has no row n-1 to recurse from.
    for n in range(1, n_max + 1):
        for k in range(n // 2 + 1):
            lhs = B(n - k, k)
            checks = {
                "identity_1": q**k * B(n - 1 - k, k) + p ** (n - 2 * k) * B(n - 1 - k, k - 1),
                "identity_2": p**k * B(n - 1 - k, k) + q ** (n - 2 * k) * B(n - 1 - k, k - 1),
                "identity_3": (
                    p**k * B(n - 1 - k, k)
                    + p ** (n - k) * q ** (-k) * B(n - 1 - k, k - 1)
                    - (p ** (n - 2 * k + 1) - q ** (n - 2 * k + 1)) * q ** (-k) * B(n - k, k - 1)
                ),
            }
            for label, rhs in checks.items():
                report.checked += 1
                if lhs != rhs:
                    report.failures.append((n, k, label))

            denominator = pq_number(n - k, params)
            if k == 0 or denominator == 0:
                continue
            lucas = pq_number(n, params) / denominator * lhs
            lucas_checks = {
                "lucas_1": q**k * lhs + p ** (n - k) * B(n - 1 - k, k - 1),
                "lucas_2": p**k * lhs + q ** (n - k) * B(n - 1 - k, k - 1),
            }
            for label, rhs in lucas_checks.items():
                report.checked += 1
                if lucas != rhs:
                    report.failures.append((n, k, label))
    return report


def factorial_shift_holds(n: int, k: int, params: PQParams) -> bool:
    """((p,q);(p,q))_(n-k) = ((p,q);(p,q))_n / ((p^-n,q^-n);(p,q))_k (-1)^k (pq)^(C(k,2)-nk)."""
    p, q = params.p, params.q
    shifted = pq_shifted_factorial(p ** (-n), q ** (-n), params, k)
    if shifted == 0:
        raise DomainError(f"((p^-{n},q^-{n});(p,q))_{k} vanishes at these parameters")
    rhs = pq_factorial(params, n) / shifted * (-1) ** k * params.product ** (math.comb(k, 2) - n * k)
    return pq_factorial(params, n - k) == rhs


def quadratic_split_holds(n: int, k: int, params: PQParams) -> bool:
    """((p^n,q^n);(p,q))_2k as the product of four k-length factorials over sqrt(p^n), sqrt(q^n)."""
    p, q = params.p, params.q
    rp, rq = exact_sqrt(p), exact_sqrt(q)
    if rp is None or rq is None:
        raise ParameterError("quadratic split needs rational square roots of p and q")
    lhs = pq_shifted_factorial(p**n, q**n, params, 2 * k)
    rhs = (
        pq_shifted_factorial(rp**n, rq**n, params, k)
        * pq_shifted_factorial(rp ** (n + 1), rq ** (n + 1), params, k)
        * pq_shifted_factorial(rp**n, -(rq**n), params, k)
        * pq_shifted_factorial(rp ** (n + 1), -(rq ** (n + 1)), params, k)
    )
    return lhs == rhs


def binomial_inversion_holds(n: int, k: int, params: PQParams) -> bool:
    """[n-k,k] at (p⁻¹,q⁻¹) equals (pq)^(k(2k-n)) [n-k,k] at (p,q)."""
    inverse = pq_binomial(n - k, k, params.inverted())
    return inverse == params.product ** (k * (2 * k - n)) * pq_binomial(n - k, k, params)


def exact_sqrt(value: Any) -> Optional[Fraction]:
    """Rational square root of a nonnegative rational, or None if irrational."""
    if not is_exact(value):
        return None
    value = Fraction(value)
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


# q-limit oracles: the literal p = 1 formulas, kept independent of the
# (p,q) machinery above.

def q_number(n: int, q: Scalar) -> Scalar:
    """[n]_q = (1 - q^n)/(1 - q); n at q = 1."""
    q = promote(q)
    if q == 1:
        return promote(n)
    return (1 - q**n) / (1 - q)


def q_shifted_factorial(z: Scalar, q: Scalar, n: int) -> Scalar:
    """(z;q)_n = prod_{k<n} (1 - z q^k)."""
    q = promote(q)
    result: Scalar = 1
    for k in range(n):
        result = result * (1 - z * q**k)
    return result


def q_binomial(n: int, k: int, q: Scalar) -> Scalar:
    """Gaussian binomial (q;q)_n / ((q;q)_k (q;q)_(n-k)) as a literal quotient."""
    if n < 0 or k < 0 or k > n:
        return 0
    q = promote(q)
    denominator = q_shifted_factorial(q, q, k) * q_shifted_factorial(q, q, n - k)
    if denominator == 0:
        raise DomainError(f"(q;q) products vanish at q={q}; use pq_binomial instead")
    return q_shifted_factorial(q, q, n) / denominator


def classical_binomial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)
