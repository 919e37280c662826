"""Generating functions of the (p,q)-Fibonacci and (p,q)-Lucas families.

Everything is a formal power series in t truncated at a fixed order:

    f_F(x, s; t) = sum_n F_n(x, s p^-n) t^n
    f_L(x, s; t) = sum_n L_n(x, s p^-n) t^n

Closed forms contain t inside a hypergeometric parameter pair, so they are
expanded term by term with series inversion instead of being summed.
"""

import math
from dataclasses import dataclass
from typing import Iterable, Tuple

from pqfib.errors import ConvergenceError, DomainError, ParameterError
from pqfib.hypergeometric import (
    HypergeometricSpec,
    ParamPair,
    SeriesControl,
    SeriesMode,
    evaluate_rphi_s,
)
from pqfib.pq_arithmetic import (
    FIBONACCI,
    PQParams,
    Scalar,
    is_exact,
    normalize_family,
    promote,
)
from pqfib.polynomials import family_poly

DEFAULT_ORDER = 12


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Power series in t; ``coeffs[m]`` is the coefficient of t^m, valid for m <= order."""

    coeffs: Tuple[Scalar, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ParameterError(f"series order must be >= 0, got {self.order}")
        coeffs = tuple(self.coeffs[: self.order + 1])
        coeffs = coeffs + (0,) * (self.order + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[Scalar], order: int) -> "TruncatedSeries":
        return cls(tuple(coeffs), order)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((), order)

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "TruncatedSeries":
        return cls((value,), order)

    @classmethod
    def variable(cls, order: int) -> "TruncatedSeries":
        """The series t."""
        return cls((0, 1), order)

    @classmethod
    def geometric(cls, ratio: Scalar, order: int) -> "TruncatedSeries":
        """1 / (1 - ratio t)."""
        return cls(tuple(ratio**m for m in range(order + 1)), order)

    def coefficient(self, m: int) -> Scalar:
        if 0 <= m <= self.order:
            return self.coeffs[m]
        raise IndexError(f"coefficient t^{m} is beyond order {self.order}")

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        return TruncatedSeries(tuple(self.coeffs[m] + other.coeffs[m] for m in range(order + 1)), order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(tuple(c * other for c in self.coeffs), self.order)
        order = min(self.order, other.order)
        out = []
        for m in range(order + 1):
            acc: Scalar = 0
            for j in range(m + 1):
                a = self.coeffs[j]
                if a != 0:
                    acc = acc + a * other.coeffs[m - j]
            out.append(acc)
        return TruncatedSeries(tuple(out), order)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = TruncatedSeries.constant(1, self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be nonzero."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise DomainError("cannot invert a series with zero constant term")
        out = [1 / promote(a0)]
        for m in range(1, self.order + 1):
            acc: Scalar = 0
            for j in range(1, m + 1):
                if self.coeffs[j] != 0:
                    acc = acc + self.coeffs[j] * out[m - j]
            out.append(-acc * out[0])
        return TruncatedSeries(tuple(out), self.order)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.invert()
        return TruncatedSeries(tuple(c / promote(other) for c in self.coeffs), self.order)

    def __rtruediv__(self, other):
        return self.invert() * other

    def shift(self, places: int) -> "TruncatedSeries":
        """Multiply by t^places."""
        return TruncatedSeries((0,) * places + self.coeffs, self.order)

    def evaluate(self, t: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            order = min(self.order, other.order)
            return self.coeffs[: order + 1] == other.coeffs[: order + 1]
        try:
            return self == TruncatedSeries.constant(other, self.order)
        except TypeError:
            return NotImplemented

    __hash__ = None

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*t^{m}" for m, c in enumerate(self.coeffs) if c != 0) or "0"
        return f"TruncatedSeries({terms} + O(t^{self.order + 1}))"


def _check_order(order: int) -> None:
    if order < 0:
        raise ParameterError(f"order must be >= 0, got {order}")


def _definitional(family: str, x: Scalar, s: Scalar, params: PQParams, order: int) -> TruncatedSeries:
    _check_order(order)
    x, s = params.scalar(x), params.scalar(s)
    p = params.p
    return TruncatedSeries.from_coefficients(
        (family_poly(family, n, params, s * p ** (-n)).evaluate(x) for n in range(order + 1)), order
    )


def fib_genfunc_definitional(x: Scalar, s: Scalar, params: PQParams, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """sum_n F_n(x, s p^-n) t^n through t^order."""
    return _definitional(FIBONACCI, x, s, params, order)


def lucas_genfunc_definitional(x: Scalar, s: Scalar, params: PQParams, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """sum_n L_n(x, s p^-n) t^n through t^order."""
    return _definitional("lucas", x, s, params, order)


def _two_phi_two(x: Scalar, s: Scalar, params: PQParams, order: int, pair_scale: Scalar = 1) -> TruncatedSeries:
    """
    2phi2((p,q), 0; (p, c x t q), (p, 0) | (p,q); -q s t^2) expanded term by term:

        sum_k (q/p)^C(k,2) (q s t^2)^k / (prod_{j<k} (p^(j+1) - c x q^(j+1) t) p^C(k+1,2))

    with c = ``pair_scale``.
    """
    p, q = params.p, params.q
    total = TruncatedSeries.zero(order)
    denominator = TruncatedSeries.constant(1, order)
    for k in range(order // 2 + 1):
        if k:
            factor = TruncatedSeries((p**k, -pair_scale * x * q**k), order)
            denominator = denominator * factor
        if s == 0 and k:
            break
        scalar = (q / p) ** math.comb(k, 2) * (q * s) ** k / p ** math.comb(k + 1, 2)
        total = total + (denominator.invert() * scalar).shift(2 * k)
    return total


def fib_genfunc_closed(x: Scalar, s: Scalar, params: PQParams, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """t/(1 - x t) times the 2phi2 with denominator pair (p, x t q)."""
    _check_order(order)
    x, s = params.scalar(x), params.scalar(s)
    prefactor = TruncatedSeries.geometric(x, order).shift(1)
    return prefactor * _two_phi_two(x, s, params, order)


def lucas_genfunc_closed(
    x: Scalar, s: Scalar, params: PQParams, order: int = DEFAULT_ORDER, as_printed: bool = False
) -> TruncatedSeries:
    """
    f_L = 1/(1 - x t) [Phi(s) + (s t^2 / p) Phi(s / p^2)], where Phi is the
    Fibonacci 2phi2 as a function of s.

    ``as_printed=True`` gives (1 + s p t^2)/(1 - x p t) times the 2phi2 with
    denominator pair (p, x t p q) instead; the two agree only at p = 1.
    """
    _check_order(order)
    x, s = params.scalar(x), params.scalar(s)
    p = params.p
    if as_printed:
        prefactor = TruncatedSeries((1, 0, s * p), order) * TruncatedSeries.geometric(x * p, order)
        return prefactor * _two_phi_two(x, s, params, order, pair_scale=p)
    head = _two_phi_two(x, s, params, order)
    tail = _two_phi_two(x, s / p**2, params, order).shift(2) * (s / p)
    return TruncatedSeries.geometric(x, order) * (head + tail)


def number_genfunc(
    family: str, params: PQParams, order: int = DEFAULT_ORDER, as_printed: bool = False
) -> TruncatedSeries:
    """Closed-form generating function of the (p,q)-numbers (x = s = 1)."""
    if normalize_family(family) == FIBONACCI:
        return fib_genfunc_closed(1, 1, params, order)
    return lucas_genfunc_closed(1, 1, params, order, as_printed=as_printed)


def one_phi_one_spec(x: Scalar, q: Scalar, order: int) -> HypergeometricSpec:
    """1phi1(q; q x t | q) at p = 1, with the t-dependent pair as a series."""
    params = PQParams(1, q)
    q = params.q
    pair = TruncatedSeries((0, x * q), order)
    return HypergeometricSpec(
        numerator=(ParamPair.explicit(1, q),),
        denominator=(ParamPair.explicit(1, pair),),
        params=params,
    )


def _q_phi(x: Scalar, s: Scalar, q: Scalar, order: int) -> TruncatedSeries:
    spec = one_phi_one_spec(x, q, order)
    q = spec.params.q
    z = TruncatedSeries((0, 0, -q * s), order)
    ctrl = SeriesControl(max_terms=order // 2 + 1, mode=SeriesMode.FORMAL)
    value = evaluate_rphi_s(spec, z, ctrl)
    if not isinstance(value, TruncatedSeries):
        value = TruncatedSeries.constant(value, order)
    return value


def fib_genfunc_q_limit(x: Scalar, s: Scalar, q: Scalar, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """t/(1 - x t) 1phi1(q; q x t | q; -q s t^2), the p = 1 generating function."""
    _check_order(order)
    x, s = promote(x), promote(s)
    return TruncatedSeries.geometric(x, order).shift(1) * _q_phi(x, s, q, order)


def lucas_genfunc_q_limit(x: Scalar, s: Scalar, q: Scalar, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """(1 + s t^2)/(1 - x t) 1phi1(q; q x t | q; -q s t^2)."""
    _check_order(order)
    x, s = promote(x), promote(s)
    prefactor = TruncatedSeries((1, 0, s), order) * TruncatedSeries.geometric(x, order)
    return prefactor * _q_phi(x, s, q, order)


def classical_genfunc(family: str, x: Scalar, s: Scalar, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """t/(1 - x t - s t^2) or (1 + s t^2)/(1 - x t - s t^2)."""
    _check_order(order)
    x, s = promote(x), promote(s)
    denominator = TruncatedSeries((1, -x, -s), order)
    if normalize_family(family) == FIBONACCI:
        numerator = TruncatedSeries.variable(order)
    else:
        numerator = TruncatedSeries((1, 0, s), order)
    return numerator / denominator


def genfunc_value(
    family: str,
    x: Scalar,
    s: Scalar,
    params: PQParams,
    t: Scalar,
    tolerance: float = 1e-12,
    max_terms: int = 200,
    settle_count: int = 5,
) -> Scalar:
    """
    Numeric value of the definitional series at a concrete t.

    Partial sums are accumulated until ``settle_count`` consecutive terms
    each change the sum by at most ``tolerance`` relative to it.

    Raises:
        ConvergenceError: the partial sums never settle within ``max_terms``
    """
    family = normalize_family(family)
    if not is_exact(t):
        params = PQParams(float(params.p), float(params.q))
        x, s = float(x), float(s)
    x, s = params.scalar(x), params.scalar(s)
    p = params.p

    total: Scalar = 0
    settled = 0
    power: Scalar = 1
    for n in range(max_terms):
        term = family_poly(family, n, params, s * p ** (-n)).evaluate(x) * power
        total = total + term
        power = power * t
        if n and abs(term) <= tolerance * abs(total):
            settled += 1
            if settled >= settle_count:
                return total
        else:
            settled = 0
    raise ConvergenceError(
        f"{family} generating function at t={t} did not settle within {max_terms} terms"
    )
