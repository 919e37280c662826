"""Numerical checks of the Gaussian-windowed Fourier transform theorems.

For q = p⁻¹ exp(-2 kappa²) the transform

    (1/sqrt(2 pi)) ∫ F_(n+1)(a e^(i kappa x), s | p, q) e^(i x y - x²/2) dx

equals (pq)^(n²/4) F_(n+1)(a e^(-kappa y), pq s | p⁻¹, q⁻¹) e^(-y²/2), and the
Lucas analogue holds with s unchanged. Integrals are computed with a
Gauss-Hermite rule after the substitution x = sqrt(2) u.
"""

import math
from contextlib import contextmanager
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Optional

import mpmath
import numpy as np
from scipy.linalg import eigh_tridiagonal

from pqfib.errors import ParameterError
from pqfib.pq_arithmetic import FIBONACCI, LUCAS, PQParams, normalize_family
from pqfib.polynomials import (
    fib_coefficient,
    fibonacci_poly,
    inverse_param_poly,
    lucas_coefficient,
    lucas_poly,
)

DEFAULT_NODES = 128
Y_GRID = tuple(np.linspace(-3.0, 3.0, 13))


@dataclass(frozen=True)
class FourierParams:
    """
    Parameters of the transform identity. ``q`` is derived, never free.

    ``n`` is the upper summation index of F_(n+1) and the subscript of L_n;
    ``amplitude`` is the constant factor a (Fibonacci) or b (Lucas).
    """

    p: float
    kappa: float
    amplitude: float = 1.0
    s: float = 1.0
    n: int = 0

    def __post_init__(self):
        if not self.p > 0:
            raise ParameterError(f"p must be positive, got {self.p}")
        if self.kappa == 0:
            raise ParameterError("kappa must be nonzero")
        if self.n < 0:
            raise ParameterError(f"n must be >= 0, got {self.n}")

    @property
    def q(self) -> float:
        return math.exp(-2.0 * self.kappa**2) / self.p

    @property
    def params(self) -> PQParams:
        return PQParams(float(self.p), self.q)

    def mp_params(self) -> PQParams:
        """(p, q) as mpmath numbers at the current working precision."""
        p = mpmath.mpmathify(self.p)
        return PQParams(p, mpmath.exp(-2 * mpmath.mpmathify(self.kappa) ** 2) / p)


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Nodes and weights for ∫ f(u) exp(-u²) du."""

    nodes: np.ndarray
    weights: np.ndarray

    @property
    def count(self) -> int:
        return len(self.nodes)

    def integrate(self, f: Callable[[np.ndarray], np.ndarray]) -> complex:
        return complex(np.sum(self.weights * f(self.nodes)))


def _orthonormal_hermite(u: np.ndarray, count: int):
    """p̂_(count-1)(u) and p̂_count(u), plus sum_{k<count} p̂_k(u)²."""
    previous = np.zeros_like(u)
    current = np.full_like(u, math.pi ** -0.25)
    squares = np.zeros_like(u)
    for k in range(count):
        squares += current**2
        following = (u * current - math.sqrt(k / 2.0) * previous) / math.sqrt((k + 1) / 2.0)
        previous, current = current, following
    return previous, current, squares


@lru_cache(maxsize=16)
def gauss_hermite_rule(count: int = DEFAULT_NODES) -> QuadratureRule:
    """
    Gauss-Hermite rule by the Golub-Welsch construction.

    Nodes are the eigenvalues of the symmetric tridiagonal Jacobi matrix with
    zero diagonal and off-diagonals sqrt(j/2), refined by one Newton step on
    the orthonormal Hermite polynomial. Weights are the Christoffel numbers
    1 / sum_k p̂_k(u)².
    """
    if count < 1:
        raise ParameterError(f"quadrature rule needs at least one node, got {count}")
    off_diagonal = np.sqrt(np.arange(1, count) / 2.0)
    nodes = eigh_tridiagonal(np.zeros(count), off_diagonal, eigvals_only=True)

    below, value, _ = _orthonormal_hermite(nodes, count)
    nodes = nodes - value / (math.sqrt(2.0 * count) * below)
    _, _, squares = _orthonormal_hermite(nodes, count)
    weights = 1.0 / squares

    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(nodes=nodes, weights=weights)


def weighted_fourier_quadrature(
    g: Callable[[np.ndarray], np.ndarray], y: float, rule: Optional[QuadratureRule] = None
) -> complex:
    """
    (1/sqrt(2 pi)) ∫ g(x) e^(i x y - x²/2) dx
        ≈ (1/sqrt(pi)) sum_j w_j g(sqrt(2) u_j) e^(i sqrt(2) u_j y)

    ``g`` is called once with the array of all abscissae.
    """
    rule = rule or gauss_hermite_rule()
    x = math.sqrt(2.0) * rule.nodes
    values = np.broadcast_to(np.asarray(g(x), dtype=complex), x.shape)
    return complex(np.sum(rule.weights * values * np.exp(1j * x * y)) / math.sqrt(math.pi))


@contextmanager
def _precision(dps: Optional[int]) -> Iterator[None]:
    if dps is None:
        yield
    else:
        with mpmath.workdps(dps):
            yield


def _field(fp: FourierParams, dps: Optional[int]):
    """(params, exp, scalar) for double precision or mpmath at ``dps``."""
    if dps is None:
        return fp.params, math.exp, float
    return fp.mp_params(), mpmath.exp, mpmath.mpmathify


def _box(value, dps: Optional[int]):
    return complex(value) if dps is None else mpmath.mpc(value)


def _poly(family: str, fp: FourierParams):
    if family == FIBONACCI:
        return fibonacci_poly(fp.n + 1, fp.params, fp.s)
    return lucas_poly(fp.n, fp.params, fp.s)


def _transform_lhs(family: str, fp: FourierParams, y: float, rule: Optional[QuadratureRule]) -> complex:
    poly = _poly(family, fp)
    a, kappa = fp.amplitude, fp.kappa
    return weighted_fourier_quadrature(lambda x: poly.evaluate(a * np.exp(1j * kappa * x)), y, rule)


def _transform_analytic(family: str, fp: FourierParams, y: float, dps: Optional[int]):
    with _precision(dps):
        params, exp, scalar = _field(fp, dps)
        n = fp.n
        s, a, kappa, y = scalar(fp.s), scalar(fp.amplitude), scalar(fp.kappa), scalar(y)
        coefficient = fib_coefficient if family == FIBONACCI else lucas_coefficient
        total = 0
        for k in range(n // 2 + 1):
            m = n - 2 * k
            total = total + coefficient(n, k, params) * s**k * a**m * exp(-((kappa * m + y) ** 2) / 2)
        return _box(total, dps)


def _transform_rhs(family: str, fp: FourierParams, y: float, dps: Optional[int], shift_s: bool):
    with _precision(dps):
        params, exp, scalar = _field(fp, dps)
        n = fp.n
        s, a, kappa, y = scalar(fp.s), scalar(fp.amplitude), scalar(fp.kappa), scalar(y)
        pq = params.product
        log = math.log if dps is None else mpmath.log
        scale = exp(n * n / 4 * log(pq))
        if family == FIBONACCI:
            poly = inverse_param_poly(FIBONACCI, n + 1, params, pq * s)
        else:
            poly = inverse_param_poly(LUCAS, n, params, s / pq if shift_s else s)
        return _box(scale * poly.evaluate(a * exp(-kappa * y)) * exp(-y * y / 2), dps)


def fibonacci_transform_lhs(fp: FourierParams, y: float, rule: Optional[QuadratureRule] = None) -> complex:
    """Quadrature of x -> F_(n+1)(a e^(i kappa x), s | p, q) against e^(ixy - x²/2)."""
    return _transform_lhs(FIBONACCI, fp, y, rule)


def fibonacci_transform_analytic(fp: FourierParams, y: float, dps: Optional[int] = None):
    """sum_k c^F_{n,k} s^k a^(n-2k) exp(-(kappa (n-2k) + y)² / 2), quadrature free."""
    return _transform_analytic(FIBONACCI, fp, y, dps)


def fibonacci_transform_rhs(fp: FourierParams, y: float, dps: Optional[int] = None):
    """(pq)^(n²/4) F_(n+1)(a e^(-kappa y), pq s | p⁻¹, q⁻¹) e^(-y²/2)."""
    return _transform_rhs(FIBONACCI, fp, y, dps, shift_s=False)


def lucas_transform_lhs(fp: FourierParams, y: float, rule: Optional[QuadratureRule] = None) -> complex:
    return _transform_lhs(LUCAS, fp, y, rule)


def lucas_transform_analytic(fp: FourierParams, y: float, dps: Optional[int] = None):
    return _transform_analytic(LUCAS, fp, y, dps)


def lucas_transform_rhs(fp: FourierParams, y: float, dps: Optional[int] = None, as_printed: bool = False):
    """
    (pq)^(n²/4) L_n(b e^(-kappa y), s | p⁻¹, q⁻¹) e^(-y²/2).

    ``as_printed=True`` uses s/(pq) as the second argument, which is off by
    (pq)^-k in every term.
    """
    return _transform_rhs(LUCAS, fp, y, dps, shift_s=as_printed)


def _windowed_analytic(family: str, fp: FourierParams) -> Callable[[np.ndarray], np.ndarray]:
    """y -> analytic transform at y times e^(y²/2), vectorized over y."""
    params = fp.params
    coefficient = fib_coefficient if family == FIBONACCI else lucas_coefficient
    n, a, kappa = fp.n, fp.amplitude, fp.kappa
    terms = [(coefficient(n, k, params) * fp.s**k * a ** (n - 2 * k), n - 2 * k) for k in range(n // 2 + 1)]

    def windowed(y: np.ndarray) -> np.ndarray:
        # e^(-(kappa m + y)²/2) e^(y²/2) = e^(-(kappa m)²/2 - kappa m y)
        return sum(weight * np.exp(-((kappa * m) ** 2) / 2 - kappa * m * y) for weight, m in terms)

    return windowed


def recovery_double_integral(family: str, fp: FourierParams, rule: Optional[QuadratureRule] = None) -> complex:
    """
    (1/2 pi) ∬ P(a e^(i kappa x)) e^(ixy - x²/2) dx dy for P = F_(n+1) or L_n.

    The inner integral is the transform itself, taken in its quadrature-free
    Gaussian-shift form; the outer integral runs the same Gaussian-weighted
    rule at zero frequency on that transform times e^(y²/2).
    """
    family = normalize_family(family)
    return weighted_fourier_quadrature(_windowed_analytic(family, fp), 0.0, rule)


def recovery_direct(family: str, fp: FourierParams) -> float:
    """F_(n+1)(a, s | p, q) or L_n(b, s | p, q) by direct evaluation."""
    return _poly(normalize_family(family), fp).evaluate(fp.amplitude)


def relative_residual(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / (abs(rhs) + 1e-30)


def residual_at(family: str, fp: FourierParams, y: float, rule: Optional[QuadratureRule] = None):
    """(theorem residual, quadrature-vs-analytic residual) at one y."""
    family = normalize_family(family)
    if family == FIBONACCI:
        lhs = fibonacci_transform_lhs(fp, y, rule)
        analytic = fibonacci_transform_analytic(fp, y)
        rhs = fibonacci_transform_rhs(fp, y)
    else:
        lhs = lucas_transform_lhs(fp, y, rule)
        analytic = lucas_transform_analytic(fp, y)
        rhs = lucas_transform_rhs(fp, y)
    return relative_residual(lhs, rhs), abs(lhs - analytic)


