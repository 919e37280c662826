"""(p,q)-hypergeometric series and the hypergeometric forms of F and L.

The general series is

    rphis = sum_k prod ((a_i,b_i);(p,q))_k / prod ((c_j,d_j);(p,q))_k
                  * [(-1)^k (q/p)^C(k,2)]^(1+s-r) / ((p,q);(p,q))_k * z^k

Entries written as a bare "0" in a parameter list are unit placeholders:
they contribute 1 to every product but still count toward r and s.
"""

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

import mpmath

from pqfib.errors import ConvergenceError, DomainError, ParameterError
from pqfib.pq_arithmetic import (
    FIBONACCI,
    PQParams,
    Scalar,
    exact_sqrt,
    is_mp,
    normalize_family,
    promote,
)

DEFAULT_DPS = 64


class SeriesMode(str, Enum):
    EXACT_TERMINATING = "exact_terminating"
    NUMERIC_TRUNCATED = "numeric_truncated"
    # Fixed number of terms over any ring (used with TruncatedSeries scalars)
    FORMAL = "formal"


@dataclass(frozen=True)
class SeriesControl:
    """How far and how precisely a series is summed."""

    max_terms: int = 200
    relative_tolerance: float = 1e-15
    zero_tolerance: float = 1e-12
    mode: SeriesMode = SeriesMode.EXACT_TERMINATING

    def __post_init__(self):
        if self.max_terms < 1:
            raise ParameterError("max_terms must be >= 1")
        if self.relative_tolerance < 0 or self.zero_tolerance < 0:
            raise ParameterError("tolerances must be nonnegative")


@dataclass(frozen=True)
class ParamPair:
    """An (a, b) parameter entry, or a unit placeholder."""

    a: Scalar = None
    b: Scalar = None
    placeholder: bool = False

    @classmethod
    def explicit(cls, a: Scalar, b: Scalar) -> "ParamPair":
        return cls(a=a, b=b)

    @classmethod
    def unit(cls) -> "ParamPair":
        return cls(placeholder=True)

    def factor(self, params: PQParams, k: int) -> Scalar:
        """The k-th factor a p^k - b q^k of ((a,b);(p,q))_n."""
        if self.placeholder:
            return 1
        return self.a * params.p**k - self.b * params.q**k

    def magnitude(self, params: PQParams, k: int) -> float:
        if self.placeholder:
            return 1.0
        return max(abs(self.a * params.p**k), abs(self.b * params.q**k))

    def describe(self) -> str:
        if self.placeholder:
            return "0"
        return f"({self.a}, {self.b})"


@dataclass(frozen=True)
class HypergeometricSpec:
    numerator: Tuple[ParamPair, ...]
    denominator: Tuple[ParamPair, ...]
    params: PQParams

    @property
    def r(self) -> int:
        return len(self.numerator)

    @property
    def s(self) -> int:
        return len(self.denominator)

    @property
    def exponent(self) -> int:
        """The power 1 + s - r on the sign/(q/p) prefactor."""
        return 1 + self.s - self.r

    @property
    def name(self) -> str:
        return f"{self.r}phi{self.s}"


def make_spec(
    numerator: Sequence[Optional[Tuple[Scalar, Scalar]]],
    denominator: Sequence[Optional[Tuple[Scalar, Scalar]]],
    params: PQParams,
) -> HypergeometricSpec:
    """Build a spec from (a, b) tuples, with None standing for a placeholder."""

    def convert(entry):
        if isinstance(entry, ParamPair):
            return entry
        return ParamPair.unit() if entry is None else ParamPair.explicit(*entry)

    return HypergeometricSpec(
        numerator=tuple(convert(e) for e in numerator),
        denominator=tuple(convert(e) for e in denominator),
        params=params,
    )


def _vanishes(value: Scalar, scale: Callable[[], float], ctrl: SeriesControl) -> bool:
    # Numeric factors are zero relative to the size of what cancelled.
    if ctrl.mode is SeriesMode.NUMERIC_TRUNCATED:
        return abs(value) <= ctrl.zero_tolerance * scale()
    return value == 0


def hypergeometric_terms(spec: HypergeometricSpec, z: Scalar, ctrl: Optional[SeriesControl] = None) -> List[Scalar]:
    """
    The terms of the series, each built from the previous by its ratio.

    Summation stops as soon as a numerator factor vanishes (the series
    terminates there), or according to ``ctrl.mode`` once ``max_terms`` terms
    are in hand.

    Raises:
        DomainError: a denominator factor vanishes first, or an exact series
            does not terminate within ``max_terms``
        ConvergenceError: a numeric series does not settle within ``max_terms``
    """
    ctrl = ctrl or SeriesControl()
    params = spec.params
    p, q = params.p, params.q
    exponent = spec.exponent

    term: Scalar = 1
    terms: List[Scalar] = [term]
    if z == 0:
        return terms
    total: Scalar = term
    settled = 0

    for k in itertools.count():
        factors = [pair.factor(params, k) for pair in spec.numerator]
        for pair, value in zip(spec.numerator, factors):
            if _vanishes(value, lambda: pair.magnitude(params, k), ctrl):
                return terms

        if len(terms) >= ctrl.max_terms:
            if ctrl.mode is SeriesMode.FORMAL:
                return terms
            if ctrl.mode is SeriesMode.EXACT_TERMINATING:
                raise DomainError(f"{spec.name} series did not terminate within {ctrl.max_terms} terms")
            raise ConvergenceError(f"{spec.name} series did not converge within {ctrl.max_terms} terms")

        ratio: Scalar = 1
        for value in factors:
            ratio = ratio * value
        for pair in spec.denominator:
            value = pair.factor(params, k)
            if _vanishes(value, lambda: pair.magnitude(params, k), ctrl):
                raise DomainError(f"denominator pair {pair.describe()} vanishes at index {k}")
            ratio = ratio / value

        base = p ** (k + 1) - q ** (k + 1)
        if _vanishes(base, lambda: max(abs(p ** (k + 1)), abs(q ** (k + 1))), ctrl):
            raise DomainError(f"((p,q);(p,q))_{k + 1} vanishes: p^{k + 1} = q^{k + 1}")

        if exponent:
            ratio = ratio * (-((q / p) ** k)) ** exponent
        term = term * (ratio / base * z)
        terms.append(term)

        if ctrl.mode is SeriesMode.NUMERIC_TRUNCATED:
            total = total + term
            if abs(term) <= ctrl.relative_tolerance * abs(total):
                settled += 1
                if settled >= 2:
                    return terms
            else:
                settled = 0

    return terms  # pragma: no cover


def evaluate_rphi_s(spec: HypergeometricSpec, z: Scalar, ctrl: Optional[SeriesControl] = None) -> Scalar:
    """Sum of ``hypergeometric_terms``; z = 0 gives exactly 1."""
    terms = hypergeometric_terms(spec, z, ctrl)
    total = terms[0]
    for term in terms[1:]:
        total = total + term
    return total


def square_roots(params: PQParams) -> Optional[Tuple[Scalar, Scalar]]:
    """
    (sqrt p, sqrt q) when they can be used: rational roots for exact
    parameters, mpmath roots for positive mpmath parameters, else None.
    """
    if params.exact:
        rp, rq = exact_sqrt(params.p), exact_sqrt(params.q)
        if rp is None or rq is None:
            return None
        return rp, rq
    if is_mp(params.p) and _positive(params.p) and _positive(params.q):
        return mpmath.sqrt(params.p), mpmath.sqrt(params.q)
    return None


def _positive(value: Scalar) -> bool:
    try:
        return value > 0
    except TypeError:
        return False


def _half_power_pairs(rp: Scalar, rq: Scalar, n: int, p_one: bool = False) -> List[ParamPair]:
    """(p^(-n/2), ±q^(-n/2)) and (p^((1-n)/2), ±q^((1-n)/2))."""
    a0, b0 = rp ** (-n), rq ** (-n)
    a1, b1 = rp ** (1 - n), rq ** (1 - n)
    if p_one:
        a0 = a1 = 1
    return [
        ParamPair.explicit(a0, b0),
        ParamPair.explicit(a1, b1),
        ParamPair.explicit(a0, -b0),
        ParamPair.explicit(a1, -b1),
    ]


def _roots_or_raise(params: PQParams, roots: Optional[Tuple[Scalar, Scalar]]) -> Tuple[Scalar, Scalar]:
    roots = roots or square_roots(params)
    if roots is None:
        raise ParameterError(
            "hypergeometric forms need square roots of p and q: use perfect-square rationals "
            "or positive parameters"
        )
    return roots


def _eight_phi_five(n: int, x: Scalar, s: Scalar, params: PQParams, roots, lucas: bool):
    rp, rq = _roots_or_raise(params, roots)
    p, q = params.p, params.q
    shift = 1 - n if lucas else -n
    numerator = _half_power_pairs(rp, rq, n) + [ParamPair.unit()] * 4
    denominator = [ParamPair.explicit(p**shift, q**shift)] + [ParamPair.explicit(p, 0)] * 4
    z = -s * q**n * p ** (n + 4) / x**2
    return HypergeometricSpec(tuple(numerator), tuple(denominator), params), z


def fibonacci_8phi5_spec(n: int, x: Scalar, s: Scalar, params: PQParams, roots=None):
    """Spec and argument of the 8phi5 whose x^n multiple is F_(n+1)(x, s)."""
    return _eight_phi_five(n, x, s, params, roots, lucas=False)


def lucas_8phi5_spec(n: int, x: Scalar, s: Scalar, params: PQParams, roots=None):
    """Spec and argument of the 8phi5 whose x^n multiple is L_n(x, s)."""
    return _eight_phi_five(n, x, s, params, roots, lucas=True)


def _four_phi_three(n: int, x: Scalar, s: Scalar, params: PQParams, roots, lucas: bool):
    rp, rq = _roots_or_raise(params, roots)
    p, q = params.p, params.q
    shift = 1 - n if lucas else -n
    numerator = _half_power_pairs(rp, rq, n)
    denominator = [ParamPair.explicit(p**shift, q**shift), ParamPair.unit(), ParamPair.unit()]
    z = -s * p * q / x**2 if lucas else -s / x**2
    return HypergeometricSpec(tuple(numerator), tuple(denominator), params), z


def inverse_fibonacci_4phi3_spec(n: int, x: Scalar, s: Scalar, params: PQParams, roots=None):
    """Spec and argument of the 4phi3 whose x^n multiple is F_(n+1)(x, s | p⁻¹, q⁻¹)."""
    return _four_phi_three(n, x, s, params, roots, lucas=False)


def inverse_lucas_4phi3_spec(n: int, x: Scalar, s: Scalar, params: PQParams, roots=None):
    """Spec and argument of the 4phi3 whose x^n multiple is L_n(x, s | p⁻¹, q⁻¹)."""
    return _four_phi_three(n, x, s, params, roots, lucas=True)


def _q_four_phi_one(n: int, x: Scalar, s: Scalar, params: PQParams, roots, lucas: bool):
    _, rq = _roots_or_raise(params, roots)
    q = params.q
    shift = 1 - n if lucas else -n
    numerator = _half_power_pairs(1, rq, n, p_one=True)
    denominator = [ParamPair.explicit(1, q**shift)]
    z = -s * q**n / x**2
    return HypergeometricSpec(tuple(numerator), tuple(denominator), params), z


def _check_distinct_powers(params: PQParams, n: int) -> None:
    # With p^j = q^j a numerator pair vanishes at k = 0 and hides the zero ((p,q);(p,q))_j.
    for j in range(1, n // 2 + 1):
        if params.p**j == params.q**j:
            raise DomainError(f"p^{j} = q^{j}: the hypergeometric forms need p^j != q^j for j <= {n // 2}")


SpecBuilder = Callable[..., Tuple[HypergeometricSpec, Scalar]]


def _evaluate_representation(
    builder: SpecBuilder,
    n: int,
    x: Scalar,
    s: Scalar,
    params: PQParams,
    ctrl: Optional[SeriesControl],
    dps: int,
) -> Scalar:
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    if x == 0:
        raise DomainError("hypergeometric forms divide by x^2; x must be nonzero")
    _check_distinct_powers(params, n)

    if params.exact:
        roots = square_roots(params)
        if roots is not None:
            x, s = params.scalar(x), params.scalar(s)
            spec, z = builder(n, x, s, params, roots)
            ctrl = ctrl or SeriesControl(mode=SeriesMode.EXACT_TERMINATING)
            return x**n * evaluate_rphi_s(spec, z, ctrl)

    if not (_positive(params.p) and _positive(params.q)):
        raise ParameterError("irrational square roots need positive real p and q")

    with mpmath.workdps(dps):
        mp_params = PQParams(mpmath.mpmathify(params.p), mpmath.mpmathify(params.q))
        x, s = mp_params.scalar(x), mp_params.scalar(s)
        spec, z = builder(n, x, s, mp_params, square_roots(mp_params))
        ctrl = ctrl or SeriesControl(mode=SeriesMode.NUMERIC_TRUNCATED, relative_tolerance=0.0)
        value = x**n * evaluate_rphi_s(spec, z, ctrl)
    return value


def fibonacci_as_hypergeometric(
    n: int, x: Scalar, s: Scalar, params: PQParams, ctrl: Optional[SeriesControl] = None, dps: int = DEFAULT_DPS
) -> Scalar:
    """
    F_(n+1)(x, s | p, q) = x^n 8phi5(...; -s q^n p^(n+4) / x^2).

    Exact when sqrt(p) and sqrt(q) are rational, otherwise evaluated with
    mpmath at ``dps`` digits (positive p, q only).
    """
    return _evaluate_representation(fibonacci_8phi5_spec, n, x, s, params, ctrl, dps)


def lucas_as_hypergeometric(
    n: int, x: Scalar, s: Scalar, params: PQParams, ctrl: Optional[SeriesControl] = None, dps: int = DEFAULT_DPS
) -> Scalar:
    """L_n(x, s | p, q) through the 8phi5 with denominator (p^(1-n), q^(1-n))."""
    return _evaluate_representation(lucas_8phi5_spec, n, x, s, params, ctrl, dps)


def inverse_fibonacci_as_4phi3(
    n: int, x: Scalar, s: Scalar, params: PQParams, ctrl: Optional[SeriesControl] = None, dps: int = DEFAULT_DPS
) -> Scalar:
    return _evaluate_representation(inverse_fibonacci_4phi3_spec, n, x, s, params, ctrl, dps)


def inverse_lucas_as_4phi3(
    n: int, x: Scalar, s: Scalar, params: PQParams, ctrl: Optional[SeriesControl] = None, dps: int = DEFAULT_DPS
) -> Scalar:
    return _evaluate_representation(inverse_lucas_4phi3_spec, n, x, s, params, ctrl, dps)


def inverse_fibonacci_number_4phi3(n: int, params: PQParams, dps: int = DEFAULT_DPS) -> Scalar:
    """F_(n+1)(1, 1 | p⁻¹, q⁻¹)."""
    return inverse_fibonacci_as_4phi3(n, 1, 1, params, dps=dps)


def inverse_lucas_number_4phi3(n: int, params: PQParams, dps: int = DEFAULT_DPS) -> Scalar:
    """L_n(1, 1 | p⁻¹, q⁻¹)."""
    return inverse_lucas_as_4phi3(n, 1, 1, params, dps=dps)


def q_limit_spec(family: str, n: int, x: Scalar, s: Scalar, q: Scalar, roots=None):
    """The 4phi1 at p = 1 for either family."""
    params = PQParams(1, q)
    lucas = normalize_family(family) != FIBONACCI
    return _q_four_phi_one(n, x, s, params, roots, lucas)


def q_limit_representations(
    family: str, n: int, x: Scalar, s: Scalar, q: Scalar, ctrl: Optional[SeriesControl] = None, dps: int = DEFAULT_DPS
) -> Scalar:
    """F_(n+1)(x, s | 1, q) or L_n(x, s | 1, q) through the q-hypergeometric 4phi1."""
    lucas = normalize_family(family) != FIBONACCI

    def builder(n, x, s, params, roots):
        return _q_four_phi_one(n, x, s, params, roots, lucas)

    builder.__name__ = "q_four_phi_one"
    return _evaluate_representation(builder, n, x, s, PQParams(1, q), ctrl, dps)


def evaluate_pfq(
    numerator: Sequence[Scalar], denominator: Sequence[Scalar], z: Scalar, max_terms: int = 500
) -> Scalar:
    """
    Terminating generalized hypergeometric series pFq(a; b; z).

    A numerator entry that reaches zero ends the series; a denominator entry
    reaching zero first is a DomainError.
    """
    term: Scalar = 1
    total: Scalar = 1
    for k in range(max_terms):
        rising = [a + k for a in numerator]
        if any(value == 0 for value in rising):
            return total
        ratio: Scalar = 1
        for value in rising:
            ratio = ratio * value
        for b in denominator:
            if b + k == 0:
                raise DomainError(f"denominator parameter {b} reaches zero at index {k}")
            ratio = ratio / (b + k)
        term = term * ratio * z / (k + 1)
        total = total + term
    raise DomainError(f"pFq series did not terminate within {max_terms} terms")


def classical_hypergeometric(family: str, n: int, x: Scalar, s: Scalar) -> Scalar:
    """
    The p = q = 1 limit x^n 2F1(-n/2, (1-n)/2; c; -4s/x^2) with c = -n for
    F_(n+1) and c = 1-n for L_n.
    """
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    x, s = promote(x), promote(s)
    if x == 0:
        raise DomainError("x must be nonzero")
    lucas = normalize_family(family) != FIBONACCI
    half = Fraction(1, 2)
    numerator = [-n * half, (1 - n) * half]
    denominator = [Fraction(1 - n) if lucas else Fraction(-n)]
    return x**n * evaluate_pfq(numerator, denominator, -4 * s / x**2)
