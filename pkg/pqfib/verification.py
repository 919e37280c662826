"""Seeded verification sweeps behind ``pqfib verify``.

Each suite checks one family of identities over randomly drawn parameters and
returns a SuiteReport. Identity failures are data, not exceptions; reports
contain no timings so that repeated runs serialize identically.
"""

import math
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

import mpmath

from pqfib.config import PqfibConfig, get_typed_config
from pqfib.fourier import (
    Y_GRID,
    FourierParams,
    gauss_hermite_rule,
    lucas_transform_rhs,
    recovery_direct,
    recovery_double_integral,
    relative_residual,
    residual_at,
)
from pqfib.generating_functions import (
    classical_genfunc,
    fib_genfunc_closed,
    fib_genfunc_definitional,
    fib_genfunc_q_limit,
    lucas_genfunc_closed,
    lucas_genfunc_definitional,
    lucas_genfunc_q_limit,
    number_genfunc,
)
from pqfib.hypergeometric import (
    classical_hypergeometric,
    fibonacci_8phi5_spec,
    fibonacci_as_hypergeometric,
    hypergeometric_terms,
    inverse_fibonacci_as_4phi3,
    inverse_lucas_as_4phi3,
    lucas_as_hypergeometric,
    q_limit_representations,
)
from pqfib.logger import log_action
from pqfib.performance import get_monitor
from pqfib.polynomials import (
    check_derivative_relation,
    classical_fibonacci_poly,
    classical_lucas_poly,
    classical_number_formula,
    classical_recurrence_poly,
    fibonacci_number,
    fibonacci_poly,
    fibonacci_sequence_recursive,
    inverse_param_poly,
    inverse_param_poly_direct,
    lucas_from_fibonacci,
    lucas_number,
    lucas_poly,
    q_fibonacci_poly,
    q_lucas_poly,
)
from pqfib.pq_arithmetic import (
    FIBONACCI,
    IDENTITY_ANCHORS,
    IDENTITY_FORMULAS,
    LUCAS,
    PQParams,
    binomial_inversion_holds,
    classical_binomial,
    factorial_shift_holds,
    pq_binomial,
    pq_number,
    q_binomial,
    q_number,
    quadratic_split_holds,
    verify_binomial_identities,
)

SUITES = ("binomials", "recursions", "hypergeometric", "genfunc", "numbers", "derivative", "limits", "fourier")
MAX_LISTED_FAILURES = 5
RECURSION_ANCHORS = {
    "A": "Fibonacci recursion, q-shifted s",
    "B": "Fibonacci recursion, p-shifted s",
    "C": "Fibonacci recursion with the Jackson derivative",
}


class CheckStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"


@dataclass
class CheckResult:
    """One identity checked over every case of a suite."""

    name: str
    identity: str
    anchor: str = ""
    cases: int = 0
    failures: List[str] = field(default_factory=list)
    failure_count: int = 0
    metrics: Dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> CheckStatus:
        return CheckStatus.PASS if self.failure_count == 0 else CheckStatus.FAIL

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    def record(self, ok: bool, case: str) -> None:
        self.cases += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_LISTED_FAILURES:
                self.failures.append(case)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "identity": self.identity,
            "anchor": self.anchor,
            "status": self.status.value,
            "cases": self.cases,
            "failure_count": self.failure_count,
            "failures": list(self.failures),
            "metrics": dict(self.metrics),
        }


@dataclass
class SuiteReport:
    suite: str
    seed: int
    n_max: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str, identity: str, anchor: str = "") -> CheckResult:
        result = CheckResult(name=name, identity=identity, anchor=anchor)
        self.checks.append(result)
        return result

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "n_max": self.n_max,
            "status": CheckStatus.PASS.value if self.passed else CheckStatus.FAIL.value,
            "checks": [c.to_dict() for c in self.checks],
        }


# Seeded parameter generators

def random_rational(rng: random.Random, max_num: int = 9, max_den: int = 5, positive: bool = False) -> Fraction:
    """Nonzero rational num/den with small numerator and denominator."""
    num = rng.randint(1, max_num)
    if not positive and rng.random() < 0.5:
        num = -num
    return Fraction(num, rng.randint(1, max_den))


def random_params(rng: random.Random) -> PQParams:
    """Nonzero rational (p, q) with |p| != |q|, so no p^j = q^j."""
    while True:
        p, q = random_rational(rng), random_rational(rng)
        if abs(p) != abs(q):
            return PQParams(p, q)


def random_square_params(rng: random.Random) -> PQParams:
    """Distinct positive perfect-square rationals, so half powers stay rational."""
    while True:
        rp = random_rational(rng, max_num=4, max_den=3, positive=True)
        rq = random_rational(rng, max_num=4, max_den=3, positive=True)
        if rp != rq:
            return PQParams(rp * rp, rq * rq)


def random_square_q(rng: random.Random) -> Fraction:
    """A positive perfect-square rational other than 1."""
    while True:
        root = random_rational(rng, max_num=4, max_den=3, positive=True)
        if root != 1:
            return root * root


def random_positive_params(rng: random.Random) -> PQParams:
    """Distinct positive rationals that are not both perfect squares."""
    while True:
        p = Fraction(rng.randint(5, 30), 10)
        q = Fraction(rng.randint(5, 30), 10)
        if p != q and not (_is_square(p) and _is_square(q)):
            return PQParams(p, q)


def _is_square(value: Fraction) -> bool:
    return all(math.isqrt(part) ** 2 == part for part in (value.numerator, value.denominator))


def random_q(rng: random.Random) -> Fraction:
    """A rational q off the roots of unity (q != 0, ±1)."""
    while True:
        q = random_rational(rng)
        if abs(q) != 1:
            return q


def _case(**values: Any) -> str:
    return ", ".join(f"{k}={v}" for k, v in values.items())


# Suites

def suite_binomials(report: SuiteReport, rng: random.Random, config: PqfibConfig) -> None:
    n_max = report.n_max
    checks = {
        label: report.check(label, formula, IDENTITY_ANCHORS[label]) for label, formula in IDENTITY_FORMULAS.items()
    }
    symmetry = report.check("symmetry", "[n,k] = [n,n-k]", "(p,q)-binomial symmetry")
    inversion = report.check(
        "inversion", "[n-k,k](p⁻¹,q⁻¹) = (pq)^(k(2k-n)) [n-k,k](p,q)", "(p,q)-binomial at inverse parameters"
    )
    shift = report.check(
        "factorial_shift",
        "((p,q);(p,q))_(n-k) = ((p,q);(p,q))_n / ((p^-n,q^-n);(p,q))_k (-1)^k (pq)^(C(k,2)-nk)",
        "shifted factorial reversal",
    )
    split = report.check(
        "quadratic_split",
        "((p^n,q^n);(p,q))_2k = product of four k-length factorials",
        "quadratic factorial splitting",
    )

    for _ in range(config.random_parameter_sets):
        params = random_params(rng)
        identities = verify_binomial_identities(n_max, params)
        failed = {(n, k, label) for n, k, label in identities.failures}
        for n in range(1, n_max + 1):
            for k in range(n // 2 + 1):
                for label, check in checks.items():
                    if label.startswith("lucas") and (k == 0 or pq_number(n - k, params) == 0):
                        continue
                    check.record((n, k, label) not in failed, _case(p=params.p, q=params.q, n=n, k=k))

        for n in range(n_max + 1):
            for k in range(n + 1):
                symmetry.record(
                    pq_binomial(n, k, params) == pq_binomial(n, n - k, params),
                    _case(p=params.p, q=params.q, n=n, k=k),
                )
            for k in range(n // 2 + 1):
                inversion.record(binomial_inversion_holds(n, k, params), _case(p=params.p, q=params.q, n=n, k=k))
        for n in range(min(n_max, 20) + 1):
            for k in range(n + 1):
                shift.record(factorial_shift_holds(n, k, params), _case(p=params.p, q=params.q, n=n, k=k))

        squares = random_square_params(rng)
        for n in range(min(n_max, 12) + 1):
            for k in range(7):
                split.record(quadratic_split_holds(n, k, squares), _case(p=squares.p, q=squares.q, n=n, k=k))


def suite_recursions(report: SuiteReport, rng: random.Random, config: PqfibConfig) -> None:
    n_max = report.n_max
    variants = {
        v: report.check(f"fibonacci_{v}", f"F_n by recursion variant {v} = direct sum", RECURSION_ANCHORS[v])
        for v in "ABC"
    }
    lucas_a = report.check(
        "lucas_A", "L_n(x,s) = F_(n+1)(x,s/p) + s p^(n-1) F_(n-1)(x,s/p)", "Lucas from Fibonacci at s/p"
    )
    lucas_b = report.check(
        "lucas_B", "L_n(x,sq/p) = F_(n+1)(x,s/p) + s p^-1 q^n F_(n-1)(x,s/p)", "Lucas from Fibonacci at sq/p"
    )

    for _ in range(config.random_parameter_sets):
        params = random_params(rng)
        s = random_rational(rng)
        direct = [fibonacci_poly(n, params, s) for n in range(n_max + 1)]
        for variant, check in variants.items():
            built = fibonacci_sequence_recursive(n_max, params, s, variant)
            for n in range(n_max + 1):
                check.record(built[n] == direct[n], _case(p=params.p, q=params.q, s=s, n=n))
        for n in range(1, n_max + 1):
            lucas_a.record(
                lucas_from_fibonacci(n, params, s, "A") == lucas_poly(n, params, s),
                _case(p=params.p, q=params.q, s=s, n=n),
            )
            lucas_b.record(
                lucas_from_fibonacci(n, params, s, "B") == lucas_poly(n, params, s * params.q / params.p),
                _case(p=params.p, q=params.q, s=s, n=n),
            )


def _mp_relative(value, reference, dps: int) -> float:
    with mpmath.workdps(dps):
        reference = mpmath.mpmathify(reference)
        return float(abs(mpmath.mpmathify(value) - reference) / (abs(reference) + mpmath.mpf("1e-60")))


def suite_hypergeometric(report: SuiteReport, rng: random.Random, config: PqfibConfig) -> None:
    n_max = config.hypergeometric_n_max
    exact_forms: List[Tuple[str, str, str, Callable, Callable]] = [
        ("fibonacci_8phi5", "F_(n+1) = x^n 8phi5(...; -s q^n p^(n+4)/x^2)", "Fibonacci as a terminating 8phi5",
         fibonacci_as_hypergeometric, lambda n, params, s: fibonacci_poly(n + 1, params, s)),
        ("lucas_8phi5", "L_n = x^n 8phi5(...; (p^(1-n),q^(1-n)), ...)", "Lucas as a terminating 8phi5",
         lucas_as_hypergeometric, lambda n, params, s: lucas_poly(n, params, s)),
        ("inverse_fibonacci_4phi3", "F_(n+1)(p⁻¹,q⁻¹) = x^n 4phi3(...; -s/x^2)",
         "Fibonacci at inverse parameters as a 4phi3", inverse_fibonacci_as_4phi3,
         lambda n, params, s: inverse_param_poly(FIBONACCI, n + 1, params, s)),
        ("inverse_lucas_4phi3", "L_n(p⁻¹,q⁻¹) = x^n 4phi3(...; -s p q/x^2)",
         "Lucas at inverse parameters as a 4phi3", inverse_lucas_as_4phi3,
         lambda n, params, s: inverse_param_poly(LUCAS, n, params, s)),
    ]
    exact_checks = {
        name: report.check(f"{name}_exact", formula, anchor) for name, formula, anchor, _, _ in exact_forms
    }
    float_checks = {
        name: report.check(f"{name}_float", formula, f"{anchor}, irrational half powers")
        for name, formula, anchor, _, _ in exact_forms
    }
    termination = report.check(
        "termination", "8phi5 terminates after floor(n/2)+1 terms", "termination of the 8phi5 series"
    )
    q_limit = report.check(
        "q_limit_4phi1", "p = 1: F_(n+1), L_n as q-hypergeometric 4phi1", "q-limit hypergeometric forms"
    )
    classical = report.check(
        "classical_2F1",
        "p = q = 1: x^n 2F1(-n/2, (1-n)/2; -n or 1-n; -4s/x^2)",
        "classical Gauss hypergeometric forms",
    )

    for _ in range(config.random_parameter_sets):
        params = random_square_params(rng)
        x, s = random_rational(rng), random_rational(rng)
        for n in range(n_max + 1):
            case = _case(p=params.p, q=params.q, x=x, s=s, n=n)
            for name, _, _, represent, direct in exact_forms:
                exact_checks[name].record(represent(n, x, s, params) == direct(n, params, s).evaluate(x), case)
            spec, z = fibonacci_8phi5_spec(n, x, s, params)
            termination.record(len(hypergeometric_terms(spec, z)) == n // 2 + 1, case)

        q = random_square_q(rng)
        for n in range(n_max + 1):
            case = _case(q=q, x=x, s=s, n=n)
            q_limit.record(
                q_limit_representations(FIBONACCI, n, x, s, q) == q_fibonacci_poly(n + 1, q, s).evaluate(x)
                and q_limit_representations(LUCAS, n, x, s, q) == q_lucas_poly(n, q, s).evaluate(x),
                case,
            )
            classical.record(
                classical_hypergeometric(FIBONACCI, n, x, s) == classical_fibonacci_poly(n + 1, s).evaluate(x)
                and classical_hypergeometric(LUCAS, n, x, s) == classical_lucas_poly(n, s).evaluate(x),
                case,
            )

    worst = {name: 0.0 for name in float_checks}
    for _ in range(max(1, config.random_parameter_sets // 2)):
        params = random_positive_params(rng)
        x, s = random_rational(rng), random_rational(rng)
        for n in range(1, n_max, 2):
            case = _case(p=params.p, q=params.q, x=x, s=s, n=n)
            for name, _, _, represent, direct in exact_forms:
                value = represent(n, x, s, params, dps=config.mp_dps)
                error = _mp_relative(value, direct(n, params, s).evaluate(x), config.mp_dps)
                worst[name] = max(worst[name], error)
                float_checks[name].record(error <= config.numeric_tolerance, case)
    for name, check in float_checks.items():
        check.metrics["max_relative_error"] = worst[name]


def suite_genfunc(report: SuiteReport, rng: random.Random, config: PqfibConfig) -> None:
    order = config.default_order
    fib = report.check(
        "fibonacci_closed",
        "t/(1-xt) 2phi2((p,q),0; (p,xtq),(p,0) | -qst^2) = sum F_n(x,sp^-n) t^n",
        "Fibonacci generating function closed form",
    )
    lucas = report.check(
        "lucas_closed",
        "1/(1-xt) [Phi(s) + (st^2/p) Phi(s/p^2)] = sum L_n(x,sp^-n) t^n",
        "Lucas generating function closed form",
    )
    q_limit = report.check(
        "q_limit_1phi1",
        "p = 1 closed forms = t/(1-xt), (1+st^2)/(1-xt) times 1phi1",
        "q-limit generating functions",
    )
    classical = report.check(
        "classical",
        "p = q = 1: t/(1-xt-st^2), (1+st^2)/(1-xt-st^2)",
        "classical generating functions",
    )
    numbers = report.check(
        "number_sequences",
        "p = q = 1, x = s = 1: 0,1,1,2,3,5,8 and 1,1,3,4,7,11",
        "Fibonacci and Lucas number sequences",
    )

    for _ in range(config.genfunc_parameter_sets):
        params = random_params(rng)
        x, s = random_rational(rng), random_rational(rng)
        case = _case(p=params.p, q=params.q, x=x, s=s, order=order)
        fib.record(fib_genfunc_closed(x, s, params, order) == fib_genfunc_definitional(x, s, params, order), case)
        lucas.record(
            lucas_genfunc_closed(x, s, params, order) == lucas_genfunc_definitional(x, s, params, order), case
        )

        q = random_q(rng)
        at_one = PQParams(1, q)
        q_limit.record(
            fib_genfunc_closed(x, s, at_one, order) == fib_genfunc_q_limit(x, s, q, order)
            and lucas_genfunc_closed(x, s, at_one, order) == lucas_genfunc_q_limit(x, s, q, order),
            _case(q=q, x=x, s=s, order=order),
        )

        unit = PQParams(1, 1)
        classical.record(
            fib_genfunc_closed(x, s, unit, order) == classical_genfunc(FIBONACCI, x, s, order)
            and lucas_genfunc_closed(x, s, unit, order) == classical_genfunc(LUCAS, x, s, order),
            _case(x=x, s=s, order=order),
        )

    unit = PQParams(1, 1)
    numbers.record(list(number_genfunc(FIBONACCI, unit, 6).coeffs) == [0, 1, 1, 2, 3, 5, 8], "fibonacci")
    numbers.record(list(number_genfunc(LUCAS, unit, 5).coeffs) == [1, 1, 3, 4, 7, 11], "lucas")


def suite_numbers(report: SuiteReport, rng: random.Random, config: PqfibConfig) -> None:
    unit = PQParams(1, 1)
    fib = report.check(
        "fibonacci_formula",
        "F_n = 2^(1-n) sum C(n,2k+1) 5^k",
        "Binet-type sum for Fibonacci numbers",
    )
    lucas = report.check(
        "lucas_formula",
        "L_n = 2^(1-n) sum C(n,2k) 5^k, n >= 1",
        "Binet-type sum for Lucas numbers",
    )
    for n in range(1, report.n_max + 1):
        fib.record(fibonacci_number(n, unit) == classical_number_formula(FIBONACCI, n), _case(n=n))
        lucas.record(lucas_number(n, unit) == classical_number_formula(LUCAS, n), _case(n=n))


def suite_derivative(report: SuiteReport, rng: random.Random, config: PqfibConfig) -> None:
    check = report.check(
        "derivative",
        "D L_n(x,s) = [n] F_n(x, s/(pq))",
        "Jackson derivative of Lucas polynomials",
    )
    for _ in range(config.random_parameter_sets):
        params = random_params(rng)
        s = random_rational(rng)
        for n in range(report.n_max + 1):
            check.record(check_derivative_relation(n, params, s), _case(p=params.p, q=params.q, s=s, n=n))


def suite_limits(report: SuiteReport, rng: random.Random, config: PqfibConfig) -> None:
    n_max = min(report.n_max, 20)
    numbers = report.check("q_number", "[n]_(1,q) = (1-q^n)/(1-q); [n]_(1,1) = n", "(p,q)-numbers at p = 1")
    binomials = report.check(
        "q_binomial",
        "[n,k]_(1,q) = Gaussian binomial; [n,k]_(1,1) = C(n,k)",
        "(p,q)-binomials at p = 1",
    )
    q_polys = report.check(
        "q_polynomials",
        "F_n, L_n at p = 1 = q-sums",
        "q-Fibonacci and q-Lucas polynomials",
    )
    classical_polys = report.check(
        "classical_polynomials",
        "F_n, L_n at p = q = 1 = classical sums and recurrences",
        "classical Fibonacci and Lucas polynomials",
    )
    inverse = report.check(
        "inverse_parameters",
        "coefficient maps = direct definition at (p⁻¹,q⁻¹)",
        "inverse-parameter coefficient maps",
    )

    unit = PQParams(1, 1)
    for _ in range(config.random_parameter_sets):
        q = random_q(rng)
        s = random_rational(rng)
        at_one = PQParams(1, q)
        params = random_params(rng)
        for n in range(n_max + 1):
            case = _case(q=q, s=s, n=n)
            numbers.record(pq_number(n, at_one) == q_number(n, q) and pq_number(n, unit) == n, case)
            binomials.record(
                all(
                    pq_binomial(n, k, at_one) == q_binomial(n, k, q)
                    and pq_binomial(n, k, unit) == classical_binomial(n, k)
                    for k in range(n + 1)
                ),
                case,
            )
            q_polys.record(
                fibonacci_poly(n, at_one, s) == q_fibonacci_poly(n, q, s)
                and lucas_poly(n, at_one, s) == q_lucas_poly(n, q, s),
                case,
            )
            classical_polys.record(
                fibonacci_poly(n, unit, s) == classical_fibonacci_poly(n, s) == classical_recurrence_poly(FIBONACCI, n, s)
                and lucas_poly(n, unit, s) == classical_lucas_poly(n, s) == classical_recurrence_poly(LUCAS, n, s),
                case,
            )
            inverse.record(
                all(
                    inverse_param_poly(family, n, params, s) == inverse_param_poly_direct(family, n, params, s)
                    for family in (FIBONACCI, LUCAS)
                ),
                _case(p=params.p, q=params.q, s=s, n=n),
            )


def suite_fourier(report: SuiteReport, rng: random.Random, config: PqfibConfig) -> None:
    rule = gauss_hermite_rule(config.quadrature_nodes)
    n_max = min(report.n_max, config.fourier_n_max)
    theorem = report.check(
        "theorem",
        "transform of e^(-x^2/2) P(a e^(i kappa x)) = (pq)^(n^2/4) P(a e^(-kappa y) | p⁻¹,q⁻¹) e^(-y^2/2)",
        "Gaussian-windowed Fourier transform",
    )
    oracle = report.check(
        "quadrature_oracle",
        "quadrature LHS = Gaussian-shift sum",
        "Gaussian-shift expansion of the transform",
    )
    recovery = report.check(
        "recovery",
        "(1/2 pi) double integral recovers P(a)",
        "inverse transform recovery",
    )
    moments = report.check(
        "moments",
        "Gauss-Hermite rule integrates u^(2m) e^(-u^2), m <= 20",
        "Gauss-Hermite moments",
    )
    printed = report.check(
        "lucas_printed_shift",
        "Lucas RHS with s/(pq) differs from the transform unless n <= 1",
        "Lucas transform parameter shift",
    )

    for m in range(21):
        exact = math.gamma(m + 0.5)
        approx = rule.integrate(lambda u: u ** (2 * m)).real
        moments.record(abs(approx - exact) <= 1e-12 * exact, _case(m=m))

    worst_theorem = worst_oracle = worst_recovery = 0.0
    for p in (1.0, 1.1, 1.5):
        for kappa in (0.2, 0.3):
            for s in (0.5, 1.0):
                for n in range(n_max + 1):
                    fp = FourierParams(p=p, kappa=kappa, amplitude=1.0, s=s, n=n)
                    for family in (FIBONACCI, LUCAS):
                        for y in Y_GRID:
                            case = _case(family=family, p=p, kappa=kappa, s=s, n=n, y=round(float(y), 2))
                            residual, gap = residual_at(family, fp, float(y), rule)
                            worst_theorem = max(worst_theorem, residual)
                            worst_oracle = max(worst_oracle, gap)
                            theorem.record(residual <= config.fourier_tolerance, case)
                            oracle.record(gap <= config.oracle_tolerance, case)
                        if n <= config.recovery_n_max:
                            direct = recovery_direct(family, fp)
                            error = relative_residual(recovery_double_integral(family, fp, rule), direct)
                            worst_recovery = max(worst_recovery, error)
                            recovery.record(error <= config.recovery_tolerance, _case(family=family, p=p, kappa=kappa, s=s, n=n))
                    if n >= 2:
                        y = 0.5
                        residual, _ = residual_at(LUCAS, fp, y, rule)
                        shifted = relative_residual(lucas_transform_rhs(fp, y, as_printed=True), lucas_transform_rhs(fp, y))
                        printed.record(
                            residual <= config.fourier_tolerance and shifted > config.fourier_tolerance,
                            _case(p=p, kappa=kappa, s=s, n=n),
                        )

    theorem.metrics["max_relative_residual"] = worst_theorem
    oracle.metrics["max_abs_residual"] = worst_oracle
    recovery.metrics["max_relative_residual"] = worst_recovery


SUITE_RUNNERS: Dict[str, Callable[[SuiteReport, random.Random, PqfibConfig], None]] = {
    "binomials": suite_binomials,
    "recursions": suite_recursions,
    "hypergeometric": suite_hypergeometric,
    "genfunc": suite_genfunc,
    "numbers": suite_numbers,
    "derivative": suite_derivative,
    "limits": suite_limits,
    "fourier": suite_fourier,
}


def run_suite(
    name: str, seed: Optional[int] = None, n_max: Optional[int] = None, config: Optional[PqfibConfig] = None
) -> SuiteReport:
    """
    Run one named suite.

    Args:
        name: One of SUITES
        seed: Seed of the parameter generator (config verify_seed by default)
        n_max: Largest polynomial index swept (config verify_n_max by default)
        config: Overrides the loaded configuration

    Returns:
        SuiteReport with one CheckResult per identity
    """
    if name not in SUITE_RUNNERS:
        raise ValueError(f"Unknown suite: {name}")
    config = config or get_typed_config()
    seed = config.verify_seed if seed is None else seed
    n_max = config.verify_n_max if n_max is None else n_max

    report = SuiteReport(suite=name, seed=seed, n_max=n_max)
    # Each suite gets its own generator so suites are reproducible alone or inside "all".
    rng = random.Random(f"{seed}:{name}")
    with get_monitor().measure(f"verify:{name}") as metrics:
        SUITE_RUNNERS[name](report, rng, config)
    log_action(
        f"verify:{name}",
        {"seed": seed, "n_max": n_max},
        {
            "passed": report.passed,
            "checks": len(report.checks),
            "memory_delta_mb": metrics["memory_delta_mb"],
        },
        report.passed,
        metrics["duration_ms"],
    )
    return report


def run_suites(
    name: str, seed: Optional[int] = None, n_max: Optional[int] = None, config: Optional[PqfibConfig] = None
) -> List[SuiteReport]:
    """Run a named suite, or every suite in order for "all"."""
    names = SUITES if name == "all" else (name,)
    return [run_suite(suite, seed=seed, n_max=n_max, config=config) for suite in names]
