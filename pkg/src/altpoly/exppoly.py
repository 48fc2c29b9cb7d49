"""Orthogonal exponential polynomials on the semi-axis.

A system member is the alternative polynomial with first parameter shifted
down by one, evaluated at exp(-t); the k = n member is exp(-n t) and each
member is a combination of exp(-k t) .. exp(-n t). The k = 0 associated
function is excluded from the orthogonal system (it is not normalizable) but
its zeros supply the abscissas of the Gauss-type quadrature, which is exact
on exp(-2t) .. exp(-(2n+1)t) and deliberately not on constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DivergenceError, RootFindingError
from .exact import is_exact
from .marginal import a_coefficients, t_coefficients
from .poly import DensePoly
from .polycore import PolyParams, ajp_coefficients, ajp_norm_h
from .quad import SEMI_AXIS, UNIT_INTERVAL, QuadRule, gauss_jacobi_rule, integrate_unit


@dataclass(frozen=True)
class ExpPolySystem:
    """Exponential system for exponents (alpha, beta), sizes k = 1..n, plus
    the k = 0 associated function."""

    alpha: object
    beta: object
    n: int

    def __post_init__(self):
        if not (self.alpha > -1 and self.beta > -1):
            raise ValueError("system needs alpha > -1 and beta > -1")
        if self.n < 1:
            raise ValueError("system needs n >= 1")

    def member_poly(self, k: int) -> DensePoly:
        """Coefficients of the member as a polynomial in x = exp(-t)."""
        a = Fraction(self.alpha) - 1 if is_exact(self.alpha) else float(self.alpha) - 1
        return ajp_coefficients(PolyParams(a, self.beta, self.n, k))


def e_eval(sys: ExpPolySystem, k: int, t):
    """Member value at t >= 0 (k = 0 evaluates the associated function)."""
    return sys.member_poly(k)(math.exp(-float(t)))


def e_norm(sys: ExpPolySystem, k: int):
    """Squared weighted norm on the semi-axis:
    1/(alpha+2k) * Gamma(alpha+n+k+1) Gamma(beta+n-k+1) /
    ((n-k)! Gamma(alpha+beta+n+k+1)); k = 0 is rejected (the associated
    function is not part of the orthogonal system)."""
    if k == 0:
        raise DivergenceError("associated function is not integrable on the semi-axis")
    a = Fraction(sys.alpha) - 1 if is_exact(sys.alpha) else float(sys.alpha) - 1
    return ajp_norm_h(PolyParams(a, sys.beta, sys.n, k))


@dataclass(frozen=True)
class ZeroSet:
    """Ordered zeros of the associated function: lambdas ascending on the
    t-axis, source_x the matching zeros on (0,1) with lambda = -ln x."""

    alpha: float
    beta: float
    n: int
    lambdas: tuple
    source_x: tuple
    residuals: tuple

    def max_lambda(self) -> float:
        return self.lambdas[-1]


def _polish_real_roots(coeffs_float, roots, max_steps=60):
    """Newton polish on Horner evaluation; residuals are scaled by the
    largest coefficient magnitude."""
    poly = DensePoly(tuple(coeffs_float))
    dpoly = poly.derivative()
    scale = max(abs(c) for c in coeffs_float)
    polished, residuals = [], []
    for r in roots:
        x = float(r)
        for _ in range(max_steps):
            fx = poly(x)
            dfx = dpoly(x)
            if dfx == 0:
                raise RootFindingError("zero derivative during polish: multiple root?")
            step = fx / dfx
            x -= step
            if abs(step) < 1e-16 * max(abs(x), 1e-300):
                break
        polished.append(x)
        residuals.append(abs(poly(x)) / scale)
    return polished, residuals


def e_zeros(alpha, beta, n: int) -> ZeroSet:
    """Zeros of the associated function, found as the roots of the k = 0
    member polynomial on (0,1): companion-matrix eigenvalues of the exact
    coefficient vector, then Newton-polished; returned as lambda = -ln x,
    ascending."""
    if n < 1:
        raise ValueError("need n >= 1")
    a = Fraction(alpha) - 1 if is_exact(alpha) else float(alpha) - 1
    member = ajp_coefficients(PolyParams(a, beta, n, 0))
    coeffs = [float(c) for c in member.coeffs]
    # numpy.roots takes descending coefficients and balances the companion matrix
    raw = np.roots(coeffs[::-1])
    real = [z.real for z in raw if abs(z.imag) < 1e-9]
    if len(real) != n:
        raise RootFindingError(f"expected {n} real zeros, found {len(real)}")
    xs, residuals = _polish_real_roots(coeffs, sorted(real))
    if any(not 0 < x < 1 for x in xs):
        raise RootFindingError("a zero left the open interval (0,1)")
    if any(xs[i + 1] - xs[i] < 1e-12 for i in range(len(xs) - 1)):
        raise RootFindingError("zeros are not simple (cluster detected)")
    if any(r > 1e-13 for r in residuals):
        raise RootFindingError(f"polish residual too large: {max(residuals):.3g}")
    lambdas = tuple(-math.log(x) for x in reversed(xs))
    return ZeroSet(float(alpha), float(beta), n, lambdas,
                   tuple(reversed(xs)), tuple(reversed(residuals)))


def legendre_type_quadrature(n: int) -> QuadRule:
    """n-node rule on [0,1] with nodes at the zeros of the (0,0)-family
    k = 0 member and weights

        w_s = -2/(n(n+2)) / (x_s^2 P_n1(x_s) P'_n0(x_s)),

    exact for the monomials x, x^2, ..., x^(2n) but not for constants."""
    zeros = e_zeros(1, 0, n)            # exponent 1 on the t-side is the (0,0) family
    xs = tuple(reversed(zeros.source_x))
    p1 = ajp_coefficients(PolyParams(0, 0, n, 1)).to_floats()
    dp0 = ajp_coefficients(PolyParams(0, 0, n, 0)).derivative().to_floats()
    front = -2.0 / (n * (n + 2))
    weights = tuple(front / (x * x * p1(x) * dp0(x)) for x in xs)
    return QuadRule(xs, weights, UNIT_INTERVAL, ("legendre-type", n))


def semi_axis_rule(n: int) -> QuadRule:
    """Gauss-type rule on the semi-axis: t_s = -ln x_s, v_s = w_s / x_s;
    integrates exp(-m t) exactly to 1/m for m = 2..2n+1."""
    unit = legendre_type_quadrature(n)
    pairs = sorted(
        ((-math.log(x), w / x) for x, w in zip(unit.nodes, unit.weights)),
        key=lambda p: p[0],
    )
    return QuadRule(tuple(t for t, _ in pairs), tuple(v for _, v in pairs),
                    SEMI_AXIS, ("semi-axis-exp", n))


def rule_table(n: int) -> list[tuple]:
    """Joint zero/weight table (s, x_s, t_s, w_s, v_s), ascending in x_s."""
    unit = legendre_type_quadrature(n)
    rows = []
    for s, (x, w) in enumerate(zip(unit.nodes, unit.weights), start=1):
        rows.append((s, x, -math.log(x), w, w / x))
    return rows


def ea_eval(n: int, k: int, t):
    """A-kind exponential member: integer-coefficient polynomial at exp(-t)."""
    return a_coefficients(n, k)(math.exp(-float(t)))


def et_eval(n: int, k: int, t):
    """T-kind exponential member at exp(-t)."""
    return t_coefficients(n, k)(math.exp(-float(t)))


def ea_derivative_relation_residual(n: int, k: int, t) -> float:
    """Residual of d/dt [E_{n,k-1} + E_{nk}] = -(k-1) E_{n,k-1} + k E_{nk}
    for the A-kind exponential system, computed symbolically in exp(-t) and
    evaluated at t; identically zero."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    p = a_coefficients(n, k - 1)
    q = a_coefficients(n, k)
    total = p + q
    # d/dt maps the coefficient of exp(-j t) to -j times itself
    ddt = DensePoly(tuple(-j * c for j, c in enumerate(total.coeffs)))
    rhs = p.scale(-(k - 1)) + q.scale(k)
    return float((ddt - rhs)(math.exp(-float(t))))


@dataclass(frozen=True)
class ProjectionResult:
    coeffs: tuple
    error: float


def project(f, sys: ExpPolySystem, rule: QuadRule | None = None) -> ProjectionResult:
    """Least-squares coefficients of f in the system, under the system weight:
    c_k = <f, member_k> / norm_k for k = 1..n, plus the weighted L2
    reconstruction error.

    The inner products pull back to [0,1]: the factor x**(alpha-1) times the
    member's x**k lowest power leaves x**alpha times a polynomial, so an
    (alpha, beta) Gauss rule handles them with f(-ln x) as the only
    non-polynomial factor.
    """
    n = sys.n
    af, bf = float(sys.alpha), float(sys.beta)
    if rule is None:
        rule = gauss_jacobi_rule(2 * n + 8, af, bf)
    members = [sys.member_poly(k).to_floats() for k in range(1, n + 1)]
    coeffs = []
    for k, member in enumerate(members, start=1):
        reduced = member.shift_down()            # x^{-1} * member, still a polynomial
        val = integrate_unit(lambda x: reduced(x) * f(-math.log(x)), rule)
        coeffs.append(val / float(e_norm(sys, k)))

    def sq_err_integrand(x):
        t = -math.log(x)
        approx = sum(c * m(x) for c, m in zip(coeffs, members))
        return (f(t) - approx) ** 2 / x

    err_rule = gauss_jacobi_rule(max(2 * len(rule.nodes), 48), af, bf)
    err2 = integrate_unit(sq_err_integrand, err_rule)
    return ProjectionResult(tuple(coeffs), math.sqrt(max(err2, 0.0)))
