"""Alternative Jacobi polynomials on [0,1] and the classical shifted Jacobi
polynomials they are tied to.

A family member is indexed by (alpha, beta, n, k): degree exactly n, lowest
power exactly k, orthogonal under the weight x**alpha (1-x)**beta when the
parameters allow. The lower index runs downward, k = n..0, which is what the
downward three-term recurrence follows.

Arithmetic is exact (fractions) whenever alpha and beta are rational; float
otherwise. Gamma-function ratios in the norm and integral formulas are
evaluated as products of rational factors, never through a floating gamma,
so exact mode stays exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DivergenceError, NonNormalizableError, RecurrenceError
from .exact import (
    ExactnessError,
    binom_general,
    exact_gamma2_ratio,
    falling_factorial,
    float_gamma2_ratio,
    is_exact,
    simplify_scalar,
)
from .poly import DensePoly


def _param(v):
    """Normalize a family parameter: rationals stay exact, floats stay float."""
    if isinstance(v, float):
        return v
    return Fraction(v)


@dataclass(frozen=True)
class PolyParams:
    """Identifies one alternative Jacobi polynomial.

    k = n + 1 is admitted as the zero-polynomial sentinel used by the
    downward recurrence. alpha may drop to -1 and below (marginal and formal
    regimes); norm and integral operations then refuse the non-integrable
    cases individually.
    """

    alpha: object
    beta: object
    n: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", _param(self.alpha))
        object.__setattr__(self, "beta", _param(self.beta))
        if self.n < 0:
            raise ValueError("n must be a whole number")
        if not 0 <= self.k <= self.n + 1:
            raise ValueError(f"k = {self.k} outside 0..n+1 for n = {self.n}")
        if not self.beta > -1:
            raise ValueError("beta must exceed -1")

    @property
    def exact(self) -> bool:
        return is_exact(self.alpha) and is_exact(self.beta)

    @property
    def regime(self) -> str:
        """normalizable (alpha > -1), marginal (-2 < alpha <= -1), else formal."""
        if self.alpha > -1:
            return "normalizable"
        if self.alpha > -2:
            return "marginal"
        return "formal"

    @property
    def is_sentinel(self) -> bool:
        return self.k == self.n + 1


def falling(a, m: int):
    """Falling factorial (a)_m; the convention used by every formula here."""
    return falling_factorial(a, m)


def ajp_coefficients(p: PolyParams) -> DensePoly:
    """Monomial coefficients of the member polynomial.

    Expands sum_j (-1)^j C(n-k, j) (alpha+n+k+1)_{n-k-j} (beta+n-k)_j
    x^(k+j) (1-x)^(n-k-j) / (n-k)!  with falling factorials throughout.

    Results are cached; the key carries the arithmetic mode because exact and
    float parameters can compare equal (Fraction(1,2) == 0.5) yet must not
    share coefficients.
    """
    return _ajp_coefficients_cached(p, p.exact)


@lru_cache(maxsize=4096)
def _ajp_coefficients_cached(p: PolyParams, _exact: bool) -> DensePoly:
    if p.is_sentinel:
        return DensePoly.zero()
    n, k, a, b = p.n, p.k, p.alpha, p.beta
    m = n - k
    zero = 0.0 if not p.exact else Fraction(0)
    out = [zero] * (n + 1)
    fact_m = math.factorial(m)
    for j in range(m + 1):
        pref = (-1) ** j * math.comb(m, j) * falling(a + n + k + 1, m - j) * falling(b + m, j)
        pref = pref / fact_m
        # expand (1-x)^(m-j) onto powers k+j .. n
        for i in range(m - j + 1):
            out[k + j + i] += pref * ((-1) ** i * math.comb(m - j, i))
    return DensePoly(out)


def ajp_eval(p: PolyParams, x):
    """Evaluate by Horner on the expanded coefficients."""
    return ajp_coefficients(p)(x)


def ajp_recurrence(alpha, beta, n: int, up_to_k: int = 0) -> list[DensePoly]:
    """Downward three-term recurrence on coefficient vectors.

    Returns members for k = n down to up_to_k (descending order). The 1/x
    factor in the recurrence is a left shift, applied only after checking the
    constant term is zero.
    """
    a, b = _param(alpha), _param(beta)
    if n < 0 or not 0 <= up_to_k <= n:
        raise ValueError("need 0 <= up_to_k <= n")
    exact = is_exact(a) and is_exact(b)
    if not exact:
        a, b = float(a), float(b)
    seq = [DensePoly.monomial(n)]
    if up_to_k == n:
        return seq
    seq.append(DensePoly([0] * (n - 1) + [a + 2 * n, -(a + b + 2 * n + 1)]))
    for k in range(n - 1, up_to_k, -1):
        cur, prev = seq[-1], seq[-2]
        const = cur.coeffs[0] if cur.coeffs else 0
        if const:
            # exact mode must have an exactly zero constant term; float mode
            # tolerates roundoff residue relative to the coefficient scale
            scale = max(abs(c) for c in cur.coeffs)
            if exact or abs(const) > 1e-9 * scale:
                raise RecurrenceError(
                    f"member k={k} has nonzero constant term, cannot apply 1/x step")
        shifted = DensePoly(cur.coeffs[1:])
        combo = (
            shifted.scale((a + 2 * k) * (a + 2 * k + 2))
            - cur.scale((a + 2 * n + 2) * (a + b + 2 * k + 1) + 2 * (n - k) * (n - k + 1))
        ).scale(a + 2 * k + 1) - prev.scale((a + b + n + k + 2) * (b + n - k) * (a + 2 * k))
        denom = (n - k + 1) * (a + n + k + 1) * (a + 2 * k + 2)
        seq.append(combo.scale(1 / denom if isinstance(denom, float) else Fraction(1, 1) / denom))
    return seq


def ajp_norm_h(p: PolyParams):
    """Squared weighted norm h = 1/(alpha+2k+1) *
    Gamma(alpha+n+k+2) Gamma(beta+n-k+1) / ((n-k)! Gamma(alpha+beta+n+k+2)).

    Valid whenever the diagonal integral converges, i.e. alpha + 2k + 1 > 0;
    in particular the k = 0 member of a marginal system is rejected.
    """
    n, k, a, b = p.n, p.k, p.alpha, p.beta
    if not a + 2 * k + 1 > 0:
        raise NonNormalizableError(
            f"member (n={n}, k={k}) is non-normalizable for alpha = {a}")
    ga, gb, gc = a + n + k + 2, b + n - k + 1, a + b + n + k + 2
    fact = math.factorial(n - k)
    if p.exact:
        try:
            ratio = exact_gamma2_ratio(ga, gb, gc)
            return simplify_scalar(ratio / (a + 2 * k + 1) / fact)
        except ExactnessError:
            pass
    return float_gamma2_ratio(ga, gb, gc) / float(a + 2 * k + 1) / fact


def ajp_single_integral(p: PolyParams):
    """Integral of the weighted member over [0,1]:
    Gamma(alpha+k+1)/k! * Gamma(beta+n-k+1)/(n-k)! * n!/Gamma(alpha+beta+n+2).
    """
    n, k, a, b = p.n, p.k, p.alpha, p.beta
    if not a + k + 1 > 0:
        raise DivergenceError(
            f"weighted integral of member (n={n}, k={k}) diverges for alpha = {a}")
    ga, gb, gc = a + k + 1, b + n - k + 1, a + b + n + 2
    scale = Fraction(math.factorial(n), math.factorial(k) * math.factorial(n - k))
    if p.exact:
        try:
            return simplify_scalar(exact_gamma2_ratio(ga, gb, gc) * scale)
        except ExactnessError:
            pass
    return float_gamma2_ratio(ga, gb, gc) * float(scale)


def direct_norm_d(alpha, beta, n: int, k: int):
    """Squared norm of the direct-orthogonalization polynomial (k >= n):
    1/(alpha+beta+2k+1) * Gamma(alpha+k+n+1) Gamma(beta+k-n+1) /
    ((k-n)! Gamma(alpha+beta+k+n+1)).
    """
    if k < n:
        raise ValueError("direct family is indexed by k >= n")
    a, b = _param(alpha), _param(beta)
    if not (a > -1 and b > -1):
        raise DivergenceError("direct norms need alpha > -1 and beta > -1")
    ga, gb, gc = a + k + n + 1, b + k - n + 1, a + b + k + n + 1
    fact = math.factorial(k - n)
    if is_exact(a) and is_exact(b):
        try:
            return simplify_scalar(exact_gamma2_ratio(ga, gb, gc) / (a + b + 2 * k + 1) / fact)
        except ExactnessError:
            pass
    return float_gamma2_ratio(ga, gb, gc) / float(a + b + 2 * k + 1) / fact


def jacobi_coefficients(m: int, a, b) -> DensePoly:
    """Classical Jacobi polynomial of degree m as coefficients in y.

    Terminating sum C(m+a, m-s) C(m+b, s) ((y-1)/2)^s ((y+1)/2)^(m-s); works
    for arbitrary real parameters including the negative values required by
    the reciprocity identity (no orthogonality implied there).
    """
    a, b = _param(a), _param(b)
    half = Fraction(1, 2) if not (isinstance(a, float) or isinstance(b, float)) else 0.5
    ym = DensePoly((-half, half))   # (y-1)/2
    yp = DensePoly((half, half))    # (y+1)/2
    total = DensePoly.zero()
    for s in range(m + 1):
        c = binom_general(a + m, m - s) * binom_general(b + m, s)
        term = DensePoly.one()
        for _ in range(s):
            term = term * ym
        for _ in range(m - s):
            term = term * yp
        total = total + term.scale(c)
    return total


def shifted_jacobi_coefficients(m: int, a, b) -> DensePoly:
    """Shifted Jacobi polynomial on [0,1]: classical one composed with 1-2x."""
    jac = jacobi_coefficients(m, a, b)
    sub = DensePoly((1, -2))
    out = DensePoly.zero()
    power = DensePoly.one()
    for c in jac.coeffs:
        out = out + power.scale(c)
        power = power * sub
    return out


def shifted_jacobi(m: int, a, b, x):
    """Value of the shifted Jacobi polynomial at x."""
    return shifted_jacobi_coefficients(m, a, b)(x)


def direct_coefficients(alpha, beta, n: int, k: int) -> DensePoly:
    """Direct-orthogonalization polynomial: x^n times the shifted Jacobi
    polynomial of degree k-n with first parameter translated by 2n."""
    if k < n:
        raise ValueError("direct family is indexed by k >= n")
    a, b = _param(alpha), _param(beta)
    return shifted_jacobi_coefficients(k - n, a + 2 * n, b).shift_up(n)


def reciprocity_coefficients(alpha, beta, n: int, k: int) -> DensePoly:
    """Member coefficients rebuilt through the reciprocity route:
    x^n * J_{n-k}^{(-alpha-beta-2n-2, beta)}(1 - 2/x), expanded exactly.

    The degree-(n-k) polynomial in 1/x times x^n lands on powers x^k..x^n.
    """
    a, b = _param(alpha), _param(beta)
    q = shifted_jacobi_coefficients(n - k, -a - b - 2 * n - 2, b)
    out = [0] * (n + 1)
    for j, c in enumerate(q.coeffs):
        out[n - j] = c
    return DensePoly(out)


def ajp_derivative(p: PolyParams) -> DensePoly:
    """Coefficient-wise derivative of the member polynomial."""
    return ajp_coefficients(p).derivative()


def diff_formula_residual(p: PolyParams) -> DensePoly:
    """Residual of the lowering differentiation formula (k < n):
    dP/dx - k/x P + (alpha+beta+n+k+2) * P_{n-1,k}^{(alpha+1,beta+1)}.

    Zero polynomial iff the identity holds. The k/x term is a left shift,
    legal because the lowest power of the member is exactly k.
    """
    n, k, a, b = p.n, p.k, p.alpha, p.beta
    if k >= n:
        raise ValueError("differentiation formula applies for k < n")
    member = ajp_coefficients(p)
    lhs = member.derivative()
    if k:
        lhs = lhs - member.shift_down().scale(k)
    rhs = ajp_coefficients(PolyParams(a + 1, b + 1, n - 1, k)).scale(-(a + b + n + k + 2))
    return lhs - rhs


def dd_raising_residual(p: PolyParams) -> DensePoly:
    """Residual of the raising differential-difference relation,
    connecting the member with its k+1 neighbor:

    (alpha+2k+2) x(1-x) P' - [k alpha + 2k(k+1)
      - (n alpha + (n-k) beta + n^2 + k^2 + 2n) x] P
      + (alpha+beta+n+k+2)(beta+n-k) x P_{n,k+1}
    """
    n, k, a, b = p.n, p.k, p.alpha, p.beta
    member = ajp_coefficients(p)
    x_one_minus_x = DensePoly((0, 1, -1))
    lhs = (x_one_minus_x * member.derivative()).scale(a + 2 * k + 2)
    bracket = DensePoly((k * a + 2 * k * (k + 1),
                         -(n * a + (n - k) * b + n * n + k * k + 2 * n)))
    up = ajp_coefficients(PolyParams(a, b, n, k + 1))
    rhs = bracket * member - up.shift_up().scale((a + b + n + k + 2) * (b + n - k))
    return lhs - rhs


def dd_lowering_residual(p: PolyParams) -> DensePoly:
    """Residual of the lowering differential-difference relation (k >= 1),
    connecting the member with its k-1 neighbor:

    (alpha+2k) x(1-x) P' - [-(alpha+2k)(alpha+k+1)
      + ((n+1)(alpha+beta+n+1) + (alpha+k)(alpha+beta+k) + alpha+2k) x] P
      - (n-k+1)(alpha+n+k+1) x P_{n,k-1}
    """
    n, k, a, b = p.n, p.k, p.alpha, p.beta
    if k < 1:
        raise ValueError("lowering relation applies for k >= 1")
    member = ajp_coefficients(p)
    x_one_minus_x = DensePoly((0, 1, -1))
    lhs = (x_one_minus_x * member.derivative()).scale(a + 2 * k)
    bracket = DensePoly((-(a + 2 * k) * (a + k + 1),
                         (n + 1) * (a + b + n + 1) + (a + k) * (a + b + k) + a + 2 * k))
    down = ajp_coefficients(PolyParams(a, b, n, k - 1))
    rhs = bracket * member + down.shift_up().scale((n - k + 1) * (a + n + k + 1))
    return lhs - rhs


def ode_apply(alpha, beta, n: int, k: int, y: DensePoly) -> DensePoly:
    """Apply the family's second-order differential operator to y:
    x^2 (1-x) y'' + x [alpha+2-(alpha+beta+3)x] y'
    - [k(alpha+k+1) - n(alpha+beta+n+2)x] y.
    """
    a, b = _param(alpha), _param(beta)
    d1, d2 = y.derivative(), y.derivative().derivative()
    term2 = DensePoly((0, 0, 1, -1)) * d2                      # x^2(1-x) y''
    term1 = DensePoly((0, a + 2, -(a + b + 3))) * d1           # x(alpha+2-(alpha+beta+3)x) y'
    term0 = DensePoly((-k * (a + k + 1), n * (a + b + n + 2))) * y
    return term2 + term1 + term0


def ode_residual_poly(p: PolyParams) -> DensePoly:
    return ode_apply(p.alpha, p.beta, p.n, p.k, ajp_coefficients(p))


def ode_residual(p: PolyParams, x):
    """Value of the differential-equation residual at x; 0 for members."""
    return ode_residual_poly(p)(x)


def weight_eval(alpha, beta, x):
    """Weight x**alpha (1-x)**beta; endpoints with negative exponents diverge."""
    a, b = _param(alpha), _param(beta)
    if (x == 0 and a < 0) or (x == 1 and b < 0):
        raise DivergenceError("weight is infinite at this endpoint")
    if is_exact(x) and is_exact(a) and is_exact(b) \
            and Fraction(a).denominator == 1 and Fraction(b).denominator == 1:
        xf = Fraction(x)
        return xf ** int(a) * (1 - xf) ** int(b)
    return float(x) ** float(a) * (1.0 - float(x)) ** float(b)


def endpoint_sign(p: PolyParams) -> int:
    """Sign of the member at x = 1, which alternates as (-1)^(n-k)."""
    v = ajp_eval(p, Fraction(1) if p.exact else 1.0)
    return (v > 0) - (v < 0)
