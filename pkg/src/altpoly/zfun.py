"""Scaled exponential systems and the discretely-almost-orthogonal Z systems
on [0,1].

The construction fixes a weight-shape ratio omega (second exponent = omega
times the first), then picks the first exponent from a candidate set so the
largest zero gamma of the associated function is maximal subject to
gamma <= 1. With gamma = 1 the members are used as-is (Z); with gamma < 1
the argument is rescaled by gamma (Z-tilde), which parks the largest zero of
the associated function exactly at t = 1 either way.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import CollocationError, FeasibilityError
from .exppoly import ExpPolySystem, ZeroSet, e_eval, e_zeros
from .exact import is_exact

GAMMA_UNSCALED_TOL = 1e-12


def lambda_max(alpha, beta, n: int) -> float:
    """Largest zero of the associated function for the given exponents."""
    return e_zeros(alpha, beta, n).max_lambda()


def etilde_eval(alpha, beta, n: int, k: int, t) -> float:
    """Scaled member: the exponential member evaluated at lambda_max * t,
    so the largest zero of the scaled associated function sits at t = 1."""
    lam = lambda_max(alpha, beta, n)
    return float(e_eval(ExpPolySystem(alpha, beta, n), k, lam * float(t)))


def weight_peak(omega) -> float:
    """Abscissa of the semi-axis weight maximum: ln(1+omega) for omega > 0,
    else the boundary t = 0."""
    if omega <= 0:
        return 0.0
    return math.log1p(float(omega))


def whole_candidates(limit: int = 64) -> tuple:
    """Default candidate exponents: whole numbers 0..limit.

    The limit must reach 54 for the largest-zero constraint to be satisfiable
    at n = 5 with equal exponents, hence the roomy default."""
    return tuple(Fraction(i) for i in range(limit + 1))


def rational_candidates(limit: int = 64, max_den: int = 4) -> tuple:
    """Rational candidates in [0, limit] with denominators up to max_den."""
    vals = {Fraction(i) for i in range(limit + 1)}
    for den in range(2, max_den + 1):
        for num in range(0, limit * den + 1):
            vals.add(Fraction(num, den))
    return tuple(sorted(vals))


def _feasible(alpha, omega) -> bool:
    a = Fraction(alpha) if is_exact(alpha) else float(alpha)
    return a > -1 and (Fraction(omega) if is_exact(omega) else float(omega)) * a > -1


def z_search(n: int, omega, candidates) -> tuple:
    """Maximize the largest zero over the candidate exponents subject to the
    zero staying <= 1. Returns (alpha, gamma); ties go to the smallest alpha.
    Candidates are reduced in sorted order, so permutations cannot change
    the result."""
    cands = sorted(candidates)
    if not cands:
        raise FeasibilityError("empty candidate set")
    best = None
    for alpha in cands:
        if not _feasible(alpha, omega):
            continue
        lam = lambda_max(alpha, alpha * omega, n)
        if lam > 1:
            continue
        if best is None or lam > best[1]:
            best = (alpha, lam)
    if best is None:
        raise FeasibilityError(
            f"no candidate keeps the largest zero below 1 (n={n}, omega={omega})")
    return best


def z_search_real(n: int, omega, alpha_hi: float = 64.0, tol: float = 1e-12) -> tuple:
    """Real-valued boundary search: bisect for the exponent where the largest
    zero equals 1, which attains equality in the gamma <= 1 requirement."""
    om = float(omega)
    lo = -1.0 if om >= 0 else None
    if om > 1:
        lo = max(-1.0, -1.0 / om)
    elif om < 0:
        lo = -1.0
        alpha_hi = min(alpha_hi, -1.0 / om * (1 - 1e-9))
    lo = lo + 1e-9

    def lam(a):
        return lambda_max(a, a * om, n)

    hi = float(alpha_hi)
    if lam(hi) > 1:
        raise FeasibilityError("largest zero exceeds 1 over the whole search range")
    flo = lam(lo)
    if flo < 1:
        # already feasible at the lower end: zero never reaches 1
        return (lo, flo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if lam(mid) > 1:
            lo = mid
        else:
            hi = mid
        if hi - lo < tol:
            break
    return (hi, lam(hi))


@dataclass(frozen=True)
class ZSystemSpec:
    """A built Z or Z-tilde system: chosen exponent, achieved largest zero,
    and the full zero table of the associated function."""

    n: int
    omega: object
    alpha_n: object
    gamma_n: float
    scaled: bool
    zeros: ZeroSet

    @property
    def beta_n(self):
        return self.alpha_n * self.omega

    def _system(self) -> ExpPolySystem:
        return ExpPolySystem(self.alpha_n, self.beta_n, self.n)

    def member_eval(self, k: int, t) -> float:
        """Basis member on [0,1]: index 0 is the constant 1, index k >= 1 the
        k-th (possibly rescaled) exponential member."""
        if k == 0:
            return 1.0
        factor = self.gamma_n if self.scaled else 1.0
        return float(e_eval(self._system(), k, factor * float(t)))

    def associated_eval(self, t) -> float:
        """The k = 0 associated function, built the same way as the members."""
        factor = self.gamma_n if self.scaled else 1.0
        return float(e_eval(self._system(), 0, factor * float(t)))

    def collocation_nodes(self) -> tuple:
        """t = 0 plus the zeros of the associated function mapped into (0,1]."""
        factor = self.gamma_n if self.scaled else 1.0
        return (0.0,) + tuple(lam / factor for lam in self.zeros.lambdas)

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "omega": float(self.omega),
                "alpha_n": float(self.alpha_n),
                "beta_n": float(self.beta_n),
                "gamma_n": self.gamma_n,
                "scaled": self.scaled,
                "lambdas": list(self.zeros.lambdas),
            }
        )


def z_build(n: int, omega, candidates) -> ZSystemSpec:
    """Run the search, then assemble the system; asserts that the associated
    function vanishes at t = 1."""
    alpha_n, gamma_n = z_search(n, omega, candidates)
    scaled = not math.isclose(gamma_n, 1.0, rel_tol=0, abs_tol=GAMMA_UNSCALED_TOL)
    zeros = e_zeros(alpha_n, alpha_n * omega, n)
    spec = ZSystemSpec(n=n, omega=Fraction(omega) if is_exact(omega) else float(omega),
                       alpha_n=alpha_n, gamma_n=float(gamma_n), scaled=scaled,
                       zeros=zeros)
    endpoint = spec.associated_eval(1.0)
    if abs(endpoint) > 1e-9:
        raise FeasibilityError(
            f"built system violates the endpoint-zero condition: {endpoint:.3g}")
    return spec


def z_build_real(n: int, omega, **kwargs) -> ZSystemSpec:
    """Same as z_build but with the real-valued boundary search."""
    alpha_n, gamma_n = z_search_real(n, omega, **kwargs)
    scaled = not math.isclose(gamma_n, 1.0, rel_tol=0, abs_tol=1e-9)
    zeros = e_zeros(alpha_n, alpha_n * float(omega), n)
    spec = ZSystemSpec(n=n, omega=float(omega), alpha_n=float(alpha_n),
                       gamma_n=float(gamma_n), scaled=scaled, zeros=zeros)
    endpoint = spec.associated_eval(1.0)
    if abs(endpoint) > 1e-9:
        raise FeasibilityError(
            f"built system violates the endpoint-zero condition: {endpoint:.3g}")
    return spec


@dataclass(frozen=True)
class CollocationResult:
    coeffs: tuple
    node_residual: float
    max_grid_error: float
    cond: float


def z_collocation_fit(f, spec: ZSystemSpec, grid_points: int = 257) -> CollocationResult:
    """Interpolate f on [0,1] in the basis {1, members}: collocate at t = 0
    plus the zeros of the associated function, solve the square system, and
    report the node residual and the max error on a uniform grid."""
    nodes = spec.collocation_nodes()
    size = spec.n + 1
    matrix = np.empty((size, size))
    for i, t in enumerate(nodes):
        for k in range(size):
            matrix[i, k] = spec.member_eval(k, t)
    rhs = np.array([float(f(t)) for t in nodes])
    cond = float(np.linalg.cond(matrix))
    if not np.isfinite(cond) or cond > 1e14:
        raise CollocationError(f"collocation matrix near-singular (cond {cond:.3g})",
                               cond=cond)
    coeffs = np.linalg.solve(matrix, rhs)
    node_residual = float(np.max(np.abs(matrix @ coeffs - rhs)))
    grid = np.linspace(0.0, 1.0, grid_points)
    errs = [
        abs(float(f(t)) - sum(c * spec.member_eval(k, t) for k, c in enumerate(coeffs)))
        for t in grid
    ]
    return CollocationResult(tuple(float(c) for c in coeffs), node_residual,
                             max(errs), cond)


def gram_matrix(spec: ZSystemSpec, m: int = 64) -> np.ndarray:
    """Gram matrix of {1, members} under the uniform weight on [0,1];
    reported as a diagnostic only, nothing is asserted about it."""
    xs, ws = np.polynomial.legendre.leggauss(m)
    ts = 0.5 * (xs + 1)
    ws = 0.5 * ws
    size = spec.n + 1
    vals = np.array([[spec.member_eval(k, t) for k in range(size)] for t in ts])
    return (vals * ws[:, None]).T @ vals
