"""The two marginal systems: A-kind (weight 1/x) and T-kind
(weight x**(-3/2) (1-x)**(-1/2)).

Both are alternative families whose k = 0 member is orthogonal to all higher
members yet non-normalizable under the family weight; that singular member is
a shifted Legendre polynomial (A) or a shifted Chebyshev polynomial (T).
A-kind coefficients are integers; T-kind values are rational, with norms
rational multiples of pi kept exact through PiRational.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

from .errors import DivergenceError, RecurrenceError
from .exact import PiRational, double_factorial, falling_factorial
from .poly import DensePoly
from .polycore import PolyParams, ajp_coefficients


class MarginalKind(enum.Enum):
    """Tag plus weight descriptor for the two marginal families."""

    A = ("A", (Fraction(-1), Fraction(0)))
    T = ("T", (Fraction(-3, 2), Fraction(-1, 2)))

    def __init__(self, tag, weight_desc):
        self.tag = tag
        self.weight_desc = weight_desc

    @property
    def alpha(self):
        return self.weight_desc[0]

    @property
    def beta(self):
        return self.weight_desc[1]


def a_coefficients(n: int, k: int) -> DensePoly:
    """A-kind member by its binomial expansion:
    sum_j (-1)^j C(n-k, j) C(n+k+j, n-k) x^(k+j); integer coefficients."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    out = [0] * (n + 1)
    for j in range(n - k + 1):
        out[k + j] = (-1) ** j * math.comb(n - k, j) * math.comb(n + k + j, n - k)
    return DensePoly(out)


def a_recurrence(n: int) -> list[DensePoly]:
    """A-kind members for k = n down to 0 by the downward recurrence
    starting from x^n and (2n-1)x^(n-1) - 2n x^n."""
    if n < 1:
        raise ValueError("recurrence needs n >= 1")
    seq = [DensePoly.monomial(n), DensePoly([0] * (n - 1) + [2 * n - 1, -2 * n])]
    for k in range(n - 1, 0, -1):
        cur, prev = seq[-1], seq[-2]
        if cur.coeffs and cur.coeffs[0]:
            raise RecurrenceError(f"A member k={k} has a nonzero constant term")
        combo = (
            cur.shift_down().scale((2 * k - 1) * (2 * k + 1))
            - cur.scale(2 * (n * n + k * k + n))
        ).scale(2 * k) - prev.scale((2 * k - 1) * (n - k) * (n + k + 1))
        seq.append(combo.scale(Fraction(1, (2 * k + 1) * (n + k) * (n - k + 1))))
    return seq


def a_norm(n: int, k: int, l: int) -> Fraction:
    """Inner product of A members under 1/x: delta_{kl} / (k+l); requires
    l >= 1 (the (0,0) pairing diverges)."""
    _check_indices(n, k, l)
    if k == 0 and l == 0:
        raise DivergenceError("the singular A member has no finite norm")
    if k != l:
        return Fraction(0)
    return Fraction(1, k + l)


def a_single_integral(n: int, k: int) -> Fraction:
    """Integral of an A member against 1/x: equals 1/k for k >= 1."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if k == 0:
        raise DivergenceError("singular A member is not integrable against 1/x")
    return Fraction(1, k)


def t_scaling(n: int, k: int) -> Fraction:
    """Leading normalization (n-k)! / (n-k-1/2)_{n-k} applied to the raw
    member; makes the endpoint value exactly (-1)^(n-k)."""
    m = n - k
    return Fraction(math.factorial(m)) / falling_factorial(Fraction(2 * m - 1, 2), m)


def t_coefficients(n: int, k: int) -> DensePoly:
    """T-kind member: scaled alternative polynomial at (-3/2, -1/2)."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    base = ajp_coefficients(PolyParams(Fraction(-3, 2), Fraction(-1, 2), n, k))
    return base.scale(t_scaling(n, k))


def t_recurrence(n: int) -> list[DensePoly]:
    """T-kind members for k = n down to 0 by the downward recurrence
    starting from x^n and (4n-3)x^(n-1) - (4n-2)x^n."""
    if n < 1:
        raise ValueError("recurrence needs n >= 1")
    seq = [DensePoly.monomial(n),
           DensePoly([0] * (n - 1) + [4 * n - 3, -(4 * n - 2)])]
    for k in range(n - 1, 0, -1):
        cur, prev = seq[-1], seq[-2]
        if cur.coeffs and cur.coeffs[0]:
            raise RecurrenceError(f"T member k={k} has a nonzero constant term")
        combo = (
            cur.shift_down().scale((4 * k - 3) * (4 * k + 1))
            - cur.scale(2 * (4 * n * n + 4 * k * k - 2 * k - 1))
        ).scale(4 * k - 1) - prev.scale(4 * (n - k) * (n + k) * (4 * k - 3))
        seq.append(combo.scale(
            Fraction(1, (2 * (n + k) - 1) * (2 * (n - k) + 1) * (4 * k + 1))))
    return seq


def t_norm(n: int, k: int, l: int):
    """Inner product of T members under x**(-3/2) (1-x)**(-1/2):
    delta_{kl} * pi/(2(k+l)-1) * (2n-k-l)!!/(2n-k-l-1)!! *
    (2n+k+l-1)!!/(2n+k+l-2)!!, using 0!! = 1 and (-1)!! = 1."""
    _check_indices(n, k, l)
    if k == 0 and l == 0:
        raise DivergenceError("the singular T member has no finite norm")
    if k != l:
        return PiRational(0, 0)
    s = k + l
    coeff = (
        Fraction(1, 2 * s - 1)
        * Fraction(double_factorial(2 * n - s), double_factorial(2 * n - s - 1))
        * Fraction(double_factorial(2 * n + s - 1), double_factorial(2 * n + s - 2))
    )
    return PiRational(0, coeff)


def t_single_integral(n: int, k: int):
    """Integral of a T member against the family weight:
    (2k-3)!!/(2k)!! * 2n*pi for k >= 1."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if k == 0:
        raise DivergenceError("singular T member is not integrable against the weight")
    coeff = Fraction(double_factorial(2 * k - 3), double_factorial(2 * k)) * 2 * n
    return PiRational(0, coeff)


def is_normalizable(kind: MarginalKind, k: int) -> bool:
    """False exactly for the singular k = 0 member of either marginal family."""
    if not isinstance(kind, MarginalKind):
        raise TypeError("kind must be a MarginalKind")
    return k != 0


def shifted_legendre_coefficients(m: int) -> DensePoly:
    """Legendre polynomial composed with 1-2x, built by the classical
    recurrence; independent oracle for the singular A member."""
    y = DensePoly((1, -2))
    prev, cur = DensePoly.one(), y
    if m == 0:
        return prev
    for j in range(1, m):
        nxt = (y * cur.scale(2 * j + 1) - prev.scale(j)).scale(Fraction(1, j + 1))
        prev, cur = cur, nxt
    return cur


def shifted_chebyshev_coefficients(m: int) -> DensePoly:
    """Chebyshev polynomial of the first kind composed with 1-2x, built by
    the classical recurrence; independent oracle for the singular T member."""
    y = DensePoly((1, -2))
    prev, cur = DensePoly.one(), y
    if m == 0:
        return prev
    for _ in range(1, m):
        prev, cur = cur, y * cur.scale(2) - prev
    return cur


def plot_table(kind: MarginalKind, n: int, points: int, exact: bool = False):
    """Rows (x, member values k = 1..n) on a uniform grid including both
    endpoints; the raw data behind the family figures."""
    if points < 2:
        raise ValueError("need at least two sample points")
    members = [a_coefficients(n, k) if kind is MarginalKind.A else t_coefficients(n, k)
               for k in range(1, n + 1)]
    rows = []
    for i in range(points):
        x = Fraction(i, points - 1) if exact else i / (points - 1)
        rows.append((x, tuple(member(x) for member in members)))
    return rows


def _check_indices(n: int, k: int, l: int):
    if not (0 <= k <= n and 0 <= l <= n):
        raise ValueError("need 0 <= k, l <= n")
