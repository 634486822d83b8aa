"""Overflow-safe special functions.

Everything here is a pure function of its arguments.  The modified Bessel
function is evaluated in log space so that ``log_bessel_i`` stays finite far
beyond the point where ``I_nu(x)`` itself overflows a double, and the ratio
``I_{nu+1}(x) / I_nu(x)`` never forms either factor.

Laguerre and generalized Hermite polynomials accept scalars or numpy arrays
for ``x``.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

__all__ = [
    "log_gamma",
    "log_bessel_i",
    "bessel_i",
    "bessel_i_ratio",
    "laguerre",
    "gen_hermite",
]

# log(DBL_MAX)
_LOG_MAX = 709.782712893384
_RESCALE = 1e280
_LOG_RESCALE = math.log(_RESCALE)
_EPS = 1e-17
# below this the asymptotic expansion is never tried
_ASYMPTOTIC_MIN_X = 30.0


def log_gamma(x: float) -> float:
    """Natural log of the gamma function for real ``x > 0``."""
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"log_gamma requires a finite x > 0, got {x!r}")
    return math.lgamma(x)


def _check_order(nu: float) -> float:
    nu = float(nu)
    if not math.isfinite(nu) or nu <= -1.0:
        raise DomainError(f"Bessel order must be finite and > -1, got {nu!r}")
    return nu


def _log_series(nu: float, x: float) -> float:
    """log I_nu(x) from the ascending series, summed with periodic rescaling.

    Terms are generated by their ratio ``(x/2)^2 / (k (k + nu))`` so no large
    gamma values are ever formed; all terms are positive for ``nu > -1``.
    """
    half = 0.5 * x
    q = half * half
    log_lead = nu * math.log(half) - math.lgamma(nu + 1.0)
    term = 1.0
    total = 1.0
    shift = 0.0
    k = 0
    while True:
        k += 1
        term *= q / (k * (k + nu))
        total += term
        if total > _RESCALE:
            total /= _RESCALE
            term /= _RESCALE
            shift += _LOG_RESCALE
        if k > half and term < _EPS * total:
            break
    return log_lead + shift + math.log(total)


def _asymptotic_sum(nu: float, x: float) -> float | None:
    """Sum of the large-x expansion  sum_k (-1)^k a_k(nu) / x^k.

    Returns None when the series starts to diverge before reaching double
    precision, or when cancellation among terms would spoil the result.
    """
    mu = 4.0 * nu * nu
    term = 1.0
    total = 1.0
    biggest = 1.0
    for k in range(1, 400):
        odd = 2 * k - 1
        new = -term * (mu - odd * odd) / (8.0 * k * x)
        if abs(new) > abs(term) and k > 1:
            return None
        term = new
        total += term
        biggest = max(biggest, abs(term))
        if abs(term) < _EPS * abs(total):
            if biggest > 1e3 * abs(total) or total <= 0.0:
                return None
            return total
    return None


def log_bessel_i(nu: float, x: float) -> float:
    """Natural log of the modified Bessel function ``I_nu(x)``.

    Valid for ``nu > -1`` and ``x >= 0``.  Uses the power series (in log
    space) for moderate ``x`` and the Hankel asymptotic expansion for large
    ``x`` whenever it converges to full precision.
    """
    nu = _check_order(nu)
    x = float(x)
    if not math.isfinite(x) or x < 0.0:
        raise DomainError(f"bessel argument must be finite and >= 0, got {x!r}")
    if x == 0.0:
        if nu == 0.0:
            return 0.0
        if nu > 0.0:
            return -math.inf
        return math.inf
    if x > _ASYMPTOTIC_MIN_X:
        s = _asymptotic_sum(nu, x)
        if s is not None:
            return x - 0.5 * math.log(2.0 * math.pi * x) + math.log(s)
    return _log_series(nu, x)


def bessel_i(nu: float, x: float) -> float:
    """Modified Bessel function of the first kind, ``I_nu(x)``.

    Raises ``OverflowError`` when the result is not representable (roughly
    ``x > 713``) or when ``I_nu(0)`` is infinite (``-1 < nu < 0``).  Use
    ``log_bessel_i`` or ``bessel_i_ratio`` on those paths.
    """
    log_value = log_bessel_i(nu, x)
    if log_value > _LOG_MAX:
        raise OverflowError(f"I_{nu}({x}) exceeds the double range")
    return math.exp(log_value)


def _ratio_cf(nu: float, x: float, max_iter: int = 10_000_000) -> float:
    # Gauss continued fraction I_{nu+1}/I_nu = 1/(b1 + 1/(b2 + ...)),
    # b_k = 2 (nu + k) / x, evaluated with the modified Lentz algorithm.
    tiny = 1e-300
    f = 2.0 * (nu + 1.0) / x
    c = f
    d = 0.0
    for k in range(2, max_iter):
        b = 2.0 * (nu + k) / x
        d = b + d
        d = tiny if d == 0.0 else d
        c = b + 1.0 / c
        c = tiny if c == 0.0 else c
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 1e-16:
            return 1.0 / f
    raise ArithmeticError(f"continued fraction for I ratio did not converge (nu={nu}, x={x})")


def bessel_i_ratio(nu: float, x: float) -> float:
    """``I_{nu+1}(x) / I_nu(x)`` for ``nu > -1`` and ``x > 0``, overflow free.

    Large arguments use the quotient of the two asymptotic series (the
    exponential prefactors cancel); otherwise Gauss's continued fraction.
    """
    nu = _check_order(nu)
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"bessel_i_ratio requires a finite x > 0, got {x!r}")
    if x > _ASYMPTOTIC_MIN_X:
        top = _asymptotic_sum(nu + 1.0, x)
        bottom = _asymptotic_sum(nu, x)
        if top is not None and bottom is not None:
            return top / bottom
    return _ratio_cf(nu, x)


def laguerre(n: int, mu: float, x):
    """Generalized Laguerre polynomial ``L_n^mu(x)`` by forward recurrence."""
    if int(n) != n or n < 0:
        raise DomainError(f"Laguerre degree must be a nonnegative integer, got {n!r}")
    n = int(n)
    mu = float(mu)
    if not mu > -1.0:
        raise DomainError(f"Laguerre order must satisfy mu > -1, got {mu!r}")
    x = np.asarray(x, dtype=float) if not np.isscalar(x) else float(x)
    prev = 1.0 + 0.0 * x
    if n == 0:
        return prev
    cur = 1.0 + mu - x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + mu - x) * cur - (k + mu) * prev) / (k + 1)
    return cur


def gen_hermite(n: int, lam: float, x):
    """Szego's generalized Hermite polynomial ``H_n^lam(x)``.

    Even degrees need ``lam > -1/2``; odd degrees need ``lam > -3/2``.  For
    ``lam = 0`` these are the physicists' Hermite polynomials.
    """
    if int(n) != n or n < 0:
        raise DomainError(f"Hermite degree must be a nonnegative integer, got {n!r}")
    n = int(n)
    lam = float(lam)
    m, odd = divmod(n, 2)
    bound = -1.5 if odd else -0.5
    if not lam > bound:
        raise DomainError(
            f"generalized Hermite of {'odd' if odd else 'even'} degree requires lambda > {bound}, got {lam!r}"
        )
    x = np.asarray(x, dtype=float) if not np.isscalar(x) else float(x)
    scale = (-1.0) ** m * math.ldexp(float(math.factorial(m)), 2 * m + odd)
    if odd:
        return scale * x * laguerre(m, lam + 0.5, x * x)
    return scale * laguerre(m, lam - 0.5, x * x)
