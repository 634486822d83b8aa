"""Position representation of the deformed oscillator basis and cat states.

    psi_{2n}(x)   = (-1)^n sqrt(n!/Gamma(n+lam+1/2)) |x|^lam e^{-x^2/2} L_n^{lam-1/2}(x^2)
    psi_{2n+1}(x) = (-1)^n sqrt(n!/Gamma(n+lam+3/2)) x |x|^lam e^{-x^2/2} L_n^{lam+1/2}(x^2)

Integrals over the real line are done in the variable ``t = x^2`` where the
weight ``t^alpha e^{-t}`` is the generalized Gauss-Laguerre weight, so the
``|x|^lam`` cusp at the origin (lam < 0) never has to be sampled.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_genlaguerre

from . import specfun
from .catstate import WignerCatSpec, build
from .errors import DomainError, QuadratureError

__all__ = [
    "WavefunctionSample",
    "psi",
    "orthonormality",
    "gram_matrix",
    "energy",
    "hamiltonian_residual",
    "cat_wavefunction",
    "cat_norm",
]

# roots of the order-150 Laguerre polynomial stay below ~600, so e^t is finite
_MAX_ORDER = 150


@dataclass(frozen=True, eq=False)
class WavefunctionSample:
    lam: float
    xs: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        xs = np.asarray(self.xs, dtype=float)
        values = np.asarray(self.values)
        if xs.ndim != 1 or xs.shape != values.shape:
            raise ValueError("xs and values must be 1-D arrays of equal length")
        if xs.size > 1 and not np.all(np.diff(xs) > 0):
            raise ValueError("grid must be strictly increasing")
        if not np.all(np.isfinite(values)):
            raise ValueError("wavefunction values must be finite")
        if self.lam < 0 and np.any(xs == 0):
            raise DomainError("x = 0 is excluded from the grid when lambda < 0")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "values", values)


def _check(n: int, lam: float) -> tuple[int, int]:
    if int(n) != n or n < 0:
        raise DomainError(f"basis index must be a nonnegative integer, got {n!r}")
    k, odd = divmod(int(n), 2)
    bound = -1.5 if odd else -0.5
    if not lam > bound:
        raise DomainError(f"psi_{n} requires lambda > {bound}, got {lam}")
    return k, odd


def psi(n: int, lam: float, x):
    """Orthonormal basis function ``<x|n, lam>``; ``x`` may be an array."""
    k, odd = _check(n, lam)
    x_arr = np.asarray(x, dtype=float)
    ax = np.abs(x_arr)
    if lam < 0 and np.any(ax == 0):
        raise DomainError("psi is singular at x = 0 for lambda < 0")
    mu = lam + 0.5 if odd else lam - 0.5
    log_pref = 0.5 * (math.lgamma(k + 1) - math.lgamma(k + mu + 1))
    with np.errstate(divide="ignore"):
        log_env = log_pref - 0.5 * x_arr ** 2 + lam * np.log(ax) if lam != 0 else log_pref - 0.5 * x_arr ** 2
    env = np.exp(log_env)
    if lam > 0:
        env = np.where(ax == 0, 0.0, env)
    value = (-1) ** k * env * specfun.laguerre(k, mu, x_arr ** 2)
    if odd:
        value = value * x_arr
    return float(value) if np.ndim(value) == 0 else value


def _gauss_laguerre(integrand, alpha: float, start: int, tol: float):
    """Adaptive-order generalized Gauss-Laguerre: doubles until converged."""
    order = max(start, 4)
    t, wts = roots_genlaguerre(order, alpha)
    prev = float(np.dot(wts, integrand(t)))
    while order < _MAX_ORDER:
        order = min(2 * order, _MAX_ORDER)
        t, wts = roots_genlaguerre(order, alpha)
        cur = float(np.dot(wts, integrand(t)))
        if abs(cur - prev) <= tol * max(1.0, abs(cur)):
            return cur
        prev = cur
    raise QuadratureError(f"Gauss-Laguerre did not converge by order {_MAX_ORDER}")


def orthonormality(n: int, m: int, lam: float, tol: float = 1e-13) -> float:
    """``int psi_n psi_m dx`` by quadrature; 0.0 exactly for opposite parity."""
    _check(n, lam)
    _check(m, lam)
    if (n - m) % 2:
        return 0.0
    odd = n % 2
    alpha = lam + 0.5 if odd else lam - 0.5

    # both half-lines contribute equally; dx = dt / (2 sqrt t)
    def integrand(t):
        root = np.sqrt(t)
        return psi(n, lam, root) * psi(m, lam, root) * np.exp(t) * t ** (-alpha - 0.5)

    return _gauss_laguerre(integrand, alpha, (n // 2 + m // 2) // 2 + 2, tol)


def gram_matrix(n_max: int, lam: float) -> np.ndarray:
    """Quadrature overlaps for indices 0..n_max admissible at ``lam``."""
    idx = [i for i in range(n_max + 1) if lam > (-1.5 if i % 2 else -0.5)]
    g = np.zeros((len(idx), len(idx)))
    for a, i in enumerate(idx):
        for b, j in enumerate(idx[a:], start=a):
            g[a, b] = g[b, a] = orthonormality(i, j, lam)
    return g


def energy(n: int, lam: float) -> float:
    """Diagonal of ``{a, a^dag}/2`` on ``|n, lam>``: ``n + lam + 1/2``."""
    return n + lam + 0.5


def hamiltonian_residual(
    n: int,
    lam: float,
    step: float = 1e-3,
    x_min: float = 0.2,
    x_max: float | None = None,
) -> float:
    """``max |H psi_n - E_n psi_n| / max |psi_n|`` on ``[x_min, x_max]``.

    ``H = (-d^2/dx^2 + x^2 + lam (lam - R) / x^2) / 2`` with ``R`` the parity
    of ``psi_n``; the second derivative uses the 5-point central stencil.
    ``psi_n`` has definite parity, so the positive half-line suffices.
    """
    _check(n, lam)
    if x_max is None:
        x_max = math.sqrt(2 * n + 2 * abs(lam) + 1) + 7.0
    if x_min - 2 * step <= 0:
        raise ValueError("grid must stay clear of the origin by two steps")
    xs = np.arange(x_min, x_max + 0.5 * step, step)
    f = lambda x: psi(n, lam, x)  # noqa: E731
    f0 = f(xs)
    d2 = (-f(xs + 2 * step) + 16 * f(xs + step) - 30 * f0 + 16 * f(xs - step) - f(xs - 2 * step)) / (
        12 * step * step
    )
    parity = -1 if n % 2 else 1
    h_psi = 0.5 * (-d2 + xs ** 2 * f0 + lam * (lam - parity) / xs ** 2 * f0)
    return float(np.max(np.abs(h_psi - energy(n, lam) * f0)) / np.max(np.abs(f0)))


def _superpose(spec: WignerCatSpec, x: np.ndarray, truncation: int | None) -> np.ndarray:
    v = build(spec, truncation)
    out = np.zeros(x.shape, dtype=complex)
    for n, c in enumerate(v.amplitudes):
        if c != 0:
            out += c * psi(n, spec.lam, x)
    return out


def cat_wavefunction(spec: WignerCatSpec, xs, truncation: int | None = None) -> WavefunctionSample:
    """``sum_n c_n psi_n(x)`` of the cat state on the grid ``xs``."""
    xs = np.asarray(xs, dtype=float)
    if spec.lam < 0 and np.any(xs == 0):
        raise DomainError("x = 0 is excluded from the grid when lambda < 0")
    return WavefunctionSample(spec.lam, xs, _superpose(spec, xs, truncation))


def cat_norm(spec: WignerCatSpec, truncation: int | None = None, tol: float = 1e-10) -> float:
    """``int |Psi(x)|^2 dx`` of the cat wavefunction, by Gauss-Laguerre in x^2."""
    alpha = spec.lam + 0.5 if spec.odd else spec.lam - 0.5

    def integrand(t):
        vals = _superpose(spec, np.sqrt(t), truncation)
        return np.abs(vals) ** 2 * np.exp(t) * t ** (-alpha - 0.5)

    return _gauss_laguerre(integrand, alpha, 16, tol)
