"""Even and odd Wigner cat states.

The even state has amplitudes on ``|2n, lam>`` proportional to
``w^(2n) / sqrt(2^(2n) n! Gamma(n + lam + 1/2))`` and the odd one on
``|2n+1, lam>`` proportional to
``w^(2n+1) / sqrt(2^(2n+1) n! Gamma(n + lam + 3/2))``.  Both are eigenstates
of ``a^2`` with eigenvalue ``w^2``; at ``lam = 0`` they are the usual
even/odd coherent-state superpositions.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .errors import DegenerateInputError, DomainError
from .wha import FockVector, apply, sector_bound

__all__ = [
    "Parity",
    "WignerCatSpec",
    "check_sector",
    "auto_truncation",
    "log_series_terms",
    "build",
    "eigenvalue_residual",
    "schrodinger_cat",
    "ODD_MIN_W",
]

# below this |w| the odd state is 0/0 and is rejected
ODD_MIN_W = 1e-8
_TAIL_TOL = 1e-16
_LN2 = math.log(2.0)


class Parity(str, enum.Enum):
    EVEN = "even"
    ODD = "odd"

    @property
    def sign(self) -> int:
        return 1 if self is Parity.EVEN else -1


def check_sector(lam: float, parity: Parity | str) -> None:
    """Raise DomainError unless ``lam`` is admissible for ``parity``."""
    parity = Parity(parity)
    bound = sector_bound(odd=parity is Parity.ODD)
    if not (math.isfinite(lam) and lam > bound):
        raise DomainError(f"{parity.value} Wigner cat states require lambda > {bound}, got {lam}")


@dataclass(frozen=True)
class WignerCatSpec:
    lam: float
    w_abs: float
    phi: float = 0.0
    parity: Parity = Parity.EVEN

    def __post_init__(self):
        parity = Parity(self.parity)
        lam, w_abs, phi = float(self.lam), float(self.w_abs), float(self.phi)
        check_sector(lam, parity)
        if not math.isfinite(w_abs) or w_abs < 0.0:
            raise DomainError(f"|w| must be finite and nonnegative, got {w_abs}")
        if not math.isfinite(phi):
            raise DomainError(f"phase must be finite, got {phi}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "w_abs", w_abs)
        object.__setattr__(self, "phi", phi % (2.0 * math.pi))
        object.__setattr__(self, "parity", parity)

    @property
    def w(self) -> complex:
        return self.w_abs * complex(math.cos(self.phi), math.sin(self.phi))

    @property
    def odd(self) -> bool:
        return self.parity is Parity.ODD


def _level_log_weight(k: int, lam: float, odd: bool) -> float:
    # log of 2^(2k+odd) k! Gamma(k + lam + 1/2 + odd)
    return (2 * k + odd) * _LN2 + math.lgamma(k + 1) + math.lgamma(k + lam + 0.5 + odd)


def log_series_terms(spec: WignerCatSpec, truncation: int) -> np.ndarray:
    """log |c_n| of the unnormalized series for n = 0..truncation.

    Entries outside the state's parity sector are ``-inf``.
    """
    out = np.full(truncation + 1, -math.inf)
    log_w = math.log(spec.w_abs) if spec.w_abs > 0 else -math.inf
    for n in range(int(spec.odd), truncation + 1, 2):
        k = n // 2
        if spec.w_abs == 0 and n > 0:
            continue
        power = n * log_w if n > 0 else 0.0
        out[n] = power - 0.5 * _level_log_weight(k, spec.lam, spec.odd)
    return out


def _tail_mass(spec: WignerCatSpec, truncation: int, log_norm2: float) -> float:
    """Normalized weight of the series beyond the cutoff."""
    if spec.w_abs == 0:
        return 0.0
    log_w = math.log(spec.w_abs)
    total = 0.0
    n = truncation + 1
    if (n % 2) != int(spec.odd):
        n += 1
    while True:
        k = n // 2
        term = math.exp(2 * n * log_w - _level_log_weight(k, spec.lam, spec.odd) - log_norm2)
        total += term
        # terms decay faster than geometrically once past the peak
        if term < 1e-3 * _TAIL_TOL and n > 2 * spec.w_abs ** 2:
            return total
        n += 2


def auto_truncation(w_abs: float) -> int:
    """Default cutoff: the smallest even integer >= 4|w|^2 + 60, at least 64."""
    n = math.ceil(4.0 * w_abs * w_abs + 60.0)
    n += n % 2
    return max(64, n)


def _log_bessel_norm2(spec: WignerCatSpec) -> float:
    """log of sum_n |unnormalized c_n|^2, via the Bessel closed form."""
    z = spec.w_abs ** 2
    order = spec.lam + 0.5 if spec.odd else spec.lam - 0.5
    return specfun.log_bessel_i(order, z) - (2.0 * spec.lam - 1.0) * math.log(spec.w_abs / math.sqrt(2.0))


def build(spec: WignerCatSpec, truncation: int | None = None, normalization: str = "bessel") -> FockVector:
    """Wigner cat state as a truncated Fock vector.

    ``normalization="bessel"`` uses the modified-Bessel prefactor;
    ``"series"`` divides by the summed squared amplitudes instead and never
    touches a Bessel function (the oracle path).  With ``truncation=None``
    the cutoff starts at :func:`auto_truncation` and grows until the dropped
    tail weighs less than 1e-16.
    """
    if normalization not in ("bessel", "series"):
        raise ValueError(f"unknown normalization {normalization!r}")
    if spec.odd and spec.w_abs < ODD_MIN_W:
        raise DegenerateInputError(
            f"odd Wigner cat state is undefined for |w| < {ODD_MIN_W:g}; its limit is the Fock state |1, lambda>"
        )
    auto = truncation is None
    nmax = auto_truncation(spec.w_abs) if auto else int(truncation)
    if nmax < 1:
        raise ValueError("truncation must be >= 1")

    if spec.w_abs == 0.0:
        amps = np.zeros(nmax + 1, dtype=complex)
        amps[0] = 1.0
        return FockVector(spec.lam, amps)

    while True:
        logs = log_series_terms(spec, nmax)
        finite = np.isfinite(logs)
        peak = logs[finite].max()
        log_norm2_series = 2 * peak + math.log(np.sum(np.exp(2 * (logs[finite] - peak))))
        if normalization == "bessel":
            log_norm2 = _log_bessel_norm2(spec)
        else:
            log_norm2 = log_norm2_series
        if not auto or _tail_mass(spec, nmax, log_norm2) < _TAIL_TOL:
            break
        nmax += 16

    n = np.arange(nmax + 1)
    mags = np.where(finite, np.exp(np.where(finite, logs, 0.0) - 0.5 * log_norm2), 0.0)
    amps = mags * np.exp(1j * spec.phi * n)
    return FockVector(spec.lam, amps)


def eigenvalue_residual(spec: WignerCatSpec, v: FockVector) -> float:
    """``|| a^2 v - w^2 v ||`` over the indices below ``truncation - 2``."""
    twice = apply("annihilate", apply("annihilate", v, np.inf), np.inf)
    diff = twice.amplitudes - spec.w ** 2 * v.amplitudes
    return float(np.linalg.norm(diff[: v.truncation - 2]))


def schrodinger_cat(alpha: complex, parity: Parity | str, truncation: int) -> np.ndarray:
    """Amplitudes of the undeformed even/odd cat in the ordinary Fock basis.

    Even: ``alpha^(2n) / sqrt((2n)! cosh|alpha|^2)``; odd: ``alpha^(2n+1) /
    sqrt((2n+1)! sinh|alpha|^2)``.
    """
    parity = Parity(parity)
    alpha = complex(alpha)
    r2 = abs(alpha) ** 2
    if parity is Parity.ODD and r2 == 0:
        raise DegenerateInputError("odd cat state is undefined at alpha = 0")
    # log cosh / log sinh without overflow
    if parity is Parity.EVEN:
        log_norm = r2 + math.log1p(math.exp(-2 * r2)) - _LN2
    else:
        log_norm = r2 + math.log(-math.expm1(-2 * r2)) - _LN2
    amps = np.zeros(truncation + 1, dtype=complex)
    start = 0 if parity is Parity.EVEN else 1
    for n in range(start, truncation + 1, 2):
        if alpha == 0:
            amps[n] = 1.0 if n == 0 else 0.0
            continue
        mag = math.exp(n * math.log(abs(alpha)) - 0.5 * math.lgamma(n + 1) - 0.5 * log_norm)
        amps[n] = mag * np.exp(1j * n * np.angle(alpha))
    return amps
