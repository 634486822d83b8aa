"""Closed-form statistics of Wigner cat states.

Every quantity is a function of ``lam``, ``z = |w|^2``, the phase and the
parity, through one Bessel ratio ``g``:

    even:  g = I_{lam+1/2}(z) / I_{lam-1/2}(z)
    odd:   g = I_{lam-1/2}(z) / I_{lam+1/2}(z)

Both are obtained from :func:`specfun.bessel_i_ratio` with an order above -1
(``lam - 1/2`` for even, ``lam + 1/2`` for odd), using the recurrence
``I_{v-1} - I_{v+1} = (2v/z) I_v`` for the odd case.  ``I_nu`` itself is
never evaluated, so large ``|w|`` does not overflow.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, fields

from . import specfun
from .catstate import Parity, WignerCatSpec, check_sector
from .errors import ConsistencyError, DegenerateInputError, DomainError

__all__ = [
    "StatisticsReport",
    "z_ratio",
    "number_moments",
    "mandel_q",
    "commutator_mean",
    "xp_variances",
    "xp_squeezing",
    "su11_statistics",
    "statistics",
    "CSV_FIELDS",
]

CSV_FIELDS = (
    "lambda", "w_abs", "phi", "parity",
    "mean_n", "mean_n2", "mandel_q", "var_x", "var_p", "s_x", "s_p",
    "var_x1", "var_x2", "mean_j3", "s_1", "s_2", "su11_product_ratio",
)


@dataclass(frozen=True)
class StatisticsReport:
    lam: float
    w_abs: float
    phi: float
    parity: str
    mean_n: float
    mean_n2: float
    mandel_q: float
    var_x: float
    var_p: float
    commutator_mean: float
    s_x: float
    s_p: float
    var_x1: float
    var_x2: float
    mean_j3: float
    s_1: float
    s_2: float
    xp_uncertainty_lhs: float
    xp_uncertainty_rhs: float
    su11_product_ratio: float

    def as_dict(self) -> dict:
        return asdict(self)

    def csv_row(self) -> dict:
        d = self.as_dict()
        d["lambda"] = d.pop("lam")
        return {k: d[k] for k in CSV_FIELDS}

    @classmethod
    def numeric_fields(cls) -> list[str]:
        return [f.name for f in fields(cls) if f.name not in ("lam", "w_abs", "phi", "parity")]


def _z(w_abs: float) -> float:
    w_abs = float(w_abs)
    if not math.isfinite(w_abs) or w_abs < 0:
        raise DomainError(f"|w| must be finite and nonnegative, got {w_abs}")
    if w_abs == 0.0:
        raise DegenerateInputError("closed forms are 0/0 at |w| = 0")
    return w_abs * w_abs


def z_ratio(lam: float, w_abs: float, parity: Parity | str) -> float:
    """``|w|^2 g`` with ``g`` the sector's Bessel ratio (see module doc)."""
    parity = Parity(parity)
    check_sector(lam, parity)
    z = _z(w_abs)
    if parity is Parity.EVEN:
        return z * specfun.bessel_i_ratio(lam - 0.5, z)
    # z I_{lam-1/2}/I_{lam+1/2} = z I_{lam+3/2}/I_{lam+1/2} + 2 lam + 1
    return z * specfun.bessel_i_ratio(lam + 0.5, z) + 2.0 * lam + 1.0


def number_moments(lam: float, w_abs: float, parity: Parity | str) -> tuple[float, float]:
    """(<N>, <N^2>) of the even or odd state."""
    parity = Parity(parity)
    zg = z_ratio(lam, w_abs, parity)
    z = w_abs * w_abs
    if parity is Parity.EVEN:
        return zg, z * z - (2 * lam - 1) * zg
    return zg - 2 * lam, z * z + 4 * lam * lam - (2 * lam - 1) * zg


def mandel_q(lam: float, w_abs: float, parity: Parity | str) -> float:
    """Mandel parameter; negative means sub-Poissonian."""
    mean, mean2 = number_moments(lam, w_abs, parity)
    if mean <= 0.0:
        raise DegenerateInputError("Mandel parameter undefined for <N> = 0")
    return (mean2 - mean * mean) / mean - 1.0


def commutator_mean(lam: float, parity: Parity | str) -> float:
    """``<1 + 2 lam R>``; the parity operator is exactly +-1 on the state."""
    return 1.0 + 2.0 * lam * Parity(parity).sign


def xp_variances(lam: float, w_abs: float, phi: float, parity: Parity | str) -> tuple[float, float, float]:
    """(var_x, var_p, <1 + 2 lam R>).  Mean position and momentum vanish."""
    parity = Parity(parity)
    zg = z_ratio(lam, w_abs, parity)
    z = w_abs * w_abs
    twist = 2.0 * z * math.cos(phi) ** 2 - z
    shift = lam if parity is Parity.EVEN else -lam
    base = shift + 0.5 + zg
    return twist + base, -twist + base, commutator_mean(lam, parity)


def _normalized_excess(var: float, half_bound: float) -> float:
    return (var - half_bound) / half_bound


def xp_squeezing(lam: float, w_abs: float, phi: float, parity: Parity | str) -> tuple[float, float]:
    """Squeezing factors (S_x, S_p); a negative value means squeezing."""
    var_x, var_p, comm = xp_variances(lam, w_abs, phi, parity)
    if comm == 0.0:
        raise DegenerateInputError(
            f"<1 + 2 lambda R> vanishes for lambda = {lam} in the {Parity(parity).value} sector"
        )
    half = abs(comm) / 2.0
    s_x, s_p = _normalized_excess(var_x, half), _normalized_excess(var_p, half)
    # S >= -1 holds whenever the variance is nonnegative
    if min(s_x, s_p) < -1.0 - 1e-12:
        raise ConsistencyError(f"squeezing factor below -1: S_x={s_x}, S_p={s_p}")
    return s_x, s_p


def su11_statistics(lam: float, w_abs: float, parity: Parity | str):
    """(var_X1, var_X2, <J3>, S_1, S_2, var_X1 var_X2 / (<J3>^2 / 4))."""
    parity = Parity(parity)
    zg = z_ratio(lam, w_abs, parity)
    shift = lam if parity is Parity.EVEN else -lam
    var_x1 = shift / 4 + 1 / 8 + zg / 4
    var_x2 = shift / 4 + 1 / 8 + zg / 4
    mean_j3 = shift / 2 + 1 / 4 + zg / 2
    half = abs(mean_j3) / 2
    ratio = var_x1 * var_x2 / (mean_j3 * mean_j3 / 4)
    return var_x1, var_x2, mean_j3, _normalized_excess(var_x1, half), _normalized_excess(var_x2, half), ratio


def statistics(spec: WignerCatSpec) -> StatisticsReport:
    """All closed-form observables for one state.

    ``s_x`` and ``s_p`` are NaN in the one degenerate case (odd parity with
    ``lam = 1/2``) where the squeezing reference ``|<1 + 2 lam R>|/2`` is 0.
    """
    lam, w_abs, phi, parity = spec.lam, spec.w_abs, spec.phi, spec.parity
    mean_n, mean_n2 = number_moments(lam, w_abs, parity)
    var_x, var_p, comm = xp_variances(lam, w_abs, phi, parity)
    try:
        s_x, s_p = xp_squeezing(lam, w_abs, phi, parity)
    except DegenerateInputError:
        s_x = s_p = math.nan
    var_x1, var_x2, mean_j3, s_1, s_2, ratio = su11_statistics(lam, w_abs, parity)
    return StatisticsReport(
        lam=lam,
        w_abs=w_abs,
        phi=phi,
        parity=parity.value,
        mean_n=mean_n,
        mean_n2=mean_n2,
        mandel_q=(mean_n2 - mean_n ** 2) / mean_n - 1.0,
        var_x=var_x,
        var_p=var_p,
        commutator_mean=comm,
        s_x=s_x,
        s_p=s_p,
        var_x1=var_x1,
        var_x2=var_x2,
        mean_j3=mean_j3,
        s_1=s_1,
        s_2=s_2,
        xp_uncertainty_lhs=var_x * var_p,
        xp_uncertainty_rhs=comm * comm / 4.0,
        su11_product_ratio=ratio,
    )
