"""Brute-force statistics from truncated Fock amplitudes.

Nothing here calls a Bessel function: states come from the Gamma-function
series (normalized by their own summed weight) and every expectation value
is a ladder-operator computation.  This is the independent route against
which :mod:`wignercat.observables` is checked.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .catstate import WignerCatSpec, build
from .errors import ConsistencyError
from .observables import StatisticsReport
from .wha import DEFAULT_LEAK_TOL, FockVector, Op, apply_chain

__all__ = [
    "OracleResult",
    "moment",
    "quadratic_form",
    "oracle_state",
    "oracle_statistics",
    "relative_deviation",
]


_DEGENERATE_COMM = 1e-12


@dataclass(frozen=True)
class OracleResult:
    value: complex
    leakage: float
    terms_used: int


def _norm2(v: FockVector) -> float:
    return float(np.sum(np.abs(v.amplitudes) ** 2))


def moment(v: FockVector, power: int) -> OracleResult:
    """``sum_n n^power |c_n|^2`` (divided by the squared norm)."""
    if power not in (1, 2):
        raise ValueError("power must be 1 or 2")
    weights = np.abs(v.amplitudes) ** 2
    n = np.arange(v.amplitudes.size, dtype=float)
    value = float(np.sum(n ** power * weights)) / float(np.sum(weights))
    return OracleResult(complex(value), 0.0, int(np.count_nonzero(weights)))


def quadratic_form(v: FockVector, chain: Sequence[Op | str], leak_tol: float = DEFAULT_LEAK_TOL) -> OracleResult:
    """``<v|chain|v> / <v|v>`` with the cutoff leakage of the chain."""
    out = apply_chain(chain, v, leak_tol)
    value = complex(np.vdot(v.amplitudes, out.amplitudes)) / _norm2(v)
    return OracleResult(value, out.leakage - v.leakage, int(np.count_nonzero(v.amplitudes)))


def oracle_state(spec: WignerCatSpec, truncation: int | None = None) -> FockVector:
    """The cat state normalized by its own series sum (no Bessel functions)."""
    return build(spec, truncation, normalization="series")


def _real(result: OracleResult, what: str, scale: float = 1.0) -> float:
    value = result.value
    if abs(value.imag) > 1e-10 * max(scale, abs(value.real), 1.0):
        raise ConsistencyError(f"{what} has imaginary part {value.imag:.3e}")
    return value.real


def oracle_statistics(
    spec: WignerCatSpec,
    truncation: int | None = None,
    leak_tol: float = DEFAULT_LEAK_TOL,
) -> StatisticsReport:
    """Every closed-form observable, recomputed by brute force."""
    v = oracle_state(spec, truncation)

    def ev(*chain):
        return quadratic_form(v, chain, leak_tol)

    mean_n = moment(v, 1).value.real
    mean_n2 = moment(v, 2).value.real
    comm = 1.0 + 2.0 * spec.lam * _real(ev(Op.PARITY), "<R>")

    mean_x = ev(Op.POSITION).value
    mean_p = ev(Op.MOMENTUM).value
    var_x = _real(ev(Op.POSITION, Op.POSITION), "<x^2>") - (mean_x * mean_x).real
    var_p = _real(ev(Op.MOMENTUM, Op.MOMENTUM), "<p^2>") - (mean_p * mean_p).real
    # <R> is +-1 up to rounding; treat a rounding-level commutator as zero
    if abs(comm) <= _DEGENERATE_COMM:
        s_x = s_p = math.nan
    else:
        half = abs(comm) / 2
        s_x, s_p = (var_x - half) / half, (var_p - half) / half

    jm, jp = ev(Op.J_MINUS).value, ev(Op.J_PLUS).value
    mm, pp = ev(Op.J_MINUS, Op.J_MINUS).value, ev(Op.J_PLUS, Op.J_PLUS).value
    mp, pm = ev(Op.J_MINUS, Op.J_PLUS).value, ev(Op.J_PLUS, Op.J_MINUS).value
    scale = abs(mp) + abs(mm)
    # X1 = (J- + J+)/2,  X2 = (J- - J+)/(2i)
    x1_sq = (mm + mp + pm + pp) / 4
    x2_sq = -(mm - mp - pm + pp) / 4
    x1_mean = (jm + jp) / 2
    x2_mean = (jm - jp) / 2j
    var_x1 = _real(OracleResult(x1_sq - x1_mean ** 2, 0.0, 0), "var X1", scale)
    var_x2 = _real(OracleResult(x2_sq - x2_mean ** 2, 0.0, 0), "var X2", scale)
    mean_j3 = _real(ev(Op.J3), "<J3>")
    half_j3 = abs(mean_j3) / 2

    return StatisticsReport(
        lam=spec.lam,
        w_abs=spec.w_abs,
        phi=spec.phi,
        parity=spec.parity.value,
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
        s_1=(var_x1 - half_j3) / half_j3,
        s_2=(var_x2 - half_j3) / half_j3,
        xp_uncertainty_lhs=var_x * var_p,
        xp_uncertainty_rhs=comm * comm / 4,
        su11_product_ratio=var_x1 * var_x2 / (mean_j3 ** 2 / 4),
    )


def relative_deviation(closed: float, brute: float, floor: float = 1e-3) -> float:
    """``|closed - brute| / max(|brute|, floor)``; two NaNs agree.

    With the default floor, ``deviation <= 1e-9`` means "within 1e-9
    relative, or 1e-12 absolute near zero".
    """
    if math.isnan(closed) and math.isnan(brute):
        return 0.0
    return abs(closed - brute) / max(abs(brute), floor)
