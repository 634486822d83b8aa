"""The full verification suite behind ``wignercat verify``.

Each suite returns a :class:`VerificationReport`; ``run`` concatenates the
requested ones.  Tolerances default to the package contracts and can be
overridden wholesale.
"""
from __future__ import annotations

import itertools
import math
from typing import Callable, Iterable, Iterator

import numpy as np

from . import catstate, observables, oracle, position, wha
from .catstate import Parity, WignerCatSpec
from .report import Check, VerificationReport

GRID_LAMBDAS = (-1.4, -0.25, 0.0, 0.5, 1.0, 2.5)
GRID_W = (0.25, 0.5, 1.0, 2.0, 3.5)
GRID_PHI = (0.0, math.pi / 4, math.pi / 2)
NORM_W = (0.1, 0.5, 1.0, 2.0, 4.0)
GRAM_LAMBDAS = (-0.25, 0.0, 0.5, 2.0)
HAMILTONIAN_LAMBDAS = (-1.4, -0.25, 0.0, 0.5, 1.0, 2.0, 2.5)

# the quantities compared between the closed forms and the oracle
ORACLE_FIELDS = (
    "mean_n", "mean_n2", "mandel_q", "var_x", "var_p", "commutator_mean", "s_x", "s_p",
    "var_x1", "var_x2", "mean_j3", "s_1", "s_2",
)


def legal(lam: float, parity: Parity) -> bool:
    return lam > (-1.5 if parity is Parity.ODD else -0.5)


def grid_specs(
    lambdas: Iterable[float] = GRID_LAMBDAS,
    ws: Iterable[float] = GRID_W,
    phis: Iterable[float] = GRID_PHI,
) -> Iterator[WignerCatSpec]:
    """Sector-legal points of the lambda x |w| x phi x parity grid."""
    for lam, w, phi, parity in itertools.product(lambdas, ws, phis, Parity):
        if legal(lam, parity):
            yield WignerCatSpec(lam, w, phi, parity)


def _label(spec: WignerCatSpec) -> str:
    return f"lam={spec.lam:g} |w|={spec.w_abs:g} phi={spec.phi:.4f} {spec.parity.value}"


def algebra(tol: float = 1e-11) -> VerificationReport:
    report = VerificationReport()
    for lam in GRID_LAMBDAS:
        report.extend(wha.verify_algebra(lam, 64, tol))
    return report


def normalization(tol: float = 1e-12) -> VerificationReport:
    report = VerificationReport()
    for lam, w, parity in itertools.product(GRID_LAMBDAS, NORM_W, Parity):
        if not legal(lam, parity):
            continue
        v = catstate.build(WignerCatSpec(lam, w, 0.0, parity))
        report.checks.append(Check(f"normalization lam={lam:g} |w|={w:g} {parity.value}", abs(v.norm() ** 2 - 1), tol))
    return report


def eigenvalue(tol: float = 1e-10) -> VerificationReport:
    report = VerificationReport()
    for spec in grid_specs():
        residual = catstate.eigenvalue_residual(spec, catstate.build(spec))
        report.checks.append(Check(f"a^2 eigenvalue {_label(spec)}", residual, tol))
    return report


def oracle_equivalence(tol: float = 1e-9) -> VerificationReport:
    report = VerificationReport()
    for spec in grid_specs():
        closed = observables.statistics(spec)
        brute = oracle.oracle_statistics(spec)
        devs = {f: oracle.relative_deviation(getattr(closed, f), getattr(brute, f)) for f in ORACLE_FIELDS}
        # NaN must win the max, otherwise a NaN deviation would hide
        worst = max(devs, key=lambda f: math.inf if math.isnan(devs[f]) else devs[f])
        report.checks.append(Check(f"oracle {_label(spec)} (worst: {worst})", devs[worst], tol))
    return report


def su11(tol: float = 1e-10) -> VerificationReport:
    report = VerificationReport()
    for spec in grid_specs():
        # closed forms and brute force must both saturate the bound
        for source, stats in (("closed", observables.statistics(spec)), ("oracle", oracle.oracle_statistics(spec))):
            residual = float(np.max(np.abs([stats.s_1, stats.s_2, stats.su11_product_ratio - 1])))
            report.checks.append(Check(f"su(1,1) minimum uncertainty [{source}] {_label(spec)}", residual, tol))
    return report


def orthonormality(tol: float = 1e-8) -> VerificationReport:
    report = VerificationReport()
    for lam in GRAM_LAMBDAS:
        g = position.gram_matrix(12, lam)
        report.checks.append(Check(f"Gram matrix n,m<=12 lam={lam:g}", float(np.max(np.abs(g - np.eye(len(g))))), tol))
    return report


def hamiltonian(tol: float = 1e-5) -> VerificationReport:
    report = VerificationReport()
    for lam in HAMILTONIAN_LAMBDAS:
        worst = float(np.max([
            position.hamiltonian_residual(n, lam)
            for n in range(11)
            if legal(lam, Parity.ODD if n % 2 else Parity.EVEN)
        ]))
        report.checks.append(Check(f"PHO eigen-equation n<=10 lam={lam:g}", worst, tol))
    return report


def regression(tol: float | None = None) -> VerificationReport:
    amp_tol = 1e-12 if tol is None else tol
    mean_tol = 1e-10 if tol is None else tol
    report = VerificationReport()
    for w, parity in itertools.product(GRID_W, Parity):
        spec = WignerCatSpec(0.0, w, math.pi / 3, parity)
        v = catstate.build(spec)
        ref = catstate.schrodinger_cat(spec.w, parity, v.truncation)
        report.checks.append(Check(f"lam=0 amplitudes |w|={w:g} {parity.value}", float(np.max(np.abs(v.amplitudes - ref))), amp_tol))
        z = w * w
        expected = z * math.tanh(z) if parity is Parity.EVEN else z / math.tanh(z)
        mean_n, _ = observables.number_moments(0.0, w, parity)
        report.checks.append(Check(f"lam=0 <N> |w|={w:g} {parity.value}", abs(mean_n - expected), mean_tol))
    return report


def _violation(values, should_be_negative: bool) -> float:
    arr = np.asarray(values)
    return float(max(0.0, arr.max() if should_be_negative else -arr.min()))


def signs(tol: float | None = None) -> VerificationReport:
    """Qualitative sign claims; residual is the size of the violation."""
    limit_tol = 1e-6 if tol is None else tol
    tol = 0.0 if tol is None else tol
    ws = np.linspace(0.05, 4.0, 200)
    report = VerificationReport()

    def q(lam, parity):
        return [observables.mandel_q(lam, w, parity) for w in ws]

    def sx(lam, parity):
        return [observables.xp_squeezing(lam, w, math.pi / 2, parity)[0] for w in ws]

    for lam in (0.0, 0.5, 1.0, 2.0):
        report.checks.append(Check(f"Q+ > 0 on [0.05, 4] lam={lam:g}", _violation(q(lam, "even"), False), tol))
    tail = [observables.mandel_q(-0.25, w, "even") for w in ws[ws > 1]]
    report.checks.append(Check("Q+ < 0 somewhere in (1, 4] lam=-0.25", max(0.0, min(tail)), tol))
    for lam in (-1.0, -0.25, 0.0):
        report.checks.append(Check(f"Q- < 0 on [0.05, 4] lam={lam:g}", _violation(q(lam, "odd"), True), tol))
    for lam in (0.5, 1.0):
        report.checks.append(Check(f"Q- > 0 at |w|=4 lam={lam:g}", max(0.0, -observables.mandel_q(lam, 4.0, "odd")), tol))
    for lam in (1.0, 2.0):
        report.checks.append(Check(f"S_x+ < 0 at phi=pi/2 lam={lam:g}", _violation(sx(lam, "even"), True), tol))
    for lam in (-1.0, -0.5):
        report.checks.append(Check(f"S_x- < 0 at phi=pi/2 lam={lam:g}", _violation(sx(lam, "odd"), True), tol))
    limit = observables.mandel_q(0.5, 1e-4, "odd")
    report.checks.append(Check("Q-(|w| -> 0) = -1", abs(limit + 1.0), limit_tol))
    return report


SUITES: dict[str, Callable[..., VerificationReport]] = {
    "algebra": algebra,
    "normalization": normalization,
    "eigenvalue": eigenvalue,
    "oracle": oracle_equivalence,
    "su11": su11,
    "orthonormality": orthonormality,
    "hamiltonian": hamiltonian,
    "regression": regression,
    "signs": signs,
}


def run(only: Iterable[str] | None = None, tol: float | None = None) -> VerificationReport:
    """Run the named suites (all by default), optionally forcing one tolerance."""
    names = list(only) if only else list(SUITES)
    report = VerificationReport()
    for name in names:
        suite = SUITES[name]
        report.extend(suite() if tol is None else suite(tol=tol))
    return report
