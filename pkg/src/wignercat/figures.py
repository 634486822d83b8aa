"""Sweep tables for the figure panels 1a-4b and general |w| sweeps.

Every cell is ``getattr(observables.statistics(spec), quantity)`` so any
figure file can be re-derived from single-point ``stats`` queries.  Numbers
are written with 17 significant digits; output is byte-for-byte
deterministic.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import observables
from .catstate import Parity, WignerCatSpec, check_sector
from .errors import DomainError

__all__ = ["FigureDef", "FIGURES", "SweepConfig", "fmt", "figure_table", "render_table", "run_sweep", "render_sweep"]

EVEN_LAMBDAS = (-0.25, 0.0, 0.5, 1.0, 2.0)
ODD_LAMBDAS = (-1.0, -0.25, 0.0, 0.5, 1.0)
# lam = 1/2 is the degenerate point of the odd-sector squeezing factor
ODD_SQUEEZE_LAMBDAS = (-1.0, -0.5, -0.25, 0.0, 1.0)
FIG4_PHIS = (0.0, math.pi / 6, math.pi / 3, math.pi / 2)


def fmt(value: float) -> str:
    return format(float(value), ".17g")


@dataclass(frozen=True)
class FigureDef:
    quantity: str
    parity: Parity
    lambdas: tuple[float, ...]
    phis: tuple[float, ...] = (0.0,)
    w_min: float = 0.05
    w_max: float = 4.0
    w_steps: int = 200
    title: str = ""

    def curves(self) -> list[tuple[float, float]]:
        return [(lam, phi) for lam in self.lambdas for phi in self.phis]

    def label(self, lam: float, phi: float) -> str:
        if len(self.phis) > 1:
            return f"{self.quantity}[phi={fmt(phi)}]"
        return f"{self.quantity}[lambda={fmt(lam)}]"


FIGURES: dict[str, FigureDef] = {
    "1a": FigureDef("mandel_q", Parity.EVEN, EVEN_LAMBDAS, title="Mandel Q, even states"),
    "1b": FigureDef("mandel_q", Parity.ODD, ODD_LAMBDAS, title="Mandel Q, odd states"),
    "2a": FigureDef("s_x", Parity.EVEN, EVEN_LAMBDAS, (math.pi / 2,), title="S_x, even states, phi = pi/2"),
    "2b": FigureDef("s_x", Parity.ODD, ODD_SQUEEZE_LAMBDAS, (math.pi / 2,), title="S_x, odd states, phi = pi/2"),
    "3a": FigureDef("s_p", Parity.EVEN, EVEN_LAMBDAS, (0.0,), title="S_p, even states, phi = 0"),
    "3b": FigureDef("s_p", Parity.ODD, ODD_SQUEEZE_LAMBDAS, (0.0,), title="S_p, odd states, phi = 0"),
    "4a": FigureDef("s_x", Parity.EVEN, (-0.25,), FIG4_PHIS, title="S_x, even states, lambda = -1/4"),
    "4b": FigureDef("s_x", Parity.ODD, (-1.0,), FIG4_PHIS, title="S_x, odd states, lambda = -1"),
}


def _w_grid(w_min: float, w_max: float, steps: int) -> np.ndarray:
    if not (0 <= w_min < w_max) or steps < 2:
        raise ValueError("need 0 <= w_min < w_max and at least 2 steps")
    return np.linspace(w_min, w_max, steps)


def figure_table(fig: FigureDef) -> tuple[list[str], list[list[float]]]:
    """Header and numeric rows (first column |w|) for one figure."""
    for lam in fig.lambdas:
        check_sector(lam, fig.parity)
    ws = _w_grid(fig.w_min, fig.w_max, fig.w_steps)
    curves = fig.curves()
    header = ["w_abs"] + [fig.label(lam, phi) for lam, phi in curves]
    rows = []
    for w in ws:
        row = [float(w)]
        for lam, phi in curves:
            stats = observables.statistics(WignerCatSpec(lam, float(w), phi, fig.parity))
            row.append(getattr(stats, fig.quantity))
        rows.append(row)
    if not all(math.isfinite(v) for row in rows for v in row):
        raise DomainError("figure contains non-finite values (degenerate lambda for this quantity?)")
    return header, rows


def render_table(header: list[str], rows: list[list[float]], fmt_name: str = "csv", meta: dict | None = None) -> str:
    if fmt_name == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([fmt(v) for v in row])
        return buf.getvalue()
    if fmt_name == "json":
        doc = dict(meta or {})
        doc["columns"] = header
        doc["rows"] = [[float(fmt(v)) for v in row] for row in rows]
        return json.dumps(doc, indent=1) + "\n"
    raise ValueError(f"unknown format {fmt_name!r}")


@dataclass
class SweepConfig:
    lambda_list: list[float]
    w_min: float = 0.05
    w_max: float = 4.0
    w_steps: int = 200
    phi: float = 0.0
    parity: Parity = Parity.EVEN
    output_path: str | None = None
    format: str = "csv"
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        self.parity = Parity(self.parity)
        if not self.lambda_list:
            raise ValueError("at least one lambda is required")
        for lam in self.lambda_list:
            check_sector(lam, self.parity)
        _w_grid(self.w_min, self.w_max, self.w_steps)
        if self.format not in ("csv", "json"):
            raise ValueError(f"unknown format {self.format!r}")


def run_sweep(config: SweepConfig) -> list[observables.StatisticsReport]:
    """Full statistics for every (lambda, |w|) pair, lambda-major order."""
    ws = _w_grid(config.w_min, config.w_max, config.w_steps)
    return [
        observables.statistics(WignerCatSpec(lam, float(w), config.phi, config.parity))
        for lam in config.lambda_list
        for w in ws
    ]


def render_sweep(reports: list[observables.StatisticsReport], fmt_name: str = "csv") -> str:
    rows = [r.csv_row() for r in reports]
    if fmt_name == "json":
        return json.dumps(rows, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(observables.CSV_FIELDS)
    for row in rows:
        writer.writerow([v if isinstance(v, str) else fmt(v) for v in row.values()])
    return buf.getvalue()
