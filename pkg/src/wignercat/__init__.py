"""Wigner-Heisenberg algebra, lambda-deformed cat states and their statistics.

Closed-form (Bessel) statistics live in :mod:`wignercat.observables`; the
independent truncated-Fock computation of the same quantities is in
:mod:`wignercat.oracle`.
"""
from .catstate import Parity, WignerCatSpec, build
from .errors import (
    ConsistencyError,
    DegenerateInputError,
    DomainError,
    MismatchError,
    QuadratureError,
    TruncationLeakageError,
)
from .observables import StatisticsReport, statistics
from .oracle import oracle_statistics
from .report import Check, VerificationReport
from .wha import FockVector, Op, apply, basis

__version__ = "0.1.0"

__all__ = [
    "Parity",
    "WignerCatSpec",
    "build",
    "StatisticsReport",
    "statistics",
    "oracle_statistics",
    "Check",
    "VerificationReport",
    "FockVector",
    "Op",
    "apply",
    "basis",
    "ConsistencyError",
    "DegenerateInputError",
    "DomainError",
    "MismatchError",
    "QuadratureError",
    "TruncationLeakageError",
]
