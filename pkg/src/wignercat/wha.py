"""Truncated deformed Fock space and the Wigner-Heisenberg generators.

States are coefficient vectors over the kets ``|n, lam>``, ``n = 0..Nmax``.
Operators act on vectors directly (O(Nmax) per application); dense matrices
are built only inside :func:`verify_algebra`.

The ladder action is

    a |2n>   = sqrt(2n)           |2n-1>
    a |2n+1> = sqrt(2n + 2lam + 1) |2n>

so the single coefficient ``s_n = sqrt(n + 2 lam [n odd])`` links ``|n>`` and
``|n-1>`` in both directions.  For ``lam < -1/2`` the link between ``|1>``
and ``|0>`` is imaginary; it is used unconjugated by both ``a`` and ``a^dag``
so that every polynomial identity of the algebra holds formally.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError, MismatchError, TruncationLeakageError
from .report import Check, VerificationReport

__all__ = [
    "Op",
    "FockVector",
    "basis",
    "apply",
    "apply_chain",
    "inner_product",
    "expectation",
    "operator_matrix",
    "verify_algebra",
    "DEFAULT_LEAK_TOL",
]

DEFAULT_LEAK_TOL = 1e-14
MAX_CHAIN = 8
# no generator raises the level by more than two
_PAD = 2


class Op(str, enum.Enum):
    ANNIHILATE = "annihilate"
    CREATE = "create"
    PARITY = "parity"
    NUMBER = "number"
    POSITION = "position"
    MOMENTUM = "momentum"
    J_PLUS = "j_plus"
    J_MINUS = "j_minus"
    J3 = "j3"
    HAMILTONIAN = "hamiltonian"


def sector_bound(odd: bool) -> float:
    return -1.5 if odd else -0.5


@dataclass(frozen=True, eq=False)
class FockVector:
    """Immutable state in the ``|n, lam>`` basis.

    ``leakage`` is the total squared magnitude dropped at the cutoff by the
    operator applications that produced this vector.
    """

    lam: float
    amplitudes: np.ndarray
    leakage: float = 0.0

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.ndim != 1 or amps.size == 0:
            raise ValueError("amplitudes must be a non-empty 1-D sequence")
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        lam = float(self.lam)
        if not math.isfinite(lam):
            raise DomainError("lambda must be finite")
        has_even = bool(np.any(amps[0::2] != 0))
        bound = sector_bound(odd=not has_even)
        if not lam > bound:
            sector = "even-index amplitudes require" if has_even else "odd-index amplitudes require"
            raise DomainError(f"{sector} lambda > {bound}, got {lam}")
        amps.setflags(write=False)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "leakage", float(self.leakage))

    @classmethod
    def _unchecked(cls, lam: float, amps: np.ndarray, leakage: float) -> "FockVector":
        # Intermediate results of operator chains may leave the L^2 sector
        # (e.g. position on an odd state with lam < -1/2); they are formal.
        self = object.__new__(cls)
        amps.setflags(write=False)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "leakage", leakage)
        return self

    @property
    def truncation(self) -> int:
        return self.amplitudes.size - 1

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def __repr__(self):
        return f"FockVector(lam={self.lam}, truncation={self.truncation}, leakage={self.leakage:.3g})"


def basis(n: int, lam: float, truncation: int) -> FockVector:
    """Unit vector ``|n, lam>`` in a space with cutoff ``truncation``."""
    if not 0 <= n <= truncation:
        raise ValueError(f"index {n} outside 0..{truncation}")
    amps = np.zeros(truncation + 1, dtype=complex)
    amps[n] = 1.0
    return FockVector(lam, amps)


def _links(lam: float, size: int) -> np.ndarray:
    """s_n for n = 0..size-1 (s_0 = 0)."""
    n = np.arange(size, dtype=float)
    return np.sqrt((n + 2.0 * lam * (n % 2)).astype(complex))


def _lower(c: np.ndarray, lam: float) -> np.ndarray:
    out = np.zeros_like(c)
    out[:-1] = _links(lam, c.size)[1:] * c[1:]
    return out


def _raise(c: np.ndarray, lam: float) -> np.ndarray:
    # callers pad c so that nothing nonzero sits in the top slot
    out = np.zeros_like(c)
    out[1:] = _links(lam, c.size)[1:] * c[:-1]
    return out


def _diag(op: Op, lam: float, size: int) -> np.ndarray:
    n = np.arange(size, dtype=float)
    if op is Op.PARITY:
        return 1.0 - 2.0 * (n % 2)
    if op is Op.NUMBER:
        return n
    # {a, a^dag}/2 is diagonal with value n + lam + 1/2 in both parity sectors
    energy = n + lam + 0.5
    return energy if op is Op.HAMILTONIAN else 0.5 * energy


def _act_padded(op: Op, c: np.ndarray, lam: float) -> np.ndarray:
    if op in (Op.PARITY, Op.NUMBER, Op.HAMILTONIAN, Op.J3):
        return _diag(op, lam, c.size) * c
    if op is Op.ANNIHILATE:
        return _lower(c, lam)
    if op is Op.CREATE:
        return _raise(c, lam)
    if op is Op.J_MINUS:
        return 0.5 * _lower(_lower(c, lam), lam)
    if op is Op.J_PLUS:
        return 0.5 * _raise(_raise(c, lam), lam)
    if op is Op.POSITION:
        return (_lower(c, lam) + _raise(c, lam)) / math.sqrt(2.0)
    if op is Op.MOMENTUM:
        return (_lower(c, lam) - _raise(c, lam)) / (1j * math.sqrt(2.0))
    raise ValueError(f"unknown operator {op!r}")


def _act(op: Op, c: np.ndarray, lam: float) -> tuple[np.ndarray, float]:
    """Action on the cutoff space plus the squared norm pushed above it."""
    padded = np.concatenate([c, np.zeros(_PAD, dtype=complex)])
    out = _act_padded(op, padded, lam)
    return out[: c.size], float(np.sum(np.abs(out[c.size:]) ** 2))


def apply(op: Op | str, v: FockVector, leak_tol: float = DEFAULT_LEAK_TOL) -> FockVector:
    """Apply one generator to ``v``; the cutoff is preserved.

    Amplitude raised past the cutoff is dropped and its squared magnitude is
    added to ``leakage``.  Raises :class:`TruncationLeakageError` when the
    accumulated leakage exceeds ``leak_tol``.
    """
    op = Op(op)
    if not isinstance(v, FockVector):
        raise TypeError(f"expected FockVector, got {type(v).__name__}")
    out, leaked = _act(op, np.array(v.amplitudes), v.lam)
    total = v.leakage + leaked
    if total > leak_tol:
        raise TruncationLeakageError(
            f"{op.value} leaked {total:.3e} past cutoff {v.truncation} (tolerance {leak_tol:.1e})"
        )
    return FockVector._unchecked(v.lam, out, total)


def apply_chain(chain: Sequence[Op | str], v: FockVector, leak_tol: float = DEFAULT_LEAK_TOL) -> FockVector:
    """``op_1 o op_2 o ... o op_k`` applied to ``v`` (rightmost first)."""
    if len(chain) > MAX_CHAIN:
        raise ValueError(f"operator chains are limited to {MAX_CHAIN} factors")
    for op in reversed(list(chain)):
        v = apply(op, v, leak_tol)
    return v


def _check_same_space(u: FockVector, v: FockVector):
    if u.lam != v.lam:
        raise MismatchError(f"lambda mismatch: {u.lam} vs {v.lam}")
    if u.truncation != v.truncation:
        raise MismatchError(f"cutoff mismatch: {u.truncation} vs {v.truncation}")


def inner_product(u: FockVector, v: FockVector) -> complex:
    """``<u|v>``, antilinear in ``u``."""
    _check_same_space(u, v)
    return complex(np.vdot(u.amplitudes, v.amplitudes))


def expectation(chain: Sequence[Op | str], v: FockVector, leak_tol: float = DEFAULT_LEAK_TOL) -> complex:
    """``<v| op_1 ... op_k |v>``."""
    return inner_product(v, apply_chain(chain, v, leak_tol))


def operator_matrix(op: Op | str, lam: float, truncation: int) -> np.ndarray:
    """Dense matrix of ``op`` on the truncated space, column j = op|j>."""
    op = Op(op)
    size = truncation + 1
    mat = np.zeros((size, size), dtype=complex)
    for j in range(size):
        e = np.zeros(size, dtype=complex)
        e[j] = 1.0
        mat[:, j] = _act(op, e, lam)[0]
    return mat


def _relations(lam: float, truncation: int):
    m = {op: operator_matrix(op, lam, truncation) for op in Op}
    a, ad = m[Op.ANNIHILATE], m[Op.CREATE]
    r, num, h = m[Op.PARITY], m[Op.NUMBER], m[Op.HAMILTONIAN]
    jp, jm, j3 = m[Op.J_PLUS], m[Op.J_MINUS], m[Op.J3]
    x, p = m[Op.POSITION], m[Op.MOMENTUM]
    one = np.eye(truncation + 1)

    def comm(u, w):
        return u @ w - w @ u

    def acomm(u, w):
        return u @ w + w @ u

    return [
        ("[a,a+] = 1+2 lam R", comm(a, ad), one + 2 * lam * r),
        ("{R,a} = 0", acomm(r, a), 0 * one),
        ("{R,a+} = 0", acomm(r, ad), 0 * one),
        ("R^2 = 1", r @ r, one),
        ("a+a = N + lam(1-R)", ad @ a, num + lam * (one - r)),
        ("[N,a] = -a", comm(num, a), -a),
        ("[N,a+] = a+", comm(num, ad), ad),
        ("H = {a,a+}/2", h, 0.5 * acomm(a, ad)),
        ("J- = a^2/2", jm, 0.5 * a @ a),
        ("J+ = a+^2/2", jp, 0.5 * ad @ ad),
        ("[J+,J-] = -2 J3", comm(jp, jm), -2 * j3),
        ("[J3,J+] = J+", comm(j3, jp), jp),
        ("[J3,J-] = -J-", comm(j3, jm), -jm),
        ("[x,p] = i(1+2 lam R)", comm(x, p), 1j * (one + 2 * lam * r)),
        ("[a^2,a+^2] = 4H", comm(a @ a, ad @ ad), 4 * h),
    ]


def verify_algebra(lam: float, truncation: int = 64, tol: float = 1e-12) -> VerificationReport:
    """Check the WHA and su(1,1) relations on interior basis vectors.

    Each relation is compared column by column for ``|j>`` with
    ``j <= truncation - 4``; the residual is the largest absolute entry of
    the difference.  Failures are reported, never raised.
    """
    if truncation < 8:
        raise ValueError("verify_algebra needs truncation >= 8")
    interior = truncation - 4 + 1
    checks = []
    for name, lhs, rhs in _relations(float(lam), truncation):
        residual = float(np.max(np.abs(lhs[:, :interior] - rhs[:, :interior])))
        checks.append(Check(f"algebra lam={lam:g}: {name}", residual, tol))
    return VerificationReport(checks)

