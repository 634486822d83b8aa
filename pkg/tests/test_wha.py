import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wignercat import wha
from wignercat.errors import DomainError, MismatchError, TruncationLeakageError
from wignercat.wha import Op

LAMBDAS = [-1.4, -0.25, 0.0, 0.5, 1.0, 2.5]


def test_lowering_even_and_odd_rungs():
    lam = 0.75
    # a|2n> = sqrt(2n)|2n-1>,  a|2n+1> = sqrt(2n+2lam+1)|2n>
    v = wha.apply(Op.ANNIHILATE, wha.basis(4, lam, 10))
    assert v.amplitudes[3] == pytest.approx(2.0)
    v = wha.apply(Op.ANNIHILATE, wha.basis(3, lam, 10))
    assert v.amplitudes[2] == pytest.approx(math.sqrt(2 + 1.5 + 1))
    assert wha.apply(Op.ANNIHILATE, wha.basis(0, lam, 10)).norm() == 0


def test_raising_even_and_odd_rungs():
    lam = 0.75
    v = wha.apply(Op.CREATE, wha.basis(2, lam, 10))
    assert v.amplitudes[3] == pytest.approx(math.sqrt(3 + 1.5))
    v = wha.apply(Op.CREATE, wha.basis(3, lam, 10))
    assert v.amplitudes[4] == pytest.approx(2.0)


@pytest.mark.parametrize("lam", [-0.25, 0.0, 1.0])
@pytest.mark.parametrize("n", [0, 1, 2, 7])
def test_diagonal_generators(lam, n):
    v = wha.basis(n, lam, 12)
    parity = (-1) ** n
    assert wha.expectation([Op.PARITY], v) == pytest.approx(parity)
    assert wha.expectation([Op.NUMBER], v) == pytest.approx(n)
    assert wha.expectation([Op.HAMILTONIAN], v) == pytest.approx(n + lam + 0.5)
    assert wha.expectation([Op.J3], v) == pytest.approx((n + lam + 0.5) / 2)


def test_lambda_zero_is_ordinary_boson():
    a = wha.operator_matrix(Op.ANNIHILATE, 0.0, 12)
    np.testing.assert_allclose(np.diag(a, 1), np.sqrt(np.arange(1, 13)))


@pytest.mark.parametrize("lam", LAMBDAS)
def test_verify_algebra(lam):
    report = wha.verify_algebra(lam, 64, 1e-11)
    assert report.passed, report.render()
    assert len(report.checks) == 15


def test_verify_algebra_reports_failures_instead_of_raising():
    report = wha.verify_algebra(0.5, 16, 0.0)
    assert not report.passed
    assert report.failures


@pytest.mark.parametrize("lam", [-0.25, 0.0, 1.3])
@pytest.mark.parametrize("pair", [(Op.ANNIHILATE, Op.CREATE), (Op.J_MINUS, Op.J_PLUS)])
def test_adjoint_pairs(lam, pair):
    lo, hi = (wha.operator_matrix(op, lam, 20) for op in pair)
    np.testing.assert_allclose(lo.conj().T, hi, atol=1e-13)


@pytest.mark.parametrize("op", [Op.POSITION, Op.MOMENTUM, Op.PARITY, Op.NUMBER, Op.HAMILTONIAN, Op.J3])
def test_hermitian_generators(op):
    m = wha.operator_matrix(op, 0.8, 20)
    np.testing.assert_allclose(m, m.conj().T, atol=1e-13)


@pytest.mark.parametrize("op", list(Op))
def test_parity_grading(op):
    # a, a+, x, p flip parity; everything else preserves it
    flips = op in (Op.ANNIHILATE, Op.CREATE, Op.POSITION, Op.MOMENTUM)
    m = wha.operator_matrix(op, 0.3, 16)
    i, j = np.nonzero(np.abs(m) > 0)
    assert np.all((i - j) % 2 == (1 if flips else 0))


def test_formal_links_below_minus_half():
    # odd-only sector: the 0 <-> 1 link is imaginary, the algebra still closes
    lam = -1.2
    a = wha.operator_matrix(Op.ANNIHILATE, lam, 8)
    assert a[0, 1].imag != 0
    assert wha.verify_algebra(lam, 32, 1e-12).passed


def test_leakage_raises():
    v = wha.basis(10, 0.0, 10)
    with pytest.raises(TruncationLeakageError):
        wha.apply(Op.CREATE, v)
    out = wha.apply(Op.CREATE, v, leak_tol=math.inf)
    assert out.leakage == pytest.approx(11.0)
    assert out.norm() == 0


def test_leakage_accumulates_along_chain():
    v = wha.FockVector(0.0, np.r_[np.ones(10), 1e-9])
    with pytest.raises(TruncationLeakageError):
        wha.apply_chain([Op.CREATE, Op.CREATE], v, leak_tol=1e-16)
    out = wha.apply_chain([Op.CREATE], v, leak_tol=1e-15)
    assert 0 < out.leakage < 1e-15


def test_chain_order_is_rightmost_first():
    v = wha.basis(2, 0.4, 10)
    ad_a = wha.apply_chain([Op.CREATE, Op.ANNIHILATE], v)
    assert ad_a.amplitudes[2] == pytest.approx(2.0)  # a+a|2> = N + lam(1-R) = 2
    a_ad = wha.apply_chain([Op.ANNIHILATE, Op.CREATE], v)
    assert a_ad.amplitudes[2] == pytest.approx(3.8)  # 2 + 1 + 2 lam


def test_chain_length_limit():
    with pytest.raises(ValueError):
        wha.apply_chain([Op.NUMBER] * (wha.MAX_CHAIN + 1), wha.basis(0, 0.0, 4))


def test_fockvector_validation():
    with pytest.raises(ValueError):
        wha.FockVector(0.0, [])
    with pytest.raises(ValueError):
        wha.FockVector(0.0, [1.0, math.nan])
    with pytest.raises(DomainError):
        wha.FockVector(-0.75, [1.0, 0.0])
    wha.FockVector(-0.75, [0.0, 1.0])
    v = wha.basis(1, 0.0, 3)
    with pytest.raises(ValueError):
        v.amplitudes[0] = 2.0


def test_inner_product_mismatch():
    with pytest.raises(MismatchError):
        wha.inner_product(wha.basis(0, 0.0, 4), wha.basis(0, 0.1, 4))
    with pytest.raises(MismatchError):
        wha.inner_product(wha.basis(0, 0.0, 4), wha.basis(0, 0.0, 5))


@settings(max_examples=60, deadline=None)
@given(
    st.floats(min_value=-0.45, max_value=3.0),
    st.lists(st.complex_numbers(max_magnitude=1.0, allow_nan=False, allow_infinity=False), min_size=12, max_size=12),
)
def test_commutator_expectation_on_random_states(lam, coeffs):
    # <[a, a+]> = <1 + 2 lam R> on any state supported away from the cutoff
    amps = np.r_[coeffs, np.zeros(4)]
    if not np.any(amps):
        return
    v = wha.FockVector(lam, amps)
    lhs = wha.expectation([Op.ANNIHILATE, Op.CREATE], v) - wha.expectation([Op.CREATE, Op.ANNIHILATE], v)
    rhs = wha.inner_product(v, v) + 2 * lam * wha.expectation([Op.PARITY], v)
    assert lhs == pytest.approx(rhs, abs=1e-12)
