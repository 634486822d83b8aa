import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wignercat import catstate, specfun
from wignercat.catstate import Parity, WignerCatSpec
from wignercat.errors import DegenerateInputError, DomainError


def test_spec_validation():
    with pytest.raises(DomainError, match="-0.5"):
        WignerCatSpec(-0.5, 1.0, 0.0, "even")
    with pytest.raises(DomainError, match="-1.5"):
        WignerCatSpec(-1.5, 1.0, 0.0, "odd")
    with pytest.raises(DomainError):
        WignerCatSpec(0.0, -1.0)
    spec = WignerCatSpec(0.0, 1.0, 3 * math.pi, "odd")
    assert spec.phi == pytest.approx(math.pi)
    assert spec.parity is Parity.ODD and spec.odd


@pytest.mark.parametrize("parity", list(Parity))
def test_parity_purity(parity):
    v = catstate.build(WignerCatSpec(0.7, 1.3, 0.4, parity))
    wrong = v.amplitudes[1::2] if parity is Parity.EVEN else v.amplitudes[0::2]
    assert np.all(wrong == 0)


NORM_CASES = [
    (lam, w, parity)
    for lam in (-1.4, -0.25, 0.0, 0.5, 2.5)
    for w in (0.1, 0.5, 1.0, 2.0, 4.0)
    for parity in Parity
    if parity is Parity.ODD or lam > -0.5
]


@pytest.mark.parametrize("lam, w, parity", NORM_CASES)
def test_normalization(lam, w, parity):
    v = catstate.build(WignerCatSpec(lam, w, 0.0, parity))
    assert abs(v.norm() ** 2 - 1) < 1e-12


def test_amplitude_formula_lowest_terms():
    lam, w = 0.3, 1.1
    v = catstate.build(WignerCatSpec(lam, w, 0.0, "even"))
    # c_2 / c_0 = w^2 sqrt(Gamma(lam+1/2) / (4 Gamma(lam+3/2))) = w^2 / (2 sqrt(lam + 1/2))
    assert v.amplitudes[2] / v.amplitudes[0] == pytest.approx(w ** 2 / (2 * math.sqrt(lam + 0.5)))
    # c_0^2 = (w^2/2)^(lam-1/2) / (Gamma(lam+1/2) I_{lam-1/2}(w^2))
    c0_sq = (w * w / 2) ** (lam - 0.5) / (math.gamma(lam + 0.5) * specfun.bessel_i(lam - 0.5, w * w))
    assert abs(v.amplitudes[0]) ** 2 == pytest.approx(c0_sq, rel=1e-13)


@pytest.mark.parametrize("parity", list(Parity))
def test_phase_covariance(parity):
    base = catstate.build(WignerCatSpec(0.4, 1.7, 0.0, parity), 80)
    rotated = catstate.build(WignerCatSpec(0.4, 1.7, 1.1, parity), 80)
    n = np.arange(81)
    np.testing.assert_allclose(rotated.amplitudes, base.amplitudes * np.exp(1.1j * n), atol=1e-15)


@settings(max_examples=50, deadline=None)
@given(
    st.floats(min_value=-1.45, max_value=3.0),
    st.floats(min_value=0.05, max_value=4.0),
    st.floats(min_value=0.0, max_value=2 * math.pi),
    st.sampled_from(list(Parity)),
)
def test_eigenstate_of_a_squared(lam, w, phi, parity):
    if parity is Parity.EVEN and lam <= -0.5:
        parity = Parity.ODD
    spec = WignerCatSpec(lam, w, phi, parity)
    v = catstate.build(spec)
    assert catstate.eigenvalue_residual(spec, v) <= 1e-10


@pytest.mark.parametrize("parity", list(Parity))
def test_series_and_bessel_normalizations_agree(parity):
    spec = WignerCatSpec(-0.25 if parity is Parity.EVEN else -1.0, 2.5, 0.3, parity)
    a = catstate.build(spec)
    b = catstate.build(spec, normalization="series")
    np.testing.assert_allclose(a.amplitudes, b.amplitudes, atol=1e-14)


@pytest.mark.parametrize("w", [0.25, 1.0, 3.5])
@pytest.mark.parametrize("parity", list(Parity))
def test_lambda_zero_is_schrodinger_cat(w, parity):
    spec = WignerCatSpec(0.0, w, 0.8, parity)
    v = catstate.build(spec)
    ref = catstate.schrodinger_cat(spec.w, parity, v.truncation)
    assert np.max(np.abs(v.amplitudes - ref)) < 1e-12


def test_schrodinger_cat_direct_formula():
    alpha = 0.9 * cmath.exp(0.5j)
    amps = catstate.schrodinger_cat(alpha, "odd", 5)
    expected = alpha ** 3 / math.sqrt(math.factorial(3) * math.sinh(abs(alpha) ** 2))
    assert amps[3] == pytest.approx(expected)


def test_vacuum_and_degenerate_limits():
    v = catstate.build(WignerCatSpec(0.5, 0.0, 0.0, "even"))
    assert v.amplitudes[0] == 1
    with pytest.raises(DegenerateInputError):
        catstate.build(WignerCatSpec(0.5, 0.0, 0.0, "odd"))
    with pytest.raises(DegenerateInputError):
        catstate.build(WignerCatSpec(0.5, 1e-9, 0.0, "odd"))


def test_auto_truncation_tail_below_threshold():
    spec = WignerCatSpec(0.0, 6.0, 0.0, "even")
    v = catstate.build(spec)
    assert v.truncation >= catstate.auto_truncation(6.0)
    assert np.sum(np.abs(v.amplitudes[-10:]) ** 2) < 1e-16


def test_explicit_truncation_respected():
    v = catstate.build(WignerCatSpec(1.0, 1.0), truncation=40)
    assert v.truncation == 40
    with pytest.raises(ValueError):
        catstate.build(WignerCatSpec(1.0, 1.0), normalization="nope")
