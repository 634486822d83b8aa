import cmath
import math

import numpy as np
import pytest

from wignercat import position
from wignercat.catstate import WignerCatSpec
from wignercat.errors import DomainError


@pytest.mark.parametrize("n", range(9))
def test_lambda_zero_gives_hermite_functions(n):
    xs = np.linspace(-4, 4, 17)
    h = np.polynomial.hermite.hermval(xs, [0] * n + [1])
    expected = h * np.exp(-xs ** 2 / 2) / math.sqrt(2 ** n * math.factorial(n) * math.sqrt(math.pi))
    np.testing.assert_allclose(position.psi(n, 0.0, xs), expected, atol=1e-13)


def test_ground_state_closed_form():
    lam, x = 1.5, 0.8
    expected = abs(x) ** lam * math.exp(-x * x / 2) / math.sqrt(math.gamma(lam + 0.5))
    assert position.psi(0, lam, x) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("n", [0, 1, 4, 5])
def test_definite_parity(n):
    xs = np.linspace(0.1, 3, 7)
    np.testing.assert_allclose(position.psi(n, 0.7, -xs), (-1) ** n * position.psi(n, 0.7, xs), atol=1e-15)


def test_origin_values():
    assert position.psi(1, 0.4, 0.0) == 0.0
    assert position.psi(2, 0.4, 0.0) == 0.0
    assert position.psi(0, 0.0, 0.0) == pytest.approx(math.pi ** -0.25)
    with pytest.raises(DomainError):
        position.psi(0, -0.25, 0.0)


def test_sector_checks():
    with pytest.raises(DomainError):
        position.psi(2, -0.5, 1.0)
    position.psi(3, -1.2, 1.0)
    with pytest.raises(DomainError):
        position.psi(-1, 0.0, 1.0)


@pytest.mark.parametrize("lam", [-0.25, 0.0, 0.5, 2.0])
def test_gram_matrix_is_identity(lam):
    g = position.gram_matrix(12, lam)
    assert g.shape == (13, 13)
    assert np.max(np.abs(g - np.eye(13))) < 1e-8


def test_gram_matrix_odd_only_sector():
    g = position.gram_matrix(9, -1.2)
    assert g.shape == (5, 5)
    assert np.max(np.abs(g - np.eye(5))) < 1e-8


def test_opposite_parity_overlap_is_exactly_zero():
    assert position.orthonormality(2, 5, 0.3) == 0.0


@pytest.mark.parametrize("lam", [-1.4, -0.25, 0.0, 0.5, 1.0, 2.0, 2.5])
def test_hamiltonian_eigen_equation(lam):
    for n in range(11):
        if n % 2 == 0 and lam <= -0.5:
            continue
        assert position.hamiltonian_residual(n, lam) <= 1e-5


def test_finite_difference_is_fourth_order():
    steps = np.array([0.08, 0.04, 0.02, 0.01])
    res = [position.hamiltonian_residual(4, 1.0, step=h, x_min=0.6) for h in steps]
    slope = np.polyfit(np.log(steps), np.log(res), 1)[0]
    assert 3.7 < slope < 4.3


def test_wrong_centrifugal_term_on_odd_states_fails():
    # the odd sector needs lam (lam + 1) / x^2, not lam (lam - 1) / x^2
    lam, n, x = 1.0, 3, np.linspace(0.5, 4, 50)
    h = 1e-3
    f = lambda t: position.psi(n, lam, t)  # noqa: E731
    d2 = (f(x + h) - 2 * f(x) + f(x - h)) / h ** 2
    wrong = 0.5 * (-d2 + x ** 2 * f(x) + lam * (lam - 1) / x ** 2 * f(x)) - position.energy(n, lam) * f(x)
    assert np.max(np.abs(wrong)) > 0.1


def test_hamiltonian_residual_rejects_origin_grid():
    with pytest.raises(ValueError):
        position.hamiltonian_residual(0, 0.0, step=0.1, x_min=0.1)


def _schrodinger_cat_wavefunction(alpha, xs, odd):
    coherent = lambda a: (  # noqa: E731
        math.pi ** -0.25 * np.exp(-abs(a) ** 2 / 2 - a * a / 2 + math.sqrt(2) * a * xs - xs ** 2 / 2)
    )
    sign = -1 if odd else 1
    norm = math.sqrt(2 * (1 + sign * math.exp(-2 * abs(alpha) ** 2)))
    return (coherent(alpha) + sign * coherent(-alpha)) / norm


@pytest.mark.parametrize("odd", [False, True])
@pytest.mark.parametrize("alpha", [0.8, 1.5 * cmath.exp(0.6j)])
def test_lambda_zero_cat_wavefunction(alpha, odd):
    xs = np.linspace(-5, 5, 41)
    spec = WignerCatSpec(0.0, abs(alpha), cmath.phase(alpha), "odd" if odd else "even")
    got = position.cat_wavefunction(spec, xs).values
    np.testing.assert_allclose(got, _schrodinger_cat_wavefunction(alpha, xs, odd), atol=1e-12)


@pytest.mark.parametrize(
    "spec",
    [
        WignerCatSpec(-0.25, 1.5, 0.3, "even"),
        WignerCatSpec(-1.0, 2.0, 1.0, "odd"),
        WignerCatSpec(2.0, 3.0, 0.0, "even"),
        WignerCatSpec(0.5, 0.5, 2.0, "odd"),
    ],
)
def test_cat_wavefunction_normalized(spec):
    assert position.cat_norm(spec) == pytest.approx(1.0, abs=1e-10)


def test_cat_wavefunction_parity_and_origin():
    xs = np.linspace(-3, 3, 13)  # contains 0
    odd = position.cat_wavefunction(WignerCatSpec(0.5, 1.2, 0.4, "odd"), xs).values
    np.testing.assert_allclose(odd[::-1], -odd, atol=1e-15)
    assert odd[6] == 0
    with pytest.raises(DomainError):
        position.cat_wavefunction(WignerCatSpec(-0.25, 1.0), xs)


def test_wavefunction_sample_validation():
    with pytest.raises(ValueError):
        position.WavefunctionSample(0.0, [1.0, 0.5], [0.0, 0.0])
    with pytest.raises(ValueError):
        position.WavefunctionSample(0.0, [0.0, 1.0], [0.0])
    with pytest.raises(DomainError):
        position.WavefunctionSample(-0.25, [0.0, 1.0], [0.0, 0.0])
