import math

import numpy as np
import pytest
from scipy.integrate import dblquad

import oracles
from qphase import build_u, build_v
from qphase.continuum import (
    AngularScaling,
    CartesianScaling,
    angular_convergence,
    angular_state,
    angular_wigner,
    build_m_theta,
    build_pq,
    cartesian_convergence,
    continuum_wigner_cartesian,
    exponential_identity_errors,
    gaussian_state,
    pegg_barnett_map,
)
from qphase.errors import EmbeddingError, InputError, ReferenceAngleError, ResolutionError, ScalingError
from qphase.wigner import wigner_fast

# delta = 1, sigma = 1 errors from a 40-digit evaluation of the same grid
HIGH_PRECISION_ERRORS = {21: 2.78998922438e-5, 51: 1.4167e-10}


def test_scaling_validation():
    for delta in (0.0, 2.0, -1.0, 2.5):
        with pytest.raises(ScalingError):
            CartesianScaling(5, delta)
    with pytest.raises(ScalingError):
        CartesianScaling(5, 1.0, p0=0)
    with pytest.raises(ScalingError):
        AngularScaling(5, theta0=-1)


def test_grid_spacings():
    sc = CartesianScaling(11, 0.5, p0=2.0, q0=3.0)
    eps = math.sqrt(2 * math.pi / 11)
    assert sc.dq == pytest.approx(3.0 * eps ** 1.5)
    assert sc.dp == pytest.approx(2.0 * eps ** 0.5)
    assert AngularScaling(7).dtheta == pytest.approx(2 * math.pi / 7)


def test_position_operator_n3():
    _, Q = build_pq(CartesianScaling(3, 1.0))
    eps = math.sqrt(2 * math.pi / 3)
    # computational order 0, 1, 2 carries labels 0, 1, -1
    assert np.allclose(np.diag(Q), [0, eps, -eps])
    _, Theta = build_m_theta(AngularScaling(3))
    assert np.allclose(np.diag(Theta), [0, 2 * math.pi / 3, -2 * math.pi / 3])


@pytest.mark.parametrize("delta", [0.5, 1.0, 1.5])
@pytest.mark.parametrize("N", [3, 11, 51])
def test_exponential_identities_cartesian(N, delta):
    sc = CartesianScaling(N, delta)
    P, Q = build_pq(sc)
    assert np.abs(P - P.conj().T).max() < 1e-12
    assert np.abs(Q - Q.conj().T).max() < 1e-12
    errs = exponential_identity_errors(sc)
    assert errs["U"] < 1e-12 and errs["V"] < 1e-12


@pytest.mark.parametrize("N", [3, 11, 51])
def test_exponential_identities_angular(N):
    M, _ = build_m_theta(AngularScaling(N))
    ev = np.sort(np.linalg.eigvalsh(M))
    assert np.allclose(np.diff(ev), 1.0)
    errs = exponential_identity_errors(AngularScaling(N))
    assert max(errs.values()) < 1e-12


def test_continuum_gaussian():
    assert continuum_wigner_cartesian(0, 0, 1) == pytest.approx(1 / math.pi)
    assert continuum_wigner_cartesian(0.3, -1.1, 0.7) == pytest.approx(continuum_wigner_cartesian(-0.3, 1.1, 0.7))
    total, _ = dblquad(lambda p, q: continuum_wigner_cartesian(q, p, 1.3), -12, 12, -12, 12)
    assert abs(total - 1) < 1e-6
    with pytest.raises(ScalingError):
        continuum_wigner_cartesian(0, 0, 0)


def test_gaussian_resolution():
    sc = CartesianScaling(21, 1.0)
    with pytest.raises(ResolutionError):
        gaussian_state(sc, sc.dq / 2)
    with pytest.raises(ResolutionError):
        gaussian_state(sc, 21 * sc.dq / 7)
    assert np.linalg.norm(gaussian_state(sc, 1.0)) == pytest.approx(1)


def test_cartesian_single_dimension():
    report = cartesian_convergence(1.0, [21], 1.0)
    assert report.sizes == [21]
    assert len(report.errors) == 1
    assert report.strictly_decreasing()


@pytest.mark.parametrize("N", sorted(HIGH_PRECISION_ERRORS))
def test_cartesian_error_matches_high_precision(N):
    err = cartesian_convergence(1.0, [N], 1.0).errors[0]
    assert err == pytest.approx(HIGH_PRECISION_ERRORS[N], rel=1e-3)


def test_delta_independence_at_large_n():
    a = cartesian_convergence(1.0, [201], 0.5).errors[0]
    b = cartesian_convergence(1.0, [201], 1.5).errors[0]
    assert a < 1e-2 and b < 1e-2
    assert a == pytest.approx(b, rel=1e-6)


def test_angular_closed_form_matches_quadrature():
    c = [0.6, 0.0, 0.8j]
    for theta in (-2.0, 0.0, 0.4, 3.0):
        for l in (-1, 0, 1, 2):
            assert abs(angular_wigner(c, theta, l) - oracles.angular_closed_form(c, theta, l)) < 1e-13


def test_angular_eigenstate():
    report = angular_convergence([1.0], [21, 51, 101])
    assert max(report.errors) < 1e-10
    psi = angular_state([1.0], 21)
    w = wigner_fast(psi) / AngularScaling(21).dtheta
    assert np.allclose(w[:, 10], 1 / (2 * math.pi))
    assert np.allclose(np.delete(w, 10, axis=1), 0, atol=1e-12)
    rotated = angular_state([np.exp(1.3j)], 21)
    assert np.abs(wigner_fast(rotated) - wigner_fast(psi)).max() < 1e-14


def test_angular_superposition_decreases():
    report = angular_convergence([0, 2 ** -0.5, 2 ** -0.5], [21, 51, 101])
    assert report.strictly_decreasing()
    assert report.meta["coeffs"][1] == [2 ** -0.5, 0.0]


def test_angular_input_errors():
    with pytest.raises(EmbeddingError):
        angular_state([0, 0, 0, 1, 0, 0, 0], 5)
    with pytest.raises(InputError):
        angular_state([0.5, 0.5], 5)
    with pytest.raises(InputError):
        angular_state([1, 1, 1], 5)


@pytest.mark.parametrize("N", [3, 5, 7])
def test_pegg_barnett(N):
    h = (N - 1) // 2
    lab = np.arange(-h, h + 1)
    for steps in (0, 1, -2):
        ref = 2 * math.pi * steps / N
        number, phase = pegg_barnett_map(ref, N)
        assert np.abs(number - lab[None, :]).max() < 1e-10
        assert np.abs(phase - (ref + 2 * math.pi * lab[:, None] / N)).max() < 1e-10


def test_pegg_barnett_edge_cases():
    number, phase = pegg_barnett_map(0.0, 1)
    assert number.shape == (1, 1) and phase.shape == (1, 1)
    assert number[0, 0] == pytest.approx(0)
    number, phase = pegg_barnett_map(2 * math.pi, 1)
    assert phase[0, 0] == pytest.approx(2 * math.pi)
    with pytest.raises(ReferenceAngleError):
        pegg_barnett_map(0.1, 3)


def test_identities_use_package_operators():
    # the Cartesian generators reproduce the same U and V as the core module
    sc = CartesianScaling(7, 0.8)
    P, Q = build_pq(sc)
    from scipy.linalg import expm

    assert np.abs(expm(1j * sc.eps ** 0.8 * Q) - build_u(7)).max() < 1e-12
    assert np.abs(expm(1j * sc.eps ** 1.2 * P) - build_v(7)).max() < 1e-12
