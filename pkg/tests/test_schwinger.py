import numpy as np
import pytest
from hypothesis import given, strategies as st

from qphase import Dimension, build_u, build_v, finite_fourier, labels, mod_delta, modular_phase
from qphase.errors import DimensionError
from qphase.schwinger import label_index, signed_label, to_label_order

odd = st.integers(min_value=0, max_value=20).map(lambda k: 2 * k + 1)


@pytest.mark.parametrize("N", [0, 2, 4, -3])
def test_dimension_rejects_even_and_nonpositive(N):
    with pytest.raises(DimensionError):
        Dimension(N)


def test_dimension_fields():
    d = Dimension(7)
    assert d.h == 3
    assert d.eps == pytest.approx(np.sqrt(2 * np.pi / 7))
    assert list(labels(d)) == [-3, -2, -1, 0, 1, 2, 3]


def test_label_helpers_round_trip():
    N = 5
    k = np.arange(N)
    s = signed_label(k, N)
    assert list(s) == [0, 1, 2, -2, -1]
    assert list(label_index(s, N)) == [2, 3, 4, 0, 1]
    # diagonal in computational order -> diagonal in label order
    D = np.diag(s.astype(float))
    assert list(np.diag(to_label_order(D))) == [-2, -1, 0, 1, 2]


def test_u_small_cases():
    assert np.array_equal(build_u(1), [[1]])
    w = np.exp(2j * np.pi / 3)
    assert np.allclose(build_u(3), np.diag([1, w, w * w]), atol=1e-15)
    U = build_u(3)
    assert np.abs(U @ U @ U - np.eye(3)).max() < 1e-14


def test_v_is_cyclic_shift():
    assert np.array_equal(build_v(1), [[1]])
    V = build_v(3)
    assert np.array_equal(V @ V @ V, np.eye(3))
    # each column holds a single one
    assert np.array_equal(V.sum(0), np.ones(3))


@pytest.mark.parametrize("N", [3, 5, 7])
def test_weyl_commutation(N):
    U, V = build_u(N), build_v(N)
    w = np.exp(2j * np.pi / N)
    assert np.abs(V @ U - w * U @ V).max() < 1e-14


def test_fourier_unitary_and_eigenvectors():
    assert np.allclose(finite_fourier(1), [[1]])
    F = finite_fourier(3)
    assert np.abs(F @ F.conj().T - np.eye(3)).max() < 1e-14
    V = build_v(3)
    v0 = F.conj().T[:, 0]
    assert np.abs(V @ v0 - v0).max() < 1e-14
    w = np.exp(2j * np.pi / 3)
    for j in range(3):
        vj = F.conj().T[:, j]
        assert np.abs(V @ vj - w ** j * vj).max() < 1e-14


def test_modular_phase_values():
    assert modular_phase(0, 0, 3) == 0
    assert modular_phase(4, 4, 3) == -5
    assert modular_phase(2, 5, 5) == -2


@given(odd, st.integers(-60, 60), st.integers(-60, 60))
def test_modular_phase_symmetric(N, m, n):
    assert modular_phase(m, n, N) == modular_phase(n, m, N)


@given(odd, st.data())
def test_modular_phase_vanishes_in_range(N, data):
    m = data.draw(st.integers(0, N - 1))
    n = data.draw(st.integers(0, N - 1))
    assert modular_phase(m, n, N) == 0


def test_mod_delta_examples():
    assert mod_delta(0, 0, 3)
    assert mod_delta(4, 1, 3)
    assert not mod_delta(2, 1, 3)


@given(odd, st.integers(-100, 100), st.integers(-100, 100))
def test_mod_delta_matches_remainder(N, a, b):
    assert mod_delta(a, b, N) == ((a - b) % N == 0)
