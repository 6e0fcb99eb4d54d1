import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qphase import (
    build_all,
    build_u,
    build_v,
    commutator_representative,
    map_operator,
    product_representative,
    reconstruct,
    trace_pair,
)
from qphase.errors import ShapeError
from qphase.verify import random_hermitian

B3 = build_all(3)
B5 = build_all(5)


@pytest.mark.parametrize("N", [1, 3, 5, 7])
def test_identity_maps_to_constant(N):
    f = map_operator(np.eye(N), build_all(N))
    assert np.allclose(f, 1 / N, atol=1e-14)
    assert np.allclose(reconstruct(f, build_all(N)), np.eye(N), atol=1e-12)


def test_map_of_u():
    f = map_operator(build_u(3), B3)
    m = np.arange(-1, 2)[:, None]
    expected = np.exp(2j * np.pi * m / 3) / 3 * np.ones((1, 3))
    assert np.abs(f - expected).max() < 1e-12


def test_map_of_projector():
    P = np.zeros((3, 3))
    P[0, 0] = 1
    f = map_operator(P, B3)
    expected = np.zeros((3, 3))
    expected[1, :] = 1 / 3  # row m = 0
    assert np.abs(f - expected).max() < 1e-12


def test_map_matches_direct_trace():
    rng = np.random.default_rng(3)
    A = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    f = map_operator(A, B5)
    for (j, l) in B5.labels():
        assert abs(f[j + 2, l + 2] - np.trace(B5[j, l] @ A) / 5) < 1e-12


def test_round_trip_v_and_random():
    V = build_v(3)
    assert np.abs(reconstruct(map_operator(V, B3), B3) - V).max() < 1e-12
    A = random_hermitian(5, np.random.default_rng(0))
    assert np.abs(reconstruct(map_operator(A, B5), B5) - A).max() < 1e-10


def test_trace_pair():
    f = map_operator(np.eye(1), build_all(1))
    assert trace_pair(f, f) == pytest.approx(1)
    rng = np.random.default_rng(11)
    A, C = random_hermitian(3, rng), random_hermitian(3, rng)
    assert abs(trace_pair(map_operator(A, B3), map_operator(C, B3)) - np.trace(A @ C)) < 1e-10
    P = np.zeros((3, 3))
    P[0, 0] = 1
    fp = map_operator(P, B3)
    assert abs(trace_pair(fp, fp) - np.trace(P @ P)) < 1e-12


def test_trace_pair_shape_mismatch():
    with pytest.raises(ShapeError):
        trace_pair(np.zeros((3, 3)), np.zeros((5, 5)))


def test_product_with_identity():
    rng = np.random.default_rng(5)
    f = map_operator(random_hermitian(3, rng), B3)
    one = map_operator(np.eye(3), B3)
    assert np.abs(product_representative(f, one, 3) - f).max() < 1e-10
    assert np.abs(product_representative(one, f, 3) - f).max() < 1e-10


@pytest.mark.parametrize("N", [3, 5])
def test_product_and_commutator_oracles(N):
    B = build_all(N)
    U, V = build_u(N), build_v(N)
    fu, fv = map_operator(U, B), map_operator(V, B)
    assert np.abs(product_representative(fu, fv, N) - map_operator(U @ V, B)).max() < 1e-9
    assert np.abs(commutator_representative(fu, fv, N) - map_operator(U @ V - V @ U, B)).max() < 1e-9
    rng = np.random.default_rng(N)
    A, C = random_hermitian(N, rng), random_hermitian(N, rng)
    fa, fc = map_operator(A, B), map_operator(C, B)
    assert np.abs(product_representative(fa, fc, N) - map_operator(A @ C, B)).max() < 1e-9


def test_commutator_vanishes_for_commuting_inputs():
    f = map_operator(np.diag([1.0, 2.0, 3.0]), B3)
    g = map_operator(np.diag([0.5, -1.0, 4.0]), B3)
    assert np.abs(commutator_representative(f, g, 3)).max() < 1e-10
    assert np.abs(commutator_representative(f, f, 3)).max() < 1e-10


def test_map_rejects_wrong_shape():
    with pytest.raises(ShapeError):
        map_operator(np.eye(5), B3)


matrices = st.lists(st.floats(-5, 5), min_size=18, max_size=18).map(
    lambda x: np.array(x[:9]).reshape(3, 3) + 1j * np.array(x[9:]).reshape(3, 3)
)


@settings(max_examples=40, deadline=None)
@given(matrices, matrices, st.floats(-3, 3))
def test_map_is_linear(A, C, a):
    lhs = map_operator(a * A + C, B3)
    rhs = a * map_operator(A, B3) + map_operator(C, B3)
    assert np.abs(lhs - rhs).max() < 1e-10
