"""Numerical self-checks of the basis, mapping and Wigner properties.

Used by ``qphase verify-all`` and ``qphase basis-check``. Each check
reports the worst deviation it found and the tolerance it is held to.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import BasisSet, build_all, kernel_table
from .continuum import AngularScaling, CartesianScaling, exponential_identity_errors, pegg_barnett_map
from .mapping import map_operator, product_representative, reconstruct, trace_pair
from .schwinger import as_dimension, finite_fourier, labels
from .wigner import marginals, purity_sum, support_count, wigner_fast, wigner_pure

__all__ = ["Check", "random_hermitian", "random_state", "basis_checks", "run_checks"]

# full triple-product verification above this size samples triples instead
FULL_KERNEL_MAX_N = 7
PRODUCT_RULE_MAX_N = 7


@dataclass(frozen=True)
class Check:
    N: int
    name: str
    value: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.value <= self.tolerance)


def random_hermitian(N, rng):
    A = rng.normal(size=(N, N)) + 1j * rng.normal(size=(N, N))
    return (A + A.conj().T) / 2


def random_state(N, rng):
    psi = rng.normal(size=N) + 1j * rng.normal(size=N)
    return psi / np.linalg.norm(psi)


def basis_checks(basis: BasisSet) -> list[Check]:
    N = basis.N
    G = basis.elements.reshape(N * N, N, N)
    traces = np.einsum("aii->a", G)
    herm = np.abs(G - G.conj().transpose(0, 2, 1)).max()
    gram = np.einsum("aji,bji->ab", G.conj(), G).reshape(N, N, N, N)  # Tr[G_a^dag G_b]
    lab = labels(N)
    same = (lab[:, None] == lab[None, :]).astype(float)
    expected = N * same[:, None, :, None] * same[None, :, None, :]
    completeness = np.abs(G.sum(0) - N * np.eye(N)).max()
    return [
        Check(N, "unit-trace", float(np.abs(traces - 1).max()), 1e-12),
        Check(N, "hermiticity", float(herm), 1e-12),
        Check(N, "orthogonality", float(np.abs(gram - expected).max()), 1e-10),
        Check(N, "completeness", float(completeness), 1e-10),
    ]


def _kernel_check(basis: BasisSet, rng) -> Check:
    N = basis.N
    G = basis.elements.reshape(N * N, N, N)
    table = kernel_table(N)
    lab = labels(N)
    m_of = np.repeat(lab, N)
    n_of = np.tile(lab, N)
    if N <= FULL_KERNEL_MAX_N:
        a, b, c = np.meshgrid(*(np.arange(N * N),) * 3, indexing="ij")
        a, b, c = a.ravel(), b.ravel(), c.ravel()
        direct = np.einsum("aij,bjk,cki->abc", G.conj().transpose(0, 2, 1), G, G, optimize=True).ravel()
    else:
        a, b, c = rng.integers(N * N, size=(3, 2000))
        direct = np.einsum("tij,tjk,tki->t", G[a].conj().transpose(0, 2, 1), G[b], G[c])
    fast = table[
        (m_of[a] - m_of[b]) % N,
        (n_of[a] - n_of[b]) % N,
        (m_of[a] - m_of[c]) % N,
        (n_of[a] - n_of[c]) % N,
    ]
    return Check(N, "triple-product-kernel", float(np.abs(fast - direct).max()), 1e-10)


def run_checks(N, seed: int = 0, n_operators: int = 5, n_states: int = 10) -> list[Check]:
    """All module invariants at dimension ``N`` with seeded random inputs."""
    d = as_dimension(N)
    N = d.N
    rng = np.random.default_rng(seed)
    basis = build_all(d)
    checks = basis_checks(basis)
    checks.append(_kernel_check(basis, rng))

    round_trip = trace_rule = 0.0
    for _ in range(n_operators):
        A = random_hermitian(N, rng)
        B = random_hermitian(N, rng)
        fa, fb = map_operator(A, basis), map_operator(B, basis)
        round_trip = max(round_trip, np.abs(reconstruct(fa, basis) - A).max())
        trace_rule = max(trace_rule, abs(trace_pair(fa, fb) - np.trace(A @ B)))
    checks.append(Check(N, "round-trip", float(round_trip), 1e-10))
    checks.append(Check(N, "trace-rule", float(trace_rule), 1e-10))
    if N <= PRODUCT_RULE_MAX_N:
        A = random_hermitian(N, rng)
        B = random_hermitian(N, rng)
        fa, fb = map_operator(A, basis), map_operator(B, basis)
        err = np.abs(product_representative(fa, fb, d) - map_operator(A @ B, basis)).max()
        checks.append(Check(N, "product-rule", float(err), 1e-9))

    F = finite_fourier(d)
    reality = marg = bound = purity = fast = 0.0
    support_deficit = 0
    for _ in range(n_states):
        psi = random_state(N, rng)
        rho = np.outer(psi, psi.conj())
        complex_grid = map_operator(rho, basis)
        reality = max(reality, np.abs(complex_grid.imag).max())
        w = wigner_pure(psi)
        rows, cols = marginals(w)
        p_u = np.abs(psi[labels(d) % N]) ** 2
        p_v = np.abs((F @ psi)[labels(d) % N]) ** 2
        marg = max(marg, np.abs(rows - p_u).max(), np.abs(cols - p_v).max())
        bound = max(bound, float(np.max(w ** 2)) - 1.0)
        purity = max(purity, abs(purity_sum(w) - 1.0))
        fast = max(fast, np.abs(wigner_fast(psi) - w).max())
        support_deficit = max(support_deficit, N - support_count(w, 1e-10))
    checks += [
        Check(N, "wigner-reality", float(reality), 1e-12),
        Check(N, "marginals", float(marg), 1e-10),
        Check(N, "bound", max(float(bound), 0.0), 1e-10),
        Check(N, "purity", float(purity), 1e-9),
        Check(N, "support", float(max(support_deficit, 0)), 0.0),
        Check(N, "fast-path", float(fast), 1e-10),
    ]

    exp_err = 0.0
    for sc in (CartesianScaling(d, 0.5), CartesianScaling(d, 1.0), CartesianScaling(d, 1.5), AngularScaling(d)):
        exp_err = max(exp_err, *exponential_identity_errors(sc).values())
    checks.append(Check(N, "exponential-identities", exp_err, 1e-12))

    pb = 0.0
    for steps in (0, 1):
        theta_ref = 2 * np.pi * steps / N
        number, phase = pegg_barnett_map(theta_ref, d, basis)
        lab = labels(d)
        pb = max(
            pb,
            np.abs(number - lab[None, :]).max(),
            np.abs(phase - (theta_ref + 2 * np.pi * lab[:, None] / N)).max(),
        )
    checks.append(Check(N, "pegg-barnett", float(pb), 1e-10))
    return checks
