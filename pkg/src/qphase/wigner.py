"""Discrete Wigner function of states and density operators.

Grids are real ``N x N`` arrays indexed ``[m + h, n + h]``: ``m`` labels
eigenstates of ``U`` (rows) and ``n`` eigenstates of ``V`` (columns). A
normalized state's grid sums to one, its row sums give ``|<u_m|psi>|**2``
and its column sums ``|<v_n|psi>|**2``.
"""
from __future__ import annotations

import numpy as np

from .basis import BasisSet, build_all
from .errors import DensityError, NormalizationError, ShapeError
from .mapping import map_operator
from .schwinger import as_dimension, labels

__all__ = [
    "check_state",
    "characteristic_grid",
    "wigner_pure",
    "wigner_fast",
    "wigner_density",
    "marginals",
    "purity_sum",
    "support_count",
]

NORM_TOL = 1e-8
DENSITY_TOL = 1e-8


def check_state(state) -> np.ndarray:
    psi = np.asarray(state, dtype=complex)
    if psi.ndim != 1:
        raise ShapeError(f"state must be a vector, got shape {psi.shape}")
    as_dimension(psi.shape[0])
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > NORM_TOL:
        raise NormalizationError(f"state norm is {norm!r}, expected 1")
    return psi


def wigner_pure(state) -> np.ndarray:
    """Wigner grid by direct summation over ``j``, ``l`` and ``k``.

    ``W(m,n) = 1/N**2 sum_{j,l,k} psi_k* psi_{k-l}
    exp(2 pi i/N (j k - j l/2 - m j + n l))``, all labels in ``[-h, h]``.
    Costs ``O(N**3)``; no FFT is involved.
    """
    psi = check_state(state)
    N = psi.shape[0]
    lab = labels(N)
    k = np.arange(N)
    products = np.conj(psi)[None, :] * psi[(k[None, :] - lab[:, None]) % N]  # [l, k]
    # dense (non-FFT) sums: over k, then l, then j
    char = _roots(np.outer(lab, k), N) @ products.T  # [j, l]
    char *= np.exp(-1j * np.pi * (np.outer(lab, lab) % (2 * N)) / N)
    grid = _roots(-np.outer(lab, lab), N) @ char @ _roots(np.outer(lab, lab), N)
    return grid.real / N ** 2


def _roots(exponent, N):
    return np.exp(2j * np.pi * (exponent % N) / N)


def characteristic_grid(state) -> np.ndarray:
    """``rho_s(j,l) = sum_k psi_k* psi_{k-l} exp(2 pi i/N (j k - j l/2))``.

    Indexed ``[j + h, l + h]``. Every entry has modulus at most one.
    """
    psi = check_state(state)
    N = psi.shape[0]
    lab = labels(N)
    k = np.arange(N)
    products = np.conj(psi)[None, :] * psi[(k[None, :] - lab[:, None]) % N]  # [l, k]
    # sum_k x_k w**(j k) = N * ifft(x)[j]
    spectra = N * np.fft.ifft(products, axis=1)  # [l, j mod N]
    char = spectra[:, lab % N].T  # [j, l]
    half = np.exp(-1j * np.pi * (np.outer(lab, lab) % (2 * N)) / N)
    return char * half


def wigner_fast(state) -> np.ndarray:
    """Same grid as :func:`wigner_pure` via FFTs of the characteristic grid.

    ``O(N**2 log N)``.
    """
    char = characteristic_grid(state)
    N = char.shape[0]
    # move labels [-h, h] to FFT storage order, transform, move back
    stored = np.fft.ifftshift(char)
    grid = np.fft.fft(np.fft.ifft(stored, axis=1), axis=0) / N
    return np.fft.fftshift(grid).real


def wigner_density(rho, basis: BasisSet | None = None) -> np.ndarray:
    """Wigner grid ``Re Tr[G(m,n) rho] / N`` of a density operator.

    Small Hermiticity defects (below ``1e-8``) are symmetrized away.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ShapeError(f"density operator must be square, got {rho.shape}")
    if basis is None:
        basis = build_all(rho.shape[0])
    elif basis.N != rho.shape[0]:
        raise ShapeError(f"density operator has dimension {rho.shape[0]}, basis {basis.N}")
    if np.abs(rho - rho.conj().T).max() > DENSITY_TOL:
        raise DensityError("density operator is not Hermitian")
    rho = (rho + rho.conj().T) / 2
    if abs(np.trace(rho) - 1.0) > DENSITY_TOL:
        raise DensityError(f"density operator has trace {np.trace(rho).real!r}")
    if np.linalg.eigvalsh(rho).min() < -DENSITY_TOL:
        raise DensityError("density operator is not positive semidefinite")
    return map_operator(rho, basis).real


def marginals(w) -> tuple[np.ndarray, np.ndarray]:
    """Row sums (over ``n``) and column sums (over ``m``) of a grid."""
    w = np.asarray(w)
    return w.sum(axis=1), w.sum(axis=0)


def purity_sum(w) -> float:
    """``Tr[rho**2]`` recovered from a Wigner grid: ``N * sum W(m,n)**2``."""
    w = np.asarray(w, dtype=float)
    return float(w.shape[0] * np.sum(w ** 2))


def support_count(w, threshold: float = 1e-10) -> int:
    """Number of sites where ``|W(m,n)| > threshold``."""
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    return int(np.count_nonzero(np.abs(np.asarray(w)) > threshold))
