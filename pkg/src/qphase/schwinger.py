"""Schwinger unitary pair, finite Fourier transform and mod-N helpers.

Conventions
-----------
Matrices act on the computational basis ``|u_k>``, ``k = 0..N-1``; index
``k`` carries the symmetric label ``k mod N`` taken in ``[-h, h]``.

* ``U|u_k> = w**k |u_k>`` with ``w = exp(2*pi*i/N)``.
* ``V|u_k> = |u_{k-1}>`` (index-lowering cyclic shift), so that
  ``V U = w U V`` and ``V|v_j> = w**j |v_j>`` with
  ``|v_j> = N**-0.5 * sum_k w**(j*k) |u_k>``.

This is the orientation for which the phase-point operators are Hermitian.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Union

import numpy as np

from .errors import DimensionError

__all__ = [
    "Dimension",
    "DimLike",
    "as_dimension",
    "labels",
    "signed_label",
    "label_index",
    "to_label_order",
    "omega",
    "build_u",
    "build_v",
    "finite_fourier",
    "modular_phase",
    "mod_delta",
]


@dataclass(frozen=True)
class Dimension:
    """Odd Hilbert space dimension ``N`` with half-width ``h = (N-1)/2``."""

    N: int

    def __post_init__(self):
        N = self.N
        if isinstance(N, bool) or not isinstance(N, (int, np.integer)):
            raise DimensionError(f"dimension must be an integer, got {N!r}")
        if N < 1:
            raise DimensionError(f"dimension must be positive, got {N}")
        if N % 2 == 0:
            raise DimensionError(f"only odd dimensions are supported, got N={N}")
        object.__setattr__(self, "N", int(N))

    @property
    def h(self) -> int:
        return (self.N - 1) // 2

    @cached_property
    def eps(self) -> float:
        """Scaling parameter ``sqrt(2*pi/N)``."""
        return float(np.sqrt(2.0 * np.pi / self.N))

    def __int__(self):
        return self.N


DimLike = Union[Dimension, int]


def as_dimension(dim: DimLike) -> Dimension:
    if isinstance(dim, Dimension):
        return dim
    return Dimension(dim)


def labels(dim: DimLike) -> np.ndarray:
    """Symmetric labels ``[-h, ..., h]`` in grid order."""
    h = as_dimension(dim).h
    return np.arange(-h, h + 1)


def signed_label(k, dim: DimLike):
    """Representative of ``k mod N`` in ``[-h, h]``."""
    d = as_dimension(dim)
    return (np.asarray(k) + d.h) % d.N - d.h


def label_index(label, dim: DimLike):
    """Row of a phase-space grid holding ``label`` (``label + h``)."""
    d = as_dimension(dim)
    return np.asarray(label) + d.h


def to_label_order(matrix: np.ndarray) -> np.ndarray:
    """Permute a computational-basis matrix to label order ``-h..h``."""
    matrix = np.asarray(matrix)
    N = matrix.shape[0]
    perm = labels(N) % N
    return matrix[np.ix_(perm, perm)]


def omega(dim: DimLike) -> complex:
    return complex(np.exp(2j * np.pi / as_dimension(dim).N))


def build_u(dim: DimLike) -> np.ndarray:
    """Clock operator ``diag(1, w, ..., w**(N-1))``."""
    d = as_dimension(dim)
    k = np.arange(d.N)
    return np.diag(np.exp(2j * np.pi * k / d.N))


def build_v(dim: DimLike) -> np.ndarray:
    """Cyclic shift ``V|u_k> = |u_{k-1 mod N}>``."""
    d = as_dimension(dim)
    V = np.zeros((d.N, d.N), dtype=complex)
    k = np.arange(d.N)
    V[(k - 1) % d.N, k] = 1.0
    return V


def finite_fourier(dim: DimLike) -> np.ndarray:
    """Unitary ``F[j, k] = w**(-j*k) / sqrt(N)``.

    Row ``j`` of ``F`` is ``<v_j|``; equivalently the columns of ``F^dagger``
    are the eigenvectors of ``V`` with eigenvalue ``w**j``.
    """
    d = as_dimension(dim)
    k = np.arange(d.N)
    # reduce the exponent first to keep the phases exact for large N
    return np.exp(-2j * np.pi * (np.outer(k, k) % d.N) / d.N) / np.sqrt(d.N)


def _integral_part(k, N):
    return np.floor_divide(k, N)


def modular_phase(m, n, dim: DimLike):
    """Integer phase ``N*I_m*I_n - m*I_n - n*I_m`` with ``I_k = floor(k/N)``.

    Vanishes for ``0 <= m, n < N``. Accepts scalars or integer arrays.
    """
    N = as_dimension(dim).N
    Im = _integral_part(m, N)
    In = _integral_part(n, N)
    out = N * Im * In - m * In - n * Im
    if np.ndim(out) == 0:
        return int(out)
    return out


def mod_delta(a, b, dim: DimLike):
    """Kronecker delta modulo ``N``."""
    N = as_dimension(dim).N
    out = (np.asarray(a) - np.asarray(b)) % N == 0
    if out.ndim == 0:
        return bool(out)
    return out
