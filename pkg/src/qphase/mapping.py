"""Operators to discrete phase-space functions and back.

A phase-space function is an ``N x N`` complex array indexed
``[m + h, n + h]``. The representative of an operator ``A`` is
``A(m,n) = Tr[G(m,n) A] / N`` and ``A = sum_{m,n} A(m,n) G(m,n)``.
"""
from __future__ import annotations

import numpy as np

from .basis import BasisSet, kernel_table
from .errors import ShapeError
from .schwinger import DimLike, as_dimension

__all__ = [
    "map_operator",
    "symbol",
    "reconstruct",
    "trace_pair",
    "product_representative",
    "commutator_representative",
]


def _check_square(array, N, what):
    array = np.asarray(array)
    if array.shape != (N, N):
        raise ShapeError(f"{what} has shape {array.shape}, expected {(N, N)}")
    return array


def map_operator(op, basis: BasisSet) -> np.ndarray:
    """Representative ``Tr[G(m,n) op] / N`` on the ``[m+h, n+h]`` grid."""
    N = basis.N
    op = _check_square(op, N, "operator")
    return np.einsum("jlrc,cr->jl", basis.elements, op) / N


def symbol(op, basis: BasisSet) -> np.ndarray:
    """Unnormalized representative ``Tr[G(m,n) op]``.

    This is ``N`` times :func:`map_operator`; the identity maps to 1. The
    number and phase operators are usually quoted in this normalization.
    """
    return basis.N * map_operator(op, basis)


def reconstruct(f, basis: BasisSet) -> np.ndarray:
    """Operator ``sum_{m,n} f[m,n] G(m,n)``."""
    f = _check_square(f, basis.N, "phase-space function")
    return np.einsum("jl,jlrc->rc", f, basis.elements)


def trace_pair(f, g) -> complex:
    """``Tr[A B]`` from the representatives of ``A`` and ``B``.

    With the ``1/N`` normalization of :func:`map_operator` this is
    ``N * sum_{m,n} f[m,n] g[m,n]``.
    """
    f = np.asarray(f)
    g = np.asarray(g)
    if f.ndim != 2 or f.shape[0] != f.shape[1]:
        raise ShapeError(f"phase-space function must be square, got {f.shape}")
    if f.shape != g.shape:
        raise ShapeError(f"shape mismatch: {f.shape} vs {g.shape}")
    N = f.shape[0]
    return complex(N * np.sum(f * g))


def _difference_indices(N):
    h = (N - 1) // 2
    lab = np.arange(-h, h + 1)
    m = lab[:, None, None, None, None, None]
    n = lab[None, :, None, None, None, None]
    u = lab[None, None, :, None, None, None]
    v = lab[None, None, None, :, None, None]
    r = lab[None, None, None, None, :, None]
    s = lab[None, None, None, None, None, :]
    return (m - u) % N, (n - v) % N, (m - r) % N, (n - s) % N


def product_representative(f, g, dim: DimLike) -> np.ndarray:
    """Representative of ``A B`` given those of ``A`` and ``B``.

    ``(AB)(m,n) = 1/N sum_{u,v,r,s} f[u,v] g[r,s] Tr[G(m,n) G(u,v) G(r,s)]``.
    Memory grows as ``N**6``; intended for small ``N``.
    """
    N = as_dimension(dim).N
    f = _check_square(f, N, "first function")
    g = _check_square(g, N, "second function")
    return _compose(_full_kernel(N), f, g, N)


def commutator_representative(f, g, dim: DimLike) -> np.ndarray:
    """Representative of ``[A, B]``."""
    N = as_dimension(dim).N
    f = _check_square(f, N, "first function")
    g = _check_square(g, N, "second function")
    K = _full_kernel(N)
    return _compose(K, f, g, N) - _compose(K, g, f, N)


def _full_kernel(N):
    return kernel_table(N)[_difference_indices(N)]  # [m, n, u, v, r, s]


def _compose(K, f, g, N):
    return np.einsum("mnuvrs,uv,rs->mn", K, f, g, optimize=True) / N
