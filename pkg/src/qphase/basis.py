"""Phase-point operator basis ``G(j, l)`` on an odd-dimensional space.

::

    G(j,l) = 1/N sum_{m,n=-h}^{h} U^m V^n exp(i pi m n / N)
             exp(-2 pi i (m j + n l) / N) exp(i pi phi(m+h, n+h; N))

The elements are Hermitian, have unit trace, are orthogonal with norm
``N`` under the trace inner product and sum to ``N`` times the identity.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import LabelError
from .schwinger import (
    Dimension,
    DimLike,
    as_dimension,
    build_u,
    build_v,
    labels,
    modular_phase,
)

__all__ = [
    "BasisSet",
    "check_label",
    "build_g",
    "build_all",
    "triple_product_kernel",
    "kernel_table",
]


def check_label(label, dim: DimLike) -> tuple[int, int]:
    d = as_dimension(dim)
    try:
        j, l = (int(x) for x in label)
    except (TypeError, ValueError):
        raise LabelError(f"label must be a pair of integers, got {label!r}") from None
    if abs(j) > d.h or abs(l) > d.h:
        raise LabelError(f"label {(j, l)} outside [-{d.h}, {d.h}] for N={d.N}")
    return j, l


def _power(M: np.ndarray, k: int) -> np.ndarray:
    if k >= 0:
        return np.linalg.matrix_power(M, k)
    return np.linalg.matrix_power(M.conj().T, -k)


def build_g(label, dim: DimLike) -> np.ndarray:
    """Single basis element by explicit summation over ``U^m V^n``.

    This is the reference path: it keeps the modular phase and recomputes
    each operator power, so it is slow but transparent.
    """
    d = as_dimension(dim)
    j, l = check_label(label, d)
    N, h = d.N, d.h
    U, V = build_u(d), build_v(d)
    out = np.zeros((N, N), dtype=complex)
    for m in range(-h, h + 1):
        Um = _power(U, m)
        for n in range(-h, h + 1):
            phase = (
                np.pi * m * n / N
                - 2.0 * np.pi * (m * j + n * l) / N
                + np.pi * modular_phase(m + h, n + h, d)
            )
            out += np.exp(1j * phase) * (Um @ _power(V, n))
    return out / N


@dataclass(frozen=True, eq=False)
class BasisSet:
    """All ``N**2`` basis elements of one dimension.

    ``elements[j + h, l + h]`` is the ``N x N`` matrix ``G(j, l)``; the array
    is read-only.
    """

    dim: Dimension
    elements: np.ndarray

    def __post_init__(self):
        N = self.dim.N
        if self.elements.shape != (N, N, N, N):
            raise ValueError(f"expected elements of shape {(N,) * 4}, got {self.elements.shape}")
        self.elements.flags.writeable = False

    @property
    def N(self) -> int:
        return self.dim.N

    def __getitem__(self, label) -> np.ndarray:
        j, l = check_label(label, self.dim)
        h = self.dim.h
        return self.elements[j + h, l + h]

    def __len__(self) -> int:
        return self.dim.N ** 2

    def labels(self) -> Iterator[tuple[int, int]]:
        lab = labels(self.dim)
        for j in lab:
            for l in lab:
                yield int(j), int(l)


def _roots(exponent, N):
    """``exp(2 pi i exponent / N)`` with the exponent reduced mod N first."""
    return np.exp(2j * np.pi * (np.asarray(exponent) % N) / N)


def _half_roots(exponent, N):
    """``exp(i pi exponent / N)``; period 2N."""
    return np.exp(1j * np.pi * (np.asarray(exponent) % (2 * N)) / N)


def build_all(dim: DimLike) -> BasisSet:
    """Every basis element at once.

    The powers of ``U`` and ``V`` are formed once and the label phases are
    applied as a single contraction, ``O(N**6)`` work. The modular phase is
    dropped because it vanishes for summation indices in ``[-h, h]``.
    """
    d = as_dimension(dim)
    N = d.N
    lab = labels(d)
    k = np.arange(N)
    u_pow = _roots(np.outer(lab, k), N)  # [m, k]: diagonal of U^m
    v_pow = np.zeros((N, N, N))
    for i, n in enumerate(lab):
        v_pow[i, (k - n) % N, k] = 1.0  # V^n |u_k> = |u_{k-n}>
    T = u_pow[:, None, :, None] * v_pow[None, :, :, :]
    T = T * _half_roots(np.outer(lab, lab), N)[:, :, None, None]
    E = _roots(-np.outer(lab, lab), N)  # [m, j]
    elements = np.einsum("mj,nl,mnrc->jlrc", E, E, T, optimize=True) / N
    return BasisSet(d, np.ascontiguousarray(elements))


def _kernel_weights(d: Dimension):
    N, h = d.N, d.h
    lab = labels(d)
    a, b, c, e = np.meshgrid(lab, lab, lab, lab, indexing="ij")
    x, y = a + c, b + e
    # The printed modular phase exp(-i pi phi(x+h, y+h; N)) carries an extra
    # (-1)**(h*(p+q)) relative to the trace; it only agrees when h is even.
    p = np.floor_divide(x + h, N)
    q = np.floor_divide(y + h, N)
    wrap = N * p * q - x * q - y * p
    phase = np.pi * (b * c - a * e) / N - np.pi * wrap
    return a, b, c, e, phase


def triple_product_kernel(first, second, third, dim: DimLike) -> complex:
    """``Tr[G(m,n)^dagger G(u,v) G(r,s)]`` as a sum over four phase indices."""
    d = as_dimension(dim)
    m, n = check_label(first, d)
    u, v = check_label(second, d)
    r, s = check_label(third, d)
    a, b, c, e, phase = _kernel_weights(d)
    phase = phase + 2.0 * np.pi / d.N * (a * (m - u) + b * (n - v) + c * (m - r) + e * (n - s))
    return complex(np.exp(1j * phase).sum() / d.N ** 2)


def kernel_table(dim: DimLike) -> np.ndarray:
    """Kernel for every label triple.

    ``table[x1, x2, x3, x4]`` is the kernel at ``(m-u, n-v, m-r, n-s) mod N``;
    the kernel depends on the labels only through these differences. Built
    as one separable four-index Fourier sum.
    """
    d = as_dimension(dim)
    N = d.N
    _, _, _, _, phase = _kernel_weights(d)
    E = _roots(np.outer(labels(d), np.arange(N)), N)  # [a, x]
    table = np.einsum("abcd,ai,bj,ck,dl->ijkl", np.exp(1j * phase), E, E, E, E, optimize=True)
    return table / N ** 2
