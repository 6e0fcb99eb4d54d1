"""Scaled position/momentum and angle/angular-momentum operators and
numerical continuum-limit studies.

With ``eps = sqrt(2 pi / N)``:

* Cartesian: ``P = sum_j j eps**delta p0 |v_j><v_j|`` and
  ``Q = sum_j j eps**(2-delta) q0 |u_j><u_j|`` so that
  ``V = exp(i eps**(2-delta) P / p0)`` and ``U = exp(i eps**delta Q / q0)``.
* Angular (``delta = 0``): ``M = sum_j j m0 |v_j><v_j|`` and
  ``Theta = sum_j j eps**2 theta0 |u_j><u_j|``.

Grid site ``(m, n)`` of a Wigner grid sits at ``q = m dq``, ``p = n dp``
(or ``theta = 2 pi m / N``, angular momentum ``n``). Units: ``p0 q0 = 1``,
``theta0 = m0 = 1``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm

from .basis import BasisSet, build_all
from .errors import EmbeddingError, InputError, ReferenceAngleError, ResolutionError, ScalingError
from .mapping import symbol
from .schwinger import (
    Dimension,
    DimLike,
    as_dimension,
    build_u,
    build_v,
    finite_fourier,
    labels,
    signed_label,
)
from .wigner import wigner_fast

log = logging.getLogger(__name__)

__all__ = [
    "CartesianScaling",
    "AngularScaling",
    "ConvergenceReport",
    "build_pq",
    "build_m_theta",
    "exponential_identity_errors",
    "gaussian_state",
    "continuum_wigner_cartesian",
    "cartesian_convergence",
    "angular_state",
    "angular_wigner",
    "angular_convergence",
    "pegg_barnett_map",
]


@dataclass(frozen=True)
class CartesianScaling:
    dim: Dimension
    delta: float
    p0: float = 1.0
    q0: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "dim", as_dimension(self.dim))
        if not 0.0 < self.delta < 2.0:
            raise ScalingError(f"delta must lie in the open interval (0, 2), got {self.delta}")
        if self.p0 <= 0 or self.q0 <= 0:
            raise ScalingError("p0 and q0 must be positive")

    @property
    def eps(self) -> float:
        return self.dim.eps

    @property
    def dq(self) -> float:
        return self.q0 * self.eps ** (2.0 - self.delta)

    @property
    def dp(self) -> float:
        return self.p0 * self.eps ** self.delta

    @property
    def q_grid(self) -> np.ndarray:
        return labels(self.dim) * self.dq

    @property
    def p_grid(self) -> np.ndarray:
        return labels(self.dim) * self.dp


@dataclass(frozen=True)
class AngularScaling:
    dim: Dimension
    theta0: float = 1.0
    m0: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "dim", as_dimension(self.dim))
        if self.theta0 <= 0 or self.m0 <= 0:
            raise ScalingError("theta0 and m0 must be positive")

    @property
    def dtheta(self) -> float:
        return self.theta0 * self.dim.eps ** 2

    @property
    def theta_grid(self) -> np.ndarray:
        return labels(self.dim) * self.dtheta


@dataclass
class ConvergenceReport:
    """Per-dimension error of a discrete grid against its continuum target."""

    dims: list[Dimension]
    errors: list[float]
    norm: str = "max-abs"
    meta: dict = field(default_factory=dict)

    @property
    def sizes(self) -> list[int]:
        return [d.N for d in self.dims]

    def strictly_decreasing(self) -> bool:
        return all(b < a for a, b in zip(self.errors, self.errors[1:]))


def _diagonal_in(basis_change, values):
    """``sum_j values[j] |b_j><b_j|`` where row j of basis_change is ``<b_j|``."""
    return basis_change.conj().T @ (values[:, None] * basis_change)


def build_pq(scaling: CartesianScaling) -> tuple[np.ndarray, np.ndarray]:
    """Momentum and position operators in the computational basis."""
    d = scaling.dim
    j = signed_label(np.arange(d.N), d)
    P = _diagonal_in(finite_fourier(d), j * scaling.dp)
    Q = np.diag((j * scaling.dq).astype(complex))
    return P, Q


def build_m_theta(scaling: AngularScaling) -> tuple[np.ndarray, np.ndarray]:
    """Angular momentum and angle operators in the computational basis."""
    d = scaling.dim
    j = signed_label(np.arange(d.N), d)
    M = _diagonal_in(finite_fourier(d), j * scaling.m0)
    Theta = np.diag((j * scaling.dtheta).astype(complex))
    return M, Theta


def exponential_identity_errors(scaling) -> dict[str, float]:
    """Entrywise deviation of the exponentiated generators from ``U`` and ``V``."""
    d = scaling.dim
    U, V = build_u(d), build_v(d)
    if isinstance(scaling, CartesianScaling):
        P, Q = build_pq(scaling)
        V_rec = expm(1j * scaling.eps ** (2.0 - scaling.delta) * P / scaling.p0)
        U_rec = expm(1j * scaling.eps ** scaling.delta * Q / scaling.q0)
    else:
        M, Theta = build_m_theta(scaling)
        V_rec = expm(1j * d.eps ** 2 * M / scaling.m0)
        U_rec = expm(1j * Theta / scaling.theta0)
    return {"U": float(np.abs(U_rec - U).max()), "V": float(np.abs(V_rec - V).max())}


def gaussian_state(scaling: CartesianScaling, sigma: float) -> np.ndarray:
    """Sampled ``exp(-q**2 / (2 sigma**2))`` on the position grid, normalized.

    Raises :class:`ResolutionError` unless ``dq <= sigma <= N dq / 8``.
    """
    if sigma <= 0:
        raise ScalingError(f"sigma must be positive, got {sigma}")
    d = scaling.dim
    dq = scaling.dq
    if not dq <= sigma <= d.N * dq / 8:
        raise ResolutionError(
            f"sigma={sigma} outside [{dq:.4g}, {d.N * dq / 8:.4g}] for N={d.N}, delta={scaling.delta}"
        )
    q = signed_label(np.arange(d.N), d) * dq
    psi = np.exp(-(q ** 2) / (2.0 * sigma ** 2)).astype(complex)
    return psi / np.linalg.norm(psi)


def continuum_wigner_cartesian(q, p, sigma):
    """Wigner function of the normalized Gaussian of width ``sigma``.

    ``exp(-q**2/sigma**2 - sigma**2 p**2) / pi`` (units with hbar = 1).
    """
    if sigma <= 0:
        raise ScalingError(f"sigma must be positive, got {sigma}")
    q = np.asarray(q, dtype=float)
    p = np.asarray(p, dtype=float)
    out = np.exp(-(q ** 2) / sigma ** 2 - sigma ** 2 * p ** 2) / np.pi
    return float(out) if out.ndim == 0 else out


def _central(N):
    h = (N - 1) // 2
    return np.abs(labels(N)) <= h // 2


def cartesian_convergence(sigma: float, dims, delta: float) -> ConvergenceReport:
    """Max deviation of the rescaled discrete Wigner grid of a Gaussian from
    the continuum Wigner function, over the central half of each grid."""
    dims = [as_dimension(d) for d in dims]
    errors = []
    for d in dims:
        sc = CartesianScaling(d, delta)
        w = wigner_fast(gaussian_state(sc, sigma)) / (sc.dq * sc.dp)
        ref = continuum_wigner_cartesian(sc.q_grid[:, None], sc.p_grid[None, :], sigma)
        keep = _central(d.N)
        err = float(np.abs(w - ref)[np.ix_(keep, keep)].max())
        log.debug("cartesian N=%d delta=%g error=%.3e", d.N, delta, err)
        errors.append(err)
    return ConvergenceReport(dims, errors, meta={"sigma": sigma, "delta": delta})


def _check_coefficients(coeffs) -> np.ndarray:
    c = np.asarray(coeffs, dtype=complex)
    if c.ndim != 1 or c.size % 2 == 0:
        raise InputError("coefficients must be an odd-length list indexed -M..M")
    if abs(np.linalg.norm(c) - 1.0) > 1e-8:
        raise InputError(f"coefficients have norm {np.linalg.norm(c)!r}, expected 1")
    return c


def angular_state(coeffs, dim: DimLike) -> np.ndarray:
    """``sum_m c_m |v_m>`` in the computational basis, ``m = -M..M``."""
    c = _check_coefficients(coeffs)
    d = as_dimension(dim)
    M = (c.size - 1) // 2
    if M >= d.h:
        raise EmbeddingError(f"angular momentum {M} does not fit below h={d.h}")
    ms = np.arange(-M, M + 1)
    k = np.arange(d.N)
    return (c[:, None] * np.exp(2j * np.pi * (np.outer(ms, k) % d.N) / d.N)).sum(0) / np.sqrt(d.N)


def angular_wigner(coeffs, theta, l, nodes: int = 64):
    """Angular Wigner function of ``psi(theta) = sum_m c_m exp(i m theta)/sqrt(2 pi)``.

    ``W(theta, l) = 1/(2 pi) int_{-pi}^{pi} psi(theta - a/2) psi*(theta + a/2)
    exp(i l a) da`` by Gauss-Legendre quadrature; the integrand is entire,
    so a fixed rule converges exponentially.
    """
    c = _check_coefficients(coeffs)
    M = (c.size - 1) // 2
    ms = np.arange(-M, M + 1)
    x, wts = np.polynomial.legendre.leggauss(nodes)
    alpha = np.pi * x
    wts = np.pi * wts
    theta = np.asarray(theta, dtype=float)
    l = np.asarray(l, dtype=float)
    th = theta[..., None]

    def psi(t):
        return (c * np.exp(1j * ms * t[..., None])).sum(-1) / np.sqrt(2.0 * np.pi)

    integrand = psi(th - alpha / 2) * np.conj(psi(th + alpha / 2)) * np.exp(1j * l[..., None] * alpha)
    return (integrand @ wts).real / (2.0 * np.pi)


def angular_convergence(coeffs, dims) -> ConvergenceReport:
    """Max deviation of the rescaled discrete Wigner grid of an angular
    momentum superposition from the continuum angular Wigner function,
    over all angles and ``l = -M..M``."""
    c = _check_coefficients(coeffs)
    M = (c.size - 1) // 2
    dims = [as_dimension(d) for d in dims]
    errors = []
    for d in dims:
        sc = AngularScaling(d)
        w = wigner_fast(angular_state(c, d)) / sc.dtheta
        ls = np.arange(-M, M + 1)
        ref = angular_wigner(c, sc.theta_grid[:, None], ls[None, :])
        err = float(np.abs(w[:, ls + d.h] - ref).max())
        log.debug("angular N=%d error=%.3e", d.N, err)
        errors.append(err)
    return ConvergenceReport(dims, errors, meta={"coeffs": [[z.real, z.imag] for z in c]})


def pegg_barnett_map(theta_ref: float, dim: DimLike, basis: BasisSet | None = None):
    """Phase-space representatives of the number and phase operators.

    The number operator is the angular momentum operator with ``m0 = 1``; the
    phase operator is the angle operator shifted by ``theta_ref``, which must
    be an integer multiple of ``2 pi / N``. Representatives are returned in
    the unnormalized convention of :func:`qphase.mapping.symbol`, so they
    equal ``n`` and ``theta_ref + 2 pi m / N`` on the grid.
    """
    d = as_dimension(dim)
    steps = theta_ref * d.N / (2.0 * np.pi)
    if abs(steps - round(steps)) > 1e-9:
        raise ReferenceAngleError(f"theta_ref={theta_ref!r} is not a multiple of 2*pi/{d.N}")
    if basis is None:
        basis = build_all(d)
    number, theta = build_m_theta(AngularScaling(d))
    phase = theta + theta_ref * np.eye(d.N)
    return symbol(number, basis).real, symbol(phase, basis).real
