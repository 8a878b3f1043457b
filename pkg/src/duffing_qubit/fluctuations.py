"""Quadrature fluctuation spectra about a stable attractor.

The linearized rotating-frame dynamics of the quadrature deviations
``Z = (Q - Q_a, P - P_a)`` is an Ornstein-Uhlenbeck process: drift matrix
``K`` (see :func:`duffing_qubit.attractors.drift_matrix`) and isotropic
diffusion ``lambda_s * kappa_scaled * (n_bar + 1/2)``.  Two independent
routes to the one-sided power spectra are implemented:

- closed forms :func:`emission_spectrum` / :func:`absorption_spectrum`,
  rational functions of frequency with poles at the quasienergy gap;
- the matrix (resolvent) route :func:`spectrum_matrix`, built from the
  stationary covariance and the quantum-regression evolution ``exp(K t)``.

Their agreement over parameter space is the central correctness check of
this module.  Sign conventions: the stored covariance is the physical
(positive definite) one, the equal-time commutator contributes
``+i*lambda_s/2`` times the antisymmetric unit tensor with ``eps_12 = +1``,
and one-sided (t >= 0) Fourier transforms are used throughout.

All quantities are dimensionless; spectra carry one factor of ``lambda_s``
and convert to SI seconds after division by ``|delta_omega|``.
"""

from __future__ import annotations

import numpy as np
from scipy.constants import hbar

from .attractors import MarginalAttractorError

__all__ = [
    "LEVI_CIVITA",
    "stationary_covariance",
    "spectrum_matrix",
    "emission_spectrum",
    "absorption_spectrum",
    "emission_from_matrix",
    "absorption_from_matrix",
    "two_quantum_spectrum",
]

LEVI_CIVITA = np.array([[0.0, 1.0], [-1.0, 0.0]])


def stationary_covariance(
    drift: np.ndarray, lambda_s: float, kappa_scaled: float, n_bar: float
) -> np.ndarray:
    """Stationary second moments of the linearized fluctuations.

    Solves the 2x2 continuous-time Lyapunov equation

        K C + C K^T + lambda_s * kappa_scaled * (2 n_bar + 1) * I = 0

    as a linear system in the three independent entries of symmetric C.

    Raises
    ------
    MarginalAttractorError
        If the drift is not strictly stable (an eigenvalue with
        non-negative real part makes the stationary state ill-defined),
        or if the solution fails to be positive definite.
    """
    k = np.asarray(drift, dtype=float)
    if k.shape != (2, 2):
        raise ValueError("drift must be a 2x2 matrix")
    # a margin relative to the drift scale also rejects marginal attractors,
    # whose slowest eigenvalue collapses to numerical zero
    margin = 1e-8 * max(1.0, float(np.linalg.norm(k)))
    if np.max(np.linalg.eigvals(k).real) >= -margin:
        raise MarginalAttractorError(
            "drift matrix is not strictly stable; no stationary covariance"
        )
    source = lambda_s * kappa_scaled * (2.0 * n_bar + 1.0)
    a, b = k[0, 0], k[0, 1]
    c, d = k[1, 0], k[1, 1]
    # unknowns (C11, C12, C22)
    system = np.array(
        [
            [2.0 * a, 2.0 * b, 0.0],
            [c, a + d, b],
            [0.0, 2.0 * c, 2.0 * d],
        ]
    )
    x = np.linalg.solve(system, np.array([-source, 0.0, -source]))
    cov = np.array([[x[0], x[1]], [x[1], x[2]]])
    if source > 0.0 and (cov[0, 0] <= 0.0 or np.linalg.det(cov) <= 0.0):
        raise MarginalAttractorError("covariance is not positive definite")
    return cov


def spectrum_matrix(
    drift: np.ndarray, covariance: np.ndarray, lambda_s: float, omega: float
) -> np.ndarray:
    """One-sided spectrum matrix N(omega) of the quadrature deviations.

    N_nm(omega) = int_0^inf dt exp(i omega t) <Z_n(t) Z_m(0)>, evaluated via
    the resolvent of the drift:

        N(omega) = -(i omega I + K)^{-1} (C + i lambda_s eps / 2)

    where C is the stationary covariance and eps the rank-2 antisymmetric
    tensor carrying the equal-time commutator of the quadratures.
    """
    m = covariance + 0.5j * lambda_s * LEVI_CIVITA
    return -np.linalg.solve(1j * omega * np.eye(2) + drift, m)


def emission_from_matrix(
    drift: np.ndarray, covariance: np.ndarray, lambda_s: float, omega: float
) -> float:
    """Re of the Z+Z- spectrum via the matrix route (Z+- = Z1 +/- i Z2)."""
    n = spectrum_matrix(drift, covariance, lambda_s, omega)
    return float((n[0, 0] + n[1, 1] + 1j * (n[1, 0] - n[0, 1])).real)


def absorption_from_matrix(
    drift: np.ndarray, covariance: np.ndarray, lambda_s: float, omega: float
) -> float:
    """Re of the Z-Z+ spectrum at -omega via the matrix route.

    The sign flip of the argument matches the convention of
    :func:`absorption_spectrum`, so both routes are compared at the same
    ``omega``.
    """
    n = spectrum_matrix(drift, covariance, lambda_s, -omega)
    return float((n[0, 0] + n[1, 1] - 1j * (n[1, 0] - n[0, 1])).real)


def _closed_form(
    omega: float | np.ndarray,
    u: float,
    nu_scaled: float,
    kappa_scaled: float,
    lambda_s: float,
    weight_bracket: float,
    weight_quanta: float,
) -> float | np.ndarray:
    w = np.asarray(omega, dtype=float)
    num = weight_bracket * ((w - (2.0 * u - 1.0)) ** 2 + kappa_scaled**2)
    num = num + weight_quanta * u * u
    den = (w * w - nu_scaled**2) ** 2 + 4.0 * kappa_scaled**2 * w * w
    out = 2.0 * lambda_s * kappa_scaled * num / den
    if np.ndim(omega) == 0:
        return float(out)
    return out


def emission_spectrum(
    omega: float | np.ndarray,
    u: float,
    nu_scaled: float,
    kappa_scaled: float,
    lambda_s: float,
    n_bar: float,
) -> float | np.ndarray:
    """Closed-form Re of the Z+Z- spectrum (drives qubit decay).

    2 lambda_s kappa { (n+1)[(w - (2u-1))^2 + kappa^2] + n u^2 }
    / [ (w^2 - nu^2)^2 + 4 kappa^2 w^2 ]

    For weak damping this has Lorentzian peaks of halfwidth kappa_scaled at
    omega = +/- nu_scaled.
    """
    return _closed_form(
        omega, u, nu_scaled, kappa_scaled, lambda_s, n_bar + 1.0, n_bar
    )


def absorption_spectrum(
    omega: float | np.ndarray,
    u: float,
    nu_scaled: float,
    kappa_scaled: float,
    lambda_s: float,
    n_bar: float,
) -> float | np.ndarray:
    """Closed-form Re of the Z-Z+ spectrum (drives qubit excitation).

    Same rational function as :func:`emission_spectrum` with the thermal
    weights n_bar + 1 and n_bar interchanged.  The argument-negation of the
    underlying one-sided transform is folded in, so callers evaluate it at
    the same frequency offset as the emission spectrum.
    """
    return _closed_form(
        omega, u, nu_scaled, kappa_scaled, lambda_s, n_bar, n_bar + 1.0
    )


def two_quantum_spectrum(
    omega_q: float,
    omega_0: float,
    kappa: float,
    n_bar: float,
    m: float,
    ground: bool = False,
) -> float:
    """Squared-displacement spectrum for two-quantum transitions (SI, m^4 s).

    Lorentzian around omega_q = 2*omega_0 with halfwidth 2*kappa:

        (hbar / m omega_0)^2 * kappa * W / [(omega_q - 2 omega_0)^2 + 4 kappa^2]

    with W = (n_bar + 1)^2 for decay of the qubit excited state and
    W = n_bar^2 (``ground=True``) for excitation out of the ground state;
    the thermal swap applies once per emitted or absorbed quantum.
    """
    weight = n_bar**2 if ground else (n_bar + 1.0) ** 2
    det = omega_q - 2.0 * omega_0
    return (hbar / (m * omega_0)) ** 2 * kappa * weight / (det * det + 4.0 * kappa**2)
