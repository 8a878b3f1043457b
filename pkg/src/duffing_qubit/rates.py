"""Golden-rule qubit relaxation and excitation rates in all regimes.

The qubit couples to the driven oscillator quadratically (frequency-shift
coupling, rate prefactor ``C_gamma``) or linearly (Jaynes-Cummings-like,
prefactor from the coupling energies ``v_x``/``v_z``).  Each channel yields
the pair (gamma_e, gamma_g): decay of the excited state and excitation out
of the ground state.  In every channel gamma_g follows from gamma_e by
interchanging the thermal weights n_bar + 1 <-> n_bar of the bath factors;
detailed balance holds at the open bath frequency, not at the qubit
frequency, so the stationary qubit population defines an effective
temperature that can exceed the bath temperature, diverge, or turn negative
(population inversion).

Regimes (selected explicitly by the caller; validity conditions are
reported as flags, never auto-switched):

- resonant one-quantum: |omega_q - 2 omega_f| << omega_f, rate carries the
  squared vibration amplitude u and the quasienergy resonance structure;
- resonant two-quantum: |omega_q - 2 omega_0| << omega_0, amplitude
  independent;
- nonresonant (one- and two-quantum): bath density of states probed at the
  combination frequencies; matches the resonant forms in the overlap range;
- linear coupling, resonant and nonresonant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.constants import hbar, k as k_B

from .attractors import Attractor, MarginalAttractorError, drift_matrix
from .fluctuations import (
    absorption_spectrum,
    emission_spectrum,
    spectrum_matrix,
    stationary_covariance,
    two_quantum_spectrum,
)
from .model import BathSpec, PhysicalParams, ScaledParams, bath_j, planck, scale_params

__all__ = [
    "QubitParams",
    "RateResult",
    "NearResonanceError",
    "FLAG_RESONANT_PUMPING",
    "FLAG_SEMICLASSICAL",
    "FLAG_WEAK_DAMPING",
    "FLAG_RWA",
    "FLAG_QUBIT_FASTER",
    "FLAG_MODERATE_T",
    "FLAG_TWO_QUANTUM",
    "FLAG_THRESHOLDS",
    "c_gamma",
    "resonant_1q_scaled",
    "gamma_resonant_1q",
    "gamma_resonant_2q",
    "gamma_total_resonant",
    "gamma_nonresonant",
    "gamma_nonresonant_2q",
    "gamma_linear_resonant",
    "gamma_linear_nonresonant",
    "effective_temperature",
    "bloch_redfield",
    "dephasing_g_zero",
    "validity_flags",
    "raised_flags",
]


class NearResonanceError(Exception):
    """A combination frequency sits too close to the oscillator resonance.

    The perturbative nonresonant formulas have (omega_0^2 - omega_i^2)^-2
    denominators; within ~kappa of resonance they are invalid and the
    resonant routines must be used instead.
    """


FLAG_RESONANT_PUMPING = "ResonantPumping"
FLAG_SEMICLASSICAL = "SemiclassicalBreakdown"
FLAG_WEAK_DAMPING = "WeakDampingViolated"
FLAG_RWA = "RWAViolated"
FLAG_QUBIT_FASTER = "QubitFasterThanOscillator"
FLAG_MODERATE_T = "ModerateTemperatureViolated"
FLAG_TWO_QUANTUM = "TwoQuantumComparable"

# a flag is raised when its ratio meets or exceeds the threshold
FLAG_THRESHOLDS = {
    FLAG_RESONANT_PUMPING: 0.1,
    FLAG_SEMICLASSICAL: 0.1,
    FLAG_WEAK_DAMPING: 1.0,
    FLAG_RWA: 0.1,
    FLAG_QUBIT_FASTER: 1.0,
    FLAG_MODERATE_T: 0.1,
    FLAG_TWO_QUANTUM: 1.0,
}


@dataclass(frozen=True)
class QubitParams:
    """Qubit constants; energies hbar*w/2 along z and hbar*delta/2 along x."""

    w: float              # dominant splitting (rad/s)
    delta: float          # transverse term (rad/s); |delta| << w in practice
    delta_q: float = 0.0  # oscillator frequency shift from the quadratic coupling (rad/s)
    v_x: float = 0.0      # linear coupling energy on sigma_x (J/m)
    v_z: float = 0.0      # linear coupling energy on sigma_z (J/m)

    def __post_init__(self) -> None:
        if self.w <= 0:
            raise ValueError("qubit splitting w must be positive")

    @property
    def omega_q(self) -> float:
        """Transition frequency sqrt(w^2 + delta^2), always recomputed."""
        return math.hypot(self.w, self.delta)


@dataclass(frozen=True)
class RateResult:
    """Rates for one channel, with per-channel Bloch-Redfield times."""

    gamma_e: float                 # excited-state decay rate (1/s)
    gamma_g: float                 # ground-state excitation rate (1/s)
    regime: str
    t1: float                      # 1/(gamma_e + gamma_g) (s)
    t_eff: float                   # effective temperature (K, signed, may be inf)
    t2: float | None = None        # dephasing time when the dc channel is available
    gamma_0: float | None = None   # rate scale hbar*C_gamma*u/(6*gamma_s)
    gamma_e_scaled: float | None = None  # gamma_e / gamma_0
    gamma_g_scaled: float | None = None
    flags: frozenset[str] = frozenset()
    ratios: dict[str, float] = field(default_factory=dict)


def c_gamma(q: QubitParams, m: float, omega_0: float) -> float:
    """Golden-rule prefactor of the quadratic coupling, (m w0 Dq d / hbar wq)^2 / 2."""
    return 0.5 * (m * omega_0 * q.delta_q * q.delta / (hbar * q.omega_q)) ** 2


def _channel_t1(gamma_e: float, gamma_g: float) -> float:
    total = gamma_e + gamma_g
    return math.inf if total == 0.0 else 1.0 / total


def effective_temperature(gamma_e: float, gamma_g: float, omega_q: float) -> float:
    """T_eff = hbar*omega_q / [kB * ln(gamma_e/gamma_g)] (K, signed).

    Infinite when the rates balance; +0 in the ground-state-only limit
    gamma_g = 0; negative under population inversion gamma_g > gamma_e.
    """
    if gamma_e < 0.0 or gamma_g < 0.0:
        raise ValueError("rates must be non-negative")
    if gamma_e == 0.0 and gamma_g == 0.0:
        return float("nan")
    if gamma_g == 0.0:
        return 0.0
    if gamma_e == 0.0:
        return -0.0
    if gamma_e == gamma_g:
        return math.inf
    return hbar * omega_q / (k_B * math.log(gamma_e / gamma_g))


def bloch_redfield(
    gamma_e: float,
    gamma_g: float,
    q: QubitParams,
    p: PhysicalParams,
    dephasing_g0: float,
) -> tuple[float, float]:
    """(T1, T2) from the channel rates and the zero-frequency noise weight.

    T1^-1 = gamma_e + gamma_g;
    T2^-1 = T1^-1 / 2 + 2 C_gamma (w/delta)^2 * dephasing_g0.
    """
    if gamma_e < 0.0 or gamma_g < 0.0 or dephasing_g0 < 0.0:
        raise ValueError("rates and dephasing weight must be non-negative")
    if q.delta == 0.0 and dephasing_g0 != 0.0:
        raise ValueError("delta = 0 makes the dephasing prefactor divergent")
    t1 = _channel_t1(gamma_e, gamma_g)
    rate2 = 0.5 * (gamma_e + gamma_g)
    if dephasing_g0 != 0.0:
        rate2 += 2.0 * c_gamma(q, p.m, p.omega_0) * (q.w / q.delta) ** 2 * dephasing_g0
    t2 = math.inf if rate2 == 0.0 else 1.0 / rate2
    return t1, t2


def dephasing_g_zero(a: Attractor, s: ScaledParams) -> float:
    """Zero-frequency weight of the squared-displacement noise (m^4 s).

    Leading (one-quantum) dc channel: the slow part of 2*x_a*dx projects the
    quadrature noise onto v = (Q_a, P_a), so the weight is
    c_res^4 * v.Re N(0).v / |delta_omega|.  Two-quantum dc contributions are
    smaller by a factor lambda_s and neglected.
    """
    if not a.stable:
        raise MarginalAttractorError("dephasing weight needs a stable attractor")
    k = drift_matrix(a, s.kappa_scaled)
    cov = stationary_covariance(k, s.lambda_s, s.kappa_scaled, s.n_bar)
    n0 = spectrum_matrix(k, cov, s.lambda_s, 0.0)
    v = np.array([a.q, a.p])
    weight = float(v @ n0.real @ v)
    return s.c_res**4 * max(weight, 0.0) / s.scale


def validity_flags(
    q: QubitParams,
    p: PhysicalParams,
    s: ScaledParams,
    a: Attractor | None,
    t1: float,
    t2: float | None,
) -> dict[str, float]:
    """Dimensionless validity ratios; see FLAG_THRESHOLDS for the limits.

    - ResonantPumping: saturation parameter of the coherent drive at the
      qubit, Omega^2 T1 T2 / (1 + detuning^2 T2^2) with the Rabi frequency
      Omega = m omega_0 Dq delta c_res^2 u / (hbar omega_q);
    - SemiclassicalBreakdown: fluctuation area lambda_s (2 n_bar + 1);
    - WeakDampingViolated: kappa_scaled / nu_scaled;
    - RWAViolated: max(|delta_omega|, kappa) / omega_0;
    - QubitFasterThanOscillator: (1/T1) / kappa.
    """
    ratios: dict[str, float] = {}
    if a is not None and t2 is not None and math.isfinite(t1) and math.isfinite(t2):
        omega_rabi = (
            p.m * p.omega_0 * q.delta_q * q.delta * s.c_res**2 * a.u
            / (hbar * q.omega_q)
        )
        det = q.omega_q - 2.0 * p.omega_f
        ratios[FLAG_RESONANT_PUMPING] = (
            omega_rabi**2 * t1 * t2 / (1.0 + det**2 * t2**2)
        )
    ratios[FLAG_SEMICLASSICAL] = s.fluctuation_area
    if a is not None and a.nu_scaled > 0.0:
        ratios[FLAG_WEAK_DAMPING] = s.kappa_scaled / a.nu_scaled
    ratios[FLAG_RWA] = max(s.scale, p.kappa) / p.omega_0
    if math.isfinite(t1) and t1 > 0.0:
        ratios[FLAG_QUBIT_FASTER] = 1.0 / (t1 * p.kappa)
    return ratios


def raised_flags(ratios: dict[str, float]) -> frozenset[str]:
    return frozenset(
        name
        for name, value in ratios.items()
        if math.isfinite(value) and value >= FLAG_THRESHOLDS[name]
    )


def _require_stable(a: Attractor) -> None:
    if not a.stable:
        raise MarginalAttractorError(
            f"attractor on branch {a.branch.value!r} (marginal={a.marginal}) "
            "is outside the linearized theory"
        )


def resonant_1q_scaled(
    omega_rel: float | np.ndarray,
    u: float,
    nu_scaled: float,
    kappa_scaled: float,
    n_bar: float,
) -> tuple[float | np.ndarray, float | np.ndarray]:
    """(gamma_e, gamma_g)/gamma_0 for the resonant one-quantum channel.

    omega_rel is the scaled detuning (omega_q - 2*omega_f)/|delta_omega|.
    Equal to the closed-form spectra with the lambda_s factor stripped:

        gamma_e/gamma_0 = 2 k [(n+1)((w-(2u-1))^2 + k^2) + n u^2] / D(w).
    """
    ge = emission_spectrum(omega_rel, u, nu_scaled, kappa_scaled, 1.0, n_bar)
    gg = absorption_spectrum(omega_rel, u, nu_scaled, kappa_scaled, 1.0, n_bar)
    return ge, gg


def gamma_resonant_1q(
    q: QubitParams,
    p: PhysicalParams,
    a: Attractor,
    s: ScaledParams | None = None,
) -> RateResult:
    """One-quantum rates near resonance, |omega_q - 2 omega_f| << omega_f.

    The squared-displacement noise reduces to the quadrature spectrum scaled
    by the forced-vibration amplitude:

        Re G(omega_q) = (m^2 omega_f^2 dw^2 / 9 gamma_s^2) * u * ReN(omega_rel)

    evaluated at omega_rel = (omega_q - 2 omega_f)/|dw|, with the emission /
    absorption spectra supplying gamma_e / gamma_g.
    """
    _require_stable(a)
    if s is None:
        s = scale_params(p)
    d = s.scale
    omega_rel = (q.omega_q - 2.0 * p.omega_f) / d
    f_e = emission_spectrum(omega_rel, a.u, a.nu_scaled, s.kappa_scaled, s.lambda_s, s.n_bar)
    f_g = absorption_spectrum(omega_rel, a.u, a.nu_scaled, s.kappa_scaled, s.lambda_s, s.n_bar)
    pref = (p.m * p.omega_f) ** 2 * d / (9.0 * p.gamma_s**2) * a.u
    cg = c_gamma(q, p.m, p.omega_0)
    gamma_e = cg * pref * f_e
    gamma_g = cg * pref * f_g
    gamma_0 = hbar * cg * a.u / (6.0 * p.gamma_s)
    t1 = _channel_t1(gamma_e, gamma_g)
    t2 = None
    if q.delta != 0.0:
        _, t2 = bloch_redfield(gamma_e, gamma_g, q, p, dephasing_g_zero(a, s))
    ratios = validity_flags(q, p, s, a, t1, t2)
    return RateResult(
        gamma_e=gamma_e,
        gamma_g=gamma_g,
        regime="resonant-1q",
        t1=t1,
        t2=t2,
        t_eff=effective_temperature(gamma_e, gamma_g, q.omega_q),
        gamma_0=gamma_0,
        gamma_e_scaled=f_e / s.lambda_s,
        gamma_g_scaled=f_g / s.lambda_s,
        flags=raised_flags(ratios),
        ratios=ratios,
    )


def gamma_resonant_2q(
    q: QubitParams, p: PhysicalParams, n_bar: float | None = None
) -> RateResult:
    """Two-quantum rates near omega_q = 2*omega_0, amplitude independent."""
    if n_bar is None:
        n_bar = planck(p.omega_f, p.temperature)
    cg = c_gamma(q, p.m, p.omega_0)
    gamma_e = cg * two_quantum_spectrum(q.omega_q, p.omega_0, p.kappa, n_bar, p.m)
    gamma_g = cg * two_quantum_spectrum(
        q.omega_q, p.omega_0, p.kappa, n_bar, p.m, ground=True
    )
    t1 = _channel_t1(gamma_e, gamma_g)
    s = scale_params(p)
    ratios = validity_flags(q, p, s, None, t1, None)
    ratios[FLAG_MODERATE_T] = hbar * n_bar * p.gamma_s / (p.m**2 * p.omega_0**2 * p.kappa)
    return RateResult(
        gamma_e=gamma_e,
        gamma_g=gamma_g,
        regime="resonant-2q",
        t1=t1,
        t_eff=effective_temperature(gamma_e, gamma_g, q.omega_q),
        flags=raised_flags(ratios),
        ratios=ratios,
    )


def gamma_total_resonant(
    q: QubitParams,
    p: PhysicalParams,
    a: Attractor,
    s: ScaledParams | None = None,
) -> RateResult:
    """Sum of the one- and two-quantum resonant channels.

    Raises the crossover flag when the forced-vibration amplitude is
    comparable to the fluctuation cloud, u <~ lambda_s (2 n_bar + 1), where
    the two-quantum channel stops being negligible.
    """
    if s is None:
        s = scale_params(p)
    one = gamma_resonant_1q(q, p, a, s)
    two = gamma_resonant_2q(q, p, n_bar=s.n_bar)
    gamma_e = one.gamma_e + two.gamma_e
    gamma_g = one.gamma_g + two.gamma_g
    t1 = _channel_t1(gamma_e, gamma_g)
    t2 = None
    if q.delta != 0.0:
        _, t2 = bloch_redfield(gamma_e, gamma_g, q, p, dephasing_g_zero(a, s))
    ratios = dict(one.ratios)
    ratios.update(two.ratios)
    if a.u > 0.0:
        ratios[FLAG_TWO_QUANTUM] = s.fluctuation_area / a.u
    gamma_0 = one.gamma_0
    return RateResult(
        gamma_e=gamma_e,
        gamma_g=gamma_g,
        regime="resonant-total",
        t1=t1,
        t2=t2,
        t_eff=effective_temperature(gamma_e, gamma_g, q.omega_q),
        gamma_0=gamma_0,
        gamma_e_scaled=None if gamma_0 in (None, 0.0) else gamma_e / gamma_0,
        gamma_g_scaled=None if gamma_0 in (None, 0.0) else gamma_g / gamma_0,
        flags=raised_flags(ratios),
        ratios=ratios,
    )


def _guard_denominator(p: PhysicalParams, omega_i: float) -> None:
    if abs(p.omega_0**2 - omega_i**2) < 10.0 * p.kappa * p.omega_0:
        raise NearResonanceError(
            f"combination frequency {omega_i:g} rad/s lies within the "
            "oscillator resonance; use the resonant routines"
        )


def _nonresonant_sum(
    p: PhysicalParams,
    b: BathSpec,
    channels: list[tuple[float, float]],
) -> float:
    """Sum of J(w_i) * Phi_i / (w0^2 - w_i^2)^2 over open channels.

    channels holds (omega_i, thermal_offset) pairs; the thermal factor is
    planck(omega_i) + offset.  Channels with omega_i <= 0 carry no bath
    states (J = 0) and are skipped.
    """
    total = 0.0
    for omega_i, offset in channels:
        if omega_i <= 0.0:
            continue
        _guard_denominator(p, omega_i)
        j = bath_j(b, omega_i)
        if j == 0.0:
            continue
        phi = planck(omega_i, p.temperature) + offset
        total += j * phi / (p.omega_0**2 - omega_i**2) ** 2
    return total


def gamma_nonresonant(
    q: QubitParams,
    p: PhysicalParams,
    a: Attractor,
    b: BathSpec | None = None,
    s: ScaledParams | None = None,
) -> RateResult:
    """One-quantum rates far from resonance (|omega_q - 2 omega_0| not small).

    The qubit quantum decays into bath excitations at the combination
    frequencies omega_q +/- omega_f and omega_f - omega_q; emission channels
    carry n_bar + 1 and the absorption-assisted channel n_bar.  Since J
    vanishes at negative argument, at most one of the last two contributes.

        Re G = (2 omega_f |dw| / 3 m gamma_s) * u * sum_i J(w_i) Phi_i / (w0^2-w_i^2)^2

    Raises NearResonanceError when a channel falls within ~kappa of the
    oscillator resonance.
    """
    _require_stable(a)
    if b is None:
        b = BathSpec.from_physical(p)
    if s is None:
        s = scale_params(p)
    wq, wf = q.omega_q, p.omega_f
    pref = 2.0 * wf * s.scale / (3.0 * p.m * p.gamma_s) * a.u
    cg = c_gamma(q, p.m, p.omega_0)
    sum_e = _nonresonant_sum(p, b, [(wq + wf, 1.0), (wq - wf, 1.0), (wf - wq, 0.0)])
    sum_g = _nonresonant_sum(p, b, [(wq + wf, 0.0), (wq - wf, 0.0), (wf - wq, 1.0)])
    gamma_e = cg * pref * sum_e
    gamma_g = cg * pref * sum_g
    t1 = _channel_t1(gamma_e, gamma_g)
    t2 = None
    if q.delta != 0.0:
        _, t2 = bloch_redfield(gamma_e, gamma_g, q, p, dephasing_g_zero(a, s))
    ratios = validity_flags(q, p, s, a, t1, t2)
    return RateResult(
        gamma_e=gamma_e,
        gamma_g=gamma_g,
        regime="nonresonant",
        t1=t1,
        t2=t2,
        t_eff=effective_temperature(gamma_e, gamma_g, q.omega_q),
        flags=raised_flags(ratios),
        ratios=ratios,
    )


def gamma_nonresonant_2q(
    q: QubitParams, p: PhysicalParams, b: BathSpec | None = None
) -> RateResult:
    """Two-quantum rates far from resonance, for weak driving.

    The oscillator hops between neighboring levels (thermal factor at
    omega_0) while a bath quantum is created or annihilated at
    omega_i in {omega_q - omega_0, omega_0 - omega_q, omega_q + omega_0}:

        Re G = (2 hbar / m^3 omega_0) sum_i J(w_i) Phi(w_i) Phi_i / (w0^2-w_i^2)^2.

    Matches the resonant two-quantum Lorentzian for
    omega_0 >> |omega_q - 2 omega_0| >> kappa.
    """
    if b is None:
        b = BathSpec.from_physical(p)
    wq, w0 = q.omega_q, p.omega_0
    n0 = planck(w0, p.temperature)
    pref = 2.0 * hbar / (p.m**3 * w0)
    cg = c_gamma(q, p.m, w0)

    def channel_sum(bath_offsets: tuple[float, float, float], osc_e: bool) -> float:
        osc = (n0 + 1.0) if osc_e else n0
        osc_plus = n0 if osc_e else (n0 + 1.0)
        total = 0.0
        entries = [
            (wq - w0, bath_offsets[0], osc),
            (w0 - wq, bath_offsets[1], osc),
            (wq + w0, bath_offsets[2], osc_plus),
        ]
        for omega_i, offset, phi_i in entries:
            if omega_i <= 0.0:
                continue
            _guard_denominator(p, omega_i)
            j = bath_j(b, omega_i)
            if j == 0.0:
                continue
            phi = planck(omega_i, p.temperature) + offset
            total += j * phi * phi_i / (w0**2 - omega_i**2) ** 2
        return total

    gamma_e = cg * pref * channel_sum((1.0, 0.0, 1.0), osc_e=True)
    gamma_g = cg * pref * channel_sum((0.0, 1.0, 0.0), osc_e=False)
    t1 = _channel_t1(gamma_e, gamma_g)
    s = scale_params(p)
    ratios = validity_flags(q, p, s, None, t1, None)
    return RateResult(
        gamma_e=gamma_e,
        gamma_g=gamma_g,
        regime="nonresonant-2q",
        t1=t1,
        t_eff=effective_temperature(gamma_e, gamma_g, q.omega_q),
        flags=raised_flags(ratios),
        ratios=ratios,
    )


def _linear_coupling_sq(q: QubitParams) -> float:
    # sigma_x and sigma_z couplings enter through w and delta respectively;
    # combined incoherently (the cross term depends on an eigenbasis phase
    # the rate formulas do not fix)
    return (q.v_x * q.w) ** 2 + (q.v_z * q.delta) ** 2


def gamma_linear_resonant(
    q: QubitParams,
    p: PhysicalParams,
    a: Attractor,
    s: ScaledParams | None = None,
) -> RateResult:
    """Linear-coupling rates near omega_q = omega_f.

    gamma_e = (V_x w / hbar omega_q)^2 (m omega_f |dw| / 3 gamma_s)
              * ReN_emission((omega_q - omega_f)/|dw|) / |dw|

    (V_x w -> V_z delta for sigma_z coupling).  No forced-amplitude
    prefactor, but the spectra still distinguish the attractors through u
    and the quasienergy gap.
    """
    _require_stable(a)
    if s is None:
        s = scale_params(p)
    d = s.scale
    omega_rel = (q.omega_q - p.omega_f) / d
    f_e = emission_spectrum(omega_rel, a.u, a.nu_scaled, s.kappa_scaled, s.lambda_s, s.n_bar)
    f_g = absorption_spectrum(omega_rel, a.u, a.nu_scaled, s.kappa_scaled, s.lambda_s, s.n_bar)
    pref = (
        _linear_coupling_sq(q)
        / (hbar * q.omega_q) ** 2
        * (p.m * p.omega_f * d / (3.0 * p.gamma_s))
        / d
    )
    gamma_e = pref * f_e
    gamma_g = pref * f_g
    t1 = _channel_t1(gamma_e, gamma_g)
    ratios = validity_flags(q, p, s, a, t1, None)
    return RateResult(
        gamma_e=gamma_e,
        gamma_g=gamma_g,
        regime="linear-resonant",
        t1=t1,
        t_eff=effective_temperature(gamma_e, gamma_g, q.omega_q),
        flags=raised_flags(ratios),
        ratios=ratios,
    )


def gamma_linear_nonresonant(
    q: QubitParams, p: PhysicalParams, b: BathSpec | None = None
) -> RateResult:
    """Linear-coupling rates far from the oscillator resonance.

    A single bath frequency omega_q is probed, so detailed balance holds
    and T_eff = T exactly:

        gamma_e = 2 (V_x w / hbar m omega_q)^2 J(omega_q) [n(omega_q)+1]
                  / (omega_q^2 - omega_0^2)^2

    with n(omega_q) in place of n(omega_q)+1 for gamma_g.  Independent of
    the occupied attractor.
    """
    if b is None:
        b = BathSpec.from_physical(p)
    wq = q.omega_q
    _guard_denominator(p, wq)
    pref = (
        2.0
        * _linear_coupling_sq(q)
        / (hbar * p.m * wq) ** 2
        / (wq**2 - p.omega_0**2) ** 2
        * bath_j(b, wq)
    )
    n_q = planck(wq, p.temperature)
    gamma_e = pref * (n_q + 1.0)
    gamma_g = pref * n_q
    t1 = _channel_t1(gamma_e, gamma_g)
    s = scale_params(p)
    ratios = validity_flags(q, p, s, None, t1, None)
    return RateResult(
        gamma_e=gamma_e,
        gamma_g=gamma_g,
        regime="linear-nonresonant",
        t1=t1,
        t_eff=effective_temperature(gamma_e, gamma_g, q.omega_q),
        flags=raised_flags(ratios),
        ratios=ratios,
    )
