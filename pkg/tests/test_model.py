import math

import mpmath
import numpy as np
import pytest
from scipy.constants import hbar, k as k_B

from duffing_qubit import (
    BathSpec,
    PhysicalParams,
    bath_j,
    physical_from_scaled,
    planck,
    scale_params,
)


def squid_scale_params(f_0=2.0e-7):
    """SQUID-flavored reference set: GHz oscillator, drive 2% below resonance."""
    omega_0 = 2 * math.pi * 1.8e9
    m = 3.0e-13
    return PhysicalParams(
        m=m,
        omega_0=omega_0,
        omega_f=0.98 * omega_0,
        gamma_s=m * omega_0**2 / 24.0,
        f_0=f_0,
        kappa=0.3 * 0.02 * omega_0,
        temperature=0.04,
        omega_c=20.0 * omega_0,
    )


class TestPlanck:
    def test_zero_temperature(self):
        assert planck(1e9, 0.0) == 0.0

    def test_occupation_one_at_log_two(self):
        # hbar*omega/kB*T = ln 2  ->  n = 1/(2 - 1) = 1
        omega = 1e9
        temperature = hbar * omega / (k_B * math.log(2.0))
        assert math.isclose(planck(omega, temperature), 1.0, rel_tol=1e-12)

    def test_classical_limit(self):
        # n approaches kB*T/(hbar*omega) within 1% once hbar*omega/kB*T <= 0.02
        omega = 1e8
        temperature = hbar * omega / (k_B * 0.02)
        n = planck(omega, temperature)
        assert abs(n / (k_B * temperature / (hbar * omega)) - 1.0) < 0.01

    def test_monotonic_in_omega_and_temperature(self):
        omegas = np.linspace(1e8, 1e10, 30)
        values = [planck(w, 0.05) for w in omegas]
        assert all(a > b for a, b in zip(values, values[1:]))
        temps = np.linspace(0.01, 1.0, 30)
        values = [planck(1e9, t) for t in temps]
        assert all(a < b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("omega", [0.0, -1e9])
    def test_rejects_nonpositive_frequency(self, omega):
        with pytest.raises(ValueError):
            planck(omega, 0.1)


class TestScaleParams:
    def test_no_drive_means_zero_intensity(self):
        s = scale_params(squid_scale_params(f_0=0.0))
        assert s.beta == 0.0

    def test_beta_quadratic_in_drive(self):
        s1 = scale_params(squid_scale_params(f_0=1.0e-7))
        s2 = scale_params(squid_scale_params(f_0=2.0e-7))
        assert s2.beta == 4.0 * s1.beta

    def test_against_extended_precision(self):
        p = squid_scale_params()
        s = scale_params(p)
        with mpmath.workdps(50):
            mpf = mpmath.mpf
            d = abs(mpf(p.omega_f) - mpf(p.omega_0))
            beta = 3 * mpf(p.gamma_s) * mpf(p.f_0) ** 2 / (
                2 * (mpf(p.m) * mpf(p.omega_f) * d) ** 3
            )
            lam = 3 * mpf(hbar) * mpf(p.gamma_s) / (
                2 * mpf(p.m) ** 2 * mpf(p.omega_f) ** 2 * d
            )
            c_res = mpmath.sqrt(2 * mpf(p.m) * mpf(p.omega_f) * d / (3 * mpf(p.gamma_s)))
            assert abs(s.beta / float(beta) - 1.0) < 1e-13
            assert abs(s.lambda_s / float(lam) - 1.0) < 1e-13
            assert abs(s.c_res / float(c_res) - 1.0) < 1e-13
        assert math.isclose(s.kappa_scaled, p.kappa / p.detuning, rel_tol=1e-15)
        assert math.isclose(s.n_bar, planck(p.omega_f, p.temperature), rel_tol=1e-15)

    def test_rescaling_invariance(self):
        # m -> a*m, gamma_s -> a^2*gamma_s, f_0 -> sqrt(a)*f_0 leaves both
        # beta and lambda_s unchanged at fixed frequencies
        p = squid_scale_params()
        s = scale_params(p)
        for alpha in (2.0, 7.5, 0.3):
            q = PhysicalParams(
                m=alpha * p.m,
                omega_0=p.omega_0,
                omega_f=p.omega_f,
                gamma_s=alpha**2 * p.gamma_s,
                f_0=math.sqrt(alpha) * p.f_0,
                kappa=p.kappa,
                temperature=p.temperature,
                omega_c=p.omega_c,
            )
            t = scale_params(q)
            assert math.isclose(t.beta, s.beta, rel_tol=1e-12)
            assert math.isclose(t.lambda_s, s.lambda_s, rel_tol=1e-12)

    def test_round_trip_from_scaled(self):
        p = physical_from_scaled(0.14, 0.25, 3e-3, 0.8, detuning=2e7)
        s = scale_params(p)
        assert math.isclose(s.beta, 0.14, rel_tol=1e-12)
        assert math.isclose(s.kappa_scaled, 0.25, rel_tol=1e-12)
        assert math.isclose(s.lambda_s, 3e-3, rel_tol=1e-12)
        assert math.isclose(s.n_bar, 0.8, rel_tol=1e-12)
        assert math.isclose(s.scale, 2e7, rel_tol=1e-12)


class TestPhysicalParamsValidation:
    def test_rejects_drive_above_resonance(self):
        p = squid_scale_params()
        with pytest.raises(ValueError):
            PhysicalParams(
                m=p.m, omega_0=p.omega_0, omega_f=1.02 * p.omega_0,
                gamma_s=p.gamma_s, f_0=p.f_0, kappa=p.kappa,
                temperature=p.temperature, omega_c=p.omega_c,
            )

    @pytest.mark.parametrize("field", ["m", "gamma_s", "omega_f", "kappa"])
    def test_rejects_nonpositive(self, field):
        p = squid_scale_params()
        values = dict(
            m=p.m, omega_0=p.omega_0, omega_f=p.omega_f, gamma_s=p.gamma_s,
            f_0=p.f_0, kappa=p.kappa, temperature=p.temperature, omega_c=p.omega_c,
        )
        values[field] = 0.0
        with pytest.raises(ValueError):
            PhysicalParams(**values)

    def test_rejects_low_cutoff(self):
        p = squid_scale_params()
        with pytest.raises(ValueError):
            PhysicalParams(
                m=p.m, omega_0=p.omega_0, omega_f=p.omega_f, gamma_s=p.gamma_s,
                f_0=p.f_0, kappa=p.kappa, temperature=p.temperature,
                omega_c=0.5 * p.omega_0,
            )


class TestBath:
    def test_ohmic_values(self):
        b = BathSpec.ohmic(kappa=1e7, m=1e-12, omega_c=1e10)
        assert bath_j(b, -1.0) == 0.0
        assert bath_j(b, 1e10 * (1 + 1e-12)) == 0.0
        half = bath_j(b, 0.5e10)
        assert math.isclose(half, hbar * 1e-12 * 1e7 * 1e10, rel_tol=1e-15)

    def test_ohmic_nonnegative_and_zero_outside(self):
        b = BathSpec.ohmic(kappa=1e7, m=1e-12, omega_c=1e10)
        grid = np.linspace(-2e10, 3e10, 501)
        j = bath_j(b, grid)
        assert np.all(j >= 0.0)
        assert np.all(j[(grid < 0) | (grid > 1e10)] == 0.0)

    def test_tabulated_interpolation(self):
        table = np.array([[0.0, 0.0], [1.0, 2.0], [3.0, 6.0]])
        b = BathSpec(kind="tabulated", kappa=1.0, m=1.0, omega_c=3.0, table=table)
        assert math.isclose(bath_j(b, 2.0), 4.0, rel_tol=1e-15)
        assert bath_j(b, -0.5) == 0.0
        assert bath_j(b, 4.0) == 0.0

    def test_tabulated_rejects_bad_tables(self):
        with pytest.raises(ValueError):
            BathSpec(kind="tabulated", kappa=1.0, m=1.0, omega_c=3.0,
                     table=np.array([[1.0, 1.0], [0.5, 2.0]]))
        with pytest.raises(ValueError):
            BathSpec(kind="tabulated", kappa=1.0, m=1.0, omega_c=3.0,
                     table=np.array([[-1.0, 1.0], [0.5, 2.0]]))
        with pytest.raises(ValueError):
            BathSpec(kind="tabulated", kappa=1.0, m=1.0, omega_c=3.0,
                     table=np.array([[0.0, 1.0], [0.5, -2.0]]))
