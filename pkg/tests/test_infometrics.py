"""Tests for purity, linear entropies, mutual information and concurrence."""

import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from landau_wigner.errors import DomainError, PreconditionError, UnavailableResult
from landau_wigner.infometrics import (InfoReport, binary_entropy, concurrence_sq_ensemble,
                                       concurrence_sq_pure, entropy_ps, entropy_sp,
                                       eof_from_concurrence, format_number,
                                       gaussian_closed_forms, level_concurrence_sq, mutual_info,
                                       purity, reduced_spin_parity, thermal_report,
                                       wootters_concurrence)
from landau_wigner.spinor_wigner import (EnsembleWeights, OneParticleParams, gaussian_family,
                                         ground_mixture, maximally_mixed, mixture, phi_mixture,
                                         pure_state, superposition, thermal_ensemble)
from landau_wigner.thermo import (thermal_concurrence_sq, thermal_entropy_ps,
                                  thermal_entropy_sp, thermal_mutual_info, thermal_purity)

H_OF_TENTH = 0.46899559358928122125  # mpmath binary entropy at 0.1

PARAMS = [OneParticleParams(1), OneParticleParams(2, 0.7, 0.3), OneParticleParams(3, 1.2, 0.5),
          OneParticleParams(4, 0.1, 2.0)]


def all_pure(params):
    for r in (1, 2):
        for sp in "+-":
            if params.n == 0 and (r, sp) in ((1, "+"), (2, "-")):
                continue
            yield pure_state(params, r, sp)


def bell():
    v = np.array([1.0, 0.0, 0.0, 1.0]) / math.sqrt(2)
    return np.outer(v, v)


class TestFormatting:
    def test_format_number(self):
        assert format_number(None) == "unavailable"
        assert format_number(0.0) == "0"
        assert format_number(1.0 / 3.0) == "0.333333333333"

    def test_report_serialization(self):
        r = InfoReport(1.0, 0.5, 0.5, 1.0, None, "x")
        d = json.loads(r.to_json())
        assert d["concurrence_sq"] is None and d["state"] == "x"
        assert InfoReport.csv_header().split(",")[0] == "state"
        assert r.to_csv_row().endswith("unavailable")
        assert r.identity_residual() == 0.0


class TestEntropies:
    def test_maximally_mixed_values(self):
        for n in (1, 3):
            r = mutual_info(maximally_mixed(n))
            assert r.purity == pytest.approx(0.25, abs=1e-12)
            assert r.entropy_ps == pytest.approx(0.5, abs=1e-12)
            assert r.entropy_sp == pytest.approx(0.75, abs=1e-12)
            assert r.mutual_info == pytest.approx(0.5, abs=1e-12)
            np.testing.assert_allclose(reduced_spin_parity(maximally_mixed(n)),
                                       np.eye(4) / 4, atol=1e-14)

    def test_ground_mixture(self):
        r = mutual_info(ground_mixture())
        assert (r.purity, r.entropy_ps, r.entropy_sp, r.mutual_info) == pytest.approx(
            (0.5, 0.0, 0.5, 0.0), abs=1e-14)
        assert r.concurrence_sq == pytest.approx(0.0, abs=1e-15)

    def test_pure_state_identity(self):
        # for pure states I_ps = I_sp and M = 2 I_ps
        for p in PARAMS:
            for W in all_pure(p):
                r = mutual_info(W)
                assert r.entropy_ps == pytest.approx(r.entropy_sp, abs=1e-12)
                assert r.mutual_info == pytest.approx(2 * r.entropy_ps, abs=1e-12)
                assert r.identity_residual() < 1e-14

    def test_reduced_density_is_state(self):
        W = superposition(PARAMS[1], 0.4)
        rho = reduced_spin_parity(W)
        assert np.trace(rho) == pytest.approx(1.0)
        np.testing.assert_allclose(rho, rho.T, atol=1e-14)
        assert np.linalg.eigvalsh(rho).min() > -1e-12

    def test_subadditivity_bounds(self):
        for W in (maximally_mixed(2), gaussian_family(0.4), phi_mixture(PARAMS[2], 0.3)):
            r = mutual_info(W)
            assert 0 <= r.purity <= 1 + 1e-12
            assert 0 <= r.entropy_sp <= 0.75 + 1e-12
            assert 0 <= r.entropy_ps <= 1


class TestConcurrence:
    @pytest.mark.parametrize("params", PARAMS)
    def test_quantization(self, params):
        c = params.coefficients()
        expected = 2 * (c.eta * c.B) ** 2
        assert level_concurrence_sq(params) == pytest.approx(expected)
        for W in all_pure(params):
            assert concurrence_sq_pure(W) == pytest.approx(expected, abs=1e-12)

    def test_quantized_massless_value(self):
        # eta B = sqrt(2n) / (2E) = 1/2 for massless kz = 0
        for n in range(1, 5):
            assert level_concurrence_sq(OneParticleParams(n)) == pytest.approx(0.5)
        assert level_concurrence_sq(OneParticleParams(0)) == 0.0

    @pytest.mark.parametrize("params", PARAMS)
    def test_superposition_formula(self, params):
        c = params.coefficients()
        for theta in np.linspace(0, math.pi, 41):
            expected = 2 * c.eta ** 2 * (c.B * math.cos(2 * theta) - c.A * math.sin(2 * theta)) ** 2
            assert concurrence_sq_pure(superposition(params, theta)) == pytest.approx(
                expected, abs=1e-10)

    def test_disentangling_angle(self):
        for p in PARAMS[1:]:
            c = p.coefficients()
            theta = 0.5 * math.atan2(c.B, c.A)
            assert concurrence_sq_pure(superposition(p, theta)) == pytest.approx(0.0, abs=1e-12)

    def test_phi_independence(self):
        for p in PARAMS:
            vals = [concurrence_sq_pure(superposition(p, 0.0))]
            for phi in np.linspace(0, math.pi / 2, 11):
                vals.append(mutual_info(phi_mixture(p, phi)).concurrence_sq)
            assert max(vals) - min(vals) < 1e-12

    def test_ensemble_average(self):
        p = PARAMS[1]
        states = [pure_state(p, 1, "+"), superposition(p, 0.7)]
        w = EnsembleWeights((("a", 0.3), ("b", 0.7)))
        expected = 0.3 * concurrence_sq_pure(states[0]) + 0.7 * concurrence_sq_pure(states[1])
        assert concurrence_sq_ensemble(w, states) == pytest.approx(expected, abs=1e-14)
        assert concurrence_sq_ensemble(w, lambda i: states[i]) == pytest.approx(expected)
        assert mutual_info(mixture(states, w)).concurrence_sq == pytest.approx(expected)

    def test_gaussian_concurrence(self):
        for z in (0.0, 0.3, 0.8):
            r = mutual_info(gaussian_family(z))
            assert r.concurrence_sq == pytest.approx(z / 2, abs=1e-12)

    def test_errors(self):
        with pytest.raises(PreconditionError):
            concurrence_sq_pure(maximally_mixed(1))
        with pytest.raises(UnavailableResult):
            concurrence_sq_ensemble(EnsembleWeights((("a", 1.0),)), None)
        stripped = maximally_mixed(2).with_meta(None)
        assert mutual_info(stripped).concurrence_sq is None

    def test_fig1_properties(self):
        p = OneParticleParams(1, 0.5, 0.0)
        c = p.coefficients()
        grid = np.linspace(0, math.pi / 2, 31)
        vals = [concurrence_sq_pure(superposition(p, t)) for t in grid]
        assert min(vals) >= -1e-14 and max(vals) <= 0.5 + 1e-12
        assert vals[0] == pytest.approx(2 * (c.eta * c.B) ** 2, abs=1e-12)
        assert vals[-1] == pytest.approx(2 * (c.eta * c.B) ** 2, abs=1e-12)
        for phi in (0.2, 0.5, 0.7):
            a = mutual_info(phi_mixture(p, phi))
            b = mutual_info(phi_mixture(p, math.pi / 2 - phi))
            assert a.to_dict()["purity"] == pytest.approx(b.purity, abs=1e-12)
            assert a.mutual_info == pytest.approx(b.mutual_info, abs=1e-12)


class TestWootters:
    def test_bell_and_product(self):
        assert wootters_concurrence(bell()) == pytest.approx(1.0, abs=1e-12)
        prod = np.zeros((4, 4))
        prod[0, 0] = 1.0
        assert wootters_concurrence(prod) == pytest.approx(0.0, abs=1e-12)

    def test_werner(self):
        for p in (0.2, 0.8, 1.0):
            rho = p * bell() + (1 - p) * np.eye(4) / 4
            assert wootters_concurrence(rho) == pytest.approx(max(0, (3 * p - 1) / 2), abs=1e-12)

    @given(st.floats(0, math.pi))
    @settings(max_examples=30, deadline=None)
    def test_bounded_by_intrinsic(self, theta):
        W = superposition(PARAMS[2], theta)
        rho = reduced_spin_parity(W)
        assert wootters_concurrence(rho) <= math.sqrt(max(concurrence_sq_pure(W), 0)) + 1e-9

    def test_invalid(self):
        with pytest.raises(DomainError):
            wootters_concurrence(np.eye(3) / 3)
        with pytest.raises(DomainError):
            wootters_concurrence(np.eye(4))
        bad = np.diag([1.5, -0.5, 0.0, 0.0])
        with pytest.raises(DomainError):
            wootters_concurrence(bad)


class TestFormation:
    def test_binary_entropy(self):
        assert binary_entropy(0.0) == 0.0 and binary_entropy(1.0) == 0.0
        assert binary_entropy(0.5) == 1.0
        assert binary_entropy(0.1) == pytest.approx(H_OF_TENTH, abs=1e-15)
        with pytest.raises(DomainError):
            binary_entropy(1.2)

    def test_eof(self):
        assert eof_from_concurrence(0.0) == 0.0
        assert eof_from_concurrence(1.0) == pytest.approx(1.0)
        c = 0.6
        lam = (1 - math.sqrt(1 - c * c)) / 2
        assert eof_from_concurrence(c) == pytest.approx(binary_entropy(lam))
        with pytest.raises(DomainError):
            eof_from_concurrence(1.1)

    @given(st.floats(0, 1), st.floats(0, 1))
    @settings(max_examples=40, deadline=None)
    def test_monotone(self, a, b):
        lo, hi = sorted((a, b))
        assert eof_from_concurrence(lo) <= eof_from_concurrence(hi) + 1e-15


class TestGaussianClosedForms:
    @pytest.mark.parametrize("z", [round(0.1 * k, 1) for k in range(10)])
    def test_pipeline(self, z):
        cf = gaussian_closed_forms(z)
        r = mutual_info(gaussian_family(z))
        for key in ("purity", "entropy_ps", "entropy_sp", "mutual_info", "concurrence_sq"):
            assert getattr(r, key) == pytest.approx(getattr(cf.report, key), abs=1e-9)
        assert gaussian_family(z).gamma0_trace().second_moment() == pytest.approx(
            cf.sigma_sq, abs=1e-9)

    def test_limits(self):
        r = gaussian_closed_forms(0.0).report
        assert (r.purity, r.entropy_ps, r.entropy_sp, r.mutual_info) == pytest.approx(
            (0.5, 0.0, 0.5, 0.0))
        with pytest.raises(DomainError):
            gaussian_closed_forms(1.0)


class TestThermalInformation:
    @pytest.mark.parametrize("mu", [0.3, 1.0, 3.0])
    def test_closed_forms_vs_pipeline(self, mu):
        r = thermal_report(mu)
        assert r.purity == pytest.approx(thermal_purity(mu, 0.0), abs=1e-9)
        assert r.entropy_ps == pytest.approx(thermal_entropy_ps(mu), abs=1e-9)
        assert r.entropy_sp == pytest.approx(thermal_entropy_sp(mu), abs=1e-9)
        assert r.mutual_info == pytest.approx(thermal_mutual_info(mu), abs=1e-9)
        assert r.concurrence_sq == pytest.approx(thermal_concurrence_sq(mu), abs=1e-9)

    def test_report_matches_ensemble_concurrence(self):
        W = thermal_ensemble(4.0, 0.5)
        dec = W.meta.decomposition
        via_states = concurrence_sq_ensemble(dec.weights, dec.state)
        assert thermal_report(4.0, 0.5).concurrence_sq == pytest.approx(via_states, abs=1e-10)

    def test_infinite_temperature(self):
        r = thermal_report(0.0)
        assert (r.purity, r.entropy_ps, r.entropy_sp, r.mutual_info, r.concurrence_sq) == (
            0.0, 1.0, 0.5, 0.5, 0.5)

    def test_cold(self):
        r = thermal_report(40.0)
        assert r.purity == pytest.approx(1.0, abs=1e-12)
        assert r.concurrence_sq == pytest.approx(0.0, abs=1e-12)
