"""Closed-form rate constants: reference values, decompositions, scaling."""

import math
import random

import numpy as np
import pytest

from esfi import errors
from esfi.hydrogenic import make_atom
from esfi.rates import (
    barrier_integral_log_part,
    barrier_integral_main_part,
    barrier_term,
    barrier_term_from_parts,
    effective_escape_probability,
    geometric_prefactor,
    guard_field,
    rate_gaussian_check,
    rate_ll,
    rate_z_form,
    suppression_field_naive,
)
from esfi.units import REGISTRY, UnitSystem

AU_FIELD = REGISTRY.au_field
AU_TIME = REGISTRY.au_time


def test_atomic_units_hydrogen_value():
    # (4/F) exp(-2/(3F)) at F = 0.05: high-precision evaluation
    r = rate_z_form(1, 0.05, unit_system=UnitSystem.AU, allow_shallow=True)
    assert r.K_e == pytest.approx(1.2956774338501e-4, rel=1e-12)
    assert r.pre_exponential == pytest.approx(80.0, rel=1e-14)
    assert r.regime == "extrapolated"


def test_canonical_hydrogen_value_at_25_v_per_nm():
    # frozen from an arbitrary-precision evaluation of the closed form
    r = rate_ll(make_atom(1), 25.0, allow_shallow=True)
    assert r.K_e == pytest.approx(3.7702424525966e12, rel=1e-10)
    assert r.exponent == pytest.approx(13.712550738326, rel=1e-12)


def test_rate_decreases_to_zero_at_low_field():
    atom = make_atom(1)
    fields = np.geomspace(0.5, 0.99 * guard_field(atom), 1000)
    rates = [rate_ll(atom, float(F)).K_e for F in fields]
    assert all(k2 > k1 for k1, k2 in zip(rates, rates[1:]))
    assert rates[0] < 1e-250


def test_guard_rejects_high_field():
    atom = make_atom(1)
    guard = guard_field(atom)
    assert guard == pytest.approx(16.0693953965, rel=1e-10)
    assert suppression_field_naive(atom) == pytest.approx(2 * guard, rel=1e-15)
    with pytest.raises(errors.ShallowTunnellingRegime):
        rate_ll(atom, guard * 1.000001)
    assert rate_ll(atom, guard * 0.999999).regime == "deep"


def test_non_positive_field_rejected():
    atom = make_atom(1)
    for bad in (0.0, -5.0, float("nan")):
        with pytest.raises(errors.NonPositiveField):
            rate_ll(atom, bad)


def test_z_form_matches_ll_route():
    for Z in (1.0, 2.0, 3.0):
        atom = make_atom(Z)
        for F in np.geomspace(0.05, 0.9, 20) * guard_field(atom):
            a = rate_z_form(Z, float(F))
            b = rate_ll(atom, float(F))
            assert a.K_e == pytest.approx(b.K_e, rel=5e-13)
            assert a.exponent == pytest.approx(b.exponent, rel=5e-14)


def test_z_scaling_of_pre_exponential_and_exponent():
    F = 10.0
    base = rate_z_form(1, F)
    for Z in (2.0, 3.0):
        r = rate_z_form(Z, F)
        assert r.pre_exponential / base.pre_exponential == pytest.approx(Z**5, rel=1e-12)
        assert r.exponent / base.exponent == pytest.approx(Z**3, rel=1e-12)


def test_au_reduction_reproduces_hydrogen_formula():
    for F in np.geomspace(1e-4, 3e-2, 20):
        r = rate_z_form(1, float(F), unit_system=UnitSystem.AU, allow_shallow=True)
        Fl = np.longdouble(F)
        reference_log = float(np.log(4 / Fl) - 2 / (3 * Fl))
        assert abs(math.expm1(r.log_K_e - reference_log)) < 1e-12


def test_unit_route_consistency_au_vs_canonical():
    # computing in atomic units then converting equals the canonical route
    for Z in (1.0, 1.5, 2.0):
        for F_au in (1e-3, 5e-3, 1e-2):
            k_au = rate_z_form(Z, F_au, unit_system=UnitSystem.AU).K_e / AU_TIME
            k_ev = rate_z_form(Z, F_au * AU_FIELD).K_e
            assert k_au == pytest.approx(k_ev, rel=1e-10)


def test_gaussian_form_equivalence():
    atom = make_atom(1)
    for F in np.geomspace(1e-4, 3e-2, 20) * AU_FIELD:
        g = rate_gaussian_check(float(F))
        l = rate_ll(atom, float(F))
        assert abs(math.expm1(g.log_K_e - l.log_K_e)) < 1e-10


def test_gaussian_form_coefficients():
    # exponent coefficient b I_H^(3/2); pre-exponential coefficient
    # C_FI I_H^(5/2)
    r = REGISTRY
    F = 7.0
    g = rate_gaussian_check(F)
    assert g.exponent * F == pytest.approx(
        r.b.value * r.I_H.value**1.5, rel=1e-12
    )
    assert g.pre_exponential * F == pytest.approx(
        r.C_FI.value * r.I_H.value**2.5, rel=1e-12
    )


def test_escape_probability_is_rate_per_attempt():
    rng = random.Random(3)
    for _ in range(20):
        Z = rng.uniform(0.5, 3.0)
        atom = make_atom(Z)
        F = rng.uniform(0.1, 0.9) * guard_field(atom)
        r = rate_ll(atom, F)
        assert r.K_e / atom.nu_Z == pytest.approx(r.D_eff, rel=1e-12)
        assert effective_escape_probability(atom, F) == r.D_eff


def test_attempt_frequency_constant_value():
    assert "%.6e" % REGISTRY.pi_hbar_C_FI.value == "%.6e" % 257.5185


def test_rate_equals_angular_frequency_times_barrier_term():
    rng = random.Random(11)
    for _ in range(20):
        Z = rng.uniform(0.5, 3.0)
        atom = make_atom(Z)
        F = rng.uniform(0.1, 0.9) * guard_field(atom)
        r = rate_ll(atom, F)
        assert atom.omega_Z * r.T == pytest.approx(r.K_e, rel=1e-12)
        assert barrier_term(atom, F) == r.T
        assert r.D_eff == pytest.approx(geometric_prefactor() * r.T, rel=1e-12)


def test_geometric_prefactor_is_two_pi():
    assert geometric_prefactor() == 2.0 * math.pi


def test_ionization_power_law_in_pre_exponential():
    F = 1.0
    I_grid = np.geomspace(5.0, 60.0, 12)
    logs = [
        math.log(rate_ll(make_atom(1, I_override=float(I)), F).pre_exponential)
        for I in I_grid
    ]
    slope = np.polyfit(np.log(I_grid), logs, 1)[0]
    assert slope == pytest.approx(2.5, abs=1e-10)


def test_barrier_integral_parts_eta0_cancellation():
    import warnings

    rng = random.Random(5)
    for _ in range(10):
        Z = rng.uniform(0.5, 3.0)
        atom = make_atom(Z)
        F = rng.uniform(0.2, 0.8) * guard_field(atom)
        with warnings.catch_warnings():
            # the soft window does not affect the algebraic cancellation
            warnings.simplefilter("ignore", errors.Eta0OutsideWindow)
            t_near = barrier_term_from_parts(atom, F, 10.0 * atom.a_Z)
            t_far = barrier_term_from_parts(atom, F, 30.0 * atom.a_Z)
        assert t_near == pytest.approx(t_far, rel=1e-12)
        assert t_near == pytest.approx(barrier_term(atom, F), rel=1e-12)


def test_sigma_sqrt_i_identity():
    rng = random.Random(13)
    for _ in range(10):
        atom = make_atom(rng.uniform(0.5, 10.0))
        assert REGISTRY.sigma.value * math.sqrt(atom.I) == pytest.approx(
            2.0 * atom.I / atom.B, rel=1e-12
        )


def test_barrier_integral_main_part_au_leading_term():
    # at eta0 -> 0 the main part reduces to (2/3)/F_au for hydrogen
    atom = make_atom(1)
    F_au = 0.01
    F = F_au * AU_FIELD
    eta0 = 10.0 * atom.a_Z
    with pytest.warns(errors.Eta0OutsideWindow):
        # tiny eta0 deliberately violates the soft window
        small = barrier_integral_main_part(atom, F, 1e-9)
    assert small == pytest.approx((2.0 / 3.0) / F_au, rel=1e-6)
    leading = barrier_integral_main_part(atom, F, eta0) + (
        REGISTRY.sigma.value * math.sqrt(atom.I) * eta0
    )
    assert leading == pytest.approx((2.0 / 3.0) / F_au, rel=1e-12)


def test_eta0_window_warning_boundaries():
    atom = make_atom(1)
    F = 5.0
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("error")
        barrier_integral_main_part(atom, F, 10.0 * atom.a_Z)
        barrier_integral_log_part(atom, F, 10.0 * atom.a_Z)
    with pytest.warns(errors.Eta0OutsideWindow):
        barrier_integral_main_part(atom, F, atom.a_Z)
    with pytest.warns(errors.Eta0OutsideWindow):
        outer = 2.0 * atom.I / F
        barrier_integral_log_part(atom, F, 0.5 * outer)


def test_rate_result_serialization_round_trip():
    import json

    r = rate_ll(make_atom(1), 10.0)
    loaded = json.loads(json.dumps(r.as_dict()))
    assert loaded == r.as_dict()
