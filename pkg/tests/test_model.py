"""Tests for constitutive laws, validation, and coefficient profiles."""

import math

import numpy as np
import pytest

from templeflux.model import (
    CoefficientProfile,
    LinearVelocity,
    ModelLaws,
    PowerPressure,
    coefficient_at,
    coefficient_tv,
    pressure_eval,
    validate_laws,
    velocity_eval,
)

REF_LAWS = ModelLaws(PowerPressure(kappa=1.0, gamma=2.0), LinearVelocity())


# ---------------------------------------------------------------- laws


def test_pressure_eval_examples():
    p = REF_LAWS.pressure
    assert pressure_eval(p, 0.4, 0) == pytest.approx(0.16, abs=1e-15)
    assert pressure_eval(p, 0.16, "inverse") == pytest.approx(0.4, abs=1e-15)
    assert pressure_eval(p, 0.0, 0) == 0.0
    assert pressure_eval(p, 0.0, 1) == 0.0
    assert pressure_eval(p, 0.4, 1) == pytest.approx(0.8, abs=1e-15)
    assert pressure_eval(p, 0.4, 2) == pytest.approx(2.0, abs=1e-15)


def test_velocity_eval_examples():
    v = REF_LAWS.velocity
    assert velocity_eval(v, 0.84, 0) == 0.84
    assert velocity_eval(v, 0.5, 1) == 1.0
    assert velocity_eval(v, 0.5, 2) == 0.0


def test_negative_inputs_rejected():
    with pytest.raises(ValueError):
        pressure_eval(REF_LAWS.pressure, -0.1, 0)
    with pytest.raises(ValueError):
        pressure_eval(REF_LAWS.pressure, -0.1, "inverse")
    with pytest.raises(ValueError):
        velocity_eval(REF_LAWS.velocity, -0.1, 0)


def test_bad_law_parameters_rejected():
    with pytest.raises(ValueError):
        PowerPressure(kappa=0.0)
    with pytest.raises(ValueError):
        PowerPressure(gamma=-1.0)
    with pytest.raises(ValueError):
        LinearVelocity(slope=0.0)


def test_pressure_roundtrip_identity():
    p = PowerPressure(kappa=0.7, gamma=3.0)
    for rho in np.linspace(0.0, 2.0, 501):
        assert pressure_eval(p, pressure_eval(p, rho, 0), "inverse") == pytest.approx(
            rho, abs=1e-12
        )


# ---------------------------------------------------------------- validation


def test_validate_laws_reference_domain():
    rep = validate_laws(REF_LAWS, (0.0, 1.5), (0.0, 1.5))
    assert rep.passed
    assert rep.hyperbolicity_margin > 0.0
    # V'' = 0 so the nonlinearity integrand is (2p' + rho p'') V' = 6 rho;
    # the worst midpoint sits half a cell above zero
    assert rep.genuine_nonlinearity_margin == pytest.approx(6.0 * 1.5 / 400.0, rel=1e-12)
    assert "pass" in rep.summary()


def test_validate_laws_single_point_margin():
    # one-sample grid puts the midpoint exactly at (rho, h) = (0.4, 0.84)
    rep = validate_laws(REF_LAWS, (0.3, 0.5), (0.74, 0.94), samples=1)
    assert rep.hyperbolicity_margin == pytest.approx(0.52, abs=1e-14)


def test_validate_laws_degenerate_domain():
    with pytest.raises(ValueError):
        validate_laws(REF_LAWS, (0.0, 0.0), (0.0, 1.5))


def test_validate_laws_permissive_construction():
    # gamma < 1 may be constructed; validation is the gate and must not crash
    laws = ModelLaws(PowerPressure(kappa=1.0, gamma=0.5), LinearVelocity())
    rep = validate_laws(laws, (0.0, 1.5), (0.0, 1.5), samples=50)
    assert math.isfinite(rep.hyperbolicity_margin)
    assert math.isfinite(rep.genuine_nonlinearity_margin)


# ---------------------------------------------------------------- coefficients


def a1_profile():
    return CoefficientProfile.piecewise_constant((0.0,), (1.0, 0.5))


def test_coefficient_at_step():
    prof = a1_profile()
    assert coefficient_at(prof, -0.1) == 1.0
    assert coefficient_at(prof, 0.0) == 0.5
    assert coefficient_at(prof, 0.0, side="left") == 1.0
    assert coefficient_at(prof, 0.0, side="right") == 0.5
    assert coefficient_at(prof, 0.3) == 0.5


def test_coefficient_at_periodic():
    prof = CoefficientProfile.periodic((), ((1.0, -1.0),), 0.5)
    assert coefficient_at(prof, 0.75) == pytest.approx(0.75, abs=1e-15)
    assert coefficient_at(prof, 0.25) == pytest.approx(0.75, abs=1e-15)
    assert coefficient_at(prof, 0.5) == pytest.approx(1.0, abs=1e-15)
    assert coefficient_at(prof, 0.5, side="left") == pytest.approx(0.5, abs=1e-15)
    assert coefficient_at(prof, -0.25) == pytest.approx(0.75, abs=1e-15)


def test_coefficient_at_ramp():
    prof = CoefficientProfile.ramp(0.5, 1.0, 0.1)
    assert coefficient_at(prof, -0.05) == pytest.approx(1.0, abs=1e-15)
    assert coefficient_at(prof, -0.2) == 0.5
    assert coefficient_at(prof, 0.1) == 1.0
    # the ramp formula jumps down at x = 0: left limit 1.5, value 1
    assert coefficient_at(prof, 0.0, side="left") == pytest.approx(1.5, abs=1e-15)
    assert coefficient_at(prof, 0.0) == 1.0


def test_one_sided_limits():
    for prof in (
        a1_profile(),
        CoefficientProfile.ramp(0.5, 1.0, 0.1),
        CoefficientProfile.periodic((0.2,), ((1.0, 0.0), (0.7, 0.5)), 0.5),
    ):
        breaks = prof.breakpoints if prof.period is None else (0.2, 0.5)
        for xi in breaks:
            assert coefficient_at(prof, xi) == coefficient_at(prof, xi, side="right")
            approached = coefficient_at(prof, xi - 1e-12)
            assert abs(approached - coefficient_at(prof, xi, side="left")) < 1e-10


def test_coefficient_tv_examples():
    assert coefficient_tv(a1_profile()) == pytest.approx(0.5, abs=1e-15)
    assert coefficient_tv(CoefficientProfile.constant(0.8)) == 0.0
    per = CoefficientProfile.periodic((), ((1.0, -1.0),), 0.5)
    assert coefficient_tv(per, (0.0, 0.5)) == pytest.approx(1.0, abs=1e-15)
    assert coefficient_tv(CoefficientProfile.ramp(0.5, 1.0, 0.1)) == pytest.approx(
        1.5, abs=1e-15
    )


def test_coefficient_tv_additive():
    rng = np.random.default_rng(7)
    profs = (
        a1_profile(),
        CoefficientProfile.ramp(0.5, 1.0, 0.1),
        CoefficientProfile.periodic((), ((1.0, -1.0),), 0.5),
    )
    for prof in profs:
        for _ in range(50):
            a, m, b = np.sort(rng.uniform(-1.0, 1.0, size=3))
            whole = coefficient_tv(prof, (a, b))
            split = coefficient_tv(prof, (a, m)) + coefficient_tv(prof, (m, b))
            assert abs(whole - split) < 1e-12


def test_coefficient_positive_lower_bound():
    with pytest.raises(ValueError, match="c_min"):
        CoefficientProfile.piecewise_constant((0.0,), (1.0, 0.0))
    with pytest.raises(ValueError, match="c_min"):
        CoefficientProfile.piecewise_constant((0.0,), (1.0, -0.5))
    prof = a1_profile()
    assert prof.c_min == 0.5
    assert prof.c_inf == 0.5


def test_coefficient_tv_whole_line_periodic_rejected():
    per = CoefficientProfile.periodic((), ((1.0, -1.0),), 0.5)
    with pytest.raises(ValueError):
        coefficient_tv(per)
