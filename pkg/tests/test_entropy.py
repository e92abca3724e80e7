"""Entropy pairs, dissipation sign, and jump adjudication.

Reference values are frozen from an independent implementation.  The
general quadrature pair is cross-checked against the closed-form family
on random states; the sign dichotomy is exercised on random jumps.
"""

import numpy as np
import pytest

from templeflux.entropy import (
    GeneralEntropySpec,
    admissible_discontinuity,
    conent0_residual,
    dissipation,
    pair_general_eval,
    pair_k_eval,
)
from templeflux.model import (
    CoefficientProfile,
    LinearVelocity,
    ModelLaws,
    PowerPressure,
    velocity_eval,
)
from templeflux.riemann import solve_two_sided, traces_at_zero
from templeflux.state import flux_f, shock_speed

LAWS = ModelLaws(PowerPressure(), LinearVelocity())
W_REF = (0.84, 1.0)

# frozen reference values at W_REF
PAIR_AT_0 = (0.6, -0.336)
PAIR_AT_07 = (0.26970325665977846, 0.086550735594213779)
# production of the jump (0.84, 1) -> (2/3, 1) at its chord speed, k = 0.7
D_FWD_07 = 0.012186384686796323

W_HI = (0.84, 1.0)
W_LO = (2.0 / 3.0, 1.0)

STEP_PROFILE = CoefficientProfile.piecewise_constant((0.0,), (1.0, 0.5))


def jump_spec(k):
    """General-pair data reproducing the closed-form family member k."""
    return GeneralEntropySpec(
        base=lambda w: 0.0,
        kernel=lambda nu: velocity_eval(LAWS.velocity, nu, 1) if nu > k else 0.0,
    )


class TestFamilyPair:
    def test_reference_values(self):
        e, q = pair_k_eval(LAWS, 0.0, W_REF)
        assert e == pytest.approx(PAIR_AT_0[0], abs=1e-15)
        assert q == pytest.approx(PAIR_AT_0[1], abs=1e-15)
        e, q = pair_k_eval(LAWS, 0.7, W_REF)
        assert e == pytest.approx(PAIR_AT_07[0], abs=1e-15)
        assert q == pytest.approx(PAIR_AT_07[1], abs=1e-15)

    def test_vanishes_outside_support(self):
        # support is h in (k, w]; at or below k, and for k at or past w,
        # the pair is identically zero
        assert pair_k_eval(LAWS, 0.9, W_REF) == (0.0, 0.0)
        assert pair_k_eval(LAWS, 0.84, W_REF) == (0.0, 0.0)
        assert pair_k_eval(LAWS, 1.0, W_REF) == (0.0, 0.0)
        assert pair_k_eval(LAWS, 1.5, W_REF) == (0.0, 0.0)

    def test_negative_parameter_rejected(self):
        with pytest.raises(ValueError):
            pair_k_eval(LAWS, -0.1, W_REF)

    def test_continuous_at_support_edge(self):
        for k, w in ((0.2, 0.9), (0.5, 1.0), (1.0, 1.3)):
            e, q = pair_k_eval(LAWS, k, (k + 1e-9, w))
            assert abs(e) < 1e-6
            assert abs(q) < 1e-6


class TestGeneralPair:
    def test_matches_family_on_random_states(self):
        rng = np.random.default_rng(20260815)
        worst = 0.0
        for _ in range(1000):
            w = rng.uniform(0.3, 1.5)
            h = rng.uniform(0.03, w - 0.03)
            k = rng.uniform(0.0, w)
            eg, qg = pair_general_eval(LAWS, jump_spec(k), (h, w))
            ek, qk = pair_k_eval(LAWS, k, (h, w))
            worst = max(worst, abs(eg - ek), abs(qg - qk))
        assert worst < 1e-8

    def test_constant_base_gives_conserved_pair(self):
        spec = GeneralEntropySpec(base=lambda w: 1.0, kernel=lambda nu: 0.0)
        for state in (W_REF, (0.1, 0.4), (1.25, 1.5)):
            e, q = pair_general_eval(LAWS, spec, state)
            assert e == pytest.approx(LAWS.density_of(*state), rel=1e-15)
            assert q == pytest.approx(flux_f(LAWS, state), rel=1e-15)

    def test_offset_shifts_flux_entry_only(self):
        plain = jump_spec(0.4)
        shifted = GeneralEntropySpec(base=plain.base, kernel=plain.kernel, offset=0.25)
        e0, q0 = pair_general_eval(LAWS, plain, W_REF)
        e1, q1 = pair_general_eval(LAWS, shifted, W_REF)
        assert e1 == e0
        assert q1 - q0 == pytest.approx(0.25, abs=1e-15)

    def test_vacuum_rejected(self):
        with pytest.raises(ValueError):
            pair_general_eval(LAWS, jump_spec(0.2), (0.5, 0.5))

    def test_divergent_kernel_raises(self):
        spec = GeneralEntropySpec(
            base=lambda w: 0.0,
            kernel=lambda nu: 1.0 / (nu - 0.3) ** 2,
        )
        with pytest.raises(ArithmeticError):
            pair_general_eval(LAWS, spec, W_REF)


class TestDissipation:
    def test_admissible_jump_produces_entropy(self):
        sigma = shock_speed(LAWS, W_HI, W_LO)
        vals = [
            dissipation(LAWS, k, W_HI, W_LO, sigma, 1.0)
            for k in np.linspace(0.0, 1.0, 1001)
        ]
        assert min(vals) >= -1e-12
        assert max(vals) > 1e-3
        got = dissipation(LAWS, 0.7, W_HI, W_LO, sigma, 1.0)
        assert got == pytest.approx(D_FWD_07, rel=1e-12)

    def test_reversed_jump_destroys_entropy(self):
        sigma = shock_speed(LAWS, W_LO, W_HI)
        got = dissipation(LAWS, 0.7, W_LO, W_HI, sigma, 1.0)
        assert got == pytest.approx(-D_FWD_07, rel=1e-12)
        worst = min(
            dissipation(LAWS, k, W_LO, W_HI, sigma, 1.0)
            for k in np.linspace(2.0 / 3.0, 0.84, 200)
        )
        assert worst < -1e-3

    def test_vanishes_at_family_endpoints(self):
        sigma = shock_speed(LAWS, W_HI, W_LO)
        assert abs(dissipation(LAWS, 0.0, W_HI, W_LO, sigma, 1.0)) < 1e-12
        assert abs(dissipation(LAWS, 1.0, W_HI, W_LO, sigma, 1.0)) < 1e-12

    def test_rejects_mismatched_or_degenerate_jumps(self):
        with pytest.raises(ValueError):
            dissipation(LAWS, 0.5, (0.5, 1.0), (0.5, 1.2), 0.1, 1.0)
        with pytest.raises(ValueError):
            dissipation(LAWS, 0.5, (0.5, 1.0), (0.5, 1.0), 0.1, 1.0)

    def test_sign_settles_jump_direction(self):
        # a same-w jump at its chord speed is admissible iff the first
        # invariant does not increase across it
        rng = np.random.default_rng(99)
        seen = {True: 0, False: 0}
        for _ in range(1000):
            w = rng.uniform(0.2, 1.5)
            hm = rng.uniform(0.0, w - 0.01)
            hp = rng.uniform(0.0, w - 0.01)
            if abs(hm - hp) < 0.01:
                continue
            c = rng.uniform(0.2, 2.0)
            sigma = c * shock_speed(LAWS, (hm, w), (hp, w))
            ks = list(np.linspace(0.0, w, 101)) + [hm, hp]
            ok = all(
                dissipation(LAWS, k, (hm, w), (hp, w), sigma, c) >= -1e-12
                for k in ks
            )
            assert ok == (hm >= hp)
            seen[hm >= hp] += 1
        assert min(seen.values()) > 100


class TestCompatibilityResidual:
    def test_residual_reproduces_kernel_velocity(self):
        # inside the support the defect equals the velocity at the parameter;
        # it vanishes only at k = 0 and off support
        assert abs(conent0_residual(LAWS, 0.0, W_REF)) < 1e-5
        got = conent0_residual(LAWS, 0.3, W_REF)
        assert got == pytest.approx(0.3, abs=1e-5)
        for k in (0.9, 1.0, 1.2):
            assert abs(conent0_residual(LAWS, k, W_REF)) < 1e-12

    def test_residual_iff_grid(self):
        for k in (0.0, 0.1, 0.2, 0.3, 0.45, 0.6, 0.7, 0.83, 0.95, 1.0, 1.1):
            r = conent0_residual(LAWS, k, W_REF)
            if k == 0.0 or k > W_REF[0]:
                assert abs(r) < 1e-5
            else:
                expect = velocity_eval(LAWS.velocity, k, 0)
                assert r == pytest.approx(expect, abs=1e-5)

    def test_vacuum_rejected(self):
        with pytest.raises(ValueError):
            conent0_residual(LAWS, 0.2, (0.7, 0.7))


class TestAdmissibleDiscontinuity:
    def test_breakpoint_accepts_interface_traces(self):
        fan = solve_two_sided(LAWS, 1.0, 0.5, (0.84, 1.0), (0.84, 1.0))
        wm, wp = traces_at_zero(fan)
        assert admissible_discontinuity(LAWS, STEP_PROFILE, wm, wp, 0.0, 0.0)

    def test_breakpoint_rejects_raw_datum(self):
        assert not admissible_discontinuity(
            LAWS, STEP_PROFILE, (0.84, 1.0), (0.84, 1.0), 0.0, 0.0
        )

    def test_classical_jump_away_from_breakpoint(self):
        sigma = 0.5 * shock_speed(LAWS, W_HI, W_LO)
        assert admissible_discontinuity(LAWS, STEP_PROFILE, W_HI, W_LO, 0.5, sigma)
        assert not admissible_discontinuity(LAWS, STEP_PROFILE, W_LO, W_HI, 0.5, sigma)
        assert not admissible_discontinuity(LAWS, STEP_PROFILE, W_HI, W_LO, 0.5, 0.99)

    def test_vacuum_adjacent_jump(self):
        assert admissible_discontinuity(
            LAWS, STEP_PROFILE, (1.0, 1.0), (1.25, 1.5), 0.5, 0.625
        )
        assert not admissible_discontinuity(
            LAWS, STEP_PROFILE, (1.0, 1.0), (1.25, 1.5), 0.5, 0.7
        )

    def test_second_family_jump(self):
        assert admissible_discontinuity(
            LAWS, STEP_PROFILE, (0.7, 1.0), (0.7, 1.3), 0.5, 0.35
        )
        assert not admissible_discontinuity(
            LAWS, STEP_PROFILE, (0.7, 1.0), (0.7, 1.3), 0.5, 0.5
        )
        # a composite fan cannot pose as one discontinuity
        assert not admissible_discontinuity(
            LAWS, STEP_PROFILE, (0.84, 1.0), (0.5, 1.2), 0.5, 0.35
        )

    def test_same_state_trivially_admissible(self):
        assert admissible_discontinuity(
            LAWS, STEP_PROFILE, (0.5, 1.0), (0.5, 1.0), 0.5, 0.33
        )
