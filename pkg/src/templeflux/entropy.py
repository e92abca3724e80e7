"""Entropy pairs and admissibility checks.

The one-parameter family (E_k, Q_k) is closed-form; the general pair is
assembled from a base weight on the density, an integral kernel, and an
additive flux offset, with both integrals evaluated by adaptive Simpson
quadrature.  dissipation measures the entropy production of a same-w jump;
admissible_discontinuity adjudicates a jump against the coefficient
profile: at coefficient breakpoints through two-sided solver coherence,
away from them through the classical criteria.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .model import CoefficientProfile, ModelLaws, coefficient_at
from .riemann import sample, solve_single, solve_two_sided, traces_at_zero
from .state import clamp_membership, flux_vector, to_conserved, to_invariants

__all__ = [
    "GeneralEntropySpec",
    "pair_k_eval",
    "pair_general_eval",
    "dissipation",
    "conent0_residual",
    "admissible_discontinuity",
]

FD_STEP = 1e-6
QUAD_TOL = 1e-10
QUAD_DEPTH = 30


@dataclass(frozen=True)
class GeneralEntropySpec:
    """Data for the general pair: E = (base(w) - I[kernel]) rho and
    Q = V(h) E - int_0^h kernel + offset."""

    base: Callable[[float], float]
    kernel: Callable[[float], float]
    offset: float = 0.0


def pair_k_eval(laws: ModelLaws, k: float, w_state):
    """Closed-form pair: E_k = 1 - rho/rho_k, Q_k = V(k) - V(h) rho/rho_k
    on h in (k, w], identically (0, 0) elsewhere."""
    if k < 0.0:
        raise ValueError(f"entropy parameter must be nonnegative, got {k}")
    h, w = clamp_membership(*w_state)
    if h <= k or k >= w:
        return (0.0, 0.0)
    ratio = laws.pressure.inverse(w - h) / laws.pressure.inverse(w - k)
    return (1.0 - ratio, laws.velocity.value(k) - laws.velocity.value(h) * ratio)


def _adaptive_simpson(fun, a: float, b: float, tol: float = QUAD_TOL, depth: int = QUAD_DEPTH) -> float:
    """Adaptive Simpson with Richardson correction.  Bottomed-out intervals
    are accepted with the correction (jump integrands never meet the local
    tolerance) unless the residual shows a genuinely divergent integrand."""
    if a == b:
        return 0.0

    def simp(x0, f0, x1, f1, x2, f2):
        return (x2 - x0) / 6.0 * (f0 + 4.0 * f1 + f2)

    def rec(x0, f0, xm, fm, x2, f2, whole, tol, depth):
        lm = 0.5 * (x0 + xm)
        rm = 0.5 * (xm + x2)
        flm = fun(lm)
        frm = fun(rm)
        left = simp(x0, f0, lm, flm, xm, fm)
        right = simp(xm, fm, rm, frm, x2, f2)
        delta = left + right - whole
        if abs(delta) <= 15.0 * tol or depth <= 0:
            # a jump in the integrand never meets the local tolerance, so a
            # bottomed-out interval is accepted with its correction; only an
            # outright divergent residual is an error
            if depth <= 0 and not abs(delta) <= 1e-3:
                raise ArithmeticError("quadrature did not converge")
            return left + right + delta / 15.0
        return rec(x0, f0, lm, flm, xm, fm, left, 0.5 * tol, depth - 1) + rec(
            xm, fm, rm, frm, x2, f2, right, 0.5 * tol, depth - 1
        )

    mid = 0.5 * (a + b)
    fa, fm, fb = fun(a), fun(mid), fun(b)
    out = rec(a, fa, mid, fm, b, fb, simp(a, fa, mid, fm, b, fb), tol, depth)
    if not math.isfinite(out):
        raise ArithmeticError("quadrature did not converge")
    return out


def pair_general_eval(laws: ModelLaws, spec: GeneralEntropySpec, w_state):
    """General pair via quadrature; the coefficient is treated as 1 here
    and scaled by the caller."""
    h, w = clamp_membership(*w_state)
    if h == w:
        raise ValueError("general pair is undefined at vacuum")
    pinv = laws.pressure.inverse
    pderiv = laws.pressure.deriv
    vderiv = laws.velocity.deriv

    def zeta_prime(xi: float) -> float:
        # d/dxi 1/p^{-1}(xi) through the inverse-function rule
        r = pinv(xi)
        return -1.0 / (pderiv(r) * r * r)

    e_int = _adaptive_simpson(lambda nu: zeta_prime(w - nu) * spec.kernel(nu) / vderiv(nu), 0.0, h)
    q_int = _adaptive_simpson(spec.kernel, 0.0, h)
    ent = (spec.base(w) - e_int) * pinv(w - h)
    return (ent, laws.velocity.value(h) * ent - q_int + spec.offset)


def dissipation(laws: ModelLaws, k: float, w_minus, w_plus, sigma: float, c_value: float) -> float:
    """Entropy production D_k = sigma [E_k] - c [Q_k] of a same-w jump;
    admissible jumps have D_k >= 0 for every k >= 0."""
    wm = clamp_membership(*w_minus)
    wp = clamp_membership(*w_plus)
    if wm.w != wp.w:
        raise ValueError("dissipation needs a 1-family jump (equal w)")
    if wm.h == wp.h:
        raise ValueError("degenerate jump (equal states)")
    em, qm = pair_k_eval(laws, k, wm)
    ep, qp = pair_k_eval(laws, k, wp)
    return sigma * (ep - em) - c_value * (qp - qm)


def conent0_residual(laws: ModelLaws, k: float, w_state) -> float:
    """Residual Q_k - grad_U(E_k) . F(U); the compatibility condition holds
    iff it vanishes, and the closed form predicts the value V(k) on h > k."""
    h, w = clamp_membership(*w_state)
    if h == w:
        raise ValueError("residual is undefined at vacuum")
    rho, q = to_conserved(laws, (h, w))

    def ent_of(u_rho: float, u_q: float) -> float:
        return pair_k_eval(laws, k, to_invariants(laws, (u_rho, u_q)))[0]

    de_drho = (ent_of(rho + FD_STEP, q) - ent_of(rho - FD_STEP, q)) / (2.0 * FD_STEP)
    de_dq = (ent_of(rho, q + FD_STEP) - ent_of(rho, q - FD_STEP)) / (2.0 * FD_STEP)
    f1, f2 = flux_vector(laws, (h, w))
    q_k = pair_k_eval(laws, k, (h, w))[1]
    return q_k - (de_drho * f1 + de_dq * f2)


# k-grid used when adjudicating a jump through the dissipation sign
K_GRID_SIZE = 1000
DISSIPATION_FLOOR = -1e-12
TRACE_TOL = 1e-9


def _is_vacuum(state) -> bool:
    return state.h == state.w


def admissible_discontinuity(laws: ModelLaws, profile: CoefficientProfile, w_minus, w_plus, x: float, sigma: float) -> bool:
    """Adjudicate the jump (W-, W+) moving at speed sigma located at x."""
    wm = clamp_membership(*w_minus)
    wp = clamp_membership(*w_plus)
    c_left = coefficient_at(profile, x, side="left")
    c_right = coefficient_at(profile, x, side="right")
    if abs(c_left - c_right) > 1e-14:
        # at a coefficient jump: the two-sided solver must hold the pure jump
        tm, tp = traces_at_zero(solve_two_sided(laws, c_left, c_right, wm, wp))
        return (
            abs(tm.h - wm.h) < TRACE_TOL
            and abs(tm.w - wm.w) < TRACE_TOL
            and abs(tp.h - wp.h) < TRACE_TOL
            and abs(tp.w - wp.w) < TRACE_TOL
        )
    c_val = coefficient_at(profile, x)
    if _is_vacuum(wm) or _is_vacuum(wp) or wm.w != wp.w:
        # vacuum or 2-family jumps: the classical solver must reproduce the
        # jump as a single discontinuity at the given speed
        fan = solve_single(laws, c_val, wm, wp)
        for wv in fan.waves:
            if abs(wv.speed - sigma) > TRACE_TOL or (
                wv.speed_hi is not None and abs(wv.speed_hi - sigma) > TRACE_TOL
            ):
                return False
        eps = max(1e-9, 1e-9 * abs(sigma))
        before = sample(fan, sigma - eps)
        after = sample(fan, sigma + eps)
        return (
            abs(before.h - wm.h) < 1e-7
            and abs(before.w - wm.w) < 1e-7
            and abs(after.h - wp.h) < 1e-7
            and abs(after.w - wp.w) < 1e-7
        )
    if wm.h == wp.h:
        return True  # no jump at all
    ks = [wm.w * i / K_GRID_SIZE for i in range(K_GRID_SIZE + 1)]
    ks.extend((wm.h, wp.h, wm.w))
    return all(dissipation(laws, k, wm, wp, sigma, c_val) >= DISSIPATION_FLOOR for k in ks)
