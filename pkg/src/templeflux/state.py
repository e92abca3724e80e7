"""State coordinates, eigenstructure, and flux geometry.

Conserved coordinates are (rho, q); the solver works in the Riemann
invariants (h, w) with h = q/rho - p(rho) and w = q/rho.  This module
provides the transforms between them, the eigenvalues/eigenvectors, the
reduced flux f(h, w) = V(h) p^{-1}(w - h), the characteristic speed
lambda_w(h) with its inverse, the flux maximizer over a w-level, and the
Rankine-Hugoniot shock speed.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple

from .model import ModelLaws

__all__ = [
    "ConservedState",
    "InvariantState",
    "MEMBERSHIP_TOL",
    "clamp_membership",
    "region_tag",
    "to_invariants",
    "to_conserved",
    "flux_f",
    "flux_vector",
    "eigenvalues",
    "eigenvectors",
    "genuine_nonlinearity_alpha",
    "lambda_w",
    "lambda_w_inverse",
    "flux_argmax",
    "flux_max",
    "shock_speed",
    "bisect_monotone",
]


class ConservedState(NamedTuple):
    rho: float
    q: float


class InvariantState(NamedTuple):
    h: float
    w: float


# states this far below the boundary of the invariant region are clamped
MEMBERSHIP_TOL = 1e-12


def clamp_membership(h: float, w: float) -> InvariantState:
    """Accept (h, w) with h >= -tol and w - h >= -tol, clamped to the region."""
    if h < -MEMBERSHIP_TOL or w - h < -MEMBERSHIP_TOL:
        raise ValueError(f"state (h={h}, w={w}) outside the invariant region")
    w = max(w, 0.0)
    h = min(max(h, 0.0), w)
    return InvariantState(h, w)


def region_tag(w_state) -> str:
    """Classify a state: "vacuum" (h = w), "zero-speed-boundary" (0 = h < w),
    or "interior" (0 < h < w)."""
    h, w = clamp_membership(*w_state)
    if h == w:
        return "vacuum"
    if h == 0.0:
        return "zero-speed-boundary"
    return "interior"


def to_invariants(laws: ModelLaws, u) -> InvariantState:
    """Map (rho, q) to (h, w) = (q/rho - p(rho), q/rho); rejects vacuum."""
    rho, q = u
    if rho == 0.0:
        raise ValueError("vacuum state has no invariant coordinates")
    if rho < 0.0 or q < 0.0:
        raise ValueError(f"conserved state ({rho}, {q}) outside the state space")
    h = q / rho - laws.pressure.value(rho)
    if h < -MEMBERSHIP_TOL:
        raise ValueError(f"conserved state ({rho}, {q}) violates q >= rho p(rho)")
    return clamp_membership(h, q / rho)


def to_conserved(laws: ModelLaws, w_state) -> ConservedState:
    """Map (h, w) to (rho, q) = (p^{-1}(w-h), p^{-1}(w-h) w); vacuum gives (0, 0)."""
    h, w = clamp_membership(*w_state)
    rho = laws.pressure.inverse(w - h)
    return ConservedState(rho, rho * w)


def flux_f(laws: ModelLaws, w_state) -> float:
    """Reduced flux f(h, w) = V(h) p^{-1}(w - h); total on the region."""
    h, w = clamp_membership(*w_state)
    return laws.velocity.value(h) * laws.pressure.inverse(w - h)


def flux_vector(laws: ModelLaws, w_state):
    """Flux in conserved components: F(U(W)) = f(h, w) * (1, w)."""
    h, w = clamp_membership(*w_state)
    f = laws.velocity.value(h) * laws.pressure.inverse(w - h)
    return (f, f * w)


def eigenvalues(laws: ModelLaws, w_state, c_value: float):
    """(lambda1, lambda2) = c * (lambda_w(h), V(h)); vacuum is rejected."""
    h, w = clamp_membership(*w_state)
    if h == w:
        raise ValueError("eigenvalues are undefined at vacuum")
    return (c_value * lambda_w(laws, h, w), c_value * laws.velocity.value(h))


def eigenvectors(laws: ModelLaws, w_state):
    """Diagnostic right eigenvectors r1 = (rho, q), r2 = (rho, q + rho^2 p'(rho))."""
    h, w = clamp_membership(*w_state)
    if h == w:
        raise ValueError("eigenvectors are undefined at vacuum")
    rho, q = to_conserved(laws, (h, w))
    return ((rho, q), (rho, q + rho * rho * laws.pressure.deriv(rho)))


def genuine_nonlinearity_alpha(laws: ModelLaws, w_state, c_value: float) -> float:
    """alpha = c rho (rho p'^2 V'' - (2p' + rho p'') V'); negative on the interior."""
    h, w = clamp_membership(*w_state)
    if not (0.0 < h < w):
        raise ValueError("alpha needs an interior state (0 < h < w)")
    rho = laws.pressure.inverse(w - h)
    p1 = laws.pressure.deriv(rho)
    p2 = laws.pressure.deriv2(rho)
    v1 = laws.velocity.deriv(h)
    v2 = laws.velocity.deriv2(h)
    return c_value * rho * (rho * p1 * p1 * v2 - (2.0 * p1 + rho * p2) * v1)


def lambda_w(laws: ModelLaws, h: float, w: float) -> float:
    """1-characteristic speed along the w-level (before c-scaling):
    lambda_w(h) = V(h) - p^{-1}(w-h) p'(p^{-1}(w-h)) V'(h), increasing in h."""
    h, w = clamp_membership(h, w)
    rho = laws.pressure.inverse(w - h)
    return laws.velocity.value(h) - rho * laws.pressure.deriv(rho) * laws.velocity.deriv(h)


def bisect_monotone(
    fun: Callable[[float], float],
    lo: float,
    hi: float,
    target: float,
    tol: float = 1e-13,
    cap: int = 200,
) -> float:
    """Root of fun(x) = target on [lo, hi] for monotone fun, by bisection."""
    flo = fun(lo) - target
    fhi = fun(hi) - target
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    for _ in range(cap):
        mid = 0.5 * (lo + hi)
        fm = fun(mid) - target
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (fhi > 0.0):
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
        if hi - lo <= tol:
            break
    return 0.5 * (lo + hi)


def lambda_w_inverse(laws: ModelLaws, nu: float, w: float) -> float:
    """Inverse of lambda_w on [0, w]; nu must lie in [lambda_w(0), lambda_w(w)]."""
    lo = lambda_w(laws, 0.0, w)
    hi = lambda_w(laws, w, w)
    tol = MEMBERSHIP_TOL * max(1.0, abs(lo), abs(hi))
    if nu < lo - tol or nu > hi + tol:
        raise ValueError(f"speed {nu} outside the admissible range [{lo}, {hi}]")
    nu = min(max(nu, lo), hi)
    if laws.has_closed_forms:
        gamma = laws.pressure.gamma
        slope = laws.velocity.slope
        h = (nu / slope + gamma * w) / (1.0 + gamma)
        return min(max(h, 0.0), w)
    return bisect_monotone(lambda h: lambda_w(laws, h, w), 0.0, w, nu)


def flux_argmax(laws: ModelLaws, w: float) -> float:
    """Maximizer of f(., w) on [0, w]: the unique root of lambda_w(h) = 0."""
    if w < 0.0:
        raise ValueError(f"w must be nonnegative, got {w}")
    if w == 0.0:
        return 0.0
    if laws.has_closed_forms:
        gamma = laws.pressure.gamma
        return gamma * w / (1.0 + gamma)
    return bisect_monotone(lambda h: lambda_w(laws, h, w), 0.0, w, 0.0)


def flux_max(laws: ModelLaws, w: float) -> float:
    """Maximum of f(., w) on [0, w], attained at flux_argmax."""
    return flux_f(laws, (flux_argmax(laws, w), w))


def shock_speed(laws: ModelLaws, w_left, w_right) -> float:
    """Rankine-Hugoniot chord slope s = (f_R - f_L) / (rho_R - rho_L),
    before c-scaling; equal densities are degenerate."""
    rho_l = laws.pressure.inverse(w_left[1] - w_left[0])
    rho_r = laws.pressure.inverse(w_right[1] - w_right[0])
    if rho_l == rho_r:
        raise ValueError("equal densities give no shock speed")
    return (flux_f(laws, w_right) - flux_f(laws, w_left)) / (rho_r - rho_l)
