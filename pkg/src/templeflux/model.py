"""Constitutive laws and the discontinuous coefficient profile.

Provides the built-in power pressure law p(rho) = kappa * rho**gamma, the
linear velocity law V(h) = slope * h, structural validation of the
hyperbolicity and genuine-nonlinearity inequalities on a sample grid, and
the piecewise coefficient c(x) with one-sided limits and total variation.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass

__all__ = [
    "PowerPressure",
    "LinearVelocity",
    "ModelLaws",
    "ValidationReport",
    "CoefficientProfile",
    "pressure_eval",
    "velocity_eval",
    "validate_laws",
    "coefficient_at",
    "coefficient_tv",
]


@dataclass(frozen=True)
class PowerPressure:
    """Power pressure law p(rho) = kappa * rho**gamma, kappa > 0, gamma >= 1."""

    kappa: float = 1.0
    gamma: float = 2.0

    family = "power"

    def __post_init__(self) -> None:
        # gamma < 1 breaks C1 regularity at rho = 0; construction stays
        # permissive so validate_laws can report on such laws
        if not self.kappa > 0:
            raise ValueError(f"kappa must be positive, got {self.kappa}")
        if not self.gamma > 0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")

    def value(self, rho):
        return self.kappa * rho ** self.gamma

    def deriv(self, rho):
        return self.kappa * self.gamma * rho ** (self.gamma - 1.0)

    def deriv2(self, rho):
        return self.kappa * self.gamma * (self.gamma - 1.0) * rho ** (self.gamma - 2.0)

    def inverse(self, xi):
        return (xi / self.kappa) ** (1.0 / self.gamma)


@dataclass(frozen=True)
class LinearVelocity:
    """Linear velocity law V(h) = slope * h, slope > 0."""

    slope: float = 1.0

    family = "linear"

    def __post_init__(self) -> None:
        if not self.slope > 0:
            raise ValueError(f"slope must be positive, got {self.slope}")

    def value(self, h):
        return self.slope * h

    def deriv(self, h):
        return self.slope

    def deriv2(self, h):
        return 0.0


@dataclass(frozen=True)
class ModelLaws:
    """A pressure law and a velocity law taken together.

    Any object with the same method surface (value/deriv/deriv2, plus
    inverse on the pressure side) can stand in for the built-in families;
    validate_laws is the admission gate for such custom laws.
    """

    pressure: PowerPressure = PowerPressure()
    velocity: LinearVelocity = LinearVelocity()

    def density_of(self, h, w):
        """Density of the invariant state: rho = p^{-1}(w - h)."""
        return self.pressure.inverse(w - h)

    @property
    def has_closed_forms(self) -> bool:
        return (
            getattr(self.pressure, "family", None) == "power"
            and getattr(self.velocity, "family", None) == "linear"
        )


def pressure_eval(law, rho: float, order) -> float:
    """Evaluate p, p', p'' or p^{-1}; order is 0, 1, 2 or "inverse"."""
    if rho < 0:
        raise ValueError(f"negative input to pressure law: {rho}")
    if order == 0:
        return law.value(rho)
    if order == 1:
        return law.deriv(rho)
    if order == 2:
        return law.deriv2(rho)
    if order == "inverse":
        return law.inverse(rho)
    raise ValueError(f"unknown order {order!r}")


def velocity_eval(law, h: float, order) -> float:
    """Evaluate V, V' or V''; order is 0, 1 or 2."""
    if h < 0:
        raise ValueError(f"negative input to velocity law: {h}")
    if order == 0:
        return law.value(h)
    if order == 1:
        return law.deriv(h)
    if order == 2:
        return law.deriv2(h)
    raise ValueError(f"unknown order {order!r}")


@dataclass(frozen=True)
class ValidationReport:
    """Sampled margins of the two structural inequalities on a (rho, h) grid.

    hyperbolicity_margin is min |V(h) - rho p'(rho) V'(h)| over the grid;
    genuine_nonlinearity_margin is min of
    (2p' + rho p'') V' - rho p'^2 V''.  Both must be strictly positive.
    """

    rho_range: tuple[float, float]
    h_range: tuple[float, float]
    samples: int
    hyperbolicity_margin: float
    genuine_nonlinearity_margin: float
    worst_hyperbolicity: tuple[float, float]
    worst_genuine_nonlinearity: tuple[float, float]

    @property
    def passed(self) -> bool:
        return self.hyperbolicity_margin > 0 and self.genuine_nonlinearity_margin > 0

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return (
            f"law validation: {status}\n"
            f"  grid: {self.samples}x{self.samples} midpoints on "
            f"({self.rho_range[0]:g}, {self.rho_range[1]:g}] x "
            f"({self.h_range[0]:g}, {self.h_range[1]:g}]\n"
            f"  hyperbolicity margin        : {self.hyperbolicity_margin:.6e} "
            f"at (rho, h) = {self.worst_hyperbolicity}\n"
            f"  genuine nonlinearity margin : {self.genuine_nonlinearity_margin:.6e} "
            f"at (rho, h) = {self.worst_genuine_nonlinearity}"
        )


def validate_laws(
    laws: ModelLaws,
    rho_range: tuple[float, float],
    h_range: tuple[float, float],
    samples: int = 200,
) -> ValidationReport:
    """Check the structural inequalities on a deterministic midpoint grid.

    The grid takes the cell centers of a samples x samples partition of the
    rectangle, so boundary values (rho = 0 in particular) are never sampled
    and measure-zero resonance lines are not hit exactly.
    """
    rho_lo, rho_hi = rho_range
    h_lo, h_hi = h_range
    if not (rho_hi > rho_lo >= 0 and h_hi > h_lo >= 0):
        raise ValueError(f"domain must have positive area with rho, h >= 0: "
                         f"{rho_range} x {h_range}")

    hyp_min = math.inf
    gnl_min = math.inf
    hyp_at = gnl_at = (math.nan, math.nan)
    p, v = laws.pressure, laws.velocity
    for i in range(samples):
        rho = rho_lo + (rho_hi - rho_lo) * (i + 0.5) / samples
        p1, p2 = p.deriv(rho), p.deriv2(rho)
        for j in range(samples):
            h = h_lo + (h_hi - h_lo) * (j + 0.5) / samples
            v0, v1, v2 = v.value(h), v.deriv(h), v.deriv2(h)
            hyp = abs(v0 - rho * p1 * v1)
            gnl = (2.0 * p1 + rho * p2) * v1 - rho * p1 * p1 * v2
            if hyp < hyp_min:
                hyp_min, hyp_at = hyp, (rho, h)
            if gnl < gnl_min:
                gnl_min, gnl_at = gnl, (rho, h)
    return ValidationReport(
        rho_range=(rho_lo, rho_hi),
        h_range=(h_lo, h_hi),
        samples=samples,
        hyperbolicity_margin=hyp_min,
        genuine_nonlinearity_margin=gnl_min,
        worst_hyperbolicity=hyp_at,
        worst_genuine_nonlinearity=gnl_at,
    )


@dataclass(frozen=True)
class CoefficientProfile:
    """Piecewise-affine coefficient c(x) with jumps, optionally periodic.

    breakpoints xi_1 < ... < xi_p split the line into p + 1 intervals and
    pieces[i] = (intercept, slope) gives c(x) = intercept + slope * x on
    interval i.  At a breakpoint the value is the right limit.  A periodic
    profile stores its base on [0, period) (breakpoints strictly inside)
    and wraps; the wrap jump at multiples of the period counts toward TV.
    """

    breakpoints: tuple[float, ...]
    pieces: tuple[tuple[float, float], ...]
    period: float | None = None

    def __post_init__(self) -> None:
        bps, pieces = self.breakpoints, self.pieces
        if len(pieces) != len(bps) + 1:
            raise ValueError("need exactly one piece per interval")
        if any(b >= c for b, c in zip(bps, bps[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        if self.period is None:
            # unbounded outer intervals must be constant
            if pieces[0][1] != 0 or pieces[-1][1] != 0:
                raise ValueError("outermost pieces must have zero slope")
        else:
            if not self.period > 0:
                raise ValueError("period must be positive")
            if bps and not (0 < bps[0] and bps[-1] < self.period):
                raise ValueError("periodic breakpoints must lie inside (0, period)")
        if not self.c_min > 0:
            raise ValueError(f"c must be ≥ c_min > 0 (sampled minimum {self.c_min})")

    # piece endpoints; extrema of affine pieces live there
    def _interval_ends(self) -> list[tuple[int, float, float]]:
        if self.period is not None:
            ends = [0.0, *self.breakpoints, self.period]
        elif self.breakpoints:
            ends = [self.breakpoints[0], *self.breakpoints, self.breakpoints[-1]]
        else:
            ends = [0.0, 0.0]
        return [(i, ends[i], ends[i + 1]) for i in range(len(self.pieces))]

    @property
    def c_min(self) -> float:
        vals = []
        for i, lo, hi in self._interval_ends():
            a, b = self.pieces[i]
            vals += [a + b * lo, a + b * hi]
        return min(vals)

    @property
    def c_inf(self) -> float | None:
        """Far-field value (x -> +inf); None for periodic profiles."""
        return None if self.period is not None else self.pieces[-1][0]

    @classmethod
    def constant(cls, c0: float) -> "CoefficientProfile":
        return cls(breakpoints=(), pieces=((float(c0), 0.0),))

    @classmethod
    def piecewise_constant(cls, breakpoints, values) -> "CoefficientProfile":
        return cls(
            breakpoints=tuple(float(x) for x in breakpoints),
            pieces=tuple((float(v), 0.0) for v in values),
        )

    @classmethod
    def ramp(cls, c_left: float, c_right: float, epsilon: float) -> "CoefficientProfile":
        """c_left for x < -eps, then (x + eps)/eps + c_left, then c_right for x >= 0."""
        if not epsilon > 0:
            raise ValueError("epsilon must be positive")
        mid = (c_left + 1.0, 1.0 / epsilon)
        return cls(
            breakpoints=(-float(epsilon), 0.0),
            pieces=((float(c_left), 0.0), mid, (float(c_right), 0.0)),
        )

    @classmethod
    def periodic(cls, breakpoints, pieces, period: float) -> "CoefficientProfile":
        return cls(
            breakpoints=tuple(float(x) for x in breakpoints),
            pieces=tuple((float(a), float(b)) for a, b in pieces),
            period=float(period),
        )


def _piece_value(profile: CoefficientProfile, index: int, x: float) -> float:
    a, b = profile.pieces[index]
    return a + b * x


def _base_eval(profile: CoefficientProfile, y: float, side: str) -> float:
    """Evaluate the (possibly periodic base) piecewise map at y."""
    bps = profile.breakpoints
    if side == "left":
        idx = bisect.bisect_left(bps, y)
    else:
        idx = bisect.bisect_right(bps, y)
    return _piece_value(profile, idx, y)


def coefficient_at(profile: CoefficientProfile, x: float, side: str = "value") -> float:
    """Evaluate c(x); side is "value" (= right limit), "left" or "right"."""
    if side not in ("value", "left", "right"):
        raise ValueError(f"unknown side {side!r}")
    if profile.period is None:
        return _base_eval(profile, x, side)
    T = profile.period
    y = x - math.floor(x / T) * T
    if side == "left" and y == 0.0:
        # approach from below a wrap point: last piece at the period end
        return _piece_value(profile, len(profile.pieces) - 1, T)
    return _base_eval(profile, y, side)


def _breaks_between(profile: CoefficientProfile, a: float, b: float) -> list[float]:
    """Discontinuity/kink locations in (a, b], wrap points included."""
    if profile.period is None:
        return [x for x in profile.breakpoints if a < x <= b]
    T = profile.period
    out = []
    k_lo = math.floor(a / T) - 1
    k_hi = math.ceil(b / T) + 1
    for k in range(k_lo, k_hi + 1):
        for x in (k * T, *(k * T + xi for xi in profile.breakpoints)):
            if a < x <= b:
                out.append(x)
    return sorted(out)


def coefficient_tv(profile: CoefficientProfile, interval=None) -> float:
    """Total variation of c over [a, b], or over the whole line if None.

    Sum of jump magnitudes at breakpoints in (a, b] plus the variation of
    the affine pieces in between.  Periodic profiles require a finite
    interval (their whole-line variation is infinite unless constant).
    """
    if interval is None:
        if profile.period is not None:
            raise ValueError("periodic profile needs a finite interval")
        if not profile.breakpoints:
            return 0.0
        a = profile.breakpoints[0] - 1.0
        b = profile.breakpoints[-1] + 1.0
    else:
        a, b = float(interval[0]), float(interval[1])
        if not b >= a:
            raise ValueError(f"empty interval {interval}")
    breaks = _breaks_between(profile, a, b)
    tv = 0.0
    for x in breaks:
        tv += abs(coefficient_at(profile, x, "right") - coefficient_at(profile, x, "left"))
    pts = [a, *breaks, b]
    for u, v in zip(pts, pts[1:]):
        if v > u:
            tv += abs(coefficient_at(profile, v, "left") - coefficient_at(profile, u, "right"))
    return tv
