"""Exact Riemann solvers for the coefficient-scaled system.

solve_single builds the classical self-similar fan for one coefficient
value (contact, 1-shock, 1-rarefaction, and the composites through the
middle state (min{h_R, w_L}, w_L)).  solve_two_sided handles a coefficient
jump at x = 0: the interface flux is capped at Q = min{c- Q-, c+ Q+}, the
branch roots h-hat (increasing branch) and h-check (decreasing branch) of
c f(., w_L) = Q give the states adjacent to the interface, and the two
half-fans are glued through a stationary non-classical wave between the
one-sided traces.  Fans are sampleable in the similarity variable nu = x/t
with a closed-on-the-right convention and serialize to a plain-text wave
list.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .model import ModelLaws
from .state import (
    InvariantState,
    bisect_monotone,
    clamp_membership,
    flux_argmax,
    flux_f,
    flux_max,
    lambda_w,
    lambda_w_inverse,
    shock_speed,
)

__all__ = [
    "SHOCK1",
    "RAREFACTION1",
    "CONTACT2",
    "NONCLASSICAL",
    "Wave",
    "WaveFan",
    "InterfaceData",
    "solve_single",
    "solve_two_sided",
    "w_star",
    "q_minus",
    "q_plus",
    "q_cap",
    "hat_state",
    "check_state",
    "interface_data",
    "traces_at_zero",
    "sample",
    "wave_list_lines",
    "parse_wave_list",
]

SHOCK1 = "Shock1"
RAREFACTION1 = "Rarefaction1"
CONTACT2 = "Contact2"
NONCLASSICAL = "NonClassical"

# speeds within this of zero count as stationary
SPEED_TIE_TOL = 1e-13
# flux agreement that marks a structurally stationary 1-wave at the interface
FLUX_TIE_TOL = 1e-13
# branch roots this close to a datum h are identified with it
SNAP_TOL = 1e-12


@dataclass(frozen=True)
class Wave:
    kind: str
    left: InvariantState
    right: InvariantState
    speed: float
    speed_hi: Optional[float] = None  # Rarefaction1 only: upper edge speed
    c_mult: Optional[float] = None  # Rarefaction1 only: coefficient scaling

    @property
    def upper_speed(self) -> float:
        return self.speed if self.speed_hi is None else self.speed_hi


@dataclass(frozen=True)
class WaveFan:
    far_left: InvariantState
    waves: tuple
    far_right: InvariantState
    c_pair: tuple
    laws: ModelLaws


@dataclass(frozen=True)
class InterfaceData:
    w_star: InvariantState
    q_minus: float
    q_plus: float
    q: float
    w_hat: InvariantState
    w_check: InvariantState


# ---------------------------------------------------------------- single solver


def solve_single(laws: ModelLaws, c_bar: float, w_left, w_right) -> WaveFan:
    """Classical solver for one coefficient value c_bar > 0."""
    if c_bar <= 0.0:
        raise ValueError(f"coefficient must be positive, got {c_bar}")
    wl = clamp_membership(*w_left)
    wr = clamp_membership(*w_right)
    pair = (c_bar, c_bar)
    if wl == wr or (wl.h == wl.w and wr.h == wr.w):
        return WaveFan(wl, (), wr, pair, laws)
    if wl.h == wr.h:
        contact = Wave(CONTACT2, wl, wr, c_bar * laws.velocity.value(wr.h))
        return WaveFan(wl, (contact,), wr, pair, laws)
    waves = []
    h_m = min(wr.h, wl.w)
    mid = InvariantState(h_m, wl.w)
    if wl.h > h_m:
        waves.append(Wave(SHOCK1, wl, mid, c_bar * shock_speed(laws, wl, mid)))
    elif wl.h < h_m:
        waves.append(
            Wave(
                RAREFACTION1,
                wl,
                mid,
                c_bar * lambda_w(laws, wl.h, wl.w),
                c_bar * lambda_w(laws, h_m, wl.w),
                c_bar,
            )
        )
    if mid != wr:
        waves.append(Wave(CONTACT2, mid, wr, c_bar * laws.velocity.value(wr.h)))
    return WaveFan(wl, tuple(waves), wr, pair, laws)


# ---------------------------------------------------------------- interface cap


def w_star(w_right, w_left_level: float) -> InvariantState:
    """Post-contact state on the w_L level: (min{w_L, h_R}, w_L)."""
    return InvariantState(min(w_left_level, w_right[0]), w_left_level)


def q_minus(laws: ModelLaws, w_left) -> float:
    """Left demand: F(w_L) on the increasing branch, f(W_L) past the top."""
    h_l, w_l = clamp_membership(*w_left)
    if h_l <= flux_argmax(laws, w_l):
        return flux_max(laws, w_l)
    return flux_f(laws, (h_l, w_l))


def q_plus(laws: ModelLaws, w_right, w_left_level: float) -> float:
    """Right supply: f(W_*) before the top of the branch, F(w_L) past it."""
    star = w_star(clamp_membership(*w_right), w_left_level)
    if star.h < flux_argmax(laws, w_left_level):
        return flux_f(laws, star)
    return flux_max(laws, w_left_level)


def q_cap(laws: ModelLaws, c_minus: float, c_plus: float, w_left, w_right) -> float:
    """Interface flux Q = min{c- Q-(W_L), c+ Q+(W_R, w_L)}."""
    if c_minus <= 0.0 or c_plus <= 0.0:
        raise ValueError("coefficients must be positive")
    w_l = clamp_membership(*w_left).w
    return min(c_minus * q_minus(laws, w_left), c_plus * q_plus(laws, w_right, w_l))


def _branch_root(laws: ModelLaws, c_side: float, w_level: float, q: float, increasing: bool) -> float:
    cap = c_side * flux_max(laws, w_level)
    if q > cap + 1e-9 * max(1.0, cap):
        raise ValueError(f"flux target {q} exceeds the branch maximum {cap}")
    if q >= cap:
        return flux_argmax(laws, w_level)
    if q <= 0.0:
        return 0.0 if increasing else w_level
    top = flux_argmax(laws, w_level)
    lo, hi = (0.0, top) if increasing else (top, w_level)
    return bisect_monotone(lambda h: c_side * flux_f(laws, (h, w_level)), lo, hi, q)


def hat_state(laws: ModelLaws, c_minus: float, w_left, w_right, q: float) -> InvariantState:
    """Root of c- f(h, w_L) = Q on the increasing branch [0, argmax]."""
    w_l = clamp_membership(*w_left).w
    return InvariantState(_branch_root(laws, c_minus, w_l, q, increasing=True), w_l)


def check_state(laws: ModelLaws, c_plus: float, w_left, w_right, q: float) -> InvariantState:
    """Root of c+ f(h, w_L) = Q on the decreasing branch [argmax, w_L]."""
    w_l = clamp_membership(*w_left).w
    return InvariantState(_branch_root(laws, c_plus, w_l, q, increasing=False), w_l)


def interface_data(laws: ModelLaws, c_minus: float, c_plus: float, w_left, w_right) -> InterfaceData:
    wl = clamp_membership(*w_left)
    wr = clamp_membership(*w_right)
    q = q_cap(laws, c_minus, c_plus, wl, wr)
    return InterfaceData(
        w_star=w_star(wr, wl.w),
        q_minus=q_minus(laws, wl),
        q_plus=q_plus(laws, wr, wl.w),
        q=q,
        w_hat=hat_state(laws, c_minus, wl, wr, q),
        w_check=check_state(laws, c_plus, wl, wr, q),
    )


# ---------------------------------------------------------------- two-sided solver


def _snap(state: InvariantState, *targets: float) -> InvariantState:
    for t in targets:
        if abs(state.h - t) <= SNAP_TOL:
            return InvariantState(t, state.w)
    return state


def _absorb_left(laws, waves, w_l, c_minus, q):
    """Drop stationary left-fan waves; the kept ones must run at nu < 0."""
    kept = []
    for wv in waves:
        if wv.kind == RAREFACTION1:
            if wv.speed_hi > SPEED_TIE_TOL:
                raise ArithmeticError("left fan leaked past the interface")
            if wv.speed >= -SPEED_TIE_TOL:
                continue  # zero-width at the interface
            if wv.speed_hi > 0.0 or abs(wv.speed_hi) <= SPEED_TIE_TOL:
                wv = replace(wv, speed_hi=0.0)
            kept.append(wv)
        else:
            stationary = abs(wv.speed) <= SPEED_TIE_TOL or (
                abs(c_minus * flux_f(laws, wv.left) - q) <= FLUX_TIE_TOL
            )
            if stationary:
                continue
            if wv.speed > SPEED_TIE_TOL:
                raise ArithmeticError("left fan leaked past the interface")
            kept.append(wv)
    trace = kept[-1].right if kept else w_l
    return kept, trace


def _absorb_right(laws, waves, w_check, c_plus, q):
    """Drop a stationary leading 1-wave of the right fan; clamp its edge."""
    kept = list(waves)
    trace = w_check
    if kept:
        first = kept[0]
        if first.kind == RAREFACTION1:
            if first.speed < -SPEED_TIE_TOL:
                raise ArithmeticError("right fan leaked past the interface")
            if first.speed < 0.0 or abs(first.speed) <= SPEED_TIE_TOL:
                kept[0] = replace(first, speed=0.0)
        elif first.kind == SHOCK1:
            stationary = abs(first.speed) <= SPEED_TIE_TOL or (
                abs(c_plus * flux_f(laws, first.right) - q) <= FLUX_TIE_TOL
            )
            if first.speed < -SPEED_TIE_TOL and not stationary:
                raise ArithmeticError("right fan leaked past the interface")
            if stationary:
                dropped = kept.pop(0)
                trace = dropped.right
        if kept:
            trace = kept[0].left
    return kept, trace


def _merge_split_rarefaction(waves):
    """Join two touching rarefaction pieces left over from an omitted
    non-classical wave, so equal coefficients reproduce solve_single."""
    out = []
    for wv in waves:
        prev = out[-1] if out else None
        if (
            prev is not None
            and prev.kind == RAREFACTION1
            and wv.kind == RAREFACTION1
            and prev.c_mult == wv.c_mult
            and prev.right == wv.left
            and prev.speed_hi == wv.speed
        ):
            out[-1] = replace(prev, right=wv.right, speed_hi=wv.speed_hi)
        else:
            out.append(wv)
    return out


def solve_two_sided(laws: ModelLaws, c_minus: float, c_plus: float, w_left, w_right) -> WaveFan:
    """Riemann solver with coefficient c- for x < 0 and c+ for x >= 0."""
    wl = clamp_membership(*w_left)
    wr = clamp_membership(*w_right)
    data = interface_data(laws, c_minus, c_plus, wl, wr)
    # branch roots that coincide with datum states are identified with them,
    # removing zero-strength artifacts from the glued fan
    hat = _snap(data.w_hat, wl.h, data.w_star.h)
    check = _snap(data.w_check, data.w_star.h, wl.h)

    left = solve_single(laws, c_minus, wl, hat)
    right = solve_single(laws, c_plus, check, wr)
    kept_left, w_minus = _absorb_left(laws, left.waves, wl, c_minus, data.q)
    kept_right, w_plus = _absorb_right(laws, right.waves, check, c_plus, data.q)

    waves = list(kept_left)
    if w_minus != w_plus:
        waves.append(Wave(NONCLASSICAL, w_minus, w_plus, 0.0))
    waves.extend(kept_right)
    return WaveFan(wl, tuple(_merge_split_rarefaction(waves)), wr, (c_minus, c_plus), laws)


# ---------------------------------------------------------------- fan queries


def sample(fan: WaveFan, nu: float) -> InvariantState:
    """State at similarity coordinate nu; closed on the right at wave speeds."""
    state = fan.far_left
    for wv in fan.waves:
        if nu < wv.speed:
            return state
        if wv.kind == RAREFACTION1 and nu < wv.speed_hi:
            w_lev = wv.left.w
            h = lambda_w_inverse(fan.laws, nu / wv.c_mult, w_lev)
            h = min(max(h, wv.left.h), wv.right.h)
            return InvariantState(h, w_lev)
        state = wv.right
    return fan.far_right


def traces_at_zero(fan: WaveFan):
    """One-sided limits (W-, W+) of the fan at nu = 0."""
    left = fan.far_left
    t_minus = None
    for wv in fan.waves:
        if wv.upper_speed < 0.0:
            left = wv.right
            continue
        if wv.kind == RAREFACTION1 and wv.speed <= 0.0:
            h = lambda_w_inverse(fan.laws, 0.0, wv.left.w)
            h = min(max(h, wv.left.h), wv.right.h)
            t_minus = InvariantState(h, wv.left.w)
        else:
            t_minus = left
        break
    if t_minus is None:
        t_minus = left
    return t_minus, sample(fan, 0.0)


# ---------------------------------------------------------------- serialization


def _fmt(x: float) -> str:
    return "%.17g" % x


def wave_list_lines(fan: WaveFan):
    """One wave per line: kind left_h left_w right_h right_w speed [speed_hi]."""
    lines = []
    for wv in fan.waves:
        parts = [
            wv.kind,
            _fmt(wv.left.h),
            _fmt(wv.left.w),
            _fmt(wv.right.h),
            _fmt(wv.right.w),
            _fmt(wv.speed),
        ]
        if wv.speed_hi is not None:
            parts.append(_fmt(wv.speed_hi))
        lines.append(" ".join(parts))
    return lines


def parse_wave_list(lines):
    """Inverse of wave_list_lines (without the rarefaction c-multiplier)."""
    waves = []
    for ln in lines:
        parts = ln.split()
        if not parts:
            continue
        kind = parts[0]
        if kind not in (SHOCK1, RAREFACTION1, CONTACT2, NONCLASSICAL):
            raise ValueError(f"unknown wave kind {kind!r}")
        vals = [float(p) for p in parts[1:]]
        if len(vals) not in (5, 6):
            raise ValueError(f"malformed wave line {ln!r}")
        waves.append(
            Wave(
                kind,
                InvariantState(vals[0], vals[1]),
                InvariantState(vals[2], vals[3]),
                vals[4],
                vals[5] if len(vals) == 6 else None,
            )
        )
    return tuple(waves)
