"""Lax-Friedrichs finite-volume simulation.

The scheme differences the full product c*F with the coefficient sampled
at cell centers:

    U_j' = (U_{j-1} + U_{j+1})/2 - dt/(2 dx) (c_{j+1} F_{j+1} - c_{j-1} F_{j-1})

Ghost cells copy the nearest interior cell (outflow) or wrap (periodic).
Cells whose density falls under VACUUM_FLOOR are projected to exact
vacuum, where the invariant coordinates are undefined and reported as
nan.  The law callables must broadcast over numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .model import CoefficientProfile, ModelLaws, coefficient_at
from .state import to_invariants

__all__ = [
    "VACUUM_FLOOR",
    "StepRejected",
    "Grid",
    "InitialDatum",
    "Scenario",
    "Field",
    "RunResult",
    "init_field",
    "lf_step",
    "max_wave_speed",
    "run",
    "l1_error",
    "invariant_arrays",
]

VACUUM_FLOOR = 1e-10
# CFL comparison slack: admits dt*smax == dx up to rounding
_CFL_SLACK = 1.0 + 1e-12
_MAX_HALVINGS = 64


class StepRejected(ArithmeticError):
    """The CFL check failed for the proposed time step."""


@dataclass(frozen=True)
class Grid:
    """Uniform cell partition of [x_min, x_max]."""

    x_min: float
    x_max: float
    n_cells: int

    def __post_init__(self) -> None:
        if not self.x_max > self.x_min:
            raise ValueError("grid needs x_max > x_min")
        if self.n_cells <= 0:
            raise ValueError("grid needs at least one cell")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.n_cells

    def centers(self) -> np.ndarray:
        return self.x_min + (np.arange(self.n_cells) + 0.5) * self.dx


@dataclass(frozen=True)
class InitialDatum:
    """Initial cell data in conserved variables."""

    kind: str  # "constant" | "riemann" | "table"
    left: tuple | None = None
    right: tuple | None = None
    table: np.ndarray | None = None

    @classmethod
    def constant(cls, rho: float, q: float) -> "InitialDatum":
        return cls("constant", left=(float(rho), float(q)))

    @classmethod
    def riemann(cls, left, right) -> "InitialDatum":
        """Two-constant datum split at x = 0 (right value on x >= 0)."""
        l, r = tuple(map(float, left)), tuple(map(float, right))
        return cls("riemann", left=l, right=r)

    @classmethod
    def tabulated(cls, values) -> "InitialDatum":
        """One (rho, q) sample per cell."""
        arr = np.asarray(values, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError("tabulated datum must have shape (n, 2)")
        return cls("table", table=arr)


@dataclass(frozen=True)
class Scenario:
    laws: ModelLaws
    coefficient: CoefficientProfile
    initial: InitialDatum
    grid: Grid
    cfl: float = 0.2
    t_final: float = 0.5
    boundary: str = "outflow"
    snapshot_stride: int = 0

    def __post_init__(self) -> None:
        if self.boundary not in ("outflow", "periodic"):
            raise ValueError(f"unknown boundary condition {self.boundary!r}")
        if not 0.0 < self.cfl <= 1.0:
            raise ValueError("cfl ratio must lie in (0, 1]")
        if self.t_final < 0.0:
            raise ValueError("t_final must be nonnegative")
        if self.snapshot_stride < 0:
            raise ValueError("snapshot stride must be nonnegative")


@dataclass(frozen=True)
class Field:
    """Cell averages plus the cell-center coefficient at one time."""

    grid: Grid
    rho: np.ndarray
    q: np.ndarray
    c: np.ndarray
    t: float

    def copy(self) -> "Field":
        return Field(self.grid, self.rho.copy(), self.q.copy(), self.c.copy(), self.t)


def _floor_pair(rho: float, q: float) -> tuple:
    if rho < VACUUM_FLOOR:
        return (0.0, 0.0)
    return (rho, q)


def init_field(scenario: Scenario) -> Field:
    """Sample the initial datum and the coefficient at cell centers."""
    grid = scenario.grid
    x = grid.centers()
    datum = scenario.initial
    if datum.kind == "constant":
        pair = _floor_pair(*datum.left)
        if pair != (0.0, 0.0):
            to_invariants(scenario.laws, pair)
        rho = np.full(grid.n_cells, pair[0])
        q = np.full(grid.n_cells, pair[1])
    elif datum.kind == "riemann":
        lpair = _floor_pair(*datum.left)
        rpair = _floor_pair(*datum.right)
        for pair in (lpair, rpair):
            if pair != (0.0, 0.0):
                to_invariants(scenario.laws, pair)
        mask = x < 0.0
        rho = np.where(mask, lpair[0], rpair[0])
        q = np.where(mask, lpair[1], rpair[1])
    elif datum.kind == "table":
        if datum.table.shape[0] != grid.n_cells:
            raise ValueError(
                f"tabulated datum has {datum.table.shape[0]} rows for {grid.n_cells} cells"
            )
        rho = datum.table[:, 0].copy()
        q = datum.table[:, 1].copy()
        low = rho < VACUUM_FLOOR
        rho[low] = 0.0
        q[low] = 0.0
        for j in np.flatnonzero(~low):
            to_invariants(scenario.laws, (rho[j], q[j]))
    else:
        raise ValueError(f"unknown datum kind {datum.kind!r}")
    c = np.array([coefficient_at(scenario.coefficient, xj) for xj in x])
    return Field(grid, rho, q, c, 0.0)


def _flux_and_speeds(laws: ModelLaws, rho, q, c):
    """Conserved flux c*F and the two characteristic speed arrays."""
    v = np.zeros_like(rho)
    lam_slow = np.zeros_like(rho)
    m = rho > 0.0
    rm = rho[m]
    hm = q[m] / rm - laws.pressure.value(rm)
    vm = laws.velocity.value(hm)
    v[m] = vm
    lam_slow[m] = vm - rm * laws.pressure.deriv(rm) * laws.velocity.deriv(hm)
    return c * rho * v, c * q * v, c * lam_slow, c * v


def max_wave_speed(laws: ModelLaws, field: Field) -> float:
    """max_j of (|slow speed|, fast speed) over the cells."""
    _, _, lam1, lam2 = _flux_and_speeds(laws, field.rho, field.q, field.c)
    return float(max(np.max(np.abs(lam1)), np.max(lam2), 0.0))


def _ghost_pad(arr: np.ndarray, boundary: str) -> np.ndarray:
    if boundary == "periodic":
        return np.concatenate(([arr[-1]], arr, [arr[0]]))
    return np.concatenate(([arr[0]], arr, [arr[-1]]))


def _step_core(laws: ModelLaws, field: Field, dt: float, boundary: str):
    if dt <= 0.0:
        raise ValueError("dt must be positive")
    dx = field.grid.dx
    f1, f2, lam1, lam2 = _flux_and_speeds(laws, field.rho, field.q, field.c)
    smax = max(np.max(np.abs(lam1)), np.max(lam2), 0.0)
    if not np.isfinite(smax):
        raise ArithmeticError("non-finite state in the field")
    if dt * smax > dx * _CFL_SLACK:
        raise StepRejected(
            f"CFL violated: dt*max_speed/dx = {dt * smax / dx:.6g} > 1"
        )
    # ghost cells copy interior cells, so their fluxes are copies too
    rho_g = _ghost_pad(field.rho, boundary)
    q_g = _ghost_pad(field.q, boundary)
    f1_g = _ghost_pad(f1, boundary)
    f2_g = _ghost_pad(f2, boundary)
    lam = dt / (2.0 * dx)
    rho_new = 0.5 * (rho_g[:-2] + rho_g[2:]) - lam * (f1_g[2:] - f1_g[:-2])
    q_new = 0.5 * (q_g[:-2] + q_g[2:]) - lam * (f2_g[2:] - f2_g[:-2])
    low = rho_new < VACUUM_FLOOR
    rho_new[low] = 0.0
    q_new[low] = 0.0
    if not (np.isfinite(rho_new).all() and np.isfinite(q_new).all()):
        raise ArithmeticError("non-finite state after the step")
    return Field(field.grid, rho_new, q_new, field.c, field.t + dt), float(smax)


def lf_step(laws: ModelLaws, field: Field, dt: float, boundary: str = "outflow") -> Field:
    """One Lax-Friedrichs step; raises StepRejected on a CFL violation."""
    new_field, _ = _step_core(laws, field, dt, boundary)
    return new_field


@dataclass(frozen=True)
class RunResult:
    snapshots: list
    steps: int
    max_courant: float


def run(scenario: Scenario) -> RunResult:
    """Advance to t_final with dt = cfl*dx, halving dt transiently when a
    step is rejected; snapshots at step 0, every stride steps, and the
    final time exactly (last step shortened, dt never enlarged)."""
    field = init_field(scenario)
    snapshots = [field.copy()]
    t_final = scenario.t_final
    dt_nominal = scenario.cfl * scenario.grid.dx
    eps = 1e-14 * max(1.0, abs(t_final))
    steps = 0
    max_courant = 0.0
    while t_final - field.t > eps:
        remaining = t_final - field.t
        dt = remaining if remaining <= dt_nominal * (1.0 + 1e-9) else dt_nominal
        for _ in range(_MAX_HALVINGS):
            try:
                field, smax = _step_core(scenario.laws, field, dt, scenario.boundary)
                break
            except StepRejected:
                dt *= 0.5
        else:
            raise StepRejected("CFL could not be met after repeated halving")
        steps += 1
        max_courant = max(max_courant, dt * smax / scenario.grid.dx)
        if (
            scenario.snapshot_stride > 0
            and steps % scenario.snapshot_stride == 0
            and t_final - field.t > eps
        ):
            snapshots.append(field.copy())
    if steps > 0:
        snapshots.append(field.copy())
    return RunResult(snapshots, steps, max_courant)


def l1_error(field: Field, reference: Callable) -> tuple:
    """Per-component L1 distance sum_j |U_j - reference(x_j)| * dx."""
    dx = field.grid.dx
    err_rho = 0.0
    err_q = 0.0
    for j, xj in enumerate(field.grid.centers()):
        ref_rho, ref_q = reference(xj)
        err_rho += abs(field.rho[j] - ref_rho)
        err_q += abs(field.q[j] - ref_q)
    return (err_rho * dx, err_q * dx)


def invariant_arrays(laws: ModelLaws, field: Field):
    """Cellwise invariant coordinates; vacuum cells carry nan."""
    h = np.full(field.grid.n_cells, np.nan)
    w = np.full(field.grid.n_cells, np.nan)
    m = field.rho > 0.0
    w[m] = field.q[m] / field.rho[m]
    h[m] = w[m] - laws.pressure.value(field.rho[m])
    return h, w
