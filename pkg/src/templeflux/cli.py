"""Command-line interface.

Scenario files are line-oriented `key = value` text under bracketed
section headers ([model], [coefficient], [initial], [grid], [output]).
Six presets covering the standard experiment matrix ship with the
package.  Subcommands: simulate (finite-volume run to CSV snapshots),
riemann (exact fan: wave list plus sampled profile), compare (L1 errors
of the scheme against the exact fan over a mesh ladder), check (law
validation report, coefficient variation, shock dissipation table).

Exit codes: 0 success, 1 configuration or usage error, 2 numeric
failure, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import configparser
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from .entropy import dissipation
from .fvm import Grid, InitialDatum, Scenario, init_field, invariant_arrays, l1_error, run
from .model import (
    CoefficientProfile,
    LinearVelocity,
    ModelLaws,
    PowerPressure,
    ValidationReport,
    coefficient_at,
    coefficient_tv,
    validate_laws,
)
from .riemann import SHOCK1, sample, solve_two_sided, wave_list_lines
from .state import to_conserved, to_invariants

__all__ = [
    "ConfigError",
    "ScenarioConfig",
    "parse_scenario",
    "serialize_scenario",
    "build_scenario",
    "load_config_text",
    "preset_names",
    "main",
]

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NUMERIC = 2
EXIT_IO = 3

_PRESETS = (
    "scenario_A1",
    "scenario_A2",
    "scenario_B1",
    "scenario_B2",
    "scenario_C1",
    "scenario_C2",
)

# window on which laws from a config are admitted
_VALIDATION_RHO = (0.0, 1.5)
_VALIDATION_H = (0.0, 1.5)

_ALLOWED_KEYS = {
    "model": {"pressure", "kappa", "gamma", "velocity", "slope"},
    "coefficient": {
        "kind",
        "value",
        "breakpoints",
        "values",
        "c_left",
        "c_right",
        "epsilon",
        "period",
        "intercepts",
        "slopes",
    },
    "initial": {"kind", "coords", "left", "right", "values"},
    "grid": {"x_min", "x_max", "dx", "cfl", "t_final", "bc"},
    "output": {"path", "stride", "format"},
}


class ConfigError(ValueError):
    """Scenario text failed to parse or violated a module invariant."""


@dataclass(frozen=True)
class ScenarioConfig:
    """Fully validated scenario; initial data held in conserved pairs."""

    laws: ModelLaws
    coefficient: CoefficientProfile
    coefficient_kind: str
    initial_kind: str
    initial_left: tuple | None
    initial_right: tuple | None
    initial_table: tuple | None
    x_min: float
    x_max: float
    dx: float
    cfl: float
    t_final: float
    boundary: str
    out_path: str
    stride: int
    fmt: str
    report: ValidationReport = field(compare=False)


def preset_names() -> tuple:
    return _PRESETS


def load_config_text(name: str) -> str:
    """Read scenario text from a file path or a bundled preset name."""
    if name in _PRESETS:
        return resources.files("templeflux").joinpath(f"presets/{name}.cfg").read_text()
    if os.path.exists(name):
        with open(name, "r") as fh:
            return fh.read()
    raise ConfigError(f"no such config file or preset: {name!r}")


def _fmt(value) -> str:
    return "%.17g" % value


def _floats(raw: str, where: str) -> tuple:
    out = []
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            out.append(float(item))
        except ValueError:
            raise ConfigError(f"{where}: {item!r} is not a number") from None
    return tuple(out)


def _pair(raw: str, where: str) -> tuple:
    vals = _floats(raw, where)
    if len(vals) != 2:
        raise ConfigError(f"{where}: expected two comma-separated numbers, got {raw!r}")
    return vals


class _Section:
    """Typed access to one config section with unknown-key rejection."""

    def __init__(self, cp: configparser.ConfigParser, name: str):
        self.name = name
        self.present = cp.has_section(name)
        self.raw = dict(cp[name]) if self.present else {}

    def get(self, key: str, default=None, required: bool = False):
        if key in self.raw:
            return self.raw[key]
        if required:
            raise ConfigError(f"[{self.name}] needs key {key!r}")
        return default

    def number(self, key: str, default=None, required: bool = False) -> float:
        raw = self.get(key, required=required)
        if raw is None:
            return default
        try:
            return float(raw)
        except ValueError:
            raise ConfigError(f"[{self.name}] {key} = {raw!r} is not a number") from None

    def integer(self, key: str, default=None) -> int:
        raw = self.get(key)
        if raw is None:
            return default
        try:
            return int(raw)
        except ValueError:
            raise ConfigError(f"[{self.name}] {key} = {raw!r} is not an integer") from None


def _parse_coefficient(sec: _Section):
    kind = sec.get("kind", required=True)
    try:
        if kind == "constant":
            profile = CoefficientProfile.constant(sec.number("value", required=True))
        elif kind == "piecewise_constant":
            breaks = _floats(sec.get("breakpoints", required=True), "[coefficient] breakpoints")
            values = _floats(sec.get("values", required=True), "[coefficient] values")
            if len(values) != len(breaks) + 1:
                raise ConfigError(
                    f"[coefficient] needs {len(breaks) + 1} values for "
                    f"{len(breaks)} breakpoints, got {len(values)}"
                )
            profile = CoefficientProfile.piecewise_constant(breaks, values)
        elif kind == "ramp":
            profile = CoefficientProfile.ramp(
                sec.number("c_left", required=True),
                sec.number("c_right", required=True),
                sec.number("epsilon", required=True),
            )
        elif kind == "periodic":
            period = sec.number("period", required=True)
            breaks = _floats(sec.get("breakpoints", ""), "[coefficient] breakpoints")
            intercepts = _floats(sec.get("intercepts", required=True), "[coefficient] intercepts")
            slopes = _floats(sec.get("slopes", required=True), "[coefficient] slopes")
            if len(intercepts) != len(slopes) or len(intercepts) != len(breaks) + 1:
                raise ConfigError(
                    "[coefficient] periodic pieces need matching intercepts/slopes, "
                    "one more than breakpoints"
                )
            profile = CoefficientProfile.periodic(breaks, tuple(zip(intercepts, slopes)), period)
        else:
            raise ConfigError(f"[coefficient] unknown kind {kind!r}")
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"[coefficient] {exc}") from exc
    return kind, profile


def _validated_pair(laws: ModelLaws, raw: str, coords: str, where: str) -> tuple:
    pair = _pair(raw, where)
    try:
        if coords == "hw":
            state = to_conserved(laws, pair)
            return (float(state[0]), float(state[1]))
        if pair[0] >= 1e-10:
            to_invariants(laws, pair)
        elif pair != (0.0, 0.0):
            raise ValueError(f"near-vacuum datum {pair} must be exactly (0, 0)")
        return pair
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from exc


def _parse_initial(sec: _Section, laws: ModelLaws):
    kind = sec.get("kind", required=True)
    coords = sec.get("coords", "rhoq")
    if coords not in ("rhoq", "hw"):
        raise ConfigError(f"[initial] unknown coords {coords!r}")
    left = right = table = None
    if kind == "constant":
        left = _validated_pair(laws, sec.get("left", required=True), coords, "[initial] left")
    elif kind == "riemann":
        left = _validated_pair(laws, sec.get("left", required=True), coords, "[initial] left")
        right = _validated_pair(laws, sec.get("right", required=True), coords, "[initial] right")
    elif kind == "table":
        raw = sec.get("values", required=True)
        rows = []
        for i, chunk in enumerate(raw.split(";")):
            chunk = chunk.strip()
            if not chunk:
                continue
            parts = chunk.split()
            if len(parts) != 2:
                raise ConfigError(f"[initial] values row {i}: expected 'a b', got {chunk!r}")
            rows.append(
                _validated_pair(laws, ", ".join(parts), coords, f"[initial] values row {i}")
            )
        if not rows:
            raise ConfigError("[initial] table datum has no rows")
        table = tuple(rows)
    else:
        raise ConfigError(f"[initial] unknown kind {kind!r}")
    return kind, left, right, table


def parse_scenario(text: str) -> ScenarioConfig:
    """Parse and validate scenario text; raises ConfigError on any problem."""
    cp = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"parse error: {exc}") from exc
    for section in cp.sections():
        if section not in _ALLOWED_KEYS:
            raise ConfigError(f"unknown section [{section}]")
        for key in cp[section]:
            if key not in _ALLOWED_KEYS[section]:
                raise ConfigError(f"unknown key {key!r} in [{section}]")
    for required in ("coefficient", "initial"):
        if not cp.has_section(required):
            raise ConfigError(f"missing section [{required}]")

    model = _Section(cp, "model")
    pressure_family = model.get("pressure", "power")
    if pressure_family != "power":
        raise ConfigError(f"[model] unknown pressure family {pressure_family!r}")
    velocity_family = model.get("velocity", "linear")
    if velocity_family != "linear":
        raise ConfigError(f"[model] unknown velocity family {velocity_family!r}")
    try:
        laws = ModelLaws(
            PowerPressure(model.number("kappa", 1.0), model.number("gamma", 2.0)),
            LinearVelocity(model.number("slope", 1.0)),
        )
    except ValueError as exc:
        raise ConfigError(f"[model] {exc}") from exc
    report = validate_laws(laws, _VALIDATION_RHO, _VALIDATION_H)

    coefficient_kind, profile = _parse_coefficient(_Section(cp, "coefficient"))
    initial_kind, left, right, table = _parse_initial(_Section(cp, "initial"), laws)

    grid = _Section(cp, "grid")
    x_min = grid.number("x_min", -1.0)
    x_max = grid.number("x_max", 1.0)
    dx = grid.number("dx", 1e-3)
    cfl = grid.number("cfl", 0.2)
    t_final = grid.number("t_final", 0.5)
    boundary = grid.get("bc", "outflow")
    if not x_max > x_min:
        raise ConfigError("[grid] needs x_max > x_min")
    if not dx > 0:
        raise ConfigError("[grid] dx must be positive")
    if not 0.0 < cfl <= 1.0:
        raise ConfigError("[grid] cfl must lie in (0, 1]")
    if t_final < 0.0:
        raise ConfigError("[grid] t_final must be nonnegative")
    if boundary not in ("outflow", "periodic"):
        raise ConfigError(f"[grid] unknown bc {boundary!r}")

    output = _Section(cp, "output")
    out_path = output.get("path", "out.csv")
    stride = output.integer("stride", 0)
    if stride < 0:
        raise ConfigError("[output] stride must be nonnegative")
    fmt = output.get("format", "csv")
    if fmt != "csv":
        raise ConfigError(f"[output] unknown format {fmt!r}")

    return ScenarioConfig(
        laws=laws,
        coefficient=profile,
        coefficient_kind=coefficient_kind,
        initial_kind=initial_kind,
        initial_left=left,
        initial_right=right,
        initial_table=table,
        x_min=x_min,
        x_max=x_max,
        dx=dx,
        cfl=cfl,
        t_final=t_final,
        boundary=boundary,
        out_path=out_path,
        stride=stride,
        fmt=fmt,
        report=report,
    )


def serialize_scenario(config: ScenarioConfig) -> str:
    """Canonical text form; parse(serialize(parse(text))) == parse(text)."""
    lines = ["[model]"]
    lines.append("pressure = power")
    lines.append(f"kappa = {_fmt(config.laws.pressure.kappa)}")
    lines.append(f"gamma = {_fmt(config.laws.pressure.gamma)}")
    lines.append("velocity = linear")
    lines.append(f"slope = {_fmt(config.laws.velocity.slope)}")
    lines.append("")
    lines.append("[coefficient]")
    lines.append(f"kind = {config.coefficient_kind}")
    prof = config.coefficient
    if config.coefficient_kind == "constant":
        lines.append(f"value = {_fmt(prof.pieces[0][0])}")
    elif config.coefficient_kind == "piecewise_constant":
        lines.append(f"breakpoints = {', '.join(_fmt(b) for b in prof.breakpoints)}")
        lines.append(f"values = {', '.join(_fmt(a) for a, _ in prof.pieces)}")
    elif config.coefficient_kind == "ramp":
        lines.append(f"c_left = {_fmt(prof.pieces[0][0])}")
        lines.append(f"c_right = {_fmt(prof.pieces[2][0])}")
        lines.append(f"epsilon = {_fmt(-prof.breakpoints[0])}")
    else:  # periodic
        lines.append(f"period = {_fmt(prof.period)}")
        if prof.breakpoints:
            lines.append(f"breakpoints = {', '.join(_fmt(b) for b in prof.breakpoints)}")
        lines.append(f"intercepts = {', '.join(_fmt(a) for a, _ in prof.pieces)}")
        lines.append(f"slopes = {', '.join(_fmt(b) for _, b in prof.pieces)}")
    lines.append("")
    lines.append("[initial]")
    lines.append(f"kind = {config.initial_kind}")
    lines.append("coords = rhoq")
    if config.initial_kind == "table":
        rows = "; ".join(f"{_fmt(r)} {_fmt(q)}" for r, q in config.initial_table)
        lines.append(f"values = {rows}")
    else:
        lines.append(f"left = {_fmt(config.initial_left[0])}, {_fmt(config.initial_left[1])}")
        if config.initial_kind == "riemann":
            lines.append(
                f"right = {_fmt(config.initial_right[0])}, {_fmt(config.initial_right[1])}"
            )
    lines.append("")
    lines.append("[grid]")
    lines.append(f"x_min = {_fmt(config.x_min)}")
    lines.append(f"x_max = {_fmt(config.x_max)}")
    lines.append(f"dx = {_fmt(config.dx)}")
    lines.append(f"cfl = {_fmt(config.cfl)}")
    lines.append(f"t_final = {_fmt(config.t_final)}")
    lines.append(f"bc = {config.boundary}")
    lines.append("")
    lines.append("[output]")
    lines.append(f"path = {config.out_path}")
    lines.append(f"stride = {config.stride}")
    lines.append(f"format = {config.fmt}")
    lines.append("")
    return "\n".join(lines)


def build_scenario(config: ScenarioConfig, *, dx=None, cfl=None, t_final=None, stride=None) -> Scenario:
    """Materialize the finite-volume scenario, applying flag overrides."""
    dx = config.dx if dx is None else dx
    cfl = config.cfl if cfl is None else cfl
    t_final = config.t_final if t_final is None else t_final
    stride = config.stride if stride is None else stride
    if not dx > 0:
        raise ConfigError("dx must be positive")
    n_exact = (config.x_max - config.x_min) / dx
    n_cells = int(round(n_exact))
    if n_cells < 1 or abs(n_exact - n_cells) > 1e-6 * n_cells:
        raise ConfigError(f"dx = {dx:g} does not tile [{config.x_min:g}, {config.x_max:g}]")
    if config.initial_kind == "constant":
        datum = InitialDatum.constant(*config.initial_left)
    elif config.initial_kind == "riemann":
        datum = InitialDatum.riemann(config.initial_left, config.initial_right)
    else:
        datum = InitialDatum.tabulated(config.initial_table)
    try:
        return Scenario(
            laws=config.laws,
            coefficient=config.coefficient,
            initial=datum,
            grid=Grid(config.x_min, config.x_max, n_cells),
            cfl=cfl,
            t_final=t_final,
            boundary=config.boundary,
            snapshot_stride=stride,
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _require_valid_laws(config: ScenarioConfig) -> None:
    if not config.report.passed:
        raise ConfigError("law validation failed\n" + config.report.summary())


# ------------------------------------------------------------------ CSV output


def _write_snapshots(fh, laws: ModelLaws, snapshots) -> None:
    fh.write("t,x,rho,q,h,w,c\n")
    for snap in snapshots:
        hs, ws = invariant_arrays(laws, snap)
        xs = snap.grid.centers()
        for j in range(snap.grid.n_cells):
            row = (snap.t, xs[j], snap.rho[j], snap.q[j], hs[j], ws[j], snap.c[j])
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _emit(path: str, writer) -> None:
    with open(path, "w", newline="") as fh:
        writer(fh)


# ------------------------------------------------------------------- commands


def cmd_simulate(config: ScenarioConfig, args) -> int:
    _require_valid_laws(config)
    scenario = build_scenario(
        config, dx=args.dx, cfl=args.cfl, t_final=args.t_final, stride=args.stride
    )
    result = run(scenario)
    out = args.out or config.out_path
    if args.per_snapshot:
        stem, ext = os.path.splitext(out)
        for i, snap in enumerate(result.snapshots):
            _emit(f"{stem}-{i:03d}{ext}", lambda fh, s=snap: _write_snapshots(fh, config.laws, [s]))
        print(
            f"wrote {len(result.snapshots)} files {stem}-*{ext} "
            f"({result.steps} steps, max courant {result.max_courant:.6g})"
        )
    else:
        _emit(out, lambda fh: _write_snapshots(fh, config.laws, result.snapshots))
        print(
            f"wrote {out} ({result.steps} steps, {len(result.snapshots)} snapshots, "
            f"max courant {result.max_courant:.6g})"
        )
    return EXIT_OK


def _interface_pair(config: ScenarioConfig):
    """(c_minus, c_plus) when the coefficient admits an exact fan: constant,
    or piecewise constant with its single breakpoint at 0."""
    prof = config.coefficient
    if prof.period is not None or any(b != 0.0 for _, b in prof.pieces):
        return None
    if len(prof.pieces) == 1:
        c0 = prof.pieces[0][0]
        return (c0, c0)
    if len(prof.pieces) == 2 and prof.breakpoints == (0.0,):
        return (prof.pieces[0][0], prof.pieces[1][0])
    return None


def _exact_fan(config: ScenarioConfig):
    pair = _interface_pair(config)
    if pair is None:
        raise ConfigError(
            "this command needs a constant or single-step coefficient at x = 0"
        )
    if config.initial_kind not in ("constant", "riemann"):
        raise ConfigError("this command needs a two-constant (or constant) datum")
    left = config.initial_left
    right = config.initial_right if config.initial_kind == "riemann" else config.initial_left
    try:
        w_left = to_invariants(config.laws, left)
        w_right = to_invariants(config.laws, right)
    except ValueError as exc:
        raise ConfigError(f"datum has no invariant form: {exc}") from exc
    return solve_two_sided(config.laws, pair[0], pair[1], w_left, w_right), pair


def cmd_riemann(config: ScenarioConfig, args) -> int:
    _require_valid_laws(config)
    fan, _ = _exact_fan(config)
    lines = wave_list_lines(fan)
    for line in lines:
        print(line)
    if args.samples < 2:
        raise ConfigError("--samples must be at least 2")
    if not args.nu_max > args.nu_min:
        raise ConfigError("--nu-max must exceed --nu-min")
    out = args.out or config.out_path

    def write_samples(fh):
        fh.write("nu,h,w,rho,q\n")
        for i in range(args.samples):
            nu = args.nu_min + (args.nu_max - args.nu_min) * i / (args.samples - 1)
            state = sample(fan, nu)
            rho, q = to_conserved(config.laws, state)
            fh.write(",".join(_fmt(v) for v in (nu, state.h, state.w, rho, q)) + "\n")

    _emit(out, write_samples)
    waves_path = os.path.splitext(out)[0] + ".waves"
    _emit(waves_path, lambda fh: fh.write("\n".join(lines) + "\n"))
    print(f"wrote {out} and {waves_path}")
    return EXIT_OK


def cmd_compare(config: ScenarioConfig, args) -> int:
    _require_valid_laws(config)
    fan, _ = _exact_fan(config)
    meshes = _floats(args.meshes, "--meshes")
    if not meshes:
        raise ConfigError("--meshes needs at least one mesh width")
    t_final = config.t_final if args.t_final is None else args.t_final
    if not t_final > 0:
        raise ConfigError("compare needs t_final > 0")

    def reference(x):
        return to_conserved(config.laws, sample(fan, x / t_final))

    rows = []
    for dx in meshes:
        scenario = build_scenario(config, dx=dx, cfl=args.cfl, t_final=t_final, stride=0)
        result = run(scenario)
        err_rho, err_q = l1_error(result.snapshots[-1], reference)
        rows.append((dx, err_rho, err_q))

    def order(prev, cur):
        if prev <= 0 or cur <= 0:
            return math.nan
        return math.log2(prev / cur)

    out_lines = ["dx,err_rho,err_q,order_rho,order_q"]
    for i, (dx, er, eq) in enumerate(rows):
        o_r = order(rows[i - 1][1], er) if i > 0 else math.nan
        o_q = order(rows[i - 1][2], eq) if i > 0 else math.nan
        out_lines.append(",".join(_fmt(v) for v in (dx, er, eq, o_r, o_q)))
    for line in out_lines:
        print(line)
    if args.out:
        _emit(args.out, lambda fh: fh.write("\n".join(out_lines) + "\n"))
        print(f"wrote {args.out}")
    return EXIT_OK


def cmd_check(config: ScenarioConfig, args) -> int:
    print(config.report.summary())
    prof = config.coefficient
    if prof.period is not None:
        tv = coefficient_tv(prof, (0.0, prof.period))
        print(f"TV(c) per period = {_fmt(tv)}")
    else:
        tv = coefficient_tv(prof)
        print(f"TV(c) = {_fmt(tv)}")
    if not config.report.passed:
        return EXIT_OK
    try:
        fan, c_pair = _exact_fan(config)
    except ConfigError:
        return EXIT_OK
    table_lines = ["wave,speed,k,D"]
    for idx, wave in enumerate(fan.waves):
        if wave.kind != SHOCK1:
            continue
        c_side = c_pair[0] if wave.upper_speed <= 0.0 else c_pair[1]
        w_level = wave.left.w
        ks = sorted(set(np.linspace(0.0, w_level, 101)) | {wave.left.h, wave.right.h})
        values = [
            dissipation(config.laws, k, wave.left, wave.right, wave.speed, c_side)
            for k in ks
        ]
        for k, val in zip(ks, values):
            table_lines.append(",".join(_fmt(v) for v in (idx, wave.speed, k, val)))
        print(
            f"shock {idx} at speed {_fmt(wave.speed)}: "
            f"min D_k = {_fmt(min(values))}, max D_k = {_fmt(max(values))}"
        )
    if args.out and len(table_lines) > 1:
        _emit(args.out, lambda fh: fh.write("\n".join(table_lines) + "\n"))
        print(f"wrote {args.out}")
    return EXIT_OK


# ---------------------------------------------------------------- entry point


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="templeflux",
        description="Finite-volume and exact-solution tools for a 2x2 system "
        "with a discontinuous flux coefficient.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run the finite-volume scheme, write CSV snapshots")
    sim.add_argument("config", help="scenario file path or preset name")
    sim.add_argument("--dx", type=float, default=None)
    sim.add_argument("--cfl", type=float, default=None)
    sim.add_argument("--t-final", type=float, default=None)
    sim.add_argument("--stride", type=int, default=None)
    sim.add_argument("--out", default=None)
    sim.add_argument("--format", choices=["csv"], default="csv")
    sim.add_argument("--per-snapshot", action="store_true", help="one file per snapshot")

    rie = sub.add_parser("riemann", help="exact wave fan: wave list and sampled profile")
    rie.add_argument("config")
    rie.add_argument("--nu-min", type=float, default=-1.0)
    rie.add_argument("--nu-max", type=float, default=1.0)
    rie.add_argument("--samples", type=int, default=201)
    rie.add_argument("--out", default=None)

    cmp_ = sub.add_parser("compare", help="L1 errors against the exact fan over meshes")
    cmp_.add_argument("config")
    cmp_.add_argument("--meshes", required=True, help="comma-separated mesh widths")
    cmp_.add_argument("--t-final", type=float, default=None)
    cmp_.add_argument("--cfl", type=float, default=None)
    cmp_.add_argument("--out", default=None)

    chk = sub.add_parser("check", help="validation report, TV(c), dissipation table")
    chk.add_argument("config")
    chk.add_argument("--out", default=None)

    return parser


_DISPATCH = {
    "simulate": cmd_simulate,
    "riemann": cmd_riemann,
    "compare": cmd_compare,
    "check": cmd_check,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_CONFIG
    try:
        config = parse_scenario(load_config_text(args.config))
        return _DISPATCH[args.command](config, args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ArithmeticError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
