"""Scenario parsing, serialization, presets, commands, and exit codes.

Commands are exercised in-process through main(argv) with outputs under
tmp_path; determinism is checked at the byte level.
"""

import numpy as np
import pytest

from templeflux.cli import (
    ConfigError,
    build_scenario,
    load_config_text,
    main,
    parse_scenario,
    preset_names,
    serialize_scenario,
)
from templeflux.riemann import parse_wave_list

MINIMAL = """
[coefficient]
kind = constant
value = 1.0

[initial]
kind = constant
left = 0.4, 0.4
"""


class TestParseScenario:
    def test_preset_a1_contents(self):
        cfg = parse_scenario(load_config_text("scenario_A1"))
        assert cfg.laws.pressure.kappa == 1.0
        assert cfg.laws.pressure.gamma == 2.0
        assert cfg.laws.velocity.slope == 1.0
        assert cfg.coefficient.breakpoints == (0.0,)
        assert cfg.coefficient.pieces == ((1.0, 0.0), (0.5, 0.0))
        assert cfg.initial_kind == "constant"
        assert cfg.initial_left == (0.4, 0.4)  # given as (h, w) = (0.84, 1)
        assert cfg.t_final == 0.5
        assert cfg.boundary == "outflow"
        assert cfg.dx == 1e-3
        assert cfg.report.passed

    def test_defaults_fill_missing_sections(self):
        cfg = parse_scenario(MINIMAL)
        assert cfg.laws.pressure.gamma == 2.0
        assert (cfg.x_min, cfg.x_max, cfg.dx) == (-1.0, 1.0, 1e-3)
        assert cfg.cfl == 0.2 and cfg.t_final == 0.5
        assert cfg.out_path == "out.csv" and cfg.stride == 0 and cfg.fmt == "csv"

    def test_hw_coordinates_converted(self):
        cfg = parse_scenario(
            MINIMAL.replace("left = 0.4, 0.4", "left = 0.84, 1.0\ncoords = hw")
        )
        assert cfg.initial_left == (0.4, 0.4)

    def test_zero_coefficient_rejected(self):
        text = MINIMAL.replace("value = 1.0", "value = 0.0")
        with pytest.raises(ConfigError, match="c must be"):
            parse_scenario(text)

    def test_parse_error_carries_line_number(self):
        broken = MINIMAL.replace("kind = constant", "kind", 1)
        with pytest.raises(ConfigError, match="line"):
            parse_scenario(broken)

    def test_unknown_section_and_key_rejected(self):
        with pytest.raises(ConfigError, match="unknown section"):
            parse_scenario(MINIMAL + "\n[extra]\nx = 1\n")
        with pytest.raises(ConfigError, match="unknown key"):
            parse_scenario(MINIMAL + "\n[grid]\nwavelength = 1\n")

    def test_missing_section_rejected(self):
        with pytest.raises(ConfigError, match="missing section"):
            parse_scenario("[coefficient]\nkind = constant\nvalue = 1.0\n")

    def test_datum_outside_state_space_rejected(self):
        text = MINIMAL.replace("left = 0.4, 0.4", "left = 0.4, 0.05")
        with pytest.raises(ConfigError):
            parse_scenario(text)

    def test_table_datum(self):
        text = MINIMAL.replace(
            "kind = constant\nleft = 0.4, 0.4",
            "kind = table\nvalues = 0.4 0.4; 0.5 0.75",
        )
        cfg = parse_scenario(text)
        assert cfg.initial_table == ((0.4, 0.4), (0.5, 0.75))
        sc = build_scenario(cfg, dx=1.0)
        assert sc.grid.n_cells == 2


class TestSerializeRoundTrip:
    @pytest.mark.parametrize("name", preset_names())
    def test_preset_round_trip(self, name):
        first = parse_scenario(load_config_text(name))
        second = parse_scenario(serialize_scenario(first))
        assert first == second
        assert serialize_scenario(first) == serialize_scenario(second)


class TestBuildScenario:
    def test_cell_count(self):
        cfg = parse_scenario(load_config_text("scenario_A1"))
        assert build_scenario(cfg).grid.n_cells == 2000
        assert build_scenario(cfg, dx=4e-3).grid.n_cells == 500

    def test_non_tiling_dx_rejected(self):
        cfg = parse_scenario(MINIMAL)
        with pytest.raises(ConfigError, match="tile"):
            build_scenario(cfg, dx=0.3)


class TestCommands:
    def test_simulate_writes_deterministic_csv(self, tmp_path):
        out1 = tmp_path / "one.csv"
        out2 = tmp_path / "two.csv"
        argv = ["simulate", "scenario_A1", "--dx", "1e-2", "--t-final", "0.1"]
        assert main(argv + ["--out", str(out1)]) == 0
        assert main(argv + ["--out", str(out2)]) == 0
        data = out1.read_bytes()
        assert data == out2.read_bytes()
        lines = data.decode().splitlines()
        assert lines[0] == "t,x,rho,q,h,w,c"
        # initial and final snapshots over 200 cells
        assert len(lines) == 1 + 2 * 200

    def test_simulate_zero_time_initial_only(self, tmp_path):
        out = tmp_path / "t0.csv"
        assert main(["simulate", "scenario_A1", "--dx", "1e-2",
                     "--t-final", "0", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 1 + 200
        assert all(row.startswith("0,") for row in lines[1:])

    def test_simulate_per_snapshot_files(self, tmp_path):
        out = tmp_path / "snap.csv"
        assert main(["simulate", "scenario_A1", "--dx", "1e-2", "--t-final", "0.01",
                     "--stride", "2", "--per-snapshot", "--out", str(out)]) == 0
        made = sorted(p.name for p in tmp_path.iterdir())
        assert made == ["snap-000.csv", "snap-001.csv", "snap-002.csv", "snap-003.csv"]

    def test_riemann_wave_lists(self, tmp_path):
        out = tmp_path / "fan.csv"
        assert main(["riemann", "scenario_A1", "--samples", "11", "--out", str(out)]) == 0
        waves = parse_wave_list((tmp_path / "fan.waves").read_text().splitlines())
        assert [w.kind for w in waves] == ["Shock1", "NonClassical", "Rarefaction1"]
        assert waves[0].speed == pytest.approx(-0.29625289080138828, abs=1e-10)
        assert waves[1].speed == 0.0
        assert (waves[2].speed, waves[2].speed_hi) == pytest.approx((0.0, 0.26), abs=1e-12)
        header = out.read_text().splitlines()[0]
        assert header == "nu,h,w,rho,q"
        assert len(out.read_text().splitlines()) == 12

    def test_riemann_c_scenario_structure(self, tmp_path):
        out = tmp_path / "fan.csv"
        assert main(["riemann", "scenario_C1", "--out", str(out)]) == 0
        waves = parse_wave_list((tmp_path / "fan.waves").read_text().splitlines())
        kinds = [w.kind for w in waves]
        assert kinds == ["Rarefaction1", "NonClassical", "Rarefaction1", "Contact2"]
        assert waves[-1].speed == pytest.approx(1.25, abs=1e-10)
        # middle state of the second fan reaches vacuum (h = w)
        assert waves[2].right.h == pytest.approx(waves[2].right.w, abs=1e-12)

    def test_riemann_needs_exact_fan(self, tmp_path, capsys):
        assert main(["riemann", "scenario_B1"]) == 1
        assert "coefficient" in capsys.readouterr().err

    def test_compare_mesh_ladder(self, tmp_path):
        out = tmp_path / "errs.csv"
        assert main(["compare", "scenario_A1", "--meshes", "1.6e-2,8e-3,4e-3",
                     "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "dx,err_rho,err_q,order_rho,order_q"
        errs = [float(row.split(",")[1]) for row in lines[1:]]
        assert errs[0] > errs[1] > errs[2]

    def test_compare_rejects_periodic_scenario(self, capsys):
        assert main(["compare", "scenario_B1", "--meshes", "1e-2"]) == 1
        assert "coefficient" in capsys.readouterr().err

    def test_check_report_and_dissipation(self, tmp_path, capsys):
        out = tmp_path / "diss.csv"
        assert main(["check", "scenario_A1", "--out", str(out)]) == 0
        text = capsys.readouterr().out
        assert "law validation: pass" in text
        assert "TV(c) = 0.5" in text
        assert "min D_k" in text
        rows = out.read_text().splitlines()
        assert rows[0] == "wave,speed,k,D"
        ds = [float(r.split(",")[3]) for r in rows[1:]]
        assert min(ds) >= -1e-12

    def test_check_periodic_tv_per_period(self, capsys):
        assert main(["check", "scenario_B1"]) == 0
        assert "TV(c) per period = 1" in capsys.readouterr().out


class TestExitCodes:
    def test_config_error_is_one(self, tmp_path, capsys):
        bad = tmp_path / "bad.cfg"
        bad.write_text(MINIMAL.replace("value = 1.0", "value = 0.0"))
        assert main(["check", str(bad)]) == 1
        assert "c must be" in capsys.readouterr().err

    def test_missing_config_is_one(self, capsys):
        assert main(["simulate", "scenario_Z9"]) == 1
        capsys.readouterr()

    def test_numeric_error_is_two(self, tmp_path, capsys):
        wild = tmp_path / "wild.cfg"
        wild.write_text(MINIMAL.replace("left = 0.4, 0.4", "left = 0.4, 1e154"))
        with np.errstate(over="ignore"):  # datum chosen to defeat the CFL loop
            code = main(["simulate", str(wild), "--dx", "1e-2",
                         "--out", str(tmp_path / "w.csv")])
        assert code == 2
        assert "numeric" in capsys.readouterr().err

    def test_io_error_is_three(self, capsys):
        code = main(["simulate", "scenario_A1", "--dx", "1e-2", "--t-final", "0",
                     "--out", "/nonexistent_dir/x.csv"])
        assert code == 3
        assert "i/o" in capsys.readouterr().err

    def test_bad_flag_is_config_error(self, capsys):
        assert main(["simulate", "scenario_A1", "--format", "xml"]) == 1
        capsys.readouterr()
