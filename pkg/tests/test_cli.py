"""Command-line behavior: config layering, output formats, exit codes."""

import csv
import json

import pytest

from dissipcool import cli


def _run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _read_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    return rows[0], rows[1:]


def _cool_record(out: str) -> dict:
    record = {}
    for line in out.splitlines():
        key, sep, value = line.partition(" = ")
        if sep:
            record[key] = value
    return record


class TestPresets:
    def test_listing_shows_all_presets(self, capsys):
        code, out, _ = _run(capsys, ["presets"])
        assert code == 0
        for name in ("fig2", "fig3", "fig4a", "fig4b", "fig5", "fig6"):
            assert f"{name}:" in out

    def test_listing_shows_parameter_values(self, capsys):
        _, out, _ = _run(capsys, ["presets"])
        assert "omega0 = 0.76" in out
        assert "kappa = 7000.0" in out
        assert "axis1 = g1as in" in out


class TestSpectrum:
    def test_csv_dialect(self, capsys, tmp_path):
        out_path = tmp_path / "s.csv"
        code, out, _ = _run(
            capsys,
            ["spectrum", "--preset", "fig3", "--set", "grid.count=241", "--out", str(out_path)],
        )
        assert code == 0
        assert "wrote 241 rows" in out
        blob = out_path.read_bytes()
        assert b"\r" not in blob
        blob.decode("utf-8")
        header, rows = _read_csv(str(out_path))
        assert header == ["omega", "gnn_full", "gnn_bare", "gnn_optical_part", "gnn_thermal_part"]
        assert len(rows) == 241
        assert float(rows[0][0]) == -1.2 and float(rows[-1][0]) == 1.2

    def test_parts_sum_and_heating_peak(self, capsys, tmp_path):
        out_path = tmp_path / "s.csv"
        _run(capsys, ["spectrum", "--preset", "fig3", "--set", "grid.count=241", "--out", str(out_path)])
        _, rows = _read_csv(str(out_path))
        data = {float(r[0]): tuple(float(v) for v in r[1:]) for r in rows}
        for full, _bare, optical, thermal in data.values():
            assert optical + thermal == pytest.approx(full, rel=1e-9)
        full_cooling = data[0.76][0]
        full_heating = data[-0.76][0]
        assert full_cooling == pytest.approx(0.2814, rel=0.05)
        assert full_heating == pytest.approx(0.0076, rel=0.10)

    def test_no_ancilla_collapses_to_bare(self, capsys, tmp_path):
        out_path = tmp_path / "s.csv"
        code, _, _ = _run(
            capsys,
            ["spectrum", "--preset", "fig3", "--set", "g1as=0.0",
             "--set", "grid.count=101", "--out", str(out_path)],
        )
        assert code == 0
        _, rows = _read_csv(str(out_path))
        # byte-level equality of the formatted columns, not just approx
        assert all(r[1] == r[2] for r in rows)

    def test_bad_grid_is_config_error(self, capsys, tmp_path):
        code, _, err = _run(
            capsys,
            ["spectrum", "--preset", "fig3", "--set", "grid.count=1",
             "--out", str(tmp_path / "s.csv")],
        )
        assert code == 2
        assert err.startswith("config error:")
        assert "count >= 2" in err


class TestCool:
    def test_decoupled_point_reports_thermal_occupation(self, capsys):
        code, out, _ = _run(
            capsys, ["cool", "--preset", "fig2", "--set", "g0as=0.0", "--set", "g1as=0.0"]
        )
        assert code == 0
        record = _cool_record(out)
        assert record["status"] == "ok"
        assert record["stable"] == "True"
        assert float(record["n0"]) == pytest.approx(100.0, rel=1e-6)

    def test_working_point_json(self, capsys, tmp_path):
        out_path = tmp_path / "cool.json"
        code, _, _ = _run(capsys, ["cool", "--preset", "fig4a", "--out", str(out_path)])
        assert code == 0
        record = json.loads(out_path.read_text(encoding="utf-8"))
        assert record["status"] == "ok"
        assert record["n0"] < 0.05
        assert record["lyapunov_rel_dev"] < 1e-3
        assert record["qnoise_n0"] > 0.0

    def test_unstable_point_exits_3(self, capsys):
        code, out, _ = _run(capsys, ["cool", "--preset", "fig2", "--set", "delta=-1.0"])
        assert code == 3
        record = _cool_record(out)
        assert record["status"] == "unstable"
        assert record["stable"] == "False"
        assert "n0" not in record

    def test_exhausted_quadrature_exits_4(self, capsys):
        code, out, _ = _run(
            capsys,
            ["cool", "--preset", "fig2", "--set", "quad.max_panels=50",
             "--set", "quad.rel_tol=1e-13"],
        )
        assert code == 4
        record = _cool_record(out)
        assert record["status"] == "non-convergent"
        assert "budget exhausted" in record["error"]

    def test_invalid_parameters_exit_2(self, capsys):
        code, _, err = _run(capsys, ["cool", "--preset", "fig2", "--set", "kappa=-1.0"])
        assert code == 2
        assert "kappa must be positive" in err


class TestSweep:
    def test_rows_echo_parameters_and_mask_unstable(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.csv"
        code, out, _ = _run(
            capsys,
            ["sweep", "--preset", "fig5", "--set", "sweep.axis1.count=3",
             "--set", "sweep.axis1.max=0.3", "--out", str(out_path), "--jobs", "1"],
        )
        assert code == 0
        assert "wrote 3 rows" in out
        header, rows = _read_csv(str(out_path))
        assert header[:10] == list(cli.PARAM_NAMES)
        assert [r[header.index("g0as")] for r in rows] == ["0.01", "0.155", "0.3"]
        stable_col = header.index("stable")
        n0_col = header.index("n0")
        assert [r[stable_col] for r in rows] == ["true", "true", "false"]
        # masked point: no numbers, no error
        assert rows[2][n0_col] == "" and rows[2][header.index("error")] == ""
        assert float(rows[0][n0_col]) > 0.0

    def test_metadata_sidecar(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.csv"
        _run(
            capsys,
            ["sweep", "--preset", "fig5", "--set", "sweep.axis1.count=2",
             "--set", "sweep.axis1.max=0.05", "--out", str(out_path), "--jobs", "1"],
        )
        meta = json.loads((tmp_path / "sweep.csv.meta.json").read_text(encoding="utf-8"))
        assert meta["tool"] == "dissipcool"
        assert meta["command"] == "sweep"
        assert meta["rows"] == 2
        assert meta["axis1"]["name"] == "g0as"
        assert meta["axis2"] is None
        assert meta["csv"] == str(out_path)
        assert meta["quad"]["rel_tol"] == 1e-8

    def test_two_axis_order_is_axis1_outer(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.csv"
        code, _, _ = _run(
            capsys,
            ["sweep", "--preset", "fig6", "--set", "sweep.axis1.count=2",
             "--set", "sweep.axis2.count=2",
             "--set", "sweep.outputs=['stability']",
             "--out", str(out_path), "--jobs", "1"],
        )
        assert code == 0
        header, rows = _read_csv(str(out_path))
        g1 = [r[header.index("g1as")] for r in rows]
        dlt = [r[header.index("delta")] for r in rows]
        assert g1 == ["0.25", "0.25", "0.45", "0.45"]
        assert dlt == ["0.3", "0.5", "0.3", "0.5"]

    def test_byte_identical_across_worker_counts(self, capsys, tmp_path):
        argv = ["sweep", "--preset", "fig5", "--set", "sweep.axis1.count=3",
                "--set", "sweep.axis1.max=0.1"]
        serial = tmp_path / "serial.csv"
        parallel = tmp_path / "parallel.csv"
        assert cli.main(argv + ["--out", str(serial), "--jobs", "1"]) == 0
        assert cli.main(argv + ["--out", str(parallel), "--jobs", "2"]) == 0
        capsys.readouterr()
        assert serial.read_bytes() == parallel.read_bytes()

    def test_missing_axis_is_config_error(self, capsys, tmp_path):
        code, _, err = _run(
            capsys, ["sweep", "--preset", "fig2", "--out", str(tmp_path / "s.csv")]
        )
        assert code == 2
        assert "sweep needs sweep.axis1" in err

    def test_unknown_axis_parameter(self, capsys, tmp_path):
        code, _, err = _run(
            capsys,
            ["sweep", "--preset", "fig5", "--set", "sweep.axis1.name=bogus",
             "--out", str(tmp_path / "s.csv")],
        )
        assert code == 2
        assert "not a parameter" in err

    def test_single_point_axis_rejected(self, capsys, tmp_path):
        code, _, err = _run(
            capsys,
            ["sweep", "--preset", "fig5", "--set", "sweep.axis1.count=1",
             "--out", str(tmp_path / "s.csv")],
        )
        assert code == 2
        assert "count >= 2" in err


class TestConfigLayering:
    def test_file_overrides_preset(self, capsys, tmp_path):
        cfg = tmp_path / "run.toml"
        cfg.write_text('preset = "fig2"\n[params]\ndelta = 0.41\n', encoding="utf-8")
        code, out, _ = _run(capsys, ["cool", "--config", str(cfg)])
        assert code == 0
        record = _cool_record(out)
        assert record["omega0"] == "0.7"  # from the preset
        assert record["delta"] == "0.41"  # overridden by the file

    def test_flag_overrides_file(self, capsys, tmp_path):
        cfg = tmp_path / "run.toml"
        cfg.write_text('preset = "fig2"\n[params]\ndelta = 0.41\n', encoding="utf-8")
        code, out, _ = _run(capsys, ["cool", "--config", str(cfg), "--set", "delta=0.42"])
        assert code == 0
        assert _cool_record(out)["delta"] == "0.42"

    def test_preset_flag_overrides_file_preset(self, capsys, tmp_path):
        cfg = tmp_path / "run.toml"
        cfg.write_text('preset = "fig2"\n[params]\ndelta = 0.41\n', encoding="utf-8")
        code, out, _ = _run(capsys, ["cool", "--config", str(cfg), "--preset", "fig3"])
        assert code == 0
        record = _cool_record(out)
        assert record["omega0"] == "0.76"  # fig3 base
        assert record["delta"] == "0.41"  # file still wins over preset values

    def test_unknown_preset(self, capsys):
        code, _, err = _run(capsys, ["cool", "--preset", "fig99"])
        assert code == 2
        assert "fig99" in err

    def test_malformed_set_flag(self, capsys):
        code, _, err = _run(capsys, ["cool", "--preset", "fig2", "--set", "delta"])
        assert code == 2
        assert "--set expects key=value" in err

    def test_unknown_parameter_name(self, capsys):
        code, _, err = _run(capsys, ["cool", "--preset", "fig2", "--set", "detuning=0.5"])
        assert code == 2
        assert "unknown parameter name(s): detuning" in err

    def test_unreadable_config_file(self, capsys, tmp_path):
        code, _, err = _run(capsys, ["cool", "--config", str(tmp_path / "missing.toml")])
        assert code == 2
        assert "cannot read config file" in err

    def test_invalid_toml(self, capsys, tmp_path):
        cfg = tmp_path / "run.toml"
        cfg.write_text("params = [broken\n", encoding="utf-8")
        code, _, err = _run(capsys, ["cool", "--config", str(cfg)])
        assert code == 2
        assert "not valid TOML" in err

    def test_quad_tol_flag(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.csv"
        _run(
            capsys,
            ["sweep", "--preset", "fig5", "--set", "sweep.axis1.count=2",
             "--set", "sweep.axis1.max=0.05", "--quad-tol", "1e-6",
             "--out", str(out_path), "--jobs", "1"],
        )
        meta = json.loads((tmp_path / "sweep.csv.meta.json").read_text(encoding="utf-8"))
        assert meta["quad"]["rel_tol"] == 1e-6
