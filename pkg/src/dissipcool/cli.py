"""Command-line front end.

Subcommands::

    dissipcool spectrum --preset fig3 --out spectrum.csv
    dissipcool cool --preset fig4a
    dissipcool sweep --preset fig6 --jobs 8 --out sweep.csv
    dissipcool presets

Configuration is resolved in three layers with fixed precedence: ``--set``
flags override the ``--config`` TOML file, which overrides the
``--preset``.  A bare ``--set key=value`` targets the parameter set;
dotted keys reach the other sections (``grid.count=1201``,
``sweep.axis1.name=delta``, ``quad.rel_tol=1e-9``).

Exit codes: 0 success, 2 configuration error, 3 unstable working point in
single-point mode, 4 quadrature non-convergence.

CSV outputs are comma-separated UTF-8 with LF line endings and a mandatory
header; floats are written as their shortest round-trip decimal form, so
identical configurations give byte-identical files whatever ``--jobs`` is.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:  # 3.10
    import tomli as tomllib

from . import __version__, exact, qnoise
from .params import PARAM_NAMES, SystemParams, validate
from .presets import AxisSpec, get_preset
from .quadrature import QuadratureError, QuadratureSpec

__all__ = ["main", "RunRecord", "SweepSpec"]

_SWEEP_OUTPUTS = ("n0", "contributions", "stability", "qnoise_prediction")
_SWEEP_COLUMNS = PARAM_NAMES + (
    "stable",
    "n0",
    "n0_drive",
    "n0_local",
    "n0_ancilla",
    "n0_qnoise",
    "error",
)
_SPECTRUM_COLUMNS = ("omega", "gnn_full", "gnn_bare", "gnn_optical_part", "gnn_thermal_part")


class ConfigError(Exception):
    """Anything wrong with flags, files, presets, or derived settings."""


@dataclasses.dataclass(frozen=True)
class SweepSpec:
    """Validated sweep description: base point, one or two axes, outputs."""

    base: SystemParams
    axis1: AxisSpec
    axis2: AxisSpec | None
    outputs: tuple[str, ...]
    quad: QuadratureSpec


@dataclasses.dataclass(frozen=True)
class RunRecord:
    """One evaluated grid point: results or an error, never both."""

    params: SystemParams
    results: dict | None
    error: str = ""
    wall_time: float = 0.0

    def __post_init__(self):
        if (self.results is None) == (self.error == ""):
            raise ValueError("exactly one of results/error must be populated")


def _fmt(value) -> str:
    """Shortest round-trip decimal form; empty string for missing."""
    if value is None or value == "":
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return repr(float(value))


def _write_csv(path: str, header: tuple[str, ...], rows) -> None:
    import csv

    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


# -- configuration resolution -------------------------------------------------


def _parse_set_value(raw: str):
    try:
        return tomllib.loads(f"v = {raw}")["v"]
    except tomllib.TOMLDecodeError:
        return raw  # bare string


def _merge(base: dict, extra: dict) -> dict:
    for key, val in extra.items():
        if isinstance(val, dict) and isinstance(base.get(key), dict):
            _merge(base[key], val)
        else:
            base[key] = val
    return base


def _preset_config(name: str) -> dict:
    preset = get_preset(name)
    cfg: dict = {"params": dataclasses.asdict(preset.params)}
    lo, hi, count = preset.spectrum_grid
    cfg["grid"] = {"min": lo, "max": hi, "count": count}
    sweep: dict = {}
    for slot, axis in (("axis1", preset.axis1), ("axis2", preset.axis2)):
        if axis is not None:
            sweep[slot] = {"name": axis.name, "min": axis.lo, "max": axis.hi, "count": axis.count}
    if sweep:
        cfg["sweep"] = sweep
    return cfg


def _resolve_config(ns: argparse.Namespace) -> dict:
    file_cfg: dict = {}
    if ns.config:
        try:
            with open(ns.config, "rb") as fh:
                file_cfg = tomllib.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config file: {exc}") from exc
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"config file is not valid TOML: {exc}") from exc

    file_preset = file_cfg.pop("preset", None)
    preset_name = ns.preset or file_preset
    cfg: dict = {}
    if preset_name:
        try:
            cfg = _preset_config(str(preset_name))
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    _merge(cfg, file_cfg)

    for item in ns.sets:
        key, sep, raw = item.partition("=")
        if not sep or not key:
            raise ConfigError(f"--set expects key=value, got {item!r}")
        value = _parse_set_value(raw)
        parts = key.split(".")
        if len(parts) == 1:
            parts = ["params", parts[0]]
        node = cfg
        for part in parts[:-1]:
            node = node.setdefault(part, {})
            if not isinstance(node, dict):
                raise ConfigError(f"--set key {key!r} conflicts with a scalar setting")
        node[parts[-1]] = value

    if ns.quad_tol is not None:
        cfg.setdefault("quad", {})["rel_tol"] = ns.quad_tol
    return cfg


def _build_params(cfg: dict) -> SystemParams:
    raw = cfg.get("params", {})
    if not isinstance(raw, dict):
        raise ConfigError("params section must be a table")
    unknown = sorted(set(raw) - set(PARAM_NAMES))
    if unknown:
        raise ConfigError(f"unknown parameter name(s): {', '.join(unknown)}")
    try:
        params = SystemParams(**{k: float(v) for k, v in raw.items()})
    except TypeError as exc:
        raise ConfigError(f"incomplete parameter set: {exc}") from exc
    except (ValueError, OverflowError) as exc:
        raise ConfigError(f"non-numeric parameter value: {exc}") from exc
    report = validate(params)
    if not report.ok:
        raise ConfigError("invalid parameters: " + "; ".join(report.errors))
    return params


def _build_quad(cfg: dict) -> QuadratureSpec:
    raw = cfg.get("quad", {})
    allowed = {f.name for f in dataclasses.fields(QuadratureSpec)}
    unknown = sorted(set(raw) - allowed)
    if unknown:
        raise ConfigError(f"unknown quadrature setting(s): {', '.join(unknown)}")
    try:
        return QuadratureSpec(**raw)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad quadrature settings: {exc}") from exc


def _build_axis(raw: dict, slot: str) -> AxisSpec:
    for field in ("name", "min", "max", "count"):
        if field not in raw:
            raise ConfigError(f"sweep.{slot} is missing {field!r}")
    name = str(raw["name"])
    if name not in PARAM_NAMES:
        raise ConfigError(f"sweep.{slot}.name {name!r} is not a parameter (choose from {', '.join(PARAM_NAMES)})")
    count = int(raw["count"])
    lo, hi = float(raw["min"]), float(raw["max"])
    if count < 2:
        raise ConfigError(f"sweep.{slot}: count >= 2 required")
    if not lo < hi:
        raise ConfigError(f"sweep.{slot}: min < max required")
    return AxisSpec(name, lo, hi, count)


def _build_sweep_spec(cfg: dict) -> SweepSpec:
    base = _build_params(cfg)
    sweep = cfg.get("sweep", {})
    if "axis1" not in sweep:
        raise ConfigError("sweep needs sweep.axis1 (name/min/max/count)")
    axis1 = _build_axis(sweep["axis1"], "axis1")
    axis2 = _build_axis(sweep["axis2"], "axis2") if "axis2" in sweep else None
    if axis2 is not None and axis2.name == axis1.name:
        raise ConfigError("sweep axes must target different parameters")
    outputs_raw = sweep.get("outputs", list(_SWEEP_OUTPUTS))
    outputs = tuple(str(o) for o in outputs_raw)
    unknown = sorted(set(outputs) - set(_SWEEP_OUTPUTS))
    if unknown:
        raise ConfigError(f"unknown sweep output(s): {', '.join(unknown)}")
    return SweepSpec(base=base, axis1=axis1, axis2=axis2, outputs=outputs, quad=_build_quad(cfg))


# -- spectrum -----------------------------------------------------------------


def _cmd_spectrum(ns: argparse.Namespace) -> int:
    cfg = _resolve_config(ns)
    params = _build_params(cfg)
    grid_cfg = cfg.get("grid", {})
    try:
        lo = float(grid_cfg.get("min", -1.2))
        hi = float(grid_cfg.get("max", 1.2))
        count = int(grid_cfg.get("count", 2401))
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad grid settings: {exc}") from exc
    if count < 2:
        raise ConfigError("spectrum grid: count >= 2 required")
    if not lo < hi:
        raise ConfigError("spectrum grid: min < max required")
    omega = np.linspace(lo, hi, count)
    full = qnoise.full_nn_spectrum(params, omega)
    bare = qnoise.bare_nn_spectrum(params, omega)
    optical, thermal = qnoise.source_decomposition(params, omega)
    out = ns.out or "spectrum.csv"
    rows = (
        [_fmt(w), _fmt(f), _fmt(b), _fmt(o), _fmt(t)]
        for w, f, b, o, t in zip(omega, full, bare, optical, thermal)
    )
    _write_csv(out, _SPECTRUM_COLUMNS, rows)
    print(f"wrote {count} rows to {out}")
    return 0


# -- cool ---------------------------------------------------------------------


def _cmd_cool(ns: argparse.Namespace) -> int:
    cfg = _resolve_config(ns)
    params = _build_params(cfg)
    quad = _build_quad(cfg)

    record: dict = {name: getattr(params, name) for name in PARAM_NAMES}
    drift = exact.build_drift(params)
    stable, margin = exact.stability(drift)
    record["stability_margin"] = margin
    record["stable"] = stable
    if not stable:
        record["status"] = "unstable"
        _emit_cool(record, ns.out)
        return 3

    try:
        cooling = exact.exact_n0(params, quad=quad)
    except QuadratureError as exc:
        record["status"] = "non-convergent"
        record["error"] = str(exc)
        _emit_cool(record, ns.out)
        return 4
    lyap = exact.lyapunov_n0(params)
    record["status"] = "ok"
    record["n0"] = cooling.n0
    record["n0_drive"] = cooling.n0_drive
    record["n0_local"] = cooling.n0_local
    record["n0_ancilla"] = cooling.n0_ancilla
    record["integration_error_estimate"] = cooling.integration_error_estimate
    record["n0_lyapunov"] = lyap.n0
    scale = max(abs(cooling.n0), abs(lyap.n0), 1e-300)
    record["lyapunov_rel_dev"] = abs(cooling.n0 - lyap.n0) / scale

    try:
        pred = qnoise.qnoise_cooling_prediction(params)
    except ValueError as exc:
        record["qnoise_error"] = str(exc)
    else:
        record["qnoise_n_opt0"] = pred.n_opt0
        record["qnoise_gamma_opt0"] = pred.gamma_opt0
        record["qnoise_n0"] = pred.n0_pred
        record["qnoise_rel_dev"] = abs(cooling.n0 - pred.n0_pred) / max(abs(cooling.n0), 1e-300)
    _emit_cool(record, ns.out)
    return 0


def _emit_cool(record: dict, out: str | None) -> None:
    for key, value in record.items():
        if isinstance(value, float):
            value = repr(value)
        print(f"{key} = {value}")
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            json.dump(record, fh, indent=2, sort_keys=True)
            fh.write("\n")


# -- sweep --------------------------------------------------------------------


def _axis_values(axis: AxisSpec) -> np.ndarray:
    return np.linspace(axis.lo, axis.hi, axis.count)


def _evaluate_point(payload) -> tuple[int, dict]:
    index, param_values, quad_values, outputs = payload
    params = SystemParams(**param_values)
    quad = QuadratureSpec(**quad_values)
    row = {key: "" for key in _SWEEP_COLUMNS}
    for name in PARAM_NAMES:
        row[name] = _fmt(getattr(params, name))

    report = validate(params)
    if not report.ok:
        row["error"] = "invalid parameters: " + "; ".join(report.errors)
        return index, row

    drift = exact.build_drift(params)
    stable, _ = exact.stability(drift)
    if "stability" in outputs:
        row["stable"] = _fmt(stable)
    if not stable:
        return index, row  # masked point: empty numerics, empty error

    if "n0" in outputs or "contributions" in outputs:
        try:
            cooling = exact.exact_n0(params, quad=quad)
        except QuadratureError as exc:
            row["error"] = f"quadrature did not converge: {exc}"
            return index, row
        if "n0" in outputs:
            row["n0"] = _fmt(cooling.n0)
        if "contributions" in outputs:
            row["n0_drive"] = _fmt(cooling.n0_drive)
            row["n0_local"] = _fmt(cooling.n0_local)
            row["n0_ancilla"] = _fmt(cooling.n0_ancilla)

    if "qnoise_prediction" in outputs:
        try:
            row["n0_qnoise"] = _fmt(qnoise.qnoise_cooling_prediction(params).n0_pred)
        except ValueError:
            pass  # prediction infeasible here; not a point failure
    return index, row


def _cmd_sweep(ns: argparse.Namespace) -> int:
    cfg = _resolve_config(ns)
    spec = _build_sweep_spec(cfg)
    started = time.monotonic()

    axis1_vals = _axis_values(spec.axis1)
    axis2_vals = _axis_values(spec.axis2) if spec.axis2 is not None else None
    quad_values = dataclasses.asdict(spec.quad)
    base_values = dataclasses.asdict(spec.base)

    payloads = []
    index = 0
    for v1 in axis1_vals:
        points2 = axis2_vals if axis2_vals is not None else [None]
        for v2 in points2:
            values = dict(base_values)
            values[spec.axis1.name] = float(v1)
            if spec.axis2 is not None:
                values[spec.axis2.name] = float(v2)
            payloads.append((index, values, quad_values, spec.outputs))
            index += 1

    jobs = max(1, ns.jobs)
    rows: list[dict | None] = [None] * len(payloads)
    if jobs == 1:
        for payload in payloads:
            idx, row = _evaluate_point(payload)
            rows[idx] = row
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, len(payloads) // (jobs * 8))
            for idx, row in pool.map(_evaluate_point, payloads, chunksize=chunk):
                rows[idx] = row

    out = ns.out or "sweep.csv"
    _write_csv(out, _SWEEP_COLUMNS, ([row[col] for col in _SWEEP_COLUMNS] for row in rows))

    meta = {
        "tool": "dissipcool",
        "version": __version__,
        "command": "sweep",
        "base_params": base_values,
        "axis1": dataclasses.asdict(spec.axis1),
        "axis2": dataclasses.asdict(spec.axis2) if spec.axis2 is not None else None,
        "outputs": list(spec.outputs),
        "quad": quad_values,
        "jobs": jobs,
        "rows": len(payloads),
        "wall_time_s": time.monotonic() - started,
        "csv": out,
    }
    with open(out + ".meta.json", "w", encoding="utf-8") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {len(payloads)} rows to {out}")
    return 0


# -- presets ------------------------------------------------------------------


def _cmd_presets(_ns: argparse.Namespace) -> int:
    from .presets import PRESETS

    for name in sorted(PRESETS):
        preset = PRESETS[name]
        print(f"{name}: {preset.description}")
        for field in PARAM_NAMES:
            print(f"  {field} = {repr(getattr(preset.params, field))}")
        lo, hi, count = preset.spectrum_grid
        print(f"  spectrum_grid = [{lo!r}, {hi!r}] x {count}")
        for slot, axis in (("axis1", preset.axis1), ("axis2", preset.axis2)):
            if axis is not None:
                print(f"  {slot} = {axis.name} in [{axis.lo!r}, {axis.hi!r}] x {axis.count}")
        print()
    return 0


# -- entry point ---------------------------------------------------------------


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--preset", help="start from a built-in parameter set (see 'presets')")
    parser.add_argument("--config", help="TOML configuration file")
    parser.add_argument(
        "--set",
        action="append",
        dest="sets",
        default=[],
        metavar="K=V",
        help="override one setting; bare keys target parameters, dotted keys other sections",
    )
    parser.add_argument("--out", help="output path (CSV or JSON depending on the command)")
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes for sweeps")
    parser.add_argument("--quad-tol", type=float, dest="quad_tol", help="relative quadrature tolerance")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dissipcool",
        description="Cooling calculator for a dispersively coupled oscillator "
        "assisted by a dissipatively coupled ancilla.",
    )
    parser.add_argument("--version", action="version", version=f"dissipcool {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    handlers = {
        "spectrum": ("write the photon-number fluctuation spectrum as CSV", _cmd_spectrum),
        "cool": ("evaluate one working point: stability, phonon number, cross-checks", _cmd_cool),
        "sweep": ("run a 1-D or 2-D parameter sweep and write CSV + metadata", _cmd_sweep),
        "presets": ("list built-in parameter sets", _cmd_presets),
    }
    for name, (help_text, handler) in handlers.items():
        sp = sub.add_parser(name, help=help_text)
        if name != "presets":
            _add_common_flags(sp)
        sp.set_defaults(handler=handler)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return ns.handler(ns)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
