"""Command line interface.

Three subcommands:

- ``rates``: every channel at one trap frequency.
- ``sweep``: channels over a frequency grid, CSV/JSON/table.
- ``reproduce``: recompute one of the bundled reference tables and compare
  row by row at a tolerance.

Options may come from a flat ``key = value`` config file (``--config``);
explicit command line flags win over the file. Exit codes: 0 success, 1 a
channel computation or a reproduction comparison failed, 2 usage or config
errors.
"""
from __future__ import annotations

import argparse
import io
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from .displacement import KernelMode, gamma_displacement
from .modulation import gamma_modulation
from .numerics import ConvergenceError, QuadratureSpec
from .photon import CavityParams
from .reference import DISPLACEMENT_TABLE, MODULATION_TABLE, PURCELL_T1_QUOTED
from .report import CHANNEL_CAVITY, CoherenceReport, build_report
from .surface import LateralTrap

ENV_OUTPUT_DIR = "NECOH_OUTPUT_DIR"

# formatted output carries 13 significant digits but the physics tolerances
# are percent-level; 1e-7 keeps the sweep comfortably inside its time budget
CLI_SPEC = QuadratureSpec(rel_tol=1e-7, abs_tol=0.0, max_subdivisions=400)

_FORMATS = ("table", "csv", "json")
_KERNELS = tuple(m.value for m in KernelMode)

# config keys with their parsers; mirrors the CLI flags
_CONFIG_SCHEMA = {
    "f0_ghz": float,
    "format": str,
    "kernel": str,
    "temperature_mk": float,
    "cavity": str,
    "from_ghz": float,
    "to_ghz": float,
    "points": int,
    "tol": float,
    "table": int,
    "output": str,
    "output_dir": str,
}


class ConfigError(Exception):
    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(message)
        self.line = line


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    f0_ghz: float = 6.4
    format: str = "table"
    kernel: str = "approx"
    temperature_mk: float = 10.0
    cavity: str | None = None
    from_ghz: float = 1.0
    to_ghz: float = 10.0
    points: int = 10
    tol: float = 0.03
    table: int = 1
    output: str | None = None
    output_dir: str | None = None

    def validate(self) -> None:
        if self.format not in _FORMATS:
            raise UsageError(f"format must be one of {', '.join(_FORMATS)}: got {self.format!r}")
        if self.kernel not in _KERNELS:
            raise UsageError(f"kernel must be one of {', '.join(_KERNELS)}: got {self.kernel!r}")
        if self.f0_ghz <= 0.0:
            raise UsageError("f0-ghz must be positive")
        if self.temperature_mk < 0.0:
            raise UsageError("temperature-mk must be >= 0")
        if self.points < 1:
            raise UsageError("points must be >= 1")
        if self.points > 1 and not self.from_ghz < self.to_ghz:
            raise UsageError("sweep needs from < to")
        if self.from_ghz <= 0.0:
            raise UsageError("sweep frequencies must be positive")
        if not 0.0 < self.tol < 1.0:
            raise UsageError("tol must be in (0, 1)")
        if self.table not in (1, 2):
            raise UsageError("table must be 1 or 2")


def parse_config_file(path: str) -> dict:
    """Flat key = value file; '#' comments; unknown keys are errors."""
    values: dict = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected key = value, got {raw.strip()!r}", line=lineno)
        key, _, val = line.partition("=")
        key = key.strip()
        val = val.strip()
        if key not in _CONFIG_SCHEMA:
            raise ConfigError(f"unknown key {key!r}", line=lineno)
        if key in values:
            raise ConfigError(f"duplicate key {key!r}", line=lineno)
        caster = _CONFIG_SCHEMA[key]
        try:
            values[key] = caster(val)
        except ValueError as exc:
            raise ConfigError(f"bad value for {key!r}: {val!r}", line=lineno) from exc
    return values


# longest suffixes first: "5mhz" must not strip as bare "hz"
_UNIT_HZ = {"ghz": 1e3, "mhz": 1.0, "khz": 1e-3, "hz": 1e-6}


def parse_cavity(spec: str) -> CavityParams:
    """Parse 'g=5MHz,kappa=0.5MHz,detuning=500MHz' into CavityParams."""
    fields: dict = {}
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise UsageError(f"cavity spec needs name=value pairs, got {part!r}")
        name, _, val = part.partition("=")
        name = name.strip().lower()
        if name not in ("g", "kappa", "detuning"):
            raise UsageError(f"unknown cavity field {name!r}")
        if name in fields:
            raise UsageError(f"duplicate cavity field {name!r}")
        val = val.strip().lower()
        scale = 1.0  # bare numbers are MHz
        for suffix, s in _UNIT_HZ.items():
            if val.endswith(suffix):
                val = val[: -len(suffix)]
                scale = s
                break
        try:
            fields[name] = float(val) * scale
        except ValueError as exc:
            raise UsageError(f"bad cavity value {part!r}") from exc
    missing = {"g", "kappa", "detuning"} - set(fields)
    if missing:
        raise UsageError(f"cavity spec missing {', '.join(sorted(missing))}")
    try:
        return CavityParams.from_mhz(fields["g"], fields["kappa"], fields["detuning"])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="necoh",
        description="Relaxation and coherence times of an electron's lateral "
                    "motional states on solid neon.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", help="flat key=value config file")
        p.add_argument("--format", choices=_FORMATS, default=None,
                       help="output format (default table)")
        p.add_argument("--kernel", choices=_KERNELS, default=None,
                       help="displacement vertical kernel (default approx)")
        p.add_argument("--temperature-mk", type=float, default=None,
                       help="bath temperature in mK (default 10)")
        p.add_argument("--cavity", default=None,
                       help="cavity channel, e.g. g=5MHz,kappa=0.5MHz,detuning=500MHz")

    p_rates = sub.add_parser("rates", help="all channels at one frequency")
    common(p_rates)
    p_rates.add_argument("--f0-ghz", type=float, default=None,
                         help="trap frequency in GHz (default 6.4)")

    p_sweep = sub.add_parser("sweep", help="channels over a frequency grid")
    common(p_sweep)
    p_sweep.add_argument("--from", dest="from_ghz", type=float, default=None,
                         help="grid start in GHz (default 1)")
    p_sweep.add_argument("--to", dest="to_ghz", type=float, default=None,
                         help="grid end in GHz (default 10)")
    p_sweep.add_argument("--points", type=int, default=None,
                         help="number of grid points (default 10)")
    p_sweep.add_argument("--output", default=None,
                         help="write to this file instead of stdout "
                              f"(relative paths resolve under ${ENV_OUTPUT_DIR} if set)")

    p_rep = sub.add_parser("reproduce", help="recompute a bundled reference table")
    common(p_rep)
    p_rep.add_argument("--table", type=int, choices=(1, 2), default=None,
                       help="1 = displacement lifetimes, 2 = modulation lifetimes")
    p_rep.add_argument("--tol", type=float, default=None,
                       help="per-row relative tolerance (default 0.03)")

    return parser


def _merge_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    if getattr(args, "config", None):
        for key, val in parse_config_file(args.config).items():
            setattr(cfg, key, val)
    for key in _CONFIG_SCHEMA:
        val = getattr(args, key, None)
        if val is not None:
            setattr(cfg, key, val)
    cfg.validate()
    return cfg


def _fmt9(x: float) -> str:
    return f"{x:.8e}"


def _fmt13(x: float) -> str:
    return f"{x:.12e}"


def _report_row_values(rep: CoherenceReport, with_cavity: bool) -> list[float]:
    names = ["vacuum", "displacement", "modulation"] + (["cavity"] if with_cavity else [])
    vals: list[float] = [rep.f0_ghz]
    for name in names:
        ch = rep.channel(name)
        vals.extend((ch.gamma, ch.t1, ch.t2))
    return vals


_SWEEP_COLUMNS = ("f0_ghz",
                  "gamma_vac", "t1_vac", "t2_vac",
                  "gamma_dis", "t1_dis", "t2_dis",
                  "gamma_mod", "t1_mod", "t2_mod")
_CAVITY_COLUMNS = ("gamma_cav", "t1_cav", "t2_cav")


def render_sweep_csv(reports: list[CoherenceReport], with_cavity: bool) -> str:
    cols = _SWEEP_COLUMNS + (_CAVITY_COLUMNS if with_cavity else ())
    out = io.StringIO()
    out.write(",".join(cols) + "\r\n")
    for rep in reports:
        out.write(",".join(_fmt13(v) for v in _report_row_values(rep, with_cavity)) + "\r\n")
    return out.getvalue()


def render_sweep_json(reports: list[CoherenceReport], with_cavity: bool) -> str:
    cols = _SWEEP_COLUMNS + (_CAVITY_COLUMNS if with_cavity else ())
    rows = []
    for rep in reports:
        vals = _report_row_values(rep, with_cavity)
        rows.append({c: float(_fmt13(v)) for c, v in zip(cols, vals)})
    return json.dumps({"rows": rows}, indent=2) + "\n"


def render_sweep_table(reports: list[CoherenceReport], with_cavity: bool) -> str:
    cols = _SWEEP_COLUMNS + (_CAVITY_COLUMNS if with_cavity else ())
    widths = [max(len(c), 15) for c in cols]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
    for rep in reports:
        vals = _report_row_values(rep, with_cavity)
        lines.append("  ".join(_fmt9(v).ljust(w) for v, w in zip(vals, widths)))
    return "\n".join(lines) + "\n"


def _cavity_note(rep: CoherenceReport) -> str | None:
    try:
        cav = rep.channel(CHANNEL_CAVITY)
    except KeyError:
        return None
    return (f"note: cavity T1 is the closed-form dispersive value; the bundled "
            f"reference lifetime {PURCELL_T1_QUOTED:g} s sits "
            f"{PURCELL_T1_QUOTED / cav.t1:.1f}x above it (known discrepancy)")


def render_rates_table(rep: CoherenceReport) -> str:
    lines = [
        f"f0 = {rep.f0_ghz:g} GHz, T = {rep.temperature_mk:g} mK",
        "",
        f"{'channel':<14}{'gamma_per_s':>17}{'t1_s':>17}{'t2_s':>17}",
    ]
    for ch in rep.channels:
        lines.append(f"{ch.name:<14}{_fmt9(ch.gamma):>17}{_fmt9(ch.t1):>17}{_fmt9(ch.t2):>17}")
    lines.append(f"{'total':<14}{_fmt9(rep.total_gamma):>17}{_fmt9(rep.total_t1):>17}"
                 f"{_fmt9(rep.total_t2):>17}")
    lines.append("")
    lines.append(f"gamma_phi = {_fmt9(rep.gamma_phi)} 1/s (one-phonon dephasing)")
    lines.append(f"thermal occupation = {_fmt9(rep.occupation)}")
    lines.append("")
    lines.append(f"{'substrate':<12}{'k_phonon_per_m':>17}{'k_electron_per_m':>18}"
                 f"{'ratio':>9}  suppressed")
    for sub in rep.substrates:
        lines.append(f"{sub.material:<12}{_fmt9(sub.phonon_wavenumber * 100.0):>17}"
                     f"{_fmt9(sub.electron_wavenumber * 100.0):>18}"
                     f"{sub.wavenumber_ratio:>9.3f}  {'yes' if sub.suppressed else 'no'}")
    note = _cavity_note(rep)
    if note is not None:
        lines.extend(("", note))
    return "\n".join(lines) + "\n"


def render_rates_csv(rep: CoherenceReport) -> str:
    out = io.StringIO()
    out.write("channel,gamma_per_s,t1_s,t2_s\r\n")
    for ch in rep.channels:
        out.write(f"{ch.name},{_fmt13(ch.gamma)},{_fmt13(ch.t1)},{_fmt13(ch.t2)}\r\n")
    return out.getvalue()


def render_rates_json(rep: CoherenceReport) -> str:
    obj = {
        "f0_ghz": rep.f0_ghz,
        "temperature_mk": rep.temperature_mk,
        "gamma_phi_per_s": rep.gamma_phi,
        "thermal_occupation": rep.occupation,
        "channels": [
            {"name": ch.name, "gamma_per_s": float(_fmt13(ch.gamma)),
             "t1_s": float(_fmt13(ch.t1)), "t2_s": float(_fmt13(ch.t2))}
            for ch in rep.channels
        ],
        "substrates": [
            {"material": s.material,
             "phonon_wavenumber_per_m": float(_fmt13(s.phonon_wavenumber * 100.0)),
             "electron_wavenumber_per_m": float(_fmt13(s.electron_wavenumber * 100.0)),
             "wavenumber_ratio": float(_fmt13(s.wavenumber_ratio)),
             "suppressed": s.suppressed}
            for s in rep.substrates
        ],
    }
    note = _cavity_note(rep)
    if note is not None:
        obj["notes"] = [note]
    return json.dumps(obj, indent=2) + "\n"


def _resolve_output(cfg: RunConfig, name: str) -> str:
    if os.path.isabs(name):
        return name
    base = cfg.output_dir or os.environ.get(ENV_OUTPUT_DIR) or "."
    return os.path.join(base, name)


def cmd_rates(cfg: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    cavity = parse_cavity(cfg.cavity) if cfg.cavity else None
    rep = build_report(cfg.f0_ghz, temperature_mk=cfg.temperature_mk,
                       cavity=cavity, kernel=KernelMode(cfg.kernel), spec=CLI_SPEC)
    if cfg.format == "csv":
        out.write(render_rates_csv(rep))
    elif cfg.format == "json":
        out.write(render_rates_json(rep))
    else:
        out.write(render_rates_table(rep))
    return 0


def cmd_sweep(cfg: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    cavity = parse_cavity(cfg.cavity) if cfg.cavity else None
    if cfg.points == 1:
        grid = [cfg.from_ghz]
    else:
        grid = list(np.linspace(cfg.from_ghz, cfg.to_ghz, cfg.points))
    reports = [build_report(f0, temperature_mk=cfg.temperature_mk, cavity=cavity,
                            kernel=KernelMode(cfg.kernel), spec=CLI_SPEC)
               for f0 in grid]
    with_cavity = cavity is not None
    if cfg.format == "csv":
        text = render_sweep_csv(reports, with_cavity)
    elif cfg.format == "json":
        text = render_sweep_json(reports, with_cavity)
    else:
        text = render_sweep_table(reports, with_cavity)
    if cfg.output:
        path = _resolve_output(cfg, cfg.output)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        out.write(f"wrote {path}\n")
    else:
        out.write(text)
    return 0


def cmd_reproduce(cfg: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    table = DISPLACEMENT_TABLE if cfg.table == 1 else MODULATION_TABLE
    label = "displacement" if cfg.table == 1 else "modulation"
    out.write(f"reference table {cfg.table} ({label} channel), tolerance {cfg.tol:.1%}\n")
    out.write(f"{'f0_ghz':>7} {'t1_computed_s':>16} {'t1_reference_s':>16} "
              f"{'rel_err':>9} status\n")
    failures = 0
    for row in table:
        trap = LateralTrap.isotropic_ghz(row.f0_ghz)
        if cfg.table == 1:
            gam, _ = gamma_displacement(trap, mode=KernelMode(cfg.kernel), spec=CLI_SPEC)
        else:
            gam, _ = gamma_modulation(trap, spec=CLI_SPEC)
        t1 = 1.0 / gam
        rel = t1 / row.t1_s - 1.0
        ok = abs(rel) <= cfg.tol
        failures += 0 if ok else 1
        out.write(f"{row.f0_ghz:>7.2f} {_fmt9(t1):>16} {_fmt9(row.t1_s):>16} "
                  f"{rel:>+9.2%} {'PASS' if ok else 'FAIL'}\n")
    out.write(f"{len(table) - failures}/{len(table)} rows within {cfg.tol:.1%}\n")
    return 0 if failures == 0 else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _merge_config(args)
    except ConfigError as exc:
        where = f"line {exc.line}: " if exc.line is not None else ""
        print(f"config: {where}{exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.command == "rates":
            return cmd_rates(cfg)
        if args.command == "sweep":
            return cmd_sweep(cfg)
        return cmd_reproduce(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"error: quadrature did not converge: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
