"""Command-line front end: tabulate fields onto grids and export CSV or JSON.

Every command is deterministic: the same configuration produces byte-identical
output (the library has no hidden randomness, and no timestamps are written).
CSV starts with ``#``-prefixed metadata lines echoing the resolved
configuration and the units of each column; pole and node samples serialize
with an empty value and a tag, never as fake numbers.

Configuration precedence: command-line flags beat a ``--config`` key=value
file, which beats the ``THETAWELL_TOL`` environment variable, which beats the
built-in defaults.

Exit codes: 0 success, 1 invalid configuration, 2 truncation overflow,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, fields

import numpy as np

from .density import averaged_density, density, period
from .numerics import DEFAULT_TRUNCATION, FieldSample, FieldTag, Truncation, TruncationOverflowError
from .phase_space import DENSITY_FLOOR, moments, velocity_field, wigner_comb
from .thermo import entropy, gibbs_params, mean_energy_gibbs
from .verification import run_all_checks
from .wavefunction import QuantumState, SystemParams

__all__ = ["JobConfig", "run", "main"]

_COMMANDS = ("density", "averaged-density", "velocity", "wigner", "energy", "thermo", "verify")

_ENV_TOL = "THETAWELL_TOL"


class ConfigError(ValueError):
    """Invalid configuration; maps to exit code 1."""


@dataclass(frozen=True)
class JobConfig:
    """Fully resolved description of one CLI job."""

    command: str
    mu: int = 1
    mu_hi: int | None = None  # inclusive upper end of a mu range (thermo sweeps)
    beta: float = 0.1
    beta_sweep: tuple[float, float, int] | None = None  # (start, stop, count)
    grid_x: int = 64
    grid_t: int = 16
    t_span: float = 1.0  # time window in multiples of the period
    m: float = 1.0
    l: float = 1.0
    hbar: float = 1.0
    tol: float = DEFAULT_TRUNCATION.tol
    out_path: str | None = None
    format: str = "csv"

    def validate(self) -> None:
        if self.command not in _COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.mu < 1:
            raise ConfigError("mu must be a positive integer")
        if self.mu_hi is not None:
            if self.command != "thermo":
                raise ConfigError("a mu range is only meaningful for the thermo command")
            if self.mu_hi < self.mu:
                raise ConfigError("mu range upper end must be >= its lower end")
        if self.beta_sweep is not None:
            if self.command != "thermo":
                raise ConfigError("--beta-sweep is only meaningful for the thermo command")
            start, stop, count = self.beta_sweep
            if not (0.0 < start <= stop) or count < 2:
                raise ConfigError("beta sweep needs 0 < start <= stop and count >= 2")
        if not self.beta > 0.0:
            raise ConfigError("beta must be positive")
        if self.grid_x < 2 or self.grid_t < 2:
            raise ConfigError("grid sizes must be at least 2")
        if not self.t_span > 0.0:
            raise ConfigError("t-span must be positive")
        if not (0.0 < self.tol <= 1e-4):
            raise ConfigError("tol must lie in (0, 1e-4]")
        if min(self.m, self.l, self.hbar) <= 0.0:
            raise ConfigError("m, l, hbar must be positive")
        if self.format not in ("csv", "json"):
            raise ConfigError(f"unknown format {self.format!r}")

    def system(self) -> SystemParams:
        return SystemParams(m=self.m, l=self.l, hbar=self.hbar)

    def truncation(self) -> Truncation:
        return Truncation(tol=self.tol, max_index=DEFAULT_TRUNCATION.max_index)


def _parse_mu(text: str) -> tuple[int, int | None]:
    """Parse '3' or an inclusive range '1..5'."""
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            return int(lo), int(hi)
        return int(lo), None
    except ValueError:
        raise ConfigError(f"cannot parse mu {text!r}") from None


def _parse_sweep(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"beta sweep must be start:stop:count, got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ConfigError(f"cannot parse beta sweep {text!r}") from None


def _read_config_file(path: str) -> dict[str, str]:
    """Flat key=value file; '#' starts a comment; blank lines ignored."""
    out: dict[str, str] = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                key, sep, value = line.partition("=")
                if not sep:
                    raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
                out[key.strip()] = value.strip()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    return out


_FILE_KEYS = {
    "mu": str,
    "beta": float,
    "beta_sweep": str,
    "grid_x": int,
    "grid_t": int,
    "t_span": float,
    "m": float,
    "l": float,
    "hbar": float,
    "tol": float,
    "out": str,
    "format": str,
}


def _build_config(args: argparse.Namespace) -> JobConfig:
    """Merge defaults, environment, config file, and flags into one JobConfig."""
    merged: dict[str, object] = {"command": args.command}

    env_tol = os.environ.get(_ENV_TOL)
    if env_tol is not None:
        try:
            merged["tol"] = float(env_tol)
        except ValueError:
            raise ConfigError(f"{_ENV_TOL} must be a float, got {env_tol!r}") from None

    if getattr(args, "config", None):
        for key, raw in _read_config_file(args.config).items():
            if key not in _FILE_KEYS:
                raise ConfigError(f"unknown config file key {key!r}")
            try:
                value: object = _FILE_KEYS[key](raw)
            except ValueError:
                raise ConfigError(f"config file value for {key!r} is invalid: {raw!r}") from None
            if key == "mu":
                merged["mu"], merged["mu_hi"] = _parse_mu(str(value))
            elif key == "beta_sweep":
                merged["beta_sweep"] = _parse_sweep(str(value))
            elif key == "out":
                merged["out_path"] = value
            else:
                merged[key] = value

    flag_map = {
        "beta": "beta",
        "grid_x": "grid_x",
        "grid_t": "grid_t",
        "t_span": "t_span",
        "m": "m",
        "l": "l",
        "hbar": "hbar",
        "tol": "tol",
        "out": "out_path",
        "format": "format",
    }
    for flag, field in flag_map.items():
        value = getattr(args, flag, None)
        if value is not None:
            merged[field] = value
    if getattr(args, "mu", None) is not None:
        merged["mu"], merged["mu_hi"] = _parse_mu(args.mu)
    if getattr(args, "beta_sweep", None) is not None:
        merged["beta_sweep"] = _parse_sweep(args.beta_sweep)

    allowed = {f.name for f in fields(JobConfig)}
    config = JobConfig(**{k: v for k, v in merged.items() if k in allowed})  # type: ignore[arg-type]
    config.validate()
    return config


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thetawell",
        description="Tabulate exact infinite-well fields and run the verification suite.",
        exit_on_error=False,
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name in _COMMANDS:
        p = sub.add_parser(name, exit_on_error=False)
        p.add_argument("--mu", help="quantum number, or an inclusive range like 1..5 (thermo)")
        p.add_argument("--beta", type=float)
        p.add_argument("--grid-x", dest="grid_x", type=int)
        p.add_argument("--grid-t", dest="grid_t", type=int)
        p.add_argument("--t-span", dest="t_span", type=float, help="time window in periods")
        p.add_argument("--m", type=float)
        p.add_argument("--l", type=float)
        p.add_argument("--hbar", type=float)
        p.add_argument("--tol", type=float, help="series truncation tolerance, in (0, 1e-4]")
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--format", choices=("csv", "json"))
        p.add_argument("--config", help="flat key=value configuration file")
        if name == "thermo":
            p.add_argument("--beta-sweep", dest="beta_sweep", help="start:stop:count")
    return parser


def _fmt(value: object) -> str:
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


def _meta_lines(config: JobConfig, sys_params: SystemParams, columns: list[str], units: dict[str, str]) -> list[str]:
    lines = [f"# thetawell {config.command}"]
    echo: list[tuple[str, object]] = [
        ("mu", config.mu if config.mu_hi is None else f"{config.mu}..{config.mu_hi}"),
        ("beta", config.beta),
    ]
    if config.beta_sweep is not None:
        start, stop, count = config.beta_sweep
        echo.append(("beta_sweep", f"{_fmt(start)}:{_fmt(stop)}:{count}"))
    if config.command not in ("thermo", "verify"):
        echo += [("grid_x", config.grid_x), ("grid_t", config.grid_t), ("t_span", config.t_span)]
    echo += [("m", sys_params.m), ("l", sys_params.l), ("hbar", sys_params.hbar), ("tol", config.tol)]
    lines += [f"# {key} = {_fmt(value)}" for key, value in echo]
    lines.append("# units: " + ", ".join(f"{c} [{units[c]}]" for c in columns if c in units))
    return lines


def _emit(config: JobConfig, columns: list[str], rows: list[dict[str, object]], meta: list[str]) -> str:
    if config.format == "json":
        return json.dumps(rows, indent=1)
    out = list(meta)
    out.append(",".join(columns))
    for row in rows:
        out.append(",".join("" if row[c] is None else _fmt(row[c]) for c in columns))
    return "\n".join(out) + "\n"


def _sample_cell(value: FieldSample) -> tuple[float | None, str]:
    if value.is_finite:
        return float(value.value), str(value.tag)
    return None, str(value.tag)


def _clamp_density(value: float, sys_params: SystemParams) -> float:
    # tiny negative truncation residue is clamped to zero in output only
    if -(DENSITY_FLOOR / sys_params.l) < value < 0.0:
        return 0.0
    return value


def _grids(config: JobConfig, sys_params: SystemParams) -> tuple[np.ndarray, np.ndarray]:
    state = QuantumState(config.mu, config.beta)
    t_mu = period(state, sys_params)
    xs = np.linspace(0.0, sys_params.l, config.grid_x)
    ts = np.linspace(0.0, config.t_span * t_mu, config.grid_t)
    return xs, ts


def _field_rows(config: JobConfig) -> tuple[list[str], list[dict[str, object]], dict[str, str]]:
    sys_params = config.system()
    trunc = config.truncation()
    state = QuantumState(config.mu, config.beta)
    xs, ts = _grids(config, sys_params)
    columns = ["x", "t", "value", "tag"]
    rows: list[dict[str, object]] = []

    if config.command == "density":
        units = {"x": "length", "t": "time", "value": "1/length"}
        for t in ts:
            for x in xs:
                value = _clamp_density(density(float(x), float(t), state, sys_params, trunc), sys_params)
                rows.append({"x": float(x), "t": float(t), "value": value, "tag": "finite"})
    elif config.command == "averaged-density":
        units = {"x": "length", "value": "1/length"}
        for x in xs:
            value = _clamp_density(float(averaged_density(float(x), state, sys_params, trunc)), sys_params)
            rows.append({"x": float(x), "t": None, "value": value, "tag": "finite"})
    elif config.command == "velocity":
        units = {"x": "length", "t": "time", "value": "length/time"}
        for t in ts:
            for x in xs:
                value, tag = _sample_cell(velocity_field(float(x), float(t), state, sys_params, trunc))
                rows.append({"x": float(x), "t": float(t), "value": value, "tag": tag})
    elif config.command == "energy":
        units = {"x": "length", "t": "time", "value": "energy"}
        for t in ts:
            for x in xs:
                sample = moments(float(x), float(t), state, sys_params, trunc).energy_density
                value, tag = _sample_cell(sample)
                rows.append({"x": float(x), "t": float(t), "value": value, "tag": tag})
    else:  # wigner
        columns = ["x", "t", "s", "momentum", "weight"]
        units = {
            "x": "length",
            "t": "time",
            "momentum": "mass*length/time",
            "weight": "1/(length*action)",
        }
        for t in ts:
            for x in xs:
                comb = wigner_comb(float(x), float(t), state, sys_params, trunc)
                for atom in comb.atoms:
                    rows.append(
                        {
                            "x": float(x),
                            "t": float(t),
                            "s": int(atom.s),
                            "momentum": float(atom.momentum),
                            "weight": float(atom.weight),
                        }
                    )
    return columns, rows, units


def _thermo_rows(config: JobConfig) -> tuple[list[str], list[dict[str, object]], dict[str, str]]:
    sys_params = config.system()
    trunc = config.truncation()
    mus = range(config.mu, (config.mu_hi if config.mu_hi is not None else config.mu) + 1)
    if config.beta_sweep is None:
        betas = [config.beta]
    else:
        start, stop, count = config.beta_sweep
        betas = [float(b) for b in np.linspace(start, stop, count)]
    columns = ["mu", "beta", "mean_energy", "entropy"]
    units = {"mean_energy": "energy", "entropy": "k_B"}
    rows: list[dict[str, object]] = []
    for mu in mus:
        for beta in betas:
            state = QuantumState(mu, beta)
            gp = gibbs_params(state, sys_params)
            rows.append(
                {
                    "mu": int(mu),
                    "beta": float(beta),
                    "mean_energy": float(mean_energy_gibbs(gp, state, trunc)),
                    "entropy": float(entropy(gp, state, trunc)),
                }
            )
    return columns, rows, units


def _run_verify(config: JobConfig) -> tuple[str, int]:
    state = QuantumState(config.mu, config.beta)
    results = run_all_checks(state, config.system(), config.truncation())
    if config.format == "json":
        records = [
            {
                "check": r.name,
                "passed": r.passed,
                "measured": r.measured,
                "tolerance": r.tolerance,
                "detail": r.detail,
            }
            for r in results
        ]
        text = json.dumps(records, indent=1)
    else:
        lines = [f"# thetawell verify (mu={config.mu}, beta={_fmt(config.beta)})"]
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{status} {r.name:22s} measured={r.measured:.6e} tolerance={r.tolerance:.1e}")
            lines.append(f"     {r.detail}")
        text = "\n".join(lines) + "\n"
    return text, 0 if all(r.passed for r in results) else 3


def run(config: JobConfig) -> int:
    """Execute one job; returns the process exit code."""
    config.validate()
    if config.command == "verify":
        text, code = _run_verify(config)
    else:
        if config.command == "thermo":
            columns, rows, units = _thermo_rows(config)
        else:
            columns, rows, units = _field_rows(config)
        meta = _meta_lines(config, config.system(), columns, units)
        text = _emit(config, columns, rows, meta)
        code = 0
    if config.out_path is None:
        sys.stdout.write(text)
    else:
        with open(config.out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return code


def main(argv: list[str] | None = None) -> int:
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
        config = _build_config(args)
    except (ConfigError, argparse.ArgumentError) as exc:
        print(f"thetawell: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # argparse usage errors exit with its own code 2
        return 0 if exc.code in (0, None) else 1
    try:
        return run(config)
    except TruncationOverflowError as exc:
        print(f"thetawell: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"thetawell: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
