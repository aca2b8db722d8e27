"""Command-line front end: figure data and quantifier sweeps as CSV or JSON.

Every run writes a provenance block (``#`` comment lines in CSV, a
``provenance`` object in JSON) with the subcommand, its parameters, the
numerical tolerances and the library version, followed by a deterministic
data section with 12 significant digits.

Exit codes: 0 success, 2 usage error, 3 numerical failure.

Output goes to ``--out`` if given, else to ``$LANDAU_WIGNER_OUTDIR/<name>.<fmt>``
when that variable is set, else to standard output.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from . import __version__, phase_space, specfun, spinor_wigner as sw, thermo
from . import infometrics as info
from .errors import (ConstructionError, DomainError, LandauWignerError, NumericalFailure,
                     PreconditionError, UnavailableResult)
from .infometrics import format_number

__all__ = ["RunConfig", "Table", "build_parser", "parse_range", "run", "main", "OUTDIR_ENV"]

OUTDIR_ENV = "LANDAU_WIGNER_OUTDIR"
EXIT_OK, EXIT_USAGE, EXIT_NUMERICAL = 0, 2, 3
FIG1_SIN2 = (0.0, 0.25, 0.5, 0.75)


class UsageError(Exception):
    """Invalid command-line parameters (exit status 2)."""


# ---------------------------------------------------------------------------
# data containers
# ---------------------------------------------------------------------------

@dataclass
class Table:
    """Tabular result: column names, rows and provenance entries."""

    columns: list[str]
    rows: list[list] = field(default_factory=list)
    tolerances: dict[str, str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def add(self, *values) -> None:
        if len(values) != len(self.columns):
            raise ValueError("row length does not match the columns")
        self.rows.append(list(values))


@dataclass(frozen=True)
class RunConfig:
    """A parsed invocation: subcommand, flag map and output target."""

    subcommand: str
    parameters: dict
    output: Path | None
    fmt: str = "csv"
    gnuplot: Path | None = None


def _cell(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format_number(value)


def _json_cell(value):
    if value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return int(value)
    v = float(value)
    if not math.isfinite(v):
        return format_number(v)
    return float(format_number(v))


def _param_text(value) -> str:
    if isinstance(value, (list, tuple)):
        return ",".join(_param_text(v) for v in value)
    if isinstance(value, float):
        return format_number(value)
    return str(value)


def render(config: RunConfig, table: Table) -> str:
    """Serialize ``table`` with its provenance block."""
    params = {k: _param_text(v) for k, v in sorted(config.parameters.items())}
    if config.fmt == "json":
        doc = {
            "provenance": {
                "program": "landau-wigner",
                "version": __version__,
                "subcommand": config.subcommand,
                "parameters": params,
                "tolerances": dict(sorted(table.tolerances.items())),
                "notes": table.notes,
            },
            "columns": table.columns,
            "rows": [[_json_cell(v) for v in row] for row in table.rows],
        }
        return json.dumps(doc, indent=1) + "\n"
    lines = [f"# landau-wigner {__version__}", f"# subcommand: {config.subcommand}"]
    lines += [f"# parameter {k} = {v}" for k, v in params.items()]
    lines += [f"# tolerance {k} = {v}" for k, v in sorted(table.tolerances.items())]
    lines += [f"# note: {n}" for n in table.notes]
    lines.append(",".join(table.columns))
    lines += [",".join(_cell(v) for v in row) for row in table.rows]
    return "\n".join(lines) + "\n"


def gnuplot_script(config: RunConfig, table: Table, data_path: Path) -> str:
    """Plain-text gnuplot script plotting every numeric column against the first."""
    cols = table.columns
    first_numeric = 1 if cols[0] not in ("state", "table") else 2
    x = first_numeric
    plots = [f"'{data_path.name}' using {x}:{j + 1} with lines title '{cols[j]}'"
             for j in range(first_numeric, len(cols))
             if cols[j] not in ("flags", "state", "table")]
    return "\n".join([
        f"# gnuplot companion for landau-wigner {config.subcommand}",
        "set datafile separator ','",
        "set datafile commentschars '#'",
        "set key autotitle columnhead",
        f"set xlabel '{cols[x - 1]}'",
        "plot " + ", \\\n     ".join(plots) if plots else "# no numeric columns",
    ]) + "\n"


# ---------------------------------------------------------------------------
# argument helpers
# ---------------------------------------------------------------------------

def parse_range(text: str) -> list[float]:
    """Parse ``start:stop:step`` (inclusive), a comma list or a single value.

    >>> parse_range("0:0.3:0.1")
    [0.0, 0.1, 0.2, 0.3]
    >>> parse_range("0,1,10")
    [0.0, 1.0, 10.0]
    """
    text = text.strip()
    try:
        if ":" in text:
            parts = [float(p) for p in text.split(":")]
            if len(parts) != 3:
                raise UsageError(f"range {text!r} must be start:stop:step")
            start, stop, step = parts
            if not step > 0 or stop < start:
                raise UsageError(f"range {text!r} needs step > 0 and stop >= start")
            count = int(math.floor((stop - start) / step + 1e-9)) + 1
            if count > 10_000_000:
                raise UsageError(f"range {text!r} has too many points")
            return [float(format_number(start + i * step)) for i in range(count)]
        values = [float(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot parse {text!r} as numbers") from exc
    if not values or not all(math.isfinite(v) for v in values):
        raise UsageError(f"{text!r} must contain finite numbers")
    return values


def _nonneg(values: Sequence[float], name: str) -> list[float]:
    if any(v < 0 for v in values):
        raise UsageError(f"{name} values must be nonnegative")
    return list(values)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_basis(p: dict) -> Table:
    nmax, tol = p["nmax"], p["tol"]
    if nmax < 0 or nmax > 30:
        raise UsageError("--nmax must lie in [0, 30]")
    labels = [phase_space.BasisLabel(k, n) for k in ("L", "M") for n in range(nmax + 1)
              if not (k == "M" and n == 0)]
    table = Table(["label_a", "label_b", "table_value", "quadrature_value", "abs_deviation"],
                  tolerances={"quad2d_tol": format_number(tol), "radial_cut": "9"})
    for i, a in enumerate(labels):
        for b in labels[i:]:
            exact = phase_space.overlap(a, b)
            if p["exact_only"]:
                quad = exact
            else:
                quad = 2.0 * math.pi * phase_space.quad2d(
                    lambda s, k, a=a, b=b: phase_space.eval_label(a, s, k)
                    * phase_space.eval_label(b, s, k), tol=tol).value
            table.add(str(a), str(b), exact, quad, abs(quad - exact))
    if p["exact_only"]:
        table.notes.append("quadrature skipped (--exact-only)")
    return table


def _params(p: dict, n: int):
    try:
        return sw.OneParticleParams(n, p["m"], p["kz"], p["eB"])
    except (DomainError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def parse_state(spec: str, p: dict) -> sw.WignerMatrix:
    """Build a state from ``kind:args``.

    Kinds: ``pure:n:r:spin``, ``superposition:n:theta``, ``phi:n:phi``,
    ``mixed:n``, ``gaussian:z``, ``thermal:mu:kappa``.
    """
    kind, _, rest = spec.partition(":")
    args = rest.split(":") if rest else []
    try:
        if kind == "pure" and len(args) == 3:
            spin = args[2]
            if spin not in ("+", "-"):
                raise UsageError("spin must be '+' or '-'")
            return sw.pure_state(_params(p, int(args[0])), int(args[1]), spin)
        if kind == "superposition" and len(args) == 2:
            return sw.superposition(_params(p, int(args[0])), float(args[1]))
        if kind == "phi" and len(args) == 2:
            return sw.phi_mixture(_params(p, int(args[0])), float(args[1]))
        if kind == "mixed" and len(args) == 1:
            n = int(args[0])
            params = _params(p, n)
            return sw.ground_mixture(params) if n == 0 else sw.maximally_mixed(n, params)
        if kind == "gaussian" and len(args) == 1:
            return sw.gaussian_family(float(args[0]))
        if kind == "thermal" and len(args) == 2:
            return sw.thermal_ensemble(float(args[0]), float(args[1]))
    except ValueError as exc:
        raise UsageError(f"bad state {spec!r}: {exc}") from exc
    raise UsageError(f"unknown state spec {spec!r}; expected pure:n:r:spin, "
                     "superposition:n:theta, phi:n:phi, mixed:n, gaussian:z or thermal:mu:kappa")


def _cmd_state_info(p: dict) -> Table:
    table = Table(list(info.InfoReport.FIELDS) + ["normalization"],
                  tolerances={"purity_precondition": "1e-10"})
    for spec in p["state"]:
        W = parse_state(spec, p)
        r = info.mutual_info(W)
        table.add(spec, r.purity, r.entropy_ps, r.entropy_sp, r.mutual_info, r.concurrence_sq,
                  W.normalization())
    return table


def _cmd_fig1(p: dict) -> Table:
    grid, n = p["grid"], p["level"]
    if grid < 2:
        raise UsageError("--grid must be at least 2")
    if n < 1:
        raise UsageError("--level must be >= 1")
    cols = ["B"]
    for kind in ("theta", "phi"):
        for v in FIG1_SIN2:
            tag = f"{kind}_sin2={format_number(v)}"
            cols += [f"M_{tag}", f"C2_{tag}", f"C_{tag}"]
    table = Table(cols, notes=["massless level (A^2 + B^2 = 1)", f"level n = {n}"])
    angles = [math.asin(math.sqrt(v)) for v in FIG1_SIN2]
    for B in np.linspace(0.0, 1.0, grid):
        c = sw.LevelCoefficients.massless(n, float(B))
        row: list = [float(B)]
        for build in (sw.superposition, sw.phi_mixture):
            for ang in angles:
                r = info.mutual_info(build(c, ang))
                c2 = max(r.concurrence_sq, 0.0)
                row += [r.mutual_info, c2, math.sqrt(c2)]
        table.add(*row)
    return table


def _z_values(p: dict) -> list[float]:
    zs = p["z"]
    if any(not 0.0 <= z < 1.0 for z in zs):
        raise UsageError("z values must lie in [0, 1)")
    return zs


def _cmd_gaussian(p: dict) -> Table:
    table = Table(["z", "purity", "entropy_ps", "entropy_sp", "mutual_info", "concurrence_sq",
                   "sigma_sq", "purity_closed", "entropy_ps_closed", "entropy_sp_closed",
                   "mutual_info_closed", "sigma_sq_closed", "max_abs_dev", "n_max"],
                  tolerances={"series_tail": format_number(p["tail"])})
    for z in _z_values(p):
        W = sw.gaussian_family(z, tail=p["tail"])
        r = info.mutual_info(W)
        sigma = W.gamma0_trace().second_moment()
        cf = info.gaussian_closed_forms(z)
        closed = (cf.report.purity, cf.report.entropy_ps, cf.report.entropy_sp,
                  cf.report.mutual_info, cf.sigma_sq)
        generic = (r.purity, r.entropy_ps, r.entropy_sp, r.mutual_info, sigma)
        dev = max(abs(a - b) for a, b in zip(generic, closed))
        table.add(z, *generic[:4], r.concurrence_sq, sigma, *closed, dev, W.meta.extra["n_max"])
    return table


def _cmd_fig_gaussian_density(p: dict) -> Table:
    grid, extent = p["grid"], p["extent"]
    if grid < 2 or not extent > 0:
        raise UsageError("need --grid >= 2 and --extent > 0")
    axis = np.linspace(-extent, extent, grid)
    S, K = np.meshgrid(axis, axis, indexing="ij")
    table = Table(["z", "s", "kx", "density", "density_series"],
                  tolerances={"series_tail": "1e-15"})
    for z in _z_values(p):
        closed = sw.GaussianClosedForm(z).density(S, K)
        series = sw.gaussian_family(z).gamma0_trace().evaluate(S, K)
        for i in range(grid):
            for j in range(grid):
                table.add(z, float(axis[i]), float(axis[j]), float(closed[i, j]),
                          float(series[i, j]))
    return table


def _cmd_fig_gaussian_info(p: dict) -> Table:
    table = Table(["z", "purity", "entropy_ps", "entropy_sp", "mutual_info",
                   "concurrence_sq", "sigma_sq"])
    table.notes.append("closed forms; concurrence of the massless level decomposition")
    for z in _z_values(p):
        cf = info.gaussian_closed_forms(z)
        r = cf.report
        table.add(z, r.purity, r.entropy_ps, r.entropy_sp, r.mutual_info, r.concurrence_sq,
                  cf.sigma_sq)
    return table


def _mu_kappa(p: dict) -> tuple[list[float], list[float]]:
    return _nonneg(p["mu"], "mu"), _nonneg(p["kappa"], "kappa")


def _thermo_tolerances(p: dict) -> dict[str, str]:
    return {"direct_rtol": format_number(thermo.DEFAULT_RTOL),
            "zeta_order": str(p.get("order", thermo.DEFAULT_ORDER)),
            "zeta_window_mu": format_number(thermo.ZETA_WINDOW)}


def _thermo_row(mu: float, kappa: float, p: dict) -> list:
    if mu == 0.0:
        inf = math.inf
        return [mu, kappa, inf, inf, inf, 2.0, -inf, inf, 0.0, 1.0, 0.5, 0.5, "limit"]
    row = thermo.evaluate(thermo.ThermalSpec(mu, kappa, p["order"], p["method"]))
    vals = [getattr(row, f) for f in thermo.ThermalRow.FIELDS]
    vals[-1] = "|".join(row.flags)
    return vals


def _cmd_thermo(p: dict) -> Table:
    mus, kappas = _mu_kappa(p)
    table = Table(list(thermo.ThermalRow.FIELDS), tolerances=_thermo_tolerances(p))
    table.notes.append("information columns are kappa = 0 closed forms (nan otherwise)")
    for kappa in kappas:
        for mu in mus:
            table.add(*_thermo_row(mu, kappa, p))
    return table


def _cmd_fig_thermo(p: dict) -> Table:
    mus, kappas = _mu_kappa(p)
    table = Table(["mu", "kappa", "U", "C"], tolerances=_thermo_tolerances(p))
    for kappa in kappas:
        for mu in mus:
            if mu == 0.0:
                table.add(mu, kappa, math.inf, 2.0)
                continue
            table.add(mu, kappa, thermo.internal_energy(mu, kappa, p["method"], p["order"]),
                      thermo.specific_heat(mu, kappa, p["method"], p["order"]))
    return table


def _cmd_fig_thermal_purity(p: dict) -> Table:
    mus, kappas = _mu_kappa(p)
    table = Table(["mu", "kappa", "purity"], tolerances=_thermo_tolerances(p))
    for kappa in kappas:
        for mu in mus:
            table.add(mu, kappa, 0.0 if mu == 0.0 else thermo.thermal_purity(mu, kappa))
    return table


def _cmd_fig_thermal_info(p: dict) -> Table:
    mus, kappas = _mu_kappa(p)
    table = Table(["mu", "kappa", "purity", "entropy_ps", "entropy_sp", "mutual_info",
                   "concurrence_sq"], tolerances={"ensemble_tail": format_number(p["tail"])})
    for kappa in kappas:
        for mu in mus:
            r = info.thermal_report(mu, kappa, tail=p["tail"])
            table.add(mu, kappa, r.purity, r.entropy_ps, r.entropy_sp, r.mutual_info,
                      r.concurrence_sq)
    return table


def _cmd_zeta_check(p: dict) -> Table:
    eps = p["eps"]
    if any(not 0.0 < e < 0.5 for e in eps):
        raise UsageError("--eps values must lie in (0, 0.5)")
    kappas = p["kappa"]
    if any(k <= 0 for k in kappas):
        raise UsageError("zeta-check needs kappa > 0 (Hurwitz parameter)")
    table = Table(["table", "s", "a", "value", "reference", "abs_diff"],
                  tolerances={"em_order": str(specfun.EULER_MACLAURIN.truncation),
                              "em_tolerance": format_number(specfun.EULER_MACLAURIN.tolerance),
                              "hasse_terms": str(specfun.HASSE.truncation)})
    table.notes.append("residue rows: value = (s - 1) zeta(s, a); s = 1 row is the extrapolation")
    table.notes.append("dual rows: value = Euler-Maclaurin, reference = Hasse series")
    for a in kappas:
        for e in eps:
            v = specfun.zeta_residue_check(a, e)
            table.add("residue", 1.0 + e, a, v, 1.0, abs(v - 1.0))
        v = specfun.residue_extrapolate(a, tuple(eps))
        table.add("residue", 1.0, a, v, 1.0, abs(v - 1.0))
    for a in kappas:
        for s in p["s"]:
            if s == 1.0:
                continue
            em = specfun.hurwitz_zeta(s, a, specfun.EULER_MACLAURIN)
            hs = specfun.hurwitz_zeta(s, a, specfun.HASSE)
            table.add("dual", s, a, em, hs, abs(em - hs))
    return table


COMMANDS: dict[str, Callable[[dict], Table]] = {
    "basis": _cmd_basis,
    "state-info": _cmd_state_info,
    "fig1": _cmd_fig1,
    "gaussian": _cmd_gaussian,
    "fig-gaussian-density": _cmd_fig_gaussian_density,
    "fig-gaussian-info": _cmd_fig_gaussian_info,
    "thermo": _cmd_thermo,
    "fig-thermo": _cmd_fig_thermo,
    "fig-thermal-purity": _cmd_fig_thermal_purity,
    "fig-thermal-info": _cmd_fig_thermal_info,
    "zeta-check": _cmd_zeta_check,
}


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit with status 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _range_arg(text: str) -> list[float]:
    try:
        return parse_range(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    """Construct the argument parser (unknown flags are rejected)."""
    parser = _Parser(prog="landau-wigner", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text, description=help_text)
        sp.add_argument("--out", type=Path, help="output file (default: $%s/<name>.<fmt> or stdout)"
                        % OUTDIR_ENV)
        sp.add_argument("--format", choices=("csv", "json"), default="csv", dest="fmt")
        sp.add_argument("--gnuplot", type=Path, help="also write a gnuplot script to this path")
        return sp

    def level_flags(sp):
        sp.add_argument("--m", type=float, default=0.0, help="mass (units of sqrt(eB))")
        sp.add_argument("--kz", type=float, default=0.0, help="longitudinal momentum")
        sp.add_argument("--eB", type=float, default=1.0, help="field strength")

    def thermo_flags(sp, mu_default: str):
        sp.add_argument("--mu", type=_range_arg, default=parse_range(mu_default),
                        help=f"inverse temperatures (default {mu_default})")
        sp.add_argument("--kappa", type=_range_arg, default=[0.0, 1.0, 10.0],
                        help="gaps (default 0,1,10)")

    def method_flags(sp):
        sp.add_argument("--method", choices=("direct", "zeta"), default="direct")
        sp.add_argument("--order", type=int, default=thermo.DEFAULT_ORDER,
                        help="zeta expansion order M")

    sp = add("basis", "Phase-space overlap table of the L/M basis by quadrature")
    sp.add_argument("--nmax", type=int, default=8)
    sp.add_argument("--tol", type=float, default=1e-11)
    sp.add_argument("--exact-only", action="store_true", help="skip the quadrature")

    sp = add("state-info", "Information report of one or more states")
    sp.add_argument("--state", action="append", required=True,
                    help="pure:n:r:spin | superposition:n:theta | phi:n:phi | mixed:n | "
                         "gaussian:z | thermal:mu:kappa (repeatable)")
    level_flags(sp)

    sp = add("fig1", "Mutual information and concurrence of superpositions and mixtures")
    sp.add_argument("--grid", type=int, default=101, help="number of B values in [0, 1]")
    sp.add_argument("--level", type=int, default=1, help="Landau level n >= 1")
    sp.add_argument("--massless", action="store_true", default=True,
                    help="massless level, A^2 + B^2 = 1 (the only supported sweep)")

    sp = add("gaussian", "Gaussian family: generic pipeline vs closed forms")
    sp.add_argument("--z", type=_range_arg, default=parse_range("0:0.9:0.1"))
    sp.add_argument("--tail", type=float, default=1e-15)

    sp = add("fig-gaussian-density", "Gaussian family phase-space density on a grid")
    sp.add_argument("--z", type=_range_arg, default=[0.0, 0.5, 0.9])
    sp.add_argument("--grid", type=int, default=61)
    sp.add_argument("--extent", type=float, default=4.0)

    sp = add("fig-gaussian-info", "Gaussian family information closed forms")
    sp.add_argument("--z", type=_range_arg, default=parse_range("0:0.99:0.01"))

    sp = add("thermo", "Partition function, thermodynamics and thermal information")
    thermo_flags(sp, "0.25,0.5,1,2")
    method_flags(sp)

    sp = add("fig-thermo", "Internal energy and specific heat versus mu")
    thermo_flags(sp, "0:10:0.05")
    method_flags(sp)

    sp = add("fig-thermal-purity", "Thermal purity versus mu")
    thermo_flags(sp, "0:20:0.1")

    sp = add("fig-thermal-info", "Thermal information quantifiers versus mu")
    thermo_flags(sp, "0:10:0.1")
    sp.add_argument("--tail", type=float, default=1e-12)

    sp = add("zeta-check", "Residue extrapolation and Euler-Maclaurin/Hasse tables")
    sp.add_argument("--kappa", type=_range_arg, default=[0.5, 1.0, 10.0])
    sp.add_argument("--eps", type=_range_arg, default=[1e-2, 1e-3, 1e-4])
    sp.add_argument("--s", type=_range_arg, default=[-3.5, -1.0, -0.5, 0.0, 0.5, 2.0, 3.5])
    return parser


def config_from_args(argv: Sequence[str] | None = None) -> RunConfig:
    """Parse ``argv`` into a :class:`RunConfig` (exits with status 2 on bad flags)."""
    ns = build_parser().parse_args(argv)
    params = {k: v for k, v in vars(ns).items()
              if k not in ("subcommand", "out", "fmt", "gnuplot")}
    return RunConfig(ns.subcommand, params, ns.out, ns.fmt, ns.gnuplot)


def _target(config: RunConfig) -> Path | None:
    if config.output is not None:
        return config.output
    outdir = os.environ.get(OUTDIR_ENV)
    if outdir:
        return Path(outdir) / f"{config.subcommand}.{config.fmt}"
    return None


def execute(config: RunConfig) -> Table:
    """Compute the table for ``config`` without writing it."""
    try:
        return COMMANDS[config.subcommand](config.parameters)
    except (DomainError, ConstructionError, PreconditionError) as exc:
        raise UsageError(str(exc)) from exc


def run(config: RunConfig, stdout=None) -> int:
    """Execute ``config`` and write its output; return the exit status."""
    stdout = stdout or sys.stdout
    try:
        table = execute(config)
    except UsageError as exc:
        print(f"landau-wigner {config.subcommand}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericalFailure, UnavailableResult, ArithmeticError, LandauWignerError) as exc:
        print(f"landau-wigner {config.subcommand}: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    text = render(config, table)
    target = _target(config)
    if config.gnuplot is not None and target is None:
        print("landau-wigner: error: --gnuplot needs a file output (--out or $%s)" % OUTDIR_ENV,
              file=sys.stderr)
        return EXIT_USAGE
    if target is None:
        stdout.write(text)
    else:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text)
        if config.gnuplot is not None:
            config.gnuplot.parent.mkdir(parents=True, exist_ok=True)
            config.gnuplot.write_text(gnuplot_script(config, table, target))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    """Console entry point."""
    try:
        config = config_from_args(argv)
    except SystemExit as exc:  # argparse: --help/--version (0) or usage error (2)
        return int(exc.code or 0)
    return run(config)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
