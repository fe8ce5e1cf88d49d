"""Experiment harness: configs, rate fitting, sweeps and the CLI.

A run is described by a flat key = value configuration (file or CLI
flags; flags win). The harness builds the problem and parameter bundle,
dispatches the right solver, fits the empirical rate from the trace tail,
and writes one CSV (the trace) plus one JSON file (the summary). Repeat
runs of the same configuration and seed produce byte-identical CSVs.

Exit status contract for the CLI: 0 on success, 1 if any runtime
certificate failed or a run diverged, 2 for configuration errors
(rejected before any compute happens). The default output directory is
taken from the MOMCERT_OUT environment variable when set.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np

from . import agm as _agm
from . import ode as _ode
from . import pgm as _pgm
from .oracle import (
    CompositeObjective,
    SmoothObjective,
    lasso_problem,
    pl_sine_problem,
    quadratic_problem,
)
from .params import (
    OdeParams,
    Regime,
    agm_params_pl,
    agm_params_qg,
    agm_params_sc,
    ode_params_pl,
    ode_params_qg,
    ode_params_sc,
    pgm_params_qg,
    pgm_params_sc,
)
from .trace import Trace

__all__ = [
    "ConfigError",
    "ExperimentConfig",
    "load_config_file",
    "build_problem",
    "build_params",
    "fit_linear_rate",
    "run_experiment",
    "rate_table",
    "rate_table_text",
    "rate_table_csv",
    "main",
]

OUT_ENV_VAR = "MOMCERT_OUT"

PROBLEMS = ("quadratic", "pl_sine", "lasso")
SOLVERS = ("auto", "agm", "pgm", "ode")


class ConfigError(ValueError):
    """Invalid experiment configuration; reported before any compute."""


@dataclass
class ExperimentConfig:
    problem: str = "quadratic"
    d: int = 10
    q: float = 0.01            # mu / L of the generated instance
    L: float = 100.0
    lam: Optional[float] = None  # lasso penalty; None picks 0.3 ||A'b||_inf
    x0: float = 2.0            # start point for 1-d problems
    x0_scale: float = 5.0      # start scale for multi-d problems
    seed: int = 0
    solver: str = "auto"
    regime: str = "sc"
    gamma: float = 1.0
    omega: float = 0.0
    alpha: Optional[float] = None
    beta: Optional[float] = None   # flow only; None means 1 / sqrt(L)
    theta: Optional[float] = None  # flow only; None means smallest admissible
    iters: int = 1000
    horizon: Optional[float] = None  # flow only; None means 20 / decay_rate
    dt: Optional[float] = None
    certify: bool = True
    out: Optional[str] = None
    csv: Optional[str] = None
    json: Optional[str] = None
    quiet: bool = False

    def validated(self) -> "ExperimentConfig":
        if self.problem not in PROBLEMS:
            raise ConfigError(f"problem must be one of {PROBLEMS}, got {self.problem!r}")
        if self.solver not in SOLVERS:
            raise ConfigError(f"solver must be one of {SOLVERS}, got {self.solver!r}")
        try:
            Regime(self.regime)
        except ValueError:
            raise ConfigError(
                f"regime must be one of ('sc', 'qg', 'pl'), got {self.regime!r}"
            ) from None
        if self.problem == "quadratic" and self.d < 2:
            raise ConfigError("quadratic instances need d >= 2 to realize q < 1")
        if self.problem != "pl_sine":
            if not 0.0 < self.q < 1.0:
                raise ConfigError(f"need 0 < q < 1, got q = {self.q}")
            if self.L <= 0:
                raise ConfigError(f"need L > 0, got {self.L}")
        if self.d < 1:
            raise ConfigError(f"need d >= 1, got {self.d}")
        if self.iters < 1:
            raise ConfigError(f"need iters >= 1, got {self.iters}")
        if self.horizon is not None and self.horizon <= 0:
            raise ConfigError(f"need horizon > 0, got {self.horizon}")
        if self.dt is not None and self.dt <= 0:
            raise ConfigError(f"need dt > 0, got {self.dt}")
        if self.lam is not None and self.lam < 0:
            raise ConfigError(f"need lam >= 0, got {self.lam}")
        return self

    def resolved_solver(self) -> str:
        if self.solver != "auto":
            return self.solver
        return "pgm" if self.problem == "lasso" else "agm"


_BOOL_KEYS = {"certify", "quiet"}
_INT_KEYS = {"d", "seed", "iters"}
_STR_KEYS = {"problem", "solver", "regime", "out", "csv", "json"}
_FLOAT_KEYS = {
    "q", "L", "lam", "x0", "x0_scale", "gamma", "omega", "alpha", "beta",
    "theta", "horizon", "dt",
}


def load_config_file(path: Union[str, Path]) -> dict:
    """Parse a flat `key = value` file; '#' starts a comment."""
    values: dict = {}
    known = {f.name for f in fields(ExperimentConfig)}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if key not in known:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = _coerce(key, val)
    return values


def _coerce(key: str, val: str):
    try:
        if key in _BOOL_KEYS:
            if val.lower() in ("1", "true", "yes", "on"):
                return True
            if val.lower() in ("0", "false", "no", "off"):
                return False
            raise ValueError(f"not a boolean: {val!r}")
        if key in _INT_KEYS:
            return int(val)
        if key in _FLOAT_KEYS:
            return None if val.lower() == "none" else float(val)
        return val
    except ValueError as err:
        raise ConfigError(f"bad value for {key}: {err}") from None


# ----------------------------------------------------------------------
# problem and bundle construction


def build_problem(
    config: ExperimentConfig,
) -> tuple[Union[SmoothObjective, CompositeObjective], np.ndarray]:
    """Instantiate the configured problem and its seeded start point."""
    rng_problem = np.random.default_rng([config.seed, 0])
    rng_start = np.random.default_rng([config.seed, 1])

    if config.problem == "quadratic":
        mu = config.q * config.L
        spectrum = np.geomspace(mu, config.L, config.d)
        b = rng_problem.standard_normal(config.d)
        obj = quadratic_problem(spectrum, b, seed=config.seed)
        x0 = obj.minimizer + config.x0_scale * rng_start.standard_normal(config.d)
        return obj, x0

    if config.problem == "pl_sine":
        obj = pl_sine_problem()
        return obj, np.array([config.x0])

    mu = config.q * config.L
    sv = np.sqrt(np.geomspace(mu, config.L, config.d))
    u = _seeded_orthogonal(config.d, rng_problem)
    v = _seeded_orthogonal(config.d, rng_problem)
    a = u @ (sv[:, None] * v.T)
    b = 3.0 * rng_problem.standard_normal(config.d)
    lam = config.lam
    if lam is None:
        lam = 0.3 * float(np.max(np.abs(a.T @ b)))
    obj = lasso_problem(a, b, lam)
    x0 = obj.minimizer + config.x0_scale * rng_start.standard_normal(config.d)
    return obj, x0


def _seeded_orthogonal(d: int, rng: np.random.Generator) -> np.ndarray:
    q, r = np.linalg.qr(rng.standard_normal((d, d)))
    return q * np.sign(np.diag(r))


def _regime_mu(obj, regime: Regime, smooth: SmoothObjective) -> float:
    """Pick the growth constant matching the requested regime."""
    if regime is Regime.STRONGLY_CONVEX:
        mu = smooth.strong_convexity
        what = "strong convexity"
    elif regime is Regime.QUADRATIC_GROWTH:
        mu = obj.qg_constant
        what = "quadratic growth"
    else:
        mu = getattr(obj, "pl_constant", None)
        what = "gradient domination"
    if mu is None:
        raise ConfigError(
            f"problem provides no {what} constant; regime {regime.value!r} "
            "is not applicable"
        )
    return float(mu)


def build_params(config: ExperimentConfig, obj) -> Union[
    "_agm.AgmParams", "_pgm.PgmParams", OdeParams
]:
    """Build the parameter bundle for the resolved solver and regime.

    Theorem-level inequality violations raised by the bundle constructors
    surface as ConfigError with the offending inequality in the message.
    """
    solver = config.resolved_solver()
    regime = Regime(config.regime)
    smooth = obj.smooth if isinstance(obj, CompositeObjective) else obj
    mu = _regime_mu(obj, regime, smooth)
    big_l = smooth.lipschitz
    try:
        if solver == "agm":
            if isinstance(obj, CompositeObjective):
                raise ConfigError("solver 'agm' handles smooth objectives only")
            if regime is Regime.STRONGLY_CONVEX:
                return agm_params_sc(mu, big_l, config.gamma, config.omega, config.alpha)
            if regime is Regime.QUADRATIC_GROWTH:
                return agm_params_qg(mu, big_l, config.gamma, config.omega, config.alpha)
            return agm_params_pl(mu, big_l)
        if solver == "pgm":
            if not isinstance(obj, CompositeObjective):
                raise ConfigError("solver 'pgm' expects a composite objective")
            if regime is Regime.STRONGLY_CONVEX:
                return pgm_params_sc(mu, big_l, config.omega, config.alpha)
            if regime is Regime.QUADRATIC_GROWTH:
                return pgm_params_qg(mu, big_l, config.omega, config.alpha)
            raise ConfigError(
                "no gradient-domination bundle exists for the proximal solver"
            )
        # flow
        if isinstance(obj, CompositeObjective):
            raise ConfigError("the flow integrates smooth objectives only")
        beta = config.beta if config.beta is not None else 1.0 / math.sqrt(big_l)
        if regime is Regime.STRONGLY_CONVEX:
            alpha = config.alpha if config.alpha is not None else 2.0 * math.sqrt(mu)
            return ode_params_sc(mu, alpha, beta, config.omega, config.theta)
        if regime is Regime.QUADRATIC_GROWTH:
            alpha = config.alpha if config.alpha is not None else 2.0 * math.sqrt(mu)
            return ode_params_qg(mu, alpha, beta, config.omega, config.theta)
        theta = config.theta if config.theta is not None else 1.0
        return ode_params_pl(mu, beta, theta)
    except ConfigError:
        raise
    except ValueError as err:
        raise ConfigError(str(err)) from None


# ----------------------------------------------------------------------
# rate fitting


def fit_linear_rate(trace: Trace, window: float = 0.5) -> Optional[float]:
    """Empirical rate from a least-squares fit of log(gap) on the tail.

    Uses the certified gap column (f_gap_y for the discrete solvers,
    f_gap for the flow). Records after the gap first drops below
    1e-13 * initial are discarded as float noise; the fit then runs on
    the last `window` fraction of what remains, but never on the first
    10% of it (transient). Needs at least 20 positive-gap records, else
    returns None.

    For discrete traces the return value rho_emp satisfies
    gap ~ (1 + rho_emp)^-k; for flow traces it is the continuous decay
    rate, gap ~ exp(-rate t).
    """
    if not 0.0 < window <= 1.0:
        raise ValueError(f"window must be in (0, 1], got {window}")
    if trace.kind == "ode":
        xs = trace.column("t")
        gaps = trace.column("f_gap")
    else:
        xs = trace.column("k")
        gaps = trace.column("f_gap_y")
    n = len(gaps)
    if n == 0 or not np.isfinite(gaps[0]) or gaps[0] <= 0:
        return None
    below = np.nonzero(gaps < 1e-13 * gaps[0])[0]
    cutoff = int(below[0]) if below.size else n
    lo = max(int(math.ceil(0.1 * cutoff)), int(math.floor(cutoff * (1.0 - window))))
    sel = slice(lo, cutoff)
    x = xs[sel]
    g = gaps[sel]
    keep = np.isfinite(g) & (g > 0)
    if keep.sum() < 20:
        return None
    slope = np.polyfit(x[keep], np.log(g[keep]), 1)[0]
    if trace.kind == "ode":
        return float(-slope)
    return float(math.expm1(-slope))


# ----------------------------------------------------------------------
# experiment driver


def _default_basename(config: ExperimentConfig) -> str:
    solver = config.resolved_solver()
    parts = [config.problem, solver, config.regime]
    if solver in ("agm", "pgm") and config.regime != "pl":
        if solver == "agm":
            parts.append(f"g{config.gamma:g}")
        parts.append(f"w{config.omega:g}")
    if solver == "ode":
        parts.append(f"w{config.omega:g}")
    parts.append(f"s{config.seed}")
    return "_".join(parts)


def run_experiment(config: ExperimentConfig, write: bool = True) -> Trace:
    """Validate, build, run, fit, and (optionally) write csv + json.

    The returned trace's summary carries the fitted empirical rate next
    to the certified one, certificate counts, and the output paths.
    """
    config = replace(config).validated()
    obj, x0 = build_problem(config)
    bundle = build_params(config, obj)
    solver = config.resolved_solver()

    if solver == "agm":
        trace = _agm.agm_run(obj, bundle, x0, config.iters, certify=config.certify)
    elif solver == "pgm":
        trace = _pgm.pgm_run(obj, bundle, x0, config.iters, certify=config.certify)
    else:
        horizon = config.horizon
        if horizon is None:
            horizon = 20.0 / bundle.decay_rate
        trace = _ode.ode_run(obj, bundle, x0, horizon, config.dt)

    trace.summary["fitted_rate"] = fit_linear_rate(trace)
    trace.summary["problem"] = config.problem
    trace.summary["seed"] = config.seed
    trace.summary["config"] = {
        f.name: getattr(config, f.name)
        for f in fields(config)
        if f.name not in ("out", "csv", "json", "quiet")
    }

    if write:
        out_dir = Path(config.out or os.environ.get(OUT_ENV_VAR) or ".")
        out_dir.mkdir(parents=True, exist_ok=True)
        base = _default_basename(config)
        csv_path = out_dir / (config.csv or f"{base}.csv")
        json_path = out_dir / (config.json or f"{base}.json")
        trace.summary["csv_path"] = str(csv_path)
        trace.summary["json_path"] = str(json_path)
        trace.write_csv(csv_path)
        trace.write_json(json_path)
    return trace


def exit_code_for(trace: Trace) -> int:
    """0 for a clean run, 1 for certificate failures or divergence."""
    s = trace.summary
    if s.get("certificates_failed", 0) > 0:
        return 1
    if s.get("aborted_at") is not None:
        return 1
    return 0


# ----------------------------------------------------------------------
# rate tables


def rate_table(
    configs: Sequence[ExperimentConfig], write_traces: bool = False
) -> list[dict]:
    """Run each configuration and tabulate certified vs fitted rates.

    All configs must target the same problem instance (same problem key,
    size and seed) so the rows are comparable. Rows are sorted by
    (regime, gamma, omega).
    """
    if not configs:
        raise ConfigError("rate_table needs at least one configuration")
    ref = (configs[0].problem, configs[0].d, configs[0].q, configs[0].L,
           configs[0].seed)
    for c in configs[1:]:
        if (c.problem, c.d, c.q, c.L, c.seed) != ref:
            raise ConfigError(
                "rate_table configs must share one problem instance; "
                f"{(c.problem, c.d, c.q, c.L, c.seed)} != {ref}"
            )
    rows = []
    for c in configs:
        trace = run_experiment(c, write=write_traces)
        s = trace.summary
        gaps = trace.column("f_gap_y" if trace.kind != "ode" else "f_gap")
        idx = trace.column("k" if trace.kind != "ode" else "t")
        tol_hit = ""
        if np.isfinite(gaps[0]) and gaps[0] > 0:
            hit = np.nonzero(gaps <= 1e-9 * gaps[0])[0]
            if hit.size:
                tol_hit = f"{idx[hit[0]]:g}"
        rows.append({
            "regime": s["regime"],
            "gamma": s.get("gamma", float("nan")),
            "omega": s["omega"],
            "rho_theory": s["rho_theory"] if trace.kind != "ode" else s["decay_rate"],
            "rho_emp": s["fitted_rate"],
            "iters_to_1e-9": tol_hit,
            "certificates": f'{s["certificates_checked"] - s["certificates_failed"]}'
                            f'/{s["certificates_checked"]}',
        })
    rows.sort(key=lambda r: (r["regime"], r["gamma"], r["omega"]))
    return rows


_TABLE_COLS = (
    "regime", "gamma", "omega", "rho_theory", "rho_emp",
    "iters_to_1e-9", "certificates",
)


def _cell(row: dict, col: str) -> str:
    v = row[col]
    if v is None:
        return "indeterminate"
    if isinstance(v, float):
        return "nan" if math.isnan(v) else f"{v:.6g}"
    return str(v)


def rate_table_text(rows: Sequence[dict]) -> str:
    """Aligned fixed-width rendering of a rate table."""
    cells = [[_cell(r, c) for c in _TABLE_COLS] for r in rows]
    widths = [
        max(len(name), *(len(row[i]) for row in cells)) if cells else len(name)
        for i, name in enumerate(_TABLE_COLS)
    ]
    out = ["  ".join(name.ljust(w) for name, w in zip(_TABLE_COLS, widths))]
    for row in cells:
        out.append("  ".join(c.ljust(w) for c, w in zip(row, widths)))
    return "\n".join(out)


def rate_table_csv(rows: Sequence[dict], path) -> None:
    lines = [",".join(_TABLE_COLS)]
    for r in rows:
        lines.append(",".join(_cell(r, c) for c in _TABLE_COLS))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


# ----------------------------------------------------------------------
# CLI


def _add_common(p: argparse.ArgumentParser, grids: bool = False) -> None:
    p.add_argument("--config", help="flat key = value configuration file")
    p.add_argument("--problem", choices=PROBLEMS)
    p.add_argument("--regime", choices=[r.value for r in Regime])
    if grids:
        p.add_argument("--gamma", help="comma-separated list, e.g. 1,1.5,2")
        p.add_argument("--omega", help="comma-separated list, e.g. 0,0.5,1")
    else:
        p.add_argument("--gamma", type=float)
        p.add_argument("--omega", type=float)
    p.add_argument("--iters", "-k", type=int)
    p.add_argument("--horizon", "-T", type=float)
    p.add_argument("--dt", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help=f"output directory (default ${OUT_ENV_VAR} or cwd)")
    p.add_argument("--csv", help="trace CSV filename")
    p.add_argument("--json", help="summary JSON filename")
    p.add_argument("--quiet", action="store_true")
    p.add_argument("--d", type=int, help="problem dimension")
    p.add_argument("--q", type=float, help="mu / L of the generated instance")
    p.add_argument("--L", type=float, help="largest curvature of the instance")
    p.add_argument("--lam", type=float, help="lasso penalty")
    p.add_argument("--x0", type=float, help="start point for 1-d problems")
    p.add_argument("--alpha", type=float, help="damping override")
    p.add_argument("--beta", type=float, help="flow gradient damping")
    p.add_argument("--theta", type=float, help="flow energy gap weight")
    p.add_argument("--solver", choices=SOLVERS, help="override solver dispatch")


def _config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    values: dict = {}
    if getattr(args, "config", None):
        values.update(load_config_file(args.config))
    for f in fields(ExperimentConfig):
        v = getattr(args, f.name, None)
        if v is not None and not (f.name == "quiet" and v is False):
            values[f.name] = v
    return ExperimentConfig(**values)


def _parse_grid(spec: Optional[str], fallback: float) -> list[float]:
    if spec is None:
        return [fallback]
    try:
        return [float(tok) for tok in str(spec).split(",") if tok.strip() != ""]
    except ValueError:
        raise ConfigError(f"bad grid value {spec!r}; expected comma-separated floats")


def _report(trace: Trace, quiet: bool) -> None:
    if quiet:
        return
    s = trace.summary
    rate_key = "decay_rate" if trace.kind == "ode" else "rho_theory"
    fitted = s.get("fitted_rate")
    print(
        f"{s['solver']} on {s.get('problem', '?')} [{s['regime']}]: "
        f"certified rate {s[rate_key]:.6g}, fitted "
        f"{'indeterminate' if fitted is None else format(fitted, '.6g')}"
    )
    print(
        f"certificates: {s['certificates_checked'] - s['certificates_failed']}"
        f"/{s['certificates_checked']} passed; "
        f"gap {s['initial_gap']:.3e} -> {s['final_gap']:.3e}"
    )
    if s.get("aborted_at") is not None:
        print(f"run aborted at index {s['aborted_at']}")
    if "csv_path" in s:
        print(f"wrote {s['csv_path']} and {s['json_path']}")


def _cmd_solve(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    trace = run_experiment(config)
    _report(trace, config.quiet)
    return exit_code_for(trace)


def _cmd_certify(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    config.certify = True
    trace = run_experiment(config)
    if not trace.summary.get("certified", False):
        print("certification unavailable: no ground-truth minimizer", file=sys.stderr)
        return 2
    _report(trace, config.quiet)
    failures = [c for c in trace.certificates if not c.passed]
    if not config.quiet:
        for c in failures[:10]:
            print(f"FAILED k={c.k}: lhs={c.lhs:.12g} > rhs={c.rhs:.12g} "
                  f"(slack {c.slack:.3e})")
        if len(failures) > 10:
            print(f"... and {len(failures) - 10} more failures")
        verdict = "all certificates passed" if not failures else \
            f"{len(failures)} certificate(s) FAILED"
        print(verdict)
    return exit_code_for(trace)


def _cmd_ode(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    config.solver = "ode"
    trace = run_experiment(config)
    _report(trace, config.quiet)
    return exit_code_for(trace)


def _sweep_configs(args: argparse.Namespace) -> list[ExperimentConfig]:
    base = _config_from_args(args)
    gammas = _parse_grid(getattr(args, "gamma", None), base.gamma if isinstance(base.gamma, float) else 1.0)
    omegas = _parse_grid(getattr(args, "omega", None), base.omega if isinstance(base.omega, float) else 0.0)
    configs = []
    for g in gammas:
        for w in omegas:
            configs.append(replace(base, gamma=g, omega=w))
    return configs


def _cmd_sweep(args: argparse.Namespace) -> int:
    configs = _sweep_configs(args)
    # --csv names the sweep table; traces keep their default basenames
    rows = rate_table([replace(c, csv=None, json=None) for c in configs],
                      write_traces=True)
    base = configs[0]
    out_dir = Path(base.out or os.environ.get(OUT_ENV_VAR) or ".")
    out_dir.mkdir(parents=True, exist_ok=True)
    table_path = out_dir / (base.csv or f"sweep_{base.problem}_s{base.seed}_rates.csv")
    rate_table_csv(rows, table_path)
    if not base.quiet:
        print(rate_table_text(rows))
        print(f"wrote {table_path}")
    bad = any(r["certificates"].split("/")[0] != r["certificates"].split("/")[1]
              for r in rows)
    return 1 if bad else 0


def _cmd_rates(args: argparse.Namespace) -> int:
    configs = _sweep_configs(args)
    rows = rate_table(configs, write_traces=False)
    base = configs[0]
    if base.csv:
        out_dir = Path(base.out or os.environ.get(OUT_ENV_VAR) or ".")
        out_dir.mkdir(parents=True, exist_ok=True)
        rate_table_csv(rows, out_dir / base.csv)
    if not base.quiet:
        print(rate_table_text(rows))
    bad = any(r["certificates"].split("/")[0] != r["certificates"].split("/")[1]
              for r in rows)
    return 1 if bad else 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="momcert",
        description="Momentum solvers with runtime-certified convergence rates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run one configuration and write its trace")
    _add_common(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("certify", help="run and enforce every energy certificate")
    _add_common(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("ode", help="integrate the continuous flow")
    _add_common(p)
    p.set_defaults(func=_cmd_ode)

    p = sub.add_parser("sweep", help="grid over gamma x omega, write all traces")
    _add_common(p, grids=True)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("rates", help="rate table for a gamma x omega grid")
    _add_common(p, grids=True)
    p.set_defaults(func=_cmd_rates)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as err:
        print(f"configuration error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
