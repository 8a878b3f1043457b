"""Command-line front end: parameter sweeps and figure-style tables.

Subcommands
-----------
attractors  branch radii and quasienergy gaps vs drive intensity
spectrum    emission/absorption spectra, closed form and matrix route
rates       decay/excitation rates vs detuning (regime selected explicitly)
teff        effective qubit temperature vs drive intensity
match       resonant vs nonresonant rate ratio across a frequency hierarchy
validate    internal self-checks (root residuals, Lyapunov, dual route)

Output is CSV with a commented ``# key=value`` header block (or JSON with
``--format json``), deterministic byte-for-byte for identical inputs.
Dimensionless-first: resonant commands take (beta, kappa_scaled, lambda_s,
n_bar, omega_rel) directly; SI parameters are needed only for the
nonresonant and two-quantum regimes.

Exit codes: 0 success, 1 input error, 2 validity-fatal (marginal attractor,
singular denominator), 3 self-check failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from .attractors import (
    Attractor,
    Branch,
    MarginalAttractorError,
    bifurcation_betas,
    drift_matrix,
    solve_attractors,
)
from .fluctuations import (
    absorption_from_matrix,
    absorption_spectrum,
    emission_from_matrix,
    emission_spectrum,
    stationary_covariance,
)
from .model import PhysicalParams, physical_from_scaled, scale_params
from .rates import (
    FLAG_WEAK_DAMPING,
    NearResonanceError,
    QubitParams,
    gamma_linear_nonresonant,
    gamma_linear_resonant,
    gamma_nonresonant,
    gamma_nonresonant_2q,
    gamma_resonant_1q,
    gamma_resonant_2q,
    gamma_total_resonant,
    resonant_1q_scaled,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VALIDITY = 2
EXIT_SELFCHECK = 3

SCHEMA = "duffing-qubit/1"

_REGIMES = (
    "resonant-1q",
    "resonant-2q",
    "resonant-total",
    "nonresonant",
    "nonresonant-2q",
    "linear-resonant",
    "linear-nonresonant",
)

_SI_KEYS = ("mass", "omega0", "omega_f", "gamma_s", "f0", "kappa", "temperature", "omega_c")


class CliInputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad input; remap to our input-error code
    def error(self, message):
        raise CliInputError(message)


def parse_grid(spec: str) -> np.ndarray:
    """Parse start:stop:count[:log] into an array of sweep points."""
    parts = spec.split(":")
    if len(parts) not in (3, 4):
        raise CliInputError(f"bad grid {spec!r}, expected start:stop:count[:log]")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise CliInputError(f"bad grid {spec!r}: {exc}") from None
    log = len(parts) == 4
    if log and parts[3] != "log":
        raise CliInputError(f"bad grid suffix {parts[3]!r}, only 'log' is allowed")
    if count < 2:
        raise CliInputError("grid count must be at least 2")
    if not start < stop:
        raise CliInputError("grid start must be below stop")
    if log:
        if start <= 0:
            raise CliInputError("log grid requires positive endpoints")
        return np.geomspace(start, stop, count)
    return np.linspace(start, stop, count)


def load_config(path: str | None) -> dict[str, str]:
    """Flat key=value file; '#' starts a comment; flags override these."""
    if path is None:
        return {}
    out: dict[str, str] = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise CliInputError(f"{path}:{lineno}: expected key=value")
                key, value = line.split("=", 1)
                out[key.strip().replace("-", "_")] = value.strip()
    except OSError as exc:
        raise CliInputError(f"cannot read config file: {exc}") from None
    return out


def _resolve(args, config: dict[str, str], name: str, cast=float, default=None, required=False):
    value = getattr(args, name, None)
    if value is None and name in config:
        try:
            value = cast(config[name])
        except ValueError as exc:
            raise CliInputError(f"config key {name}: {exc}") from None
    if value is None:
        value = default
    if value is None and required:
        raise CliInputError(f"missing required parameter --{name.replace('_', '-')}")
    return value


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _json_safe(value):
    if isinstance(value, (float, np.floating)):
        v = float(value)
        if math.isfinite(v):
            return v
        return repr(v)  # "inf", "-inf", "nan"
    if isinstance(value, (np.integer,)):
        return int(value)
    return value


def emit_table(params: dict, columns: list[str], rows: list[list], fmt: str, out) -> None:
    if fmt == "json":
        doc = {
            "schema": SCHEMA,
            "version": __version__,
            "params": {k: _json_safe(v) for k, v in params.items()},
            "columns": columns,
            "rows": [[_json_safe(v) for v in row] for row in rows],
        }
        out.write(json.dumps(doc, indent=2))
        out.write("\n")
        return
    out.write(f"# schema={SCHEMA}\n")
    out.write(f"# version={__version__}\n")
    for key, value in params.items():
        out.write(f"# {key}={_fmt(value)}\n")
    out.write(",".join(columns) + "\n")
    for row in rows:
        out.write(",".join(_fmt(v) for v in row) + "\n")


def _pick(attractors: list[Attractor], branch: Branch) -> Attractor | None:
    for a in attractors:
        if a.branch is branch:
            return a
    return None


def _pick_required(beta: float, kappa_scaled: float, branch: Branch) -> Attractor:
    a = _pick(solve_attractors(beta, kappa_scaled), branch)
    if a is None:
        raise CliInputError(
            f"no {branch.value}-amplitude attractor exists at beta={beta:g}, "
            f"kappa_scaled={kappa_scaled:g}"
        )
    return a


def _branch_choices(name: str) -> list[Branch]:
    if name == "both":
        return [Branch.SMALL, Branch.LARGE]
    return [Branch(name)]


# ----------------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------------

def cmd_attractors(args, config) -> int:
    kappa = _resolve(args, config, "kappa_scaled", required=True)
    grid = parse_grid(_resolve(args, config, "grid", cast=str, default="0:0.25:201"))
    if grid[0] < 0:
        raise CliInputError("beta grid must be non-negative")
    info = bifurcation_betas(kappa)
    params = {
        "command": "attractors",
        "kappa_scaled": kappa,
        "bistable": info.bistable,
        "beta_low": info.beta_low,
        "beta_high": info.beta_high,
    }
    columns = ["beta", "u_small", "nu_small", "u_unstable", "u_large", "nu_large"]
    rows = []
    nan = float("nan")
    for beta in grid:
        found = {a.branch: a for a in solve_attractors(float(beta), kappa)}
        row = [float(beta)]
        small = found.get(Branch.SMALL)
        row += [small.u if small else nan, small.nu_scaled if small else nan]
        unstable = found.get(Branch.UNSTABLE)
        row += [unstable.u if unstable else nan]
        large = found.get(Branch.LARGE)
        row += [large.u if large else nan, large.nu_scaled if large else nan]
        rows.append(row)
    emit_table(params, columns, rows, args.format, args.out_stream)
    return EXIT_OK


def cmd_spectrum(args, config) -> int:
    beta = _resolve(args, config, "beta", required=True)
    kappa = _resolve(args, config, "kappa_scaled", required=True)
    lambda_s = _resolve(args, config, "lambda_s", default=0.01)
    n_bar = _resolve(args, config, "nbar", default=0.5)
    branch = Branch(_resolve(args, config, "attractor", cast=str, default="large"))
    grid = parse_grid(_resolve(args, config, "grid", cast=str, default="-5:5:2001"))

    a = _pick_required(beta, kappa, branch)
    if not a.stable:
        raise MarginalAttractorError("requested attractor is marginal")
    k = drift_matrix(a, kappa)
    cov = stationary_covariance(k, lambda_s, kappa, n_bar)

    params = {
        "command": "spectrum",
        "beta": beta,
        "kappa_scaled": kappa,
        "lambda_s": lambda_s,
        "nbar": n_bar,
        "attractor": branch.value,
        "u": a.u,
        "nu": a.nu_scaled,
    }
    columns = [
        "omega",
        "emission_closed",
        "absorption_closed",
        "emission_matrix",
        "absorption_matrix",
    ]
    rows = []
    worst = 0.0
    for w in grid:
        w = float(w)
        ec = emission_spectrum(w, a.u, a.nu_scaled, kappa, lambda_s, n_bar)
        ac = absorption_spectrum(w, a.u, a.nu_scaled, kappa, lambda_s, n_bar)
        em = emission_from_matrix(k, cov, lambda_s, w)
        am = absorption_from_matrix(k, cov, lambda_s, w)
        rows.append([w, ec, ac, em, am])
        for closed, matrix in ((ec, em), (ac, am)):
            scale = max(abs(closed), abs(matrix), 1e-300)
            worst = max(worst, abs(closed - matrix) / scale)
    params["max_route_deviation"] = worst
    emit_table(params, columns, rows, args.format, args.out_stream)
    if args.check and worst > 1e-6:
        print(
            f"self-check failed: dual-route deviation {worst:g} exceeds 1e-06",
            file=sys.stderr,
        )
        return EXIT_SELFCHECK
    return EXIT_OK


def _flags_str(flags) -> str:
    return "|".join(sorted(flags))


def _si_physical(args, config) -> PhysicalParams:
    vals = {key: _resolve(args, config, key, required=True) for key in _SI_KEYS}
    try:
        return PhysicalParams(
            m=vals["mass"],
            omega_0=vals["omega0"],
            omega_f=vals["omega_f"],
            gamma_s=vals["gamma_s"],
            f_0=vals["f0"],
            kappa=vals["kappa"],
            temperature=vals["temperature"],
            omega_c=vals["omega_c"],
        )
    except ValueError as exc:
        raise CliInputError(str(exc)) from None


def _si_qubit(args, config, omega_q: float | None = None) -> QubitParams:
    delta = _resolve(args, config, "qubit_delta", required=True)
    delta_q = _resolve(args, config, "delta_q", default=0.0)
    v_x = _resolve(args, config, "v_x", default=0.0)
    v_z = _resolve(args, config, "v_z", default=0.0)
    if omega_q is None:
        w = _resolve(args, config, "qubit_w", required=True)
    else:
        if omega_q <= abs(delta):
            raise CliInputError("swept omega_q must exceed |qubit-delta|")
        w = math.sqrt(omega_q**2 - delta**2)
    try:
        return QubitParams(w=w, delta=delta, delta_q=delta_q, v_x=v_x, v_z=v_z)
    except ValueError as exc:
        raise CliInputError(str(exc)) from None


def cmd_rates(args, config) -> int:
    regime = _resolve(args, config, "regime", cast=str, default="resonant-1q")
    if regime not in _REGIMES:
        raise CliInputError(f"unknown regime {regime!r}")
    if regime == "resonant-1q":
        return _rates_scaled(args, config)
    return _rates_si(args, config, regime)


def _rates_scaled(args, config) -> int:
    """Dimensionless resonant one-quantum sweep over the scaled detuning."""
    beta = _resolve(args, config, "beta", required=True)
    kappa = _resolve(args, config, "kappa_scaled", required=True)
    n_bar = _resolve(args, config, "nbar", default=0.5)
    which = _resolve(args, config, "attractor", cast=str, default="both")
    grid = parse_grid(_resolve(args, config, "grid", cast=str, default="-5:5:2001"))
    branches = _branch_choices(which)

    found = {a.branch: a for a in solve_attractors(beta, kappa)}
    params = {
        "command": "rates",
        "regime": "resonant-1q",
        "beta": beta,
        "kappa_scaled": kappa,
        "nbar": n_bar,
        "attractor": which,
    }
    columns = ["omega"]
    chosen: list[tuple[Branch, Attractor | None]] = []
    for branch in branches:
        a = found.get(branch)
        if a is not None and not a.stable:
            raise MarginalAttractorError(f"{branch.value} attractor is marginal")
        chosen.append((branch, a))
        tag = branch.value
        columns += [
            f"u_{tag}",
            f"nu_{tag}",
            f"gamma_e_scaled_{tag}",
            f"gamma_g_scaled_{tag}",
            f"teff_star_{tag}",
            f"flags_{tag}",
        ]
        params[f"u_{tag}"] = a.u if a else float("nan")
        params[f"nu_{tag}"] = a.nu_scaled if a else float("nan")

    rows = []
    nan = float("nan")
    for w in grid:
        w = float(w)
        row: list = [w]
        for branch, a in chosen:
            if a is None:
                row += [nan, nan, nan, nan, nan, "absent"]
                continue
            ge, gg = resonant_1q_scaled(w, a.u, a.nu_scaled, kappa, n_bar)
            row += [a.u, a.nu_scaled, ge, gg, _teff_star(ge, gg)]
            flags = []
            if kappa >= a.nu_scaled:
                flags.append(FLAG_WEAK_DAMPING)
            row.append(_flags_str(flags))
        rows.append(row)
    emit_table(params, columns, rows, args.format, args.out_stream)
    return EXIT_OK


def _rates_si(args, config, regime: str) -> int:
    """SI sweep over the qubit frequency for the remaining regimes."""
    phys = _si_physical(args, config)
    scaled = scale_params(phys)
    grid = parse_grid(_resolve(args, config, "grid", cast=str, required=True))
    which = _resolve(args, config, "attractor", cast=str, default="large")

    needs_attractor = regime in ("resonant-total", "nonresonant", "linear-resonant")
    attractor = None
    if needs_attractor:
        attractor = _pick_required(scaled.beta, scaled.kappa_scaled, Branch(which))

    params = {
        "command": "rates",
        "regime": regime,
        "beta": scaled.beta,
        "kappa_scaled": scaled.kappa_scaled,
        "lambda_s": scaled.lambda_s,
        "nbar": scaled.n_bar,
        "attractor": which if needs_attractor else "",
    }
    for key in _SI_KEYS:
        params[key] = _resolve(args, config, key)
    columns = ["omega_q", "gamma_e", "gamma_g", "t1", "t_eff", "flags"]
    rows = []
    for omega_q in grid:
        qubit = _si_qubit(args, config, omega_q=float(omega_q))
        if regime == "resonant-2q":
            res = gamma_resonant_2q(qubit, phys)
        elif regime == "resonant-total":
            res = gamma_total_resonant(qubit, phys, attractor, scaled)
        elif regime == "nonresonant":
            res = gamma_nonresonant(qubit, phys, attractor, s=scaled)
        elif regime == "nonresonant-2q":
            res = gamma_nonresonant_2q(qubit, phys)
        else:  # linear-resonant / linear-nonresonant
            if regime == "linear-resonant":
                res = gamma_linear_resonant(qubit, phys, attractor, scaled)
            else:
                res = gamma_linear_nonresonant(qubit, phys)
        rows.append(
            [float(omega_q), res.gamma_e, res.gamma_g, res.t1, res.t_eff,
             _flags_str(res.flags)]
        )
    emit_table(params, columns, rows, args.format, args.out_stream)
    return EXIT_OK


def _teff_star(gamma_e: float, gamma_g: float) -> float:
    """Scaled effective temperature kB*T_eff/(hbar*omega_q) = 1/ln(Ge/Gg)."""
    if gamma_e <= 0.0 or gamma_g <= 0.0:
        return float("nan")
    log_ratio = math.log(gamma_e / gamma_g)
    if log_ratio == 0.0:
        return math.inf
    return 1.0 / log_ratio


def cmd_teff(args, config) -> int:
    kappa = _resolve(args, config, "kappa_scaled", required=True)
    n_bar = _resolve(args, config, "nbar", default=0.5)
    omega_rel = _resolve(args, config, "omega_rel", required=True)
    branch = Branch(_resolve(args, config, "attractor", cast=str, required=True))
    grid = parse_grid(_resolve(args, config, "grid", cast=str, default="0.01:0.179:170"))

    params = {
        "command": "teff",
        "kappa_scaled": kappa,
        "nbar": n_bar,
        "omega_rel": omega_rel,
        "attractor": branch.value,
    }
    columns = ["beta", "u", "nu", "gamma_e_scaled", "gamma_g_scaled",
               "ln_ratio", "teff_star", "flags"]
    rows = []
    nan = float("nan")
    for beta in grid:
        beta = float(beta)
        a = _pick(solve_attractors(beta, kappa), branch)
        if a is None or not a.stable:
            tag = "absent" if a is None else "marginal"
            rows.append([beta, nan, nan, nan, nan, nan, nan, tag])
            continue
        ge, gg = resonant_1q_scaled(omega_rel, a.u, a.nu_scaled, kappa, n_bar)
        lnr = math.log(ge / gg) if ge > 0 and gg > 0 else nan
        flags = [FLAG_WEAK_DAMPING] if kappa >= a.nu_scaled else []
        rows.append([beta, a.u, a.nu_scaled, ge, gg, lnr, _teff_star(ge, gg),
                     _flags_str(flags)])
    emit_table(params, columns, rows, args.format, args.out_stream)
    return EXIT_OK


def match_report(
    hierarchies: list[float],
    beta: float = 0.12,
    kappa_scaled: float = 0.3,
    n_bar: float = 0.5,
    lambda_s: float = 1e-3,
) -> list[tuple[float, float, float]]:
    """Resonant-1q / nonresonant rate ratios across a frequency hierarchy.

    For each factor h a parameter set is built with
    |omega_rel| = h * max(nu, kappa_scaled, 1) and omega_f/|delta_omega| =
    h * |omega_rel|, so the overlap condition nu, kappa << |omega_q - 2
    omega_f| << omega_f deepens with h.  Returns (h, ratio_e, ratio_g) rows;
    both ratios approach 1.
    """
    rows = []
    for h in hierarchies:
        a = _pick_required(beta, kappa_scaled, Branch.LARGE)
        omega_rel = h * max(a.nu_scaled, kappa_scaled, 1.0)
        # detuning scale 1 rad/s; the ratio is invariant under the overall scale
        phys = physical_from_scaled(
            beta, kappa_scaled, lambda_s, n_bar,
            detuning=1.0, omega_f_ratio=h * omega_rel,
        )
        scaled = scale_params(phys)
        omega_q = 2.0 * phys.omega_f + omega_rel
        delta = 1e-3 * omega_q
        qubit = QubitParams(
            w=math.sqrt(omega_q**2 - delta**2), delta=delta, delta_q=1.0
        )
        attractor = _pick_required(scaled.beta, scaled.kappa_scaled, Branch.LARGE)
        res = gamma_resonant_1q(qubit, phys, attractor, scaled)
        non = gamma_nonresonant(qubit, phys, attractor, s=scaled)
        rows.append((h, res.gamma_e / non.gamma_e, res.gamma_g / non.gamma_g))
    return rows


def cmd_match(args, config) -> int:
    raw = _resolve(args, config, "hierarchies", cast=str, default="10,30,100")
    try:
        hierarchies = [float(tok) for tok in raw.split(",") if tok.strip()]
    except ValueError as exc:
        raise CliInputError(f"bad --hierarchies: {exc}") from None
    if not hierarchies:
        raise CliInputError("at least one hierarchy factor is required")
    beta = _resolve(args, config, "beta", default=0.12)
    kappa = _resolve(args, config, "kappa_scaled", default=0.3)
    n_bar = _resolve(args, config, "nbar", default=0.5)
    lambda_s = _resolve(args, config, "lambda_s", default=1e-3)

    rows_raw = match_report(hierarchies, beta, kappa, n_bar, lambda_s)
    params = {
        "command": "match",
        "beta": beta,
        "kappa_scaled": kappa,
        "nbar": n_bar,
        "lambda_s": lambda_s,
    }
    columns = ["h", "ratio_e", "ratio_g", "dev_e", "dev_g"]
    rows = [
        [h, re, rg, abs(re - 1.0), abs(rg - 1.0)] for h, re, rg in rows_raw
    ]
    emit_table(params, columns, rows, args.format, args.out_stream)

    devs_e = [row[3] for row in rows]
    devs_g = [row[4] for row in rows]
    converges = all(b < a for a, b in zip(devs_e, devs_e[1:])) and all(
        b < a for a, b in zip(devs_g, devs_g[1:])
    )
    if len(rows) > 1 and not converges:
        print("self-check failed: rate ratio does not converge to 1", file=sys.stderr)
        return EXIT_SELFCHECK
    return EXIT_OK


def cmd_validate(args, config) -> int:
    beta = _resolve(args, config, "beta", default=0.12)
    kappa = _resolve(args, config, "kappa_scaled", default=0.3)
    lambda_s = _resolve(args, config, "lambda_s", default=0.01)
    n_bar = _resolve(args, config, "nbar", default=0.5)
    out = args.out_stream
    failures = 0

    def report(name: str, ok: bool, metric: str) -> None:
        nonlocal failures
        out.write(f"{'ok  ' if ok else 'FAIL'} {name}: {metric}\n")
        if not ok:
            failures += 1

    # steady-state equation residuals across the sweep
    worst = 0.0
    for b in np.linspace(0.0, 0.25, 101):
        for a in solve_attractors(float(b), kappa):
            res = abs(a.u * ((a.u - 1.0) ** 2 + kappa**2) - b) / max(b, 1.0)
            worst = max(worst, res)
    report("attractor_residual", worst < 1e-10, f"max={worst:.3e} (limit 1e-10)")

    # attractor count matches the bistability window
    info = bifurcation_betas(kappa)
    ok = True
    for b in np.linspace(1e-3, 0.25, 97):
        n = len(solve_attractors(float(b), kappa))
        inside = info.bistable and info.beta_low < b < info.beta_high
        ok = ok and (n == 3 if inside else n == 1)
    report("attractor_count", ok, "1 outside / 3 inside the bistable window")

    # quasienergy gap closes at the boundaries
    if info.bistable:
        gap = 0.0
        for b_edge in (info.beta_low, info.beta_high):
            for a in solve_attractors(b_edge, kappa):
                k = drift_matrix(a, kappa)
                det = float(np.linalg.det(k))
                if a.marginal:
                    gap = max(gap, abs(det))
        report("bifurcation_gap", gap < 1e-8, f"|det K|={gap:.3e} at boundaries")

    # Lyapunov residual and positive definiteness
    worst = 0.0
    pd = True
    for b in (0.0, 0.05, beta, 0.2):
        for a in solve_attractors(float(b), kappa):
            if not a.stable:
                continue
            k = drift_matrix(a, kappa)
            cov = stationary_covariance(k, lambda_s, kappa, n_bar)
            src = lambda_s * kappa * (2.0 * n_bar + 1.0) * np.eye(2)
            worst = max(worst, float(np.linalg.norm(k @ cov + cov @ k.T + src)))
            pd = pd and np.all(np.linalg.eigvalsh(cov) > 0.0)
    report("lyapunov_residual", worst < 1e-10, f"max={worst:.3e} (limit 1e-10)")
    report("covariance_positive", pd, "eigenvalues > 0")

    # dual-route spectrum agreement
    worst = 0.0
    for a in solve_attractors(beta, kappa):
        if not a.stable:
            continue
        k = drift_matrix(a, kappa)
        cov = stationary_covariance(k, lambda_s, kappa, n_bar)
        for w in np.linspace(-5, 5, 201):
            w = float(w)
            pairs = (
                (emission_spectrum(w, a.u, a.nu_scaled, kappa, lambda_s, n_bar),
                 emission_from_matrix(k, cov, lambda_s, w)),
                (absorption_spectrum(w, a.u, a.nu_scaled, kappa, lambda_s, n_bar),
                 absorption_from_matrix(k, cov, lambda_s, w)),
            )
            for closed, matrix in pairs:
                scale = max(abs(closed), abs(matrix), 1e-300)
                worst = max(worst, abs(closed - matrix) / scale)
    report("dual_route", worst < 1e-6, f"max rel dev={worst:.3e} (limit 1e-6)")

    return EXIT_SELFCHECK if failures else EXIT_OK


# ----------------------------------------------------------------------------
# argument wiring
# ----------------------------------------------------------------------------

def _add_output_flags(sp) -> None:
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--out", default=None, help="output file (default stdout)")
    sp.add_argument("--config", default=None, help="flat key=value parameter file")


def _add_scaled_flags(sp) -> None:
    sp.add_argument("--beta", type=float, default=None)
    sp.add_argument("--kappa-scaled", dest="kappa_scaled", type=float, default=None)
    sp.add_argument("--nbar", type=float, default=None)
    sp.add_argument("--lambda-s", dest="lambda_s", type=float, default=None)


def _add_si_flags(sp) -> None:
    sp.add_argument("--mass", type=float, default=None)
    sp.add_argument("--omega0", type=float, default=None)
    sp.add_argument("--omega-f", dest="omega_f", type=float, default=None)
    sp.add_argument("--gamma-s", dest="gamma_s", type=float, default=None)
    sp.add_argument("--f0", type=float, default=None)
    sp.add_argument("--kappa", type=float, default=None)
    sp.add_argument("--temperature", type=float, default=None)
    sp.add_argument("--omega-c", dest="omega_c", type=float, default=None)
    sp.add_argument("--qubit-w", dest="qubit_w", type=float, default=None)
    sp.add_argument("--qubit-delta", dest="qubit_delta", type=float, default=None)
    sp.add_argument("--delta-q", dest="delta_q", type=float, default=None)
    sp.add_argument("--v-x", dest="v_x", type=float, default=None)
    sp.add_argument("--v-z", dest="v_z", type=float, default=None)


def build_parser() -> _Parser:
    parser = _Parser(prog="duffing-qubit", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("attractors", help="branch radii and quasienergy gaps vs beta")
    sp.add_argument("--kappa-scaled", dest="kappa_scaled", type=float, default=None)
    sp.add_argument("--grid", default=None, help="beta grid start:stop:count[:log]")
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_attractors)

    sp = sub.add_parser("spectrum", help="emission/absorption spectra, both routes")
    _add_scaled_flags(sp)
    sp.add_argument("--attractor", choices=("small", "large"), default=None)
    sp.add_argument("--grid", default=None, help="omega grid start:stop:count[:log]")
    sp.add_argument("--check", action="store_true",
                    help="exit 3 if the two routes disagree beyond 1e-6")
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("rates", help="decay/excitation rates vs detuning")
    sp.add_argument("--regime", choices=_REGIMES, default=None)
    _add_scaled_flags(sp)
    _add_si_flags(sp)
    sp.add_argument("--attractor", choices=("small", "large", "both"), default=None)
    sp.add_argument("--grid", default=None,
                    help="scaled detuning grid (resonant-1q) or omega_q grid (SI regimes)")
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_rates)

    sp = sub.add_parser("teff", help="effective temperature vs beta")
    _add_scaled_flags(sp)
    sp.add_argument("--omega-rel", dest="omega_rel", type=float, default=None,
                    help="fixed scaled detuning (omega_q - 2 omega_f)/|delta_omega|")
    sp.add_argument("--attractor", choices=("small", "large"), default=None)
    sp.add_argument("--grid", default=None, help="beta grid start:stop:count[:log]")
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_teff)

    sp = sub.add_parser("match", help="resonant vs nonresonant ratio across hierarchies")
    _add_scaled_flags(sp)
    sp.add_argument("--hierarchies", default=None, help="comma-separated factors (10,30,100)")
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_match)

    sp = sub.add_parser("validate", help="run internal self-checks")
    _add_scaled_flags(sp)
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = load_config(getattr(args, "config", None))
        out_path = getattr(args, "out", None)
        if out_path:
            with open(out_path, "w", encoding="utf-8") as fh:
                args.out_stream = fh
                return args.func(args, config)
        args.out_stream = sys.stdout
        return args.func(args, config)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (MarginalAttractorError, NearResonanceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDITY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
