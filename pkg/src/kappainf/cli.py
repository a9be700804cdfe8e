"""Command line surface: eval, infimum, root, verify.

Exit codes are a stable contract: 0 success, 2 usage or domain error,
3 numerical failure (including any failed verification report).  CSV and
JSON outputs print floats in shortest round-trip form, so re-reading a file
and re-evaluating the curve reproduces the written values bit for bit.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from typing import Optional

import click

from .curves import reduce_params, reduced_prob
from .distributions import DistParams, Family, cdf, mean
from .errors import DomainError, NumericalError, RegimeError
from .oracles import GridSpec
from .solver import InfimumResult, ig_critical_point, infimum
from .verification import BUDGETS, run_verification
from . import curves

_FAMILY_NAMES = [f.value for f in Family]
_SCALE_FLAG = {
    Family.INVERSE_GAUSSIAN: "lambda",
    Family.LOG_NORMAL: "sigma",
    Family.GUMBEL: "beta",
    Family.LOGISTIC: "beta",
}


def _parse_kappas(ctx, param, value: str) -> list[float]:
    try:
        kappas = [float(part) for part in value.split(",") if part.strip() != ""]
    except ValueError:
        raise click.BadParameter(f"expected a comma list of numbers, got {value!r}")
    if not kappas:
        raise click.BadParameter("at least one kappa value is required")
    if any(not k > 0 for k in kappas):
        raise click.BadParameter("every kappa must be > 0")
    return kappas


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _render_csv(headers: list[str], rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    for row in rows:
        writer.writerow([_cell(row[h]) for h in headers])
    return buf.getvalue().rstrip("\n")


def _render_table(headers: list[str], rows: list[dict]) -> str:
    def show(value) -> str:
        if value is None:
            return "-"
        if isinstance(value, bool):
            return "yes" if value else "no"
        if isinstance(value, float):
            return format(value, ".15g")
        return str(value)

    cells = [[show(row[h]) for h in headers] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
              for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for r in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


def _fail_usage(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _fail_numerical(message: str) -> None:
    click.echo(f"numerical failure: {message}", err=True)
    sys.exit(3)


@click.group()
@click.version_option(package_name="kappainf", prog_name="kappainf")
def main() -> None:
    """Probabilities P(X <= kappa*E[X]) and their infima for the inverse
    Gaussian, log-normal, Gumbel and logistic families."""


@main.command("eval")
@click.option("--family", required=True, type=click.Choice(_FAMILY_NAMES))
@click.option("--kappa", required=True, type=float)
@click.option("--coord", type=float, default=None,
              help="Reduced coordinate (sqrt(lambda/mu), sigma, or mu/beta).")
@click.option("--mu", type=float, default=None)
@click.option("--lambda", "lam", type=float, default=None, help="Inverse Gaussian shape.")
@click.option("--sigma", type=float, default=None, help="Log-normal log-scale.")
@click.option("--beta", type=float, default=None, help="Gumbel/logistic scale.")
def cmd_eval(family, kappa, coord, mu, lam, sigma, beta) -> None:
    """Print P(X <= kappa*E[X]) for one family member (15 significant digits)."""
    fam = Family(family)
    native = {name: value for name, value in
              (("mu", mu), ("lambda", lam), ("sigma", sigma), ("beta", beta))
              if value is not None}
    try:
        if coord is not None:
            if native:
                raise DomainError("supply either --coord or native parameters, not both")
            prob = reduced_prob(fam, kappa, coord)
        else:
            expected = {"mu", _SCALE_FLAG[fam]}
            if set(native) != expected:
                flags = " and ".join(f"--{name}" for name in sorted(expected))
                raise DomainError(f"family {fam.value} takes exactly {flags} (or --coord)")
            params = DistParams(fam, native["mu"], native[_SCALE_FLAG[fam]])
            prob = cdf(params, kappa * mean(params))
    except (DomainError, RegimeError) as exc:
        _fail_usage(str(exc))
    click.echo(format(prob, ".15g"))


def _infimum_row(result: InfimumResult) -> dict:
    return {
        "family": result.family.value,
        "kappa": float(result.kappa),
        "value": float(result.value),
        "attained": bool(result.attained),
        "constant": bool(result.constant),
        "argmin": float(result.argmin.coord) if result.argmin is not None else None,
        "limit_direction": result.limit_direction.value
        if result.limit_direction is not None else None,
    }


_INFIMUM_HEADERS = ["family", "kappa", "value", "attained", "constant",
                    "argmin", "limit_direction"]
_CURVE_HEADERS = ["family", "kappa", "coord", "g"]


@main.command("infimum")
@click.option("--family", required=True, type=click.Choice(_FAMILY_NAMES))
@click.option("--kappa", required=True, callback=_parse_kappas,
              help="Comma list of positive mean multipliers, e.g. 0.5,1,2.")
@click.option("--format", "fmt", type=click.Choice(["table", "csv", "json"]),
              default="table", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
@click.option("--curve-points", type=click.IntRange(2, 1_000_000), default=None,
              help="Also sample the curve at this many coordinates per kappa.")
@click.option("--curve-out", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Write curve samples (CSV columns family,kappa,coord,g) here.")
def cmd_infimum(family, kappa, fmt, out, curve_points, curve_out) -> None:
    """Infimum of the probability over the parameter space, one row per kappa."""
    fam = Family(family)
    try:
        results = [infimum(fam, k) for k in kappa]
        rows = [_infimum_row(r) for r in results]
        curve_rows: list[dict] = []
        if curve_points is not None:
            pts = GridSpec.default_for(fam, curve_points).points()
            for k in kappa:
                vals = reduced_prob(fam, k, pts)
                curve_rows += [
                    {"family": fam.value, "kappa": float(k),
                     "coord": float(c), "g": float(v)}
                    for c, v in zip(pts, vals)
                ]
    except (DomainError, RegimeError) as exc:
        _fail_usage(str(exc))
    except NumericalError as exc:
        _fail_numerical(str(exc))

    if fmt == "json":
        payload = {"schema": "kappainf-infimum/1", "results": rows}
        if curve_points is not None:
            for row in payload["results"]:
                row["curve"] = [
                    {"coord": c["coord"], "g": c["g"]}
                    for c in curve_rows if c["kappa"] == row["kappa"]
                ]
        text = json.dumps(payload, indent=2)
    elif fmt == "csv":
        text = _render_csv(_INFIMUM_HEADERS, rows)
        if curve_rows and curve_out is None:
            text += "\n\n" + _render_csv(_CURVE_HEADERS, curve_rows)
    else:
        text = _render_table(_INFIMUM_HEADERS, rows)
        if curve_rows and curve_out is None:
            text += "\n\ncurve samples\n" + _render_table(_CURVE_HEADERS, curve_rows)
    _emit(text, out)
    if curve_rows and curve_out is not None:
        _emit(_render_csv(_CURVE_HEADERS, curve_rows), curve_out)


_ROOT_HEADERS = ["kappa", "critical_coord", "upper_bound", "value", "residual"]


@main.command("root")
@click.option("--kappa", required=True, callback=_parse_kappas,
              help="Comma list of multipliers > 1.")
@click.option("--format", "fmt", type=click.Choice(["table", "csv", "json"]),
              default="table", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def cmd_root(kappa, fmt, out) -> None:
    """Critical coordinate of the inverse Gaussian curve (kappa > 1 only)."""
    try:
        rows = []
        for k in kappa:
            x0 = ig_critical_point(k)
            rows.append({
                "kappa": float(k),
                "critical_coord": float(x0),
                "upper_bound": float(curves.ig_peak_coord(k)),
                "value": float(reduced_prob(Family.INVERSE_GAUSSIAN, k, x0)),
                "residual": float(curves.ig_stationarity(k, x0)),
            })
    except (DomainError, RegimeError) as exc:
        _fail_usage(str(exc))
    except NumericalError as exc:
        _fail_numerical(str(exc))
    if fmt == "json":
        text = json.dumps({"schema": "kappainf-root/1", "results": rows}, indent=2)
    elif fmt == "csv":
        text = _render_csv(_ROOT_HEADERS, rows)
    else:
        text = _render_table(_ROOT_HEADERS, rows)
    _emit(text, out)


_VERIFY_HEADERS = ["status", "method", "analytic", "estimate", "tolerance", "detail"]


@main.command("verify")
@click.option("--budget", type=click.Choice(sorted(BUDGETS)), default="quick",
              show_default=True)
@click.option("--seed", type=int, default=1, show_default=True,
              help="Drives all randomness in the run.")
@click.option("--format", "fmt", type=click.Choice(["table", "csv", "json"]),
              default="table", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def cmd_verify(budget, seed, fmt, out) -> None:
    """Re-derive every analytic claim numerically; exit 0 only if all pass."""
    try:
        reports = run_verification(budget=budget, seed=seed)
    except (DomainError, RegimeError) as exc:
        _fail_usage(str(exc))
    except NumericalError as exc:
        _fail_numerical(str(exc))
    rows = [
        {
            "status": "PASS" if r.passed else "FAIL",
            "method": r.method,
            "analytic": float(r.analytic),
            "estimate": float(r.estimate),
            "tolerance": float(r.tolerance),
            "detail": r.detail,
        }
        for r in reports
    ]
    n_pass = sum(r.passed for r in reports)
    if fmt == "json":
        text = json.dumps(
            {"schema": "kappainf-verify/1", "budget": budget, "seed": seed,
             "passed": n_pass, "total": len(reports), "reports": rows},
            indent=2,
        )
    elif fmt == "csv":
        text = _render_csv(_VERIFY_HEADERS, rows)
    else:
        text = _render_table(_VERIFY_HEADERS, rows)
        text += f"\n\n{n_pass}/{len(reports)} checks passed"
    _emit(text, out)
    if n_pass != len(reports):
        sys.exit(3)


if __name__ == "__main__":
    main()
