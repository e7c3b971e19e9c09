"""Command-line entry point wiring every module together.

Artifacts (JSON and CSV) embed the full run configuration and a digest of
any input files, so each file documents how to reproduce itself.  Identical
(subcommand, options, seed) produce byte-identical artifacts.

Exit codes: 0 success, 1 assertion failure, 2 usage error, 3 statistically
inconclusive (re-run with more samples).
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
import sys
from fractions import Fraction

import click
import numpy as np

from . import acceptance
from .determinants import (cauchy_det, cauchy_matrix, exact_det,
                           factorial_det_formula, factorial_matrix)
from .grassmann import (base_point, haar_sample, jacobian_factor,
                        principal_cosines, rescaling_flow, sample_cosine_data)
from .partitions import (count_types, count_weight_class, density,
                         predicate_from_name)
from .pdekernel import (DiffOp, density_bound_check, growth_fit, kernel_dim,
                        mu_kernel_dim, reduce_operator)
from .transforms import (MultiplierTable, multiplier_table, radon_table,
                         support_density_demo)
from .zonal import JacobiFamily, MomentOracle, build_family

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def _apply_threads(threads: int | None) -> None:
    """Limit numeric thread pools; default comes from GRASSHARM_THREADS."""
    if threads is None:
        env = os.environ.get("GRASSHARM_THREADS")
        threads = int(env) if env else None
    if threads is not None:
        import threadpoolctl
        threadpoolctl.threadpool_limits(threads)


def _digest(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _config(ctx: click.Context, **params) -> dict:
    """Run configuration embedded in every artifact."""
    return {"command": ctx.command_path, "parameters": params}


def _write_json(path: str | None, config: dict, payload: dict,
                inputs: dict[str, str] | None = None) -> None:
    doc = {"config": config, "inputs_digest": inputs or {}, "payload": payload}
    text = json.dumps(doc, sort_keys=True, indent=1) + "\n"
    if path is None:
        click.echo(text, nl=False)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _write_csv(path: str | None, config: dict, header: list[str],
               rows: list[list]) -> None:
    buf = io.StringIO()
    buf.write("# " + json.dumps(config, sort_keys=True) + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    text = buf.getvalue()
    if path is None:
        click.echo(text, nl=False)
    else:
        with open(path, "w") as fh:
            fh.write(text)


@click.group()
@click.option("--threads", type=int, default=None,
              help="Limit numeric thread pools (default: GRASSHARM_THREADS).")
def main(threads):
    """Harmonic analysis on real grassmannians: exact combinatorics,
    zonal polynomial families, spectral multipliers and kernel counts."""
    _apply_threads(threads)


# ------------------------------------------------------------- partitions

@main.group()
def partitions():
    """Enumerate and count orthogonal-group types."""


@partitions.command("count")
@click.option("--k", required=True, type=int)
@click.option("--max-weight", required=True, type=int)
@click.option("-o", "--output", type=click.Path(dir_okay=False))
@click.pass_context
def partitions_count(ctx, k, max_weight, output):
    """Per-weight and cumulative type counts up to a weight cutoff."""
    if k < 1 or max_weight < 0:
        raise click.UsageError("need k >= 1 and max-weight >= 0")
    config = _config(ctx, k=k, max_weight=max_weight)
    rows = [[w, count_weight_class(k, w), count_types(k, w)]
            for w in range(0, max_weight + 1, 2)]
    _write_csv(output, config, ["weight", "class_count", "cumulative_count"],
               rows)


@partitions.command("density")
@click.option("--k", required=True, type=int)
@click.option("--max-weight", required=True, type=int)
@click.option("--predicate", required=True,
              help="always, part<i>_le:<b>, part<i>_ge:<b>, or part<i>_zero.")
@click.option("-o", "--output", type=click.Path(dir_okay=False))
@click.pass_context
def partitions_density(ctx, k, max_weight, predicate, output):
    """Exact density of a predicate among types up to each weight cutoff."""
    try:
        pred = predicate_from_name(predicate)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    config = _config(ctx, k=k, max_weight=max_weight, predicate=predicate)
    rows = []
    for w in range(0, max_weight + 1, 2):
        d = density(pred, k, w)
        rows.append([w, d.numerator, d.denominator])
    _write_csv(output, config, ["weight", "density_num", "density_den"], rows)


# -------------------------------------------------------------- grassmann

@main.group()
def grassmann():
    """Haar sampling and the rescaling flow."""


@grassmann.command("sample")
@click.option("--n", required=True, type=int)
@click.option("--k", required=True, type=int)
@click.option("--count", default=1000, type=int, show_default=True)
@click.option("--seed", required=True, type=int)
@click.option("-o", "--output", type=click.Path(dir_okay=False))
@click.pass_context
def grassmann_sample(ctx, n, k, count, seed, output):
    """Squared principal cosines of Haar samples against the base point."""
    if not 1 <= k < n:
        raise click.UsageError("need 1 <= k < n")
    config = _config(ctx, n=n, k=k, count=count, seed=seed)
    rng = np.random.default_rng(seed)
    y, abscos = sample_cosine_data(n, k, count, rng)
    payload = {"squared_cosines": y.tolist(), "abs_cosine": abscos.tolist()}
    _write_json(output, config, payload)


@grassmann.command("flow")
@click.option("--n", required=True, type=int)
@click.option("--k", required=True, type=int)
@click.option("--eps", required=True, type=float)
@click.option("--count", default=5, type=int, show_default=True)
@click.option("--seed", required=True, type=int)
@click.option("-o", "--output", type=click.Path(dir_okay=False))
@click.pass_context
def grassmann_flow(ctx, n, k, eps, count, seed, output):
    """Apply the rescaling flow to Haar samples and report cosines and
    jacobian factors before and after."""
    if not 1 <= k < n:
        raise click.UsageError("need 1 <= k < n")
    if eps <= 0:
        raise click.UsageError("eps must be positive")
    config = _config(ctx, n=n, k=k, eps=eps, count=count, seed=seed)
    rng = np.random.default_rng(seed)
    E0 = base_point(n, k)
    samples = []
    for _ in range(count):
        E = haar_sample(n, k, rng)
        g = rescaling_flow(E0, eps, E)
        samples.append({
            "cosines_before": principal_cosines(E, E0).tolist(),
            "cosines_after": principal_cosines(g, E0).tolist(),
            "jacobian_factor": jacobian_factor(E0, eps, E),
        })
    _write_json(output, config, {"samples": samples})


# ------------------------------------------------------------------ zonal

@main.group()
def zonal():
    """Orthogonal zonal polynomial families."""


@zonal.command("build")
@click.option("--n", required=True, type=int)
@click.option("--k", required=True, type=int)
@click.option("--max-weight", required=True, type=int)
@click.option("--method", type=click.Choice(["mc", "quadrature"]),
              default="mc", show_default=True)
@click.option("--samples", default=200_000, type=int, show_default=True)
@click.option("--seed", type=int, default=None,
              help="Required for the Monte Carlo method.")
@click.option("--nodes", default=64, type=int, show_default=True)
@click.option("-o", "--output", required=True,
              type=click.Path(dir_okay=False))
@click.pass_context
def zonal_build(ctx, n, k, max_weight, method, samples, seed, nodes, output):
    """Build the orthogonal family up to a weight cutoff and save it."""
    if not 1 <= k < n:
        raise click.UsageError("need 1 <= k < n")
    if method == "mc":
        if seed is None:
            raise click.UsageError("--seed is required for the Monte Carlo "
                                   "method")
        oracle = MomentOracle.monte_carlo(n, k, samples, seed)
    else:
        if min(k, n - k) != 1:
            raise click.UsageError("quadrature requires min(k, n-k) = 1")
        oracle = MomentOracle.quadrature_kappa1(n, k, nodes=nodes)
    config = _config(ctx, n=n, k=k, max_weight=max_weight, method=method,
                     samples=samples, seed=seed, nodes=nodes)
    family = build_family(n, k, max_weight, oracle)
    _write_json(output, config, family.to_json_dict())


def _load_family(path: str) -> tuple[JacobiFamily, dict[str, str]]:
    with open(path) as fh:
        doc = json.load(fh)
    payload = doc["payload"] if "payload" in doc else doc
    return JacobiFamily.from_json_dict(payload), {path: _digest(path)}


# -------------------------------------------------------------- transform

def _parse_operator(op: str) -> tuple[str, float | int]:
    if op == "cos":
        return "cos", 1.0
    if op.startswith("alpha:"):
        return "alpha", float(op.split(":", 1)[1])
    if op.startswith("radon:"):
        return "radon", int(op.split(":", 1)[1])
    raise click.UsageError(f"unknown operator {op!r}; "
                          "use cos, alpha:<a> or radon:<p>")


@main.group()
def transform():
    """Spectral multiplier tables and their classification."""


@transform.command("spectrum")
@click.option("--op", "operator", required=True,
              help="cos, alpha:<a>, or radon:<p>.")
@click.option("--n", required=True, type=int)
@click.option("--k", required=True, type=int)
@click.option("--max-weight", required=True, type=int)
@click.option("--samples", required=True, type=int,
              help="Haar samples per type (outer samples for radon).")
@click.option("--inner", default=128, type=int, show_default=True,
              help="Inner samples per outer sample (radon only).")
@click.option("--seed", required=True, type=int)
@click.option("--family", "family_path", type=click.Path(exists=True),
              help="Previously built family artifact; built on the fly "
                   "when omitted.")
@click.option("-o", "--output", type=click.Path(dir_okay=False))
@click.pass_context
def transform_spectrum(ctx, operator, n, k, max_weight, samples, inner, seed,
                       family_path, output):
    """Estimate the spectral multiplier of one operator on every type."""
    kind, value = _parse_operator(operator)
    if not 1 <= k < n:
        raise click.UsageError("need 1 <= k < n")
    config = _config(ctx, op=operator, n=n, k=k, max_weight=max_weight,
                     samples=samples, inner=inner, seed=seed,
                     family=family_path)
    inputs: dict[str, str] = {}
    if family_path:
        family, inputs = _load_family(family_path)
        if family.n != n or family.k != k or family.max_weight < max_weight:
            raise click.UsageError("family artifact does not cover the "
                                   "requested (n, k, max-weight)")
    elif min(k, n - k) == 1:
        family = build_family(n, k, max_weight,
                              MomentOracle.quadrature_kappa1(n, k))
    else:
        family = build_family(
            n, k, max_weight,
            MomentOracle.monte_carlo(n, k, samples, seed + 1_000_003))
    if kind == "radon":
        table = radon_table(n, k, value, family, max_weight, samples, inner,
                            seed)
    else:
        table = multiplier_table(n, k, value, family, max_weight, samples,
                                 seed)
    _write_json(output, config, table.to_json_dict(), inputs)


@transform.command("classify")
@click.option("--table", "table_path", required=True,
              type=click.Path(exists=True))
@click.option("--vanish-sigmas", default=3.0, show_default=True)
@click.option("--survive-sigmas", default=5.0, show_default=True)
@click.pass_context
def transform_classify(ctx, table_path, vanish_sigmas, survive_sigmas):
    """Classify each type of a multiplier table and report the exact
    surviving-set density.  Exits 3 when any type is inconclusive."""
    with open(table_path) as fh:
        doc = json.load(fh)
    payload = doc["payload"] if "payload" in doc else doc
    table = MultiplierTable.from_json_dict(payload)
    report = support_density_demo(table, vanish_sigmas, survive_sigmas)
    for label, group in (("vanishing", report.vanishing),
                         ("surviving", report.surviving),
                         ("inconclusive", report.inconclusive)):
        for lam in group:
            est = table.estimates[lam]
            click.echo(f"{label:12s} {list(lam.parts)} mean={est.mean:.6g} "
                       f"stderr={est.stderr:.3g}")
    click.echo(f"surviving density: {report.surviving_density}")
    if report.inconclusive:
        click.echo("inconclusive types present; re-run the spectrum with "
                   "more samples", err=True)
        sys.exit(EXIT_INCONCLUSIVE)


# -------------------------------------------------------------------- pde

@main.group()
def pde():
    """Exact kernels of polynomial-coefficient differential operators."""


@pde.command("kernel-dims")
@click.option("--op", "op_path", required=True, type=click.Path(exists=True),
              help="Operator JSON ({'k':..., 'terms':[{'dx','x','c'},...]}).")
@click.option("--m-max", required=True, type=int)
@click.option("--mu-check", is_flag=True,
              help="Cross-check against the mu-matrix kernel (exact).")
@click.option("--density-bound", "density_flag", is_flag=True,
              help="Check the 1 - 1/(2N)^k density bound.")
@click.option("-o", "--output", type=click.Path(dir_okay=False),
              help="CSV of (m, dim P_m, dim Ker).")
@click.option("--report", "report_path", type=click.Path(dir_okay=False),
              help="JSON growth report.")
@click.pass_context
def pde_kernel_dims(ctx, op_path, m_max, mu_check, density_flag, output,
                    report_path):
    """Exact kernel dimensions of one operator for m = 0..m-max."""
    with open(op_path) as fh:
        try:
            D = DiffOp.from_json_dict(json.load(fh))
        except (KeyError, ValueError) as exc:
            raise click.UsageError(f"malformed operator file: {exc}")
    if D.is_zero():
        raise click.UsageError("operator is zero")
    config = _config(ctx, op=op_path, m_max=m_max, mu_check=mu_check,
                     density_bound=density_flag)
    inputs = {op_path: _digest(op_path)}
    from .exactpoly import dim_P
    rows = [[m, dim_P(m, D.k), kernel_dim(D, m)] for m in range(m_max + 1)]
    _write_csv(output, config, ["m", "dim_P", "dim_ker"], rows)

    failures = []
    if mu_check:
        Dred = reduce_operator(D)
        for m, _, ker in rows:
            mu = mu_kernel_dim(Dred, m)
            if mu != ker:
                failures.append(f"mu-matrix kernel {mu} != direct {ker} "
                                f"at m={m}")
    report: dict = {}
    if m_max >= 8:
        fit = growth_fit(D, list(range(m_max - 8, m_max + 1, 2)))
        report["growth"] = {"slope": fit.slope,
                            "slope_stderr": fit.slope_stderr,
                            "slope_limit": fit.slope_limit,
                            "violates": fit.violates_growth}
        if fit.violates_growth:
            failures.append(f"growth slope {fit.slope:.3f} exceeds "
                            f"{fit.slope_limit}")
    if density_flag:
        N = reduce_operator(D).order_param
        mprimes = [mp for mp in range(1, 4) if 2 * N * mp <= max(m_max, 2 * N)]
        dens = density_bound_check(D, mprimes)
        report["density_bound"] = {
            "N": dens.N, "bound": str(dens.bound),
            "rows": [[m, dp, ker, str(f), ok] for m, dp, ker, f, ok
                     in dens.rows]}
        if not dens.all_hold:
            failures.append(f"density bound {dens.bound} violated")
    if report_path:
        _write_json(report_path, config, report, inputs)
    for msg in failures:
        click.echo(msg, err=True)
    if failures:
        sys.exit(EXIT_ASSERTION)


# -------------------------------------------------------------------- det

@main.group()
def det():
    """Exact determinant identities."""


@det.command("factorial")
@click.option("--k", required=True, type=int)
@click.option("--n", required=True, type=int)
@click.option("--verify", is_flag=True,
              help="Compare the closed form against exact elimination.")
def det_factorial(k, n, verify):
    """Closed-form determinant of the inverse-factorial matrix."""
    if k < 0 or n < 0:
        raise click.UsageError("need k >= 0 and n >= 0")
    want = factorial_det_formula(k, n)
    click.echo(f"{want}")
    if verify:
        got = exact_det(factorial_matrix(k, n))
        if got != want:
            click.echo(f"mismatch: elimination gives {got}", err=True)
            sys.exit(EXIT_ASSERTION)
        click.echo("verified against exact elimination")


@det.command("cauchy")
@click.option("--size", required=True, type=int)
@click.option("--seed", required=True, type=int)
@click.option("--verify", is_flag=True,
              help="Compare the closed form against exact elimination.")
def det_cauchy(size, seed, verify):
    """Closed-form determinant of a random exact Cauchy matrix."""
    if size < 1:
        raise click.UsageError("size must be >= 1")
    import random as _random
    rng = _random.Random(seed)
    vals = rng.sample(range(-10 * size, 10 * size), 2 * size)
    x = [Fraction(v) for v in vals[:size]]
    y = [Fraction(v) + Fraction(1, 2) for v in vals[size:]]
    want = cauchy_det(x, y)
    click.echo(f"x = {[str(v) for v in x]}")
    click.echo(f"y = {[str(v) for v in y]}")
    click.echo(f"{want}")
    if verify:
        got = exact_det(cauchy_matrix(x, y))
        if got != want:
            click.echo(f"mismatch: elimination gives {got}", err=True)
            sys.exit(EXIT_ASSERTION)
        click.echo("verified against exact elimination")


# ----------------------------------------------------------------- accept

@main.command("accept")
@click.option("--suite", type=click.Choice(["exact", "all"]), default="all",
              show_default=True)
def accept(suite):
    """Run the acceptance criteria, one pass/fail line each."""
    results = acceptance.run_suite(suite, echo=click.echo)
    failed = [r for r in results if not r.passed]
    if not failed:
        return
    if all("inconclusive" in r.detail for r in failed):
        click.echo("only statistical inconclusiveness; re-run with more "
                   "samples", err=True)
        sys.exit(EXIT_INCONCLUSIVE)
    sys.exit(EXIT_ASSERTION)


if __name__ == "__main__":
    main()
