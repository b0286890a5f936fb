"""Command-line front end: deterministic JSON/CSV tables for all modules.

Exit codes: 0 ok, 2 bad usage, 3 verification mismatch, 4 pure-gap
hypothesis failure.
"""

from __future__ import annotations

import itertools
import json
import sys
from concurrent.futures import ThreadPoolExecutor

import click

from . import codes as codes_mod
from . import curve, semigroup
from .riemann_roch import Oracle, divisor

SCHEMA = 1


def _params(n: int) -> curve.GKParams:
    try:
        return curve.params(n)
    except curve.CurveError as exc:
        raise click.UsageError(str(exc))


def _emit(payload: dict, fmt: str, csv_rows=None, csv_header=None):
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        click.echo(csv_header)
        for row in csv_rows:
            click.echo(",".join(str(x) for x in row))


def _tuple_csv(tuples, m):
    header = ",".join(["p_inf"] + [f"p_{s}" for s in range(1, m + 1)])
    return header, [list(t) for t in sorted(tuples)]


def _box_members(oracle: Oracle, m: int, T: int, threads: int) -> set:
    vectors = list(itertools.product(range(T + 1), repeat=m + 1))
    if threads <= 1:
        return {v for v in vectors if semigroup.membership_oracle(oracle, v)}
    chunks = [vectors[i::threads] for i in range(threads)]

    def work(chunk):
        return [v for v in chunk if semigroup.membership_oracle(oracle, v)]

    out = set()
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for res in pool.map(work, chunks):
            out.update(res)
    return out


def _parse_tuple(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise click.UsageError(f"malformed tuple {text!r}")


def _parse_divisor(params, text: str):
    try:
        spec = json.loads(text)
        coeff_inf = int(spec["inf"])
        pj = [int(x) for x in spec.get("pj", [])]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError):
        raise click.UsageError(f"malformed divisor spec {text!r}")
    if len(pj) > params.n:
        raise click.UsageError(f"at most {params.n} P_j coefficients allowed")
    return divisor(params, coeff_inf, pj)


common_n = click.option("--n", "n", type=int, required=True, help="curve size parameter")
common_fmt = click.option(
    "--format", "fmt", type=click.Choice(["json", "csv"]), default="json"
)
common_threads = click.option("--threads", type=int, default=1, show_default=True)


@click.group()
def main():
    """Weierstrass semigroups, pure gaps and AG codes on the GK curve."""


@main.command()
@common_n
@common_fmt
@common_threads
def points(n, fmt, threads):
    """Enumerate all rational points and the orbit decomposition."""
    params = _params(n)
    ps = curve.enumerate_points(params)
    F = params.field

    def coords(pt):
        if pt.is_infinity:
            return ["inf", "", ""]
        return [F.to_str(pt.x), F.to_str(pt.y), F.to_str(pt.z)]

    payload = {
        "schema": SCHEMA,
        "n": n,
        "total": ps.total,
        "counts": {
            "p_inf": 1,
            "p_list": len(ps.p_list),
            "q_list": len(ps.q_list),
            "others": len(ps.others),
        },
        "orbit1": [coords(pt) for pt in ps.orbit1],
    }
    rows = [coords(pt) for pt in ps.orbit1]
    _emit(payload, fmt, csv_rows=rows, csv_header="x,y,z")


@main.command()
@common_n
@click.option("--divisor", "divisor_spec", required=True, help='JSON {"inf": int, "pj": [ints]}')
@common_fmt
@common_threads
def dim(n, divisor_spec, fmt, threads):
    """Riemann-Roch dimension of a divisor on {P_inf, P_1..P_n}."""
    params = _params(n)
    G = _parse_divisor(params, divisor_spec)
    oracle = Oracle(params)
    d = oracle.dim(G)
    _emit({"schema": SCHEMA, "dim": d}, fmt, csv_rows=[[d]], csv_header="dim")


@main.command()
@common_n
@click.option("--m", "m", type=int, required=True)
@click.option(
    "--verify",
    type=click.Choice(["auto", "closed", "both"]),
    default="auto",
    help="'both' re-derives Gamma from the dimension oracle box (default for n=2)",
)
@common_fmt
@common_threads
def gamma(n, m, verify, fmt, threads):
    """Minimal generating set Gamma(P_inf, P_1, ..., P_m)."""
    params = _params(n)
    if not 1 <= m <= n:
        raise click.UsageError(f"m must be in [1, {n}]")
    closed = semigroup.gamma_closed_form(params, m)
    mode = verify if verify != "auto" else ("both" if n == 2 else "closed")
    payload = {
        "schema": SCHEMA,
        "n": n,
        "m": m,
        "gamma": [list(t) for t in sorted(closed)],
        "verification": {"mode": mode},
    }
    exit_code = 0
    if mode == "both":
        oracle = Oracle(params)
        T = 2 * params.genus - 1
        box = _box_members(oracle, m, T, threads)
        recovered = semigroup.gamma_from_box(box, T, params.genus)
        match = recovered == closed
        payload["verification"]["match"] = match
        if not match:
            payload["verification"]["only_closed"] = [list(t) for t in sorted(closed - recovered)]
            payload["verification"]["only_oracle"] = [list(t) for t in sorted(recovered - closed)]
            exit_code = 3
        click.echo(f"# verification: {'MATCH' if match else 'MISMATCH'}", err=True)
    header, rows = _tuple_csv(closed, m)
    _emit(payload, fmt, csv_rows=rows, csv_header=header)
    if exit_code:
        sys.exit(exit_code)


def _box_command(n, m, T, threads, want_gaps):
    params = _params(n)
    if not 1 <= m <= n:
        raise click.UsageError(f"m must be in [1, {n}]")
    if T is None:
        T = 2 * params.genus - 1
    if T > 4 * params.genus:
        raise click.UsageError(f"T must be <= 4g = {4 * params.genus}")
    oracle = Oracle(params)
    H = _box_members(oracle, m, T, threads)
    if want_gaps:
        full = set(itertools.product(range(T + 1), repeat=m + 1))
        return params, T, full - H
    return params, T, H


@main.command(name="semigroup")
@common_n
@click.option("--m", "m", type=int, required=True)
@click.option("--T", "T", type=int, default=None, help="box bound (default 2g-1)")
@common_fmt
@common_threads
def semigroup_cmd(n, m, T, fmt, threads):
    """Weierstrass semigroup H(P_inf, P_1..P_m) intersected with [0, T]^(m+1)."""
    params, T, H = _box_command(n, m, T, threads, want_gaps=False)
    payload = {
        "schema": SCHEMA, "n": n, "m": m, "T": T,
        "semigroup": [list(t) for t in sorted(H)],
    }
    header, rows = _tuple_csv(H, m)
    _emit(payload, fmt, csv_rows=rows, csv_header=header)


@main.command()
@common_n
@click.option("--m", "m", type=int, required=True)
@click.option("--T", "T", type=int, default=None, help="box bound (default 2g-1)")
@common_fmt
@common_threads
def gaps(n, m, T, fmt, threads):
    """Gap set G(P_inf, P_1..P_m) intersected with [0, T]^(m+1)."""
    params, T, G = _box_command(n, m, T, threads, want_gaps=True)
    payload = {
        "schema": SCHEMA, "n": n, "m": m, "T": T,
        "gaps": [list(t) for t in sorted(G)],
    }
    header, rows = _tuple_csv(G, m)
    _emit(payload, fmt, csv_rows=rows, csv_header=header)


@main.command()
@common_n
@click.option("--m", "m", type=int, required=True)
@click.option("--T", "T", type=int, default=None,
              help="box bound for exhaustive pure-gap enumeration (default 2g-1 for n=2, off otherwise)")
@click.option("--check", "checks", multiple=True,
              help="extra (m+1)-tuple 'a0,a1,...' to test with the oracle; repeatable")
@common_fmt
@common_threads
def puregaps(n, m, T, checks, fmt, threads):
    """Pure gaps: oracle box enumeration plus the two closed-form families."""
    params = _params(n)
    if not 1 <= m <= n:
        raise click.UsageError(f"m must be in [1, {n}]")
    oracle = Oracle(params)

    box_section = None
    if T is None and n == 2:
        T = 2 * params.genus - 1
    if T is not None:
        gap_set = set(itertools.product(range(1, T + 1), repeat=m + 1)) - _box_members(
            oracle, m, T, threads
        )
        box_section = sorted(v for v in gap_set if semigroup.is_pure_gap(oracle, v))

    corollary = []
    for k in range(2, params.a + 1):
        try:
            tup = semigroup.pure_gap_family_cor(params, m, k)
        except semigroup.KOutOfRange:
            continue
        corollary.append(
            {"k": k, "tuple": list(tup), "verified": semigroup.is_pure_gap(oracle, tup)}
        )

    proposition = []
    for alpha in range(1, 2 * params.genus - 1):
        if not semigroup.pure_gap_family_prop(params, m, alpha):
            continue
        tup = (alpha,) + (1,) * m
        is_gap = not semigroup.membership_oracle(oracle, tup)
        proposition.append(
            {
                "alpha": alpha,
                "tuple": list(tup),
                "is_gap": is_gap,
                "verified": is_gap and semigroup.is_pure_gap(oracle, tup),
            }
        )

    check_section = []
    for text in checks:
        tup = _parse_tuple(text)
        if len(tup) != m + 1:
            raise click.UsageError(f"--check tuple {text!r} must have length {m + 1}")
        check_section.append(
            {
                "tuple": list(tup),
                "is_gap": not semigroup.membership_oracle(oracle, tup),
                "is_pure_gap": min(tup) >= 1 and semigroup.is_pure_gap(oracle, tup),
            }
        )

    payload = {
        "schema": SCHEMA,
        "n": n,
        "m": m,
        "box_pure_gaps": None if box_section is None else [list(t) for t in box_section],
        "corollary_family": corollary,
        "proposition_family": proposition,
        "checks": check_section,
    }
    rows = []
    for entry in corollary:
        rows.append(["corollary"] + entry["tuple"] + [entry["verified"]])
    for entry in proposition:
        rows.append(["proposition"] + entry["tuple"] + [entry["verified"]])
    for entry in check_section:
        rows.append(["check"] + entry["tuple"] + [entry["is_pure_gap"]])
    header = "family," + ",".join(["p_inf"] + [f"p_{s}" for s in range(1, m + 1)]) + ",verified"
    _emit(payload, fmt, csv_rows=rows, csv_header=header)


@main.command()
@common_n
@click.option("--G", "g_spec", required=True, help='JSON {"inf": int, "pj": [ints]}')
@click.option("--pure-gap-pair", "pair", nargs=2, type=str, default=None,
              help="two pure-gap tuples 'a0,a1,...' 'b0,b1,...' for the improved d_omega bound")
@click.option("--matrix-out", type=click.Path(), default=None,
              help="write the generator matrix as CSV of field-element strings")
@common_fmt
@common_threads
def code(n, g_spec, pair, matrix_out, fmt, threads):
    """Build the m-point code C_L(D, G) and report parameters and bounds."""
    params = _params(n)
    G = _parse_divisor(params, g_spec)
    oracle = Oracle(params)
    ps = curve.enumerate_points(params)
    try:
        matrix, summary = codes_mod.build_code(oracle, ps, G)
    except codes_mod.CodeError as exc:
        raise click.UsageError(str(exc))

    if pair:
        alpha = _parse_tuple(pair[0])
        beta = _parse_tuple(pair[1])
        try:
            G_pair, bound = codes_mod.pure_gap_bound(oracle, alpha, beta)
        except codes_mod.NotPureGap as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(4)
        if (G_pair.coeff_inf, G_pair.coeffs) != (G.coeff_inf, G.coeffs):
            raise click.UsageError("pure-gap pair does not reproduce the supplied G")
        summary.puregap_d_omega = bound

    if matrix_out:
        F = params.field
        with open(matrix_out, "w") as fh:
            for row in matrix.entries:
                fh.write(",".join(F.to_str(int(x)) for x in row) + "\n")

    payload = {"schema": SCHEMA, "n": n, **summary.as_dict()}
    keys = sorted(summary.as_dict())
    _emit(payload, fmt, csv_rows=[[summary.as_dict()[k] for k in keys]],
          csv_header=",".join(keys))


if __name__ == "__main__":
    main()
