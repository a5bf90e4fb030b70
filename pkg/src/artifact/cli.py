"""Command-line front end.

Tableaux are given as semicolon-separated rows ("1 2;3 5;4"), polynomials in
the text grammar of :mod:`artifact.poly`, partitions and multisets as
comma-separated integers.  Every command accepts ``--json``; JSON objects
carry ``schema_version``.

Exit codes: 0 on success, 1 on a failing suite or a violated mathematical
precondition, 2 on unparseable input or bad usage.
"""

from __future__ import annotations

import json
import sys
from functools import wraps
from typing import Callable

import click

from . import decomp, harness
from .decomp import DecompositionError, RankError, build_atlas, decompose
from .evsym import EvSymError, stable_specht, truncate
from .poly import PolyParseError, format_monomial, format_poly, parse_poly
from .quotients import OutOfModelError, project, rnks_slice
from .specht import specht, specht_I, specht_I_hom, specht_quotient
from .tableaux import (
    InfSsyt,
    InfSyt,
    MultiSet,
    Partition,
    SsytTableau,
    StdTableau,
    TableauError,
    ct,
    ct_J,
    enumerate_cct,
    enumerate_ssyt,
    enumerate_ssyt_content,
    enumerate_syt,
    evacuation,
    iota,
    iota_hat,
    parse_rows,
)

SCHEMA_VERSION = harness.SCHEMA_VERSION
MATH_ERRORS = (TableauError, DecompositionError, RankError, OutOfModelError, EvSymError, ValueError, ArithmeticError)


# ---------------------------------------------------------------------------
# Parameter types: parse failures become usage errors (exit 2)
# ---------------------------------------------------------------------------


class _Parsed(click.ParamType):
    def __init__(self, name: str, parse: Callable):
        self.name = name
        self._parse = parse

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            return self._parse(value)
        except (ValueError, TypeError, PolyParseError) as err:
            self.fail(f"cannot parse {value!r} as {self.name}: {err}", param, ctx)


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "()", "-"):
        return ()
    return tuple(int(tok) for tok in text.replace(" ", ",").split(",") if tok)


def _partition(text: str) -> Partition:
    parts = _int_list(text)
    if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise ValueError("parts must be positive and weakly decreasing")
    return Partition(parts)


def _multiset(text: str) -> MultiSet:
    return MultiSet.of(_int_list(text))


def _std(text: str) -> StdTableau:
    return StdTableau.parse(text)


def _ssyt(text: str) -> SsytTableau:
    return SsytTableau.parse(text)


def _rows(text: str):
    return parse_rows(text) if text.strip() not in ("", "-") else ()


PARTITION = _Parsed("partition", _partition)
MULTISET = _Parsed("multiset", _multiset)
STD = _Parsed("standard tableau", _std)
SSYT = _Parsed("semistandard tableau", _ssyt)
ROWS = _Parsed("tableau rows", _rows)
POLY = _Parsed("polynomial", parse_poly)


# ---------------------------------------------------------------------------
# Output helpers
# ---------------------------------------------------------------------------


class Settings:
    def __init__(self) -> None:
        self.json = False
        self.jobs = 1
        self.no_cache = False


def _settings() -> Settings:
    ctx = click.get_current_context()
    root = ctx.find_root()
    if root.obj is None:
        root.obj = Settings()
    return root.obj


def _set_json(ctx, param, value):
    if value:
        _settings().json = True
    return value


def _set_jobs(ctx, param, value):
    if value is not None:
        if value < 1:
            raise click.BadParameter("must be at least 1")
        _settings().jobs = value
    return value


def _set_no_cache(ctx, param, value):
    if value:
        _settings().no_cache = True
        decomp.set_cache_enabled(False)
    return value


def common_options(f):
    """--json, --jobs and --no-cache, accepted before or after the subcommand."""
    f = click.option("--no-cache", is_flag=True, expose_value=False, is_eager=True, callback=_set_no_cache, help="Bypass the on-disk basis cache.")(f)
    f = click.option("--jobs", type=int, default=None, expose_value=False, callback=_set_jobs, help="Worker processes for suites and scans.")(f)
    f = click.option("--json", "as_json", is_flag=True, expose_value=False, callback=_set_json, help="Emit JSON instead of text.")(f)
    return f


def emit(payload: dict, text: str) -> None:
    if _settings().json:
        click.echo(json.dumps({"schema_version": SCHEMA_VERSION, **payload}, sort_keys=True, indent=2))
    else:
        click.echo(text)


def math_errors(f):
    """Turn violated preconditions into exit code 1 with a structured message."""

    @wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except MATH_ERRORS as err:
            payload = {"error": type(err).__name__, "message": str(err)}
            if _settings().json:
                click.echo(json.dumps({"schema_version": SCHEMA_VERSION, **payload}, sort_keys=True, indent=2))
            else:
                click.echo(f"error ({payload['error']}): {payload['message']}", err=True)
            return 1

    return wrapper


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@common_options
@click.version_option(package_name="artifact")
def cli() -> None:
    """Higher Specht polynomials, their quotients and stable limits."""
    _settings()


@cli.group()
def tableaux() -> None:
    """Tableau enumeration."""


@tableaux.command("enum")
@click.option("--shape", type=PARTITION, required=True, help="Partition such as 2,2,1.")
@click.option("--kind", type=click.Choice(["syt", "ssyt", "cct"]), required=True)
@click.option("--degree", type=int, default=None, help="Entry sum for --kind ssyt.")
@click.option("--content", type=PARTITION, default=None, help="Nonzero entries for --kind ssyt, e.g. 2,1.")
@common_options
@math_errors
def tableaux_enum(shape: Partition, kind: str, degree: int | None, content: Partition | None) -> int:
    """List SYT, SSYT or cocharge tableaux of a shape."""
    if kind == "ssyt":
        if (degree is None) == (content is None):
            raise click.UsageError("--kind ssyt needs exactly one of --degree or --content")
        if degree is not None:
            items = enumerate_ssyt(shape, degree)
        else:
            if len(content) > shape.n:
                raise ValueError(f"content {content} has more parts than {shape.n} boxes")
            word = (0,) * (shape.n - len(content)) + tuple(sorted(content.parts))
            items = enumerate_ssyt_content(shape, word)
    else:
        if degree is not None or content is not None:
            raise click.UsageError("--degree and --content only apply to --kind ssyt")
        items = enumerate_syt(shape) if kind == "syt" else enumerate_cct(shape)
    rows = [str(t) for t in items]
    emit({"kind": kind, "shape": list(shape.parts), "count": len(rows), "tableaux": rows}, "\n".join(rows + [f"# {len(rows)} tableaux"]))
    return 0


@cli.command("map")
@click.option("--op", type=click.Choice(["ct", "ev", "iota", "iota-hat"]), required=True)
@click.option("--in", "tableau", required=True, help="Tableau rows, e.g. '1 2;3 5;4'.")
@click.option("--J", "J", type=MULTISET, default=None, help="Multiset for ct_J (only with --op ct).")
@common_options
@math_errors
def map_cmd(op: str, tableau: str, J: MultiSet | None) -> int:
    """Apply ct / ct_J, evacuation, iota or iota-hat."""
    if J is not None and op != "ct":
        raise click.UsageError("--J only applies to --op ct")
    try:
        T = SSYT.convert(tableau, None, None) if op == "iota-hat" else STD.convert(tableau, None, None)
    except click.BadParameter as err:
        raise click.BadParameter(err.message, param_hint="--in") from None
    if op == "ct":
        out = ct_J(T, J) if J is not None else ct(T)
    elif op == "ev":
        out = evacuation(T)
    elif op == "iota":
        out = iota(T)
    else:
        out = iota_hat(T)
    emit({"op": op, "input": str(T), "output": str(out)}, str(out))
    return 0


@cli.command("specht")
@click.option("--M", "M", type=SSYT, required=True, help="Semistandard tableau (the cocharge C when --I is given).")
@click.option("--T", "T", type=STD, required=True)
@click.option("--I", "I", type=MULTISET, default=None, help="Multiset I for F^I_{C,T}.")
@click.option("--hom", is_flag=True, help="Use the homogeneous variant F^{I,hom}_{C,T}.")
@click.option("--quotient", is_flag=True, help="Print Q_{M,T} instead of F_{M,T}.")
@common_options
@math_errors
def specht_cmd(M: SsytTableau, T: StdTableau, I: MultiSet | None, hom: bool, quotient: bool) -> int:
    """Higher Specht polynomial F_{M,T} and its variants."""
    if hom and I is None:
        raise click.UsageError("--hom needs --I")
    if quotient and I is not None:
        raise click.UsageError("--quotient cannot be combined with --I")
    if I is not None:
        p = specht_I_hom(M, T, I) if hom else specht_I(M, T, I)
    elif quotient:
        p = specht_quotient(M, T)
    else:
        p = specht(M, T)
    text = format_poly(p)
    emit({"M": str(M), "T": str(T), "I": str(I) if I is not None else None, "hom": hom, "quotient": quotient, "polynomial": text}, text)
    return 0


@cli.command("stable-specht")
@click.option("--finite-part", "finite", type=ROWS, required=True, help="Finite part of M-hat, e.g. '3 4;4' ('-' for none).")
@click.option("--mult", type=MULTISET, default=MultiSet(), help="First-row values of M-hat with repetition, e.g. 1,2.")
@click.option("--T", "T", type=ROWS, required=True, help="Finite part of T-hat, e.g. '3 5;4' ('-' for none).")
@click.option("--window", type=int, default=None, help="Also print the truncation to x1..xN.")
@common_options
@math_errors
def stable_specht_cmd(finite, mult: MultiSet, T, window: int | None) -> int:
    """Stable Specht function F_{M-hat,T-hat} in eventually symmetric form."""
    Mh = InfSsyt(finite, tuple(mult.mult.items()))
    Th = InfSyt(T)
    F = stable_specht(Mh, Th)
    payload = {"M": str(Mh), "T": format_rows_or_dash(Th.rows), "evsym": F.to_json()}
    lines = [f"F = {F}"]
    if window is not None:
        trunc = format_poly(truncate(F, window))
        payload["window"] = window
        payload["truncated"] = trunc
        lines.append(f"truncated at x{window}: {trunc}")
    emit(payload, "\n".join(lines))
    return 0


def format_rows_or_dash(rows) -> str:
    return ";".join(" ".join(map(str, r)) for r in rows) or "-"


@cli.command("decompose")
@click.option("--poly", "poly", type=POLY, required=True)
@click.option("--n", "n", type=int, required=True, help="F lives in x1..xn; it is decomposed in x1..x(n+1).")
@click.option("--flavor", type=click.Choice(list(decomp.FLAVORS)), default="vm")
@click.option("--at-n", is_flag=True, help="Decompose inside x1..xn itself.")
@common_options
@math_errors
def decompose_cmd(poly, n: int, flavor: str, at_n: bool) -> int:
    """Coordinates of a homogeneous polynomial on a basis atlas."""
    if n < 1:
        raise click.BadParameter("must be positive", param_hint="--n")
    if poly.max_var() > n:
        raise DecompositionError(f"x{poly.max_var()} is outside x1..x{n}")
    window = n if at_n else n + 1
    dec = decompose(poly, window, flavor=flavor)
    coords = sorted(((str(label), str(T), c) for (label, T), c in dec.coords.items()), key=lambda r: (r[0], r[1]))
    comps = sorted((str(label), format_poly(p)) for label, p in dec.components.items())
    lines = [f"window: x1..x{window}  flavor: {flavor}"]
    lines += [f"{c}  *  [{label}] [{T}]" for label, T, c in coords]
    lines += [f"component [{label}]: {p}" for label, p in comps]
    emit(
        {
            "window": window,
            "flavor": flavor,
            "coordinates": [{"label": l, "T": t, "coefficient": str(c)} for l, t, c in coords],
            "components": [{"label": l, "polynomial": p} for l, p in comps],
        },
        "\n".join(lines),
    )
    return 0


@cli.command("quotient")
@click.option("--n", "n", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--s", "s", type=int, required=True)
@click.option("--d", "d", type=int, required=True)
@click.option("--project", "to_project", type=POLY, default=None, help="Reduce this polynomial to normal form.")
@common_options
@math_errors
def quotient_cmd(n: int, k: int, s: int, d: int, to_project) -> int:
    """Degree-d slice of R_{n,k,s}."""
    if n < 1 or k < 1 or d < 0:
        raise ValueError("need n >= 1, k >= 1 and d >= 0")
    sl = rnks_slice(n, k, s, d)
    basis = [format_monomial(m) or "1" for m in sl.complement()]
    payload = {"n": n, "k": k, "s": s, "d": d, "dimension": sl.quotient_rank, "ideal_rank": sl.ideal_rank, "standard_monomials": basis}
    lines = [f"dim R_(n={n},k={k},s={s}) in degree {d}: {sl.quotient_rank}", "basis: " + (", ".join(basis) or "(empty)")]
    if to_project is not None:
        nf = format_poly(project(to_project, sl))
        payload["projection"] = nf
        lines.append(f"normal form: {nf}")
    emit(payload, "\n".join(lines))
    return 0


@cli.command("verify")
@click.argument("suite", type=click.Choice(sorted(harness.SUITES) + ["all"]))
@click.option("--nmax", type=int, default=harness.DEFAULT_GRID.nmax, show_default=True)
@click.option("--dmax", type=int, default=harness.DEFAULT_GRID.dmax, show_default=True)
@click.option("--kmax", type=int, default=harness.DEFAULT_GRID.kmax, show_default=True)
@common_options
@math_errors
def verify_cmd(suite: str, nmax: int, dmax: int, kmax: int) -> int:
    """Run a verification suite (or all of them)."""
    try:
        grid = harness.Grid(nmax, dmax, kmax)
    except ValueError as err:
        raise click.UsageError(str(err)) from None
    jobs = _settings().jobs
    names = sorted(harness.SUITES) if suite == "all" else [suite]
    reports = [harness.run_suite(name, grid, jobs) for name in names]
    if _settings().json:
        payload = reports[0] if len(reports) == 1 else reports
        click.echo(harness.dumps(payload))
    else:
        for r in reports:
            click.echo(_report_text(r))
    return 0 if all(r.ok for r in reports) else 1


def _report_text(r: harness.SuiteReport) -> str:
    status = "PASS" if r.ok else "FAIL"
    lines = [f"{status} {r.suite}: {r.passed}/{r.cases_run} cases, {r.checks_run} checks, {r.wall_time:.2f}s"]
    for w in r.witnesses:
        lines.append(f"  failure: {json.dumps(w, sort_keys=True)}")
    for disc in r.discrepancies:
        lines.append(f"  printed-reference mismatch ({disc['erratum']}): {disc['check']} {disc['case']}")
    for note in r.notes:
        lines.append(f"  note: {note}")
    if r.suite == "counting" and r.ok:
        n, d = r.grid["nmax"], r.grid["dmax"]
        lines.append(f"  dimension at n={n}, d={d}: {decomp.degree_dimension(n, d)}")
    return "\n".join(lines)


@cli.group()
def conjecture() -> None:
    """Evidence for the n-independence conjecture."""


@conjecture.command("scan")
@click.option("--dmax", type=int, default=4, show_default=True)
@click.option("--nmax", type=int, default=None, help="Largest n (default 2d+2 for each d).")
@common_options
@math_errors
def conjecture_scan_cmd(dmax: int, nmax: int | None) -> int:
    """Record parts (i)-(iii) and the f-parameter check for every (n, d, content, f)."""
    if dmax < 1:
        raise click.BadParameter("must be at least 1", param_hint="--dmax")
    report = harness.conjecture_scan(dmax, nmax, _settings().jobs)
    if _settings().json:
        click.echo(harness.dumps(report))
    else:
        click.echo(f"{'PASS' if report.ok else 'FAIL'} conjecture scan: {len(report.evidence)} records, {len(report.violations)} violations, {report.wall_time:.2f}s")
        for e in report.violations:
            click.echo(f"  VIOLATION: {json.dumps(e.to_json(), sort_keys=True)}")
    return 0 if report.ok else 1


def main(argv: list[str] | None = None) -> int:
    try:
        rv = cli.main(args=argv, prog_name="artifact", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        click.echo("aborted", err=True)
        return 1
    return rv if isinstance(rv, int) else 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
