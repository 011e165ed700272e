"""
Command line front end.

    descentkit stat 3247516 --set 2,3
    descentkit rsk 4365172
    descentkit evac "[1 2 4][3][5]"
    descentkit growth 34251 --format json
    descentkit verify --max-n 6 --checks evac-involution
    descentkit census --n 2 --which asc-is

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 input larger than a guard allows.
"""

from __future__ import annotations

import json
import sys
from datetime import datetime, timezone
from math import factorial

import click

from . import __version__, _guard
from .census import (
    CHECKS, count_asc_eq_is_minus_1, count_ls1_deficient, equivalence_classes,
    q_refines_profile, resolve_checks, sweep_verify,
)
from .growth import build_growth, evacuate, growth_payload, render_ascii, render_dot
from .oracle import ORACLE_MAX_N, brute_profile
from .perm import ParseError, Permutation, parse_permutation
from .rsk import rsk
from .stats import alternating_length, composition_to_descents, len_w, ls_D, ls_d, triangle_of
from .tableau import StandardTableau, format_tableau, parse_tableau, partitions
from .tableau import BijectionError, descent_count_bijection_check

EXIT_FAILURE, EXIT_GUARD = 1, 3
PROFILE_MAX_N = 14
CENSUS_WHICH = ("asc-is", "ls1-deficient", "bijection", "classes", "q-refine")


def _perm(text: str) -> Permutation:
    try:
        return parse_permutation(text)
    except ParseError as exc:
        raise click.BadParameter(str(exc)) from None


def _tableau_or_perm(text: str) -> tuple[StandardTableau, Permutation | None]:
    """A bracketed tableau is taken as is; a permutation contributes its recording tableau."""
    try:
        if text.strip().startswith("["):
            return parse_tableau(text), None
        p = parse_permutation(text)
    except ParseError as exc:
        raise click.BadParameter(str(exc)) from None
    return rsk(p).recording, p


def _int_list(text: str, what: str) -> list[int]:
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if not all(t.isdigit() and int(t) > 0 for t in tokens):
        raise click.BadParameter(f"{what} must be a comma list of positive integers, got {text!r}")
    return [int(t) for t in tokens]


def _emit(payload, as_json: bool, text: str) -> None:
    click.echo(json.dumps(payload, sort_keys=True) if as_json else text)


def _write_report(path: str, report: dict, timestamp: bool) -> None:
    if timestamp:
        report["meta"]["generated_at"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    if path == "-":
        return
    with open(path, "w") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")


class _Group(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except _guard.GuardExceeded as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(EXIT_GUARD)


@click.group(cls=_Group)
@click.version_option(__version__, prog_name="descentkit")
def main():
    """Descent-restricted longest subsequence statistics."""


@main.command()
@click.argument("perm")
@click.option("--d", "d", type=click.IntRange(min=0), help="ls_d: exactly d descents.")
@click.option("--set", "dset", help="ls_D for a comma list D (empty string for D = ∅).")
@click.option("--comp", help="ls_D for the descent set of a composition, e.g. 2,3,1.")
@click.option("--word", help="len_w for a descent word over U and D.")
@click.option("--alt", is_flag=True, help="Longest alternating subsequence.")
@click.option("--all", "all_", is_flag=True, help="Full profile: ls_D for every D.")
@click.option("--oracle", is_flag=True, help="With --all, use brute-force enumeration.")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def stat(perm, d, dset, comp, word, alt, all_, oracle, as_json):
    """Print one statistic of PERM."""
    p = _perm(perm)
    chosen = [name for name, v in (("--d", d is not None), ("--set", dset is not None),
                                   ("--comp", comp is not None), ("--word", word is not None),
                                   ("--alt", alt), ("--all", all_)) if v]
    if len(chosen) != 1:
        raise click.UsageError("give exactly one of --d, --set, --comp, --word, --alt, --all")
    if oracle and not all_:
        raise click.UsageError("--oracle only applies to --all")
    base = {"perm": list(p)}
    if all_:
        n = len(p)
        if oracle:
            _guard.check(n, ORACLE_MAX_N, "stat --all --oracle")
            prof = brute_profile(p)
            value_of = prof.__getitem__
        else:
            _guard.check(n, PROFILE_MAX_N, "stat --all")
            tri = triangle_of(p)
            value_of = lambda D: ls_D(p, D, tri)  # noqa: E731
        rows = []
        for mask in range(1 << (n - 1)):
            D = [i + 1 for i in range(n - 1) if mask >> i & 1]
            rows.append({"D": D, "ls": value_of(D)})
        text = "\n".join("{" + ",".join(map(str, r["D"])) + "} " + str(r["ls"]) for r in rows)
        _emit({**base, "selector": "all", "profile": rows}, as_json, text)
        return
    if d is not None:
        selector, value = f"d={d}", ls_d(p, d)
    elif dset is not None:
        D = _int_list(dset, "--set")
        selector, value = "D=" + ",".join(map(str, D)), ls_D(p, D)
    elif comp is not None:
        c = _int_list(comp, "--comp")
        if not c:
            raise click.BadParameter("--comp needs at least one part")
        D = sorted(composition_to_descents(c))
        selector, value = "comp=" + ",".join(map(str, c)), ls_D(p, D)
    elif word is not None:
        if not word or set(word) - {"U", "D"}:
            raise click.BadParameter(f"--word must be a nonempty string over U and D, got {word!r}")
        selector, value = f"word={word}", len_w(p, word)
    else:
        selector, value = "alt", alternating_length(p)
    _emit({**base, "selector": selector, "value": value}, as_json, str(value))


FORMAT = click.option("--format", "fmt", type=click.Choice(["ascii", "dot", "json"]), default="ascii")


def _tableau_dot(name: str, t: StandardTableau) -> str:
    label = "|".join("{" + "|".join(map(str, row)) + "}" for row in t.rows)
    return f'  {name} [shape=record, label="{{{label}}}"];'


@main.command("rsk")
@click.argument("perm")
@FORMAT
def rsk_cmd(perm, fmt):
    """Insertion and recording tableaux of PERM."""
    pair = rsk(_perm(perm))
    if fmt == "json":
        click.echo(json.dumps({"P": [list(r) for r in pair.P.rows], "Q": [list(r) for r in pair.Q.rows]}))
    elif fmt == "dot":
        click.echo("\n".join(["digraph rsk {", _tableau_dot("P", pair.P), _tableau_dot("Q", pair.Q), "}"]))
    else:
        click.echo(f"P = {format_tableau(pair.P)}\nQ = {format_tableau(pair.Q)}")


@main.command("evac")
@click.argument("source")
@FORMAT
def evac_cmd(source, fmt):
    """Evacuation of a tableau "[1 2 4][3][5]", or of the recording tableau of a permutation."""
    q, _ = _tableau_or_perm(source)
    e = evacuate(q)
    if fmt == "json":
        click.echo(json.dumps({"Q": [list(r) for r in q.rows], "evac": [list(r) for r in e.rows]}))
    elif fmt == "dot":
        click.echo("\n".join(["digraph evac {", _tableau_dot("evac", e), "}"]))
    else:
        click.echo(format_tableau(e))


@main.command("growth")
@click.argument("source")
@FORMAT
def growth_cmd(source, fmt):
    """Evacuation growth diagram of a tableau or of a permutation's recording tableau."""
    q, _ = _tableau_or_perm(source)
    g = build_growth(q)
    if fmt == "json":
        click.echo(json.dumps(growth_payload(g)))
    elif fmt == "dot":
        click.echo(render_dot(g))
    else:
        click.echo(render_ascii(g))


@main.command()
@click.option("--max-n", type=click.IntRange(min=1), required=True)
@click.option("--checks", default="all", show_default=True,
              help="Comma list of checks, or 'all': " + ", ".join(CHECKS))
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--out", default="verify-report.json", show_default=True, help="Report path, '-' for none.")
@click.option("--no-timestamp", is_flag=True, help="Leave generated_at out of the report metadata.")
def verify(max_n, checks, jobs, out, no_timestamp):
    """Run invariant checks over every permutation of size 1..MAX_N."""
    try:
        names = resolve_checks(checks)
    except KeyError as exc:
        raise click.BadParameter(exc.args[0], param_hint="--checks") from None
    report = sweep_verify(max_n, names, jobs=jobs)
    _write_report(out, report, not no_timestamp)
    for r in report["results"]:
        if r["failure_count"]:
            first = r["failures"][0]
            click.echo(f"FAIL {r['check']} n≤{max_n} ({r['failure_count']} of {r['population']}; "
                       f"first: {first['perm']} {first['detail']})")
        else:
            click.echo(f"PASS {r['check']} n≤{max_n}")
    sys.exit(0 if report["passed"] else EXIT_FAILURE)


def _census_entry(which: str, n: int) -> dict:
    entry: dict = {"check": which, "n": n, "population": factorial(n), "failures": []}
    if which in ("asc-is", "ls1-deficient"):
        fn = count_asc_eq_is_minus_1 if which == "asc-is" else count_ls1_deficient
        direct, formula = fn(n)
        entry.update(direct=direct, formula=formula)
        if direct != formula:
            entry["failures"].append({"detail": f"direct {direct} != formula {formula}"})
    elif which == "bijection":
        shapes = []
        for lam in partitions(n):
            try:
                direct, formula = descent_count_bijection_check(lam)
            except BijectionError as exc:
                entry["failures"].append({"shape": list(lam), "detail": str(exc)})
                continue
            shapes.append({"shape": list(lam), "direct": direct, "formula": formula})
            if direct != formula:
                entry["failures"].append({"shape": list(lam), "detail": f"{direct} != {formula}"})
        entry["population"] = len(shapes)
        entry["shapes"] = shapes
    elif which == "classes":
        res = equivalence_classes(n)
        entry.update(by_profile=res.by_profile, by_triangle=res.by_triangle,
                     classes=[list(c[0]) for c in res.classes])
        if not res.same_partition:
            entry["failures"].append({"detail": "profile and triangle partitions differ"})
    else:
        refines, strictly = q_refines_profile(n)
        entry.update(refines=refines, strictly=strictly)
        if not refines:
            entry["failures"].append({"detail": "recording tableau classes split a profile class"})
    return entry


def _census_line(e: dict) -> str:
    status = "FAIL" if e["failures"] else "PASS"
    if "direct" in e:
        return f"{status} {e['check']} n={e['n']}: direct={e['direct']} formula={e['formula']}"
    if e["check"] == "bijection":
        return f"{status} bijection n={e['n']}: {e['population']} shapes"
    if e["check"] == "classes":
        return f"{status} classes n={e['n']}: by_profile={e['by_profile']} by_triangle={e['by_triangle']}"
    return f"{status} q-refine n={e['n']}: refines={e['refines']} strictly={e['strictly']}"


@main.command()
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--which", default="all", show_default=True,
              help="Comma list from: " + ", ".join(CENSUS_WHICH) + ", or 'all'.")
@click.option("--out", default="census-report.json", show_default=True, help="Report path, '-' for none.")
@click.option("--no-timestamp", is_flag=True)
def census(n, which, out, no_timestamp):
    """Counting identities and equivalence classes over S_n."""
    names = [w.strip() for w in which.split(",") if w.strip()]
    if "all" in names:
        names = list(CENSUS_WHICH)
    unknown = [w for w in names if w not in CENSUS_WHICH]
    if unknown or not names:
        raise click.BadParameter(f"unknown census {', '.join(unknown) or which!r}", param_hint="--which")
    results = [_census_entry(w, n) for w in names]
    report = {"meta": {"version": __version__, "params": {"n": n, "which": names}},
              "results": results, "passed": not any(e["failures"] for e in results)}
    _write_report(out, report, not no_timestamp)
    for e in results:
        click.echo(_census_line(e))
    sys.exit(0 if report["passed"] else EXIT_FAILURE)


if __name__ == "__main__":
    main()
