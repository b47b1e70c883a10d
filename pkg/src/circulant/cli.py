"""Command-line interface: ``circulant <subcommand>``."""

from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass

import click

from .analysis import odd_girth, total_intersection_array, vertex_types
from .bounds import lmac, mac_bound
from .catalog import catalog_entry, catalog_json
from .core import GraphSpec, make_graph_spec, parse_generators
from .errors import CirculantError, DisconnectedGraph, NegativeDefect, RangeTooLarge
from .partition import distance_levels, level_defects, maximal_prefix, profile_rows, rows_to_csv
from .search import DEFAULT_BUDGET, _log, extremal_search, find_witness
from .tables import TABLES, render_table
from .verify import SCOPES, run_verify

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2, 3


@dataclass
class Options:
    fmt: str
    threads: int
    budget: int


def _emit(opts: Options, records: list[dict], text: str) -> None:
    if opts.fmt == "json":
        click.echo(json.dumps(records))
    elif opts.fmt == "csv":
        click.echo(rows_to_csv(records), nl=False)
    else:
        click.echo(text)


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


class _Group(click.Group):
    """Maps library errors onto exit codes."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (DisconnectedGraph, NegativeDefect, RangeTooLarge) as exc:
            _fail(EXIT_COMPUTE, f"{type(exc).__name__}: {exc}")
        except CirculantError as exc:
            _fail(EXIT_USAGE, f"{type(exc).__name__}: {exc}")
        except (KeyError, ValueError) as exc:
            _fail(EXIT_USAGE, str(exc.args[0]) if exc.args else type(exc).__name__)


@click.group(cls=_Group)
@click.option("--json", "as_json", is_flag=True, help="Machine-readable JSON output.")
@click.option("--csv", "as_csv", is_flag=True, help="CSV output.")
@click.option("--threads", type=click.IntRange(min=1), default=None, help="Worker processes for search.")
@click.option("--budget", type=click.IntRange(min=1), default=DEFAULT_BUDGET, show_default=True,
              help="Maximum candidate sets a search may examine.")
@click.pass_context
def main(ctx, as_json, as_csv, threads, budget):
    """Circulant graphs of degree 2 to 9: bounds, partitions, search."""
    if as_json and as_csv:
        raise click.UsageError("--json and --csv are exclusive")
    fmt = "json" if as_json else "csv" if as_csv else "text"
    ctx.obj = Options(fmt, threads or os.cpu_count() or 1, budget)


def graph_options(fn):
    fn = click.option("--n", "order", type=int, help="Order of an explicit graph.")(fn)
    fn = click.option("--gens", help="Comma-separated generators, e.g. 1,5.")(fn)
    fn = click.option("--half", is_flag=True, help="Include the element n/2.")(fn)
    fn = click.option("--degree", "-d", type=int, help="Catalog degree.")(fn)
    fn = click.option("--diameter", "-k", type=int, help="Catalog diameter.")(fn)
    fn = click.option("--class", "class_id", type=int, default=None, help="Catalog class.")(fn)
    return fn


def _resolve(order, gens, half, degree, diameter, class_id) -> GraphSpec:
    if order is not None:
        if gens is None and not half:
            raise click.UsageError("--n needs --gens or --half")
        return make_graph_spec(order, parse_generators(gens or ""), half)
    if degree is None or diameter is None:
        raise click.UsageError("give --n/--gens or --degree/--diameter")
    entry = catalog_entry(degree, diameter, class_id)
    if entry.spec is None:
        raise CirculantError(f"no generator set available for degree {degree}, diameter {diameter}")
    return entry.spec


@main.command()
@graph_options
@click.pass_obj
def profile(opts, **kw):
    """Distance partition profile with level bounds and defects."""
    la = distance_levels(_resolve(**kw))
    rows = profile_rows(la)
    lines = [f"{la.spec}  diameter {la.diameter}", "level  size  lmac  defect"]
    lines += [f"{r['level']:>5} {r['size']:>5} {r['lmac']:>5} {r['defect']:>7}" for r in rows]
    _emit(opts, rows, "\n".join(lines))


@main.command()
@graph_options
@click.pass_obj
def defects(opts, **kw):
    """Level defects, maximal prefix and total defect."""
    la = distance_levels(_resolve(**kw))
    dp = level_defects(la)
    record = {"spec": str(la.spec), "defects": list(dp.defects), "maximal_prefix": maximal_prefix(la), "total": dp.total}
    if opts.fmt == "csv":
        click.echo(rows_to_csv([{"level": l, "defect": x} for l, x in enumerate(dp.defects)]), nl=False)
    elif opts.fmt == "json":
        click.echo(json.dumps(record))
    else:
        click.echo(f"{la.spec}\ndefects {' '.join(map(str, dp.defects))}\n"
                   f"maximal through level {record['maximal_prefix']}, total {dp.total}")


@main.command()
@click.option("--degree", "-d", type=click.IntRange(min=2), required=True)
@click.option("--diameter", "-k", type=click.IntRange(min=1), required=True)
@click.pass_obj
def bound(opts, degree, diameter):
    """Abelian Cayley bound and per-level maxima."""
    rows = [{"level": l, "lmac": 1 if l == 0 else lmac(degree, l), "mac": mac_bound(degree, l)}
            for l in range(diameter + 1)]
    text = f"M_AC({degree},{diameter}) = {mac_bound(degree, diameter)}\n" + "\n".join(
        f"l={r['level']}: LM_AC={r['lmac']}" for r in rows[1:])
    _emit(opts, rows, text)


@main.command()
@graph_options
@click.pass_obj
def girth(opts, **kw):
    """Odd girth via the parity double cover."""
    spec = _resolve(**kw)
    g = odd_girth(spec)
    _emit(opts, [{"spec": str(spec), "odd_girth": g}], f"{spec}: odd girth {'none (bipartite)' if g is None else g}")


@main.command()
@graph_options
@click.pass_obj
def array(opts, **kw):
    """Total intersection array (c, a, b rows)."""
    tia = total_intersection_array(distance_levels(_resolve(**kw)))
    records = tia.as_records()
    if opts.fmt == "csv":
        header = "level,c,a,b"
        body = [",".join("-" if x is None else str(x) for x in (r["level"], r["c"], r["a"], r["b"])) for r in records]
        click.echo("\n".join([header, *body]))
        return
    text = "\n".join(" ".join(f"{'-' if x is None else x:>6}" for x in row) for row in tia.rows())
    _emit(opts, records, text)


@main.command()
@graph_options
@click.pass_obj
def types(opts, **kw):
    """Vertex-type census per level."""
    census = vertex_types(distance_levels(_resolve(**kw)))
    records = [{"level": l, "type": s, "count": c} for (l, s), c in sorted(census.counts.items())]
    grid = census.grid()[: census.max_type() + 1]
    lines = ["type " + " ".join(f"{l:>6}" for l in range(census.diameter + 1))]
    lines += [f"T{s:<3} " + " ".join(f"{c or '':>6}" for c in row) for s, row in enumerate(grid)]
    lines.append(f"T1 total {census.t1_total}")
    _emit(opts, records, "\n".join(lines))


@main.command()
@click.argument("table_id", type=click.Choice(sorted(TABLES), case_sensitive=False))
def tables(table_id):
    """Print a reference table as CSV."""
    click.echo(render_table(table_id), nl=False)


@main.command()
@click.option("--degree", "-d", type=click.IntRange(2, 9), required=True)
@click.option("--diameter", "-k", type=click.IntRange(min=1), required=True)
@click.option("--n-max", type=int, default=None, help="Largest order to try (default: the bound).")
@click.option("--order", type=int, default=None, help="Only look for a witness of this order.")
@click.option("--quiet", is_flag=True, help="No progress lines.")
@click.pass_obj
def search(opts, degree, diameter, n_max, order, quiet):
    """Exhaustive search for the largest order of given degree and diameter."""
    if order is not None:
        spec = find_witness(degree, diameter, order, budget=opts.budget, workers=opts.threads)
        record = {"degree": degree, "diameter": diameter, "order": order, "witness": spec.to_dict() if spec else None}
        _emit(opts, [record], f"witness: {spec}" if spec else "no witness")
        return
    report = extremal_search(degree, diameter, n_max, budget=opts.budget, workers=opts.threads,
                             progress=None if quiet else _log)
    if opts.fmt == "text":
        click.echo(f"best order {report.best_order} ({report.multiplier_classes} multiplier classes, "
                   f"{report.explored} sets explored)")
        for w in report.witnesses:
            click.echo(f"  {w}")
    else:
        click.echo(report.to_json())


@main.command()
@click.option("--scope", type=click.Choice(SCOPES), default="all", show_default=True)
@click.option("--kmax", type=click.IntRange(min=1), default=12, show_default=True)
@click.pass_obj
def verify(opts, scope, kmax):
    """Run invariant checks over the catalog; exit 1 on any failure."""
    outcome = run_verify(scope, kmax, workers=opts.threads, budget=opts.budget)
    if opts.fmt == "text":
        for c in outcome.failures():
            click.echo(f"FAIL {c.name}: expected {c.expected!r}, got {c.actual!r}")
        s = outcome.summary
        click.echo(f"{s['passed']}/{s['total']} checks passed")
    else:
        click.echo(outcome.to_json())
    sys.exit(EXIT_OK if outcome.passed else EXIT_VERIFY)


@main.command()
@click.option("--kmax", type=click.IntRange(min=1), default=15, show_default=True)
@click.pass_obj
def catalog(opts, kmax):
    """List catalog entries with provenance."""
    text = catalog_json(kmax)
    if opts.fmt == "text":
        for rec in json.loads(text):
            spec = rec["spec"]
            shown = spec if isinstance(spec, str) else f"n={spec['n']} gens={spec['generators']}{' +n/2' if spec['half'] else ''}"
            click.echo(f"d={rec['degree']} k={rec['diameter']} class={rec['class_id']} "
                       f"order={rec['order']} {rec['provenance']}: {shown}")
    else:
        click.echo(text, nl=False)


if __name__ == "__main__":
    main()
