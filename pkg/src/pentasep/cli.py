"""Command-line surface: one verb per paper-facing capability.

Graph data flows through stdout (or -o) as planar_code; human diagnostics go
to stderr.  Output streams are sorted by canonical code so runs are
byte-reproducible at any parallelism level.
"""
from __future__ import annotations

import sys

import click

from .canonical import canonical_code
from .errors import PentasepError
from .goldberg import CoxeterCoords, goldberg as make_goldberg, minimal_separation_fullerene
from .patches import build_separated, h_threshold
from .planarcode import read_planar_code, write_planar_code, write_text, read_text
from .planegraph import validate_fullerene
from .separation import pentagon_separation, separation_histogram
from .spiral import default_workers, generate
from .tables import emit_table, verify_against_fixtures
from . import __version__


def _emit(fullerenes, output):
    """Sort by canonical code and write planar_code to the output."""
    ranked = sorted(fullerenes, key=lambda f: canonical_code(f).code)
    if output:
        with open(output, "wb") as fh:
            write_planar_code((f.graph for f in ranked), fh)
    else:
        write_planar_code((f.graph for f in ranked), sys.stdout.buffer)
        sys.stdout.buffer.flush()
    return len(ranked)


@click.group()
@click.version_option(__version__, prog_name="pentasep")
def main():
    """Fullerene graphs by pentagon separation."""


@main.command("generate")
@click.argument("n", type=int)
@click.option("--min-sep", "min_sep", type=int, default=1, show_default=True,
              help="Keep only isomers with pentagon separation >= this.")
@click.option("-o", "--output", type=click.Path(), default=None,
              help="planar_code output file (default: stdout).")
@click.option("--workers", type=int, default=None,
              help="Search workers (default: PENTASEP_WORKERS or CPU count).")
def generate_cmd(n, min_sep, output, workers):
    """All isomers on N vertices, one per isomorphism class."""
    if workers is None:
        workers = default_workers()
    count = _emit(generate(n, min_sep, workers=workers), output)
    click.echo(f"{count} fullerene(s) on {n} vertices with separation >= {min_sep}",
               err=True)


@main.command("separation")
@click.argument("infile", type=click.Path(exists=True, allow_dash=True))
def separation_cmd(infile):
    """Pentagon-separation report for each graph in a planar_code file."""
    fullerenes = []
    opener = click.open_file(infile, "rb")
    with opener as fh:
        for i, g in enumerate(read_planar_code(fh)):
            f = validate_fullerene(g)
            rep = pentagon_separation(f)
            click.echo(f"{i}: nv={f.vertex_count} separation={rep.separation}")
            fullerenes.append(f)
    hist = separation_histogram(fullerenes)
    for sep in sorted(hist):
        click.echo(f"separation {sep}: {hist[sep]} graph(s)", err=True)


@main.command("goldberg")
@click.argument("p", type=int)
@click.argument("q", type=int)
@click.option("-o", "--output", type=click.Path(), default=None)
def goldberg_cmd(p, q, output):
    """The icosahedral fullerene with Coxeter coordinates (P, Q)."""
    f = make_goldberg(CoxeterCoords(p, q))
    _emit([f], output)
    click.echo(f"goldberg({p},{q}): {f.vertex_count} vertices, "
               f"separation {pentagon_separation(f).separation}", err=True)


@main.command("minimal")
@click.argument("d", type=int)
@click.option("-o", "--output", type=click.Path(), default=None)
def minimal_cmd(d, output):
    """Smallest fullerene(s) with pentagon separation exactly D."""
    fs = minimal_separation_fullerene(d)
    _emit(fs, output)
    for f in fs:
        click.echo(f"{f.vertex_count} vertices, separation "
                   f"{pentagon_separation(f).separation}", err=True)


@main.command("build")
@click.argument("d", type=int)
@click.argument("h", type=int)
@click.option("-o", "--output", type=click.Path(), default=None)
def build_cmd(d, h, output):
    """A fullerene with H hexagons and pentagon separation >= D."""
    f = build_separated(d, h)
    _emit([f], output)
    click.echo(f"{f.vertex_count} vertices, {f.hexagon_count} hexagons, "
               f"separation {pentagon_separation(f).separation} "
               f"(threshold for d={d}: {h_threshold(d)})", err=True)


@main.command("tables")
@click.argument("nmin", type=int)
@click.argument("nmax", type=int)
@click.option("--workers", type=int, default=None)
def tables_cmd(nmin, nmax, workers):
    """Regenerate the count table for even vertex counts in [NMIN, NMAX]."""
    from .spiral import count_table

    if workers is None:
        workers = default_workers()
    rows = count_table(range(nmin, nmax + 1, 2), workers=workers)
    click.echo(emit_table(rows), nl=False)


@main.command("verify")
@click.argument("nmin", type=int)
@click.argument("nmax", type=int)
@click.option("--workers", type=int, default=None)
def verify_cmd(nmin, nmax, workers):
    """Regenerate counts and check them against the published rows."""
    if workers is None:
        workers = default_workers()
    report = verify_against_fixtures(nmin, nmax, workers=workers)
    click.echo(emit_table(report.rows), nl=False)
    if report.ok:
        click.echo(f"all rows match for nv in [{nmin}, {nmax}]", err=True)
    else:
        for mm in report.mismatches:
            click.echo(f"MISMATCH nv={mm.nv} column={mm.column} "
                       f"expected={mm.expected} got={mm.actual}", err=True)
        sys.exit(1)


@main.command("convert")
@click.argument("infile", type=click.Path(exists=True, allow_dash=True))
@click.option("--to", "fmt", type=click.Choice(["text", "planar_code"]),
              required=True, help="Target format.")
@click.option("-o", "--output", type=click.Path(), default=None)
def convert_cmd(infile, fmt, output):
    """Convert between planar_code and the adjacency text format."""
    if fmt == "text":
        with click.open_file(infile, "rb") as fh:
            text = write_text(read_planar_code(fh))
        if output:
            with open(output, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    else:
        with click.open_file(infile, "r") as fh:
            graphs = list(read_text(fh.read()))
        if output:
            with open(output, "wb") as fh:
                write_planar_code(graphs, fh)
        else:
            write_planar_code(graphs, sys.stdout.buffer)
            sys.stdout.buffer.flush()


def run():
    try:
        main(standalone_mode=True)
    except PentasepError as exc:    # pragma: no cover - click wraps most paths
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    run()
