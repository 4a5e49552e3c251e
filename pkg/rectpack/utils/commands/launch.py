# Command line driver: `rectpack gen|omega|color|mwisr|verify|bench|config`.
# Results go to files or stdout as JSON; diagnostics go to stderr.

import functools
import logging
import sys

import click
from dotenv import load_dotenv
from rich.console import Console
from rich.table import Table

from rectpack.cliques.maximal import clique_number
from rectpack.config.config_manager import config
from rectpack.errors import RectpackError
from rectpack.hooks.modules.coloring import useColorer
from rectpack.hooks.modules.instance import useGenerator
from rectpack.hooks.modules.mwisr import useMwisrSolver
from rectpack.instances.files import load, load_coloring, load_id_list, save, write_json
from rectpack.oracles.validate import validate_coloring, validate_independent
from rectpack.render.svg import render_svg
from rectpack.utils.logger import CLILogger

stderr = Console(stderr=True)


def handle_errors(func):
    """Map package errors to their exit codes with a one-line diagnostic."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except RectpackError as e:
            ctx = click.get_current_context()
            CLILogger(ctx.command.name, ctx.obj["log_mode"]).log(
                f"{type(e).__name__}: {e.message}", "error"
            )
            ctx.exit(e.exit_code)
    return wrapper


def logger_for(ctx: click.Context) -> CLILogger:
    return CLILogger(ctx.command.name, ctx.obj["log_mode"])


@click.group()
@click.option("--log-mode", type=click.Choice(["console", "file", "quiet"]), default=None,
              help="Where diagnostics go (default from config.yaml).")
@click.pass_context
def cli(ctx: click.Context, log_mode):
    """Rectangle intersection graph coloring and independent set approximation."""
    load_dotenv()
    ctx.ensure_object(dict)
    ctx.obj["log_mode"] = log_mode or config.get_log_mode()
    level = logging.WARNING if ctx.obj["log_mode"] != "quiet" else logging.ERROR
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


@cli.command()
@click.option("--kind", required=True,
              type=click.Choice(["uniform", "squares", "concentric", "vertical", "crossgrid"]))
@click.option("--n", "n", required=True, type=int)
@click.option("--seed", required=True, type=int)
@click.option("--grid", default=10_000, show_default=True, type=int)
@click.option("--weights", default="unit", show_default=True, type=click.Choice(["unit", "random"]))
@click.option("-o", "--output", required=True, type=click.Path(dir_okay=False))
@click.pass_context
@handle_errors
def gen(ctx, kind, n, seed, grid, weights, output):
    """Generate a seeded instance file."""
    inst = useGenerator(kind=kind, n=n, seed=seed, grid=grid, weights=weights)
    save(inst, output)
    logger_for(ctx).log(f"wrote {len(inst)} rectangles to {output}", "done")


@cli.command()
@click.option("-i", "--input", "input_path", required=True, type=click.Path(dir_okay=False))
@click.pass_context
@handle_errors
def omega(ctx, input_path):
    """Print the clique number of an instance."""
    click.echo(clique_number(load(input_path)))


def report_table(title: str, rows) -> Table:
    table = Table(title=title)
    table.add_column("key")
    table.add_column("value", justify="right")
    for key, value in rows:
        table.add_row(str(key), str(value))
    return table


@cli.command()
@click.option("-i", "--input", "input_path", required=True, type=click.Path(dir_okay=False))
@click.option("--algo", default="hier", show_default=True,
              type=click.Choice(["hier", "agb", "corner", "sparse", "warmup-cc", "warmup-vertical"]))
@click.option("-o", "--output", required=True, type=click.Path(dir_okay=False))
@click.option("--svg", "svg_path", default=None, type=click.Path(dir_okay=False))
@click.option("--report", is_flag=True, help="Print a summary table to stderr.")
@click.pass_context
@handle_errors
def color(ctx, input_path, algo, output, svg_path, report):
    """Color an instance and write {algorithm, num_colors, omega, colors}."""
    inst = load(input_path)
    colorer = useColorer(algo=algo, log_mode=ctx.obj["log_mode"])
    coloring = colorer(inst)
    omega_value = clique_number(inst)
    write_json({
        "algorithm": algo,
        "num_colors": coloring.num_colors,
        "omega": omega_value,
        "colors": {rect_id: coloring.colors[rect_id] for rect_id in inst.ids},
    }, output)
    if svg_path:
        with open(svg_path, "w") as f:
            f.write(render_svg(inst, coloring))
    if report:
        rows = [("rectangles", len(inst)), ("omega", omega_value), ("num_colors", coloring.num_colors),
                ("used colors", coloring.used_colors())]
        rows += [(key, value) for key, value in sorted(coloring.stats.items())]
        rows += [(f"palette {label}", offset) for label, offset in (coloring.palette_offsets or {}).items()]
        stderr.print(report_table(f"{algo} coloring", rows))


@cli.command()
@click.option("-i", "--input", "input_path", required=True, type=click.Path(dir_okay=False))
@click.option("--method", default="approx", show_default=True, type=click.Choice(["approx", "exact"]))
@click.option("--feas-tol", default=None, type=float)
@click.option("--opt-tol", default=None, type=float)
@click.option("-o", "--output", required=True, type=click.Path(dir_okay=False))
@click.option("--svg", "svg_path", default=None, type=click.Path(dir_okay=False))
@click.option("--report", is_flag=True, help="Print a summary table to stderr.")
@click.pass_context
@handle_errors
def mwisr(ctx, input_path, method, feas_tol, opt_tol, output, svg_path, report):
    """Approximate (or solve exactly) a maximum weight independent set."""
    inst = load(input_path, drop_zero_weight=True)
    solve = useMwisrSolver(method=method, feas_tol=feas_tol, opt_tol=opt_tol, log_mode=ctx.obj["log_mode"])
    result = solve(inst)
    write_json(result, output)
    if svg_path:
        with open(svg_path, "w") as f:
            f.write(render_svg(inst, highlight=result["chosen"]))
    if report:
        rows = [("rectangles", len(inst))] + [(k, v) for k, v in result.items() if k != "chosen"]
        rows.append(("chosen", len(result["chosen"])))
        stderr.print(report_table(f"mwisr ({method})", rows))


@cli.command()
@click.option("-i", "--input", "input_path", required=True, type=click.Path(dir_okay=False))
@click.option("--coloring", "coloring_path", default=None, type=click.Path(dir_okay=False))
@click.option("--independent-set", "set_path", default=None, type=click.Path(dir_okay=False))
@click.pass_context
@handle_errors
def verify(ctx, input_path, coloring_path, set_path):
    """Check a coloring for properness or a set for independence."""
    if (coloring_path is None) == (set_path is None):
        raise click.UsageError("pass exactly one of --coloring and --independent-set")
    inst = load(input_path)
    if coloring_path is not None:
        verdict = validate_coloring(inst, load_coloring(coloring_path))
        what = "coloring"
    else:
        verdict = validate_independent(inst, load_id_list(set_path))
        what = "independent set"
    logger = logger_for(ctx)
    if verdict.ok:
        logger.log(f"{what} ok", "done")
        click.echo("ok")
        return
    logger.log(f"{what} violated by intersecting pair {verdict.pair[0]}, {verdict.pair[1]}", "error")
    click.echo(f"violation {verdict.pair[0]} {verdict.pair[1]}")
    ctx.exit(1)


@cli.command()
@click.option("--suite", "suite_names", multiple=True, help="Suite to run (repeatable; default all).")
@click.option("--scale", default=1.0, show_default=True, type=float, help="Multiplier on configured trial counts.")
@click.option("--seed", default=None, type=int)
@click.pass_context
@handle_errors
def bench(ctx, suite_names, scale, seed):
    """Run the acceptance suites and print a summary table."""
    from rectpack.utils.bench import suites

    settings = config.get_bench_config()
    available = suites(settings, seed if seed is not None else settings.get("seed", 2024), scale)
    unknown = [name for name in suite_names if name not in available]
    if unknown:
        raise click.UsageError(f"unknown suite {unknown[0]!r}; choose from {', '.join(available)}")
    logger = logger_for(ctx)

    table = Table(title="rectpack bench")
    for column in ("suite", "trials", "failures", "metrics", "first failure"):
        table.add_column(column)
    failed = False
    for name in suite_names or available:
        logger.log(f"running {name}", "info")
        result = available[name]()
        failed |= not result.ok
        metrics = "; ".join(f"{k} avg {m['avg']:.3g} p90 {m['p90']:.3g} p99 {m['p99']:.3g}"
                            for k, m in result.metrics().items())
        table.add_row(name, str(result.trials), str(result.failures), metrics, result.first_failure[:80])
    Console().print(table)
    if failed:
        ctx.exit(1)


@cli.command(name="config")
@click.option("--refresh", is_flag=True, help="Reload config.yaml before printing.")
def show_config(refresh):
    """Print the active configuration."""
    if refresh:
        config.refresh()
    table = Table(title="rectpack configuration")
    table.add_column("section")
    table.add_column("key")
    table.add_column("value")
    for section, values in config.config.items():
        for key, value in (values or {}).items():
            table.add_row(section, key, str(value))
    Console().print(table)
    click.echo(f"worker threads: {config.get_max_workers()}")


def main():
    cli(prog_name="rectpack")


if __name__ == "__main__":
    main()
