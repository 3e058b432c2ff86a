"""CLI entry point for the clifford-verify command."""

from __future__ import annotations

import logging
from pathlib import Path

import click
from rich.console import Console
from rich.logging import RichHandler
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from clifford_workbench.config.defaults import DEFAULT_OUTPUT_DIR, OUTPUT_DIR_ENV
from clifford_workbench.config.suite_config import SUITE_ORDER

console = Console()


def _setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )


def _parse_refine(value: str | None) -> list[int] | None:
    if value is None:
        return None
    lo, sep, hi = value.partition("..")
    try:
        levels = [int(lo)] if not sep else list(range(int(lo), int(hi) + 1))
    except ValueError:
        raise click.BadParameter(f"expected lo..hi, got {value!r}", param_hint="--refine")
    if not levels:
        raise click.BadParameter(f"empty refinement range {value!r}", param_hint="--refine")
    return levels


def _parse_overrides(values: tuple[str, ...]) -> dict[str, float]:
    overrides = {}
    for item in values:
        name, sep, number = item.partition("=")
        if not sep:
            raise click.BadParameter(f"expected name=value, got {item!r}", param_hint="--tol-override")
        try:
            overrides[name.strip()] = float(number)
        except ValueError:
            raise click.BadParameter(f"tolerance {name!r} is not a number: {number!r}", param_hint="--tol-override")
    return overrides


@click.group()
def main():
    """Clifford Workbench: verify the mass intertwining transform and its integral theorems."""
    pass


@main.command()
@click.option("--suite", type=click.Choice(["all", *SUITE_ORDER]), default="all", help="Suite to run")
@click.option("--n", "n", type=int, default=None, help="Number of Clifford generators (1-6)")
@click.option("--lambda", "mass", default=None, help="Mass: 0, a real, or 2**n comma-separated coefficients")
@click.option("--convention", type=click.Choice(["ledger", "printed"]), default=None, help="Sign convention")
@click.option("--h", "h", type=float, default=None, help="Finite-difference step")
@click.option("--refine", default=None, help="Quadrature refinement levels lo..hi")
@click.option("--tol-override", "tol_overrides", multiple=True, help="Tolerance override name=value")
@click.option("--seed", type=int, default=None, help="Random seed")
@click.option("--out", type=click.Path(), envvar=OUTPUT_DIR_ENV, default=DEFAULT_OUTPUT_DIR,
              show_default=True, help="Report directory")
@click.option("--format", "fmt", type=click.Choice(["structured", "tabular"]), default="structured")
@click.option("--config", "config_file", type=click.Path(exists=True), default=None, help="Suite config YAML")
@click.option("--verbose/--quiet", default=True)
def run(suite: str, n: int | None, mass: str | None, convention: str | None, h: float | None,
        refine: str | None, tol_overrides: tuple[str, ...], seed: int | None, out: str, fmt: str,
        config_file: str | None, verbose: bool):
    """Run verification suites and write a report."""
    from clifford_workbench.config.suite_config import SuiteConfig
    from clifford_workbench.errors import ConfigError
    from clifford_workbench.pipeline import run_pipeline

    _setup_logging(verbose)
    try:
        base = SuiteConfig.from_yaml(config_file) if config_file else SuiteConfig()
        cfg = base.with_updates(
            n=n,
            mass=mass,
            sign_convention=convention,
            h=h,
            refinements=_parse_refine(refine),
            seed=seed,
            tolerances=_parse_overrides(tol_overrides),
        )
    except ConfigError as e:
        raise click.UsageError(str(e))

    console.print(f"\n[bold]Clifford Workbench[/bold] suite {suite}, n={cfg.n}, lambda={cfg.mass}, "
                  f"{cfg.sign_convention} convention\n")

    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=console,
    ) as progress:
        task = progress.add_task("Preparing suites...", total=None)

        def status_callback(msg: str):
            progress.update(task, description=msg)

        results = run_pipeline(cfg, suite, Path(out), fmt, status_callback=status_callback)

    report = results["report"]
    table = Table(title="Verification summary")
    table.add_column("Suite")
    table.add_column("Checks", justify="right")
    table.add_column("Passed", justify="right")
    table.add_column("Failed", justify="right")
    for summary in report.summaries:
        style = "green" if summary.all_passed else "red"
        table.add_row(summary.suite, str(summary.total), str(summary.passed), f"[{style}]{summary.failed}[/{style}]")
    console.print(table)

    for message in report.diagnostics:
        console.print(f"  [yellow]diagnostic:[/yellow] {message}")
    for record in report.failures:
        params = ", ".join(f"{k}={v}" for k, v in record.parameters.items())
        console.print(f"  [red]FAIL[/red] {record.suite}.{record.name} ({params}): "
                      f"residual {record.residual:.3e} vs tolerance {record.tolerance:.3e}")

    console.print(f"\n  report: {results['output_file']}\n")
    if not results["passed"]:
        raise SystemExit(1)


@main.command()
@click.argument("config_file", type=click.Path(exists=True))
def validate(config_file: str):
    """Validate a suite config YAML file."""
    from clifford_workbench.config.suite_config import SuiteConfig
    from clifford_workbench.errors import ConfigError

    try:
        cfg = SuiteConfig.from_yaml(config_file)
    except ConfigError as e:
        console.print(f"[red]Invalid:[/red] {e}")
        raise SystemExit(1)
    console.print(f"[green]Valid![/green] {Path(config_file).name} (digest {cfg.digest()})")
    console.print(f"  n: {cfg.n}")
    console.print(f"  lambda: {cfg.mass_term().label}")
    console.print(f"  Convention: {cfg.sign_convention}")
    console.print(f"  h: {cfg.h}")
    console.print(f"  Refinements: {', '.join(str(r) for r in cfg.refinements)}")
    console.print(f"  Seed: {cfg.seed}, samples: {cfg.samples}")
    if cfg.tolerances:
        console.print("  Tolerance overrides:")
        for name, value in cfg.tolerances.items():
            console.print(f"    {name:20s} {value:g}")


@main.command()
def conventions():
    """List the sign conventions and the signs they fix."""
    from clifford_workbench.config.conventions import SignConvention

    table = Table(title="Sign convention ledger")
    table.add_column("Convention")
    table.add_column("sigma (D)", justify="right")
    table.add_column("s (zeta)", justify="right")
    table.add_column("kappa (exp)", justify="right")
    table.add_column("Description")
    for convention in SignConvention:
        signs = convention.signs
        table.add_row(
            convention.value,
            f"{signs.dirac_sign:+d}",
            f"{signs.monomial_sign:+d}",
            f"{signs.mass_exponent_sign:+d}",
            signs.description,
        )
    console.print(table)


@main.command(name="export-rule")
@click.option("--domain", "kind", type=click.Choice(["sphere", "box", "ball"]), default="sphere")
@click.option("--n", "n", type=int, default=2, help="Number of Clifford generators")
@click.option("--refinement", type=int, default=2)
@click.option("--radius", type=float, default=1.0, help="Radius, or half width for boxes")
@click.option("--output", type=click.Path(), required=True, help="Table file to write")
def export_rule_command(kind: str, n: int, refinement: int, radius: float, output: str):
    """Write a quadrature rule as a whitespace-separated table."""
    from clifford_workbench.algebra.point import Point
    from clifford_workbench.errors import DomainError
    from clifford_workbench.integrals.quadrature import BallVolume, BoxBoundary, SphereSurface, build_rule, export_rule

    if refinement < 1:
        raise click.BadParameter("refinement must be at least 1", param_hint="--refinement")
    if radius <= 0:
        raise click.BadParameter("radius must be positive", param_hint="--radius")
    domains = {
        "sphere": lambda: SphereSurface(Point.origin(n), radius),
        "box": lambda: BoxBoundary.centered(n, radius),
        "ball": lambda: BallVolume(Point.origin(n), radius),
    }
    try:
        rule = build_rule(domains[kind](), refinement)
    except DomainError as e:
        raise click.UsageError(str(e))
    path = export_rule(rule, output)
    console.print(f"[green]Wrote[/green] {rule.size} nodes ({rule.domain.describe()}) to {path}")


if __name__ == "__main__":
    main()
