#!/usr/bin/env python3
"""
EFPM Workbench - Command Line

Counts IFPUG 4.1 function points from .fps specifications, fits and prints
the FP regression models, produces early FP estimates and writes the
regression figures. Results go to stdout in stable line formats; logs and
diagnostics go to stderr.

Exit status: 0 success, 1 validation/parse/file failure, 2 usage error.
"""

import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

import click

from cli import __version__
from counting.fpa_counter import (
    classify_data_function,
    classify_transactional_function,
    count_project,
    weight_of,
)
from dataset.consistency import consistency_stats
from dataset.measurements import embedded_dataset
from estimator.efpm import best_estimate, estimate, fit_models, paper_models
from exporters.svg_exporter import PlotSpec, scatter_svg
from exporters.table_exporter import data_table
from ingest.dataset_csv import load_csv_file, save_csv
from ingest.spec_parser import load_spec
from models.errors import EfpmError, ParseFailure
from models.estimate import PREDICTORS, CalibratedModelSet, EstimationInput, Predictor
from models.functions import DATA_KINDS, FunctionKind
from models.measurement import Dataset
from regression.ols import adjusted_r2_for_n, fit_simple_ols, model_summary
from utils.logging_config import configure_logging
from utils.settings import Settings


logger = logging.getLogger(__name__)

PROG_NAME = "efpm"

PREDICTOR_CHOICE = click.Choice([predictor.value for predictor in PREDICTORS])
FORMAT_OPTION = click.option("--format", "output_format", type=click.Choice(["text", "json"]),
                             default="text", show_default=True, help="Output format")
DATASET_OPTION = click.option("--dataset", "dataset_path", type=click.Path(dir_okay=False),
                              help="Measurement CSV (default: embedded reference dataset)")


def _load_dataset(dataset_path: Optional[str]) -> Dataset:
    if dataset_path:
        ds = load_csv_file(dataset_path)
        logger.info(f"Loaded {len(ds)} measurements from {dataset_path}")
        return ds
    return embedded_dataset()


def _models_from_option(value: str) -> CalibratedModelSet:
    if value == "paper":
        return paper_models()
    if value.startswith("fit:") and len(value) > len("fit:"):
        return fit_models(load_csv_file(value[len("fit:"):]))
    raise click.BadParameter(f"expected 'paper' or 'fit:<csv>', got {value!r}", param_hint="'--models'")


def _write_text(path: str, text: str):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    logger.info(f"Wrote {path}")


def _echo_json(data: dict):
    click.echo(json.dumps(data, sort_keys=True, indent=2))


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name=PROG_NAME, message="%(prog)s %(version)s")
@click.pass_context
def cli(ctx: click.Context):
    """IFPUG 4.1 function point counting and early FP estimation."""
    settings = Settings()
    configure_logging(settings)
    logger.debug(f"Loaded {settings!r}")
    ctx.obj = settings


@cli.command()
@click.argument("spec_file", type=click.Path(dir_okay=False))
@FORMAT_OPTION
def count(spec_file: str, output_format: str):
    """Count the unadjusted FP of a .fps specification."""
    project = load_spec(spec_file)
    result = count_project(project)

    if output_format == "json":
        _echo_json({"project": project.name, **result.as_dict()})
        return

    click.echo(f"total_ufp {result.total_ufp}")
    for kind in FunctionKind:
        total = result.per_kind[kind]
        click.echo(f"{kind.value} {total.count} {total.subtotal}")
    click.echo(f"cilf {result.cilf}")
    click.echo(f"cilfeif {result.cilfeif}")
    click.echo(f"ceieoeq {result.ceieoeq}")


@cli.command(name="estimate")
@click.option("--cilf", type=int, help="Number of ILFs")
@click.option("--cilfeif", type=int, help="Number of ILFs + EIFs")
@click.option("--ceieoeq", type=int, help="Number of EIs + EOs + EQs")
@click.option("--interval", "level", type=float, help="Attach prediction intervals at this confidence level")
@click.option("--models", "models_option", default="paper", show_default=True,
              help="'paper' for the published models or 'fit:<csv>' to recalibrate")
@FORMAT_OPTION
def estimate_command(cilf: Optional[int], cilfeif: Optional[int], ceieoeq: Optional[int],
                     level: Optional[float], models_option: str, output_format: str):
    """Estimate FP from whichever early counters are known."""
    models = _models_from_option(models_option)
    estimates = estimate(EstimationInput(cilf=cilf, cilfeif=cilfeif, ceieoeq=ceieoeq), models, level=level)
    best = best_estimate(estimates)

    if output_format == "json":
        _echo_json({
            "models": models_option,
            "estimates": [item.as_dict() for item in estimates],
            "best": best.as_dict(),
        })
        return

    for item in estimates:
        line = f"{item.model_used.label} {item.x:g} {item.predicted_fp:.3f} r2={item.r2:.3f}"
        if item.interval is not None:
            low, high = item.interval
            line += f" interval={low:.3f}..{high:.3f}@{item.level:g}"
        click.echo(line)
    click.echo(f"best {best.model_used.label} {best.predicted_fp:.3f}")


@cli.command()
@click.option("--x", "predictor", type=PREDICTOR_CHOICE, required=True, help="Predictor counter")
@DATASET_OPTION
@click.option("--table", "table_path", type=click.Path(dir_okay=False), help="Also write the data table (TSV)")
def fit(predictor: str, dataset_path: Optional[str], table_path: Optional[str]):
    """Fit FP against one counter and print the model summary."""
    predictor = Predictor(predictor)
    points = _load_dataset(dataset_path).points(predictor.value)
    model = fit_simple_ols(points, predictor_name=predictor.label)
    click.echo(model_summary(model), nl=False)
    if table_path:
        _write_text(table_path, data_table(points, model))


@cli.group()
def dataset():
    """Reference measurement dataset."""


@dataset.command(name="export")
def dataset_export():
    """Print the embedded 60-measurement dataset as CSV."""
    click.echo(save_csv(embedded_dataset()), nl=False)


@cli.command()
@DATASET_OPTION
def consistency(dataset_path: Optional[str]):
    """Relative difference between the two measurements of each project."""
    stats, mean = consistency_stats(_load_dataset(dataset_path))
    for stat in stats:
        click.echo(f"{stat.project_id} {stat.fp_first:.1f} {stat.fp_second:.1f} {stat.rel_diff:.5f}")
    click.echo(f"mean {mean:.5f}")


@cli.command()
@click.option("--x", "predictor", type=PREDICTOR_CHOICE, required=True, help="Predictor counter")
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True, help="SVG file to write")
@DATASET_OPTION
@click.option("--table", "table_path", type=click.Path(dir_okay=False), help="Also write the data table (TSV)")
@click.pass_obj
def plot(settings: Settings, predictor: str, out_path: str, dataset_path: Optional[str],
         table_path: Optional[str]):
    """Write the scatter figure with its regression line as SVG."""
    predictor = Predictor(predictor)
    points = _load_dataset(dataset_path).points(predictor.value)
    model = fit_simple_ols(points, predictor_name=predictor.label)
    spec = PlotSpec(
        points=tuple(points),
        model=model,
        x_label=predictor.label,
        y_label="FP",
        title=f"Regression line FP - {predictor.label}",
        width=settings.plot_width,
        height=settings.plot_height,
        marker_radius=settings.marker_radius,
    )
    _write_text(out_path, scatter_svg(spec))
    if table_path:
        _write_text(table_path, data_table(points, model))
    click.echo(f"wrote {out_path} markers={len(spec.points)}")


@cli.command()
@click.argument("kind", type=click.Choice([kind.keyword for kind in FunctionKind]))
@click.option("--rets", type=int, help="Record element types (ilf, eif)")
@click.option("--ftrs", type=int, help="File types referenced (ei, eo, eq)")
@click.option("--dets", type=int, required=True, help="Data element types")
def classify(kind: str, rets: Optional[int], ftrs: Optional[int], dets: int):
    """Complexity level and weight of a single function."""
    kind = FunctionKind.from_keyword(kind)
    if kind in DATA_KINDS:
        if rets is None or ftrs is not None:
            raise click.UsageError(f"{kind.keyword} takes --rets and --dets")
        level = classify_data_function(kind, rets, dets)
    else:
        if ftrs is None or rets is not None:
            raise click.UsageError(f"{kind.keyword} takes --ftrs and --dets")
        level = classify_transactional_function(kind, ftrs, dets)
    click.echo(f"{kind.value} {level.label} {weight_of(kind, level)}")


@cli.command()
@DATASET_OPTION
def reproduce(dataset_path: Optional[str]):
    """Fit all three counters and print every model summary."""
    ds = _load_dataset(dataset_path)
    for index, predictor in enumerate(PREDICTORS):
        model = fit_simple_ols(ds.points(predictor.value), predictor_name=predictor.label)
        if index:
            click.echo("")
        click.echo(model_summary(model), nl=False)
        check = adjusted_r2_for_n(model.r2, model.n)
        click.echo(f"n={model.n} r2={model.r2:.3f} r2_adj={model.r2_adj:.3f} check={check:.3f}")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Execute one command line

    Args:
        argv: Arguments after the program name (default: sys.argv[1:])

    Returns:
        Exit status: 0 success, 1 failure with diagnostics on stderr, 2 usage error
    """
    args: Optional[List[str]] = list(argv) if argv is not None else None
    try:
        status = cli.main(args=args, prog_name=PROG_NAME, standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except ParseFailure as failure:
        for line in failure.render():
            click.echo(line, err=True)
        return 1
    except EfpmError as e:
        click.echo(f"{PROG_NAME}: error: {e}", err=True)
        return 1
    except OSError as e:
        target = f"{e.filename}: " if e.filename else ""
        click.echo(f"{PROG_NAME}: error: {target}{e.strerror or e}", err=True)
        return 1
    except Exception as e:
        logger.error(f"Unexpected error: {e}", exc_info=True)
        click.echo(f"{PROG_NAME}: error: {e}", err=True)
        return 1
    return status if isinstance(status, int) else 0


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
