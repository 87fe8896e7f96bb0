#!/usr/bin/env python3
"""
Bott Tower Seshadri Toolkit - Main Entry Point

Command-line front end for Seshadri constants of nef line bundles on Bott
towers: fan summaries, nef/ample classification, pointwise and global
Seshadri constants, and the fixed-point oracle campaign.
"""

import json
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, List, Optional

import structlog
import typer
import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.cli.parsing import parse_bundle, resolve_tower
from src.cli.render import (
    render_campaign,
    render_global,
    render_nef,
    render_point,
    render_seshadri,
    render_strata,
    render_tower_info,
)
from src.cli.schemas import (
    global_output,
    nef_output,
    point_output,
    seshadri_output,
    strata_output,
    tower_info,
)
from src.oracle.verifier import run_campaign
from src.point.cox import CoxPoint
from src.seshadri.engine import (
    check_hypotheses,
    seshadri_at,
    seshadri_inf,
    seshadri_sup,
    strata_report,
)
from src.utils.errors import BottToolkitError

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class TowerSettings(BaseModel):
    default_bott_number: int = 1


class SeshadriSettings(BaseModel):
    formal: bool = False


class VerifySettings(BaseModel):
    seed: int = 7
    trials: int = Field(default=100, ge=0)
    max_height: int = Field(default=5, ge=1)
    max_bott_number: int = Field(default=9, ge=1)
    max_coefficient: int = Field(default=99, ge=0)
    workers: int = Field(default=1, ge=1)


class SystemSettings(BaseModel):
    model_config = ConfigDict(validate_assignment=True)

    log_level: str = "WARNING"
    log_format: str = "json"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"unknown log level {value!r}")
        return level

    @field_validator("log_format")
    @classmethod
    def _known_format(cls, value: str) -> str:
        if value not in ("json", "text"):
            raise ValueError(f"log_format must be 'json' or 'text', got {value!r}")
        return value


class Settings(BaseModel):
    """Application settings loaded from YAML config."""
    tower: TowerSettings = TowerSettings()
    seshadri: SeshadriSettings = SeshadriSettings()
    verify: VerifySettings = VerifySettings()
    system: SystemSettings = SystemSettings()

    @classmethod
    def load_from_file(cls, config_path: Path) -> "Settings":
        """Load settings from YAML configuration file."""
        try:
            with open(config_path, 'r') as f:
                config_data = yaml.safe_load(f) or {}
            return cls(**config_data)
        except Exception as e:
            structlog.get_logger().warning(
                "Failed to load config file, using defaults",
                path=str(config_path),
                error=str(e)
            )
            return cls()

    @classmethod
    def load(cls) -> "Settings":
        """Load settings with defaults or from config file if available."""
        config_path = Path(__file__).parent.parent / "config" / "default.yaml"
        if config_path.exists():
            return cls.load_from_file(config_path)
        else:
            return cls()


def setup_logging(log_level: str, log_format: str = "json") -> None:
    """Configure structured logging on standard error."""
    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=getattr(logging, log_level.upper()),
        force=True,
    )

    renderer = (
        structlog.processors.JSONRenderer()
        if log_format == "json"
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            renderer,
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


logger = structlog.get_logger(__name__)

app_typer = typer.Typer(
    help="Seshadri constants of nef line bundles on Bott towers",
    no_args_is_help=True,
    add_completion=False,
)


@contextmanager
def reporting_errors(json_output: bool) -> Iterator[None]:
    """Turn domain errors into a structured error object and exit code 1."""
    try:
        yield
    except BottToolkitError as e:
        logger.debug("Command failed", error=e.code, message=e.message)
        if json_output:
            typer.echo(json.dumps(e.to_dict(), indent=2, default=str))
        else:
            typer.echo(f"error: {e.code}: {e.message}", err=True)
        raise typer.Exit(code=1)


def _emit(model: BaseModel, json_output: bool, text: str) -> None:
    typer.echo(model.model_dump_json(indent=2) if json_output else text)


def _settings(ctx: typer.Context) -> Settings:
    return ctx.obj if isinstance(ctx.obj, Settings) else Settings()


TOWER_HELP = "Tower file (JSON with n and bott_numbers rows)"
ROWS_HELP = "Inline Bott numbers, rows separated by ';', e.g. '1,2,3;4,5;6'"
JSON_HELP = "Emit machine-readable JSON"
FORMAL_HELP = "Evaluate the closed form outside the positive, nef regime"


@app_typer.callback()
def main(
    ctx: typer.Context,
    config_file: Optional[Path] = typer.Option(
        None,
        "--config",
        help="Configuration file path"
    ),
    log_level: Optional[str] = typer.Option(
        None,
        "--log-level",
        "-l",
        help="Logging level (DEBUG, INFO, WARNING, ERROR)"
    )
) -> None:
    """
    Seshadri constants of nef line bundles on Bott towers.

    Bundles are comma-separated coefficients a_1,...,a_n in the basis
    D_1..D_n; points are Cox coordinates [z1:w1:...:zn:wn] with rational
    entries or '*' for an unspecified nonzero value.
    """
    # Route config-loading warnings to stderr before the real setup.
    setup_logging(SystemSettings().log_level)
    settings = Settings.load_from_file(config_file) if config_file else Settings.load()

    if log_level:
        try:
            settings.system.log_level = log_level
        except ValidationError:
            raise typer.BadParameter(f"unknown log level {log_level!r}", param_hint="--log-level")

    setup_logging(settings.system.log_level, settings.system.log_format)
    ctx.obj = settings


@app_typer.command()
def info(
    ctx: typer.Context,
    n: int = typer.Option(2, "--n", min=1, help="Height of the implicit tower"),
    tower_file: Optional[Path] = typer.Option(None, "--tower", help=TOWER_HELP),
    rows: Optional[str] = typer.Option(None, "--c", help=ROWS_HELP),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """Summarize the fan: rays, maximal cone and wall counts."""
    settings = _settings(ctx)
    with reporting_errors(json_output):
        tower = resolve_tower(n, tower_file, rows, settings.tower.default_bott_number)
        output = tower_info(tower)
    _emit(output, json_output, render_tower_info(output))


@app_typer.command()
def nef(
    ctx: typer.Context,
    bundle: str = typer.Option(..., "--bundle", "-b", help="Coefficients a_1,...,a_n"),
    tower_file: Optional[Path] = typer.Option(None, "--tower", help=TOWER_HELP),
    rows: Optional[str] = typer.Option(None, "--c", help=ROWS_HELP),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """Classify a divisor class as nef and/or ample."""
    settings = _settings(ctx)
    with reporting_errors(json_output):
        divisor = parse_bundle(bundle)
        tower = resolve_tower(divisor.n, tower_file, rows, settings.tower.default_bott_number)
        output = nef_output(tower, divisor)
    _emit(output, json_output, render_nef(output))


@app_typer.command()
def seshadri(
    ctx: typer.Context,
    bundle: str = typer.Option(..., "--bundle", "-b", help="Coefficients a_1,...,a_n"),
    point: str = typer.Option(..., "--point", "-p", help="Cox coordinates [z1:w1:...:zn:wn]"),
    tower_file: Optional[Path] = typer.Option(None, "--tower", help=TOWER_HELP),
    rows: Optional[str] = typer.Option(None, "--c", help=ROWS_HELP),
    formal: Optional[bool] = typer.Option(None, "--formal/--strict", help=FORMAL_HELP),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """Seshadri constant of L at a point, with its Seshadri curve."""
    settings = _settings(ctx)
    formal = settings.seshadri.formal if formal is None else formal
    with reporting_errors(json_output):
        divisor = parse_bundle(bundle)
        x = CoxPoint.parse(point)
        tower = resolve_tower(divisor.n, tower_file, rows, settings.tower.default_bott_number)
        result = seshadri_at(tower, divisor, x, formal=formal)
        output = seshadri_output(tower, divisor, x, result)
    _emit(output, json_output, render_seshadri(output))


@app_typer.command()
def strata(
    ctx: typer.Context,
    bundle: str = typer.Option(..., "--bundle", "-b", help="Coefficients a_1,...,a_n"),
    tower_file: Optional[Path] = typer.Option(None, "--tower", help=TOWER_HELP),
    rows: Optional[str] = typer.Option(None, "--c", help=ROWS_HELP),
    formal: Optional[bool] = typer.Option(None, "--formal/--strict", help=FORMAL_HELP),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """Seshadri constant on every Gamma stratum."""
    settings = _settings(ctx)
    formal = settings.seshadri.formal if formal is None else formal
    with reporting_errors(json_output):
        divisor = parse_bundle(bundle)
        tower = resolve_tower(divisor.n, tower_file, rows, settings.tower.default_bott_number)
        within = check_hypotheses(tower, divisor, formal)
        output = strata_output(tower, divisor, strata_report(tower, divisor, formal), within)
    _emit(output, json_output, render_strata(output))


@app_typer.command()
def inf(
    ctx: typer.Context,
    bundle: str = typer.Option(..., "--bundle", "-b", help="Coefficients a_1,...,a_n"),
    tower_file: Optional[Path] = typer.Option(None, "--tower", help=TOWER_HELP),
    rows: Optional[str] = typer.Option(None, "--c", help=ROWS_HELP),
    formal: Optional[bool] = typer.Option(None, "--formal/--strict", help=FORMAL_HELP),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """Global Seshadri constant eps(L), with a point attaining it."""
    settings = _settings(ctx)
    formal = settings.seshadri.formal if formal is None else formal
    with reporting_errors(json_output):
        divisor = parse_bundle(bundle)
        tower = resolve_tower(divisor.n, tower_file, rows, settings.tower.default_bott_number)
        output = global_output("inf", tower, divisor, seshadri_inf(tower, divisor, formal))
    _emit(output, json_output, render_global(output))


@app_typer.command()
def sup(
    ctx: typer.Context,
    bundle: str = typer.Option(..., "--bundle", "-b", help="Coefficients a_1,...,a_n"),
    tower_file: Optional[Path] = typer.Option(None, "--tower", help=TOWER_HELP),
    rows: Optional[str] = typer.Option(None, "--c", help=ROWS_HELP),
    formal: Optional[bool] = typer.Option(None, "--formal/--strict", help=FORMAL_HELP),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """Seshadri constant at a general point, eps(L, 1) = a_n."""
    settings = _settings(ctx)
    formal = settings.seshadri.formal if formal is None else formal
    with reporting_errors(json_output):
        divisor = parse_bundle(bundle)
        tower = resolve_tower(divisor.n, tower_file, rows, settings.tower.default_bott_number)
        output = global_output("sup", tower, divisor, seshadri_sup(tower, divisor, formal))
    _emit(output, json_output, render_global(output))


@app_typer.command()
def point(
    ctx: typer.Context,
    coordinates: str = typer.Option(..., "--point", "-p", help="Cox coordinates [z1:w1:...:zn:wn]"),
    tower_file: Optional[Path] = typer.Option(None, "--tower", help=TOWER_HELP),
    rows: Optional[str] = typer.Option(None, "--c", help=ROWS_HELP),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """Validate a point, report its stratum and canonical form."""
    settings = _settings(ctx)
    with reporting_errors(json_output):
        x = CoxPoint.parse(coordinates)
        tower = resolve_tower(x.n, tower_file, rows, settings.tower.default_bott_number)
        output = point_output(tower, x)
    _emit(output, json_output, render_point(output))


@app_typer.command()
def verify(
    ctx: typer.Context,
    n: Optional[int] = typer.Option(None, "--n", min=1, help="Fixed tower height (default: random heights)"),
    trials: Optional[int] = typer.Option(None, "--trials", min=0, help="Number of random instances"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Random seed"),
    workers: Optional[int] = typer.Option(None, "--workers", min=1, help="Worker threads"),
    json_output: bool = typer.Option(False, "--json", help=JSON_HELP),
) -> None:
    """Cross-check the closed form against the fixed-point oracle."""
    config = _settings(ctx).verify
    with reporting_errors(json_output):
        report = run_campaign(
            trials=config.trials if trials is None else trials,
            seed=config.seed if seed is None else seed,
            height=n,
            max_height=config.max_height,
            max_bott_number=config.max_bott_number,
            max_coefficient=config.max_coefficient,
            workers=config.workers if workers is None else workers,
        )
    _emit(report, json_output, render_campaign(report))
    if report.discrepancy_count or report.violation_count:
        raise typer.Exit(code=1)


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run the CLI without exiting the interpreter.

    Returns:
        0 on success, 1 for domain errors, 2 for usage errors
    """
    command = typer.main.get_command(app_typer)
    try:
        command.main(args=argv, prog_name="bott-seshadri", standalone_mode=True)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 0
    return 0


if __name__ == "__main__":
    app_typer()
