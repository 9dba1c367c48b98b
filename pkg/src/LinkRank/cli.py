"""
Command-line interface for linkrank.

Commands: `rank` scores every node, `detect` finds community pages and their
members, `compare` runs detection with every algorithm, `gen` writes synthetic
graphs. Exit codes: 0 success, 1 unexpected failure, 2 bad input or
configuration, 3 non-convergence under --strict.
"""

import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import typer
import yaml
from pydantic import ValidationError
from typing_extensions import Annotated

from Configuration import (
    Algorithm,
    DetectionConfig,
    DetectionDefaults,
    InputFormats,
    NormKind,
    PageRankMode,
    PhitsConfig,
    RankingConfig,
    SalsaMethod,
)
from Utils.errors import DidNotConverge, InputError, LinkRankError
from Utils.logging import setup_logging
from Writers import (
    RunReport,
    dump_json,
    export_dot,
    export_graphml,
    write_report,
    write_scores_csv,
)

from .Generators import GraphModel, generate, parse_params
from .Parser import format_edge_list
from .RunService import LoadedGraph, RunService

app = typer.Typer(
    name="linkrank",
    help="Link-analysis ranking and community detection on directed graphs.",
    add_completion=False,
)

logger = logging.getLogger(__name__)

EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_NOT_CONVERGED = 3

_INPUT = "Input"
_RANKING = "Ranking Parameters"
_PHITS = "PHITS Parameters"
_DETECTION = "Detection"
_OUTPUT = "Output"
_LOGGING = "Logging Configuration"

InputOpt = Annotated[str, typer.Option(
    "--input", "-i",
    help="Graph file to read (local path or memory:// URI).",
    rich_help_panel=_INPUT,
)]
FormatOpt = Annotated[str, typer.Option(
    "--format", "-f",
    help=f"Input format: {', '.join(InputFormats.ALL)}.",
    rich_help_panel=_INPUT,
)]
ConfigOpt = Annotated[Optional[str], typer.Option(
    "--config",
    help="YAML run configuration with optional ranking:, phits: and detection: sections. "
         "Flags given on the command line win.",
    rich_help_panel=_INPUT,
)]
PaperFaithfulOpt = Annotated[bool, typer.Option(
    "--paper-faithful",
    help="Undamped PageRank: nodes without out-links keep their rank.",
    rich_help_panel=_RANKING,
)]
DampingOpt = Annotated[Optional[float], typer.Option(
    help="Damping factor for damped PageRank.", rich_help_panel=_RANKING,
)]
NormOpt = Annotated[Optional[NormKind], typer.Option(
    help="Norm applied to iterates and final scores.", rich_help_panel=_RANKING,
)]
TolOpt = Annotated[Optional[float], typer.Option(
    help="Convergence tolerance on the L1 change between sweeps.", rich_help_panel=_RANKING,
)]
MaxItersOpt = Annotated[Optional[int], typer.Option(
    help="Sweep cap for iterative algorithms.", rich_help_panel=_RANKING,
)]
SalsaMethodOpt = Annotated[Optional[SalsaMethod], typer.Option(
    help="SALSA closed form or power iteration.", rich_help_panel=_RANKING,
)]
FactorsOpt = Annotated[Optional[int], typer.Option(
    help="Number of PHITS latent factors.", rich_help_panel=_PHITS,
)]
RestartsOpt = Annotated[Optional[int], typer.Option(
    help="PHITS random restarts.", rich_help_panel=_PHITS,
)]
SeedOpt = Annotated[Optional[int], typer.Option(
    help="Random seed.", rich_help_panel=_PHITS,
)]
TopKOpt = Annotated[Optional[int], typer.Option(
    "--top-k",
    help="Candidate pool size (default: max(1, n // 100)).",
    rich_help_panel=_DETECTION,
)]
ThresholdOpt = Annotated[Optional[float], typer.Option(
    "--threshold",
    help="Keep candidates scoring at or above this instead of a fixed pool.",
    rich_help_panel=_DETECTION,
)]
OutOpt = Annotated[Optional[str], typer.Option(
    "--out", "-o", help="Where to write the result (default: stdout).", rich_help_panel=_OUTPUT,
)]
ScoresCsvOpt = Annotated[Optional[str], typer.Option(
    "--scores-csv", help="Also write the per-node score table as CSV.", rich_help_panel=_OUTPUT,
)]
RecordTimingOpt = Annotated[bool, typer.Option(
    "--record-timing",
    help="Record wall time in the report (reports are then no longer byte-identical).",
    rich_help_panel=_OUTPUT,
)]
StrictOpt = Annotated[bool, typer.Option(
    "--strict", help="Exit with code 3 when an algorithm does not converge.",
    rich_help_panel=_OUTPUT,
)]
LogDirOpt = Annotated[Optional[Path], typer.Option(
    help="Directory to store log files. No log file when omitted.",
    file_okay=False,
    dir_okay=True,
    rich_help_panel=_LOGGING,
)]
LogLevelOpt = Annotated[str, typer.Option(
    help="Set the logging level (e.g., DEBUG, INFO, WARNING, ERROR, CRITICAL).",
    case_sensitive=False,
    rich_help_panel=_LOGGING,
)]


def _setup_logging(log_dir: Optional[Path], log_level: str) -> None:
    try:
        numeric_log_level = getattr(logging, log_level.upper(), None)
        if not isinstance(numeric_log_level, int):
            print(f"Warning: Invalid log level '{log_level}'. Defaulting to INFO.", file=sys.stderr)
            numeric_log_level = logging.INFO
        setup_logging(log_dir=str(log_dir) if log_dir else None, log_level=numeric_log_level)
        logger.debug(f"Logging initialized. Level: {log_level.upper()}, Directory: {log_dir}")
    except Exception as e:
        logging.basicConfig(level=logging.INFO, format="%(asctime)s - %(levelname)s - %(message)s")
        logger.error(f"Critical error setting up logging: {e}. Switched to basicConfig.", exc_info=True)


def _guarded(action: Callable[[], int]) -> None:
    """Run a command body and translate failures into exit codes."""
    try:
        code = action()
    except typer.Exit:
        raise
    except DidNotConverge as e:
        logger.error(str(e))
        raise typer.Exit(code=EXIT_NOT_CONVERGED)
    except (LinkRankError, ValidationError, FileNotFoundError, yaml.YAMLError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        raise typer.Exit(code=EXIT_INPUT)
    except Exception as e:
        logger.error(f"An unexpected error occurred: {e}", exc_info=True)
        raise typer.Exit(code=EXIT_FAILURE)
    if code:
        raise typer.Exit(code=code)


def _load_run_config(service: RunService, path: Optional[str]) -> Dict[str, Dict[str, Any]]:
    if path is None:
        return {}
    document = yaml.safe_load(service.read_text(path)) or {}
    if not isinstance(document, dict):
        raise InputError(f"Run configuration {path} must be a mapping")
    unknown = set(document) - {"ranking", "phits", "detection"}
    if unknown:
        raise InputError(f"Unknown run configuration sections: {', '.join(sorted(unknown))}")
    for name, section in document.items():
        if section is not None and not isinstance(section, dict):
            raise InputError(f"Run configuration section {name!r} must be a mapping")
    return {name: dict(section or {}) for name, section in document.items()}


def _merged(section: Optional[Dict[str, Any]], **flags: Any) -> Dict[str, Any]:
    """File values overridden by every flag that was actually given."""
    values = dict(section or {})
    values.update({key: value for key, value in flags.items() if value is not None})
    return values


def _ranking_config(
    file_config: Dict[str, Dict[str, Any]],
    paper_faithful: bool,
    damping: Optional[float],
    norm: Optional[NormKind],
    tol: Optional[float],
    max_iters: Optional[int],
    salsa_method: Optional[SalsaMethod],
) -> RankingConfig:
    return RankingConfig(**_merged(
        file_config.get("ranking"),
        pagerank_mode=PageRankMode.PAPER_FAITHFUL if paper_faithful else None,
        damping=damping,
        norm=norm,
        tol=tol,
        max_iters=max_iters,
        salsa_method=salsa_method,
    ))


def _phits_config(
    file_config: Dict[str, Dict[str, Any]],
    factors: Optional[int],
    restarts: Optional[int],
    seed: Optional[int],
) -> Optional[PhitsConfig]:
    values = _merged(file_config.get("phits"), factors=factors, restarts=restarts, seed=seed)
    if "factors" not in values:
        return None
    return PhitsConfig(**values)


def _selection(
    file_config: Dict[str, Dict[str, Any]],
    loaded: LoadedGraph,
    top_k: Optional[int],
    threshold: Optional[float],
) -> Dict[str, Any]:
    """top_k / score_threshold; flags replace the file's choice, the default pool applies last."""
    if top_k is not None and threshold is not None:
        raise InputError("--top-k and --threshold are mutually exclusive")
    if top_k is not None or threshold is not None:
        return {"top_k": top_k, "score_threshold": threshold}
    section = file_config.get("detection") or {}
    chosen = {key: section.get(key) for key in ("top_k", "score_threshold")}
    if chosen["top_k"] is None and chosen["score_threshold"] is None:
        chosen["top_k"] = DetectionDefaults.default_top_k(loaded.graph.n)
    return chosen


def _emit(service: RunService, out: Optional[str], text: str) -> None:
    if out:
        service.write_text(out, text)
    else:
        typer.echo(text, nl=False)


def _require_convergence(strict: bool, report: RunReport) -> None:
    if strict and not report.converged:
        raise DidNotConverge(report.algorithm, report.iterations, report)


@app.command()
def rank(
    input_path: InputOpt,
    input_format: FormatOpt = InputFormats.EDGES,
    algo: Annotated[Algorithm, typer.Option(
        "--algo", "-a", help="Ranking algorithm.", rich_help_panel=_RANKING,
    )] = Algorithm.PAGERANK,
    paper_faithful: PaperFaithfulOpt = False,
    damping: DampingOpt = None,
    norm: NormOpt = None,
    tol: TolOpt = None,
    max_iters: MaxItersOpt = None,
    salsa_method: SalsaMethodOpt = None,
    factors: FactorsOpt = None,
    restarts: RestartsOpt = None,
    seed: SeedOpt = None,
    config: ConfigOpt = None,
    out: OutOpt = None,
    scores_csv: ScoresCsvOpt = None,
    record_timing: RecordTimingOpt = False,
    strict: StrictOpt = False,
    log_dir: LogDirOpt = None,
    log_level: LogLevelOpt = "INFO",
):
    """Score every node of a graph with one ranking algorithm."""
    _setup_logging(log_dir, log_level)

    def run() -> int:
        service = RunService(record_timing=record_timing)
        file_config = _load_run_config(service, config)
        ranking = _ranking_config(
            file_config, paper_faithful, damping, norm, tol, max_iters, salsa_method
        )
        phits = _phits_config(file_config, factors, restarts, seed)
        loaded = service.load_graph(input_path, input_format)
        report = service.rank(loaded, algo, ranking, phits)
        _emit(service, out, write_report(report))
        if scores_csv:
            service.write_text(scores_csv, write_scores_csv(report))
        _require_convergence(strict, report)
        return 0

    _guarded(run)


@app.command()
def detect(
    input_path: InputOpt,
    input_format: FormatOpt = InputFormats.EDGES,
    algo: Annotated[Algorithm, typer.Option(
        "--algo", "-a", help="Algorithm used to rank candidate pages.", rich_help_panel=_RANKING,
    )] = Algorithm.PAGERANK,
    paper_faithful: PaperFaithfulOpt = False,
    damping: DampingOpt = None,
    norm: NormOpt = None,
    tol: TolOpt = None,
    max_iters: MaxItersOpt = None,
    salsa_method: SalsaMethodOpt = None,
    factors: FactorsOpt = None,
    restarts: RestartsOpt = None,
    seed: SeedOpt = None,
    top_k: TopKOpt = None,
    threshold: ThresholdOpt = None,
    config: ConfigOpt = None,
    out: OutOpt = None,
    dot: Annotated[Optional[str], typer.Option(
        "--dot", help="Write a DOT rendering with communities coloured.", rich_help_panel=_OUTPUT,
    )] = None,
    graphml: Annotated[Optional[str], typer.Option(
        "--graphml", help="Write GraphML with a community attribute.", rich_help_panel=_OUTPUT,
    )] = None,
    scores_csv: ScoresCsvOpt = None,
    record_timing: RecordTimingOpt = False,
    strict: StrictOpt = False,
    log_dir: LogDirOpt = None,
    log_level: LogLevelOpt = "INFO",
):
    """Find community pages (highly ranked, no out-links) and their members."""
    _setup_logging(log_dir, log_level)

    def run() -> int:
        service = RunService(record_timing=record_timing)
        file_config = _load_run_config(service, config)
        ranking = _ranking_config(
            file_config, paper_faithful, damping, norm, tol, max_iters, salsa_method
        )
        phits = _phits_config(file_config, factors, restarts, seed)
        loaded = service.load_graph(input_path, input_format)
        cfg = DetectionConfig(
            algorithm=algo,
            ranking=ranking,
            phits=phits,
            **_selection(file_config, loaded, top_k, threshold),
        )
        outcome = service.detect(loaded, cfg)
        _emit(service, out, write_report(outcome.report))
        if dot:
            service.write_text(dot, export_dot(loaded.graph, outcome.communities))
        if graphml:
            service.write_text(graphml, export_graphml(loaded.graph, outcome.communities))
        if scores_csv:
            service.write_text(scores_csv, write_scores_csv(outcome.report))
        _require_convergence(strict, outcome.report)
        return 0

    _guarded(run)


@app.command()
def compare(
    input_path: InputOpt,
    input_format: FormatOpt = InputFormats.EDGES,
    paper_faithful: PaperFaithfulOpt = False,
    damping: DampingOpt = None,
    norm: NormOpt = None,
    tol: TolOpt = None,
    max_iters: MaxItersOpt = None,
    salsa_method: SalsaMethodOpt = None,
    factors: FactorsOpt = None,
    restarts: RestartsOpt = None,
    seed: SeedOpt = None,
    top_k: TopKOpt = None,
    threshold: ThresholdOpt = None,
    config: ConfigOpt = None,
    out: OutOpt = None,
    strict: StrictOpt = False,
    log_dir: LogDirOpt = None,
    log_level: LogLevelOpt = "INFO",
):
    """Run detection with every algorithm on one graph (PHITS only with --factors)."""
    _setup_logging(log_dir, log_level)

    def run() -> int:
        service = RunService()
        file_config = _load_run_config(service, config)
        ranking = _ranking_config(
            file_config, paper_faithful, damping, norm, tol, max_iters, salsa_method
        )
        phits = _phits_config(file_config, factors, restarts, seed)
        loaded = service.load_graph(input_path, input_format)
        selection = _selection(file_config, loaded, top_k, threshold)
        algorithms: List[Algorithm] = [
            a for a in Algorithm if a != Algorithm.PHITS or phits is not None
        ]
        configs = [
            DetectionConfig(algorithm=a, ranking=ranking, phits=phits, **selection)
            for a in algorithms
        ]
        document = service.compare(loaded, configs)
        _emit(service, out, dump_json(document))
        for name, report in document["reports"].items():
            if strict and not report["converged"]:
                raise DidNotConverge(name, report["iterations"], report)
        return 0

    _guarded(run)


@app.command()
def gen(
    model: Annotated[GraphModel, typer.Option(
        "--model", "-m", help="Graph model.", rich_help_panel="Required Parameters",
    )],
    params: Annotated[str, typer.Option(
        "--params", "-p",
        help="Model parameters as key=value pairs, comma separated (e.g. 'n=50,p=0.2').",
        rich_help_panel="Required Parameters",
    )] = "",
    seed: Annotated[Optional[int], typer.Option(help="Seed for the random model.")] = None,
    out: OutOpt = None,
    log_dir: LogDirOpt = None,
    log_level: LogLevelOpt = "INFO",
):
    """Write a synthetic graph as an edge list."""
    _setup_logging(log_dir, log_level)

    def run() -> int:
        service = RunService()
        graph = generate(model.value, parse_params(params), seed)
        _emit(service, out, format_edge_list(graph))
        return 0

    _guarded(run)


if __name__ == "__main__":
    app()
