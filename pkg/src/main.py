"""
Command-line entry point for the metric fractal lab.

Every command parses into a RunConfig, runs the matching module operation
and writes one structured document ``{"config": ..., "report": ...}``
(or CSV for tabular reports) to stdout or ``--output``.
"""

import argparse
import sys
from dataclasses import replace
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from config.settings import LabConfig
from .cycles import (
    check_isometric,
    classify_cycle,
    collapse_subdiamonds,
    cycle_family,
    enumerate_simple_cycles,
    isometric_cycle,
)
from .embed import (
    construct_l1_to_d2,
    construct_m_embedding,
    distortion_lower_bound,
    evaluate,
    growth_experiment,
    min_distortion_exact,
    min_distortion_heuristic,
    verify_certificate,
)
from .metric import STRATEGIES, ball, diameter_hops, distance_oracle, doubling_bounds, geometry_profile
from .models.embedding import EmbeddingMap
from .models.graph import GraphFamily, MetricGraph, Normalization
from .recgraph import enumerate_subdiamonds, generate, graph_from_spec
from .serialization import DocumentSerializer, Envelope, RunConfig, dump_document, read_graph
from .utils.exact import parse_exact
from .utils.logger import set_level, setup_logger
from .utils.exceptions import LabException, UsageError

logger = setup_logger(__name__)

TABULAR = {("profile", None), ("embed", "growth")}


class LabArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as UsageError (exit 64)."""

    def error(self, message: str):
        raise UsageError(message, details={"usage": self.format_usage().strip()})


def _int_list(text: str) -> List[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip() != ""]
    except ValueError:
        raise UsageError(f"Expected a comma separated list of integers, got {text!r}")


def _fraction(text: str) -> Fraction:
    try:
        return parse_exact(text)
    except ValueError as e:
        raise UsageError(str(e))


class LabRunner:
    """
    Dispatches a RunConfig to the module operations.

    Handlers return a pydantic document (wrapped in the envelope) or, for
    tabular reports in CSV format, the CSV text.
    """

    def __init__(self, config: Optional[LabConfig] = None):
        self.config = config or LabConfig.from_env()
        self.serializer = DocumentSerializer()
        self._handlers: Dict[Tuple[str, Optional[str]], Callable[[RunConfig], object]] = {
            ("gen", None): self._gen,
            ("dist", None): self._dist,
            ("diam", None): self._diam,
            ("ball", None): self._ball,
            ("doubling", None): self._doubling,
            ("profile", None): self._profile,
            ("cycles", "enumerate"): self._cycles_enumerate,
            ("cycles", "classify-all"): self._cycles_classify,
            ("cycles", "isometric"): self._cycles_isometric,
            ("cycles", "family"): self._cycles_family,
            ("cycles", "collapse"): self._cycles_collapse,
            ("embed", "eval"): self._embed_eval,
            ("embed", "exact"): self._embed_exact,
            ("embed", "heuristic"): self._embed_heuristic,
            ("embed", "lower-bound"): self._embed_lower_bound,
            ("embed", "construct-m"): self._embed_construct_m,
            ("embed", "construct-l1"): self._embed_construct_l1,
            ("embed", "growth"): self._embed_growth,
        }

    def execute(self, run: RunConfig) -> str:
        """
        Run one command and return the serialized output.

        Raises:
            UsageError: Unknown command, or CSV asked for a non-tabular report
            LabException: Whatever the module operation raises
        """
        key = (run.command, run.subcommand)
        handler = self._handlers.get(key)
        if handler is None:
            raise UsageError(f"Unknown command: {' '.join(k for k in key if k)}")
        if run.format == "csv" and key not in TABULAR:
            raise UsageError(f"CSV output is only available for profile and embed growth, not {run.command}")
        logger.info(f"Running {run.command} {run.subcommand or ''}".rstrip())
        report = handler(run)
        if isinstance(report, str):
            # CSV tables lead with their run config as a comment line
            return f"# config: {run.model_dump_json()}\n{report}"
        return dump_document(Envelope[type(report)](config=run, report=report))

    def run(self, run: RunConfig) -> Tuple[int, str]:
        """Exit status and output text; errors are reported on stderr."""
        try:
            return 0, self.execute(run)
        except LabException as e:
            report_error(e)
            return e.exit_code, ""

    # graph arguments

    def graph(self, spec: Optional[str]) -> MetricGraph:
        """Resolve ``family:level[:weighted]`` or a graph document path."""
        if not spec:
            raise UsageError("A graph argument is required")
        if spec.endswith(".json") or Path(spec).is_file():
            return read_graph(spec)
        return graph_from_spec(spec, max_edges=self.config.generation.max_edges)

    @staticmethod
    def _param(run: RunConfig, name: str, default: Optional[str] = None) -> str:
        value = run.params.get(name, default)
        if value is None:
            raise UsageError(f"Missing parameter --{name.replace('_', '-')}")
        return value

    def _int_param(self, run: RunConfig, name: str, default: Optional[int] = None) -> int:
        raw = self._param(run, name, None if default is None else str(default))
        try:
            return int(raw)
        except ValueError:
            raise UsageError(f"--{name.replace('_', '-')} must be an integer, got {raw!r}")

    # metric

    def _gen(self, run: RunConfig) -> BaseModel:
        graph = self.graph(run.graph)
        if run.params.get("summary") == "true":
            return self.serializer.summary(graph)
        return self.serializer.graph(graph)

    def _dist(self, run: RunConfig) -> BaseModel:
        graph = self.graph(run.graph)
        u, v = self._int_param(run, "u"), self._int_param(run, "v")
        return self.serializer.distance(graph, u, v, distance_oracle(graph, u, v))

    def _diam(self, run: RunConfig) -> BaseModel:
        graph = self.graph(run.graph)
        return self.serializer.diameter(graph, diameter_hops(graph))

    def _ball(self, run: RunConfig) -> BaseModel:
        graph = self.graph(run.graph)
        center = self._int_param(run, "center")
        radius = _fraction(self._param(run, "radius"))
        return self.serializer.ball(graph, center, radius, ball(graph, center, radius))

    def _doubling(self, run: RunConfig) -> BaseModel:
        graph = self.graph(run.graph)
        strategy = self._param(run, "strategy")
        limit = self._int_param(run, "limit", self.config.analysis.scan_limit)
        workers = self._int_param(run, "workers", self.config.solver.workers)
        report = doubling_bounds(graph, strategy, limit, self.config.analysis, workers)
        return self.serializer.doubling(report, strategy)

    def _profile(self, run: RunConfig):
        graph = self.graph(run.graph)
        radii = [_fraction(r) for r in self._param(run, "radii").split(",") if r.strip()]
        profile = geometry_profile(graph, radii, self._int_param(run, "workers", self.config.solver.workers))
        if run.format == "csv":
            return self.serializer.profile_csv(profile)
        return self.serializer.profile(profile)

    # cycles

    def _cycles_enumerate(self, run: RunConfig) -> BaseModel:
        graph = self.graph(run.graph)
        cap = self._int_param(run, "cap", self.config.analysis.cycle_cap)
        return self.serializer.cycle_list(graph, enumerate_simple_cycles(graph, cap))

    def _cycles_classify(self, run: RunConfig) -> BaseModel:
        graph = self.graph(run.graph)
        cap = self._int_param(run, "cap", self.config.analysis.cycle_cap)
        cycles = enumerate_simple_cycles(graph, cap)
        classified = [(cycle, classify_cycle(graph, cycle)) for cycle in cycles]
        return self.serializer.classification(graph, classified)

    def _cycles_isometric(self, run: RunConfig) -> BaseModel:
        graph = self.graph(run.graph)
        h = self._int_param(run, "h")
        copy = _int_list(run.params["copy"]) if "copy" in run.params else None
        cycle = isometric_cycle(graph, h, copy)
        used = tuple(copy) if copy is not None else (0,) * (graph.level - h)
        return self.serializer.isometric(graph, h, used, cycle, check_isometric(graph, cycle))

    def _cycles_family(self, run: RunConfig) -> BaseModel:
        n = self._int_param(run, "n")
        s, t = self._int_param(run, "s"), self._int_param(run, "t")
        graph = generate(GraphFamily.LAAKSO, n, max_edges=self.config.generation.max_edges)
        root = _int_list(run.params["root"]) if "root" in run.params else None
        return self.serializer.cycle_family(cycle_family(graph, s, t, root))

    def _cycles_collapse(self, run: RunConfig) -> BaseModel:
        graph = self.graph(run.graph)
        height = self._int_param(run, "height", 2)
        chosen = [sub for sub in enumerate_subdiamonds(graph, height) if sub.height == height]
        quotient = collapse_subdiamonds(graph, chosen)
        return self.serializer.quotient(quotient, seed=run.seed or 0)

    # embed

    def _pair(self, run: RunConfig) -> Tuple[MetricGraph, MetricGraph]:
        return self.graph(run.source), self.graph(run.target)

    def _embed_eval(self, run: RunConfig) -> BaseModel:
        source, target = self._pair(run)
        embedding = EmbeddingMap(source, target, tuple(_int_list(self._param(run, "assignment"))))
        return self.serializer.distortion(embedding, evaluate(embedding))

    def _embed_exact(self, run: RunConfig) -> BaseModel:
        source, target = self._pair(run)
        budget = run.budget if run.budget is not None else self.config.solver.node_budget
        result = min_distortion_exact(source, target, budget, run.params.get("symmetry", "true") == "true")
        document = self.serializer.solver_result(result)
        if run.params.get("verify") == "true":
            document.certificate = self.serializer.certificate(verify_certificate(result, budget))
        return document

    def _embed_heuristic(self, run: RunConfig) -> BaseModel:
        source, target = self._pair(run)
        solver = self.config.solver
        result = min_distortion_heuristic(
            source, target,
            seed=run.seed if run.seed is not None else solver.seed,
            iterations=run.iterations if run.iterations is not None else solver.iterations,
            restarts=self._int_param(run, "restarts", solver.restarts),
            workers=self._int_param(run, "workers", solver.workers),
        )
        return self.serializer.solver_result(result)

    def _embed_lower_bound(self, run: RunConfig) -> BaseModel:
        source, target = self._pair(run)
        solver = self.config.solver
        bound = distortion_lower_bound(
            source, target,
            subset_size=self._int_param(run, "subset_size", 3),
            samples=self._int_param(run, "samples", solver.subset_samples),
            budget=run.budget if run.budget is not None else solver.node_budget,
            seed=run.seed if run.seed is not None else solver.seed,
        )
        return self.serializer.subset_lower_bound(source, target, bound)

    def _normalization(self, run: RunConfig) -> Normalization:
        try:
            return Normalization(run.params.get("normalization", Normalization.UNWEIGHTED.value))
        except ValueError:
            raise UsageError(f"Unknown normalization: {run.params['normalization']}")

    def _embed_construct_m(self, run: RunConfig) -> BaseModel:
        embedding = construct_m_embedding(
            self._int_param(run, "n"), self._normalization(run), self.config.generation.max_edges
        )
        return self.serializer.distortion(embedding, evaluate(embedding))

    def _embed_construct_l1(self, run: RunConfig) -> BaseModel:
        embedding = construct_l1_to_d2(self._normalization(run))
        return self.serializer.distortion(embedding, evaluate(embedding))

    def _embed_growth(self, run: RunConfig):
        solver = self.config.solver
        overrides = {"seed": run.seed, "node_budget": run.budget, "iterations": run.iterations}
        solver = replace(solver, **{k: v for k, v in overrides.items() if v is not None})
        rows = growth_experiment(
            self._int_param(run, "n_max"),
            _int_list(self._param(run, "targets")),
            solver,
            self._int_param(run, "subset_size", 3),
        )
        if run.format == "csv":
            return self.serializer.growth_csv(rows)
        return self.serializer.growth(rows)


def report_error(error: LabException) -> None:
    """Print ``Error: <message>`` and the details to stderr."""
    print(f"Error: {error.message}", file=sys.stderr)
    for key in sorted(error.details):
        print(f"  {key}: {error.details[key]}", file=sys.stderr)


def _graph_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--graph", help="family:level[:weighted] or a graph document (.json)")
    parser.add_argument("--family", help="Graph family (alternative to --graph)")
    parser.add_argument("--level", type=int, help="Level, or depth for quaternary trees")
    parser.add_argument("--normalization", choices=[n.value for n in Normalization],
                        default=Normalization.UNWEIGHTED.value)


def _common_options(parser: argparse.ArgumentParser, tabular: bool = False) -> None:
    parser.add_argument("--output", help="Write the document to this path instead of stdout")
    parser.add_argument("--format", choices=["document", "csv"] if tabular else ["document"],
                        default="document")


def _solver_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--source", required=True, help="Source graph")
    parser.add_argument("--target", required=True, help="Target graph")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--budget", type=int)
    parser.add_argument("--iterations", type=int)


def build_parser() -> LabArgumentParser:
    """The full command tree."""
    parser = LabArgumentParser(
        prog="mfl",
        description="Recursive graph families, their metric structure and distortion bounds",
    )
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    commands = parser.add_subparsers(dest="command", help="Command to execute")

    gen = commands.add_parser("gen", help="Generate and export a graph")
    _graph_options(gen)
    gen.add_argument("--summary", action="store_true", help="Header only, without vertex and edge lists")
    _common_options(gen)

    dist = commands.add_parser("dist", help="Distance between two vertices")
    _graph_options(dist)
    dist.add_argument("--u", type=int, required=True)
    dist.add_argument("--v", type=int, required=True)
    _common_options(dist)

    diam = commands.add_parser("diam", help="Diameter")
    _graph_options(diam)
    _common_options(diam)

    ball_parser = commands.add_parser("ball", help="Closed ball")
    _graph_options(ball_parser)
    ball_parser.add_argument("--center", type=int, required=True)
    ball_parser.add_argument("--radius", required=True, help="Exact radius, e.g. 1/4")
    _common_options(ball_parser)

    doubling = commands.add_parser("doubling", help="Ball-form doubling bounds")
    _graph_options(doubling)
    doubling.add_argument("--strategy", choices=STRATEGIES, default=STRATEGIES[0])
    doubling.add_argument("--limit", type=int, help="Maximum (center, radius) pairs to scan")
    doubling.add_argument("--workers", type=int)
    _common_options(doubling)

    profile = commands.add_parser("profile", help="Largest ball cardinality per radius")
    _graph_options(profile)
    profile.add_argument("--radii", required=True, help="Comma separated exact radii")
    profile.add_argument("--workers", type=int)
    _common_options(profile, tabular=True)

    cycles = commands.add_parser("cycles", help="Cycle structure")
    cycle_commands = cycles.add_subparsers(dest="subcommand", help="Cycle operation")
    enumerate_parser = cycle_commands.add_parser("enumerate", help="All simple cycles")
    classify = cycle_commands.add_parser("classify-all", help="Classify every simple cycle of a diamond graph")
    for sub in (enumerate_parser, classify):
        _graph_options(sub)
        sub.add_argument("--cap", type=int, help="Maximum number of cycles")
        _common_options(sub)
    isometric = cycle_commands.add_parser("isometric", help="Isometric 4^h cycle of a Laakso graph")
    _graph_options(isometric)
    isometric.add_argument("--h", type=int, required=True)
    isometric.add_argument("--copy", help="Comma separated edge path of the gadget copy")
    _common_options(isometric)
    family = cycle_commands.add_parser("family", help="Tree-indexed cycle family in L_n")
    family.add_argument("--n", type=int, required=True)
    family.add_argument("--s", type=int, required=True)
    family.add_argument("--t", type=int, required=True)
    family.add_argument("--root", help="Comma separated edge path of the root copy")
    _common_options(family)
    collapse = cycle_commands.add_parser("collapse", help="Collapse all subdiamonds of one height")
    _graph_options(collapse)
    collapse.add_argument("--height", type=int, default=2)
    collapse.add_argument("--seed", type=int, help="Seed for the sampled distance checks")
    _common_options(collapse)

    embed = commands.add_parser("embed", help="Distortion of maps between graphs")
    embed_commands = embed.add_subparsers(dest="subcommand", help="Embedding operation")
    evaluate_parser = embed_commands.add_parser("eval", help="Distortion of an explicit map")
    evaluate_parser.add_argument("--source", required=True)
    evaluate_parser.add_argument("--target", required=True)
    evaluate_parser.add_argument("--assignment", required=True, help="Comma separated target ids")
    _common_options(evaluate_parser)
    exact = embed_commands.add_parser("exact", help="Exact minimum distortion (branch and bound)")
    _solver_options(exact)
    exact.add_argument("--no-symmetry", action="store_true", help="Try every root image")
    exact.add_argument("--verify", action="store_true", help="Re-run with the value preloaded")
    _common_options(exact)
    heuristic = embed_commands.add_parser("heuristic", help="Local search upper bound")
    _solver_options(heuristic)
    heuristic.add_argument("--restarts", type=int)
    heuristic.add_argument("--workers", type=int)
    _common_options(heuristic)
    lower = embed_commands.add_parser("lower-bound", help="Subset lower bound")
    _solver_options(lower)
    lower.add_argument("--subset-size", type=int, default=3)
    lower.add_argument("--samples", type=int)
    _common_options(lower)
    construct_m = embed_commands.add_parser("construct-m", help="Isometric map M_n -> D_3n")
    construct_m.add_argument("--n", type=int, required=True)
    construct_m.add_argument("--normalization", choices=[n.value for n in Normalization],
                             default=Normalization.UNWEIGHTED.value)
    _common_options(construct_m)
    construct_l1 = embed_commands.add_parser("construct-l1", help="Distortion 1 map L_1 -> D_2")
    construct_l1.add_argument("--normalization", choices=[n.value for n in Normalization],
                              default=Normalization.UNWEIGHTED.value)
    _common_options(construct_l1)
    growth = embed_commands.add_parser("growth", help="L_n -> D_m distortion table")
    growth.add_argument("--n-max", type=int, required=True)
    growth.add_argument("--targets", required=True, help="Comma separated diamond levels")
    growth.add_argument("--subset-size", type=int, default=3)
    growth.add_argument("--seed", type=int)
    growth.add_argument("--budget", type=int)
    growth.add_argument("--iterations", type=int)
    _common_options(growth, tabular=True)

    return parser


RUN_FIELDS = ("command", "subcommand", "graph", "source", "target", "seed",
              "budget", "iterations", "output", "format")
SKIPPED = ("log_level", "family", "level", "normalization")


def config_from_args(argv: Sequence[str]) -> RunConfig:
    """
    Parse command-line arguments into a RunConfig.

    Raises:
        UsageError: Unknown command or malformed arguments
    """
    parser = build_parser()
    args = parser.parse_args(list(argv))
    if args.command is None:
        raise UsageError("No command given", details={"usage": parser.format_usage().strip()})
    if args.command in ("cycles", "embed") and args.subcommand is None:
        raise UsageError(f"{args.command} needs a subcommand")
    if args.log_level:
        set_level(args.log_level)

    values = vars(args)
    graph = values.get("graph")
    if graph is None and values.get("family") is not None:
        if values.get("level") is None:
            raise UsageError("--family needs --level")
        graph = f"{GraphFamily.parse(values['family']).value}:{values['level']}"
        if values.get("normalization") == Normalization.WEIGHTED.value:
            graph += f":{Normalization.WEIGHTED.value}"
    elif graph is not None and values.get("family") is not None:
        raise UsageError("Use either --graph or --family/--level, not both")

    fields = {name: values.get(name) for name in RUN_FIELDS}
    fields["graph"] = graph
    params = {}
    for name, value in sorted(values.items()):
        if name in RUN_FIELDS or name in SKIPPED or value is None or value is False:
            continue
        if name == "no_symmetry":
            params["symmetry"] = "false"
        elif value is True:
            params[name] = "true"
        else:
            params[name] = str(value)
    # construct-m / construct-l1 have no graph argument; keep their normalization
    if "graph" not in values and values.get("normalization") is not None:
        params["normalization"] = values["normalization"]
    fields["params"] = params
    return RunConfig(**fields)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Main CLI entry point.

    Returns:
        Process exit status: 0 on success, the exception's exit code otherwise
    """
    argv = sys.argv[1:] if argv is None else argv
    try:
        run = config_from_args(argv)
        runner = LabRunner(LabConfig.from_env())
    except LabException as e:
        report_error(e)
        return e.exit_code
    except ValueError as e:
        report_error(UsageError(str(e)))
        return UsageError.exit_code

    status, text = runner.run(run)
    if status != 0:
        return status
    if run.output:
        Path(run.output).write_text(text)
        logger.info(f"Wrote {run.output}")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
