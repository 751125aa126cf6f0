"""CLI application for checking and exploring cocircuit systems."""

import sys
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.table import Table

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.config import settings
from core.exceptions import (
    EXIT_INPUT_ERROR,
    EXIT_VIOLATION,
    HypothesisNotMet,
    InvalidInput,
    OMException,
)
from core.logger import STDERR_CONSOLE
from models.graph import HullSignature, SignedGraph
from models.sign_system import SignSystem
from models.sign_vector import SignVector
from models.types import GraphFormat, MutationKind
from repositories.matrix_repository import MatrixRepository
from repositories.sign_system_repository import SignSystemRepository
from schemas.report import BenchRow
from schemas.run_config import RunConfig
from schemas.verdict import Verdict
from services.axiom_service import AxiomService
from services.corpus_service import CorpusService
from services.export_service import ExportService, dumps
from services.generator_service import GeneratorService
from services.graph_service import GraphService
from services.lattice_service import LatticeService
from services.verify_service import VerifyService

app = typer.Typer(
    name="omgraph",
    help="Cocircuit graphs, crabbed hulls and face lattices of sign systems",
    add_completion=False,
)
gen_app = typer.Typer(help="Generate sign systems", add_completion=False)
app.add_typer(gen_app, name="gen")

console = Console(width=settings.console_width)
systems = SignSystemRepository()

INPUT_ARGUMENT = typer.Argument(None, help="Sign-system file")
GEN_OPTION = typer.Option(None, "--gen", "-g", help="Inline generator, e.g. u2n:3 or cyclic:3:6")
SEED_OPTION = typer.Option(settings.seed, "--seed", "-s", help="Seed for every random choice")
JOBS_OPTION = typer.Option(settings.jobs, "--jobs", "-j", help="Worker processes")
CAP_OPTION = typer.Option(settings.covector_cap, "--covector-cap", help="Maximum covectors")
TIME_OPTION = typer.Option(
    settings.closure_time_limit_seconds, "--time-limit", help="Closure time limit in seconds"
)


@contextmanager
def reporting_errors() -> Iterator[None]:
    """Map toolkit exceptions to the exit-code contract."""
    try:
        yield
    except ValidationError as e:
        message = "; ".join(error["msg"] for error in e.errors())
        STDERR_CONSOLE.print(f"[red]❌ Error: {escape(message)}[/red]")
        raise typer.Exit(EXIT_INPUT_ERROR) from e
    except OMException as e:
        STDERR_CONSOLE.print(f"[red]❌ Error: {escape(e.message)}[/red]")
        raise typer.Exit(e.exit_code) from e


def build_config(
    command: str, path: Path | None, gen: str | None, **options: object
) -> RunConfig:
    return RunConfig(
        command=command, input_path=path, gen_spec=gen, **options  # type: ignore[arg-type]
    )


def load_system(config: RunConfig) -> SignSystem:
    if config.input_path is not None:
        return systems.read(config.input_path)
    assert config.gen_spec is not None
    return GeneratorService().from_spec(config.gen_spec, config.seed)


def lattice_service(config: RunConfig) -> LatticeService:
    return LatticeService(config.covector_cap, config.time_limit_seconds)


def verify_service(config: RunConfig) -> VerifyService:
    return VerifyService(lattices=lattice_service(config), policy=config.policy, jobs=config.jobs)


def print_verdict(verdict: Verdict) -> None:
    if verdict.skipped:
        console.print(f"[yellow]⏭ {verdict.check}: skipped[/yellow]")
    elif verdict.passed:
        console.print(f"[green]✅ {verdict.check}: pass[/green]")
    else:
        assert verdict.violation is not None
        violation = verdict.violation
        detail = ", ".join(violation.vectors)
        if violation.element_label is not None:
            detail += f"; element {violation.element_label}"
        console.print(f"[red]❌ {verdict.check}: {violation.rule} violated ({detail})[/red]")
        if violation.message:
            console.print(f"   {escape(violation.message)}")
    for warning in verdict.warnings:
        console.print(f"[yellow]⚠ {escape(warning)}[/yellow]")


def emit_graph(graph: SignedGraph, output_format: GraphFormat) -> None:
    exporter = ExportService()
    if output_format == GraphFormat.DOT:
        typer.echo(exporter.graph_to_dot(graph), nl=False)
    elif output_format == GraphFormat.JSON:
        typer.echo(exporter.graph_to_json(graph), nl=False)
    else:
        table = Table(title=f"{graph.kind.value} graph", show_header=True)
        table.add_column("#", style="cyan")
        table.add_column("Vertex", style="green")
        table.add_column("Neighbors", style="white")
        members = graph.vertices.members
        for i, vertex in enumerate(members):
            table.add_row(
                str(i), str(vertex), " ".join(str(members[j]) for j in graph.adjacency[i])
            )
        console.print(table)
        console.print(f"{graph.order} vertices, {len(graph.edges)} edges")


def emit_system(system: SignSystem, output: Path | None) -> None:
    if output is not None:
        systems.write(system, output)
    else:
        typer.echo(systems.format(system), nl=False)


@app.command("check")
def check(
    path: Path | None = INPUT_ARGUMENT,
    gen: str | None = GEN_OPTION,
    output_format: GraphFormat = typer.Option(GraphFormat.TEXT, "--format", "-f"),
    seed: int = SEED_OPTION,
) -> None:
    """Check the cocircuit axioms (C0)-(C3)."""
    with reporting_errors():
        config = build_config("check", path, gen, output_format=output_format, seed=seed)
        verdict = AxiomService().check_all(load_system(config))

    if config.output_format == GraphFormat.JSON:
        typer.echo(dumps(verdict), nl=False)
    else:
        print_verdict(verdict)
    if not verdict.passed:
        raise typer.Exit(EXIT_VIOLATION)


@app.command("graph")
def graph(
    path: Path | None = INPUT_ARGUMENT,
    gen: str | None = GEN_OPTION,
    kind: str = typer.Option("cocircuit", "--kind", "-k", help="cocircuit or tope"),
    output_format: GraphFormat = typer.Option(GraphFormat.DOT, "--format", "-f"),
    seed: int = SEED_OPTION,
    covector_cap: int = CAP_OPTION,
    time_limit: float = TIME_OPTION,
) -> None:
    """Export the cocircuit graph or the tope graph."""
    with reporting_errors():
        if kind not in ("cocircuit", "tope"):
            raise InvalidInput(f"Unknown graph kind '{kind}'; use cocircuit or tope")
        config = build_config(
            "graph",
            path,
            gen,
            output_format=output_format,
            seed=seed,
            covector_cap=covector_cap,
            time_limit_seconds=time_limit,
        )
        lattice = lattice_service(config).build_lattice(load_system(config))
        graphs = GraphService()
        if kind == "cocircuit":
            result = graphs.cocircuit_graph(lattice)
        else:
            result = graphs.tope_graph(lattice)
    emit_graph(result, config.output_format)


@app.command("verify-theorem")
def verify_theorem(
    path: Path | None = INPUT_ARGUMENT,
    gen: str | None = GEN_OPTION,
    output_format: GraphFormat = typer.Option(GraphFormat.TEXT, "--format", "-f"),
    exhaustive_cap: int = typer.Option(settings.exhaustive_cap, "--exhaustive-cap"),
    samples: int = typer.Option(settings.sample_count, "--samples"),
    seed: int = SEED_OPTION,
    jobs: int = JOBS_OPTION,
    covector_cap: int = CAP_OPTION,
    time_limit: float = TIME_OPTION,
) -> None:
    """Evaluate the axioms, crabbed paths and hull connectivity side by side."""
    with reporting_errors():
        config = build_config(
            "verify-theorem",
            path,
            gen,
            output_format=output_format,
            exhaustive_cap=exhaustive_cap,
            sample_count=samples,
            seed=seed,
            jobs=jobs,
            covector_cap=covector_cap,
            time_limit_seconds=time_limit,
        )
        report = verify_service(config).equivalence_harness(load_system(config))

    if config.output_format == GraphFormat.JSON:
        typer.echo(dumps(report), nl=False)
    else:
        table = Table(title="Equivalent conditions", show_header=True)
        table.add_column("Condition", style="cyan")
        table.add_column("Result", style="white")
        table.add_column("Witness", style="white")
        for name, verdict in (
            ("axioms (C0)-(C3)", report.axioms),
            ("hull connectivity", report.hull_connectivity),
            ("crabbed paths", report.crabbed_paths),
        ):
            witness = ", ".join(verdict.violation.vectors) if verdict.violation else ""
            table.add_row(name, "pass" if verdict.passed else "fail", witness)
        console.print(table)
        hulls = report.hull_connectivity
        coverage = "exhaustive" if hulls.exhaustive else "sampled"
        console.print(f"{len(hulls.hulls)} hulls checked ({coverage})")
        console.print(
            f"|C*| = {report.cocircuits}, |E| = {report.edges}, "
            f"cost naive = {report.cost_naive}, cost graph = {report.cost_graph}"
        )
        status = "[green]✅ conditions agree[/green]" if report.consistent else (
            "[red]❌ conditions disagree[/red]"
        )
        console.print(status)
    if not report.consistent:
        raise typer.Exit(EXIT_VIOLATION)


def parse_range(text: str) -> range:
    """``a..b`` inclusive, or a single integer."""
    try:
        if ".." in text:
            start, stop = text.split("..", 1)
            return range(int(start), int(stop) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise InvalidInput(f"Size range must look like 4..12, got '{text}'") from None


@app.command("bench")
def bench(
    family: str = typer.Argument(..., help="u2n or cyclic"),
    sizes: str = typer.Option("4..12", "--sizes", help="Inclusive range of n, e.g. 4..12"),
    rank: int = typer.Option(3, "--rank", "-r", help="Rank of the cyclic family"),
    timings: bool = typer.Option(False, "--timings", help="Include wall-clock seconds"),
    output_format: GraphFormat = typer.Option(GraphFormat.TEXT, "--format", "-f"),
    covector_cap: int = CAP_OPTION,
    time_limit: float = TIME_OPTION,
) -> None:
    """Compare the work of the elimination axiom and the crabbed-path check."""
    with reporting_errors():
        config = build_config(
            "bench",
            None,
            None,
            output_format=output_format,
            covector_cap=covector_cap,
            time_limit_seconds=time_limit,
        )
        if family not in ("u2n", "cyclic"):
            raise InvalidInput(f"Unknown family '{family}'; use u2n or cyclic")
        verifier = verify_service(config)
        generators = verifier.generators
        rows = []
        for n in parse_range(sizes):
            system = generators.u2n(n) if family == "u2n" else generators.cyclic(rank, n)
            report = verifier.cost_comparison(system, timings=timings)
            rows.append(BenchRow(family=family, size=n, **report.model_dump()))

    if config.output_format == GraphFormat.JSON:
        typer.echo(dumps([row.model_dump(exclude_none=True) for row in rows]), nl=False)
        return

    table = Table(title=f"Recognition cost: {family}", show_header=True)
    for column in ("n", "|C*|", "|E|", "cost naive", "cost graph", "ratio"):
        table.add_column(column, justify="right")
    if timings:
        table.add_column("naive s", justify="right")
        table.add_column("graph s", justify="right")
    for row in rows:
        cells = [
            str(row.size),
            str(row.cocircuits),
            str(row.edges),
            str(row.cost_naive),
            str(row.cost_graph),
            f"{row.ratio:.2f}",
        ]
        if timings:
            cells += [f"{row.seconds_naive:.4f}", f"{row.seconds_graph:.4f}"]
        table.add_row(*cells)
    console.print(table)


@gen_app.command("matrix")
def gen_matrix(
    path: Path = typer.Argument(..., help="Integer matrix file"),
    output: Path | None = typer.Option(None, "--output", "-o"),
) -> None:
    """Cocircuits of the columns of an integer matrix."""
    with reporting_errors():
        system = GeneratorService().from_matrix(MatrixRepository().read(path))
        emit_system(system, output)


@gen_app.command("u2n")
def gen_u2n(
    n: int = typer.Argument(..., help="Number of elements"),
    output: Path | None = typer.Option(None, "--output", "-o"),
) -> None:
    """Rank-2 uniform system on n elements."""
    with reporting_errors():
        emit_system(GeneratorService().u2n(n), output)


@gen_app.command("cyclic")
def gen_cyclic(
    r: int = typer.Argument(..., help="Rank"),
    n: int = typer.Argument(..., help="Number of elements"),
    output: Path | None = typer.Option(None, "--output", "-o"),
) -> None:
    """Uniform system of n points on the moment curve in dimension r."""
    with reporting_errors():
        emit_system(GeneratorService().cyclic(r, n), output)


@gen_app.command("mutate")
def gen_mutate(
    path: Path = typer.Argument(..., help="Sign-system file"),
    kind: MutationKind = typer.Option(MutationKind.DROP_PAIR, "--kind", "-k"),
    seed: int = SEED_OPTION,
    output: Path | None = typer.Option(None, "--output", "-o"),
) -> None:
    """Perturb a system by one antipodal pair."""
    with reporting_errors():
        emit_system(GeneratorService().mutate(systems.read(path), kind, seed), output)


@gen_app.command("random")
def gen_random(
    n: int = typer.Argument(..., help="Number of elements"),
    pairs: int = typer.Argument(..., help="Number of antipodal pairs"),
    seed: int = SEED_OPTION,
    output: Path | None = typer.Option(None, "--output", "-o"),
) -> None:
    """Random system satisfying (C0)-(C2)."""
    with reporting_errors():
        emit_system(GeneratorService().random_c0c2(n, pairs, seed), output)


@app.command("contract")
def contract(
    path: Path | None = INPUT_ARGUMENT,
    gen: str | None = GEN_OPTION,
    elements: str = typer.Option(..., "--elements", "-e", help="Labels to contract, e.g. e0,e2"),
    seed: int = SEED_OPTION,
    output: Path | None = typer.Option(None, "--output", "-o"),
    output_format: GraphFormat = typer.Option(GraphFormat.TEXT, "--format", "-f"),
) -> None:
    """Contraction minor C*/A; JSON output keeps the origin of every minor cocircuit."""
    with reporting_errors():
        config = build_config("contract", path, gen, seed=seed, output_format=output_format)
        system = load_system(config)
        labels = [label.strip() for label in elements.split(",") if label.strip()]
        indices = [system.ground.index(label) for label in labels]
        minor = lattice_service(config).contract(system, indices)

    if config.output_format == GraphFormat.JSON and output is None:
        typer.echo(dumps(ExportService().system_to_document(minor)), nl=False)
    else:
        emit_system(minor, output)


@app.command("closure")
def closure(
    path: Path | None = INPUT_ARGUMENT,
    gen: str | None = GEN_OPTION,
    output_format: GraphFormat = typer.Option(GraphFormat.TEXT, "--format", "-f"),
    check_lattice: bool = typer.Option(False, "--check-lattice", help="Verify joins and meets"),
    seed: int = SEED_OPTION,
    covector_cap: int = CAP_OPTION,
    time_limit: float = TIME_OPTION,
) -> None:
    """Covectors, heights and cover relations of the big face lattice."""
    with reporting_errors():
        config = build_config(
            "closure",
            path,
            gen,
            output_format=output_format,
            seed=seed,
            covector_cap=covector_cap,
            time_limit_seconds=time_limit,
        )
        lattices = lattice_service(config)
        lattice = lattices.build_lattice(load_system(config))
        verdict = lattices.check_lattice_property(lattice) if check_lattice else None

    exporter = ExportService(lattices)
    if config.output_format == GraphFormat.JSON:
        typer.echo(exporter.lattice_to_json(lattice), nl=False)
    else:
        document = exporter.lattice_to_document(lattice)
        table = Table(title="Covectors", show_header=True)
        table.add_column("Covector", style="green")
        table.add_column("Height", justify="right")
        table.add_column("Role", style="cyan")
        atoms, topes = set(document.atoms), set(document.topes)
        for name in document.covectors:
            role = "tope" if name in topes else "cocircuit" if name in atoms else ""
            table.add_row(name, str(document.heights[name]), role)
        console.print(table)
        rank = document.rank if document.rank is not None else "undefined"
        console.print(
            f"{len(document.covectors)} covectors, graded: {document.graded}, "
            f"top rank: {document.top_rank}, rank: {rank}"
        )
    if verdict is not None:
        if config.output_format != GraphFormat.JSON:
            print_verdict(verdict)
        if not verdict.passed:
            raise typer.Exit(EXIT_VIOLATION)


@app.command("hull")
def hull(
    path: Path | None = INPUT_ARGUMENT,
    gen: str | None = GEN_OPTION,
    vertices: str = typer.Option(..., "--vertices", "-v", help="Sign strings, e.g. 0++,+-0"),
    output_format: GraphFormat = typer.Option(GraphFormat.TEXT, "--format", "-f"),
    seed: int = SEED_OPTION,
    covector_cap: int = CAP_OPTION,
    time_limit: float = TIME_OPTION,
) -> None:
    """Crabbed hull of cocircuits inside the cocircuit graph."""
    with reporting_errors():
        config = build_config(
            "hull",
            path,
            gen,
            output_format=output_format,
            seed=seed,
            covector_cap=covector_cap,
            time_limit_seconds=time_limit,
        )
        system = load_system(config)
        generators = [
            SignVector.from_string(text.strip(), system.ground)
            for text in vertices.split(",")
            if text.strip()
        ]
        graphs = GraphService()
        cocircuits = graphs.cocircuit_graph(lattice_service(config).build_lattice(system))
        for vector in generators:
            cocircuits.index_of(vector)
        result = graphs.crabbed_hull(cocircuits, HullSignature.of(generators))
    emit_graph(result, config.output_format)


@app.command("lemmas")
def lemmas(
    path: Path | None = INPUT_ARGUMENT,
    gen: str | None = GEN_OPTION,
    output_format: GraphFormat = typer.Option(GraphFormat.TEXT, "--format", "-f"),
    exhaustive_cap: int = typer.Option(settings.exhaustive_cap, "--exhaustive-cap"),
    samples: int = typer.Option(settings.sample_count, "--samples"),
    seed: int = SEED_OPTION,
    covector_cap: int = CAP_OPTION,
    time_limit: float = TIME_OPTION,
) -> None:
    """Structural properties every oriented matroid has."""
    with reporting_errors():
        config = build_config(
            "lemmas",
            path,
            gen,
            output_format=output_format,
            exhaustive_cap=exhaustive_cap,
            sample_count=samples,
            seed=seed,
            covector_cap=covector_cap,
            time_limit_seconds=time_limit,
        )
        system = load_system(config)
        verifier = verify_service(config)
        lattice = verifier.lattices.build_lattice(system)
        verdicts = [
            verifier.crabbed_tope_paths_check(system, lattice),
            verifier.tope_subgraph_connectivity_check(system, lattice),
            verifier.graphs.tope_distance_check(lattice),
            verifier.lattices.check_contraction_ranks(system, lattice),
            verifier.check_hull_contractions(system),
        ]
        try:
            verdicts.append(verifier.uniform_neighbor_check(system))
        except HypothesisNotMet as e:
            verdicts.append(Verdict.skip("uniform-neighbors", e.message))

    if config.output_format == GraphFormat.JSON:
        typer.echo(dumps([verdict.model_dump(mode="json") for verdict in verdicts]), nl=False)
    else:
        for verdict in verdicts:
            print_verdict(verdict)
    if any(verdict.failed for verdict in verdicts):
        raise typer.Exit(EXIT_VIOLATION)


@app.command("corpus")
def corpus(
    seed: int = SEED_OPTION,
    size: int = typer.Option(200, "--size", help="Number of near-miss instances"),
    hulls: bool = typer.Option(True, "--hulls/--no-hulls", help="Also check hull connectivity"),
    output_format: GraphFormat = typer.Option(GraphFormat.TEXT, "--format", "-f"),
    jobs: int = JOBS_OPTION,
    covector_cap: int = CAP_OPTION,
    time_limit: float = TIME_OPTION,
) -> None:
    """Run the equivalence harness over the realizable and near-miss corpora."""
    with reporting_errors():
        config = build_config(
            "corpus",
            None,
            None,
            output_format=output_format,
            seed=seed,
            jobs=jobs,
            covector_cap=covector_cap,
            time_limit_seconds=time_limit,
        )
        verifier = verify_service(config)
        corpora = CorpusService(generators=verifier.generators, axioms=verifier.axioms)
        positives = corpora.positive_corpus()
        instances = positives + corpora.negative_corpus(config.seed, size, positives)
        summary = verifier.run_corpus(instances, with_hulls=hulls)

    if config.output_format == GraphFormat.JSON:
        typer.echo(dumps(summary), nl=False)
    else:
        table = Table(title="Corpus", show_header=True)
        table.add_column("Field", style="cyan")
        table.add_column("Value", style="green")
        table.add_row("Instances", str(summary.instances))
        table.add_row("Oriented matroids", str(summary.positives))
        table.add_row("Not oriented matroids", str(summary.negatives))
        table.add_row("Disagreements", str(len(summary.disagreements)))
        table.add_row("Implication failures", str(len(summary.implication_failures)))
        console.print(table)
        for name in summary.disagreements + summary.implication_failures:
            console.print(f"[red]❌ {escape(name)}[/red]")
    if not summary.consistent:
        raise typer.Exit(EXIT_VIOLATION)


if __name__ == "__main__":
    app()
