"""
Document Serializer.

Converts domain objects (graphs, reports, cycles, solver results) into the
pydantic document models, and graph documents back into MetricGraphs.
"""

import csv
import io
import json
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence, Tuple, Union

from pydantic import ValidationError

from .documents import (
    BallDocument,
    CertificateDocument,
    ClassificationDocument,
    ClassifiedCycle,
    CycleDocument,
    CycleFamilyDocument,
    CycleListDocument,
    DiameterDocument,
    DistanceDocument,
    DistortionDocument,
    DoublingDocument,
    EmbeddingDocument,
    ExactField,
    ExactNumber,
    FamilyCycle,
    GraphDocument,
    GraphSummary,
    GrowthDocument,
    GrowthRowDocument,
    IsometricCycleDocument,
    ProfileDocument,
    ProfileEntry,
    QuotientDocument,
    SolverResultDocument,
    SubdiamondDocument,
    SubsetLowerBoundDocument,
    VertexDocument,
)
from ..models.cycles import Cycle, CycleFamily, QuotientGraph
from ..models.embedding import DistortionReport, EmbeddingMap, SearchCertificate, SolverResult
from ..models.graph import GraphFamily, MetricGraph, Normalization, Subdiamond, new_graph, parse_address
from ..models.reports import DoublingReport, GeometryProfile, GrowthRow, OracleDistance, SubsetLowerBound
from ..utils.exact import ExactValue, INFINITE, Infinite
from ..utils.logger import setup_logger
from ..utils.exceptions import ContractError, UsageError

logger = setup_logger(__name__)


class DocumentSerializer:
    """
    Builds structured documents from domain objects.

    Every method is pure; list orders follow the domain objects so that
    the same inputs always give byte-identical JSON.
    """

    GROWTH_COLUMNS = ("n", "target_level", "lower_bound", "upper_bound", "upper_method")
    PROFILE_COLUMNS = ("radius", "max_cardinality")

    @staticmethod
    def exact(value: ExactValue) -> ExactField:
        if isinstance(value, Infinite):
            return "INFINITE"
        value = Fraction(value)
        return ExactNumber(num=value.numerator, den=value.denominator)

    @staticmethod
    def from_exact(value: ExactField) -> ExactValue:
        if value == "INFINITE":
            return INFINITE
        return Fraction(value.num, value.den)

    def graph(self, graph: MetricGraph) -> GraphDocument:
        """Full export: header, addressed vertices and id-pair edges."""
        return GraphDocument(
            name=graph.name,
            family=graph.family.value,
            level=graph.level,
            normalization=graph.normalization.value,
            edge_length=self.exact(graph.edge_length),
            scale_base=graph.scale_base,
            vertex_count=graph.vertex_count,
            edge_count=graph.edge_count,
            vertices=[
                VertexDocument(id=vid, address=address.label())
                for vid, address in enumerate(graph.addresses)
            ],
            edges=[tuple(edge) for edge in graph.edges],
        )

    def summary(self, graph: MetricGraph) -> GraphSummary:
        return GraphSummary(
            name=graph.name,
            family=graph.family.value,
            level=graph.level,
            normalization=graph.normalization.value,
            edge_length=self.exact(graph.edge_length),
            vertex_count=graph.vertex_count,
            edge_count=graph.edge_count,
            max_degree=graph.max_degree(),
        )

    def distance(self, graph: MetricGraph, u: int, v: int, answer: OracleDistance) -> DistanceDocument:
        return DistanceDocument(
            graph=graph.name, u=u, v=v, hops=answer.hops,
            length=self.exact(answer.length), method=answer.method, note=answer.note,
        )

    def diameter(self, graph: MetricGraph, hops: int) -> DiameterDocument:
        return DiameterDocument(graph=graph.name, hops=hops, length=self.exact(graph.length(hops)))

    def ball(self, graph: MetricGraph, center: int, radius: Fraction,
             members: Sequence[int]) -> BallDocument:
        return BallDocument(
            graph=graph.name, center=center, radius=self.exact(radius),
            size=len(members), members=list(members),
        )

    def doubling(self, report: DoublingReport, strategy: str) -> DoublingDocument:
        return DoublingDocument(
            graph=report.graph,
            strategy=strategy,
            ball_center=report.ball_center,
            ball_radius=self.exact(report.ball_radius),
            witness_lower_bound=report.witness_lower_bound,
            greedy_upper_bound=report.greedy_upper_bound,
            scanned_balls=report.scanned_balls,
            complete=report.complete,
            certificate=report.certificate,
            witness_points=list(report.witness_points),
            upper_center=report.upper_center,
            upper_radius=None if report.upper_radius is None else self.exact(report.upper_radius),
        )

    def profile(self, profile: GeometryProfile) -> ProfileDocument:
        return ProfileDocument(
            graph=profile.graph,
            entries=[
                ProfileEntry(radius=self.exact(radius), max_cardinality=count)
                for radius, count in profile.entries
            ],
            max_degree=profile.max_degree,
        )

    def subdiamond(self, sub: Subdiamond) -> SubdiamondDocument:
        return SubdiamondDocument(**sub.to_dict())

    def cycle(self, cycle: Cycle) -> CycleDocument:
        return CycleDocument(vertices=list(cycle.vertices), hops=cycle.hops,
                             length=self.exact(cycle.length))

    def cycle_list(self, graph: MetricGraph, cycles: Sequence[Cycle]) -> CycleListDocument:
        return CycleListDocument(graph=graph.name, count=len(cycles),
                                 cycles=[self.cycle(c) for c in cycles])

    def classification(self, graph: MetricGraph,
                       classified: Sequence[Tuple[Cycle, Subdiamond]]) -> ClassificationDocument:
        by_height = {}
        for _, sub in classified:
            key = str(sub.height)
            by_height[key] = by_height.get(key, 0) + 1
        return ClassificationDocument(
            graph=graph.name,
            count=len(classified),
            classified=len(classified),
            by_height=dict(sorted(by_height.items(), key=lambda item: int(item[0]))),
            cycles=[
                ClassifiedCycle(vertices=list(cycle.vertices), hops=cycle.hops,
                                subdiamond=list(sub.root_edge_path), height=sub.height)
                for cycle, sub in classified
            ],
        )

    def isometric(self, graph: MetricGraph, h: int, copy: Sequence[int], cycle: Cycle,
                  mismatches: Sequence[Tuple[int, int]]) -> IsometricCycleDocument:
        return IsometricCycleDocument(
            graph=graph.name, h=h, copy_path=list(copy),
            cycle=self.cycle(cycle), mismatched_pairs=list(mismatches),
        )

    def cycle_family(self, family: CycleFamily) -> CycleFamilyDocument:
        return CycleFamilyDocument(
            n=family.n,
            s=family.s,
            t=family.t,
            cycle_count=len(family.tree),
            violations=family.violations(),
            canonical_cycle=list(family.canonical_cycle.vertices) if family.canonical_cycle else [],
            cycles=[
                FamilyCycle(
                    label="".join(map(str, label)),
                    copy_path=list(family.copies.get(label, ())),
                    vertices=list(family.tree[label].vertices),
                    hops=family.tree[label].hops,
                )
                for label in family.labels()
            ],
        )

    def quotient(self, quotient: QuotientGraph, samples: int = 100, seed: int = 0) -> QuotientDocument:
        return QuotientDocument(
            original=quotient.original.name,
            graph=self.graph(quotient.graph),
            projection=list(quotient.projection),
            collapsed=[self.subdiamond(sub) for sub in quotient.collapsed],
            violations=quotient.violations(samples=samples, seed=seed),
        )

    def embedding(self, embedding: EmbeddingMap) -> EmbeddingDocument:
        return EmbeddingDocument(
            source=embedding.source.name,
            target=embedding.target.name,
            assignment=list(embedding.assignment),
            scale_hint=None if embedding.scale_hint is None else self.exact(embedding.scale_hint),
        )

    def distortion(self, embedding: EmbeddingMap, report: DistortionReport) -> DistortionDocument:
        return DistortionDocument(
            map=self.embedding(embedding),
            expansion=self.exact(report.expansion),
            contraction=self.exact(report.contraction),
            distortion=self.exact(report.distortion),
            witness_expansion_pair=report.witness_expansion_pair,
            witness_contraction_pair=report.witness_contraction_pair,
        )

    def certificate(self, certificate: SearchCertificate) -> CertificateDocument:
        return CertificateDocument(
            exhausted=certificate.exhausted,
            bound=self.exact(certificate.bound),
            reason=certificate.reason,
            improving_leaves=certificate.improving_leaves,
        )

    def solver_result(self, result: SolverResult) -> SolverResultDocument:
        return SolverResultDocument(
            status=result.status.value,
            value=self.exact(result.value),
            witness=None if result.witness is None else self.embedding(result.witness),
            nodes_explored=result.nodes_explored,
            certificate=None if result.certificate is None else self.certificate(result.certificate),
            method=result.method,
            details=dict(sorted(result.details.items())),
        )

    def subset_lower_bound(self, source: MetricGraph, target: MetricGraph,
                           bound: SubsetLowerBound) -> SubsetLowerBoundDocument:
        return SubsetLowerBoundDocument(
            source=source.name,
            target=target.name,
            value=self.exact(bound.value),
            witness_subset=list(bound.witness_subset),
            subsets_checked=bound.subsets_checked,
            subset_size=bound.subset_size,
        )

    def growth(self, rows: Iterable[GrowthRow]) -> GrowthDocument:
        return GrowthDocument(rows=[
            GrowthRowDocument(
                n=row.n,
                target_level=row.target_level,
                upper_bound=self.exact(row.upper_bound),
                lower_bound=self.exact(row.lower_bound),
                upper_method=row.upper_method,
            )
            for row in rows
        ])

    def growth_csv(self, rows: Iterable[GrowthRow]) -> str:
        return self._csv(self.GROWTH_COLUMNS, (
            (row.n, row.target_level, _cell(row.lower_bound), _cell(row.upper_bound), row.upper_method)
            for row in rows
        ))

    def profile_csv(self, profile: GeometryProfile) -> str:
        return self._csv(self.PROFILE_COLUMNS, ((_cell(r), count) for r, count in profile.entries))

    @staticmethod
    def _csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue()


def _cell(value: ExactValue) -> str:
    return "INFINITE" if isinstance(value, Infinite) else str(value)


def load_graph(document: GraphDocument) -> MetricGraph:
    """
    Rebuild a MetricGraph from its exported document.

    Raises:
        UsageError: Unknown family/normalization or malformed addresses
        ContractError: Ids out of order, loops or parallel edges, or counts
            or edge length that disagree with the lists
    """
    family = GraphFamily.parse(document.family)
    try:
        normalization = Normalization(document.normalization)
    except ValueError:
        raise UsageError(f"Unknown normalization: {document.normalization}")

    ids = [vertex.id for vertex in document.vertices]
    if ids != list(range(len(ids))):
        raise ContractError("Vertex ids must be 0..N-1 in order", details={"graph": document.name})
    if document.vertex_count != len(ids) or document.edge_count != len(document.edges):
        raise ContractError(
            f"Counts of {document.name} disagree with its vertex and edge lists",
            details={"vertex_count": document.vertex_count, "edge_count": document.edge_count}
        )
    seen = set()
    for u, v in document.edges:
        if u == v or not (0 <= u < len(ids) and 0 <= v < len(ids)):
            raise ContractError(f"Edge ({u}, {v}) is a loop or leaves the vertex range")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ContractError(f"Edge ({u}, {v}) repeats an earlier edge", details={"graph": document.name})
        seen.add(key)

    addresses = [parse_address(vertex.address, family) for vertex in document.vertices]
    graph = new_graph(family, document.level, normalization, document.scale_base,
                      addresses, [tuple(edge) for edge in document.edges], name=document.name)
    expected = DocumentSerializer.from_exact(document.edge_length)
    if graph.edge_length != expected:
        raise ContractError(
            f"Edge length {expected} of {document.name} does not match "
            f"scale_base {document.scale_base} at level {document.level}"
        )
    return graph


def read_graph(path: Union[str, Path]) -> MetricGraph:
    """Load a graph document, bare or wrapped in a CLI envelope, from a JSON file."""
    path = Path(path)
    if not path.is_file():
        raise UsageError(f"Graph file not found: {path}")
    try:
        raw = json.loads(path.read_text())
        if isinstance(raw, dict) and "report" in raw:
            raw = raw["report"]
        document = GraphDocument.model_validate(raw)
    except (json.JSONDecodeError, ValidationError) as e:
        raise UsageError(f"{path} is not a graph document: {e}")
    logger.info(f"Loaded {document.name} from {path}")
    return load_graph(document)


def dump_document(document) -> str:
    """Deterministic JSON text of a document, newline terminated."""
    return document.model_dump_json(indent=2) + "\n"
