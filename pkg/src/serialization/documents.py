"""
Pydantic models for the structured documents written by the CLI.
"""

from typing import Dict, Generic, List, Literal, Optional, Tuple, TypeVar, Union

from pydantic import BaseModel, Field


class ExactNumber(BaseModel):
    """Exact rational as numerator and denominator."""
    num: int
    den: int = Field(1, gt=0)


ExactField = Union[ExactNumber, Literal["INFINITE"]]


class VertexDocument(BaseModel):
    id: int
    address: str


class GraphDocument(BaseModel):
    """Graph export: families, addresses and id-pair edges."""
    name: str
    family: str
    level: int
    normalization: str
    edge_length: ExactNumber
    scale_base: int = Field(1, ge=1, description="weighted edge length is scale_base ** -level")
    vertex_count: int
    edge_count: int
    vertices: List[VertexDocument]
    edges: List[Tuple[int, int]]


class GraphSummary(BaseModel):
    """Graph header without the vertex and edge lists."""
    name: str
    family: str
    level: int
    normalization: str
    edge_length: ExactNumber
    vertex_count: int
    edge_count: int
    max_degree: int


class DistanceDocument(BaseModel):
    graph: str
    u: int
    v: int
    hops: int
    length: ExactNumber
    method: str
    note: str = ""


class DiameterDocument(BaseModel):
    graph: str
    hops: int
    length: ExactNumber


class BallDocument(BaseModel):
    graph: str
    center: int
    radius: ExactNumber
    size: int
    members: List[int]


class DoublingDocument(BaseModel):
    """Ball-form doubling interval."""
    graph: str
    strategy: str
    ball_center: int
    ball_radius: ExactNumber
    witness_lower_bound: int
    greedy_upper_bound: int
    scanned_balls: int
    complete: bool
    certificate: str
    witness_points: List[int]
    upper_center: Optional[int] = None
    upper_radius: Optional[ExactNumber] = None


class ProfileEntry(BaseModel):
    radius: ExactNumber
    max_cardinality: int


class ProfileDocument(BaseModel):
    graph: str
    entries: List[ProfileEntry]
    max_degree: int


class SubdiamondDocument(BaseModel):
    root_edge_path: List[int]
    height: int
    top: int
    bottom: int
    leftmost: int
    rightmost: int


class CycleDocument(BaseModel):
    vertices: List[int]
    hops: int
    length: ExactNumber


class CycleListDocument(BaseModel):
    graph: str
    count: int
    cycles: List[CycleDocument]


class ClassifiedCycle(BaseModel):
    vertices: List[int]
    hops: int
    subdiamond: List[int]
    height: int


class ClassificationDocument(BaseModel):
    """Every simple cycle with the subdiamond it is principal in."""
    graph: str
    count: int
    classified: int
    by_height: Dict[str, int]
    cycles: List[ClassifiedCycle]


class IsometricCycleDocument(BaseModel):
    graph: str
    h: int
    copy_path: List[int]
    cycle: CycleDocument
    mismatched_pairs: List[Tuple[int, int]]


class FamilyCycle(BaseModel):
    label: str
    copy_path: List[int]
    vertices: List[int]
    hops: int


class CycleFamilyDocument(BaseModel):
    n: int
    s: int
    t: int
    cycle_count: int
    violations: List[str]
    canonical_cycle: List[int]
    cycles: List[FamilyCycle]


class QuotientDocument(BaseModel):
    original: str
    graph: GraphDocument
    projection: List[int]
    collapsed: List[SubdiamondDocument]
    violations: List[str]


class EmbeddingDocument(BaseModel):
    source: str
    target: str
    assignment: List[int]
    scale_hint: Optional[ExactNumber] = None


class DistortionDocument(BaseModel):
    """Exact distortion of an explicit map."""
    map: EmbeddingDocument
    expansion: ExactField
    contraction: ExactField
    distortion: ExactField
    witness_expansion_pair: Tuple[int, int]
    witness_contraction_pair: Tuple[int, int]


class CertificateDocument(BaseModel):
    exhausted: bool
    bound: ExactField
    reason: str
    improving_leaves: int = 0


class SolverResultDocument(BaseModel):
    status: str
    value: ExactField
    witness: Optional[EmbeddingDocument] = None
    nodes_explored: int
    certificate: Optional[CertificateDocument] = None
    method: str
    details: Dict[str, str] = Field(default_factory=dict)


class SubsetLowerBoundDocument(BaseModel):
    source: str
    target: str
    value: ExactField
    witness_subset: List[int]
    subsets_checked: int
    subset_size: int


class GrowthRowDocument(BaseModel):
    n: int
    target_level: int
    upper_bound: ExactField
    lower_bound: ExactField
    upper_method: str


class GrowthDocument(BaseModel):
    rows: List[GrowthRowDocument]


class RunConfig(BaseModel):
    """Everything that determines a CLI run; echoed back in every document."""
    command: str
    subcommand: Optional[str] = None
    graph: Optional[str] = None
    source: Optional[str] = None
    target: Optional[str] = None
    seed: Optional[int] = None
    budget: Optional[int] = None
    iterations: Optional[int] = None
    output: Optional[str] = None
    format: Literal["document", "csv"] = "document"
    params: Dict[str, str] = Field(default_factory=dict)

    class Config:
        json_schema_extra = {
            "example": {
                "command": "embed",
                "subcommand": "exact",
                "source": "laakso:1",
                "target": "diamond:2",
                "budget": 10000000,
                "format": "document",
            }
        }


ReportT = TypeVar("ReportT", bound=BaseModel)


class Envelope(BaseModel, Generic[ReportT]):
    """The document written by every CLI command."""
    config: RunConfig
    report: ReportT
