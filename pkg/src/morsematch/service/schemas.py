"""Request and response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class VertexEntry(BaseModel):
    id: int
    f: float | list  # scalar or nested set-of-sets value


class ComplexPayload(BaseModel):
    vertices: list[VertexEntry]
    simplices: list[list[int]]


class GradientRequest(BaseModel):
    complex: ComplexPayload
    fast: bool = False
    modified: bool = False
    include_vpaths: bool = False
    include_dot: bool = False


class GradientResponse(BaseModel):
    variant: str
    pairs: list[list[list[int]]]
    critical: list[list[int]]
    vpaths: list[list[list[int]]] | None = None
    dot: str | None = None


class SmoothcheckRequest(BaseModel):
    complex: ComplexPayload


class SmoothnessWitness(BaseModel):
    simplex: list[int]
    cofacet: list[int]
    argmin: int
    shifted_argmin: int


class SmoothcheckResponse(BaseModel):
    smooth: bool
    witnesses: list[SmoothnessWitness]


class SubdivideRequest(BaseModel):
    complex: ComplexPayload


class BarycenterEntry(BaseModel):
    id: int
    simplex: list[int]


class SubdivideResponse(BaseModel):
    vertices: list[VertexEntry]
    simplices: list[list[int]]
    barycenters: list[BarycenterEntry]


class PipPayload(BaseModel):
    elements: list[str]
    covers: list[list[str]] = Field(default_factory=list)
    inconsistent: list[list[str]] = Field(default_factory=list)


class Cat0Request(BaseModel):
    pip: PipPayload
    element_order: list[str] | None = None
    include_dot: bool = False


class CubeModel(BaseModel):
    ideal: list[str]
    marks: list[str]


class Cat0Response(BaseModel):
    cells: int
    euler_characteristic: int
    matching: list[list[CubeModel]]
    critical: list[CubeModel]
    collapse_order: list[list[CubeModel]]
    dot: str | None = None


class VerifyRequest(BaseModel):
    seed: int = 0
    trials: int = 50
    max_vertices: int = 12
    max_dim: int = 3
    checks: list[str] | None = None


class CheckOutcomeModel(BaseModel):
    name: str
    trials: int
    failures: int
    skipped: int
    passed: bool
    first_failure: str | None = None


class VerifyResponse(BaseModel):
    seed: int
    trials: int
    max_vertices: int
    max_dim: int
    passed: bool
    checks: list[CheckOutcomeModel]


class ExportDotRequest(BaseModel):
    complex: ComplexPayload | None = None
    pip: PipPayload | None = None
    variant: str = "plain"  # plain | modified
    with_gradient: bool = True


class DotResponse(BaseModel):
    dot: str


class HealthResponse(BaseModel):
    status: str
    service: str
