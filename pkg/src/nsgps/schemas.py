"""Pydantic request and response models for the HTTP service."""

from typing import Optional

from pydantic import BaseModel, Field


class SemigroupRequest(BaseModel):
    generators: list[int] = Field(min_length=1)


class AperyRequest(SemigroupRequest):
    n: int


class ElementRequest(SemigroupRequest):
    element: int


class InvariantsRequest(SemigroupRequest):
    element: Optional[int] = None


class EnumerateRequest(BaseModel):
    genus: Optional[int] = None
    frobenius: Optional[int] = None
    irreducible: Optional[int] = None
    free: Optional[int] = None
    delta: Optional[int] = None
    count_only: bool = False
    limit: Optional[int] = None


class CurveRequest(BaseModel):
    r: list[int] = Field(min_length=1)
    dual: bool = False


class SemigroupRecord(BaseModel):
    generators: list[int]
    frobenius: int
    conductor: int
    genus: int
    gaps: list[int]


class InfoResponse(SemigroupRecord):
    multiplicity: int
    embedding_dim: int
    sporadic_count: int
    apery: list[int]
    pf: list[int]
    type: int


class Classification(BaseModel):
    symmetric: bool
    pseudo_symmetric: bool
    irreducible: bool
    med: bool
    telescopic: bool
    free: Optional[bool]


class ClassifyResponse(BaseModel):
    generators: list[int]
    classification: Classification
    pf: list[int]
    type: int
    special_gaps: list[int]


class DecomposeResponse(BaseModel):
    generators: list[int]
    special_gaps: list[int]
    components: list[SemigroupRecord]


class PresentationResponse(BaseModel):
    generators: list[int]
    betti: list[int]
    presentation: list[list[list[int]]]
    binomials: list[str]
