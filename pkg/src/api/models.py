from datetime import datetime
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from src.axioms import Axiom, AxiomReport
from src.generators import Model
from src.pipeline import InstanceKind, TypingMode


# Instance Models
class InstanceRequest(BaseModel):
    text: str = Field(..., description="Edge list or relation JSON", min_length=1)
    kind: InstanceKind = Field(default=InstanceKind.AUTO, description="Which structure of a graph input to use")
    k: int = Field(default=2, description="Distance bound for kind 'distance'", ge=1)


# Decomposition Models
class DecomposeRequest(InstanceRequest):
    type_nodes: TypingMode = Field(default=TypingMode.ON, description="Node typing: off, on or strict")


class DecomposeResponse(BaseModel):
    n: int
    strong_sets: int = Field(..., description="Number of tree nodes")
    tree: Dict[str, Any] = Field(..., description="Tree JSON, {'node': {...}}")
    outline: str
    processing_time: Optional[float] = None


# Query Models
class ShsRequest(InstanceRequest):
    ids: List[int] = Field(..., description="Elements of S", min_length=1)


class ShsResponse(BaseModel):
    members: List[int]


class MhsRequest(InstanceRequest):
    x: int = Field(..., description="Element to avoid", ge=0)


class MhsResponse(BaseModel):
    x: int
    partition: List[List[int]]


class TrivialResponse(BaseModel):
    trivial: bool


# Check Models
class CheckRequest(InstanceRequest):
    axioms: Optional[List[Axiom]] = Field(None, description="Axioms to check, [] for those expected of the input")
    closure: Optional[Literal["auto", "weakly_partitive", "partitive"]] = Field(None, description="Closure level")
    submodular: Optional[Literal["auto", "exhaustive", "sampled"]] = Field(None, description="Submodularity mode")
    oracle: bool = Field(default=False, description="Compare fast operations with brute force")
    samples: Optional[int] = Field(None, ge=1)
    seed: Optional[int] = None


class CheckResponse(BaseModel):
    holds: bool
    reports: List[AxiomReport]
    processing_time: Optional[float] = None


# Generator Models
class GenerateRequest(BaseModel):
    model: Model = Field(..., description="Random model")
    n: int = Field(..., description="Number of vertices", ge=1, le=4096)
    p: float = Field(default=0.5, description="Edge probability", ge=0.0, le=1.0)
    seed: int = Field(default=0)
    colors: int = Field(default=2, description="Colours of a 2-structure", ge=1)
    directed: bool = Field(default=False, description="Directed 2-structure")


class GenerateResponse(BaseModel):
    n: int
    m: int
    text: str


# System Models
class HealthResponse(BaseModel):
    status: str = "healthy"
    version: str = "1.0.0"
    timestamp: datetime = Field(default_factory=datetime.utcnow)


class StatsResponse(BaseModel):
    decompositions: int
    queries: int
    checks: int
    generated: int


# Error Models
class ErrorResponse(BaseModel):
    error: str
    detail: Optional[str] = None
    timestamp: datetime = Field(default_factory=datetime.utcnow)
