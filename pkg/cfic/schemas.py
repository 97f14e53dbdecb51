"""
Schemas module.

Pydantic models for the HTTP API's request and response payloads.

Notes:
- HATEOAS is represented as JSON property "_links". Fields beginning with "_" are
  private in Pydantic, so the field is `links` in Python, aliased to "_links".
- Vertex tokens travel as strings; they may not contain whitespace or '#', so
  every graph sent to the API can also be written as an edge-list file.
"""
from __future__ import annotations

from enum import Enum
from typing import Annotated, Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .graph import Graph, IncidenceColoring

Token = Annotated[str, Field(min_length=1, max_length=200, pattern=r"^[^\s#]+$")]


class GraphIn(BaseModel):
    vertices: List[Token] = Field(default_factory=list)
    edges: List[Tuple[Token, Token]] = Field(default_factory=list)

    def to_graph(self) -> Graph:
        return Graph.build(self.edges, vertices=self.vertices)


class ChiRequest(GraphIn):
    exact: bool = False


class ColoredEdge(BaseModel):
    u: Token
    v: Token
    cu: int = Field(ge=1)
    cv: int = Field(ge=1)


class ColoredGraphIn(BaseModel):
    vertices: List[Token] = Field(default_factory=list)
    edges: List[ColoredEdge] = Field(default_factory=list)

    def to_graph(self) -> Graph:
        return Graph.build(((e.u, e.v) for e in self.edges), vertices=self.vertices)

    def to_coloring(self, g: Graph) -> IncidenceColoring:
        return IncidenceColoring.from_pairs(g, {(e.u, e.v): (e.cu, e.cv) for e in self.edges})


class Verdict(str, Enum):
    P = "P"
    P_PLUS = "P+"
    other = "other"


class ComponentOut(BaseModel):
    vertices: List[str]
    case: str
    chi: int


class ColoringOut(BaseModel):
    chi: int
    palette: int
    components: List[ComponentOut] = Field(default_factory=list)
    vertices: List[str]
    edges: List[ColoredEdge]

    # Serialized as "_links" in JSON (HATEOAS)
    links: Dict[str, Any] = Field(..., alias="_links")

    model_config = ConfigDict(populate_by_name=True)


class IncidenceOut(BaseModel):
    vertex: str
    edge: Tuple[str, str]


class VerifyOut(BaseModel):
    ok: bool
    witness: Optional[str] = None
    color: Optional[int] = None
    incidences: List[IncidenceOut] = Field(default_factory=list)

    links: Dict[str, Any] = Field(..., alias="_links")

    model_config = ConfigDict(populate_by_name=True)


class BoxOut(BaseModel):
    node: str
    channels: List[int]
    rainbow: bool


class ChannelsOut(BaseModel):
    rainbow: bool
    boxes: List[BoxOut]

    links: Dict[str, Any] = Field(..., alias="_links")

    model_config = ConfigDict(populate_by_name=True)


class ChiOut(BaseModel):
    chi: int
    max_degree: int
    method: str

    links: Dict[str, Any] = Field(..., alias="_links")

    model_config = ConfigDict(populate_by_name=True)


class ChromaticIndexOut(BaseModel):
    chromatic_index: int
    max_degree: int
    class_one: bool

    links: Dict[str, Any] = Field(..., alias="_links")

    model_config = ConfigDict(populate_by_name=True)


class ClassifyOut(BaseModel):
    verdict: Verdict

    links: Dict[str, Any] = Field(..., alias="_links")

    model_config = ConfigDict(populate_by_name=True)
