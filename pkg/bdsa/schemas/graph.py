"""Partially defined topological graph of a finite instance."""

from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field


class Edge(BaseModel):
    """Edge e^α_a. ``d`` is always ``atom``; ``r`` is f_α(a) or ``None``."""

    model_config = ConfigDict(frozen=True)

    label: int
    atom: int
    r: Optional[int] = None

    @property
    def d(self) -> int:
        return self.atom


class TopGraph(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertex_count: int
    edges: Tuple[Edge, ...] = Field(default=(), description="Sorted by (label, atom)")

    def r_preimage(self, vertex: int) -> Tuple[int, ...]:
        """Indices of edges e with r(e) = vertex."""
        return tuple(i for i, e in enumerate(self.edges) if e.r == vertex)


class VertexClasses(BaseModel):
    model_config = ConfigDict(frozen=True)

    sce: int
    fin: int
    rg: int
    sg: int
