"""JSON-facing report models.

Field names are snake_case in Python and camelCase on the wire. Elements,
words and atoms are already rendered to text here.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field
from pydantic.alias_generators import to_camel


class ReportModel(BaseModel):
    model_config = ConfigDict(alias_generator=to_camel, populate_by_name=True, frozen=True)


class InstanceSummary(ReportModel):
    atoms: List[str]
    labels: List[str]
    ideal_tops: Dict[str, str]
    j_top: str
    degenerate: bool = Field(False, description="B = {∅}")


class Verdicts(ReportModel):
    condition_l: bool = Field(..., alias="conditionL")
    condition_k: bool = Field(..., alias="conditionK")
    minimal: bool
    simple: Optional[bool] = None
    simple_explanation: Optional[str] = None
    simple_refusal: Optional[str] = None


class CycleReport(ReportModel):
    word: str
    atom: str


class TailReport(ReportModel):
    complement: str
    cyclic: bool
    base: Optional[str] = None
    beta: Optional[str] = None


class UltrafilterCycleReport(ReportModel):
    atom: str
    word: str


class Witnesses(ReportModel):
    cycle: Optional[CycleReport] = None
    tails: List[TailReport] = Field(default_factory=list)
    ultrafilter_cycles: List[UltrafilterCycleReport] = Field(default_factory=list)


class LatticeReport(ReportModel):
    top: str
    hereditary: bool
    saturated: bool
    j_saturated: bool


class GaugePairReport(ReportModel):
    h: str = Field(..., alias="H")
    s: str = Field(..., alias="S")


class Counts(ReportModel):
    sat_hereditary_ideals: int
    maximal_tails: int
    cyclic_tails: int
    gauge_pairs: int


class GraphStats(ReportModel):
    vertices: int
    edges: int
    dom_r: int
    loops_without_entrances: int


class AnalysisReport(ReportModel):
    schema_version: int = 1
    instance_digest: str
    instance: InstanceSummary
    verdicts: Verdicts
    witnesses: Witnesses
    lattice: List[LatticeReport]
    gauge_pairs: List[GaugePairReport]
    counts: Counts
    graph: GraphStats
    conclusions: List[str] = Field(
        default_factory=list,
        description="Corollaries of the verdicts, stated without computing operators",
    )
