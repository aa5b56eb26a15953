"""Assemble the full :class:`~bdsa.schemas.report.AnalysisReport` of an instance."""

import logging
from typing import List, Optional

from .bds import render_word
from .boolcore import render_element
from .config import Config
from .errors import RelativeJNotSupported
from .ideals import SATURATED, enumerate_lattice, gauge_pairs, is_minimal, is_simple
from .instance_io import render_instance
from .props import check_condition_K, check_condition_L, enumerate_maximal_tails, ultrafilter_cycles
from .schemas.algebra import Instance
from .schemas.analysis import CycleWitness, TailDescriptor
from .schemas.report import (
    AnalysisReport,
    Counts,
    CycleReport,
    GaugePairReport,
    GraphStats,
    InstanceSummary,
    LatticeReport,
    TailReport,
    UltrafilterCycleReport,
    Verdicts,
    Witnesses,
)
from .topograph import build_graph, dom_r_size, loops_without_entrances
from .utils.common_utils import get_md5

logger = logging.getLogger(__name__)


def cycle_report(inst: Instance, witness: Optional[CycleWitness]) -> Optional[CycleReport]:
    if witness is None:
        return None
    return CycleReport(word=render_word(inst, witness.word), atom=inst.universe.names[witness.atom])


def tail_report(inst: Instance, tail: TailDescriptor) -> TailReport:
    return TailReport(
        complement=render_element(inst.universe, tail.complement_top),
        cyclic=tail.cyclic,
        base=None if tail.base is None else inst.universe.names[tail.base],
        beta=None if tail.beta is None else render_word(inst, tail.beta),
    )


def conclusions(verdicts: Verdicts, counts: Counts) -> List[str]:
    """Consequences of the combinatorial verdicts; nothing here is computed on operators.

    Minimality only pins the gauge-invariant ideals down to 0 and the whole
    algebra when J is the regular top; with a smaller J the pair count decides.
    """
    out = []
    if verdicts.condition_l:
        out.append("Cuntz-Krieger uniqueness: a representation is injective once every p_A, A ≠ ∅, is nonzero")
    if verdicts.condition_k:
        out.append("every ideal of the C*-algebra is gauge-invariant")
    if verdicts.minimal and counts.gauge_pairs == 2:
        out.append("0 and the whole C*-algebra are its only gauge-invariant ideals")
    if verdicts.simple:
        out.append("the C*-algebra is simple")
    return out


def build_report(inst: Instance) -> AnalysisReport:
    names = inst.universe.names
    holds_l, witness = check_condition_L(inst)
    holds_k = check_condition_K(inst)
    minimal = is_minimal(inst)
    simple = explanation = refusal = None
    try:
        simple, explanation = is_simple(inst)
    except RelativeJNotSupported as e:
        refusal = str(e)
    verdicts = Verdicts(
        condition_l=holds_l,
        condition_k=holds_k,
        minimal=minimal,
        simple=simple,
        simple_explanation=explanation,
        simple_refusal=refusal,
    )

    tails = enumerate_maximal_tails(inst)
    lattice = enumerate_lattice(inst, SATURATED)
    pairs = gauge_pairs(inst)
    g = build_graph(inst)

    def render(x):
        return render_element(inst.universe, x)

    counts = Counts(
        sat_hereditary_ideals=len(lattice),
        maximal_tails=len(tails),
        cyclic_tails=sum(1 for t in tails if t.cyclic),
        gauge_pairs=len(pairs),
    )

    return AnalysisReport(
        schema_version=Config.get_report_schema_version(),
        instance_digest=get_md5(render_instance(inst)),
        instance=InstanceSummary(
            atoms=list(names),
            labels=list(inst.labels),
            ideal_tops={label: render(top) for label, top in zip(inst.labels, inst.ideal_tops)},
            j_top=render(inst.j_top),
            degenerate=inst.n == 0,
        ),
        verdicts=verdicts,
        witnesses=Witnesses(
            cycle=cycle_report(inst, witness),
            tails=[tail_report(inst, t) for t in tails],
            ultrafilter_cycles=[
                UltrafilterCycleReport(atom=names[c.atom], word=render_word(inst, c.word))
                for c in ultrafilter_cycles(inst)
            ],
        ),
        lattice=[
            LatticeReport(
                top=render(e.top),
                hereditary=e.hereditary,
                saturated=e.saturated,
                j_saturated=e.j_saturated,
            )
            for e in lattice
        ],
        gauge_pairs=[GaugePairReport(h=render(p.h_top), s=render(p.s_top)) for p in pairs],
        counts=counts,
        graph=GraphStats(
            vertices=g.vertex_count,
            edges=len(g.edges),
            dom_r=dom_r_size(g),
            loops_without_entrances=len(loops_without_entrances(g)),
        ),
        conclusions=conclusions(verdicts, counts),
    )
