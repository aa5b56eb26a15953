"""Corpus cross-check: every equivalence the analyzer relies on, on seeded instances.

Instances run concurrently in worker threads; results are sorted by seed
before they are returned, so the outcome never depends on ``workers``.
"""

import asyncio
import logging
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field
from tqdm import tqdm

from ..bds import assemble_instance, regular_top
from ..boolcore import is_subset
from ..config import Config
from ..errors import CrossCheckMismatch
from ..ideals import (
    b_h_top,
    gauge_pairs,
    hereditary_closure,
    is_minimal,
    is_simple,
    pair_quotient,
    saturation_S,
)
from ..instance_io import parse_instance, render_instance
from ..props import (
    check_condition_K,
    check_condition_L,
    enumerate_maximal_tails,
    is_rotation_closed,
    is_tail_complement,
    revalidate_cycle,
)
from ..relgen import check_L_preservation, is_isomorphic_to_pair_model, to_generalized
from ..schemas.algebra import Instance
from ..topograph import build_graph, cycle_to_loop, is_loop, is_topologically_free, orbit_tails
from .brute import brute_condition_L, brute_minimality_45, brute_saturation_formula, brute_tail_axioms
from .digraph import classical_graph_verdicts, import_digraph
from .generator import corpus_params, random_digraph, random_instance

logger = logging.getLogger(__name__)

# all-D tail agreement is 2^n brute evaluations
_TAIL_SWEEP_MAX_ATOMS = 3
_SATURATION_SWEEP_MAX_ATOMS = 4


class CorpusEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    seed: int
    kind: str = Field(..., description="instance or digraph")
    mismatches: List[str] = Field(default_factory=list)
    instance_text: str = ""


class CorpusResult(BaseModel):
    entries: List[CorpusEntry] = Field(default_factory=list)

    @property
    def failures(self) -> List[CorpusEntry]:
        return [e for e in self.entries if e.mismatches]

    @property
    def ok(self) -> bool:
        return not self.failures


def with_regular_j(inst: Instance) -> Instance:
    return assemble_instance(
        inst.universe,
        inst.labels,
        [action.images for action in inst.actions],
        inst.ideal_tops,
        None,
    )


def crosscheck_instance(inst: Instance) -> List[str]:
    """Descriptions of every disagreement found; empty when all routes agree."""
    mismatches: List[str] = []
    small = inst.n <= Config.get_limits_oracle_max_atoms()

    def expect(ok: bool, what: str):
        if not ok:
            mismatches.append(what)

    try:
        holds_l, witness = check_condition_L(inst)
        holds_k = check_condition_K(inst)
        minimal = is_minimal(inst)
        non_relative = with_regular_j(inst)
        is_simple(non_relative)
        preservation = check_L_preservation(inst)
    except CrossCheckMismatch as e:
        return [str(e)]

    expect(not holds_k or holds_l, "Condition (K) holds while (L) fails")
    g = build_graph(inst)
    expect(is_topologically_free(g) == holds_l, "topological freeness differs from Condition (L)")
    expect(
        brute_condition_L(inst, max_len=2 ** inst.n) == holds_l,
        "literal Condition (L) search differs",
    )
    if witness is not None:
        expect(revalidate_cycle(inst, witness), "cycle witness does not revalidate")
        expect(is_rotation_closed(inst, witness), "cycle witness is not rotation closed")
        expect(is_loop(g, cycle_to_loop(g, witness)), "cycle witness is not a loop")
    if inst.j_top == regular_top(inst):
        expect(preservation.base == preservation.prime, "B′ changes Condition (L)")

    tails = enumerate_maximal_tails(inst)
    tail_tops = {t.complement_top for t in tails}
    expect(
        all(t.complement_top in tail_tops for t in orbit_tails(inst, g)),
        "negative orbit tail missing from the tail enumeration",
    )
    for pair in gauge_pairs(inst):
        upper = b_h_top(inst, pair.h_top)
        expect(
            is_subset(pair.h_top | inst.j_top, pair.s_top) and is_subset(pair.s_top, upper),
            "gauge pair outside its sandwich",
        )
        pair_quotient(inst, pair)

    if small:
        item4, item5 = brute_minimality_45(inst)
        expect(item4 == minimal and item5 == minimal, "minimality items disagree with the lattice")
        elements = range(inst.full + 1)
        for tail in tails:
            t = [x for x in elements if x & ~tail.complement_top]
            expect(brute_tail_axioms(inst, t).all(), "enumerated tail fails the tail axioms")
    if inst.n <= _TAIL_SWEEP_MAX_ATOMS:
        for top in range(inst.full + 1):
            t = [x for x in range(inst.full + 1) if x & ~top]
            expect(
                brute_tail_axioms(inst, t).all() == is_tail_complement(inst, top),
                "tail predicate disagrees with the literal axioms",
            )
    if inst.n <= _SATURATION_SWEEP_MAX_ATOMS:
        for a in range(inst.full + 1):
            fixpoint = saturation_S(inst, hereditary_closure(inst, a)).top
            expect(
                fixpoint == brute_saturation_formula(inst, a),
                "saturation fixpoint differs from the level formula",
            )
    if inst.n <= Config.get_limits_pair_model_max_atoms():
        expect(
            is_isomorphic_to_pair_model(to_generalized(inst), inst),
            "B′ does not match the literal pair model",
        )
    expect(parse_instance(render_instance(inst)) == inst, "instance text does not round-trip")
    return mismatches


def crosscheck_digraph(seed: int) -> CorpusEntry:
    vertices, edges = random_digraph(
        seed,
        Config.get_corpus_digraph_max_vertices(),
        Config.get_corpus_digraph_max_edges(),
    )
    imported = import_digraph(vertices, edges)
    inst = imported.instance
    mismatches = []
    try:
        ours = (check_condition_L(inst)[0], check_condition_K(inst), is_simple(inst)[0])
    except CrossCheckMismatch as e:
        mismatches.append(str(e))
    else:
        classical = classical_graph_verdicts(imported.graph)
        for name, mine, theirs in zip(("L", "K", "simple"), ours, classical):
            if mine != theirs:
                mismatches.append(f"{name}: instance says {mine}, graph says {theirs}")
    return CorpusEntry(
        seed=seed,
        kind="digraph",
        mismatches=mismatches,
        instance_text=render_instance(inst) if mismatches else "",
    )


def crosscheck_seed(seed: int) -> CorpusEntry:
    inst = random_instance(corpus_params(seed))
    mismatches = crosscheck_instance(inst)
    if mismatches:
        logger.error("seed %d: %s", seed, "; ".join(mismatches), extra={"instance": f"seed {seed}"})
    return CorpusEntry(
        seed=seed,
        kind="instance",
        mismatches=mismatches,
        instance_text=render_instance(inst, comments=[f"seed {seed}"]) if mismatches else "",
    )


async def run_corpus_async(
    first_seed: int,
    count: int,
    workers: int = 1,
    digraphs: int = 0,
    progress: bool = False,
) -> CorpusResult:
    semaphore = asyncio.Semaphore(max(1, workers))
    bar: Optional[tqdm] = tqdm(total=count + digraphs, desc="crosscheck") if progress else None

    async def run(func, seed):
        async with semaphore:
            entry = await asyncio.to_thread(func, seed)
        if bar is not None:
            bar.update(1)
        return entry

    tasks = [run(crosscheck_seed, seed) for seed in range(first_seed, first_seed + count)]
    tasks += [run(crosscheck_digraph, seed) for seed in range(first_seed, first_seed + digraphs)]
    try:
        entries = await asyncio.gather(*tasks)
    finally:
        if bar is not None:
            bar.close()
    entries = sorted(entries, key=lambda e: (e.kind, e.seed))
    return CorpusResult(entries=entries)


def run_corpus(
    first_seed: Optional[int] = None,
    count: Optional[int] = None,
    workers: Optional[int] = None,
    digraphs: Optional[int] = None,
    progress: bool = False,
) -> CorpusResult:
    """Blocking entry point; unset arguments come from the ``corpus`` config section."""
    return asyncio.run(
        run_corpus_async(
            Config.get_corpus_first_seed() if first_seed is None else first_seed,
            Config.get_corpus_count() if count is None else count,
            Config.get_corpus_workers() if workers is None else workers,
            Config.get_corpus_digraph_count() if digraphs is None else digraphs,
            progress,
        )
    )
