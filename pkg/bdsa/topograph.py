"""Partially defined topological graph of a finite instance.

Vertices are atoms. For every label α and atom a below C_α there is one
edge e^α_a with d(e) = a; r(e) = f_α(a) is defined exactly when a lies in
the range of θ_α. On a finite discrete vertex space the ultrafilter maps of
the general construction are the identity on atoms and the dual maps f_α.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .bds import forward_orbit
from .boolcore import atoms_of, canonical_key
from .errors import TailAxiomFailure
from .props import is_tail_complement, tail_descriptor
from .schemas.algebra import UNDEFINED, Instance
from .schemas.analysis import CycleWitness, TailDescriptor
from .schemas.graph import Edge, TopGraph, VertexClasses

logger = logging.getLogger(__name__)

Loop = Tuple[int, ...]

INFINITY_NODE = "∞"


def build_graph(inst: Instance) -> TopGraph:
    edges = []
    for alpha, action in enumerate(inst.actions):
        for a in atoms_of(inst.ideal_tops[alpha]):
            r = action.dual[a]
            edges.append(Edge(label=alpha, atom=a, r=None if r == UNDEFINED else r))
    return TopGraph(vertex_count=inst.n, edges=tuple(edges))


def dom_r_size(g: TopGraph) -> int:
    return sum(1 for e in g.edges if e.r is not None)


def _edge_index(g: TopGraph) -> Dict[Tuple[int, int], int]:
    return {(e.label, e.atom): i for i, e in enumerate(g.edges)}


def loops_without_entrances(g: TopGraph) -> List[Loop]:
    """Simple loops e_1…e_n with r⁻¹(r(e_k)) = {e_k}, as edge-index tuples.

    Each loop starts at the edge whose r-vertex is smallest.
    """
    sole_entry = {}
    for v in range(g.vertex_count):
        pre = g.r_preimage(v)
        if len(pre) == 1:
            sole_entry[v] = pre[0]
    successor = nx.DiGraph()
    successor.add_nodes_from(sole_entry)
    for v, i in sole_entry.items():
        w = g.edges[i].d
        if w in sole_entry:
            successor.add_edge(v, w)
    loops = []
    for cycle in nx.simple_cycles(successor):
        k = cycle.index(min(cycle))
        cycle = cycle[k:] + cycle[:k]
        loops.append(tuple(sole_entry[v] for v in cycle))
    loops.sort(key=lambda loop: g.edges[loop[0]].r)
    return loops


def is_topologically_free(g: TopGraph) -> bool:
    # on a finite discrete space the base points have empty interior iff there are none
    return not loops_without_entrances(g)


def is_loop(g: TopGraph, path: Sequence[int]) -> bool:
    if not path:
        return False
    edges = [g.edges[i] for i in path]
    if any(e.r is None for e in edges):
        return False
    for e, nxt in zip(edges, edges[1:]):
        if e.d != nxt.r:
            return False
    return edges[-1].d == edges[0].r


def cycle_to_loop(g: TopGraph, witness: CycleWitness) -> Loop:
    """Edge path of a cycle witness: step t uses e^{β_t}_{s_t}, from s_t back to s_{t-1}."""
    index = _edge_index(g)
    path = []
    for t, alpha in enumerate(witness.word, start=1):
        states = atoms_of(witness.trajectory[t])
        if len(states) != 1:
            raise ValueError("cycle witness trajectory is not made of atoms")
        path.append(index[(alpha, states[0])])
    return tuple(path)


def vertex_classes(g: TopGraph) -> VertexClasses:
    sce = 0
    for v in range(g.vertex_count):
        if not g.r_preimage(v):
            sce |= 1 << v
    fin = (1 << g.vertex_count) - 1
    rg = fin & ~sce
    return VertexClasses(sce=sce, fin=fin, rg=rg, sg=fin & ~rg)


""" negative orbits """


def negative_orbit(g: TopGraph, start: int) -> List[int]:
    """Follow the smallest edge into the current vertex until none or a repeat."""
    orbit = [start]
    seen = {start}
    current = start
    while True:
        pre = g.r_preimage(current)
        if not pre:
            return orbit
        current = g.edges[pre[0]].d
        if current in seen:
            return orbit
        orbit.append(current)
        seen.add(current)


def maximal_tail_from_orbit(inst: Instance, g: TopGraph, start: int) -> TailDescriptor:
    """The maximal tail of all elements some θ_γ carries onto the negative orbit of ``start``."""
    if not 0 <= start < g.vertex_count:
        raise ValueError(f"vertex {start} out of range")
    reached = 0
    for v in negative_orbit(g, start):
        reached |= forward_orbit(inst, v)
    top = inst.full & ~reached
    if not is_tail_complement(inst, top):
        raise TailAxiomFailure(
            "negative orbit tail",
            {"start": inst.universe.names[start], "complementTop": top},
        )
    return tail_descriptor(inst, top)


def orbit_tails(inst: Instance, g: TopGraph) -> List[TailDescriptor]:
    found = {}
    for v in range(g.vertex_count):
        tail = maximal_tail_from_orbit(inst, g, v)
        found.setdefault(tail.complement_top, tail)
    return [found[top] for top in sorted(found, key=canonical_key)]


""" DOT """


def to_dot(inst: Instance, g: TopGraph, name: Optional[str] = "bds") -> str:
    """Graphviz text: edges drawn d → r, dashed into ``∞`` where r is undefined."""
    names = inst.universe.names
    lines = [f"digraph {name} {{"]
    for v in range(g.vertex_count):
        lines.append(f'  "{names[v]}";')
    if any(e.r is None for e in g.edges):
        lines.append(f'  "{INFINITY_NODE}" [shape=plaintext];')
    for e in g.edges:
        label = inst.labels[e.label]
        if e.r is None:
            lines.append(f'  "{names[e.d]}" -> "{INFINITY_NODE}" [label="{label}", style=dashed];')
        else:
            lines.append(f'  "{names[e.d]}" -> "{names[e.r]}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
