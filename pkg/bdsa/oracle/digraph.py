"""Directed graphs as Boolean dynamical systems, and the classical criteria.

A graph E becomes an instance on the powerset of its vertices with one label
per edge: θ_e(A) = {target(e)} when source(e) ∈ A, else ∅. The classical
graph-algebra conditions are then evaluated on E itself with networkx, as
ground truth for the verdicts computed on the instance.
"""

import logging
from typing import Dict, List, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict

from ..bds import assemble_instance
from ..schemas.algebra import AtomUniverse, Instance

logger = logging.getLogger(__name__)

# more than one first-return path is all the (K) test needs
_RETURN_PATH_CAP = 2


class ImportedGraph(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    instance: Instance
    graph: nx.MultiDiGraph


def import_digraph(
    vertices: Sequence[str], edges: Sequence[Tuple[str, str, str]]
) -> ImportedGraph:
    universe = AtomUniverse(names=tuple(vertices))
    index = {v: i for i, v in enumerate(vertices)}
    tables = []
    for source, target, _ in edges:
        images = [0] * len(vertices)
        images[index[source]] = 1 << index[target]
        tables.append(images)
    labels = tuple(label for _, _, label in edges)
    inst = assemble_instance(universe, labels, tables)

    graph = nx.MultiDiGraph()
    graph.add_nodes_from(vertices)
    for source, target, label in edges:
        graph.add_edge(source, target, key=label)
    return ImportedGraph(instance=inst, graph=graph)


def _has_exitless_cycle(graph: nx.MultiDiGraph) -> bool:
    for cycle in nx.simple_cycles(graph):
        if all(graph.out_degree(v) == 1 for v in cycle):
            return True
    return False


def _first_return_paths(graph: nx.MultiDiGraph, v) -> int:
    """Number of paths v → … → v not passing v in between, capped."""
    count = graph.number_of_edges(v, v)
    rest = graph.subgraph([w for w in graph if w != v])
    starts = {w for w in graph.successors(v) if w != v}
    ends = {w for w in graph.predecessors(v) if w != v}
    forward = set(starts)
    for w in starts:
        forward |= nx.descendants(rest, w)
    backward = set(ends)
    for w in ends:
        backward |= nx.ancestors(rest, w)
    middle = rest.subgraph(forward & backward)
    if middle.number_of_nodes() and not nx.is_directed_acyclic_graph(middle):
        return _RETURN_PATH_CAP
    # paths from w back to v, counted along a topological order
    ways: Dict[str, int] = {}
    for w in reversed(list(nx.topological_sort(middle))):
        total = graph.number_of_edges(w, v)
        for _, u, _ in middle.out_edges(w, keys=True):
            total += ways[u]
        ways[w] = total
    for w in middle:
        count += graph.number_of_edges(v, w) * ways[w]
    return min(count, _RETURN_PATH_CAP)


def _is_cofinal(graph: nx.MultiDiGraph) -> bool:
    """Every vertex reaches every sink and every cycle."""
    reach = {v: nx.descendants(graph, v) | {v} for v in graph}
    targets: List[set] = [{v} for v in graph if graph.out_degree(v) == 0]
    for component in nx.strongly_connected_components(graph):
        v = next(iter(component))
        if len(component) > 1 or graph.has_edge(v, v):
            targets.append(set(component))
    return all(reach[v] & target for v in graph for target in targets)


def classical_graph_verdicts(graph: nx.MultiDiGraph) -> Tuple[bool, bool, bool]:
    """(Condition (L), Condition (K), simplicity) of the graph C*-algebra."""
    condition_l = not _has_exitless_cycle(graph)
    condition_k = all(_first_return_paths(graph, v) != 1 for v in graph)
    simple = condition_l and _is_cofinal(graph)
    logger.debug("classical verdicts L=%s K=%s simple=%s", condition_l, condition_k, simple)
    return condition_l, condition_k, simple
