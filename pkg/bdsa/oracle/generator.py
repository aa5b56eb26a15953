"""Seeded random instances and digraphs.

Every draw goes through one ``random.Random`` seeded from the parameters,
in a fixed order, so a seed always reproduces the same instance.
"""

import random
from typing import List, Tuple

from ..bds import assemble_instance
from ..config import Config
from ..schemas.algebra import AtomUniverse, Instance
from ..schemas.generator import GeneratorParams

ATOM_NAMES = "abcdef"
LABEL_NAMES = "xyzw"

_DENSITIES = (0.15, 0.3, 0.5, 0.7, 0.9)
_PARAMS_SALT = 0x5DEECE66D


def random_instance(params: GeneratorParams) -> Instance:
    """Disjoint atom images by construction: each target atom gets at most one source per label."""
    rng = random.Random(params.seed)
    n, labels = params.atom_count, LABEL_NAMES[: params.label_count]
    universe = AtomUniverse(names=tuple(ATOM_NAMES[:n]))
    tables = []
    for _ in labels:
        images = [0] * n
        for b in range(n):
            if rng.random() < params.edge_density:
                images[rng.randrange(n)] |= 1 << b
        tables.append(images)

    ideal_tops = []
    for images in tables:
        top = 0
        for image in images:
            top |= image
        for a in range(n):
            if rng.random() < params.ideal_slack:
                top |= 1 << a
        ideal_tops.append(top)

    reg = 0
    for a in range(n):
        if any(images[a] for images in tables):
            reg |= 1 << a
    j_top = reg
    for a in range(n):
        if reg >> a & 1 and rng.random() < params.j_shrink:
            j_top &= ~(1 << a)
    return assemble_instance(universe, tuple(labels), tables, ideal_tops, j_top)


def corpus_params(seed: int) -> GeneratorParams:
    """Mixed-density corpus parameters; roughly a third of the seeds get slack or a shrunk J."""
    rng = random.Random(seed ^ _PARAMS_SALT)
    return GeneratorParams(
        seed=seed,
        atom_count=rng.randint(1, Config.get_corpus_max_atoms()),
        label_count=rng.randint(1, Config.get_corpus_max_labels()),
        edge_density=rng.choice(_DENSITIES),
        ideal_slack=rng.choice((0.0, 0.0, 0.3)),
        j_shrink=rng.choice((0.0, 0.0, 0.5)),
    )


def random_digraph(
    seed: int, max_vertices: int = 6, max_edges: int = 10
) -> Tuple[List[str], List[Tuple[str, str, str]]]:
    """Vertices ``v0…`` and labelled edges ``(source, target, e<k>)``; parallel edges and loops allowed."""
    rng = random.Random(seed)
    vertices = [f"v{i}" for i in range(rng.randint(1, max_vertices))]
    edges = []
    for k in range(rng.randint(0, max_edges)):
        edges.append((rng.choice(vertices), rng.choice(vertices), f"e{k}"))
    return vertices, edges
