"""Relative generalized Boolean dynamical systems.

Validated :class:`~bdsa.schemas.algebra.Instance` construction, word actions,
Δ-sets, the regular ideal and the finite semigroup of dual atom maps.

Words are sequences of label indices internally. The dual maps compose
contravariantly: θ_{βγ} = θ_γ ∘ θ_β while f_{βγ} = f_β ∘ f_γ.
"""

import logging
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .boolcore import Element, atoms_of, dualize_action, is_subset, render_element
from .config import Config
from .errors import IdealTooSmall, JNotRegular, NotDisjoint, TooManyAtoms, UnknownLabel
from .schemas.algebra import UNDEFINED, Action, AtomUniverse, Instance, InstanceSpec

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
PartialMap = Tuple[int, ...]


def assemble_instance(
    universe: AtomUniverse,
    labels: Sequence[str],
    image_tables: Sequence[Sequence[Element]],
    ideal_tops: Optional[Sequence[Optional[Element]]] = None,
    j_top: Optional[Element] = None,
    lines: Optional[Dict[str, int]] = None,
) -> Instance:
    """Validate image tables and side conditions, filling the defaults.

    Missing ideal tops default to range_top(α) (I_α = R_α); a missing J
    defaults to the regular top (J = B_reg).
    """
    lines = lines or {}
    hard_cap = Config.get_limits_hard_max_atoms()
    if universe.size > hard_cap:
        raise TooManyAtoms(f"{universe.size} atoms exceed the hard cap of {hard_cap}")

    actions = []
    for label, images in zip(labels, image_tables):
        try:
            dual = dualize_action(universe, tuple(images))
        except NotDisjoint as e:
            raise e.with_line(lines.get(f"act {label} {e.second}")) if lines else e
        actions.append(Action(images=tuple(images), dual=dual))

    tops = []
    for i, label in enumerate(labels):
        range_top = _or_all(actions[i].images)
        declared = ideal_tops[i] if ideal_tops is not None else None
        if declared is None:
            tops.append(range_top)
            continue
        if not is_subset(range_top, declared):
            raise IdealTooSmall(label, line=lines.get(f"ideal {label}"))
        tops.append(declared)

    reg = regular_top_of_tables([action.images for action in actions])
    if j_top is None:
        j_top = reg
    elif not is_subset(j_top, reg):
        raise JNotRegular(
            f"{render_element(universe, j_top)} is not below the regular top "
            f"{render_element(universe, reg)}",
            line=lines.get("J"),
        )

    return Instance(
        universe=universe,
        labels=tuple(labels),
        actions=tuple(actions),
        ideal_tops=tuple(tops),
        j_top=j_top,
    )


def build_instance(spec: InstanceSpec) -> Instance:
    universe = AtomUniverse(names=tuple(spec.atoms))
    tables = []
    for label in spec.labels:
        per_atom = spec.images.get(label, {})
        tables.append([per_atom.get(name, 0) for name in universe.names])
    ideal_tops = [spec.ideal_tops.get(label) for label in spec.labels]
    inst = assemble_instance(
        universe, spec.labels, tables, ideal_tops, spec.j_top, lines=spec.lines
    )
    logger.debug(
        "built instance with %d atoms and %d labels", inst.n, len(inst.labels)
    )
    return inst


def _or_all(masks: Iterable[Element]) -> Element:
    out = 0
    for m in masks:
        out |= m
    return out


""" words """


def word_indices(inst: Instance, word: Sequence[str]) -> Word:
    return tuple(inst.label_index(label) for label in word)


def render_word(inst: Instance, word: Sequence[int]) -> str:
    names = [inst.labels[i] for i in word]
    if all(len(name) == 1 for name in inst.labels):
        return "".join(names)
    return ".".join(names)


def parse_word(inst: Instance, text: str) -> Word:
    """Inverse of :func:`render_word`; the empty string is the empty word."""
    if not text:
        return ()
    if "." in text or not all(len(name) == 1 for name in inst.labels):
        return word_indices(inst, text.split("."))
    return word_indices(inst, list(text))


def apply_indices(inst: Instance, word: Sequence[int], x: Element) -> Element:
    for alpha in word:
        if not x:
            return 0
        x = inst.actions[alpha].apply(x)
    return x


def apply_word(inst: Instance, word: Sequence[str], x: Element) -> Element:
    """θ_β(x), applying β₁ first. ``word`` is a sequence of label names."""
    return apply_indices(inst, word_indices(inst, word), x)


""" Δ and regularity """


def delta_indices(inst: Instance, x: Element) -> Tuple[int, ...]:
    return tuple(i for i, action in enumerate(inst.actions) if action.apply(x))


def delta(inst: Instance, x: Element) -> Tuple[str, ...]:
    """Labels α with θ_α(x) ≠ ∅, in declaration order."""
    return tuple(inst.labels[i] for i in delta_indices(inst, x))


def atom_delta(inst: Instance, a: int) -> Tuple[int, ...]:
    return tuple(i for i, action in enumerate(inst.actions) if action.images[a])


def regular_top_of_tables(image_tables: Sequence[Sequence[Element]]) -> Element:
    """Atoms with a nonempty image under some label, read off per-label image tables."""
    top = 0
    for images in image_tables:
        for a, image in enumerate(images):
            if image:
                top |= 1 << a
    return top


def regular_top(inst: Instance) -> Element:
    return regular_top_of_tables([action.images for action in inst.actions])


def range_top(inst: Instance, alpha: int) -> Element:
    """θ_α(1), the top of R_α."""
    return _or_all(inst.actions[alpha].images)


def forward_orbit(inst: Instance, atom: int) -> Element:
    """{f_γ(atom) : γ ∈ L*, defined}, including ``atom`` itself (γ = ∅)."""
    seen = 1 << atom
    queue = deque([atom])
    while queue:
        b = queue.popleft()
        for action in inst.actions:
            a = action.dual[b]
            if a != UNDEFINED and not seen >> a & 1:
                seen |= 1 << a
                queue.append(a)
    return seen


""" semigroup """


def compose(f: PartialMap, g: PartialMap) -> PartialMap:
    """(f ∘ g)(b) = f(g(b)), undefined when either step is."""
    return tuple(UNDEFINED if gb == UNDEFINED else f[gb] for gb in g)


class SemigroupMember(BaseModel):
    model_config = ConfigDict(frozen=True)

    map: PartialMap
    witness: Word = Field(..., description="Shortest, then lexicographically least word")

    def preimage(self, x: Element) -> Element:
        """θ_witness(x) = f⁻¹(x)."""
        out = 0
        for b, a in enumerate(self.map):
            if a != UNDEFINED and x >> a & 1:
                out |= 1 << b
        return out


class MapSemigroup(BaseModel):
    """Distinct maps f_β for nonempty β, plus the identity kept apart.

    ``edges[i][α]`` is the index of ``members[i].map ∘ f_α``.
    """

    model_config = ConfigDict(frozen=True)

    identity: SemigroupMember
    members: Tuple[SemigroupMember, ...]
    edges: Tuple[Tuple[int, ...], ...]

    def maps(self) -> List[PartialMap]:
        return [m.map for m in self.members]


def semigroup_closure(inst: Instance) -> MapSemigroup:
    """BFS over right-composition by generators.

    Words are explored in shortlex order (label declaration order), so the
    first word reaching a map is its canonical witness.
    """
    gens = [action.dual for action in inst.actions]
    index: Dict[PartialMap, int] = {}
    members: List[SemigroupMember] = []
    queue = deque()
    for alpha, g in enumerate(gens):
        if g not in index:
            index[g] = len(members)
            members.append(SemigroupMember(map=g, witness=(alpha,)))
            queue.append(index[g])
    edges: Dict[int, List[int]] = {}
    while queue:
        i = queue.popleft()
        current = members[i]
        row = []
        for alpha, g in enumerate(gens):
            product = compose(current.map, g)
            j = index.get(product)
            if j is None:
                j = len(members)
                index[product] = j
                members.append(SemigroupMember(map=product, witness=current.witness + (alpha,)))
                queue.append(j)
            row.append(j)
        edges[i] = row
    logger.debug("semigroup closure has %d members", len(members))
    identity = SemigroupMember(map=tuple(range(inst.n)), witness=())
    return MapSemigroup(
        identity=identity,
        members=tuple(members),
        edges=tuple(tuple(edges[i]) for i in range(len(members))),
    )


def word_map(inst: Instance, word: Sequence[int]) -> PartialMap:
    """f_word recomputed from the generators."""
    f = tuple(range(inst.n))
    for alpha in word:
        f = compose(f, inst.actions[alpha].dual)
    return f


def atom_names(inst: Instance, x: Element) -> List[str]:
    return [inst.universe.names[i] for i in atoms_of(x)]
