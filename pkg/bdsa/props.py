"""Cycles without exits, maximal tails and Condition (K).

Condition (L) is decided per atom. A cycle with no exits based at ``{a}``
has a forced word: every atom on the trajectory must have a single label in
its Δ, so the next label is determined and the search is a walk, not a
tree. Atom images are disjoint and nonempty along such a walk, so the
trajectory never shrinks and only singleton trajectories can close up.

Return words of an atom ``c`` are the words γ with f_γ(c) = c. Since
f_{γδ} = f_γ ∘ f_δ, a word is read right to left by the automaton whose
transition on α is ``s ↦ f_α(s)``; all automaton work here is on reversed
words.
"""

import logging
from collections import deque
from typing import List, Optional, Tuple

from .bds import Word, atom_delta, forward_orbit, render_word, word_map
from .boolcore import Element, PrincipalIdeal, atoms_of, canonical_key, render_element
from .errors import CrossCheckMismatch, InvalidTail
from .ideals import (
    J_SATURATED,
    enumerate_lattice,
    is_hereditary_top,
    is_saturated_top,
    quotient_instance,
    require_enumerable,
)
from .schemas.algebra import UNDEFINED, Instance
from .schemas.analysis import CycleWitness, TailDescriptor, UltrafilterCycle

logger = logging.getLogger(__name__)

QUOTIENT_L = "quotient-L"
NO_CYCLIC_TAILS = "no-cyclic-tails"
DIRECT = "direct"
K_ROUTES = (QUOTIENT_L, NO_CYCLIC_TAILS, DIRECT)

_DEAD = -1


""" cycles without exits """


def _forced_label(inst: Instance, trajectory_set: Element) -> Optional[int]:
    """The single label shared by every atom's Δ, or None."""
    label = None
    for b in atoms_of(trajectory_set):
        delta_b = atom_delta(inst, b)
        if len(delta_b) != 1:
            return None
        if label is None:
            label = delta_b[0]
        elif label != delta_b[0]:
            return None
    return label


def _cycle_at(inst: Instance, a: int, within: Element) -> Optional[CycleWitness]:
    start = 1 << a
    current = start
    seen = set()
    word: List[int] = []
    trajectory = [start]
    while True:
        if current & ~within:
            return None
        alpha = _forced_label(inst, current)
        if alpha is None:
            return None
        current = inst.actions[alpha].apply(current)
        word.append(alpha)
        trajectory.append(current)
        if current == start:
            return CycleWitness(word=tuple(word), atom=a, trajectory=tuple(trajectory))
        if current in seen:
            return None
        seen.add(current)


def find_cycle_no_exit(inst: Instance, within: Optional[Element] = None) -> Optional[CycleWitness]:
    """First cycle with no exits, by base atom in declaration order.

    With ``within``, every trajectory atom must also lie below ``within``.
    """
    mask = inst.full if within is None else within
    for a in range(inst.n):
        witness = _cycle_at(inst, a, mask)
        if witness is not None:
            logger.debug(
                "cycle without exits at %s, word %s",
                inst.universe.names[a],
                render_word(inst, witness.word),
            )
            return witness
    return None


def check_condition_L(inst: Instance) -> Tuple[bool, Optional[CycleWitness]]:
    witness = find_cycle_no_exit(inst)
    return witness is None, witness


def revalidate_cycle(inst: Instance, witness: CycleWitness) -> bool:
    """Recheck the cycle equation, the trajectory and the single-label Δ at every step."""
    word, traj = witness.word, witness.trajectory
    start = 1 << witness.atom
    if not word or len(traj) != len(word) + 1:
        return False
    if traj[0] != start or traj[-1] != start:
        return False
    for t, alpha in enumerate(word):
        if inst.actions[alpha].apply(traj[t]) != traj[t + 1]:
            return False
        if not traj[t]:
            return False
        for b in atoms_of(traj[t]):
            if atom_delta(inst, b) != (alpha,):
                return False
    return True


def is_rotation_closed(inst: Instance, witness: CycleWitness) -> bool:
    """Each rotation of the word fixes the trajectory set it starts from."""
    word, traj = witness.word, witness.trajectory
    for k in range(len(word)):
        rotated = word[k:] + word[:k]
        x = traj[k]
        for alpha in rotated:
            x = inst.actions[alpha].apply(x)
        if x != traj[k]:
            return False
    return True


""" return languages """


def _layers(inst: Instance, c: int) -> List[Element]:
    """layers[k]: states reachable from c in exactly k reversed steps, k ≤ n."""
    layers = [1 << c]
    for _ in range(inst.n):
        nxt = 0
        for s in atoms_of(layers[-1]):
            for action in inst.actions:
                if action.dual[s] != UNDEFINED:
                    nxt |= 1 << action.dual[s]
        layers.append(nxt)
    return layers


def shortest_return_word(inst: Instance, c: int) -> Optional[Word]:
    """Shortlex-least nonempty γ with f_γ(c) = c, or None.

    A shortest return is a closed walk of length at most n, so n layers
    suffice. The word is rebuilt from its first letter, which is the last
    transition taken.
    """
    layers = _layers(inst, c)
    length = next((k for k in range(1, len(layers)) if layers[k] >> c & 1), None)
    if length is None:
        return None
    word = []
    targets = 1 << c
    for k in range(1, length + 1):
        for alpha, action in enumerate(inst.actions):
            states = 0
            for s in atoms_of(layers[length - k]):
                t = action.dual[s]
                if t != UNDEFINED and targets >> t & 1:
                    states |= 1 << s
            if states:
                word.append(alpha)
                targets = states
                break
    return tuple(word)


def return_language_within_powers(inst: Instance, c: int, beta: Word) -> bool:
    """Every nonempty return word of ``c`` is a power of ``beta``.

    Product of the return automaton with the cyclic automaton of reversed
    β*; the second component is the position in reversed β, or dead. A
    violation is any reachable product state sitting at ``c`` off a block
    boundary.
    """
    m = len(beta)
    start = (c, 0)
    seen = {start}
    queue = deque([start])
    while queue:
        s, q = queue.popleft()
        for alpha, action in enumerate(inst.actions):
            t = action.dual[s]
            if t == UNDEFINED:
                continue
            if q != _DEAD and alpha == beta[m - 1 - q]:
                r = (q + 1) % m
            else:
                r = _DEAD
            if t == c and r != 0:
                return False
            if (t, r) not in seen:
                seen.add((t, r))
                queue.append((t, r))
    return True


def _is_return_word(inst: Instance, c: int, word: Word) -> bool:
    return word_map(inst, word)[c] == c


def cyclic_root(inst: Instance, c: int) -> Optional[Word]:
    """A root β of the shortest return word whose powers hold every return, or None."""
    beta0 = shortest_return_word(inst, c)
    if beta0 is None:
        return None
    length = len(beta0)
    for d in range(1, length + 1):
        if length % d:
            continue
        beta = beta0[:d]
        if beta * (length // d) != beta0 or not _is_return_word(inst, c, beta):
            continue
        if return_language_within_powers(inst, c, beta):
            return beta
    return None


def ultrafilter_cycles(inst: Instance) -> List[UltrafilterCycle]:
    out = []
    for c in range(inst.n):
        word = shortest_return_word(inst, c)
        if word is not None:
            out.append(UltrafilterCycle(atom=c, word=word))
    return out


""" maximal tails """


def _pairwise_orbit_condition(inst: Instance, top: Element) -> bool:
    """Every two atoms outside ``top`` share some b outside ``top`` in whose forward orbit they lie."""
    outside = inst.full & ~top
    orbits = [forward_orbit(inst, b) & outside for b in atoms_of(outside)]
    for p in atoms_of(outside):
        for q in atoms_of(outside):
            if q < p:
                continue
            pq = (1 << p) | (1 << q)
            if not any(orbit & pq == pq for orbit in orbits):
                return False
    return True


def is_tail_complement(inst: Instance, top: Element) -> bool:
    return (
        top != inst.full
        and is_hereditary_top(inst, top)
        and is_saturated_top(inst, top)
        and _pairwise_orbit_condition(inst, top)
    )


def _cyclic_data(inst: Instance, top: Element) -> Optional[Tuple[int, Word]]:
    outside = inst.full & ~top
    for c in atoms_of(outside):
        if forward_orbit(inst, c) != outside:
            continue
        beta = cyclic_root(inst, c)
        if beta is not None:
            return c, beta
    return None


def tail_descriptor(inst: Instance, top: Element) -> TailDescriptor:
    data = _cyclic_data(inst, top)
    if data is None:
        return TailDescriptor(complement_top=top)
    return TailDescriptor(complement_top=top, cyclic=True, base=data[0], beta=data[1])


def enumerate_maximal_tails(inst: Instance) -> List[TailDescriptor]:
    """Maximal tails through their complement ideals, canonically sorted by D."""
    require_enumerable(inst)
    tails = [
        tail_descriptor(inst, top)
        for top in range(inst.full + 1)
        if is_tail_complement(inst, top)
    ]
    tails.sort(key=lambda t: canonical_key(t.complement_top))
    return tails


def is_cyclic_tail(
    inst: Instance, tail: TailDescriptor
) -> Tuple[bool, Optional[Tuple[int, Word]]]:
    if not is_tail_complement(inst, tail.complement_top):
        raise InvalidTail(render_element(inst.universe, tail.complement_top))
    data = _cyclic_data(inst, tail.complement_top)
    return data is not None, data


""" Condition (K) """


def _k_by_quotients(inst: Instance) -> bool:
    for entry in enumerate_lattice(inst, J_SATURATED):
        # the quotient's J plays no part in (L)
        quotient = quotient_instance(inst, PrincipalIdeal(top=entry.top), s_top=entry.top)
        if find_cycle_no_exit(quotient) is not None:
            logger.debug(
                "quotient by %s has a cycle without exits",
                render_element(inst.universe, entry.top),
                extra={"route": QUOTIENT_L},
            )
            return False
    return True


def _k_by_tails(inst: Instance) -> bool:
    return not any(t.cyclic for t in enumerate_maximal_tails(inst))


def _k_direct(inst: Instance) -> bool:
    return all(cyclic_root(inst, c) is None for c in range(inst.n))


_K_ROUTE_FUNCS = {
    QUOTIENT_L: _k_by_quotients,
    NO_CYCLIC_TAILS: _k_by_tails,
    DIRECT: _k_direct,
}


def check_condition_K(inst: Instance, route: str = "all") -> bool:
    """Condition (K) through one route, or all three with agreement enforced.

    The answer of ``all`` is the quotient-L verdict.
    """
    if route != "all":
        if route not in _K_ROUTE_FUNCS:
            raise ValueError(f"unknown Condition (K) route {route!r}; expected one of {K_ROUTES}")
        return _K_ROUTE_FUNCS[route](inst)
    verdicts = {name: _K_ROUTE_FUNCS[name](inst) for name in K_ROUTES}
    if len(set(verdicts.values())) != 1:
        logger.error("Condition (K) routes disagree: %s", verdicts, extra={"route": "all"})
        raise CrossCheckMismatch("Condition (K)", verdicts)
    return verdicts[QUOTIENT_L]
