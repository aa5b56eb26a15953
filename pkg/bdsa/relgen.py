"""From a relative system (B, L, θ, I_α; J) to a generalized one (B′, L, θ′, I′_α).

B′ is the set of pairs (A, [B]_J) with [A]_{B_reg} = [B]_{B_reg}. Its atoms
are a diagonal copy of every atom of B together with one defect atom
(∅, [{a}]_J) for each regular atom a outside J, so B′ is materialized as a
powerset on diagonal ⊎ defect atoms. θ′_α(A, [B]) = (θ_α(A), [θ_α(A)]_J):
a defect atom is sent nowhere and a diagonal preimage is split into both
copies whenever its image meets the regular atoms outside J.

:func:`pair_model` keeps the literal pair set around so the powerset
presentation can be checked against it on small instances.
"""

import logging
from typing import Dict, List, Tuple

from .bds import assemble_instance, regular_top
from .boolcore import Element, atoms_of
from .config import Config
from .errors import CrossCheckMismatch, TooLarge
from .props import check_condition_L, find_cycle_no_exit
from .schemas.algebra import AtomUniverse, Instance
from .schemas.analysis import AtomTag, LPreservation, PrimeInstance

logger = logging.getLogger(__name__)

Pair = Tuple[Element, Element]

DEFECT_SUFFIX = "_j"


def _defect_names(inst: Instance, defects: List[int]) -> List[str]:
    used = set(inst.universe.names)
    names = []
    for a in defects:
        name = inst.universe.names[a] + DEFECT_SUFFIX
        while name in used:
            name += DEFECT_SUFFIX
        used.add(name)
        names.append(name)
    return names


def _lifter(inst: Instance):
    """Diagonal embedding x ↦ (x, [x]_J) written on the atoms of B′."""
    outside_j = regular_top(inst) & ~inst.j_top
    defect_bit: Dict[int, int] = {
        a: 1 << (inst.n + k) for k, a in enumerate(atoms_of(outside_j))
    }

    def lift(x: Element) -> Element:
        out = x
        for a in atoms_of(x & outside_j):
            out |= defect_bit[a]
        return out

    return lift


def to_generalized(inst: Instance) -> PrimeInstance:
    defects = atoms_of(regular_top(inst) & ~inst.j_top)
    lift = _lifter(inst)
    universe = AtomUniverse(names=inst.universe.names + tuple(_defect_names(inst, defects)))
    tables = [
        [lift(image) for image in action.images] + [0] * len(defects)
        for action in inst.actions
    ]
    ideal_tops = [lift(top) for top in inst.ideal_tops]
    prime = assemble_instance(universe, inst.labels, tables, ideal_tops)
    tags = [AtomTag(kind="pair", atom=a) for a in range(inst.n)]
    tags += [AtomTag(kind="defect", atom=a) for a in defects]
    logger.debug("B′ has %d diagonal and %d defect atoms", inst.n, len(defects))
    return PrimeInstance(instance=prime, tags=tuple(tags))


def check_L_preservation(inst: Instance) -> LPreservation:
    """Condition (L) before and after the construction.

    B′ satisfies (L) exactly when B has no cycle without exits running
    inside J; a cycle through a regular atom outside J picks up an exit at
    its defect copy. With J = B_reg both verdicts coincide.
    """
    base, _ = check_condition_L(inst)
    prime, _ = check_condition_L(to_generalized(inst).instance)
    expected = find_cycle_no_exit(inst, within=inst.j_top) is None
    if prime != expected:
        verdicts = {"prime": prime, "expected": expected}
        logger.error("Condition (L) on B′ disagrees with the J-cycle test: %s", verdicts)
        raise CrossCheckMismatch("Condition (L) preservation", verdicts)
    return LPreservation(base=base, prime=prime, expected_prime=expected)


""" literal pair model """


def pair_model(inst: Instance) -> List[Pair]:
    """All (A, X) with X ⊆ B ∖ J standing for [X]_J and A ∖ B_reg = X ∖ B_reg."""
    cap = Config.get_limits_pair_model_max_atoms()
    if inst.n > cap:
        raise TooLarge(f"pair model needs at most {cap} atoms, got {inst.n}")
    reg = regular_top(inst)
    pairs = []
    for a in range(inst.full + 1):
        for x in range(inst.full + 1):
            if x & inst.j_top:
                continue
            if a & ~reg == x & ~reg:
                pairs.append((a, x))
    return pairs


def pair_theta(inst: Instance, alpha: int, pair: Pair) -> Pair:
    image = inst.actions[alpha].apply(pair[0])
    return image, image & ~inst.j_top


def _pair_join(p: Pair, q: Pair) -> Pair:
    return p[0] | q[0], p[1] | q[1]


def _pair_atoms(pairs: List[Pair]) -> List[Pair]:
    nonzero = [p for p in pairs if p != (0, 0)]
    return [
        p for p in nonzero
        if not any(q != p and q[0] & ~p[0] == 0 and q[1] & ~p[1] == 0 for q in nonzero)
    ]


def is_isomorphic_to_pair_model(prime: PrimeInstance, inst: Instance) -> bool:
    """Check the atom census, θ′ and the ideal data of B′ against the literal pair set."""
    pairs = pair_model(inst)
    reg = regular_top(inst)
    images = []
    for tag in prime.tags:
        bit = 1 << tag.atom
        images.append((bit, bit & ~reg) if tag.kind == "pair" else (0, bit))

    def phi(x: Element) -> Pair:
        out = (0, 0)
        for k in atoms_of(x):
            out = _pair_join(out, images[k])
        return out

    b_prime = prime.instance
    checks = {
        "atoms": sorted(images) == sorted(_pair_atoms(pairs)),
        "size": len(pairs) == 1 << b_prime.n,
        "bijective": sorted(phi(x) for x in range(b_prime.full + 1)) == sorted(pairs),
        "theta": all(
            phi(b_prime.theta(alpha, x)) == pair_theta(inst, alpha, phi(x))
            for alpha in range(len(inst.labels))
            for x in range(b_prime.full + 1)
        ),
        "ideals": all(
            phi(top) == (c, c & ~inst.j_top)
            for top, c in zip(b_prime.ideal_tops, inst.ideal_tops)
        ),
        "regular": phi(regular_top(b_prime)) == (reg, 0),
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        logger.debug("pair model check failed: %s", ", ".join(failed))
    return not failed
