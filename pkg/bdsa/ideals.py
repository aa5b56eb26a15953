"""Hereditary, saturated and J-saturated ideals.

Every ideal is principal and handled through its top ``D``. The predicates
work atom by atom:

* ``D`` is hereditary iff θ_α(D) ⊆ D for every label α.
* ``D`` is saturated iff no regular atom ``a ∉ D`` has all its images
  θ_α({a}) inside ``D``; J-saturation restricts the atoms considered to J.

On top of these sit H(A), the least saturated hereditary ideal over an
ideal, the full lattice, quotient systems and the gauge-invariant pairs.
"""

import logging
from typing import List, Optional, Tuple

from .bds import assemble_instance, regular_top, regular_top_of_tables
from .boolcore import (
    Element,
    PrincipalIdeal,
    QuotientContext,
    atoms_of,
    canonical_key,
    is_subset,
    render_element,
    subsets_of,
)
from .config import Config
from .errors import CrossCheckMismatch, NotHereditary, RelativeJNotSupported, TooLarge
from .schemas.algebra import Instance
from .schemas.analysis import GaugePair, LatticeEntry

logger = logging.getLogger(__name__)

SATURATED = "saturated"
J_SATURATED = "j-saturated"
LATTICE_MODES = (SATURATED, J_SATURATED)


def require_enumerable(inst: Instance) -> None:
    """Guard for 2^n scans: the soft cap comes from ``BDSA_MAX_ATOMS`` or config."""
    cap = Config.get_limits_max_atoms()
    if inst.n > cap:
        raise TooLarge(f"{inst.n} atoms exceed the enumeration cap of {cap}")


""" predicates """


def is_hereditary_top(inst: Instance, top: Element) -> bool:
    return all(is_subset(action.apply(top), top) for action in inst.actions)


def unsaturated_atoms(inst: Instance, top: Element, among: Element) -> Element:
    """Atoms of ``among`` outside ``top`` whose every image lies inside ``top``."""
    out = 0
    for a in atoms_of(among & ~top):
        if all(is_subset(action.images[a], top) for action in inst.actions):
            out |= 1 << a
    return out


def is_saturated_top(inst: Instance, top: Element, among: Optional[Element] = None) -> bool:
    if among is None:
        among = regular_top(inst)
    return unsaturated_atoms(inst, top, among) == 0


def is_j_saturated_top(inst: Instance, top: Element, j_top: Optional[Element] = None) -> bool:
    return is_saturated_top(inst, top, inst.j_top if j_top is None else j_top)


""" closures """


def hereditary_closure(inst: Instance, x: Element) -> PrincipalIdeal:
    """H(x): the smallest hereditary ideal containing ``x``."""
    top = x
    while True:
        grown = top
        for action in inst.actions:
            grown |= action.apply(top)
        if grown == top:
            return PrincipalIdeal(top=top)
        top = grown


def saturate(inst: Instance, top: Element, among: Element) -> Element:
    """Add forced atoms of ``among`` until none is left; at most n rounds."""
    rounds = 0
    while True:
        forced = unsaturated_atoms(inst, top, among)
        if not forced:
            logger.debug("saturation stabilised after %d rounds", rounds)
            return top
        top |= forced
        rounds += 1


def saturation_S(inst: Instance, ideal: PrincipalIdeal) -> PrincipalIdeal:
    """The least saturated hereditary ideal containing a hereditary ideal."""
    if not is_hereditary_top(inst, ideal.top):
        raise NotHereditary(render_element(inst.universe, ideal.top))
    return PrincipalIdeal(top=saturate(inst, ideal.top, regular_top(inst)))


""" lattice """


def enumerate_lattice(
    inst: Instance, mode: str = SATURATED, j_top: Optional[Element] = None
) -> List[LatticeEntry]:
    """All hereditary tops that are saturated (or J-saturated), canonically sorted.

    ``j_top`` overrides the instance's J for the J-saturated flag.
    """
    if mode not in LATTICE_MODES:
        raise ValueError(f"unknown lattice mode {mode!r}; expected one of {LATTICE_MODES}")
    require_enumerable(inst)
    reg = regular_top(inst)
    j = inst.j_top if j_top is None else j_top
    entries = []
    for top in range(inst.full + 1):
        if not is_hereditary_top(inst, top):
            continue
        saturated = is_saturated_top(inst, top, reg)
        j_saturated = is_saturated_top(inst, top, j)
        if (saturated if mode == SATURATED else j_saturated):
            entries.append(
                LatticeEntry(top=top, hereditary=True, saturated=saturated, j_saturated=j_saturated)
            )
    entries.sort(key=lambda e: canonical_key(e.top))
    return entries


""" quotients """


def quotient_instance(
    inst: Instance, ideal: PrincipalIdeal, s_top: Optional[Element] = None
) -> Instance:
    """(B/H, L, θ, [I_α]; [J]) on the surviving atoms.

    With ``s_top`` the quotient carries [S] as its J, as for the quotient by
    the gauge-invariant ideal of a pair (H, S).
    """
    top = ideal.top
    if not is_hereditary_top(inst, top):
        raise NotHereditary(render_element(inst.universe, top))
    ctx = QuotientContext(parent=inst.universe, removed=top)
    universe = ctx.surviving_universe()
    surviving = atoms_of(ctx.surviving)
    tables = []
    for action in inst.actions:
        tables.append([ctx.compress(ctx.class_of(action.images[a])) for a in surviving])
    ideal_tops = [ctx.compress(ctx.class_of(c)) for c in inst.ideal_tops]

    j_source = inst.j_top if s_top is None else s_top
    j = ctx.compress(ctx.class_of(j_source))
    quotient_reg = regular_top_of_tables(tables)
    if not is_subset(j, quotient_reg):
        logger.warning(
            "quotient by %s: pushed-forward J %s is not regular, clipping",
            render_element(inst.universe, top),
            render_element(universe, j),
        )
        j &= quotient_reg
    return assemble_instance(universe, inst.labels, tables, ideal_tops, j)


""" gauge-invariant ideals """


def b_h_top(inst: Instance, top: Element) -> Element:
    """Top of B_H = {A : [A]_H regular in B/H}."""
    out = top
    for a in atoms_of(inst.full & ~top):
        if any(action.images[a] & ~top for action in inst.actions):
            out |= 1 << a
    return out


def gauge_pairs(inst: Instance, j_top: Optional[Element] = None) -> List[GaugePair]:
    """Pairs (H, S) with H hereditary J-saturated and H ∪ J ⊆ S ⊆ B_H.

    They are in order-preserving bijection with the gauge-invariant ideals
    of C*(B, L, θ, I_α; J).
    """
    j = inst.j_top if j_top is None else j_top
    pairs = []
    for entry in enumerate_lattice(inst, J_SATURATED, j_top=j):
        h = entry.top
        upper = b_h_top(inst, h)
        lower = h | j
        if not is_subset(lower, upper):
            raise AssertionError(
                f"H ∪ J = {render_element(inst.universe, lower)} escapes B_H for "
                f"H = {render_element(inst.universe, h)}"
            )
        for extra in subsets_of(upper & ~lower):
            pairs.append(GaugePair(h_top=h, s_top=lower | extra))
    pairs.sort(key=lambda p: (canonical_key(p.h_top), canonical_key(p.s_top)))
    return pairs


def pair_leq(p: GaugePair, q: GaugePair) -> bool:
    return is_subset(p.h_top, q.h_top) and is_subset(p.s_top, q.s_top)


def pair_quotient(inst: Instance, pair: GaugePair) -> Instance:
    return quotient_instance(inst, PrincipalIdeal(top=pair.h_top), s_top=pair.s_top)


""" minimality and simplicity """

LATTICE = "lattice"
UNIQUE_TAIL = "unique-tail"
CLOSURE = "closure"
GAUGE = "gauge"
MINIMALITY_ROUTES = (LATTICE, UNIQUE_TAIL, CLOSURE, GAUGE)


def minimality_witness(inst: Instance) -> Optional[Element]:
    """Canonically first saturated hereditary top other than ∅ and the full top."""
    for entry in enumerate_lattice(inst, SATURATED):
        if entry.top not in (0, inst.full):
            return entry.top
    return None


def _minimal_by_lattice(inst: Instance) -> bool:
    return minimality_witness(inst) is None


def _minimal_by_unique_tail(inst: Instance) -> bool:
    from .props import enumerate_maximal_tails

    if inst.n == 0:
        return True
    return [t.complement_top for t in enumerate_maximal_tails(inst)] == [0]


def _minimal_by_closure(inst: Instance) -> bool:
    for a in range(inst.n):
        if saturation_S(inst, hereditary_closure(inst, 1 << a)).top != inst.full:
            return False
    return True


def _minimal_by_gauge(inst: Instance) -> bool:
    """Count the gauge-invariant ideals of the non-relative algebra.

    With J = B_reg an atom outside H with an image outside H is regular and
    already in S, so every saturated H carries the single pair (H, H ∪ B_reg).
    The count therefore re-reads the saturated lattice through
    :func:`gauge_pairs` and :func:`b_h_top`; it checks that enumeration, not an
    independent characterisation of minimality.
    """
    count = len(gauge_pairs(inst, j_top=regular_top(inst)))
    return count == (1 if inst.n == 0 else 2)


_MINIMALITY_ROUTE_FUNCS = {
    LATTICE: _minimal_by_lattice,
    UNIQUE_TAIL: _minimal_by_unique_tail,
    CLOSURE: _minimal_by_closure,
    GAUGE: _minimal_by_gauge,
}


def is_minimal(inst: Instance, route: str = "all") -> bool:
    """{∅} and B are the only saturated hereditary ideals.

    ``all`` evaluates every route, raises on disagreement and answers with
    the lattice route.
    """
    if route != "all":
        if route not in _MINIMALITY_ROUTE_FUNCS:
            raise ValueError(f"unknown minimality route {route!r}; expected one of {MINIMALITY_ROUTES}")
        return _MINIMALITY_ROUTE_FUNCS[route](inst)
    verdicts = {name: func(inst) for name, func in _MINIMALITY_ROUTE_FUNCS.items()}
    if len(set(verdicts.values())) != 1:
        logger.error("minimality routes disagree: %s", verdicts, extra={"route": "all"})
        raise CrossCheckMismatch("minimality", verdicts)
    return verdicts[LATTICE]


def is_simple(inst: Instance) -> Tuple[bool, str]:
    """Simplicity of C*(B, L, θ, I_α) with a one-line explanation.

    Only defined for J = B_reg. The minimal ∧ (L) verdict is checked against
    the unique non-cyclic tail criterion and against minimal ∧ (K).
    """
    from .bds import render_word
    from .props import check_condition_K, check_condition_L, enumerate_maximal_tails

    reg = regular_top(inst)
    if inst.j_top != reg:
        raise RelativeJNotSupported(
            f"J top {render_element(inst.universe, inst.j_top)} is below the regular top "
            f"{render_element(inst.universe, reg)}"
        )
    minimal = is_minimal(inst)
    holds_l, witness = check_condition_L(inst)
    verdict = minimal and holds_l

    if inst.n == 0:
        by_tails = True
    else:
        tails = enumerate_maximal_tails(inst)
        by_tails = len(tails) == 1 and tails[0].complement_top == 0 and not tails[0].cyclic
    by_k = minimal and check_condition_K(inst)
    verdicts = {"minimal-and-L": verdict, "unique-noncyclic-tail": by_tails, "minimal-and-K": by_k}
    if len(set(verdicts.values())) != 1:
        logger.error("simplicity routes disagree: %s", verdicts, extra={"route": "all"})
        raise CrossCheckMismatch("simplicity", verdicts)

    if not minimal:
        top = minimality_witness(inst)
        return False, f"not minimal; saturated hereditary ideal top={render_element(inst.universe, top)}"
    if not holds_l:
        return False, (
            f"Condition (L) fails; cycle word={render_word(inst, witness.word)} "
            f"base={inst.universe.names[witness.atom]}"
        )
    return True, "minimal and Condition (L) holds"
