"""Finite Boolean algebra engine.

Elements are ``int`` bit masks over an :class:`AtomUniverse`. Union,
intersection and relative complement are ``|``, ``&`` and ``a & ~b``; the
helpers here cover everything that needs the universe: literals, canonical
ordering, principal ideals, quotients and dualization of atom image tables.
"""

import logging
from typing import List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from .errors import MalformedSyntax, NotDisjoint
from .schemas.algebra import UNDEFINED, AtomUniverse

logger = logging.getLogger(__name__)

Element = int

_ATOM_CHARS = frozenset("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_")
_WS = " \t"


def popcount(x: Element) -> int:
    return bin(x).count("1")


def atoms_of(x: Element) -> List[int]:
    """Indices of the atoms below ``x``, ascending."""
    out = []
    i = 0
    while x:
        if x & 1:
            out.append(i)
        x >>= 1
        i += 1
    return out


def is_subset(a: Element, b: Element) -> bool:
    return a & ~b == 0


def canonical_key(x: Element) -> Tuple[int, Tuple[int, ...]]:
    """Sort key for elements: size first, then atom indices lexicographically."""
    return popcount(x), tuple(atoms_of(x))


def subsets_of(x: Element):
    """All sub-elements of ``x`` including ∅ and ``x``."""
    sub = x
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & x


def render_element(universe: AtomUniverse, x: Element) -> str:
    return "{" + ",".join(universe.names[i] for i in atoms_of(x)) + "}"


def parse_element(universe: AtomUniverse, text: str) -> Element:
    """Parse ``'{' WS? (ATOM (WS? ',' WS? ATOM)*)? WS? '}'``.

    Raises:
        MalformedSyntax: with the 0-based offending position.
        UnknownAtom: for a well-formed identifier not in ``universe``.
    """
    pos = 0
    end = len(text)

    def skip_ws(p):
        while p < end and text[p] in _WS:
            p += 1
        return p

    def read_atom(p):
        start = p
        while p < end and text[p] in _ATOM_CHARS:
            p += 1
        if p == start:
            raise MalformedSyntax("expected atom", position=p)
        return text[start:p], p

    if pos >= end or text[pos] != "{":
        raise MalformedSyntax("expected '{'", position=pos)
    pos = skip_ws(pos + 1)
    mask = 0
    if pos < end and text[pos] == "}":
        pos += 1
    else:
        while True:
            name, pos = read_atom(pos)
            mask |= 1 << universe.index(name)
            pos = skip_ws(pos)
            if pos < end and text[pos] == ",":
                pos = skip_ws(pos + 1)
                continue
            if pos < end and text[pos] == "}":
                pos += 1
                break
            raise MalformedSyntax("expected ',' or '}'", position=pos)
    if pos != end:
        raise MalformedSyntax("trailing characters", position=pos)
    return mask


def dualize_action(universe: AtomUniverse, images: Sequence[Element]) -> Tuple[int, ...]:
    """Turn per-atom images θ({a}) into the dual partial map f.

    f(b) = a exactly when b lies in θ({a}). The table defines a Boolean
    homomorphism iff the atom images are pairwise disjoint.
    """
    n = universe.size
    if len(images) != n:
        raise ValueError(f"expected {n} atom images, got {len(images)}")
    dual = [UNDEFINED] * n
    for a, image in enumerate(images):
        if image & ~universe.full:
            raise ValueError(f"image of atom {universe.names[a]} leaves the universe")
        for b in atoms_of(image):
            if dual[b] != UNDEFINED:
                names = universe.names
                raise NotDisjoint(names[b], names[dual[b]], names[a])
            dual[b] = a
    return tuple(dual)


class PrincipalIdeal(BaseModel):
    """The ideal {X : X ⊆ top}. Every ideal of a finite Boolean algebra is one."""

    model_config = ConfigDict(frozen=True)

    top: Element

    def contains(self, x: Element) -> bool:
        return x & ~self.top == 0


class QuotientContext(BaseModel):
    """B / I_removed, whose elements are represented by ``A ∖ removed``."""

    model_config = ConfigDict(frozen=True)

    parent: AtomUniverse
    removed: Element

    @property
    def surviving(self) -> Element:
        return self.parent.full & ~self.removed

    def class_of(self, x: Element) -> Element:
        return x & ~self.removed

    def surviving_universe(self) -> AtomUniverse:
        return AtomUniverse(names=tuple(self.parent.names[i] for i in atoms_of(self.surviving)))

    def compress(self, x: Element) -> Element:
        """Re-index a class representative onto the surviving atoms."""
        out = 0
        for j, i in enumerate(atoms_of(self.surviving)):
            if x >> i & 1:
                out |= 1 << j
        return out

    def expand(self, y: Element) -> Element:
        out = 0
        for j, i in enumerate(atoms_of(self.surviving)):
            if y >> j & 1:
                out |= 1 << i
        return out


def quotient_map(ctx: QuotientContext, x: Element) -> Element:
    return ctx.class_of(x)
