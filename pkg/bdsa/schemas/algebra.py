"""Core algebraic data: atom universes, label actions and instances.

Elements of the finite Boolean algebra are plain ``int`` bit masks over the
atom universe: bit ``i`` stands for the ``i``-th declared atom. Every finite
Boolean algebra is the powerset of its atoms, so this loses nothing.
"""

import logging
import re
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator

from ..errors import UnknownAtom, UnknownLabel

logger = logging.getLogger(__name__)

IDENTIFIER = re.compile(r"^[A-Za-z0-9_]+$")

# Partial atom maps store this for "undefined".
UNDEFINED = -1


def _check_identifiers(values: Tuple[str, ...], kind: str) -> Tuple[str, ...]:
    seen = set()
    for name in values:
        if not IDENTIFIER.match(name):
            raise ValueError(f"invalid {kind} identifier {name!r}")
        if name in seen:
            raise ValueError(f"duplicate {kind} {name!r}")
        seen.add(name)
    return values


class AtomUniverse(BaseModel):
    """Ordered atoms of B; declaration order is the canonical order."""

    model_config = ConfigDict(frozen=True)

    names: Tuple[str, ...] = Field(default=(), description="Atom identifiers")

    _index: Dict[str, int] = PrivateAttr(default_factory=dict)

    @field_validator("names")
    @classmethod
    def _valid_names(cls, v):
        return _check_identifiers(tuple(v), "atom")

    def model_post_init(self, __context):
        self._index = {name: i for i, name in enumerate(self.names)}

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def full(self) -> int:
        return (1 << len(self.names)) - 1

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownAtom(name)

    def mask_of(self, names) -> int:
        mask = 0
        for name in names:
            mask |= 1 << self.index(name)
        return mask


class Action(BaseModel):
    """One label's Boolean homomorphism in its two synchronized forms.

    ``images[a]`` is θ({a}) as a mask; ``dual[b]`` is f(b), the unique atom
    whose image contains ``b``, or ``UNDEFINED``.
    """

    model_config = ConfigDict(frozen=True)

    images: Tuple[int, ...] = Field(..., description="θ({a}) per atom a")
    dual: Tuple[int, ...] = Field(..., description="Dual partial atom map f")

    def apply(self, mask: int) -> int:
        out = 0
        images = self.images
        i = 0
        while mask:
            if mask & 1:
                out |= images[i]
            mask >>= 1
            i += 1
        return out


class Instance(BaseModel):
    """A validated relative generalized Boolean dynamical system.

    Built through :func:`bdsa.bds.build_instance`; the constructor itself
    only checks shapes, not the algebraic side conditions.
    """

    model_config = ConfigDict(frozen=True)

    universe: AtomUniverse
    labels: Tuple[str, ...] = Field(default=(), description="Label identifiers")
    actions: Tuple[Action, ...] = Field(default=(), description="One action per label")
    ideal_tops: Tuple[int, ...] = Field(default=(), description="Top C_α of I_α per label")
    j_top: int = Field(0, description="Top of J")

    _label_index: Dict[str, int] = PrivateAttr(default_factory=dict)

    @field_validator("labels")
    @classmethod
    def _valid_labels(cls, v):
        return _check_identifiers(tuple(v), "label")

    def model_post_init(self, __context):
        if len(self.actions) != len(self.labels) or len(self.ideal_tops) != len(self.labels):
            raise ValueError("labels, actions and ideal_tops must have equal length")
        n = self.universe.size
        for action in self.actions:
            if len(action.images) != n or len(action.dual) != n:
                raise ValueError("action tables must cover every atom")
        self._label_index = {name: i for i, name in enumerate(self.labels)}

    @property
    def n(self) -> int:
        return self.universe.size

    @property
    def full(self) -> int:
        return self.universe.full

    def label_index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise UnknownLabel(label)

    def theta(self, alpha: int, mask: int) -> int:
        return self.actions[alpha].apply(mask)


class InstanceSpec(BaseModel):
    """An instance file after parsing, before algebraic validation.

    ``lines`` maps declaration keys (``"act x a"``, ``"ideal x"``, ``"J"``)
    to their source line so validation errors can point back at the file.
    """

    atoms: List[str] = Field(default_factory=list)
    labels: List[str] = Field(default_factory=list)
    images: Dict[str, Dict[str, int]] = Field(
        default_factory=dict, description="label -> atom -> image mask"
    )
    ideal_tops: Dict[str, int] = Field(default_factory=dict)
    j_top: Optional[int] = None
    lines: Dict[str, int] = Field(default_factory=dict)
