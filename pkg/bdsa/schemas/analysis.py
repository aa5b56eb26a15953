"""Witnesses and listings produced by the decision procedures.

All fields are index based (atom indices, label indices, element masks);
:mod:`bdsa.report` renders them with the instance's names.
"""

from typing import Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .algebra import Instance


class CycleWitness(BaseModel):
    """An exit-free cycle based at a single atom.

    ``trajectory[t]`` is θ_{word[:t]}({atom}); it starts and ends at
    ``{atom}`` and has ``len(word) + 1`` entries.
    """

    model_config = ConfigDict(frozen=True)

    word: Tuple[int, ...] = Field(..., description="Label indices, nonempty")
    atom: int = Field(..., description="Base atom index")
    trajectory: Tuple[int, ...] = Field(..., description="Element masks S_0..S_n")


class TailDescriptor(BaseModel):
    """A maximal tail T, stored through the top D of the ideal B ∖ T."""

    model_config = ConfigDict(frozen=True)

    complement_top: int
    cyclic: bool = False
    base: Optional[int] = Field(None, description="Base atom c of a cyclic tail")
    beta: Optional[Tuple[int, ...]] = Field(None, description="Primitive return word")


class UltrafilterCycle(BaseModel):
    model_config = ConfigDict(frozen=True)

    atom: int
    word: Tuple[int, ...]


class LatticeEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    top: int
    hereditary: bool
    saturated: bool
    j_saturated: bool


class GaugePair(BaseModel):
    """(H, S) by their tops: hTop ∪ jTop ⊆ sTop ⊆ top of B_H."""

    model_config = ConfigDict(frozen=True)

    h_top: int
    s_top: int


class LPreservation(BaseModel):
    model_config = ConfigDict(frozen=True)

    base: bool = Field(..., description="Condition (L) of the relative system")
    prime: bool = Field(..., description="Condition (L) of the constructed B′ system")
    expected_prime: bool = Field(
        ..., description="No exit-free cycle of the base whose atoms all lie in J"
    )


class AtomTag(BaseModel):
    """Origin of an atom of B′: ``pair`` for the diagonal copy of an atom,
    ``defect`` for the class [{a}]_J of a regular atom outside J."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["pair", "defect"]
    atom: int


class PrimeInstance(BaseModel):
    model_config = ConfigDict(frozen=True)

    instance: Instance
    tags: Tuple[AtomTag, ...] = Field(..., description="One tag per atom of B′")
