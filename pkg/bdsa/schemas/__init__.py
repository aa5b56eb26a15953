from .algebra import Action, AtomUniverse, Instance, InstanceSpec
from .analysis import (
    AtomTag,
    CycleWitness,
    GaugePair,
    LatticeEntry,
    LPreservation,
    PrimeInstance,
    TailDescriptor,
    UltrafilterCycle,
)
from .color import Color
from .generator import GeneratorParams
from .graph import Edge, TopGraph, VertexClasses
from .report import AnalysisReport

__all__ = [
    "Action",
    "AtomUniverse",
    "Instance",
    "InstanceSpec",
    "AtomTag",
    "CycleWitness",
    "GaugePair",
    "LatticeEntry",
    "LPreservation",
    "PrimeInstance",
    "TailDescriptor",
    "UltrafilterCycle",
    "Color",
    "GeneratorParams",
    "Edge",
    "TopGraph",
    "VertexClasses",
    "AnalysisReport",
]
