from .brute import (
    TailAxioms,
    brute_condition_L,
    brute_minimality_45,
    brute_saturation_formula,
    brute_tail_axioms,
)
from .corpus import CorpusEntry, CorpusResult, crosscheck_instance, run_corpus, run_corpus_async
from .digraph import ImportedGraph, classical_graph_verdicts, import_digraph
from .generator import corpus_params, random_digraph, random_instance

__all__ = [
    "TailAxioms",
    "brute_condition_L",
    "brute_minimality_45",
    "brute_saturation_formula",
    "brute_tail_axioms",
    "CorpusEntry",
    "CorpusResult",
    "crosscheck_instance",
    "run_corpus",
    "run_corpus_async",
    "ImportedGraph",
    "classical_graph_verdicts",
    "import_digraph",
    "corpus_params",
    "random_digraph",
    "random_instance",
]
