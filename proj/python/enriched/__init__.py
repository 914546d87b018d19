"""Finite enriched category kernel."""

from ._enriched import (
    Base,
    Document,
    EnrichedError,
    Report,
    Tally,
    bool_poset,
    check_document,
    check_kfold,
    construct,
    constructions,
    corpus,
    corpus_bases,
    delooped_cyclic,
    fuzz,
    run_cli,
    super_z2,
    zmod2,
)

EXIT_PASS = 0
EXIT_AXIOM_FAILURE = 1
EXIT_INPUT_ERROR = 2

__all__ = [
    "Base", "Document", "EnrichedError", "Report", "Tally",
    "bool_poset", "zmod2", "super_z2", "delooped_cyclic", "check_kfold",
    "corpus", "corpus_bases", "fuzz", "construct", "constructions",
    "check_document", "run_cli",
    "EXIT_PASS", "EXIT_AXIOM_FAILURE", "EXIT_INPUT_ERROR",
]
