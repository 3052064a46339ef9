"""Service layer exports."""
from edds.services.crosscheck import CorpusError, exhaustive_corpus, read_corpus, run_crosscheck
from edds.services.rendering import decision_out, solve_out, tag_map_out, verify_out

__all__ = [
    "CorpusError",
    "decision_out",
    "exhaustive_corpus",
    "read_corpus",
    "run_crosscheck",
    "solve_out",
    "tag_map_out",
    "verify_out",
]
