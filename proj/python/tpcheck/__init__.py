"""Three-valued LTL checking of partial Kripke structures with topological proofs."""

from ._core import (
    Analysis,
    Model,
    ParseError,
    PreconditionError,
    Proof,
    ResourceLimitError,
    analyze,
    analyze_file,
    is_refinement,
    is_revision,
    parse_model,
    parse_proof,
    recheck,
    run_cli,
)

__all__ = [
    "Analysis",
    "Model",
    "ParseError",
    "PreconditionError",
    "Proof",
    "ResourceLimitError",
    "analyze",
    "analyze_file",
    "is_refinement",
    "is_revision",
    "parse_model",
    "parse_proof",
    "recheck",
    "run_cli",
]
