"""Conditional sequent logic: syntax, tower semantics, proof checking."""

from .corpus import ProofBuilder, build_corpus
from .proofs import (
    Derivation,
    ProofStep,
    RULES,
    StepReport,
    check_derivation,
    derivation_from_json,
    derivation_to_json,
    is_tautology,
)
from .search import Counterexample, default_bases, search_counterexample
from .semantics import Valuation, evaluate, holds, random_valuation
from .syntax import (
    BOT,
    Cond,
    Formula,
    FormulaParseError,
    Impl,
    Sequent,
    TOP,
    Var,
    format_formula,
    format_sequent,
    parse_formula,
    parse_sequent,
)

__all__ = [
    "BOT",
    "Cond",
    "Counterexample",
    "Derivation",
    "Formula",
    "FormulaParseError",
    "Impl",
    "ProofBuilder",
    "ProofStep",
    "RULES",
    "Sequent",
    "StepReport",
    "TOP",
    "Valuation",
    "Var",
    "build_corpus",
    "check_derivation",
    "default_bases",
    "derivation_from_json",
    "derivation_to_json",
    "evaluate",
    "format_formula",
    "format_sequent",
    "holds",
    "is_tautology",
    "parse_formula",
    "parse_sequent",
    "random_valuation",
    "search_counterexample",
]
