"""Entropy rate of hidden Markov processes with an unambiguous noise symbol.

Pipeline: validate a model (strictly positive transition matrix + noise
vector), build the symbol matrices, compute the support atlas on the
simplex, solve the truncated linear system for the point weights, and sum
the entropy series H_N with a computable error bound. An exhaustive
block-entropy oracle provides independent verification.
"""

from .algebraic import (
    ZERO,
    SymbolMatrices,
    build_symbol_matrices,
    gamma_map,
    stationary_distribution,
    symbol_mass,
    word_measure,
)
from .entropy import (
    EntropySolution,
    LinearSystem,
    assemble_system,
    entropy_rate,
    solve_phi,
    symbol_entropy_h,
)
from .model import (
    Condition1Report,
    NoiseSpec,
    TransitionMatrix,
    ValidatedModel,
    check_condition1,
    validate_model,
)
from .oracle import (
    block_entropy,
    entropy_estimates,
    markov_entropy_rate,
    simulate_path,
)
from .support import (
    ContractionRates,
    SupportAtlas,
    compute_support,
    contraction_rates,
    fixed_point_tau_bar,
)

__version__ = "0.1.0"

__all__ = [
    "ZERO",
    "SymbolMatrices",
    "build_symbol_matrices",
    "gamma_map",
    "stationary_distribution",
    "symbol_mass",
    "word_measure",
    "EntropySolution",
    "LinearSystem",
    "assemble_system",
    "entropy_rate",
    "solve_phi",
    "symbol_entropy_h",
    "Condition1Report",
    "NoiseSpec",
    "TransitionMatrix",
    "ValidatedModel",
    "check_condition1",
    "validate_model",
    "block_entropy",
    "entropy_estimates",
    "markov_entropy_rate",
    "simulate_path",
    "ContractionRates",
    "SupportAtlas",
    "compute_support",
    "contraction_rates",
    "fixed_point_tau_bar",
]
