"""Independent verification tools: exact block entropies and a simulator.

Nothing here shares code with the truncated-series pipeline beyond the
symbol matrices themselves: block entropies are computed by exhaustively
enumerating every word of a given length and summing -p log p over exact
cylinder probabilities, which gives the classical estimators S_n / n and
S_n - S_{n-1} that bracket the true entropy rate.
"""

from __future__ import annotations

import math
from typing import Dict, Sequence

import numpy as np

from .algebraic import SymbolMatrices, stationary_distribution
from .errors import BlockTooLarge
from .model import TransitionMatrix, ValidatedModel

WORD_COUNT_CAP = 10**7


def _check_block(q: int, n: int) -> None:
    if n < 1:
        raise BlockTooLarge(f"block length must be >= 1, got {n}")
    if q**n > WORD_COUNT_CAP:
        raise BlockTooLarge(f"{q}^{n} words exceeds the cap of {WORD_COUNT_CAP}")


def block_entropy(
    sym: SymbolMatrices, tau: np.ndarray, n: int, log_base: float = 2.0
) -> float:
    """Joint entropy S_n of the first n observed symbols, by enumeration.

    Depth-first over all q^n words, carrying the partial vector
    E_{w_k}^T ... E_{w_1}^T tau downward, so memory stays O(n q) while the
    leaf value is just the component sum. Words of probability zero
    contribute nothing (0 log 0 = 0).
    """
    _check_block(sym.q, n)
    matsT = [np.ascontiguousarray(M.T) for M in sym.mats]

    def descend(u: np.ndarray, depth: int) -> float:
        if depth == 0:
            prob = u.sum()
            return -prob * math.log(prob) if prob > 0.0 else 0.0
        return sum(descend(MT @ u, depth - 1) for MT in matsT)

    return descend(tau, n) / math.log(log_base)


def entropy_estimates(
    sym: SymbolMatrices, tau: np.ndarray, n: int, log_base: float = 2.0
) -> Dict[str, float]:
    """Both classical entropy-rate estimators at block length n.

    rate_avg = S_n / n and rate_cond = S_n - S_{n-1}; for a stationary
    process rate_cond is nonincreasing in n and converges to the entropy
    rate from above.
    """
    if n < 2:
        raise BlockTooLarge(f"estimators need n >= 2, got {n}")
    s_n = block_entropy(sym, tau, n, log_base)
    s_prev = block_entropy(sym, tau, n - 1, log_base)
    return {"rate_avg": s_n / n, "rate_cond": s_n - s_prev}


def markov_entropy_rate(transition: TransitionMatrix, log_base: float = 2.0) -> float:
    """Closed-form entropy rate of the clean (noise-free) Markov chain."""
    tau = stationary_distribution(transition)
    E = transition.entries
    total = -math.fsum(
        tau[i] * E[i, j] * math.log(E[i, j])
        for i in range(transition.q)
        for j in range(transition.q)
    )
    return total / math.log(log_base)


def simulate_path(model: ValidatedModel, length: int, seed: int) -> np.ndarray:
    """Sample an observed path of the hidden Markov process.

    The hidden chain starts from the stationary distribution; each hidden
    symbol a != 0 is emitted as 0 with probability epsilon_a and unchanged
    otherwise. Deterministic for a fixed seed.
    """
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    rng = np.random.default_rng(seed)
    q = model.q
    tau = stationary_distribution(model.transition)
    row_cum = np.cumsum(model.transition.entries, axis=1)

    hidden = np.empty(length, dtype=np.int64)
    u = rng.random(length)
    hidden[0] = np.searchsorted(np.cumsum(tau), u[0])
    for k in range(1, length):
        hidden[k] = np.searchsorted(row_cum[hidden[k - 1]], u[k])

    eps_full = model.noise.full(q)
    flips = rng.random(length)
    observed = hidden.copy()
    corrupt = (hidden != 0) & (flips < eps_full[hidden])
    observed[corrupt] = 0
    return observed


def empirical_word_frequency(path: Sequence[int], word: Sequence[int]) -> float:
    """Fraction of positions at which the path matches the given word."""
    path = np.asarray(path)
    word = np.asarray(word)
    n = len(word)
    if n == 0 or len(path) < n:
        return 0.0
    hits = np.ones(len(path) - n + 1, dtype=bool)
    for offset, symbol in enumerate(word):
        hits &= path[offset : len(path) - n + 1 + offset] == symbol
    return float(hits.mean())
