"""Symbol matrices, cylinder-word probabilities and the simplex maps.

The stationary process is represented by the family {E_a} of nonnegative
matrices: E_a = (1 - epsilon_a) F_a for a != 0 and
E_0 = F_0 + sum_a epsilon_a F_a, where F_a keeps only row a of the
transition matrix. A word w then has probability
mu(w) = <tau, E_{w_1} ... E_{w_n} sigma> with tau the stationary
distribution and sigma the all-ones vector. sigma is never materialized:
<x, E_a sigma> is the dot product of x with the row-sum vector of E_a.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import NoConvergence, SymbolOutOfRange
from .model import TransitionMatrix, ValidatedModel, _frozen

SIMPLEX_TOL = 1e-12

POWER_ITERATION_TOL = 1e-14
POWER_ITERATION_CAP = 10**6


class _Zero:
    """Sentinel for the out-of-simplex value of the posterior-update maps.

    Distinct from the numeric zero vector; a map that has nowhere to send a
    point returns this instead of an array.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"


ZERO = _Zero()

SimplexPoint = np.ndarray  # length-q, nonnegative, sums to 1
GammaResult = Union[np.ndarray, _Zero]


@dataclass(frozen=True)
class SymbolMatrices:
    """The family {E_a} for one model, plus precomputed helpers.

    rows[a] is the a-th row of the transition matrix (the point e_a on the
    simplex); row_mass[a] is the row-sum vector of E_a, so that
    <x, E_a sigma> == x @ row_mass[a]; eps_full is (1, eps_1, ..., eps_{q-1}).
    """

    q: int
    mats: tuple
    rows: tuple
    row_mass: tuple
    eps_full: np.ndarray


def build_symbol_matrices(model: ValidatedModel) -> SymbolMatrices:
    """Construct the symbol matrices {E_a} of a validated model."""
    E = model.transition.entries
    q = model.q
    eps_full = model.noise.full(q)

    F = []
    for a in range(q):
        Fa = np.zeros((q, q))
        Fa[a, :] = E[a, :]
        F.append(Fa)

    mats = [F[0] + sum(eps_full[a] * F[a] for a in range(1, q))]
    mats.extend((1.0 - eps_full[a]) * F[a] for a in range(1, q))

    return SymbolMatrices(
        q=q,
        mats=tuple(_frozen(M) for M in mats),
        rows=tuple(_frozen(E[a, :]) for a in range(q)),
        row_mass=tuple(_frozen(M.sum(axis=1)) for M in mats),
        eps_full=_frozen(eps_full),
    )


def symbol_mass(sym: SymbolMatrices, a: int, x: np.ndarray) -> float:
    """<x, E_a sigma>: the probability mass symbol a receives from belief x."""
    return float(x @ sym.row_mass[a])


def stationary_distribution(transition: TransitionMatrix) -> np.ndarray:
    """Stationary distribution of a strictly positive transition matrix.

    Power iteration from the uniform vector with L1 renormalization;
    geometric convergence is guaranteed by strict positivity.
    """
    E = transition.entries
    q = transition.q
    v = np.full(q, 1.0 / q)
    for _ in range(POWER_ITERATION_CAP):
        nv = E.T @ v
        nv /= nv.sum()
        if np.abs(nv - v).sum() < POWER_ITERATION_TOL:
            if np.abs(E.T @ nv - nv).sum() > SIMPLEX_TOL:
                break
            return nv
        v = nv
    raise NoConvergence("power iteration for the stationary distribution stalled")


def word_measure(
    sym: SymbolMatrices, tau: np.ndarray, word: Sequence[int]
) -> float:
    """Probability mu(w) of observing the word w.

    Evaluated as left-to-right vector-matrix products starting from tau,
    O(n q^2) instead of the O(n q^3) of full matrix products.
    """
    if len(word) == 0:
        raise SymbolOutOfRange("word must be nonempty")
    v = tau
    for a in word:
        if not 0 <= a < sym.q:
            raise SymbolOutOfRange(f"symbol {a} outside alphabet of size {sym.q}")
        v = sym.mats[a].T @ v
    return float(v.sum())


def gamma_map(sym: SymbolMatrices, a: int, nu: np.ndarray) -> GammaResult:
    """Posterior-update map for symbol a applied to the belief nu.

    For a == 0 the image is the convex combination of the transition-matrix
    rows with weights proportional to eps_a * nu_a, so every component lies
    in [p, P]. For a != 0 the image collapses to the row e_a, or to the
    distinguished ZERO value when nu puts no mass on a.
    """
    if not 0 <= a < sym.q:
        raise SymbolOutOfRange(f"symbol {a} outside alphabet of size {sym.q}")
    if a != 0:
        if nu[a] != 0.0:
            return sym.rows[a]
        return ZERO
    weights = sym.eps_full * nu
    total = weights.sum()
    if total == 0.0:
        return ZERO
    out = np.zeros(sym.q)
    for b in range(sym.q):
        out += weights[b] * sym.rows[b]
    return out / total
