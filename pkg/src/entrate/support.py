"""Support atlas: orbit points of the noise-symbol map and their weights.

The support of the invariant measure on the simplex is the closure of the
orbits {Gamma_0^m e_j} for j = 1..q-1, whose single accumulation point is
the fixed point tau_bar of Gamma_0. Each orbit point carries the weight
coefficient

    c_{j,m} = prod_{i=1}^{m} <Gamma_0^{m-i} e_j, E_0 sigma>

relative to the mass of e_j. The coefficients decay geometrically, bounded
by gamma^m (orbit-defined rate) and, when eps_max < p, by r^m with the
closed-form rate r = 1 - (q-1)(p - eps_max * P).

Chains are always built to the full requested depth. The orbits contract
toward tau_bar much faster than the coefficients decay (at rate of order
eps rather than r), so points typically coincide with tau_bar to within any
reasonable tolerance long before their weights become negligible; dropping
them there would corrupt the truncated series. Coincidence within dedup_tol
is therefore only recorded (finite_support, settled_at), never used to cut
a chain short.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

import numpy as np

from .algebraic import (
    POWER_ITERATION_CAP,
    SymbolMatrices,
    gamma_map,
    symbol_mass,
)
from .errors import GammaNotContractive, NoConvergence

DEDUP_TOL_DEFAULT = 1e-12

# agreement required between the iterative and eigen routes to tau_bar
_TAU_BAR_CROSSCHECK_TOL = 1e-10


@dataclass(frozen=True)
class SupportAtlas:
    """Orbit points Gamma_0^m e_j with their weight coefficients.

    chains[j-1][m] is Gamma_0^m e_j and coeffs[j-1][m] the matching c_{j,m}
    (c_{j,0} == 1, the empty product). settled_at[j-1] is the first index at
    which the chain came within dedup_tol (L1) of tau_bar or of one of its
    own earlier points, or None if it never did; finite_support is True iff
    any chain settled.
    """

    tau_bar: np.ndarray
    chains: Tuple[Tuple[np.ndarray, ...], ...]
    coeffs: Tuple[Tuple[float, ...], ...]
    N: int
    finite_support: bool
    settled_at: Tuple[Optional[int], ...]
    dedup_tol: float

    def points(self) -> Iterator[Tuple[int, int, np.ndarray, float]]:
        """Yield (j, m, point, c_{j,m}) over all stored orbit points."""
        for idx, (chain, cs) in enumerate(zip(self.chains, self.coeffs)):
            for m, (w, c) in enumerate(zip(chain, cs)):
                yield idx + 1, m, w, c

    def to_csv(self, fh=None) -> str:
        """Write the atlas as CSV (one row per point); returns the text."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        q = len(self.tau_bar)
        writer.writerow(["j", "m"] + [f"w_{a}" for a in range(q)] + ["c_jm"])
        for j, m, w, c in self.points():
            writer.writerow([j, m] + [f"{x:.14g}" for x in w] + [f"{c:.14g}"])
        text = buf.getvalue()
        if fh is not None:
            fh.write(text)
        return text


@dataclass(frozen=True)
class ContractionRates:
    """Coefficient decay rates: the orbit-sampled estimate and the rigorous bound.

    gamma_hat is sampled from the computed orbit (plus the limit point), so
    it is an estimate, not a guarantee. r is the closed-form bound, present
    only when eps_max < p; it is the one used for reported error bounds.
    """

    gamma_hat: float
    r: Optional[float]


def fixed_point_tau_bar(sym: SymbolMatrices, tol: float = 1e-13) -> np.ndarray:
    """The unique nontrivial fixed point of the noise-symbol map Gamma_0.

    Computed by iterating Gamma_0 from the uniform vector and cross-checked
    against the Perron eigenvector of E_0 transposed; the two routes must
    agree to 1e-10 or the computation is rejected.
    """
    v = np.full(sym.q, 1.0 / sym.q)
    for _ in range(POWER_ITERATION_CAP):
        nv = gamma_map(sym, 0, v)
        if np.abs(nv - v).sum() <= tol:
            break
        v = nv
    else:
        raise NoConvergence("fixed-point iteration for tau_bar stalled")

    eigvals, eigvecs = np.linalg.eig(sym.mats[0].T)
    lead = np.argmax(eigvals.real)
    perron = np.abs(eigvecs[:, lead].real)
    perron /= perron.sum()
    if np.abs(nv - perron).sum() > _TAU_BAR_CROSSCHECK_TOL:
        raise NoConvergence(
            "iterative and eigenvector routes to tau_bar disagree: "
            f"L1 gap {np.abs(nv - perron).sum():.3e}"
        )
    return nv


def compute_support(
    sym: SymbolMatrices, N: int, dedup_tol: float = DEDUP_TOL_DEFAULT
) -> SupportAtlas:
    """Build the orbit chains to depth N with their weight coefficients."""
    tau_bar = fixed_point_tau_bar(sym)
    chains = []
    coeffs = []
    settled = []
    for j in range(1, sym.q):
        pts = [np.asarray(sym.rows[j])]
        cs = [1.0]
        settle: Optional[int] = None
        if np.abs(pts[0] - tau_bar).sum() < dedup_tol:
            settle = 0
        for m in range(1, N + 1):
            prev = pts[-1]
            cs.append(cs[-1] * symbol_mass(sym, 0, prev))
            cur = gamma_map(sym, 0, prev)
            pts.append(cur)
            if settle is None and (
                np.abs(cur - tau_bar).sum() < dedup_tol
                or any(np.abs(cur - w).sum() < dedup_tol for w in pts[:-1])
            ):
                settle = m
        chains.append(tuple(pts))
        coeffs.append(tuple(cs))
        settled.append(settle)
    return SupportAtlas(
        tau_bar=tau_bar,
        chains=tuple(chains),
        coeffs=tuple(coeffs),
        N=N,
        finite_support=any(s is not None for s in settled),
        settled_at=tuple(settled),
        dedup_tol=dedup_tol,
    )


def contraction_rates(sym: SymbolMatrices, atlas: SupportAtlas) -> ContractionRates:
    """Estimate gamma from the stored orbit and compute the closed-form r.

    gamma_hat maximizes sum_a eps_a * [point]_a over every stored orbit
    point and the limit point tau_bar. r = 1 - (q-1)(p - eps_max * P) is
    returned only when eps_max < p.
    """
    eps = sym.eps_full
    gamma_hat = float(eps @ atlas.tau_bar)
    for _, _, w, _ in atlas.points():
        gamma_hat = max(gamma_hat, float(eps @ w))
    if gamma_hat >= 1.0:
        raise GammaNotContractive(f"gamma estimate {gamma_hat} >= 1")

    q = sym.q
    entries = np.concatenate([row for row in sym.rows])
    p = float(entries.min())
    P = float(entries.max())
    eps_max = float(eps[1:].max())
    r: Optional[float] = None
    if eps_max < p:
        r = 1.0 - (q - 1) * (p - eps_max * P)
    return ContractionRates(gamma_hat=gamma_hat, r=r)
