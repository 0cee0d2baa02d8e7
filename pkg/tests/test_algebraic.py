import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entrate import (
    ZERO,
    build_symbol_matrices,
    gamma_map,
    stationary_distribution,
    symbol_mass,
    validate_model,
    word_measure,
)
from entrate.errors import SymbolOutOfRange

from conftest import random_model, random_simplex_point


def test_symbol_matrices_example1(sym1):
    E1_expected = np.array([[0.0, 0.0], [0.99 * 0.28, 0.99 * 0.72]])
    E0_expected = np.array([[0.85, 0.15], [0.01 * 0.28, 0.01 * 0.72]])
    np.testing.assert_allclose(sym1.mats[1], E1_expected, atol=1e-15)
    np.testing.assert_allclose(sym1.mats[0], E0_expected, atol=1e-15)


def test_symbol_matrices_sum_to_transition(example1, example2):
    for model in (example1, example2):
        sym = build_symbol_matrices(model)
        total = sum(sym.mats)
        np.testing.assert_allclose(total, model.transition.entries, atol=1e-14)


def test_stationary_example1(example1):
    tau = stationary_distribution(example1.transition)
    # 2-state closed form: (e_10, e_01) / (e_01 + e_10)
    np.testing.assert_allclose(tau, [0.28 / 0.43, 0.15 / 0.43], atol=1e-13)
    assert tau.sum() == pytest.approx(1.0, abs=1e-13)


def test_stationary_uniform():
    model = validate_model([[0.5, 0.5], [0.5, 0.5]], [0.5])
    tau = stationary_distribution(model.transition)
    np.testing.assert_allclose(tau, [0.5, 0.5], atol=1e-14)


def test_stationary_residual_random():
    rng = np.random.default_rng(3)
    for q in (2, 3, 4):
        model = random_model(rng, q)
        tau = stationary_distribution(model.transition)
        E = model.transition.entries
        assert np.abs(E.T @ tau - tau).sum() <= 1e-12


def test_word_measure_single_symbol(sym1, tau1):
    # mu((a)) = (1 - eps_a) * tau_a for a != 0
    assert word_measure(sym1, tau1, [1]) == pytest.approx(0.99 * tau1[1], abs=1e-14)


def test_word_measure_singletons_sum_to_one(sym1, tau1):
    total = sum(word_measure(sym1, tau1, [a]) for a in range(2))
    assert total == pytest.approx(1.0, abs=1e-13)


def test_word_measure_rejects_bad_symbol(sym1, tau1):
    with pytest.raises(SymbolOutOfRange):
        word_measure(sym1, tau1, [0, 2])
    with pytest.raises(SymbolOutOfRange):
        word_measure(sym1, tau1, [])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**31 - 1), st.integers(1, 10))
def test_word_measure_additivity(seed, length):
    rng = np.random.default_rng(seed)
    q = int(rng.integers(2, 5))
    model = random_model(rng, q)
    sym = build_symbol_matrices(model)
    tau = stationary_distribution(model.transition)
    word = list(rng.integers(0, q, size=length))
    mu_w = word_measure(sym, tau, word)
    extended = sum(word_measure(sym, tau, word + [a]) for a in range(q))
    prefixed = sum(word_measure(sym, tau, [a] + word) for a in range(q))
    assert extended == pytest.approx(mu_w, abs=1e-12)
    assert prefixed == pytest.approx(mu_w, abs=1e-12)


def test_word_measure_total_mass(sym2, tau2):
    for n in (1, 2, 4):
        total = sum(
            word_measure(sym2, tau2, w)
            for w in itertools.product(range(3), repeat=n)
        )
        assert total == pytest.approx(1.0, abs=1e-10)


def test_gamma0_example_point(sym1):
    out = gamma_map(sym1, 0, np.array([0.28, 0.72]))
    np.testing.assert_allclose(out, [0.8357103, 0.1642897], atol=1e-7)


def test_gamma_nonzero_symbol(sym1):
    out = gamma_map(sym1, 1, np.array([0.5, 0.5]))
    np.testing.assert_allclose(out, [0.28, 0.72], atol=1e-15)
    assert gamma_map(sym1, 1, np.array([1.0, 0.0])) is ZERO


def test_gamma0_bounds_random():
    rng = np.random.default_rng(11)
    for _ in range(50):
        q = int(rng.integers(2, 5))
        model = random_model(rng, q)
        sym = build_symbol_matrices(model)
        nu = random_simplex_point(rng, q)
        out = gamma_map(sym, 0, nu)
        assert out.sum() == pytest.approx(1.0, abs=1e-12)
        assert np.all(out >= model.p - 1e-12)
        assert np.all(out <= model.P + 1e-12)


def test_mass_identity_for_noise_symbol():
    # <nu, E_0 sigma> == nu_0 + sum_{a>=1} eps_a nu_a
    rng = np.random.default_rng(5)
    for _ in range(20):
        q = int(rng.integers(2, 5))
        model = random_model(rng, q)
        sym = build_symbol_matrices(model)
        nu = random_simplex_point(rng, q)
        direct = nu[0] + float(model.noise.epsilon @ nu[1:])
        assert symbol_mass(sym, 0, nu) == pytest.approx(direct, abs=1e-14)
