import math

import numpy as np
import pytest

from entrate import (
    block_entropy,
    build_symbol_matrices,
    entropy_estimates,
    markov_entropy_rate,
    simulate_path,
    stationary_distribution,
    validate_model,
    word_measure,
)
from entrate.errors import BlockTooLarge
from entrate.oracle import empirical_word_frequency

from conftest import random_model


def binary_entropy(x):
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def test_block_entropy_single_letter(sym1, tau1):
    # marginal of symbol 0 is tau_0 + eps * tau_1
    mu0 = tau1[0] + 0.01 * tau1[1]
    assert block_entropy(sym1, tau1, 1) == pytest.approx(
        binary_entropy(mu0), abs=1e-13
    )


def test_block_entropy_iid_collapse():
    model = validate_model([[0.5, 0.5], [0.5, 0.5]], [0.5])
    sym = build_symbol_matrices(model)
    tau = stationary_distribution(model.transition)
    for n in (1, 2, 3):
        assert block_entropy(sym, tau, n) == pytest.approx(
            n * binary_entropy(0.75), abs=1e-12
        )


def test_block_entropy_monotone(sym1, tau1):
    values = [block_entropy(sym1, tau1, n) for n in range(1, 7)]
    for a, b in zip(values, values[1:]):
        assert b >= a - 1e-12


def test_block_entropy_cap(sym1, tau1):
    with pytest.raises(BlockTooLarge):
        block_entropy(sym1, tau1, 24)
    with pytest.raises(BlockTooLarge):
        block_entropy(sym1, tau1, 0)


def test_estimator_ordering(sym1, tau1):
    prev_cond = None
    for n in range(2, 8):
        est = entropy_estimates(sym1, tau1, n)
        assert est["rate_avg"] >= est["rate_cond"] - 1e-12
        if prev_cond is not None:
            assert est["rate_cond"] <= prev_cond + 1e-12
        prev_cond = est["rate_cond"]


def test_estimator_ordering_random():
    rng = np.random.default_rng(31)
    for q in (2, 3):
        model = random_model(rng, q)
        sym = build_symbol_matrices(model)
        tau = stationary_distribution(model.transition)
        prev = None
        for n in range(2, 6):
            cond = entropy_estimates(sym, tau, n)["rate_cond"]
            if prev is not None:
                assert cond <= prev + 1e-12
            prev = cond


def test_markov_entropy_rate_hand_formula(example1):
    tau = np.array([0.28, 0.15]) / 0.43
    E = np.array(example1.transition.entries)
    expected = -sum(
        tau[i] * E[i, j] * math.log2(E[i, j]) for i in range(2) for j in range(2)
    )
    assert markov_entropy_rate(example1.transition) == pytest.approx(
        expected, abs=1e-12
    )
    assert expected == pytest.approx(0.6955, abs=1e-4)


def test_markov_entropy_rate_uniform():
    model = validate_model(np.full((3, 3), 1 / 3), [0.1, 0.1])
    assert markov_entropy_rate(model.transition) == pytest.approx(
        math.log2(3), abs=1e-12
    )


def test_simulate_deterministic(example1):
    a = simulate_path(example1, 1000, seed=42)
    b = simulate_path(example1, 1000, seed=42)
    np.testing.assert_array_equal(a, b)
    c = simulate_path(example1, 1000, seed=43)
    assert np.any(a != c)


def test_simulate_unigram_frequencies(example1, sym1, tau1):
    length = 100_000
    path = simulate_path(example1, length, seed=7)
    tol = 3.0 / math.sqrt(length)
    for a in range(2):
        expected = word_measure(sym1, tau1, [a])
        assert abs((path == a).mean() - expected) <= tol


def test_simulate_word_frequencies(example1, sym1, tau1):
    length = 200_000
    path = simulate_path(example1, length, seed=19)
    for word in ([0, 0], [0, 1], [1, 1], [0, 1, 0], [1, 1, 1]):
        expected = word_measure(sym1, tau1, word)
        assert abs(empirical_word_frequency(path, word) - expected) <= 5e-3


def test_simulate_tiny_noise_tracks_hidden_chain(example1):
    model = validate_model(example1.transition.entries, [1e-9])
    path = simulate_path(model, 100_000, seed=3)
    # with eps ~ 1e-9 the observed unigram law matches the stationary law
    tau = stationary_distribution(model.transition)
    assert abs((path == 0).mean() - tau[0]) <= 3.0 / math.sqrt(100_000)
