import numpy as np
import pytest

from entrate import build_symbol_matrices, stationary_distribution, validate_model

# q=2 worked example: E = [[0.85, 0.15], [0.28, 0.72]], eps = 0.01
EXAMPLE1_E = [[0.85, 0.15], [0.28, 0.72]]
EXAMPLE1_EPS = [0.01]

# q=3 worked example, eps = (0.01, 0.02)
EXAMPLE2_E = [[0.4, 0.25, 0.35], [0.25, 0.45, 0.3], [0.2, 0.55, 0.25]]
EXAMPLE2_EPS = [0.01, 0.02]


@pytest.fixture(scope="session")
def example1():
    return validate_model(EXAMPLE1_E, EXAMPLE1_EPS)


@pytest.fixture(scope="session")
def example2():
    return validate_model(EXAMPLE2_E, EXAMPLE2_EPS)


@pytest.fixture(scope="session")
def sym1(example1):
    return build_symbol_matrices(example1)


@pytest.fixture(scope="session")
def sym2(example2):
    return build_symbol_matrices(example2)


@pytest.fixture(scope="session")
def tau1(example1):
    return stationary_distribution(example1.transition)


@pytest.fixture(scope="session")
def tau2(example2):
    return stationary_distribution(example2.transition)


def random_model(rng, q):
    """A random strictly positive stochastic matrix with valid noise."""
    E = rng.uniform(0.05, 1.0, size=(q, q))
    E /= E.sum(axis=1, keepdims=True)
    eps = rng.uniform(0.005, 0.9, size=q - 1)
    return validate_model(E, eps)


def random_simplex_point(rng, q):
    x = rng.dirichlet(np.ones(q))
    return x / x.sum()
