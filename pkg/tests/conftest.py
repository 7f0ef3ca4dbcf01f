import sys
from pathlib import Path

import numpy as np
import pytest

from subjaccard import (
    GroundSet,
    bipartite_neighborhood,
    budgeted_linear,
    cardinality,
    joint_entropy,
    partition_matroid_rank,
    uniform_matroid_rank,
)
from subjaccard.setfun import random_weighted_modular, submodular_table_pool

sys.path.insert(0, str(Path(__file__).parent))

G6 = GroundSet.of_size(6)


def modular_pool():
    """50 seeded weighted_modular specs on n=6; even seeds have gamma > 0."""
    return [random_weighted_modular(G6, seed, positive_offset=seed % 2 == 0) for seed in range(50)]


def random_bipartite(n_left, n_right, seed, p=0.4):
    rng = np.random.default_rng(seed)
    g = GroundSet(f"u{i}" for i in range(1, n_left + 1))
    right = [f"v{j}" for j in range(1, n_right + 1)]
    edges = [(u, v) for u in g.labels for v in right if rng.random() < p]
    return bipartite_neighborhood(g, right, edges)


def complete_2x1():
    return bipartite_neighborhood(GroundSet(["u1", "u2"]), ["v1"], [("u1", "v1"), ("u2", "v1")])


def budget_unit_2():
    return budgeted_linear(GroundSet.of_size(2), [1, 1], 1)


def random_entropy(seed, n=4):
    rng = np.random.default_rng(seed)
    p = rng.random(2**n)
    return joint_entropy(GroundSet.of_size(n), (p / p.sum()).reshape((2,) * n))


def xor_entropy():
    # X3 = X1 xor X2 with X1, X2 uniform; X4 uniform and independent
    p = np.zeros((2, 2, 2, 2))
    for a in range(2):
        for b in range(2):
            for d in range(2):
                p[a, b, a ^ b, d] = 1 / 8
    return joint_entropy(GroundSet.of_size(4), p)


def uniform_bits_entropy(n=4):
    return joint_entropy(GroundSet.of_size(n), np.full((2,) * n, 1 / 2**n))


def submodular_family_pool():
    """Built-in submodular families on n <= 6 (entropy on 4 binary variables)."""
    pool = [
        ("budgeted_linear B=1 unit n=2", budget_unit_2()),
        ("budgeted_linear n=6", budgeted_linear(G6, [1, 2, 3, 1, 2, 5], 6)),
        ("budgeted_linear n=6 rational", budgeted_linear(G6, ["1/2", "3/4", 1, 2, "5/3", 0], "7/2")),
        ("bipartite complete 2x1", complete_2x1()),
        ("bipartite random 6x4 s1", random_bipartite(6, 4, 1)),
        ("bipartite random 6x5 s2", random_bipartite(6, 5, 2)),
        ("uniform k=1 n=3", uniform_matroid_rank(GroundSet.of_size(3), 1)),
        ("uniform k=2 n=6", uniform_matroid_rank(G6, 2)),
        ("uniform k=4 n=6", uniform_matroid_rank(G6, 4)),
        ("partition n=6", partition_matroid_rank(G6, [["1", "2"], ["3", "4", "5"], ["6"]], [1, 2, 1])),
        ("partition n=5", partition_matroid_rank(GroundSet.of_size(5), [["1", "3"], ["2", "4", "5"]], [1, 1])),
        ("entropy random s0", random_entropy(0)),
        ("entropy random s1", random_entropy(1)),
        ("entropy xor", xor_entropy()),
        ("entropy uniform bits", uniform_bits_entropy()),
        ("cardinality n=6", cardinality(G6)),
    ]
    return pool


def submodular_tables(count=25):
    return [(f"closure table seed={s}", spec) for s, spec in submodular_table_pool(G6, count)]


@pytest.fixture(scope="session")
def family_pool():
    return submodular_family_pool()


@pytest.fixture(scope="session")
def table_pool():
    return submodular_tables()


# -- acceptance summary ------------------------------------------------------

ACCEPTANCE_RESULTS: dict[str, bool] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in ACCEPTANCE_RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
