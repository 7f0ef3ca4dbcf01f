from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from conftest import complete_2x1, random_entropy, submodular_family_pool, uniform_bits_entropy, xor_entropy
from subjaccard import (
    GroundSet,
    budgeted_linear,
    cardinality,
    enumerate_subsets,
    evaluate,
    explicit_table,
    is_modular,
    is_monotone,
    is_nonnegative,
    is_submodular_marginal,
    is_submodular_pairwise,
    materialize,
    partition_matroid_rank,
    random_monotone_function,
    uniform_matroid_rank,
    weighted_modular,
)
from subjaccard.errors import CapExceeded, GroundMismatch, MalformedSpec
from subjaccard.report import Verdict
from subjaccard.setfun import as_fraction, joint_entropy, numeric_values, tabulate

G2 = GroundSet.of_size(2)
G3 = GroundSet.of_size(3)


def squared(g):
    return explicit_table(g, [Fraction(m.bit_count() ** 2) for m in range(1 << g.n)])


class TestEvaluate:
    def test_weighted_modular(self):
        assert evaluate(weighted_modular(G3, [2, 3, 5]), G3.subset(["1", "2"])) == 5

    def test_budgeted_linear(self):
        assert evaluate(budgeted_linear(G2, [1, 1], 1), G2.full()) == 1

    def test_bipartite(self):
        spec = complete_2x1()
        g = spec.ground
        assert evaluate(spec, g.subset(["u1"])) == 1
        assert evaluate(spec, g.full()) == 1

    @pytest.mark.parametrize(
        "spec",
        [
            cardinality(G3),
            weighted_modular(G3, [1, 2, 3]),
            budgeted_linear(G3, [1, 2, 3], 4),
            complete_2x1(),
            uniform_matroid_rank(G3, 2),
            partition_matroid_rank(G3, [["1"], ["2", "3"]], [1, 1]),
            random_entropy(3, n=3),
        ],
    )
    def test_empty_is_zero(self, spec):
        assert evaluate(spec, spec.ground.empty()) == 0

    def test_matroids(self):
        g = GroundSet.of_size(5)
        u = uniform_matroid_rank(g, 2)
        assert [evaluate(u, g.subset(map(str, range(1, k + 1)))) for k in range(6)] == [0, 1, 2, 2, 2, 2]
        p = partition_matroid_rank(g, [["1", "2"], ["3", "4", "5"]], [1, 2])
        assert evaluate(p, g.full()) == 3
        assert evaluate(p, g.subset(["1", "2"])) == 1

    def test_entropy_values(self):
        spec = xor_entropy()
        g = spec.ground
        h = lambda *xs: evaluate(spec, g.subset(map(str, xs)))  # noqa: E731
        assert h(1) == pytest.approx(1.0)
        assert h(1, 2) == pytest.approx(2.0)
        assert h(1, 2, 3) == pytest.approx(2.0)
        assert h(1, 2, 3, 4) == pytest.approx(3.0)
        assert isinstance(h(1), float)

    def test_exact_values_are_fractions(self):
        v = evaluate(budgeted_linear(G3, ["1/3", "1/2", 2], "5/2"), G3.subset(["1", "2"]))
        assert v == Fraction(5, 6) and isinstance(v, Fraction)

    def test_ground_mismatch(self):
        with pytest.raises(GroundMismatch):
            evaluate(cardinality(G3), GroundSet(["a"]).full())


class TestSpecValidation:
    def test_malformed(self):
        with pytest.raises(MalformedSpec):
            weighted_modular(G3, [1, -1, 0])
        with pytest.raises(MalformedSpec):
            weighted_modular(G3, [1, 1, 1], gamma=-1)
        with pytest.raises(MalformedSpec):
            budgeted_linear(G3, [1, 1, 1], -2)
        with pytest.raises(MalformedSpec):
            weighted_modular(G3, [1, 1])
        with pytest.raises(MalformedSpec):
            partition_matroid_rank(G3, [["1", "2"], ["2", "3"]], [1, 1])
        with pytest.raises(MalformedSpec):
            partition_matroid_rank(G3, [["1", "2"]], [1])
        with pytest.raises(MalformedSpec):
            joint_entropy(G2, [[0.5, 0.5], [0.5, 0.5]])
        with pytest.raises(MalformedSpec):
            joint_entropy(G2, [[-0.5, 1.0], [0.5, 0.0]])
        with pytest.raises(MalformedSpec):
            explicit_table(G2, [0, 1, 2])
        with pytest.raises(MalformedSpec):
            explicit_table(G2, [0, 1.0, 2, 3])

    def test_numbers(self):
        assert as_fraction("2/3") == Fraction(2, 3)
        assert as_fraction("0.25") == Fraction(1, 4)
        assert as_fraction(0.1) == Fraction(1, 10)
        for bad in ("x", True, None, "1/0"):
            with pytest.raises(MalformedSpec):
                as_fraction(bad)

    def test_exact_flag(self):
        assert cardinality(G2).exact
        assert not uniform_bits_entropy(2).exact
        assert not explicit_table(G2, [0.0, 1.0, 1.0, 2.0]).exact


class TestProperties:
    def test_cardinality(self):
        spec = cardinality(G3)
        for check in (is_nonnegative, is_monotone, is_submodular_pairwise, is_submodular_marginal, is_modular):
            assert check(spec).verdict is Verdict.HOLDS

    def test_monotone_witness(self):
        spec = explicit_table(G2, {(): 0, ("1",): 2, ("2",): 0, ("1", "2"): 1})
        r = is_monotone(spec)
        assert r.verdict is Verdict.FAILS
        assert r.witness.witness == (G2.subset(["1"]), G2.full())
        assert r.witness.margin == 1

    def test_nonnegative_witness(self):
        r = is_nonnegative(explicit_table(G2, [0, -1, 0, 0]))
        assert not r.ok and r.witness.witness == (G2.subset(["1"]),)

    def test_squared_pairwise_witness(self):
        r = is_submodular_pairwise(squared(G2))
        assert r.verdict is Verdict.FAILS
        w = r.witness
        assert w.witness == (G2.subset(["1"]), G2.subset(["2"]))
        assert (w.lhs, w.rhs) == (4, 2)

    def test_squared_marginal_witness(self):
        r = is_submodular_marginal(squared(G2))
        assert not r.ok
        # A = {}, B = {1}, x = 2: gain at B is 4 - 1 = 3, at A it is 1
        w = r.witness
        assert w.witness == (G2.empty(), G2.subset(["1"]), G2.subset(["2"]))
        assert (w.lhs, w.rhs) == (3, 1)

    def test_bipartite_submodular(self):
        from conftest import random_bipartite

        for seed in range(5):
            spec = random_bipartite(6, 4, seed)
            assert is_submodular_pairwise(spec).ok
            assert is_submodular_marginal(spec).ok

    def test_budgeted_monotone_exhaustive(self):
        for seed in range(20):
            rng = np.random.default_rng(seed)
            n = int(rng.integers(1, 9))
            spec = budgeted_linear(GroundSet.of_size(n), rng.integers(0, 10, n).tolist(), int(rng.integers(0, 30)))
            assert is_monotone(spec).ok

    def test_uniform_k1_marginal(self):
        for n in range(1, 9):
            assert is_submodular_marginal(uniform_matroid_rank(GroundSet.of_size(n), 1)).ok

    def test_modular_examples(self):
        assert is_modular(weighted_modular(G3, [0, 4, "1/2"], 7)).ok
        r = is_modular(budgeted_linear(G2, [1, 1], 1))
        assert not r.ok and (r.witness.lhs, r.witness.rhs) == (2, 1)
        assert is_modular(explicit_table(G3, [0] * 8)).ok

    def test_caps(self):
        big = cardinality(GroundSet.of_size(13))
        with pytest.raises(CapExceeded):
            is_submodular_pairwise(big)
        with pytest.raises(CapExceeded):
            random_monotone_function(GroundSet.of_size(9), 0)

    def test_counts(self):
        assert is_nonnegative(cardinality(G3)).checked == 8
        assert is_monotone(cardinality(G3)).checked == 3 * 4
        assert is_submodular_pairwise(cardinality(G3)).checked == 64
        # pairs A <= B with x outside B: sum over x of 3^(n-1)
        assert is_submodular_marginal(cardinality(G3)).checked == 3 * 9


class TestRandomFunctions:
    @pytest.mark.parametrize("seed", range(20))
    def test_modular_mode(self, seed):
        assert is_modular(random_monotone_function(GroundSet.of_size(5), seed, "modular")).ok

    @pytest.mark.parametrize("seed", range(20))
    def test_free_mode(self, seed):
        spec = random_monotone_function(GroundSet.of_size(6), seed, "free")
        assert is_monotone(spec).ok and is_nonnegative(spec).ok
        assert all(0 <= v <= 100 and v.denominator == 1 for v in spec.params["values"])

    def test_determinism(self):
        g = GroundSet.of_size(6)
        assert random_monotone_function(g, 7) == random_monotone_function(g, 7)
        assert random_monotone_function(g, 7) != random_monotone_function(g, 8)


def test_characterizations_agree_random():
    for seed in range(300):
        spec = random_monotone_function(GroundSet.of_size(2 + seed % 4), seed)
        assert is_submodular_pairwise(spec).ok == is_submodular_marginal(spec).ok == brute.submodular(spec)


def test_modular_implies_submodular():
    for seed in range(100):
        for mode in ("modular", "free"):
            spec = random_monotone_function(GroundSet.of_size(1 + seed % 5), seed, mode)
            if is_modular(spec).ok:
                assert is_submodular_pairwise(spec).ok and is_submodular_marginal(spec).ok


def test_unit_modular_is_cardinality():
    for n in range(1, 9):
        g = GroundSet.of_size(n)
        assert np.array_equal(tabulate(weighted_modular(g, [1] * n)).values, tabulate(cardinality(g)).values)
    g = GroundSet.of_size(4)
    for s in enumerate_subsets(g):
        assert evaluate(weighted_modular(g, [1] * 4), s) == evaluate(cardinality(g), s)


def test_uniform_is_unit_budget():
    for n in range(1, 8):
        g = GroundSet.of_size(n)
        for k in range(n + 2):
            assert np.array_equal(
                tabulate(uniform_matroid_rank(g, k)).values, tabulate(budgeted_linear(g, [1] * n, k)).values
            )


def test_entropy_submodularity():
    assert is_modular(uniform_bits_entropy(4)).ok
    for seed in range(10):
        assert is_submodular_pairwise(random_entropy(seed)).ok
    assert not is_modular(xor_entropy()).ok


def test_entropy_marginal_by_hand():
    # two correlated bits: P(00)=1/2, P(11)=1/4, P(01)=1/4
    spec = joint_entropy(G2, [[0.5, 0.25], [0.0, 0.25]])
    h1 = -(0.75 * np.log2(0.75) + 0.25 * np.log2(0.25))
    h2 = -(0.5 * np.log2(0.5) + 0.5 * np.log2(0.5))
    h12 = -(0.5 * np.log2(0.5) + 2 * 0.25 * np.log2(0.25))
    assert evaluate(spec, G2.subset(["1"])) == pytest.approx(h1, abs=1e-12)
    assert evaluate(spec, G2.subset(["2"])) == pytest.approx(h2, abs=1e-12)
    assert evaluate(spec, G2.full()) == pytest.approx(h12, abs=1e-12)


def test_vectorized_matches_scalar():
    specs = [s for _, s in submodular_family_pool()] + [random_monotone_function(GroundSet.of_size(5), 3)]
    for spec in specs:
        t = tabulate(spec)
        for m in range(1 << spec.n):
            v = evaluate(spec, spec.ground.mask(m))
            if spec.exact:
                assert t.value(m) == v
            else:
                assert t.value(m) == pytest.approx(v, abs=1e-12)


def test_large_values_fall_back_to_python_ints():
    g = GroundSet.of_size(3)
    spec = weighted_modular(g, [10**30, 1, Fraction(1, 10**12)], 5)
    t = numeric_values(spec, np.arange(8))
    assert t.values.dtype == object
    for m in range(8):
        assert t.value(m) == evaluate(spec, g.mask(m))
    assert is_modular(spec).ok


def test_materialize_roundtrip():
    for _, spec in submodular_family_pool():
        table = materialize(spec)
        assert table.family == "explicit_table" and table.exact == spec.exact
        for m in range(1 << spec.n):
            assert evaluate(table, spec.ground.mask(m)) == evaluate(spec, spec.ground.mask(m))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(0, 10**6))
def test_marginal_equals_pairwise_hypothesis(n, seed):
    spec = random_monotone_function(GroundSet.of_size(n), seed)
    assert is_submodular_pairwise(spec).ok == is_submodular_marginal(spec).ok
