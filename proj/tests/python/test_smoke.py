# Copyright 2026 the stochint authors
# SPDX-License-Identifier: Apache-2.0
"""Smoke tests for the stochint Python module.

These exercise the binding layer, not the numerics: the C++ test suite owns
the quantitative checks. Here we confirm the module imports, the main
operations run end to end, and reproducibility survives the language
boundary.
"""

import math

import pytest

import stochint


def test_partition_shape():
    p = stochint.make_equal_partition(2.0, 4)
    assert p.n == 4
    assert p.nodes[0] == 0.0
    assert p.nodes[-1] == 2.0
    assert p.dt(1) == pytest.approx(0.5)
    with pytest.raises(ValueError):
        stochint.make_equal_partition(-1.0, 4)


def test_k_of_n():
    assert stochint.k_of_n(1_000_000, 0.5) == 1000
    assert stochint.k_of_n(1000, 0.5) == 31
    assert stochint.k_of_n(12345, 0.0) == 0


def test_count_matches_math_comb():
    for n in range(2, 41):
        for K in range(1, n):
            expected = math.comb(n, K) * (2**K - 1)
            assert stochint.count_incomplete_sums(n, K) == expected


def test_deletion_set():
    d = stochint.deletion_set(10, 3, stochint.DeletionStrategy.End)
    assert list(d.indices) == [7, 8, 9]
    r1 = stochint.deletion_set(100, 10, stochint.DeletionStrategy.Random, seed=7)
    r2 = stochint.deletion_set(100, 10, stochint.DeletionStrategy.Random, seed=7)
    assert list(r1.indices) == list(r2.indices)
    assert len(set(r1.indices)) == 10


def test_telescoping_identity():
    p = stochint.make_equal_partition(1.0, 500)
    path = stochint.sample_path(p, master_seed=42, stream_index=3)
    phi = stochint.make_integrand("identity")
    empty = stochint.deletion_set(500, 0, stochint.DeletionStrategy.Begin)
    result = stochint.strat_average_sum(path, phi, empty)
    assert result.kept_terms == 500
    assert result.deleted_terms == 0
    reference = stochint.closed_form_strat_BdB(path.terminal())
    assert result.value == pytest.approx(reference, rel=1e-12)


def test_path_reproducibility():
    p = stochint.make_equal_partition(1.0, 64)
    a = stochint.sample_path(p, master_seed=5, stream_index=0)
    b = stochint.sample_path(p, master_seed=5, stream_index=0)
    c = stochint.sample_path(p, master_seed=5, stream_index=1)
    assert list(a.values) == list(b.values)
    assert list(a.values) != list(c.values)


def test_mean_square_sum_with_python_callable():
    p = stochint.make_equal_partition(2.0, 8)
    path = stochint.sample_path(p, master_seed=1)
    empty = stochint.deletion_set(8, 0, stochint.DeletionStrategy.Begin)
    result = stochint.mean_square_sum(
        path, lambda t, _path: 1.0, stochint.URule.Left, empty
    )
    assert result.value == pytest.approx(2.0, rel=1e-15)


def test_conversion_residual_identity():
    n = 256
    p = stochint.make_equal_partition(1.0, n)
    path = stochint.sample_path(p, master_seed=9)
    phi = stochint.make_integrand("identity")
    empty = stochint.deletion_set(n, 0, stochint.DeletionStrategy.Begin)
    residual = stochint.conversion_residual(path, phi, empty)
    values = list(path.values)
    reference = 0.5 * (
        sum((values[j + 1] - values[j]) ** 2 for j in range(n)) - 1.0
    )
    assert residual == pytest.approx(reference, abs=1e-13)


def test_mae_experiment_reproducible():
    config = stochint.ExperimentConfig()
    config.n = 200
    config.r_values = [0.0, 0.5]
    config.strategies = [
        stochint.DeletionStrategy.Begin,
        stochint.DeletionStrategy.Random,
        stochint.DeletionStrategy.End,
    ]
    config.iterations = 50
    config.form = stochint.SumForm.ItoLeft
    config.master_seed = 2026
    first = stochint.mae_experiment(config)
    second = stochint.mae_experiment(config)
    assert len(first.rows) == 6
    for row_a, row_b in zip(first.rows, second.rows):
        assert row_a.mae == row_b.mae
        assert row_a.std_error == row_b.std_error
    verdicts = stochint.ordering_check(first)
    assert [v.r for v in verdicts] == [0.5]
    assert verdicts[0].K == 14
