"""h0/h1 dimensions, Hilbert functions, sigma, and their exact-sequence ties."""

from itertools import combinations
from math import comb

import pytest

from cicodes import (
    field_new,
    h0,
    h1,
    hilbert_function,
    imposes_independent_conditions,
    profile,
    sigma,
)
from cicodes.geometry import PointSet


def test_h0_examples(rm3, two_conic):
    assert h0(rm3.gamma, 3) == 2  # the two defining cubics
    assert h0(rm3.gamma, 0) == 0
    assert h0(rm3.gamma, -1) == 0


def test_h1_examples(rm3, two_conic):
    assert h1(rm3.gamma, 3) == 1
    assert h1(two_conic.gamma, 1) == 1
    n = len(rm3.gamma)
    for a in range(n - 1, n + 3):
        assert h1(rm3.gamma, a) == 0


def test_negative_degree_conventions(rm3):
    assert h1(rm3.gamma, -1) == 9
    assert h1(rm3.gamma, -3) == 9
    assert hilbert_function(rm3.gamma, -1) == 0


def test_independent_conditions(f5, rm3):
    single = PointSet(((1, 2, 3),), 2, f5)
    assert imposes_independent_conditions(single, 0)
    assert not imposes_independent_conditions(rm3.gamma, 3)
    assert imposes_independent_conditions(rm3.gamma, 8)


def test_sigma_examples(rm3, two_conic, f5):
    assert sigma(rm3.gamma) == 3 == rm3.s
    assert sigma(two_conic.gamma) == 1 == two_conic.s
    single = PointSet(((1, 0, 0),), 2, f5)
    assert sigma(single) == -1


def test_hilbert_function_rm(rm3):
    assert [hilbert_function(rm3.gamma, a) for a in range(6)] == [1, 3, 6, 8, 9, 9]


def test_hilbert_function_collinear(f5):
    # points on the line x2 = 0: HF(a) = min(a+1, |Gamma|)
    pts = PointSet(((1, 0, 0), (1, 1, 0), (1, 2, 0), (1, 3, 0)), 2, f5)
    for a in range(6):
        assert hilbert_function(pts, a) == min(a + 1, 4)


def test_hf_start(two_conic):
    assert hilbert_function(two_conic.gamma, 0) == 1


def test_subset_h0_monotone(two_conic):
    """(I_Gamma)_a is contained in (I_Gamma')_a for every subset Gamma'."""
    gamma = two_conic.gamma
    n = len(gamma)
    for a in range(4):
        full = h0(gamma, a)
        for size in range(n + 1):
            for combo in combinations(range(n), size):
                assert h0(gamma.subset(combo), a) >= full


def test_hf_nondecreasing_stabilizes(corpus):
    for setup in corpus.values():
        gamma = setup.gamma
        n = len(gamma)
        values = [hilbert_function(gamma, a) for a in range(n + 2)]
        assert all(x <= y for x, y in zip(values, values[1:]))
        assert values[n - 1] == n  # stabilized by a = |Gamma| - 1
        assert values[-1] == n


def test_exact_sequence_dimension_count(corpus):
    for setup in corpus.values():
        gamma = setup.gamma
        m = gamma.m
        for a in range(0, setup.s + 3):
            assert h0(gamma, a) + hilbert_function(gamma, a) == comb(a + m, m)


def test_profile_serialization(rm3):
    prof = profile(rm3.gamma, 5)
    lines = prof.lines()
    assert lines[-1] == "sigma=3"
    assert prof.table[0][0] == -1
    row_a3 = [r for r in prof.table if r[0] == 3][0]
    assert row_a3 == (3, 10, 8, 2, 1)
