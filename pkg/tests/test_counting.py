from __future__ import annotations

import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from strategies import weight_lists
from wpgl.counting import (
    count_d,
    count_k,
    count_solutions,
    global_section_count,
    k_from_d,
    level_dimensions,
    section_series,
    series_product,
)
from wpgl.errors import SignatureError
from wpgl.signature import WeightSignature


def brute_solutions(weights, target):
    ranges = [range(target // w + 1) for w in weights]
    return sum(1 for z in itertools.product(*ranges) if sum(a * b for a, b in zip(z, weights)) == target)


@given(st.lists(st.integers(1, 6), min_size=0, max_size=4), st.integers(-2, 14))
def test_count_solutions_brute_force(ws, target):
    expected = 0 if target < 0 else brute_solutions(ws, target)
    assert count_solutions(ws, target) == expected


def test_k_values():
    assert [count_k(WeightSignature((1, 2, 3)), a) for a in (1, 2, 3)] == [0, 1, 2]
    assert [count_k(WeightSignature((1, 2, 4)), a) for a in (1, 2, 3)] == [0, 1, 3]
    assert [count_k(WeightSignature((2, 3)), a) for a in (1, 2)] == [0, 0]
    assert level_dimensions(WeightSignature((1, 1, 2))) == [0, 3]


def test_d_table_of_123():
    sig = WeightSignature((1, 2, 3))
    assert [count_d(sig, 1, 3, l) for l in range(4)] == [0, 1, 0, 1]
    assert [count_d(sig, 2, 3, l) for l in range(2)] == [1, 1]
    with pytest.raises(SignatureError):
        count_d(sig, 3, 2, 0)
    with pytest.raises(SignatureError):
        count_d(sig, 1, 3, 4)


@given(weight_lists(max_size=4, max_weight=8))
def test_counting_identity(ws):
    sig = WeightSignature(ws)
    for b in range(2, sig.t + 1):
        for a in range(1, b):
            assert k_from_d(sig, a, b) == count_k(sig, b)


def test_counting_identity_written_out():
    sig = WeightSignature((1, 1, 2, 3))
    # a = 1 has two variables, so a degree-l part contributes l + 1 monomials
    total = sum(count_d(sig, 1, 3, l) * comb(l + 1, 1) for l in range(4))
    assert total == count_k(sig, 3) == 6


@given(weight_lists(max_size=5, max_weight=6), st.integers(0, 15))
def test_section_series_matches_product(ws, n):
    sig = WeightSignature(ws)
    assert section_series(sig, n) == series_product(ws, n)
    assert global_section_count(sig, n) == brute_solutions(ws, n)


def test_section_examples():
    assert global_section_count(WeightSignature((1, 1)), 3) == 4
    assert global_section_count(WeightSignature((2, 3)), 1) == 0
    assert global_section_count(WeightSignature((5, 7)), 0) == 1
