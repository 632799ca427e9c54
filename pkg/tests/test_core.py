from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mgcount.core import (
    FamilyKey,
    InexactDivisionError,
    Mode,
    QueryParams,
    StatsTriple,
    exact_div,
    multiset_coefficient,
    multiset_coefficient_step,
    satisfies,
)


@pytest.mark.parametrize("base", [0, 1, 5, 10**30])
def test_empty_selection_is_unique(base):
    assert multiset_coefficient(base, 0) == 1


def test_examples():
    assert multiset_coefficient(1, 7) == 1
    assert multiset_coefficient(3, 2) == 6
    assert multiset_coefficient(0, 3) == 0
    assert multiset_coefficient_step(1, 3, 1) == 3
    assert multiset_coefficient_step(3, 3, 2) == 6


def test_long_chain_against_binomial():
    f_prev = comb(5 + 98, 99)
    assert multiset_coefficient_step(f_prev, 5, 100) == comb(104, 100)


@given(st.integers(0, 60), st.integers(0, 60))
def test_matches_binomial(base, p):
    expected = comb(base + p - 1, p) if base else int(p == 0)
    assert multiset_coefficient(base, p) == expected


@given(st.integers(2, 200), st.integers(0, 40))
def test_nondecreasing_in_p(base, p):
    assert multiset_coefficient(base, p + 1) >= multiset_coefficient(base, p)


def test_nondecreasing_in_base():
    for p in range(12):
        row = [multiset_coefficient(b, p) for b in range(30)]
        assert row == sorted(row)


def test_step_rejects_inexact_input():
    with pytest.raises(InexactDivisionError):
        multiset_coefficient_step(1, 4, 2)  # 1 * 5 / 2


def test_exact_div():
    assert exact_div(10**40, 10**20) == 10**20
    with pytest.raises(InexactDivisionError):
        exact_div(7, 2)


def test_negative_arguments():
    with pytest.raises(ValueError):
        multiset_coefficient(-1, 2)
    with pytest.raises(ValueError):
        multiset_coefficient_step(1, 2, 0)
    with pytest.raises(ValueError):
        QueryParams(-1, 0)


def test_family_key_ranges():
    FamilyKey(3, 2, 2, 2, 2, Mode.EEE)
    for bad in [(0, 0, 0, 0, 0), (3, 1, 3, 0, 0), (3, 1, 1, 2, 0), (3, 1, 1, 0, 2)]:
        with pytest.raises(ValueError):
            FamilyKey(*bad)
    with pytest.raises(TypeError):
        FamilyKey(1, 0, 0, 0, 0, "LEE")


def test_only_four_modes():
    assert {m.value for m in Mode} == {"LLL", "ELL", "EEL", "EEE"}
    with pytest.raises(ValueError):
        Mode("LEE")


def test_satisfies_patterns():
    s = StatsTriple(2, 1, 0)
    assert satisfies(s, 2, 1, 0, Mode.EEE)
    assert satisfies(s, 3, 1, 0, Mode.LLL)
    assert not satisfies(s, 3, 1, 0, Mode.ELL)
    assert satisfies(s, 2, 4, 4, Mode.ELL)
    assert satisfies(s, 2, 1, 5, Mode.EEL)
    assert not satisfies(s, 2, 0, 5, Mode.EEL)
