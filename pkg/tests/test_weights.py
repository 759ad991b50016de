import itertools
from math import gcd
from functools import reduce

import pytest
from hypothesis import given, strategies as st

from bpfloer.weights import (
    CalabiYauError,
    ExponentError,
    family_formula,
    is_calabi_yau,
    milnor_number,
    require_not_calabi_yau,
    weight_system,
)


@pytest.mark.parametrize(
    "p, d, h, d0",
    [
        ((2, 2, 2, 2), (1, 1, 1, 1), 2, -2),
        ((2, 3, 2, 2), (3, 2, 3, 3), 6, -5),
        ((4, 2, 2, 2), (1, 2, 2, 2), 4, -3),
        ((3, 3, 3), (1, 1, 1), 3, 0),
    ],
)
def test_weight_system_examples(p, d, h, d0):
    ws = weight_system(p)
    assert (ws.d, ws.h, ws.d0) == (d, h, d0)


@pytest.mark.parametrize("n", range(0, 6))
def test_squares_have_h2_and_d0_minus_n(n):
    ws = weight_system((2,) * (n + 2))
    assert ws.h == 2 and ws.d0 == -n


def brute_weights(p):
    # smallest h admitting integer weights d_i = h / p_i with gcd 1
    for h in itertools.count(1):
        if all(h % x == 0 for x in p):
            d = tuple(h // x for x in p)
            if reduce(gcd, d, h) == 1:
                return d, h


@given(st.lists(st.integers(2, 9), min_size=2, max_size=5))
def test_weights_match_brute_force_and_permutation(p):
    ws = weight_system(p)
    assert (ws.d, ws.h) == brute_weights(p)
    assert all(di * pi == ws.h for di, pi in zip(ws.d, p))
    perm = list(reversed(p))
    ws2 = weight_system(perm)
    assert (ws2.h, ws2.d0) == (ws.h, ws.d0)
    assert sorted(ws2.d) == sorted(ws.d)


def test_calabi_yau():
    assert is_calabi_yau((3, 3, 3))
    assert not is_calabi_yau((2, 2, 2, 2))
    assert not is_calabi_yau((2, 3, 2, 2))
    with pytest.raises(CalabiYauError):
        require_not_calabi_yau((3, 3, 3))


def test_milnor_number():
    assert milnor_number((3, 5, 2, 2)) == 8
    assert milnor_number((2, 2, 2, 2)) == 1
    assert milnor_number((2, 2)) == 1


@pytest.mark.parametrize("bad", [(1, 2, 3), (2,), (0, 2), ()])
def test_rejects_degenerate(bad):
    with pytest.raises(ExponentError):
        weight_system(bad)


def test_family_d0():
    # -(e + f), doubled when both k and f are odd (then h = 2 lcm(k, f))
    for k in range(2, 9):
        for f in range(k, 9):
            ell = gcd(k, f)
            expect = -(k // ell + f // ell)
            if k % 2 and f % 2:
                expect *= 2
            assert weight_system((k, f, 2, 2)).d0 == expect


def test_family_formula_mismatch_is_visible():
    assert family_formula(4, 2) == (2, -3)
    assert weight_system((4, 2, 2, 2)).h == 4
    assert family_formula(2, 3) == (6, -10)
    assert weight_system((2, 3, 2, 2)).d0 == -5
