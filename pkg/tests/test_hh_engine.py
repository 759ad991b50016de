from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from bpfloer.chargroup import char_group, enumerate_sectors
from bpfloer.hh_engine import explain, hh_dim, hh_table, sector_contribution
from bpfloer.weights import CalabiYauError, milnor_number, weight_system


def brute_table(p, t_min, t_max):
    """Enumerate every candidate element and test its class on generators of K."""
    G = char_group(tuple(p))
    ws = G.weights
    B = ws.h * (abs(t_min) + abs(t_max) + 20)
    counts = dict.fromkeys(range(t_min, t_max + 1), 0)
    for s in enumerate_sectors(p):
        F, N = s.fixed, s.moving
        wfix = sorted(i for i in F if i)
        for cs in product(*(range(p[i - 1] - 1) for i in wfix)):
            for b0 in (range(B) if 0 in F else [0]):
                for odd in ((False, True) if 0 in F else (False,)):
                    v = [0] * G.rank
                    v[0] = b0
                    for i, ci in zip(wfix, cs):
                        v[i] = ci
                    for i in N:
                        v[i] -= 1
                    if odd:
                        v[0] -= 1
                        v = [x + 1 for x in v]
                    exp, phases = G.evaluate(v)
                    if exp % ws.h or any(phases):
                        continue
                    m = -exp // ws.h
                    t = 2 * (m - 1) + 1 + len(N) if odd else 2 * m + len(N)
                    if t_min <= t <= t_max:
                        counts[t] += 1
    return counts


@pytest.mark.parametrize("p", [(2, 2, 2, 2), (2, 3, 2, 2), (3, 3, 2, 2), (2, 2, 2),
                               (2, 3, 4), (3, 3, 4), (2, 2, 3, 3, 2)])
def test_engine_matches_brute_force(p):
    assert hh_table(p, -14, 6).entries == brute_table(p, -14, 6)


def test_table_examples():
    assert hh_dim((2, 2, 2, 2), 3) == 1
    assert hh_dim((3, 3, 2, 2), 3) == 4
    assert hh_dim((2, 3, 2, 2), -6) == 1
    assert hh_table((2, 2, 2, 2), -15, 3).row() == [1, 0] + [1] * 17
    assert hh_table((3, 4, 2, 2), -15, 3).row() == [6, 0, 2, 2, 0, 0, 1, 1, 1, 1, 0, 0, 2, 2, 0, 0, 2, 2, 0]


def test_errors():
    with pytest.raises(ValueError):
        hh_table((2, 2, 2, 2), 3, -15)
    with pytest.raises(CalabiYauError):
        hh_dim((3, 3, 3), 0)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_identity_sector_x0_powers(n):
    p = (2,) * (n + 2)
    ident = enumerate_sectors(p)[0]
    assert ident.is_identity
    for m in range(0, 4):
        _, even = sector_contribution(ident, -2 * m * n)
        assert [(e.b0, e.has_x0_dual) for e in even] == [(2 * m, False)]
        _, odd = sector_contribution(ident, -2 * m * n + 1)
        assert [(e.b0, e.has_x0_dual) for e in odd] == [(2 * m + 1, True)]


@pytest.mark.parametrize("k, f", [(2, 2), (2, 4), (3, 3), (4, 6)])
def test_second_kind_degrees(k, f):
    # gamma = (1, xi, xi^-1, 1, 1), element x0^{b0} x1^v x2^v with b0 = -1 + k n1 = -1 + f n2
    p = (k, f, 2, 2)
    for s in enumerate_sectors(p):
        if s.a[2:] != (0, 0) or s.a[0] == 0 or s.fixed != {0, 3, 4}:
            continue
        for n1 in range(1, 8):
            b0 = k * n1 - 1
            if (b0 + 1) % f or b0 % 2:
                continue
            n2 = (b0 + 1) // f
            t = -2 * (n1 + n2 - 1)
            els = [e for e in sector_contribution(s, t)[1] if not e.has_x0_dual]
            assert [e.b0 for e in els] == [b0]


def test_explain_examples():
    els = explain((2, 2, 2, 2), 0)
    assert len(els) == 1 and els[0].sector.is_identity and els[0].b0 == 0 and not els[0].c[0][1]
    (el,) = explain((2, 3, 2, 2), -6)
    assert el.b0 == 4 and dict(el.c)[1] == 0 and dict(el.c)[2] == 1
    for k, f in [(2, 3), (3, 4), (4, 4)]:
        els = explain((k, f, 2, 2), 3)
        assert len(els) == (k - 1) * (f - 1)
        assert all(e.b0 == 0 and not (e.sector.fixed - {0}) for e in els)
        assert all(e.has_x0_dual == (0 in e.sector.fixed) for e in els)


def test_basis_element_invariants():
    for e in explain((3, 4, 2, 2), -6) + explain((3, 4, 2, 2), -7):
        nmov = len(e.sector.moving)
        if e.has_x0_dual:
            assert 0 in e.sector.fixed
            assert e.degree == 2 * e.u + 1 + nmov
        else:
            assert e.degree == 2 * e.u + nmov
        assert all(0 <= ci <= e.sector.p[i - 1] - 2 for i, ci in e.c)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(2, 5), min_size=3, max_size=4), st.randoms(use_true_random=False))
def test_permutation_invariance(p, rnd):
    if weight_system(p).d0 == 0:
        return
    q = list(p)
    rnd.shuffle(q)
    assert hh_table(p, -10, 4).entries == hh_table(q, -10, 4).entries


def test_family_identities(kf):
    k, f = kf
    p = (k, f, 2, 2)
    T = hh_table(p, -30, 8)
    assert all(T[t] == 0 for t in range(4, 9))
    assert T[2] == 0
    assert T[3] == milnor_number(p) == (k - 1) * (f - 1)
    assert all(T[-2 * j] == T[-2 * j + 1] for j in range(0, 15))


@pytest.mark.parametrize("p", [(2, 3, 2, 2), (3, 4, 2, 2), (2, 3, 4), (2, 2, 2, 2, 2), (3, 3, 4, 2)])
def test_periodicity_nonpositive(p):
    P = 2 * weight_system(p).d0
    T = hh_table(p, -60, 0)
    assert all(T[t] == T[t + P] for t in range(-60 - P, 1))


def test_deterministic():
    a = hh_table((3, 5, 2, 2), -20, 3)
    b = hh_table((3, 5, 2, 2), -20, 3)
    assert list(a.entries.items()) == list(b.entries.items())
