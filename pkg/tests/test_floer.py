import pytest

from bpfloer.floer import (
    LocalizationRule,
    compare_models,
    free_loop_model,
    rfh_dim,
    rfh_table,
    sh_dim,
    tsn_reference,
)
from bpfloer.hh_engine import hh_dim, hh_table
from bpfloer.weights import CalabiYauError, weight_system


def test_sh_examples():
    assert sh_dim((2, 3, 2, 2), -6) == 1
    assert sh_dim((2, 2, 2, 2), 0) == 1
    assert sh_dim((3, 3, 2, 2), -1) == 2
    with pytest.raises(ValueError):
        sh_dim((2, 3, 2, 2), 1)


def test_rfh_examples():
    assert rfh_dim((2, 3, 2, 2), 1) == hh_dim((2, 3, 2, 2), -9) == 1
    assert rfh_dim((2, 3, 2, 2), 2) == hh_dim((2, 3, 2, 2), -8) == 0
    assert rfh_dim((2, 3, 2, 2), -4) == 0
    with pytest.raises(CalabiYauError):
        rfh_dim((3, 3, 3), 0)


def test_localization_rule():
    with pytest.raises(ValueError):
        LocalizationRule(3, 0)
    r = LocalizationRule(6, -5)
    assert r.representative(-3) == (-3, 0)
    assert r.representative(1) == (-9, 1)
    assert r.representative(10) == (0, 1)
    assert r.representative(11) == (-9, 2)


@pytest.mark.parametrize("p", [(2, 3, 2, 2), (3, 5, 2, 2), (2, 2, 2), (2, 3, 4), (4, 6, 2, 2)])
def test_rfh_periodic_and_extends_hh(p):
    P = 2 * weight_system(p).d0
    T = rfh_table(p, -40, 40)
    H = hh_table(p, -40, 0)
    for i in range(-40, 1):
        assert T[i] == H[i]
    for i in range(-40, 41):
        if -40 <= i + P <= 40:
            assert T[i] == T[i + P]
    assert any(T.entries.values())  # nonvanishing
    assert T.meta["positive_degrees"] == "via periodicity"


def test_rfh_table_matches_pointwise():
    T = rfh_table((2, 3, 2, 2), -12, 12)
    assert all(T[i] == rfh_dim((2, 3, 2, 2), i) for i in range(-12, 13))


def test_free_loop_examples():
    assert set(free_loop_model(2, -20, 20).entries.values()) == {1}
    assert set(free_loop_model(1, -20, 20).entries.values()) == {1}
    T = free_loop_model(3, -20, 20)
    assert all(T[t] == (1 if t % 6 in (0, 1) else 0) for t in range(-20, 21))


@pytest.mark.parametrize("n", range(1, 7))
def test_free_loop_two_routes(n):
    a = free_loop_model(n, -40, 40, "survival")
    b = free_loop_model(n, -40, 40, "algebraic")
    assert a.entries == b.entries


def test_tsn_reference_examples():
    assert tsn_reference(2, 0, 3).row() == [1, 1, 1, 1]
    assert tsn_reference(3, -6, -5).row() == [1, 1]
    T = tsn_reference(3, 1, 2)
    assert T[1] == 1 and T[2] == 0


@pytest.mark.parametrize("n", [1, 3, 5])
def test_compare_odd_all_agree(n):
    rep = compare_models(n, -40, 40)
    assert rep.all_agree and not rep.wedge


@pytest.mark.parametrize("n", [2, 4])
def test_compare_even_flags_wedge_family(n):
    rep = compare_models(n, -12, 12)
    wedge_degrees = {t for t in range(-12, 13) if (t % (2 * n)) in (n, n + 1)}
    assert {w["t"] for w in rep.wedge} == wedge_degrees
    assert all(not w["literal_element_realized"] for w in rep.wedge)
    for w in rep.wedge:
        shift = -1 if w["family"] == "wedge-even" else 1
        assert w["engine_x0_exponents"] == [-w["literal_x0_exponent"] + shift]
    assert rep.notes
    for r in rep.rows:
        assert r["free_loop"] == r["tsn_reference"]


def test_compare_empty_range():
    rep = compare_models(2, 1, 0)
    assert rep.rows == [] and rep.wedge == []
