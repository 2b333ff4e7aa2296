import math

import pytest

from zkmacwilliams.codes import CodeZk, random_code
from zkmacwilliams.conjecture import (
    SideReport,
    alpha_from_beta_conjecture,
    alpha_from_beta_ternary,
    beta_from_alpha_conjecture,
    beta_from_alpha_ternary,
    counterexample_table,
    sole_sides,
    table_csv,
    theorem4_sides,
)
from zkmacwilliams.errors import DomainError, NonPositive, WrongModulus
from zkmacwilliams.lattice import LatticeAk

KZ_TABLE = {
    3: (5.6169, 5.7169),
    4: (7.4189, 7.6181),
    5: (9.2328, 9.5222),
    6: (11.0528, 11.4266),
    7: (12.8762, 13.3310),
    8: (14.7017, 15.2355),
    9: (16.5287, 17.1399),
    10: (18.3567, 19.0443),
}


def test_ternary_relation_value():
    beta = beta_from_alpha_ternary(1.0)
    t = math.tanh(1.0)
    assert math.exp(-2 * beta) == pytest.approx(3 * t / (8 - 5 * t), rel=1e-14)
    assert beta == pytest.approx(0.3034570, abs=1e-6)


def test_ternary_relation_symmetric():
    for i in range(1, 31):
        alpha = i / 10
        beta = beta_from_alpha_ternary(alpha)
        assert abs(alpha_from_beta_ternary(beta) - alpha) <= 1e-12
        tb = math.tanh(beta)
        assert math.exp(-2 * alpha) == pytest.approx(3 * tb / (8 - 5 * tb), rel=1e-12)


def test_ternary_limit():
    assert 0 < beta_from_alpha_ternary(15.0) < 1e-10


def test_conjecture_relation():
    assert alpha_from_beta_conjecture(1.0) == pytest.approx(0.136170, abs=1e-6)
    assert beta_from_alpha_conjecture(1.0) == pytest.approx(0.136170, abs=1e-6)
    assert alpha_from_beta_conjecture(alpha_from_beta_conjecture(0.8)) == pytest.approx(0.8, rel=1e-12)
    assert alpha_from_beta_conjecture(12.0) < 1e-10


def test_nonpositive_parameters():
    for fn in (beta_from_alpha_ternary, alpha_from_beta_ternary, alpha_from_beta_conjecture):
        with pytest.raises(NonPositive):
            fn(0.0)


def test_theorem4_zero_code():
    rep = theorem4_sides(CodeZk.zero(3, 1), 1.0)
    assert rep.lhs == pytest.approx(4.0636, abs=1e-4)
    assert rep.relative_diff <= 1e-9


def test_theorem4_full_code():
    assert theorem4_sides(CodeZk.full(3, 1), 0.5).relative_diff <= 1e-9


def test_theorem4_random(rng):
    for _ in range(40):
        code = random_code(3, rng.randint(1, 4), rng)
        assert theorem4_sides(code, 1.5).relative_diff <= 1e-9


def test_theorem4_wrong_modulus():
    with pytest.raises(WrongModulus):
        theorem4_sides(CodeZk.zero(5, 1), 1.0)


@pytest.mark.parametrize("k", [3, 10])
def test_sole_table_rows(k):
    rep = sole_sides(LatticeAk.from_code(CodeZk.zero(k, 1)), 1.0)
    lhs, rhs = KZ_TABLE[k]
    assert rep.lhs == pytest.approx(lhs, abs=5e-4)
    assert rep.rhs == pytest.approx(rhs, abs=5e-4)


def test_sole_binary_case(rng):
    for _ in range(20):
        code = random_code(2, rng.randint(1, 4), rng)
        for beta in (0.5, 1.0, 2.0):
            assert sole_sides(LatticeAk.from_code(code), beta).relative_diff <= 1e-9


def test_counterexample_table():
    rows = counterexample_table(3, 10, 1.0)
    assert [k for k, _ in rows] == list(range(3, 11))
    for k, rep in rows:
        assert rep.lhs == pytest.approx(KZ_TABLE[k][0], abs=5e-4)
        assert rep.rhs == pytest.approx(KZ_TABLE[k][1], abs=5e-4)
        assert rep.lhs < rep.rhs
    (k, rep), = counterexample_table(4, 4, 1.0)
    assert (round(rep.lhs, 4), round(rep.rhs, 4)) == (7.4189, 7.6181)


def test_counterexample_k5_alpha_direction():
    (_, rep), = counterexample_table(5, 5, alpha=1.0)
    assert rep.abs_diff > 0.05


def test_table_bounds():
    with pytest.raises(DomainError):
        counterexample_table(2, 5)
    with pytest.raises(DomainError):
        counterexample_table(6, 5)


def test_table_csv_layout():
    text = table_csv(counterexample_table(3, 4, 1.0))
    assert text == "k,lhs,rhs\n3,5.6169,5.7169\n4,7.4189,7.6181\n"


def test_side_report():
    rep = SideReport(2.0, 1.0)
    assert rep.relative_diff == 0.5
    assert SideReport(0.0, 0.0).relative_diff == 0.0
