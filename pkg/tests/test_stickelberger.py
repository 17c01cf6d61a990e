from fractions import Fraction

import pytest

from equivlk.stickelberger import (easy_annihilators, fractional_ideal_skeleton,
                                   higher_w, integrality_check,
                                   kgroup_annihilates, kgroup_finite_field,
                                   sigma_action, smoothed_element,
                                   stickelberger_element, valid_smoothing_c)


def test_theta_f3_classical():
    # theta_{S}(0) for f = 3, S = {3}: (1/6)(sigma_1 - sigma_2)
    th = stickelberger_element(3, 1, S=(3,))
    assert th == {1: Fraction(1, 6), 2: Fraction(-1, 6)}


def test_theta_rationality_grid():
    for f in [4, 5, 7, 12]:
        for r in [1, 2, 3]:
            th = stickelberger_element(f, r)
            assert all(isinstance(v, Fraction) for v in th.values())


def test_sigma_action_is_group_action():
    th = stickelberger_element(5, 2)
    assert sigma_action(sigma_action(th, 2, 5), 3, 5) == sigma_action(th, 6 % 5, 5)


def test_higher_w():
    assert higher_w(1, 1) == 2
    assert higher_w(1, 2) == 24
    assert higher_w(1, 3) == 2
    assert higher_w(1, 4) == 240
    assert higher_w(5, 2) == 120


def test_valid_smoothing_c():
    cs = valid_smoothing_c(3, 1, count=3)
    # must avoid 2, 3 and w_1 = 2: first valid are 5, 7, 11
    assert cs == [5, 7, 11]


def test_integrality_grid():
    for f in [1, 3, 4, 5, 7, 12]:
        for r in [1, 2, 3]:
            _, results = integrality_check(f, r, count=5)
            assert len(results) >= 5
            assert all(ok for _, ok, _ in results), (f, r)


def test_invalid_c_can_fail():
    # c = 2 is not a valid smoothing for f = 3 (even, and 2 | w_1)
    theta = stickelberger_element(3, 1, S=(3,))
    el = smoothed_element(theta, 2, 1, 3)
    assert any(v.denominator != 1 for v in el.values())


def test_skeleton():
    sk = fractional_ideal_skeleton(5, 2)
    assert sk["partial"] is True
    assert set(sk["classes"]) == {"1", "2"}
    with pytest.raises(ValueError):
        fractional_ideal_skeleton(5, 3)


def test_kgroup_orders():
    for q in [2, 3, 4, 5, 7, 8, 9]:
        for d in [1, 2, 3, 4]:
            for r in [1, 2, 3]:
                info = kgroup_finite_field(q, d, r)
                assert info["order"] == q ** (r * d) - 1
    with pytest.raises(ValueError):
        kgroup_finite_field(6, 2, 1)


def test_kgroup_annihilators():
    gens = easy_annihilators(3, 2, 2)
    for g in gens:
        assert kgroup_annihilates(g, 3, 2, 2)
    # x - q^r annihilates; x - 1 does not (for d = 2, r = 1, q = 3)
    assert kgroup_annihilates([-3, 1], 3, 2, 1)
    assert not kgroup_annihilates([-1, 1], 3, 2, 1)
