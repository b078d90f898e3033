from fractions import Fraction

import pytest

from reebcert.exactmath import InputError
from reebcert.seifert import (
    SeifertData,
    brieskorn,
    brieskorn_seifert,
    euler_sum,
    h1_order_indicator,
)


def test_euler_sum_sigma_2_3_11():
    assert euler_sum(SeifertData.of("-1/2", "1/3", "2/11")) == Fraction(1, 66)


def test_euler_sum_empty():
    assert euler_sum(SeifertData(())) == 0


@pytest.mark.parametrize("n", range(1, 51))
def test_brieskorn_family(n):
    s = brieskorn_seifert(n)
    assert euler_sum(s) == Fraction(1, 6 * (6 * n - 1))
    assert h1_order_indicator(s) == 1


def test_single_fraction():
    assert h1_order_indicator(SeifertData.of("1/2")) == 1


def test_orientation_insensitive():
    assert h1_order_indicator(SeifertData.of("1/2", "-1/3", "-2/11")) == 1


def test_fractions_normalized():
    s = SeifertData.of("2/4", Fraction(-2, 6))
    assert s.fractions == (Fraction(1, 2), Fraction(-1, 3))
    assert s.alphas == (2, 3)


def test_brieskorn_n2():
    rec = brieskorn(2)
    assert rec.is_homology_sphere and rec.milnor_b2_plus == 2 and rec.tight_count == 2
    assert rec.weinstein_holds and rec.universally_tight and not rec.poincare_sphere


def test_brieskorn_n3():
    assert brieskorn(3).milnor_b2_plus == 4


def test_brieskorn_poincare():
    rec = brieskorn(1)
    assert rec.poincare_sphere and rec.milnor_b2_plus == 0
    assert rec.tight_count is None and rec.weinstein_holds is None


@pytest.mark.parametrize("n", [0, -3])
def test_brieskorn_rejects(n):
    with pytest.raises(InputError):
        brieskorn(n)


def test_weinstein_iff_n_at_least_two():
    for n in range(1, 30):
        rec = brieskorn(n)
        assert bool(rec.weinstein_holds) == (n >= 2)
        assert rec.milnor_b2_plus % 2 == 0 and rec.milnor_b2_plus == 2 * (n - 1)
