from fractions import Fraction

import pytest

from brauer_kit.base import BudgetError
from brauer_kit.invariants.ideals import check_symmetries, raise_sum
from brauer_kit.invariants.young import identity_coefficient, tableau, young_idempotent


def test_single_row_and_column(one2, swap2):
    assert young_idempotent(1, 0).element == one2 - swap2
    assert young_idempotent(0, 1).element == one2 + swap2


def test_tableau_is_filled_row_by_row():
    assert tableau(1, 1) == ([(1, 2), (3, 4)], [(1, 3), (2, 4)])
    assert tableau(1, 2) == ([(1, 2, 3), (4, 5, 6)], [(1, 4), (2, 5), (3, 6)])
    assert tableau(0, 0) == ([(1,)], [(1,)])


@pytest.mark.parametrize("m, ell, kappa", [(0, 0, 1), (1, 0, 2), (0, 1, 2), (1, 1, 12), (2, 0, 6)])
def test_kappa_is_hook_product(m, ell, kappa):
    y = young_idempotent(m, ell)
    assert y.kappa == kappa
    assert y.hook_product() == kappa


@pytest.mark.parametrize("m, ell", [(1, 0), (0, 1), (1, 1)])
def test_quasi_idempotent(m, ell):
    y = young_idempotent(m, ell)
    assert y.is_quasi_idempotent()
    assert identity_coefficient(y.element) == 1


def test_term_count():
    y = young_idempotent(1, 1)
    assert y.size == 4
    assert y.row_group_order == 4
    assert y.column_group_order == 4
    assert len(y.element) == 16


def test_stated_constant():
    assert young_idempotent(1, 0).stated_constant() == 2
    assert young_idempotent(1, 1).stated_constant() == 24 * 24


def test_embedded():
    y = young_idempotent(1, 0)
    assert y.embedded(2) == y.element
    assert tuple(y.embedded(3).valency) == (3, 3)
    assert len(y.embedded(3)) == 2
    with pytest.raises(ValueError):
        y.embedded(1)


def test_symmetries_hold_after_raising():
    y = young_idempotent(1, 0)
    assert y.symmetries() == [((1, 2, 4, 3), -1)]
    check_symmetries(raise_sum(y.element), y.symmetries())
    z = young_idempotent(1, 1)
    assert len(z.symmetries()) == 4
    check_symmetries(raise_sum(z.element), z.symmetries())


def test_limits():
    with pytest.raises(ValueError):
        young_idempotent(-1, 0)
    with pytest.raises(BudgetError):
        young_idempotent(2, 2)


def test_json():
    data = young_idempotent(1, 0).to_json()
    assert data["rows"] == [[1], [2]]
    assert data["columns"] == [[1, 2]]
    assert data["kappa"] == "2"
    assert data["hook_product"] == 2
    assert data["terms"] == 2


def test_identity_coefficient_of_zero(one2):
    assert identity_coefficient(one2 - one2) == Fraction(0)
