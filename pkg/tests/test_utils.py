from fractions import Fraction

import pytest
from sympy import Rational

from brauer_kit.base import BudgetError
from brauer_kit.utils import (
    DEFAULT_BUDGET,
    ENV_BUDGET,
    Settings,
    UnionFind,
    check_budget,
    digits_of,
    flat_index,
    override,
    parallel_map,
    settings,
    to_fraction,
)


def test_settings_from_env(monkeypatch):
    monkeypatch.delenv(ENV_BUDGET, raising=False)
    assert Settings.from_env().max_entries == DEFAULT_BUDGET
    monkeypatch.setenv(ENV_BUDGET, "123")
    assert Settings.from_env().max_entries == 123
    monkeypatch.setenv(ENV_BUDGET, "viel")
    with pytest.raises(ValueError):
        Settings.from_env()


def test_override_restores_settings():
    before = settings()
    with override(max_entries=5, threads=2) as current:
        assert current.max_entries == 5
        assert settings().threads == 2
        with pytest.raises(BudgetError):
            check_budget(6, "Test")
        check_budget(5, "Test")
    assert settings() == before


def test_override_rejects_zero_threads():
    with pytest.raises(ValueError):
        with override(threads=0):
            pass


@pytest.mark.parametrize("threads", [1, 4])
def test_parallel_map_keeps_order(threads):
    with override(threads=threads):
        assert parallel_map(lambda x: x * x, range(10)) == [x * x for x in range(10)]


def test_union_find():
    uf = UnionFind(range(1, 6))
    uf.join(5, 3)
    uf.join(3, 1)
    uf.join(2, 4)
    assert uf.root(5) == 1
    assert uf.groups() == {1: [1, 3, 5], 2: [2, 4]}


@pytest.mark.parametrize(
    "value, expected",
    [(3, Fraction(3)), ("-3/2", Fraction(-3, 2)), (Rational(1, 3), Fraction(1, 3)), (Fraction(2, 4), Fraction(1, 2))],
)
def test_to_fraction(value, expected):
    assert to_fraction(value) == expected


def test_to_fraction_rejects_non_scalars():
    with pytest.raises(TypeError):
        to_fraction(None)


def test_tensor_indices():
    assert flat_index((1, 0, 2), 3) == 11
    assert digits_of(11, 3, 3) == (1, 0, 2)
    assert flat_index((), 3) == 0
    assert digits_of(0, 3, 0) == ()
