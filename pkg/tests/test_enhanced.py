from fractions import Fraction

import pytest

from brauer_kit.category.coeff import DiagramSum
from brauer_kit.category.diagram import cup, identity
from brauer_kit.invariants.enhanced import (
    EnhancedMorphismSample,
    build_delta,
    check_relations,
    cycle,
    cycle_relation_readings,
    falling_product,
    forced_parameters,
    fullness_check,
    inverse,
    sigma_rank,
    sigma_vanishing,
)


def test_delta_generator():
    d = build_delta(2)
    assert d.lam.to_dense() == [[0], [1], [-1], [0]]
    assert d.norm() == 2
    assert d.check_determinant()
    assert d.to_json()["norm"] == "2"
    with pytest.raises(ValueError):
        build_delta(1)


def test_relations_hold():
    result = check_relations(2)
    assert result
    assert all(result.values()), [name for name, ok in result.items() if not ok]


def test_cycle_relation_readings():
    readings = cycle_relation_readings(2)
    lhs, rhs = readings["literal"]
    assert lhs != rhs
    for name in ("left", "right"):
        lhs, rhs = readings[name]
        assert lhs == rhs, name


def test_cycle():
    assert cycle(2) == (3, 1, 2)
    assert inverse(cycle(2)) == (2, 3, 1)
    assert inverse(inverse(cycle(4))) == cycle(4)


def test_forced_parameters():
    forced = forced_parameters(2)
    assert forced.product_roots == (Fraction(-1), Fraction(2))
    assert forced.f_roots == (Fraction(2),)
    assert forced.common == (Fraction(2),)
    assert forced.product_at_m == 2
    assert forced.f_at_m == 0
    assert forced.unique
    assert forced_parameters(3).common == (Fraction(3),)


def test_falling_product():
    assert falling_product(3).eval(3) == 6
    assert falling_product(3, 1).eval(3) == 2


@pytest.mark.parametrize("m", [1, 2, 3])
def test_sigma_vanishing(m):
    assert sigma_vanishing(m)


def test_sigma_rank():
    assert sigma_rank(2, 2) == 1
    assert sigma_rank(3, 2) == 3
    assert sigma_rank(3, 3) == 1


def test_fullness():
    result = fullness_check(2, 0, 2)
    assert result.brauer_rank == 1
    assert result.delta_rank == 1
    assert result.combined_rank == 2
    assert result.oracle == 2
    assert result.complementary
    assert result.passed


def test_enhanced_morphism():
    sample = EnhancedMorphismSample(2, DiagramSum.of(cup()), [(identity(2), Fraction(1))])
    image = sample.evaluate()
    assert image.entry(0, 0) == 1
    assert image.entry(1, 0) == 1
    assert image.entry(2, 0) == -1
    assert EnhancedMorphismSample.from_json(sample.to_json()) == sample
    with pytest.raises(ValueError):
        EnhancedMorphismSample(2, DiagramSum.of(cup()), [(identity(1), Fraction(1))])
