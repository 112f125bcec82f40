from fractions import Fraction

import pytest

from brauer_kit.category.coeff import (
    DiagramSum,
    coefficient,
    compose_sums,
    delta_power,
    format_coefficient,
    identity_sum,
    linear_combination,
    parse_coefficient,
    partial_close,
    rotate_sum,
    specialize,
    star_sum,
    symmetrizer,
    tensor_sums,
)
from brauer_kit.category.diagram import BrauerDiagram, cap, cup, e_i, identity, s_i

EMPTY = BrauerDiagram(0, 0)


def test_zero_terms_are_dropped(one2, swap2):
    x = one2 + swap2 - swap2
    assert x == one2
    assert len(x) == 1
    assert (one2 - one2).is_zero


def test_valency_mismatch():
    with pytest.raises(ValueError):
        DiagramSum((2, 2), {cap(): 1})
    with pytest.raises(ValueError):
        DiagramSum.of(cap()) + DiagramSum.of(cup())


def test_tangle_square_is_delta_tangle(tangle2):
    assert tangle2 @ tangle2 == tangle2.scale(delta_power(1))


def test_specialized_composition(tangle2):
    assert compose_sums(tangle2, tangle2, 3) == tangle2.scale(3)
    assert compose_sums(tangle2, tangle2, 0).is_zero


def test_loop_specializes_to_number():
    loop = DiagramSum.of(EMPTY).scale(delta_power(2))
    assert specialize(loop, 3).numeric_terms() == {EMPTY: Fraction(9)}
    with pytest.raises(ValueError):
        loop.numeric_terms()


def test_specialize_scalar():
    assert specialize(delta_power(2) + coefficient(1), Fraction(1, 2)) == Fraction(5, 4)


def test_coefficient_json():
    c = delta_power(2) * coefficient(Fraction(-3, 2)) + coefficient(4)
    assert format_coefficient(c) == [["-3/2", 2], ["4", 0]]
    assert parse_coefficient(format_coefficient(c)) == c


def test_sum_json(one2, swap2):
    x = one2 - swap2.scale(delta_power(1))
    assert DiagramSum.from_json(x.to_json()) == x


@pytest.mark.parametrize("eps", [1, -1])
def test_symmetrizer_two(eps, one2, swap2):
    sigma = symmetrizer(2, eps)
    assert sigma == one2 + swap2.scale(-eps)
    assert sigma @ sigma == sigma.scale(2)


@pytest.mark.parametrize("r", [0, 1, 3])
def test_symmetrizer_square(r):
    sigma = symmetrizer(r, -1)
    factor = {0: 1, 1: 1, 3: 6}[r]
    assert len(sigma) == factor
    assert sigma @ sigma == sigma.scale(factor)


def test_symmetrizer_rejects_eps():
    with pytest.raises(ValueError):
        symmetrizer(2, 0)


def test_partial_close():
    assert partial_close(identity_sum(2), 1) == identity_sum(1).scale(delta_power(1))
    assert partial_close(DiagramSum.of(s_i(2, 1)), 1) == identity_sum(1)
    assert partial_close(identity_sum(1), 1) == DiagramSum.of(EMPTY).scale(delta_power(1))


def test_tensor_sums(one2):
    x = tensor_sums(identity_sum(1), identity_sum(1))
    assert x == one2
    assert tensor_sums(DiagramSum.of(cup()), DiagramSum.of(cap())).valency == (2, 2)


def test_star_and_rotate(tangle2):
    x = DiagramSum.of(cup()).scale(2)
    assert star_sum(x) == DiagramSum.of(cap()).scale(2)
    assert rotate_sum(tangle2) == tangle2


def test_linear_combination(one2, swap2):
    x = linear_combination((2, 2), [(2, one2), (-1, swap2), (1, swap2)])
    assert x == one2.scale(2)


def test_three_strand_tangle_relation():
    e1, e2 = DiagramSum.of(e_i(3, 1)), DiagramSum.of(e_i(3, 2))
    assert e1 @ e2 @ e1 == e1
    assert e1 @ DiagramSum.of(identity(3)) == e1
