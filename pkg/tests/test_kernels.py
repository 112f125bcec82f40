from fractions import Fraction
from math import factorial

import pytest

from brauer_kit.category.coeff import DiagramSum, compose_sums, rotate_sum, specialize, symmetrizer
from brauer_kit.category.diagram import e_i, enumerate_diagrams, identity, through_strings
from brauer_kit.invariants.kernels import (
    D_pq,
    D_pq_star,
    E_p,
    E_p_formula,
    Phi,
    block_symmetrizer,
    crossed_cap,
    embed,
    low_rank_diagrams,
    nested_caps,
    orthogonal_generator,
    phi_coefficient,
    phi_trace_sums,
    sigma_bend,
    sigma_caps,
    sigma_closure,
    sigma_recursion,
)


def test_smallest_elements(one2, swap2, tangle2):
    assert E_p(1, 2) == one2 - swap2
    assert E_p(1, 0) == one2 - swap2
    assert E_p(1, 1) == one2 - tangle2
    assert orthogonal_generator(1) == one2 - tangle2


@pytest.mark.parametrize("m, p", [(m, p) for m in (1, 2) for p in range(m + 2)])
def test_closed_formula(m, p):
    assert E_p(m, p) == E_p_formula(m, p)


@pytest.mark.parametrize("p", range(4))
def test_rotation_reverses_index(p):
    assert rotate_sum(E_p(2, p)) == E_p(2, 3 - p)


@pytest.mark.parametrize("p", range(4))
def test_ep_vanishes_under_tangles(p):
    e = E_p(2, p)
    for i in (1, 2):
        assert compose_sums(DiagramSum.of(e_i(3, i)), e, 2).is_zero
        assert compose_sums(e, DiagramSum.of(e_i(3, i)), 2).is_zero


def test_block_symmetrizer_absorbs():
    e = E_p(2, 1)
    assert compose_sums(block_symmetrizer(2, 1), e) == e.scale(factorial(1) * factorial(2))


def test_ep_range():
    with pytest.raises(ValueError):
        E_p(0, 0)
    with pytest.raises(ValueError):
        E_p(2, 4)


def test_nested_caps():
    assert nested_caps(4, 2, 0) == DiagramSum.of(identity(4))
    assert nested_caps(4, 2, 1) == DiagramSum.of(e_i(4, 2))
    assert len(nested_caps(4, 2, 2)) == 1


def test_phi_coefficients():
    assert phi_coefficient(1, 0) == Fraction(1, 2)
    assert phi_coefficient(1, 1) == Fraction(1, 4)
    assert phi_coefficient(2, 1) == Fraction(1, 4)


def test_phi_is_sum_of_all_diagrams():
    phi = Phi(1)
    assert phi == DiagramSum((2, 2), {d: 1 for d in enumerate_diagrams(2, 2)})
    assert len(Phi(2)) == 15


@pytest.mark.parametrize("n", [1, 2])
def test_phi_square(n):
    phi = Phi(n)
    delta0 = -2 * n
    assert compose_sums(phi, phi, delta0) == specialize(phi.scale(factorial(n + 1)), delta0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_phi_trace_sums_vanish(n):
    assert phi_trace_sums(n) == (0, 0)


@pytest.mark.parametrize("n", [1, 2])
def test_d_pq_base_case(n):
    assert D_pq(n, 0, 0) == symmetrizer(2 * n + 1, -1)
    assert D_pq_star(n, 0, 0) == symmetrizer(2 * n + 1, -1)


def test_d_pq_valency():
    assert tuple(D_pq(1, 1, 0).valency) == (2, 2)
    assert tuple(D_pq(1, 1, 1).valency) == (3, 3)
    with pytest.raises(ValueError):
        D_pq(1, 0, 1)


@pytest.mark.parametrize("eps", [1, -1])
@pytest.mark.parametrize("r", [2, 3, 4])
def test_sigma_identities(r, eps):
    for lhs, rhs in (sigma_recursion(r, eps), sigma_closure(r, eps), sigma_bend(r, eps)):
        assert lhs == rhs


@pytest.mark.parametrize("r, k", [(2, 0), (2, 1), (3, 1), (4, 1), (4, 2), (5, 2)])
def test_sigma_caps(r, k):
    lhs, rhs = sigma_caps(r, k)
    assert lhs == rhs


def test_sigma_caps_range():
    with pytest.raises(ValueError):
        sigma_caps(3, 2)


def test_crossed_cap():
    d = crossed_cap(2, 0)
    assert tuple(d.valency) == (3, 1)
    assert (2, 3) in d.pairs
    with pytest.raises(ValueError):
        crossed_cap(2, 2)


def test_embed_and_low_rank():
    x = DiagramSum.of(e_i(2, 1))
    assert embed(x, 3) == DiagramSum.of(e_i(3, 1))
    assert embed(x, 2) == x
    low = low_rank_diagrams(3, 3)
    assert len(low) == 15 - 6
    assert all(through_strings(d) < 3 for d in low)
