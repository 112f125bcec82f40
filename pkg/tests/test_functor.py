from fractions import Fraction

import numpy as np
import pytest

from brauer_kit.base import BudgetError
from brauer_kit.category.coeff import DiagramSum, symmetrizer
from brauer_kit.category.diagram import cap, cross, cup, e_i, enumerate_diagrams, identity, star
from brauer_kit.category.oriented import GENERATORS
from brauer_kit.functor.functor import (
    adjoint,
    check_functoriality,
    functor_brauer,
    functor_diagram,
    functor_oriented,
    gl_relations,
    oriented_relations,
    osp_relations,
    supertrace,
)
from brauer_kit.functor.operator import TensorOperator, from_vector, tensor_operators
from brauer_kit.functor.oracle import equivariant_hom, hom_dimension, is_equivariant
from brauer_kit.functor.space import (
    SuperSpace,
    general_linear,
    orthogonal,
    orthosymplectic,
    parse_group,
    special_orthogonal,
    symplectic,
)
from brauer_kit.utils import override


def test_super_space():
    v = SuperSpace(2, 2)
    assert v.dim == 4
    assert v.sdim == 0
    assert v.parities == (0, 0, 1, 1)
    assert v.gram[(2, 3)] == 1 and v.gram[(3, 2)] == -1
    with pytest.raises(ValueError):
        SuperSpace(-1, 0)


@pytest.mark.parametrize(
    "text, label",
    [
        ("o3", "O(3)"),
        ("SO(2)", "SO(2)"),
        ("sp2", "Sp(2)"),
        ("osp1|2", "OSp(1|2)"),
        ("GL(2|1)", "GL(2|1)"),
        ("gl1", "GL(1|0)"),
    ],
)
def test_parse_group(text, label):
    assert parse_group(text).label == label


@pytest.mark.parametrize("text", ["u3", "o3|1", "sp3", "osp1|1", ""])
def test_parse_group_rejects(text):
    with pytest.raises(ValueError):
        parse_group(text)


def test_group_delta():
    assert orthogonal(3).delta == 3
    assert symplectic(4).delta == -4
    assert orthosymplectic(1, 2).delta == -1
    assert general_linear(2, 1).delta == 1
    assert general_linear(1).oriented
    assert not orthogonal(2).oriented


def test_operator_basics():
    v = SuperSpace(2, 0)
    one = TensorOperator.identity(v, "++")
    assert one.shape == (4, 4)
    assert one @ one == one
    assert one.trace() == 4
    assert one.rank() == 4
    assert (one - one).is_zero
    assert tensor_operators([TensorOperator.identity(v, "+")] * 2, v) == one
    assert from_vector(v, "++", "++", one.flatten()) == one
    with pytest.raises(ValueError):
        one @ TensorOperator.identity(v, "+")


def test_supertrace_is_superdimension():
    v = SuperSpace(1, 2)
    assert TensorOperator.identity(v, "+").supertrace() == -1
    assert TensorOperator.identity(v, "++").supertrace() == 1


def test_operator_budget():
    with override(max_entries=10):
        with pytest.raises(BudgetError):
            TensorOperator.identity(SuperSpace(3, 0), "+++")


def test_operator_json():
    data = TensorOperator.scalar(SuperSpace(1, 0), Fraction(1, 2)).to_json()
    assert data == {"source": "", "target": "", "rows": 1, "cols": 1, "entries": [["1/2"]]}


@pytest.mark.parametrize("group", [orthogonal(2), orthogonal(3), symplectic(2), orthosymplectic(1, 2)], ids=str)
def test_loop_is_superdimension(group):
    loop = functor_diagram(cap(), group) @ functor_diagram(cup(), group)
    assert loop == TensorOperator.scalar(group.space, group.delta)


def test_symplectic_swap_carries_sign(sp2):
    swap = functor_diagram(cross(), sp2)
    assert swap.entry(0, 0) == -1
    assert swap @ swap == TensorOperator.identity(sp2.space, "++")


@pytest.mark.parametrize("space", [SuperSpace(1, 0), SuperSpace(2, 0), SuperSpace(0, 2), SuperSpace(1, 2)], ids=str)
def test_osp_relations(space):
    for claim, lhs, rhs in osp_relations(space):
        assert lhs == rhs, claim


@pytest.mark.parametrize("space", [SuperSpace(1, 0), SuperSpace(2, 0), SuperSpace(1, 1)], ids=str)
def test_gl_relations(space):
    for claim, lhs, rhs in gl_relations(space):
        assert lhs == rhs, claim


@pytest.mark.parametrize("group", [general_linear(1, 0), general_linear(1, 1)], ids=str)
def test_oriented_relations(group):
    for claim, lhs, rhs in oriented_relations(group):
        assert lhs == rhs, claim


@pytest.mark.parametrize("group", [orthogonal(2), orthosymplectic(1, 2)], ids=str)
def test_functoriality(group):
    basis = enumerate_diagrams(2, 2)
    assert all(check_functoriality(a, b, group) for a in basis for b in basis)


@pytest.mark.parametrize("group", [orthogonal(2), symplectic(2), orthosymplectic(1, 2)], ids=str)
def test_adjoint_matches_star(group, large_budget):
    assert adjoint(functor_diagram(cap(), group)) == functor_diagram(cup(), group)
    for d in enumerate_diagrams(1, 3):
        assert adjoint(functor_diagram(d, group)) == functor_diagram(star(d), group)


def test_adjoint_over_osp22_stays_within_default_budget():
    group = orthosymplectic(2, 2)
    assert adjoint(functor_diagram(cap(), group)) == functor_diagram(cup(), group)
    for d in enumerate_diagrams(2, 2):
        assert adjoint(functor_diagram(d, group)) == functor_diagram(star(d), group)


def test_adjoint_of_identity():
    v = SuperSpace(2, 2)
    assert adjoint(TensorOperator.identity(v, "++")) == TensorOperator.identity(v, "++")


@pytest.mark.parametrize("group", [orthogonal(2), orthosymplectic(2, 2)], ids=str)
def test_adjoint_is_an_involution(group):
    rng = np.random.default_rng(7)
    for k in range(4):
        for ell in range(k % 2, 4, 2):
            diagrams = enumerate_diagrams(k, ell)
            for index in rng.choice(len(diagrams), size=min(3, len(diagrams)), replace=False):
                op = functor_diagram(diagrams[index], group)
                assert adjoint(adjoint(op)) == op


def test_functor_on_sums(o1, tangle2):
    image = functor_brauer(DiagramSum.of(identity(2)) - tangle2, o1)
    assert image.is_zero
    assert supertrace(functor_brauer(symmetrizer(2, 1), orthogonal(2))) == 2


def test_functor_checks_group_kind(o3, gl1):
    with pytest.raises(ValueError):
        functor_brauer(DiagramSum.of(cap()), gl1)
    with pytest.raises(ValueError):
        functor_oriented(GENERATORS["X"], o3)
    with pytest.raises(ValueError):
        functor_diagram(e_i(2, 1), gl1)


def test_functor_oriented(gl1):
    cup_image = functor_oriented(GENERATORS["U+"], gl1)
    cap_image = functor_oriented(GENERATORS["A-"], gl1)
    assert (cap_image @ cup_image).entry(0, 0) == 1
    x = DiagramSum.of(e_i(2, 1))
    assert functor_oriented(x, gl1, "+-", "+-").shape == (1, 1)


@pytest.mark.parametrize(
    "group, source, target, dimension",
    [
        (orthogonal(3), "", "++", 1),
        (orthogonal(3), "++", "++", 3),
        (special_orthogonal(2), "", "++", 2),
        (orthogonal(1), "++", "++", 1),
        (symplectic(2), "", "++", 1),
        (symplectic(2), "++", "++", 2),
        (general_linear(1, 0), "+-", "+-", 1),
        (general_linear(2, 0), "+-", "+-", 2),
        (general_linear(2, 1), "++", "++", 2),
    ],
    ids=str,
)
def test_oracle_dimension(group, source, target, dimension):
    assert hom_dimension(group, source, target) == dimension


def test_oracle_basis_is_equivariant(o3):
    for op in equivariant_hom(o3, "++", "++"):
        assert is_equivariant(op, o3)
    assert is_equivariant(functor_diagram(cap(), o3), o3)
    assert not is_equivariant(TensorOperator(o3.space, "", "+", {(0, 0): 1}), o3)
