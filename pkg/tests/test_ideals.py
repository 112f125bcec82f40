import pytest

from brauer_kit.category.coeff import DiagramSum
from brauer_kit.category.diagram import e_i, enumerate_diagrams, identity, raise_all
from brauer_kit.invariants.ideals import (
    IdealSpan,
    algebra_ideal_span,
    check_symmetries,
    oriented_tensor_ideal_span,
    raise_sum,
    sum_to_vector,
    tensor_ideal_span,
    vector_to_sum,
)
from brauer_kit.invariants.young import young_idempotent


def test_coordinates(tangle2):
    basis = enumerate_diagrams(2, 2)
    v = sum_to_vector(tangle2.scale(3), basis)
    assert v == {0: 3}
    assert vector_to_sum(v, basis, (2, 2)) == tangle2.scale(3)
    with pytest.raises(ValueError):
        sum_to_vector(tangle2, [identity(2)])


def test_algebra_ideal(one2, swap2, tangle2):
    span = algebra_ideal_span([one2 - tangle2], 2, 1)
    assert isinstance(span, IdealSpan)
    assert span.dimension == 2
    assert span.contains(swap2 - tangle2)
    assert span.contains(one2 - swap2)
    assert not span.contains(one2)


def test_algebra_ideal_in_symmetric_group(one2, swap2):
    span = algebra_ideal_span([one2 - swap2], 2, 1, permutations_only=True)
    assert span.dimension == 1
    assert span.contains(swap2 - one2)
    with pytest.raises(ValueError):
        algebra_ideal_span([DiagramSum.of(e_i(2, 1))], 2, 1, permutations_only=True)


def test_algebra_ideal_rejects_wrong_valency(one2):
    with pytest.raises(ValueError):
        algebra_ideal_span([one2], 3, 1)


def test_raise_sum(one2):
    raised = raise_sum(one2)
    assert tuple(raised.valency) == (0, 4)
    assert raised == DiagramSum.of(raise_all(identity(2)))


def test_tensor_ideal(one2, swap2, tangle2):
    span = tensor_ideal_span(one2 - tangle2, 2, 2, 1)
    assert span.dimension == 2
    assert span.contains(one2 - swap2)
    assert all(x.valency == (2, 2) for x in span.elements())


def test_tensor_ideal_of_odd_valency_is_empty(one2):
    span = tensor_ideal_span(one2, 1, 2, 1)
    assert span.dimension == 0


def test_symmetries_do_not_change_the_ideal():
    y = young_idempotent(1, 0)
    plain = tensor_ideal_span(y.element, 1, 3, 1)
    reduced = tensor_ideal_span(y.element, 1, 3, 1, y.symmetries())
    assert plain.dimension == reduced.dimension
    assert all(plain.contains(x) for x in reduced.elements())


def test_wrong_symmetry_sign(one2, swap2):
    with pytest.raises(ValueError):
        check_symmetries(raise_sum(one2 - swap2), [((1, 2, 4, 3), 1)])


def test_oriented_tensor_ideal(one2, swap2):
    span = oriented_tensor_ideal_span(one2 - swap2, ("++", "++"), "+-", "+-", 1)
    assert span.dimension == 1
    assert span.words == ("+-", "+-")
    assert span.to_json()["source"] == "+-"
    with pytest.raises(ValueError):
        oriented_tensor_ideal_span(one2 - swap2, ("+", "++"), "+-", "+-", 1)


def test_json(one2, tangle2):
    data = algebra_ideal_span([one2 - tangle2], 2, 1).to_json()
    assert data["valency"] == [2, 2]
    assert data["delta"] == "1"
    assert data["dimension"] == 2
    assert len(data["basis"]) == 2
