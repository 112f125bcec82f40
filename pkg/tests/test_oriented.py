from math import factorial

import pytest

from brauer_kit.category.diagram import BrauerDiagram, cap, cross, cup, e_i, identity
from brauer_kit.category.oriented import (
    GENERATORS,
    RELATIONS,
    OrientedDiagram,
    check_relation,
    compose_oriented,
    enumerate_oriented,
    from_signs,
    join,
    negative,
    oriented_identity,
    random_oriented,
    reverse,
    sign_length,
    sorted_signs,
    sorting_diagram,
    tensor_oriented,
    transport_iso,
    walled_brauer_basis,
)


def test_sign_helpers():
    assert join("+", "--") == "+--"
    assert negative("+-+") == "-+-"
    assert reverse("++-") == "-++"
    assert sign_length("+-+") == (2, 1)
    assert sorted_signs("-+-+") == "++--"
    with pytest.raises(ValueError):
        negative("+x")


def test_generators_carry_their_signs():
    assert (GENERATORS["X"].source, GENERATORS["X"].target) == ("++", "++")
    assert (GENERATORS["A+"].source, GENERATORS["A+"].target) == ("-+", "")
    assert (GENERATORS["U-"].source, GENERATORS["U-"].target) == ("", "-+")
    assert GENERATORS["A+"].tails == frozenset({1})


def test_unorientable_arc():
    with pytest.raises(ValueError):
        from_signs(cap(), "++", "")
    with pytest.raises(ValueError):
        from_signs(identity(1), "+", "-")
    with pytest.raises(ValueError):
        from_signs(cup(), "", "+")


def test_tails_must_cover_each_arc_once():
    with pytest.raises(ValueError):
        OrientedDiagram(cap(), frozenset({1, 2}))
    with pytest.raises(ValueError):
        OrientedDiagram(cap(), frozenset())


def test_closed_loop():
    d, loops = compose_oriented(GENERATORS["A+"], GENERATORS["U-"])
    assert d.diagram == BrauerDiagram(0, 0)
    assert loops == 1


def test_signs_must_match():
    with pytest.raises(ValueError):
        compose_oriented(GENERATORS["A+"], GENERATORS["U+"])


def test_identity_is_neutral():
    x = GENERATORS["X"]
    assert compose_oriented(x, oriented_identity("++")) == (x, 0)
    assert compose_oriented(x, x) == (oriented_identity("++"), 0)


def test_tensor_oriented():
    d = tensor_oriented(GENERATORS["I+"], GENERATORS["A-"])
    assert d.source == "++-"
    assert d.target == "+"


def test_mixed_endomorphisms():
    basis = enumerate_oriented("+-", "+-")
    assert {d.diagram for d in basis} == {identity(2), e_i(2, 1)}
    assert all(cross() != d.diagram for d in basis)


@pytest.mark.parametrize("r, s", [(0, 0), (1, 0), (2, 0), (1, 1), (2, 1), (1, 2), (2, 2), (3, 1)])
def test_walled_brauer_dimension(r, s):
    assert len(walled_brauer_basis(r, s)) == factorial(r + s)


@pytest.mark.parametrize("relation", RELATIONS, ids=[relation.name for relation in RELATIONS])
def test_presentation(relation):
    assert check_relation(relation)


@pytest.mark.parametrize("seed", range(40))
def test_arc_counts(seed):
    k = seed % 5
    ell = (seed // 5) % 4 * 2 + k % 2
    assert random_oriented(k, ell, seed=seed).arc_counts_hold()


def test_random_oriented_rejects_odd_valency():
    with pytest.raises(ValueError):
        random_oriented(1, 2)


def test_json():
    d = GENERATORS["U+"]
    data = d.to_json()
    assert data["source"] == "" and data["target"] == "+-"
    assert OrientedDiagram.from_json(data) == d
    assert OrientedDiagram.from_json({"k": 0, "ell": 2, "pairs": [[1, 2]], "source": "", "target": "+-"}) == d
    with pytest.raises(ValueError):
        OrientedDiagram.from_json({"k": 0, "ell": 2, "pairs": [[1, 2]], "tails": [1], "target": "-+"})


def test_sorting_diagram():
    d = sorting_diagram("-+-")
    assert d.source == "-+-"
    assert d.target == "+--"


@pytest.mark.parametrize("eta", ["+", "-+", "+-+", "--+"])
def test_transport(eta):
    iso = transport_iso(eta)
    assert iso.target == sorted_signs(eta)
    assert iso.check()
