import pytest

from brauer_kit.category.diagram import (
    A_q,
    BrauerDiagram,
    ScaledDiagram,
    U_q,
    X_cross,
    cap,
    compose,
    cross,
    cup,
    e_i,
    enumerate_diagrams,
    enumerate_permutations,
    identity,
    is_permutation,
    lower_all,
    lower_diagram,
    permutation_diagram,
    permutation_of,
    raise_all,
    raise_diagram,
    render,
    rotate,
    s_i,
    sharp,
    star,
    tensor,
    through_strings,
)

EMPTY = BrauerDiagram(0, 0)


def test_pairs_are_canonical():
    d = BrauerDiagram(2, 2, ((4, 1), (3, 2)))
    assert d.pairs == ((1, 4), (2, 3))
    assert d == cross()


@pytest.mark.parametrize(
    "k, ell, pairs",
    [
        (1, 0, ((1, 1),)),
        (2, 0, ((1, 3),)),
        (2, 2, ((1, 2), (1, 3))),
        (-1, 1, ()),
    ],
)
def test_invalid_diagram(k, ell, pairs):
    with pytest.raises(ValueError):
        BrauerDiagram(k, ell, pairs)


def test_cap_after_cup_is_a_loop():
    assert compose(cap(), cup()) == ScaledDiagram(EMPTY, 1)


def test_cup_after_cap_has_no_loop():
    assert compose(cup(), cap()) == ScaledDiagram(e_i(2, 1), 0)


def test_tangle_squares_to_loop():
    assert compose(e_i(2, 1), e_i(2, 1)) == ScaledDiagram(e_i(2, 1), 1)


def test_swap_is_involution():
    assert compose(s_i(3, 2), s_i(3, 2)) == ScaledDiagram(identity(3), 0)


def test_compose_rejects_wrong_valency():
    with pytest.raises(ValueError):
        compose(cap(), identity(1))


def test_compose_is_associative():
    a, b, c = e_i(3, 1), s_i(3, 2), e_i(3, 2)
    ab = compose(a, b)
    left = compose(ab.diagram, c)
    bc = compose(b, c)
    right = compose(a, bc.diagram)
    assert left.diagram == right.diagram
    assert left.loops + ab.loops == right.loops + bc.loops


@pytest.mark.parametrize(
    "k, ell, count", [(0, 0, 1), (2, 0, 1), (2, 2, 3), (1, 3, 3), (3, 3, 15), (0, 6, 15), (1, 2, 0)]
)
def test_enumerate_counts(k, ell, count):
    diagrams = enumerate_diagrams(k, ell)
    assert len(diagrams) == count
    assert diagrams == sorted(set(diagrams))


def test_enumerate_permutations():
    perms = enumerate_permutations(3)
    assert len(perms) == 6
    assert all(is_permutation(d) for d in perms)


@pytest.mark.parametrize("d", enumerate_diagrams(2, 2) + enumerate_diagrams(1, 3))
def test_involutions(d):
    assert star(star(d)) == d
    assert sharp(sharp(d)) == d
    assert rotate(rotate(d)) == d


def test_star_reverses_composition():
    a, b = e_i(3, 1), s_i(3, 2)
    assert star(compose(a, b).diagram) == compose(star(b), star(a)).diagram


def test_star_of_cap_is_cup():
    assert star(cap()) == cup()
    assert A_q(1) == cap()
    assert U_q(1) == cup()
    assert U_q(2) == star(A_q(2))


def test_sharp_mirrors_generators():
    assert sharp(s_i(3, 1)) == s_i(3, 2)
    assert sharp(e_i(3, 1)) == e_i(3, 2)


def test_tensor():
    assert tensor(identity(1), identity(1)) == identity(2)
    assert tensor(cup(), cup()).pairs == ((1, 2), (3, 4))
    assert tensor(EMPTY, cross()) == cross()


def test_permutation_roundtrip():
    perm = (3, 1, 2)
    assert permutation_of(permutation_diagram(perm)) == perm
    with pytest.raises(ValueError):
        permutation_of(e_i(2, 1))


def test_cross_diagram():
    assert X_cross(1, 1) == cross()
    assert X_cross(2, 0) == identity(2)
    assert permutation_of(X_cross(2, 1)) == (2, 3, 1)


def test_through_strings():
    assert through_strings(identity(3)) == 3
    assert through_strings(e_i(3, 1)) == 1
    assert through_strings(cup()) == 0


def test_raise_and_lower():
    assert raise_diagram(identity(1)) == cup()
    assert lower_diagram(identity(1)) == cap()
    assert lower_diagram(raise_diagram(cross())) == cross()


@pytest.mark.parametrize("d", enumerate_diagrams(2, 2) + enumerate_diagrams(3, 1))
def test_raise_all_is_invertible(d):
    raised = raise_all(d)
    assert raised.valency == (0, d.k + d.ell)
    assert lower_all(raised, d.k) == d


def test_json():
    d = e_i(3, 2)
    assert BrauerDiagram.from_json(d.to_json()) == d
    assert BrauerDiagram.from_json('{"k": 0, "ell": 2, "pairs": [[1, 2]]}') == cup()
    with pytest.raises(TypeError):
        BrauerDiagram.from_json("[1, 2]")


def test_render():
    text = render(e_i(2, 1))
    assert "Kappe   1-2" in text
    assert "Becher  1'-2'" in text
    assert text.splitlines()[0].startswith("oben")
