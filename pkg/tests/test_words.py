import pytest

from brauer_kit.category.diagram import BrauerDiagram, ScaledDiagram, cross, e_i, enumerate_diagrams
from brauer_kit.category.words import (
    ElementarySlice,
    GeneratorWord,
    check_raise_lower,
    equivalent,
    evaluate,
    from_diagram,
    lower_word,
    mirror_word,
    parse_word,
    random_word,
    raise_word,
    star_word,
)

SMALL = enumerate_diagrams(2, 2) + enumerate_diagrams(1, 3) + enumerate_diagrams(0, 4) + enumerate_diagrams(3, 1)

LOOP_TEXT = """
# Kappe über Becher
valency 0 0
0 A 0
0 U 0
"""


def test_parse_and_evaluate_loop():
    word = parse_word(LOOP_TEXT)
    assert word.valency == (0, 0)
    assert len(word) == 2
    assert evaluate(word) == ScaledDiagram(BrauerDiagram(0, 0), 1)


def test_text_format():
    word = GeneratorWord(2, 2, (ElementarySlice(0, "X", 0),), loops=2)
    assert word.to_text() == "valency 2 2\nloops 2\n0 X 0\n"
    assert parse_word(word.to_text()) == word
    assert evaluate(word) == ScaledDiagram(cross(), 2)


def test_valency_is_inferred():
    word = parse_word("0 U 0\n0 A 0\n")
    assert word.valency == (2, 2)
    assert evaluate(word).diagram == e_i(2, 1)


@pytest.mark.parametrize("text", ["0 Q 0", "0 A", "valency 0 0\n1 A 0", "0 U 0\n0 U 0"])
def test_invalid_words(text):
    with pytest.raises(ValueError):
        parse_word(text)


def test_empty_word_needs_matching_valency():
    with pytest.raises(ValueError):
        GeneratorWord(1, 3)
    assert evaluate(GeneratorWord(2, 2)) == ScaledDiagram(BrauerDiagram(2, 2, ((1, 3), (2, 4))), 0)


@pytest.mark.parametrize("d", SMALL)
def test_decompositions_denote_the_diagram(d):
    expected = ScaledDiagram(d, 0)
    assert evaluate(from_diagram(d)) == expected
    assert evaluate(mirror_word(d)) == expected
    assert evaluate(star_word(d)) == expected
    assert evaluate(random_word(d, seed=7, insertions=2)) == expected


def test_random_word_is_reproducible():
    d = enumerate_diagrams(0, 6)[-1]
    assert random_word(d, seed=3) == random_word(d, seed=3)


def test_equivalent():
    d = enumerate_diagrams(2, 2)[0]
    assert equivalent(from_diagram(d), mirror_word(d))
    assert not equivalent(from_diagram(d), GeneratorWord(2, 2))
    with pytest.raises(ValueError):
        equivalent(from_diagram(d), GeneratorWord(0, 0))


@pytest.mark.parametrize("d", SMALL)
def test_raise_lower_words(d):
    assert check_raise_lower(from_diagram(d))


def test_raise_and_lower_valency():
    word = from_diagram(cross())
    assert raise_word(word).valency == (1, 3)
    assert lower_word(word).valency == (3, 1)
    with pytest.raises(ValueError):
        raise_word(GeneratorWord(0, 0))
