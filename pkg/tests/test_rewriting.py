import pytest

from brauer_kit.base import RewriteStall
from brauer_kit.category import rewriting
from brauer_kit.category.diagram import cup, enumerate_diagrams
from brauer_kit.category.rewriting import (
    BACKWARD,
    FORWARD,
    RewriteStep,
    canonical_cup_word,
    invert_trace,
    reduce_cups,
    replay,
    rewrite_trace,
    sorting_permutation,
)
from brauer_kit.category.words import (
    ElementarySlice,
    GeneratorWord,
    evaluate,
    from_diagram,
    mirror_word,
    random_word,
    star_word,
)

CASES = enumerate_diagrams(2, 2) + enumerate_diagrams(1, 3) + enumerate_diagrams(0, 4)

LOOP = RewriteStep("AU", 0, FORWARD, (ElementarySlice(0, "A", 0), ElementarySlice(0, "U", 0)), (), 1)


@pytest.mark.parametrize("d", CASES)
def test_trace_reaches_target(d):
    w1, w2 = from_diagram(d), mirror_word(d)
    steps = rewrite_trace(w1, w2)
    assert replay(w1, steps) == w2
    assert all(step.is_sound() for step in steps)


@pytest.mark.parametrize("d", enumerate_diagrams(0, 4))
def test_trace_between_random_words(d):
    w1, w2 = star_word(d), random_word(d, seed=1, insertions=1)
    assert replay(w1, rewrite_trace(w1, w2)) == w2


def test_trace_of_identical_words_is_empty():
    word = from_diagram(enumerate_diagrams(2, 2)[0])
    assert rewrite_trace(word, word) == []


def test_trace_rejects_different_diagrams():
    a, b = enumerate_diagrams(2, 2)[:2]
    with pytest.raises(ValueError):
        rewrite_trace(from_diagram(a), from_diagram(b))


def test_loop_step():
    assert LOOP.is_sound()
    assert LOOP.window_valency() == (0, 0)
    inverse = LOOP.inverse()
    assert inverse.direction == BACKWARD
    assert inverse.loop_delta == -1
    assert inverse.inverse() == LOOP
    assert LOOP.to_json()["before"] == ["0 A 0", "0 U 0"]


def test_soundness_ignores_spectator_strands():
    lifted = LOOP.lifted()
    assert lifted.before[0] == ElementarySlice(0, "A", 1)
    assert lifted.is_sound()
    padded = tuple(s.shifted(left=2, right=1) for s in (ElementarySlice(0, "X", 0), ElementarySlice(0, "X", 0)))
    assert RewriteStep("XX", 3, FORWARD, padded, ()).is_sound()
    missing_loop = RewriteStep("AU", 0, FORWARD, LOOP.before, ())
    assert not missing_loop.is_sound()
    assert not missing_loop.lifted().is_sound()


def test_invert_trace():
    word = GeneratorWord(0, 0, LOOP.before)
    reached = replay(word, [LOOP])
    assert reached == GeneratorWord(0, 0, (), 1)
    assert replay(reached, invert_trace([LOOP])) == word


def test_canonical_cup_word():
    word = canonical_cup_word(2, loops=1)
    assert word.to_text() == "valency 0 4\nloops 1\n0 U 2\n0 U 0\n"
    value = evaluate(word)
    assert value.diagram.pairs == ((1, 2), (3, 4))
    assert value.loops == 1


@pytest.mark.parametrize("r", [1, 2, 3])
def test_reduce_cups(r):
    d = enumerate_diagrams(0, 2 * r)[0]
    word = random_word(d, seed=r, insertions=2)
    steps, reduced = reduce_cups(word)
    assert reduced == canonical_cup_word(r, evaluate(word).loops)
    assert replay(word, steps) == reduced


def test_reduce_cups_needs_cups_only_valency():
    with pytest.raises(ValueError):
        reduce_cups(from_diagram(enumerate_diagrams(2, 2)[0]))


def test_sorting_permutation():
    d = enumerate_diagrams(0, 4)[-1]
    perm = sorting_permutation(d)
    word = GeneratorWord(0, 4, tuple(perm) + from_diagram(d).slices)
    assert evaluate(word).diagram.pairs == ((1, 2), (3, 4))


def test_reduce_cups_stalls_after_quadratic_rounds(monkeypatch):
    word = from_diagram(cup())
    monkeypatch.setattr(rewriting, "_advance", lambda rw, settled: settled)
    with pytest.raises(RewriteStall, match=f"nach {4 * (len(word) + 2) ** 2} Runden"):
        reduce_cups(word)
