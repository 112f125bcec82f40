"""
# Umschreiben regulärer Ausdrücke

Zwei Wörter für dasselbe skalierte Diagramm werden durch eine explizite
Folge lokaler Relationen ineinander überführt.

Relationen (Fenster von oben nach unten, l/s = Stränge links/rechts):
- XX:             [X(l,s), X(l,s)] = []
- braid:          [X(l,s+1), X(l+1,s), X(l,s+1)] = [X(l+1,s), X(l,s+1), X(l+1,s)]
- AX:             [A(l,s), X(l,s)] = [A(l,s)]
- XU:             [X(l,s), U(l,s)] = [U(l,s)]
- AU:             [A(l,s), U(l,s)] = δ · []
- slide:          [A(l,s+1), X(l+1,s)] = [A(l+1,s), X(l,s+1)]
- slide_star:     [X(l+1,s), U(l,s+1)] = [X(l,s+1), U(l+1,s)]
- straight:       [A(l,s+1), U(l+1,s)] = []
- straight_sharp: [A(l+1,s), U(l,s+1)] = []
- commute:        zwei Scheiben mit disjunktem Träger tauschen die Plätze.

Strategie:
1. k > 0: über L∘R(𝔇) ~ 𝔇 auf Valenz (0, k+l) zurückführen.
2. k = 0: mit einer Permutation P oben konjugieren (P∘P ~ I), sodass
   das Diagramm δ^N U^{⊗r} wird.
3. Das oberste noch nicht erledigte U samt seinem Kreuzungsstapel nach oben
   schieben; jede Scheibe darüber wird kommutiert oder durch eine
   Relation gekürzt.
4. Minimale Wörter (nur U) durch Kommutieren kanonisieren.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import loguru

from brauer_kit.base import RewriteStall
from brauer_kit.category.diagram import BrauerDiagram, ScaledDiagram
from brauer_kit.category.words import (
    GEN_A,
    GEN_U,
    GEN_X,
    ElementarySlice,
    GeneratorWord,
    evaluate,
    lower_word,
    raise_word,
    sorting_swaps,
)

logger = loguru.logger

FORWARD = "forward"
BACKWARD = "backward"

Window = tuple[ElementarySlice, ...]


def _x(left: int, right: int) -> ElementarySlice:
    return ElementarySlice(left, GEN_X, right)


def _a(left: int, right: int) -> ElementarySlice:
    return ElementarySlice(left, GEN_A, right)


def _u(left: int, right: int) -> ElementarySlice:
    return ElementarySlice(left, GEN_U, right)


def _is(s: ElementarySlice, gen: str, left: int, right: int) -> bool:
    return s.gen == gen and s.left == left and s.right == right


# Jede Regel bildet ein Fenster auf sein Bild ab oder liefert None.


def _xx_forward(w: Window) -> Optional[Window]:
    if len(w) == 2 and w[0].gen == GEN_X and w[0] == w[1]:
        return ()
    return None


def _braid(w: Window, up: bool) -> Optional[Window]:
    if len(w) != 3 or any(s.gen != GEN_X for s in w):
        return None
    first = w[0]
    l, r = (first.left, first.right - 1) if up else (first.left - 1, first.right)
    if l < 0 or r < 0:
        return None
    low, high = _x(l, r + 1), _x(l + 1, r)
    if up and w == (low, high, low):
        return (high, low, high)
    if not up and w == (high, low, high):
        return (low, high, low)
    return None


def _absorb_forward(w: Window, gen: str) -> Optional[Window]:
    """AX: [A, X] -> [A] bzw. XU: [X, U] -> [U] bei gleicher Position."""
    if len(w) != 2:
        return None
    top, bottom = w
    if gen == GEN_A and top.gen == GEN_A and _is(bottom, GEN_X, top.left, top.right):
        return (top,)
    if gen == GEN_U and bottom.gen == GEN_U and _is(top, GEN_X, bottom.left, bottom.right):
        return (bottom,)
    return None


def _absorb_backward(w: Window, gen: str) -> Optional[Window]:
    if len(w) != 1:
        return None
    s = w[0]
    if gen == GEN_A and s.gen == GEN_A:
        return (s, _x(s.left, s.right))
    if gen == GEN_U and s.gen == GEN_U:
        return (_x(s.left, s.right), s)
    return None


def _loop_forward(w: Window) -> Optional[Window]:
    if len(w) == 2 and w[0].gen == GEN_A and _is(w[1], GEN_U, w[0].left, w[0].right):
        return ()
    return None


def _slide(w: Window, forward: bool) -> Optional[Window]:
    if len(w) != 2:
        return None
    top, bottom = w
    if top.gen != GEN_A or bottom.gen != GEN_X:
        return None
    if forward and _is(bottom, GEN_X, top.left + 1, top.right - 1):
        return (_a(top.left + 1, top.right - 1), _x(top.left, top.right))
    if not forward and top.left >= 1 and _is(bottom, GEN_X, top.left - 1, top.right + 1):
        return (_a(top.left - 1, top.right + 1), _x(top.left, top.right))
    return None


def _slide_star(w: Window, forward: bool) -> Optional[Window]:
    if len(w) != 2:
        return None
    top, bottom = w
    if top.gen != GEN_X or bottom.gen != GEN_U:
        return None
    if forward and _is(top, GEN_X, bottom.left + 1, bottom.right - 1):
        return (_x(bottom.left, bottom.right), _u(bottom.left + 1, bottom.right - 1))
    if not forward and bottom.left >= 1 and _is(top, GEN_X, bottom.left - 1, bottom.right + 1):
        return (_x(bottom.left, bottom.right), _u(bottom.left - 1, bottom.right + 1))
    return None


def _straight_forward(w: Window, sharp: bool) -> Optional[Window]:
    if len(w) != 2 or w[0].gen != GEN_A or w[1].gen != GEN_U:
        return None
    top, bottom = w
    if not sharp and _is(bottom, GEN_U, top.left + 1, top.right - 1):
        return ()
    if sharp and _is(bottom, GEN_U, top.left - 1, top.right + 1):
        return ()
    return None


RULES: dict[tuple[str, str], Callable[[Window], Optional[Window]]] = {
    ("XX", FORWARD): _xx_forward,
    ("braid", FORWARD): lambda w: _braid(w, True),
    ("braid", BACKWARD): lambda w: _braid(w, False),
    ("AX", FORWARD): lambda w: _absorb_forward(w, GEN_A),
    ("AX", BACKWARD): lambda w: _absorb_backward(w, GEN_A),
    ("XU", FORWARD): lambda w: _absorb_forward(w, GEN_U),
    ("XU", BACKWARD): lambda w: _absorb_backward(w, GEN_U),
    ("AU", FORWARD): _loop_forward,
    ("slide", FORWARD): lambda w: _slide(w, True),
    ("slide", BACKWARD): lambda w: _slide(w, False),
    ("slide_star", FORWARD): lambda w: _slide_star(w, True),
    ("slide_star", BACKWARD): lambda w: _slide_star(w, False),
    ("straight", FORWARD): lambda w: _straight_forward(w, False),
    ("straight_sharp", FORWARD): lambda w: _straight_forward(w, True),
}

LOOP_DELTA = {("AU", FORWARD): 1}


def commute_pair(upper: ElementarySlice, lower: ElementarySlice) -> Optional[Window]:
    """
    Vertauscht zwei Scheiben mit disjunktem Träger: [E, F] -> [F', E'].

    Liegt E rechts vom Ausgang von F, wird diese Lesart bevorzugt.
    """
    in_e, out_e = upper.in_width - upper.left - upper.right, upper.out_width - upper.left - upper.right
    in_f, out_f = lower.in_width - lower.left - lower.right, lower.out_width - lower.left - lower.right
    if upper.left >= lower.left + out_f:
        e = ElementarySlice(upper.left - out_f + in_f, upper.gen, upper.right)
        f = ElementarySlice(lower.left, lower.gen, lower.right - in_e + out_e)
        return (f, e)
    if upper.left + in_e <= lower.left:
        e = ElementarySlice(upper.left, upper.gen, upper.right - out_f + in_f)
        f = ElementarySlice(lower.left - in_e + out_e, lower.gen, lower.right)
        return (f, e)
    return None


@dataclass(frozen=True)
class RewriteStep:
    relation: str
    position: int
    direction: str
    before: Window
    after: Window
    loop_delta: int = 0

    def inverse(self) -> "RewriteStep":
        direction = BACKWARD if self.direction == FORWARD else FORWARD
        return RewriteStep(self.relation, self.position, direction, self.after, self.before, -self.loop_delta)

    def shifted(self, offset: int) -> "RewriteStep":
        return RewriteStep(
            self.relation, self.position + offset, self.direction, self.before, self.after, self.loop_delta
        )

    def lifted(self) -> "RewriteStep":
        """Dieselbe Relation in L(𝔇): eine Scheibe tiefer, ein Strang mehr rechts."""
        return RewriteStep(
            self.relation,
            self.position + 1,
            self.direction,
            tuple(s.shifted(right=1) for s in self.before),
            tuple(s.shifted(right=1) for s in self.after),
            self.loop_delta,
        )

    def window_valency(self) -> tuple[int, int]:
        window = self.before or self.after
        return window[-1].in_width, window[0].out_width

    def is_sound(self) -> bool:
        """Beide Fenster bezeichnen dasselbe skalierte Diagramm."""
        if not self.before and not self.after:
            return self.loop_delta == 0
        return _windows_agree(*_trimmed(self.before, self.after), self.loop_delta)

    def to_json(self) -> dict:
        return {
            "relation": self.relation,
            "position": self.position,
            "direction": self.direction,
            "before": [str(s) for s in self.before],
            "after": [str(s) for s in self.after],
            "loop_delta": self.loop_delta,
        }

    def __str__(self) -> str:
        before = ", ".join(str(s) for s in self.before) or "-"
        after = ", ".join(str(s) for s in self.after) or "-"
        loops = f" (δ{self.loop_delta:+d})" if self.loop_delta else ""
        return f"{self.relation:<15}{self.direction:<9}@{self.position:<3} [{before}] -> [{after}]{loops}"


def _trimmed(before: Window, after: Window) -> tuple[Window, Window]:
    """Gemeinsame Randstränge beider Fenster entfernen."""
    window = before + after
    left = min(s.left for s in window)
    right = min(s.right for s in window)
    return (
        tuple(s.shifted(left=-left, right=-right) for s in before),
        tuple(s.shifted(left=-left, right=-right) for s in after),
    )


@lru_cache(maxsize=65536)
def _windows_agree(before: Window, after: Window, loop_delta: int) -> bool:
    window = before or after
    k, ell = window[-1].in_width, window[0].out_width
    lhs = evaluate(GeneratorWord(k, ell, before, max(-loop_delta, 0)))
    rhs = evaluate(GeneratorWord(k, ell, after, max(loop_delta, 0)))
    return lhs == rhs


def invert_trace(steps: list[RewriteStep]) -> list[RewriteStep]:
    return [step.inverse() for step in reversed(steps)]


class Rewriter:
    """
    Rewriter: veränderliches Wort, auf dem Umschreibeschritte protokolliert werden

    Methoden
    -------
    - rule(position, relation, direction, count)
        Wendet eine benannte Relation auf das Fenster ab `position` an.
    - commute(position)
        Vertauscht die Scheiben `position` und `position + 1`.
    - insert_pair(position, slice)
        Fügt [X, X] ein (XX rückwärts).
    - apply(step)
        Spielt einen fertigen Schritt ab und prüft das Fenster.
    """

    def __init__(self, word: GeneratorWord):
        self.k, self.ell = word.valency
        self.slices = list(word.slices)
        self.loops = word.loops
        self.steps: list[RewriteStep] = []

    @property
    def word(self) -> GeneratorWord:
        return GeneratorWord(self.k, self.ell, tuple(self.slices), self.loops)

    def _record(self, step: RewriteStep) -> None:
        end = step.position + len(step.before)
        self.slices[step.position : end] = list(step.after)
        self.loops += step.loop_delta
        self.steps.append(step)

    def rule(self, position: int, relation: str, direction: str, count: int) -> None:
        before = tuple(self.slices[position : position + count])
        after = RULES[(relation, direction)](before)
        if after is None:
            raise RewriteStall(
                f"Relation {relation} ({direction}) passt nicht auf Position {position}: "
                f"{[str(s) for s in before]}"
            )
        delta = LOOP_DELTA.get((relation, direction), 0)
        self._record(RewriteStep(relation, position, direction, before, after, delta))

    def commute(self, position: int) -> None:
        before = tuple(self.slices[position : position + 2])
        after = commute_pair(*before) if len(before) == 2 else None
        if after is None:
            raise RewriteStall(f"Scheiben an Position {position} kommutieren nicht: {[str(s) for s in before]}")
        self._record(RewriteStep("commute", position, FORWARD, before, after))

    def insert_pair(self, position: int, s: ElementarySlice) -> None:
        self._record(RewriteStep("XX", position, BACKWARD, (), (s, s)))

    def apply(self, step: RewriteStep) -> None:
        end = step.position + len(step.before)
        window = tuple(self.slices[step.position : end])
        if window != step.before:
            raise RewriteStall(
                f"Schritt {step} passt nicht: an Position {step.position} steht {[str(s) for s in window]}"
            )
        self._record(step)


def replay(word: GeneratorWord, steps: list[RewriteStep]) -> GeneratorWord:
    rewriter = Rewriter(word)
    for step in steps:
        rewriter.apply(step)
    return rewriter.word


def canonical_cup_word(r: int, loops: int = 0) -> GeneratorWord:
    """Minimales Wort für δ^N U^{⊗r}: alle Becher an Abszisse 1."""
    return GeneratorWord(0, 2 * r, tuple(_u(0, 2 * (r - 1 - i)) for i in range(r)), loops)


def canonicalize_cups(word: GeneratorWord) -> tuple[list[RewriteStep], GeneratorWord]:
    rewriter = Rewriter(word)
    _canonicalize(rewriter)
    return rewriter.steps, rewriter.word


def _canonicalize(rw: Rewriter) -> None:
    if any(s.gen != GEN_U for s in rw.slices):
        raise RewriteStall("Kanonisierung erwartet ein Wort nur aus U")
    changed = True
    while changed:
        changed = False
        for pos in range(len(rw.slices) - 1):
            if rw.slices[pos].left >= rw.slices[pos + 1].left + 2:
                rw.commute(pos)
                changed = True


def _stack_height(slices: list[ElementarySlice], settled: int, p: int) -> int:
    a = slices[p].left
    s = 0
    while p - s - 1 >= settled:
        above = slices[p - s - 1]
        if above.gen == GEN_X and above.left == a + s + 1:
            s += 1
        else:
            break
    return s


def _advance(rw: Rewriter, settled: int) -> int:
    """Ein Schritt der Stapelreduktion; liefert die neue Zahl erledigter Scheiben."""
    slices = rw.slices
    p = next((i for i in range(settled, len(slices)) if slices[i].gen == GEN_U), None)
    if p is None:
        raise RewriteStall(f"Kein U unterhalb von Position {settled}: {[str(s) for s in slices]}")
    if p == settled:
        return settled + 1

    a = slices[p].left
    s = _stack_height(slices, settled, p)
    e_pos = p - s - 1
    if e_pos < settled:
        raise RewriteStall(f"Stapel der Höhe {s} über U an Position {p} ohne weitere Scheibe")
    e = slices[e_pos]
    b = e.left

    if b <= a - 2 or b >= a + s + 2:
        for pos in range(e_pos, p):
            rw.commute(pos)
        return settled

    if e.gen == GEN_X:
        if b == a - 1:
            for pos in range(e_pos, p - 1):
                rw.commute(pos)
            rw.rule(p - 1, "slide_star", BACKWARD, 2)
        elif b == a and s == 0:
            rw.rule(p - 1, "XU", FORWARD, 2)
        elif b == a:
            for pos in range(e_pos, e_pos + s - 1):
                rw.commute(pos)
            rw.rule(p - 1, "slide_star", FORWARD, 2)
            rw.rule(p - 2, "XX", FORWARD, 2)
        elif a + 1 <= b <= a + s - 1:
            q = p - (b + 1 - a) - 1
            for pos in range(e_pos, q):
                rw.commute(pos)
            rw.rule(q, "braid", FORWARD, 3)
            for pos in range(q + 2, p):
                rw.commute(pos)
        elif b == a + s:
            rw.rule(e_pos, "XX", FORWARD, 2)
        else:
            raise RewriteStall(f"Unerwartete Kreuzung X({b}) über Stapel U({a}) der Höhe {s}")
        return settled

    if e.gen == GEN_A:
        if s == 0 and b == a:
            rw.rule(e_pos, "AU", FORWARD, 2)
        elif s == 0 and b == a + 1:
            rw.rule(e_pos, "straight_sharp", FORWARD, 2)
        elif b == a - 1:
            for pos in range(e_pos, p - 1):
                rw.commute(pos)
            rw.rule(p - 1, "straight", FORWARD, 2)
        elif b == a + s:
            rw.rule(e_pos, "AX", FORWARD, 2)
        elif b == a + s + 1:
            rw.rule(e_pos, "slide", BACKWARD, 2)
            for pos in range(e_pos + 1, p):
                rw.commute(pos)
        else:
            q = p - (b + 1 - a) - 1
            for pos in range(e_pos, q):
                rw.commute(pos)
            rw.rule(q, "slide", FORWARD, 2)
            if b == a:
                rw.rule(q + 1, "XU", FORWARD, 2)
            else:
                rw.rule(q + 1, "XX", FORWARD, 2)
        return settled

    raise RewriteStall(f"Unerwartete Scheibe {e} über U an Position {p}")


def reduce_step(word: GeneratorWord, settled: int = 0) -> tuple[list[RewriteStep], GeneratorWord, int]:
    rw = Rewriter(word)
    settled = _advance(rw, settled)
    return rw.steps, rw.word, settled


def reduce_cups(word: GeneratorWord) -> tuple[list[RewriteStep], GeneratorWord]:
    """Reduziert ein Wort für δ^N U^{⊗r} auf `canonical_cup_word(r, N)`."""
    if word.k != 0:
        raise ValueError(f"reduce_cups erwartet Valenz (0, 2r). Aktuell: {word.valency}")
    rw = Rewriter(word)
    # jede Scheibe passiert jedes U höchstens einmal
    cap = 4 * (len(word) + 2) ** 2
    settled = 0
    rounds = 0
    while settled < len(rw.slices):
        rounds += 1
        if rounds > cap:
            raise RewriteStall(f"Reduktion nach {cap} Runden nicht beendet: {rw.word.to_text()}")
        settled = _advance(rw, settled)
    _canonicalize(rw)
    return rw.steps, rw.word


def sorting_permutation(d: BrauerDiagram) -> list[ElementarySlice]:
    """Kreuzungen P (von oben nach unten) mit P∘d = U^{⊗r} für ein Diagramm der Valenz (0, 2r)."""
    if d.k != 0:
        raise ValueError(f"sorting_permutation erwartet Valenz (0, 2r). Aktuell: {tuple(d.valency)}")
    target = [n for pair in sorted(d.pairs) for n in pair]
    rank = {node: i for i, node in enumerate(target)}
    labels = list(range(1, d.ell + 1))
    swaps = sorting_swaps([rank[n] for n in labels], list(range(d.ell)))
    return list(reversed(swaps))


def reduce_lowered(word: GeneratorWord) -> list[RewriteStep]:
    """Schritte L(R(𝔇)) -> 𝔇."""
    rw = Rewriter(lower_word(raise_word(word)))
    for pos in range(len(word)):
        rw.commute(pos)
    rw.rule(len(word), "straight_sharp", FORWARD, 2)
    return rw.steps


def _trace(w1: GeneratorWord, w2: GeneratorWord) -> list[RewriteStep]:
    if w1 == w2:
        return []
    if w1.k > 0:
        inner = _trace(raise_word(w1), raise_word(w2))
        return invert_trace(reduce_lowered(w1)) + [s.lifted() for s in inner] + reduce_lowered(w2)

    value: ScaledDiagram = evaluate(w1)
    perm = sorting_permutation(value.diagram)
    n = len(perm)
    inserts = Rewriter(w1)
    for j in range(n):
        inserts.insert_pair(j, perm[n - 1 - j])
    conjugated1 = w1.with_slices(tuple(perm) + w1.slices)
    conjugated2 = w2.with_slices(tuple(perm) + w2.slices)
    reduced1, _ = reduce_cups(conjugated1)
    reduced2, _ = reduce_cups(conjugated2)
    return (
        inserts.steps
        + [s.shifted(n) for s in reduced1]
        + [s.shifted(n) for s in invert_trace(reduced2)]
        + invert_trace(inserts.steps)
    )


def rewrite_trace(w1: GeneratorWord, w2: GeneratorWord) -> list[RewriteStep]:
    """
    Explizite Umschreibefolge von w1 nach w2.

    Die Folge wird vor der Rückgabe abgespielt; erreicht sie w2 nicht,
    wird `RewriteStall` ausgelöst.
    """
    if w1.valency != w2.valency:
        raise ValueError(f"Wörter haben verschiedene Valenzen: {w1.valency} und {w2.valency}")
    if evaluate(w1) != evaluate(w2):
        raise ValueError("Die Wörter bezeichnen verschiedene skalierte Diagramme")
    steps = _trace(w1, w2)
    reached = replay(w1, steps)
    if reached != w2:
        raise RewriteStall(f"Umschreibefolge endet bei\n{reached.to_text()}statt bei\n{w2.to_text()}")
    logger.debug(f"Umschreibefolge mit {len(steps)} Schritten für Valenz {w1.valency}")
    return steps
