"""
# Wörter in den Erzeugern I, X, A, U

Ein Wort ist eine Komposition elementarer Scheiben I^{⊗l} ⊗ Y ⊗ I^{⊗s}
mit Y ∈ {A, U, X}. Die Scheiben werden von oben nach unten notiert,
die letzte Scheibe wird also zuerst ausgeführt.

Berechnung (Scan-Linien-Zerlegung eines Diagramms, von unten nach oben):
1. Untere Knoten durch Kreuzungen umordnen: zuerst die Durchgangsstränge
   (sortiert nach ihrem oberen Partner), dann die Kappenpaare.
2. Kappen von rechts nach links mit A schließen.
3. Für jeden Becher ein U am rechten Rand einfügen.
4. Obere Reihenfolge durch Kreuzungen zur Identität sortieren.

Textformat:
    valency 2 2
    loops 1
    0 X 0
Jede Zeile `l Y s` ist eine Scheibe, die oberste zuerst.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import loguru
import numpy as np

from brauer_kit.category.diagram import (
    BrauerDiagram,
    ScaledDiagram,
    cap,
    compose,
    cross,
    cup,
    identity,
    lower_diagram,
    raise_diagram,
    sharp,
    star,
    tensor_all,
)

logger = loguru.logger

GEN_A = "A"
GEN_U = "U"
GEN_X = "X"

INPUTS = {GEN_A: 2, GEN_U: 0, GEN_X: 2}
OUTPUTS = {GEN_A: 0, GEN_U: 2, GEN_X: 2}


@dataclass(frozen=True)
class ElementarySlice:
    left: int
    gen: str
    right: int

    def __post_init__(self):
        if self.gen not in INPUTS:
            raise ValueError(f"Unbekannter Erzeuger {self.gen!r}. Erlaubt: A, U, X")
        if self.left < 0 or self.right < 0:
            raise ValueError(f"Negative Stranganzahl in Scheibe ({self.left}, {self.gen}, {self.right})")

    @property
    def in_width(self) -> int:
        return self.left + self.right + INPUTS[self.gen]

    @property
    def out_width(self) -> int:
        return self.left + self.right + OUTPUTS[self.gen]

    @property
    def abscissa(self) -> int:
        return self.left + 1

    def diagram(self) -> BrauerDiagram:
        return _slice_diagram(self.left, self.gen, self.right)

    def shifted(self, right: int = 0, left: int = 0) -> "ElementarySlice":
        return ElementarySlice(self.left + left, self.gen, self.right + right)

    def __str__(self) -> str:
        return f"{self.left} {self.gen} {self.right}"


@lru_cache(maxsize=4096)
def _slice_diagram(left: int, gen: str, right: int) -> BrauerDiagram:
    core = {GEN_A: cap, GEN_U: cup, GEN_X: cross}[gen]()
    return tensor_all([identity(left), core, identity(right)])


@dataclass(frozen=True)
class GeneratorWord:
    """
    GeneratorWord: reguläre Darstellung eines skalierten Diagramms

    Eigenschaften
    -------------
    - k, ell : int
        Randvalenz (unten, oben).
    - slices : tuple[ElementarySlice, ...]
        Scheiben von oben nach unten.
    - loops : int
        Bereits entfernte Schleifen (Faktor δ^loops).

    Beispiel
    -------
    ```
    w = GeneratorWord(0, 0, (ElementarySlice(0, "A", 0), ElementarySlice(0, "U", 0)))
    evaluate(w)  # leeres Diagramm, loops=1
    ```
    """

    k: int
    ell: int
    slices: tuple[ElementarySlice, ...] = field(default=())
    loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "slices", tuple(self.slices))
        if self.loops < 0:
            raise ValueError(f"Schleifenzahl muss nicht-negativ sein. Aktuell: {self.loops}")
        if not self.slices:
            if self.k != self.ell:
                raise ValueError(f"Das leere Wort braucht k == l. Aktuell: ({self.k}, {self.ell})")
            return
        if self.slices[-1].in_width != self.k:
            raise ValueError(
                f"Unterste Scheibe {self.slices[-1]} erwartet {self.slices[-1].in_width} Stränge, "
                f"das Wort hat unten {self.k}"
            )
        if self.slices[0].out_width != self.ell:
            raise ValueError(
                f"Oberste Scheibe {self.slices[0]} liefert {self.slices[0].out_width} Stränge, "
                f"das Wort hat oben {self.ell}"
            )
        for i in range(len(self.slices) - 1):
            upper, lower = self.slices[i], self.slices[i + 1]
            if upper.in_width != lower.out_width:
                raise ValueError(f"Scheiben {i} und {i + 1} passen nicht zusammen: {upper} über {lower}")

    @property
    def valency(self) -> tuple[int, int]:
        return self.k, self.ell

    def __len__(self) -> int:
        return len(self.slices)

    def with_slices(self, slices, loops: int | None = None) -> "GeneratorWord":
        return GeneratorWord(self.k, self.ell, tuple(slices), self.loops if loops is None else loops)

    def to_text(self) -> str:
        lines = [f"valency {self.k} {self.ell}"]
        if self.loops:
            lines.append(f"loops {self.loops}")
        lines += [str(s) for s in self.slices]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "valency": [self.k, self.ell],
            "loops": self.loops,
            "slices": [[s.left, s.gen, s.right] for s in self.slices],
        }


def parse_word(text: str) -> GeneratorWord:
    valency = None
    loops = 0
    slices = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "valency":
                valency = (int(parts[1]), int(parts[2]))
            elif parts[0] == "loops":
                loops = int(parts[1])
            elif len(parts) == 3:
                slices.append(ElementarySlice(int(parts[0]), parts[1].upper(), int(parts[2])))
            else:
                raise ValueError(line)
        except (IndexError, ValueError) as error:
            raise ValueError(f"Zeile {number} ist keine gültige Scheibe 'l Y s': {raw!r}") from error
    if valency is None:
        if not slices:
            raise ValueError("Das leere Wort braucht eine Zeile 'valency k l'")
        valency = (slices[-1].in_width, slices[0].out_width)
    return GeneratorWord(valency[0], valency[1], tuple(slices), loops)


def evaluate(w: GeneratorWord) -> ScaledDiagram:
    d = identity(w.k)
    loops = w.loops
    for s in reversed(w.slices):
        scaled = compose(s.diagram(), d)
        d = scaled.diagram
        loops += scaled.loops
    return ScaledDiagram(d, loops)


def equivalent(w1: GeneratorWord, w2: GeneratorWord) -> bool:
    if w1.valency != w2.valency:
        raise ValueError(f"Wörter haben verschiedene Valenzen: {w1.valency} und {w2.valency}")
    return evaluate(w1) == evaluate(w2)


def sorting_swaps(labels: list[int], target: list[int], rng: np.random.Generator | None = None):
    """Kreuzungen (von unten nach oben), die `labels` in die Reihenfolge `target` bringen."""
    rank = {label: i for i, label in enumerate(target)}
    values = [rank[label] for label in labels]
    width = len(values)
    swaps = []
    while True:
        inversions = [i for i in range(width - 1) if values[i] > values[i + 1]]
        if not inversions:
            return swaps
        i = inversions[0] if rng is None else int(rng.choice(inversions))
        values[i], values[i + 1] = values[i + 1], values[i]
        swaps.append(ElementarySlice(i, GEN_X, width - i - 2))


def _scan_line(d: BrauerDiagram, rng: np.random.Generator | None = None) -> list[ElementarySlice]:
    k = d.k
    partner = d.partner_map()
    through = sorted((b for b in range(1, k + 1) if partner[b] > k), key=lambda b: partner[b])
    caps = [p for p in d.pairs if p[1] <= k]
    cups = [(a - k, b - k) for a, b in d.pairs if a > k]
    if rng is not None:
        caps = [caps[i] if rng.integers(2) else caps[i][::-1] for i in rng.permutation(len(caps))]
        cups = [cups[i] for i in rng.permutation(len(cups))]

    slices = sorting_swaps(list(range(1, k + 1)), through + [n for pair in caps for n in pair], rng)
    width = k
    for _ in caps:
        slices.append(ElementarySlice(width - 2, GEN_A, 0))
        width -= 2

    current = [partner[b] - k for b in through]
    for a, b in cups:
        slices.append(ElementarySlice(width, GEN_U, 0))
        width += 2
        current += [a, b]
    slices += sorting_swaps(current, sorted(current), rng)
    return slices


def from_diagram(d: BrauerDiagram) -> GeneratorWord:
    return GeneratorWord(d.k, d.ell, tuple(reversed(_scan_line(d))))


def mirror_word(d: BrauerDiagram) -> GeneratorWord:
    """Wort für d aus der Zerlegung von sharp(d), jede Scheibe gespiegelt."""
    word = from_diagram(sharp(d))
    return GeneratorWord(d.k, d.ell, tuple(ElementarySlice(s.right, s.gen, s.left) for s in word.slices))


def star_word(d: BrauerDiagram) -> GeneratorWord:
    """Wort für d aus der Zerlegung von star(d): Reihenfolge umkehren, A und U tauschen."""
    word = from_diagram(star(d))
    swap = {GEN_A: GEN_U, GEN_U: GEN_A, GEN_X: GEN_X}
    return GeneratorWord(
        d.k, d.ell, tuple(ElementarySlice(s.left, swap[s.gen], s.right) for s in reversed(word.slices))
    )


def random_word(d: BrauerDiagram, seed: int = 0, insertions: int = 0) -> GeneratorWord:
    """Zufällige Scan-Linien-Zerlegung, optional mit eingefügten Paaren X∘X."""
    rng = np.random.default_rng(seed)
    slices = _scan_line(d, rng)
    for _ in range(insertions):
        widths = [d.k] + [s.out_width for s in slices]
        level = int(rng.integers(len(widths)))
        width = widths[level]
        if width < 2:
            continue
        i = int(rng.integers(width - 1))
        pair = ElementarySlice(i, GEN_X, width - i - 2)
        slices[level:level] = [pair, pair]
    return GeneratorWord(d.k, d.ell, tuple(reversed(slices)))


def raise_word(w: GeneratorWord) -> GeneratorWord:
    """R(𝔇) = (D₁⊗I)∘…∘(D_n⊗I)∘(I^{⊗(k-1)}⊗U)."""
    if w.k < 1:
        raise ValueError(f"R benötigt k >= 1. Aktuell: Valenz {w.valency}")
    slices = tuple(s.shifted(right=1) for s in w.slices) + (ElementarySlice(w.k - 1, GEN_U, 0),)
    return GeneratorWord(w.k - 1, w.ell + 1, slices, w.loops)


def lower_word(w: GeneratorWord) -> GeneratorWord:
    """L(𝔇) = (I^{⊗(l-1)}⊗A)∘(D₁⊗I)∘…∘(D_n⊗I)."""
    if w.ell < 1:
        raise ValueError(f"L benötigt l >= 1. Aktuell: Valenz {w.valency}")
    slices = (ElementarySlice(w.ell - 1, GEN_A, 0),) + tuple(s.shifted(right=1) for s in w.slices)
    return GeneratorWord(w.k + 1, w.ell - 1, slices, w.loops)


def check_raise_lower(w: GeneratorWord) -> bool:
    """Vergleicht die Wortoperatoren mit R und L auf Diagrammen."""
    value = evaluate(w)
    ok = True
    if w.k >= 1:
        raised = evaluate(raise_word(w))
        ok &= raised == ScaledDiagram(raise_diagram(value.diagram), value.loops)
    if w.ell >= 1:
        lowered = evaluate(lower_word(w))
        ok &= lowered == ScaledDiagram(lower_diagram(value.diagram), value.loops)
    return bool(ok)
