"""
# Wortkalkül: Vollständigkeit der Relationen an Beispielen

Für jedes Brauer-Diagramm mit k + l <= max_nodes werden zwei unabhängig
erzeugte Wörter (Scan-Linie und gespiegelte bzw. zufällige Zerlegung) durch
eine explizite Umschreibefolge verbunden. Jeder Schritt der Folge muss lokal
korrekt sein.
"""

import loguru

from brauer_kit.base import Verification
from brauer_kit.category.diagram import enumerate_diagrams
from brauer_kit.category.rewriting import canonical_cup_word, reduce_cups, rewrite_trace, sorting_permutation
from brauer_kit.category.words import (
    GeneratorWord,
    check_raise_lower,
    evaluate,
    from_diagram,
    mirror_word,
    random_word,
    star_word,
)

logger = loguru.logger


class WordsSuite(Verification):
    """
    WordsSuite: Umschreibefolgen zwischen verschiedenen Wörtern desselben Diagramms

    Parameter
    ---------
    - max_nodes : int, optional
        Höchstens so viele Randknoten k + l (Standard: 8).
    - seed : int, optional
        Startwert für die zufälligen Zerlegungen.
    """

    name = "words"

    def __init__(self, max_nodes: int = 8, seed: int = 0):
        super().__init__()
        self.max_nodes = max_nodes
        self.seed = seed

    def _join(self, claim: str, w1, w2) -> None:
        steps = rewrite_trace(w1, w2)
        sound = all(step.is_sound() for step in steps)
        self.check(claim, len(steps), "lokal korrekt" if sound else "fehlerhaft", passed=sound)

    def run(self) -> None:
        logger.info(f"Prüfe Umschreibefolgen bis k + l = {self.max_nodes}")
        for total in range(0, self.max_nodes + 1, 2):
            for k in range(total + 1):
                diagrams = enumerate_diagrams(k, total - k)
                for index, d in enumerate(diagrams):
                    base = from_diagram(d)
                    self.check(f"R/L auf {d}", check_raise_lower(base), True)
                    self._join(f"Scan-Linie ~ Spiegelung {d}", base, mirror_word(d))
                    self._join(f"Scan-Linie ~ *-Zerlegung {d}", base, star_word(d))
                    seed = self.seed + index
                    self._join(f"Scan-Linie ~ Zufall {d}", base, random_word(d, seed=seed, insertions=1))
        for r in range(1, 4):
            word = random_word(enumerate_diagrams(0, 2 * r)[-1], seed=self.seed, insertions=2)
            _, reduced = reduce_cups(_cups_only(word))
            self.check(f"Kanonische Becherform r={r}", reduced, canonical_cup_word(r, evaluate(word).loops))
        self.finish()


def _cups_only(word: GeneratorWord) -> GeneratorWord:
    """Sortierkreuzungen oben anfügen: das Ergebnis bezeichnet δ^N U^{⊗r}."""
    perm = sorting_permutation(evaluate(word).diagram)
    return word.with_slices(tuple(perm) + word.slices)
