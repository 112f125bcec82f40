"""
# Σ-Identitäten

Rekursion, Schließen eines Strangs, Herunterbiegen des letzten Strangs und
die Kappen-Becher-Identität für Σ_{-1}(r), alle mit symbolischem δ.
"""

from math import factorial

import loguru

from brauer_kit.base import Verification
from brauer_kit.category.coeff import compose_sums, symmetrizer
from brauer_kit.invariants.kernels import sigma_bend, sigma_caps, sigma_closure, sigma_recursion

logger = loguru.logger


class SigmaSuite(Verification):
    """
    SigmaSuite: Identitäten der Symmetrisierer Σ_ε(r)

    Parameter
    ---------
    - max_rank : int, optional
        Größtes r (Standard: 5).
    - max_cups : int, optional
        Größte Becherzahl k in der Kappen-Becher-Identität (Standard: 2).
    """

    name = "sigma-lemmas"

    def __init__(self, max_rank: int = 5, max_cups: int = 2):
        super().__init__()
        self.max_rank = max_rank
        self.max_cups = max_cups

    def run(self) -> None:
        logger.info(f"Prüfe Σ-Identitäten bis r = {self.max_rank}")
        for eps in (1, -1):
            for r in range(1, self.max_rank + 1):
                if r >= 2:
                    self.check(f"Rekursion Σ_{eps:+d}({r})", *sigma_recursion(r, eps))
                self.check(f"Schließen Σ_{eps:+d}({r})", *sigma_closure(r, eps))
                self.check(f"Biegen Σ_{eps:+d}({r})", *sigma_bend(r, eps))
                sigma = symmetrizer(r, eps)
                self.check(f"Σ_{eps:+d}({r})² = {r}!Σ", compose_sums(sigma, sigma), sigma.scale(factorial(r)))
        for r in range(2, self.max_rank + 1):
            for k in range(0, min(self.max_cups, r // 2) + 1):
                self.check(f"Kappe auf Σ_-1({r}) mit {k} Bechern", *sigma_caps(r, k))
        self.finish()
