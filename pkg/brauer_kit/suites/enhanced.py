"""
# Erweiterte Brauer-Kategorie

Relationen von Δ_m unter F, die erzwungenen Werte δ = m und Σ_{m+1} = 0 sowie
die Zerlegung der Hom-Räume in Diagramme ohne und mit Δ_m.
"""

from fractions import Fraction
from math import factorial

import loguru

from brauer_kit.base import Verification
from brauer_kit.invariants.enhanced import check_relations, forced_parameters, fullness_check, sigma_vanishing

logger = loguru.logger


class EnhancedSuite(Verification):
    """
    EnhancedSuite: Δ_m, erzwungene Parameter und Vollständigkeit

    Parameter
    ---------
    - ranks : tuple[int, ...], optional
        Werte von m für Relationen und Vollständigkeit (Standard: (2, 3)).
    - max_nodes : int, optional
        Höchstens so viele Randknoten s + t bei der Vollständigkeit (Standard: 4).
    """

    name = "enhanced"

    def __init__(self, ranks: tuple[int, ...] = (2, 3), max_nodes: int = 4):
        super().__init__()
        self.ranks = tuple(ranks)
        self.max_nodes = max_nodes

    def run(self) -> None:
        logger.info(f"Prüfe die erweiterte Kategorie für m in {self.ranks}")
        for m in self.ranks:
            for claim, ok in check_relations(m).items():
                self.check(f"m={m}: {claim}", ok, True)
            forced = forced_parameters(m)
            self.check(f"m={m}: gemeinsame Nullstelle", forced.common, (Fraction(m),))
            self.check(f"m={m}: δ(δ-1)⋯(δ-m+1) bei δ=m", forced.product_at_m, Fraction(factorial(m)))
            self.check(f"m={m}: f_m(m)", forced.f_at_m, Fraction(0))
            for s in range(self.max_nodes + 1):
                for t in range(self.max_nodes + 1 - s):
                    result = fullness_check(m, s, t)
                    claim = f"m={m}: Vollständigkeit bei ({s}, {t})"
                    self.check(claim, result.combined_rank, result.oracle, passed=result.passed)
        for m in range(1, 4):
            self.check(f"F(Σ_{{{m + 1}}}) = 0 für SO({m})", sigma_vanishing(m), True)
        self.finish()

