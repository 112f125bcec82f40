"""
# Die orthogonalen Kernelemente E_p

Für m <= 3 und alle p:

- diagrammatische Konstruktion = geschlossene Formel,
- *E_p = E_{m+1-p},
- F_p E_p = E_p F_p = p!(m+1-p)! E_p,
- e_i E_p = E_p e_i = 0 bei δ = m,
- D E_p = E_p D = 0 für jedes Diagramm mit weniger als m+1 Durchgangssträngen,
- X_{p,m+1-p} E_p X_{m+1-p,p} = E_{m+1-p}.
"""

from math import factorial

import loguru

from brauer_kit.base import Verification
from brauer_kit.category.coeff import DiagramSum, compose_sums, rotate_sum
from brauer_kit.category.diagram import X_cross, e_i
from brauer_kit.invariants.kernels import E_p, E_p_formula, block_symmetrizer, low_rank_diagrams

logger = loguru.logger


def is_integral(x: DiagramSum) -> bool:
    return all(c.denominator == 1 for c in x.numeric_terms().values())


class EpSuite(Verification):
    """
    EpSuite: Identitäten der Elemente E_p(m)

    Parameter
    ---------
    - max_m : int, optional
        Größtes m (Standard: 3).
    - exhaustive : bool, optional
        Annullierung durch alle Diagramme mit wenigen Durchgangssträngen prüfen (Standard: True).
    """

    name = "ep"

    def __init__(self, max_m: int = 3, exhaustive: bool = True):
        super().__init__()
        self.max_m = max_m
        self.exhaustive = exhaustive

    def _single(self, m: int, p: int, elements: dict[int, DiagramSum]) -> None:
        n = m + 1
        e = elements[p]
        self.check(f"m={m}: E_{p} = Formel", e, E_p_formula(m, p))
        self.check(f"m={m}: E_{p} ganzzahlig", is_integral(e), True)
        self.check(f"m={m}: *E_{p} = E_{n - p}", rotate_sum(e), elements[n - p])
        block = block_symmetrizer(m, p)
        scaled = e.scale(factorial(p) * factorial(n - p))
        self.check(f"m={m}: F_{p}E_{p} = {p}!{n - p}!E_{p}", compose_sums(block, e), scaled)
        self.check(f"m={m}: E_{p}F_{p} = {p}!{n - p}!E_{p}", compose_sums(e, block), scaled)
        for i in range(1, n):
            cap_cup = DiagramSum.of(e_i(n, i))
            self.check(f"m={m}: e_{i}E_{p} = 0", compose_sums(cap_cup, e, m).is_zero, True)
            self.check(f"m={m}: E_{p}e_{i} = 0", compose_sums(e, cap_cup, m).is_zero, True)
        lhs = compose_sums(DiagramSum.of(X_cross(p, n - p)), compose_sums(e, DiagramSum.of(X_cross(n - p, p))))
        self.check(f"m={m}: X E_{p} X = E_{n - p}", lhs, elements[n - p])
        if self.exhaustive:
            low = low_rank_diagrams(n, n)
            ok = all(
                compose_sums(DiagramSum.of(d), e, m).is_zero and compose_sums(e, DiagramSum.of(d), m).is_zero
                for d in low
            )
            self.check(f"m={m}: D E_{p} = E_{p} D = 0 für {len(low)} Diagramme", ok, True)

    def run(self) -> None:
        logger.info(f"Prüfe E_p bis m = {self.max_m}")
        for m in range(1, self.max_m + 1):
            elements = {p: E_p(m, p) for p in range(m + 2)}
            for p in range(m + 2):
                self._single(m, p, elements)
        self.finish()
