"""
# Orientierte Brauer-Kategorie

- Relationen der Präsentation diagrammatisch und unter F auf GL(2|0), GL(1|1),
- Walled-Brauer-Dimensionen (r+s)!,
- Bogenzählung an zufälligen orientierten Diagrammen,
- Transport OB_η^η ≅ OB_{η̄}^{η̄},
- Tensorideal von e(1, 0) in OB_{+-}^{+-} gegen den Kern von F für GL(1).
"""

import itertools
from math import factorial

import loguru

from brauer_kit.base import Verification
from brauer_kit.category.oriented import (
    MINUS,
    PLUS,
    RELATIONS,
    check_relation,
    random_oriented,
    transport_iso,
    walled_brauer_basis,
)
from brauer_kit.functor.functor import oriented_relations
from brauer_kit.functor.space import general_linear
from brauer_kit.invariants.fundamental import kernel_basis
from brauer_kit.invariants.ideals import oriented_tensor_ideal_span
from brauer_kit.invariants.young import young_idempotent

logger = loguru.logger


class OrientedSuite(Verification):
    """
    OrientedSuite: Präsentation, Walled-Brauer-Algebren und Transport

    Parameter
    ---------
    - samples : int, optional
        Anzahl zufälliger Diagramme für die Bogenzählung (Standard: 1000).
    - max_walled : int, optional
        Größtes r + s für die Walled-Brauer-Dimension (Standard: 4).
    - spaces : tuple[tuple[int, int], ...], optional
        Superdimensionen (m, l) für die Relationen unter F.
    """

    name = "oriented"

    def __init__(self, samples: int = 1000, max_walled: int = 4, spaces=((2, 0), (1, 1))):
        super().__init__()
        self.samples = samples
        self.max_walled = max_walled
        self.spaces = tuple(spaces)

    def run(self) -> None:
        logger.info("Prüfe die orientierte Brauer-Kategorie")
        for relation in RELATIONS:
            self.check(f"diagrammatisch: {relation.name}", check_relation(relation), True)
        for m, ell in self.spaces:
            group = general_linear(m, ell)
            for claim, lhs, rhs in oriented_relations(group):
                self.check(f"{group}: {claim}", lhs, rhs)
        for total in range(self.max_walled + 1):
            for r in range(total + 1):
                basis = walled_brauer_basis(r, total - r)
                self.check(f"dim Walled-Brauer ({r}, {total - r})", len(basis), factorial(total))
        ok = True
        for seed in range(self.samples):
            k = seed % 5
            ell = (seed // 5) % 4 * 2 + k % 2
            ok &= random_oriented(k, ell, seed=seed).arc_counts_hold()
        self.check(f"Bogenzählung an {self.samples} Zufallsdiagrammen", ok, True)
        for length in range(1, 4):
            for signs in itertools.product((PLUS, MINUS), repeat=length):
                eta = "".join(signs)
                self.check(f"Transport {eta} -> sortiert", transport_iso(eta).check(), True)
        gl1 = general_linear(1, 0)
        y = young_idempotent(1, 0)
        span = oriented_tensor_ideal_span(y.element, ("++", "++"), "+-", "+-", gl1.delta)
        kernel = kernel_basis(gl1, 2, 2, "+-", "+-")
        self.check("GL(1|0): 𝒥(e(1,0)) = Ker F in OB_{+-}^{+-}", span.dimension, len(kernel))
        self.finish()
