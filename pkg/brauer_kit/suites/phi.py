"""
# Der symplektische Kernerzeuger Φ

Φ(n) ist die Summe aller Brauer-Diagramme in B_{n+1}^{n+1}, wird von den
e_i von beiden Seiten annulliert und erfüllt Φ² = (n+1)!Φ bei δ = -2n.
Unter F auf Sp(2n) verschwindet Φ; das zweiseitige Ideal von Φ ist
eindimensional.
"""

from fractions import Fraction
from math import factorial

import loguru

from brauer_kit.base import Verification
from brauer_kit.category.coeff import DiagramSum, compose_sums, rotate_sum, specialize, symmetrizer
from brauer_kit.category.diagram import e_i, enumerate_diagrams
from brauer_kit.functor.functor import functor_brauer
from brauer_kit.functor.space import symplectic
from brauer_kit.invariants.ideals import algebra_ideal_span
from brauer_kit.invariants.kernels import D_pq, Phi, phi_trace_sums

logger = loguru.logger


def all_diagrams(r: int) -> DiagramSum:
    return DiagramSum((r, r), {d: 1 for d in enumerate_diagrams(r, r)})


class PhiSuite(Verification):
    """
    PhiSuite: Eigenschaften von Φ(n)

    Parameter
    ---------
    - max_n : int, optional
        Größtes n für die Identitäten in der Brauer-Algebra (Standard: 3).
    - functor_n : int, optional
        Größtes n für F(Φ) = 0 auf Sp(2n) (Standard: 2).
    - trace_n : int, optional
        Größtes n für die Spursummen (Standard: 4).
    - ideal_n : int, optional
        Größtes n für die Idealdimension (Standard: 2).
    """

    name = "phi"

    def __init__(self, max_n: int = 3, functor_n: int = 2, trace_n: int = 4, ideal_n: int = 2):
        super().__init__()
        self.max_n = max_n
        self.functor_n = functor_n
        self.trace_n = trace_n
        self.ideal_n = ideal_n

    def _algebra(self, n: int) -> None:
        r, delta0 = n + 1, -2 * n
        phi = Phi(n)
        self.check(f"Φ({n}) = Summe aller Diagramme", phi, all_diagrams(r))
        self.check(f"*Φ({n}) = Φ({n})", rotate_sum(phi), phi)
        square = compose_sums(phi, phi, delta0)
        self.check(f"Φ({n})² = {r}!Φ({n})", square, specialize(phi.scale(factorial(r)), delta0))
        for i in range(1, r):
            e = DiagramSum.of(e_i(r, i))
            self.check(f"e_{i}Φ({n}) = 0", compose_sums(e, phi, delta0).is_zero, True)
            self.check(f"Φ({n})e_{i} = 0", compose_sums(phi, e, delta0).is_zero, True)

    def run(self) -> None:
        logger.info(f"Prüfe Φ(n) bis n = {self.max_n}")
        for n in range(1, self.max_n + 1):
            self._algebra(n)
        for n in range(1, self.functor_n + 1):
            image = functor_brauer(Phi(n), symplectic(2 * n))
            self.check(f"F(Φ({n})) = 0 auf Sp({2 * n})", image.is_zero, True)
            self.check(f"str F(Φ({n})) = 0", image.supertrace(), Fraction(0))
        for n in range(1, self.trace_n + 1):
            first, second = phi_trace_sums(n)
            self.check(f"Spursumme n={n}", first, Fraction(0))
            self.check(f"Binomialsumme n={n}", second, 0)
        for n in range(1, self.ideal_n + 1):
            span = algebra_ideal_span([Phi(n)], n + 1, -2 * n)
            self.check(f"dim ⟨Φ({n})⟩ in B_{n + 1}(-{2 * n})", span.dimension, 1)
        for n in range(1, 3):
            self.check(f"D(0,0) = Σ_-1({2 * n + 1}) für n={n}", D_pq(n, 0, 0), symmetrizer(2 * n + 1, -1))
        self.finish()
