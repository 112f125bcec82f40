"""
# Relationen unter dem Funktor F

Die Bilder der Erzeuger P, Č, Ĉ (bzw. P^{εε'}, Č, Ĉ im GL-Fall) erfüllen
die Relationen der Brauer-Kategorie bzw. der orientierten Brauer-Kategorie
als exakte Matrixidentitäten. Dazu kommen F(D*) = F(D)* und die
Funktorialität F(D₁∘D₂) = F(D₁)F(D₂) auf allen Paaren in B_2^2.
"""

import loguru

from brauer_kit.base import Verification
from brauer_kit.category.diagram import cap, cup, enumerate_diagrams, star
from brauer_kit.functor.functor import adjoint, check_functoriality, functor_diagram, gl_relations, osp_relations
from brauer_kit.functor.space import SuperSpace, orthosymplectic
from brauer_kit.utils import override, settings

logger = loguru.logger

OSP_SPACES = (SuperSpace(1, 0), SuperSpace(2, 0), SuperSpace(3, 0), SuperSpace(0, 2), SuperSpace(2, 2))
GL_SPACES = (SuperSpace(1, 0), SuperSpace(2, 0), SuperSpace(1, 1), SuperSpace(2, 1))


class FunctorRelationsSuite(Verification):
    """
    FunctorRelationsSuite: Relationen der Erzeugerbilder auf Testräumen

    Parameter
    ---------
    - osp_spaces : tuple[SuperSpace, ...], optional
        Räume mit orthosymplektischer Form.
    - gl_spaces : tuple[SuperSpace, ...], optional
        Räume für die GL-Relationen.
    - budget : int, optional
        Mindestbudget für die Relationen auf sechs Tensorfaktoren (Standard: 600000).
    """

    name = "functor-relations"

    def __init__(self, osp_spaces=OSP_SPACES, gl_spaces=GL_SPACES, budget: int = 600000):
        super().__init__()
        self.osp_spaces = tuple(osp_spaces)
        self.gl_spaces = tuple(gl_spaces)
        self.budget = budget

    def _osp(self, space: SuperSpace) -> None:
        for claim, lhs, rhs in osp_relations(space):
            self.check(f"{space}: {claim}", lhs, rhs)
        group = orthosymplectic(space.even, space.odd)
        self.check(f"{space}: F(A)* = F(U)", adjoint(functor_diagram(cap(), group)), functor_diagram(cup(), group))
        basis = enumerate_diagrams(2, 2)
        for d in basis:
            lhs = adjoint(functor_diagram(d, group))
            self.check(f"{space}: F({d})* = F(*{d})", lhs, functor_diagram(star(d), group))
        ok = all(check_functoriality(d1, d2, group) for d1 in basis for d2 in basis)
        self.check(f"{space}: Funktorialität auf B_2^2", ok, True)

    def run(self) -> None:
        logger.info("Prüfe die Relationen unter F")
        with override(max_entries=max(settings().max_entries, self.budget)):
            for space in self.osp_spaces:
                self._osp(space)
            for space in self.gl_spaces:
                for claim, lhs, rhs in gl_relations(space):
                    self.check(f"GL{space}: {claim}", lhs, rhs)
        self.finish()
