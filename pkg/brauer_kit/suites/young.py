"""
# Young-Quasi-Idempotente e(m, l)

e(m, l)² = κ e(m, l) mit κ gleich dem Hakenlängenprodukt des Rechtecks;
e(m, l) liegt im Kern von F für GL(m|l) und e(m, 2n) im Kern für OSp(m|2n).
"""

from fractions import Fraction

import loguru

from brauer_kit.base import Verification
from brauer_kit.category.coeff import DiagramSum
from brauer_kit.category.diagram import identity, s_i
from brauer_kit.functor.functor import functor_brauer, functor_oriented
from brauer_kit.functor.space import general_linear, orthosymplectic
from brauer_kit.invariants.young import young_idempotent
from brauer_kit.utils import override, settings

logger = loguru.logger

SHAPES = ((1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (1, 2), (2, 1))
GL_SHAPES = ((1, 0), (0, 1), (1, 1), (2, 0))
OSP_SHAPES = ((1, 0), (0, 2), (1, 2))


class YoungSuite(Verification):
    """
    YoungSuite: Quasi-Idempotenz und Verschwinden unter F

    Parameter
    ---------
    - shapes : tuple[(int, int), ...], optional
        Rechtecke (m, l) für die Quasi-Idempotenz.
    - gl_shapes, osp_shapes : tuple[(int, int), ...], optional
        Rechtecke, deren Bild unter F für GL(m|l) bzw. OSp(m|l) verschwinden muss.
    - budget : int, optional
        Mindestbudget für e² und die Operatoren auf sechs Faktoren (Standard: 600000).
    """

    name = "young"

    def __init__(self, shapes=SHAPES, gl_shapes=GL_SHAPES, osp_shapes=OSP_SHAPES, budget: int = 600000):
        super().__init__()
        self.shapes = tuple(shapes)
        self.gl_shapes = tuple(gl_shapes)
        self.osp_shapes = tuple(osp_shapes)
        self.budget = budget

    def run(self) -> None:
        logger.info("Prüfe die Young-Quasi-Idempotenten")
        one, swap = identity(2), s_i(2, 1)
        self.check("e(1,0) = 1 - s", young_idempotent(1, 0).element, DiagramSum((2, 2), {one: 1, swap: -1}))
        self.check("e(0,1) = 1 + s", young_idempotent(0, 1).element, DiagramSum((2, 2), {one: 1, swap: 1}))
        with override(max_entries=max(settings().max_entries, self.budget)):
            for m, ell in self.shapes:
                y = young_idempotent(m, ell)
                self.check(f"e({m},{ell})² = κe({m},{ell})", y.is_quasi_idempotent(), True)
                self.check(f"κ({m},{ell}) = Hakenlängenprodukt", y.kappa, Fraction(y.hook_product()))
                self.check(f"e({m},{ell}) hat |R||C| Terme", len(y.element), y.row_group_order * y.column_group_order)
            for m, ell in self.gl_shapes:
                y = young_idempotent(m, ell)
                word = "+" * y.size
                image = functor_oriented(y.element, general_linear(m, ell), word, word)
                self.check(f"F(e({m},{ell})) = 0 auf GL({m}|{ell})", image.is_zero, True)
            for m, twon in self.osp_shapes:
                y = young_idempotent(m, twon)
                image = functor_brauer(y.element, orthosymplectic(m, twon))
                self.check(f"F(e({m},{twon})) = 0 auf OSp({m}|{twon})", image.is_zero, True)
        self.finish()
