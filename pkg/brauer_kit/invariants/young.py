"""
# Young-Quasi-Idempotente für Rechtecke

Standardtableau der Form (m+1) × (l+1), zeilenweise mit 1..(m+1)(l+1)
gefüllt. R stabilisiert die Zeilen, C die Spalten.

    e(m, l) = α⁺(R) α⁻(C) = (Σ_{π∈R} π)(Σ_{σ∈C} ε(σ) σ)

Es gilt e² = κ e. κ wird aus dem Koeffizienten der Identität in e²
berechnet und mit dem Hakenlängenprodukt sowie mit |R|!|C|! verglichen.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import loguru
from sympy import factorial
from sympy.combinatorics import Permutation

from brauer_kit.base import BudgetError
from brauer_kit.category.coeff import DiagramSum, compose_sums, identity_sum, tensor_sums
from brauer_kit.category.diagram import identity, permutation_diagram, star
from brauer_kit.utils import check_budget

logger = loguru.logger

MAX_CELLS = 8

Perm = tuple[int, ...]


def _group(blocks: list[tuple[int, ...]], size: int) -> list[tuple[Perm, int]]:
    """Alle Permutationen, die jeden Block in sich permutieren, mit Vorzeichen."""
    per_block = [list(itertools.permutations(block)) for block in blocks]
    result = []
    for choice in itertools.product(*per_block):
        perm = list(range(1, size + 1))
        for block, image in zip(blocks, choice):
            for src, dst in zip(block, image):
                perm[src - 1] = dst
        sign = 1 if Permutation([p - 1 for p in perm]).is_even else -1
        result.append((tuple(perm), sign))
    return result


def _then(outer: Perm, inner: Perm) -> Perm:
    """outer ∘ inner auf 1-basierten Tupeln."""
    return tuple(outer[i - 1] for i in inner)


@dataclass
class YoungRectangleIdempotent:
    """
    YoungRectangleIdempotent: e(m, l) in QSym_{(m+1)(l+1)}

    Eigenschaften
    -------------
    - m, ell : int
        Das Tableau hat m+1 Zeilen und l+1 Spalten.
    - element : DiagramSum
        e(m, l) als Summe von Permutationsdiagrammen.
    - rows, columns : list[tuple[int, ...]]
        Zeilen und Spalten des Tableaus.
    - kappa : Fraction
        e² = κ e.

    Beispiel
    -------
    ```
    y = young_idempotent(1, 1)
    len(y.element)   # 16
    y.kappa          # 12
    ```
    """

    m: int
    ell: int
    element: DiagramSum
    rows: list[tuple[int, ...]] = field(default_factory=list)
    columns: list[tuple[int, ...]] = field(default_factory=list)
    kappa: Fraction = Fraction(0)

    @property
    def size(self) -> int:
        return (self.m + 1) * (self.ell + 1)

    @property
    def row_group_order(self) -> int:
        return int(factorial(self.ell + 1)) ** (self.m + 1)

    @property
    def column_group_order(self) -> int:
        return int(factorial(self.m + 1)) ** (self.ell + 1)

    def hook_product(self) -> int:
        rows, cols = self.m + 1, self.ell + 1
        result = 1
        for i in range(rows):
            for j in range(cols):
                result *= (rows - i) + (cols - j) - 1
        return result

    def stated_constant(self) -> int:
        """|R|!|C|! aus der Normierungsbemerkung."""
        return int(factorial(self.row_group_order)) * int(factorial(self.column_group_order))

    def square(self) -> DiagramSum:
        check_budget(len(self.element) ** 2, f"e({self.m},{self.ell})²")
        return compose_sums(self.element, self.element)

    def is_quasi_idempotent(self) -> bool:
        return self.square() == self.element.scale(self.kappa)

    def embedded(self, r: int) -> DiagramSum:
        """e(m, l) ⊗ I^{r-(m+1)(l+1)} in QSym_r."""
        if r < self.size:
            raise ValueError(f"e({self.m},{self.ell}) braucht mindestens {self.size} Stränge. Aktuell: {r}")
        if r == self.size:
            return self.element
        return tensor_sums(self.element, identity_sum(r - self.size))

    def symmetries(self) -> list[tuple[Perm, int]]:
        """
        Erzeuger der Symmetrien des hochgebogenen Elements in B_0^{2N}.

        Eine Zeilentransposition links an e ändert nichts, eine
        Spaltentransposition rechts an e ändert das Vorzeichen. Hochgebogen
        wirken sie auf die Positionen 1..N bzw. (umgekehrt) N+1..2N.
        """
        n = self.size
        result = []
        for row in self.rows:
            for a, b in zip(row, row[1:]):
                perm = list(range(1, 2 * n + 1))
                perm[a - 1], perm[b - 1] = b, a
                result.append((tuple(perm), 1))
        for column in self.columns:
            for a, b in zip(column, column[1:]):
                pa, pb = 2 * n + 1 - a, 2 * n + 1 - b
                perm = list(range(1, 2 * n + 1))
                perm[pa - 1], perm[pb - 1] = pb, pa
                result.append((tuple(perm), -1))
        return result

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "ell": self.ell,
            "rows": [list(r) for r in self.rows],
            "columns": [list(c) for c in self.columns],
            "kappa": str(self.kappa),
            "hook_product": self.hook_product(),
            "stated_constant": str(self.stated_constant()),
            "terms": len(self.element),
            "element": self.element.to_json(),
        }


def tableau(m: int, ell: int) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    cols = ell + 1
    rows = [tuple(i * cols + j + 1 for j in range(cols)) for i in range(m + 1)]
    columns = [tuple(row[j] for row in rows) for j in range(cols)]
    return rows, columns


def young_idempotent(m: int, ell: int) -> YoungRectangleIdempotent:
    if m < 0 or ell < 0:
        raise ValueError(f"m und l müssen nicht-negativ sein. Aktuell: m={m}, l={ell}")
    size = (m + 1) * (ell + 1)
    if size > MAX_CELLS:
        raise BudgetError(f"e({m},{ell}) hat {size} Zellen, erlaubt sind höchstens {MAX_CELLS}")
    logger.info(f"Berechne e({m},{ell}) in QSym_{size}")
    rows, columns = tableau(m, ell)
    row_group = _group(rows, size)
    column_group = _group(columns, size)

    terms: dict = {}
    for pi, _ in row_group:
        for sigma, sign in column_group:
            d = permutation_diagram(_then(pi, sigma))
            terms[d] = terms.get(d, 0) + sign
    element = DiagramSum((size, size), terms)

    # κ = [e²]_1 = Σ_x e_x e_{x⁻¹}
    coefficients = element.numeric_terms()
    kappa = sum((c * coefficients.get(star(d), Fraction(0)) for d, c in coefficients.items()), Fraction(0))
    result = YoungRectangleIdempotent(m, ell, element, rows, columns, kappa)
    if kappa != result.hook_product():
        logger.warning(f"κ = {kappa} weicht vom Hakenlängenprodukt {result.hook_product()} ab")
    logger.debug(f"e({m},{ell}): {len(element)} Terme, κ = {kappa}")
    return result


def identity_coefficient(x: DiagramSum) -> Fraction:
    return x.numeric_terms().get(identity(x.valency.k), Fraction(0))
