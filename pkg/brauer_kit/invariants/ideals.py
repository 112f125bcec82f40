"""
# Ideale in Brauer-Algebren und Brauer-Kategorien

Zwei verschiedene Abschlüsse eines Erzeugers g:

- `algebra_ideal_span`: zweiseitiges Ideal in B_r^r(δ₀), Abschluss unter
  Multiplikation mit den Algebra-Erzeugern s_i, e_i (bzw. nur s_i in QSym_r).
- `tensor_ideal_span`: Tensorideal der Kategorie, geschnitten mit B_k^l.

Tensorideal:
    g ∈ B_a^b wird zu g' ∈ B_0^{a+b} hochgebogen. Jedes Element des Ideals
    in B_0^N ist eine Summe von W ∘ g' mit W ∈ B_{a+b}^N (Verdrahtungen),
    denn Tensorieren mit Diagrammen und Komponieren ändert nur, wie die
    Enden von g' verbunden werden. Das Ergebnis wird nach B_k^l
    zurückgebogen (k + l = N).

Symmetrien P_τ ∘ g' = ±g' fassen Verdrahtungen zu Bahnen zusammen; nur ein
Vertreter je Bahn wird ausgewertet.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import loguru
from sympy import factorial2

from brauer_kit.category.coeff import DiagramSum, Scalar, compose_sums, specialize
from brauer_kit.category.diagram import (
    BrauerDiagram,
    e_i,
    enumerate_diagrams,
    enumerate_permutations,
    is_permutation,
    lower_all,
    permutation_diagram,
    raise_all,
    s_i,
)
from brauer_kit.category.oriented import enumerate_oriented, negative, reverse
from brauer_kit.invariants.kernels import map_diagrams_to
from brauer_kit.linalg import Vector, contains, row_basis, span_closure
from brauer_kit.utils import check_budget, parallel_map, to_fraction

logger = loguru.logger

Symmetry = tuple[tuple[int, ...], int]


@dataclass
class IdealSpan:
    """
    IdealSpan: Basis eines Idealstücks in B_k^l(δ₀)

    Eigenschaften
    -------------
    - valency : tuple[int, int]
    - delta : Fraction
        Spezialisierter Parameter δ₀.
    - basis : list[BrauerDiagram]
        Koordinatenbasis (deterministisch sortiert).
    - vectors : list[Vector]
        Zeilenstufenbasis des Idealstücks in diesen Koordinaten.
    - words : tuple[str, str] | None
        Quelle und Ziel im orientierten Fall.
    """

    valency: tuple[int, int]
    delta: Fraction
    basis: list[BrauerDiagram]
    vectors: list[Vector] = field(default_factory=list)
    words: tuple[str, str] | None = None

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def elements(self) -> list[DiagramSum]:
        return [vector_to_sum(v, self.basis, self.valency) for v in self.vectors]

    def contains(self, x: DiagramSum) -> bool:
        v = sum_to_vector(specialize(x, self.delta), self.basis)
        return contains(self.vectors, [v], len(self.basis))

    def to_json(self) -> dict:
        data = {
            "valency": list(self.valency),
            "delta": str(self.delta),
            "dimension": self.dimension,
            "basis": [x.to_json() for x in self.elements()],
        }
        if self.words is not None:
            data["source"], data["target"] = self.words
        return data


def sum_to_vector(x: DiagramSum, basis: list[BrauerDiagram]) -> Vector:
    index = {d: i for i, d in enumerate(basis)}
    vector: Vector = {}
    for d, c in x.numeric_terms().items():
        if d not in index:
            raise ValueError(f"Diagramm {d} liegt nicht in der Koordinatenbasis")
        vector[index[d]] = c
    return vector


def vector_to_sum(v: Vector, basis: list[BrauerDiagram], valency: tuple[int, int]) -> DiagramSum:
    return DiagramSum(valency, {basis[i]: c for i, c in v.items()})


# Algebraideal


def algebra_ideal_span(
    generators: list[DiagramSum], r: int, delta0: Scalar, permutations_only: bool = False
) -> IdealSpan:
    """
    Zweiseitiges Ideal von B_r^r(δ₀) (bzw. QSym_r), erzeugt von `generators`.

    Die Basisdiagramme werden von s_i und e_i erzeugt; der Abschluss unter
    Links- und Rechtsmultiplikation mit diesen reicht daher aus.
    """
    delta0 = to_fraction(delta0)
    basis = enumerate_permutations(r) if permutations_only else enumerate_diagrams(r, r)
    check_budget(len(basis) ** 2, f"Idealabschluss in B_{r}")
    multipliers = [DiagramSum.of(s_i(r, i)) for i in range(1, r)]
    if not permutations_only:
        multipliers += [DiagramSum.of(e_i(r, i)) for i in range(1, r)]

    seed = []
    for g in generators:
        if tuple(g.valency) != (r, r):
            raise ValueError(f"Erzeuger der Valenz {tuple(g.valency)} liegt nicht in B_{r}^{r}")
        if permutations_only and not all(is_permutation(d) for d, _ in g):
            raise ValueError("In QSym_r sind nur Permutationsdiagramme erlaubt")
        seed.append(sum_to_vector(specialize(g, delta0), basis))

    def step(v: Vector) -> list[Vector]:
        x = vector_to_sum(v, basis, (r, r))
        images = []
        for g in multipliers:
            images.append(sum_to_vector(compose_sums(g, x, delta0), basis))
            images.append(sum_to_vector(compose_sums(x, g, delta0), basis))
        return images

    logger.info(f"Berechne Algebraideal in B_{r}({delta0}) aus {len(generators)} Erzeugern")
    vectors = span_closure(seed, len(basis), step)
    logger.debug(f"Algebraideal in B_{r}({delta0}) hat Dimension {len(vectors)}")
    return IdealSpan((r, r), delta0, basis, vectors)


# Tensorideal


def raise_sum(g: DiagramSum) -> DiagramSum:
    k, ell = g.valency
    return map_diagrams_to(g, (0, k + ell), raise_all)


def _relabel_bottom(w: BrauerDiagram, tau: tuple[int, ...]) -> BrauerDiagram:
    """W ∘ P_τ: der untere Knoten τ(i) von W wird zum unteren Knoten i."""
    inverse = {image: i for i, image in enumerate(tau, start=1)}

    def move(n: int) -> int:
        return inverse[n] if n <= w.k else n

    return BrauerDiagram(w.k, w.ell, tuple((move(a), move(b)) for a, b in w.pairs))


def check_symmetries(raised: DiagramSum, symmetries: list[Symmetry]) -> None:
    for tau, sign in symmetries:
        image = compose_sums(DiagramSum.of(permutation_diagram(tau)), raised)
        if image != raised.scale(sign):
            raise ValueError(f"P_τ ∘ g' ist nicht {sign:+d} · g' für τ = {tau}")


def _representatives(wirings: list[BrauerDiagram], symmetries: list[Symmetry]) -> list[BrauerDiagram]:
    """Ein Vertreter je Bahn; Bahnen mit widersprüchlichen Vorzeichen liefern 0 und entfallen."""
    if not symmetries:
        return wirings
    done: set[BrauerDiagram] = set()
    result = []
    for w in wirings:
        if w in done:
            continue
        signs = {w: 1}
        queue = [w]
        vanishes = False
        while queue:
            x = queue.pop()
            for tau, s in symmetries:
                y = _relabel_bottom(x, tau)
                sign = signs[x] * s
                if y in signs:
                    vanishes = vanishes or signs[y] != sign
                else:
                    signs[y] = sign
                    queue.append(y)
        done.update(signs)
        if not vanishes:
            result.append(w)
    logger.debug(f"{len(wirings)} Verdrahtungen, {len(result)} Bahnvertreter")
    return result


def _wiring_count(ends: int, n: int) -> int:
    return int(factorial2(ends + n - 1)) if (ends + n) % 2 == 0 else 0


def _tensor_ideal(
    raised: DiagramSum,
    wirings: list[BrauerDiagram],
    k: int,
    ell: int,
    delta0: Fraction,
    basis: list[BrauerDiagram],
    symmetries: list[Symmetry],
) -> list[Vector]:
    representatives = _representatives(wirings, symmetries)

    def evaluate(w: BrauerDiagram) -> Vector:
        image = compose_sums(DiagramSum.of(w), raised, delta0)
        return sum_to_vector(map_diagrams_to(image, (k, ell), lambda d: lower_all(d, k)), basis)

    images = parallel_map(evaluate, representatives)
    return row_basis(images, len(basis))


def tensor_ideal_span(
    generator: DiagramSum, k: int, ell: int, delta0: Scalar, symmetries: list[Symmetry] | tuple = ()
) -> IdealSpan:
    """Das Tensorideal 𝒥 von `generator`, geschnitten mit B_k^l(δ₀)."""
    delta0 = to_fraction(delta0)
    a, b = generator.valency
    n = k + ell
    basis = enumerate_diagrams(k, ell)
    if (a + b + n) % 2 or not basis:
        return IdealSpan((k, ell), delta0, basis)
    check_budget(_wiring_count(a + b, n), f"Verdrahtungen B_{a + b}^{n} für das Tensorideal")
    raised = raise_sum(specialize(generator, delta0))
    symmetries = list(symmetries)
    check_symmetries(raised, symmetries)
    logger.info(f"Berechne Tensorideal in B_{k}^{ell}({delta0}) aus einem Erzeuger in B_{a}^{b}")
    wirings = enumerate_diagrams(a + b, n)
    vectors = _tensor_ideal(raised, wirings, k, ell, delta0, basis, symmetries)
    logger.debug(f"Tensorideal in B_{k}^{ell}({delta0}) hat Dimension {len(vectors)}")
    return IdealSpan((k, ell), delta0, basis, vectors)


def oriented_tensor_ideal_span(
    generator: DiagramSum, generator_words: tuple[str, str], eta: str, zeta: str, delta0: Scalar
) -> IdealSpan:
    """
    Tensorideal in der orientierten Brauer-Kategorie, geschnitten mit OB_η^ζ(δ₀).

    Hochbiegen kehrt die Reihenfolge der unteren Knoten um und wechselt ihr
    Vorzeichen: Ziel ζ, Quelle η werden zu ζ + (-η umgekehrt).
    """
    delta0 = to_fraction(delta0)
    source_g, target_g = generator_words
    if (len(source_g), len(target_g)) != tuple(generator.valency):
        raise ValueError(f"Vorzeichenfolgen {generator_words} passen nicht zur Valenz {tuple(generator.valency)}")
    k, ell = len(eta), len(zeta)
    raised_word = target_g + negative(reverse(source_g))
    goal_word = zeta + negative(reverse(eta))
    basis = [d.diagram for d in enumerate_oriented(eta, zeta)]
    if not basis:
        return IdealSpan((k, ell), delta0, basis, words=(eta, zeta))
    check_budget(_wiring_count(len(raised_word), len(goal_word)), f"Verdrahtungen {raised_word} -> {goal_word}")
    raised = raise_sum(specialize(generator, delta0))
    logger.info(f"Berechne orientiertes Tensorideal in OB({eta or '∅'}, {zeta or '∅'})({delta0})")
    wirings = [d.diagram for d in enumerate_oriented(raised_word, goal_word)]
    vectors = _tensor_ideal(raised, wirings, k, ell, delta0, basis, [])
    return IdealSpan((k, ell), delta0, basis, vectors, words=(eta, zeta))
