"""
# Die erweiterte Brauer-Kategorie für SO(m)

Der zusätzliche Erzeuger Δ_m: 0 -> m wird konkret durch F realisiert:

    F(Δ_m) = Λ = Σ_σ ε(σ) e_{σ(1)} ⊗ … ⊗ e_{σ(m)},    F(Δ_m*) = Λ*

Geprüft werden:
- Harmonizität (I^r ⊗ Ĉ ⊗ I^{m-r-2}) ∘ Λ = 0,
- Vorzeichen (I^r ⊗ P ⊗ I^{m-r-2}) ∘ Λ = -Λ,
- ΛΛ* = F(Σ_{+1}(m)) und Λ*Λ = m!,
- die Lesarten der Relation Δ⊗I⊗Δ = (c_{m+1}⊗I^m)∘(Δ⊗Δ⊗I),
- die erzwungenen Werte δ = m und Σ_{m+1} = 0.

Permutationen auf Tensorfaktoren werden durch Umindizieren angewandt, nicht
über die volle Permutationsmatrix.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import loguru
from sympy import QQ, Poly, factorial, roots
from sympy.combinatorics import Permutation

from brauer_kit.category.coeff import DELTA, DiagramSum, symmetrizer
from brauer_kit.category.diagram import BrauerDiagram, cap, cup, enumerate_diagrams, identity, tensor_all
from brauer_kit.functor.functor import functor_brauer, functor_diagram
from brauer_kit.functor.operator import TensorOperator, tensor_operators
from brauer_kit.functor.oracle import act_on_word, diagonal_on_word, hom_dimension, lie_generators
from brauer_kit.functor.space import Entries, GroupSpec, special_orthogonal
from brauer_kit.linalg import Vector
from brauer_kit.linalg import rank as matrix_rank
from brauer_kit.utils import check_budget, digits_of, flat_index, parallel_map, to_fraction

logger = loguru.logger

Relation = tuple[str, TensorOperator, TensorOperator]


def _check_m(m: int, minimum: int = 2) -> None:
    if m < minimum:
        raise ValueError(f"m muss mindestens {minimum} sein. Aktuell: {m}")


# Permutationen auf Tensorfaktoren


def permute_target(op: TensorOperator, perm: tuple[int, ...]) -> TensorOperator:
    """F(P_perm) ∘ op für einen rein geraden Raum: Faktor i wandert an Stelle perm[i-1]."""
    space = op.space
    if space.odd:
        raise ValueError(f"Umindizieren ohne Vorzeichen nur auf geraden Räumen. Aktuell: {space}")
    r, dim = len(op.target), space.dim
    if sorted(perm) != list(range(1, r + 1)):
        raise ValueError(f"Keine Permutation von 1..{r}: {perm}")
    entries: Entries = {}
    for (row, col), v in op.entries.items():
        digits = digits_of(row, dim, r)
        out = [0] * r
        for i, image in enumerate(perm):
            out[image - 1] = digits[i]
        entries[(flat_index(tuple(out), dim), col)] = v
    return TensorOperator(space, op.source, op.target, entries)


def permute_source(op: TensorOperator, perm: tuple[int, ...]) -> TensorOperator:
    """op ∘ F(P_perm) für einen rein geraden Raum."""
    space = op.space
    if space.odd:
        raise ValueError(f"Umindizieren ohne Vorzeichen nur auf geraden Räumen. Aktuell: {space}")
    r, dim = len(op.source), space.dim
    if sorted(perm) != list(range(1, r + 1)):
        raise ValueError(f"Keine Permutation von 1..{r}: {perm}")
    entries: Entries = {}
    for (row, col), v in op.entries.items():
        digits = digits_of(col, dim, r)
        before = tuple(digits[image - 1] for image in perm)
        entries[(row, flat_index(before, dim))] = v
    return TensorOperator(space, op.source, op.target, entries)


def _sign(perm: tuple[int, ...]) -> int:
    if len(perm) < 2:
        return 1
    return 1 if Permutation([p - 1 for p in perm]).is_even else -1


def _apply(entries: Entries, vector: dict[int, Fraction]) -> dict[int, Fraction]:
    result: dict[int, Fraction] = {}
    for (i, j), v in entries.items():
        if j in vector:
            result[i] = result.get(i, Fraction(0)) + v * vector[j]
    return {i: v for i, v in result.items() if v}


@dataclass
class DeltaGenerator:
    """
    DeltaGenerator: F(Δ_m) und F(Δ_m*) für SO(m)

    Eigenschaften
    -------------
    - m : int
    - lam : TensorOperator
        Λ als Abbildung ∅ -> V^{⊗m}.
    - lam_star : TensorOperator
        Λ* als Abbildung V^{⊗m} -> ∅.

    Beispiel
    -------
    ```
    d = build_delta(2)
    d.lam.to_dense()   # [[0], [1], [-1], [0]]
    d.norm()           # 2
    ```
    """

    m: int
    lam: TensorOperator
    lam_star: TensorOperator
    group: GroupSpec | None = field(repr=False, default=None)

    def norm(self) -> Fraction:
        """Λ* ∘ Λ als Zahl."""
        return (self.lam_star @ self.lam).entry(0, 0)

    def projector(self) -> TensorOperator:
        return self.lam @ self.lam_star

    def column(self) -> dict[int, Fraction]:
        return {row: v for (row, _), v in self.lam.entries.items()}

    def check_determinant(self) -> bool:
        """g·Λ = det(g)Λ: so(m) annulliert Λ, die Spiegelung wechselt das Vorzeichen."""
        space = self.lam.space
        word = self.lam.target
        column = self.column()
        for matrix, parity in lie_generators(self.group):
            if _apply(act_on_word(matrix, parity, word, space), column):
                return False
        reflected = _apply(diagonal_on_word(space.reflection(), word, space), column)
        return reflected == {i: -v for i, v in column.items()}

    def to_json(self) -> dict:
        return {"m": self.m, "lambda": self.lam.to_json(), "norm": str(self.norm())}


def build_delta(m: int) -> DeltaGenerator:
    _check_m(m)
    group = special_orthogonal(m)
    space = group.space
    entries: Entries = {}
    for perm in itertools.permutations(range(m)):
        entries[(flat_index(perm, m), 0)] = Fraction(_sign(tuple(p + 1 for p in perm)))
    lam = TensorOperator(space, "", "+" * m, entries)
    # Gram-Matrix auf V ist die Einheitsmatrix, Λ* ist die Transponierte
    lam_star = TensorOperator(space, "+" * m, "", {(0, row): v for (row, _), v in entries.items()})
    logger.debug(f"Λ für m={m} hat {len(entries)} Einträge")
    return DeltaGenerator(m, lam, lam_star, group)


# Relationen


def _padded(core: BrauerDiagram, left: int, right: int, group: GroupSpec) -> TensorOperator:
    return functor_diagram(tensor_all([identity(left), core, identity(right)]), group)


def _swap(m: int, r: int) -> tuple[int, ...]:
    perm = list(range(1, m + 1))
    perm[r], perm[r + 1] = perm[r + 1], perm[r]
    return tuple(perm)


def cycle(m: int) -> tuple[int, ...]:
    """c_{m+1} = (m+1, m, …, 1): unten 1 nach oben m+1, unten i nach oben i-1."""
    return (m + 1,) + tuple(range(1, m + 1))


def inverse(perm: tuple[int, ...]) -> tuple[int, ...]:
    result = [0] * len(perm)
    for i, image in enumerate(perm, start=1):
        result[image - 1] = i
    return tuple(result)


def cycle_relation_readings(m: int) -> dict[str, tuple[TensorOperator, TensorOperator]]:
    """
    Drei Lesarten von Δ⊗I⊗Δ = c ∘ (Δ⊗Δ⊗I), alle als Abbildungen V -> V^{⊗(2m+1)}.

    - `literal`: (c_{m+1} ⊗ I^m) ∘ (Δ⊗Δ⊗I)
    - `left`: (c_{m+1} ⊗ I^m) ∘ (I⊗Δ⊗Δ)
    - `right`: (I^m ⊗ c_{m+1}⁻¹) ∘ (Δ⊗Δ⊗I)
    """
    delta = build_delta(m)
    space = delta.lam.space
    one = TensorOperator.identity(space, "+")
    middle = tensor_operators([delta.lam, one, delta.lam], space)
    end = tensor_operators([delta.lam, delta.lam, one], space)
    start = tensor_operators([one, delta.lam, delta.lam], space)
    c = cycle(m)
    left_c = c + tuple(range(m + 2, 2 * m + 2))
    right_c = tuple(range(1, m + 1)) + tuple(m + p for p in inverse(c))
    return {
        "literal": (middle, permute_target(end, left_c)),
        "left": (middle, permute_target(start, left_c)),
        "right": (middle, permute_target(end, right_c)),
    }


def enhanced_relations(m: int) -> list[Relation]:
    """Alle Relationsinstanzen und ihre *-Bilder als (Name, links, rechts)."""
    delta = build_delta(m)
    group = delta.group
    space = delta.lam.space
    lam, lam_star = delta.lam, delta.lam_star
    relations: list[Relation] = []
    for r in range(m - 1):
        rest = m - r - 2
        contract = _padded(cap(), r, rest, group)
        relations.append((f"Harmonizität r={r}", contract @ lam, TensorOperator.zero(space, "", "+" * (m - 2))))
        expand = _padded(cup(), r, rest, group)
        relations.append((f"*Harmonizität r={r}", lam_star @ expand, TensorOperator.zero(space, "+" * (m - 2), "")))
        relations.append((f"Vorzeichen r={r}", permute_target(lam, _swap(m, r)), -lam))
        relations.append((f"*Vorzeichen r={r}", permute_source(lam_star, _swap(m, r)), -lam_star))
    relations.append(("Λ*Λ = m!", lam_star @ lam, TensorOperator.scalar(space, int(factorial(m)))))
    relations.append(("ΛΛ* = F(Σ_m)", delta.projector(), functor_brauer(symmetrizer(m, 1), group)))
    if m <= 3:
        for perm in itertools.permutations(range(1, m + 1)):
            relations.append((f"w∘Δ = ε(w)Δ, w={perm}", permute_target(lam, perm), lam.scale(_sign(perm))))
    for name, (lhs, rhs) in cycle_relation_readings(m).items():
        if name != "literal":
            relations.append((f"Zyklusrelation, Lesart {name}", lhs, rhs))
    return relations


def check_relations(m: int) -> dict[str, bool]:
    _check_m(m)
    logger.info(f"Prüfe die Relationen der erweiterten Kategorie für m={m}")
    result = {name: lhs == rhs for name, lhs, rhs in enhanced_relations(m)}
    result["Determinante"] = build_delta(m).check_determinant()
    for name, ok in result.items():
        if not ok:
            logger.warning(f"Relation verletzt für m={m}: {name}")
    return result


# Erzwungene Parameter


@dataclass(frozen=True)
class ForcedParameters:
    """
    ForcedParameters: rationale Nullstellen der beiden Bedingungen an δ

    Eigenschaften
    -------------
    - product_roots : δ(δ-1)⋯(δ-m+1) = m!
    - f_roots : (δ-m+1)⋯(δ-1) - (m-1)! = 0
    - common : Schnitt beider Mengen
    """

    m: int
    product_roots: tuple[Fraction, ...]
    f_roots: tuple[Fraction, ...]
    common: tuple[Fraction, ...]
    product_at_m: Fraction
    f_at_m: Fraction

    @property
    def unique(self) -> bool:
        return self.common == (Fraction(self.m),)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "product_roots": [str(x) for x in self.product_roots],
            "f_roots": [str(x) for x in self.f_roots],
            "common": [str(x) for x in self.common],
            "product_at_m": str(self.product_at_m),
            "f_at_m": str(self.f_at_m),
            "unique": self.unique,
        }


def falling_product(m: int, start: int = 0) -> Poly:
    """Π_{j=start}^{m-1} (δ - j)."""
    result = Poly(1, DELTA, domain=QQ)
    for j in range(start, m):
        result = result * Poly(DELTA - j, DELTA, domain=QQ)
    return result


def _rational_roots(poly: Poly) -> tuple[Fraction, ...]:
    return tuple(sorted(to_fraction(x) for x in roots(poly, filter="Q")))


def forced_parameters(m: int) -> ForcedParameters:
    _check_m(m)
    product = falling_product(m) - int(factorial(m))
    f = falling_product(m, 1) - int(factorial(m - 1))
    product_roots = _rational_roots(product)
    f_roots = _rational_roots(f)
    common = tuple(sorted(set(product_roots) & set(f_roots)))
    result = ForcedParameters(
        m,
        product_roots,
        f_roots,
        common,
        to_fraction(falling_product(m).eval(m)),
        to_fraction(f.eval(m)),
    )
    logger.debug(f"m={m}: gemeinsame rationale Nullstellen {[str(x) for x in common]}")
    return result


def sigma_rank(m: int, r: int) -> int:
    """Rang von F(Σ_{+1}(r)) auf V^{⊗r} für SO(m)."""
    return functor_brauer(symmetrizer(r, 1), special_orthogonal(m)).rank()


def sigma_vanishing(m: int) -> bool:
    """F(Σ_{+1}(m+1)) = 0 für SO(m)."""
    if m < 1:
        raise ValueError(f"m muss mindestens 1 sein. Aktuell: {m}")
    return functor_brauer(symmetrizer(m + 1, 1), special_orthogonal(m)).is_zero


# Vollständigkeit


@dataclass(frozen=True)
class FullnessResult:
    m: int
    s: int
    t: int
    brauer_rank: int
    delta_rank: int
    combined_rank: int
    oracle: int

    @property
    def complementary(self) -> bool:
        return self.combined_rank == self.brauer_rank + self.delta_rank

    @property
    def passed(self) -> bool:
        return self.complementary and self.combined_rank == self.oracle

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "s": self.s,
            "t": self.t,
            "brauer_rank": self.brauer_rank,
            "delta_rank": self.delta_rank,
            "oracle": self.oracle,
            "complementary": self.complementary,
            "pass": self.passed,
        }


def delta_image(d: BrauerDiagram, delta: DeltaGenerator, s: int) -> TensorOperator:
    """F(D ∘ (Δ_m ⊗ I^s)) für D: m+s -> t."""
    space = delta.lam.space
    lifted = delta.lam.tensor(TensorOperator.identity(space, "+" * s))
    return functor_diagram(d, delta.group) @ lifted


def fullness_check(m: int, s: int, t: int) -> FullnessResult:
    _check_m(m)
    delta = build_delta(m)
    group = delta.group
    size = m ** (s + t)
    brauer = enumerate_diagrams(s, t)
    with_delta = enumerate_diagrams(m + s, t)
    check_budget((len(brauer) + len(with_delta)) * size, f"Vollständigkeit für SO({m}) bei ({s}, {t})")
    logger.info(f"Prüfe Vollständigkeit für SO({m}) bei ({s}, {t})")

    brauer_images: list[Vector] = parallel_map(lambda d: functor_diagram(d, group).flatten(), brauer)
    delta_images: list[Vector] = parallel_map(lambda d: delta_image(d, delta, s).flatten(), with_delta)
    result = FullnessResult(
        m,
        s,
        t,
        matrix_rank(brauer_images, size),
        matrix_rank(delta_images, size),
        matrix_rank(brauer_images + delta_images, size),
        hom_dimension(group, "+" * s, "+" * t),
    )
    if not result.passed:
        logger.warning(f"Vollständigkeit verletzt: {result.to_json()}")
    return result


# Morphismen der erweiterten Kategorie


@dataclass
class EnhancedMorphismSample:
    """
    EnhancedMorphismSample: Element von 𝓑̃_s^t in Normalform

    Eigenschaften
    -------------
    - m : int
    - brauer_part : DiagramSum
        Anteil ohne Δ (Valenz (s, t)).
    - delta_part : list[tuple[BrauerDiagram, Fraction]]
        Terme c · D ∘ (Δ_m ⊗ I^s) mit D: m+s -> t.
    """

    m: int
    brauer_part: DiagramSum
    delta_part: list[tuple[BrauerDiagram, Fraction]] = field(default_factory=list)

    def __post_init__(self):
        s, t = self.brauer_part.valency
        for d, _ in self.delta_part:
            if tuple(d.valency) != (self.m + s, t):
                raise ValueError(
                    f"Δ-Term der Valenz {tuple(d.valency)} passt nicht zu ({self.m + s}, {t})"
                )

    def evaluate(self) -> TensorOperator:
        delta = build_delta(self.m)
        s, t = self.brauer_part.valency
        result = functor_brauer(self.brauer_part, delta.group)
        for d, c in self.delta_part:
            result = result + delta_image(d, delta, s).scale(c)
        return result

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "brauer_part": self.brauer_part.to_json(),
            "delta_part": [{"diagram": d.to_json(), "coeff": str(c)} for d, c in self.delta_part],
        }

    @classmethod
    def from_json(cls, data: dict) -> "EnhancedMorphismSample":
        delta_part = [
            (BrauerDiagram.from_json(term["diagram"]), Fraction(term["coeff"]))
            for term in data.get("delta_part", [])
        ]
        return cls(int(data["m"]), DiagramSum.from_json(data["brauer_part"]), delta_part)
