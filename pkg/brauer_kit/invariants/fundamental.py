"""
# Erster und zweiter Hauptsatz an kleinen Parametern

FFT: Der Rang von F auf der Diagrammbasis von B_k^l (bzw. OB_η^ζ) ist
gleich dim Hom_G, berechnet vom unabhängigen Orakel.

SFT: Der Kern von F ist das Ideal eines benannten Erzeugers:

| Gruppe  | Erzeuger                    | Abschluss                   |
|---------|-----------------------------|-----------------------------|
| O(m)    | E_[(m+1)/2] in B_{m+1}      | Algebraideal in B_r(m)      |
| Sp(2n)  | Φ(n) in B_{n+1}             | Algebraideal in B_r(-2n)    |
| GL(m|l) | e(m, l) in QSym_{(m+1)(l+1)}| Algebraideal in QSym_r      |
| OSp     | e(m, 2n)                    | Tensorideal in B_k^l        |

Gleichheit wird über Dimensionsgleichheit plus Inklusion Ideal ⊆ Kern
(Auswertung unter F) festgestellt.
"""

from dataclasses import dataclass

import loguru
from sympy import factorial2

from brauer_kit.category.coeff import DiagramSum
from brauer_kit.category.diagram import BrauerDiagram, enumerate_diagrams
from brauer_kit.category.oriented import PLUS, enumerate_oriented
from brauer_kit.functor.functor import functor_brauer, functor_diagram, functor_oriented
from brauer_kit.functor.operator import TensorOperator
from brauer_kit.functor.oracle import hom_dimension
from brauer_kit.functor.space import KIND_GL, KIND_O, KIND_OSP, KIND_SP, GroupSpec
from brauer_kit.invariants.ideals import (
    IdealSpan,
    algebra_ideal_span,
    tensor_ideal_span,
    vector_to_sum,
)
from brauer_kit.invariants.kernels import Phi, embed, orthogonal_generator
from brauer_kit.invariants.young import young_idempotent
from brauer_kit.linalg import Vector, nullspace
from brauer_kit.linalg import rank as matrix_rank
from brauer_kit.linalg import transpose
from brauer_kit.utils import check_budget, parallel_map

logger = loguru.logger


@dataclass(frozen=True)
class FftResult:
    group: str
    source: str
    target: str
    rank: int
    oracle: int

    @property
    def passed(self) -> bool:
        return self.rank == self.oracle

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "source": self.source,
            "target": self.target,
            "rank": self.rank,
            "oracle": self.oracle,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class SftResult:
    """
    SftResult: Vergleich von Kern und Ideal

    Eigenschaften
    -------------
    - kernel_dim : int
        dim Ker F auf dem betrachteten Hom-Raum.
    - ideal_dim : int
        Dimension des vom Erzeuger erzeugten Idealstücks.
    - contained : bool
        Jedes Basiselement des Ideals liegt im Kern.
    """

    group: str
    valency: tuple[int, int]
    generator: str
    kernel_dim: int
    ideal_dim: int
    contained: bool

    @property
    def passed(self) -> bool:
        return self.contained and self.kernel_dim == self.ideal_dim

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "valency": list(self.valency),
            "generator": self.generator,
            "kernel_dim": self.kernel_dim,
            "ideal_dim": self.ideal_dim,
            "contained": self.contained,
            "pass": self.passed,
        }


def _words(group: GroupSpec, k: int, ell: int | None, source: str | None, target: str | None) -> tuple[str, str]:
    if group.oriented:
        if source is None or target is None:
            ell = k if ell is None else ell
            return PLUS * k, PLUS * ell
        return source, target
    ell = k if ell is None else ell
    return PLUS * k, PLUS * ell


def diagram_basis(group: GroupSpec, source: str, target: str) -> list[BrauerDiagram]:
    """Diagrammbasis von B_k^l bzw. OB_η^ζ (deterministisch sortiert)."""
    if group.oriented:
        return [d.diagram for d in enumerate_oriented(source, target)]
    return enumerate_diagrams(len(source), len(target))


def functor_images(group: GroupSpec, source: str, target: str) -> tuple[list[BrauerDiagram], list[Vector]]:
    basis = diagram_basis(group, source, target)
    size = group.space.dim ** (len(source) + len(target))
    check_budget(len(basis) * size, f"Funktorbilder von {len(basis)} Diagrammen für {group}")

    def image(d: BrauerDiagram) -> Vector:
        if group.oriented:
            return functor_diagram(d, group, source, target).flatten()
        return functor_diagram(d, group).flatten()

    logger.info(f"Berechne F auf {len(basis)} Diagrammen {source or '∅'} -> {target or '∅'} für {group}")
    return basis, parallel_map(image, basis)


def functor_rank(
    group: GroupSpec, k: int, ell: int | None = None, source: str | None = None, target: str | None = None
) -> int:
    source, target = _words(group, k, ell, source, target)
    basis, images = functor_images(group, source, target)
    if not basis:
        return 0
    return matrix_rank(images, group.space.dim ** (len(source) + len(target)))


def kernel_basis(
    group: GroupSpec, k: int, ell: int | None = None, source: str | None = None, target: str | None = None
) -> list[DiagramSum]:
    """Basis von Ker F in B_k^l (bzw. OB_η^ζ) als Diagrammsummen."""
    source, target = _words(group, k, ell, source, target)
    basis, images = functor_images(group, source, target)
    if not basis:
        return []
    # Spalten = Diagramme, Zeilen = Matrixeinträge
    size = group.space.dim ** (len(source) + len(target))
    vectors = nullspace(transpose(images, size), len(basis))
    valency = (len(source), len(target))
    result = [vector_to_sum(v, basis, valency) for v in vectors]
    logger.debug(f"Ker F für {group} auf {source or '∅'} -> {target or '∅'} hat Dimension {len(result)}")
    return result


def verify_fft(
    group: GroupSpec, k: int, ell: int | None = None, source: str | None = None, target: str | None = None
) -> FftResult:
    source, target = _words(group, k, ell, source, target)
    rank = functor_rank(group, len(source), len(target), source, target)
    oracle = hom_dimension(group, source, target)
    result = FftResult(group.label, source, target, rank, oracle)
    if not result.passed:
        logger.warning(f"FFT für {group} {source or '∅'} -> {target or '∅'}: Rang {rank}, Orakel {oracle}")
    return result


def brauer_dimension(r: int) -> int:
    """dim B_r^r = (2r-1)!!, zugleich dim End_{O(m)}(V^{⊗r}) für r <= m."""
    return int(factorial2(2 * r - 1))


def _in_kernel(x: DiagramSum, group: GroupSpec, source: str, target: str) -> bool:
    image: TensorOperator
    if group.oriented:
        image = functor_oriented(x, group, source, target)
    else:
        image = functor_brauer(x, group)
    return image.is_zero


def sft_generator(group: GroupSpec) -> tuple[str, DiagramSum, bool]:
    """(Name, Erzeuger, nur Permutationen) für O, Sp und GL."""
    if group.kind == KIND_O:
        m = group.space.even
        p = (m + 1) // 2
        return f"E_{p}(m={m})", orthogonal_generator(m), False
    if group.kind == KIND_SP:
        n = group.space.odd // 2
        return f"Phi({n})", Phi(n), False
    if group.kind == KIND_GL:
        m, ell = group.space.even, group.space.odd
        return f"e({m},{ell})", young_idempotent(m, ell).element, True
    raise ValueError(f"Kein Algebraideal-Erzeuger für {group}; für OSp verify_tensor_sft verwenden")


def _compare(group: GroupSpec, span: IdealSpan, name: str, source: str, target: str) -> SftResult:
    kernel = kernel_basis(group, len(source), len(target), source, target)
    contained = all(_in_kernel(x, group, source, target) for x in span.elements())
    result = SftResult(group.label, span.valency, name, len(kernel), span.dimension, contained)
    if not result.passed:
        logger.warning(f"SFT für {group} bei {span.valency}: Kern {len(kernel)}, Ideal {span.dimension}")
    return result


def verify_sft(group: GroupSpec, r: int) -> SftResult:
    """Ker F auf B_r^r (bzw. QSym_r für GL) gegen das Algebraideal des Erzeugers."""
    name, generator, permutations_only = sft_generator(group)
    size = generator.valency.k
    generators = [embed(generator, r)] if r >= size else []
    logger.info(f"Prüfe SFT für {group} bei r={r} mit {name}")
    span = algebra_ideal_span(generators, r, group.delta, permutations_only)
    return _compare(group, span, name, PLUS * r, PLUS * r)


def verify_tensor_sft(group: GroupSpec, k: int, ell: int) -> SftResult:
    """Ker F_k^l gegen das Tensorideal 𝒥(m, 2n)_k^l von e(m, 2n) (O, Sp, OSp)."""
    if group.kind not in (KIND_O, KIND_SP, KIND_OSP):
        raise ValueError(f"Das Tensorideal von e(m, 2n) gehört zu OSp-Gruppen. Aktuell: {group}")
    m, twon = group.space.even, group.space.odd
    y = young_idempotent(m, twon)
    logger.info(f"Prüfe Tensorideal von e({m},{twon}) für {group} in B_{k}^{ell}")
    span = tensor_ideal_span(y.element, k, ell, group.delta, y.symmetries())
    return _compare(group, span, f"e({m},{twon})", PLUS * k, PLUS * ell)
