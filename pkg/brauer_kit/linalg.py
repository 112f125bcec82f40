"""
# Exakte lineare Algebra über QQ

Zeilenvektoren sind dünn besetzte Dictionaries `{spalte: Fraction}`.
Rang, reduzierte Zeilenstufenform und Kern werden mit `DomainMatrix`
von sympy über dem Körper QQ berechnet.
"""

from fractions import Fraction
from typing import Callable

import loguru
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from brauer_kit.utils import to_fraction

logger = loguru.logger

Vector = dict[int, Fraction]


def to_domain_matrix(rows: list[Vector], ncols: int) -> DomainMatrix:
    rep = {}
    for i, row in enumerate(rows):
        entries = {j: QQ(v.numerator, v.denominator) for j, v in row.items() if v}
        if entries:
            rep[i] = entries
    return DomainMatrix(rep, (len(rows), ncols), QQ)


def from_domain_matrix(matrix: DomainMatrix) -> list[Vector]:
    sparse = matrix.to_sparse().rep
    nrows = matrix.shape[0]
    result: list[Vector] = []
    for i in range(nrows):
        row = sparse.get(i, {})
        result.append({j: to_fraction(v) for j, v in sorted(row.items()) if v})
    return result


def rank(rows: list[Vector], ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    return to_domain_matrix(rows, ncols).rank()


def row_basis(rows: list[Vector], ncols: int) -> list[Vector]:
    """Basis des Zeilenraums in reduzierter Zeilenstufenform (deterministisch)."""
    rows = [r for r in rows if any(r.values())]
    if not rows or ncols == 0:
        return []
    reduced, pivots = to_domain_matrix(rows, ncols).rref()
    return from_domain_matrix(reduced)[: len(pivots)]


def nullspace(rows: list[Vector], ncols: int) -> list[Vector]:
    """Basis von {x : A x = 0} für die Matrix A mit den gegebenen Zeilen."""
    if ncols == 0:
        return []
    if not any(any(r.values()) for r in rows):
        return [{j: Fraction(1)} for j in range(ncols)]
    kernel = to_domain_matrix(rows, ncols).nullspace()
    return [v for v in from_domain_matrix(kernel) if v]


def transpose(rows: list[Vector], ncols: int) -> list[Vector]:
    columns: list[Vector] = [{} for _ in range(ncols)]
    for i, row in enumerate(rows):
        for j, v in row.items():
            if v:
                columns[j][i] = v
    return columns


def contains(basis: list[Vector], vectors: list[Vector], ncols: int) -> bool:
    base = rank(basis, ncols)
    return rank(basis + vectors, ncols) == base


def span_closure(seed: list[Vector], ncols: int, step: Callable[[Vector], list[Vector]]) -> list[Vector]:
    """Kleinster Unterraum, der `seed` enthält und unter `step` abgeschlossen ist."""
    basis = row_basis(seed, ncols)
    rounds = 0
    while True:
        rounds += 1
        images = [w for v in basis for w in step(v)]
        grown = row_basis(basis + images, ncols)
        if len(grown) == len(basis):
            logger.debug(f"Abschluss nach {rounds} Runden, Dimension {len(grown)}")
            return grown
        basis = grown
