"""
# Exakte Tensoroperatoren

Ein TensorOperator ist eine Matrix V^η -> V^ζ über QQ in der Produktbasis.
Ein Tensorwort ist eine Vorzeichenfolge: `+` steht für V, `-` für V*.
Für O, Sp und OSp kommen nur Folgen aus `+` vor.

Indizes: Zeile = gemischt-radixer Index der Ausgabeziffern, Spalte = Index
der Eingabeziffern, linker Tensorfaktor = höchstwertige Stelle.
Alle Operatoren sind gerade, das Tensorprodukt braucht daher kein Vorzeichen.
"""

from fractions import Fraction
from typing import Iterable

import loguru

from brauer_kit.functor.space import Entries, SuperSpace
from brauer_kit.linalg import Vector
from brauer_kit.linalg import rank as matrix_rank
from brauer_kit.utils import check_budget, digits_of, format_fraction, to_fraction

logger = loguru.logger


class TensorOperator:
    """
    TensorOperator: lineare Abbildung zwischen Tensorwörtern

    Eigenschaften
    -------------
    - space : SuperSpace
        Natürlicher Modul, liefert Dimension und Paritäten.
    - source, target : str
        Tensorwörter von Definitions- und Zielbereich.
    - entries : dict[(zeile, spalte), Fraction]
        Nur von Null verschiedene Einträge.

    Beispiel
    -------
    ```
    v = SuperSpace(2, 0)
    p = TensorOperator.identity(v, "++")
    p.shape  # (4, 4)
    ```
    """

    __slots__ = ("space", "source", "target", "entries")

    def __init__(self, space: SuperSpace, source: str, target: str, entries: Entries | None = None):
        self.space = space
        self.source = source
        self.target = target
        check_budget(self.rows * self.cols, f"Operator {source or '∅'} -> {target or '∅'} über {space}")
        self.entries: Entries = {}
        for key, value in (entries or {}).items():
            value = to_fraction(value)
            if value:
                self.entries[key] = value

    @property
    def rows(self) -> int:
        return self.space.dim ** len(self.target)

    @property
    def cols(self) -> int:
        return self.space.dim ** len(self.source)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @classmethod
    def zero(cls, space: SuperSpace, source: str, target: str) -> "TensorOperator":
        return cls(space, source, target)

    @classmethod
    def identity(cls, space: SuperSpace, word: str) -> "TensorOperator":
        size = space.dim ** len(word)
        return cls(space, word, word, {(i, i): Fraction(1) for i in range(size)})

    @classmethod
    def scalar(cls, space: SuperSpace, value) -> "TensorOperator":
        return cls(space, "", "", {(0, 0): value})

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return (
            self.space == other.space
            and self.source == other.source
            and self.target == other.target
            and self.entries == other.entries
        )

    __hash__ = None

    def _check_same(self, other: "TensorOperator") -> None:
        if (self.space, self.source, self.target) != (other.space, other.source, other.target):
            raise ValueError(
                f"Operatoren passen nicht: {self.source!r}->{self.target!r} über {self.space} und "
                f"{other.source!r}->{other.target!r} über {other.space}"
            )

    def __add__(self, other: "TensorOperator") -> "TensorOperator":
        self._check_same(other)
        entries = dict(self.entries)
        for key, value in other.entries.items():
            entries[key] = entries.get(key, Fraction(0)) + value
        return TensorOperator(self.space, self.source, self.target, entries)

    def __sub__(self, other: "TensorOperator") -> "TensorOperator":
        return self + other.scale(-1)

    def __neg__(self) -> "TensorOperator":
        return self.scale(-1)

    def __matmul__(self, other: "TensorOperator") -> "TensorOperator":
        return self.compose(other)

    def scale(self, c) -> "TensorOperator":
        c = to_fraction(c)
        return TensorOperator(self.space, self.source, self.target, {k: v * c for k, v in self.entries.items()})

    def compose(self, other: "TensorOperator") -> "TensorOperator":
        """self ∘ other."""
        if self.space != other.space or other.target != self.source:
            raise ValueError(
                f"Komposition nicht definiert: Ziel {other.target!r} über {other.space}, "
                f"Quelle {self.source!r} über {self.space}"
            )
        by_col: dict[int, list[tuple[int, Fraction]]] = {}
        for (i, j), v in self.entries.items():
            by_col.setdefault(j, []).append((i, v))
        entries: dict[tuple[int, int], Fraction] = {}
        for (j, c), w in other.entries.items():
            for i, v in by_col.get(j, ()):
                key = (i, c)
                entries[key] = entries.get(key, Fraction(0)) + v * w
        return TensorOperator(self.space, other.source, self.target, entries)

    def tensor(self, other: "TensorOperator") -> "TensorOperator":
        if self.space != other.space:
            raise ValueError(f"Tensorprodukt über verschiedenen Räumen: {self.space} und {other.space}")
        r2, c2 = other.rows, other.cols
        entries = {}
        for (i1, j1), v1 in self.entries.items():
            for (i2, j2), v2 in other.entries.items():
                entries[(i1 * r2 + i2, j1 * c2 + j2)] = v1 * v2
        return TensorOperator(self.space, self.source + other.source, self.target + other.target, entries)

    def entry(self, row: int, col: int) -> Fraction:
        return self.entries.get((row, col), Fraction(0))

    def trace(self) -> Fraction:
        self._check_square()
        return sum((v for (i, j), v in self.entries.items() if i == j), Fraction(0))

    def supertrace(self) -> Fraction:
        """Σ_i (-1)^{[i]} M_ii mit der Parität des Produktbasisvektors."""
        self._check_square()
        total = Fraction(0)
        length = len(self.source)
        for (i, j), v in self.entries.items():
            if i == j:
                parity = self.space.parity_of(digits_of(i, self.space.dim, length))
                total += -v if parity else v
        return total

    def _check_square(self) -> None:
        if self.source != self.target:
            raise ValueError(f"Spur braucht gleiche Quelle und Ziel. Aktuell: {self.source!r} -> {self.target!r}")

    def flatten(self) -> Vector:
        """Zeilenweise Ausbreitung in einen Vektor der Länge rows*cols."""
        cols = self.cols
        return {i * cols + j: v for (i, j), v in self.entries.items()}

    def row_vectors(self) -> list[Vector]:
        rows: list[Vector] = [{} for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def rank(self) -> int:
        return matrix_rank(self.row_vectors(), self.cols)

    def to_dense(self) -> list[list[Fraction]]:
        dense = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            dense[i][j] = v
        return dense

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_fraction(v) for v in row] for row in self.to_dense()],
        }

    def __repr__(self) -> str:
        return f"TensorOperator({self.source!r}->{self.target!r}, {self.space}, {len(self.entries)} Einträge)"


def tensor_operators(operators: Iterable[TensorOperator], space: SuperSpace) -> TensorOperator:
    result = TensorOperator.scalar(space, 1)
    for op in operators:
        result = result.tensor(op)
    return result


def from_vector(space: SuperSpace, source: str, target: str, vector: Vector) -> TensorOperator:
    """Umkehrung von `flatten`."""
    cols = space.dim ** len(source)
    return TensorOperator(space, source, target, {divmod(index, cols): v for index, v in vector.items()})
