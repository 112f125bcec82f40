"""
# Graduierte Vektorräume und Gruppen

V = V₀ ⊕ V₁ mit Basis b_1..b_d, die geraden Basisvektoren zuerst.

Form (Gram-Matrix G):
- auf V₀ die Einheitsmatrix (symmetrisch),
- auf V₁ Blöcke [[0, 1], [-1, 0]] (antisymmetrisch),
- (V₀, V₁) = (V₁, V₀) = 0.

Das duale Element c₀ = Σ_i b_i ⊗ b̄_i mit (b̄_i, b_j) = δ_ij hat die
Koeffizienten H = G⁻¹: c₀ = Σ_{i,k} H_ik b_i ⊗ b_k.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import loguru

logger = loguru.logger

KIND_O = "O"
KIND_SO = "SO"
KIND_SP = "Sp"
KIND_OSP = "OSp"
KIND_GL = "GL"
KINDS = (KIND_O, KIND_SO, KIND_SP, KIND_OSP, KIND_GL)

Entries = dict[tuple[int, int], Fraction]


@dataclass(frozen=True)
class SuperSpace:
    """
    SuperSpace: endlichdimensionaler Superraum mit Paritäten

    Eigenschaften
    -------------
    - even : int
        Dimension von V₀.
    - odd : int
        Dimension von V₁ (für Formen gerade).

    Beispiel
    -------
    ```
    v = SuperSpace(2, 2)
    v.parities  # (0, 0, 1, 1)
    v.sdim      # 0
    ```
    """

    even: int
    odd: int = 0

    def __post_init__(self):
        if self.even < 0 or self.odd < 0:
            raise ValueError(f"Dimensionen müssen nicht-negativ sein. Aktuell: ({self.even}|{self.odd})")

    @property
    def dim(self) -> int:
        return self.even + self.odd

    @property
    def sdim(self) -> int:
        return self.even - self.odd

    @cached_property
    def parities(self) -> tuple[int, ...]:
        return (0,) * self.even + (1,) * self.odd

    def parity_of(self, digits: tuple[int, ...]) -> int:
        return sum(self.parities[d] for d in digits) % 2

    def _check_form(self) -> None:
        if self.odd % 2:
            raise ValueError(f"Eine orthosymplektische Form braucht gerade ungerade Dimension. Aktuell: {self.odd}")

    @cached_property
    def gram(self) -> Entries:
        self._check_form()
        entries = {(i, i): Fraction(1) for i in range(self.even)}
        for a in range(self.even, self.dim, 2):
            entries[(a, a + 1)] = Fraction(1)
            entries[(a + 1, a)] = Fraction(-1)
        return entries

    @cached_property
    def gram_inverse(self) -> Entries:
        self._check_form()
        entries = {(i, i): Fraction(1) for i in range(self.even)}
        for a in range(self.even, self.dim, 2):
            entries[(a, a + 1)] = Fraction(-1)
            entries[(a + 1, a)] = Fraction(1)
        return entries

    def reflection(self) -> dict[int, Fraction]:
        """Diagonale diag(-1, 1, ..., 1) auf V₀, Identität auf V₁."""
        if self.even < 1:
            raise ValueError("Die Spiegelung braucht einen geraden Anteil")
        return {i: Fraction(-1 if i == 0 else 1) for i in range(self.dim)}

    def __str__(self) -> str:
        return f"({self.even}|{self.odd})"


@dataclass(frozen=True)
class GroupSpec:
    """
    GroupSpec: O(m), SO(m), Sp(2n), OSp(m|2n) oder GL(m|l)

    Eigenschaften
    -------------
    - kind : str
        Einer der Werte aus `KINDS`.
    - space : SuperSpace
        Natürlicher Modul V.
    """

    kind: str
    space: SuperSpace

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"Unbekannte Gruppe {self.kind!r}. Erlaubt: {', '.join(KINDS)}")
        if self.kind in (KIND_O, KIND_SO) and self.space.odd:
            raise ValueError(f"{self.kind} hat keinen ungeraden Anteil. Aktuell: {self.space}")
        if self.kind == KIND_SP and self.space.even:
            raise ValueError(f"Sp hat keinen geraden Anteil. Aktuell: {self.space}")
        if self.kind != KIND_GL:
            self.space._check_form()

    @property
    def delta(self) -> int:
        return self.space.sdim

    @property
    def oriented(self) -> bool:
        return self.kind == KIND_GL

    @property
    def has_reflection(self) -> bool:
        return self.kind in (KIND_O, KIND_OSP) and self.space.even > 0

    @property
    def label(self) -> str:
        m, odd = self.space.even, self.space.odd
        if self.kind in (KIND_O, KIND_SO):
            return f"{self.kind}({m})"
        if self.kind == KIND_SP:
            return f"Sp({odd})"
        return f"{self.kind}({m}|{odd})"

    def __str__(self) -> str:
        return self.label


def orthogonal(m: int) -> GroupSpec:
    return GroupSpec(KIND_O, SuperSpace(m, 0))


def special_orthogonal(m: int) -> GroupSpec:
    return GroupSpec(KIND_SO, SuperSpace(m, 0))


def symplectic(twon: int) -> GroupSpec:
    return GroupSpec(KIND_SP, SuperSpace(0, twon))


def orthosymplectic(m: int, twon: int) -> GroupSpec:
    return GroupSpec(KIND_OSP, SuperSpace(m, twon))


def general_linear(m: int, ell: int = 0) -> GroupSpec:
    return GroupSpec(KIND_GL, SuperSpace(m, ell))


_PATTERN = re.compile(r"^(osp|so|sp|gl|o)(\d+)(?:\|(\d+))?$")


def parse_group(text: str) -> GroupSpec:
    """Liest Kurzformen wie `o3`, `so2`, `sp2`, `osp1|2`, `gl2|1` (auch `O(3)`, `GL(2|1)`)."""
    raw = text
    text = text.strip().lower().replace("(", "").replace(")", "").replace(" ", "")
    match = _PATTERN.match(text)
    if match is None:
        raise ValueError(f"Unbekannte Gruppe {raw!r}. Beispiele: o3, so2, sp2, osp1|2, gl2|1")
    kind, first, second = match.group(1), int(match.group(2)), match.group(3)
    if kind in ("o", "so", "sp") and second is not None:
        raise ValueError(f"{kind} erwartet genau eine Dimension. Aktuell: {raw!r}")
    if kind == "o":
        return orthogonal(first)
    if kind == "so":
        return special_orthogonal(first)
    if kind == "sp":
        return symplectic(first)
    if kind == "osp":
        return orthosymplectic(first, int(second or 0))
    return general_linear(first, int(second or 0))
