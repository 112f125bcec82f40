"""
# Brauer-Diagramme

Ein (k, l)-Brauer-Diagramm ist eine perfekte Paarung von k unteren und
l oberen Knoten. Die Knoten 1..k liegen unten (links nach rechts),
die Knoten k+1..k+l oben (links nach rechts).

Berechnung:
    Komposition d1 ∘ d2 (d2 unten, d1 oben) klebt die oberen Knoten von d2
    an die unteren von d1. Zusammenhangskomponenten ohne Randknoten sind
    geschlossene Schleifen; sie werden gezählt und entfernt (Faktor δ je Schleife).

Involutionen:
- star: Spiegelung an einer horizontalen Linie, (k, l) -> (l, k).
- sharp: Spiegelung an einer vertikalen Linie, Valenz bleibt.
- rotate: star ∘ sharp, Drehung um 180 Grad (die Anti-Involution `*`).
"""

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

import loguru

from brauer_kit.utils import UnionFind

logger = loguru.logger


class Valency(NamedTuple):
    k: int
    ell: int


@dataclass(frozen=True, order=True)
class BrauerDiagram:
    k: int
    ell: int
    pairs: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if self.k < 0 or self.ell < 0:
            raise ValueError(f"Valenz muss nicht-negativ sein. Aktuell: ({self.k}, {self.ell})")
        if (self.k + self.ell) % 2:
            raise ValueError(
                f"Ein Brauer-Diagramm braucht eine gerade Knotenzahl. Aktuell: ({self.k}, {self.ell})"
            )
        canonical = tuple(sorted(tuple(sorted((int(a), int(b)))) for a, b in self.pairs))
        nodes = [n for pair in canonical for n in pair]
        if sorted(nodes) != list(range(1, self.k + self.ell + 1)):
            raise ValueError(
                f"Die Paare müssen die Knoten 1..{self.k + self.ell} genau einmal überdecken. "
                f"Aktuell: {canonical}"
            )
        object.__setattr__(self, "pairs", canonical)

    @property
    def valency(self) -> Valency:
        return Valency(self.k, self.ell)

    def partner_map(self) -> dict[int, int]:
        result = {}
        for a, b in self.pairs:
            result[a] = b
            result[b] = a
        return result

    def is_top(self, node: int) -> bool:
        return node > self.k

    def to_json(self) -> dict:
        return {"k": self.k, "ell": self.ell, "pairs": [list(p) for p in self.pairs]}

    @classmethod
    def from_json(cls, data: dict | str) -> "BrauerDiagram":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict):
            raise TypeError(f"Diagramm muss als JSON-Objekt übergeben werden. Aktuell: {type(data)}")
        return cls(int(data["k"]), int(data["ell"]), tuple(tuple(p) for p in data["pairs"]))

    def __str__(self) -> str:
        return f"D({self.k},{self.ell}){list(self.pairs)}"


@dataclass(frozen=True)
class ScaledDiagram:
    diagram: BrauerDiagram
    loops: int = 0

    def __post_init__(self):
        if self.loops < 0:
            raise ValueError(f"Schleifenzahl muss nicht-negativ sein. Aktuell: {self.loops}")

    def to_json(self) -> dict:
        return {"diagram": self.diagram.to_json(), "loops": self.loops}


def compose(d1: BrauerDiagram, d2: BrauerDiagram) -> ScaledDiagram:
    """d1 ∘ d2: zuerst d2 (unten), dann d1 (oben)."""
    if d1.k != d2.ell:
        raise ValueError(
            f"Valenzen passen nicht: d1 hat Valenz {tuple(d1.valency)}, d2 hat Valenz "
            f"{tuple(d2.valency)} (d1.k muss d2.ell sein)"
        )
    k, ell, p = d2.k, d2.ell, d1.ell
    total = k + ell + p
    uf = UnionFind(range(1, total + 1))
    for a, b in d2.pairs:
        uf.join(a, b)
    # Knoten y von d1 liegt global bei k + y.
    for a, b in d1.pairs:
        uf.join(k + a, k + b)

    pairs = []
    loops = 0
    for members in uf.groups().values():
        boundary = [n for n in members if n <= k or n > k + ell]
        if not boundary:
            loops += 1
            continue
        a, b = boundary
        pairs.append((_outer(a, k, ell), _outer(b, k, ell)))
    return ScaledDiagram(BrauerDiagram(k, p, tuple(pairs)), loops)


def _outer(node: int, k: int, ell: int) -> int:
    return node if node <= k else node - ell


def tensor(d1: BrauerDiagram, d2: BrauerDiagram) -> BrauerDiagram:
    k1, l1, k2, l2 = d1.k, d1.ell, d2.k, d2.ell

    def shift1(n: int) -> int:
        return n if n <= k1 else n + k2

    def shift2(n: int) -> int:
        return n + k1 if n <= k2 else n + k1 + l1

    pairs = [(shift1(a), shift1(b)) for a, b in d1.pairs]
    pairs += [(shift2(a), shift2(b)) for a, b in d2.pairs]
    return BrauerDiagram(k1 + k2, l1 + l2, tuple(pairs))


def tensor_all(diagrams: list[BrauerDiagram]) -> BrauerDiagram:
    result = BrauerDiagram(0, 0)
    for d in diagrams:
        result = tensor(result, d)
    return result


def star(d: BrauerDiagram) -> BrauerDiagram:
    k, ell = d.k, d.ell

    def flip(n: int) -> int:
        return ell + n if n <= k else n - k

    return BrauerDiagram(ell, k, tuple((flip(a), flip(b)) for a, b in d.pairs))


def sharp(d: BrauerDiagram) -> BrauerDiagram:
    k, ell = d.k, d.ell

    def mirror(n: int) -> int:
        return k + 1 - n if n <= k else k + (ell + 1 - (n - k))

    return BrauerDiagram(k, ell, tuple((mirror(a), mirror(b)) for a, b in d.pairs))


def rotate(d: BrauerDiagram) -> BrauerDiagram:
    return star(sharp(d))


def through_strings(d: BrauerDiagram) -> int:
    return sum(1 for a, b in d.pairs if a <= d.k < b)


def is_permutation(d: BrauerDiagram) -> bool:
    return d.k == d.ell and through_strings(d) == d.k


def permutation_of(d: BrauerDiagram) -> tuple[int, ...]:
    """Bild der unteren Knoten als 1-basiertes Tupel: unten i -> oben perm[i-1]."""
    if not is_permutation(d):
        raise ValueError(f"Kein Permutationsdiagramm: {d}")
    image = {}
    for a, b in d.pairs:
        image[a] = b - d.k
    return tuple(image[i] for i in range(1, d.k + 1))


# Bausteine


def identity(r: int) -> BrauerDiagram:
    if r < 0:
        raise ValueError(f"Anzahl der Stränge muss nicht-negativ sein. Aktuell: {r}")
    return BrauerDiagram(r, r, tuple((i, r + i) for i in range(1, r + 1)))


def cap() -> BrauerDiagram:
    return BrauerDiagram(2, 0, ((1, 2),))


def cup() -> BrauerDiagram:
    return BrauerDiagram(0, 2, ((1, 2),))


def cross() -> BrauerDiagram:
    return BrauerDiagram(2, 2, ((1, 4), (2, 3)))


def permutation_diagram(perm: tuple[int, ...] | list[int]) -> BrauerDiagram:
    """Unten i geht nach oben perm[i-1] (1-basiert)."""
    r = len(perm)
    if sorted(perm) != list(range(1, r + 1)):
        raise ValueError(f"Keine Permutation von 1..{r}: {perm}")
    return BrauerDiagram(r, r, tuple((i, r + perm[i - 1]) for i in range(1, r + 1)))


def s_i(r: int, i: int) -> BrauerDiagram:
    if not 1 <= i <= r - 1:
        raise ValueError(f"Index i muss in 1..{r - 1} liegen. Aktuell: i={i}")
    perm = list(range(1, r + 1))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return permutation_diagram(perm)


def e_i(r: int, i: int) -> BrauerDiagram:
    if not 1 <= i <= r - 1:
        raise ValueError(f"Index i muss in 1..{r - 1} liegen. Aktuell: i={i}")
    return e_ab(r, i, i + 1)


def e_ab(r: int, a: int, b: int) -> BrauerDiagram:
    """Bogen unten zwischen a und b, Bogen oben zwischen a und b, sonst Identität."""
    if not (1 <= a < b <= r):
        raise ValueError(f"Es muss 1 <= a < b <= {r} gelten. Aktuell: a={a}, b={b}")
    pairs = [(a, b), (r + a, r + b)]
    pairs += [(j, r + j) for j in range(1, r + 1) if j not in (a, b)]
    return BrauerDiagram(r, r, tuple(pairs))


def A_q(q: int) -> BrauerDiagram:
    """q geschachtelte Kappen: A_q = A ∘ (I ⊗ A_{q-1} ⊗ I)."""
    if q < 0:
        raise ValueError(f"q muss nicht-negativ sein. Aktuell: {q}")
    return BrauerDiagram(2 * q, 0, tuple((j, 2 * q + 1 - j) for j in range(1, q + 1)))


def U_q(q: int) -> BrauerDiagram:
    return star(A_q(q))


def X_cross(s: int, t: int) -> BrauerDiagram:
    """Verflechtung X_{s,t}: die linken s Stränge kreuzen über die rechten t."""
    if s < 0 or t < 0:
        raise ValueError(f"s und t müssen nicht-negativ sein. Aktuell: s={s}, t={t}")
    perm = [t + j for j in range(1, s + 1)] + [j for j in range(1, t + 1)]
    return permutation_diagram(perm)


def raise_diagram(d: BrauerDiagram) -> BrauerDiagram:
    """R(D) = (D ⊗ I) ∘ (I^{k-1} ⊗ U)."""
    if d.k < 1:
        raise ValueError(f"R benötigt k >= 1. Aktuell: Valenz {tuple(d.valency)}")
    lower = tensor(identity(d.k - 1), cup())
    return compose(tensor(d, identity(1)), lower).diagram


def lower_diagram(d: BrauerDiagram) -> BrauerDiagram:
    """L(D) = (I^{l-1} ⊗ A) ∘ (D ⊗ I)."""
    if d.ell < 1:
        raise ValueError(f"L benötigt l >= 1. Aktuell: Valenz {tuple(d.valency)}")
    upper = tensor(identity(d.ell - 1), cap())
    return compose(upper, tensor(d, identity(1))).diagram


def raise_all(d: BrauerDiagram) -> BrauerDiagram:
    """R^k als reine Umbenennung: unterer Knoten k+1-i wird oberer Knoten l+i."""
    k, ell = d.k, d.ell

    def move(n: int) -> int:
        return ell + (k + 1 - n) if n <= k else n - k

    return BrauerDiagram(0, k + ell, tuple((move(a), move(b)) for a, b in d.pairs))


def lower_all(d: BrauerDiagram, k: int) -> BrauerDiagram:
    """Umkehrung von `raise_all`: die letzten k oberen Knoten werden untere Knoten."""
    if d.k != 0 or not 0 <= k <= d.ell:
        raise ValueError(f"lower_all erwartet Valenz (0, n) mit k <= n. Aktuell: {tuple(d.valency)}, k={k}")
    ell = d.ell - k

    def move(n: int) -> int:
        return k + n if n <= ell else k + 1 - (n - ell)

    return BrauerDiagram(k, ell, tuple((move(a), move(b)) for a, b in d.pairs))


def all_pairings(items: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, item in enumerate(rest):
        for pairing in all_pairings(rest[:i] + rest[i + 1 :]):
            yield [(first, item)] + pairing


def enumerate_diagrams(k: int, ell: int) -> list[BrauerDiagram]:
    if (k + ell) % 2:
        return []
    diagrams = [BrauerDiagram(k, ell, tuple(p)) for p in all_pairings(list(range(1, k + ell + 1)))]
    return sorted(diagrams)


def enumerate_permutations(r: int) -> list[BrauerDiagram]:
    return sorted(permutation_diagram(p) for p in itertools.permutations(range(1, r + 1)))


def render(d: BrauerDiagram) -> str:
    """
    ASCII-Darstellung mit fester Breite.

    Oben stehen die oberen Knoten, unten die unteren. Jede Zeile dazwischen
    beschreibt einen Bogen: `^` für Kappen (unten-unten), `v` für Becher
    (oben-oben), `|` für Durchgangsstränge.
    """
    width = max(d.k, d.ell, 1)
    top = " ".join(f"{j:>2}" for j in range(1, d.ell + 1))
    bottom = " ".join(f"{i:>2}" for i in range(1, d.k + 1))
    lines = [f"oben : {top}"]
    for a, b in d.pairs:
        row = [" . "] * width
        if a <= d.k and b <= d.k:
            kind, cols = "^", (a, b)
            label = f"Kappe   {a}-{b}"
        elif a > d.k and b > d.k:
            kind, cols = "v", (a - d.k, b - d.k)
            label = f"Becher  {a - d.k}'-{b - d.k}'"
        else:
            kind, cols = "|", (a, b - d.k)
            label = f"Strang  {a}->{b - d.k}'"
        for c in cols:
            row[c - 1] = f" {kind} "
        lines.append(f"       {''.join(row)}   {label}")
    lines.append(f"unten: {bottom}")
    return "\n".join(lines)
