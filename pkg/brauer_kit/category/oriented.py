"""
# Orientierte Brauer-Diagramme

Ein orientiertes Diagramm ist ein Brauer-Diagramm, dessen Bögen einen
Pfeil tragen. Gespeichert wird je Bogen nur der Anfangsknoten (`tails`);
Quelle und Ziel werden daraus abgeleitet:

- unterer Knoten: `+`, wenn der Pfeil dort aus dem Diagramm hinauszeigt
  (der Bogen endet dort), sonst `-`;
- oberer Knoten: `+`, wenn der Pfeil dort in das Diagramm hineinzeigt
  (der Bogen beginnt dort), sonst `-`.

Der Aufwärtsstrang mit Pfeil nach unten ist damit I+ : (+) -> (+).

Berechnung:
    Die Orientierung eines Bogens ist durch die Randvorzeichen eindeutig
    bestimmt. Komposition und Tensorprodukt arbeiten daher auf den
    zugrundeliegenden Diagrammen und orientieren das Ergebnis über
    `from_signs` neu. Geschlossene Schleifen zählen unabhängig von ihrer
    Orientierung als ein Faktor δ.
"""

import json
import math
from dataclasses import dataclass, field
from typing import Callable

import loguru
import numpy as np

from brauer_kit.category.diagram import (
    BrauerDiagram,
    cap,
    compose,
    cross,
    cup,
    enumerate_diagrams,
    identity,
    permutation_diagram,
    tensor,
)

logger = loguru.logger

PLUS = "+"
MINUS = "-"


def _check_signs(eta: str) -> str:
    if any(c not in (PLUS, MINUS) for c in eta):
        raise ValueError(f"Vorzeichenfolge darf nur '+' und '-' enthalten. Aktuell: {eta!r}")
    return eta


def join(eta: str, zeta: str) -> str:
    return _check_signs(eta) + _check_signs(zeta)


def negative(eta: str) -> str:
    return "".join(MINUS if c == PLUS else PLUS for c in _check_signs(eta))


def reverse(eta: str) -> str:
    return _check_signs(eta)[::-1]


def sign_length(eta: str) -> tuple[int, int]:
    """sl(η) = (#₊, #₋)."""
    return _check_signs(eta).count(PLUS), eta.count(MINUS)


@dataclass(frozen=True)
class OrientedDiagram:
    """
    OrientedDiagram: Brauer-Diagramm mit orientierten Bögen

    Eigenschaften
    -------------
    - diagram : BrauerDiagram
        Zugrundeliegende Paarung.
    - tails : frozenset[int]
        Anfangsknoten, genau einer je Paar.
    - source, target : str
        Abgeleitete Vorzeichenfolgen s(Γ) und t(Γ).

    Beispiel
    -------
    ```
    a = from_signs(cap(), "-+", "")
    a.tails  # frozenset({1})
    ```
    """

    diagram: BrauerDiagram
    tails: frozenset = field(default=frozenset())

    def __post_init__(self):
        object.__setattr__(self, "tails", frozenset(int(t) for t in self.tails))
        for a, b in self.diagram.pairs:
            if (a in self.tails) == (b in self.tails):
                raise ValueError(f"Bogen ({a}, {b}) braucht genau einen Anfangsknoten. Aktuell: {sorted(self.tails)}")
        if len(self.tails) != len(self.diagram.pairs):
            raise ValueError(f"Anfangsknoten {sorted(self.tails)} liegen nicht alle im Diagramm {self.diagram}")

    @property
    def source(self) -> str:
        return "".join(MINUS if n in self.tails else PLUS for n in range(1, self.diagram.k + 1))

    @property
    def target(self) -> str:
        k = self.diagram.k
        return "".join(PLUS if k + j in self.tails else MINUS for j in range(1, self.diagram.ell + 1))

    def arc_counts_hold(self) -> bool:
        """#₊(t)+#₋(s) == #₊(s)+#₋(t) == (l(t)+l(s))/2."""
        s_plus, s_minus = sign_length(self.source)
        t_plus, t_minus = sign_length(self.target)
        total = len(self.source) + len(self.target)
        return 2 * (t_plus + s_minus) == total and 2 * (s_plus + t_minus) == total

    def to_json(self) -> dict:
        data = self.diagram.to_json()
        data.update({"tails": sorted(self.tails), "source": self.source, "target": self.target})
        return data

    @classmethod
    def from_json(cls, data: dict | str) -> "OrientedDiagram":
        if isinstance(data, str):
            data = json.loads(data)
        d = BrauerDiagram.from_json(data)
        if "tails" in data:
            result = cls(d, frozenset(data["tails"]))
            for key in ("source", "target"):
                if key in data and data[key] != getattr(result, key):
                    raise ValueError(
                        f"Gespeichertes {key} {data[key]!r} passt nicht zur Orientierung {getattr(result, key)!r}"
                    )
            return result
        return from_signs(d, data["source"], data["target"])

    def __str__(self) -> str:
        return f"{self.source or '∅'}->{self.target or '∅'} {list(self.diagram.pairs)} tails={sorted(self.tails)}"


def from_signs(d: BrauerDiagram, source: str, target: str) -> OrientedDiagram:
    """Orientiert `d` so, dass Quelle und Ziel die gegebenen Vorzeichen tragen."""
    _check_signs(source)
    _check_signs(target)
    if (len(source), len(target)) != (d.k, d.ell):
        raise ValueError(
            f"Vorzeichenfolgen der Längen ({len(source)}, {len(target)}) passen nicht zur Valenz {tuple(d.valency)}"
        )

    def sign(n: int) -> str:
        return source[n - 1] if n <= d.k else target[n - d.k - 1]

    def is_tail(n: int) -> bool:
        # unten: Anfang ist '-', oben: Anfang ist '+'
        return sign(n) == (PLUS if d.is_top(n) else MINUS)

    tails = set()
    for a, b in d.pairs:
        if is_tail(a) == is_tail(b):
            raise ValueError(
                f"Bogen ({a}, {b}) lässt sich mit Quelle {source!r} und Ziel {target!r} nicht orientieren"
            )
        tails.add(a if is_tail(a) else b)
    return OrientedDiagram(d, frozenset(tails))


def oriented_identity(eta: str) -> OrientedDiagram:
    return from_signs(identity(len(eta)), eta, eta)


def compose_oriented(d1: OrientedDiagram, d2: OrientedDiagram) -> tuple[OrientedDiagram, int]:
    """d1 ∘ d2 mit Anzahl der entfernten Schleifen."""
    if d2.target != d1.source:
        raise ValueError(f"Vorzeichen passen nicht: t(d2) = {d2.target!r}, s(d1) = {d1.source!r}")
    scaled = compose(d1.diagram, d2.diagram)
    return from_signs(scaled.diagram, d2.source, d1.target), scaled.loops


def tensor_oriented(d1: OrientedDiagram, d2: OrientedDiagram) -> OrientedDiagram:
    return from_signs(tensor(d1.diagram, d2.diagram), d1.source + d2.source, d1.target + d2.target)


def tensor_all_oriented(diagrams: list[OrientedDiagram]) -> OrientedDiagram:
    result = from_signs(BrauerDiagram(0, 0), "", "")
    for d in diagrams:
        result = tensor_oriented(result, d)
    return result


def enumerate_oriented(eta: str, zeta: str) -> list[OrientedDiagram]:
    result = []
    for d in enumerate_diagrams(len(eta), len(zeta)):
        try:
            result.append(from_signs(d, eta, zeta))
        except ValueError:
            continue
    return result


def walled_brauer_basis(r: int, s: int) -> list[OrientedDiagram]:
    eta = PLUS * r + MINUS * s
    basis = enumerate_oriented(eta, eta)
    logger.debug(f"Walled-Brauer-Basis ({r}, {s}): {len(basis)} Diagramme, erwartet {math.factorial(r + s)}")
    return basis


def random_oriented(k: int, ell: int, seed: int = 0) -> OrientedDiagram:
    """Zufällige Paarung mit zufälliger Orientierung jedes Bogens."""
    if (k + ell) % 2:
        raise ValueError(f"Keine Diagramme der Valenz ({k}, {ell})")
    rng = np.random.default_rng(seed)
    nodes = [int(n) + 1 for n in rng.permutation(k + ell)]
    pairs = [(nodes[i], nodes[i + 1]) for i in range(0, len(nodes), 2)]
    tails = [a if rng.integers(2) else b for a, b in pairs]
    return OrientedDiagram(BrauerDiagram(k, ell, tuple(pairs)), frozenset(tails))


# Erzeuger und Relationen

GENERATORS: dict[str, OrientedDiagram] = {
    "I+": from_signs(identity(1), PLUS, PLUS),
    "I-": from_signs(identity(1), MINUS, MINUS),
    "X": from_signs(cross(), "++", "++"),
    "A+": from_signs(cap(), "-+", ""),
    "A-": from_signs(cap(), "+-", ""),
    "U+": from_signs(cup(), "", "+-"),
    "U-": from_signs(cup(), "", "-+"),
}

Layers = list[list[str]]


@dataclass(frozen=True)
class OrientedRelation:
    """Relation als Schichten von unten nach oben; leere rechte Seite heißt Identität auf `signs`."""

    name: str
    lhs: tuple
    rhs: tuple
    loops: int = 0
    signs: str = ""


def _layers(*rows: str) -> tuple:
    return tuple(tuple(row.split()) for row in rows)


RELATIONS: list[OrientedRelation] = [
    OrientedRelation("X∘X = I", _layers("X", "X"), _layers("I+ I+")),
    OrientedRelation("Zopfrelation", _layers("X I+", "I+ X", "X I+"), _layers("I+ X", "X I+", "I+ X")),
    OrientedRelation("Begradigung I-", _layers("I- U+", "A+ I-"), _layers("I-")),
    OrientedRelation("Begradigung I+", _layers("I+ U-", "A- I+"), _layers("I+")),
    OrientedRelation("Begradigung I+ gespiegelt", _layers("U+ I+", "I+ A+"), _layers("I+")),
    OrientedRelation("Begradigung I- gespiegelt", _layers("U- I-", "I- A-"), _layers("I-")),
    OrientedRelation(
        "umgekehrte Kreuzung",
        _layers("I- I- U+", "I- I- I+ U+ I-", "I- I- X I- I-", "I- A+ I+ I- I-", "A+ I- I-"),
        _layers("U- I- I-", "I- U- I+ I- I-", "I- I- X I- I-", "I- I- I+ A- I-", "I- I- A-"),
    ),
    OrientedRelation(
        "Gleiten Γ₁∘Γ₂",
        _layers("U- I+ I-", "I- X I-", "I- I+ A-", "I- I+ U+", "I- X I-", "A+ I+ I-"),
        _layers("I+ I-"),
    ),
    OrientedRelation(
        "Gleiten Γ₂∘Γ₁",
        _layers("I- I+ U+", "I- X I-", "A+ I+ I-", "U- I+ I-", "I- X I-", "I- I+ A-"),
        _layers("I- I+"),
    ),
    OrientedRelation("Verdrillung", _layers("I+ U+", "X I-", "I+ A-"), _layers("I+")),
    OrientedRelation("Schleife U-/A+", _layers("U-", "A+"), (), loops=1),
    OrientedRelation("Schleife U+/A-", _layers("U+", "A-"), (), loops=1),
]


def evaluate_layers(
    layers: tuple,
    signs: str = "",
    generators: dict | None = None,
    compose_fn: Callable | None = None,
    tensor_fn: Callable | None = None,
    identity_fn: Callable | None = None,
):
    """
    Wertet Schichten (von unten nach oben) aus.

    Standardmäßig diagrammatisch mit Schleifenzähler; mit eigenen Funktionen
    lässt sich dieselbe Relation z.B. unter einem Funktor auswerten.
    """
    if generators is None:
        generators = GENERATORS
    if compose_fn is None:
        return _evaluate_diagrammatic(layers, signs, generators)
    if not layers:
        return identity_fn(signs)
    value = None
    for row in layers:
        layer = generators[row[0]]
        for name in row[1:]:
            layer = tensor_fn(layer, generators[name])
        value = layer if value is None else compose_fn(layer, value)
    return value


def _evaluate_diagrammatic(layers: tuple, signs: str, generators: dict) -> tuple[OrientedDiagram, int]:
    if not layers:
        return oriented_identity(signs), 0
    value = tensor_all_oriented([generators[name] for name in layers[0]])
    loops = 0
    for row in layers[1:]:
        layer = tensor_all_oriented([generators[name] for name in row])
        value, extra = compose_oriented(layer, value)
        loops += extra
    return value, loops


def check_relation(relation: OrientedRelation) -> bool:
    lhs, lhs_loops = _evaluate_diagrammatic(relation.lhs, relation.signs, GENERATORS)
    rhs, rhs_loops = _evaluate_diagrammatic(relation.rhs, relation.signs, GENERATORS)
    return lhs == rhs and lhs_loops == rhs_loops + relation.loops


# Transport zwischen Vorzeichenfolgen


def sorted_signs(eta: str) -> str:
    """η̄: alle '+' vor allen '-'."""
    plus, minus = sign_length(eta)
    return PLUS * plus + MINUS * minus


def sorting_diagram(eta: str) -> OrientedDiagram:
    """Permutationsdiagramm X_η^{η̄} mit minimaler Kreuzungszahl (stabile Sortierung)."""
    order = sorted(range(len(eta)), key=lambda i: (eta[i] != PLUS, i))
    perm = [0] * len(eta)
    for position, i in enumerate(order, start=1):
        perm[i] = position
    return from_signs(permutation_diagram(perm), eta, sorted_signs(eta))


@dataclass(frozen=True)
class TransportIso:
    """
    TransportIso: Konjugation OB_η^η -> OB_{η̄}^{η̄}

    Methoden
    -------
    - forward(d)
        X ∘ d ∘ X⁻¹ auf einem Basisdiagramm.
    - backward(d)
        X⁻¹ ∘ d ∘ X.
    - check()
        Beide Kompositionen sind die Identität und `forward` ist multiplikativ.
    """

    eta: str
    sort: OrientedDiagram
    unsort: OrientedDiagram

    def forward(self, d: OrientedDiagram) -> OrientedDiagram:
        inner, _ = compose_oriented(d, self.unsort)
        result, _ = compose_oriented(self.sort, inner)
        return result

    def backward(self, d: OrientedDiagram) -> OrientedDiagram:
        inner, _ = compose_oriented(d, self.sort)
        result, _ = compose_oriented(self.unsort, inner)
        return result

    def check(self) -> bool:
        basis = enumerate_oriented(self.eta, self.eta)
        ok = all(self.backward(self.forward(d)) == d for d in basis)
        ok &= all(self.forward(self.backward(d)) == d for d in enumerate_oriented(self.target, self.target))
        for d1 in basis:
            for d2 in basis:
                product, loops = compose_oriented(d1, d2)
                image, image_loops = compose_oriented(self.forward(d1), self.forward(d2))
                ok &= self.forward(product) == image and loops == image_loops
        return bool(ok)

    @property
    def target(self) -> str:
        return sorted_signs(self.eta)


def transport_iso(eta: str) -> TransportIso:
    sort = sorting_diagram(eta)
    order = [b - sort.diagram.k for a, b in sorted(sort.diagram.pairs)]
    inverse = [0] * len(order)
    for i, image in enumerate(order, start=1):
        inverse[image - 1] = i
    unsort = from_signs(permutation_diagram(inverse), sort.target, eta)
    return TransportIso(eta, sort, unsort)
