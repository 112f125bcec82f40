"""
# Diagrammsummen über QQ[δ]

Formale Linearkombinationen von Brauer-Diagrammen einer festen Valenz.
Koeffizienten sind Polynome in δ mit rationalen Koeffizienten (sympy `Poly`
über QQ). Spezialisierung δ -> δ₀ ist immer explizit.

Formel:
    (Σ a_D D) ∘ (Σ b_E E) = Σ a_D b_E δ^{f(D,E)} (D ∘ E)
    mit f(D,E) = Anzahl der entfernten Schleifen.
"""

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Union

import loguru
from sympy import Poly, QQ, Rational, Symbol
from sympy.combinatorics import Permutation

from brauer_kit.category.diagram import (
    A_q,
    BrauerDiagram,
    ScaledDiagram,
    U_q,
    Valency,
    compose,
    enumerate_diagrams,
    identity,
    permutation_diagram,
    rotate,
    sharp,
    star,
    tensor,
)
from brauer_kit.utils import format_fraction, to_fraction

logger = loguru.logger

DELTA = Symbol("delta")

Coefficient = Poly
Scalar = Union[int, Fraction, Poly]


def coefficient(value: Scalar) -> Poly:
    if isinstance(value, Poly):
        return value
    value = to_fraction(value)
    return Poly(Rational(value.numerator, value.denominator), DELTA, domain=QQ)


def delta_power(n: int) -> Poly:
    return Poly(DELTA**n, DELTA, domain=QQ)


def specialize_coefficient(c: Scalar, delta0: Scalar) -> Fraction:
    if not isinstance(c, Poly):
        return to_fraction(c)
    delta0 = to_fraction(delta0)
    return to_fraction(c.eval(Rational(delta0.numerator, delta0.denominator)))


def format_coefficient(c: Poly) -> list[list]:
    """JSON-Form: [["num/den", potenz], ...] absteigend nach Potenz."""
    terms = []
    for (power,), value in sorted(c.terms(), key=lambda t: -t[0][0]):
        if value:
            terms.append([format_fraction(to_fraction(value)), int(power)])
    return terms


def parse_coefficient(terms: list) -> Poly:
    result = coefficient(0)
    for value, power in terms:
        result = result + coefficient(Fraction(value)) * delta_power(int(power))
    return result


class DiagramSum:
    """
    DiagramSum: Element von B_k^l(δ) als Abbildung Diagramm -> Koeffizient

    Eigenschaften
    -------------
    - valency : Valency
        Gemeinsame Valenz aller Terme.
    - terms : dict[BrauerDiagram, Poly]
        Nur von Null verschiedene Koeffizienten; die leere Abbildung ist der Nullmorphismus.

    Beispiel
    -------
    ```
    e = DiagramSum.of(e_i(2, 1))
    (e @ e) == e.scale(delta_power(1))
    ```
    """

    __slots__ = ("valency", "terms")

    def __init__(self, valency: tuple[int, int], terms: Mapping[BrauerDiagram, Scalar] | None = None):
        self.valency = Valency(*valency)
        self.terms: dict[BrauerDiagram, Poly] = {}
        for d, c in (terms or {}).items():
            if tuple(d.valency) != tuple(self.valency):
                raise ValueError(
                    f"Diagramm der Valenz {tuple(d.valency)} passt nicht zur Summe der Valenz {tuple(self.valency)}"
                )
            c = coefficient(c)
            if not c.is_zero:
                self.terms[d] = c

    @classmethod
    def of(cls, d: BrauerDiagram | ScaledDiagram, c: Scalar = 1) -> "DiagramSum":
        if isinstance(d, ScaledDiagram):
            return cls(d.diagram.valency, {d.diagram: coefficient(c) * delta_power(d.loops)})
        return cls(d.valency, {d: c})

    @classmethod
    def zero(cls, k: int, ell: int) -> "DiagramSum":
        return cls((k, ell))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def coefficient_of(self, d: BrauerDiagram) -> Poly:
        return self.terms.get(d, coefficient(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiagramSum):
            return NotImplemented
        return tuple(self.valency) == tuple(other.valency) and self.terms == other.terms

    def __hash__(self):
        return hash((tuple(self.valency), frozenset(self.terms)))

    def __add__(self, other: "DiagramSum") -> "DiagramSum":
        return add(self, other)

    def __sub__(self, other: "DiagramSum") -> "DiagramSum":
        return add(self, other.scale(-1))

    def __neg__(self) -> "DiagramSum":
        return self.scale(-1)

    def __matmul__(self, other: "DiagramSum") -> "DiagramSum":
        return compose_sums(self, other)

    def scale(self, c: Scalar) -> "DiagramSum":
        c = coefficient(c)
        return DiagramSum(self.valency, {d: v * c for d, v in self.terms.items()})

    def numeric_terms(self) -> dict[BrauerDiagram, Fraction]:
        result = {}
        for d, c in self.terms.items():
            if c.degree() > 0:
                raise ValueError(f"Koeffizient {c.as_expr()} hängt noch von δ ab; zuerst spezialisieren")
            result[d] = to_fraction(c.coeff_monomial(1))
        return result

    def to_json(self) -> dict:
        return {
            "valency": list(self.valency),
            "terms": [{"pairs": [list(p) for p in d.pairs], "coeff": format_coefficient(c)} for d, c in self],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DiagramSum":
        k, ell = data["valency"]
        terms = {}
        for term in data["terms"]:
            d = BrauerDiagram(k, ell, tuple(tuple(p) for p in term["pairs"]))
            terms[d] = parse_coefficient(term["coeff"])
        return cls((k, ell), terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f"0[{self.valency.k},{self.valency.ell}]"
        parts = [f"({c.as_expr()})*{list(d.pairs)}" for d, c in self]
        return " + ".join(parts)


def as_sum(x: "DiagramSum | BrauerDiagram | ScaledDiagram") -> DiagramSum:
    if isinstance(x, DiagramSum):
        return x
    if isinstance(x, (BrauerDiagram, ScaledDiagram)):
        return DiagramSum.of(x)
    raise TypeError(f"Erwartet DiagramSum oder BrauerDiagram. Aktuell: {type(x)}")


def add(x: DiagramSum, y: DiagramSum) -> DiagramSum:
    if tuple(x.valency) != tuple(y.valency):
        raise ValueError(f"Valenzen passen nicht: {tuple(x.valency)} und {tuple(y.valency)}")
    terms = dict(x.terms)
    for d, c in y.terms.items():
        terms[d] = terms[d] + c if d in terms else c
    return DiagramSum(x.valency, terms)


def linear_combination(valency: tuple[int, int], items: Iterable[tuple[Scalar, DiagramSum]]) -> DiagramSum:
    terms: dict[BrauerDiagram, Poly] = {}
    for c, x in items:
        c = coefficient(c)
        for d, v in x.terms.items():
            terms[d] = terms[d] + c * v if d in terms else c * v
    return DiagramSum(valency, terms)


def compose_sums(x: DiagramSum, y: DiagramSum, delta0: Scalar | None = None) -> DiagramSum:
    """x ∘ y; mit `delta0` wird jede Schleife sofort als Zahl δ₀ ausgewertet."""
    x, y = as_sum(x), as_sum(y)
    if x.valency.k != y.valency.ell:
        raise ValueError(
            f"Valenzen passen nicht: x hat Valenz {tuple(x.valency)}, y hat Valenz {tuple(y.valency)}"
        )
    valency = (y.valency.k, x.valency.ell)
    if delta0 is None:
        buckets: dict[tuple[BrauerDiagram, int], Poly] = {}
        for d1, c1 in x.terms.items():
            for d2, c2 in y.terms.items():
                scaled = compose(d1, d2)
                key = (scaled.diagram, scaled.loops)
                product = c1 * c2
                buckets[key] = buckets[key] + product if key in buckets else product
        terms: dict[BrauerDiagram, Poly] = {}
        for (d, loops), c in buckets.items():
            c = c * delta_power(loops) if loops else c
            terms[d] = terms[d] + c if d in terms else c
        return DiagramSum(valency, terms)

    delta0 = to_fraction(delta0)
    xs = {d: specialize_coefficient(c, delta0) for d, c in x.terms.items()}
    ys = {d: specialize_coefficient(c, delta0) for d, c in y.terms.items()}
    numeric: dict[BrauerDiagram, Fraction] = {}
    for d1, c1 in xs.items():
        for d2, c2 in ys.items():
            scaled = compose(d1, d2)
            value = c1 * c2 * delta0**scaled.loops
            numeric[scaled.diagram] = numeric.get(scaled.diagram, Fraction(0)) + value
    return DiagramSum(valency, numeric)


def tensor_sums(x: DiagramSum, y: DiagramSum) -> DiagramSum:
    x, y = as_sum(x), as_sum(y)
    valency = (x.valency.k + y.valency.k, x.valency.ell + y.valency.ell)
    terms: dict[BrauerDiagram, Poly] = {}
    for d1, c1 in x.terms.items():
        for d2, c2 in y.terms.items():
            d = tensor(d1, d2)
            terms[d] = terms[d] + c1 * c2 if d in terms else c1 * c2
    return DiagramSum(valency, terms)


def map_diagrams(x: DiagramSum, func) -> DiagramSum:
    terms: dict[BrauerDiagram, Poly] = {}
    valency = None
    for d, c in x.terms.items():
        image = func(d)
        valency = image.valency
        terms[image] = terms[image] + c if image in terms else c
    if valency is None:
        sample = func(_sample_diagram(x.valency))
        valency = sample.valency
    return DiagramSum(valency, terms)


def _sample_diagram(valency: Valency) -> BrauerDiagram:
    k, ell = valency
    if (k + ell) % 2:
        raise ValueError(f"Keine Diagramme der Valenz ({k}, {ell})")
    return enumerate_diagrams(k, ell)[0]


def star_sum(x: DiagramSum) -> DiagramSum:
    return map_diagrams(x, star)


def sharp_sum(x: DiagramSum) -> DiagramSum:
    return map_diagrams(x, sharp)


def rotate_sum(x: DiagramSum) -> DiagramSum:
    return map_diagrams(x, rotate)


def specialize(x: DiagramSum | Scalar, delta0: Scalar) -> DiagramSum | Fraction:
    if isinstance(x, DiagramSum):
        return DiagramSum(x.valency, {d: specialize_coefficient(c, delta0) for d, c in x.terms.items()})
    return specialize_coefficient(x, delta0)


def identity_sum(r: int) -> DiagramSum:
    return DiagramSum.of(identity(r))


def symmetrizer(r: int, eps: int) -> DiagramSum:
    """Σ_ε(r) = Σ_σ (-ε)^{|σ|} σ."""
    if r < 0:
        raise ValueError(f"r muss nicht-negativ sein. Aktuell: {r}")
    if eps not in (1, -1):
        raise ValueError(f"ε muss +1 oder -1 sein. Aktuell: {eps}")
    terms = {}
    for perm in itertools.permutations(range(r)):
        sign = 1 if r < 2 or Permutation(list(perm)).is_even else -eps
        terms[permutation_diagram([p + 1 for p in perm])] = sign
    return DiagramSum((r, r), terms)


def partial_close(x: DiagramSum, q: int) -> DiagramSum:
    """(I^{r-q} ⊗ A_q) ∘ (x ⊗ I_q) ∘ (I^{r-q} ⊗ U_q)."""
    x = as_sum(x)
    r = x.valency.k
    if x.valency.ell != r:
        raise ValueError(f"partial_close erwartet ein Element von B_r^r. Aktuell: {tuple(x.valency)}")
    if not 0 <= q <= r:
        raise ValueError(f"q muss in 0..{r} liegen. Aktuell: {q}")
    upper = DiagramSum.of(tensor(identity(r - q), A_q(q)))
    lower = DiagramSum.of(tensor(identity(r - q), U_q(q)))
    return compose_sums(upper, compose_sums(tensor_sums(x, identity_sum(q)), lower))
