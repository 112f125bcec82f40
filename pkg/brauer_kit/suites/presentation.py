"""
# Präsentation der Brauer-Kategorie und der Brauer-Algebra

Die lokalen Relationen zwischen X, A und U werden mit symbolischem δ als
Identitäten von Diagrammsummen geprüft, zusammen mit ihren Bildern unter
* (Spiegelung oben/unten) und ♯ (Spiegelung links/rechts).
Die Algebra-Relationen für s_i und e_i werden für B_r, r <= 4, geprüft.
"""

import loguru

from brauer_kit.base import Verification
from brauer_kit.category.coeff import DiagramSum, compose_sums, delta_power, identity_sum, sharp_sum, star_sum
from brauer_kit.category.diagram import cap, cross, cup, e_i, identity, s_i, tensor_all

logger = loguru.logger

Identity = tuple[str, DiagramSum, DiagramSum]


def _d(*factors) -> DiagramSum:
    return DiagramSum.of(tensor_all(list(factors)))


def _c(*layers: DiagramSum) -> DiagramSum:
    """Komposition von oben nach unten."""
    result = layers[-1]
    for layer in reversed(layers[:-1]):
        result = compose_sums(layer, result)
    return result


def category_relations() -> list[Identity]:
    i, x, a, u = identity(1), cross(), cap(), cup()
    return [
        ("XX = I⊗I", _c(_d(x), _d(x)), _d(i, i)),
        ("Zopfrelation", _c(_d(x, i), _d(i, x), _d(x, i)), _c(_d(i, x), _d(x, i), _d(i, x))),
        ("AX = A", _c(_d(a), _d(x)), _d(a)),
        ("XU = U", _c(_d(x), _d(u)), _d(u)),
        ("AU = δ", _c(_d(a), _d(u)), DiagramSum.of(identity(0), delta_power(1))),
        ("(A⊗I)(I⊗X) = (I⊗A)(X⊗I)", _c(_d(a, i), _d(i, x)), _c(_d(i, a), _d(x, i))),
        ("(X⊗I)(I⊗U) = (I⊗X)(U⊗I)", _c(_d(x, i), _d(i, u)), _c(_d(i, x), _d(u, i))),
        ("(A⊗I)(I⊗U) = I", _c(_d(a, i), _d(i, u)), _d(i)),
        ("(I⊗A)(U⊗I) = I", _c(_d(i, a), _d(u, i)), _d(i)),
    ]


def algebra_relations(r: int) -> list[Identity]:
    """Relationen der Erzeuger s_i, e_i von B_r."""
    s = {i: DiagramSum.of(s_i(r, i)) for i in range(1, r)}
    e = {i: DiagramSum.of(e_i(r, i)) for i in range(1, r)}
    one = identity_sum(r)
    result: list[Identity] = []
    for i in range(1, r):
        result += [
            (f"s_{i}² = 1", _c(s[i], s[i]), one),
            (f"e_{i}² = δe_{i}", _c(e[i], e[i]), e[i].scale(delta_power(1))),
            (f"e_{i}s_{i} = e_{i}", _c(e[i], s[i]), e[i]),
            (f"s_{i}e_{i} = e_{i}", _c(s[i], e[i]), e[i]),
        ]
        for j in range(i + 2, r):
            result += [
                (f"s_{i}s_{j} = s_{j}s_{i}", _c(s[i], s[j]), _c(s[j], s[i])),
                (f"e_{i}e_{j} = e_{j}e_{i}", _c(e[i], e[j]), _c(e[j], e[i])),
                (f"s_{i}e_{j} = e_{j}s_{i}", _c(s[i], e[j]), _c(e[j], s[i])),
                (f"e_{i}s_{j} = s_{j}e_{i}", _c(e[i], s[j]), _c(s[j], e[i])),
            ]
        if i + 1 < r:
            j = i + 1
            result += [
                (f"s_{i}s_{j}s_{i} = s_{j}s_{i}s_{j}", _c(s[i], s[j], s[i]), _c(s[j], s[i], s[j])),
                (f"e_{i}e_{j}e_{i} = e_{i}", _c(e[i], e[j], e[i]), e[i]),
                (f"e_{j}e_{i}e_{j} = e_{j}", _c(e[j], e[i], e[j]), e[j]),
                (f"s_{i}e_{j}e_{i} = s_{j}e_{i}", _c(s[i], e[j], e[i]), _c(s[j], e[i])),
            ]
    return result


class PresentationSuite(Verification):
    """
    PresentationSuite: Relationen der Brauer-Kategorie und ihre Bilder unter * und ♯

    Parameter
    ---------
    - max_rank : int, optional
        Größtes r, für das die Algebra-Relationen von B_r geprüft werden (Standard: 4).

    Beispiel
    -------
    ```
    p = PresentationSuite()
    >> p.run()
    >> print(p.diagram())
    ```
    """

    name = "presentation"

    def __init__(self, max_rank: int = 4):
        super().__init__()
        self.max_rank = max_rank

    def _check_with_transforms(self, claim: str, lhs: DiagramSum, rhs: DiagramSum) -> None:
        self.check(claim, lhs, rhs)
        self.check(f"*({claim})", star_sum(lhs), star_sum(rhs))
        self.check(f"♯({claim})", sharp_sum(lhs), sharp_sum(rhs))

    def run(self) -> None:
        logger.info("Prüfe die Präsentation der Brauer-Kategorie")
        for claim, lhs, rhs in category_relations():
            self._check_with_transforms(claim, lhs, rhs)
        for r in range(2, self.max_rank + 1):
            for claim, lhs, rhs in algebra_relations(r):
                self._check_with_transforms(f"B_{r}: {claim}", lhs, rhs)
        self.finish()
