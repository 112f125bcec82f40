"""
# Kernelerzeuger und Σ-Identitäten

Alle Elemente sind Diagrammsummen in B_r^r über QQ[δ].

Bausteine:
- `symmetrizer(r, ε)` = Σ_ε(r) = Σ_σ (-ε)^{|σ|} σ (aus `coeff`),
- `E_p(m, p)`: Σ_{+1}(m+1) mit m+1-p nach rechts gebogenen Strängen,
- `Phi(n)` = Σ_k a_k Σ E(k) Σ mit Σ = Σ_{-1}(n+1),
- `D_pq(n, p, q)`: Σ_{-1}(2n+1) mit gebogenen Strängen und p-q Kappen.

Gebogene Kästen werden als Umverdrahtung der Knoten jedes Summanden
berechnet (`wire_box`), nicht über Kompositionen mit A und U.
"""

from fractions import Fraction

import loguru
from sympy import Poly, QQ, binomial, factorial

from brauer_kit.category.coeff import (
    DELTA,
    DiagramSum,
    compose_sums,
    identity_sum,
    linear_combination,
    map_diagrams,
    partial_close,
    rotate_sum,
    symmetrizer,
    tensor_sums,
)
from brauer_kit.category.diagram import (
    A_q,
    BrauerDiagram,
    cup,
    e_ab,
    e_i,
    enumerate_diagrams,
    identity,
    lower_diagram,
    s_i,
    tensor,
    tensor_all,
    through_strings,
)

logger = loguru.logger


def _fact(n: int) -> int:
    return int(factorial(n))


# Umverdrahtung


def _wire(d: BrauerDiagram, k: int, ell: int, ends: dict[int, int], caps: dict[int, int]) -> BrauerDiagram:
    partner = d.partner_map()
    seen: set[int] = set()
    pairs = []
    for node, label in ends.items():
        if node in seen:
            continue
        seen.add(node)
        other = partner[node]
        visited = {node}
        while other in caps:
            if other in visited:
                raise ValueError(f"Die Verdrahtung schließt eine Schleife in {d}")
            visited.add(other)
            other = partner[caps[other]]
        seen.add(other)
        pairs.append((label, ends[other]))
    return BrauerDiagram(k, ell, tuple(pairs))


def wire_box(
    box: DiagramSum,
    k: int,
    ell: int,
    bottom_ends: dict[int, int],
    top_ends: dict[int, int],
    top_caps: list[tuple[int, int]] | tuple = (),
) -> DiagramSum:
    """
    Verdrahtet einen Kasten x ∈ B_N^N neu zu einem Element von B_k^l.

    Eigenschaften
    -------------
    - bottom_ends : dict
        Kastenknoten unten (1..N) -> äußerer Knoten (1..k unten, k+1..k+l oben).
    - top_ends : dict
        Kastenknoten oben (1..N) -> äußerer Knoten.
    - top_caps : Liste von Paaren
        Kastenknoten oben, die durch eine Kappe verbunden werden.
    """
    n = box.valency.k
    if box.valency.ell != n:
        raise ValueError(f"wire_box erwartet einen Kasten in B_N^N. Aktuell: {tuple(box.valency)}")
    ends = {j: label for j, label in bottom_ends.items()}
    ends.update({n + j: label for j, label in top_ends.items()})
    caps: dict[int, int] = {}
    for a, b in top_caps:
        caps[n + a] = n + b
        caps[n + b] = n + a
    covered = sorted(list(ends) + list(caps))
    if covered != list(range(1, 2 * n + 1)):
        raise ValueError(f"Jeder Kastenknoten braucht genau ein Ende oder eine Kappe. Aktuell: {covered}")
    if sorted(ends.values()) != list(range(1, k + ell + 1)):
        raise ValueError(f"Die äußeren Knoten müssen 1..{k + ell} genau einmal belegen")
    return map_diagrams_to(box, (k, ell), lambda d: _wire(d, k, ell, ends, caps))


def map_diagrams_to(x: DiagramSum, valency: tuple[int, int], func) -> DiagramSum:
    """Wie `map_diagrams`, aber mit fester Zielvalenz (auch für die leere Summe)."""
    if x.is_zero:
        return DiagramSum.zero(*valency)
    return map_diagrams(x, func)


# E_p


def _check_m(m: int, p: int) -> None:
    if m < 1:
        raise ValueError(f"m muss mindestens 1 sein. Aktuell: {m}")
    if not 0 <= p <= m + 1:
        raise ValueError(f"p muss in 0..{m + 1} liegen. Aktuell: p={p}")


def E_p(m: int, p: int) -> DiagramSum:
    """E_p in B_{m+1}^{m+1}: die rechten m+1-p Stränge von Σ_{+1}(m+1) werden gebogen."""
    _check_m(m, p)
    n = m + 1
    bent = n - p
    bottom_ends = {j: j for j in range(1, p + 1)}
    top_ends = {j: n + j for j in range(1, p + 1)}
    for j in range(1, bent + 1):
        bottom_ends[p + j] = n + (n + 1 - j)
        top_ends[p + j] = n + 1 - j
    return wire_box(symmetrizer(n, 1), n, n, bottom_ends, top_ends)


def nested_caps(r: int, i: int, j: int) -> DiagramSum:
    """e_i(j) = e_{i,i+1} e_{i-1,i+2} ⋯ e_{i-j+1,i+j} in B_r."""
    result = identity_sum(r)
    for t in range(j):
        result = compose_sums(result, DiagramSum.of(e_ab(r, i - t, i + 1 + t)))
    return result


def E_p_formula(m: int, p: int) -> DiagramSum:
    """
    Geschlossene Formel für E_p.

    Formel:
        E_i = Σ_{j=0}^{min(i, m+1-i)} (-1)^j c_i(j) F_i e_i(j) F_i
        c_i(j) = 1 / ((i-j)! (m+1-i-j)! (j!)²)
        F_i = Σ_{+1}(i) ⊗ Σ_{+1}(m+1-i)
    """
    _check_m(m, p)
    n, i = m + 1, p
    block = tensor_sums(symmetrizer(i, 1), symmetrizer(n - i, 1))
    items = []
    for j in range(min(i, n - i) + 1):
        c = Fraction((-1) ** j, _fact(i - j) * _fact(n - i - j) * _fact(j) ** 2)
        items.append((c, compose_sums(block, compose_sums(nested_caps(n, i, j), block))))
    return linear_combination((n, n), items)


def block_symmetrizer(m: int, p: int) -> DiagramSum:
    """F_p = Σ_{+1}(p) ⊗ Σ_{+1}(m+1-p)."""
    _check_m(m, p)
    return tensor_sums(symmetrizer(p, 1), symmetrizer(m + 1 - p, 1))


def orthogonal_generator(m: int) -> DiagramSum:
    """E_l mit l = [(m+1)/2], der Erzeuger des Kerns für O(m)."""
    return E_p(m, (m + 1) // 2)


# Φ


def phi_coefficient(n: int, k: int) -> Fraction:
    """a_k = 1 / ((2^k k!)² (n+1-2k)!)."""
    return Fraction(1, (2**k * _fact(k)) ** 2 * _fact(n + 1 - 2 * k))


def Phi(n: int) -> DiagramSum:
    """Φ(n) = Σ_k a_k Σ(n+1) E(k) Σ(n+1) mit E(k) = e_n e_{n-2} ⋯ e_{n+2-2k}."""
    if n < 1:
        raise ValueError(f"n muss mindestens 1 sein. Aktuell: {n}")
    r = n + 1
    sigma = symmetrizer(r, -1)
    items = []
    for k in range((n + 1) // 2 + 1):
        caps = identity_sum(r)
        for j in range(1, k + 1):
            caps = compose_sums(caps, DiagramSum.of(e_i(r, n + 2 - 2 * j)))
        items.append((phi_coefficient(n, k), compose_sums(sigma, compose_sums(caps, sigma))))
    logger.debug(f"Φ({n}) aus {len(items)} Summanden aufgebaut")
    return linear_combination((r, r), items)


def phi_trace_sums(n: int) -> tuple[Fraction, int]:
    """
    Die beiden Ausdrücke für tr(F(Φ)/(n+1)!) auf Sp(2n); beide müssen 0 sein.

    Formel:
        n!/(n-1)! Σ_k a_k (-1)^k 2^{2k} k! (2n-2k)! / (n-k)!
        Σ_k (-1)^k C(n, k) C(2n-2k, n-1)
    """
    if n < 1:
        raise ValueError(f"n muss mindestens 1 sein. Aktuell: {n}")
    first = Fraction(0)
    second = 0
    for k in range((n + 1) // 2 + 1):
        first += (
            phi_coefficient(n, k) * (-1) ** k * 2 ** (2 * k) * Fraction(_fact(k) * _fact(2 * n - 2 * k), _fact(n - k))
        )
        second += (-1) ** k * int(binomial(n, k)) * int(binomial(2 * n - 2 * k, n - 1))
    first *= Fraction(_fact(n), _fact(n - 1))
    return first, second


# D(p, q)


def D_pq(n: int, p: int, q: int) -> DiagramSum:
    """
    D(p, q) in B_k^k mit k = 2n+1-p+q, gebaut auf Σ_{-1}(2n+1).

    Oben: a = 2n+1-2p+q gerade Stränge, dann p-q geschachtelte Kappen,
    dann q nach unten gebogene Stränge. Unten: b = 2n+1-p gerade Stränge,
    die übrigen p werden nach oben gebogen.
    """
    if not 0 <= q <= p <= n:
        raise ValueError(f"Es muss 0 <= q <= p <= n gelten. Aktuell: n={n}, p={p}, q={q}")
    size = 2 * n + 1
    k = size - p + q
    a = size - 2 * p + q
    b = size - p
    caps_count = p - q
    top_ends = {j: k + j for j in range(1, a + 1)}
    top_caps = [(a + j, a + 2 * caps_count + 1 - j) for j in range(1, caps_count + 1)]
    for j in range(1, q + 1):
        top_ends[a + 2 * caps_count + j] = b + q + 1 - j
    bottom_ends = {j: j for j in range(1, b + 1)}
    for j in range(1, p + 1):
        bottom_ends[b + j] = k + (a + p + 1 - j)
    return wire_box(symmetrizer(size, -1), k, k, bottom_ends, top_ends, top_caps)


def D_pq_star(n: int, p: int, q: int) -> DiagramSum:
    return rotate_sum(D_pq(n, p, q))


# Σ-Identitäten


def _cups(k: int) -> BrauerDiagram:
    return tensor_all([cup()] * k)


def sigma_recursion(r: int, eps: int) -> tuple[DiagramSum, DiagramSum]:
    """Σ_ε(r) = Σ_ε(r-1)⊗I - ε/(r-2)! (Σ_ε(r-1)⊗I) s_{r-1} (Σ_ε(r-1)⊗I)."""
    if r < 2:
        raise ValueError(f"Die Rekursion braucht r >= 2. Aktuell: {r}")
    prev = tensor_sums(symmetrizer(r - 1, eps), identity_sum(1))
    crossed = compose_sums(prev, compose_sums(DiagramSum.of(s_i(r, r - 1)), prev))
    rhs = linear_combination((r, r), [(1, prev), (Fraction(-eps, _fact(r - 2)), crossed)])
    return symmetrizer(r, eps), rhs


def sigma_closure(r: int, eps: int) -> tuple[DiagramSum, DiagramSum]:
    """Schließen des letzten Strangs: -ε(r-1-εδ) Σ_ε(r-1)."""
    if r < 1:
        raise ValueError(f"r muss mindestens 1 sein. Aktuell: {r}")
    lhs = partial_close(symmetrizer(r, eps), 1)
    factor = Poly(DELTA - eps * (r - 1), DELTA, domain=QQ)
    return lhs, symmetrizer(r - 1, eps).scale(factor)


def crossed_cap(r: int, i: int) -> BrauerDiagram:
    """C_i ∈ B(r+1, r-1): Kappe zwischen unten r-i und unten r+1, sonst gerade."""
    if not 0 <= i <= r - 1:
        raise ValueError(f"i muss in 0..{r - 1} liegen. Aktuell: {i}")
    straight = [j for j in range(1, r + 1) if j != r - i]
    pairs = [(r - i, r + 1)] + [(j, r + 1 + t) for t, j in enumerate(straight, start=1)]
    return BrauerDiagram(r + 1, r - 1, tuple(pairs))


def sigma_bend(r: int, eps: int) -> tuple[DiagramSum, DiagramSum]:
    """Nach unten gebogener letzter Strang: Σ_i (-ε)^i Σ_ε(r-1) ∘ C_i."""
    if r < 1:
        raise ValueError(f"r muss mindestens 1 sein. Aktuell: {r}")
    lhs = map_diagrams_to(symmetrizer(r, eps), (r + 1, r - 1), lower_diagram)
    items = [
        ((-eps) ** i, compose_sums(symmetrizer(r - 1, eps), DiagramSum.of(crossed_cap(r, i))))
        for i in range(r)
    ]
    return lhs, linear_combination((r + 1, r - 1), items)


def sigma_caps(r: int, k: int) -> tuple[DiagramSum, DiagramSum]:
    """
    Kappe oben auf Σ_{-1}(r) mit k Bechern unten.

    Formel:
        (I^{r-2}⊗A) Σ(r) (I^{r-2k}⊗U^k)
          = 4k(r+δ/2-k-1) Σ(r-2) (I^{r-2k}⊗U^{k-1})
          + (r-2-2k)!^{-1} Σ(r-2) (I^{r-2-2k}⊗U^k) (I^{r-2-2k}⊗A) Σ(r-2k)
    Der zweite Summand entfällt für r-2-2k < 0.
    """
    if r < 2 or k < 0 or 2 * k > r:
        raise ValueError(f"Es muss r >= 2 und 0 <= 2k <= r gelten. Aktuell: r={r}, k={k}")
    sigma = symmetrizer(r, -1)
    top = DiagramSum.of(tensor(identity(r - 2), A_q(1)))
    bottom = DiagramSum.of(tensor(identity(r - 2 * k), _cups(k)))
    lhs = compose_sums(top, compose_sums(sigma, bottom))

    rhs = DiagramSum.zero(r - 2 * k, r - 2)
    small = symmetrizer(r - 2, -1)
    if k >= 1:
        factor = Poly(2 * k * DELTA + 4 * k * (r - k - 1), DELTA, domain=QQ)
        lower = DiagramSum.of(tensor(identity(r - 2 * k), _cups(k - 1)))
        rhs = rhs + compose_sums(small, lower).scale(factor)
    rest = r - 2 - 2 * k
    if rest >= 0:
        middle = compose_sums(
            DiagramSum.of(tensor(identity(rest), _cups(k))), DiagramSum.of(tensor(identity(rest), A_q(1)))
        )
        term = compose_sums(small, compose_sums(middle, symmetrizer(r - 2 * k, -1)))
        rhs = rhs + term.scale(Fraction(1, _fact(rest)))
    return lhs, rhs


def embed(x: DiagramSum, r: int) -> DiagramSum:
    """x ∈ B_s^s als x ⊗ I^{r-s} in B_r^r."""
    s = x.valency.k
    if r < s:
        raise ValueError(f"Einbettung von B_{s} in B_{r} nicht möglich")
    return tensor_sums(x, identity_sum(r - s)) if r > s else x


def low_rank_diagrams(r: int, below: int) -> list[BrauerDiagram]:
    """Alle Diagramme in B_r^r mit weniger als `below` Durchgangssträngen."""
    return [d for d in enumerate_diagrams(r, r) if through_strings(d) < below]
