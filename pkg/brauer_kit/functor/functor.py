"""
# Funktoren in Tensordarstellungen

F schickt ein Diagramm auf eine exakte Matrix zwischen Tensorwörtern.
Auf den Erzeugern:

    F(I) = id,  F(X) = P,  F(A) = Ĉ,  F(U) = Č

mit P(v⊗w) = (-1)^{[v][w]} w⊗v. Für GL(V) hängen Ĉ und Č von den
Vorzeichen ab (`+` = V, `-` = V*):

    Č^{+-}: 1 ↦ Σ b_i ⊗ b*_i          Č^{-+}: 1 ↦ Σ (-1)^{[i]} b*_i ⊗ b_i
    Ĉ_{-+}: b*_i ⊗ b_j ↦ δ_ij        Ĉ_{+-}: b_i ⊗ b*_j ↦ (-1)^{[i]} δ_ij

Berechnung:
1. Diagramm mit `from_diagram` in Scheiben zerlegen.
2. Für GL die Vorzeichen jeder Zwischenebene aus der Orientierung der
   Bögen bestimmen (ein Punkt ist `+`, wenn der Fluss dort von oben nach
   unten läuft).
3. Jeden Basisvektor der Quelle von unten nach oben durch die Scheiben schieben.

Permutationsdiagramme werden direkt als vorzeichenbehaftete Indexpermutation
ausgewertet.
"""

from fractions import Fraction
from functools import lru_cache

import loguru

from brauer_kit.category.coeff import DiagramSum, as_sum, specialize_coefficient
from brauer_kit.category.diagram import BrauerDiagram, compose, is_permutation, permutation_of
from brauer_kit.category.oriented import (
    GENERATORS,
    MINUS,
    PLUS,
    RELATIONS,
    OrientedDiagram,
    evaluate_layers,
    from_signs,
)
from brauer_kit.category.words import GEN_A, GEN_U, GEN_X, GeneratorWord, evaluate, from_diagram
from brauer_kit.functor.operator import TensorOperator, tensor_operators
from brauer_kit.functor.space import KIND_OSP, Entries, GroupSpec, SuperSpace
from brauer_kit.utils import digits_of, flat_index

logger = loguru.logger


@lru_cache(maxsize=256)
def _cap_values(group: GroupSpec, signs: str) -> Entries:
    space = group.space
    if not group.oriented:
        return space.gram
    if signs == MINUS + PLUS:
        return {(i, i): Fraction(1) for i in range(space.dim)}
    if signs == PLUS + MINUS:
        return {(i, i): Fraction(-1 if p else 1) for i, p in enumerate(space.parities)}
    raise ValueError(f"Keine Kappe mit Vorzeichen {signs!r}")


@lru_cache(maxsize=256)
def _cup_values(group: GroupSpec, signs: str) -> Entries:
    space = group.space
    if not group.oriented:
        return space.gram_inverse
    if signs == PLUS + MINUS:
        return {(i, i): Fraction(1) for i in range(space.dim)}
    if signs == MINUS + PLUS:
        return {(i, i): Fraction(-1 if p else 1) for i, p in enumerate(space.parities)}
    raise ValueError(f"Kein Becher mit Vorzeichen {signs!r}")


def _swap_sign(space: SuperSpace, i: int, j: int) -> int:
    return -1 if space.parities[i] and space.parities[j] else 1


def level_signs(word: GeneratorWord, source: str, target: str) -> list[str]:
    """Vorzeichen jeder Ebene (unterste zuerst) für die Orientierung mit Quelle/Ziel."""
    slices = list(reversed(word.slices))
    if not slices:
        if source != target:
            raise ValueError(f"Das leere Wort braucht Quelle == Ziel. Aktuell: {source!r} -> {target!r}")
        return [source]
    oriented = from_signs(evaluate(word).diagram, source, target)

    adjacency: dict[tuple[int, int], list[tuple[tuple[int, int], int]]] = {}
    for j, s in enumerate(slices):
        width = s.in_width

        def node(n: int) -> tuple[int, int]:
            return (j, n - 1) if n <= width else (j + 1, n - width - 1)

        for a, b in s.diagram().pairs:
            adjacency.setdefault(node(a), []).append((node(b), j))
            adjacency.setdefault(node(b), []).append((node(a), j))

    top = len(slices)
    widths = [word.k] + [s.out_width for s in slices]
    signs: list[list[str | None]] = [[None] * w for w in widths]

    def walk(start: tuple[int, int]) -> None:
        edge = adjacency[start][0]
        while True:
            nxt, j = edge
            # von oben betreten heißt Fluss nach unten
            signs[nxt[0]][nxt[1]] = PLUS if j == nxt[0] else MINUS
            others = [e for e in adjacency[nxt] if e[1] != j]
            if nxt == start or not others:
                return
            edge = others[0]

    for tail in sorted(oriented.tails):
        start = (0, tail - 1) if tail <= word.k else (top, tail - word.k - 1)
        signs[start[0]][start[1]] = source[start[1]] if start[0] == 0 else target[start[1]]
        walk(start)
    for level, row in enumerate(signs):
        for pos, value in enumerate(row):
            if value is None:
                walk((level, pos))

    result = ["".join(row) for row in signs]
    if result[0] != source or result[-1] != target:
        raise ValueError(f"Ebenenvorzeichen {result} passen nicht zu {source!r} -> {target!r}")
    return result


def _apply_slice(state: dict, s, lower: str, upper: str, group: GroupSpec) -> dict:
    space = group.space
    left = s.left
    result: dict[tuple[int, ...], Fraction] = {}

    def put(digits: tuple[int, ...], value: Fraction) -> None:
        total = result.get(digits, Fraction(0)) + value
        if total:
            result[digits] = total
        else:
            result.pop(digits, None)

    if s.gen == GEN_X:
        for digits, v in state.items():
            i, j = digits[left], digits[left + 1]
            put(digits[:left] + (j, i) + digits[left + 2 :], v * _swap_sign(space, i, j))
    elif s.gen == GEN_A:
        values = _cap_values(group, lower[left : left + 2])
        for digits, v in state.items():
            c = values.get((digits[left], digits[left + 1]))
            if c:
                put(digits[:left] + digits[left + 2 :], v * c)
    elif s.gen == GEN_U:
        values = _cup_values(group, upper[left : left + 2])
        for digits, v in state.items():
            for (a, b), c in values.items():
                put(digits[:left] + (a, b) + digits[left:], v * c)
    return result


def word_operator(
    word: GeneratorWord, group: GroupSpec, source: str | None = None, target: str | None = None
) -> TensorOperator:
    """F eines Wortes, Scheibe für Scheibe."""
    space = group.space
    slices = list(reversed(word.slices))
    if group.oriented:
        if source is None or target is None:
            raise ValueError("Für GL werden Quelle und Ziel als Vorzeichenfolgen benötigt")
        signs = level_signs(word, source, target)
    else:
        signs = [PLUS * word.k] + [PLUS * s.out_width for s in slices]

    dim = space.dim
    entries: Entries = {}
    for col in range(dim**word.k):
        state = {digits_of(col, dim, word.k): Fraction(1)}
        for j, s in enumerate(slices):
            state = _apply_slice(state, s, signs[j], signs[j + 1], group)
            if not state:
                break
        for digits, v in state.items():
            entries[(flat_index(digits, dim), col)] = v
    op = TensorOperator(space, signs[0], signs[-1], entries)
    if word.loops:
        op = op.scale(Fraction(group.delta) ** word.loops)
    return op


def _permutation_operator(d: BrauerDiagram, group: GroupSpec, source: str, target: str) -> TensorOperator:
    space = group.space
    perm = permutation_of(d)
    r = len(perm)
    dim = space.dim
    entries: Entries = {}
    for col in range(dim**r):
        digits = digits_of(col, dim, r)
        out = [0] * r
        for i, image in enumerate(perm):
            out[image - 1] = digits[i]
        odd = [i for i in range(r) if space.parities[digits[i]]]
        crossings = sum(1 for x in range(len(odd)) for y in range(x + 1, len(odd)) if perm[odd[x]] > perm[odd[y]])
        entries[(flat_index(tuple(out), dim), col)] = Fraction(-1 if crossings % 2 else 1)
    return TensorOperator(space, source, target, entries)


@lru_cache(maxsize=4096)
def functor_diagram(
    d: BrauerDiagram, group: GroupSpec, source: str | None = None, target: str | None = None
) -> TensorOperator:
    if group.oriented:
        if source is None or target is None:
            raise ValueError(f"{group} braucht Quelle und Ziel als Vorzeichenfolgen")
        from_signs(d, source, target)
    else:
        source, target = PLUS * d.k, PLUS * d.ell
    if is_permutation(d):
        return _permutation_operator(d, group, source, target)
    return word_operator(from_diagram(d), group, source, target)


def _accumulate(x: DiagramSum, group: GroupSpec, source: str, target: str) -> TensorOperator:
    entries: Entries = {}
    for d, c in x:
        value = specialize_coefficient(c, group.delta)
        if not value:
            continue
        image = functor_diagram(d, group, source, target) if group.oriented else functor_diagram(d, group)
        for key, v in image.entries.items():
            entries[key] = entries.get(key, Fraction(0)) + value * v
    return TensorOperator(group.space, source, target, entries)


def functor_brauer(x, group: GroupSpec) -> TensorOperator:
    """F auf einer Diagrammsumme; δ wird bei sdim V spezialisiert."""
    if group.oriented:
        raise ValueError(f"{group} wirkt auf orientierten Diagrammen, bitte functor_oriented verwenden")
    x = as_sum(x)
    k, ell = x.valency
    return _accumulate(x, group, PLUS * k, PLUS * ell)


def functor_oriented(x, group: GroupSpec, source: str | None = None, target: str | None = None) -> TensorOperator:
    """
    F auf einem orientierten Diagramm oder einer Summe in OB_η^ζ.

    Eine Summe wird als DiagramSum mit Quelle und Ziel übergeben; jedes
    Diagramm muss sich mit diesen Vorzeichen orientieren lassen.
    """
    if not group.oriented:
        raise ValueError(f"{group} ist nicht vom Typ GL")
    if isinstance(x, OrientedDiagram):
        return functor_diagram(x.diagram, group, x.source, x.target)
    if source is None or target is None:
        raise ValueError("Für eine Summe werden Quelle und Ziel benötigt")
    return _accumulate(as_sum(x), group, source, target)


def form_group(space: SuperSpace) -> GroupSpec:
    return GroupSpec(KIND_OSP, space)


def _reversal_sign(space: SuperSpace, digits: tuple[int, ...]) -> int:
    odd = sum(space.parities[d] for d in digits)
    return -1 if (odd * (odd - 1) // 2) % 2 else 1


def adjoint(op: TensorOperator) -> TensorOperator:
    """
    Form-adjungierter Operator, direkt auf den Einträgen.

    Die Biegung F(w₀) ∘ (id_s ⊗ F(A_t)) ∘ (id_s ⊗ A ⊗ id_t) ∘ (F(U_s) ⊗ id_t) ∘ F(w₀)
    ergibt eintragsweise

        A^*[u, y] = ρ(u) ρ(y) Σ_{x,z} Π_i H[u_i, x_i] · A[z, x] · Π_j G[z_j, y_j]

    mit ρ(·) = (-1)^{o(o-1)/2} für o ungerade Ziffern (Vorzeichen der
    Umkehrung). H und G haben je Spalte bzw. Zeile genau einen Eintrag,
    jeder Eintrag von A liefert also genau einen Eintrag von A^*.
    """
    if set(op.source + op.target) - {PLUS}:
        raise ValueError(f"adjoint erwartet Wörter aus V. Aktuell: {op.source!r} -> {op.target!r}")
    space = op.space
    dim = space.dim
    s, t = len(op.source), len(op.target)
    lower = {col: (row, v) for (row, col), v in space.gram_inverse.items()}
    upper = {row: (col, v) for (row, col), v in space.gram.items()}
    entries: Entries = {}
    for (row, col), value in op.entries.items():
        x, z = digits_of(col, dim, s), digits_of(row, dim, t)
        u, y = [], []
        for digit in x:
            image, c = lower[digit]
            u.append(image)
            value *= c
        for digit in z:
            image, c = upper[digit]
            y.append(image)
            value *= c
        value *= _reversal_sign(space, x) * _reversal_sign(space, z)
        key = (flat_index(tuple(u), dim), flat_index(tuple(y), dim))
        entries[key] = entries.get(key, Fraction(0)) + value
    return TensorOperator(space, op.target, op.source, entries)


def supertrace(op: TensorOperator) -> Fraction:
    return op.supertrace()


# Erzeugerbilder direkt aus den Formeln


def generator_ops(space: SuperSpace) -> dict[str, TensorOperator]:
    """P, Č, Ĉ und id für OSp(V), unabhängig von der Wortauswertung gebaut."""
    dim = space.dim
    pairs = [(i, j) for i in range(dim) for j in range(dim)]
    swap = {(flat_index((j, i), dim), flat_index((i, j), dim)): _swap_sign(space, i, j) for i, j in pairs}
    cup_entries = {(flat_index(key, dim), 0): v for key, v in space.gram_inverse.items()}
    cap_entries = {(0, flat_index(key, dim)): v for key, v in space.gram.items()}
    return {
        "P": TensorOperator(space, "++", "++", swap),
        "Č": TensorOperator(space, "", "++", cup_entries),
        "Ĉ": TensorOperator(space, "++", "", cap_entries),
        "id": TensorOperator.identity(space, PLUS),
    }


def gl_generator_ops(space: SuperSpace) -> dict[str, TensorOperator]:
    """P^{εε'}, Č^{+-}, Č^{-+}, Ĉ_{-+}, Ĉ_{+-} und die Identitäten auf V und V*."""
    dim = space.dim
    ops = {}
    for e1 in (PLUS, MINUS):
        for e2 in (PLUS, MINUS):
            entries = {
                (flat_index((j, i), dim), flat_index((i, j), dim)): _swap_sign(space, i, j)
                for i in range(dim)
                for j in range(dim)
            }
            ops[f"P{e1}{e2}"] = TensorOperator(space, e1 + e2, e2 + e1, entries)
    signed = {i: (-1 if p else 1) for i, p in enumerate(space.parities)}
    ops["Č+-"] = TensorOperator(space, "", "+-", {(flat_index((i, i), dim), 0): 1 for i in range(dim)})
    ops["Č-+"] = TensorOperator(space, "", "-+", {(flat_index((i, i), dim), 0): signed[i] for i in range(dim)})
    ops["Ĉ-+"] = TensorOperator(space, "-+", "", {(0, flat_index((i, i), dim)): 1 for i in range(dim)})
    ops["Ĉ+-"] = TensorOperator(space, "+-", "", {(0, flat_index((i, i), dim)): signed[i] for i in range(dim)})
    ops["id+"] = TensorOperator.identity(space, PLUS)
    ops["id-"] = TensorOperator.identity(space, MINUS)
    return ops


def osp_relations(space: SuperSpace) -> list[tuple[str, TensorOperator, TensorOperator]]:
    ops = generator_ops(space)
    p, cup, cap, i = ops["P"], ops["Č"], ops["Ĉ"], ops["id"]
    ii = i.tensor(i)
    scalar = TensorOperator.scalar(space, space.sdim)
    return [
        ("P² = id⊗id", p @ p, ii),
        ("Zopfrelation für P", p.tensor(i) @ i.tensor(p) @ p.tensor(i), i.tensor(p) @ p.tensor(i) @ i.tensor(p)),
        ("PČ = Č", p @ cup, cup),
        ("ĈP = Ĉ", cap @ p, cap),
        ("ĈČ = sdim V", cap @ cup, scalar),
        ("(Ĉ⊗id)(id⊗Č) = id", cap.tensor(i) @ i.tensor(cup), i),
        ("(id⊗Ĉ)(Č⊗id) = id", i.tensor(cap) @ cup.tensor(i), i),
        ("(Ĉ⊗id)(id⊗P) = (id⊗Ĉ)(P⊗id)", cap.tensor(i) @ i.tensor(p), i.tensor(cap) @ p.tensor(i)),
        ("(P⊗id)(id⊗Č) = (id⊗P)(Č⊗id)", p.tensor(i) @ i.tensor(cup), i.tensor(p) @ cup.tensor(i)),
    ]


def gl_relations(space: SuperSpace) -> list[tuple[str, TensorOperator, TensorOperator]]:
    ops = gl_generator_ops(space)
    vp, vm = ops["id+"], ops["id-"]
    p = ops["P++"]

    def t(*factors: TensorOperator) -> TensorOperator:
        return tensor_operators(factors, space)

    cap_mp, cap_pm = ops["Ĉ-+"], ops["Ĉ+-"]
    cup_pm, cup_mp = ops["Č+-"], ops["Č-+"]
    cap2_mp = cap_mp @ t(vm, cap_mp, vp)
    cap2_pm = cap_pm @ t(vp, cap_pm, vm)
    cup2_pm = t(vp, cup_pm, vm) @ cup_pm
    cup2_mp = t(vm, cup_mp, vp) @ cup_mp
    middle = t(vm, vm, p, vm, vm)

    relations = []
    for e1 in (PLUS, MINUS):
        for e2 in (PLUS, MINUS):
            ident = ops[f"id{e1}"].tensor(ops[f"id{e2}"])
            relations.append((f"P^{{{e2}{e1}}}P^{{{e1}{e2}}} = id", ops[f"P{e2}{e1}"] @ ops[f"P{e1}{e2}"], ident))
    relations += [
        ("Zopfrelation für P", t(p, vp) @ t(vp, p) @ t(p, vp), t(vp, p) @ t(p, vp) @ t(vp, p)),
        ("P^{--} über Ĉ⁽²⁾_{-+} und Č⁽²⁾^{+-}", t(cap2_mp, vm, vm) @ middle @ t(vm, vm, cup2_pm), ops["P--"]),
        ("P^{--} über Ĉ⁽²⁾_{+-} und Č⁽²⁾^{-+}", t(vm, vm, cap2_pm) @ middle @ t(cup2_mp, vm, vm), ops["P--"]),
        (
            "P^{-+} über Ĉ_{-+} und Č^{+-}",
            t(cap_mp, vp, vm) @ t(vm, p, vm) @ t(vm, vp, cup_pm),
            ops["P-+"],
        ),
        (
            "P^{+-} über Ĉ_{+-} und Č^{-+}",
            t(vm, vp, cap_pm) @ t(vm, p, vm) @ t(cup_mp, vp, vm),
            ops["P+-"],
        ),
        ("Ĉ_{+-}Č^{+-} = sdim V", cap_pm @ cup_pm, TensorOperator.scalar(space, space.sdim)),
        ("Ĉ_{-+}Č^{-+} = sdim V", cap_mp @ cup_mp, TensorOperator.scalar(space, space.sdim)),
        ("(Ĉ_{+-}⊗id)(id⊗Č^{-+}) = id_V", t(cap_pm, vp) @ t(vp, cup_mp), vp),
        ("(id⊗Ĉ_{-+})(Č^{+-}⊗id) = id_V", t(vp, cap_mp) @ t(cup_pm, vp), vp),
        ("(Ĉ_{-+}⊗id)(id⊗Č^{+-}) = id_V*", t(cap_mp, vm) @ t(vm, cup_pm), vm),
        ("(id⊗Ĉ_{+-})(Č^{-+}⊗id) = id_V*", t(vm, cap_pm) @ t(cup_mp, vm), vm),
        ("(id⊗Ĉ_{+-})(P⊗id)(id⊗Č^{+-}) = id_V", t(vp, cap_pm) @ t(p, vm) @ t(vp, cup_pm), vp),
    ]
    return relations


def oriented_generator_images(group: GroupSpec) -> dict[str, TensorOperator]:
    return {name: functor_oriented(d, group) for name, d in GENERATORS.items()}


def oriented_relations(group: GroupSpec) -> list[tuple[str, TensorOperator, TensorOperator]]:
    """Die Relationen der orientierten Präsentation unter F."""
    images = oriented_generator_images(group)
    space = group.space

    def evaluate_side(layers, signs: str) -> TensorOperator:
        return evaluate_layers(
            layers,
            signs,
            images,
            compose_fn=lambda upper, lower: upper @ lower,
            tensor_fn=lambda a, b: a.tensor(b),
            identity_fn=lambda eta: TensorOperator.identity(space, eta),
        )

    result = []
    for relation in RELATIONS:
        lhs = evaluate_side(relation.lhs, relation.signs)
        rhs = evaluate_side(relation.rhs, relation.signs).scale(Fraction(space.sdim) ** relation.loops)
        result.append((relation.name, lhs, rhs))
    return result


def check_functoriality(d1: BrauerDiagram, d2: BrauerDiagram, group: GroupSpec) -> bool:
    """F(d1 ∘ d2) == F(d1) ∘ F(d2) mit δ^loops = sdim^loops."""
    scaled = compose(d1, d2)
    lhs = functor_diagram(scaled.diagram, group).scale(Fraction(group.delta) ** scaled.loops)
    return lhs == functor_diagram(d1, group) @ functor_diagram(d2, group)
