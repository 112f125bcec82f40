"""
# Unabhängiges Orakel für Hom_G

Hom_G(V^η, V^ζ) wird direkt als Lösungsraum linearer Gleichungen berechnet,
ohne Diagramme:

- X_ζ M = M X_η für jeden homogenen Erzeuger X der Lie-(Super-)Algebra,
- zusätzlich R_ζ M = M R_η für die Spiegelung R = diag(-1, 1, ..., 1)
  auf V₀ bei O und OSp (Komponentengruppe),
- M ist gerade (nur Einträge gleicher Parität).

Wirkung auf Tensoren:
    x·(v_1⊗…⊗v_r) = Σ_k (-1)^{|x|([v_1]+…+[v_{k-1}])} v_1⊗…⊗x v_k⊗…⊗v_r
    x·b*_j = -Σ_i (-1)^{|x|[j]} x_ji b*_i
"""

from fractions import Fraction

import loguru

from brauer_kit.functor.operator import TensorOperator, from_vector
from brauer_kit.functor.space import KIND_GL, Entries, GroupSpec, SuperSpace
from brauer_kit.linalg import Vector, nullspace
from brauer_kit.utils import check_budget, digits_of, flat_index

logger = loguru.logger

Generator = tuple[Entries, int]


def lie_generators(group: GroupSpec) -> list[Generator]:
    """Homogene Basis der Lie-(Super-)Algebra als (Matrix, Parität)."""
    space = group.space
    dim = space.dim
    parities = space.parities
    if group.kind == KIND_GL:
        return [({(a, b): Fraction(1)}, (parities[a] + parities[b]) % 2) for a in range(dim) for b in range(dim)]

    gram = space.gram
    result = []
    for parity in (0, 1):
        unknowns = [(a, b) for a in range(dim) for b in range(dim) if (parities[a] + parities[b]) % 2 == parity]
        if not unknowns:
            continue
        position = {key: u for u, key in enumerate(unknowns)}
        rows: list[Vector] = []
        # (X^T G)_ij + (-1)^{|X|[i]} (G X)_ij = 0
        for i in range(dim):
            for j in range(dim):
                row: Vector = {}
                for k in range(dim):
                    g = gram.get((k, j))
                    if g and (k, i) in position:
                        u = position[(k, i)]
                        row[u] = row.get(u, Fraction(0)) + g
                    g = gram.get((i, k))
                    if g and (k, j) in position:
                        u = position[(k, j)]
                        sign = -1 if parity and parities[i] else 1
                        row[u] = row.get(u, Fraction(0)) + sign * g
                if any(row.values()):
                    rows.append(row)
        for vector in nullspace(rows, len(unknowns)):
            result.append(({unknowns[u]: v for u, v in vector.items()}, parity))
    return result


def act_on_word(matrix: Entries, parity: int, word: str, space: SuperSpace) -> Entries:
    """Matrix der Wirkung eines homogenen Erzeugers auf V^η."""
    dim = space.dim
    length = len(word)
    by_col: dict[int, list[tuple[int, Fraction]]] = {}
    by_row: dict[int, list[tuple[int, Fraction]]] = {}
    for (a, b), v in matrix.items():
        by_col.setdefault(b, []).append((a, v))
        by_row.setdefault(a, []).append((b, v))

    entries: Entries = {}
    for col in range(dim**length):
        digits = digits_of(col, dim, length)
        passed = 0
        for k, d in enumerate(digits):
            koszul = -1 if parity and passed % 2 else 1
            if word[k] == "+":
                images = [(a, v) for a, v in by_col.get(d, ())]
            else:
                flip = -1 if parity and space.parities[d] else 1
                images = [(i, -flip * v) for i, v in by_row.get(d, ())]
            for new, v in images:
                out = digits[:k] + (new,) + digits[k + 1 :]
                key = (flat_index(out, dim), col)
                entries[key] = entries.get(key, Fraction(0)) + koszul * v
            passed += space.parities[d]
    return entries


def diagonal_on_word(diagonal: dict[int, Fraction], word: str, space: SuperSpace) -> Entries:
    dim = space.dim
    entries: Entries = {}
    for index in range(dim ** len(word)):
        value = Fraction(1)
        for d in digits_of(index, dim, len(word)):
            value *= diagonal[d]
        entries[(index, index)] = value
    return entries


def equivariant_hom(group: GroupSpec, source: str, target: str) -> list[TensorOperator]:
    """Basis von Hom_G(V^source, V^target) als Tensoroperatoren."""
    space = group.space
    if not group.oriented and set(source + target) - {"+"}:
        raise ValueError(f"{group} kennt nur Wörter aus V. Aktuell: {source!r} -> {target!r}")
    dim = space.dim
    rows_n, cols_n = dim ** len(target), dim ** len(source)
    check_budget(rows_n * cols_n, f"Orakel für {group} {source or '∅'} -> {target or '∅'}")
    logger.info(f"Berechne Hom_{group}({source or '∅'}, {target or '∅'})")

    def parity(index: int, length: int) -> int:
        return space.parity_of(digits_of(index, dim, length))

    col_parity = [parity(c, len(source)) for c in range(cols_n)]
    row_parity = [parity(r, len(target)) for r in range(rows_n)]
    unknowns = [(r, c) for r in range(rows_n) for c in range(cols_n) if row_parity[r] == col_parity[c]]
    position = {key: u for u, key in enumerate(unknowns)}

    actions: list[tuple[Entries, Entries]] = []
    for matrix, p in lie_generators(group):
        actions.append((act_on_word(matrix, p, target, space), act_on_word(matrix, p, source, space)))
    if group.has_reflection:
        reflection = space.reflection()
        actions.append(
            (diagonal_on_word(reflection, target, space), diagonal_on_word(reflection, source, space))
        )

    equations: list[Vector] = []
    for on_target, on_source in actions:
        rows_t: dict[int, list[tuple[int, Fraction]]] = {}
        for (i, j), v in on_target.items():
            rows_t.setdefault(i, []).append((j, v))
        cols_s: dict[int, list[tuple[int, Fraction]]] = {}
        for (i, j), v in on_source.items():
            cols_s.setdefault(j, []).append((i, v))
        # (A_t M - M A_s)_{rc} = 0
        for r in range(rows_n):
            for c in range(cols_n):
                row: Vector = {}
                for j, v in rows_t.get(r, ()):
                    u = position.get((j, c))
                    if u is not None:
                        row[u] = row.get(u, Fraction(0)) + v
                for i, v in cols_s.get(c, ()):
                    u = position.get((r, i))
                    if u is not None:
                        row[u] = row.get(u, Fraction(0)) - v
                row = {u: v for u, v in row.items() if v}
                if row:
                    equations.append(row)

    solutions = nullspace(equations, len(unknowns)) if unknowns else []
    basis = []
    for vector in solutions:
        flat = {unknowns[u][0] * cols_n + unknowns[u][1]: v for u, v in vector.items()}
        basis.append(from_vector(space, source, target, flat))
    logger.debug(f"Hom_{group}({source or '∅'}, {target or '∅'}) hat Dimension {len(basis)}")
    return basis


def hom_dimension(group: GroupSpec, source: str, target: str) -> int:
    return len(equivariant_hom(group, source, target))


def is_equivariant(op: TensorOperator, group: GroupSpec) -> bool:
    """Vertauscht `op` mit allen Erzeugern (und der Spiegelung, falls vorhanden)?"""
    space = group.space
    checks = [
        (
            TensorOperator(space, op.target, op.target, act_on_word(m, p, op.target, space)),
            TensorOperator(space, op.source, op.source, act_on_word(m, p, op.source, space)),
        )
        for m, p in lie_generators(group)
    ]
    if group.has_reflection:
        reflection = space.reflection()
        checks.append(
            (
                TensorOperator(space, op.target, op.target, diagonal_on_word(reflection, op.target, space)),
                TensorOperator(space, op.source, op.source, diagonal_on_word(reflection, op.source, space)),
            )
        )
    return all(on_target @ op == op @ on_source for on_target, on_source in checks)
