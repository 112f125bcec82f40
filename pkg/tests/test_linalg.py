from fractions import Fraction

from brauer_kit.linalg import contains, nullspace, rank, row_basis, span_closure, transpose


def test_rank():
    rows = [{0: Fraction(1), 1: Fraction(2)}, {0: Fraction(2), 1: Fraction(4)}, {2: Fraction(1)}]
    assert rank(rows, 3) == 2
    assert rank([], 3) == 0


def test_row_basis_is_reduced():
    rows = [{0: Fraction(2), 1: Fraction(4)}, {1: Fraction(1)}, {}]
    assert row_basis(rows, 2) == [{0: Fraction(1)}, {1: Fraction(1)}]


def test_nullspace():
    kernel = nullspace([{0: Fraction(1), 1: Fraction(-1)}], 2)
    assert len(kernel) == 1
    v = kernel[0]
    assert v[0] == v[1] != 0
    assert nullspace([{}], 2) == [{0: Fraction(1)}, {1: Fraction(1)}]


def test_transpose():
    assert transpose([{0: Fraction(1), 2: Fraction(3)}], 3) == [{0: Fraction(1)}, {}, {0: Fraction(3)}]


def test_contains():
    basis = [{0: Fraction(1), 1: Fraction(1)}]
    assert contains(basis, [{0: Fraction(-2), 1: Fraction(-2)}], 2)
    assert not contains(basis, [{0: Fraction(1)}], 2)


def test_span_closure():
    # Abschluss unter zyklischer Verschiebung der Koordinaten
    def shift(v):
        return [{(j + 1) % 3: c for j, c in v.items()}]

    assert len(span_closure([{0: Fraction(1)}], 3, shift)) == 3
    assert len(span_closure([{0: Fraction(1), 1: Fraction(1), 2: Fraction(1)}], 3, shift)) == 1
