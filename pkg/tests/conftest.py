import pytest

from brauer_kit.category.coeff import DiagramSum
from brauer_kit.category.diagram import e_i, identity, s_i
from brauer_kit.functor.space import general_linear, orthogonal, orthosymplectic, symplectic
from brauer_kit.utils import override


@pytest.fixture
def one2() -> DiagramSum:
    return DiagramSum.of(identity(2))


@pytest.fixture
def swap2() -> DiagramSum:
    return DiagramSum.of(s_i(2, 1))


@pytest.fixture
def tangle2() -> DiagramSum:
    return DiagramSum.of(e_i(2, 1))


@pytest.fixture
def o1():
    return orthogonal(1)


@pytest.fixture
def o3():
    return orthogonal(3)


@pytest.fixture
def sp2():
    return symplectic(2)


@pytest.fixture
def osp12():
    return orthosymplectic(1, 2)


@pytest.fixture
def gl1():
    return general_linear(1, 0)


@pytest.fixture
def large_budget():
    with override(max_entries=600000) as current:
        yield current
