import pytest

from brauer_kit.functor.space import general_linear, orthogonal, symplectic
from brauer_kit.invariants.fundamental import (
    brauer_dimension,
    functor_rank,
    kernel_basis,
    sft_generator,
    verify_fft,
    verify_sft,
    verify_tensor_sft,
)


@pytest.mark.parametrize(
    "group, k, ell, rank",
    [
        (orthogonal(3), 2, 2, 3),
        (orthogonal(1), 2, 2, 1),
        (orthogonal(2), 0, 2, 1),
        (symplectic(2), 0, 2, 1),
        (symplectic(2), 2, 2, 2),
    ],
    ids=str,
)
def test_fft(group, k, ell, rank):
    result = verify_fft(group, k, ell)
    assert result.rank == rank
    assert result.passed
    assert result.to_json()["pass"]


def test_fft_oriented(gl1):
    result = verify_fft(gl1, 2, 2, source="+-", target="+-")
    assert (result.source, result.target) == ("+-", "+-")
    assert result.rank == 1
    assert result.passed


def test_fft_odd_valency(o3):
    assert functor_rank(o3, 1, 2) == 0
    assert verify_fft(o3, 1, 2).passed


@pytest.mark.parametrize("r, dimension", [(1, 1), (2, 3), (3, 15), (4, 105)])
def test_brauer_dimension(r, dimension):
    assert brauer_dimension(r) == dimension


def test_kernel_basis(o1, o3):
    kernel = kernel_basis(o1, 2)
    assert len(kernel) == 2
    assert all(tuple(x.valency) == (2, 2) for x in kernel)
    assert kernel_basis(o3, 2) == []


@pytest.mark.parametrize(
    "group, kernel",
    [(orthogonal(1), 2), (orthogonal(3), 0), (symplectic(2), 1), (general_linear(1, 0), 1)],
    ids=str,
)
def test_sft(group, kernel):
    result = verify_sft(group, 2)
    assert result.kernel_dim == kernel
    assert result.ideal_dim == kernel
    assert result.contained
    assert result.passed


def test_sft_generator(sp2, osp12):
    name, generator, permutations_only = sft_generator(sp2)
    assert name == "Phi(1)"
    assert len(generator) == 3
    assert not permutations_only
    assert sft_generator(general_linear(1, 0))[2]
    with pytest.raises(ValueError):
        sft_generator(osp12)


def test_tensor_sft(o1, gl1):
    result = verify_tensor_sft(o1, 2, 2)
    assert result.generator == "e(1,0)"
    assert result.kernel_dim == 2
    assert result.passed
    assert result.to_json()["valency"] == [2, 2]
    with pytest.raises(ValueError):
        verify_tensor_sft(gl1, 2, 2)

