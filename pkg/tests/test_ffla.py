import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra import ffla
from src.utils.errors import ContractError, FieldError

PRIMES = st.sampled_from([2, 3, 5])


@st.composite
def matrices(draw, max_side=4):
    q = draw(PRIMES)
    rows = draw(st.integers(1, max_side))
    cols = draw(st.integers(1, max_side))
    entries = draw(st.lists(st.integers(0, q - 1), min_size=rows * cols, max_size=rows * cols))
    return q, np.array(entries, dtype=np.int64).reshape(rows, cols)


def test_non_prime_field_is_rejected():
    with pytest.raises(FieldError):
        ffla.PrimeField(4)
    with pytest.raises(FieldError):
        ffla.field_arith(1, "add", 0, 0)


def test_field_arith():
    assert ffla.field_arith(5, "add", 3, 4) == 2
    assert ffla.field_arith(5, "mul", 3, 4) == 2
    assert ffla.field_arith(5, "inv", 3) == 2
    assert ffla.field_arith(5, "neg", 1) == 4
    with pytest.raises(FieldError):
        ffla.field_arith(5, "inv", 0)
    with pytest.raises(ContractError):
        ffla.field_arith(5, "add", 7, 1)


def test_fq_matrix_shape_contract():
    with pytest.raises(ContractError):
        ffla.FqMatrix(2, 2, (1, 0, 0))
    m = ffla.FqMatrix.from_rows([[1, 2], [0, 1]])
    assert m.to_array().tolist() == [[1, 2], [0, 1]]
    with pytest.raises(ContractError):
        m.check_field(2)


def test_rank_and_inverse():
    a = np.array([[1, 1], [0, 1]])
    assert ffla.rank(a, 2) == 2
    inv = ffla.inverse(a, 2)
    assert ffla.matmul(a, inv, 2).tolist() == [[1, 0], [0, 1]]
    with pytest.raises(FieldError):
        ffla.inverse(np.array([[1, 1], [1, 1]]), 2)
    assert ffla.rank(np.zeros((0, 3), dtype=np.int64), 2) == 0


def test_linear_solve_inconsistent_system():
    a = np.array([[1, 1], [1, 1]])
    assert ffla.linear_solve(a, np.array([0, 1]), 2) is None
    result = ffla.linear_solve(a, np.array([1, 1]), 2, verify=True)
    assert result.rank == 1
    assert result.kernel.shape == (1, 2)


@pytest.mark.parametrize("n, d, q, expected", [(4, 2, 2, 35), (3, 1, 3, 13), (2, 0, 5, 1), (2, 3, 2, 0)])
def test_subspace_count_matches_gaussian_binomial(n, d, q, expected):
    assert ffla.gaussian_binomial(n, d, q) == expected
    subspaces = list(ffla.subspace_enumerate(n, d, q))
    assert len(subspaces) == expected
    assert len({s.tobytes() for s in subspaces}) == expected


def test_gl_order():
    assert ffla.gl_order(0, 2) == 1
    assert ffla.gl_order(2, 2) == 6
    assert ffla.gl_order(2, 3) == 48


@settings(max_examples=60, deadline=None, derandomize=True)
@given(matrices())
def test_rank_nullity(data):
    q, a = data
    kernel = ffla.nullspace(a, q)
    assert ffla.rank(a, q) + kernel.shape[0] == a.shape[1]
    if kernel.size:
        assert not ffla.matmul(a, kernel.T, q).any()


@settings(max_examples=60, deadline=None, derandomize=True)
@given(matrices())
def test_solve_recovers_image_vectors(data):
    q, a = data
    x = np.arange(a.shape[1], dtype=np.int64) % q
    b = ffla.matmul(a, x.reshape(-1, 1), q).reshape(-1)
    result = ffla.linear_solve(a, b, q, verify=True)
    assert result is not None


@settings(max_examples=40, deadline=None, derandomize=True)
@given(matrices())
def test_complete_basis_spans(data):
    q, a = data
    rows = ffla.row_space(a, q)
    basis = ffla.complete_basis(rows, a.shape[1], q)
    assert basis.shape == (a.shape[1], a.shape[1])
    assert ffla.is_invertible(basis, q)
