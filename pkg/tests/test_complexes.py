from fractions import Fraction

import numpy as np
import pytest

from src.algebra.complexes import (
    BoundedComplex,
    acyclic_decompose,
    class_of,
    complex_direct_sum,
    euler_characteristic,
    hom_complex,
    homology,
    homology_reps,
    is_acyclic,
    make_K,
    make_stalk,
    reduce_to_normal_form,
    short_exact_complex,
    validate,
    width,
)
from src.algebra.homalg import ComplexClass
from src.algebra.mhall import NormalWord
from src.algebra.quiverrep import Representation, projective_rep, simple_rep, subrep_enumerate
from src.utils.errors import ContractError

from tests.conftest import A2


@pytest.fixture(scope="module")
def projection():
    """P -> S1 in degrees 0, 1"""
    P = projective_rep(A2, 2, 1)
    S1 = simple_rep(A2, 2, 1)
    d = (np.array([[1]]), np.zeros((0, 1), dtype=np.int64))
    return BoundedComplex(A2, 2, {0: P, 1: S1}, {0: d})


def test_projection_reduces_to_torus_times_stalk(a2_small, projection):
    reduced = reduce_to_normal_form(a2_small, projection)
    assert reduced.coefficient == Fraction(1, 2)
    assert reduced.word == NormalWord.from_parts({1: (1, 0)}, {0: a2_small.resolve("S2")})
    assert homology(a2_small, projection) == {0: a2_small.resolve("S2"), 1: 0}


def test_twisted_reduction(a2_small, projection):
    reduced = reduce_to_normal_form(a2_small, projection, twisted=True)
    assert reduced.coefficient == 1
    assert reduced.word == reduce_to_normal_form(a2_small, projection).word


def test_stalk_and_K_reduce_to_generators(a2_small):
    P = a2_small.representative(a2_small.resolve("P"))
    stalk = reduce_to_normal_form(a2_small, make_stalk(P, -2))
    assert (stalk.coefficient, stalk.word) == (1, NormalWord.from_parts({}, {-2: a2_small.resolve("P")}))
    torus = reduce_to_normal_form(a2_small, make_K(P, 3))
    assert (torus.coefficient, torus.word) == (1, NormalWord.from_parts({3: (1, 1)}, {}))


def test_invalid_differential_is_rejected():
    S1, S2 = simple_rep(A2, 2, 1), simple_rep(A2, 2, 2)
    empty = np.zeros((0, 0), dtype=np.int64)
    bad_shape = BoundedComplex(A2, 2, {0: S1, 1: S1}, {0: (np.array([[1, 1]]), empty)})
    with pytest.raises(ContractError):
        validate(bad_shape)

    P = projective_rep(A2, 2, 1)
    not_a_morphism = BoundedComplex(A2, 2, {0: S1, 1: P}, {0: (np.array([[1]]), np.zeros((1, 0), dtype=np.int64))})
    with pytest.raises(ContractError):
        validate(not_a_morphism)

    identity = (empty, np.array([[1]]))
    not_a_complex = BoundedComplex(A2, 2, {0: S2, 1: S2, 2: S2}, {0: identity, 1: identity})
    with pytest.raises(ContractError):
        validate(not_a_complex)


def test_short_exact_sequences_are_acyclic(a2_table):
    C = a2_table.representative(a2_table.resolve("P+S1"))
    for split in subrep_enumerate(C):
        X = short_exact_complex(C, split, -1)
        assert validate(X)
        assert is_acyclic(X)
        factors = acyclic_decompose(X)
        reduced = reduce_to_normal_form(a2_table, X)
        assert reduced.word == NormalWord.from_parts({d: v for v, d in factors}, {})
        assert [d for _, d in factors] == sorted(d for _, d in factors)


def test_acyclic_decompose_needs_acyclic(a2_small, projection):
    with pytest.raises(ContractError):
        acyclic_decompose(projection)


def test_direct_sum_and_shift(projection):
    doubled = complex_direct_sum(projection, projection.shift(2))
    assert width(doubled) == 4
    assert validate(doubled)
    assert class_of(doubled) == class_of(projection) + class_of(projection.shift(2))
    assert class_of(projection) == ComplexClass.from_mapping({0: (1, 1), 1: (1, 0)})


def test_euler_characteristic_matches_homology(projection):
    components = {d: projection.component(d).dim_vector for d in projection.degrees()}
    assert euler_characteristic(components) == (0, 1)
    cohomology = {d: H.dim_vector for d, H in homology_reps(projection).items()}
    assert euler_characteristic(cohomology) == (0, 1)


def test_hom_complex_closed_forms(a2_small):
    P = a2_small.representative(a2_small.resolve("P"))
    S1 = a2_small.representative(a2_small.resolve("S1"))
    assert hom_complex(make_stalk(P, 0), make_stalk(S1, 0)) == 1
    assert hom_complex(make_stalk(P, 0), make_stalk(S1, 1)) == 0
    assert hom_complex(make_K(P, 1), make_stalk(S1, 0)) == 1
    assert hom_complex(make_stalk(P, 1), make_K(S1, 1)) == 1
    assert hom_complex(make_K(P, 1), make_K(S1, 1)) == 1
    assert hom_complex(make_K(P, 1), make_K(S1, 0)) == 1
    assert hom_complex(make_K(P, 1), make_K(S1, 2)) == 0


def test_zero_components_are_dropped():
    zero = Representation(A2, 2, (0, 0))
    X = BoundedComplex(A2, 2, {0: zero, 4: simple_rep(A2, 2, 2)})
    assert X.support == (4, 4)
    assert list(X.degrees()) == [4]
