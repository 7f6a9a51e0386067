import gc
import weakref
from fractions import Fraction

import pytest

from src.algebra.homalg import (
    ComplexClass,
    additive_euler,
    complex_euler,
    ext1_class_dim,
    ext_count_with_middle,
    gamma,
    gamma_by_convolution,
    hall_number,
    hall_terms,
    injection_count,
    morphism_count,
    stalk_exponent,
    stalk_ext_dims,
    stalk_pairing,
)
from src.algebra.quiverrep import enumerate_reps
from src.utils.errors import BoundError, ContractError

from tests.conftest import A2, POINT


def test_additive_euler_form():
    assert additive_euler(A2, (1, 0), (0, 1)) == -1
    assert additive_euler(A2, (0, 1), (1, 0)) == 0
    assert additive_euler(A2, (1, 1), (1, 1)) == 1
    with pytest.raises(ContractError):
        additive_euler(A2, (1,), (0, 1))


def test_hall_numbers_a2(a2_small):
    S1, S2, split, P = (a2_small.resolve(n) for n in ("S1", "S2", "S1+S2", "P"))
    assert hall_number(a2_small, S1, S2, P) == 1
    assert hall_number(a2_small, S2, S1, P) == 0
    assert hall_number(a2_small, S1, S2, split) == 1
    assert hall_number(a2_small, S2, S1, split) == 1
    assert hall_number(a2_small, S1, S1, P) == 0


def test_hall_numbers_point(point_table):
    S, SS = point_table.resolve("S"), point_table.resolve("S+S")
    assert hall_number(point_table, S, S, SS) == 3
    assert injection_count(point_table, S, SS, S) == 3 * point_table.aut_order(S)


def test_ext_counts(a2_small):
    S1, S2 = a2_small.resolve("S1"), a2_small.resolve("S2")
    assert ext1_class_dim(a2_small, S1, S2) == 1
    assert ext1_class_dim(a2_small, S2, S1) == 0
    middles = a2_small.ids_with_dim((1, 1))
    assert sum(ext_count_with_middle(a2_small, S1, S2, c) for c in middles) == 2
    assert dict(hall_terms(a2_small, S1, S2)) == {c: Fraction(1) for c in middles}


def test_hall_terms_outside_caps(a2_small):
    with pytest.raises(BoundError):
        hall_terms(a2_small, a2_small.resolve("P"), a2_small.resolve("S1"))


def test_gamma_point(point_table, point_table_q3):
    S = point_table.resolve("S")
    assert morphism_count(point_table, S, S, 0, 0) == 1
    assert gamma(point_table, S, S, 0, 0) == 1
    assert gamma(point_table, S, S, S, S) == 1
    S3 = point_table_q3.resolve("S")
    assert morphism_count(point_table_q3, S3, S3, 0, 0) == 2
    assert gamma(point_table_q3, S3, S3, 0, 0) == Fraction(1, 2)
    assert gamma(point_table_q3, S3, S3, S3, S3) == 1


def test_gamma_matches_convolution(a2_table):
    ids = list(a2_table.ids())
    checked = 0
    for a in ids:
        for b in ids:
            for m in a2_table.ids_with_dim((0, 1)) + a2_table.ids_with_dim((0, 0)):
                for n in ids:
                    value = gamma(a2_table, a, b, m, n)
                    assert value == gamma_by_convolution(a2_table, a, b, m, n)
                    checked += bool(value)
    assert checked > 0


def test_stalk_exponents():
    assert stalk_exponent(0, 0) == 1
    assert stalk_exponent(1, 0) == 0
    assert stalk_exponent(0, 1) == -1
    assert stalk_exponent(0, 2) == 1


def test_stalk_pairing_point():
    assert stalk_pairing(POINT, 2, (1,), 0, (1,), 0).value == 2
    assert stalk_pairing(POINT, 2, (1,), 0, (1,), 1).value == Fraction(1, 2)
    # <[K_{S,1}], [U_{S,0}]> = q
    value = complex_euler(POINT, 2, ComplexClass.acyclic((1,), 1), ComplexClass.stalk((1,), 0))
    assert value.value == 2


def test_stalk_ext_dims(a2_small):
    S1, S2 = a2_small.resolve("S1"), a2_small.resolve("S2")
    assert stalk_ext_dims(a2_small, S1, 0, S2, 0) == {1: 1}
    assert stalk_ext_dims(a2_small, S1, 0, S1, 2) == {2: 1}
    assert stalk_ext_dims(a2_small, S1, 1, S1, 0) == {}


def test_complex_class_arithmetic():
    a = ComplexClass.acyclic((1, 0), 1)
    assert a.as_dict() == {0: (1, 0), 1: (1, 0)}
    assert (a - a) == ComplexClass()


def test_counts_are_memoized_on_their_table():
    table = enumerate_reps(POINT, 2, (1,))
    S = table.resolve("S")
    assert hall_number(table, S, 0, S) == 1
    assert table.memo[("hall_number", (S, 0, S))] == 1

    released = weakref.ref(table)
    del table
    gc.collect()
    assert released() is None
