from fractions import Fraction

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from src.algebra.mhall import AlgebraElement, ModifiedHallAlgebra, NormalWord, TorusElement
from src.algebra.rewriting import RewritingEngine, stalk_factor, torus_factor
from src.pipeline.verify import _stalk_dims, generator_pool
from src.utils.errors import ContractError, ResourceError


def word(torus=None, stalks=None):
    return NormalWord.from_parts(torus, stalks)


def test_same_degree_product_a2(a2_small):
    S1, S2, split, P = (a2_small.resolve(n) for n in ("S1", "S2", "S1+S2", "P"))
    star = ModifiedHallAlgebra(a2_small, twisted=True)
    assert star.multiply(star.stalk(S1, 0), star.stalk(S2, 0)) == AlgebraElement(
        {word(stalks={0: split}): Fraction(1, 2), word(stalks={0: P}): Fraction(1, 2)}
    )
    diamond = ModifiedHallAlgebra(a2_small)
    assert diamond.same_degree_product(S1, S2, 0) == AlgebraElement(
        {word(stalks={0: split}): 1, word(stalks={0: P}): 1}
    )
    assert diamond.same_degree_product(S2, S1, 3) == AlgebraElement.basis(word(stalks={3: split}))


def test_torus_relations(a2_small):
    diamond = ModifiedHallAlgebra(a2_small)
    merged = diamond.normalize([torus_factor((1, 0), 0), torus_factor((0, 1), 0)])
    assert merged == AlgebraElement.basis(word(torus={0: (1, 1)}), 2)

    star = ModifiedHallAlgebra(a2_small, twisted=True)
    merged = star.normalize([torus_factor((1, 0), 0), torus_factor((0, 1), 0)])
    assert merged == AlgebraElement.basis(word(torus={0: (1, 1)}))
    assert star.normalize([torus_factor((1, 0), 2), torus_factor((-1, 0), 2)]) == AlgebraElement.unit()


def test_torus_commutes_with_stalks_in_twisted_algebra(a2_small):
    star = ModifiedHallAlgebra(a2_small, twisted=True)
    S1 = a2_small.resolve("S1")
    for degree in (-1, 0, 1):
        left = star.normalize([stalk_factor(S1, 0), torus_factor((1, 1), degree)])
        right = star.normalize([torus_factor((1, 1), degree), stalk_factor(S1, 0)])
        assert left == right


def test_stalk_torus_swap_point(point_table):
    diamond = ModifiedHallAlgebra(point_table)
    S = point_table.resolve("S")
    target = word(torus={0: (1,)}, stalks={0: S})
    assert diamond.normalize([stalk_factor(S, 0), torus_factor((1,), 0)]) == AlgebraElement.basis(target, Fraction(1, 2))
    target = word(torus={1: (1,)}, stalks={0: S})
    assert diamond.normalize([stalk_factor(S, 0), torus_factor((1,), 1)]) == AlgebraElement.basis(target, 2)


def test_adjacent_degrees_point(point_table):
    S = point_table.resolve("S")
    diamond = ModifiedHallAlgebra(point_table)
    assert diamond.normalize([stalk_factor(S, 0), stalk_factor(S, 1)]) == AlgebraElement(
        {word(stalks={1: S, 0: S}): 1, word(torus={1: (1,)}): 1}
    )
    star = ModifiedHallAlgebra(point_table, twisted=True)
    assert star.normalize([stalk_factor(S, 0), stalk_factor(S, 1)]) == AlgebraElement(
        {word(stalks={1: S, 0: S}): Fraction(1, 2), word(torus={1: (1,)}): Fraction(1, 2)}
    )


def test_normal_word_contract():
    with pytest.raises(ContractError):
        NormalWord.from_factors([stalk_factor(1, 0), stalk_factor(2, 1)])
    with pytest.raises(ContractError):
        NormalWord.from_factors([torus_factor((1,), 0), torus_factor((1,), 0)])


def test_torus_inverse(a2_small):
    for twisted in (False, True):
        algebra = ModifiedHallAlgebra(a2_small, twisted=twisted)
        t = TorusElement.from_mapping({0: (1, 0), 1: (0, 1)})
        scalar, inverse = algebra.torus_inverse(t)
        product = algebra.normalize(t.factors() + inverse.factors()).scale(scalar)
        assert product == AlgebraElement.unit()


def test_rewrite_guard(a2_small):
    S1, S2 = a2_small.resolve("S1"), a2_small.resolve("S2")
    algebra = ModifiedHallAlgebra(a2_small, max_steps=1)
    with pytest.raises(ResourceError):
        algebra.normalize([stalk_factor(S2, 0), stalk_factor(S1, 1), torus_factor((1, 0), 2)])


def test_unknown_strategy(a2_small):
    with pytest.raises(ContractError):
        ModifiedHallAlgebra(a2_small, strategy="random")


@pytest.fixture(scope="module")
def mh_pool(a2_small):
    return generator_pool(a2_small, "mh", degree_window=1)


@settings(max_examples=40, deadline=None, derandomize=True, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(data=st.data(), twisted=st.booleans())
def test_associativity(a2_small, mh_pool, data, twisted):
    triple = data.draw(st.lists(st.sampled_from(mh_pool), min_size=3, max_size=3))
    assume(a2_small.within_caps(_stalk_dims(a2_small, triple)))
    algebra = ModifiedHallAlgebra(a2_small, twisted=twisted)
    x, y, z = (algebra.normalize([f]) for f in triple)
    assert algebra.multiply(algebra.multiply(x, y), z) == algebra.multiply(x, algebra.multiply(y, z))


@settings(max_examples=40, deadline=None, derandomize=True, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(data=st.data(), twisted=st.booleans())
def test_strategies_agree(a2_small, mh_pool, data, twisted):
    factors = data.draw(st.lists(st.sampled_from(mh_pool), min_size=2, max_size=4))
    assume(a2_small.within_caps(_stalk_dims(a2_small, factors)))
    leftmost = ModifiedHallAlgebra(a2_small, twisted=twisted, strategy="leftmost")
    rightmost = ModifiedHallAlgebra(a2_small, twisted=twisted, strategy="rightmost")
    assert leftmost.normalize(factors) == rightmost.normalize(factors)


def test_engine_strips_units(a2_small):
    engine = ModifiedHallAlgebra(a2_small).engine
    assert isinstance(engine, RewritingEngine)
    assert engine.strip_units([torus_factor((0, 0), 1), stalk_factor(0, 2)]) == ()
