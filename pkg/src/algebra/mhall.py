"""
The modified Ringel-Hall algebra MH(A) and its twisted form MH_tw(A).

Both algebras share the basis of normal words K_{alpha_r,r} ... K_{alpha_l,l+1}
U_{A_r,r} ... U_{A_l,l}; in MH the word is read as a diamond product, in
MH_tw as a star product, with x * y = <|x|, |y|> x <> y for homogeneous x, y.
Products are computed by rewriting with the defining relations of each
presentation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from src.algebra.homalg import (
    ComplexClass,
    complex_euler,
    dim_add,
    dim_neg,
    dim_sub,
    is_zero_vector,
    sum_classes,
)
from src.algebra.quiverrep import DimVector, IsoClassTable
from src.algebra.rewriting import (
    STALK,
    TORUS,
    Expansion,
    Factor,
    LinearCombination,
    RelationDictionary,
    RewritingEngine,
    Word,
    stalk_factor,
    torus_factor,
)
from src.utils.errors import ConsistencyError, ContractError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TorusElement:
    """Group element of K_0 of acyclic complexes: degree -> exponent vector"""

    exponents: Tuple[Tuple[int, DimVector], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, Sequence[int]]) -> "TorusElement":
        items = [(int(d), tuple(int(x) for x in v)) for d, v in mapping.items()]
        return cls(tuple(sorted(((d, v) for d, v in items if not is_zero_vector(v)), reverse=True)))

    def as_dict(self) -> Dict[int, DimVector]:
        return dict(self.exponents)

    def __add__(self, other: "TorusElement") -> "TorusElement":
        merged = self.as_dict()
        for degree, vector in other.exponents:
            merged[degree] = dim_add(merged[degree], vector) if degree in merged else vector
        return TorusElement.from_mapping(merged)

    def __neg__(self) -> "TorusElement":
        return TorusElement(tuple((d, dim_neg(v)) for d, v in self.exponents))

    def __sub__(self, other: "TorusElement") -> "TorusElement":
        return self + (-other)

    def is_unit(self) -> bool:
        return not self.exponents

    def factors(self) -> Word:
        return tuple(torus_factor(v, d) for d, v in self.exponents)


@dataclass(frozen=True)
class NormalWord:
    """Basis word: torus block then stalk block, each in strictly descending degree"""

    torus: Tuple[Tuple[int, DimVector], ...] = ()
    stalks: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_parts(
        cls,
        torus: Optional[Mapping[int, Sequence[int]]] = None,
        stalks: Optional[Mapping[int, int]] = None,
        zero_id: int = 0,
    ) -> "NormalWord":
        torus_part = TorusElement.from_mapping(torus or {}).exponents
        stalk_part = tuple(sorted(((int(d), int(c)) for d, c in (stalks or {}).items() if c != zero_id), reverse=True))
        return cls(torus_part, stalk_part)

    @classmethod
    def from_factors(cls, factors: Iterable[Factor]) -> "NormalWord":
        torus, stalks = [], []
        for f in factors:
            if f.kind == TORUS:
                torus.append((f.degree, f.label))
            elif f.kind == STALK:
                stalks.append((f.degree, f.label))
            else:
                raise ContractError(f"factor {f!r} does not belong to the modified Hall algebra")
        word = cls(tuple(torus), tuple(stalks))
        if list(word.torus) != sorted(word.torus, reverse=True) or len({d for d, _ in torus}) != len(torus):
            raise ContractError(f"torus factors of {word} are not in strictly descending degree")
        if list(word.stalks) != sorted(word.stalks, reverse=True) or len({d for d, _ in stalks}) != len(stalks):
            raise ContractError(f"stalk factors of {word} are not in strictly descending degree")
        return word

    def factors(self) -> Word:
        return tuple(torus_factor(v, d) for d, v in self.torus) + tuple(stalk_factor(c, d) for d, c in self.stalks)

    def torus_element(self) -> TorusElement:
        return TorusElement(self.torus)

    def is_unit(self) -> bool:
        return not self.torus and not self.stalks

    def sort_key(self) -> tuple:
        return (self.stalks, self.torus)

    def __repr__(self) -> str:
        parts = [f"K[{v}]@{d}" for d, v in self.torus] + [f"U[{c}]@{d}" for d, c in self.stalks]
        return "·".join(parts) if parts else "1"


class AlgebraElement(LinearCombination):
    """Exact rational combination of NormalWords"""

    __slots__ = ()

    @classmethod
    def unit(cls) -> "AlgebraElement":
        return cls.basis(NormalWord())


def factor_class(table: IsoClassTable, factor: Factor) -> ComplexClass:
    if factor.kind == TORUS:
        return ComplexClass.acyclic(factor.label, factor.degree)
    return ComplexClass.stalk(table.dim_vector(factor.label), factor.degree)


def word_class(table: IsoClassTable, word: NormalWord) -> ComplexClass:
    return sum_classes(factor_class(table, f) for f in word.factors())


def diamond_to_star(table: IsoClassTable, factors: Sequence[Factor]) -> Fraction:
    """s with f_1 <> ... <> f_k = s * (f_1 * ... * f_k)"""
    classes = [factor_class(table, f) for f in factors]
    scalar = Fraction(1)
    for i, left in enumerate(classes):
        for right in classes[i + 1:]:
            scalar /= complex_euler(table.quiver, table.q, left, right).value
    return scalar


class ModifiedRelations(RelationDictionary):
    """Defining relations of MH(A) for the diamond product"""

    name = "mh"

    def commute(self, left: Factor, right: Factor) -> Fraction:
        if left.kind == STALK and right.kind == TORUS:
            alpha, a = right.label, self.dims(left.label)
            if left.degree == right.degree - 1:
                return self.euler(alpha, a)
            if left.degree == right.degree:
                return 1 / self.euler(a, alpha)
            return Fraction(1)
        if left.kind == TORUS and right.kind == TORUS:
            if right.degree == left.degree + 1:
                return self.euler(right.label, left.label)
            return Fraction(1)
        return Fraction(1)

    def merge(self, left: Factor, right: Factor) -> Expansion:
        if left.kind == TORUS:
            merged = torus_factor(dim_add(left.label, right.label), left.degree)
            return [(1 / self.euler(left.label, right.label), (merged,))]
        return [(count, (stalk_factor(c, left.degree),)) for c, count in self.stalk_terms(left.label, right.label)]

    def adjacent(self, lower: Factor, upper: Factor) -> Expansion:
        b, a, n = lower.label, upper.label, lower.degree
        expansion = []
        for m, cokernel, count in self.morphism_terms(b, a):
            alpha = dim_sub(self.dims(b), self.dims(m))
            expansion.append(
                (
                    count * self.euler(alpha, self.dims(m)),
                    (torus_factor(alpha, n + 1), stalk_factor(cokernel, n + 1), stalk_factor(m, n)),
                )
            )
        return expansion


class TwistedModifiedRelations(RelationDictionary):
    """Defining relations of MH_tw(A); the torus is central"""

    name = "mh_tw"

    def commute(self, left: Factor, right: Factor) -> Fraction:
        if left.kind == STALK and right.kind == STALK:
            # U_{B,n} * U_{A,m} with m > n + 1
            b, a = self.dims(left.label), self.dims(right.label)
            return self.euler(b, a) ** ((-1) ** (right.degree - left.degree))
        return Fraction(1)

    def merge(self, left: Factor, right: Factor) -> Expansion:
        if left.kind == TORUS:
            return [(Fraction(1), (torus_factor(dim_add(left.label, right.label), left.degree),))]
        twist = self.euler(self.dims(left.label), self.dims(right.label))
        return [(twist * count, (stalk_factor(c, left.degree),)) for c, count in self.stalk_terms(left.label, right.label)]

    def adjacent(self, lower: Factor, upper: Factor) -> Expansion:
        b, a, n = lower.label, upper.label, lower.degree
        twist = 1 / self.euler(self.dims(b), self.dims(a))
        expansion = []
        for m, cokernel, count in self.morphism_terms(b, a):
            alpha = dim_sub(self.dims(b), self.dims(m))
            expansion.append(
                (
                    count * twist,
                    (stalk_factor(cokernel, n + 1), stalk_factor(m, n), torus_factor(alpha, n + 1)),
                )
            )
        return expansion


class ModifiedHallAlgebra:
    """MH(A) (twisted=False) or MH_tw(A) (twisted=True) over an IsoClassTable"""

    def __init__(
        self,
        table: IsoClassTable,
        twisted: bool = False,
        strategy: str = "leftmost",
        max_steps: Optional[int] = None,
    ):
        self.table = table
        self.twisted = twisted
        relations = TwistedModifiedRelations(table) if twisted else ModifiedRelations(table)
        self.engine = RewritingEngine(relations, strategy, max_steps or table.guards.max_rewrite_steps)

    @property
    def mode(self) -> str:
        return "mh_tw" if self.twisted else "mh"

    def __repr__(self) -> str:
        return f"ModifiedHallAlgebra(mode={self.mode}, table={self.table!r})"

    def stalk(self, class_id: int, degree: int) -> AlgebraElement:
        return self.normalize([stalk_factor(class_id, degree)])

    def torus(self, alpha: Sequence[int], degree: int) -> AlgebraElement:
        return self.normalize([torus_factor(alpha, degree)])

    def normalize(self, factors: Sequence[Factor]) -> AlgebraElement:
        """Product of the factors, in normal form"""
        reduced = self.engine.normalize(tuple(factors))
        return AlgebraElement({NormalWord.from_factors(w): c for w, c in reduced.items()})

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        total: Dict[NormalWord, Fraction] = {}
        for wx, cx in x.terms.items():
            for wy, cy in y.terms.items():
                for w, c in self.normalize(wx.factors() + wy.factors()).terms.items():
                    total[w] = total.get(w, 0) + cx * cy * c
        return AlgebraElement(total)

    def same_degree_product(self, a: int, b: int, degree: int) -> AlgebraElement:
        return self.normalize([stalk_factor(a, degree), stalk_factor(b, degree)])

    def torus_multiply(self, t1: TorusElement, t2: TorusElement) -> Tuple[Fraction, TorusElement]:
        product = self.normalize(t1.factors() + t2.factors())
        ((word, scalar),) = product.terms.items()
        return scalar, word.torus_element()

    def torus_inverse(self, t: TorusElement) -> Tuple[Fraction, TorusElement]:
        """(s, -t) with t . (s * K^{-t}) = 1"""
        scalar, rest = self.torus_multiply(t, -t)
        if not rest.is_unit():
            raise ConsistencyError(f"torus element {t} times its negation is not a scalar")
        return 1 / scalar, -t

    def retwist(self, x: AlgebraElement, to_twisted: bool = True) -> AlgebraElement:
        """Rewrite a diamond-basis element in the star basis, or back"""
        terms = {}
        for word, coefficient in x.terms.items():
            scalar = diamond_to_star(self.table, word.factors())
            terms[word] = coefficient * scalar if to_twisted else coefficient / scalar
        return AlgebraElement(terms)
