"""
The derived Hall algebra DH(A) and its twisted form DH_tw(A).

Generators Z_A^{[n]} stand for the stalk complexes A[n]; a DerivedWord lists
them in strictly descending degree. The twisted algebra embeds into MH_tw(A)
through iota, and every MH_tw normal word splits uniquely as iota(DerivedWord)
times a torus element.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from src.algebra.homalg import dim_scale
from src.algebra.mhall import AlgebraElement, ModifiedHallAlgebra, NormalWord, TorusElement
from src.algebra.quiverrep import IsoClassTable
from src.algebra.rewriting import (
    DERIVED,
    Expansion,
    Factor,
    LinearCombination,
    RelationDictionary,
    RewritingEngine,
    Word,
    derived_factor,
    stalk_factor,
)
from src.utils.errors import ContractError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DerivedWord:
    """Z_{A_r}^{[r]} ... Z_{A_l}^{[l]}, degrees strictly descending"""

    stalks: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_mapping(cls, stalks: Mapping[int, int], zero_id: int = 0) -> "DerivedWord":
        return cls(tuple(sorted(((int(d), int(c)) for d, c in stalks.items() if c != zero_id), reverse=True)))

    @classmethod
    def from_factors(cls, factors: Iterable[Factor]) -> "DerivedWord":
        stalks = []
        for f in factors:
            if f.kind != DERIVED:
                raise ContractError(f"factor {f!r} does not belong to the derived Hall algebra")
            stalks.append((f.degree, f.label))
        degrees = [d for d, _ in stalks]
        if degrees != sorted(set(degrees), reverse=True):
            raise ContractError(f"derived factors {stalks} are not in strictly descending degree")
        return cls(tuple(stalks))

    def factors(self) -> Word:
        return tuple(derived_factor(c, d) for d, c in self.stalks)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.stalks)

    def is_unit(self) -> bool:
        return not self.stalks

    def sort_key(self) -> tuple:
        return self.stalks

    def __repr__(self) -> str:
        return "·".join(f"Z[{c}]@{d}" for d, c in self.stalks) if self.stalks else "1"


class DHElement(LinearCombination):
    """Exact rational combination of DerivedWords"""

    __slots__ = ()

    @classmethod
    def unit(cls) -> "DHElement":
        return cls.basis(DerivedWord())


class DerivedRelations(RelationDictionary):
    """Defining relations of DH(A)"""

    name = "dh"

    def commute(self, left: Factor, right: Factor) -> Fraction:
        # Z_B^{[n]} Z_A^{[m]} with m > n + 1
        b, a = self.dims(left.label), self.dims(right.label)
        return self.euler(a, b) ** ((-1) ** (right.degree - left.degree))

    def merge(self, left: Factor, right: Factor) -> Expansion:
        return [(count, (derived_factor(c, left.degree),)) for c, count in self.stalk_terms(left.label, right.label)]

    def adjacent(self, lower: Factor, upper: Factor) -> Expansion:
        b, a, n = lower.label, upper.label, lower.degree
        return [
            (count / self.euler(self.dims(cokernel), self.dims(m)), (derived_factor(cokernel, n + 1), derived_factor(m, n)))
            for m, cokernel, count in self.morphism_terms(b, a)
        ]


class TwistedDerivedRelations(RelationDictionary):
    """Defining relations of DH_tw(A)"""

    name = "dh_tw"

    def commute(self, left: Factor, right: Factor) -> Fraction:
        b, a = self.dims(left.label), self.dims(right.label)
        return self.euler(b, a) ** ((-1) ** (right.degree - left.degree))

    def merge(self, left: Factor, right: Factor) -> Expansion:
        twist = self.euler(self.dims(left.label), self.dims(right.label))
        return [(twist * count, (derived_factor(c, left.degree),)) for c, count in self.stalk_terms(left.label, right.label)]

    def adjacent(self, lower: Factor, upper: Factor) -> Expansion:
        b, a, n = lower.label, upper.label, lower.degree
        twist = 1 / self.euler(self.dims(b), self.dims(a))
        return [
            (count * twist, (derived_factor(cokernel, n + 1), derived_factor(m, n)))
            for m, cokernel, count in self.morphism_terms(b, a)
        ]


class DerivedHallAlgebra:
    """DH(A) (twisted=False) or DH_tw(A) (twisted=True) over an IsoClassTable"""

    def __init__(
        self,
        table: IsoClassTable,
        twisted: bool = False,
        strategy: str = "leftmost",
        max_steps: Optional[int] = None,
    ):
        self.table = table
        self.twisted = twisted
        relations = TwistedDerivedRelations(table) if twisted else DerivedRelations(table)
        self.engine = RewritingEngine(relations, strategy, max_steps or table.guards.max_rewrite_steps)

    @property
    def mode(self) -> str:
        return "dh_tw" if self.twisted else "dh"

    def __repr__(self) -> str:
        return f"DerivedHallAlgebra(mode={self.mode}, table={self.table!r})"

    def generator(self, class_id: int, degree: int) -> DHElement:
        return self.normalize([derived_factor(class_id, degree)])

    def normalize(self, factors: Sequence[Factor]) -> DHElement:
        reduced = self.engine.normalize(tuple(factors))
        return DHElement({DerivedWord.from_factors(w): c for w, c in reduced.items()})

    def multiply(self, x: DHElement, y: DHElement) -> DHElement:
        total: Dict[DerivedWord, Fraction] = {}
        for wx, cx in x.terms.items():
            for wy, cy in y.terms.items():
                for w, c in self.normalize(wx.factors() + wy.factors()).terms.items():
                    total[w] = total.get(w, 0) + cx * cy * c
        return DHElement(total)


def dh_multiply(table: IsoClassTable, x: DHElement, y: DHElement, twisted: bool = True) -> DHElement:
    return DerivedHallAlgebra(table, twisted=twisted).multiply(x, y)


def iota_torus(table: IsoClassTable, class_id: int, degree: int) -> TorusElement:
    """Torus part of iota(Z_A^{[degree]})"""
    alpha = table.dim_vector(class_id)
    exponents: Dict[int, Tuple[int, ...]] = {}
    for i in range(1, abs(degree) + 1):
        position = degree - i + 1 if degree > 0 else i + degree
        exponents[position] = dim_scale((-1) ** i, alpha)
    return TorusElement.from_mapping(exponents)


def _twisted_algebra(table: IsoClassTable, algebra: Optional[ModifiedHallAlgebra]) -> ModifiedHallAlgebra:
    if algebra is None:
        return ModifiedHallAlgebra(table, twisted=True)
    if not algebra.twisted:
        raise ContractError("iota takes values in the twisted modified Hall algebra")
    return algebra


def iota_word(table: IsoClassTable, word: DerivedWord) -> Word:
    """Raw MH_tw factors of iota applied to a derived word"""
    factors: Word = ()
    for degree, class_id in word.stalks:
        factors += iota_torus(table, class_id, degree).factors() + (stalk_factor(class_id, degree),)
    return factors


def iota(table: IsoClassTable, x: DHElement, algebra: Optional[ModifiedHallAlgebra] = None) -> AlgebraElement:
    """The embedding DH_tw(A) -> MH_tw(A), extended linearly"""
    algebra = _twisted_algebra(table, algebra)
    total = AlgebraElement()
    for word, coefficient in x.terms.items():
        total = total + algebra.normalize(iota_word(table, word)).scale(coefficient)
    return total


def tensor_decompose(table: IsoClassTable, word: NormalWord) -> Tuple[DerivedWord, TorusElement]:
    """(D, T) with iota(D) * K_T = word in MH_tw"""
    derived = DerivedWord(word.stalks)
    correction = TorusElement()
    for degree, class_id in word.stalks:
        correction = correction + iota_torus(table, class_id, degree)
    return derived, word.torus_element() - correction


def tensor_compose(
    table: IsoClassTable,
    derived: DerivedWord,
    torus: TorusElement,
    algebra: Optional[ModifiedHallAlgebra] = None,
) -> AlgebraElement:
    algebra = _twisted_algebra(table, algebra)
    return algebra.normalize(iota_word(table, derived) + torus.factors())
