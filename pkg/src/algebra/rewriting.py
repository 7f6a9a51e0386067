"""
Normal-form rewriting shared by the modified and the derived Hall algebras.

A word is a tuple of Factors. Torus factors (kind "K") sort before stalk
factors (kinds "U" and "Z"); within a block degrees strictly descend. The
engine repeatedly rewrites one adjacent out-of-order pair using a
RelationDictionary, which supplies the scalars of the presentation. The
dictionary is the only thing that differs between the four algebras.
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from src.algebra.homalg import euler_fraction, hall_terms, is_zero_vector, morphism_profile
from src.algebra.quiverrep import DimVector, IsoClassTable
from src.utils.errors import ContractError, ResourceError

logger = logging.getLogger(__name__)

TORUS = "K"
STALK = "U"
DERIVED = "Z"

STRATEGIES = ("leftmost", "rightmost")


@dataclass(frozen=True)
class Factor:
    kind: str
    degree: int
    label: Union[DimVector, int]

    def __repr__(self) -> str:
        return f"{self.kind}[{self.label}]@{self.degree}"


def torus_factor(alpha, degree: int) -> Factor:
    return Factor(TORUS, int(degree), tuple(int(a) for a in alpha))


def stalk_factor(class_id: int, degree: int) -> Factor:
    return Factor(STALK, int(degree), int(class_id))


def derived_factor(class_id: int, degree: int) -> Factor:
    return Factor(DERIVED, int(degree), int(class_id))


Word = Tuple[Factor, ...]
Expansion = List[Tuple[Fraction, Word]]


class LinearCombination:
    """Finitely supported map basis word -> nonzero Fraction"""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping] = None):
        self.terms: Dict = {w: Fraction(c) for w, c in (terms or {}).items() if c != 0}

    @classmethod
    def basis(cls, word, coefficient=1):
        return cls({word: Fraction(coefficient)})

    def __iter__(self) -> Iterator:
        return iter(sorted(self.terms.items(), key=lambda item: item[0].sort_key()))

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        merged = dict(self.terms)
        for w, c in other.terms.items():
            merged[w] = merged.get(w, 0) + c
        return type(self)(merged)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        return type(self)({w: c * scalar for w, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word) -> Fraction:
        return self.terms.get(word, Fraction(0))

    def leading_word(self):
        return min(self.terms, key=lambda w: w.sort_key()) if self.terms else None

    def __repr__(self) -> str:
        if not self.terms:
            return f"{type(self).__name__}(0)"
        body = " + ".join(f"{c}*{w}" for w, c in self)
        return f"{type(self).__name__}({body})"


class RelationDictionary(ABC):
    """Scalars of one presentation, evaluated against an IsoClassTable"""

    name = "relations"

    def __init__(self, table: IsoClassTable):
        self.table = table

    def is_unit(self, factor: Factor) -> bool:
        if factor.kind == TORUS:
            return is_zero_vector(factor.label)
        return factor.label == self.table.zero_id

    @staticmethod
    def rank(factor: Factor) -> int:
        return 0 if factor.kind == TORUS else 1

    def euler(self, alpha: Sequence[int], beta: Sequence[int]) -> Fraction:
        return euler_fraction(self.table.quiver, self.table.q, alpha, beta)

    def dims(self, class_id: int) -> DimVector:
        return self.table.dim_vector(class_id)

    def stalk_terms(self, a: int, b: int) -> Tuple[Tuple[int, Fraction], ...]:
        return hall_terms(self.table, a, b)

    def morphism_terms(self, b: int, a: int) -> List[Tuple[int, int, int]]:
        """(Ker, Coker, count) over g in Hom(B, A)"""
        return [(m, n, count) for (m, n), count in morphism_profile(self.table, b, a)]

    @abstractmethod
    def commute(self, left: Factor, right: Factor) -> Fraction:
        """s with left * right = s * right * left"""

    @abstractmethod
    def merge(self, left: Factor, right: Factor) -> Expansion:
        """Product of two same-kind factors of equal degree"""

    @abstractmethod
    def adjacent(self, lower: Factor, upper: Factor) -> Expansion:
        """Stalk factor of degree n times stalk factor of degree n+1"""


class RewritingEngine:
    """Reduce words to normal form, memoizing every intermediate word"""

    def __init__(self, relations: RelationDictionary, strategy: str = "leftmost", max_steps: int = 1_000_000):
        if strategy not in STRATEGIES:
            raise ContractError(f"unknown rewriting strategy {strategy!r}")
        self.relations = relations
        self.strategy = strategy
        self.max_steps = max_steps
        self._memo: Dict[Word, Dict[Word, Fraction]] = {}

    def strip_units(self, word: Sequence[Factor]) -> Word:
        return tuple(f for f in word if not self.relations.is_unit(f))

    def is_violation(self, left: Factor, right: Factor) -> bool:
        rank_left, rank_right = self.relations.rank(left), self.relations.rank(right)
        if rank_left != rank_right:
            return rank_left > rank_right
        return left.degree <= right.degree

    def find_violation(self, word: Word) -> Optional[int]:
        positions = range(len(word) - 1)
        if self.strategy == "rightmost":
            positions = reversed(positions)
        for i in positions:
            if self.is_violation(word[i], word[i + 1]):
                return i
        return None

    def rewrite(self, left: Factor, right: Factor) -> Expansion:
        relations = self.relations
        if relations.rank(left) != relations.rank(right):
            return [(relations.commute(left, right), (right, left))]
        if left.degree == right.degree:
            return relations.merge(left, right)
        if left.kind != TORUS and right.degree == left.degree + 1:
            return relations.adjacent(left, right)
        return [(relations.commute(left, right), (right, left))]

    def normalize(self, word: Sequence[Factor]) -> Dict[Word, Fraction]:
        budget = [self.max_steps]
        return dict(self._reduce(self.strip_units(word), budget))

    def _reduce(self, word: Word, budget: List[int]) -> Dict[Word, Fraction]:
        cached = self._memo.get(word)
        if cached is not None:
            return cached

        position = self.find_violation(word)
        if position is None:
            result = {word: Fraction(1)}
        else:
            budget[0] -= 1
            if budget[0] < 0:
                raise ResourceError(f"rewriting exceeded {self.max_steps} steps")
            result: Dict[Word, Fraction] = {}
            for scalar, replacement in self.rewrite(word[position], word[position + 1]):
                if not scalar:
                    continue
                rewritten = self.strip_units(word[:position] + tuple(replacement) + word[position + 2:])
                for normal, coefficient in self._reduce(rewritten, budget).items():
                    result[normal] = result.get(normal, 0) + scalar * coefficient
            result = {w: c for w, c in result.items() if c}

        self._memo[word] = result
        return result
