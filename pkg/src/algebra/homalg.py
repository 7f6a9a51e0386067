"""
Homological counting in rep(Q) over F_q.

Euler forms on K_0 of the category and of its bounded complexes, Ext^1
dimensions, Hall numbers, extension counts with a prescribed middle term and
the gamma numbers counting four-term exact sequences. Counting functions take
the IsoClassTable first and are memoized per table.
"""

from __future__ import annotations

import functools
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from src.algebra.quiverrep import (
    DimVector,
    IsoClassTable,
    Quiver,
    Representation,
    hom_basis,
    image,
    kernel,
    subrep_enumerate,
)
from src.utils.errors import BoundError, ConsistencyError, ContractError

logger = logging.getLogger(__name__)


def _per_table(function):
    """Memoize on the table itself so cached counts are released with it"""

    @functools.wraps(function)
    def wrapper(table: IsoClassTable, *args):
        key = (function.__name__, args)
        memo = table.memo
        if key not in memo:
            memo[key] = function(table, *args)
        return memo[key]

    return wrapper


def dim_add(alpha: Sequence[int], beta: Sequence[int]) -> DimVector:
    return tuple(a + b for a, b in zip(alpha, beta))


def dim_sub(alpha: Sequence[int], beta: Sequence[int]) -> DimVector:
    return tuple(a - b for a, b in zip(alpha, beta))


def dim_neg(alpha: Sequence[int]) -> DimVector:
    return tuple(-a for a in alpha)


def dim_scale(k: int, alpha: Sequence[int]) -> DimVector:
    return tuple(k * a for a in alpha)


def is_zero_vector(alpha: Sequence[int]) -> bool:
    return not any(alpha)


@dataclass(frozen=True)
class EulerValue:
    """q**exponent, exact"""

    q: int
    exponent: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.q) ** self.exponent

    def __mul__(self, other: "EulerValue") -> "EulerValue":
        return EulerValue(self.q, self.exponent + other.exponent)

    def __truediv__(self, other: "EulerValue") -> "EulerValue":
        return EulerValue(self.q, self.exponent - other.exponent)

    def __pow__(self, power: int) -> "EulerValue":
        return EulerValue(self.q, self.exponent * power)

    def __str__(self) -> str:
        value = self.value
        return f"{value.numerator}/{value.denominator}"


def additive_euler(quiver: Quiver, alpha: Sequence[int], beta: Sequence[int]) -> int:
    """sum_v a_v b_v - sum_{a: s->t} a_s b_t"""
    n = quiver.vertex_count
    if len(alpha) != n or len(beta) != n:
        raise ContractError(f"dimension vectors must have length {n}")
    value = sum(a * b for a, b in zip(alpha, beta))
    for s, t in quiver.arrows:
        value -= alpha[s - 1] * beta[t - 1]
    return value


def mult_euler(quiver: Quiver, q: int, alpha: Sequence[int], beta: Sequence[int]) -> EulerValue:
    return EulerValue(q, additive_euler(quiver, alpha, beta))


def euler_fraction(quiver: Quiver, q: int, alpha: Sequence[int], beta: Sequence[int]) -> Fraction:
    return mult_euler(quiver, q, alpha, beta).value


def ext1_dim(M: Representation, N: Representation) -> int:
    dim = hom_basis(M, N).dim - additive_euler(M.quiver, M.dim_vector, N.dim_vector)
    if dim < 0:
        raise ConsistencyError(f"negative Ext^1 dimension {dim} between {M!r} and {N!r}")
    return dim


@_per_table
def hom_dim(table: IsoClassTable, a: int, b: int) -> int:
    return hom_basis(table.representative(a), table.representative(b)).dim


@_per_table
def ext1_class_dim(table: IsoClassTable, a: int, b: int) -> int:
    return ext1_dim(table.representative(a), table.representative(b))


def _sum_dims(table: IsoClassTable, a: int, b: int) -> DimVector:
    return dim_add(table.dim_vector(a), table.dim_vector(b))


@_per_table
def hall_number(table: IsoClassTable, a: int, b: int, c: int) -> int:
    """g^C_{AB}: subobjects of C isomorphic to B with quotient isomorphic to A"""
    if _sum_dims(table, a, b) != table.dim_vector(c):
        return 0
    C = table.representative(c)
    count = 0
    for split in subrep_enumerate(C, table.dim_vector(b)):
        if table.canonical_id(split.sub) == b and table.canonical_id(split.quotient) == a:
            count += 1
    return count


def injection_count(table: IsoClassTable, b: int, c: int, a: int) -> int:
    """Injective morphisms B -> C with cokernel isomorphic to A"""
    if _sum_dims(table, a, b) != table.dim_vector(c):
        return 0
    B, C = table.representative(b), table.representative(c)
    count = 0
    for f in hom_basis(B, C).elements(table.guards.max_hom_elements):
        if kernel(B, C, f).sub.is_zero() and table.canonical_id(image(B, C, f).quotient) == a:
            count += 1
    return count


def ext_count_with_middle(table: IsoClassTable, a: int, b: int, c: int) -> int:
    """|Ext^1(A, B)_C| = g^C_{AB} |Hom(A, B)| a_A a_B / a_C"""
    numerator = (
        hall_number(table, a, b, c)
        * table.q ** hom_dim(table, a, b)
        * table.aut_order(a)
        * table.aut_order(b)
    )
    if numerator % table.aut_order(c):
        raise ConsistencyError(f"|Ext^1({a}, {b})_{c}| is not an integer")
    return numerator // table.aut_order(c)


def middle_terms(table: IsoClassTable, a: int, b: int) -> Tuple[int, ...]:
    """Classes with the dimension vector of A + B, raising when that leaves the caps"""
    dims = _sum_dims(table, a, b)
    if not table.within_caps(dims):
        raise BoundError(f"dimension vector {dims} of a middle term exceeds table caps {table.caps}")
    return table.ids_with_dim(dims)


@_per_table
def hall_terms(table: IsoClassTable, a: int, b: int) -> Tuple[Tuple[int, Fraction], ...]:
    """(C, |Ext^1(A,B)_C| / |Hom(A,B)|) for every middle term with a nonzero count"""
    hom_order = table.q ** hom_dim(table, a, b)
    terms = []
    for c in middle_terms(table, a, b):
        count = ext_count_with_middle(table, a, b, c)
        if count:
            terms.append((c, Fraction(count, hom_order)))
    return tuple(terms)


@_per_table
def morphism_profile(table: IsoClassTable, b: int, a: int) -> Tuple[Tuple[Tuple[int, int], int], ...]:
    """Count g in Hom(B, A) by (Ker g, Coker g) class pair"""
    B, A = table.representative(b), table.representative(a)
    counts: Counter = Counter()
    for g in hom_basis(B, A).elements(table.guards.max_hom_elements):
        ker = table.canonical_id(kernel(B, A, g).sub)
        coker = table.canonical_id(image(B, A, g).quotient)
        counts[(ker, coker)] += 1
    return tuple(sorted(counts.items()))


def morphism_count(table: IsoClassTable, a: int, b: int, m: int, n: int) -> int:
    """|{g in Hom(B, A) : Ker g = M, Coker g = N}|"""
    return dict(morphism_profile(table, b, a)).get((m, n), 0)


def gamma(table: IsoClassTable, a: int, b: int, m: int, n: int) -> Fraction:
    """gamma^{MN}_{AB} = |V(M, B, A, N)| / (a_A a_B)"""
    balance = dim_add(dim_sub(table.dim_vector(m), table.dim_vector(b)), dim_sub(table.dim_vector(a), table.dim_vector(n)))
    if not is_zero_vector(balance):
        return Fraction(0)
    count = morphism_count(table, a, b, m, n)
    if not count:
        return Fraction(0)
    return Fraction(count * table.aut_order(m) * table.aut_order(n), table.aut_order(a) * table.aut_order(b))


def gamma_by_convolution(table: IsoClassTable, d: int, e: int, f: int, g: int) -> Fraction:
    """gamma^{FG}_{DE} as sum_I g^E_{IF} g^D_{GI} a_F a_I a_G / (a_D a_E)"""
    image_dims = dim_sub(table.dim_vector(e), table.dim_vector(f))
    total = Fraction(0)
    for i in table.ids_with_dim(image_dims):
        product = hall_number(table, i, f, e) * hall_number(table, g, i, d)
        if product:
            total += Fraction(
                product * table.aut_order(f) * table.aut_order(i) * table.aut_order(g),
                table.aut_order(d) * table.aut_order(e),
            )
    return total


# Classes of bounded complexes


@dataclass(frozen=True)
class ComplexClass:
    """Element of K_0(C^b(A)) written in stalk coordinates: degree -> DimVector.

    An acyclic K_{alpha,m} has coordinates alpha at m-1 and at m; any bounded
    complex has its components as coordinates.
    """

    stalks: Tuple[Tuple[int, DimVector], ...] = field(default=())

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, Sequence[int]]) -> "ComplexClass":
        return cls(tuple(sorted((int(d), tuple(v)) for d, v in mapping.items() if any(v))))

    @classmethod
    def stalk(cls, alpha: Sequence[int], degree: int) -> "ComplexClass":
        return cls.from_mapping({degree: tuple(alpha)})

    @classmethod
    def acyclic(cls, alpha: Sequence[int], degree: int) -> "ComplexClass":
        return cls.stalk(alpha, degree - 1) + cls.stalk(alpha, degree)

    def as_dict(self) -> Dict[int, DimVector]:
        return dict(self.stalks)

    def __add__(self, other: "ComplexClass") -> "ComplexClass":
        merged: Dict[int, DimVector] = self.as_dict()
        for degree, vector in other.stalks:
            merged[degree] = dim_add(merged[degree], vector) if degree in merged else vector
        return ComplexClass.from_mapping(merged)

    def __neg__(self) -> "ComplexClass":
        return ComplexClass(tuple((d, dim_neg(v)) for d, v in self.stalks))

    def __sub__(self, other: "ComplexClass") -> "ComplexClass":
        return self + (-other)


def sum_classes(classes: Iterable[ComplexClass]) -> ComplexClass:
    total = ComplexClass()
    for c in classes:
        total = total + c
    return total


def stalk_exponent(m: int, n: int) -> int:
    """Exponent of <alpha, beta> in <[U_{alpha,m}], [U_{beta,n}]>"""
    if m == n:
        return 1
    if m > n:
        return 0
    return (-1) ** (n - m)


def stalk_pairing(quiver: Quiver, q: int, alpha: Sequence[int], m: int, beta: Sequence[int], n: int) -> EulerValue:
    return mult_euler(quiver, q, alpha, beta) ** stalk_exponent(m, n)


def complex_euler(quiver: Quiver, q: int, left: ComplexClass, right: ComplexClass) -> EulerValue:
    """Euler form of C^b(A), extended bilinearly from the stalk pairings"""
    result = EulerValue(q, 0)
    for m, alpha in left.stalks:
        for n, beta in right.stalks:
            result = result * stalk_pairing(quiver, q, alpha, m, beta, n)
    return result


def stalk_ext_dims(table: IsoClassTable, a: int, m: int, b: int, n: int) -> Dict[int, int]:
    """Nonzero dim Ext^p_{C^b}(U_{A,m}, U_{B,n}) keyed by p"""
    if m > n:
        return {}
    dims = {n - m: hom_dim(table, a, b), n - m + 1: ext1_class_dim(table, a, b)}
    return {p: d for p, d in dims.items() if d}
