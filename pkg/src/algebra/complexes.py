"""
Bounded complexes of quiver representations.

A complex stores its nonzero components by degree and a differential
d^i : X^i -> X^{i+1} for each degree, as per-vertex matrices. Reduction
writes the class [X] in the normal-form basis: one torus factor
K_{Im d^i, i+1} per differential and one stalk factor per homology group.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from src.algebra import ffla
from src.algebra.homalg import ComplexClass, euler_fraction, sum_classes
from src.algebra.mhall import NormalWord, diamond_to_star
from src.algebra.quiverrep import (
    DimVector,
    IsoClassTable,
    Morphism,
    Quiver,
    Representation,
    Subrepresentation,
    direct_sum,
    hom_basis,
    image,
    is_morphism,
    kernel,
    split_by_subspaces,
    zero_rep,
)
from src.utils.errors import ConsistencyError, ContractError

logger = logging.getLogger(__name__)


class BoundedComplex:
    """Finitely supported complex of representations over one quiver and field"""

    def __init__(
        self,
        quiver: Quiver,
        q: int,
        components: Mapping[int, Representation],
        differentials: Optional[Mapping[int, Sequence[np.ndarray]]] = None,
    ):
        self.quiver = quiver
        self.q = q
        self.components: Dict[int, Representation] = {
            int(d): rep for d, rep in sorted(components.items()) if not rep.is_zero()
        }
        for rep in self.components.values():
            if rep.quiver != quiver or rep.q != q:
                raise ContractError("complex components must share the complex's quiver and field")
        self.differentials: Dict[int, Morphism] = {}
        for degree, maps in (differentials or {}).items():
            self.differentials[int(degree)] = tuple(np.asarray(m, dtype=np.int64) % q for m in maps)

    def component(self, degree: int) -> Representation:
        return self.components.get(degree) or zero_rep(self.quiver, self.q)

    def differential(self, degree: int) -> Morphism:
        """d^degree, zero when not given"""
        source, target = self.component(degree), self.component(degree + 1)
        given = self.differentials.get(degree)
        if given is not None:
            return given
        return tuple(np.zeros((target.dim(v), source.dim(v)), dtype=np.int64) for v in self.quiver.vertices)

    @property
    def support(self) -> Optional[Tuple[int, int]]:
        if not self.components:
            return None
        degrees = list(self.components)
        return min(degrees), max(degrees)

    def degrees(self) -> range:
        support = self.support
        return range(0) if support is None else range(support[0], support[1] + 1)

    def shift(self, offset: int) -> "BoundedComplex":
        return BoundedComplex(
            self.quiver,
            self.q,
            {d + offset: rep for d, rep in self.components.items()},
            {d + offset: maps for d, maps in self.differentials.items()},
        )

    def __repr__(self) -> str:
        parts = ", ".join(f"{d}: {rep.dim_vector}" for d, rep in self.components.items())
        return f"BoundedComplex({{{parts}}})"


def validate(X: BoundedComplex) -> bool:
    """Differentials are morphisms and square to zero; raises ContractError at the first violation"""
    for degree in sorted(X.differentials):
        source, target = X.component(degree), X.component(degree + 1)
        maps = X.differentials[degree]
        if len(maps) != X.quiver.vertex_count:
            raise ContractError(f"d^{degree} needs one matrix per vertex, got {len(maps)}")
        for v in X.quiver.vertices:
            expected = (target.dim(v), source.dim(v))
            if maps[v - 1].shape != expected:
                raise ContractError(f"d^{degree} at vertex {v} has shape {maps[v - 1].shape}, expected {expected}")
        if not is_morphism(source, target, X.differential(degree)):
            raise ContractError(f"d^{degree} does not intertwine the arrow maps")
    for degree in X.degrees():
        first, second = X.differential(degree), X.differential(degree + 1)
        for v in X.quiver.vertices:
            if ffla.matmul(second[v - 1], first[v - 1], X.q).any():
                raise ContractError(f"d^{degree + 1} d^{degree} is nonzero at vertex {v}")
    return True


def make_stalk(A: Representation, degree: int) -> BoundedComplex:
    """U_{A,m}: A concentrated in degree m"""
    return BoundedComplex(A.quiver, A.q, {degree: A})


def make_K(A: Representation, degree: int) -> BoundedComplex:
    """K_{A,m}: A -> A by the identity, in degrees m-1 and m"""
    identity = tuple(np.eye(A.dim(v), dtype=np.int64) for v in A.quiver.vertices)
    return BoundedComplex(A.quiver, A.q, {degree - 1: A, degree: A}, {degree - 1: identity})


def short_exact_complex(C: Representation, split: Subrepresentation, degree: int) -> BoundedComplex:
    """0 -> sub -> C -> quotient -> 0 placed in degrees m, m+1, m+2"""
    q = C.q
    inclusion, projection = [], []
    for v in C.quiver.vertices:
        basis = split.subspaces[v - 1]
        d = basis.shape[0]
        if C.dim(v) == 0:
            inclusion.append(np.zeros((0, 0), dtype=np.int64))
            projection.append(np.zeros((0, 0), dtype=np.int64))
            continue
        full = ffla.complete_basis(basis, C.dim(v), q)
        inclusion.append(basis.T.reshape(C.dim(v), d))
        projection.append(ffla.inverse(full.T, q)[d:, :])
    return BoundedComplex(
        C.quiver,
        q,
        {degree: split.sub, degree + 1: C, degree + 2: split.quotient},
        {degree: tuple(inclusion), degree + 1: tuple(projection)},
    )


def complex_direct_sum(X: BoundedComplex, Y: BoundedComplex) -> BoundedComplex:
    degrees = sorted(set(X.components) | set(Y.components))
    components = {d: direct_sum(X.component(d), Y.component(d)) for d in degrees}
    differentials = {}
    for d in degrees:
        blocks = []
        for fx, fy in zip(X.differential(d), Y.differential(d)):
            block = np.zeros((fx.shape[0] + fy.shape[0], fx.shape[1] + fy.shape[1]), dtype=np.int64)
            block[: fx.shape[0], : fx.shape[1]] = fx
            block[fx.shape[0]:, fx.shape[1]:] = fy
            blocks.append(block)
        differentials[d] = tuple(blocks)
    return BoundedComplex(X.quiver, X.q, components, differentials)


def width(X: BoundedComplex) -> int:
    support = X.support
    return 0 if support is None else support[1] - support[0] + 1


def class_of(X: BoundedComplex) -> ComplexClass:
    return sum_classes(ComplexClass.stalk(rep.dim_vector, d) for d, rep in X.components.items())


def images_kernels(X: BoundedComplex) -> Dict[int, Tuple[Subrepresentation, Subrepresentation]]:
    """degree -> (Im d^i inside X^{i+1}, Ker d^i inside X^i)"""
    result = {}
    for degree in X.degrees():
        source, target = X.component(degree), X.component(degree + 1)
        d = X.differential(degree)
        result[degree] = (image(source, target, d), kernel(source, target, d))
    return result


def _pivot_coordinates(basis: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    """Coordinates of vectors lying in the span of a reduced echelon basis"""
    pivots = [int(np.nonzero(row)[0][0]) for row in basis]
    if not pivots:
        return np.zeros((0, 0), dtype=np.int64)
    return vectors[:, pivots]


def homology_reps(X: BoundedComplex) -> Dict[int, Representation]:
    """H^i = Ker d^i / Im d^(i-1) for every degree of the support"""
    pieces = images_kernels(X)
    result = {}
    for degree in X.degrees():
        cycles = pieces[degree][1]
        boundaries = pieces[degree - 1][0].subspaces if degree - 1 in pieces else None
        Z = cycles.sub
        if boundaries is None:
            result[degree] = Z
            continue
        coords = [
            _pivot_coordinates(cycles.subspaces[v - 1], boundaries[v - 1]) for v in X.quiver.vertices
        ]
        split = split_by_subspaces(Z, coords)
        if split is None:
            raise ConsistencyError(f"boundaries in degree {degree} are not a subrepresentation of the cycles")
        result[degree] = split.quotient
    return result


def homology(table: IsoClassTable, X: BoundedComplex) -> Dict[int, int]:
    return {degree: table.canonical_id(H) for degree, H in homology_reps(X).items()}


def is_acyclic(X: BoundedComplex) -> bool:
    return all(H.is_zero() for H in homology_reps(X).values())


@dataclass(frozen=True)
class ReducedForm:
    coefficient: Fraction
    word: NormalWord


def reduce_to_normal_form(table: IsoClassTable, X: BoundedComplex, twisted: bool = False) -> ReducedForm:
    """[X] as coefficient * (K block) (U block).

    The coefficient is prod_i <Im d^i, Ker d^i>; in the twisted algebra the
    diamond word is re-read as a star word.
    """
    validate(X)
    coefficient = Fraction(1)
    torus: Dict[int, DimVector] = {}
    for degree, (im, ker) in images_kernels(X).items():
        coefficient *= euler_fraction(table.quiver, table.q, im.sub.dim_vector, ker.sub.dim_vector)
        torus[degree + 1] = im.sub.dim_vector
    stalks = homology(table, X)
    word = NormalWord.from_parts(torus, stalks, table.zero_id)
    if twisted:
        coefficient *= diamond_to_star(table, word.factors())
    return ReducedForm(coefficient, word)


def acyclic_decompose(X: BoundedComplex) -> List[Tuple[DimVector, int]]:
    """[X] = [K_{Im d^l, l+1}] <> ... <> [K_{Im d^(r-1), r}] for acyclic X, ascending degree"""
    validate(X)
    if not is_acyclic(X):
        raise ContractError("acyclic_decompose needs an acyclic complex")
    factors = []
    for degree, (im, _) in sorted(images_kernels(X).items()):
        if not im.sub.is_zero():
            factors.append((im.sub.dim_vector, degree + 1))
    return factors


def hom_complex(X: BoundedComplex, Y: BoundedComplex) -> int:
    """Dimension of the space of chain maps X -> Y"""
    degrees = sorted(set(X.components) & set(Y.components))
    # one equation block per map X^e -> Y^(e+1)
    conditions = [e for e in sorted(X.components) if e + 1 in Y.components]
    columns = []
    for d in degrees:
        for f in hom_basis(X.component(d), Y.component(d)).basis:
            blocks = []
            for e in conditions:
                for v in X.quiver.vertices:
                    part = np.zeros((Y.component(e + 1).dim(v), X.component(e).dim(v)), dtype=np.int64)
                    if e == d:
                        part = part + ffla.matmul(Y.differential(d)[v - 1], f[v - 1], X.q)
                    if e + 1 == d:
                        part = part - ffla.matmul(f[v - 1], X.differential(e)[v - 1], X.q)
                    blocks.append(part.reshape(-1) % X.q)
            columns.append(np.concatenate(blocks) if blocks else np.zeros(0, dtype=np.int64))
    if not columns:
        return 0
    return len(columns) - ffla.rank(np.stack(columns, axis=1), X.q)


def euler_characteristic(dims: Mapping[int, Sequence[int]]) -> DimVector:
    total = None
    for degree, vector in dims.items():
        signed = tuple((-1) ** (degree % 2) * x for x in vector)
        total = signed if total is None else tuple(a + b for a, b in zip(total, signed))
    return total or ()
