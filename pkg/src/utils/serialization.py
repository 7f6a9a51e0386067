"""
JSON payloads for elements, complexes, reduced forms and iso-class tables.

Coefficients travel as "num/den" strings; class ids as numbers (or aliases
on input). Words are written in product order.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Union

import numpy as np

from src.algebra import ffla
from src.algebra.complexes import BoundedComplex, ReducedForm
from src.algebra.dhall import DerivedHallAlgebra, DerivedWord, DHElement
from src.algebra.mhall import AlgebraElement, ModifiedHallAlgebra, NormalWord, TorusElement
from src.algebra.quiverrep import IsoClassTable, Quiver, Representation, orbit_count_defects
from src.algebra.rewriting import Factor, derived_factor, stalk_factor, torus_factor
from src.utils.errors import ConfigError, ConsistencyError, ContractError
from src.utils.models import (
    ComplexPayload,
    ComponentPayload,
    DecompositionPayload,
    DifferentialPayload,
    ElementPayload,
    IsoClassPayload,
    ReducedFormPayload,
    StalkFactorPayload,
    TableCacheKey,
    TableCachePayload,
    TermPayload,
    TorusFactorPayload,
)

logger = logging.getLogger(__name__)


def fraction_to_text(value) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: Union[str, int]) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError(f"{text!r} is not an exact rational") from e


def _torus_payload(torus: Sequence) -> List[TorusFactorPayload]:
    return [TorusFactorPayload(degree=d, exponents=list(v)) for d, v in torus]


def _stalk_payload(stalks: Sequence, table: Optional[IsoClassTable] = None) -> List[StalkFactorPayload]:
    return [
        StalkFactorPayload(degree=d, iso_class_id=table.alias(c) if table is not None else c)
        for d, c in stalks
    ]


# Modified Hall algebra


def element_to_payload(element: AlgebraElement, table: Optional[IsoClassTable] = None) -> ElementPayload:
    """Pass *table* to write aliases instead of numeric class ids"""
    return ElementPayload(
        terms=[
            TermPayload(
                coefficient=fraction_to_text(c),
                torus=_torus_payload(word.torus),
                stalks=_stalk_payload(word.stalks, table),
            )
            for word, c in element
        ]
    )


def _term_factors(table: IsoClassTable, term: TermPayload, derived: bool = False) -> List[Factor]:
    if derived and term.torus:
        raise ContractError("derived Hall algebra words have no torus factors")
    factors = [torus_factor(t.exponents, t.degree) for t in term.torus]
    if any(len(t.exponents) != table.quiver.vertex_count for t in term.torus):
        raise ContractError(f"torus exponents must have {table.quiver.vertex_count} entries")
    make = derived_factor if derived else stalk_factor
    factors += [make(table.resolve(s.iso_class_id), s.degree) for s in term.stalks]
    return factors


def element_from_payload(
    table: IsoClassTable,
    payload: ElementPayload,
    algebra: Optional[ModifiedHallAlgebra] = None,
) -> AlgebraElement:
    """Terms given in normal form, or in any order when an algebra is supplied to normalize them"""
    total = AlgebraElement()
    for term in payload.terms:
        coefficient = parse_fraction(term.coefficient)
        factors = _term_factors(table, term)
        if algebra is None:
            total = total + AlgebraElement.basis(NormalWord.from_factors(factors), coefficient)
        else:
            total = total + algebra.normalize(factors).scale(coefficient)
    return total


# Derived Hall algebra


def dh_element_to_payload(element: DHElement, table: Optional[IsoClassTable] = None) -> ElementPayload:
    return ElementPayload(
        terms=[
            TermPayload(coefficient=fraction_to_text(c), stalks=_stalk_payload(word.stalks, table))
            for word, c in element
        ]
    )


def dh_element_from_payload(
    table: IsoClassTable,
    payload: ElementPayload,
    algebra: Optional[DerivedHallAlgebra] = None,
) -> DHElement:
    total = DHElement()
    for term in payload.terms:
        coefficient = parse_fraction(term.coefficient)
        factors = _term_factors(table, term, derived=True)
        if algebra is None:
            total = total + DHElement.basis(DerivedWord.from_factors(factors), coefficient)
        else:
            total = total + algebra.normalize(factors).scale(coefficient)
    return total


def reduced_to_payload(reduced: ReducedForm, table: Optional[IsoClassTable] = None) -> ReducedFormPayload:
    return ReducedFormPayload(
        coefficient=fraction_to_text(reduced.coefficient),
        word=TermPayload(
            coefficient="1/1",
            torus=_torus_payload(reduced.word.torus),
            stalks=_stalk_payload(reduced.word.stalks, table),
        ),
    )


def reduced_from_payload(table: IsoClassTable, payload: ReducedFormPayload) -> ReducedForm:
    word = NormalWord.from_factors(_term_factors(table, payload.word))
    return ReducedForm(parse_fraction(payload.coefficient), word)


def decomposition_to_payload(
    derived: DerivedWord, torus: TorusElement, table: Optional[IsoClassTable] = None
) -> DecompositionPayload:
    return DecompositionPayload(
        derived_word=_stalk_payload(derived.stalks, table),
        torus=_torus_payload(torus.exponents),
    )


# Complexes


def complex_from_payload(quiver: Quiver, q: int, payload: ComplexPayload) -> BoundedComplex:
    components = {
        c.degree: Representation(quiver, q, c.dim_vector, c.arrow_maps or None)
        for c in payload.degrees
    }
    zero = tuple(0 for _ in quiver.vertices)
    differentials = {}
    for d in payload.differentials:
        if len(d.vertex_maps) != quiver.vertex_count:
            raise ContractError(f"d^{d.from_degree} needs one matrix per vertex, got {len(d.vertex_maps)}")
        source = components[d.from_degree].dim_vector if d.from_degree in components else zero
        target = components[d.from_degree + 1].dim_vector if d.from_degree + 1 in components else zero
        differentials[d.from_degree] = tuple(
            ffla.as_matrix(values, q, (target[v - 1], source[v - 1]))
            for v, values in zip(quiver.vertices, d.vertex_maps)
        )
    return BoundedComplex(quiver, q, components, differentials)


def _lists(matrix: np.ndarray) -> List[List[int]]:
    return [[int(x) for x in row] for row in matrix]


def complex_to_payload(X: BoundedComplex) -> ComplexPayload:
    return ComplexPayload(
        degrees=[
            ComponentPayload(degree=d, dim_vector=list(rep.dim_vector), arrow_maps=rep.map_lists())
            for d, rep in X.components.items()
        ],
        differentials=[
            DifferentialPayload(from_degree=d, vertex_maps=[_lists(m) for m in maps])
            for d, maps in sorted(X.differentials.items())
        ],
    )


# Iso-class tables


def table_to_payload(table: IsoClassTable, key: TableCacheKey) -> TableCachePayload:
    classes = []
    for cid in table.ids():
        info = table.info(cid)
        classes.append(
            IsoClassPayload(
                id=cid,
                alias=table.alias(cid),
                dim_vector=list(info.dim_vector),
                end_dim=info.end_dim,
                aut_order=info.aut_order,
                decomposition=list(info.decomposition),
                probabilistic=info.probabilistic,
                arrow_maps=table.representative(cid).map_lists(),
            )
        )
    return TableCachePayload(key=key, classes=classes)


def table_from_payload(payload: TableCachePayload, guards=None, seed: int = 0) -> IsoClassTable:
    key = payload.key
    quiver = Quiver(key.vertex_count, tuple(tuple(a) for a in key.arrows))
    ordered = sorted(payload.classes, key=lambda c: c.id)
    if [c.id for c in ordered] != list(range(len(ordered))):
        raise ContractError("cached class ids are not contiguous")
    reps = [Representation(quiver, key.q, c.dim_vector, c.arrow_maps or None) for c in ordered]
    defects = orbit_count_defects(
        quiver, key.q, key.dim_caps, [rep.dim_vector for rep in reps], [c.aut_order for c in ordered]
    )
    if defects:
        raise ConsistencyError("cached table is not a full classification: " + "; ".join(defects[:3]))
    return IsoClassTable(
        quiver,
        key.q,
        key.dim_caps,
        reps,
        [c.aut_order for c in ordered],
        decompositions=[c.decomposition for c in ordered],
        probabilistic=[c.probabilistic for c in ordered],
        guards=guards,
        seed=seed,
    )
