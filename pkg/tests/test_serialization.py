from fractions import Fraction

import pytest

from src.algebra.complexes import reduce_to_normal_form
from src.algebra.dhall import DerivedHallAlgebra
from src.algebra.mhall import ModifiedHallAlgebra
from src.utils.errors import ConfigError, ContractError
from src.utils.models import ComplexPayload, ElementPayload, ProductRequest, ReducedFormPayload, TableCacheKey
from src.utils.serialization import (
    complex_from_payload,
    complex_to_payload,
    dh_element_from_payload,
    dh_element_to_payload,
    element_from_payload,
    element_to_payload,
    parse_fraction,
    reduced_from_payload,
    reduced_to_payload,
    table_from_payload,
    table_to_payload,
)

PROJECTION = {
    "degrees": [
        {"degree": 0, "dim_vector": [1, 1], "arrow_maps": [[[1]]]},
        {"degree": 1, "dim_vector": [1, 0], "arrow_maps": [[]]},
    ],
    "differentials": [{"from_degree": 0, "vertex_maps": [[[1]], []]}],
}


def test_parse_fraction():
    assert parse_fraction("3/6") == Fraction(1, 2)
    assert parse_fraction(4) == 4
    with pytest.raises(ConfigError):
        parse_fraction("1/0")
    with pytest.raises(ConfigError):
        parse_fraction("half")


def test_product_payload_with_aliases(a2_small):
    request = ProductRequest.model_validate(
        {
            "left": {"terms": [{"stalks": [{"degree": 0, "iso_class_id": "S1"}]}]},
            "right": {"terms": [{"stalks": [{"degree": 0, "iso_class_id": 2}]}]},
        }
    )
    algebra = ModifiedHallAlgebra(a2_small, twisted=True)
    left = element_from_payload(a2_small, request.left, algebra)
    right = element_from_payload(a2_small, request.right, algebra)
    payload = element_to_payload(algebra.multiply(left, right), a2_small).model_dump(mode="json")
    assert payload == {
        "terms": [
            {"coefficient": "1/2", "torus": [], "stalks": [{"degree": 0, "iso_class_id": "S1+S2"}]},
            {"coefficient": "1/2", "torus": [], "stalks": [{"degree": 0, "iso_class_id": "P"}]},
        ]
    }


def test_unnormalized_terms_need_an_algebra(a2_small):
    payload = ElementPayload.model_validate(
        {"terms": [{"stalks": [{"degree": 0, "iso_class_id": "S1"}, {"degree": 1, "iso_class_id": "S2"}]}]}
    )
    with pytest.raises(ContractError):
        element_from_payload(a2_small, payload)
    assert not element_from_payload(a2_small, payload, ModifiedHallAlgebra(a2_small)).is_zero()


def test_torus_exponent_length(a2_small):
    payload = ElementPayload.model_validate({"terms": [{"torus": [{"degree": 0, "exponents": [1]}]}]})
    with pytest.raises(ContractError):
        element_from_payload(a2_small, payload)


def test_derived_payloads(a2_small):
    payload = ElementPayload.model_validate(
        {"terms": [{"coefficient": "2", "stalks": [{"degree": 1, "iso_class_id": "P"}, {"degree": -1, "iso_class_id": "S2"}]}]}
    )
    element = dh_element_from_payload(a2_small, payload)
    assert dh_element_to_payload(element).model_dump(mode="json") == {
        "terms": [
            {
                "coefficient": "2/1",
                "torus": [],
                "stalks": [{"degree": 1, "iso_class_id": 4}, {"degree": -1, "iso_class_id": 2}],
            }
        ]
    }
    with_torus = ElementPayload.model_validate({"terms": [{"torus": [{"degree": 0, "exponents": [1, 0]}]}]})
    with pytest.raises(ContractError):
        dh_element_from_payload(a2_small, with_torus, DerivedHallAlgebra(a2_small))


def test_complex_payload(a2_small):
    X = complex_from_payload(a2_small.quiver, a2_small.q, ComplexPayload.model_validate(PROJECTION))
    assert complex_from_payload(a2_small.quiver, a2_small.q, complex_to_payload(X)).components == X.components
    reduced = reduce_to_normal_form(a2_small, X)
    payload = reduced_to_payload(reduced, a2_small)
    assert payload.model_dump(mode="json") == {
        "coefficient": "1/2",
        "word": {
            "coefficient": "1/1",
            "torus": [{"degree": 1, "exponents": [1, 0]}],
            "stalks": [{"degree": 0, "iso_class_id": "S2"}],
        },
    }
    assert reduced_from_payload(a2_small, ReducedFormPayload.model_validate(payload.model_dump())) == reduced


def test_complex_payload_shape_error(a2_small):
    broken = dict(PROJECTION, differentials=[{"from_degree": 0, "vertex_maps": [[[1, 1]], []]}])
    with pytest.raises(ContractError):
        complex_from_payload(a2_small.quiver, a2_small.q, ComplexPayload.model_validate(broken))


def test_table_payload(a2_small):
    key = TableCacheKey(version=1, vertex_count=2, arrows=[(1, 2)], q=2, dim_caps=[1, 1])
    restored = table_from_payload(table_to_payload(a2_small, key))
    assert len(restored) == len(a2_small)
    assert restored.aliases() == a2_small.aliases()
    assert [restored.aut_order(c) for c in restored.ids()] == [a2_small.aut_order(c) for c in a2_small.ids()]
