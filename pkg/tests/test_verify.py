from fractions import Fraction

import pytest

from src.pipeline.verify import (
    MODES,
    associativity_suite,
    confluence_suite,
    consistency_suite,
    embed_suite,
    euler_suite,
    expected_hom_complex,
    green_check,
    green_coefficient_check,
    green_sides,
    reduction_suite,
    relations_suite,
    run_suite,
    twist_suite,
)
from src.utils.errors import BoundError, ContractError


def assert_passed(report):
    assert report.instances > 0, report.check
    assert report.passed, report.failures[:3]


def test_green_sides_point(point_table):
    S = point_table.resolve("S")
    lhs, rhs = green_sides(point_table, S, S, S, S)
    assert lhs == rhs == Fraction(3, 2)


@pytest.mark.parametrize("fixture", ["point_table", "point_table_q3", "a2_small"])
def test_green(fixture, request):
    assert_passed(green_check(request.getfixturevalue(fixture)))


def test_green_on_a2_with_total_cap(a2_table):
    assert_passed(green_check(a2_table, dim_total_cap=3, workers=2))


def test_worker_processes_match_serial_run(point_table_q3):
    serial = green_coefficient_check(point_table_q3, workers=1)
    spread = green_coefficient_check(point_table_q3, workers=2)
    assert spread.model_dump(mode="json") == serial.model_dump(mode="json")
    assert spread.instances > 1


def test_green_total_cap_above_table(a2_small):
    with pytest.raises(BoundError):
        green_check(a2_small, dim_total_cap=3)


def test_green_total_cap_zero_and_negative(point_table):
    report = green_check(point_table, dim_total_cap=0)
    assert report.passed
    assert report.instances == 1
    assert report.parameter_space.endswith("total dim <= 0")
    with pytest.raises(BoundError):
        green_check(point_table, dim_total_cap=-1)


def test_explicit_zero_samples_are_honoured(point_table):
    (report,) = run_suite("twist", point_table, samples=0)
    assert report.instances == 0
    (report,) = run_suite("green", point_table, dim_total_cap=0)
    assert report.instances == 1


@pytest.mark.parametrize("fixture", ["point_table", "a2_small"])
def test_green_coefficients(fixture, request):
    assert_passed(green_coefficient_check(request.getfixturevalue(fixture)))


@pytest.mark.parametrize("mode", MODES)
def test_relations(a2_small, mode):
    assert_passed(relations_suite(a2_small, mode))


@pytest.mark.parametrize("mode", MODES)
def test_associativity_and_confluence(a2_small, mode):
    assert_passed(associativity_suite(a2_small, mode, samples=25, seed=7, degree_window=1))
    assert_passed(confluence_suite(a2_small, mode, samples=25, seed=7, degree_window=1))


def test_point_relations_q3(point_table_q3):
    for mode in MODES:
        assert_passed(relations_suite(point_table_q3, mode))


def test_embed(a2_small):
    assert_passed(embed_suite(a2_small, degree_window=1, samples=30, seed=3))


def test_consistency(a2_table):
    assert_passed(consistency_suite(a2_table))


def test_euler(a2_small):
    assert_passed(euler_suite(a2_small, degree_window=1))


def test_expected_hom_complex(a2_small):
    P, S1 = a2_small.resolve("P"), a2_small.resolve("S1")
    assert expected_hom_complex(a2_small, ("U", P, 0), ("U", S1, 0)) == 1
    assert expected_hom_complex(a2_small, ("K", P, 1), ("K", S1, 2)) == 0


def test_reduction(a2_table):
    assert_passed(reduction_suite(a2_table, samples=12, seed=5))


def test_twist(a2_small):
    assert_passed(twist_suite(a2_small, samples=30, seed=11, degree_window=1))


def test_reports_are_reproducible(a2_small):
    first = run_suite("associativity", a2_small, mode="mh_tw", samples=10, seed=1, degree_window=1)
    second = run_suite("associativity", a2_small, mode="mh_tw", samples=10, seed=1, degree_window=1)
    assert [r.model_dump_json() for r in first] == [r.model_dump_json() for r in second]
    assert "wall_time" not in first[0].model_dump()


def test_run_suite_dispatch(point_table):
    reports = run_suite("relations", point_table, degree_window=1)
    assert [r.check for r in reports] == [f"relations[{m}]" for m in MODES]
    with pytest.raises(ContractError):
        run_suite("nonsense", point_table)
    with pytest.raises(ContractError):
        associativity_suite(point_table, "hh")
