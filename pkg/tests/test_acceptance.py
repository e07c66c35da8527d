"""Acceptance gate: the twelve structural criteria, one test each.

Each test runs the corresponding self-test criterion at full sample
counts and prints a single pass/fail line; the same battery backs the
`probmink selftest` command.
"""

import sys

from probmink import selftest


def _run(criterion):
    result = criterion(quick=False)
    status = "PASS" if result.passed else "FAIL"
    print(f"criterion {result.name} {status}: {result.detail}", file=sys.stderr)
    assert result.passed, f"{result.name}: {result.detail}"


def test_criterion_01_fixture_exactness():
    _run(selftest.check_fixture_exactness)


def test_criterion_02_periodic_closed_form():
    _run(selftest.check_periodic_closed_form)


def test_criterion_03_functional_equation():
    _run(selftest.check_functional_equation)


def test_criterion_04_codec_roundtrip():
    _run(selftest.check_codec_roundtrip)


def test_criterion_05_cylinder_laws():
    _run(selftest.check_cylinder_laws)


def test_criterion_06_increment_oracle():
    _run(selftest.check_increment_oracle)


def test_criterion_07_ratio_formula():
    _run(selftest.check_ratio_formula)


def test_criterion_08_continuity_modulus():
    _run(selftest.check_continuity_modulus)


def test_criterion_09_monotonicity_witnesses():
    _run(selftest.check_monotonicity_witnesses)


def test_criterion_10_integral_adjudication():
    _run(selftest.check_integral_adjudication)


def test_criterion_11_question_mark():
    _run(selftest.check_question_mark)


def test_criterion_12_graph_and_ifs():
    _run(selftest.check_graph_and_ifs)


def test_all_criteria_count():
    assert len(selftest.CRITERIA) == 12
