"""One test per acceptance criterion; each prints a single PASS/FAIL line.

The lines are also collected into RESULTS and repeated in the pytest
terminal summary (see conftest.py).
"""

import pytest

from cdspile import verification as v

RESULTS: list[str] = []

OPTIONS = v.Options(n_max=8, k_max=7, workers=1)


def _run(check):
    result = v.run_check(check, OPTIONS)
    line = result.line()
    RESULTS.append(line)
    print(line)
    for detail in result.details:
        print("    " + detail)
    return result


@pytest.mark.parametrize("check", v.CHECKS, ids=[c.__name__.removeprefix("check_") for c in v.CHECKS])
def test_criterion(check):
    result = _run(check)
    assert result.passed, "\n".join(result.details)


def test_every_criterion_is_covered():
    assert [c.__name__ for c in v.CHECKS] == [
        "check_max_pile_even",
        "check_max_pile_odd",
        "check_pile_size_formula",
        "check_merge_numbers",
        "check_inclusion_exclusion",
        "check_recursion",
        "check_reachability",
        "check_factorizations",
        "check_golden",
    ]


def test_expected_diff_is_the_only_one():
    from cdspile.merge import computed_table, printed_table

    assert computed_table(7).diff(printed_table()) == v.EXPECTED_DIFF == [(5, 4, 40, 90)]
