"""Acceptance gate: every criterion must pass at its stated tolerance.

Run with -s to see the one-line pass/fail report per criterion.
"""

import pytest

from grassharm import acceptance


@pytest.mark.parametrize("number", sorted(acceptance.CRITERIA))
def test_criterion(number):
    result = acceptance.CRITERIA[number]()
    print(result.line())
    assert result.passed, result.detail
