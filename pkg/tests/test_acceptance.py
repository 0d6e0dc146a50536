"""Runs the eleven acceptance criteria and prints one line per criterion."""

import pytest

from gwweyl.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=[c.__name__ for c in CRITERIA])
def test_criterion(criterion, capsys):
    result = criterion(seed=0)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail
