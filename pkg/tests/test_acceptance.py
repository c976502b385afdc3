"""End-to-end acceptance checks; each prints one PASS/FAIL line."""

import pytest

from thompson31.acceptance import CHECKS, DEFAULT_SEED


@pytest.mark.parametrize("check", CHECKS, ids=[f"criterion_{k}" for k in range(1, len(CHECKS) + 1)])
def test_criterion(check, capsys):
    result = check(DEFAULT_SEED)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.ok, result.detail
