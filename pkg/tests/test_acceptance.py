"""Acceptance criteria 1-13 at full size; one PASS/FAIL line per criterion."""
import pytest

from qcarlitz.verify import CRITERIA, PROFILES


@pytest.mark.parametrize("crit", CRITERIA, ids=lambda c: f"criterion_{c.number:02d}")
def test_criterion(crit, capsys):
    ok, detail = crit.check(PROFILES["full"])
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {crit.number}: {crit.name} ({detail})")
    assert ok, detail
