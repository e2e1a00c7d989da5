"""Acceptance battery: one test per criterion, each printing its pass/fail
line; the same callables back the `qwalk verify-paper` command."""

import io
import time

import pytest

from qwalk.verify import CRITERIA, run_battery


@pytest.mark.parametrize("name,criterion,budget",
                         CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(name, criterion, budget, capsys):
    start = time.perf_counter()
    passed, detail = criterion()
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        tag = "PASS" if passed else "FAIL"
        print(f"[{tag}] {name} ({elapsed:.2f}s) {detail}")
    assert passed, detail
    assert elapsed <= budget, f"runtime {elapsed:.2f}s over the {budget:.0f}s budget"


def test_battery_runner_reports_all():
    stream = io.StringIO()
    status = run_battery(stream)
    text = stream.getvalue()
    assert status == 0
    assert text.count("[PASS]") == len(CRITERIA)
    assert f"{len(CRITERIA)}/{len(CRITERIA)} criteria passed" in text
