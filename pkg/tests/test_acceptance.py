"""One test per acceptance criterion; conftest prints a PASS/FAIL line for each.

Run directly (python3 tests/test_acceptance.py) for the same summary without pytest.
"""
import sys
import time

import pytest

from acceptance import CRITERIA

RESULTS = {}


def _record(num, title, fn):
    t = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as e:                  # a crash is a failure, reported as such
        ok, detail = False, "raised %s: %s" % (type(e).__name__, e)
    RESULTS[num] = (ok, title, detail, time.perf_counter() - t)
    return ok, detail


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=["criterion_%d" % c[0] for c in CRITERIA])
def test_criterion(num, title, fn):
    ok, detail = _record(num, title, fn)
    assert ok, detail


def summary_lines():
    lines = []
    for num in sorted(RESULTS):
        ok, title, detail, s = RESULTS[num]
        lines.append("[%s] criterion %2d: %s (%.1f s) -- %s" % (
            "PASS" if ok else "FAIL", num, title, s, detail))
    return lines


if __name__ == "__main__":
    for num, title, fn in CRITERIA:
        _record(num, title, fn)
        print(summary_lines()[-1], flush=True)
    sys.exit(0 if all(r[0] for r in RESULTS.values()) else 1)
