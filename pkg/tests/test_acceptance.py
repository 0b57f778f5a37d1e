"""Acceptance gate: one test per end-to-end criterion.

All checks live in cliffkit.verify and run with a single fixed seed; each
test here prints one pass/fail line and enforces the runtime budget where
one is declared.  Everything is exact arithmetic, so there are no
tolerances anywhere.
"""

import pytest

from cliffkit.verify import CRITERIA, run_all

_RESULTS = None


def _results():
    global _RESULTS
    if _RESULTS is None:
        _RESULTS = {r["name"]: r for r in run_all(seed=0)}
    return _RESULTS


@pytest.mark.parametrize("name", [c[0] for c in CRITERIA])
def test_criterion(name):
    r = _results()[name]
    verdict = "PASS" if r["ok"] else "FAIL"
    print(f"{verdict} {name} [{r['seconds']}s] {r['detail']}")
    assert r["ok"], f"{name}: {r['detail']}"
    if r["budget"] is not None:
        assert r["seconds"] < r["budget"], (
            f"{name}: took {r['seconds']}s, budget {r['budget']}s"
        )
