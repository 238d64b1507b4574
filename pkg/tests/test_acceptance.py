"""Acceptance gate: the thirteen verification checks with their runtime
tolerances.  One PASS/FAIL line is printed per criterion."""

import sys

import pytest

from tensorforge.verify import CHECKS, run_verification

# (criterion number, check name, runtime bound in seconds; None = only the
# overall suite bound applies)
TOLERANCES = [
    (1, "Z3xZ3-case1-trivial", 1.0),
    (2, "Z3xZ3-case2-inversion-alpha", 1.0),
    (3, "Z3xZ3-case3-incompatible", 1.0),
    (4, "prop5.3-inversion-AxZ2", 10.0),
    (5, "prop2.2(2)-trivial-actions", 120.0),
    (6, "prop2.2(1)-abelian-tensors", None),
    (7, "theorem1-claim1-necessity", None),
    (8, "theorem1-claim2-induced-beta", None),
    (9, "theorem2-hypercenter-congruence", 720.0),
    (10, "prop5.2-z2-criterion", None),
    (11, "free-group-counterexample", None),
    (12, "heisenberg3-aut-derivative", None),
    (13, "enumerator-round-trip", None),
]


@pytest.fixture(scope="module")
def records():
    return {r["name"]: r for r in run_verification()}


def _announce(number, record, bound):
    verdict = "PASS" if record["passed"] else "FAIL"
    print(f"criterion {number:2d} {verdict} {record['name']:34s} "
          f"{record['seconds']:8.3f} s",
          file=sys.__stdout__, flush=True)
    if bound is not None:
        assert record["seconds"] < bound, \
            f"{record['name']} took {record['seconds']} s (bound {bound})"
    assert record["passed"], \
        (f"{record['name']}: expected {record['expected']}, "
         f"computed {record['computed']}"
         + (f" ({record['detail']})" if record["detail"] else ""))


@pytest.mark.parametrize("number,name,bound", TOLERANCES,
                         ids=[f"criterion-{n:02d}" for n, _, _ in TOLERANCES])
def test_acceptance_criterion(records, capfd, number, name, bound):
    assert name in records, f"missing verification row {name}"
    with capfd.disabled():
        _announce(number, records[name], bound)


def test_suite_names_cover_all_checks(records):
    assert len(CHECKS) == 13
    assert {name for _, name, _ in TOLERANCES} == set(records)


def test_suite_total_runtime(records, capfd):
    total = sum(r["seconds"] for r in records.values())
    with capfd.disabled():
        print(f"verification suite total {total:8.3f} s",
              file=sys.__stdout__, flush=True)
    assert total < 300.0
