"""Acceptance criteria, one test per criterion.

Every check is an exact identity, so the tolerance everywhere is exact
equality in Q(zeta_p); runtime budgets are asserted as stated.  Each test
prints one PASS/FAIL line (run with `pytest -s` to see them live).
"""

import json
import time

from weilrep.cli import main
from weilrep.cyclotomic import CycNum, gauss_sum, legendre
from weilrep.suites import run_suite

RESULTS = []


def _record(number: int, label: str, passed: bool, elapsed: float,
            budget: float) -> None:
    verdict = "PASS" if passed and elapsed < budget else "FAIL"
    line = f"ACCEPTANCE {number} {label}: {verdict} ({elapsed:.2f}s, budget {budget:.0f}s)"
    RESULTS.append(line)
    print(line)
    assert passed, f"criterion {number} ({label}) failed its exact checks"
    assert elapsed < budget, f"criterion {number} exceeded its runtime budget"


def _suite_passed(report: dict) -> bool:
    return report["passed"]


def _named_check(report: dict, fragment: str) -> dict:
    for check in report["checks"]:
        if fragment in check["name"]:
            return check
    raise AssertionError(f"no check matching {fragment!r} in {report['suite']}")


def test_criterion_1_gauss_identity():
    start = time.monotonic()
    ok = True
    for p in (3, 5, 7):
        g1 = gauss_sum(p)
        for n in (1, 2, 3):
            ok = ok and g1 ** (2 * n) == CycNum.from_rational(
                p, p ** n * legendre((-1) ** n, p))
    _record(1, "gauss-sum power identity", ok, time.monotonic() - start, 1.0)


def test_criterion_2_stone_von_neumann():
    start = time.monotonic()
    ok = True
    for p, dim in ((3, 2), (5, 2), (3, 4)):
        ok = ok and _suite_passed(run_suite("svn", p, dim, seed=0))
    _record(2, "commutant dimension and central character",
            ok, time.monotonic() - start, 60.0)


def test_criterion_3_multiplicativity():
    start = time.monotonic()
    r31 = run_suite("multiplicativity", 3, 2, seed=0)
    triples = _named_check(r31, "transport multiplicative")
    ok = _suite_passed(r31) and "512 exhaustive" in triples["name"]
    r51 = run_suite("multiplicativity", 5, 2, seed=0, samples=500)
    ok = ok and _suite_passed(r51) \
        and "500 sampled" in _named_check(r51, "transport multiplicative")["name"]
    r32 = run_suite("multiplicativity", 3, 4, seed=0, samples=200)
    ok = ok and _suite_passed(r32) \
        and "200 sampled" in _named_check(r32, "transport multiplicative")["name"]
    _record(3, "strong multiplicativity of the transport",
            ok, time.monotonic() - start, 300.0)


def test_criterion_4_closed_form_equals_chaining():
    start = time.monotonic()
    report = run_suite("multiplicativity", 3, 2, seed=0)
    closed = _named_check(report, "closed form equals chained")
    middles = _named_check(report, "chaining independent of the middle")
    ok = closed["passed"] and middles["passed"] \
        and "64 pairs" in closed["name"]
    _record(4, "closed form against chained extension",
            ok, time.monotonic() - start, 60.0)


def test_criterion_5_intertwining_and_kernels():
    start = time.monotonic()
    r3 = run_suite("kernels", 3, 2, seed=0, samples=200)
    ok = _suite_passed(r3)
    ok = ok and "64 pairs x 27 elements" in _named_check(
        r3, "operators intertwine")["name"]
    ok = ok and "200 sampled triples" in _named_check(
        r3, "convolution maps to composition")["name"]
    r5 = run_suite("kernels", 5, 2, seed=0, samples=200)
    ok = ok and _suite_passed(r5)
    _record(5, "intertwining property and kernel calculus",
            ok, time.monotonic() - start, 120.0)


def test_criterion_6_appendix_lemma_oracles():
    start = time.monotonic()
    ok = _suite_passed(run_suite("lemmas", 3, 2, seed=0))
    r5 = run_suite("lemmas", 5, 2, seed=0, samples=200)
    ok = ok and _suite_passed(r5) \
        and "200 sampled" in _named_check(r5, "discriminant lemma")["name"]
    _record(6, "appendix lemma oracles", ok, time.monotonic() - start, 120.0)


def test_criterion_7_weil_representation():
    start = time.monotonic()
    r31 = run_suite("homomorphism", 3, 2, seed=0)
    ok = _suite_passed(r31) \
        and "all pairs" in _named_check(r31, "linear representation")["name"]
    e31 = run_suite("egorov", 3, 2, seed=0)
    ok = ok and _suite_passed(e31) \
        and "24 group elements x 27" in _named_check(e31, "covariance")["name"]
    for p, dim in ((5, 2), (3, 4)):
        ok = ok and _suite_passed(run_suite("homomorphism", p, dim, seed=0))
        ok = ok and _suite_passed(run_suite("egorov", p, dim, seed=0))
    _record(7, "canonical Weil representation", ok,
            time.monotonic() - start, 300.0)


def test_criterion_8_total_idempotent():
    start = time.monotonic()
    report = run_suite("idempotent", 3, 2, seed=0)
    _record(8, "total idempotent on the section space",
            _suite_passed(report), time.monotonic() - start, 60.0)


def test_criterion_9_compatibilities():
    start = time.monotonic()
    tensor = run_suite("tensor", 3, 2, seed=0, samples=50)
    ok = _suite_passed(tensor) \
        and "50 sampled pairs" in _named_check(tensor, "product action")["name"]
    ok = ok and _suite_passed(run_suite("duality", 3, 2, seed=0))
    reduction = run_suite("reduction", 3, 4, seed=0)
    ok = ok and _suite_passed(reduction)
    ok = ok and _named_check(reduction, "invariant subspace has dimension 3")["passed"]
    _record(9, "product, duality and reduction compatibilities",
            ok, time.monotonic() - start, 300.0)


def test_criterion_10_determinism(tmp_path, capsys):
    start = time.monotonic()
    outs = []
    codes = []
    for name in ("first.json", "second.json"):
        path = tmp_path / name
        codes.append(main(["verify", "--suite", "all", "--p", "3", "--dim", "2",
                           "--seed", "0", "--out", str(path)]))
        outs.append(path.read_bytes())
    capsys.readouterr()
    ok = codes == [0, 0] and outs[0] == outs[1]
    report = json.loads(outs[0])
    ok = ok and report["passed"] and report["failed"] == 0
    _record(10, "byte-identical deterministic verification",
            ok, time.monotonic() - start, 900.0)


def test_zz_summary(capsys):
    with capsys.disabled():
        print()
        for line in RESULTS:
            print(line)
    assert len(RESULTS) == 10
