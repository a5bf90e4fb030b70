import json

import pytest

from artifact import harness
from artifact.harness import (
    FILTRATION_EXAMPLES,
    SUITES,
    Case,
    Check,
    Grid,
    Suite,
    conjecture_scan,
    dumps,
    filtration_audit,
    run_suite,
)
from artifact.tableaux import Partition

SMALL = Grid(nmax=4, dmax=2, kmax=2)


@pytest.fixture(scope="module")
def small_reports():
    return {name: run_suite(name, SMALL) for name in SUITES}


@pytest.mark.parametrize("name", sorted(SUITES))
def test_every_suite_passes_on_a_small_grid(small_reports, name):
    report = small_reports[name]
    assert report.cases_run > 0
    assert report.failed == 0, report.witnesses
    assert report.passed == report.cases_run


def test_reports_serialize_with_a_schema_version(small_reports):
    data = json.loads(dumps(list(small_reports.values())))
    assert data["schema_version"] == 1
    assert {r["suite"] for r in data["reports"]} == set(SUITES)
    assert "wall_time" not in json.loads(dumps(small_reports["counting"], timing=False))


def test_runs_are_deterministic():
    first = dumps(run_suite("quotient-chain", SMALL), timing=False)
    assert dumps(run_suite("quotient-chain", SMALL), timing=False) == first


def test_parallel_run_matches_serial_run():
    serial = dumps(run_suite("atlas-rank", SMALL), timing=False)
    assert dumps(run_suite("atlas-rank", SMALL, jobs=2), timing=False) == serial


def _fake_suite(run):
    return Suite("fake", "test double", lambda g: [Case("fake", (1,)), Case("fake", (2,))], run)


def test_failing_checks_become_witnesses(monkeypatch):
    def run(key):
        return [Check("always", True), Check("odd keys", key[0] % 2 == 0, {"key": key[0]})]

    monkeypatch.setitem(SUITES, "fake", _fake_suite(run))
    report = run_suite("fake", SMALL)
    assert (report.passed, report.failed) == (1, 1)
    assert report.witnesses == [{"case": [1], "check": "odd keys", "key": 1}]


def test_exceptions_are_reported_not_raised(monkeypatch):
    def run(key):
        raise ZeroDivisionError("boom")

    monkeypatch.setitem(SUITES, "fake", _fake_suite(run))
    report = run_suite("fake", SMALL)
    assert report.failed == 2
    assert all(w["check"] == "exception" and "boom" in w["error"] for w in report.witnesses)


def test_erratum_checks_are_discrepancies_not_failures(monkeypatch):
    monkeypatch.setitem(SUITES, "fake", _fake_suite(lambda key: [Check("as printed", False, erratum="typo")]))
    report = run_suite("fake", SMALL)
    assert report.ok
    assert [d["erratum"] for d in report.discrepancies] == ["typo", "typo"]


def test_known_discrepancies_are_classified(small_reports):
    assert {d["erratum"] for d in small_reports["specht-examples"].discrepancies} == {harness.ERRATUM_221}
    assert {d["erratum"] for d in small_reports["coefficient-identities"].discrepancies} == {harness.ERRATUM_EXPANSIONS}


def test_grid_limits():
    with pytest.raises(ValueError):
        Grid(nmax=10)
    with pytest.raises(ValueError):
        Grid(dmax=-1)
    with pytest.raises(KeyError):
        run_suite("no-such-suite", SMALL)


def test_conjecture_scan_small():
    report = conjecture_scan(2)
    assert report.evidence and report.ok
    assert json.loads(dumps(report, timing=False))["violations"] == 0


def test_conjecture_scan_flags_a_broken_embedding(monkeypatch):
    real = harness.embedded_coordinates

    def broken(n, d, mu):
        dom, tgt, E = real(n, d, mu)
        return dom, tgt, E * 0

    monkeypatch.setattr(harness, "embedded_coordinates", broken)
    report = conjecture_scan(1, nmax=3)
    assert report.violations
    assert all(e.p_rank == 0 for e in report.violations)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_filtration_audit(d):
    table = filtration_audit(d)
    assert table.ok, [r for r in table.rows if not r.ok]


@pytest.mark.parametrize("key", sorted(FILTRATION_EXAMPLES))
def test_filtration_worked_examples(key):
    content, space = key
    mu = Partition(tuple(int(x) for x in content.strip("()").split(",") if x))
    table = filtration_audit(mu.n, mu)
    for f, want in FILTRATION_EXAMPLES[key].items():
        row = table.lookup(content, space, f)
        assert row.expected == want == row.windowed
