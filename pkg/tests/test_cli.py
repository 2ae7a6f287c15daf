import io
import json
from fractions import Fraction

import pytest

from cli.commands import run
from cli.explore import default_grid, explore_c1, random_grid
from cli.schemas import Outcome
from core.errors import DomainError
from seqcore.schemas import ExplicitSpec, ExponentialSpec, FromQuotientsSpec, GeometricSpec, PartialThetaSpec

ONES = '{"type": "geometric", "c": "1", "beta": "1"}'
EXPONENTIAL = '{"type": "exponential"}'
THETA4 = '{"type": "partial_theta", "a_squared": "4"}'
BAD = '{"type": "explicit", "coeffs": ["1", "1", "2"]}'


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    text = out.getvalue()
    return code, (json.loads(text) if text else None)


# ==========================================================
# ✅ REPORTS AND EXIT CODES
# ==========================================================
def test_check_tp_refuted():
    code, report = invoke("check-tp", "--spec", BAD, "--order", "2", "--window", "2")
    assert code == 1
    assert report["schema_version"] == "1"
    assert report["verdict"] == "refuted"
    failing = report["result"]["failing"]
    assert (failing["rows"], failing["cols"], failing["value"]) == ([0, 1], [1, 2], "-1")
    assert report["inputs"]["spec"]["coeffs"] == ["1", "1", "2"]
    assert report["settings"]["order"] == 2


def test_check_tp_holds():
    code, report = invoke("check-tp", "--spec", THETA4, "--order", "3", "--window", "6")
    assert code == 0
    assert report["result"]["verdict"] == "pass"


def test_quotients_command():
    code, report = invoke("quotients", "--spec", EXPONENTIAL, "--nmax", "4")
    assert code == 0
    assert report["result"]["q"]["q"] == ["2", "3/2", "4/3"]
    assert report["result"]["hutchinson_holds"] is False


@pytest.mark.parametrize(
    "command, spec, expected",
    [
        ("hutchinson", THETA4, 0),
        ("hutchinson", EXPONENTIAL, 1),
        ("lemma1", EXPONENTIAL, 1),
        ("lemma1", THETA4, 0),
        ("d-ineq", EXPONENTIAL, 0),
    ],
)
def test_condition_commands(command, spec, expected):
    code, _ = invoke(command, "--spec", spec, "--nmax", "6")
    assert code == expected


def test_hutchinson_includes_sections():
    _, report = invoke("hutchinson", "--spec", THETA4, "--nmax", "5")
    assert report["result"]["sections"]["holds"] is True


@pytest.mark.parametrize(
    "spec, expected_code, case",
    [
        ('{"type": "rational_gf", "numerator": ["1"], "beta": "1", "pole_order": 1}', 0, "RationalOK"),
        ('{"type": "rational_gf", "numerator": ["1", "2", "1"], "beta": "1", "pole_order": 1}', 1, "NotApplicable"),
        ('{"type": "aswe_finite", "c": "1/2", "betas": ["1", "1/2"]}', 1, "NotApplicable"),
        ('{"type": "explicit", "coeffs": ["1", "2", "1"]}', 0, "Entire-LPI"),
        ('{"type": "aswe_finite", "c": "1", "gamma": "1"}', 2, "NotApplicable"),
    ],
)
def test_verify_st1(spec, expected_code, case):
    code, report = invoke("verify-st1", "--spec", spec)
    assert code == expected_code
    assert report["result"]["case"] == case


def test_verify_st1_rejects_other_specs():
    code, report = invoke("verify-st1", "--spec", EXPONENTIAL)
    assert code == 3 and report is None


def test_th1_audit_commands():
    code, report = invoke("th1-audit", "--spec", THETA4, "--nmax", "8", "--lmax", "4", "--trunc", "10")
    assert code == 0
    assert report["result"]["min_q"] == "4"
    code, report = invoke("th1-audit", "--spec", EXPONENTIAL, "--lmax", "2", "--trunc", "8")
    assert code == 2
    assert report["result"]["status"] == "vacuous"


def test_verify_th3_command():
    code, report = invoke("verify-th3", "--spec", ONES, "--a2", "18/5", "--nmax", "12")
    assert code == 0
    certs = report["result"]["certificates"]
    assert [c["verdict"] for c in certs] == ["pass"] * 9
    assert len(certs[0]["points"][1]["value"]) == 2


def test_estimate_command():
    code, report = invoke("estimate", "ll13_root", "--tol", "1e-5")
    assert code == 0
    assert abs(float(Fraction(report["result"]["threshold"]["estimate"])) - 1.87152) < 1e-4


@pytest.mark.slow
def test_estimate_q_infinity_command():
    code, report = invoke("estimate", "q_infinity", "--tol", "1e-4")
    assert code == 0
    assert abs(float(Fraction(report["result"]["threshold"]["estimate"])) - 3.23363666) < 1e-3
    assert report["result"]["stability"]["agrees"] is True


def test_hadamard_command():
    right = '{"type": "geometric", "c": "1", "beta": "1/2"}'
    code, report = invoke("hadamard", "--spec", ONES, "--right", right, "--window", "3")
    assert code == 0
    assert report["result"]["coeffs"] == ["1", "1/2", "1/4", "1/8"]


def test_spec_from_file(tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(BAD)
    code, _ = invoke("check-tp", "--file", str(path), "--order", "2", "--window", "2")
    assert code == 1


def test_config_file_supplies_defaults(tmp_path):
    path = tmp_path / "tp.yaml"
    path.write_text("order: 2\nwindow: 2\n")
    code, report = invoke("check-tp", "--spec", BAD, "--config", str(path))
    assert code == 1
    assert report["settings"]["window"] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["check-tp", "--spec", "{not json"],
        ["check-tp", "--spec", BAD, "--bogus"],
        ["check-tp"],
        ["check-tp", "--spec", BAD, "--file", "x.json"],
        ["check-tp", "--file", "does-not-exist.json"],
        ["check-tp", "--spec", BAD, "--order", "0"],
        ["verify-th3", "--spec", ONES],
        ["quotients", "--spec", '{"type": "explicit", "coeffs": ["1", "0", "1"]}', "--nmax", "2"],
        ["estimate", "pi"],
        ["explore-c1", "--spec", THETA4, "--grid", "{}"],
        [],
    ],
)
def test_usage_and_input_errors(argv):
    code, report = invoke(*argv)
    assert code == 3
    assert report is None


# ==========================================================
# ✅ CONJECTURE EXPLORATION
# ==========================================================
def test_explore_partial_theta_finds_nothing():
    report = explore_c1(PartialThetaSpec(a_squared=5), default_grid(), max_order=3, window=8)
    assert report.verdict == Outcome.INCONCLUSIVE
    assert report.summary == "no counterexample within bounds"
    assert report.phase1.status == "supported"
    assert len(report.phase2) == 3


def test_explore_exponential_fails_phase_one():
    report = explore_c1(ExponentialSpec(), [GeometricSpec(c=1, beta=1)], max_order=3, window=8)
    assert report.verdict == Outcome.REFUTED
    assert report.phase1.status == "vacuous"
    assert 1 in report.phase1.failing
    assert report.phase2 == []


def test_explore_explicit_candidate_is_its_own_counterexample():
    report = explore_c1(ExplicitSpec(coeffs=[1, 1, 2]), [GeometricSpec(c=1, beta=1)], max_order=2, window=4)
    assert report.verdict == Outcome.REFUTED
    assert report.phase1 is None and report.phase1_note
    assert report.counterexample.certificate.value == -1


def test_explore_random_grid_is_seeded():
    a = random_grid(3, 6, seed=11)
    assert a == random_grid(3, 6, seed=11)
    assert all(isinstance(b, FromQuotientsSpec) and len(b.q) == 5 for b in a)


def test_explore_parallel(theta4):
    grid = default_grid() + random_grid(2, 8, seed=3)
    serial = explore_c1(theta4, grid, max_order=3, window=8)
    parallel = explore_c1(theta4, grid, max_order=3, window=8, workers=3)
    assert serial == parallel


def test_explore_empty_grid(theta4):
    with pytest.raises(DomainError):
        explore_c1(theta4, [], max_order=2, window=4)


def test_explore_command_with_random_grid():
    code, report = invoke("explore-c1", "--spec", THETA4, "--order", "3", "--window", "8", "--random-grid", "2")
    assert code == 2
    assert len(report["result"]["phase2"]) == 5
