import json

import pytest

from moyal.cli import cmd_quantize, main
from moyal.series import PRESETS
from moyal.verify import SUITES, VerifyParams, derive_seed, run_suite, run_verify

FAST = VerifyParams(max_degree=3, trials=5, dim=8, seed=7)


def test_derive_seed_is_stable_and_distinct():
    assert derive_seed(42, "dirac", "weyl") == derive_seed(42, "dirac", "weyl")
    assert derive_seed(42, "dirac", "weyl") != derive_seed(42, "dirac", "standard")
    assert derive_seed(42, "dirac", "weyl") != derive_seed(43, "dirac", "weyl")


def test_params_validation():
    with pytest.raises(ValueError):
        VerifyParams(trials=0).validate()
    with pytest.raises(ValueError):
        VerifyParams(dim=1).validate()


@pytest.mark.parametrize("suite", SUITES)
def test_every_suite_passes_for_weyl(suite):
    report = run_suite(suite, "weyl", FAST)
    assert report.passed, report.failures[:3]
    assert report.suite == suite and report.ordering == "weyl"


def test_dirac_single_trial():
    assert run_suite("dirac", "weyl", VerifyParams(trials=1)).passed


@pytest.mark.parametrize("name", ["standard", "antistandard"])
def test_reality_expect_fail(name):
    report = run_suite("adjoint-reality", name, FAST)
    assert report.expect_fail and report.passed
    first = report.counterexamples[0]
    assert first["inputs"]["a"] == "p*x"


@pytest.mark.parametrize("name", ["weyl", "symmetric", "born_jordan"])
def test_reality_holds(name):
    report = run_suite("adjoint-reality", name, FAST)
    assert not report.expect_fail and report.passed and not report.counterexamples


def test_counterexample_replays_through_quantize():
    report = run_suite("adjoint-reality", "standard", FAST)
    for record in report.counterexamples:
        assert cmd_quantize(record["inputs"]["a"], "standard") == record["expected"]


def test_output_is_byte_identical_for_same_seed(capsys):
    argv = ["verify", "--suites", "homomorphism,adjoint-reality", "--ordering", "weyl,standard", "--trials", "4"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first
    lines = [json.loads(line) for line in first.splitlines()]
    assert [(r["suite"], r["ordering"]) for r in lines] == [
        ("homomorphism", "weyl"),
        ("homomorphism", "standard"),
        ("adjoint-reality", "weyl"),
        ("adjoint-reality", "standard"),
    ]
    assert all("elapsed_ms" not in r for r in lines)


def test_timing_flag_adds_elapsed(capsys):
    assert main(["verify", "--suites", "dirac", "--ordering", "weyl", "--trials", "1", "--timing"]) == 0
    assert "elapsed_ms" in json.loads(capsys.readouterr().out)


def test_parallel_matches_serial():
    params = VerifyParams(max_degree=2, trials=3, dim=6, seed=1)
    suites = ["associativity", "classical-limit"]
    serial = [r.to_json() for r in run_verify(suites, PRESETS[:2], params)]
    parallel = [r.to_json() for r in run_verify(suites, PRESETS[:2], params, jobs=2)]
    assert serial == parallel


def test_failing_suite_exits_1(monkeypatch, capsys):
    from moyal import verify

    original = verify.SUITE_FUNCTIONS["dirac"]

    def broken(ordering, label, params, rng):
        report = original(ordering, label, params, rng)
        report.failures.append({"inputs": {}, "expected": "0", "actual": "1"})
        return report

    monkeypatch.setitem(verify.SUITE_FUNCTIONS, "dirac", broken)
    assert main(["verify", "--suites", "dirac", "--ordering", "weyl", "--trials", "1"]) == 1
    assert json.loads(capsys.readouterr().out)["passed"] is False


def test_custom_ordering_in_verify(tmp_path, capsys):
    path = tmp_path / "f.txt"
    path.write_text("1,0\n1/3,-1/5\n0,1/7\n")
    argv = ["verify", "--suites", "homomorphism,dirac,g-consistency", "--ordering", str(path), "--trials", "3"]
    assert main(argv) == 0
    assert all(json.loads(line)["passed"] for line in capsys.readouterr().out.splitlines())
