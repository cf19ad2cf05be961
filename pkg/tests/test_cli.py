import io
import json
import subprocess
import sys

import pytest

from qnilpotent.cli import _wire, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    data = json.loads(out)
    assert data["schema"] == 1
    return data


def test_center_longest_a3():
    data = call_json("center", "--type", "A3", "--longest")
    assert data["dimension"] == 2
    assert [g["rendered"] for g in data["generators"]] == ["C1*C3", "C2"]


def test_corank_example():
    assert call_json("corank", "--a", "1", "--b", "1", "--c", "1")["corank"] == 1
    data = call_json("corank", "--a", "3", "--b", "1", "--c", "5", "--signs", "+,-,+")
    assert data["trace"] and data["config"] == "(3,+;1,-;5,+)"


def test_verify_quick_suite():
    data = call_json("verify", "--suite", "compatible", "--max-rank", "2")
    assert data["passed"] and data["suites"][0]["checked"] > 0


@pytest.mark.parametrize(
    "argv",
    [
        ("describe", "--type", "B2", "--longest"),
        ("describe", "--type", "A3", "--parabolic", "1,3"),
        ("covariants", "--type", "A2", "--word", "1,2,1"),
        ("pidegree", "--type", "A3", "--word", "1,2,3,1,2,1", "--m", "5", "--report"),
        ("double-schubert", "--type", "A2", "--wa", "1", "--wc", "1,2,1"),
        ("center-w", "--type", "A2", "--factors", "1,2;1"),
    ],
)
def test_verbs_round_trip(argv):
    data = call_json(*argv)
    # output parses back and re-serializes identically
    assert json.loads(json.dumps(data)) == data
    code, text, _ = call("--format", "text", *argv)
    assert code == 0 and text.strip()
    code, text2, _ = call(*argv, "--format", "text")
    assert code == 0 and text2 == text


def test_parabolic_word():
    data = call_json("describe", "--type", "A3", "--parabolic", "1,3")
    assert data["length"] == 4


@pytest.mark.parametrize(
    "argv,needle",
    [
        (("center", "--type", "A3", "--word", "1,1"), "not reduced"),
        (("center", "--type", "A3", "--word", "1", "--longest"), "not allowed"),
        (("center", "--type", "Q3", "--longest"), "Lie type"),
        (("corank", "--a", "0", "--b", "0", "--c", "0"), "nonempty"),
        (("corank", "--a", "1", "--b", "1", "--c", "1", "--signs", "+,+"), "signs"),
        (("pidegree", "--type", "A2", "--longest", "--m", "0"), "m must"),
        (("double-schubert", "--type", "A2", "--wa", "1,2,1", "--wc", "1,2,1"), "prefix"),
        (("center-w", "--type", "A2", "--factors", "1;2;1"), "support"),
        (("verify", "--suite", "nope"), "invalid choice"),
        (("frobnicate",), "invalid choice"),
    ],
)
def test_invalid_input_exits_1(argv, needle):
    code, out, err = call(*argv)
    assert code == 1 and out == ""
    assert needle in err


def test_audit_failure_exits_2(monkeypatch):
    from qnilpotent import cli
    from qnilpotent.audits import SuiteResult

    def broken(name, max_rank, seed):
        res = SuiteResult(name)
        res.check(False, "forced")
        return res

    monkeypatch.setattr(cli, "run_suite", broken)
    code, out, err = call("verify", "--suite", "engine")
    assert code == 2 and "engine" in err
    assert json.loads(out)["passed"] is False


def test_big_integers_become_strings():
    assert _wire({"x": 2 ** 70, "y": [-(2 ** 63) - 1, 5]}) == {"x": str(2 ** 70), "y": [str(-(2 ** 63) - 1), 5]}
    assert _wire(2 ** 63 - 1) == 2 ** 63 - 1


def test_deterministic_output():
    assert call("verify", "--suite", "moves")[1] == call("verify", "--suite", "moves")[1]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qnilpotent", "center", "--type", "A2", "--longest"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["dimension"] == 1
