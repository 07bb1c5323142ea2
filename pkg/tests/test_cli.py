import json

import pytest

from qinduce.cli import main
from qinduce.finitegrp import dump_group_file, quaternion


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, want", [
    (["normalize", "v*x"], "x*v - 2*a*v"),
    (["normalize", "1"], "1"),
    (["normalize", "--algebra", "uq", "--a-order", "1", "N*P"], "-2*a*I*P + P*N + I"),
    (["pair", "--left", "1", "--right", "1"], "1"),
    (["pair", "--left", "N^2", "--right", "v^2"], "2"),
    (["counit", "x*v + 3"], "3"),
    (["antipode", "x"], "t*v - x"),
    (["act", "N", "x", "--side", "right", "--method", "closed"], "t"),
    (["act", "I", "mu", "--method", "dual"], "1"),
    (["act", "I*N", "mu*v", "--side", "right", "--method", "closed"], "1"),
])
def test_outputs(capsys, argv, want):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == want


def test_closed_and_dual_agree_on_words(capsys):
    for side in ("left", "right"):
        outs = [run(capsys, "act", "P*N + I^2", "mu^2*x*v", "--side", side, "--method", m)[1] for m in ("closed", "dual")]
        assert outs[0] == outs[1]


def test_unicode(capsys):
    assert run(capsys, "--unicode", "normalize", "mu*alpha")[1].strip() == "α*μ"


def test_parse_errors_exit_2(capsys):
    code, _, err = run(capsys, "normalize", "mu*N")
    assert code == 2 and "'N'" in err and "F_q" in err
    assert run(capsys, "normalize", "x +")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "coinduce", "--order", "1")[0] == 2
    assert run(capsys, "coinduce", "--alpha", "pi")[0] == 2


def test_verify_hopf_json_is_deterministic(capsys):
    code, first, _ = run(capsys, "verify", "hopf", "--max-degree", "2", "--json")
    _, second, _ = run(capsys, "--json", "verify", "hopf", "--max-degree", "2")
    assert code == 0 and first == second
    doc = json.loads(first)
    assert doc["command"] == "verify" and doc["passed"]
    assert doc["pass_count"] == doc["check_count"] == 5 * 15
    assert {"command", "inputs", "results", "pass_count", "check_count", "passed"} <= set(doc)


def test_verify_suites(capsys):
    for argv in (["verify", "actions"], ["verify", "coinduce", "--order", "5"],
                 ["verify", "pairing", "--max-degree", "1", "--a-order", "2"],
                 ["verify", "hopf", "--algebra", "uq", "--max-degree", "1", "--a-order", "2"]):
        code, out, _ = run(capsys, *argv)
        assert code == 0, out
        assert "FAIL" not in out


def test_coinduce_output(capsys):
    code, out, _ = run(capsys, "coinduce", "--order", "3", "--check")
    assert code == 0
    assert "P |- phi = (beta + alpha*E*v - 1/2*a*alpha^2*E^2*v^2 + 1/3*a^2*alpha^3*E^3*v^3) * phi" in out
    code, out, _ = run(capsys, "coinduce", "--beta", "0", "--order", "3", "--json")
    assert "E" not in json.loads(out)["results"][0]["operators"]["P"]


def test_induce_finite(capsys, tmp_path):
    code, out, _ = run(capsys, "induce-finite", "--group", "S3", "--subgroup", "1,2,4", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["results"][0]["dimension"] == 2
    code, out, _ = run(capsys, "induce-finite", "--group", "S3")
    assert code == 0 and "1,2,4" in out
    assert run(capsys, "induce-finite", "--group", "S3", "--subgroup", "1,2")[0] == 2
    path = tmp_path / "q8.txt"
    path.write_text(dump_group_file(quaternion()))
    code, out, _ = run(capsys, "induce-finite", "--group", str(path), "--subgroup", "1", "--check")
    assert code == 0 and "dimension 8" in out
    code, out, _ = run(capsys, "induce-finite", "--group", "Z4", "--subgroup", "1,2,3,4", "--rep", "1,i,-1,-i")
    assert code == 0 and "chi(2) = i" in out
    assert run(capsys, "induce-finite", "--group", "Z4", "--subgroup", "1,2,3,4", "--rep", "1,1,-1,1")[0] == 2
    assert run(capsys, "induce-finite", "--group", "nope.txt", "--subgroup", "1")[0] == 2


def test_dump_presentation_round_trip(capsys):
    from qinduce.galilei import FQ_DOCUMENT
    from qinduce.hopfcore import dump_presentation, load_presentation

    code, out, _ = run(capsys, "dump-presentation")
    assert code == 0 and out.rstrip("\n") == FQ_DOCUMENT
    code, out, _ = run(capsys, "dump-presentation", "--algebra", "uq", "--a-order", "2")
    assert dump_presentation(load_presentation(out)) == out.rstrip("\n")


def test_reconcile(capsys):
    code, out, _ = run(capsys, "reconcile", "--a-order", "3")
    assert code == 0
    assert "INCONSISTENT" in out and "M = exp(-aP)*I" in out
