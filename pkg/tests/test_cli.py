"""The qgue command-line tool."""

import json

import pytest

from qgue.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_moment_power_sum(capsys):
    code, out, _ = run(capsys, "moment", "--power-sum", "2", "--n-vars", "2", "--method", "fast")
    assert code == 0 and out == "2+q+q^2\n"


def test_moment_schur_oracle(capsys):
    code, out, _ = run(capsys, "moment", "--schur", "1,1", "--n-vars", "2", "--method", "oracle")
    assert code == 0 and out == "-1\n"


def test_moment_at_q(capsys):
    code, out, _ = run(capsys, "moment", "--power-sum", "4", "--n-vars", "2", "--at-q", "1")
    assert code == 0 and out == "18\n"


def test_moment_methods_agree(capsys):
    outs = []
    for method in ("fast", "oracle"):
        code, out, _ = run(
            capsys, "moment", "--schur", "2,2", "--n-vars", "3", "--method", method
        )
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_moment_json_round_trip(capsys):
    code, out, _ = run(
        capsys, "moment", "--power-sum", "2", "--n-vars", "2", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["value"] == "2+q+q^2"
    assert json.dumps(obj, indent=2, sort_keys=True) + "\n" == out


def test_moment_latex(capsys):
    code, out, _ = run(capsys, "moment", "--hermite-sq", "0,3", "--format", "latex")
    assert code == 0 and out == "q^{3}[3]_q[2]_q\n"


def test_moment_closed_banner(capsys):
    code, out, err = run(
        capsys, "moment", "--power-sum", "2", "--n-vars", "2", "--method", "closed"
    )
    assert code == 0 and out == "q+q^2\n"
    assert "unverified" in err


def test_moment_hermite_sq(capsys):
    code, out, _ = run(capsys, "moment", "--hermite-sq", "1,1")
    assert code == 0 and out == "1+q+q^2\n"


def test_moment_errors(capsys):
    code, _, err = run(capsys, "moment", "--power-sum", "3", "--n-vars", "2")
    assert code == 2 and "even" in err
    code, _, err = run(capsys, "moment", "--schur", "1,1", "--n-vars", "6", "--method", "oracle")
    assert code == 2 and "oracle" in err
    code, _, err = run(capsys, "moment", "--schur", "1,1,1", "--n-vars", "2")
    assert code == 2
    code, _, err = run(capsys, "moment", "--schur", "2,2", "--method", "closed", "--n-vars", "2")
    assert code == 2 and "hook" in err
    with pytest.raises(SystemExit) as exc:
        main(["moment"])
    assert exc.value.code == 2


def test_verify_clean_suite(capsys, tmp_path):
    report = tmp_path / "report.json"
    code, out, _ = run(
        capsys,
        "verify",
        "--suite",
        "theorem3",
        "--max-weight",
        "4",
        "--max-vars",
        "3",
        "--report",
        str(report),
    )
    assert code == 0
    assert "theorem3" in out
    obj = json.loads(report.read_text())
    assert obj["summary"]["discrepant"] == 0


def test_verify_discrepant_suite(capsys, tmp_path):
    report = tmp_path / "report.json"
    code, out, _ = run(
        capsys,
        "verify",
        "--suite",
        "theorem4",
        "--max-weight",
        "4",
        "--max-vars",
        "2",
        "--report",
        str(report),
    )
    assert code == 1
    obj = json.loads(report.read_text())
    assert obj["summary"]["discrepant"] > 0
    points = obj["suites"][0]["points"]
    assert any(
        p["params"] == {"N": 1, "ell": 1, "m": 1} and p.get("ratio") == "-1"
        for p in points
    )


def test_verify_json_stdout(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "qhz", "--max-weight", "2", "--max-n", "1",
        "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["summary"]["discrepant"] == 0


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--harer-zagier", "--max-m", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert "match" in lines[1] and "5,10" in lines[3]


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--harer-zagier", "--max-m", "2", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj[1]["coefficients"] == {"0": 2, "1": 1}
    assert obj[1]["match"] is True


def test_table_guardrail(capsys):
    code, _, err = run(capsys, "table", "--harer-zagier", "--max-m", "7")
    assert code == 2 and "max_m" in err
    code, _, err = run(capsys, "table", "--max-m", "2")
    assert code == 2
