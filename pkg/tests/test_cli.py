import json

import pytest

from conjucyclic import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out), err


def test_factor_text(capsys):
    code, out, _ = run(capsys, "factor", "--q", "3", "--n", "11")
    assert code == 0
    assert "n0=22 ell=0" in out
    assert "divisors of x^22 - 1: 64" in out
    assert out.count("factor ") == 6


def test_factor_json_round_trip(capsys):
    code, blob, _ = run_json(capsys, "factor", "--q", "4", "--n", "11")
    assert code == 0
    assert blob["divisorCount"] == 27
    assert blob["multiplicity"] == 2
    assert len(blob["factors"]) == 3
    # deterministic emission: same bytes on a second run
    _, out1, _ = run(capsys, "factor", "--q", "4", "--n", "11", "--format", "json")
    _, out2, _ = run(capsys, "factor", "--q", "4", "--n", "11", "--format", "json")
    assert out1 == out2
    assert json.loads(json.dumps(blob, sort_keys=True)) == blob


def test_code_json_matches_reference(capsys, f9, ternary_code):
    g = ",".join(str(c) for c in ternary_code.g)
    code, blob, _ = run_json(capsys, "code", "--q", "3", "--n", "11", "--g", g)
    assert code == 0
    assert blob["genMatrix"] == [list(r) for r in ternary_code.gen_matrix]
    assert blob["dualMatrix"] == [
        list(r) for r in ternary_code.alternating_dual_matrix()
    ]


def test_exponent_and_coefficient_forms_agree(capsys):
    # canonical factors of x^4-1 over GF(3): x+1, x+2, x^2+1
    code1, blob1, _ = run_json(capsys, "code", "--q", "3", "--n", "2", "--exps", "1,1,0")
    code2, blob2, _ = run_json(capsys, "code", "--q", "3", "--n", "2", "--g", "2,0,1")
    assert code1 == code2 == 0
    assert blob1 == blob2


def test_weights_command(capsys):
    code, blob, _ = run_json(
        capsys, "weights", "--q", "3", "--n", "2", "--g", "1,1", "--workers", "2"
    )
    assert code == 0
    assert blob["card"] == "3^3"
    assert sum(blob["counts"]) == 27
    assert "elapsedMs" in blob


def test_dual_command(capsys):
    code, blob, _ = run_json(capsys, "dual", "--q", "4", "--n", "2", "--g", "1,1")
    assert code == 0
    assert blob["dualContaining"] is True
    assert len(blob["dualMatrix"]) == 1


def test_quantum_command(capsys):
    code, blob, _ = run_json(capsys, "quantum", "--q", "3", "--n", "2", "--g", "1")
    assert code == 0
    assert blob["stabilizer"] == {
        "n": 2,
        "kLogical": 2,
        "dLower": 1,
        "q": 3,
        "pure": True,
    }


def test_zero_code_report(capsys):
    code, blob, _ = run_json(capsys, "code", "--q", "3", "--n", "2", "--g", "2,0,0,0,1")
    assert code == 0
    assert blob["genMatrix"] == []
    assert len(blob["dualMatrix"]) == 4


def test_exit_codes(capsys):
    # not a prime power
    code, _, err = run(capsys, "factor", "--q", "6", "--n", "2")
    assert code == cli.EXIT_DOMAIN_ERROR and "prime" in err
    # not a divisor
    code, _, err = run(capsys, "code", "--q", "3", "--n", "2", "--g", "1,1,1")
    assert code == cli.EXIT_NOT_A_DIVISOR
    # wrong exponent count
    code, _, err = run(capsys, "code", "--q", "3", "--n", "2", "--exps", "1,1")
    assert code == cli.EXIT_NOT_A_DIVISOR
    # budget
    code, _, err = run(
        capsys, "weights", "--q", "3", "--n", "2", "--g", "1,1", "--budget", "2"
    )
    assert code == cli.EXIT_BUDGET_EXCEEDED
    # not dual-containing
    code, _, err = run(capsys, "quantum", "--q", "3", "--n", "2", "--g", "2,0,0,0,1")
    assert code == cli.EXIT_NOT_DUAL_CONTAINING
    # coefficient code out of range for the field
    code, _, err = run(capsys, "code", "--q", "3", "--n", "2", "--g", "99,1")
    assert code == cli.EXIT_DOMAIN_ERROR and "out of range" in err
    # n must be positive
    code, _, err = run(capsys, "factor", "--q", "3", "--n", "0")
    assert code == cli.EXIT_DOMAIN_ERROR


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["factor", "--q", "3"])  # missing --n
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        cli.main(["nonsense"])


def test_verify_budget_failure_exits_1(capsys):
    code, out, _ = run(capsys, "verify", "--budget", "100")
    assert code == cli.EXIT_VERIFY_FAILED
    assert "FAIL" in out


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0, out
    lines = [l for l in out.splitlines() if l.startswith(("ok", "FAIL"))]
    assert len(lines) == 12
    assert all(l.startswith("ok") for l in lines)
    assert "all checks passed" in out
