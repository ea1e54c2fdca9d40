import json
from fractions import Fraction

from hurwitzdiv.cli import main
from hurwitzdiv.serialize import dumps_canonical


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_class_json_delta_tau(capsys):
    code, out, _ = run(capsys, "class", "delta-tau", "--k", "1")
    assert code == 0
    obj = json.loads(out)
    assert obj["coefficients"] == {"E0": {"const": "2/1"}, "E_1_0": {"const": "1/1"}}
    assert obj["normalization"] == "raw"


def test_class_json_phi_lambda(capsys):
    code, out, _ = run(capsys, "class", "phi-lambda", "--k", "1")
    assert code == 0
    obj = json.loads(out)
    assert obj["coefficients"] == {"E0": {"const": "1/5"}, "E_1_0": {"const": "1/5"}}


def test_class_csv_phi_delta(capsys):
    code, out, _ = run(capsys, "class", "phi-delta:1", "--k", "3", "--format", "csv")
    assert code == 0
    assert out == "E_1_0,5/1\n"


def test_class_json_round_trip_bytes(capsys):
    code, out, _ = run(capsys, "class", "p-q-kappa", "--k", "2", "--normalized")
    assert code == 0
    obj = json.loads(out)
    assert obj["normalization"] == "per-factorial-b"
    assert dumps_canonical(obj) == out


def test_class_unknown_name(capsys):
    code, _, err = run(capsys, "class", "no-such-class", "--k", "1")
    assert code == 2
    assert "unknown class" in err


def test_class_range_error(capsys):
    code, _, err = run(capsys, "class", "phi-delta:99", "--k", "2")
    assert code == 2
    assert "out of range" in err


def test_class_normalized_rejected_for_pullbacks(capsys):
    code, _, err = run(capsys, "class", "delta-tau", "--k", "1", "--normalized")
    assert code == 2
    assert "--normalized" in err


def test_class_q_rows(capsys):
    code, out, _ = run(capsys, "class", "q-T3j:2", "--k", "3", "--format", "csv")
    assert code == 0
    assert out == "E_2_0,3/1\nE_2_1,1/1\n"
    code, out, _ = run(capsys, "class", "q-T2", "--k", "1", "--format", "csv")
    assert code == 0
    assert out == "E0,1/1\n"


def test_verify_small_range_passes(capsys):
    code, out, _ = run(capsys, "verify", "--k-min", "1", "--k-max", "2")
    assert code == 0
    assert "0 failed" in out
    assert "SKIP" in out  # delta-j-checks without externals


def test_verify_selected_checks(capsys):
    code, out, _ = run(
        capsys, "verify", "--k-min", "3", "--k-max", "4", "--checks", "closed-forms"
    )
    assert code == 0
    assert "closed-forms" in out
    assert "FAIL" not in out


def test_verify_unknown_check(capsys):
    code, _, err = run(
        capsys, "verify", "--k-min", "1", "--k-max", "1", "--checks", "bogus"
    )
    assert code == 2
    assert "unknown check" in err


def test_verify_bad_range(capsys):
    code, _, err = run(capsys, "verify", "--k-min", "3", "--k-max", "2")
    assert code == 2


def test_verify_with_externals_runs_delta_j(tmp_path, capsys):
    path = tmp_path / "ext.json"
    path.write_text(
        json.dumps(
            {
                "schema": "external-coeffs/1",
                "k": 1,
                "c": {"1": "-20"},
                "b": {"1": "0"},
            }
        ),
        encoding="utf-8",
    )
    code, out, _ = run(
        capsys,
        "verify",
        "--k-min",
        "1",
        "--k-max",
        "1",
        "--checks",
        "delta-j-checks",
        "--externals",
        str(path),
    )
    assert code == 0
    assert "PASS" in out and "SKIP" not in out


def test_verify_externals_violation_fails(tmp_path, capsys):
    path = tmp_path / "ext.json"
    path.write_text(
        json.dumps(
            {
                "schema": "external-coeffs/1",
                "k": 1,
                "c": {"1": "0"},
                "b": {"1": "0"},
            }
        ),
        encoding="utf-8",
    )
    code, out, _ = run(
        capsys,
        "verify",
        "--k-min",
        "1",
        "--k-max",
        "1",
        "--checks",
        "delta-j-checks",
        "--externals",
        str(path),
    )
    assert code == 1
    assert "FAIL" in out


def test_verify_malformed_externals(tmp_path, capsys):
    path = tmp_path / "ext.json"
    path.write_text('{"schema": "external-coeffs/1", "k": 2, "c": {"1": "0"}}')
    code, _, err = run(
        capsys, "verify", "--k-min", "1", "--k-max", "1", "--externals", str(path)
    )
    assert code == 2


def test_slope_trace(capsys):
    code, out, _ = run(
        capsys, "slope", "--k", "3", "--s-prime", "12", "--variant", "trace"
    )
    assert code == 0
    assert out == "489/59 ≈ 8.288136 validity=unknown\n"


def test_slope_kappa(capsys):
    code, out, _ = run(capsys, "slope", "--k", "3", "--variant", "kappa")
    assert code == 0
    assert out.startswith("33/4 ≈ 8.250000")
    code, out, _ = run(capsys, "slope", "--k", "1", "--variant", "kappa")
    assert code == 0
    assert out.startswith("21/2 ≈ 10.500000")


def test_slope_reduced(capsys):
    code, out, _ = run(
        capsys, "slope", "--k", "3", "--s-prime", "12", "--variant", "reduced"
    )
    assert code == 0
    assert out.startswith("224/27 ≈ 8.296296")


def test_slope_pole_exit_code(capsys):
    code, _, err = run(
        capsys, "slope", "--k", "3", "--s-prime", "214/67", "--variant", "trace"
    )
    assert code == 2


def test_slope_missing_s_prime(capsys):
    code, _, err = run(capsys, "slope", "--k", "3", "--variant", "trace")
    assert code == 2
    assert "--s-prime" in err


def test_slope_bad_rational(capsys):
    code, _, err = run(
        capsys, "slope", "--k", "3", "--s-prime", "twelve", "--variant", "trace"
    )
    assert code == 2


def test_m0n_count(capsys):
    code, out, _ = run(capsys, "m0n", "--b", "6", "count")
    assert (code, out) == (0, "25\n")


def test_m0n_normalize(capsys):
    code, out, _ = run(capsys, "m0n", "--b", "6", "normalize", "1,2")
    assert (code, out) == (0, "{3,4,5,6}\n")


def test_m0n_intersect(capsys):
    code, out, _ = run(capsys, "m0n", "--b", "8", "intersect", "4,5", "6,7")
    assert (code, out) == (0, "nonempty\n")
    code, out, _ = run(capsys, "m0n", "--b", "8", "intersect", "4,5", "5,6")
    assert (code, out) == (0, "empty\n")


def test_m0n_malformed_set(capsys):
    code, _, err = run(capsys, "m0n", "--b", "6", "normalize", "1,x")
    assert code == 2
    code, _, err = run(capsys, "m0n", "--b", "6", "normalize", "1")
    assert code == 2
    code, _, err = run(capsys, "m0n", "--b", "6", "intersect", "1,2")
    assert code == 2


def test_table_genus_csv(capsys):
    code, out, _ = run(
        capsys, "table", "--quantity", "genus", "--k-min", "1", "--k-max", "3",
        "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k,g,d,b,g_prime,g_hat,prym_dim"
    assert "2,4,3,12,13,4,9" in lines


def test_table_kappa_slope_md(capsys):
    code, out, _ = run(
        capsys, "table", "--quantity", "kappa-slope", "--k-min", "1", "--k-max", "5",
        "--format", "md",
    )
    assert code == 0
    for k in range(1, 6):
        expected = Fraction(3 * (2 * k + 5), k + 1)
        assert f"| {expected.numerator}/{expected.denominator} |" in out


def test_table_coefficients_json(capsys):
    code, out, _ = run(
        capsys, "table", "--quantity", "coefficients:delta-tau", "--k-min", "3",
        "--k-max", "5",
    )
    assert code == 0
    rows = json.loads(out)
    assert {"k": "3", "generator": "E3", "coefficient": "4/1"} in rows


def test_table_slope_bound(capsys):
    code, out, _ = run(
        capsys, "table", "--quantity", "slope-bound", "--k-min", "1", "--k-max", "4",
        "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k,trace_slope_s11,reduced_slope_s11,bound_6_20_g"
    assert all(not line.startswith(("1,", "2,")) for line in lines[1:])
    assert any(line.startswith("3,") for line in lines)


def test_table_unknown_quantity(capsys):
    code, _, err = run(
        capsys, "table", "--quantity", "bogus", "--k-min", "1", "--k-max", "2"
    )
    assert code == 2


def test_table_normalized_misuse(capsys):
    code, _, err = run(
        capsys, "table", "--quantity", "genus", "--k-min", "1", "--k-max", "2",
        "--normalized",
    )
    assert code == 2


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run(
        capsys, "class", "delta-tau", "--k", "1", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    obj = json.loads(target.read_text(encoding="utf-8"))
    assert obj["k"] == 1
