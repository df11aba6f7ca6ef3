"""CLI behaviour: exit codes, formats, determinism, golden files."""

import json
import os
import subprocess
import sys

import pytest

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([sys.executable, "-m", "shortloc.cli", *args],
                          capture_output=True, text=True, env=env, timeout=300)


def test_bseq_matches_growth_sequence():
    res = run_cli("bseq", "--e", "3", "--a", "1", "--n", "6")
    assert res.returncode == 0
    assert res.stdout.strip() == "1 3 8 21 55 144 377"


def test_bseq_closed_form_flag():
    res = run_cli("bseq", "--e", "3", "--a", "1", "--n", "20", "--closed-form")
    assert res.returncode == 0


def test_bseq_csv():
    res = run_cli("bseq", "--e", "2", "--a", "0", "--n", "3", "--format", "csv")
    assert res.stdout.splitlines() == ["n,b_n", "0,1", "1,2", "2,4", "3,8"]


def test_algebra_info_text():
    res = run_cli("algebra", "info", "lambda_c")
    assert res.returncode == 0
    assert "hilbert_type: [3, 2]" in res.stdout
    assert "self_injective: False" in res.stdout


def test_algebra_preset_roundtrip(tmp_path):
    out = tmp_path / "alg.json"
    res = run_cli("algebra", "preset", "ex15_1", "--e", "3", "--a", "2",
                  "-o", str(out))
    assert res.returncode == 0 and out.exists()
    res2 = run_cli("algebra", "validate", str(out), "--format", "json")
    assert res2.returncode == 0
    payload = json.loads(res2.stdout)
    assert payload["values"]["hilbert_type"] == [3, 2]


def test_check_exit_codes():
    res = run_cli("check", "torsionless", "malpha:2", "--algebra", "lambda_c")
    assert res.returncode == 1 and res.stdout.strip() == "false"
    res = run_cli("check", "gp", "malpha:0", "--algebra", "lambda_c", "--bound", "10")
    assert res.returncode == 0 and res.stdout.strip() == "true"
    res = run_cli("check", "semigp", "malpha:2", "--algebra", "lambda_c")
    assert res.returncode == 0
    res = run_cli("check", "solid", "radical", "--algebra", "ex3_4")
    assert res.returncode == 0


def test_usage_error_exit_code():
    res = run_cli("algebra", "info", "not_a_preset")
    assert res.returncode == 2
    assert "error" in res.stderr


def test_bad_parameter_values_are_usage_errors():
    res = run_cli("check", "semigp", "simple", "--algebra", "L:e=2", "--bound", "0")
    assert res.returncode == 2
    res = run_cli("compute", "ext:x:simple", "simple", "--algebra", "L:e=2")
    assert res.returncode == 2
    res = run_cli("betti", "simple", "--algebra", "L:e=2", "--n", "2", "--cap", "0")
    assert res.returncode == 2


def test_resource_cap_exit_code():
    res = run_cli("betti", "simple", "--algebra", "L:e=3", "--n", "12", "--cap", "100")
    assert res.returncode == 3


def test_resource_cap_env_override():
    res = run_cli("betti", "simple", "--algebra", "L:e=3", "--n", "6",
                  env_extra={"SHORTLOC_CAP": "100"})
    assert res.returncode == 3


def test_module_make_and_compute_from_file(tmp_path):
    mod = tmp_path / "m.json"
    res = run_cli("module", "make", "malpha:1", "--algebra", "lambda_c",
                  "-o", str(mod))
    assert res.returncode == 0 and mod.exists()
    res2 = run_cli("compute", "syzygy", str(mod), "--format", "json")
    assert res2.returncode == 0
    payload = json.loads(res2.stdout)
    assert payload["values"]["dim_vector"] == [2, 1]


def test_compute_mho_flags_non_torsionless():
    res = run_cli("compute", "mho", "malpha:2", "--algebra", "lambda_c",
                  "--format", "json")
    payload = json.loads(res.stdout)
    assert "not_torsionless" in payload["flags"]


def test_compute_ext_op():
    res = run_cli("compute", "ext:1:simple", "simple", "--algebra", "L:e=2")
    assert res.returncode == 0
    assert res.stdout.strip() == "ext^1: 2"


def test_compute_dual_lands_over_opposite():
    res = run_cli("compute", "dual", "cyclic:0,1,0,0,0,0", "--algebra",
                  "ex15_1:e=3,a=2", "--format", "json")
    payload = json.loads(res.stdout)
    assert payload["values"]["dim_vector"] == [1, 2]


def test_explore_omega_table():
    res = run_cli("explore", "omega", "simple", "--algebra", "ex8_3", "--n", "2")
    assert res.returncode == 0
    assert len(res.stdout.splitlines()) == 4  # header + 3 steps


def test_json_output_is_deterministic():
    args = ("explore", "complex", "malpha:0", "--algebra", "lambda_c",
            "--back", "3", "--fwd", "3", "--format", "json")
    out1 = run_cli(*args).stdout
    out2 = run_cli(*args).stdout
    assert out1 == out2


@pytest.mark.parametrize("name,args", [
    ("bseq_e3_a1_n6.json",
     ("bseq", "--e", "3", "--a", "1", "--n", "6", "--format", "json")),
    ("algebra_info_lambda_c.json",
     ("algebra", "info", "lambda_c", "--format", "json")),
    ("betti_ex8_3.json",
     ("betti", "simple", "--algebra", "ex8_3", "--n", "2", "--format", "json")),
    ("explore_complex_ex9_3.json",
     ("explore", "complex", "cyclic:0,1,0,0", "--algebra", "ex9_3",
      "--back", "3", "--fwd", "3", "--format", "json")),
    ("dual_malpha1_lambda.json",
     ("compute", "dual", "malpha:1", "--algebra", "lambda_c", "--format", "json")),
])
def test_golden_files(name, args):
    with open(os.path.join(GOLDEN, name)) as fh:
        expected = fh.read()
    res = run_cli(*args)
    assert res.returncode == 0
    assert res.stdout == expected


def test_module_make_random_is_deterministic(tmp_path):
    a_path, b_path = tmp_path / "a.json", tmp_path / "b.json"
    run_cli("module", "make", "random:2,1", "--algebra", "ex9_3", "--seed", "5",
            "-o", str(a_path))
    run_cli("module", "make", "random:2,1", "--algebra", "ex9_3", "--seed", "5",
            "-o", str(b_path))
    assert a_path.read_text() == b_path.read_text()


def test_compute_transpose():
    res = run_cli("compute", "transpose", "simple", "--algebra", "L:e=2",
                  "--format", "json")
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert payload["values"]["dim"] == 5 and payload["values"]["top"] == 2


def test_explore_mho_walk():
    res = run_cli("explore", "mho", "malpha:2", "--algebra", "lambda_c", "--n", "2")
    assert res.returncode == 0
    assert "terminated: not_torsionless" in res.stdout


def test_check_reflexive_and_aligned():
    res = run_cli("check", "reflexive", "cyclic:0,1,0,0,0,0", "--algebra",
                  "ex15_1:e=3,a=2")
    assert res.returncode == 0 and res.stdout.strip() == "true"
    res = run_cli("check", "aligned", "malpha:1", "--algebra", "lambda_c")
    assert res.returncode == 1 and res.stdout.strip() == "false"
    res = run_cli("check", "inftf", "malpha:1", "--algebra", "lambda_c")
    assert res.returncode == 0


def test_bseq_closed_form_precondition():
    res = run_cli("bseq", "--e", "2", "--a", "1", "--n", "4", "--closed-form")
    assert res.returncode == 2
    assert "HypothesisNotMet" in res.stderr


def test_verify_paper_fast_suite_exits_clean():
    res = run_cli("verify-paper", "--suite", "fast")
    assert res.returncode == 0, res.stdout + res.stderr
    lines = res.stdout.splitlines()
    assert sum(1 for ln in lines if ln.startswith("PASS")) == 14
    assert not any(ln.startswith("FAIL") for ln in lines)
