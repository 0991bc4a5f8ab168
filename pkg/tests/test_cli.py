"""Command-line behavior: payloads, exit codes, piping, determinism."""

import json
import subprocess
import sys

import pytest

from sx.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_fixture(capsys):
    code, out, _ = run_cli(capsys, "info", "fixtures:bl_sigma3_16")
    assert code == 0
    payload = json.loads(out)
    assert payload["f_vector"] == [16, 106, 180, 90]
    assert payload["dimension"] == 3


def test_homology_poincare_sphere(capsys):
    code, out, _ = run_cli(capsys, "homology", "--field", "0", "fixtures:bl_sigma3_16")
    assert code == 0
    assert json.loads(out) == {"field": "Q", "reduced_betti": [0, 0, 0, 1]}


def test_classify(capsys):
    code, out, _ = run_cli(capsys, "classify", "fixtures:ziegler_b2")
    assert code == 0
    payload = json.loads(out)
    assert payload["normal_pseudomanifold"] and not payload["closed"]


def test_certify_shelled_refuted_exit_code(capsys):
    code, out, _ = run_cli(capsys, "certify", "shelled", "-k", "3", "fixtures:ziegler_b2")
    assert code == 1
    assert json.loads(out)["status"] == "REFUTED"


def test_certify_stellated_proved(capsys):
    code, out, _ = run_cli(capsys, "certify", "stellated", "-k", "1", "fixtures:ziegler_s2_10")
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "PROVED"
    assert payload["certificate"]["kind"] == "bistellar"


def test_flips_empty_on_dfm(capsys):
    code, out, _ = run_cli(capsys, "flips", "--lo", "1", "--hi", "3", "fixtures:dfm_s3_16")
    assert code == 0
    assert json.loads(out)["count"] == 0


def test_stacked_ball_dispatch(capsys):
    code, out, _ = run_cli(capsys, "stacked", "-k", "2", "fixtures:dfm_b4_16")
    assert code == 0
    assert json.loads(out)["status"] == "PROVED"


def test_stacked_sphere_with_candidate(capsys, tmp_path):
    code, out, _ = run_cli(
        capsys, "stacked", "-k", "2", "--candidate", "fixtures:dfm_b4_16", "fixtures:dfm_s3_16"
    )
    assert code == 0
    assert json.loads(out)["status"] == "PROVED"


def test_generate_and_bar_round_trip(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "generate", "klee-novik", "1", "4")
    assert code == 0
    m = tmp_path / "m.json"
    m.write_text(out)
    code, out2, _ = run_cli(capsys, "bar", "-k", "1", "--manifold", str(m))
    assert code == 0
    code, out3, _ = run_cli(capsys, "generate", "klee-novik-bar", "1", "4")
    assert json.loads(out2)["facets"] == json.loads(out3)["facets"]


def test_aut_order_via_pipe():
    gen = subprocess.run(
        [sys.executable, "-m", "sx.cli", "generate", "klee-novik", "1", "3"],
        capture_output=True,
        text=True,
        check=True,
    )
    aut = subprocess.run(
        [sys.executable, "-m", "sx.cli", "aut", "-"],
        input=gen.stdout,
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(aut.stdout)["order"] == 20


def test_iso_exit_codes(capsys, tmp_path):
    a = tmp_path / "a.fac"
    b = tmp_path / "b.fac"
    a.write_text("1 2\n2 3\n3 1\n")
    b.write_text("x y\ny z\nz x\n")
    code, out, _ = run_cli(capsys, "iso", str(a), str(b))
    assert code == 0
    assert json.loads(out)["isomorphic"]
    c = tmp_path / "c.fac"
    c.write_text("1 2\n2 3\n")
    code, out, _ = run_cli(capsys, "iso", str(a), str(c))
    assert code == 1


def test_sum_command(capsys, tmp_path):
    a = tmp_path / "a.fac"
    b = tmp_path / "b.fac"
    a.write_text("1 2 3\n1 2 4\n1 3 4\n2 3 4\n")
    b.write_text("5 6 7\n5 6 8\n5 7 8\n6 7 8\n")
    code, out, _ = run_cli(capsys, "sum", str(a), str(b))
    assert code == 0
    payload = json.loads(out)
    assert len(payload["facets"]) == 6


def test_fixtures_export_fac(capsys, tmp_path):
    out_path = tmp_path / "z.fac"
    code, _, _ = run_cli(capsys, "fixtures", "export", "ziegler_s2_10", str(out_path))
    assert code == 0
    code, out, _ = run_cli(capsys, "info", str(out_path))
    assert json.loads(out)["facets"] == 16


def test_usage_error_exit_64(capsys):
    with pytest.raises(SystemExit) as err:
        main(["certify", "bogus-kind", "fixtures:lutz_b1"])
    assert err.value.code == 64


def test_parse_error_exit_65(capsys, tmp_path):
    bad = tmp_path / "bad.fac"
    bad.write_text("# only comments\n")
    code, _, err = run_cli(capsys, "info", str(bad))
    assert code == 65
    assert "error" in err


def test_unknown_fixture_exit_65(capsys):
    code, _, _ = run_cli(capsys, "info", "fixtures:not_a_fixture")
    assert code == 65


def test_determinism_of_randomized_command(capsys):
    args = ("certify", "collapsible", "--seed", "7", "fixtures:ziegler_b2")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["seed"] == 7


def test_verify_paper_single_criterion(capsys):
    code, out, err = run_cli(capsys, "verify-paper", "--criteria", "1", "--pretty")
    assert code == 0
    payload = json.loads(out)
    assert payload["criteria"][0]["passed"]
    assert "criterion 1" in err


def test_aut_guard_flag(capsys, tmp_path):
    code, out, err = run_cli(
        capsys, "aut", "--guard-vertices", "3", "fixtures:lutz_s2_8"
    )
    assert code == 65
    assert "guard" in err


def test_generate_standard_objects(capsys):
    code, out, _ = run_cli(capsys, "generate", "standard-sphere", "3")
    assert code == 0
    assert len(json.loads(out)["facets"]) == 5
    code, out, _ = run_cli(capsys, "generate", "standard-ball", "4", "--format", "fac")
    assert code == 0
    assert out.strip().splitlines()[-1] == "1 2 3 4 5"


def test_certify_one_stacked_cli(capsys):
    code, out, _ = run_cli(capsys, "certify", "one-stacked", "fixtures:ziegler_b1")
    assert code == 0
    assert json.loads(out)["status"] == "PROVED"


def test_fixtures_export_json_to_stdout(capsys):
    code, out, _ = run_cli(
        capsys, "fixtures", "export", "lutz_s2_8", "-", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["name"] == "lutz_s2_8"
    assert len(payload["facets"]) == 12


def test_verify_paper_multiple_criteria(capsys):
    code, out, _ = run_cli(capsys, "verify-paper", "--criteria", "1,8")
    assert code == 0
    payload = json.loads(out)
    assert [c["criterion"] for c in payload["criteria"]] == ["1", "8"]
    assert all(c["passed"] for c in payload["criteria"])
