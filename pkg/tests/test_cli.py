import hashlib
import json
from importlib import resources

import pytest
from click.testing import CliRunner

from hopfcleft.cli import main

import hopfcleft

DATA_DIR = str(resources.files(hopfcleft).joinpath("data"))

CLASSICAL_COCYCLE = """\
field: Q
space A: 1
space H: 1 g
tensor A_mul mul@A: (1, 1, 1)
tensor A_unit unit@A: (1, 1, 1)
tensor H_antipode antipode@H: (1, 1, 1) (g, g, 1)
tensor H_comul comul@H: (1.1, 1, 1) (g.g, g, 1)
tensor H_counit counit@H: (1, 1, 1) (1, g, 1)
tensor H_mul mul@H: (1, 1.1, 1) (1, g.g, 1) (g, 1.g, 1) (g, g.1, 1)
tensor H_unit unit@H: (1, 1, 1)
tensor M_nu measuring@H,A: (1, 1, 1) (1, g, 1)
tensor SIG cocycle@H,A: (1, 1.1, 1) (1, 1.g, 1) (1, g.1, 1) (1, g.g, -1)
role cocycle C: measuring=M sigma=SIG
role hopf_algebra KC2: antipode=H_antipode comul=H_comul counit=H_counit mul=H_mul space=H unit=H_unit
role measuring M: hopf=KC2 mul=A_mul nu=M_nu space=A unit=A_unit
"""


@pytest.fixture(scope="module")
def cocycle_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "classical_cocycle.had"
    path.write_text(CLASSICAL_COCYCLE)
    return str(path)


@pytest.fixture()
def runner():
    return CliRunner()


def run(runner, args, **kwargs):
    return runner.invoke(main, args, catch_exceptions=False, **kwargs)


def test_verify_hopf_passes_on_shipped_files(runner):
    for name in ("kc2_q.had", "kc4_zeta4.had", "qline_kc2_f3.had"):
        result = run(runner, ["verify-hopf", name, "--role", "KC2"]
                     if name == "qline_kc2_f3.had" else ["verify-hopf", name],
                     env={"HOPFCLEFT_FIXTURE_DIR": DATA_DIR})
        assert result.exit_code == 0, result.output


def test_verify_graded_role(runner):
    result = run(runner, ["verify-hopf", "qline_kc4_f5.had", "--role", "R"],
                 env={"HOPFCLEFT_FIXTURE_DIR": DATA_DIR})
    assert result.exit_code == 0, result.output


def test_verify_yd(runner):
    result = run(runner, ["verify-yd", "qline_kc4_f5.had"],
                 env={"HOPFCLEFT_FIXTURE_DIR": DATA_DIR})
    assert result.exit_code == 0, result.output


def test_json_reports_are_byte_deterministic(runner):
    digests = set()
    for _ in range(3):
        result = run(runner, ["verify-hopf", "qline_kc2_f3.had", "--role", "KC2",
                              "--report", "json"],
                     env={"HOPFCLEFT_FIXTURE_DIR": DATA_DIR})
        assert result.exit_code == 0
        digests.add(hashlib.sha256(result.output.encode()).hexdigest())
        payload = json.loads(result.output)
        assert payload["ok"] is True
        assert all(item["ok"] for item in payload["items"])
    assert len(digests) == 1


def test_verify_cocycle_passes(runner, cocycle_file):
    result = run(runner, ["verify-cocycle", cocycle_file])
    assert result.exit_code == 0, result.output


def test_corrupted_cocycle_fails_with_named_relation(runner, tmp_path, cocycle_file):
    # breaking sigma(1, g) keeps invertibility but kills the cocycle relations
    bad = CLASSICAL_COCYCLE.replace("(1, 1.g, 1)", "(1, 1.g, 2)")
    path = tmp_path / "bad.had"
    path.write_text(bad)
    result = run(runner, ["verify-cocycle", str(path)])
    assert result.exit_code == 1
    assert "(5)" in result.output or "(6)" in result.output or "(7)" in result.output


def test_parse_error_exits_2(runner, tmp_path):
    path = tmp_path / "broken.had"
    path.write_text("space H: 1 g\n")
    result = run(runner, ["verify-hopf", str(path)])
    assert result.exit_code == 2


def test_missing_file_exits_2(runner):
    result = run(runner, ["verify-hopf", "no_such_file.had"])
    assert result.exit_code == 2


def test_verify_measuring(runner, cocycle_file):
    result = run(runner, ["verify-measuring", cocycle_file])
    assert result.exit_code == 0, result.output


def test_crossed_product_output_round_trips(runner, tmp_path, cocycle_file):
    out = tmp_path / "crossed.had"
    result = run(runner, ["crossed-product", cocycle_file, "--out", str(out)])
    assert result.exit_code == 0, result.output
    # the emitted cleft extension verifies and returns the cocycle values
    back = run(runner, ["cocycle-from-cleft", str(out)])
    assert back.exit_code == 0, back.output
    assert "sigma(g.g) = -1" in back.output
    coinv = run(runner, ["coinvariants", str(out)])
    assert coinv.exit_code == 0
    assert "dimension: 1" in coinv.output


def test_round_trip_command(runner, cocycle_file):
    result = run(runner, ["round-trip", cocycle_file])
    assert result.exit_code == 0, result.output


def test_bosonize_writes_a_hopf_file(runner, tmp_path):
    out = tmp_path / "boson.had"
    result = run(runner, ["bosonize", "qline_kc2_f3.had", "--out", str(out)],
                 env={"HOPFCLEFT_FIXTURE_DIR": DATA_DIR})
    assert result.exit_code == 0, result.output
    assert "bosonization: dim 4" in result.output
    again = run(runner, ["verify-hopf", str(out)])
    assert again.exit_code == 0, again.output


def test_phi_inverse_and_gr_check(runner):
    env = {"HOPFCLEFT_FIXTURE_DIR": DATA_DIR}
    for idx in range(3):
        result = run(runner, ["phi-inverse", "qline_kc2_f3.had",
                              "--sigma-index", str(idx)], env=env)
        assert result.exit_code == 0, result.output
    result = run(runner, ["gr-check", "qline_kc2_f3.had", "--sigma-index", "2"], env=env)
    assert result.exit_code == 0, result.output


def test_sigma_index_out_of_range_exits_2(runner):
    result = run(runner, ["gr-check", "qline_kc2_f3.had", "--sigma-index", "9"],
                 env={"HOPFCLEFT_FIXTURE_DIR": DATA_DIR})
    assert result.exit_code == 2


def test_psi_command(runner):
    result = run(runner, ["psi", "qline_kc2_f3.had", "--sigma-index", "1"],
                 env={"HOPFCLEFT_FIXTURE_DIR": DATA_DIR})
    assert result.exit_code == 0, result.output


def test_census_f3(runner):
    result = run(runner, ["census", "qline_kc2_f3.had"],
                 env={"HOPFCLEFT_FIXTURE_DIR": DATA_DIR})
    assert result.exit_code == 0, result.output
    assert "restricted cocycles: 3" in result.output
    assert "class 0: cocycle indices [0]" in result.output


def test_oracle_command(runner):
    result = run(runner, ["oracle", "qline_kc2_f3.had"],
                 env={"HOPFCLEFT_FIXTURE_DIR": DATA_DIR})
    assert result.exit_code == 0, result.output
    assert "3 restricted cocycles" in result.output


def test_oracle_bound_too_small_exits_2(runner):
    result = run(runner, ["oracle", "qline_kc2_f3.had", "--bound", "2"],
                 env={"HOPFCLEFT_FIXTURE_DIR": DATA_DIR})
    assert result.exit_code == 2


def test_convolution_inverse_prints_antipode(runner):
    result = run(runner, ["convolution-inverse", "kc2_q.had"],
                 env={"HOPFCLEFT_FIXTURE_DIR": DATA_DIR})
    assert result.exit_code == 0, result.output
    assert "g -> 1 g" in result.output


def test_deform_writes_a_verified_hopf_file(runner, tmp_path):
    out = tmp_path / "deformed.had"
    result = run(runner, ["deform", "qline_kc4_f5.had", "--sigma-index", "2",
                          "--out", str(out)],
                 env={"HOPFCLEFT_FIXTURE_DIR": DATA_DIR})
    assert result.exit_code == 0, result.output
    again = run(runner, ["verify-hopf", str(out)])
    assert again.exit_code == 0, again.output
