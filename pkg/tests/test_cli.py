import json
import subprocess
import sys
from pathlib import Path

import pytest

from cubulate import WallSpace, complex_from_dict
from cubulate.cli import main
from cubulate.families import gen_crossing

FIXTURES = Path(__file__).parent / "fixtures"
SPACE3 = str(FIXTURES / "crossing3_space.json")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_ok(capsys):
    code, out, err = run(capsys, "validate", SPACE3)
    assert code == 0
    report = json.loads(out)
    assert report["command"] == "validate"
    assert report["status"] == "ok"
    assert report["input"]["points"] == 8
    assert report["input"]["walls"] == 3
    assert report["input"]["digest"].startswith("sha256:")


def test_validate_empty_complement(capsys):
    code, out, err = run(capsys, "validate", str(FIXTURES / "bad_empty_complement.json"))
    assert code == 1
    assert "complement is empty" in err


def test_validate_duplicate_wall(capsys):
    code, out, err = run(capsys, "validate", str(FIXTURES / "bad_duplicate_wall.json"))
    assert code == 1
    assert "same partition" in err


def test_validate_malformed_json(capsys):
    code, out, err = run(capsys, "validate", str(FIXTURES / "not_json.json"))
    assert code == 1
    assert "invalid JSON" in err


def test_validate_missing_file(capsys):
    code, out, err = run(capsys, "validate", "no_such_file.json")
    assert code == 1
    assert err


def test_build_report(capsys):
    code, out, err = run(capsys, "build", SPACE3)
    assert code == 0
    report = json.loads(out)
    assert report["f_vector"] == [8, 12, 6, 1]
    assert report["dimension"] == 3
    assert report["intersection_number"] == 3
    assert report["complex"] == {"vertices": 8, "edges": 12, "cubes": {"2": 6, "3": 1}}
    assert report["checks"]["flag"] == {"status": "skipped"}
    assert "timings" not in report


def test_build_deterministic_bytes(capsys):
    _, first, _ = run(capsys, "build", SPACE3)
    _, second, _ = run(capsys, "build", SPACE3)
    assert first == second
    assert first.endswith("\n")


def test_build_timings_flag(capsys):
    code, out, _ = run(capsys, "build", SPACE3, "--timings")
    assert code == 0
    assert "build_s" in json.loads(out)["timings"]


def test_build_out_file(capsys, tmp_path):
    target = tmp_path / "complex.json"
    code, out, _ = run(capsys, "build", SPACE3, "--out", str(target))
    assert code == 0
    data = json.loads(target.read_text())
    space = WallSpace.from_dict(json.loads(Path(SPACE3).read_text()))
    X = complex_from_dict(space, data)
    assert len(X.vertices) == 8


def test_build_budget(capsys):
    code, out, err = run(capsys, "build", SPACE3, "--max-vertices", "4")
    assert code == 2
    assert "cap" in err


def test_check_passes(capsys):
    code, out, _ = run(capsys, "check", SPACE3, "--loops", "10", "--seed", "3")
    assert code == 0
    report = json.loads(out)
    statuses = {k: v["status"] for k, v in report["checks"].items()}
    assert statuses == {
        "flag": "pass",
        "metric_correspondence": "pass",
        "parity": "pass",
        "contraction": "pass",
        "equivariance": "skipped",
    }
    assert report["seed"] == 3
    assert report["checks"]["parity"]["loops"] == 10


def test_check_deterministic_bytes(capsys):
    _, first, _ = run(capsys, "check", SPACE3, "--loops", "5", "--seed", "1")
    _, second, _ = run(capsys, "check", SPACE3, "--loops", "5", "--seed", "1")
    assert first == second


def test_check_mutated_complex_fails_flag(capsys):
    code, out, _ = run(
        capsys,
        "check",
        SPACE3,
        "--complex-in",
        str(FIXTURES / "crossing3_missing_cube.json"),
        "--loops",
        "5",
    )
    assert code == 3
    report = json.loads(out)
    assert report["checks"]["flag"]["status"] == "fail"
    assert "witness" in report["checks"]["flag"]
    assert report["checks"]["metric_correspondence"]["status"] == "skipped"
    assert report["checks"]["contraction"]["status"] == "skipped"


def test_export_dot(capsys, tmp_path):
    space = tmp_path / "c2.json"
    space.write_text(json.dumps(gen_crossing(2).to_dict()))
    code, out, _ = run(capsys, "export", str(space), "--format", "dot")
    assert code == 0
    assert out.startswith("graph cubing {")
    assert sum(1 for ln in out.splitlines() if " -- " in ln) == 4
    assert out.count("peripheries=2") == 1


def test_export_json(capsys):
    code, out, _ = run(capsys, "export", SPACE3, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"walls", "base", "vertices", "edges", "cubes"}
    assert len(data["vertices"]) == 8


def test_generate_matches_library(capsys):
    code, out, _ = run(capsys, "generate", "--family", "crossing", "--param", "3")
    assert code == 0
    assert json.loads(out) == gen_crossing(3).to_dict()


def test_generate_tree_params(capsys):
    code, out, _ = run(capsys, "generate", "--family", "tree", "--param", "2,2")
    assert code == 0
    assert json.loads(out)["points"] == 4


def test_generate_bad_params(capsys):
    code, _, err = run(capsys, "generate", "--family", "crossing", "--param", "1,2")
    assert code == 1
    code, _, err = run(capsys, "generate", "--family", "crossing", "--param", "x")
    assert code == 1
    assert "comma-separated" in err


def test_unknown_family_is_input_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["generate", "--family", "dodecahedron", "--param", "1"])
    assert info.value.code == 1


def test_act_identity(capsys):
    code, out, _ = run(
        capsys, "act", SPACE3, "--generators", str(FIXTURES / "generators_identity.json")
    )
    assert code == 0
    report = json.loads(out)
    assert report["checks"]["equivariance"]["status"] == "pass"
    assert report["orbit"]["size"] == 1
    assert "properness" in report["note"]


def test_act_swap_group(capsys):
    code, out, _ = run(
        capsys, "act", SPACE3, "--generators", str(FIXTURES / "generators_swaps.json")
    )
    assert code == 0
    report = json.loads(out)
    assert report["generators"] == ["s01", "s12"]
    assert [g["generator"] for g in report["equivariance"]] == ["s01", "s12"]
    assert report["orbit"]["size"] == 1


def test_act_half_space_breaking_generator(capsys):
    code, _, err = run(
        capsys, "act", SPACE3, "--generators", str(FIXTURES / "generators_bad.json")
    )
    assert code == 1
    assert "half-space" in err.lower()


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "cubulate.cli", "generate", "--family", "nested", "--param", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"points": 3, "walls": [[1, 2], [2]]}
