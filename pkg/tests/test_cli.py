import json

from pbp.cli import main


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    out = json.loads(captured.out) if captured.out.strip() else None
    return code, out, captured.err


def test_classify_command(tmp_path, capsys):
    path = write(tmp_path, "d.json", {"kind": "bs", "m": 2, "n": 3})
    code, out, _ = run(capsys, ["classify", "-i", path])
    assert code == 0
    assert out["answer"] == "NO"
    assert out["trace"][0]["rule"] == "delegate/bs"


def test_classify_unknown_still_exits_zero(tmp_path, capsys):
    path = write(tmp_path, "d.json", {"kind": "flagged", "flags": {"ends": 1}})
    code, out, _ = run(capsys, ["classify", "-i", path])
    assert code == 0
    assert out["answer"] == "UNKNOWN"


def test_classify_inconsistent_exits_two(tmp_path, capsys):
    path = write(tmp_path, "d.json", {"kind": "flagged", "flags": {"ends": 2, "simple": True}})
    code, out, err = run(capsys, ["classify", "-i", path])
    assert code == 2
    assert "invalid input" in err


def test_coxeter_command(tmp_path, capsys):
    path = write(tmp_path, "m.json", {"n": 3, "m": [[1, 3, 2], [3, 1, 3], [2, 3, 1]]})
    code, out, _ = run(capsys, ["coxeter", "-i", path])
    assert code == 0
    assert out["answer"] == "NOT_APPLICABLE"
    assert out["components"][0]["signature"] == [3, 0, 0]


def test_coxeter_inf_entry(tmp_path, capsys):
    path = write(tmp_path, "m.json", {"n": 2, "m": [[1, "inf"], ["inf", 1]]})
    code, out, _ = run(capsys, ["coxeter", "-i", path])
    assert code == 0
    assert out["answer"] == "YES"
    assert out["components"][0]["label"] == "Affine"


def test_bs_command_with_checks(capsys):
    code, out, _ = run(capsys, ["bs", "2", "-2", "--witness", "--verify-bound", "5"])
    assert code == 0
    assert out["answer"] == "YES"
    assert out["certificate"]["index"] == 4
    assert out["checks"]["passed"] is True
    assert out["checks"]["abelianization_free_rank"] == 4


def test_bs_command_compact_certificate(capsys):
    code, out, _ = run(capsys, ["bs", "3", "3"])
    assert code == 0
    assert out["certificate"] == {"kind": "finite-index-direct-product", "index": 6}


def test_bs_zero_parameter(capsys):
    code, out, err = run(capsys, ["bs", "0", "3"])
    assert code == 2


def test_lie_catalogue_command(capsys):
    code, out, _ = run(capsys, ["lie", "--catalogue", "sol"])
    assert code == 0
    assert out["answer"] == "NO"
    assert len(out["ideal_trace"]) == 4


def test_lie_json_command(tmp_path, capsys):
    algebra = {
        "dim": 3,
        "basis": ["x", "y", "z"],
        "brackets": [{"x": "x", "y": "y", "value": {"z": "1"}}],
    }
    path = write(tmp_path, "alg.json", algebra)
    code, out, _ = run(capsys, ["lie", "-i", path])
    assert code == 0
    assert out["answer"] == "YES"  # Heisenberg: nonzero centre


def test_lie_invalid_algebra(tmp_path, capsys):
    algebra = {
        "dim": 3,
        "basis": ["x", "y", "z"],
        "brackets": [
            {"x": "x", "y": "y", "value": {"x": "1"}},
            {"x": "y", "y": "z", "value": {"y": "1"}},
            {"x": "z", "y": "x", "value": {"z": "1"}},
        ],
    }
    path = write(tmp_path, "alg.json", algebra)
    code, out, err = run(capsys, ["lie", "-i", path])
    assert code == 2
    assert "Jacobi" in err


def test_subgroup_command(tmp_path, capsys):
    pres = write(
        tmp_path, "p.json", {"generators": ["s", "t"], "relators": ["t s^2 t^-1 s^-2"]}
    )
    hom = write(
        tmp_path,
        "h.json",
        {"images": [[1, 0, 2, 3], [0, 1, 3, 2]]},  # C2 x C2 on four points
    )
    code, out, _ = run(capsys, ["subgroup", "-i", pres, "--hom", hom])
    assert code == 0
    assert out["index"] == 4
    assert out["subgroup_generators"] == 5
    assert out["subgroup_relators"] == 4
    assert out["abelianization"] == {"free_rank": 4, "torsion": []}


def test_subgroup_relator_not_killed(tmp_path, capsys):
    pres = write(tmp_path, "p.json", {"generators": ["s"], "relators": ["s^2"]})
    hom = write(tmp_path, "h.json", {"images": [[1, 2, 0]]})
    code, out, err = run(capsys, ["subgroup", "-i", pres, "--hom", hom])
    assert code == 2


def test_abels_command(capsys):
    code, out, _ = run(capsys, ["abels", "--prime", "3", "--trials", "200"])
    assert code == 0
    assert out["symbolic"] == "pass"
    assert out["randomized"] == "pass"
    assert out["counterexamples"] == []


def test_missing_file_exits_two(capsys):
    code, out, err = run(capsys, ["classify", "-i", "/nonexistent.json"])
    assert code == 2
