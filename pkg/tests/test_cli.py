import json

import pytest

from dualities.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_platonic_text(capsys):
    code, out, _ = run(capsys, "graph", "platonic")
    assert code == 0
    lines = [l for l in out.strip().splitlines() if not l.startswith("p q")]
    assert len(lines) == 5
    assert lines[-1].startswith("3 5 12 30 20")


def test_platonic_json_roundtrip(capsys):
    code, data = run_json(capsys, "graph", "platonic")
    assert code == 0
    assert json.loads(json.dumps(data)) == data
    assert [r["name"] for r in data["rows"]] == [
        "tetrahedron",
        "cube",
        "octahedron",
        "dodecahedron",
        "icosahedron",
    ]


def test_matroid_classify_fano(capsys):
    code, data = run_json(capsys, "matroid", "classify", "fano")
    assert code == 0
    assert data["binary"] is True
    assert data["graphic"] is False
    assert data["cographic"] is False
    assert data["transversal"] is False
    assert data["regular"] is False
    assert all(k in data["witnesses"] for k in ("binary", "graphic", "transversal"))


def test_matroid_validate_named(capsys):
    code, data = run_json(capsys, "matroid", "validate", "uniform:2,4")
    assert code == 0 and data["valid"] and data["basis_count"] == 6


def test_matroid_validate_failure_exit_1(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("ground: 1 2\nbasis: 1\nbasis: 1 2\n")
    code, data = run_json(capsys, "matroid", "validate", str(path))
    assert code == 1
    assert data["valid"] is False
    assert data["error"] == "ContainmentViolation"


def test_matroid_dual_roundtrip(capsys, tmp_path):
    code, data = run_json(capsys, "matroid", "dual", "uniform:2,3")
    assert code == 0
    path = tmp_path / "m.json"
    path.write_text(json.dumps(data))
    code2, data2 = run_json(capsys, "matroid", "dual", str(path))
    assert code2 == 0
    assert data2["bases"] == [[1, 2], [1, 3], [2, 3]]


def test_matroid_minor_flags(capsys):
    code, data = run_json(capsys, "matroid", "minor", "fano", "--delete", "7")
    assert code == 0 and len(data["bases"]) == 16


def test_matroid_check_duality(capsys):
    code, data = run_json(capsys, "matroid", "check-duality", "fano")
    assert code == 0 and data["all_ok"]


def test_matroid_has_minor(capsys):
    code, data = run_json(capsys, "matroid", "has-minor", "mk5", "mk4")
    assert code == 0 and data["has_minor"]


def test_matroid_isomorphic(capsys):
    code, data = run_json(capsys, "matroid", "isomorphic", "uniform:2,4", "uniform:2,4")
    assert code == 0 and data["isomorphic"]


def test_graph_euler(capsys):
    code, data = run_json(capsys, "graph", "euler", "tetrahedron")
    assert code == 0
    assert data["chi"] == 2 and data["face_count"] == 4


def test_graph_planar_witness(capsys):
    code, data = run_json(capsys, "graph", "planar", "k5")
    assert code == 0
    assert data["planar"] is False and data["obstruction"] == "M(K5)"


def test_graph_dual_output_parses(capsys, tmp_path):
    code, data = run_json(capsys, "graph", "dual", "cube")
    assert code == 0
    path = tmp_path / "emb.json"
    path.write_text(json.dumps(data))
    code2, data2 = run_json(capsys, "graph", "euler", str(path))
    assert code2 == 0
    assert data2["face_count"] == 8  # the octahedron


def test_graph_blocks(capsys):
    code, data = run_json(capsys, "graph", "blocks", "path:4")
    assert code == 0 and len(data["blocks"]) == 3


def test_graph_cycle_matroid(capsys):
    code, data = run_json(capsys, "graph", "cycle-matroid", "k4")
    assert code == 0 and len(data["bases"]) == 16


def test_complex_chi(capsys):
    code, data = run_json(capsys, "complex", "chi", "sphere:3")
    assert code == 0 and data["chi"] == 0


def test_complex_betti(capsys):
    code, data = run_json(capsys, "complex", "betti", "genus:2")
    assert code == 0 and data["betti"] == [1, 4, 1] and data["match"]


def test_complex_index_sum(capsys):
    code, data = run_json(capsys, "complex", "index-sum", "torus")
    assert code == 0 and data["index_sum"] == 0


def test_complex_genus_duality(capsys):
    code, data = run_json(capsys, "complex", "genus-duality", "genus:3")
    assert code == 0 and data["all_ok"]


def test_algebra_report(capsys):
    code, data = run_json(capsys, "algebra", "report", "--algebra", "o", "--trials", "20")
    assert code == 0
    assert data["norm_multiplicative"] and data["alternative"]
    assert data["zero_divisor"] is None
    assert data["seed"] == 0


def test_algebra_zero_divisors_sedenion(capsys):
    code, out, _ = run(capsys, "algebra", "zero-divisors", "--algebra", "sedenion")
    assert code == 0
    assert "= 0" in out


def test_algebra_cross(capsys):
    code, out, _ = run(capsys, "algebra", "cross", "--case", "three", "1,0,0", "0,1,0")
    assert code == 0 and out.strip() == "result: 0 0 1"


def test_algebra_cross_check(capsys):
    code, data = run_json(
        capsys, "algebra", "cross-check", "--case", "epsilon:4", "--trials", "30", "--seed", "9"
    )
    assert code == 0 and data["all_ok"] and data["seed"] == 9


def test_algebra_hodge(capsys):
    code, data = run_json(capsys, "algebra", "hodge", "--n", "4", "1,2=3/2")
    assert code == 0 and data["result"] == {"3 4": "3/2"}


def test_algebra_chirotope(capsys):
    code, data = run_json(capsys, "algebra", "chirotope", "1,0", "0,1", "1,1", "1,2")
    assert code == 0 and data["support_matroid"]["basis_count"] == 6


def test_algebra_table(capsys):
    code, data = run_json(capsys, "algebra", "table", "--algebra", "o-fano")
    assert code == 0 and data["table"][1][2] == "+e4"


def test_stdin_source(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("ground: 1 2 3\nbasis: 1 2\nbasis: 1 3\nbasis: 2 3\n"))
    code, data = run_json(capsys, "matroid", "dual", "-")
    assert code == 0 and data["rank"] == 1


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["matroid", "frobnicate", "fano"])
    assert exc.value.code == 2


def test_bad_named_source_exit_2(capsys):
    code, _, err = run(capsys, "matroid", "dual", "nonesuch")
    assert code == 2 and "UnknownName" in err


def test_garbage_file_exit_2(capsys, tmp_path):
    path = tmp_path / "garbage.txt"
    path.write_text("this is not a matroid\n")
    code, _, err = run(capsys, "matroid", "dual", str(path))
    assert code == 2


def test_stray_element_validate_exit_1(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("ground: 1\nbasis: 2\n")
    code, data = run_json(capsys, "matroid", "validate", str(path))
    assert code == 1 and data["error"] == "ElementNotInGround"


@pytest.mark.parametrize(
    "argv",
    [
        ("graph", "platonic"),
        ("graph", "euler", "cube"),
        ("graph", "invariants", "k4"),
        ("graph", "planar", "k33"),
        ("graph", "blocks", "path:3"),
        ("graph", "cycle-matroid", "triangle"),
        ("matroid", "validate", "fano"),
        ("matroid", "dual", "mk4"),
        ("matroid", "classify", "uniform:2,4"),
        ("matroid", "check-duality", "uniform:2,3"),
        ("complex", "chi", "sphere:2"),
        ("complex", "named", "genus:3"),
        ("complex", "betti", "torus"),
        ("complex", "index-sum", "genus:1"),
        ("complex", "genus-duality", "torus"),
        ("algebra", "report", "--algebra", "h", "--trials", "5"),
        ("algebra", "cross-check", "--case", "three", "--trials", "5"),
        ("algebra", "table", "--algebra", "c"),
    ],
)
def test_json_mode_is_stable(capsys, argv):
    # every json-mode object re-parses into the same canonical structure
    code, data = run_json(capsys, *argv)
    assert code == 0
    assert json.loads(json.dumps(data, sort_keys=True)) == data
