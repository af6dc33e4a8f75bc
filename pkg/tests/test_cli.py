import json

import pytest

from lefschetz.cli import SCHEMA, dispatch, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_wlp_1331(capsys, data_dir):
    code, out, _ = run(capsys, "wlp", "--ideal", str(data_dir / "ex1331.txt"))
    assert code == 1
    assert "x1 in kernel at degree 1" in out


def test_slp_holds(capsys, data_dir):
    code, out, _ = run(capsys, "slp", "--ideal", str(data_dir / "ci222.txt"), "--seed", "4")
    assert code == 0 and out.startswith("SLP holds")


def test_char_override(capsys, data_dir):
    code, out, _ = run(capsys, "wlp", "--ideal", str(data_dir / "ci222.txt"), "--char", "2")
    assert code == 1 and "(exact)" in out


def test_hilbert_check(capsys):
    code, out, _ = run(capsys, "hilbert", "--check", "1,3,3,4")
    assert code == 1 and "plateau before increase" in out
    code, _, _ = run(capsys, "hilbert", "--check", "1,3,4,3,1")
    assert code == 0


def test_bounds_json(capsys):
    code, out, _ = run(capsys, "bounds", "--hf", "1,3,3,1", "--n", "3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == SCHEMA
    entries = {(e["i"], e["j"]): e["beta"] for e in payload["bounds"]["entries"]}
    assert entries[(2, 2)] == 4 and entries[(1, 1)] == 3


def test_json_and_report_agree(capsys, data_dir, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "socle", "--ideal", str(data_dir / "ex1331.txt"), "--json", "--report", str(report))
    assert code == 0
    assert json.loads(out) == json.loads(report.read_text())
    assert json.loads(out)["socle_type"] == [0, 1, 2, 1]


def test_human_output_has_no_json(capsys, data_dir, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "betti", "--ideal", str(data_dir / "ex1331.txt"), "--report", str(report))
    assert code == 0 and "{" not in out
    assert json.loads(report.read_text())["betti"]["N"] == 3


def test_lex_and_construct_write_files(capsys, tmp_path):
    out_file = tmp_path / "lex.txt"
    assert run(capsys, "lex", "--hf", "1,3,3,1", "--out", str(out_file))[0] == 0
    assert run(capsys, "hilbert", "--ideal", str(out_file))[1].strip() == "hf = 1,3,3,1"
    con = tmp_path / "con.txt"
    code, out, _ = run(capsys, "construct", "--hf", "1,3,4,5,4", "--out", str(con))
    assert code == 0 and "FAIL" not in out
    assert run(capsys, "slp", "--ideal", str(con))[0] == 0
    assert run(capsys, "construct", "--hf", "1,3,4,5,4", "--mode", "basic")[0] == 0


def test_ci_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "ci", "fuzz", "--degs", "2,3,3", "--trials", "2", "--seed", "5")
    assert code == 0 and "0 finding(s)" in out
    code, out, _ = run(capsys, "ci", "predict", "--degs", "3,4,4")
    assert code == 0 and "(-5, -6)" in out
    code, out, _ = run(capsys, "ci", "jumping", "--seed", "2")
    assert code == 0 and out.count("(-5, -7)") == 3


def test_seed_reproducibility(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        run(capsys, "ci", "fuzz", "--trials", "2", "--seed", "7", "--max-degree", "4", "--report", str(path))
    assert a.read_text() == b.read_text()


def test_apolar(capsys):
    code, out, _ = run(capsys, "apolar", "--form", "x*u^3 + y*u^2*v + z*u*v^2", "--vars", "u,v,x,y,z")
    assert code == 1
    assert out.splitlines()[0] == "hf = 1,5,6,5,1" and "WLP holds" in out


def test_examples_subset(capsys):
    code, out, _ = run(capsys, "examples", "example-1331", "remark-charp")
    assert code == 0 and out.count("PASS") == 2


@pytest.mark.parametrize(
    "argv",
    [["wlp"], ["bounds"], ["wlp", "--ideal", "/does/not/exist"], ["examples", "no-such-example"],
     ["bounds", "--hf", "1,x"], ["nonsense"], ["construct", "--hf", "1,3,3,4"]],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


def test_bad_ideal_file(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("ring 3 0\ngen x0 +\n")
    code, _, err = run(capsys, "wlp", "--ideal", str(bad))
    assert code == 2 and "line 2" in err


def test_dispatch_returns_result(data_dir):
    result = dispatch(["socle", "--ideal", str(data_dir / "ex1331.txt")])
    assert result.exit_code == 0 and result.detail["socle_type"] == [0, 1, 2, 1]
