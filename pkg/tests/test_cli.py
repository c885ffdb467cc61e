import json

import pytest

from fernsym.cli import UsageError, main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_range():
    assert parse_range("0..4") == [0, 1, 2, 3, 4]
    assert parse_range("-1..1") == [-1, 0, 1]
    assert parse_range("0,2,4") == [0, 2, 4]
    assert parse_range("3") == [3]
    with pytest.raises(UsageError):
        parse_range("4..0")
    with pytest.raises(UsageError):
        parse_range("a")


def test_build_figure_one(capsys):
    code, out, _ = run(capsys, "build", "fc:x=2,y=6,z=4,a=1,2,6,3")
    assert code == 0
    assert json.loads(out)["sides"] == [7, 13, 9, 9, 11, 11]


def test_build_small_hexagon_with_svg_and_tiling(capsys, tmp_path):
    svg = tmp_path / "h.svg"
    code, out, _ = run(capsys, "build", "hex:x=1,y=1,z=1", "--svg", str(svg), "--tiling", "1")
    doc = json.loads(out)
    assert code == 0 and doc["n_cells"] == 6 and len(doc["tiling"]["lozenges"]) == 3
    assert svg.read_text().startswith("<svg")


def test_build_semihexagon_to_file(capsys, tmp_path):
    path = tmp_path / "s.json"
    code, _, _ = run(capsys, "build", "s:b=3,3,2,5,4", "--json", str(path))
    assert code == 0 and json.loads(path.read_text())["balanced"]


def test_build_tiling_out_of_range(capsys):
    code, _, err = run(capsys, "build", "hex:x=1,y=1,z=1", "--tiling", "2")
    assert code == 2 and "fewer than 3" in err


@pytest.mark.parametrize("argv,expected", [
    (["count", "hex:x=2,y=2,z=2"], "20"),
    (["count", "hex:x=2,y=2,z=2", "--symmetric"], "4"),
    (["count", "s:b=1,1,1"], "2"),
    (["count", "hex:x=2,y=2,z=2", "--method", "dual"], "20"),
    (["count", "hex:x=2,y=2,z=2", "--symmetric", "--method", "dp"], "4"),
])
def test_count(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


def test_count_symmetric_on_asymmetric_region(capsys):
    code, _, err = run(capsys, "count", "s:b=1,1,1", "--symmetric")
    assert code == 2 and "not centrally symmetric" in err


def test_parse_error_reports_position(capsys):
    code, _, err = run(capsys, "count", "fc:x=-1,y=1,z=1")
    assert code == 2 and "position 5" in err


def test_formula(capsys):
    assert run(capsys, "formula", "macmahon", "--x", "2", "--y", "2", "--z", "2")[1].strip() == "20"
    assert run(capsys, "formula", "s", "--lobes", "1,1,1")[1].strip() == "2"
    assert run(capsys, "formula", "theorem1", "--x", "2", "--y", "2", "--z", "2",
               "--lobes", "3")[1].strip() == "1"
    code, out, _ = run(capsys, "formula", "conjecture2", "--x", "2", "--y", "2", "--z", "2",
                       "--gaps", "1", "--ferns", "0,0")
    assert code == 0 and out.strip() == "1"


def test_verify_macmahon(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, _, err = run(capsys, "verify", "macmahon", "--max", "4", "--out", str(out))
    doc = json.loads(out.read_text())
    assert code == 0 and doc["schema"] == 1 and len(doc["results"]) == 125
    assert "125 passed" in err


def test_verify_theorem1_small(capsys):
    code, out, _ = run(capsys, "verify", "theorem1", "--x", "0..2", "--y", "2", "--z", "0..2",
                       "--lobes-sum-max", "2")
    assert code == 0 and json.loads(out)["ok"]


def test_verify_conjecture_flags_counterexamples(capsys):
    code, out, err = run(capsys, "verify", "conjecture2", "--x", "2", "--y", "2", "--z", "2",
                         "--lobes-sum-max", "2", "--gaps-max", "2", "--format", "csv")
    assert code == 0
    assert out.startswith("instance_id,family,params,lhs,rhs,equal,cells,millis")
    assert "COUNTEREXAMPLE" in err


def test_verify_bad_range(capsys):
    code, _, err = run(capsys, "verify", "theorem1", "--x", "4..0")
    assert code == 2 and "empty range" in err
