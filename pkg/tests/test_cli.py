import json

import pytest

from matpoly import parse
from matpoly.cli import main
from matpoly.fileio import parse_matrix_csv, read_poly, write_poly
from matpoly.errors import ParseError


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    def poly(name, text, shape=None):
        path = tmp_path / name
        write_poly(path, parse(text, shape))
        return str(path)

    write.poly = poly
    write.dir = tmp_path
    return write


def test_construct_stdout(files, capsys):
    path = files("tau.csv", "-1,2\n3,-4\n")
    assert main(["construct", path]) == 0
    text, js = capsys.readouterr().out.strip().splitlines()
    assert text == "-10*x*y + 14*x + 13*y - 18"
    assert json.loads(js) == {"m": 2, "n": 2, "coeffs": [["-18", "13"], ["14", "-10"]]}


def test_construct_all_methods(files, capsys):
    path = files("a.csv", "1, 1/2, 0.25\n-1, 0, 3\n")
    out = str(files.dir / "p.json")
    assert main(["construct", path, "--method", "all", "--out", out]) == 0
    captured = capsys.readouterr()
    assert "agree" in captured.err
    assert read_poly(out).shape == (2, 3)


def test_product_and_inverse(files, capsys):
    p = files.poly("p.json", "-10*x*y + 14*x + 13*y - 18")
    i2 = files.poly("i.json", "2*x*y - 3*x - 3*y + 5")
    assert main(["product", p, i2]) == 0
    assert capsys.readouterr().out.strip() == "-10*x*y + 14*x + 13*y - 18"
    assert main(["inverse", p]) == 0
    assert capsys.readouterr().out.strip() == "-1/2*x - y + 7/2"


def test_singular_exit_code(files, capsys):
    q = files.poly("q.json", "15*x*y - 21*x - 20*y + 28")
    assert main(["inverse", q]) == 3
    assert "singular" in capsys.readouterr().err


def test_shape_exit_code(files):
    p = files.poly("p.json", "x*y", (2, 3))
    assert main(["product", p, p]) == 2
    assert main(["power", p, "2"]) == 2


def test_negative_power_exit_code(files):
    p = files.poly("p.json", "x*y")
    assert main(["power", p, "-1"]) == 2


def test_parse_exit_codes(files, capsys):
    bad_csv = files("bad.csv", "1,2\n3,x\n")
    assert main(["construct", bad_csv]) == 4
    assert "line 2" in capsys.readouterr().err
    ragged = files("ragged.csv", "1,2\n3\n")
    assert main(["construct", ragged]) == 4
    bad_json = files("bad.json", "{\"m\": 1,")
    assert main(["transpose", bad_json]) == 4


def test_missing_file(files):
    assert main(["transpose", str(files.dir / "nope.json")]) == 1


def test_power_transpose_identity(files, capsys):
    p = files.poly("p.json", "-10*x*y + 14*x + 13*y - 18")
    assert main(["power", p, "2"]) == 0
    assert capsys.readouterr().out.strip() == "54*x*y - 76*x - 71*y + 100"
    a1 = files.poly("a1.json", "-4*x*y^2 + 13/2*y^2 + 15*x*y - 13*x - 49/2*y + 21")
    assert main(["transpose", a1]) == 0
    assert capsys.readouterr().out.strip() == "-4*x^2*y + 13/2*x^2 + 15*x*y - 49/2*x - 13*y + 21"
    assert main(["identity", "2"]) == 0
    assert capsys.readouterr().out.strip() == "2*x*y - 3*x - 3*y + 5"
    assert main(["identity", "0"]) == 2


def test_classify(files, capsys):
    p = files.poly("a4.json", "-x^2*y + x*y^2 + x^2 - y^2 - 2*x + 2*y")
    assert main(["classify", p]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["skew_symmetric"] is True and report["symmetric"] is False


def test_eigen_and_char_poly(files, capsys):
    p = files.poly("e.json", "-x*y + 4*x + 3*y - 5")
    assert main(["eigen", p]) == 0
    out = capsys.readouterr().out
    assert "lambda = -1:" in out and "lambda = 7: x" in out
    assert main(["char-poly", p]) == 0
    assert capsys.readouterr().out.strip() == "lambda^2 - 6*lambda - 7"
    assert main(["cayley-hamilton", p]) == 0
    assert capsys.readouterr().out.strip().endswith("residual: 0")


def test_to_matrix_and_sample(files, capsys):
    p = files.poly("t.json", "-10*x*y + 14*x + 13*y - 18")
    assert main(["to-matrix", p]) == 0
    assert parse_matrix_csv(capsys.readouterr().out).tolist() == [[-1, 2], [3, -4]]
    assert main(["sample", p, "--steps", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "x,y,z,z_decimal" and lines[1].startswith("1,1,-1,")
    assert main(["sample", p, "--steps", "3,2", "--range", "0:1,0:1"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 7


def test_coord_matrix(capsys):
    assert main(["coord-matrix", "2", "2", "--order", "y-major"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "4,-2,-2,1"
    assert main(["coord-matrix", "2", "2", "--order", "y-major", "--sampling"]) == 0
    assert capsys.readouterr().out.splitlines()[3] == "1,2,2,4"


def test_verify(capsys):
    assert main(["verify", "--trials", "5", "--seed", "1"]) == 0
    reports = json.loads(capsys.readouterr().out)
    assert [r["passed"] for r in reports] == [True, True, True]


def test_bad_arguments():
    with pytest.raises(SystemExit) as info:
        main(["sample", "x.json", "--steps", "1"])
    assert info.value.code == 2


def test_csv_error_location():
    with pytest.raises(ParseError) as info:
        parse_matrix_csv("1,2\n3,4,5\n")
    assert info.value.line == 2
