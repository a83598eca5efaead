import json

import pytest

from chowprod.cli import main
from chowprod.complexes import hypercube
from chowprod.degree import total_degree
from chowprod.poly import Poly, parse_poly
from chowprod.ring import chow_class


@pytest.fixture
def square(tmp_path):
    f = tmp_path / "square.json"
    f.write_text(json.dumps({"factors": ["K2", "K2"]}))
    return str(f)


@pytest.fixture
def pk(tmp_path):
    f = tmp_path / "pk.json"
    f.write_text(json.dumps({"factors": [
        "path3",
        {"vertices": [0, 1, 2], "edges": [[0, 1], [1, 2], [0, 2]]},
    ]}))
    return str(f)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_deg_power(square, capsys):
    code, out, err = run(capsys, "deg", "--product", square, "--expr", "C(0,0)^3")
    assert code == 0 and out.strip() == "1"
    code, out, err = run(capsys, "deg", "--product", square, "--json",
                         "--expr", "C(0,0)*C(1,0)*C(1,1)")
    assert code == 0 and json.loads(out) == {"degree": 1}


def test_deg_matches_library(pk, capsys):
    expr = "2*C(0,0)*C(1,1)*C(2,2) - C(1,1)^3"
    code, out, err = run(capsys, "deg", "--product", pk, "--expr", expr)
    from chowprod.cli import load_product

    P = load_product(pk)
    assert code == 0
    assert int(out.strip()) == total_degree(P, parse_poly(expr))


def test_basis(square, capsys):
    code, out, err = run(capsys, "basis", "--product", square, "--k", "2")
    assert code == 0
    lines = dict(line.split(" ", 1) for line in out.strip().splitlines())
    assert lines["rank"] == "1"
    code, out, err = run(capsys, "basis", "--product", square, "--k", "2", "--json")
    data = json.loads(out)
    assert data["rank"] == 1 and data["invariant_factors"] == []


def test_reduce_matches_library(square, capsys):
    code, out, err = run(capsys, "reduce", "--product", square, "--json",
                         "--expr", "C(0,0)^2")
    assert code == 0
    data = json.loads(out)
    H = hypercube(2)
    cls = chow_class(H, parse_poly("C(0,0)^2"))
    assert data["class"] == list(cls.coords)
    assert parse_poly(data["nd"]).terms
    assert data["k"] == 1


def test_restrict_and_glue_roundtrip(pk, capsys, tmp_path):
    expr = "C(0,0)*C(1,1) + C(1,0)*C(2,1)"
    code, out, err = run(capsys, "restrict", "--product", pk, "--json", "--expr", expr)
    assert code == 0
    t = json.loads(out)
    assert len(t) == 6
    tuple_file = tmp_path / "t.json"
    tuple_file.write_text(out)
    code, out, err = run(capsys, "glue", "--product", pk, "--json",
                         "--tuple-file", str(tuple_file))
    assert code == 0
    data = json.loads(out)
    from chowprod.cli import load_product

    P = load_product(pk)
    cls = chow_class(P, parse_poly(expr))
    assert data["class"] == list(cls.coords)


def test_glue_kernel_error(pk, capsys, tmp_path):
    tuple_file = tmp_path / "bad.json"
    tuple_file.write_text(json.dumps({"0-1|0-1": "C(1,0)*C(1,1)"}))
    code, out, err = run(capsys, "glue", "--product", pk, "--tuple-file", str(tuple_file))
    assert code == 1
    assert "kernel condition violated" in err


def test_pairing(square, capsys, tmp_path):
    funcs = [
        {"0,0": 0, "0,1": 0, "1,0": 1, "1,1": 1},
        {"0,0": 0, "0,1": 1, "1,0": 0, "1,1": 1},
        {"0,0": "1/2", "0,1": "1/2", "1,0": "1/2", "1,1": "1/2"},
    ]
    f = tmp_path / "funcs.json"
    f.write_text(json.dumps(funcs))
    code, out, err = run(capsys, "pairing", "--product", square,
                         "--functions-file", str(f), "--json")
    assert code == 0
    assert json.loads(out) == {"pairing": 0}


def test_fourier_commands(capsys):
    code, out, err = run(capsys, "fourier", "convert", "--d", "1", "--expr", "C(0)")
    assert code == 0 and out.strip() == "1/2*F(0) + 1/2*F(1)"
    code, out, err = run(capsys, "fourier", "convert", "--d", "1", "--from-dual",
                         "--expr", "F(1)")
    assert code == 0 and out.strip() == "C(0) - C(1)"
    code, out, err = run(capsys, "fourier", "deg", "--d", "2", "--words", "10,01,11")
    assert code == 0 and out.strip() == "16"
    code, out, err = run(capsys, "fourier", "vanish", "--d", "2", "--json",
                         "--words", "10,10,10")
    data = json.loads(out)
    assert code == 0 and data["vanishes"] and data["fourier_degree"] == 0
    code, out, err = run(capsys, "fourier", "check-relations", "--d", "1")
    assert code == 0
    code, out, err = run(capsys, "fourier", "check-iso", "--d", "1", "--degree", "2",
                         "--json")
    assert code == 0 and json.loads(out)["saturated_equal"]


def test_fourier_bad_words(capsys):
    code, out, err = run(capsys, "fourier", "deg", "--d", "2", "--words", "10,01")
    assert code == 1 and "error" in err
    code, out, err = run(capsys, "fourier", "deg", "--d", "2", "--words", "10,01,2x")
    assert code == 1 and "error" in err


def test_verify_cli(capsys):
    code, out, err = run(capsys, "verify", "--suite", "structure", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True
    assert all(r["pass"] for r in data["results"]["structure"])
    code, out, err = run(capsys, "verify", "--suite", "structure")
    assert code == 0
    assert out.count("[PASS]") == 3


def test_error_paths(square, capsys, tmp_path):
    code, out, err = run(capsys, "deg", "--product", square, "--expr", "C(5,5)^3")
    assert code == 1 and "graph input error" in err
    code, out, err = run(capsys, "deg", "--product", str(tmp_path / "none.json"),
                         "--expr", "C(0,0)^3")
    assert code == 1 and "cannot read" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out, err = run(capsys, "deg", "--product", str(bad), "--expr", "C(0,0)^3")
    assert code == 1 and "malformed JSON" in err
    code, out, err = run(capsys, "deg", "--product", square, "--expr", "C(0,0)^")
    assert code == 1 and "parse error" in err
    disconnected = tmp_path / "disc.json"
    disconnected.write_text(json.dumps(
        {"factors": [{"vertices": [0, 1, 2], "edges": [[0, 1]]}]}))
    code, out, err = run(capsys, "basis", "--product", str(disconnected), "--k", "1")
    assert code == 1 and "disconnected" in err
