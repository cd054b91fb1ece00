"""Tests for the command line front end."""

import json
import logging

import pytest

from src.cli import build_parser, run


def test_triangle_csv(capsys):
    assert run(["triangle", "--pattern", "1324", "--nmax", "5", "--jobs", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n,k,count"
    assert lines[1] == "1,0,1"
    assert "4,3,6" in lines
    assert lines[-1] == "5,10,1"
    assert len(lines) == 1 + 1 + 2 + 4 + 7 + 11


def test_triangle_output_does_not_depend_on_jobs(capsys):
    run(["triangle", "--pattern", "1324", "--nmax", "7", "--jobs", "1"])
    single = capsys.readouterr().out
    run(["triangle", "--pattern", "1324", "--nmax", "7", "--jobs", "2"])
    assert capsys.readouterr().out == single


def test_triangle_json(capsys):
    assert run(["triangle", "--pattern", "132", "--nmax", "4", "--kmax", "2", "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["schema"] == 1
    assert report["k_max"] == 2
    assert report["rows"] == [[1], [1, 1], [1, 1, 2], [1, 1, 2]]


def test_count_and_mahonian(capsys):
    assert run(["count", "--pattern", "132", "--n", "5"]) == 0
    assert capsys.readouterr().out == "n,count\n5,42\n"
    assert run(["mahonian", "--n", "4", "--k", "3"]) == 0
    assert capsys.readouterr().out == "n,k,count\n4,3,6\n"


def test_column(capsys):
    assert run(["column", "--pattern", "321", "--k", "1", "--nmax", "4"]) == 0
    assert capsys.readouterr().out == "n,k,count\n1,1,0\n2,1,1\n3,1,2\n4,1,3\n"


def test_color(capsys):
    assert run(["color", "--perm", "364251"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["coloring"] == "RRBRBR"
    assert (report["red"], report["blue"]) == ("3621", "45")
    assert report["passed"]


def test_color_has_no_csv(capsys):
    assert run(["color", "--perm", "364251", "--format", "csv"]) == 2
    assert "no CSV output" in capsys.readouterr().err


def test_bound(capsys):
    assert run(["bound", "layered", "1", "2", "1"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["value"] == 16.0
    assert report["formula"] == "layered"
    assert run(["bound", "layered", "1", "2", "1", "--format", "text"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "16.0"
    assert out[-1] == "bound = root^2 = 16.0"


def test_biject(capsys):
    assert run(["biject", "132-forward", "--perm", "65723148"]) == 0
    assert json.loads(capsys.readouterr().out)["partition"] == "5+4+4+1+1"
    assert run(["biject", "1324-inverse", "--lam", "1", "--mu", "1", "--n", "5"]) == 0
    assert json.loads(capsys.readouterr().out)["perm"] == "21354"


def test_poly(capsys):
    assert run(["poly", "--pattern", "321", "--k", "1", "--nmax", "6", "--window", "3", "--jobs", "1"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] == "match"
    assert report["fit"]["coefficients"] == ["1", "-1"]


def test_check_exit_codes(capsys):
    assert run(["check", "comp-inv", "--nmax", "5"]) == 0
    assert json.loads(capsys.readouterr().out)["passed"]
    assert run(["check", "inv-monotone", "--pattern", "123", "--nmax", "6", "--jobs", "1"]) == 3
    assert not json.loads(capsys.readouterr().out)["passed"]


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["triangle"],
        ["triangle", "--pattern", "1324", "--nmax", "x"],
        ["frobnicate"],
        ["bound", "nope"],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(argv) == 2


def test_input_errors(capsys):
    assert run(["count", "--pattern", "1a3", "--n", "3"]) == 2
    assert capsys.readouterr().err.startswith("error: ")
    assert run(["biject", "1324-forward", "--perm", "1324"]) == 2
    assert run(["check", "comp-inv", "--pattern", "12"]) == 2


def test_help(capsys):
    assert run(["--help"]) == 0
    assert "permkit" in capsys.readouterr().out


def test_parser_commands():
    parser = build_parser()
    args = parser.parse_args(["bound", "rho"])
    assert args.jobs is None
    assert args.values == []


def test_ratio(capsys):
    assert run(["ratio", "--pattern", "231", "--k", "2", "--nmax", "6", "--jobs", "1"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["limit"] == "1"
    assert report["trend"] == "increasing"
    assert run(["ratio", "--pattern", "231", "--k", "2", "--nmax", "6", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[:2] == ["n,k,avoiders,total,ratio", "3,2,1,2,1/2"]
    assert lines[-1] == "6,2,10,14,5/7"
    assert run(["ratio", "--pattern", "231", "--k", "2", "--nmax", "0"]) == 2


def test_check_convolution_triple(capsys):
    assert run(["check", "convolution", "--triple", "1:21:1", "--nmax", "5", "--jobs", "1"]) == 0
    assert json.loads(capsys.readouterr().out)["parameters"]["patterns"] == "14325"
    assert run(["check", "convolution", "--triple", "1-21-1", "--nmax", "5"]) == 2


def test_log_level(capsys):
    root = logging.getLogger()
    level = root.level
    try:
        assert run(["--log-level", "bogus", "mahonian", "--n", "4", "--k", "3"]) == 2
        assert "invalid choice" in capsys.readouterr().err
        assert run(["--log-level", "warning", "mahonian", "--n", "4", "--k", "3"]) == 0
        assert root.level == logging.WARNING
        assert capsys.readouterr().out == "n,k,count\n4,3,6\n"
    finally:
        root.setLevel(level)
