import json
from pathlib import Path

import pytest

from matroid_csm.commands.parsing import load_cycle_json
from matroid_csm.main import create_parser, main
from matroid_csm.services import tropical
from matroid_csm.services.bergman import csm_cycle
from matroid_csm.services.catalog import catalog
from matroid_csm.services.matroid import Matroid

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parser_has_all_commands():
    parser = create_parser()
    argvs = {
        "csm": ["--matroid", "fano", "--k", "0"],
        "polynomials": ["--matroid", "fano"],
        "faces": ["--bases-file", "k4.json"],
        "verify": ["--suite", "beta"],
    }
    for command, rest in argvs.items():
        args = parser.parse_args([command] + rest)
        assert args.command == command
        assert callable(args.handler)
        assert args.format == "json"


def test_csm_uniform_rays(capsys):
    code, out, _ = run(capsys, "csm", "--matroid", "uniform:3,4", "--k", "1")
    assert code == 0
    document = json.loads(out)
    assert document["ambient"] == 4
    assert document["entries"] == [
        {"chain": [[0]], "weight": -1},
        {"chain": [[1]], "weight": -1},
        {"chain": [[2]], "weight": -1},
        {"chain": [[3]], "weight": -1},
    ]
    assert load_cycle_json(out) == csm_cycle(Matroid.uniform(3, 4), 1)


def test_csm_origin_weight(capsys):
    code, out, _ = run(capsys, "csm", "--matroid", "uniform:2,4", "--k", "0")
    assert code == 0
    assert json.loads(out)["entries"] == [{"chain": [], "weight": -2}]


def test_csm_of_matroid_with_loop_is_empty(capsys, tmp_path):
    path = tmp_path / "loop.json"
    path.write_text('{"size": 4, "bases": [[0, 1], [0, 2], [1, 2]]}')
    code, out, _ = run(capsys, "csm", "--bases-file", str(path), "--k", "1")
    assert code == 0
    assert json.loads(out)["entries"] == []


def test_csm_table_format(capsys):
    code, out, _ = run(capsys, "csm", "--matroid", "uniform:3,4", "--k", "1", "--format", "table")
    assert code == 0
    assert out.splitlines()[0] == "ambient=4 dim=1"
    assert "({3})" in out


def test_bundled_bases_file(capsys):
    code, out, _ = run(capsys, "faces", "--bases-file", str(DATA / "matroids" / "k4.json"))
    assert code == 0
    report = json.loads(out)
    assert report["matroid"].startswith("file:")
    assert report["dim"] == 5
    assert report["f_vector"][0] == 16


@pytest.mark.slow
def test_polynomials_of_bundled_non_fano(capsys):
    code, out, _ = run(capsys, "polynomials", "--bases-file", str(DATA / "matroids" / "nonfano.json"))
    assert code == 0
    report = json.loads(out)
    assert report["beta"] == 4
    assert report["gpoly"] == [0, 4, 6, 3]
    assert report["hvector_holds"] is True


def test_precondition_error_exit_code(capsys):
    code, _, err = run(capsys, "csm", "--matroid", "uniform:2,4", "--k", "5")
    assert code == 3
    assert "error:" in err


def test_parse_error_exit_codes(capsys, tmp_path):
    assert run(capsys, "csm", "--matroid", "petersen", "--k", "0")[0] == 2
    path = tmp_path / "bad.json"
    path.write_text('{"size": 4, "bases": [[0, 1], [2, 3]]}')
    assert run(capsys, "csm", "--bases-file", str(path), "--k", "0")[0] == 2
    assert run(capsys, "csm", "--k", "0")[0] == 2
    assert run(capsys, "verify", "--suite", "nonsense")[0] == 2
    assert run(capsys, "verify", "--suite", "beta", "--max-size", "20")[0] == 2


def test_invalid_seed_is_a_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("MATROID_CSM_SEED_T", "1")
    code, _, err = run(capsys, "csm", "--matroid", "uniform:2,4", "--k", "0")
    assert code == 2
    assert "seed_t" in err


def test_polynomials_u34(capsys):
    code, out, _ = run(capsys, "polynomials", "--matroid", "uniform:3,4")
    assert code == 0
    report = json.loads(out)
    assert report["charpoly"] == [-3, 6, -4, 1]
    assert report["reduced_charpoly"] == [3, -3, 1]
    assert report["beta"] == 1
    assert report["degree_polynomial"] == [1, -1, 1]
    assert report["hvector_holds"] is True
    assert report["euler_characteristic"] == 1
    assert report["gpoly"] == [0, 1]


def test_polynomials_table_and_bundled_k4(capsys):
    code, out, _ = run(capsys, "polynomials", "--matroid", "uniform:2,4", "--format", "table")
    assert code == 0
    assert "t^2 + 2t" in out
    code, out, _ = run(capsys, "polynomials", "--bases-file", str(DATA / "matroids" / "k4.json"))
    assert json.loads(out)["gpoly"] == [0, 2, 2, 1]


def test_polynomials_degrees_come_from_the_divisor_method(capsys, monkeypatch):
    def fail(*args):
        raise AssertionError("polynomials must not run the displacement rule")

    monkeypatch.setattr(tropical, "_displace", fail)
    code, out, _ = run(capsys, "polynomials", "--matroid", "graphic:K4")
    assert code == 0
    report = json.loads(out)
    assert report["degree_polynomial"] == [2, -3, 1]
    assert report["hvector_holds"] is True
    assert report["gpoly"] == [0, 2, 2, 1]


@pytest.mark.slow
def test_polynomials_of_k5(capsys):
    code, out, _ = run(capsys, "polynomials", "--matroid", "graphic:K5")
    assert code == 0
    report = json.loads(out)
    assert report["degree_polynomial"] == [-6, 11, -6, 1]
    assert report["reduced_charpoly"] == [-24, 26, -9, 1]
    assert report["hvector_holds"] is True


def test_faces(capsys):
    code, out, _ = run(capsys, "faces", "--matroid", "uniform:2,4")
    assert code == 0
    report = json.loads(out)
    assert report["f_vector"] == [6, 12, 8, 1]
    assert report["components"] == [[0, 1, 2, 3]]


@pytest.mark.parametrize("suite", ["balance", "valuation", "pushforward", "gpoly", "support", "beta", "uniform"])
def test_verify_suites_pass(capsys, suite):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--max-size", "4")
    report = json.loads(out)
    assert code == 0, [case for case in report["cases"] if not case["passed"]]
    assert report["passed"] is True
    assert report["failures"] == 0
    names = [case["case"] for case in report["cases"]]
    assert names == sorted(names)


def test_verify_pushforward_covers_every_non_coloop(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "pushforward", "--max-size", "5")
    assert code == 0
    names = {case["case"] for case in json.loads(out)["cases"]}
    expected = {
        f"{name}/i={i}/k={k}"
        for name, matroid in catalog(5).items()
        for i in range(matroid.size)
        if not matroid.is_coloop(i)
        for k in range(matroid.full_rank)
    }
    assert expected <= names
    assert any(name.startswith("rank3:") for name in names)
    assert not any(name.startswith("uniform:3,3/") for name in names)


@pytest.mark.slow
def test_verify_pushforward_on_k4(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "pushforward", "--max-size", "6")
    assert code == 0
    names = {case["case"] for case in json.loads(out)["cases"]}
    assert {f"graphic:K4/i={i}/k={k}" for i in range(6) for k in range(3)} <= names


def test_verify_hvector_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "hvector", "--max-size", "5", "--workers", "2")
    report = json.loads(out)
    assert code == 0
    assert report["total"] == len(catalog(5))
    assert all(case["passed"] for case in report["cases"])


def test_verify_valuation_with_bundled_subdivision(capsys):
    path = DATA / "subdivisions" / "octahedron_02_13.json"
    code, out, _ = run(capsys, "verify", "--suite", "valuation", "--max-size", "3", "--subdivision-file", str(path))
    assert code == 0
    assert "file" in [case["case"] for case in json.loads(out)["cases"]]


def test_verify_reports_failures(capsys, tmp_path):
    path = tmp_path / "half.json"
    path.write_text('{"parent": "uniform:2,4", "cells": [{"size": 4, "bases": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3]]}]}')
    code, out, _ = run(
        capsys, "verify", "--suite", "valuation", "--max-size", "2", "--subdivision-file", str(path), "--format", "table"
    )
    assert code == 1
    assert "FAIL  file  invalid subdivision (coverage)" in out


@pytest.mark.slow
@pytest.mark.parametrize("suite", ["balance", "hvector", "support", "beta"])
def test_verify_full_catalog(capsys, suite):
    code, _, _ = run(capsys, "verify", "--suite", suite, "--max-size", "7")
    assert code == 0
