import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from matroid_csm.commands.parsing import (
    cycle_to_document,
    document_to_cycle,
    load_bases_file,
    load_cycle_json,
    load_subdivision_file,
    resolve_matroid_spec,
)
from matroid_csm.exceptions import SpecParseError
from matroid_csm.models.schemas import BasesDocument, CycleDocument, SubdivisionDocument
from matroid_csm.services.bergman import csm_cycle
from matroid_csm.services.catalog import graphic_complete, non_fano, octahedron_subdivisions
from matroid_csm.services.matroid import Matroid

DATA = Path(__file__).resolve().parent.parent / "data"


def test_cycle_document_round_trip(k4):
    cycle = csm_cycle(k4, 1)
    document = cycle_to_document(cycle)
    assert all(entry.weight != 0 for entry in document.entries)
    assert load_cycle_json(document.model_dump_json()) == cycle
    assert document_to_cycle(document) == cycle


def test_cycle_document_shape(u34):
    document = cycle_to_document(csm_cycle(u34, 1))
    assert document.ambient == 4
    assert document.dim == 1
    assert [entry.chain for entry in document.entries] == [[[0]], [[1]], [[2]], [[3]]]
    assert {entry.weight for entry in document.entries} == {-1}


def test_cycle_document_validation():
    with pytest.raises(ValidationError):
        CycleDocument(ambient=4, dim=1, entries=[{"chain": [[0]], "weight": 0}])
    with pytest.raises(ValidationError):
        CycleDocument(ambient=4, dim=2, entries=[{"chain": [[0, 1], [0]], "weight": 1}])
    with pytest.raises(ValidationError):
        CycleDocument(ambient=4, dim=1, entries=[{"chain": [[0, 1, 2, 3]], "weight": 1}])
    with pytest.raises(ValidationError):
        CycleDocument(ambient=4, dim=1, entries=[{"chain": [[7]], "weight": 1}])
    with pytest.raises(ValidationError):
        CycleDocument(ambient=4, dim=2, entries=[{"chain": [[0]], "weight": 1}])


def test_load_cycle_json_reports_parse_errors():
    with pytest.raises(SpecParseError):
        load_cycle_json('{"ambient": 4}')


def test_matroid_specs(u24):
    assert resolve_matroid_spec("uniform:2,4") == u24
    document = BasesDocument(size=3, bases=[[0, 1], [0, 2], [1, 2]])
    assert resolve_matroid_spec(document) == Matroid.uniform(2, 3)
    with pytest.raises(SpecParseError):
        resolve_matroid_spec(BasesDocument(size=4, bases=[[0, 1], [2, 3]]))


def test_subdivision_document_accepts_names_and_bases():
    document = SubdivisionDocument.model_validate(
        {"parent": "uniform:2,4", "cells": [{"size": 4, "bases": [[0, 1]]}, "uniform:2,4"]}
    )
    assert document.parent == "uniform:2,4"
    assert isinstance(document.cells[0], BasesDocument)
    assert document.cells[1] == "uniform:2,4"


def test_load_bases_file(tmp_path, k4):
    path = tmp_path / "k4.json"
    path.write_text(json.dumps({"size": 6, "bases": k4.to_sets()}))
    assert load_bases_file(path) == k4


def test_load_bases_file_errors(tmp_path):
    with pytest.raises(SpecParseError):
        load_bases_file(tmp_path / "missing.json")
    broken = tmp_path / "broken.json"
    broken.write_text('{"size": 3}')
    with pytest.raises(SpecParseError):
        load_bases_file(broken)
    not_matroid = tmp_path / "not_matroid.json"
    not_matroid.write_text('{"size": 4, "bases": [[0, 1], [2, 3]]}')
    with pytest.raises(SpecParseError):
        load_bases_file(not_matroid)


def test_load_subdivision_file(tmp_path, u24):
    path = tmp_path / "split.json"
    path.write_text(
        json.dumps(
            {
                "parent": "uniform:2,4",
                "cells": [
                    {"size": 4, "bases": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3]]},
                    {"size": 4, "bases": [[0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]},
                ],
            }
        )
    )
    subdivision = load_subdivision_file(path)
    assert subdivision.parent == u24
    assert len(subdivision.cells) == 2


def test_bundled_data_matches_the_catalog():
    for name, split in octahedron_subdivisions().items():
        filename = "octahedron_" + name.split(":")[1].replace("|", "_") + ".json"
        assert load_subdivision_file(DATA / "subdivisions" / filename) == split, name
    assert load_bases_file(DATA / "matroids" / "k4.json") == graphic_complete(4)
    assert load_bases_file(DATA / "matroids" / "nonfano.json") == non_fano()


def test_bundled_data_is_pretty_printed():
    for path in sorted(DATA.glob("*/*.json")):
        text = path.read_text()
        assert text == json.dumps(json.loads(text), indent=2) + "\n", path.name
