"""Conversion between JSON documents and in-memory objects.

Every failure to turn user input into a matroid, a subdivision or a cycle
is reported as ``SpecParseError`` so the CLI can map it to exit code 2.
"""

import logging
from pathlib import Path
from typing import Union

from pydantic import ValidationError

from matroid_csm.exceptions import MatroidCSMError, SpecParseError
from matroid_csm.models.schemas import (
    BasesDocument,
    CycleDocument,
    CycleEntry,
    SubdivisionDocument,
)
from matroid_csm.services.catalog import matroid_from_name
from matroid_csm.services.matroid import Matroid, bits, elements
from matroid_csm.services.polytope import Subdivision
from matroid_csm.services.tropical import TropicalCycle

logger = logging.getLogger(__name__)


def matroid_from_document(document: BasesDocument) -> Matroid:
    """Validate a bases document as a matroid.

    Raises:
        SpecParseError: If the bases violate the matroid axioms or leave the
            ground set; the message names the offending bases.
    """
    try:
        return Matroid.from_bases(document.size, document.bases)
    except MatroidCSMError as exc:
        raise SpecParseError(f"bases document is not a matroid: {exc}") from exc


def resolve_matroid_spec(spec: Union[str, BasesDocument]) -> Matroid:
    if isinstance(spec, BasesDocument):
        return matroid_from_document(spec)
    return matroid_from_name(spec)


def _read(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecParseError(f"cannot read {path}: {exc}") from exc


def load_bases_file(path: Union[str, Path]) -> Matroid:
    """Read ``{"size": m, "bases": [[...], ...]}`` from a file."""
    try:
        document = BasesDocument.model_validate_json(_read(path))
    except ValidationError as exc:
        raise SpecParseError(f"invalid bases file {path}: {exc}") from exc
    logger.debug("Loaded %d bases from %s", len(document.bases), path)
    return matroid_from_document(document)


def load_subdivision_file(path: Union[str, Path]) -> Subdivision:
    """Read ``{"parent": spec, "cells": [spec, ...]}`` from a file."""
    try:
        document = SubdivisionDocument.model_validate_json(_read(path))
    except ValidationError as exc:
        raise SpecParseError(f"invalid subdivision file {path}: {exc}") from exc
    parent = resolve_matroid_spec(document.parent)
    cells = tuple(resolve_matroid_spec(cell) for cell in document.cells)
    return Subdivision(parent, cells)


def cycle_to_document(cycle: TropicalCycle) -> CycleDocument:
    """Canonical document: nonzero weights, chains in canonical order."""
    return CycleDocument(
        ambient=cycle.ambient,
        dim=cycle.dim,
        entries=[
            CycleEntry(chain=[list(elements(subset)) for subset in chain], weight=weight)
            for chain, weight in cycle.items()
        ],
    )


def document_to_cycle(document: CycleDocument) -> TropicalCycle:
    try:
        return TropicalCycle(
            document.ambient,
            document.dim,
            {tuple(bits(subset) for subset in entry.chain): entry.weight for entry in document.entries},
        )
    except MatroidCSMError as exc:
        raise SpecParseError(f"invalid cycle document: {exc}") from exc


def load_cycle_json(text: str) -> TropicalCycle:
    try:
        document = CycleDocument.model_validate_json(text)
    except ValidationError as exc:
        raise SpecParseError(f"invalid cycle document: {exc}") from exc
    return document_to_cycle(document)
