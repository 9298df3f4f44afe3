"""Pydantic models for the JSON documents read and written by the CLI.

This module defines the data models used for matroid input, subdivision
input, cycle output and the reports of the ``polynomials``, ``faces`` and
``verify`` commands. All numbers are exact integers.

Models:
    BasesDocument: A matroid given by its ground-set size and bases.
    SubdivisionDocument: A parent matroid and the cells of a subdivision.
    CycleEntry: One weighted cone of a cycle.
    CycleDocument: A tropical cycle in the braid representation.
    PolynomialReport: Output of the ``polynomials`` command.
    FacesReport: Output of the ``faces`` command.
    CaseResult: One case of a verification suite.
    VerificationReport: Output of the ``verify`` command.

Example:
    >>> from matroid_csm.models.schemas import BasesDocument, CycleDocument
    >>> doc = BasesDocument(size=3, bases=[[0, 1], [0, 2], [1, 2]])
    >>> cycle = CycleDocument.model_validate_json(
    ...     '{"ambient": 4, "dim": 0, "entries": [{"chain": [], "weight": -2}]}'
    ... )
"""

from typing import List, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator


class BasesDocument(BaseModel):
    """A matroid given explicitly by its bases.

    Attributes:
        size: Number of ground elements, numbered 0..size-1.
        bases: Every basis as a list of element indices.

    Example:
        >>> BasesDocument(size=2, bases=[[0], [1]])
    """

    size: int = Field(..., ge=0, le=12, description="Number of ground elements")
    bases: List[List[int]] = Field(..., description="Bases as lists of element indices")


MatroidSpec = Union[str, BasesDocument]


class SubdivisionDocument(BaseModel):
    """A matroid subdivision given by its parent and cells.

    Each entry is either a catalog name such as ``"uniform:2,4"`` or a
    bases object.
    """

    parent: MatroidSpec = Field(..., description="Matroid whose polytope is subdivided")
    cells: List[MatroidSpec] = Field(..., min_length=1, description="Cell matroids")


class CycleEntry(BaseModel):
    chain: List[List[int]] = Field(..., description="Chain of subsets, smallest first")
    weight: int = Field(..., description="Nonzero integer weight")

    @field_validator("weight")
    @classmethod
    def weight_nonzero(cls, value: int) -> int:
        if value == 0:
            raise ValueError("cycle documents list nonzero weights only")
        return value


class CycleDocument(BaseModel):
    """A tropical cycle in R^ambient / R(1, ..., 1).

    Attributes:
        ambient: Number of coordinates.
        dim: Dimension of the cycle, the length of every chain.
        entries: Weighted cones in canonical order.
    """

    ambient: int = Field(..., ge=1, description="Number of coordinates")
    dim: int = Field(..., ge=0, description="Cycle dimension")
    entries: List[CycleEntry] = Field(default_factory=list, description="Weighted cones")

    @model_validator(mode="after")
    def chains_are_strict(self) -> "CycleDocument":
        for entry in self.entries:
            if len(entry.chain) != self.dim:
                raise ValueError(f"chain {entry.chain} has length {len(entry.chain)}, expected {self.dim}")
            previous: set = set()
            for subset in entry.chain:
                current = set(subset)
                if len(current) != len(subset) or not current or len(current) >= self.ambient:
                    raise ValueError(f"chain {entry.chain} has an empty, full or repeated subset")
                if not previous < current:
                    raise ValueError(f"chain {entry.chain} is not strictly increasing")
                if any(not 0 <= i < self.ambient for i in current):
                    raise ValueError(f"chain {entry.chain} leaves 0..{self.ambient - 1}")
                previous = current
        return self


class PolynomialReport(BaseModel):
    """Polynomial invariants of one matroid; coefficient lists start at degree 0."""

    matroid: str = Field(..., description="The matroid spec as given")
    size: int
    rank: int
    charpoly: List[int] = Field(..., description="Characteristic polynomial")
    reduced_charpoly: Optional[List[int]] = Field(None, description="chi / (x - 1)")
    beta: int
    degree_polynomial: Optional[List[int]] = Field(
        None, description="Coefficients deg csm_k(M)"
    )
    hvector_holds: Optional[bool] = Field(
        None, description="Degree polynomial equals the shifted reduced polynomial"
    )
    euler_characteristic: Optional[int] = None
    gpoly: Optional[List[int]] = Field(None, description="g-polynomial where supported")


class FacesReport(BaseModel):
    matroid: str
    dim: int
    f_vector: List[int] = Field(..., description="Face counts by dimension, vertices first")
    components: List[List[int]] = Field(..., description="Connected components of the matroid")


class CaseResult(BaseModel):
    case: str = Field(..., description="Case name, e.g. 'uniform:3,4/k=1'")
    passed: bool
    detail: str = ""


class VerificationReport(BaseModel):
    suite: str
    max_size: int
    passed: bool
    total: int
    failures: int
    cases: List[CaseResult] = Field(default_factory=list)
