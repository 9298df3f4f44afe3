"""Matroid polytopes, their faces and matroid subdivisions.

The face of Q(M) maximizing a direction v in the open cone of a chain
S1 < ... < Sl is again a matroid polytope, that of
M|S1 + M|S2/S1 + ... + M/Sl. Faces are therefore enumerated and compared
purely through basis sets, and a face of a face is a face, which lets
:func:`all_faces` walk down from Q(M) one subset direction at a time.

A ``Subdivision`` is given by its cells. :func:`validate_subdivision`
checks containment and equal rank of the cells, coverage (basis union and
barycenter samples) and that cells meet in common proper faces.
:func:`check_csm_valuation` then tests the inclusion-exclusion identity of
CSM cycles over the interior faces.

Example:
    >>> from matroid_csm.services.matroid import Matroid
    >>> from matroid_csm.services.polytope import all_faces, f_vector
    >>> f_vector(Matroid.uniform(2, 4))
    (6, 12, 8, 1)
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from matroid_csm.services.bergman import csm_cycle
from matroid_csm.services.flat_lattice import beta
from matroid_csm.services.matroid import GroundSubset, Matroid, format_subset
from matroid_csm.services.tropical import TropicalCycle, validate_chain

logger = logging.getLogger(__name__)


def face_dimension(matroid: Matroid) -> int:
    """dim Q(M) = size minus the number of connected components."""
    return matroid.size - len(matroid.connected_components)


@dataclass(frozen=True)
class Face:
    matroid: Matroid
    dim: int


@dataclass(frozen=True)
class MatroidPolytope:
    """Q(M): the convex hull of the indicator vectors of the bases.

    Attributes:
        matroid: The matroid.
    """

    matroid: Matroid

    @cached_property
    def vertices(self) -> np.ndarray:
        """0/1 array with one row per basis, rows in sorted basis order."""
        rows = self.matroid.to_sets()
        array = np.zeros((len(rows), self.matroid.size), dtype=np.int64)
        for r, basis in enumerate(rows):
            array[r, basis] = 1
        return array

    @property
    def dim(self) -> int:
        return face_dimension(self.matroid)

    @property
    def barycenter_numerator(self) -> np.ndarray:
        """Sum of the vertices; the barycenter is this divided by the vertex count."""
        return self.vertices.sum(axis=0)

    def edges(self) -> List[Tuple[GroundSubset, GroundSubset]]:
        """Pairs of bases spanning one-dimensional faces."""
        out = []
        for face in all_faces(self.matroid):
            if face.dim == 1:
                first, second = sorted(face.matroid.bases)
                out.append((first, second))
        return sorted(out)

    def edge_directions(self) -> List[np.ndarray]:
        rows = {basis: np.array([basis >> i & 1 for i in range(self.matroid.size)])
                for basis in self.matroid.bases}
        return [rows[b] - rows[a] for a, b in self.edges()]


def face_in_direction(matroid: Matroid, chain: Sequence[GroundSubset]) -> Matroid:
    """The face matroid selected by the open cone of ``chain``, original labels kept."""
    chain = validate_chain(chain, matroid.size)
    return Matroid(matroid.size, matroid.chain_face_bases(chain))


@lru_cache(maxsize=512)
def all_faces(matroid: Matroid) -> Tuple[Face, ...]:
    """Every nonempty face of Q(M), largest first, deduplicated by basis set."""
    seen: Dict[frozenset, Matroid] = {matroid.bases: matroid}
    pending = [matroid]
    proper_subsets = range(1, matroid.ground)
    while pending:
        current = pending.pop()
        for subset in proper_subsets:
            bases = current.chain_face_bases((subset,))
            if bases not in seen:
                face = Matroid(matroid.size, bases)
                seen[bases] = face
                pending.append(face)
    faces = [Face(face, face_dimension(face)) for face in seen.values()]
    logger.debug("Q(%r) has %d faces", matroid, len(faces))
    return tuple(sorted(faces, key=lambda f: (-f.dim, sorted(f.matroid.bases))))


def f_vector(matroid: Matroid) -> Tuple[int, ...]:
    """Number of faces of Q(M) in each dimension, from vertices upwards."""
    counts = Counter(face.dim for face in all_faces(matroid))
    return tuple(counts.get(d, 0) for d in range(face_dimension(matroid) + 1))


@lru_cache(maxsize=16)
def _subset_incidence(size: int) -> np.ndarray:
    """Row S is the indicator vector of the subset with bitmask S."""
    masks = np.arange(1 << size, dtype=np.int64)
    return ((masks[:, None] >> np.arange(size, dtype=np.int64)) & 1).astype(np.int64)


def contains_point(matroid: Matroid, numerator: np.ndarray, denominator: int) -> bool:
    """Whether numerator / denominator lies in Q(M).

    Uses x(S) <= r(S) for every subset with x(E) = r(M); the test is done on
    integers by scaling with the denominator.
    """
    loads = _subset_incidence(matroid.size) @ numerator
    ranks = np.asarray(matroid.rank_table, dtype=np.int64) * denominator
    return bool(np.all(loads <= ranks)) and int(loads[-1]) == int(ranks[-1])


@dataclass(frozen=True)
class Subdivision:
    """A matroid subdivision of Q(parent) given by its cell matroids."""

    parent: Matroid
    cells: Tuple[Matroid, ...]

    @classmethod
    def trivial(cls, matroid: Matroid) -> "Subdivision":
        return cls(matroid, (matroid,))


@dataclass(frozen=True)
class SubdivisionCheck:
    """Outcome of :func:`validate_subdivision`.

    Attributes:
        valid: Whether every clause holds.
        clause: ``"cells"``, ``"coverage"`` or ``"intersection"`` for the
            first violated clause.
        detail: Human-readable description with witnesses.
    """

    valid: bool
    clause: Optional[str] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.valid


def _bases_text(bases: Iterable[GroundSubset]) -> str:
    return "[" + " ".join(format_subset(b) for b in sorted(bases)) + "]"


def validate_subdivision(subdivision: Subdivision) -> SubdivisionCheck:
    """Check that the cells form a matroid subdivision of Q(parent)."""
    parent = subdivision.parent
    cells = subdivision.cells
    top_dim = face_dimension(parent)
    if not cells:
        return SubdivisionCheck(False, "cells", "no cells given")

    for index, cell in enumerate(cells):
        if cell.size != parent.size or cell.full_rank != parent.full_rank:
            return SubdivisionCheck(
                False, "cells", f"cell {index} has a different ground set or rank"
            )
        if not cell.bases <= parent.bases:
            extra = cell.bases - parent.bases
            return SubdivisionCheck(
                False, "cells", f"cell {index} has vertices {_bases_text(extra)} outside Q(parent)"
            )
        if face_dimension(cell) != top_dim:
            return SubdivisionCheck(
                False, "cells", f"cell {index} has dimension {face_dimension(cell)}, expected {top_dim}"
            )

    covered = frozenset().union(*(cell.bases for cell in cells))
    if covered != parent.bases:
        return SubdivisionCheck(
            False, "coverage", f"vertices {_bases_text(parent.bases - covered)} lie in no cell"
        )
    for face in all_faces(parent):
        polytope = MatroidPolytope(face.matroid)
        numerator = polytope.barycenter_numerator
        denominator = len(face.matroid.bases)
        if not any(contains_point(cell, numerator, denominator) for cell in cells):
            return SubdivisionCheck(
                False,
                "coverage",
                f"barycenter of face {_bases_text(face.matroid.bases)} lies in no cell",
            )

    for i, first in enumerate(cells):
        first_faces = {face.matroid.bases for face in all_faces(first)}
        for j in range(i + 1, len(cells)):
            second = cells[j]
            common = first.bases & second.bases
            if common:
                second_faces = {face.matroid.bases for face in all_faces(second)}
                if (
                    common == first.bases
                    or common == second.bases
                    or common not in first_faces
                    or common not in second_faces
                ):
                    return SubdivisionCheck(
                        False,
                        "intersection",
                        f"cells {i} and {j} share {_bases_text(common)}, not a proper face of both",
                    )
            if contains_point(
                first, MatroidPolytope(second).barycenter_numerator, len(second.bases)
            ) or contains_point(
                second, MatroidPolytope(first).barycenter_numerator, len(first.bases)
            ):
                return SubdivisionCheck(
                    False, "intersection", f"cells {i} and {j} overlap in their interiors"
                )
    return SubdivisionCheck(True)


def interior_faces(subdivision: Subdivision) -> Tuple[Face, ...]:
    """Faces of the cells not contained in a proper face of Q(parent)."""
    parent = subdivision.parent
    boundary = [
        face.matroid.bases for face in all_faces(parent) if face.matroid.bases != parent.bases
    ]
    faces: Dict[frozenset, Face] = {}
    for cell in subdivision.cells:
        for face in all_faces(cell):
            faces.setdefault(face.matroid.bases, face)
    interior = [
        face
        for bases, face in faces.items()
        if not any(bases <= outer for outer in boundary)
    ]
    return tuple(sorted(interior, key=lambda f: (-f.dim, sorted(f.matroid.bases))))


def valuation_defect(subdivision: Subdivision, k: int) -> TropicalCycle:
    """csm_k(parent) minus the signed sum of csm_k over interior faces."""
    parent = subdivision.parent
    top_dim = face_dimension(parent)
    total = csm_cycle(parent, k).canonical()
    for face in interior_faces(subdivision):
        sign = -1 if (top_dim - face.dim) % 2 else 1
        total = total - csm_cycle(face.matroid, k).scale(sign)
    return total


def check_csm_valuation(subdivision: Subdivision, k: int) -> bool:
    return valuation_defect(subdivision, k).is_empty


def check_beta_valuation(subdivision: Subdivision) -> bool:
    """beta(parent) equals the sum of beta over full-dimensional interior faces."""
    parent = subdivision.parent
    full = parent.size - 1
    return beta(parent) == sum(
        beta(face.matroid) for face in interior_faces(subdivision) if face.dim == full
    )


def splits_along_components(subdivision: Subdivision) -> bool:
    """Every cell is the direct sum of its restrictions to the parent's components."""
    components = subdivision.parent.connected_components
    for cell in subdivision.cells:
        product = 1
        for component in components:
            product *= len({basis & component for basis in cell.bases})
        if product != len(cell.bases):
            return False
    return True


def product_subdivision(first: Subdivision, second: Subdivision) -> Subdivision:
    """Cells of Q(A) x Q(B): direct sums of one cell from each factor."""
    return Subdivision(
        first.parent.direct_sum(second.parent),
        tuple(a.direct_sum(b) for a in first.cells for b in second.cells),
    )


def describe_face(face: Face) -> str:
    parts = [format_subset(component) for component in face.matroid.connected_components]
    return f"dim {face.dim}, {len(face.matroid.bases)} vertices, components {' '.join(parts)}"

