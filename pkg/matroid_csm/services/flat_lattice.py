"""Lattice of flats, Möbius function and the polynomials built from it.

This module enumerates the flats of a matroid rank by rank, evaluates the
Möbius function by its defining recursion and derives the characteristic
polynomial, its reduced form and the beta invariant. Lattices are cached
per matroid; Möbius rows are memoized per lattice behind a lock so a
lattice can be shared between worker threads.

Example:
    >>> from matroid_csm.services.matroid import Matroid
    >>> from matroid_csm.services.flat_lattice import (
    ...     beta, lattice_of_flats, reduced_characteristic_polynomial)
    >>> lattice = lattice_of_flats(Matroid.uniform(3, 4))
    >>> [len(level) for level in lattice.flats_by_rank]
    [1, 4, 6, 1]
    >>> beta(Matroid.uniform(2, 4))
    2
    >>> str(reduced_characteristic_polynomial(Matroid.uniform(3, 4)))
    't^2 - 3t + 3'
"""

import logging
import threading
from functools import lru_cache
from typing import Dict, Tuple

from matroid_csm.exceptions import (
    ConsistencyError,
    InvalidFlatError,
    InvalidParametersError,
)
from matroid_csm.services.matroid import GroundSubset, Matroid, format_subset
from matroid_csm.services.polynomial import IntPolynomial

logger = logging.getLogger(__name__)


class FlatLattice:
    """Flats of a matroid graded by rank, with memoized Möbius values.

    Attributes:
        matroid: The matroid the lattice belongs to.
        flats_by_rank: Flats grouped by rank 0..r(M), each group sorted.
        rank_of: Rank of every flat.
        bottom: The closure of the empty set.
        top: The full ground set.
    """

    def __init__(self, matroid: Matroid):
        self.matroid = matroid
        self.bottom: GroundSubset = matroid.closure(0)
        self.top: GroundSubset = matroid.ground

        levels = [[self.bottom]]
        seen = {self.bottom}
        for _ in range(matroid.full_rank):
            next_level = set()
            for flat in levels[-1]:
                for i in range(matroid.size):
                    if flat >> i & 1:
                        continue
                    cover = matroid.closure(flat | 1 << i)
                    if cover not in seen:
                        next_level.add(cover)
            seen.update(next_level)
            levels.append(sorted(next_level))

        self.flats_by_rank: Tuple[Tuple[GroundSubset, ...], ...] = tuple(
            tuple(level) for level in levels
        )
        self.rank_of: Dict[GroundSubset, int] = {
            flat: r for r, level in enumerate(self.flats_by_rank) for flat in level
        }
        self._rows: Dict[GroundSubset, Dict[GroundSubset, int]] = {}
        self._lock = threading.Lock()
        logger.debug("Enumerated %d flats of %r", len(self.rank_of), matroid)

    @property
    def flats(self) -> Tuple[GroundSubset, ...]:
        """All flats ordered by rank, then by bitmask."""
        return tuple(flat for level in self.flats_by_rank for flat in level)

    @property
    def proper_flats(self) -> Tuple[GroundSubset, ...]:
        """Flats other than the empty set and the ground set."""
        return tuple(f for f in self.flats if f != 0 and f != self.top)

    def __contains__(self, subset: GroundSubset) -> bool:
        return subset in self.rank_of

    def _require_flat(self, subset: GroundSubset) -> None:
        if subset not in self.rank_of:
            raise InvalidFlatError(f"{format_subset(subset)} is not a flat of {self.matroid!r}")

    def _row(self, lower: GroundSubset) -> Dict[GroundSubset, int]:
        with self._lock:
            row = self._rows.get(lower)
            if row is not None:
                return row
            row = {lower: 1}
            for flat in self.flats[self.flats.index(lower) + 1:]:
                if flat & lower != lower or flat == lower:
                    continue
                row[flat] = -sum(
                    value
                    for below, value in row.items()
                    if below & flat == below
                )
            self._rows[lower] = row
            return row

    def mobius(self, lower: GroundSubset, upper: GroundSubset) -> int:
        """Möbius value mu(lower, upper); zero unless lower is inside upper.

        Raises:
            InvalidFlatError: If either argument is not a flat.
        """
        self._require_flat(lower)
        self._require_flat(upper)
        return self._row(lower).get(upper, 0)

    @property
    def mobius_from_bottom(self) -> Dict[GroundSubset, int]:
        return dict(self._row(self.bottom))


@lru_cache(maxsize=2048)
def lattice_of_flats(matroid: Matroid) -> FlatLattice:
    return FlatLattice(matroid)


def mobius(lattice: FlatLattice, lower: GroundSubset, upper: GroundSubset) -> int:
    return lattice.mobius(lower, upper)


def characteristic_polynomial(matroid: Matroid) -> IntPolynomial:
    """chi_M(x) = sum over flats F of mu(0, F) x^(r(M) - r(F)); zero with a loop."""
    if matroid.has_loops:
        return IntPolynomial()
    lattice = lattice_of_flats(matroid)
    coefficients = [0] * (matroid.full_rank + 1)
    for flat, value in lattice.mobius_from_bottom.items():
        coefficients[matroid.full_rank - lattice.rank_of[flat]] += value
    return IntPolynomial(tuple(coefficients))


def reduced_characteristic_polynomial(matroid: Matroid) -> IntPolynomial:
    """chi_M(x) / (x - 1), by exact division.

    Raises:
        InvalidParametersError: For the rank-0 loopless matroid, whose
            characteristic polynomial is the constant 1.
        ConsistencyError: If the division leaves a remainder.
    """
    if matroid.has_loops:
        return IntPolynomial()
    if matroid.full_rank == 0:
        raise InvalidParametersError(
            "the reduced characteristic polynomial needs rank >= 1"
        )
    quotient, remainder = characteristic_polynomial(matroid).divmod_linear(1)
    if remainder != 0:
        raise ConsistencyError(
            f"x - 1 does not divide the characteristic polynomial of {matroid!r} "
            f"(remainder {remainder})"
        )
    return quotient


@lru_cache(maxsize=4096)
def beta(matroid: Matroid) -> int:
    """Beta invariant, from the Möbius sum and cross-checked against chi-bar(1).

    Raises:
        ConsistencyError: If the two formulas disagree.
    """
    if matroid.has_loops:
        return 0
    lattice = lattice_of_flats(matroid)
    rank = matroid.full_rank
    via_mobius = (-1) ** rank * sum(
        value * lattice.rank_of[flat]
        for flat, value in lattice.mobius_from_bottom.items()
    )
    if rank >= 1:
        via_reduced = (-1) ** (rank - 1) * reduced_characteristic_polynomial(matroid)(1)
        if via_mobius != via_reduced:
            raise ConsistencyError(
                f"beta of {matroid!r}: Möbius sum gives {via_mobius}, "
                f"reduced characteristic polynomial gives {via_reduced}"
            )
    return via_mobius
