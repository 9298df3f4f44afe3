"""Exact lattice arithmetic in Z^N / Z(1, ..., 1).

Vectors of the ambient space R^N modulo the all-ones vector are written in
reduced coordinates: x is sent to (x_1 - x_0, ..., x_{N-1} - x_0), which
identifies the quotient lattice with Z^(N-1). Ranks and solves go through
``DomainMatrix`` over QQ; lattice indices are products of invariant
factors over ZZ.
"""

from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError
from sympy.polys.matrices.normalforms import invariant_factors

from matroid_csm.services.matroid import GroundSubset

Vector = Tuple[int, ...]


@lru_cache(maxsize=65536)
def indicator(subset: GroundSubset, ambient: int) -> Vector:
    """Reduced coordinates of the indicator vector e_S."""
    first = subset & 1
    return tuple((subset >> j & 1) - first for j in range(1, ambient))


def reduce_vector(vector: Sequence[int]) -> Vector:
    """Reduced coordinates of an arbitrary vector of Z^N."""
    return tuple(value - vector[0] for value in vector[1:])


def _matrix(columns: Sequence[Sequence[int]], rows: int, domain) -> DomainMatrix:
    return DomainMatrix(
        [[domain(column[r]) for column in columns] for r in range(rows)],
        (rows, len(columns)),
        domain,
    )


def rank(columns: Sequence[Sequence[int]], dimension: int) -> int:
    """Rank over QQ of vectors given in reduced coordinates."""
    if not columns or dimension == 0:
        return 0
    return _matrix(columns, dimension, QQ).rank()


def saturation_index(columns: Sequence[Sequence[int]], dimension: int) -> int:
    """Index of the Z-span of the columns inside its saturation.

    It is the product of the nonzero invariant factors; when the columns
    span the whole space it is the index in Z^dimension itself.
    """
    if not columns or dimension == 0:
        return 1
    factors = invariant_factors(_matrix(columns, dimension, ZZ))
    index = 1
    for factor in factors:
        value = abs(int(factor))
        if value:
            index *= value
    return index


def solve(
    columns: Sequence[Sequence[int]], target: Sequence[int], dimension: int
) -> Optional[List]:
    """Exact coefficients a with sum(a_i * column_i) = target.

    Returns ``None`` when the columns are not a basis of QQ^dimension.
    Entries are elements of QQ and compare with integers.
    """
    if len(columns) != dimension:
        return None
    if dimension == 0:
        return []
    matrix = _matrix(columns, dimension, QQ)
    rhs = DomainMatrix([[QQ(value)] for value in target], (dimension, 1), QQ)
    try:
        solution = matrix.lu_solve(rhs)
    except DMNonInvertibleMatrixError:
        return None
    return [row[0] for row in solution.to_list()]
