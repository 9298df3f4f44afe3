"""Polynomial invariants built from CSM cycles.

* ``csm_degree_polynomial``: sum of deg(csm_k(M)) t^k, with every degree
  computed twice (stable intersection or the divisor method, and
  deletion-contraction).
* ``check_hvector``: that polynomial equals the reduced characteristic
  polynomial evaluated at 1 + t.
* g-polynomials on the two families where the n-cycles are known in
  closed form: uniform matroids and simple matroids of rank 3.
"""

import logging
from math import comb
from typing import Optional, Tuple

from matroid_csm.exceptions import (
    ConsistencyError,
    InvalidParametersError,
    UnsupportedFamilyError,
)
from matroid_csm.services.bergman import csm_cycle, matroid_cycle
from matroid_csm.services.flat_lattice import (
    beta,
    lattice_of_flats,
    reduced_characteristic_polynomial,
)
from matroid_csm.services.matroid import Matroid, popcount
from matroid_csm.services.polynomial import IntPolynomial
from matroid_csm.services.tropical import TropicalCycle, degree, degree_by_recursion

logger = logging.getLogger(__name__)


def csm_degree_polynomial(
    matroid: Matroid, method: str = "displacement", seed_t: Optional[int] = None
) -> IntPolynomial:
    """Degree polynomial of the CSM cycles.

    Args:
        matroid: Any matroid of rank >= 1.
        method: Degree method passed to :func:`tropical.degree`.
        seed_t: Displacement parameter override.

    Returns:
        The zero polynomial for a matroid with a loop.

    Raises:
        InvalidParametersError: For a rank-0 matroid.
        ConsistencyError: If stable intersection and the deletion-contraction
            recursion disagree on some degree.
    """
    if matroid.has_loops:
        return IntPolynomial()
    d = matroid.full_rank - 1
    if d < 0:
        raise InvalidParametersError("the degree polynomial needs rank >= 1")
    coefficients = []
    for k in range(d + 1):
        computed = degree(csm_cycle(matroid, k), method=method, seed_t=seed_t)
        recursive = degree_by_recursion(matroid, k)
        if computed != recursive:
            raise ConsistencyError(
                f"deg csm_{k}({matroid!r}): intersection gives {computed}, "
                f"recursion gives {recursive}"
            )
        coefficients.append(computed)
    return IntPolynomial(tuple(coefficients))


def check_hvector(matroid: Matroid, method: str = "displacement") -> bool:
    degrees = csm_degree_polynomial(matroid, method=method)
    if matroid.has_loops:
        return degrees.is_zero
    return degrees == reduced_characteristic_polynomial(matroid).shift(1)


def euler_char_complement(matroid: Matroid) -> int:
    """(-1)^d beta(M), the Euler characteristic of the arrangement complement."""
    if matroid.has_loops:
        raise InvalidParametersError("the arrangement complement needs a loopless matroid")
    d = matroid.full_rank - 1
    return (-1) ** d * beta(matroid)


# -- uniform matroids -----------------------------------------------------


def _uniform_parameters(rank: int, size: int) -> Tuple[int, int]:
    if rank < 1 or size <= rank:
        raise InvalidParametersError(
            f"closed formulas need 1 <= rank < size, got rank={rank}, size={size}"
        )
    return rank - 1, size - 1


def binomial_identity_holds(m: int, k: int) -> bool:
    """(-1)^k == sum_i (-1)^(k-i) C(m+k-i, k-i) C(m, i)."""
    total = sum((-1) ** (k - i) * comb(m + k - i, k - i) * comb(m, i) for i in range(k + 1))
    return total == (-1) ** k


def uniform_n_cycle_coefficients(rank: int, size: int) -> Tuple[int, ...]:
    """Coefficients c_k with n_{d-k} = c_k A^k, from the defining recursion.

    On U_{d+1,n+1} every csm_j is (-1)^(d-j) C(n-j-1, d-j) A^(d-j), so the
    recursion only multiplies powers of A and reduces to integers.
    """
    d, n = _uniform_parameters(rank, size)
    coefficients = [1]
    for k in range(1, d + 1):
        correction = sum(
            (-1) ** (k - i) * comb(n - d + k - i - 1, k - i) * coefficients[i]
            for i in range(k)
        )
        coefficients.append((-1) ** k - correction)
    return tuple(coefficients)


def n_cycles_uniform(rank: int, size: int, k: int) -> TropicalCycle:
    """n_{d-k}(U_{rank,size}) = C(n-d-1, k) B(U_{d-k+1, n+1}).

    Raises:
        InvalidParametersError: Outside 1 <= rank < size or 0 <= k <= d.
        ConsistencyError: If the recursion disagrees with the closed form.
    """
    d, n = _uniform_parameters(rank, size)
    if not 0 <= k <= d:
        raise InvalidParametersError(f"k={k} outside 0..{d}")
    closed = comb(n - d - 1, k)
    recursive = uniform_n_cycle_coefficients(rank, size)[k]
    if closed != recursive:
        raise ConsistencyError(
            f"n-cycle coefficient of A^{k} for U_{{{rank},{size}}}: "
            f"closed form {closed}, recursion {recursive}"
        )
    return matroid_cycle(Matroid.uniform(d - k + 1, size)).scale(closed)


def n_cycles(matroid: Matroid, k: int) -> TropicalCycle:
    if not matroid.is_uniform:
        raise UnsupportedFamilyError(
            f"n-cycles are only available for uniform matroids, not {matroid!r}"
        )
    return n_cycles_uniform(matroid.full_rank, matroid.size, k)


def g_polynomial_uniform(rank: int, size: int) -> IntPolynomial:
    """sum_k C(n-k-1, d-k) C(n-d-1, k) t^(k+1) for U_{d+1,n+1}."""
    d, n = _uniform_parameters(rank, size)
    n_coefficients = uniform_n_cycle_coefficients(rank, size)
    coefficients = [0]
    for k in range(d + 1):
        closed = comb(n - k - 1, d - k) * comb(n - d - 1, k)
        # csm_k . n_{d-k} is a multiple of A^d, a point of degree 1
        recursive = comb(n - k - 1, d - k) * n_coefficients[k]
        if closed != recursive:
            raise ConsistencyError(
                f"g-polynomial coefficient of t^{k + 1} for U_{{{rank},{size}}}: "
                f"{closed} != {recursive}"
            )
        coefficients.append(closed)
    return IntPolynomial(tuple(coefficients))


# -- simple rank-3 matroids -----------------------------------------------


def _require_simple_rank3(matroid: Matroid) -> None:
    if matroid.full_rank != 3 or not matroid.is_simple:
        raise UnsupportedFamilyError(
            f"rank-3 formulas need a simple matroid of rank 3, got {matroid!r}"
        )


def csm1_self_intersection_rank3(matroid: Matroid) -> int:
    """(n-2)^2 minus the sum of (|F|-2)^2 over the rank-2 flats."""
    _require_simple_rank3(matroid)
    n = matroid.size - 1
    lines = lattice_of_flats(matroid).flats_by_rank[2]
    return (n - 2) ** 2 - sum((popcount(line) - 2) ** 2 for line in lines)


def g_polynomial_rank3(matroid: Matroid) -> IntPolynomial:
    """beta t + (deg csm_1 + csm_1^2) t^2 + (1 + deg csm_1 + csm_1^2 - beta) t^3."""
    _require_simple_rank3(matroid)
    n = matroid.size - 1
    degree_one = -(n - 2)
    recursive = degree_by_recursion(matroid, 1)
    if recursive != degree_one:
        raise ConsistencyError(
            f"deg csm_1({matroid!r}) is {recursive}, expected {degree_one}"
        )
    square = csm1_self_intersection_rank3(matroid)
    b = beta(matroid)
    return IntPolynomial((0, b, degree_one + square, 1 + degree_one + square - b))


def g_polynomial(matroid: Matroid) -> IntPolynomial:
    """g-polynomial on the supported families.

    Raises:
        UnsupportedFamilyError: Outside uniform and simple rank-3 matroids.
    """
    if matroid.is_uniform and 1 <= matroid.full_rank < matroid.size:
        return g_polynomial_uniform(matroid.full_rank, matroid.size)
    if matroid.full_rank == 3 and matroid.is_simple:
        return g_polynomial_rank3(matroid)
    raise UnsupportedFamilyError(
        f"g-polynomial is only computed for uniform and simple rank-3 matroids, not {matroid!r}"
    )
