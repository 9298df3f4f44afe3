"""Bergman fans and CSM cycles of matroids.

The k-dimensional cones of the Bergman fan of a loopless matroid M of rank
d+1 are indexed by flags F1 < ... < Fk of proper nonempty flats. The CSM
cycle csm_k(M) puts on such a cone the weight

    (-1)^(d-k) * beta(M|F1) * beta(M|F2/F1) * ... * beta(M/Fk)

and a matroid with a loop has empty CSM cycles. The same product formula,
applied to a chain of subsets that are not all flats, is always zero, so
weights can be looked up for arbitrary braid chains.

Example:
    >>> from matroid_csm.services.matroid import Matroid
    >>> from matroid_csm.services.bergman import csm_cycle
    >>> cycle = csm_cycle(Matroid.uniform(3, 4), 1)
    >>> [weight for _, weight in cycle.items()]
    [-1, -1, -1, -1]
    >>> csm_cycle(Matroid.uniform(2, 4), 0).weight(())
    -2
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from matroid_csm.exceptions import InvalidDimensionError, InvalidFlatError
from matroid_csm.services.flat_lattice import beta, lattice_of_flats
from matroid_csm.services.matroid import GroundSubset, Matroid, format_subset
from matroid_csm.services.tropical import (
    BraidChain,
    TropicalCycle,
    chain_sort_key,
    validate_chain,
)

logger = logging.getLogger(__name__)

Flag = Tuple[GroundSubset, ...]


def _check_dimension(matroid: Matroid, k: int) -> None:
    d = matroid.full_rank - 1
    if not 0 <= k <= d:
        raise InvalidDimensionError(f"k={k} outside 0..{d} for {matroid!r}")


def _consecutive_minors(matroid: Matroid, chain: Sequence[GroundSubset]) -> List[Matroid]:
    bounds = (0,) + tuple(chain) + (matroid.ground,)
    return [matroid.minor(upper, lower) for lower, upper in zip(bounds, bounds[1:])]


@lru_cache(maxsize=1024)
def _flags(matroid: Matroid, k: int) -> Tuple[Flag, ...]:
    proper = lattice_of_flats(matroid).proper_flats
    above: Dict[GroundSubset, List[GroundSubset]] = {
        flat: [g for g in proper if g & flat == flat and g != flat] for flat in proper
    }
    found: List[Flag] = []

    def extend(prefix: List[GroundSubset], candidates: Sequence[GroundSubset]) -> None:
        if len(prefix) == k:
            found.append(tuple(prefix))
            return
        for flat in candidates:
            prefix.append(flat)
            extend(prefix, above[flat])
            prefix.pop()

    extend([], proper)
    logger.debug("%d flags of length %d in %r", len(found), k, matroid)
    return tuple(sorted(found, key=chain_sort_key))


def bergman_skeleton(matroid: Matroid, k: int) -> Tuple[Flag, ...]:
    """All flags of k proper nonempty flats; empty when M has a loop.

    Raises:
        InvalidDimensionError: Unless 0 <= k <= r(M) - 1.
    """
    _check_dimension(matroid, k)
    if matroid.has_loops:
        return ()
    return _flags(matroid, k)


def chain_weight(matroid: Matroid, chain: Sequence[GroundSubset]) -> int:
    """The CSM product formula on any chain of subsets (zero off the flags)."""
    d = matroid.full_rank - 1
    sign = -1 if (d - len(chain)) % 2 else 1
    product = sign
    for minor in _consecutive_minors(matroid, chain):
        product *= beta(minor)
        if product == 0:
            break
    return product


def csm_weight(matroid: Matroid, flag: Sequence[GroundSubset]) -> int:
    """CSM weight of the cone of a flag of flats.

    Raises:
        InvalidParametersError: If the flag is not a strict chain of proper
            nonempty subsets.
        InvalidDimensionError: If the flag is longer than r(M) - 1.
        InvalidFlatError: If an entry is not a flat.
    """
    flag = validate_chain(flag, matroid.size)
    _check_dimension(matroid, len(flag))
    for subset in flag:
        if not matroid.is_flat(subset):
            raise InvalidFlatError(f"{format_subset(subset)} is not a flat of {matroid!r}")
    if matroid.has_loops:
        return 0
    return chain_weight(matroid, flag)


def csm_cycle(matroid: Matroid, k: int) -> TropicalCycle:
    """The k-dimensional CSM cycle, keeping zero-weight flags in the mapping."""
    _check_dimension(matroid, k)
    if matroid.has_loops:
        return TropicalCycle.empty(matroid.size, k)
    weights = {flag: chain_weight(matroid, flag) for flag in _flags(matroid, k)}
    return TropicalCycle(matroid.size, k, weights)


def skeleton_cycle(matroid: Matroid, k: int) -> TropicalCycle:
    """The k-skeleton of the Bergman fan, weight 1 on every k-flag."""
    return TropicalCycle(
        matroid.size, k, {flag: 1 for flag in bergman_skeleton(matroid, k)}
    )


def matroid_cycle(matroid: Matroid) -> TropicalCycle:
    """The Bergman fan B(M) with all weights 1."""
    return skeleton_cycle(matroid, matroid.full_rank - 1)


def pairing(flag: Sequence[GroundSubset], cycle: TropicalCycle) -> int:
    """Weight of the cone of ``flag`` in ``cycle``; 0 outside the support."""
    if len(flag) != cycle.dim:
        raise InvalidDimensionError(
            f"flag of length {len(flag)} paired with a {cycle.dim}-dimensional cycle"
        )
    return cycle.weight(flag)


def support_mismatches(matroid: Matroid, k: int) -> Tuple[Flag, ...]:
    """Flags where a nonzero weight and connected loopless minors disagree."""
    mismatches = []
    for flag in bergman_skeleton(matroid, k):
        nonzero = chain_weight(matroid, flag) != 0
        predicted = all(
            minor.is_connected and not minor.has_loops
            for minor in _consecutive_minors(matroid, flag)
        )
        if nonzero != predicted:
            mismatches.append(flag)
    return tuple(mismatches)


def coarse_support_check(matroid: Matroid, k: int) -> bool:
    return not support_mismatches(matroid, k)


@dataclass(frozen=True)
class CoarseCone:
    """A cone of the coarse subdivision, given by its face matroid.

    Attributes:
        face: The direct sum of the chain minors on the original labels.
        flags: The flags of the braid subdivision it is made of.
        weight: Their common CSM weight.
    """

    face: Matroid
    flags: Tuple[Flag, ...]
    weight: int


def coarse_cones(matroid: Matroid, k: int) -> Tuple[CoarseCone, ...]:
    """Group the nonzero-weight k-flags by the face of Q(M) they select."""
    groups: Dict[frozenset, List[Flag]] = {}
    for flag in bergman_skeleton(matroid, k):
        if chain_weight(matroid, flag) == 0:
            continue
        groups.setdefault(matroid.chain_face_bases(flag), []).append(flag)
    cones = [
        CoarseCone(
            face=Matroid(matroid.size, bases),
            flags=tuple(flags),
            weight=chain_weight(matroid, flags[0]),
        )
        for bases, flags in groups.items()
    ]
    return tuple(sorted(cones, key=lambda cone: chain_sort_key(cone.flags[0])))


def canonical_class_check(matroid: Matroid) -> bool:
    """csm_{d-1} weight of each codimension-one flag is 2 minus its valence."""
    d = matroid.full_rank - 1
    if d < 1 or matroid.has_loops:
        return True
    valence: Dict[BraidChain, int] = {}
    for flag in _flags(matroid, d):
        for position in range(d):
            facet = flag[:position] + flag[position + 1:]
            valence[facet] = valence.get(facet, 0) + 1
    return all(
        chain_weight(matroid, facet) == 2 - valence.get(facet, 0)
        for facet in _flags(matroid, d - 1)
    )


def k1_balancing_vector(matroid: Matroid) -> Tuple[int, ...]:
    """Sum over proper flats F of beta(M|F) beta(M/F) e_F."""
    vector = [0] * matroid.size
    if matroid.has_loops:
        return tuple(vector)
    for flat in lattice_of_flats(matroid).proper_flats:
        coefficient = beta(matroid.restriction(flat)) * beta(matroid.minor(matroid.ground, flat))
        for i in range(matroid.size):
            if flat >> i & 1:
                vector[i] += coefficient
    return tuple(vector)


def k1_balancing_holds(matroid: Matroid) -> bool:
    return len(set(k1_balancing_vector(matroid))) <= 1


def is_series_parallel(matroid: Matroid) -> bool:
    return beta(matroid) == 1


def series_parallel_weights_hold(matroid: Matroid) -> bool:
    """Every nonzero csm_k weight equals (-1)^(d-k)."""
    d = matroid.full_rank - 1
    return all(
        weight == (-1) ** (d - k)
        for k in range(d + 1)
        for _, weight in csm_cycle(matroid, k).items()
    )
