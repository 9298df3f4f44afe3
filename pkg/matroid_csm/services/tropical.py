"""Tropical fan cycles in R^N / R(1, ..., 1) supported on the braid fan.

A cone of the braid fan is the cone spanned by the indicator vectors of a
chain S1 < S2 < ... < Sk of proper nonempty subsets of {0, ..., N-1}. A
``TropicalCycle`` is a finitely supported integer weight function on the
chains of one fixed length, which makes addition and equality of cycles
purely combinatorial. Geometry (lattice normals, displaced intersections,
lattice indices) only happens inside the routines below, always with exact
arithmetic from :mod:`matroid_csm.services.lattice_linalg`.

Example:
    >>> from matroid_csm.services.tropical import (
    ...     TropicalCycle, stable_intersect, standard_hyperplane)
    >>> plane = standard_hyperplane(4)
    >>> len(plane)
    12
    >>> rays = {(0b0001,): 1, (0b0010,): 1, (0b0100,): 1, (0b1000,): 1}
    >>> stable_intersect(plane, plane) == TropicalCycle(4, 1, rays)
    True
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from matroid_csm.config import get_settings
from matroid_csm.exceptions import (
    ConsistencyError,
    GenericVectorExhaustedError,
    InvalidDimensionError,
    InvalidOperandsError,
    InvalidParametersError,
)
from matroid_csm.services.lattice_linalg import (
    indicator,
    rank,
    reduce_vector,
    saturation_index,
    solve,
)
from matroid_csm.services.matroid import (
    GroundSubset,
    Matroid,
    compress,
    elements,
    format_subset,
)

logger = logging.getLogger(__name__)

BraidChain = Tuple[GroundSubset, ...]


def chain_sort_key(chain: BraidChain) -> Tuple[Tuple[int, ...], ...]:
    return tuple(elements(subset) for subset in chain)


def format_chain(chain: BraidChain) -> str:
    return "(" + " < ".join(format_subset(subset) for subset in chain) + ")"


def validate_chain(chain: Iterable[GroundSubset], ambient: int) -> BraidChain:
    """Check that ``chain`` is a strictly increasing chain of proper nonempty subsets.

    Raises:
        InvalidParametersError: Describing the first offending entry.
    """
    full = (1 << ambient) - 1
    previous = 0
    out = []
    for subset in chain:
        if subset <= 0 or subset & ~full:
            raise InvalidParametersError(
                f"{format_subset(subset)} is not a nonempty subset of 0..{ambient - 1}"
            )
        if subset == full:
            raise InvalidParametersError("chains may not contain the full ground set")
        if subset & previous != previous or subset == previous:
            raise InvalidParametersError(
                f"{format_subset(previous)} is not strictly inside {format_subset(subset)}"
            )
        out.append(subset)
        previous = subset
    return tuple(out)


@dataclass(frozen=True, eq=False)
class TropicalCycle:
    """Integer weights on the length-``dim`` chains of the braid fan.

    Zero weights may be present; they are dropped by :meth:`canonical` and
    ignored by equality.

    Attributes:
        ambient: N, the number of coordinates of R^N / R(1, ..., 1).
        dim: Dimension k of the cycle, equal to the length of every chain.
        weights: Mapping from chain to integer weight.
    """

    ambient: int
    dim: int
    weights: Mapping[BraidChain, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.ambient < 1:
            raise InvalidParametersError(f"ambient must be >= 1, got {self.ambient}")
        if not 0 <= self.dim <= self.ambient - 1:
            raise InvalidDimensionError(
                f"dimension {self.dim} outside 0..{self.ambient - 1}"
            )
        cleaned: Dict[BraidChain, int] = {}
        for chain, weight in self.weights.items():
            chain = validate_chain(chain, self.ambient)
            if len(chain) != self.dim:
                raise InvalidDimensionError(
                    f"chain {format_chain(chain)} has length {len(chain)}, expected {self.dim}"
                )
            cleaned[chain] = cleaned.get(chain, 0) + int(weight)
        object.__setattr__(self, "weights", MappingProxyType(cleaned))

    @classmethod
    def empty(cls, ambient: int, dim: int) -> "TropicalCycle":
        return cls(ambient, dim, {})

    def canonical(self) -> "TropicalCycle":
        return TropicalCycle(
            self.ambient, self.dim, {c: w for c, w in self.weights.items() if w != 0}
        )

    def items(self) -> List[Tuple[BraidChain, int]]:
        """Nonzero (chain, weight) pairs in canonical order."""
        return sorted(
            ((c, w) for c, w in self.weights.items() if w != 0),
            key=lambda item: chain_sort_key(item[0]),
        )

    def weight(self, chain: Iterable[GroundSubset]) -> int:
        return self.weights.get(tuple(chain), 0)

    def support(self) -> Tuple[BraidChain, ...]:
        return tuple(chain for chain, _ in self.items())

    @property
    def total_weight(self) -> int:
        return sum(self.weights.values())

    @property
    def is_empty(self) -> bool:
        return not any(self.weights.values())

    def __len__(self) -> int:
        return sum(1 for w in self.weights.values() if w != 0)

    def _check_compatible(self, other: "TropicalCycle") -> None:
        if self.ambient != other.ambient or self.dim != other.dim:
            raise InvalidOperandsError(
                f"cannot combine cycles of (ambient, dim) = ({self.ambient}, {self.dim}) "
                f"and ({other.ambient}, {other.dim})"
            )

    def __add__(self, other: "TropicalCycle") -> "TropicalCycle":
        self._check_compatible(other)
        merged = dict(self.weights)
        for chain, w in other.weights.items():
            merged[chain] = merged.get(chain, 0) + w
        return TropicalCycle(self.ambient, self.dim, merged).canonical()

    def __neg__(self) -> "TropicalCycle":
        return self.scale(-1)

    def __sub__(self, other: "TropicalCycle") -> "TropicalCycle":
        return self + (-other)

    def scale(self, factor: int) -> "TropicalCycle":
        return TropicalCycle(
            self.ambient, self.dim, {c: factor * w for c, w in self.weights.items()}
        ).canonical()

    def __rmul__(self, factor: int) -> "TropicalCycle":
        return self.scale(factor)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TropicalCycle):
            return NotImplemented
        return (
            self.ambient == other.ambient
            and self.dim == other.dim
            and self.items() == other.items()
        )

    def __repr__(self) -> str:
        return f"TropicalCycle(ambient={self.ambient}, dim={self.dim}, cones={len(self)})"


def add(first: TropicalCycle, second: TropicalCycle) -> TropicalCycle:
    return first + second


def scale(cycle: TropicalCycle, factor: int) -> TropicalCycle:
    return cycle.scale(factor)


def equals(first: TropicalCycle, second: TropicalCycle) -> bool:
    if first.ambient != second.ambient or first.dim != second.dim:
        raise InvalidOperandsError("equality needs matching ambient and dimension")
    return first == second


# -- balancing ------------------------------------------------------------


@dataclass(frozen=True)
class BalanceResult:
    balanced: bool
    witness: Optional[BraidChain] = None

    def __bool__(self) -> bool:
        return self.balanced


@lru_cache(maxsize=200_000)
def lattice_normal(facet: BraidChain, extra: GroundSubset, ambient: int) -> Tuple[int, ...]:
    """Primitive normal vector of the cone facet+extra relative to facet.

    Both cones are unimodular, so the class of e_extra generates the
    quotient lattice; the saturation indices are asserted to be 1.
    """
    cone = tuple(sorted(facet + (extra,), key=lambda s: bin(s).count("1")))
    generators = [indicator(subset, ambient) for subset in cone]
    if (
        rank(generators, ambient - 1) != len(generators)
        or saturation_index(generators, ambient - 1) != 1
    ):
        raise ConsistencyError(f"cone {format_chain(cone)} is not unimodular")
    return indicator(extra, ambient)


def is_balanced(cycle: TropicalCycle) -> BalanceResult:
    """Exact balancing test at every codimension-one cone.

    Returns:
        ``BalanceResult`` whose ``witness`` is the first facet chain (in
        canonical order) where the weighted sum of normals leaves the
        linear span of the facet.
    """
    if cycle.dim == 0:
        return BalanceResult(True)
    ambient = cycle.ambient
    sums: Dict[BraidChain, List[int]] = {}
    for chain, weight in cycle.items():
        for position, extra in enumerate(chain):
            facet = chain[:position] + chain[position + 1:]
            normal = lattice_normal(facet, extra, ambient)
            total = sums.setdefault(facet, [0] * (ambient - 1))
            for j, value in enumerate(normal):
                total[j] += weight * value

    for facet in sorted(sums, key=chain_sort_key):
        total = sums[facet]
        if not any(total):
            continue
        generators = [indicator(subset, ambient) for subset in facet]
        if rank(generators + [tuple(total)], ambient - 1) != len(facet):
            logger.debug("Balancing fails at %s", format_chain(facet))
            return BalanceResult(False, facet)
    return BalanceResult(True)


# -- the standard hyperplane and stable intersection ----------------------


@lru_cache(maxsize=16)
def standard_hyperplane(ambient: int) -> TropicalCycle:
    """Bergman fan of U_{N-1,N} with weight 1: chains with |S_i| = i."""
    if ambient < 2:
        raise InvalidParametersError(f"the standard hyperplane needs N >= 2, got {ambient}")
    weights = {}
    for prefix in permutations(range(ambient), ambient - 2):
        chain = []
        subset = 0
        for element in prefix:
            subset |= 1 << element
            chain.append(subset)
        weights[tuple(chain)] = 1
    return TropicalCycle(ambient, ambient - 2, weights)


class _NotGeneric(Exception):
    pass


def generic_vector(ambient: int, t: int) -> Tuple[int, ...]:
    """Reduced coordinates of (1, t, t^2, ..., t^(N-1))."""
    return reduce_vector([t ** j for j in range(ambient)])


def _separates_elements(subsets: Iterable[GroundSubset], ambient: int) -> bool:
    """Whether every two coordinates are told apart by some subset.

    Indicator vectors of subsets that leave two coordinates inseparable
    cannot span R^N / R(1, ..., 1).
    """
    signatures = set()
    for i in range(ambient):
        signature = 0
        for position, subset in enumerate(subsets):
            signature |= (subset >> i & 1) << position
        signatures.add(signature)
    return len(signatures) == ambient


@lru_cache(maxsize=500_000)
def _pair_multiplicity(
    only1: BraidChain, only2: BraidChain, common: BraidChain, vector: Tuple[int, ...]
) -> int:
    """Lattice index when the displaced cones meet, 0 when they miss."""
    ambient = len(vector) + 1
    space = ambient - 1
    if not _separates_elements(only1 + only2 + common, ambient):
        return 0
    columns = (
        [indicator(s, ambient) for s in only1]
        + [tuple(-x for x in indicator(s, ambient)) for s in only2]
        + [indicator(s, ambient) for s in common]
    )
    coefficients = solve(columns, vector, space)
    if coefficients is None:
        return 0
    displacement = coefficients[: len(only1) + len(only2)]
    if any(c == 0 for c in displacement):
        raise _NotGeneric
    if all(c > 0 for c in displacement):
        return saturation_index(columns, space)
    return 0


def _displace(
    first: TropicalCycle, second: TropicalCycle, dim: int, vector: Tuple[int, ...]
) -> TropicalCycle:
    ambient = first.ambient

    by_subchain: Dict[BraidChain, List[Tuple[BraidChain, int]]] = defaultdict(list)
    for chain, weight in second.items():
        for sub in combinations(chain, dim):
            by_subchain[sub].append((chain, weight))

    result: Dict[BraidChain, int] = defaultdict(int)
    for chain1, weight1 in first.items():
        members1 = set(chain1)
        for common in combinations(chain1, dim):
            for chain2, weight2 in by_subchain.get(common, ()):
                if len(members1.intersection(chain2)) != dim:
                    continue
                only1 = tuple(s for s in chain1 if s not in common)
                only2 = tuple(s for s in chain2 if s not in common)
                multiplicity = _pair_multiplicity(only1, only2, common, vector)
                if multiplicity:
                    result[common] += weight1 * weight2 * multiplicity
    return TropicalCycle(ambient, dim, dict(result)).canonical()


def stable_intersect(
    first: TropicalCycle, second: TropicalCycle, seed_t: Optional[int] = None
) -> TropicalCycle:
    """Stable intersection by the fan displacement rule.

    The second cycle is translated by a small multiple of the deterministic
    vector (1, t, ..., t^(N-1)). A pair of cones contributes to the cone of
    their common chain when that chain has the expected dimension, their
    spans add up to the whole space and the displaced cones meet; the
    multiplicity is the lattice index of the two cone lattices together.

    Args:
        first: A cycle of dimension k.
        second: A cycle of dimension l on the same ambient space.
        seed_t: Displacement parameter; defaults to ``Settings.seed_t``.

    Returns:
        The cycle of dimension k + l - (N - 1), or the empty 0-dimensional
        cycle when that number is negative.

    Raises:
        InvalidOperandsError: If the ambient spaces differ.
        GenericVectorExhaustedError: If every retried parameter produced a
            degenerate incidence.
    """
    if first.ambient != second.ambient:
        raise InvalidOperandsError(
            f"ambient mismatch: {first.ambient} vs {second.ambient}"
        )
    ambient = first.ambient
    dim = first.dim + second.dim - (ambient - 1)
    if dim < 0 or first.is_empty or second.is_empty:
        return TropicalCycle.empty(ambient, max(dim, 0))

    settings = get_settings()
    t = seed_t if seed_t is not None else settings.seed_t
    for attempt in range(settings.generic_retries + 1):
        try:
            return _displace(first, second, dim, generic_vector(ambient, t))
        except _NotGeneric:
            logger.warning(
                "Displacement parameter t=%d is not generic (attempt %d), squaring",
                t,
                attempt + 1,
            )
            t = t * t
    raise GenericVectorExhaustedError(
        f"no generic displacement found after {settings.generic_retries + 1} attempts"
    )


def intersect_hyperplane(cycle: TropicalCycle) -> TropicalCycle:
    """Intersection with the standard hyperplane as a divisor.

    The hyperplane is the divisor of the convex function x_0 - min(x). At a
    codimension-one chain tau the weight is the coordinate u_i, i outside
    the top set of tau, of u = sum of w(sigma) e_G over the cones
    sigma = tau + G. Used to cross-check :func:`stable_intersect`.

    Raises:
        InvalidOperandsError: If the cycle is not balanced, detected as u
            not being constant off the top set.
    """
    ambient = cycle.ambient
    if cycle.dim == 0:
        return TropicalCycle.empty(ambient, 0)
    sums: Dict[BraidChain, List[int]] = {}
    for chain, weight in cycle.items():
        for position, extra in enumerate(chain):
            facet = chain[:position] + chain[position + 1:]
            total = sums.setdefault(facet, [0] * ambient)
            for i in elements(extra):
                total[i] += weight

    result = {}
    for facet, total in sums.items():
        top = facet[-1] if facet else 0
        values = {total[i] for i in range(ambient) if not top >> i & 1}
        if len(values) != 1:
            raise InvalidOperandsError(f"cycle is not balanced at {format_chain(facet)}")
        result[facet] = values.pop()
    return TropicalCycle(ambient, cycle.dim - 1, result).canonical()


def degree(
    cycle: TropicalCycle, method: str = "displacement", seed_t: Optional[int] = None
) -> int:
    """Degree: weight sum after cutting down to dimension 0 by hyperplanes.

    Args:
        cycle: The cycle to measure.
        method: ``"displacement"`` (stable intersection with the standard
            hyperplane) or ``"divisor"`` (:func:`intersect_hyperplane`).
        seed_t: Passed on to :func:`stable_intersect`.
    """
    if method == "displacement":
        hyperplane = standard_hyperplane(cycle.ambient) if cycle.dim else None

        def step(current: TropicalCycle) -> TropicalCycle:
            return stable_intersect(current, hyperplane, seed_t)

    elif method == "divisor":
        step = intersect_hyperplane
    else:
        raise InvalidParametersError(f"unknown degree method {method!r}")

    current = cycle
    for _ in range(cycle.dim):
        current = step(current)
    return current.total_weight


@lru_cache(maxsize=None)
def degree_by_recursion(matroid: Matroid, k: int) -> int:
    """deg csm_k(M) by deletion-contraction on the smallest non-coloop.

    Base cases: a matroid with a loop gives 0; a free matroid of rank d+1
    gives 1 for k = d and 0 otherwise. Degrees outside 0..d are 0.
    """
    if matroid.has_loops:
        return 0
    d = matroid.full_rank - 1
    if not 0 <= k <= d:
        return 0
    for element in range(matroid.size):
        if not matroid.is_coloop(element):
            return degree_by_recursion(matroid.deletion(element), k) - degree_by_recursion(
                matroid.contraction(element), k
            )
    return 1 if k == d else 0


# -- pushforward ----------------------------------------------------------


def pushforward_forget(cycle: TropicalCycle, element: int) -> TropicalCycle:
    """Pushforward along the projection forgetting coordinate ``element``.

    Each chain maps to S -> S minus element, renumbered on the remaining
    coordinates. Chains whose image drops a dimension (a set becomes empty
    or full, or two sets coincide) contribute nothing; the others carry
    their weight times the index of the image lattice in its saturation.

    Raises:
        InvalidParametersError: With fewer than two coordinates or an
            element outside the ground set.
        InvalidDimensionError: If the cycle has dimension N - 1 or more, so
            no image chain is a chain of proper subsets of N - 1 coordinates.
    """
    ambient = cycle.ambient
    if ambient < 2:
        raise InvalidParametersError("pushforward needs at least two coordinates")
    if not 0 <= element < ambient:
        raise InvalidParametersError(f"element {element} outside 0..{ambient - 1}")
    keep = ((1 << ambient) - 1) & ~(1 << element)
    target = ambient - 1
    target_full = (1 << target) - 1
    if cycle.dim > target - 1:
        raise InvalidDimensionError(
            f"a {cycle.dim}-dimensional cycle has no pushforward to {target} coordinates"
        )

    result: Dict[BraidChain, int] = defaultdict(int)
    for chain, weight in cycle.items():
        image = tuple(compress(subset, keep) for subset in chain)
        if any(s == 0 or s == target_full for s in image) or len(set(image)) < len(image):
            continue
        index = saturation_index([indicator(s, target) for s in image], target - 1)
        result[image] += weight * index
    return TropicalCycle(target, cycle.dim, dict(result)).canonical()
