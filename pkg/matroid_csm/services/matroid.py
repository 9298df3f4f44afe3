"""Matroid representation on bitmask ground sets.

A matroid on the ground set {0, ..., size-1} is stored through its bases,
each basis an ``int`` bitmask. Rank, closure and flats are derived from a
rank table computed once per matroid, and minors are relabeled to the
consecutive ground set {0, ..., |T\\S|-1} in increasing original order.

Example:
    >>> from matroid_csm.services.matroid import Matroid, bits
    >>> u24 = Matroid.uniform(2, 4)
    >>> len(u24.bases)
    6
    >>> u24.rank(bits([0, 1, 2]))
    2
    >>> u24.closure(bits([0, 1])) == u24.ground
    True
    >>> Matroid.uniform(3, 4).deletion(3) == Matroid.uniform(3, 3)
    True
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

import networkx as nx

from matroid_csm.exceptions import InvalidParametersError, NotAMatroidError

logger = logging.getLogger(__name__)

GroundSubset = int


def bits(items: Iterable[int]) -> GroundSubset:
    """Bitmask of a collection of element indices."""
    mask = 0
    for item in items:
        if item < 0:
            raise InvalidParametersError(f"negative element index {item}")
        mask |= 1 << item
    return mask


def elements(mask: GroundSubset) -> Tuple[int, ...]:
    """Element indices of a bitmask, in increasing order."""
    out = []
    index = 0
    while mask:
        if mask & 1:
            out.append(index)
        mask >>= 1
        index += 1
    return tuple(out)


def popcount(mask: GroundSubset) -> int:
    return bin(mask).count("1")


def compress(mask: GroundSubset, keep: GroundSubset) -> GroundSubset:
    """Renumber the bits of ``mask`` lying in ``keep`` to 0, 1, 2, ...

    The i-th smallest element of ``keep`` becomes element i; bits of
    ``mask`` outside ``keep`` are discarded.
    """
    out = 0
    for position, element in enumerate(elements(keep)):
        if mask >> element & 1:
            out |= 1 << position
    return out


def format_subset(mask: GroundSubset) -> str:
    return "{" + ",".join(str(i) for i in elements(mask)) + "}"


@dataclass(frozen=True)
class Matroid:
    """A matroid given by its bases.

    The constructor trusts its input; use :meth:`from_bases` for data coming
    from outside the package.

    Attributes:
        size: Number of ground elements.
        bases: Bases as bitmasks over ``range(size)``.
        labels: Original labels of the ground elements, kept for display
            when the matroid is a relabeled minor.
    """

    size: int
    bases: frozenset
    labels: Tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.size)))

    @classmethod
    def from_bases(cls, size: int, bases: Iterable[Iterable[int]]) -> "Matroid":
        """Build a matroid from explicit bases, validating the axioms.

        Args:
            size: Number of ground elements.
            bases: Collection of bases, each a collection of element indices.

        Returns:
            The validated matroid.

        Raises:
            InvalidParametersError: If ``size`` is negative or an element is
                out of range.
            NotAMatroidError: If the collection is empty, the bases have
                unequal cardinalities or the exchange axiom fails. The error
                carries the offending pair of bases when there is one.
        """
        if size < 0:
            raise InvalidParametersError(f"ground set size must be >= 0, got {size}")
        masks = []
        for basis in bases:
            items = list(basis)
            if any(item >= size or item < 0 for item in items):
                raise InvalidParametersError(
                    f"basis {sorted(items)} has elements outside 0..{size - 1}"
                )
            masks.append(bits(items))
        if not masks:
            raise NotAMatroidError("a matroid needs at least one basis")

        first = masks[0]
        for other in masks[1:]:
            if popcount(other) != popcount(first):
                raise NotAMatroidError(
                    f"bases {format_subset(first)} and {format_subset(other)} "
                    "have unequal cardinalities",
                    witness=(first, other),
                )

        basis_set = frozenset(masks)
        for a_basis in basis_set:
            for b_basis in basis_set:
                if a_basis == b_basis:
                    continue
                for a in elements(a_basis & ~b_basis):
                    dropped = a_basis & ~(1 << a)
                    if not any(
                        dropped | (1 << b) in basis_set
                        for b in elements(b_basis & ~a_basis)
                    ):
                        raise NotAMatroidError(
                            f"exchange axiom fails for {format_subset(a_basis)}, "
                            f"{format_subset(b_basis)} at element {a}",
                            witness=(a_basis, b_basis),
                        )
        return cls(size, basis_set)

    @classmethod
    def uniform(cls, rank: int, size: int) -> "Matroid":
        """Uniform matroid U_{rank,size}: every rank-subset is a basis."""
        if size < 0 or rank < 0 or rank > size:
            raise InvalidParametersError(
                f"uniform matroid needs 0 <= rank <= size, got rank={rank}, size={size}"
            )
        return cls(size, frozenset(bits(c) for c in combinations(range(size), rank)))

    # -- basic invariants -------------------------------------------------

    @property
    def ground(self) -> GroundSubset:
        return (1 << self.size) - 1

    @cached_property
    def full_rank(self) -> int:
        return popcount(next(iter(self.bases)))

    @cached_property
    def rank_table(self) -> Tuple[int, ...]:
        table = tuple(
            max(popcount(subset & basis) for basis in self.bases)
            for subset in range(1 << self.size)
        )
        logger.debug("Rank table filled for %r", self)
        return table

    def _check_subset(self, subset: GroundSubset) -> None:
        if subset < 0 or subset & ~self.ground:
            raise InvalidParametersError(
                f"subset {format_subset(subset)} is not inside a ground set of size {self.size}"
            )

    def rank(self, subset: GroundSubset) -> int:
        """Rank of a subset: the largest intersection with a basis."""
        self._check_subset(subset)
        return self.rank_table[subset]

    def closure(self, subset: GroundSubset) -> GroundSubset:
        self._check_subset(subset)
        table = self.rank_table
        base = table[subset]
        out = subset
        for i in range(self.size):
            if not subset >> i & 1 and table[subset | 1 << i] == base:
                out |= 1 << i
        return out

    def is_flat(self, subset: GroundSubset) -> bool:
        return self.closure(subset) == subset

    @cached_property
    def loops(self) -> GroundSubset:
        union = 0
        for basis in self.bases:
            union |= basis
        return self.ground & ~union

    @cached_property
    def coloops(self) -> GroundSubset:
        meet = self.ground
        for basis in self.bases:
            meet &= basis
        return meet

    def is_loop(self, element: int) -> bool:
        return bool(self.loops >> element & 1)

    def is_coloop(self, element: int) -> bool:
        return bool(self.coloops >> element & 1)

    @property
    def has_loops(self) -> bool:
        return self.loops != 0

    @cached_property
    def is_uniform(self) -> bool:
        return self == Matroid.uniform(self.full_rank, self.size)

    @cached_property
    def is_simple(self) -> bool:
        """No loops and no parallel pairs."""
        if self.has_loops:
            return False
        table = self.rank_table
        return all(
            table[(1 << i) | (1 << j)] == 2
            for i, j in combinations(range(self.size), 2)
        )

    # -- minors -----------------------------------------------------------

    def minor_bases(self, keep: GroundSubset, contract: GroundSubset) -> frozenset:
        """Bases of M|keep/contract on the original labels.

        They are the sets (B & keep) minus ``contract`` over the bases B
        that meet ``keep`` in r(keep) elements and ``contract`` in
        r(contract) elements.
        """
        self._check_subset(keep)
        if contract & ~keep:
            raise InvalidParametersError(
                f"contracted set {format_subset(contract)} is not inside {format_subset(keep)}"
            )
        table = self.rank_table
        keep_rank = table[keep]
        contract_rank = table[contract]
        return frozenset(
            (basis & keep) & ~contract
            for basis in self.bases
            if popcount(basis & keep) == keep_rank
            and popcount(basis & contract) == contract_rank
        )

    def minor(self, keep: GroundSubset, contract: GroundSubset = 0) -> "Matroid":
        """The minor M|keep/contract, relabeled to 0..|keep\\contract|-1."""
        remaining = keep & ~contract
        relabeled = frozenset(
            compress(basis, remaining) for basis in self.minor_bases(keep, contract)
        )
        return Matroid(
            popcount(remaining),
            relabeled,
            labels=tuple(self.labels[i] for i in elements(remaining)),
        )

    def _check_element(self, element: int) -> None:
        if not 0 <= element < self.size:
            raise InvalidParametersError(
                f"element {element} outside ground set of size {self.size}"
            )

    def deletion(self, element: int) -> "Matroid":
        self._check_element(element)
        return self.minor(self.ground & ~(1 << element))

    def contraction(self, element: int) -> "Matroid":
        self._check_element(element)
        return self.minor(self.ground, 1 << element)

    def restriction(self, subset: GroundSubset) -> "Matroid":
        return self.minor(subset)

    def direct_sum(self, other: "Matroid") -> "Matroid":
        """Direct sum; ``other`` is placed after this matroid's elements."""
        shift = self.size
        return Matroid(
            self.size + other.size,
            frozenset(a | (b << shift) for a in self.bases for b in other.bases),
        )

    def chain_face_bases(self, chain: Sequence[GroundSubset]) -> frozenset:
        """Bases maximizing every |B & S| along a chain of subsets.

        These are the bases of M|S1 + M|S2/S1 + ... + M/Sl on the original
        labels, i.e. the vertices of the face of the matroid polytope cut
        out by any direction in the open cone of the chain.
        """
        table = self.rank_table
        for subset in chain:
            self._check_subset(subset)
        return frozenset(
            basis
            for basis in self.bases
            if all(popcount(basis & subset) == table[subset] for subset in chain)
        )

    # -- connectivity -----------------------------------------------------

    @cached_property
    def circuits(self) -> Tuple[GroundSubset, ...]:
        """Minimal dependent sets, by brute force over all subsets."""
        table = self.rank_table
        found: List[GroundSubset] = []
        for subset in sorted(range(1, 1 << self.size), key=lambda s: (popcount(s), s)):
            if table[subset] == popcount(subset):
                continue
            if any(circuit & subset == circuit for circuit in found):
                continue
            found.append(subset)
        return tuple(found)

    @cached_property
    def connected_components(self) -> Tuple[GroundSubset, ...]:
        """Classes of the relation "some circuit contains both".

        Loops and coloops form singleton components.
        """
        graph = nx.Graph()
        graph.add_nodes_from(range(self.size))
        for circuit in self.circuits:
            members = elements(circuit)
            graph.add_edges_from(zip(members, members[1:]))
        components = sorted(bits(component) for component in nx.connected_components(graph))
        return tuple(sorted(components, key=lambda mask: elements(mask)[0]))

    @property
    def is_connected(self) -> bool:
        return len(self.connected_components) == 1

    def to_sets(self) -> List[List[int]]:
        """Bases as sorted element lists, in a deterministic order."""
        return sorted(list(elements(basis)) for basis in self.bases)

    def __repr__(self) -> str:
        return f"Matroid(size={self.size}, rank={self.full_rank}, bases={len(self.bases)})"


def minor_loops_coloops(
    matroid: Matroid, keep: GroundSubset, contract: GroundSubset
) -> Tuple[GroundSubset, GroundSubset]:
    """Loops and coloops of M|keep/contract, on the original labels.

    Computed from closures in M alone: i is a loop of the minor iff it lies
    in the closure of ``contract``, and a coloop iff it is outside the
    closure of ``keep`` minus i.
    """
    remaining = keep & ~contract
    loops = remaining & matroid.closure(contract)
    coloops = 0
    for i in elements(remaining):
        if not matroid.closure(keep & ~(1 << i)) >> i & 1:
            coloops |= 1 << i
    return loops, coloops
