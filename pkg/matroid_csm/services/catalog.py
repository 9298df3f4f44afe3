"""Named matroids and the test catalog.

Names understood by :func:`matroid_from_name`:

* ``uniform:r,m`` - the uniform matroid U_{r,m};
* ``graphic:K<n>`` - the cycle matroid of the complete graph, 2 <= n <= 5,
  edges numbered in ``sorted(nx.complete_graph(n).edges())`` order;
* ``fano`` and ``nonfano``;
* ``rank3:<m>:<lines>`` - the simple rank-3 matroid on m points whose lines
  with three or more points are listed, e.g. ``rank3:6:012|345``.

Example:
    >>> from matroid_csm.services.catalog import matroid_from_name
    >>> len(matroid_from_name("graphic:K4").bases)
    16
    >>> len(matroid_from_name("fano").bases)
    28
"""

import logging
import re
from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from matroid_csm.exceptions import InvalidParametersError, MatroidCSMError, SpecParseError
from matroid_csm.services.matroid import GroundSubset, Matroid, bits, elements, popcount
from matroid_csm.services.polytope import Subdivision

logger = logging.getLogger(__name__)

FANO_LINES: Tuple[Tuple[int, int, int], ...] = (
    (0, 1, 2),
    (0, 3, 4),
    (0, 5, 6),
    (1, 3, 5),
    (1, 4, 6),
    (2, 3, 6),
    (2, 4, 5),
)

_UNIFORM = re.compile(r"^uniform:(\d+),(\d+)$")
_GRAPHIC = re.compile(r"^graphic:K(\d+)$")
_RANK3 = re.compile(r"^rank3:(\d+):([0-9|]*)$")


def graphic_complete(n: int) -> Matroid:
    """Cycle matroid of K_n; bases are the spanning trees."""
    if not 2 <= n <= 5:
        raise InvalidParametersError(f"complete graphs K2..K5 are supported, got K{n}")
    graph = nx.complete_graph(n)
    index = {edge: i for i, edge in enumerate(sorted(graph.edges()))}
    bases = frozenset(
        bits(index[tuple(sorted(edge))] for edge in tree.edges())
        for tree in nx.SpanningTreeIterator(graph)
    )
    return Matroid(len(index), bases)


def rank3_from_lines(size: int, lines: Sequence[GroundSubset]) -> Matroid:
    """Simple rank-3 matroid: bases are the triples not inside a line.

    Raises:
        InvalidParametersError: If two lines share two points, a line has
            fewer than three points or a single line covers everything.
    """
    full = (1 << size) - 1
    for line in lines:
        if popcount(line) < 3 or line & ~full:
            raise InvalidParametersError(f"invalid line {elements(line)} on {size} points")
        if line == full:
            raise InvalidParametersError("a line through every point has rank 2")
    for first, second in combinations(lines, 2):
        if popcount(first & second) > 1:
            raise InvalidParametersError(
                f"lines {elements(first)} and {elements(second)} share two points"
            )
    bases = frozenset(
        bits(triple)
        for triple in combinations(range(size), 3)
        if not any(bits(triple) & line == bits(triple) for line in lines)
    )
    if not bases:
        raise InvalidParametersError(f"no rank-3 matroid on {size} points")
    return Matroid(size, bases)


def fano() -> Matroid:
    return rank3_from_lines(7, [bits(line) for line in FANO_LINES])


def non_fano() -> Matroid:
    """The Fano plane with the line {2,4,5} relaxed."""
    return rank3_from_lines(7, [bits(line) for line in FANO_LINES[:-1]])


def matroid_from_name(name: str) -> Matroid:
    """Build a matroid from its catalog name.

    Raises:
        SpecParseError: If the name is not understood or its parameters are
            out of range.
    """
    text = name.strip()
    try:
        if text == "fano":
            return fano()
        if text == "nonfano":
            return non_fano()
        match = _UNIFORM.match(text)
        if match:
            return Matroid.uniform(int(match.group(1)), int(match.group(2)))
        match = _GRAPHIC.match(text)
        if match:
            return graphic_complete(int(match.group(1)))
        match = _RANK3.match(text)
        if match:
            size = int(match.group(1))
            lines = [bits(int(c) for c in chunk) for chunk in match.group(2).split("|") if chunk]
            return rank3_from_lines(size, lines)
    except MatroidCSMError as exc:
        raise SpecParseError(f"invalid matroid spec {name!r}: {exc}") from exc
    raise SpecParseError(
        f"unknown matroid spec {name!r}; expected uniform:r,m, graphic:K<n>, "
        "fano, nonfano or rank3:<m>:<lines>"
    )


@lru_cache(maxsize=16)
def _permutation_tables(size: int) -> Tuple[Tuple[int, ...], ...]:
    tables = []
    for perm in permutations(range(size)):
        tables.append(
            tuple(bits(perm[i] for i in elements(mask)) for mask in range(1 << size))
        )
    return tuple(tables)


def _canonical_lines(size: int, lines: Sequence[GroundSubset]) -> Tuple[GroundSubset, ...]:
    return min(
        tuple(sorted(table[line] for line in lines)) for table in _permutation_tables(size)
    )


@lru_cache(maxsize=8)
def simple_rank3_line_systems(size: int) -> Tuple[Tuple[GroundSubset, ...], ...]:
    """Line systems of the simple rank-3 matroids on ``size`` points, up to isomorphism.

    The empty system (the uniform matroid U_{3,size}) is included.
    """
    candidates = [
        bits(c)
        for width in range(3, size)
        for c in combinations(range(size), width)
    ]
    found = set()

    def extend(chosen: List[GroundSubset], start: int) -> None:
        found.add(_canonical_lines(size, chosen))
        for index in range(start, len(candidates)):
            line = candidates[index]
            if all(popcount(line & other) <= 1 for other in chosen):
                chosen.append(line)
                extend(chosen, index + 1)
                chosen.pop()

    if size >= 3:
        extend([], 0)
    systems = sorted(found, key=lambda lines: (len(lines), lines))
    logger.debug("%d simple rank-3 matroids on %d points", len(systems), size)
    return tuple(systems)


def rank3_name(size: int, lines: Sequence[GroundSubset]) -> str:
    return f"rank3:{size}:" + "|".join("".join(str(i) for i in elements(line)) for line in lines)


def catalog(max_size: int) -> Dict[str, Matroid]:
    """Loopless test matroids on at most ``max_size`` elements, keyed by name.

    Uniform U_{r,m} with 1 <= r <= m, graphic K4, Fano, non-Fano and every
    simple rank-3 matroid on at most six points that is not uniform.
    """
    entries: Dict[str, Matroid] = {}
    for size in range(1, max_size + 1):
        for rank in range(1, size + 1):
            entries[f"uniform:{rank},{size}"] = Matroid.uniform(rank, size)
    if max_size >= 6:
        entries["graphic:K4"] = graphic_complete(4)
    if max_size >= 7:
        entries["fano"] = fano()
        entries["nonfano"] = non_fano()
    for size in range(4, min(max_size, 6) + 1):
        for lines in simple_rank3_line_systems(size):
            if lines:
                entries[rank3_name(size, lines)] = rank3_from_lines(size, lines)
    return dict(sorted(entries.items()))


def octahedron_subdivisions() -> Dict[str, Subdivision]:
    """The three splits of Q(U_{2,4}) into two square pyramids.

    For the split {a,b}|{c,d} the cells are U_{2,4} with {c,d} made
    parallel and U_{2,4} with {a,b} made parallel; they meet in the square
    Q(U_{1,2} + U_{1,2}).
    """
    parent = Matroid.uniform(2, 4)
    splits = {}
    for partner in (1, 2, 3):
        first = bits((0, partner))
        second = parent.ground & ~first
        cells = (
            Matroid(4, parent.bases - {second}),
            Matroid(4, parent.bases - {first}),
        )
        name = "".join(str(i) for i in elements(first)) + "|" + "".join(
            str(i) for i in elements(second)
        )
        splits[f"octahedron:{name}"] = Subdivision(parent, cells)
    return splits
