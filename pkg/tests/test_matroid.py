import pytest

from matroid_csm.exceptions import InvalidParametersError, NotAMatroidError
from matroid_csm.services.catalog import catalog
from matroid_csm.services.matroid import (
    Matroid,
    bits,
    compress,
    elements,
    format_subset,
    minor_loops_coloops,
)


def test_bitmask_helpers():
    assert bits([0, 2, 3]) == 0b1101
    assert elements(0b1101) == (0, 2, 3)
    assert compress(0b1010, 0b1110) == 0b101
    assert format_subset(0b101) == "{0,2}"
    with pytest.raises(InvalidParametersError):
        bits([-1])


def test_uniform_rank_and_closure(u24):
    assert len(u24.bases) == 6
    assert u24.full_rank == 2
    assert u24.rank(bits([0, 1, 2])) == 2
    assert u24.rank(bits([3])) == 1
    assert u24.closure(bits([0, 1])) == u24.ground
    assert u24.is_flat(bits([2]))
    assert not u24.is_flat(bits([0, 1]))


def test_uniform_edge_cases():
    empty = Matroid.uniform(0, 0)
    assert empty.size == 0
    assert empty.full_rank == 0
    assert Matroid.uniform(0, 3).loops == 0b111
    with pytest.raises(InvalidParametersError):
        Matroid.uniform(3, 2)


def test_from_bases_accepts_a_matroid():
    matroid = Matroid.from_bases(3, [[0, 1], [0, 2], [1, 2]])
    assert matroid == Matroid.uniform(2, 3)


def test_from_bases_reports_exchange_witness():
    with pytest.raises(NotAMatroidError) as info:
        Matroid.from_bases(4, [[0, 1], [2, 3]])
    assert set(info.value.witness) == {0b0011, 0b1100}


def test_from_bases_rejects_unequal_sizes_and_empty_input():
    with pytest.raises(NotAMatroidError) as info:
        Matroid.from_bases(3, [[0, 1], [2]])
    assert info.value.witness is not None
    with pytest.raises(NotAMatroidError):
        Matroid.from_bases(3, [])


def test_from_bases_rejects_elements_outside_ground_set():
    with pytest.raises(InvalidParametersError):
        Matroid.from_bases(2, [[0, 5]])


def test_rank_rejects_foreign_subset(u24):
    with pytest.raises(InvalidParametersError):
        u24.rank(bits([4]))


def test_loops_and_coloops(with_loop):
    assert with_loop.loops == 0b1000
    assert with_loop.has_loops
    assert with_loop.is_loop(3)
    assert Matroid.uniform(3, 3).coloops == 0b111
    assert Matroid.uniform(3, 4).coloops == 0


def test_deletion_and_contraction_relabel(u34):
    assert u34.deletion(3) == Matroid.uniform(3, 3)
    assert u34.contraction(3) == Matroid.uniform(2, 3)
    assert u34.contraction(0).labels == (1, 2, 3)
    with pytest.raises(InvalidParametersError):
        u34.deletion(4)


def test_minor_rejects_contract_outside_keep(u34):
    with pytest.raises(InvalidParametersError):
        u34.minor(bits([0, 1]), bits([2]))


def test_simple_and_uniform_flags(u24):
    assert u24.is_simple
    assert u24.is_uniform
    assert not Matroid.uniform(1, 4).is_simple
    assert not Matroid(4, u24.bases - {0b0011}).is_uniform


def test_connected_components(u24):
    assert u24.connected_components == (0b1111,)
    assert u24.is_connected
    square = Matroid.uniform(1, 2).direct_sum(Matroid.uniform(1, 2))
    assert square.size == 4
    assert len(square.bases) == 4
    assert square.connected_components == (0b0011, 0b1100)
    assert Matroid.uniform(3, 3).connected_components == (0b001, 0b010, 0b100)


def test_circuits():
    assert Matroid.uniform(2, 3).circuits == (0b111,)
    assert Matroid.uniform(1, 3).circuits == (0b011, 0b101, 0b110)


def test_chain_face_bases(u24):
    assert len(u24.chain_face_bases([bits([0])])) == 3
    assert u24.chain_face_bases([bits([0]), bits([0, 1])]) == frozenset({0b0011})


def test_minor_loops_coloops(u34):
    assert minor_loops_coloops(u34, u34.ground, bits([0])) == (0, 0)
    loops, coloops = minor_loops_coloops(u34, bits([0, 1, 2]), bits([0]))
    assert loops == 0
    assert coloops == bits([1, 2])


def test_to_sets_and_repr(u24):
    assert u24.to_sets()[0] == [0, 1]
    assert repr(u24) == "Matroid(size=4, rank=2, bases=6)"


def _subset_pairs(matroid):
    for first in range(matroid.ground + 1):
        for second in range(matroid.ground + 1):
            yield first, second


def test_rank_is_submodular():
    for name, matroid in catalog(6).items():
        rank = matroid.rank
        for first, second in _subset_pairs(matroid):
            assert rank(first | second) + rank(first & second) <= rank(first) + rank(second), name


def test_closure_is_extensive_and_idempotent():
    for name, matroid in catalog(6).items():
        for subset in range(matroid.ground + 1):
            closed = matroid.closure(subset)
            assert closed & subset == subset, name
            assert matroid.closure(closed) == closed, name
            assert matroid.rank(closed) == matroid.rank(subset), name


def test_deletion_and_contraction_commute():
    for name, matroid in catalog(5).items():
        for i in range(matroid.size):
            for j in range(matroid.size):
                if i == j:
                    continue
                deleted_first = matroid.deletion(i).contraction(j - (j > i))
                contracted_first = matroid.contraction(j).deletion(i - (i > j))
                assert deleted_first == contracted_first, name
                assert deleted_first == matroid.minor(matroid.ground & ~(1 << i), 1 << j), name


def test_minor_rank_is_rank_difference(k4):
    matroids = list(catalog(4).values()) + [k4]
    for matroid in matroids:
        for keep in range(matroid.ground + 1):
            contract = keep
            while True:
                minor = matroid.minor(keep, contract)
                assert minor.full_rank == matroid.rank(keep) - matroid.rank(contract)
                if contract == 0:
                    break
                contract = (contract - 1) & keep
