import itertools

import pytest

from tropint import matroid as mt
from tropint.errors import HasLoop, NotAMatroid, NotAQuotient


def brute_rank(n, independent, mask):
    """Rank as size of the largest independent subset (oracle)."""
    elems = mt.elements_of(mask)
    for size in range(len(elems), -1, -1):
        for sub in itertools.combinations(elems, size):
            if independent(frozenset(sub)):
                return size
    return 0


def test_uniform_rank_table():
    m = mt.uniform(2, 4)
    for a in range(1 << 4):
        assert m.rank(a) == brute_rank(4, lambda s: len(s) <= 2, a)
    assert m.total_rank == 2
    assert m.is_loopfree()


def test_graphic_complete_rank_oracle():
    m = mt.graphic_complete(4)
    edges = m.edge_list
    assert len(edges) == 6

    def forest(subset):
        # acyclic iff |edges| = |vertices touched| - components
        import networkx as nx
        g = nx.Graph()
        g.add_nodes_from(range(4))
        g.add_edges_from(edges[i] for i in subset)
        return nx.number_of_edges(g) == 4 - nx.number_connected_components(g)

    for a in range(1 << 6):
        assert m.rank(a) == brute_rank(6, forest, a)


def test_flats_u23():
    m = mt.uniform(2, 3)
    flats = m.flats()
    assert sorted(flats) == [0b000, 0b001, 0b010, 0b100, 0b111]
    assert m.proper_flats() == [0b001, 0b010, 0b100]


def test_chains_counts():
    assert len(mt.uniform(2, 3).maximal_chains()) == 3
    assert len(mt.uniform(3, 4).maximal_chains()) == 12
    # Boolean matroid on n elements: chains = orderings.
    assert len(mt.uniform(4, 4).maximal_chains()) == 24
    # Rank-1: one chain (just E).
    assert mt.uniform(1, 3).maximal_chains() == [((1 << 3) - 1,)]


def test_chains_oracle_k4():
    m = mt.graphic_complete(4)
    flats = [f for f in m.flats() if f != 0]
    chains = set()

    def grow(chain):
        top = chain[-1]
        if top == m.full_mask:
            chains.add(tuple(chain))
            return
        for f in flats:
            if f & top == top and f != top and m.rank(f) == m.rank(top) + 1:
                grow(chain + [f])

    for f in flats:
        if m.rank(f) == 1:
            grow([f])
    assert set(m.maximal_chains()) == chains


def test_from_bases_roundtrip():
    m = mt.uniform(2, 4)
    m2 = mt.from_bases(4, m.bases())
    assert m2 == m


def test_from_bases_rejects_non_matroid():
    # {1,2} and {3,4} without exchange partners.
    with pytest.raises(NotAMatroid):
        mt.from_bases(4, [0b0011, 0b1100])


def test_loop_detection():
    table = [0, 1, 0, 1]  # element 2 is a loop
    with pytest.raises(HasLoop):
        mt.Matroid(2, table)
    m = mt.Matroid(2, table, allow_loops=True)
    assert m.loops() == [1]


def test_deletion_contraction():
    m = mt.graphic_complete(4)
    d = mt.deletion(m, 1 << 5)
    assert d.n == 5 and d.total_rank == 3
    c = mt.contraction(m, 1 << 0)
    assert c.n == 5 and c.total_rank == 2
    # Deleting nothing is the identity on the rank table.
    assert mt.deletion(m, 0).rank_table == m.rank_table


def test_direct_sum():
    m = mt.direct_sum(mt.uniform(1, 2), mt.uniform(2, 3))
    assert m.n == 5 and m.total_rank == 3
    assert m.rank(0b00011) == 1
    assert m.rank(0b11100) == 2
    comps = mt.connected_components(m)
    assert comps == [0b00011, 0b11100]


def test_connected_components_connected():
    assert mt.connected_components(mt.uniform(2, 3)) == [0b111]
    assert mt.connected_components(mt.graphic_complete(4)) == [0b111111]


def test_diagonal_matroid():
    m = mt.uniform(2, 3)
    d = mt.diagonal_matroid(m)
    assert d.n == 6 and d.total_rank == 2
    # rank(A ⊔ B) = rank(A ∪ B)
    for a in range(8):
        for b in range(8):
            assert d.rank(a | (b << 3)) == m.rank(a | b)


def test_is_quotient():
    m = mt.uniform(2, 3)
    assert mt.is_quotient(m, mt.uniform(1, 3))
    assert mt.is_quotient(m, m)
    assert not mt.is_quotient(mt.uniform(1, 3), m)


def test_quotient_witness():
    m = mt.uniform(3, 4)
    n = mt.uniform(1, 4)
    q = mt.quotient_witness(m, n)
    r_mask = mt.mask_of(q.witness_elements)
    assert q.n == 6
    assert mt.deletion(q, r_mask).rank_table == m.rank_table
    assert mt.contraction(q, r_mask).rank_table == n.rank_table
    with pytest.raises(NotAQuotient):
        mt.quotient_witness(n, m)


def test_intermediate_matroids():
    m = mt.uniform(3, 4)
    n = mt.uniform(1, 4)
    assert mt.intermediate_matroid(m, n, 0) == n
    assert mt.intermediate_matroid(m, n, 2) == m
    mid = mt.intermediate_matroid(m, n, 1)
    assert mid == mt.uniform(2, 4)


def test_induced_matroid_at():
    m = mt.uniform(2, 3)
    # At the origin every basis is minimal: get m back.
    assert mt.induced_matroid_at(m, (0, 0, 0)).bases() == m.bases()
    # Pushing coordinate 0 down makes element 0 mandatory.
    mp = mt.induced_matroid_at(m, (-1, 0, 0))
    assert mp.bases() == [0b011, 0b101]


def test_matroid_intersection_uniform():
    a = mt.uniform(2, 3)
    b = mt.uniform(2, 3)
    w, r = mt.matroid_intersection(a, b)
    assert r == 1  # 2 + 2 - 3
    assert w.bases() == [0b001, 0b010, 0b100]


def test_matroid_intersection_with_loops():
    a = mt.uniform(1, 3)
    b = mt.uniform(2, 3)
    w, r = mt.matroid_intersection(a, b)
    # Complementary-rank case: bases can be singletons or the empty set.
    assert r == 0
    assert not w.is_loopfree()
