import pytest
from hypothesis import given, settings, strategies as st

from sumchoice import (
    CapacityError, GraphFormatError, blocks, canonical_form, cartesian_product,
    empty_graph, encode_graph6, enumerate_connected_graphs, generate,
    graph_from_edges, graph_power, induced_subgraph, parse_graph6,
)
from sumchoice.families import (
    BrokenWheel, Complete, CompleteBipartite, Cycle, Path, Wheel,
)
from sumchoice.graphs import Graph, distances_from

from conftest import graph_from_mask, vertex_pairs


def k(n):
    return generate(Complete(n))


def random_graph_strategy(max_n=10):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=0, max_value=max_n))
        pairs = vertex_pairs(n)
        mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
        return graph_from_mask(n, mask, pairs)
    return build()


class TestGraphBasics:
    def test_invariants_enforced(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0b00))  # asymmetric
        with pytest.raises(ValueError):
            Graph(1, (0b1,))  # self loop
        with pytest.raises(CapacityError):
            Graph(40, (0,) * 40)

    def test_edge_count_is_half_bit_total(self):
        g = k(4)
        assert g.edge_count == 6
        assert sum(row.bit_count() for row in g.adj) == 12

    def test_relabel_roundtrip(self):
        g = generate(Wheel(4))
        perm = [4, 2, 0, 1, 3]
        inverse = [perm.index(i) for i in range(5)]
        assert g.relabel(perm).relabel(inverse).adj == g.adj


class TestGraph6:
    def test_k2(self):
        assert encode_graph6(k(2)) == "A_"
        assert parse_graph6("A_").adj == k(2).adj

    def test_k3(self):
        assert encode_graph6(k(3)) == "Bw"
        assert parse_graph6("Bw").adj == k(3).adj

    def test_single_vertex(self):
        assert encode_graph6(empty_graph(1)) == "@"
        assert parse_graph6("@").n == 1

    def test_five_vertex_length(self):
        # header plus ceil(10 / 6) = 2 body characters
        for g in enumerate_connected_graphs(5):
            assert len(encode_graph6(g)) == 3

    def test_roundtrip_all_small(self):
        for n in range(6):
            pairs = vertex_pairs(n)
            for mask in range(1 << len(pairs)):
                g = graph_from_mask(n, mask, pairs)
                assert parse_graph6(encode_graph6(g)).adj == g.adj

    @settings(max_examples=60, deadline=None)
    @given(random_graph_strategy(10))
    def test_roundtrip_random(self, g):
        assert parse_graph6(encode_graph6(g)).adj == g.adj

    def test_malformed(self):
        with pytest.raises(GraphFormatError):
            parse_graph6("")
        with pytest.raises(GraphFormatError):
            parse_graph6("\x1f")  # header below the printable range
        with pytest.raises(GraphFormatError):
            parse_graph6("D")  # truncated body for n=5
        with pytest.raises(GraphFormatError):
            parse_graph6("A_x")  # trailing junk
        with pytest.raises(CapacityError):
            parse_graph6("~??")  # multi-byte order form
        with pytest.raises(CapacityError):
            parse_graph6(chr(63 + 40))  # order 40 > 32


class TestInducedSubgraph:
    def test_k5_triple_is_k3(self):
        assert induced_subgraph(k(5), [0, 2, 4]).adj == k(3).adj

    def test_c5_prefix_is_p3(self):
        got = induced_subgraph(generate(Cycle(5)), {0, 1, 2})
        assert got.adj == generate(Path(3)).adj

    def test_k23_drops_to_star(self):
        # keep the 3-side plus one hub: a claw
        g = generate(CompleteBipartite(2, 3))
        got = induced_subgraph(g, [0, 2, 3, 4])
        assert canonical_form(got) == canonical_form(generate(CompleteBipartite(1, 3)))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induced_subgraph(k(3), [0, 3])


class TestBlocks:
    def test_two_triangles(self):
        g = graph_from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
        found, cuts = blocks(g)
        assert len(found) == 2 and cuts == (2,)

    def test_cycle_single_block(self):
        found, cuts = blocks(generate(Cycle(5)))
        assert found == [(0, 1, 2, 3, 4)] and cuts == ()

    def test_path_blocks_are_edges(self):
        found, cuts = blocks(generate(Path(4)))
        assert sorted(found) == [(0, 1), (1, 2), (2, 3)]
        assert cuts == (1, 2)

    def test_isolated_vertices(self):
        found, cuts = blocks(empty_graph(3))
        assert sorted(found) == [(0,), (1,), (2,)] and cuts == ()

    @settings(max_examples=60, deadline=None)
    @given(random_graph_strategy(8))
    def test_edge_partition_and_biconnectivity(self, g):
        found, cuts = blocks(g)
        # every edge in exactly one block
        edge_lists = []
        for blk in found:
            sub = set(blk)
            edge_lists += [(u, v) for u, v in g.edges() if u in sub and v in sub]
        assert sorted(edge_lists) == sorted(g.edges())
        # cut vertices are exactly the vertices on two or more blocks
        count = {v: 0 for v in range(g.n)}
        for blk in found:
            for v in blk:
                count[v] += 1
        assert set(cuts) == {v for v, c in count.items() if c >= 2}
        # blocks on three or more vertices stay connected under any deletion
        for blk in found:
            if len(blk) < 3:
                continue
            sub = induced_subgraph(g, blk)
            assert sub.is_connected()
            for v in range(sub.n):
                assert sub.delete_vertex(v).is_connected()


class TestProductsAndPowers:
    def test_p2_times_p2_is_c4(self):
        got = cartesian_product(generate(Path(2)), generate(Path(2)))
        assert canonical_form(got) == canonical_form(generate(Cycle(4)))

    def test_k2_times_k3_is_prism(self):
        got = cartesian_product(k(2), k(3))
        assert (got.n, got.edge_count) == (6, 9)
        # the triangular prism: 3-regular on six vertices with two triangles
        assert got.degree_sequence() == (3,) * 6

    def test_p2_times_p3_counts(self):
        got = cartesian_product(generate(Path(2)), generate(Path(3)))
        assert (got.n, got.edge_count) == (6, 7)

    def test_product_capacity(self):
        with pytest.raises(CapacityError):
            cartesian_product(k(6), k(6))

    def test_power_identity(self):
        g = generate(Wheel(5))
        assert graph_power(g, 1).adj == g.adj

    def test_p5_squared_is_bw4(self):
        got = graph_power(generate(Path(5)), 2)
        assert (got.n, got.edge_count) == (5, 7)
        assert canonical_form(got) == canonical_form(generate(BrokenWheel(4)))

    def test_c5_squared_is_k5(self):
        assert graph_power(generate(Cycle(5)), 2).adj == k(5).adj

    @settings(max_examples=30, deadline=None)
    @given(random_graph_strategy(7), st.integers(min_value=1, max_value=4))
    def test_power_of_power_one(self, g, p):
        assert graph_power(graph_power(g, 1), p).adj == graph_power(g, p).adj

    def test_distances(self):
        g = generate(Path(4))
        assert distances_from(g, 0) == [0, 1, 2, 3]
        assert distances_from(empty_graph(2), 0) == [0, -1]
