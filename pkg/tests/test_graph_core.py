from __future__ import annotations

import math
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from rigid2d import (
    EdgeId,
    Graph,
    Graph6Error,
    EdgeListError,
    clique_number,
    diameter,
    distance_matrix,
    format_edge_list,
    from_graph6,
    generate,
    parse_edge_list,
    to_graph6,
)


def nx_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(oracles.to_nx(g), header=False).decode().strip()


class TestGraphType:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(2, [(0, 2)])

    def test_duplicate_edges_collapse(self):
        g = Graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.m == 1

    def test_adjacency_symmetric_and_sorted(self):
        g = Graph(4, [(2, 0), (3, 0), (1, 3)])
        assert g.adj[0] == (2, 3)
        for u in range(4):
            for v in g.adj[u]:
                assert u in g.adj[v]

    def test_edge_count_matches_degree_sum(self):
        rng = random.Random(11)
        for _ in range(50):
            g = oracles.random_graph(rng.randrange(1, 10), 0.4, rng)
            assert sum(g.degrees()) == 2 * g.m

    def test_edge_id_normalises(self):
        assert EdgeId.of(5, 2) == EdgeId(2, 5)
        with pytest.raises(ValueError):
            EdgeId.of(3, 3)

    def test_relabel_preserves_structure(self):
        g = generate("petersen")
        perm = list(range(10))
        random.Random(3).shuffle(perm)
        h = g.relabel(perm)
        assert h.m == g.m
        assert sorted(h.degrees()) == sorted(g.degrees())


class TestGraph6:
    def test_k1_is_at_sign(self):
        assert to_graph6(generate("complete", 1)) == "@"
        assert from_graph6("@").n == 1

    def test_k2_hand_encoded(self):
        # n=2 -> chr(2+63)='A'; single bit 1 padded to 100000 -> chr(32+63)='_'
        assert to_graph6(generate("complete", 2)) == "A_"
        assert from_graph6("A_") == generate("complete", 2)

    def test_against_networkx_on_named(self, named):
        for g in named.values():
            assert to_graph6(g) == nx_graph6(g)

    def test_decode_matches_networkx(self, named):
        for g in named.values():
            s = nx_graph6(g)
            assert from_graph6(s) == g

    def test_round_trip_random(self):
        rng = random.Random(7)
        for _ in range(1000):
            g = oracles.random_graph(rng.randrange(1, 21), rng.random(), rng)
            assert from_graph6(to_graph6(g)) == g

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_round_trip_is_identity_on_canonical_strings(self, data):
        n = data.draw(st.integers(1, 20))
        bits = data.draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
        pairs = [(i, j) for j in range(n) for i in range(j)]
        g = Graph(n, (pairs[i] for i in range(len(pairs)) if bits >> i & 1))
        s = nx_graph6(g)  # canonical string from the independent encoder
        assert to_graph6(from_graph6(s)) == s

    def test_header_prefix_accepted(self):
        assert from_graph6(">>graph6<<A_") == generate("complete", 2)

    def test_long_form(self):
        g = Graph(63, [(0, 62)])
        s = to_graph6(g)
        assert s.startswith("~")
        assert from_graph6(s) == g
        assert s == nx_graph6(g)

    @pytest.mark.parametrize(
        "text, offset",
        [
            ("", 0),
            ("A", 1),          # truncated bit vector
            ("A_?", 2),        # trailing byte
            ("A" + chr(20), 1),  # out-of-range character
            ("~A", 2),         # long-form count cut short at end of input
        ],
    )
    def test_errors_report_byte_offsets(self, text, offset):
        with pytest.raises(Graph6Error) as err:
            from_graph6(text)
        assert err.value.offset == offset

    def test_nonzero_padding_rejected(self):
        # K2's padding bits forced nonzero: '_'|1 == '`'
        with pytest.raises(Graph6Error):
            from_graph6("A`")

    def test_encode_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            to_graph6(Graph(0))


class TestGenerators:
    def test_degree_multisets(self):
        cases = {
            ("complete", 6): [5] * 6,
            ("complete_bipartite", 3, 4): [3, 3, 3, 3, 4, 4, 4],
            ("cycle", 7): [2] * 7,
            ("path", 5): [1, 1, 2, 2, 2],
            ("prism",): [3] * 6,
            ("octahedron",): [4] * 6,
            ("petersen",): [3] * 10,
            ("h_6_10",): [3] * 10 + [5] * 6,
            ("jss_counterexample", 5): [5] * 12,
        }
        for (name, *params), want in cases.items():
            assert sorted(generate(name, *params).degrees()) == sorted(want)

    def test_k34_shape(self):
        g = generate("complete_bipartite", 3, 4)
        assert (g.n, g.m) == (7, 12)

    def test_h_6_10_adjacency_list(self):
        g = generate("h_6_10")
        assert (g.n, g.m) == (16, 30)
        assert g.neighbors(0) == (6, 8, 9, 10, 15)
        assert g.neighbors(5) == (7, 8, 13, 14, 15)
        assert g.neighbors(9) == (0, 1, 4)
        assert g.neighbors(15) == (0, 4, 5)

    def test_h_6_10_shared_neighbour_counts(self):
        g = generate("h_6_10")
        deg5 = [v for v in range(g.n) if g.degree(v) == 5]
        deg3 = [v for v in range(g.n) if g.degree(v) == 3]
        for i, a in enumerate(deg5):
            for b in deg5[i + 1:]:
                assert len(g.neighbor_set(a) & g.neighbor_set(b)) == 2
        for i, a in enumerate(deg3):
            for b in deg3[i + 1:]:
                assert len(g.neighbor_set(a) & g.neighbor_set(b)) in (1, 2)

    def test_jss_shape(self):
        g = generate("jss_counterexample", 7)
        assert (g.n, g.m) == (16, 56)
        assert g.is_regular and g.min_degree == 7
        g3 = generate("jss_counterexample", 3)
        assert (g3.n, g3.m) == (8, 12)
        assert not g3.has_edge(0, 1) and not g3.has_edge(4, 5)
        assert g3.has_edge(0, 4) and g3.has_edge(1, 5)

    def test_unknown_name_and_bad_params(self):
        with pytest.raises(ValueError):
            generate("moebius")
        with pytest.raises(ValueError):
            generate("cycle", 2)
        with pytest.raises(ValueError):
            generate("jss_counterexample", 2)
        with pytest.raises(ValueError):
            generate("prism", 3)


class TestCliqueNumber:
    def test_named_values(self, named):
        assert clique_number(named["k5"]) == 5
        assert clique_number(named["k34"]) == 2
        assert clique_number(named["octahedron"]) == 3

    def test_against_brute_force(self):
        rng = random.Random(23)
        for _ in range(60):
            g = oracles.random_graph(rng.randrange(1, 9), rng.random(), rng)
            assert clique_number(g) == oracles.brute_clique_number(g)


class TestDistanceMatrix:
    def test_h_6_10_diameter(self):
        assert diameter(generate("h_6_10")) == 3

    def test_c6_diameter(self):
        assert diameter(generate("cycle", 6)) == 3

    def test_disconnected_is_infinite(self):
        g = Graph(4, [(0, 1), (2, 3)])
        dm = distance_matrix(g)
        assert math.isinf(dm[0][2])
        assert dm[0][1] == 1

    def test_symmetric_zero_diagonal_triangle_inequality(self):
        rng = random.Random(5)
        for _ in range(40):
            g = oracles.random_graph(rng.randrange(1, 10), 0.35, rng)
            dm = distance_matrix(g)
            for i in range(g.n):
                assert dm[i][i] == 0
                for j in range(g.n):
                    assert dm[i][j] == dm[j][i]
                    for k in range(g.n):
                        assert dm[i][j] <= dm[i][k] + dm[k][j]


class TestEdgeListFormat:
    def test_round_trip(self, named):
        for g in named.values():
            assert parse_edge_list(format_edge_list(g)) == g

    def test_parse_basic(self):
        g = parse_edge_list("3 2\n0 1\n1 2\n")
        assert (g.n, g.m) == (3, 2)

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "3\n",
            "3 1\n0 1\n1 2\n",  # too many edges
            "3 2\n0 1\n",        # too few edges
            "2 1\n0 2\n",        # out of range
            "2 1\n0 zero\n",
            "3 2\n0 1\n0 1\n",   # duplicate
        ],
    )
    def test_parse_errors(self, text):
        with pytest.raises(EdgeListError):
            parse_edge_list(text)
