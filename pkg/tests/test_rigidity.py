from __future__ import annotations

import random

import pytest

import oracles
from rigid2d import (
    EdgeId,
    Graph,
    PebbleState,
    edge_in_circuit,
    find_circuit,
    generate,
    is_redundantly_rigid,
    is_rigid,
    max_sparse_subgraph,
    rank,
    rigid_components,
)


class TestPebbleAccounting:
    def test_invariants_hold_after_every_insertion(self):
        rng = random.Random(41)
        for _ in range(30):
            g = oracles.random_graph(rng.randrange(2, 10), 0.5, rng)
            state = PebbleState(g.n)
            for e in g.edges():
                state.try_insert(e.u, e.v)
                state.check_invariants()
            assert sum(state.pebbles) == 2 * g.n - len(state.accepted)

    def test_accepted_set_is_sparse(self):
        rng = random.Random(42)
        for _ in range(30):
            g = oracles.random_graph(rng.randrange(2, 8), 0.6, rng)
            accepted, _ = max_sparse_subgraph(g)
            assert oracles.brute_is_sparse(g.n, list(accepted))

    def test_order_must_be_a_permutation(self):
        g = generate("complete", 4)
        with pytest.raises(ValueError):
            max_sparse_subgraph(g, order=g.edges()[:-1])


class TestRank:
    def test_named_values(self):
        # 2n-3 for the tight/rigid ones, |E| for the sparse flexible ones
        assert rank(generate("complete_bipartite", 3, 3)) == 9
        assert rank(generate("complete", 4)) == 5
        assert rank(generate("cycle", 4)) == 4

    def test_matches_brute_force_greedy(self):
        rng = random.Random(43)
        for _ in range(80):
            g = oracles.random_graph(rng.randrange(1, 7), rng.random(), rng)
            assert rank(g) == oracles.brute_rank(g)

    def test_bounds_and_monotonicity(self):
        rng = random.Random(44)
        for _ in range(40):
            n = rng.randrange(2, 10)
            g = Graph(n)
            prev = 0
            pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
            rng.shuffle(pairs)
            for a, b in pairs:
                g = g.add_edge(a, b)
                r = rank(g)
                assert prev <= r <= prev + 1
                assert r <= min(g.m, 2 * n - 3)
                prev = r

    def test_insertion_order_invariance(self):
        # 200 random graphs, 10 random edge orders each: same cardinality
        rng = random.Random(45)
        for _ in range(200):
            g = oracles.random_graph(rng.randrange(2, 13), 0.5, rng)
            baseline = len(max_sparse_subgraph(g)[0])
            for _ in range(10):
                order = list(g.edges())
                rng.shuffle(order)
                assert len(max_sparse_subgraph(g, order=order)[0]) == baseline


class TestIsRigid:
    def test_named_verdicts(self):
        assert is_rigid(generate("complete_bipartite", 3, 4))
        assert not is_rigid(generate("cycle", 5))
        assert not is_rigid(generate("jss_counterexample", 7))
        assert is_rigid(generate("complete", 1))
        assert is_rigid(Graph(1))
        assert not is_rigid(Graph(2))

    def test_definitional_equivalence_all_graphs_up_to_6(self, census_upto_6):
        for g in census_upto_6:
            assert is_rigid(g) == oracles.brute_is_rigid(g)

    def test_definitional_equivalence_disconnected(self):
        rng = random.Random(46)
        for _ in range(40):
            g = oracles.random_graph(6, 0.25, rng)
            assert is_rigid(g) == oracles.brute_is_rigid(g)


class TestRigidComponents:
    def test_c4_splits_into_edges(self):
        decomp = rigid_components(generate("cycle", 4))
        assert [sorted(c) for c in decomp.components] == [
            [0, 1], [0, 3], [1, 2], [2, 3],
        ]
        assert decomp.rank == 4

    def test_two_triangles_sharing_a_vertex(self):
        g = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
        decomp = rigid_components(g)
        assert [sorted(c) for c in decomp.components] == [[0, 1, 2], [2, 3, 4]]
        assert decomp.rank == 6

    def test_k33_single_component(self):
        decomp = rigid_components(generate("complete_bipartite", 3, 3))
        assert decomp.components == (frozenset(range(6)),)
        assert decomp.rank == 9

    def test_empty_edge_set_rejected(self):
        with pytest.raises(ValueError):
            rigid_components(Graph(3))

    def test_invariants_on_random_graphs(self, census_upto_6):
        rng = random.Random(47)
        pool = [g for g in census_upto_6 if g.m >= 1]
        pool += [
            oracles.random_graph(rng.randrange(2, 11), 0.4, rng)
            for _ in range(60)
        ]
        for g in (h for h in pool if h.m >= 1):
            decomp = rigid_components(g)
            comps = decomp.components
            assert all(len(c) >= 2 for c in comps)
            for i, a in enumerate(comps):
                for b in comps[i + 1:]:
                    assert len(a & b) <= 1
            for e in g.edges():
                homes = [c for c in comps if e.u in c and e.v in c]
                assert len(homes) == 1
            assert decomp.rank == sum(2 * len(c) - 3 for c in comps)
            assert decomp.rank == rank(g)

    def test_components_are_maximal_rigid_subgraphs(self, census_upto_6):
        # definitional cross-check on every connected graph up to 6 vertices
        for g in (h for h in census_upto_6 if h.m >= 1):
            comps = rigid_components(g).components
            for comp in comps:
                sub = [e for e in g.edges() if e.u in comp and e.v in comp]
                local = {v: i for i, v in enumerate(sorted(comp))}
                induced = Graph(len(comp), [(local[u], local[v]) for u, v in sub])
                assert oracles.brute_is_rigid(induced)
            # maximality: no strictly larger induced subgraph is rigid
            for comp in comps:
                for extra in range(g.n):
                    if extra in comp:
                        continue
                    bigger = sorted(comp | {extra})
                    local = {v: i for i, v in enumerate(bigger)}
                    sub = [
                        (local[u], local[v])
                        for u, v in g.edges()
                        if u in local and v in local
                    ]
                    assert not oracles.brute_is_rigid(Graph(len(bigger), sub))


class TestCircuits:
    def test_k4_every_edge_in_circuit(self):
        g = generate("complete", 4)
        assert all(edge_in_circuit(g, e) for e in g.edges())

    def test_k33_no_edge_in_circuit(self):
        g = generate("complete_bipartite", 3, 3)
        assert not any(edge_in_circuit(g, e) for e in g.edges())

    def test_k34_every_edge_in_circuit(self):
        g = generate("complete_bipartite", 3, 4)
        assert rank(g) == 11
        for e in g.edges():
            assert rank(g.delete_edge(e.u, e.v)) == 11
            assert edge_in_circuit(g, e)

    def test_non_edge_rejected(self):
        with pytest.raises(ValueError):
            edge_in_circuit(generate("cycle", 4), EdgeId(0, 2))

    def test_find_circuit_k4_is_whole_graph(self):
        circuit = find_circuit(generate("complete", 4))
        assert circuit is not None and len(circuit) == 6

    def test_find_circuit_sparse_returns_none(self):
        assert find_circuit(generate("cycle", 5)) is None

    @staticmethod
    def _is_tight(n_vertices: int, edges: list[tuple[int, int]]) -> bool:
        verts = sorted({v for e in edges for v in e})
        local = {v: i for i, v in enumerate(verts)}
        relabeled = [(local[a], local[b]) for a, b in edges]
        return len(edges) == 2 * len(verts) - 3 and oracles.brute_is_sparse(
            len(verts), relabeled
        )

    def _assert_is_circuit(self, circuit: frozenset[EdgeId]) -> None:
        verts = {v for e in circuit for v in e}
        assert len(circuit) == 2 * len(verts) - 2
        for f in circuit:
            rest = [e for e in circuit if e != f]
            assert self._is_tight(len(verts), rest)

    def test_find_circuit_k34_satisfies_definition(self):
        circuit = find_circuit(generate("complete_bipartite", 3, 4))
        assert circuit is not None
        assert len({v for e in circuit for v in e}) <= 7
        self._assert_is_circuit(circuit)

    def test_find_circuit_definition_on_random_graphs(self):
        rng = random.Random(48)
        found = 0
        for _ in range(120):
            g = oracles.random_graph(rng.randrange(4, 9), 0.55, rng)
            circuit = find_circuit(g)
            if circuit is None:
                assert rank(g) == g.m
                continue
            found += 1
            self._assert_is_circuit(circuit)
        assert found >= 30  # the sample really exercised the circuit path


class TestRedundantRigidity:
    def test_named_verdicts(self):
        assert is_redundantly_rigid(generate("complete", 4))
        assert not is_redundantly_rigid(generate("prism"))
        assert is_redundantly_rigid(generate("octahedron"))

    def test_octahedron_every_deletion_stays_rank_9(self):
        g = generate("octahedron")
        assert all(
            rank(g.delete_edge(e.u, e.v)) == 9 for e in g.edges()
        )

    def test_equivalent_to_every_edge_in_circuit(self, census_upto_6):
        for g in census_upto_6:
            if g.n < 2 or g.m == 0:
                continue
            via_deletion = is_redundantly_rigid(g)
            via_circuits = is_rigid(g) and all(
                edge_in_circuit(g, e) for e in g.edges()
            )
            assert via_deletion == via_circuits
