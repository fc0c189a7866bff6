from __future__ import annotations

import random

import pytest

import oracles
from rigid2d import (
    PRIME,
    PreconditionError,
    RealizationModP,
    generate,
    oracle_is_rigid,
    random_realization,
    rank,
    rigidity_matrix_rank,
)


def test_prime_is_prime_and_below_2_62():
    assert PRIME < 2**62
    assert 2**62 - PRIME < 200
    # deterministic Miller-Rabin witness set, valid far beyond 2^64
    d, s = PRIME - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, PRIME)
        if x in (1, PRIME - 1):
            continue
        for _ in range(s - 1):
            x = x * x % PRIME
            if x == PRIME - 1:
                break
        else:
            pytest.fail(f"witness {a} refutes primality")


class TestRealization:
    def test_deterministic_per_seed(self):
        g = generate("petersen")
        assert random_realization(g, 9) == random_realization(g, 9)

    def test_different_seeds_differ(self):
        g = generate("petersen")
        assert random_realization(g, 1).coords != random_realization(g, 2).coords

    def test_exactly_2n_field_elements(self):
        g = generate("cycle", 6)
        r = random_realization(g, 0)
        assert len(r.coords) == 6
        assert all(0 <= x < PRIME and 0 <= y < PRIME for x, y in r.coords)


class TestMatrixRank:
    def test_named_values_match_pebble_rank(self):
        for name, params in [("complete", (4,)), ("cycle", (4,)),
                             ("complete_bipartite", (3, 3))]:
            g = generate(name, *params)
            assert rigidity_matrix_rank(g, random_realization(g, 11)) == rank(g)

    def test_collision_resampling(self):
        g = generate("complete", 3)
        # force a collision: all vertices at the same point
        broken = RealizationModP(p=PRIME, coords=((1, 2),) * 3, seed=5)
        assert rigidity_matrix_rank(g, broken) == rank(g) == 3

    def test_relabeling_invariance(self):
        rng = random.Random(50)
        for _ in range(25):
            g = oracles.random_graph(rng.randrange(2, 11), 0.5, rng)
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = g.relabel(perm)
            assert rigidity_matrix_rank(
                g, random_realization(g, 3)
            ) == rigidity_matrix_rank(h, random_realization(h, 3))

    def test_rank_bound(self):
        rng = random.Random(51)
        for _ in range(40):
            g = oracles.random_graph(rng.randrange(2, 12), rng.random(), rng)
            r = rigidity_matrix_rank(g, random_realization(g, 1))
            assert r <= min(g.m, 2 * g.n - 3)


class TestOracleIsRigid:
    def test_named_verdicts(self):
        assert oracle_is_rigid(generate("h_6_10"), 0)
        assert not oracle_is_rigid(generate("cycle", 5), 0)
        assert oracle_is_rigid(generate("prism"), 0)

    def test_requires_two_vertices(self):
        with pytest.raises(PreconditionError):
            oracle_is_rigid(generate("complete", 1), 0)

    def test_agreement_with_pebble_game_sample(self):
        # the full 500x3 agreement run lives in the acceptance suite
        rng = random.Random(52)
        for _ in range(60):
            g = oracles.random_graph(rng.randrange(2, 13), 0.5, rng)
            for seed in (0, 1):
                assert rigidity_matrix_rank(
                    g, random_realization(g, seed)
                ) == rank(g)
