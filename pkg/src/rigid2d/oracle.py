"""Independent randomized rank checks over a large prime field.

Edge-length constraints differentiate into a matrix with one row per
edge: the row for uv carries the coordinate difference p(u) - p(v) in
u's column pair and its negation in v's.  For coordinates drawn
uniformly from GF(p) the rank of this matrix equals the generic
rigidity-matroid rank except with probability at most 2n|E|/p
(Schwartz-Zippel), and it never exceeds it, so the check is one-sided.
Exact field arithmetic avoids any floating-point tolerance policy.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import PreconditionError
from .graph import Graph

#: Largest prime below 2**62.
PRIME = 4611686018427387847

#: Attempts before a coordinate collision is reported as an error.
MAX_RESAMPLE = 8


@dataclass(frozen=True)
class RealizationModP:
    """Per-vertex plane coordinates over GF(p), reproducible from ``seed``."""

    p: int
    coords: tuple[tuple[int, int], ...]
    seed: int


def random_realization(g: Graph, seed: int = 0) -> RealizationModP:
    """Uniform coordinates mod PRIME; deterministic for a fixed seed."""
    rng = random.Random(seed)
    coords = tuple(
        (rng.randrange(PRIME), rng.randrange(PRIME)) for _ in range(g.n)
    )
    return RealizationModP(p=PRIME, coords=coords, seed=seed)


def _has_collision(g: Graph, r: RealizationModP) -> bool:
    return any(r.coords[u] == r.coords[v] for u, v in g.edges())


def rigidity_matrix_rank(g: Graph, r: RealizationModP) -> int:
    """Rank of the differentiated edge-length matrix over GF(p).

    Adjacent vertices must receive distinct points; colliding
    realizations are resampled from derived seeds a bounded number of
    times before giving up (a collision is astronomically unlikely and
    signals a seed or modulus pathology).
    """
    attempt = 0
    while _has_collision(g, r):
        attempt += 1
        if attempt > MAX_RESAMPLE:
            raise RuntimeError(
                f"coordinate collision persisted through {MAX_RESAMPLE} resamples"
            )
        rng = random.Random(r.seed * 1000003 + attempt)
        coords = tuple(
            (rng.randrange(r.p), rng.randrange(r.p)) for _ in range(g.n)
        )
        r = RealizationModP(p=r.p, coords=coords, seed=r.seed)
    p = r.p
    rows = []
    for u, v in g.edges():
        dx = (r.coords[u][0] - r.coords[v][0]) % p
        dy = (r.coords[u][1] - r.coords[v][1]) % p
        row = [0] * (2 * g.n)
        row[2 * u] = dx
        row[2 * u + 1] = dy
        row[2 * v] = p - dx if dx else 0
        row[2 * v + 1] = p - dy if dy else 0
        rows.append(row)
    return _rank_mod_p(rows, 2 * g.n, p)


def _rank_mod_p(rows: list[list[int]], ncols: int, p: int) -> int:
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][col], -1, p)
        prow = [(x * inv) % p for x in rows[r]]
        rows[r] = prow
        for i in range(r + 1, len(rows)):
            f = rows[i][col]
            if f:
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
        r += 1
        if r == len(rows):
            break
    return r


def oracle_is_rigid(g: Graph, seed: int = 0) -> bool:
    """True when a random realization certifies rank 2n-3.

    One-sided: a True answer can be wrong only with probability about
    2n|E|/p; a False answer for a rigid graph is similarly unlikely but a
    True answer for a flexible graph is impossible.
    """
    if g.n < 2:
        raise PreconditionError("oracle_is_rigid needs at least two vertices")
    return rigidity_matrix_rank(g, random_realization(g, seed)) == 2 * g.n - 3
