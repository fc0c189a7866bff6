"""Automorphism groups, canonical forms, transitivity and distance regularity.

The search machinery is classical individualization-refinement.
Vertices are recoloured by (colour, sorted neighbour colours) signatures
until stable; branching individualizes one vertex of the first smallest
non-singleton colour class.  Refinement is label-independent, so
relabelling a graph relabels the whole search tree with it: that
equivariance is what makes the orbit-stabilizer recursion and the
pruned canonical traversal below exact.

Group order comes from the recursion |Stab(prefix)| = |orbit(base)| *
|Stab(prefix + base)|, where the orbit is grown by explicitly searching
for one prefix-stabilizing automorphism per candidate cell member, so
the generators returned provably generate the full group.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import PreconditionError
from .graph import EdgeId, Graph, distance_matrix


@dataclass(frozen=True)
class SymmetryReport:
    """Automorphism generators, group order, orbits and transitivity flags."""

    aut_order: int
    generators: tuple[tuple[int, ...], ...]
    vertex_orbits: tuple[frozenset[int], ...]
    edge_orbits: tuple[frozenset[EdgeId], ...]
    vertex_transitive: bool
    edge_transitive: bool


# -- colour refinement --------------------------------------------------------


def _normalize(values: list) -> list[int]:
    ranking = {s: i for i, s in enumerate(sorted(set(values)))}
    return [ranking[s] for s in values]


def _refine(g: Graph, colors: Iterable[int]) -> tuple[int, ...]:
    """Equitable refinement by iterated neighbour-colour signatures.

    Signatures embed the current colour, so each round refines the
    previous partition; the result is a fixpoint.  Label-independent by
    construction.
    """
    cur = _normalize(list(colors))
    while True:
        sigs = [
            (cur[v], tuple(sorted(cur[w] for w in g.adj[v])))
            for v in range(g.n)
        ]
        nxt = _normalize(sigs)
        if nxt == cur:
            return tuple(cur)
        cur = nxt


def _initial_colors(g: Graph) -> tuple[int, ...]:
    """Seed colours from degree plus the per-vertex distance histogram."""
    dm = distance_matrix(g)
    sigs = []
    for v in range(g.n):
        finite = Counter(int(d) for d in dm[v] if not math.isinf(d) and d > 0)
        unreachable = sum(1 for d in dm[v] if math.isinf(d))
        sigs.append((g.degree(v), tuple(sorted(finite.items())), unreachable))
    return _refine(g, _normalize(sigs))


def _individualize(g: Graph, colors: tuple[int, ...], v: int) -> tuple[int, ...]:
    fresh = list(colors)
    fresh[v] = g.n  # colours are ranks < n, so n is a fresh maximal colour
    return _refine(g, fresh)


def _cells(colors: tuple[int, ...]) -> list[list[int]]:
    byc: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        byc.setdefault(c, []).append(v)
    return [byc[c] for c in sorted(byc)]


def _target_cell(cells: list[list[int]]) -> list[int] | None:
    """First smallest non-singleton cell (None when discrete)."""
    best = None
    for idx, cell in enumerate(cells):
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


def _is_automorphism(g: Graph, perm: list[int]) -> bool:
    return all(g.has_edge(perm[u], perm[v]) for u, v in g.edges())


# -- automorphism group -------------------------------------------------------


def _extension(
    g: Graph, cd: tuple[int, ...], cr: tuple[int, ...]
) -> tuple[int, ...] | None:
    """One automorphism matching the domain state to the range state, if any.

    Both states are refined colourings with identical class structure by
    construction; the domain side individualizes the first vertex of the
    target cell while the range side tries every candidate.
    """
    cells_d = _cells(cd)
    cells_r = _cells(cr)
    if [len(c) for c in cells_d] != [len(c) for c in cells_r]:
        return None
    target = _target_cell(cells_d)
    if target is None:
        perm = [0] * g.n
        for v in range(g.n):
            perm[v] = cells_r[cd[v]][0]
        return tuple(perm) if _is_automorphism(g, perm) else None
    idx = cells_d.index(target)
    base = target[0]
    for w in cells_r[idx]:
        res = _extension(
            g, _individualize(g, cd, base), _individualize(g, cr, w)
        )
        if res is not None:
            return res
    return None


def _orbit_of(v: int, gens: list[tuple[int, ...]]) -> set[int]:
    orbit = {v}
    frontier = [v]
    while frontier:
        x = frontier.pop()
        for p in gens:
            y = p[x]
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return orbit


def _aut_search(
    g: Graph, colors: tuple[int, ...]
) -> tuple[int, list[tuple[int, ...]]]:
    """Order and generators of the automorphisms fixing the individualized
    prefix encoded in ``colors`` pointwise."""
    cells = _cells(colors)
    target = _target_cell(cells)
    if target is None:
        return 1, []
    base = target[0]
    order, gens = _aut_search(g, _individualize(g, colors, base))
    orbit = _orbit_of(base, gens)
    for v in target[1:]:
        if v in orbit:
            continue
        sigma = _extension(
            g, _individualize(g, colors, base), _individualize(g, colors, v)
        )
        if sigma is not None:
            gens.append(sigma)
            orbit = _orbit_of(base, gens)
    return order * len(orbit), gens


def _orbit_partition(n: int, gens: Iterable[tuple[int, ...]]) -> tuple[frozenset[int], ...]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens:
        for v in range(n):
            a, b = find(v), find(p[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, set[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), set()).add(v)
    return tuple(
        frozenset(groups[r]) for r in sorted(groups, key=lambda r: min(groups[r]))
    )


@lru_cache(maxsize=4096)
def symmetry_report(g: Graph) -> SymmetryReport:
    """Full automorphism-group report; cached, since graphs are immutable."""
    if g.n == 0:
        return SymmetryReport(1, (), (), (), True, True)
    order, gens = _aut_search(g, _initial_colors(g))
    gens_sorted = tuple(sorted(set(gens)))
    vertex_orbits = _orbit_partition(g.n, gens_sorted)
    edge_orbit_map: dict[EdgeId, int] = {}
    edges = g.edges()
    eindex = {e: i for i, e in enumerate(edges)}
    parent = list(range(len(edges)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens_sorted:
        for i, e in enumerate(edges):
            j = eindex[EdgeId.of(p[e.u], p[e.v])]
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, set[EdgeId]] = {}
    for i, e in enumerate(edges):
        groups.setdefault(find(i), set()).add(e)
    edge_orbits = tuple(
        frozenset(groups[r]) for r in sorted(groups, key=lambda r: min(groups[r]))
    )
    return SymmetryReport(
        aut_order=order,
        generators=gens_sorted,
        vertex_orbits=vertex_orbits,
        edge_orbits=edge_orbits,
        vertex_transitive=len(vertex_orbits) <= 1,
        edge_transitive=len(edge_orbits) <= 1,
    )


def automorphism_group(g: Graph) -> SymmetryReport:
    return symmetry_report(g)


def is_vertex_transitive(g: Graph) -> bool:
    return symmetry_report(g).vertex_transitive


def is_edge_transitive(g: Graph) -> bool:
    return symmetry_report(g).edge_transitive


# -- canonical labelling ------------------------------------------------------


def _adjacency_key(g: Graph, pos: tuple[int, ...]) -> int:
    """Upper-triangle bitmask of the relabelled adjacency matrix, column-wise."""
    key = 0
    for u, v in g.edges():
        i, j = pos[u], pos[v]
        if i > j:
            i, j = j, i
        key |= 1 << (j * (j - 1) // 2 + i)
    return key


@lru_cache(maxsize=4096)
def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """A labelling (vertex -> position) minimising the adjacency bitmask.

    The traversal explores one branch per orbit of the already-known
    automorphism group restricted to stabilizing the current prefix;
    skipped branches are automorphic images of explored ones, so the
    minimum is exact.
    """
    if g.n == 0:
        return ()
    gens = symmetry_report(g).generators
    best_key: int | None = None
    best_lab: tuple[int, ...] = ()

    def explore(colors: tuple[int, ...], fixed: tuple[int, ...]) -> None:
        nonlocal best_key, best_lab
        cells = _cells(colors)
        target = _target_cell(cells)
        if target is None:
            key = _adjacency_key(g, colors)
            if best_key is None or key < best_key:
                best_key = key
                best_lab = colors
            return
        usable = [p for p in gens if all(p[x] == x for x in fixed)]
        seen_orbits: list[set[int]] = []
        for v in target:
            if any(v in orb for orb in seen_orbits):
                continue
            seen_orbits.append(_orbit_of(v, usable))
            explore(_individualize(g, colors, v), fixed + (v,))

    explore(_initial_colors(g), ())
    return best_lab


def canonical_form(g: Graph) -> Graph:
    """The canonically relabelled copy of g (equal for isomorphic graphs)."""
    return g.relabel(canonical_labeling(g))


def canonical_key(g: Graph) -> tuple[int, int]:
    """Hashable isomorphism-class key: (n, canonical adjacency bitmask)."""
    return g.n, _adjacency_key(g, canonical_labeling(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)


# -- structure of edge-transitive non-vertex-transitive graphs ---------------


def degree_bipartition(
    g: Graph,
) -> tuple[frozenset[int], frozenset[int]] | None:
    """The (min-degree side, max-degree side) bipartition of a connected
    edge-transitive, not vertex-transitive graph.

    Returns None when the expected structure is absent: that would
    contradict the classification of such graphs, so callers treat None
    as a structural violation rather than a normal outcome.  Equal-degree
    parts (possible for semisymmetric graphs) fall back to the two vertex
    orbits, larger part first.
    """
    rep = _require_et_not_vt(g)
    lo, hi = g.min_degree, g.max_degree
    if lo != hi:
        part_lo = frozenset(v for v in range(g.n) if g.degree(v) == lo)
        part_hi = frozenset(v for v in range(g.n) if g.degree(v) == hi)
    else:
        if len(rep.vertex_orbits) != 2:
            return None
        part_lo, part_hi = sorted(
            rep.vertex_orbits, key=lambda s: (-len(s), min(s))
        )
    if not part_lo or not part_hi:
        return None
    for u, v in g.edges():
        if (u in part_lo) == (v in part_lo):
            return None
    return part_lo, part_hi


def _require_et_not_vt(g: Graph) -> SymmetryReport:
    if not g.is_connected():
        raise PreconditionError("graph must be connected")
    rep = symmetry_report(g)
    if not rep.edge_transitive:
        raise PreconditionError("graph is not edge-transitive")
    if rep.vertex_transitive:
        raise PreconditionError("graph is vertex-transitive")
    return rep


# -- distance regularity ------------------------------------------------------


@dataclass(frozen=True)
class IntersectionArray:
    """Distance-regularity certificate: diameter, the b/c sequences, and the
    full three-index count table."""

    diameter: int
    b: tuple[int, ...]
    c: tuple[int, ...]
    table: Mapping[tuple[int, int, int], int]

    def __str__(self) -> str:
        return "{%s;%s}" % (
            ",".join(map(str, self.b)),
            ",".join(map(str, self.c)),
        )


def is_distance_regular(g: Graph) -> IntersectionArray | None:
    """Checks the full definition: for all i, j and all vertex pairs x, y at
    distance k, the number of vertices at distance i from x and j from y
    depends only on (i, j, k).  Returns the intersection array on success.
    """
    if not g.is_connected():
        raise PreconditionError("distance regularity is defined for connected graphs")
    n = g.n
    dm = distance_matrix(g)
    diam = int(max(max(row) for row in dm)) if n else 0
    grids: dict[int, dict[tuple[int, int], int]] = {}
    for x in range(n):
        for y in range(n):
            k = int(dm[x][y])
            grid: dict[tuple[int, int], int] = {}
            for z in range(n):
                pair = (int(dm[x][z]), int(dm[y][z]))
                grid[pair] = grid.get(pair, 0) + 1
            if k in grids:
                if grids[k] != grid:
                    return None
            else:
                grids[k] = grid
    table = {
        (i, j, k): count
        for k, grid in sorted(grids.items())
        for (i, j), count in sorted(grid.items())
    }
    b = tuple(table.get((i + 1, 1, i), 0) for i in range(diam))
    c = tuple(table.get((i - 1, 1, i), 0) for i in range(1, diam + 1))
    return IntersectionArray(diameter=diam, b=b, c=c, table=table)
