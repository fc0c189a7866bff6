"""Vertex connectivity and the connectivity-based global-rigidity conditions."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph


@dataclass(frozen=True)
class Separation:
    """A vertex cut with the two grouped sides it disconnects.

    No edge of the graph joins ``side_a`` to ``side_b``; both sides are
    nonempty and together with ``separator`` they partition the vertices.
    """

    separator: frozenset[int]
    side_a: frozenset[int]
    side_b: frozenset[int]


def _flow_value_and_cut(
    g: Graph, s: int, t: int
) -> tuple[int, frozenset[int]]:
    """Max number of internally vertex-disjoint s-t paths, plus a minimum
    separating set realising it (empty when s, t are adjacent-free... s and t
    themselves are never in the cut).

    Standard node splitting: vertex v becomes v_in -> v_out with unit
    capacity; each undirected edge contributes both directed arcs with
    effectively unbounded capacity.  BFS augmentation suffices at these
    sizes.
    """
    n = g.n
    big = n + 1
    # node 2v = v_in, 2v+1 = v_out
    cap: list[dict[int, int]] = [dict() for _ in range(2 * n)]
    for v in range(n):
        cap[2 * v][2 * v + 1] = 1 if v not in (s, t) else big
        cap[2 * v + 1][2 * v] = 0
    for u, v in g.edges():
        cap[2 * u + 1][2 * v] = big
        cap[2 * v][2 * u + 1] = cap[2 * v].get(2 * u + 1, 0)
        cap[2 * v + 1][2 * u] = big
        cap[2 * u][2 * v + 1] = cap[2 * u].get(2 * v + 1, 0)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent: dict[int, int] = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for y, c in cap[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            break
        y = sink
        while y != source:
            x = parent[y]
            cap[x][y] -= 1
            cap[y][x] = cap[y].get(x, 0) + 1
            y = x
        flow += 1
        if flow > n:
            raise RuntimeError("flow exceeded vertex count; capacity bug")
    reach = {source}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y, c in cap[x].items():
            if c > 0 and y not in reach:
                reach.add(y)
                queue.append(y)
    cut = frozenset(
        v for v in range(n) if 2 * v in reach and 2 * v + 1 not in reach
    )
    return flow, cut


def min_vertex_cut(g: Graph) -> tuple[int, frozenset[int] | None]:
    """Vertex connectivity together with a minimum separating set.

    Complete graphs (and n <= 1) have no separating set: the second
    component is None and the connectivity is n - 1.  Disconnected
    graphs yield (0, empty set).
    """
    n = g.n
    if n <= 1 or g.is_complete:
        return max(n - 1, 0), None
    if not g.is_connected():
        return 0, frozenset()
    v0 = min(range(n), key=lambda v: (g.degree(v), v))
    best = n - 1
    best_cut: frozenset[int] | None = None
    pairs = [(v0, t) for t in range(n) if t != v0 and not g.has_edge(v0, t)]
    pairs += [
        (a, b)
        for a, b in combinations(g.neighbors(v0), 2)
        if not g.has_edge(a, b)
    ]
    for s, t in pairs:
        value, cut = _flow_value_and_cut(g, s, t)
        if value < best:
            best, best_cut = value, cut
    if best_cut is None:
        raise RuntimeError("non-complete graph yielded no cut; flow bug")
    return best, best_cut


def vertex_connectivity(g: Graph) -> int:
    """Standard vertex connectivity; n - 1 for complete graphs.

    Runs unit-capacity max-flow from one minimum-degree vertex to each of
    its non-neighbours and between each non-adjacent pair of its
    neighbours: every minimum separating set either misses the fixed
    vertex or, being minimal, leaves two of its neighbours on opposite
    sides, so one of these flows meets it.
    """
    return min_vertex_cut(g)[0]


def _components_within(g: Graph, allowed: set[int]) -> list[set[int]]:
    seen: set[int] = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y in allowed and y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def _grouping(sizes: list[int], side_min: int) -> list[int] | None:
    """Indices of a component subset summing to >= side_min with the rest
    also >= side_min, or None."""
    total = sum(sizes)
    if total < 2 * side_min:
        return None
    reachable: dict[int, list[int]] = {0: []}
    for idx, s in enumerate(sizes):
        for have in list(reachable):
            new = have + s
            if new not in reachable and new <= total - side_min:
                reachable[new] = reachable[have] + [idx]
    for have, picks in sorted(reachable.items()):
        if have >= side_min:
            return picks
    return None


def essential_separation_violation(g: Graph) -> Separation | None:
    """A separation refuting essential 6-connectivity, if one exists.

    Looks for a separator of size 4 whose sides can be grouped with at
    least 3 vertices each, or size 5 with at least 4 each (smaller
    separators are excluded by the 4-connectivity check the caller
    performs).  Sides are groupings of connected components of G - S.
    """
    n = g.n
    vertices = set(range(n))
    for size, side_min in ((4, 3), (5, 4)):
        if n < size + 2 * side_min:
            continue
        for sep in combinations(range(n), size):
            comps = _components_within(g, vertices - set(sep))
            if len(comps) < 2:
                continue
            picks = _grouping([len(c) for c in comps], side_min)
            if picks is None:
                continue
            side_a: set[int] = set()
            for idx in picks:
                side_a |= comps[idx]
            side_b = vertices - set(sep) - side_a
            return Separation(
                separator=frozenset(sep),
                side_a=frozenset(side_a),
                side_b=frozenset(side_b),
            )
    return None


def is_essentially_6_connected(g: Graph) -> bool:
    """4-connected with no small separation having two large sides.

    Precisely: no separator of size <= 4 splitting off two groups of >= 3
    vertices, and none of size <= 5 splitting off two groups of >= 4.
    """
    return vertex_connectivity(g) >= 4 and essential_separation_violation(g) is None


# -- cyclic edge connectivity ------------------------------------------------

_EXHAUSTIVE_LIMIT = 20


def cyclic_edge_connectivity_at_least(g: Graph, k: int) -> bool:
    """True when every bipartition with a cycle inside both sides has at
    least k crossing edges (vacuously true if no such bipartition exists).

    Exhaustive over bipartitions up to n = 20; larger graphs contract
    pairs of vertex-disjoint chordless cycles and run edge max-flow.
    """
    if g.n <= _EXHAUSTIVE_LIMIT:
        return _cyclic_exhaustive(g, k)
    return _cyclic_flow(g, k)


def _side_has_cycle(g: Graph, mask: int) -> bool:
    # a side contains a cycle iff some component of its induced subgraph
    # has at least as many edges as vertices
    remaining = mask
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = [low.bit_length() - 1]
        seen = low
        while frontier:
            x = frontier.pop()
            for y in g.adj[x]:
                bit = 1 << y
                if mask & bit and not seen & bit:
                    seen |= bit
                    comp |= bit
                    frontier.append(y)
        size = bin(comp).count("1")
        edges = 0
        c = comp
        while c:
            b = c & -c
            v = b.bit_length() - 1
            edges += sum(1 for y in g.adj[v] if comp >> y & 1)
            c ^= b
        edges //= 2
        if edges >= size:
            return True
        remaining &= ~comp
    return False


def _cyclic_exhaustive(g: Graph, k: int) -> bool:
    n = g.n
    if n < 6:
        return True
    adj_mask = [0] * n
    for v in range(n):
        for y in g.adj[v]:
            adj_mask[v] |= 1 << y
    full = (1 << n) - 1
    # fix vertex 0 on one side; each unordered bipartition is seen once
    for half in range(1 << (n - 1)):
        side = (half << 1) | 1
        other = full ^ side
        if bin(side).count("1") < 3 or bin(other).count("1") < 3:
            continue
        crossing = 0
        s = side
        while s and crossing < k:
            b = s & -s
            crossing += bin(adj_mask[b.bit_length() - 1] & other).count("1")
            s ^= b
        if crossing >= k:
            continue
        if _side_has_cycle(g, side) and _side_has_cycle(g, other):
            return False
    return True


def _chordless_cycles(g: Graph, cap: int = 20000) -> list[frozenset[int]]:
    """All chordless cycles, as vertex sets (a chordless cycle is determined
    by its vertex set).  Raises when there are more than ``cap``, a safety
    valve for the flow-based route.

    Walks grow from each cycle's minimum vertex using only larger vertices.
    A new vertex adjacent to an interior walk vertex would be a chord of any
    cycle extending the walk; one adjacent to the start closes a cycle right
    there and cannot be walked past for the same reason.
    """
    cycles: set[frozenset[int]] = set()

    def extend(start: int, walk: list[int], members: set[int]) -> None:
        last = walk[-1]
        for nxt in g.adj[last]:
            if nxt <= start or nxt in members:
                continue
            if any(g.has_edge(nxt, w) for w in walk[1:-1]):
                continue
            if g.has_edge(nxt, start):
                cycles.add(frozenset(walk) | {nxt})
                if len(cycles) > cap:
                    raise RuntimeError(
                        f"more than {cap} chordless cycles; graph too "
                        "large for the cycle-contraction route"
                    )
                continue
            walk.append(nxt)
            members.add(nxt)
            extend(start, walk, members)
            members.remove(nxt)
            walk.pop()

    for start in range(g.n):
        for second in g.adj[start]:
            if second > start:
                extend(start, [start, second], {start, second})
    return sorted(cycles, key=sorted)


def _edge_maxflow_contracted(
    g: Graph, source_side: frozenset[int], sink_side: frozenset[int]
) -> int:
    """Minimum edge cut separating two contracted vertex sets."""
    ids: dict[int, int] = {}
    for v in source_side:
        ids[v] = 0
    for v in sink_side:
        ids[v] = 1
    nxt = 2
    for v in range(g.n):
        if v not in ids:
            ids[v] = nxt
            nxt += 1
    cap: list[dict[int, int]] = [dict() for _ in range(nxt)]
    for u, v in g.edges():
        a, b = ids[u], ids[v]
        if a == b:
            continue
        cap[a][b] = cap[a].get(b, 0) + 1
        cap[b][a] = cap[b].get(a, 0) + 1
    flow = 0
    while True:
        parent = {0: 0}
        queue = deque([0])
        while queue and 1 not in parent:
            x = queue.popleft()
            for y, c in cap[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if 1 not in parent:
            return flow
        bottleneck = min(
            _path_caps(cap, parent, 1)
        )
        y = 1
        while y != 0:
            x = parent[y]
            cap[x][y] -= bottleneck
            cap[y][x] = cap[y].get(x, 0) + bottleneck
            y = x
        flow += bottleneck


def _path_caps(cap, parent, sink):
    y = sink
    while y != 0:
        x = parent[y]
        yield cap[x][y]
        y = x


def _cyclic_flow(g: Graph, k: int) -> bool:
    cycles = _chordless_cycles(g)
    for i, c1 in enumerate(cycles):
        for c2 in cycles[i + 1:]:
            if c1 & c2:
                continue
            if _edge_maxflow_contracted(g, c1, c2) < k:
                return False
    return True
