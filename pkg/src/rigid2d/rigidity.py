"""The (2,3)-sparsity pebble game and the rigidity operations built on it.

A graph is rigid in the plane exactly when it contains a spanning
subgraph with 2n-3 edges in which every vertex subset X (|X| >= 2)
spans at most 2|X|-3 edges.  The pebble game decides this greedily:
every vertex starts with two pebbles, inserting an edge costs one
pebble, and an edge may be inserted only while four pebbles sit on its
endpoints.  Pebbles are fetched along the orientation of previously
accepted edges, reversing the path walked.  The accepted set is a
maximum sparse subgraph, so its size is the rank of the graph in the
rigidity matroid.

All public functions take an immutable Graph and are pure; the mutable
PebbleState is confined to one call unless explicitly returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import EdgeId, Graph


class PebbleState:
    """Orientation of the accepted edges plus per-vertex pebble counts.

    Invariants: ``pebbles[v] + outdegree(v) == 2`` for every vertex and
    ``sum(pebbles) == 2n - len(accepted)``.
    """

    def __init__(self, n: int):
        self.n = n
        self.pebbles = [2] * n
        self.accepted: list[EdgeId] = []
        self._out: list[set[int]] = [set() for _ in range(n)]

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self._out[v]))

    def check_invariants(self) -> None:
        for v in range(self.n):
            if self.pebbles[v] + len(self._out[v]) != 2:
                raise RuntimeError(
                    f"pebble accounting broken at vertex {v}: "
                    f"{self.pebbles[v]} pebbles, outdegree {len(self._out[v])}"
                )
        if sum(self.pebbles) != 2 * self.n - len(self.accepted):
            raise RuntimeError("total pebble count inconsistent")

    # -- pebble search ---------------------------------------------------

    def _path_to_pebble(self, root: int, banned: frozenset[int]) -> list[int] | None:
        """DFS along the orientation for a pebbled vertex outside ``banned``.

        Lowest-numbered out-neighbours are explored first; returns the
        tree path ``root..w`` or None.
        """
        parent: dict[int, int | None] = {root: None}
        stack = [root]
        while stack:
            x = stack.pop()
            if x != root and x not in banned and self.pebbles[x] > 0:
                walk = [x]
                while parent[walk[-1]] is not None:
                    walk.append(parent[walk[-1]])
                walk.reverse()
                return walk
            for y in sorted(self._out[x], reverse=True):
                if y not in parent:
                    parent[y] = x
                    stack.append(y)
        return None

    def _pull_pebble(self, walk: list[int]) -> None:
        for a, b in zip(walk, walk[1:]):
            self._out[a].remove(b)
            self._out[b].add(a)
        self.pebbles[walk[-1]] -= 1
        self.pebbles[walk[0]] += 1

    def gather(self, u: int, v: int, target: int = 4) -> int:
        """Pull pebbles onto u and v until ``target`` sit there or none are
        reachable; returns the final count on {u, v}."""
        banned = frozenset((u, v))
        while self.pebbles[u] + self.pebbles[v] < target:
            walk = self._path_to_pebble(u, banned)
            if walk is None:
                walk = self._path_to_pebble(v, banned)
            if walk is None:
                break
            self._pull_pebble(walk)
        return self.pebbles[u] + self.pebbles[v]

    def try_insert(self, a: int, b: int) -> bool:
        """Accept edge (a, b) when four pebbles can be gathered on it."""
        if self.gather(a, b) < 4:
            return False
        self.pebbles[a] -= 1
        self._out[a].add(b)
        self.accepted.append(EdgeId.of(a, b))
        return True

    def reach(self, seeds: Iterable[int]) -> set[int]:
        """Vertices reachable from ``seeds`` along the orientation."""
        seen = set(seeds)
        stack = list(seen)
        while stack:
            x = stack.pop()
            for y in self._out[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def blocking_set(self, a: int, b: int) -> frozenset[int]:
        """After a failed gather for (a, b): the inclusion-minimal vertex set
        containing both endpoints that spans 2|X|-3 accepted edges.  This is
        the vertex support of the fundamental circuit of the edge."""
        return frozenset(self.reach((a, b)))

    def spanned_component(self, a: int, b: int) -> frozenset[int]:
        """The maximal vertex set containing edge (a, b) that spans exactly
        2|X|-3 accepted edges.

        Valid once the game is complete for the edge's graph.  Gathering
        stalls at three pebbles for any edge of the graph; the component is
        then every vertex whose pebble access is confined to the blocked
        region, i.e. the complement of the set of vertices that can reach a
        free pebble outside it.
        """
        total = self.gather(a, b)
        if total >= 4:
            raise RuntimeError(
                f"({a},{b}) spans no critical set; was the full game played?"
            )
        inside = self.reach((a, b))
        holders = [
            w for w in range(self.n) if w not in inside and self.pebbles[w] > 0
        ]
        into: list[list[int]] = [[] for _ in range(self.n)]
        for x in range(self.n):
            for y in self._out[x]:
                into[y].append(x)
        can_escape = set(holders)
        stack = list(holders)
        while stack:
            x = stack.pop()
            for y in into[x]:
                if y not in can_escape:
                    can_escape.add(y)
                    stack.append(y)
        return frozenset(x for x in range(self.n) if x not in can_escape)


@dataclass(frozen=True)
class RigidDecomposition:
    """Maximal rigid vertex sets plus the matroid rank certificate.

    Every component has at least two vertices, two components share at
    most one vertex, every edge lies inside exactly one component, and
    ``rank == sum(2|X| - 3)`` over the components.
    """

    components: tuple[frozenset[int], ...]
    rank: int


def _run_game(g: Graph, order: Sequence[EdgeId] | None = None) -> PebbleState:
    state = PebbleState(g.n)
    edges = g.edges() if order is None else tuple(order)
    if order is not None:
        if sorted(edges) != sorted(g.edges()):
            raise ValueError("order must be a permutation of the graph's edges")
    for e in edges:
        state.try_insert(e.u, e.v)
    return state


def max_sparse_subgraph(
    g: Graph, order: Sequence[EdgeId] | None = None
) -> tuple[tuple[EdgeId, ...], PebbleState]:
    """A maximum (2,3)-sparse subgraph of g and the final game state.

    The accepted edge set depends on the insertion order, but its size
    (the rigidity-matroid rank of g) does not.  The default order is the
    sorted edge list, making the certificate reproducible.
    """
    state = _run_game(g, order)
    return tuple(state.accepted), state


def rank(g: Graph) -> int:
    """Rank of g in the 2-dimensional generic rigidity matroid."""
    return len(_run_game(g).accepted)


def is_rigid(g: Graph) -> bool:
    """True when g has a spanning subgraph with 2n-3 edges that is
    (2,3)-sparse.  Graphs on at most one vertex are rigid by convention."""
    return g.n <= 1 or rank(g) == 2 * g.n - 3


def rigid_components(g: Graph) -> RigidDecomposition:
    """The maximal rigid vertex sets of g, each spanning 2|X|-3 independent
    edges, together with the rank they certify."""
    if g.m < 1:
        raise ValueError("rigid_components needs at least one edge")
    accepted, state = max_sparse_subgraph(g)
    found: list[frozenset[int]] = []
    for e in g.edges():
        if any(e.u in comp and e.v in comp for comp in found):
            continue
        found.append(state.spanned_component(e.u, e.v))
    # Maximal critical sets meet in at most one vertex, so merging
    # >=2-overlaps only dedupes; kept as a safety net.
    merged: list[set[int]] = []
    for comp in found:
        acc = set(comp)
        rest = []
        for other in merged:
            if len(acc & other) >= 2:
                acc |= other
            else:
                rest.append(other)
        rest.append(acc)
        merged = rest
    components = tuple(
        sorted((frozenset(c) for c in merged), key=lambda c: (min(c), sorted(c)))
    )
    return RigidDecomposition(components=components, rank=len(accepted))


def edge_in_circuit(g: Graph, e: EdgeId | tuple[int, int]) -> bool:
    """True when e lies in a (2,3)-circuit of g, i.e. deleting it does not
    change the rank."""
    eid = EdgeId.of(*e)
    if not g.has_edge(eid.u, eid.v):
        raise ValueError(f"{eid} is not an edge")
    return rank(g) == rank(g.delete_edge(eid.u, eid.v))


def is_redundantly_rigid(g: Graph) -> bool:
    """True when g is rigid and stays rigid after deleting any single edge.

    Recomputes the pebble game per edge: O(|E| * n^2), ample for the
    graph sizes this package targets.
    """
    if g.n <= 1:
        return True
    full = 2 * g.n - 3
    if rank(g) != full:
        return False
    return all(
        rank(g.delete_edge(e.u, e.v)) == full for e in g.edges()
    )


def find_circuit(g: Graph) -> frozenset[EdgeId] | None:
    """The fundamental circuit of the first rejected edge, or None when g is
    (2,3)-sparse.

    The returned edge set H satisfies |E(H)| = 2|V(H)| - 2 and H - f is
    (2,3)-tight for every f in H.
    """
    state = PebbleState(g.n)
    for e in g.edges():
        if not state.try_insert(e.u, e.v):
            support = state.blocking_set(e.u, e.v)
            circuit = {e}
            circuit.update(
                f for f in state.accepted if f.u in support and f.v in support
            )
            return frozenset(circuit)
    return None
