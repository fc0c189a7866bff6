"""Immutable simple-graph representation and basic metrics.

Vertices are always the dense integers ``0..n-1``; formats with other
labels are relabelled on ingestion.  Graph values never change after
construction, so they are safe to share between concurrent callers.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, NamedTuple, Sequence

from .errors import EdgeListError

INFINITY = math.inf


class EdgeId(NamedTuple):
    """Canonical key for an undirected edge: endpoints ordered ``u < v``."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "EdgeId":
        if a == b:
            raise ValueError(f"self-loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)

    def __str__(self) -> str:
        return f"{self.u}-{self.v}"


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adj`` holds one sorted neighbour tuple per vertex; ``m`` is the
    edge count.  Self-loops and duplicate edges are rejected at
    construction, so the symmetry and count invariants hold for every
    instance that exists.
    """

    __slots__ = ("n", "adj", "m", "_adjsets", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        neighbour_sets: list[set[int]] = [set() for _ in range(n)]
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a},{b}) out of range for n={n}")
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            neighbour_sets[a].add(b)
            neighbour_sets[b].add(a)
        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in neighbour_sets)
        self._adjsets = tuple(frozenset(s) for s in neighbour_sets)
        self.m = sum(len(s) for s in neighbour_sets) // 2
        self._hash = hash((n, self.adj))

    # -- basic queries -------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    @property
    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    @property
    def max_degree(self) -> int:
        return max(self.degrees()) if self.n else 0

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._adjsets[v]

    def has_edge(self, a: int, b: int) -> bool:
        return b in self._adjsets[a]

    def edges(self) -> tuple[EdgeId, ...]:
        return tuple(
            EdgeId(u, v) for u in range(self.n) for v in self.adj[u] if u < v
        )

    @property
    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    @property
    def is_regular(self) -> bool:
        return self.n == 0 or self.min_degree == self.max_degree

    # -- traversal -----------------------------------------------------

    def components(self) -> tuple[frozenset[int], ...]:
        """Connected components, ordered by smallest member."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            out.append(frozenset(comp))
        return tuple(out)

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def bipartition(self) -> tuple[frozenset[int], frozenset[int]] | None:
        """2-colouring ``(side of vertex 0, rest)``, or None if an odd cycle exists."""
        colour = [-1] * self.n
        for s in range(self.n):
            if colour[s] != -1:
                continue
            colour[s] = 0
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if colour[y] == -1:
                        colour[y] = 1 - colour[x]
                        queue.append(y)
                    elif colour[y] == colour[x]:
                        return None
        return (
            frozenset(v for v in range(self.n) if colour[v] == 0),
            frozenset(v for v in range(self.n) if colour[v] == 1),
        )

    # -- derived graphs ------------------------------------------------

    def delete_edge(self, a: int, b: int) -> "Graph":
        if not self.has_edge(a, b):
            raise ValueError(f"({a},{b}) is not an edge")
        gone = EdgeId.of(a, b)
        return Graph(self.n, (e for e in self.edges() if e != gone))

    def add_edge(self, a: int, b: int) -> "Graph":
        if self.has_edge(a, b):
            raise ValueError(f"({a},{b}) is already an edge")
        return Graph(self.n, list(self.edges()) + [(a, b)])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of 0..n-1")
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    # -- value semantics -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def distance_matrix(g: Graph) -> list[list[float]]:
    """All-pairs BFS distances, with ``math.inf`` for unreachable pairs."""
    out = []
    for s in range(g.n):
        dist: list[float] = [INFINITY] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if math.isinf(dist[y]):
                    dist[y] = dist[x] + 1
                    queue.append(y)
        out.append(dist)
    return out


def diameter(g: Graph) -> float:
    """Largest finite entry of the distance matrix (0 for n <= 1)."""
    best = 0
    for row in distance_matrix(g):
        for d in row:
            if not math.isinf(d) and d > best:
                best = d
    return best


def clique_number(g: Graph) -> int:
    """Exact size of the largest clique, by branch and bound.

    Candidates are greedily coloured at each search node and the colour
    count bounds the achievable clique size; exact and fast for the
    low-degree graphs the classifiers feed here.
    """
    if g.n == 0:
        return 0
    adjs = g._adjsets
    best = 1

    def expand(cand: frozenset[int], size: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        colour_of: dict[int, int] = {}
        colour_classes: list[set[int]] = []
        for v in sorted(cand):
            for ci, cls in enumerate(colour_classes):
                if not (adjs[v] & cls):
                    cls.add(v)
                    colour_of[v] = ci
                    break
            else:
                colour_classes.append({v})
                colour_of[v] = len(colour_classes) - 1
        if size + len(colour_classes) <= best:
            return
        remaining = cand
        for v in sorted(cand, key=lambda x: colour_of[x], reverse=True):
            if size + colour_of[v] + 1 <= best:
                return
            expand(remaining & adjs[v], size + 1)
            remaining = remaining - {v}

    expand(frozenset(range(g.n)), 0)
    return best


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format: ``n m`` then one ``u v`` per line."""
    lines = text.splitlines()
    header_no = None
    n = m = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines, 1):
        s = raw.strip()
        if not s:
            continue
        parts = s.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected two integers, got {s!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"expected two integers, got {s!r}", lineno) from None
        if header_no is None:
            header_no = lineno
            n, m = a, b
            if n < 0 or m < 0:
                raise EdgeListError("negative counts in header", lineno)
            continue
        if len(edges) >= m:
            raise EdgeListError(f"more than the declared {m} edges", lineno)
        try:
            edges.append((a, b))
            Graph(n, edges[-1:])
        except ValueError as exc:
            raise EdgeListError(str(exc), lineno) from None
    if header_no is None:
        raise EdgeListError("empty input, expected 'n m' header", 1)
    if len(edges) != m:
        raise EdgeListError(
            f"declared {m} edges but found {len(edges)}", len(lines)
        )
    g = Graph(n, edges)
    if g.m != m:
        raise EdgeListError("duplicate edges in input", len(lines))
    return g


def format_edge_list(g: Graph) -> str:
    """Serialise to the plain edge-list format (stable, sorted edge order)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
