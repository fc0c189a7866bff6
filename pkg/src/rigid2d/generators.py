"""Generators for the named graphs the classifiers and tests rely on."""

from __future__ import annotations

from .graph import Graph


def complete(n: int) -> Graph:
    _require(n >= 1, "complete(n) needs n >= 1")
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with part {0..a-1} joined to part {a..a+b-1}."""
    _require(a >= 1 and b >= 1, "complete_bipartite(a, b) needs a, b >= 1")
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle(n) needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    _require(n >= 1, "path(n) needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def prism() -> Graph:
    """Two triangles {0,1,2} and {3,4,5} joined by a perfect matching."""
    tri = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    return Graph(6, tri + [(i, i + 3) for i in range(3)])


def octahedron() -> Graph:
    """K_6 minus the perfect matching (0,3), (1,4), (2,5)."""
    skip = {(0, 3), (1, 4), (2, 5)}
    return Graph(
        6,
        (
            (i, j)
            for i in range(6)
            for j in range(i + 1, 6)
            if (i, j) not in skip
        ),
    )


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges)


_H_6_10_TOP = {
    0: (6, 8, 9, 10, 15),
    1: (7, 9, 10, 12, 13),
    2: (6, 8, 11, 12, 13),
    3: (6, 7, 10, 11, 14),
    4: (9, 11, 12, 14, 15),
    5: (7, 8, 13, 14, 15),
}


def h_6_10() -> Graph:
    """Bipartite 16-vertex graph with six degree-5 and ten degree-3 vertices.

    Any two degree-5 vertices share exactly two neighbours, any two
    degree-3 vertices share one or two; the automorphism group has
    order 60 and the diameter is 3.
    """
    return Graph(16, ((u, w) for u, nbrs in _H_6_10_TOP.items() for w in nbrs))


def jss_counterexample(k: int) -> Graph:
    """A k-regular graph on 2(k+1) vertices that is not rigid.

    Two disjoint copies of K_{k+1}, each with one edge deleted, joined by
    two independent edges pairing up the four degree-(k-1) endpoints
    (low end of the first copy to low end of the second).
    """
    _require(k >= 3, "jss_counterexample(k) needs k >= 3")
    size = k + 1
    edges = []
    for base in (0, size):
        edges.extend(
            (base + i, base + j)
            for i in range(size)
            for j in range(i + 1, size)
            if (i, j) != (0, 1)
        )
    edges += [(0, size), (1, size + 1)]
    return Graph(2 * size, edges)


_CATALOG = {
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "prism": (prism, 0),
    "octahedron": (octahedron, 0),
    "petersen": (petersen, 0),
    "h_6_10": (h_6_10, 0),
    "jss_counterexample": (jss_counterexample, 1),
}


def catalog_names() -> tuple[str, ...]:
    return tuple(sorted(_CATALOG))


def generate(name: str, *params: int) -> Graph:
    """Build a catalog graph by name, e.g. ``generate("cycle", 5)``."""
    try:
        func, arity = _CATALOG[name]
    except KeyError:
        raise ValueError(
            f"unknown graph name {name!r}; known: {', '.join(catalog_names())}"
        ) from None
    if len(params) != arity:
        raise ValueError(
            f"{name} takes {arity} parameter(s), got {len(params)}"
        )
    return func(*params)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)
