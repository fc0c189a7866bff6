from __future__ import annotations

import pytest

from rigid2d import Graph, enumerate_connected, generate


@pytest.fixture(scope="session")
def named() -> dict[str, Graph]:
    graphs = {
        "k1": generate("complete", 1),
        "k2": generate("complete", 2),
        "k4": generate("complete", 4),
        "k5": generate("complete", 5),
        "k7": generate("complete", 7),
        "k33": generate("complete_bipartite", 3, 3),
        "k34": generate("complete_bipartite", 3, 4),
        "k35": generate("complete_bipartite", 3, 5),
        "star5": generate("complete_bipartite", 1, 5),
        "path5": generate("path", 5),
        "prism": generate("prism"),
        "octahedron": generate("octahedron"),
        "petersen": generate("petersen"),
        "h": generate("h_6_10"),
    }
    for n in range(4, 11):
        graphs[f"c{n}"] = generate("cycle", n)
    for k in range(3, 9):
        graphs[f"jss{k}"] = generate("jss_counterexample", k)
    return graphs


@pytest.fixture(scope="session")
def census_upto_7() -> list[Graph]:
    out: list[Graph] = []
    for n in range(1, 8):
        out.extend(enumerate_connected(n))
    return out


@pytest.fixture(scope="session")
def census_upto_6() -> list[Graph]:
    out: list[Graph] = []
    for n in range(1, 7):
        out.extend(enumerate_connected(n))
    return out
