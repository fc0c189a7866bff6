"""Global-rigidity classifiers: the general decision and the family fast paths.

The general route decides global rigidity as "complete, or 3-connected
and redundantly rigid".  The fast paths decide it from degrees (plus
clique size and vertex count for vertex-transitive graphs) and verify
their symmetry precondition themselves rather than trusting the caller.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import connectivity, generators, rigidity, symmetry
from .errors import PreconditionError
from .graph import EdgeId, Graph, clique_number
from .graph6 import to_graph6

ROUTE_GENERAL = "general"
ROUTE_VERTEX_TRANSITIVE = "vertex-transitive"
ROUTE_EDGE_TRANSITIVE = "edge-transitive"
ROUTE_DISTANCE_REGULAR = "distance-regular"


@dataclass(frozen=True)
class ClassificationReport:
    """Rigidity verdicts plus the route that produced the global one.

    ``globally_rigid`` always implies ``rigid``.  For the general route
    it equals ``complete or (three_connected and redundantly_rigid)``;
    for a family route it comes from the family's degree rule while the
    remaining flags are still computed by the general machinery.
    """

    graph6: str
    n: int
    m: int
    min_degree: int
    max_degree: int
    rigid: bool
    redundantly_rigid: bool
    three_connected: bool
    globally_rigid: bool
    route: str
    matched_graph: str | None = None
    clique: int | None = None
    separator: tuple[int, ...] | None = None
    non_redundant_edge: EdgeId | None = None
    note: str | None = None


def _general_flags(g: Graph) -> dict:
    """The shared flag block: rigid/redundant/3-connected plus witnesses."""
    rigid = rigidity.is_rigid(g)
    redundant = rigidity.is_redundantly_rigid(g)
    kappa, cut = connectivity.min_vertex_cut(g)
    three = kappa >= 3
    fields = dict(
        graph6=to_graph6(g) if g.n else "",
        n=g.n,
        m=g.m,
        min_degree=g.min_degree,
        max_degree=g.max_degree,
        rigid=rigid,
        redundantly_rigid=redundant,
        three_connected=three,
    )
    if not three and cut is not None:
        fields["separator"] = tuple(sorted(cut))
    if rigid and not redundant:
        full = 2 * g.n - 3
        for e in g.edges():
            if rigidity.rank(g.delete_edge(e.u, e.v)) < full:
                fields["non_redundant_edge"] = e
                break
    return fields


def decide_global_rigidity(g: Graph) -> ClassificationReport:
    """The general decision: globally rigid iff complete, or 3-connected and
    redundantly rigid.  Graphs on at most one vertex are globally rigid;
    disconnected graphs with two or more vertices are not."""
    fields = _general_flags(g)
    if g.n >= 2 and not g.is_connected():
        return ClassificationReport(
            route=ROUTE_GENERAL,
            globally_rigid=False,
            note="disconnected: components can be translated independently",
            **fields,
        )
    globally = g.is_complete or (
        fields["three_connected"] and fields["redundantly_rigid"]
    )
    return ClassificationReport(
        route=ROUTE_GENERAL, globally_rigid=globally, **fields
    )


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise PreconditionError("graph must be connected")


def classify_vertex_transitive(g: Graph) -> ClassificationReport:
    """Degree/clique/size rule for connected vertex-transitive graphs:
    globally rigid iff k >= 6; or k = 5 and (clique <= 4 or n <= 28);
    or k = 4 and (clique <= 3 or n <= 11); or complete."""
    _require_connected(g)
    if not symmetry.is_vertex_transitive(g):
        raise PreconditionError("graph is not vertex-transitive")
    k = g.min_degree
    clique = clique_number(g)
    if g.is_complete or k >= 6:
        globally = True
    elif k == 5:
        globally = clique <= 4 or g.n <= 28
    elif k == 4:
        globally = clique <= 3 or g.n <= 11
    else:
        globally = False
    return ClassificationReport(
        route=ROUTE_VERTEX_TRANSITIVE,
        globally_rigid=globally,
        clique=clique,
        **_general_flags(g),
    )


_SPECIAL_EDGE_TRANSITIVE = (
    ("complete_bipartite(3,4)", lambda: generators.complete_bipartite(3, 4)),
    ("complete_bipartite(3,5)", lambda: generators.complete_bipartite(3, 5)),
    ("h_6_10", generators.h_6_10),
)


def _matched_special(g: Graph) -> str | None:
    for name, build in _SPECIAL_EDGE_TRANSITIVE:
        fixture = build()
        if g.n == fixture.n and g.m == fixture.m and symmetry.is_isomorphic(g, fixture):
            return name
    return None


def classify_edge_transitive(g: Graph) -> ClassificationReport:
    """Degree rule for connected edge-transitive graphs: globally rigid iff
    min degree >= 4; or min degree 3 with max degree >= 6; or the graph is
    complete or one of the three exceptional bipartite graphs."""
    _require_connected(g)
    if not symmetry.is_edge_transitive(g):
        raise PreconditionError("graph is not edge-transitive")
    lo, hi = g.min_degree, g.max_degree
    matched = None
    if lo >= 4 or (lo == 3 and hi >= 6) or g.is_complete:
        globally = True
    else:
        matched = _matched_special(g)
        globally = matched is not None
    return ClassificationReport(
        route=ROUTE_EDGE_TRANSITIVE,
        globally_rigid=globally,
        matched_graph=matched,
        **_general_flags(g),
    )


def classify_distance_regular(g: Graph) -> ClassificationReport:
    """Degree rule for connected distance-regular graphs: globally rigid iff
    the degree is at least 4 or the graph is complete."""
    _require_connected(g)
    if symmetry.is_distance_regular(g) is None:
        raise PreconditionError("graph is not distance-regular")
    globally = g.min_degree >= 4 or g.is_complete
    return ClassificationReport(
        route=ROUTE_DISTANCE_REGULAR,
        globally_rigid=globally,
        **_general_flags(g),
    )


# -- taxonomy of rigid but not globally rigid graphs -------------------------


@dataclass(frozen=True)
class NonGlobalStatus:
    """Rigid-or-flexible verdict for a graph that is not globally rigid,
    with the family case that explains it when a family predicate holds."""

    rigid: bool
    families: tuple[str, ...]
    matched_graph: str | None
    corollary_case: str | None


_TIGHT_CUBIC = (
    ("complete_bipartite(3,3)", lambda: generators.complete_bipartite(3, 3)),
    ("prism", generators.prism),
)


def rigid_not_globally_rigid_status(g: Graph) -> NonGlobalStatus:
    """Classify a connected, not globally rigid graph as rigid or flexible.

    For the vertex-transitive family a rigid graph must sit in one of two
    clique/size windows or be one of the two tight cubic graphs; for the
    edge-transitive and distance-regular families the tight cubic pair is
    the only possibility.
    """
    _require_connected(g)
    general = decide_global_rigidity(g)
    if general.globally_rigid:
        raise PreconditionError("graph is globally rigid")
    families = []
    if symmetry.is_vertex_transitive(g):
        families.append(ROUTE_VERTEX_TRANSITIVE)
    if symmetry.is_edge_transitive(g):
        families.append(ROUTE_EDGE_TRANSITIVE)
    if symmetry.is_distance_regular(g) is not None:
        families.append(ROUTE_DISTANCE_REGULAR)
    matched = None
    for name, build in _TIGHT_CUBIC:
        fixture = build()
        if g.n == fixture.n and g.m == fixture.m and symmetry.is_isomorphic(g, fixture):
            matched = name
            break
    case = None
    if general.rigid and families:
        k = g.min_degree
        if matched is not None:
            case = "tight cubic pair"
        elif ROUTE_VERTEX_TRANSITIVE in families:
            clique = clique_number(g)
            if k == 5 and clique >= 5 and 30 <= g.n <= 38:
                case = "k=5 with a 5-clique and 30<=n<=38"
            elif k == 4 and clique >= 4 and 12 <= g.n <= 15:
                case = "k=4 with a 4-clique and 12<=n<=15"
    return NonGlobalStatus(
        rigid=general.rigid,
        families=tuple(families),
        matched_graph=matched,
        corollary_case=case,
    )


# -- edge-count lemma ---------------------------------------------------------


@dataclass(frozen=True)
class CountLemmaReport:
    """Edge count versus the 2n-3 bound for an edge-transitive, not
    vertex-transitive graph, plus the exact integer identity residue.

    For min degree 3 the edge count satisfies
    ``6*(|E| - 2|V|) == (2*max_degree - 12) * |max-degree part|``
    and ``residue`` is the difference of the two sides (zero when the
    identity holds); for other degrees it is None.
    """

    edges: int
    bound: int
    residue: int | None
    min_degree: int
    max_degree: int
    part_sizes: tuple[int, int]


def count_lemma_check(g: Graph) -> CountLemmaReport:
    """Evaluate |E| against 2|V|-3 and, for min degree 3, the exact
    integer identity relating the surplus to the max-degree part size."""
    parts = symmetry.degree_bipartition(g)  # validates the preconditions
    if parts is None:
        raise RuntimeError(
            "edge-transitive, not vertex-transitive graph without the "
            "degree bipartition; this contradicts their classification"
        )
    part_lo, part_hi = parts
    residue = None
    if g.min_degree == 3:
        residue = 6 * (g.m - 2 * g.n) - (2 * g.max_degree - 12) * len(part_hi)
    return CountLemmaReport(
        edges=g.m,
        bound=2 * g.n - 3,
        residue=residue,
        min_degree=g.min_degree,
        max_degree=g.max_degree,
        part_sizes=(len(part_lo), len(part_hi)),
    )
