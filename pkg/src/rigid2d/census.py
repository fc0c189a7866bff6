"""Exhaustive small-graph enumeration and the theorem-parity runner.

Enumeration attaches a new vertex to every isomorphism class on n-1
vertices with every possible neighbourhood and dedupes by canonical
form, so each class on n vertices is produced exactly once.  Built-in
enumeration stops at n = 7; larger censuses ingest externally produced
graph6 corpora (one line per graph).

The parity runner computes, for every graph where a symmetry predicate
holds, both the family fast-path verdict and the general verdict;
records are independent, so callers may process them in any order, and
summaries are merged deterministically (mismatches sorted by graph6
key).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from . import classify, symmetry
from .errors import CorpusError, Graph6Error
from .graph import Graph
from .graph6 import from_graph6, to_graph6

MAX_BUILTIN_N = 7

#: Published counts of isomorphism classes on n = 1.. vertices.
ALL_GRAPH_COUNTS = (1, 2, 4, 11, 34, 156, 1044)
CONNECTED_GRAPH_COUNTS = (1, 1, 2, 6, 21, 112, 853)


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class on n vertices."""
    if n == 1:
        return (Graph(1),)
    out: dict[tuple[int, int], Graph] = {}
    for h in _all_graphs(n - 1):
        base = list(h.edges())
        for bits in range(1 << (n - 1)):
            extra = [(w, n - 1) for w in range(n - 1) if bits >> w & 1]
            g = Graph(n, base + extra)
            key = symmetry.canonical_key(g)
            if key not in out:
                out[key] = symmetry.canonical_form(g)
    return tuple(sorted(out.values(), key=to_graph6))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Exactly one representative per isomorphism class of connected graphs
    on n vertices, in a fixed order.  Built-in range is 1 <= n <= 7; larger
    censuses are ingested from external graph6 corpora."""
    if not 1 <= n <= MAX_BUILTIN_N:
        raise ValueError(
            f"built-in enumeration supports 1 <= n <= {MAX_BUILTIN_N}, got {n}"
        )
    return (g for g in _all_graphs(n) if g.is_connected())


def ingest_graph6_stream(
    lines: Iterable[str],
    strict: bool = True,
    on_error: Callable[[int, Graph6Error], None] | None = None,
) -> Iterator[Graph]:
    """Parse one graph6 value per line, skipping blank lines.

    Malformed lines raise :class:`CorpusError` citing the line number in
    strict mode; otherwise they are skipped after invoking ``on_error``
    (when given) with the line number and the parse error.
    """
    for lineno, raw in enumerate(lines, 1):
        s = raw.strip()
        if not s:
            continue
        try:
            g = from_graph6(s)
        except Graph6Error as exc:
            if strict:
                raise CorpusError(str(exc), lineno) from exc
            if on_error is not None:
                on_error(lineno, exc)
            continue
        yield g


@dataclass(frozen=True)
class CensusRecord:
    """One census row: symmetry flags, both verdicts, and their agreement.

    ``gr_fastpath`` and ``agree`` are None when no family predicate
    holds.  When several predicates hold they must produce the same
    verdict; ``agree`` is True only if every applicable fast path
    matches the general decision.
    """

    graph6: str
    n: int
    m: int
    min_degree: int
    max_degree: int
    vertex_transitive: bool
    edge_transitive: bool
    distance_regular: bool
    rigid: bool
    redundantly_rigid: bool
    three_connected: bool
    gr_general: bool
    gr_fastpath: bool | None
    agree: bool | None
    family_verdicts: tuple[tuple[str, bool], ...]


TSV_COLUMNS = (
    "graph6",
    "n",
    "m",
    "delta",
    "Delta",
    "vt",
    "et",
    "dr",
    "rigid",
    "redundant",
    "3conn",
    "gr_general",
    "gr_fastpath",
    "agree",
)


def census_record(g: Graph) -> CensusRecord:
    """Evaluate one graph: flags, the general verdict, and every applicable
    family fast path."""
    general = classify.decide_global_rigidity(g)
    connected = g.is_connected()
    vt = symmetry.is_vertex_transitive(g)
    et = symmetry.is_edge_transitive(g)
    dr = connected and symmetry.is_distance_regular(g) is not None
    verdicts: list[tuple[str, bool]] = []
    if connected:
        if vt:
            verdicts.append(
                (classify.ROUTE_VERTEX_TRANSITIVE,
                 classify.classify_vertex_transitive(g).globally_rigid)
            )
        if et:
            verdicts.append(
                (classify.ROUTE_EDGE_TRANSITIVE,
                 classify.classify_edge_transitive(g).globally_rigid)
            )
        if dr:
            verdicts.append(
                (classify.ROUTE_DISTANCE_REGULAR,
                 classify.classify_distance_regular(g).globally_rigid)
            )
    fastpath = verdicts[0][1] if verdicts else None
    agree = (
        all(v == general.globally_rigid for _, v in verdicts)
        if verdicts
        else None
    )
    return CensusRecord(
        graph6=to_graph6(g),
        n=g.n,
        m=g.m,
        min_degree=g.min_degree,
        max_degree=g.max_degree,
        vertex_transitive=vt,
        edge_transitive=et,
        distance_regular=dr,
        rigid=general.rigid,
        redundantly_rigid=general.redundantly_rigid,
        three_connected=general.three_connected,
        gr_general=general.globally_rigid,
        gr_fastpath=fastpath,
        agree=agree,
        family_verdicts=tuple(verdicts),
    )


def record_to_tsv(rec: CensusRecord) -> str:
    def fmt(value: bool | int | str | None) -> str:
        if value is None:
            return ""
        if isinstance(value, bool):
            return "true" if value else "false"
        return str(value)

    return "\t".join(
        fmt(v)
        for v in (
            rec.graph6,
            rec.n,
            rec.m,
            rec.min_degree,
            rec.max_degree,
            rec.vertex_transitive,
            rec.edge_transitive,
            rec.distance_regular,
            rec.rigid,
            rec.redundantly_rigid,
            rec.three_connected,
            rec.gr_general,
            rec.gr_fastpath,
            rec.agree,
        )
    )


@dataclass(frozen=True)
class ParitySummary:
    """Aggregate of a parity run; mismatches are (graph6, family, fastpath,
    general) tuples sorted by graph6 key then family."""

    total: int
    vertex_transitive: int
    edge_transitive: int
    distance_regular: int
    globally_rigid: int
    mismatches: tuple[tuple[str, str, bool, bool], ...]

    @classmethod
    def collect(cls, records: Iterable[CensusRecord]) -> "ParitySummary":
        total = vt = et = dr = gr = 0
        mismatches = []
        for rec in records:
            total += 1
            vt += rec.vertex_transitive
            et += rec.edge_transitive
            dr += rec.distance_regular
            gr += rec.gr_general
            for family, verdict in rec.family_verdicts:
                if verdict != rec.gr_general:
                    mismatches.append(
                        (rec.graph6, family, verdict, rec.gr_general)
                    )
        return cls(
            total=total,
            vertex_transitive=vt,
            edge_transitive=et,
            distance_regular=dr,
            globally_rigid=gr,
            mismatches=tuple(sorted(mismatches)),
        )


def parity_records(graphs: Iterable[Graph]) -> Iterator[CensusRecord]:
    """Census records in input order (records are mutually independent)."""
    for g in graphs:
        yield census_record(g)


def run_parity(
    graphs: Iterable[Graph],
) -> tuple[list[CensusRecord], ParitySummary]:
    records = list(parity_records(graphs))
    return records, ParitySummary.collect(records)
