"""Planarity predicate and Kuratowski-obstruction extraction.

The boolean test is backed by networkx's left-right planarity check. The
obstruction is an edge-minimal nonplanar subgraph found by a deletion loop;
an edge-minimal nonplanar graph is exactly a subdivision of K5 or K3,3, and
that structure is verified before the obstruction is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .graph import Graph


def _to_nx(g: Graph) -> nx.Graph:
    ng = nx.Graph()
    ng.add_nodes_from(range(g.n))
    ng.add_edges_from(g.edges)
    return ng


def is_planar(g: Graph) -> bool:
    ok, _ = nx.check_planarity(_to_nx(g))
    return ok


def minimal_nonplanar_edges(ng: nx.Graph) -> list[tuple]:
    """Edge-minimal nonplanar subgraph of a nonplanar networkx graph.

    Deletes edges in sorted order, keeping a deletion whenever the rest
    stays nonplanar. Deterministic for a fixed edge set.
    """
    work = ng.copy()
    for e in sorted(work.edges()):
        work.remove_edge(*e)
        ok, _ = nx.check_planarity(work)
        if ok:
            work.add_edge(*e)
    return [tuple(sorted(e)) for e in work.edges()]


def _suppress_degree_two(n_vertices: int, edges: list[tuple[int, int]]) -> Graph:
    """Contract away internal degree-2 vertices of a subdivision."""
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    branch = sorted(v for v, row in adj.items() if len(row) != 2)
    idx = {v: i for i, v in enumerate(branch)}
    out: list[tuple[int, int]] = []
    seen_half: set[tuple[int, int]] = set()
    for s in branch:
        for first in adj[s]:
            if (s, first) in seen_half:
                continue
            prev, cur = s, first
            while cur not in idx:
                a, b = adj[cur]
                prev, cur = cur, (b if a == prev else a)
            seen_half.add((s, first))
            seen_half.add((cur, prev))
            a, b = idx[s], idx[cur]
            out.append((a, b) if a < b else (b, a))
    return Graph(len(branch), tuple(sorted(out)))


@dataclass(frozen=True)
class Obstruction:
    kind: str                                  # "K5-subdivision" | "K33-subdivision"
    edges: tuple[tuple[int, int], ...]         # edges of the subdivision in the host


def kuratowski(g: Graph) -> Obstruction:
    """Extract a verified K5/K3,3 subdivision from a nonplanar graph."""
    ng = _to_nx(g)
    ok, _ = nx.check_planarity(ng)
    if ok:
        raise ValueError("kuratowski() called on a planar graph")
    edges = sorted(minimal_nonplanar_edges(ng))
    core = _suppress_degree_two(g.n, edges)
    if core.n == 5 and core.m == 10 and all(core.degree(v) == 4 for v in range(5)):
        kind = "K5-subdivision"
    elif core.n == 6 and core.m == 9 and all(core.degree(v) == 3 for v in range(6)):
        kind = "K33-subdivision"
    else:
        raise AssertionError(
            f"obstruction is not a Kuratowski subdivision (core n={core.n}, m={core.m})"
        )
    return Obstruction(kind, tuple(edges))
