"""Combinatorial drawing witnesses.

A CrossingPlan records which edge pairs cross and, for each edge, the order
of its crossings from the smaller endpoint to the larger one. Planarizing a
plan replaces each crossing with a degree-4 dummy vertex; if the result is
planar, a drawing with at most those crossings per edge exists (a dummy
whose rotation degenerates into a touching only removes crossings).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .graph import Graph

Edge = tuple[int, int]


def canon_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class CrossingPlan:
    """crossings[i] is an unordered pair of distinct edges (stored sorted);
    orders maps every edge that appears in some crossing to the sequence of
    crossing ids along it, oriented from its smaller endpoint.

    The same edge pair may appear as several crossings (edges crossing more
    than once); an edge never crosses itself.
    """

    crossings: tuple[tuple[Edge, Edge], ...]
    orders: Mapping[Edge, tuple[int, ...]] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.crossings)


EMPTY_PLAN = CrossingPlan((), {})


def make_plan(crossings: list[tuple[Edge, Edge]], orders: Mapping[Edge, list[int]] | None = None) -> CrossingPlan:
    """Build a plan; when orders are omitted each edge must cross at most
    once and the trivial one-element orders are filled in.
    """
    canon = tuple(
        tuple(sorted((canon_edge(*e), canon_edge(*f))))  # type: ignore[arg-type]
        for e, f in crossings
    )
    if orders is None:
        per_edge: dict[Edge, list[int]] = {}
        for i, (e, f) in enumerate(canon):
            per_edge.setdefault(e, []).append(i)
            per_edge.setdefault(f, []).append(i)
        for e, ids in per_edge.items():
            if len(ids) > 1:
                raise ValueError(
                    f"edge {e} crosses {len(ids)} times; explicit orders required"
                )
        return CrossingPlan(canon, {e: tuple(ids) for e, ids in per_edge.items()})
    return CrossingPlan(canon, {canon_edge(*e): tuple(ids) for e, ids in orders.items()})


def canonicalize(plan: CrossingPlan) -> CrossingPlan:
    """Bit-exact canonical form: crossings sorted lexicographically, orders
    re-indexed accordingly.
    """
    perm = sorted(range(plan.size), key=lambda i: plan.crossings[i])
    new_of_old = {old: new for new, old in enumerate(perm)}
    crossings = tuple(plan.crossings[i] for i in perm)
    orders = {
        e: tuple(new_of_old[i] for i in ids) for e, ids in sorted(plan.orders.items())
    }
    return CrossingPlan(crossings, orders)


def validate_plan(g: Graph, plan: CrossingPlan) -> None:
    """Raise ValueError describing the first well-formedness violation."""
    expected: dict[Edge, list[int]] = {}
    for i, pair in enumerate(plan.crossings):
        if len(pair) != 2:
            raise ValueError(f"crossing {i} is not an edge pair")
        e, f = pair
        if e == f:
            raise ValueError(f"crossing {i} pairs edge {e} with itself")
        for edge in (e, f):
            if edge not in g.edge_set:
                raise ValueError(f"crossing {i} references unknown edge {edge}")
            expected.setdefault(edge, []).append(i)
    for edge, ids in expected.items():
        order = plan.orders.get(edge)
        if order is None:
            raise ValueError(f"edge {edge} has crossings but no order")
        if sorted(order) != sorted(ids):
            raise ValueError(
                f"order for edge {edge} is {order}, expected a permutation of {ids}"
            )
    for edge in plan.orders:
        if edge not in expected:
            raise ValueError(f"order given for uncrossed edge {edge}")


def planarize(g: Graph, plan: CrossingPlan) -> Graph:
    """Replace each crossing with a degree-4 dummy splitting its two edges
    at the recorded positions. Dummy ids start at g.n, one per crossing id.

    A crossing of two adjacent edges can produce a parallel segment pair at
    the shared endpoint; such duplicates are split by an extra degree-2
    vertex, which does not affect planarity.
    """
    validate_plan(g, plan)
    segments: list[tuple[int, int]] = []
    for u, v in g.edges:
        edge = (u, v)
        ids = plan.orders.get(edge, ())
        chain = [u] + [g.n + i for i in ids] + [v]
        segments.extend(zip(chain, chain[1:]))
    n_total = g.n + plan.size
    seen: set[Edge] = set()
    out: list[Edge] = []
    for a, b in segments:
        e = canon_edge(a, b)
        while e in seen:
            mid = n_total
            n_total += 1
            out.append(canon_edge(a, mid))
            a, e = mid, canon_edge(mid, b)
        seen.add(e)
        out.append(e)
    return Graph(n_total, tuple(sorted(out)))


def crossings_per_edge(g: Graph, plan: CrossingPlan) -> tuple[dict[Edge, int], int]:
    """Exact per-edge crossing counts and their maximum."""
    validate_plan(g, plan)
    counts = {e: 0 for e in g.edges}
    for e, f in plan.crossings:
        counts[e] += 1
        counts[f] += 1
    return counts, (max(counts.values()) if counts else 0)
