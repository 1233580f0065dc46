"""Simple undirected graphs with a canonical edge list, plus the structural
helpers every other module leans on: parsing, leaf stripping, matching-based
vertex cover, twin partitions and certificate predicates.

Vertex ids are always 0..n-1. Edges are stored with the smaller endpoint
first and the whole list sorted, so equal graphs compare equal and every
derived quantity (matchings, removal orders, new-vertex ids) is
reproducible byte for byte.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence


class ParseError(ValueError):
    """Malformed edge-list input; carries the 1-based offending line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph. `edges` must already be canonical
    (u < v per edge, list sorted, no loops or duplicates); use
    :meth:`Graph.build` for unchecked input.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @staticmethod
    def build(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Canonicalize and validate an edge collection."""
        canon = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex id out of range in edge ({u}, {v})")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        for i in range(1, len(canon)):
            if canon[i] == canon[i - 1]:
                raise ValueError(f"duplicate edge {canon[i]}")
        return Graph(n, tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex sorted neighbor tuples.

        Rows come out sorted without an explicit sort because the canonical
        edge list is scanned in order: vertex u first receives neighbors
        w < u (from edges (w, u), ascending in w), then neighbors v > u
        (from edges (u, v), ascending in v).
        """
        rows: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            rows[u].append(v)
            rows[v].append(u)
        return tuple(tuple(r) for r in rows)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: first line "n m", then m lines "u v".

    Duplicate edges, loops and out-of-range ids are reported as errors with
    their line number, never silently dropped.
    """
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError("expected header 'n m'", 1)
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError("expected header 'n m'", 1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("expected integer header 'n m'", 1) from None
    if n < 0 or m < 0:
        raise ParseError("n and m must be nonnegative", 1)

    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    lineno = 1
    for raw in lines[1:]:
        lineno += 1
        stripped = raw.strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {stripped!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected integers, got {stripped!r}", lineno) from None
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range: {u} {v} (n = {n})", lineno)
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise ParseError(f"duplicate edge {e[0]} {e[1]}", lineno)
        seen.add(e)
        edges.append(e)
    if len(edges) != m:
        raise ParseError(f"header announced {m} edges, found {len(edges)}", lineno)
    edges.sort()
    return Graph(n, tuple(edges))


def write_graph(g: Graph) -> str:
    """Inverse of :func:`parse_graph` on canonical graphs."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on `keep`, relabeled canonically.

    Returns (subgraph, old_ids) where old_ids[new] is the original id.
    """
    old_ids = sorted(set(keep))
    new_of = {old: new for new, old in enumerate(old_ids)}
    edges = [
        (new_of[u], new_of[v])
        for u, v in g.edges
        if u in new_of and v in new_of
    ]
    return Graph(len(old_ids), tuple(sorted(edges))), tuple(old_ids)


@dataclass(frozen=True)
class StripResult:
    graph: Graph
    removed: tuple[int, ...]      # original ids, in removal order
    old_ids: tuple[int, ...]      # old_ids[new] = original id of kept vertex


def strip_low_degree(g: Graph) -> StripResult:
    """Repeatedly delete vertices of degree <= 1 (smallest id first).

    The result has minimum degree >= 2 or is empty. Removing such vertices
    never changes the local crossing number, so every verdict downstream is
    preserved.
    """
    deg = [len(row) for row in g.adjacency]
    alive = [True] * g.n
    heap = [v for v in range(g.n) if deg[v] <= 1]
    heapq.heapify(heap)
    removed: list[int] = []
    while heap:
        v = heapq.heappop(heap)
        if not alive[v] or deg[v] > 1:
            continue
        alive[v] = False
        removed.append(v)
        for w in g.adjacency[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] <= 1:
                    heapq.heappush(heap, w)
    if not removed:
        return StripResult(g, (), tuple(range(g.n)))
    sub, old_ids = induced_subgraph(g, [v for v in range(g.n) if alive[v]])
    return StripResult(sub, tuple(removed), old_ids)


def approx_vertex_cover(g: Graph) -> frozenset[int]:
    """Both endpoints of a greedy maximal matching, taken in canonical edge
    order. Covers every edge and is at most twice the optimum; always even.
    """
    matched = bytearray(g.n)
    cover: list[int] = []
    for u, v in g.edges:
        if not matched[u] and not matched[v]:
            matched[u] = matched[v] = 1
            cover.append(u)
            cover.append(v)
    return frozenset(cover)


@dataclass(frozen=True)
class TwinPartition:
    """Coarsest partition into twin classes. `kinds[i]` is "true" or
    "false" for `classes[i]`; singletons are labeled "false" by convention.
    """

    classes: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]

    @property
    def diversity(self) -> int:
        return len(self.classes)


def twin_partition(g: Graph) -> TwinPartition:
    """Group vertices by open neighborhood (false twins) and closed
    neighborhood (true twins).

    No vertex can have both a true and a false twin, so the two groupings
    never overlap on groups of size >= 2 and their union is the coarsest
    twin partition; its class count is the neighborhood diversity.
    """
    open_groups: dict[tuple[int, ...], list[int]] = {}
    closed_groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.n):
        row = g.adjacency[v]
        open_groups.setdefault(row, []).append(v)
        closed = tuple(sorted(row + (v,)))
        closed_groups.setdefault(closed, []).append(v)

    classes: list[tuple[int, ...]] = []
    kinds: list[str] = []
    placed = bytearray(g.n)
    for key, members in closed_groups.items():
        if len(members) >= 2:
            classes.append(tuple(members))
            kinds.append("true")
            for v in members:
                placed[v] = 1
    for key, members in open_groups.items():
        rest = [v for v in members if not placed[v]]
        if len(members) >= 2 and len(rest) == len(members):
            classes.append(tuple(members))
            kinds.append("false")
            for v in members:
                placed[v] = 1
    for v in range(g.n):
        if not placed[v]:
            classes.append((v,))
            kinds.append("false")
    order = sorted(range(len(classes)), key=lambda i: classes[i][0])
    return TwinPartition(
        tuple(classes[i] for i in order),
        tuple(kinds[i] for i in order),
    )


def connected_components(g: Graph) -> list[list[int]]:
    seen = bytearray(g.n)
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = 1
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def find_cycle(g: Graph) -> Optional[list[int]]:
    """Some cycle as a vertex list, or None if the graph is acyclic."""
    parent = [-2] * g.n
    for s in range(g.n):
        if parent[s] != -2:
            continue
        parent[s] = -1
        stack = [(s, -1)]
        while stack:
            v, prev = stack.pop()
            for w in g.adjacency[v]:
                if w == prev:
                    continue
                if parent[w] != -2:
                    # Back edge: walk both endpoints up to their meeting point.
                    path_v = [v]
                    x = v
                    while x != s:
                        x = parent[x]
                        path_v.append(x)
                    path_w = [w]
                    x = w
                    while x != s:
                        x = parent[x]
                        path_w.append(x)
                    set_v = {u: i for i, u in enumerate(path_v)}
                    for j, u in enumerate(path_w):
                        if u in set_v:
                            return path_v[: set_v[u]] + list(reversed(path_w[: j + 1]))
                    return path_v + list(reversed(path_w))
                parent[w] = v
                stack.append((w, v))
    return None


@dataclass(frozen=True)
class StructureCheck:
    holds: bool
    explanation: str

    def __bool__(self) -> bool:
        return self.holds


def check_structure(
    g: Graph,
    prop: str,
    arg: Optional[Iterable[int]] = None,
) -> StructureCheck:
    """Certificate predicates: acyclic, path-forest, dominating-set(D),
    twin-cover(S), unicyclic. Explanations name a violating cycle, vertex
    or component on failure.
    """
    if prop == "acyclic":
        cyc = find_cycle(g)
        if cyc is None:
            return StructureCheck(True, "no cycle")
        return StructureCheck(False, f"cycle through {cyc}")

    if prop == "path-forest":
        cyc = find_cycle(g)
        if cyc is not None:
            return StructureCheck(False, f"cycle through {cyc}")
        for v in range(g.n):
            if g.degree(v) > 2:
                return StructureCheck(False, f"vertex {v} has degree {g.degree(v)} > 2")
        return StructureCheck(True, "acyclic with maximum degree 2")

    if prop == "unicyclic":
        # At most one independent cycle; the residual may be disconnected.
        fes = g.m - g.n + len(connected_components(g))
        if fes <= 1:
            return StructureCheck(True, f"feedback edge number {fes}")
        return StructureCheck(False, f"feedback edge number {fes} > 1")

    if prop == "dominating-set":
        if arg is None:
            raise ValueError("dominating-set requires a vertex set")
        dom = set(arg)
        bad = [v for v in dom if not 0 <= v < g.n]
        if bad:
            raise ValueError(f"dominating-set vertices out of range: {bad}")
        for v in range(g.n):
            if v in dom:
                continue
            if not any(w in dom for w in g.adjacency[v]):
                return StructureCheck(False, f"vertex {v} is not dominated")
        return StructureCheck(True, f"{len(dom)} vertices dominate the graph")

    if prop == "twin-cover":
        if arg is None:
            raise ValueError("twin-cover requires a vertex set")
        cov = set(arg)
        bad = [v for v in cov if not 0 <= v < g.n]
        if bad:
            raise ValueError(f"twin-cover vertices out of range: {bad}")
        residual, old_ids = induced_subgraph(g, [v for v in range(g.n) if v not in cov])
        for comp in connected_components(residual):
            orig = [old_ids[v] for v in comp]
            # Component must be a clique of true twins in g.
            closed = None
            for u in orig:
                cu = frozenset(g.adjacency[u]) | {u}
                if closed is None:
                    closed = cu
                elif cu != closed:
                    return StructureCheck(
                        False, f"component {sorted(orig)} is not a set of true twins"
                    )
            for i, u in enumerate(orig):
                for w in orig[i + 1:]:
                    if not g.has_edge(u, w):
                        return StructureCheck(
                            False, f"component {sorted(orig)} is not a clique"
                        )
        return StructureCheck(True, "all residual components are true-twin cliques")

    raise ValueError(f"unknown property {prop!r}")


@dataclass(frozen=True)
class ParamReport:
    n: int
    m: int
    min_degree: int
    max_degree: int
    components: int
    feedback_edge_number: int
    neighborhood_diversity: int
    approx_vertex_cover_size: int


def compute_params(g: Graph) -> ParamReport:
    degs = [g.degree(v) for v in range(g.n)] or [0]
    comps = len(connected_components(g))
    return ParamReport(
        n=g.n,
        m=g.m,
        min_degree=min(degs),
        max_degree=max(degs),
        components=comps,
        feedback_edge_number=g.m - g.n + comps,
        neighborhood_diversity=twin_partition(g).diversity,
        approx_vertex_cover_size=len(approx_vertex_cover(g)),
    )


def random_tree(n: int, seed: int) -> Graph:
    """Uniform-ish random labeled tree (random attachment), reproducible."""
    rng = random.Random(seed)
    if n <= 0:
        raise ValueError("tree needs at least one vertex")
    edges = []
    for v in range(1, n):
        edges.append((rng.randrange(v), v))
    return Graph.build(n, edges)


def random_graph(n: int, m: int, seed: int) -> Graph:
    """Random simple graph with exactly m edges, reproducible."""
    if m > n * (n - 1) // 2:
        raise ValueError("too many edges requested")
    rng = random.Random(seed)
    chosen: set[tuple[int, int]] = set()
    while len(chosen) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            chosen.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(chosen)))


def bipartition(g: Graph) -> tuple[list[int], list[int]]:
    """2-coloring classes (smallest vertex of each component goes left).

    Raises ValueError on an odd cycle.
    """
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            v = queue.pop()
            for w in g.adjacency[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    raise ValueError("graph is not bipartite (odd cycle found)")
    left = [v for v in range(g.n) if color[v] == 0]
    right = [v for v in range(g.n) if color[v] == 1]
    return left, right
