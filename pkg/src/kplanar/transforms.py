"""Graph transformations: edge subdivision with a path map, spoke
attachment, and elimination-forest handling for treedepth transport.

New vertex ids are assigned in canonical edge order (then path position),
so every transform is reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph
from .plans import Edge, canon_edge


@dataclass(frozen=True)
class SubdivisionMap:
    """Subdivided graph plus, per original edge, the internal vertices of
    the path that replaced it (in order from the smaller endpoint).
    """

    base: Graph
    k: int
    graph: Graph
    paths: tuple[tuple[int, ...], ...]   # aligned with base.edges; k-1 internals each

    def path_vertices(self, e: Edge) -> tuple[int, ...]:
        """Full path u, p_1, ..., p_{k-1}, v for a base edge."""
        idx = self.base.edges.index(canon_edge(*e))
        u, v = self.base.edges[idx]
        return (u,) + self.paths[idx] + (v,)

    def segments(self, e: Edge) -> tuple[Edge, ...]:
        verts = self.path_vertices(e)
        return tuple(canon_edge(a, b) for a, b in zip(verts, verts[1:]))


def subdivide(g: Graph, k: int) -> SubdivisionMap:
    """Subdivide each edge k-1 times. Original vertices keep their ids;
    internals for the i-th canonical edge come before those of the next.

    k = 1 is the identity (empty internal lists). k = 0 is rejected: it
    would mean plain planarity and needs no subdivision.
    """
    if k < 1:
        raise ValueError("subdivide requires k >= 1 (k = 0 is plain planarity)")
    paths: list[tuple[int, ...]] = []
    edges: list[Edge] = []
    nxt = g.n
    for u, v in g.edges:
        internals = tuple(range(nxt, nxt + k - 1))
        nxt += k - 1
        paths.append(internals)
        chain = (u,) + internals + (v,)
        edges.extend(canon_edge(a, b) for a, b in zip(chain, chain[1:]))
    return SubdivisionMap(g, k, Graph(nxt, tuple(sorted(edges))), tuple(paths))


@dataclass(frozen=True)
class SpokeRegistry:
    """Spokes are paths of length 2 from a hub; midpoints have degree 2."""

    hub: int
    spokes: dict[int, tuple[int, ...]]   # target -> midpoint ids

    def count(self, target: int) -> int:
        return len(self.spokes[target])


def add_spokes(
    edges: list[Edge],
    next_id: int,
    hub: int,
    targets: Sequence[int],
    count: int,
) -> tuple[int, SpokeRegistry]:
    """Append `count` hub-midpoint-target paths per target to an edge list.

    Midpoint ids are consumed from next_id onward, targets in the given
    order. Returns the next free id and the registry.
    """
    if count < 1:
        raise ValueError("spoke count must be positive")
    registry: dict[int, tuple[int, ...]] = {}
    for t in targets:
        mids = tuple(range(next_id, next_id + count))
        next_id += count
        registry[t] = mids
        for mid in mids:
            edges.append(canon_edge(hub, mid))
            edges.append(canon_edge(mid, t))
    return next_id, SpokeRegistry(hub, registry)


def attach_spokes(g: Graph, targets: Iterable[int], count: int) -> tuple[Graph, SpokeRegistry]:
    """Add a fresh hub r = g.n and `count` spokes from it to each target."""
    target_list = sorted(set(targets))
    if not target_list:
        raise ValueError("attach_spokes requires a nonempty target set")
    if any(not 0 <= t < g.n for t in target_list):
        raise ValueError("spoke target out of range")
    edges = list(g.edges)
    hub = g.n
    nxt, registry = add_spokes(edges, g.n + 1, hub, target_list, count)
    return Graph(nxt, tuple(sorted(edges))), registry


@dataclass(frozen=True)
class EliminationForest:
    """parent[v] = parent id, or -1 for roots. Height counts vertices on
    the longest root-to-leaf path.
    """

    parent: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.parent)

    def depths(self) -> list[int]:
        """1-based depth per vertex; raises on a cyclic parent structure."""
        depth = [0] * self.n
        for v in range(self.n):
            if depth[v]:
                continue
            chain = []
            x = v
            while x != -1 and not depth[x]:
                chain.append(x)
                x = depth_guard(chain, self.parent, x)
            base = 0 if x == -1 else depth[x]
            for u in reversed(chain):
                base += 1
                depth[u] = base
        return depth

    @property
    def height(self) -> int:
        return max(self.depths(), default=0)

    def is_ancestor(self, a: int, d: int) -> bool:
        x = d
        while x != -1:
            if x == a:
                return True
            x = self.parent[x]
        return False


def depth_guard(chain: list[int], parent: tuple[int, ...], x: int) -> int:
    nxt = parent[x]
    if nxt != -1 and nxt in chain:
        raise ValueError(f"parent structure is cyclic through vertex {nxt}")
    return nxt


def validate_elimination_forest(g: Graph, f: EliminationForest) -> tuple[bool, int]:
    """True iff every edge joins an ancestor/descendant pair; also reports
    the height. Raises on cyclic parent structure or size mismatch.
    """
    if f.n != g.n:
        raise ValueError(f"forest has {f.n} vertices, graph has {g.n}")
    depth = f.depths()   # raises on cycles
    for u, v in g.edges:
        lo, hi = (u, v) if depth[u] <= depth[v] else (v, u)
        if not f.is_ancestor(lo, hi):
            return False, max(depth, default=0)
    return True, max(depth, default=0)


def balanced_path_tree(vertices: Sequence[int], parent: list[int], root_parent: int) -> None:
    """Elimination tree of a path by recursive midpoint splitting; for j
    vertices the height is exactly ceil(log2(j + 1)).
    """
    if not vertices:
        return
    mid = len(vertices) // 2
    parent[vertices[mid]] = root_parent
    balanced_path_tree(vertices[:mid], parent, vertices[mid])
    balanced_path_tree(vertices[mid + 1:], parent, vertices[mid])


def lift_elimination_forest(g: Graph, f: EliminationForest, k: int) -> tuple[SubdivisionMap, EliminationForest]:
    """Transport an elimination forest of g to one of the k-subdivision.

    For each edge, a balanced elimination tree of its k-1 internal path
    vertices hangs under the deeper endpoint, so the height grows by at
    most ceil(log2 k).
    """
    ok, _ = validate_elimination_forest(g, f)
    if not ok:
        raise ValueError("not a valid elimination forest of the input graph")
    smap = subdivide(g, k)
    parent = list(f.parent) + [-1] * (smap.graph.n - g.n)
    depth = f.depths()
    for (u, v), internals in zip(g.edges, smap.paths):
        if not internals:
            continue
        anchor = v if depth[v] >= depth[u] else u
        balanced_path_tree(list(internals), parent, anchor)
    lifted = EliminationForest(tuple(parent))
    ok, height = validate_elimination_forest(smap.graph, lifted)
    assert ok, "lift produced an invalid forest"
    bound = f.height + (k - 1).bit_length()   # exact ceil(log2 k)
    assert height <= bound, f"height {height} exceeds bound {bound}"
    return smap, lifted


def chain_forest(g: Graph) -> EliminationForest:
    """The trivial chain forest 0 <- 1 <- ... <- n-1 (always valid)."""
    return EliminationForest(tuple(v - 1 for v in range(g.n)))


def dfs_forest(g: Graph) -> EliminationForest:
    """DFS forest: valid because undirected DFS has no cross edges."""
    parent = [-1] * g.n
    seen = bytearray(g.n)
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = 1
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = 1
                    parent[w] = v
                    stack.append(w)
    return EliminationForest(tuple(parent))
