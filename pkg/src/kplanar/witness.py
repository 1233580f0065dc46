"""Verification and transport of k-planarity certificates.

Acceptance is one-sided: an accepted plan certifies lcr(g) <= k, a rejected
plan certifies nothing about g. Soundness rests on planarization: a planar
planarization can be drawn with each dummy realized as a crossing (or a
touching, which only removes crossings), so the per-edge caps are achieved.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .planarity import is_planar
from .plans import (
    CrossingPlan,
    Edge,
    canon_edge,
    canonicalize,
    crossings_per_edge,
    planarize,
    validate_plan,
)
from .transforms import SubdivisionMap


@dataclass(frozen=True)
class VerifyResult:
    accepted: bool
    reason: str   # "ok" or the first failing condition

    def __bool__(self) -> bool:
        return self.accepted


def verify(g: Graph, k: int, plan: CrossingPlan) -> VerifyResult:
    """Accept iff the plan is well-formed, every edge takes at most k
    crossings, and the planarization is planar.
    """
    if k < 0:
        return VerifyResult(False, f"k must be nonnegative, got {k}")
    try:
        validate_plan(g, plan)
    except ValueError as exc:
        return VerifyResult(False, f"malformed plan: {exc}")
    counts, worst = crossings_per_edge(g, plan)
    if worst > k:
        offender = next(e for e, c in counts.items() if c == worst)
        return VerifyResult(False, f"edge {offender} has {worst} crossings > k = {k}")
    if not is_planar(planarize(g, plan)):
        return VerifyResult(False, "planarization nonplanar")
    return VerifyResult(True, "ok")


def project_subdivided(gmap: SubdivisionMap, plan1: CrossingPlan) -> CrossingPlan:
    """Map a verifying 1-planar plan on the k-subdivision back to a plan on
    the base graph at level k.

    Crossings between two segments of the same base edge are repaired
    first by loop suppression: the crossing is dropped together with every
    crossing on the segments strictly inside the loop (the spliced curve
    bypasses them). Each remaining crossing maps to its base edge pair,
    and per-base-edge orders follow segment order along the path.
    """
    res = verify(gmap.graph, 1, plan1)
    if not res:
        raise ValueError(f"input plan does not verify at level 1: {res.reason}")

    seg_owner: dict[Edge, tuple[int, int]] = {}   # segment -> (base edge idx, position)
    for idx, (u, v) in enumerate(gmap.base.edges):
        chain = (u,) + gmap.paths[idx] + (v,)
        for pos, seg in enumerate(zip(chain, chain[1:])):
            seg_owner[canon_edge(*seg)] = (idx, pos)

    alive = [True] * plan1.size
    located = []   # per crossing: ((idx_e, pos_e), (idx_f, pos_f))
    for e, f in plan1.crossings:
        located.append((seg_owner[e], seg_owner[f]))

    changed = True
    while changed:
        changed = False
        for cid in range(plan1.size):
            if not alive[cid]:
                continue
            (ie, pe), (jf, pf) = located[cid]
            if ie != jf:
                continue
            lo, hi = sorted((pe, pf))
            alive[cid] = False
            # Drop everything riding on segments strictly inside the loop.
            for other in range(plan1.size):
                if not alive[other]:
                    continue
                for (oi, op) in located[other]:
                    if oi == ie and lo < op < hi:
                        alive[other] = False
                        break
            changed = True

    kept = [cid for cid in range(plan1.size) if alive[cid]]
    new_id = {cid: i for i, cid in enumerate(kept)}
    crossings = []
    for cid in kept:
        (ie, _), (jf, _) = located[cid]
        e = gmap.base.edges[ie]
        f = gmap.base.edges[jf]
        crossings.append(tuple(sorted((e, f))))

    orders: dict[Edge, tuple[int, ...]] = {}
    per_base: dict[int, list[tuple[int, int]]] = {}   # base idx -> [(pos, cid)]
    for cid in kept:
        for (bi, pos) in located[cid]:
            per_base.setdefault(bi, []).append((pos, cid))
    for bi, items in per_base.items():
        items.sort()
        orders[gmap.base.edges[bi]] = tuple(new_id[cid] for _, cid in items)

    out = canonicalize(CrossingPlan(tuple(crossings), orders))
    check = verify(gmap.base, gmap.k, out)
    assert check, f"projected plan failed verification: {check.reason}"
    return out
