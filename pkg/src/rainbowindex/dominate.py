"""Dominating-set variants: predicates, greedy constructions, and the
merge/union steps that turn per-part dominating sets into one connected set.

Three variants appear throughout, all certified by re-checkable predicates:

* step(j): every vertex lies within distance j of the set;
* multi(j): every outside vertex has at least j neighbors inside the set;
* way(j): a dominating set whose outside vertices all have degree >= j.

Certificates never trust the construction that produced them: ``holds()``
re-runs the predicate from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import (
    Graph,
    bfs_distances,
    shortest_path_between_sets,
)

STEP = "step"
MULTI = "multi"
WAY = "way"


@dataclass(frozen=True)
class DominationCertificate:
    """A vertex set plus the domination claim it satisfies on ``graph``."""

    graph: Graph
    vertices: tuple[int, ...]  # sorted
    kind: str  # "step" | "multi" | "way"
    j: int
    connected: bool
    size_bound: Fraction | None = None
    bound_label: str | None = None

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def holds(self) -> bool:
        g = self.graph
        dom = set(self.vertices)
        if not dom:
            return False
        if self.kind == STEP:
            ok = is_k_step_dominating(g, dom, self.j)
        elif self.kind == MULTI:
            ok = is_k_dominating(g, dom, self.j)
        elif self.kind == WAY:
            ok = is_k_way_dominating(g, dom, self.j)
        else:
            return False
        if not ok:
            return False
        if self.connected and not _induces_connected(g, dom):
            return False
        if self.size_bound is not None and len(dom) > self.size_bound:
            return False
        return True


def _induces_connected(g: Graph, dom: set[int]) -> bool:
    if not dom:
        return False
    start = min(dom)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w in dom and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == dom


def _components_within(g: Graph, dom: Iterable[int]) -> list[tuple[int, ...]]:
    """Components of the induced subgraph on dom, ordered by minimum id."""
    remaining = set(dom)
    comps = []
    for start in sorted(remaining):
        if start not in remaining:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if w in remaining and w not in comp:
                    comp.add(w)
                    stack.append(w)
        remaining -= comp
        comps.append(tuple(sorted(comp)))
    return comps


# ---------------------------------------------------------------------------
# Predicates


def is_k_step_dominating(g: Graph, dom: Iterable[int], j: int) -> bool:
    """True iff every vertex is at distance <= j from the set."""
    dom = set(dom)
    if not dom:
        raise ValueError("dominating set must be nonempty")
    dist = bfs_distances(g, dom)
    return all(d is not None and d <= j for d in dist)


def is_k_dominating(g: Graph, dom: Iterable[int], j: int) -> bool:
    """True iff every vertex outside the set has >= j neighbors inside."""
    dom = set(dom)
    if not dom:
        raise ValueError("dominating set must be nonempty")
    for v in range(g.n):
        if v in dom:
            continue
        inside = sum(1 for w in g.adj[v] if w in dom)
        if inside < j:
            return False
    return True


def is_k_way_dominating(g: Graph, dom: Iterable[int], j: int) -> bool:
    """True iff dom is a dominating set and outside degrees are all >= j."""
    dom = set(dom)
    if not dom:
        raise ValueError("dominating set must be nonempty")
    if not is_k_step_dominating(g, dom, 1):
        return False
    return all(g.degree(v) >= j for v in range(g.n) if v not in dom)


# ---------------------------------------------------------------------------
# Constructions


def greedy_two_step_dominating(part: Graph) -> DominationCertificate:
    """Greedy 2-step dominating set of a (possibly disconnected) part.

    Seeds the lowest-id vertex of each component, then repeatedly absorbs the
    lowest-id vertex at distance exactly 3 until none remains. Every added
    vertex enlarges the closed neighborhood by at least delta + 1, which
    caps the final size at n / (delta + 1).
    """
    if part.n == 0:
        raise ValueError("empty graph")
    delta = part.min_degree
    dom = [comp[0] for comp in part.components]

    def closed_cover(dist):
        return sum(1 for d in dist if d is not None and d <= 1)

    dist = bfs_distances(part, dom)
    cover = closed_cover(dist)
    assert cover >= len(dom) * (delta + 1)
    while True:
        level3 = [v for v in range(part.n) if dist[v] == 3]
        if not level3:
            break
        dom.append(min(level3))
        dist = bfs_distances(part, dom)
        new_cover = closed_cover(dist)
        assert new_cover - cover >= delta + 1
        cover = new_cover
    bound = Fraction(part.n, delta + 1)
    assert len(dom) <= bound
    return DominationCertificate(
        graph=part,
        vertices=tuple(sorted(dom)),
        kind=STEP,
        j=2,
        connected=False,
        size_bound=bound,
        bound_label="greedy growth: n/(delta+1)",
    )


def connect_two_step(
    g: Graph, part: Graph, dominating: Iterable[int]
) -> DominationCertificate:
    """Grow a 2-step dominating set of ``part`` into a set that induces a
    connected subgraph of ``g``, adding at most 4 vertices per merge.

    Repeatedly joins the closest pair of components of the induced subgraph
    by the interior of a shortest path in g. Because the input 2-step
    dominates g, the closest pair is always at distance <= 5, so the result
    has size <= 5|D| - 4.
    """
    dom0 = sorted(set(dominating))
    if not g.is_connected:
        raise ValueError("connect_two_step requires a connected host graph")
    if part.n != g.n or not part.edges <= g.edges:
        raise ValueError("part must be a spanning subgraph of the host graph")
    if not is_k_step_dominating(part, dom0, 2):
        raise ValueError("input is not a 2-step dominating set of the part")
    dom = set(dom0)
    while True:
        comps = _components_within(g, dom)
        if len(comps) <= 1:
            break
        best: tuple[int, int, int] | None = None  # (distance, i, j)
        dists = []
        for comp in comps:
            dists.append(bfs_distances(g, comp))
        for i in range(len(comps)):
            for j in range(i + 1, len(comps)):
                d = min(dists[i][v] for v in comps[j])  # type: ignore[type-var]
                cand = (d, i, j)
                if best is None or cand < best:
                    best = cand
        assert best is not None
        d, i, j = best
        assert d <= 5, f"closest component pair at distance {d} > 5"
        path = shortest_path_between_sets(g, comps[i], comps[j])
        assert path is not None and len(path) - 2 <= 4
        dom.update(path[1:-1])
    bound = Fraction(5 * len(dom0) - 4)
    assert len(dom) <= bound
    return DominationCertificate(
        graph=g,
        vertices=tuple(sorted(dom)),
        kind=STEP,
        j=2,
        connected=True,
        size_bound=bound,
        bound_label="component merging: 5|D|-4",
    )


def union_connect(
    g: Graph, certificates: Sequence[DominationCertificate]
) -> DominationCertificate:
    """Union the given connected 2-step dominating sets of g and reconnect
    with at most len(certificates) - 1 extra vertices.

    Each detached component sits at distance exactly 2 from the component
    holding the first input (that input 2-step dominates g), so a single
    midpoint vertex attaches it; the lowest-id midpoint is chosen.
    """
    if not certificates:
        raise ValueError("need at least one certificate")
    for cert in certificates:
        vs = cert.vertex_set()
        if not vs:
            raise ValueError("certificate with empty vertex set")
        if not is_k_step_dominating(g, vs, 2) or not _induces_connected(g, set(vs)):
            raise ValueError(
                "input is not a connected 2-step dominating set of the graph"
            )
    dom: set[int] = set()
    for cert in certificates:
        dom |= cert.vertex_set()
    anchor_root = certificates[0].vertices[0]
    connectors: list[int] = []
    while True:
        comps = _components_within(g, dom)
        if len(comps) <= 1:
            break
        anchor = next(c for c in comps if anchor_root in c)
        anchor_set = set(anchor)
        others = [c for c in comps if c is not anchor]
        target = set(others[0])
        candidates = [
            w
            for w in range(g.n)
            if w not in dom
            and any(x in anchor_set for x in g.adj[w])
            and any(x in target for x in g.adj[w])
        ]
        if not candidates:
            raise RuntimeError("no length-2 connection found; inputs invalid")
        w = min(candidates)
        dom.add(w)
        connectors.append(w)
    assert len(connectors) <= len(certificates) - 1
    total_bound = Fraction(
        sum(len(c.vertices) for c in certificates) + len(certificates) - 1
    )
    return DominationCertificate(
        graph=g,
        vertices=tuple(sorted(dom)),
        kind=STEP,
        j=2,
        connected=True,
        size_bound=total_bound,
        bound_label="union plus <= k-1 connectors",
    )


def greedy_connected_k_dominating(g: Graph, j: int) -> DominationCertificate:
    """Connected set whose outside vertices all have >= j neighbors inside.

    Greedy: start from the highest-degree vertex (ties to the lowest id),
    repeatedly add the adjacent vertex that newly satisfies the most outside
    vertices, until the predicate holds. No size optimality is claimed; the
    certificate is predicate-checked.
    """
    if not g.is_connected:
        raise ValueError("requires a connected graph")
    if j < 0:
        raise ValueError("j must be >= 0")
    seed = min(range(g.n), key=lambda v: (-g.degree(v), v))
    dom = {seed}
    inside_count = [0] * g.n
    for w in g.adj[seed]:
        inside_count[w] += 1
    while not is_k_dominating(g, dom, j):
        frontier = sorted(
            {w for v in dom for w in g.adj[v] if w not in dom}
        )
        assert frontier, "connected graph exhausted without satisfying predicate"

        def gain(w: int) -> int:
            return sum(
                1
                for v in g.adj[w]
                if v not in dom and v != w and inside_count[v] == j - 1
            )

        w = min(frontier, key=lambda x: (-gain(x), x))
        dom.add(w)
        for v in g.adj[w]:
            inside_count[v] += 1
    return DominationCertificate(
        graph=g,
        vertices=tuple(sorted(dom)),
        kind=MULTI,
        j=j,
        connected=True,
    )
