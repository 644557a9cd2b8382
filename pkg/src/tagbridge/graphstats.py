"""Topological statistics of the blogroll network.

Component structure, clustering and distances are computed on the
undirected projection of the directed blogroll graph; reciprocity is the
one statistic that looks at edge direction.  Conventions fixed here:
nodes of undirected degree < 2 contribute 0 to the average clustering
coefficient, and the shortest/longest average distance of a component are
the min/max over its nodes of the node's mean BFS distance to the rest of
the component.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, asdict
from typing import Iterable, Sequence, Tuple

from .core import BlogrollGraph

__all__ = [
    "undirected_adjacency",
    "weak_components",
    "reciprocal_pairs",
    "clustering_coefficient",
    "distance_profile",
    "ComponentReport",
    "GraphSummary",
    "GraphStatsReport",
    "summarize_graph",
]


def undirected_adjacency(g: BlogrollGraph) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {u: set() for u in g.nodes}
    for src, dst in g.edges:
        adj[src].add(dst)
        adj[dst].add(src)
    return adj


def weak_components(g: BlogrollGraph) -> list[tuple[int, ...]]:
    """Connected components of the undirected projection.

    Each component is a sorted node tuple; the list is ordered by smallest
    contained node, so component ids (list positions) are deterministic.
    """
    adj = undirected_adjacency(g)
    seen: set[int] = set()
    components: list[tuple[int, ...]] = []
    for start in sorted(g.nodes):
        if start in seen:
            continue
        queue = deque([start])
        seen.add(start)
        members = [start]
        while queue:
            node = queue.popleft()
            for nb in adj[node]:
                if nb not in seen:
                    seen.add(nb)
                    members.append(nb)
                    queue.append(nb)
        components.append(tuple(sorted(members)))
    return components


def reciprocal_pairs(g: BlogrollGraph) -> int:
    """Unordered pairs {u, v} linked in both directions."""
    return sum(1 for (u, v) in g.edges if u < v and (v, u) in g.edges)


def clustering_coefficient(g: BlogrollGraph, component: Iterable[int]) -> float:
    """Mean local clustering coefficient over the component's nodes.

    Local coefficient of a node with undirected degree d >= 2 is the number
    of undirected edges among its neighbors divided by d(d-1)/2; nodes with
    d < 2 contribute 0.
    """
    adj = undirected_adjacency(g)
    nodes = sorted(component)
    if not nodes:
        return 0.0
    total = 0.0
    for node in nodes:
        nbrs = sorted(adj[node])
        d = len(nbrs)
        if d < 2:
            continue
        links = 0
        for i in range(d - 1):
            a = nbrs[i]
            adj_a = adj[a]
            for j in range(i + 1, d):
                if nbrs[j] in adj_a:
                    links += 1
        total += links / (d * (d - 1) / 2)
    return total / len(nodes)


def _bfs_distances(adj: dict[int, set[int]], source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        for nb in adj[node]:
            if nb not in dist:
                dist[nb] = dist[node] + 1
                queue.append(nb)
    return dist


def distance_profile(
    g: BlogrollGraph, component: Iterable[int]
) -> tuple[float, float]:
    """(shortest, longest) average distance within one weak component.

    For every node, take the mean undirected BFS distance to each other
    component member; report the minimum and maximum of those means.
    Singleton components yield (0.0, 0.0).
    """
    nodes = sorted(component)
    if len(nodes) <= 1:
        return (0.0, 0.0)
    adj = undirected_adjacency(g)
    means = []
    for node in nodes:
        dist = _bfs_distances(adj, node)
        means.append(sum(dist[other] for other in nodes if other != node) / (len(nodes) - 1))
    return (min(means), max(means))


@dataclass(frozen=True)
class ComponentReport:
    component_id: int
    nodes: int
    edges: int
    clustering: float
    shortest_avg_distance: float
    longest_avg_distance: float
    reciprocal_pairs: int

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class GraphSummary:
    nodes: int
    edges: int
    weak_components: int
    avg_component_size: float
    max_component_size: int
    min_component_size: int
    reciprocal_pairs: int
    reciprocal_directed_edges: int  # arcs participating in a mutual pair

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class GraphStatsReport:
    summary: GraphSummary
    top_components: Tuple[ComponentReport, ...]

    def as_dict(self) -> dict:
        return {
            "summary": self.summary.as_dict(),
            "top_components": [c.as_dict() for c in self.top_components],
        }


def _component_report(
    g: BlogrollGraph, component_id: int, members: Sequence[int]
) -> ComponentReport:
    member_set = set(members)
    internal = frozenset(
        (s, d) for s, d in g.edges if s in member_set and d in member_set
    )
    sub = BlogrollGraph(frozenset(member_set), internal)
    shortest, longest = distance_profile(sub, members)
    return ComponentReport(
        component_id=component_id,
        nodes=len(members),
        edges=len(internal),
        clustering=clustering_coefficient(sub, members),
        shortest_avg_distance=shortest,
        longest_avg_distance=longest,
        reciprocal_pairs=reciprocal_pairs(sub),
    )


def summarize_graph(g: BlogrollGraph, top: int = 5) -> GraphStatsReport:
    """Whole-graph summary plus detail for the ``top`` largest components."""
    components = weak_components(g)
    sizes = [len(c) for c in components]
    pairs = reciprocal_pairs(g)
    summary = GraphSummary(
        nodes=len(g.nodes),
        edges=len(g.edges),
        weak_components=len(components),
        avg_component_size=(sum(sizes) / len(sizes)) if sizes else 0.0,
        max_component_size=max(sizes) if sizes else 0,
        min_component_size=min(sizes) if sizes else 0,
        reciprocal_pairs=pairs,
        reciprocal_directed_edges=2 * pairs,
    )
    ranked = sorted(range(len(components)), key=lambda i: (-len(components[i]), i))
    reports = tuple(
        _component_report(g, i, components[i]) for i in ranked[:top]
    )
    return GraphStatsReport(summary=summary, top_components=reports)
