"""Independent brute-force oracles used across the test suite.

These deliberately take the slow, direct road: materialized cross
products, dense matrix products, Floyd-Warshall, boolean transitive
closure.  They share no code with the implementations they check.
"""

from __future__ import annotations

import math

import numpy as np

from tagbridge.core import BlogrollGraph
from tagbridge.profiles import ProfileMatrix, UserProfile, Vocabulary
from tagbridge.similarity import SimilarityMatrix


# --- enrichment ------------------------------------------------------------

def enrich_oracle(posts, assignments):
    """Literal select-then-project over the materialized cross product."""
    return frozenset(
        (u_b, t_l, r_b)
        for (u_b, r_b) in posts
        for (_u_l, t_l, r_l) in assignments
        if r_b == r_l
    )


# --- similarity ------------------------------------------------------------

def dense_rows(matrix: ProfileMatrix) -> np.ndarray:
    rows = np.zeros((len(matrix.users), len(matrix.vocabulary)), dtype=np.int64)
    for i, profile in enumerate(matrix.profiles):
        for pos in profile.indices:
            rows[i, pos] = 1
    return rows


def brute_force_similarity(matrix: ProfileMatrix) -> SimilarityMatrix:
    """All-pairs cosine from a dense 0/1 matrix product."""
    dense = dense_rows(matrix)
    gram = dense @ dense.T
    sizes = dense.sum(axis=1)
    rows: dict[int, dict[int, float]] = {u: {} for u in matrix.users}
    n = len(matrix.users)
    for i in range(n - 1):
        for j in range(i + 1, n):
            inter = int(gram[i, j])
            if inter == 0:
                continue
            score = inter / math.sqrt(int(sizes[i]) * int(sizes[j]))
            ui, uj = matrix.users[i], matrix.users[j]
            rows[ui][uj] = score
            rows[uj][ui] = score
    return SimilarityMatrix(matrix.users, rows)


def sort_oracle_topk(s: SimilarityMatrix, k: int) -> dict[int, tuple]:
    """Rank every other user, drop zeros, take k; the full-sort baseline."""
    out = {}
    for u in s.users:
        scored = [(v, s.score(u, v)) for v in s.users if v != u]
        scored = [(v, sc) for v, sc in scored if sc > 0.0]
        scored.sort(key=lambda kv: (-kv[1], kv[0]))
        out[u] = tuple(scored[:k])
    return out


def random_profile_matrix(rng: np.random.Generator, n_users: int, n_items: int, density: float) -> ProfileMatrix:
    vocab = Vocabulary(kind="track", items=tuple(range(n_items)))
    profiles = []
    for u in range(n_users):
        mask = rng.random(n_items) < density
        profiles.append(UserProfile(u, vocab, tuple(int(i) for i in np.flatnonzero(mask))))
    return ProfileMatrix(vocab, tuple(range(n_users)), tuple(profiles))


# --- graphs ----------------------------------------------------------------

def random_digraph(rng: np.random.Generator, n_nodes: int, p_edge: float) -> BlogrollGraph:
    edges = set()
    for u in range(n_nodes):
        for v in range(n_nodes):
            if u != v and rng.random() < p_edge:
                edges.add((u, v))
    return BlogrollGraph(frozenset(range(n_nodes)), frozenset(edges))


def undirected_matrix(g: BlogrollGraph) -> tuple[list[int], np.ndarray]:
    nodes = sorted(g.nodes)
    index = {u: i for i, u in enumerate(nodes)}
    a = np.zeros((len(nodes), len(nodes)), dtype=np.int64)
    for s, d in g.edges:
        a[index[s], index[d]] = 1
        a[index[d], index[s]] = 1
    return nodes, a


def components_oracle(g: BlogrollGraph) -> list[tuple[int, ...]]:
    """Boolean transitive closure of the undirected adjacency."""
    nodes, a = undirected_matrix(g)
    if not nodes:
        return []
    reach = (a + np.eye(len(nodes), dtype=np.int64)) > 0
    while True:
        nxt = reach | (reach @ reach)
        if (nxt == reach).all():
            break
        reach = nxt
    seen: set[int] = set()
    comps = []
    for i in range(len(nodes)):
        if i in seen:
            continue
        members = [nodes[j] for j in np.flatnonzero(reach[i])]
        seen.update(np.flatnonzero(reach[i]).tolist())
        comps.append(tuple(sorted(members)))
    comps.sort(key=lambda c: c[0])
    return comps


def reciprocal_oracle(g: BlogrollGraph) -> int:
    nodes = sorted(g.nodes)
    count = 0
    for i, u in enumerate(nodes):
        for v in nodes[i + 1:]:
            if (u, v) in g.edges and (v, u) in g.edges:
                count += 1
    return count


def clustering_oracle(g: BlogrollGraph, component) -> float:
    """Mean local coefficient from the cube of the adjacency matrix."""
    nodes, a = undirected_matrix(g)
    index = {u: i for i, u in enumerate(nodes)}
    cube = a @ a @ a
    degrees = a.sum(axis=1)
    members = sorted(component)
    if not members:
        return 0.0
    total = 0.0
    for u in members:
        i = index[u]
        d = int(degrees[i])
        if d < 2:
            continue
        links = int(cube[i, i]) // 2
        total += links / (d * (d - 1) / 2)
    return total / len(members)


def distance_oracle(g: BlogrollGraph, component) -> tuple[float, float]:
    """Per-node mean distances from Floyd-Warshall."""
    members = sorted(component)
    if len(members) <= 1:
        return (0.0, 0.0)
    index = {u: i for i, u in enumerate(members)}
    n = len(members)
    big = n + 1
    dist = np.full((n, n), big, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    member_set = set(members)
    for s, d in g.edges:
        if s in member_set and d in member_set:
            dist[index[s], index[d]] = 1
            dist[index[d], index[s]] = 1
    for k in range(n):
        dist = np.minimum(dist, dist[:, k, None] + dist[None, k, :])
    means = [int(dist[i].sum()) / (n - 1) for i in range(n)]
    return (min(means), max(means))
