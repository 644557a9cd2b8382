"""Cosine similarity over sparse binary profiles and top-k neighbor sets.

For 0/1 vectors the cosine reduces to |u ∩ v| / sqrt(|u|·|v|).  The
all-pairs matrix is exact but sparse: an inverted index over vocabulary
items accumulates intersection counts, so only user pairs sharing at least
one item ever get an entry.  The "optimal blogroll" of a user is then the
k highest-scoring other users.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Tuple

from .profiles import ProfileMatrix, UserProfile

__all__ = [
    "VocabularyMismatchError",
    "cosine",
    "SimilarityMatrix",
    "similarity_matrix",
    "NeighborSet",
    "optimal_blogrolls",
]


class VocabularyMismatchError(ValueError):
    pass


def cosine(u: UserProfile, v: UserProfile) -> float:
    """Cosine of two profiles over the same vocabulary; 0.0 if either is empty."""
    if u.vocabulary is not v.vocabulary and u.vocabulary != v.vocabulary:
        raise VocabularyMismatchError(
            f"profiles use different vocabularies ({u.kind}[{len(u.vocabulary)}] "
            f"vs {v.kind}[{len(v.vocabulary)}])"
        )
    if not u.indices or not v.indices:
        return 0.0
    inter = len(frozenset(u.indices) & frozenset(v.indices))
    return inter / math.sqrt(len(u.indices) * len(v.indices))


class SimilarityMatrix:
    """Symmetric sparse matrix of nonzero off-diagonal cosine scores.

    The diagonal is excluded by definition; querying it is a bug and
    raises.  Absent entries are exact zeros (disjoint or empty profiles).
    """

    def __init__(self, users: Tuple[int, ...], rows: dict[int, dict[int, float]]):
        self.users = users
        self._users_set = frozenset(users)
        self._rows = rows

    def score(self, u: int, v: int) -> float:
        if u == v:
            raise ValueError("self-similarity is excluded from the matrix")
        if u not in self._users_set or v not in self._users_set:
            raise KeyError(f"user pair ({u}, {v}) outside the matrix population")
        return self._rows.get(u, {}).get(v, 0.0)

    def neighbors(self, u: int) -> Mapping[int, float]:
        """Nonzero scores for one user (empty mapping if none)."""
        if u not in self._users_set:
            raise KeyError(f"user {u} outside the matrix population")
        return self._rows.get(u, {})

    def entry_count(self) -> int:
        """Number of stored unordered pairs."""
        return sum(len(r) for r in self._rows.values()) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimilarityMatrix):
            return NotImplemented
        return self.users == other.users and self._rows == other._rows


def _pair_counts(
    inverted: list[list[int]], lo: int, hi: int
) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    get = counts.get
    for lst in inverted[lo:hi]:
        n = len(lst)
        for a in range(n - 1):
            ia = lst[a]
            for b in range(a + 1, n):
                key = (ia, lst[b])
                counts[key] = get(key, 0) + 1
    return counts


def similarity_matrix(matrix: ProfileMatrix, workers: int = 1) -> SimilarityMatrix:
    """Exact all-pairs cosine via an inverted index over vocabulary items.

    With ``workers > 1`` the item space is partitioned and partial
    intersection counts are merged by integer addition, so the result is
    identical for any worker count.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    n = len(matrix.users)
    sizes = [len(p.indices) for p in matrix.profiles]

    inverted: list[list[int]] = [[] for _ in range(len(matrix.vocabulary))]
    for row, profile in enumerate(matrix.profiles):
        for pos in profile.indices:
            inverted[pos].append(row)
    # rows were appended in ascending row order, so each list is sorted and
    # every emitted pair (a, b) already has a < b

    if workers == 1 or len(inverted) == 0:
        counts = _pair_counts(inverted, 0, len(inverted))
    else:
        step = math.ceil(len(inverted) / workers)
        bounds = [
            (lo, min(lo + step, len(inverted)))
            for lo in range(0, len(inverted), step)
        ]
        counts = {}
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = pool.map(lambda b: _pair_counts(inverted, *b), bounds)
            for partial in partials:
                for key, c in partial.items():
                    counts[key] = counts.get(key, 0) + c

    rows: dict[int, dict[int, float]] = {u: {} for u in matrix.users}
    for (a, b), inter in counts.items():
        score = inter / math.sqrt(sizes[a] * sizes[b])
        ua, ub = matrix.users[a], matrix.users[b]
        rows[ua][ub] = score
        rows[ub][ua] = score
    assert n == len(rows)
    return SimilarityMatrix(matrix.users, rows)


@dataclass(frozen=True)
class NeighborSet:
    """Up to k most-similar other users, all with strictly positive score.

    Members are ordered by descending score, ties by ascending user handle.
    Zero-score users are never padded in, so a set may hold fewer than k.
    """

    owner: int
    members: Tuple[Tuple[int, float], ...]

    def member_ids(self) -> frozenset[int]:
        return frozenset(u for u, _ in self.members)

    def mean_score(self) -> float | None:
        if not self.members:
            return None
        return sum(s for _, s in self.members) / len(self.members)

    def __len__(self) -> int:
        return len(self.members)


def optimal_blogrolls(s: SimilarityMatrix, k: int) -> dict[int, NeighborSet]:
    """Top-k neighbor set for every user in the matrix population."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    out: dict[int, NeighborSet] = {}
    for u in s.users:
        candidates = [(v, sc) for v, sc in s.neighbors(u).items() if sc > 0.0]
        candidates.sort(key=lambda kv: (-kv[1], kv[0]))
        out[u] = NeighborSet(u, tuple(candidates[:k]))
    return out
