"""Blogroll quality metrics: explicit vs. optimal neighborhoods.

Compares the average profile similarity a user gets from their explicit
blogroll with the average their top-k neighbor set would give, reports the
relative improvement and the overlap between the two, bins the score
populations into similarity histograms, and measures how strongly the
track-based and tag-based neighbor sets agree with each other.

Averaging conventions: a user with an empty explicit blogroll has no
explicit score (excluded from the explicit population mean, not counted as
zero); likewise for an empty neighbor set.  The overlap probability is the
fraction of the whole population whose explicit and optimal sets share at
least one member.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Mapping, Tuple

from .core import BlogrollGraph
from .similarity import NeighborSet, SimilarityMatrix

__all__ = [
    "avg_blogroll_similarity",
    "BlogrollQualityReport",
    "quality_report",
    "Histogram",
    "similarity_histograms",
    "IntersectionDistribution",
    "blogroll_agreement",
]


def avg_blogroll_similarity(
    user: int, roll: Iterable[int], s: SimilarityMatrix
) -> float | None:
    """Mean similarity between a user and their blogroll members.

    None (undefined, excluded from population averages) for an empty roll.
    The user appearing in their own roll is self-loop leakage and raises.
    """
    members = sorted(set(roll))
    if user in members:
        raise ValueError(f"user {user} appears in their own blogroll")
    if not members:
        return None
    return sum(s.score(user, v) for v in members) / len(members)


def _mean(values: list[float]) -> float | None:
    return sum(values) / len(values) if values else None


@dataclass(frozen=True)
class BlogrollQualityReport:
    users: Tuple[int, ...]
    explicit_scores: Mapping[int, float | None]
    optimal_scores: Mapping[int, float | None]
    avg_sim_explicit: float | None
    avg_sim_optimal: float | None
    improvement_pct: float | None
    avg_overlap: float | None
    overlap_probability: float
    users_with_explicit: int
    users_with_optimal: int
    users_with_overlap: int

    def as_dict(self) -> dict:
        return {
            "avg_sim_explicit": self.avg_sim_explicit,
            "avg_sim_optimal": self.avg_sim_optimal,
            "improvement_pct": self.improvement_pct,
            "avg_overlap_when_nonempty": self.avg_overlap,
            "overlap_probability": self.overlap_probability,
            "users_total": len(self.users),
            "users_with_explicit_blogroll": self.users_with_explicit,
            "users_with_optimal_blogroll": self.users_with_optimal,
            "users_with_nonempty_overlap": self.users_with_overlap,
        }


def quality_report(
    blogroll: BlogrollGraph,
    optimal: Mapping[int, NeighborSet],
    s: SimilarityMatrix,
) -> BlogrollQualityReport:
    """Population-level comparison of explicit and optimal blogrolls.

    The population is the similarity matrix's user set; ``optimal`` must
    come from the same matrix.  Improvement is the relative gain of the
    optimal population mean over the explicit one, in percent.
    """
    successors = blogroll.successors()
    explicit_scores: dict[int, float | None] = {}
    optimal_scores: dict[int, float | None] = {}
    overlap_sizes: list[int] = []

    for u in s.users:
        roll = successors.get(u, frozenset())
        explicit_scores[u] = avg_blogroll_similarity(u, roll, s)
        neighbor_set = optimal.get(u)
        members = neighbor_set.members if neighbor_set is not None else ()
        optimal_scores[u] = (
            sum(sc for _, sc in members) / len(members) if members else None
        )
        overlap_sizes.append(len(roll & {v for v, _ in members}))

    explicit_population = [x for x in explicit_scores.values() if x is not None]
    optimal_population = [x for x in optimal_scores.values() if x is not None]
    avg_explicit = _mean(explicit_population)
    avg_optimal = _mean(optimal_population)

    improvement = None
    if avg_explicit is not None and avg_optimal is not None and avg_explicit > 0:
        improvement = (avg_optimal - avg_explicit) / avg_explicit * 100.0

    nonempty = [n for n in overlap_sizes if n > 0]
    return BlogrollQualityReport(
        users=s.users,
        explicit_scores=explicit_scores,
        optimal_scores=optimal_scores,
        avg_sim_explicit=avg_explicit,
        avg_sim_optimal=avg_optimal,
        improvement_pct=improvement,
        avg_overlap=_mean([float(n) for n in nonempty]),
        overlap_probability=(len(nonempty) / len(s.users)) if s.users else 0.0,
        users_with_explicit=len(explicit_population),
        users_with_optimal=len(optimal_population),
        users_with_overlap=len(nonempty),
    )


@dataclass(frozen=True)
class Histogram:
    """Equal-width bins over [0, 1]; the last bin is closed at 1.0."""

    bin_width: float
    counts: Tuple[int, ...]

    @property
    def cumulative(self) -> Tuple[int, ...]:
        return tuple(accumulate(self.counts))

    @property
    def total(self) -> int:
        return sum(self.counts)

    def edges(self) -> list[tuple[float, float]]:
        n = len(self.counts)
        return [(i / n, (i + 1) / n) for i in range(n)]

    def fraction_at_or_above(self, threshold: float) -> float:
        """Fraction of scores in bins whose left edge is >= threshold."""
        if self.total == 0:
            return 0.0
        n = len(self.counts)
        first = math.ceil(threshold * n - 1e-9)
        return sum(self.counts[max(first, 0):]) / self.total

    def as_dict(self) -> dict:
        return {
            "bin_width": self.bin_width,
            "bins": [
                {"start": lo, "end": hi, "count": c, "cumulative": cum}
                for (lo, hi), c, cum in zip(
                    self.edges(), self.counts, self.cumulative
                )
            ],
        }


def _bin_count(bin_width: float) -> int:
    if not 0 < bin_width <= 1:
        raise ValueError(f"bin width must be in (0, 1], got {bin_width}")
    n = round(1.0 / bin_width)
    if abs(n * bin_width - 1.0) > 1e-9:
        raise ValueError(f"bin width {bin_width} does not divide 1 evenly")
    return n


def histogram(scores: Iterable[float], bin_width: float = 0.1) -> Histogram:
    n = _bin_count(bin_width)
    counts = [0] * n
    for x in scores:
        if not 0.0 <= x <= 1.0:
            raise ValueError(f"similarity score {x} outside [0, 1]")
        # bin edges are the exact doubles i/n; the top bin absorbs 1.0
        idx = min(int(x * n), n - 1)
        while idx > 0 and x < idx / n:
            idx -= 1
        while idx < n - 1 and x >= (idx + 1) / n:
            idx += 1
        counts[idx] += 1
    return Histogram(bin_width, tuple(counts))


def similarity_histograms(
    explicit_scores: Iterable[float],
    optimal_scores: Iterable[float],
    bin_width: float = 0.1,
) -> tuple[Histogram, Histogram]:
    """Bin the explicit and optimal per-user score populations."""
    return (
        histogram(explicit_scores, bin_width),
        histogram(optimal_scores, bin_width),
    )


@dataclass(frozen=True)
class IntersectionDistribution:
    """How often two neighbor-set families share members, per user."""

    size_counts: Tuple[int, ...]  # index = intersection size, 0..k
    agreement_fraction: float  # users sharing at least one member
    mean_overlap: float | None  # mean size over agreeing users

    @property
    def users_total(self) -> int:
        return sum(self.size_counts)

    def as_dict(self) -> dict:
        return {
            "size_counts": list(self.size_counts),
            "agreement_fraction": self.agreement_fraction,
            "mean_overlap_when_agreeing": self.mean_overlap,
            "users_total": self.users_total,
        }


def blogroll_agreement(
    a: Mapping[int, NeighborSet],
    b: Mapping[int, NeighborSet],
    k: int | None = None,
) -> IntersectionDistribution:
    """Distribution of |a_u ∩ b_u| over a shared user population."""
    if set(a.keys()) != set(b.keys()):
        raise ValueError("neighbor-set families cover different user populations")
    if k is None:
        k = max((len(ns) for ns in list(a.values()) + list(b.values())), default=0)
    sizes = [len(a[u].member_ids() & b[u].member_ids()) for u in sorted(a)]
    counts = [0] * (k + 1)
    for n in sizes:
        counts[n] += 1
    agreeing = [n for n in sizes if n > 0]
    return IntersectionDistribution(
        size_counts=tuple(counts),
        agreement_fraction=(len(agreeing) / len(sizes)) if sizes else 0.0,
        mean_overlap=_mean([float(n) for n in agreeing]),
    )
