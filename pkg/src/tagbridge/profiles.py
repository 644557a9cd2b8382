"""Binary user profiles over track and tag vocabularies.

A profile is a sparse row of a user-by-item 0/1 matrix: the sorted list of
vocabulary positions the user has.  Track profiles set a dimension when the
user posted about that resource; tag profiles set a dimension when the tag
reached the user through enrichment and the tag made the vocabulary cut.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Sequence, Tuple

from .core import Interner
from .enrich import EnrichedRelation

__all__ = [
    "Vocabulary",
    "UserProfile",
    "ProfileMatrix",
    "build_tag_vocabulary",
    "build_track_vocabulary",
    "build_track_profiles",
    "build_tag_profiles",
    "to_dense",
    "from_dense",
]

TRACK = "track"
TAG = "tag"


@dataclass(frozen=True, eq=True)
class Vocabulary:
    """Ordered item handles defining the profile dimensions.

    Tag vocabularies carry the popularity count per item and are ordered by
    descending count, ties broken by ascending label.  Track vocabularies
    are ordered by handle and carry no counts.
    """

    kind: str
    items: Tuple[int, ...]
    counts: Tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(
            self, "_position", {item: i for i, item in enumerate(self.items)}
        )

    def position(self, item: int) -> int | None:
        return self._position.get(item)  # type: ignore[attr-defined]

    def __len__(self) -> int:
        return len(self.items)


@dataclass(frozen=True)
class UserProfile:
    """Sparse binary vector: strictly increasing vocabulary positions."""

    user: int
    vocabulary: Vocabulary
    indices: Tuple[int, ...]

    @property
    def kind(self) -> str:
        return self.vocabulary.kind

    def __len__(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class ProfileMatrix:
    """One profile per user, in ascending user-handle order."""

    vocabulary: Vocabulary
    users: Tuple[int, ...]
    profiles: Tuple[UserProfile, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "_by_user", {p.user: p for p in self.profiles}
        )

    def profile(self, user: int) -> UserProfile:
        return self._by_user[user]  # type: ignore[attr-defined]

    def __len__(self) -> int:
        return len(self.users)


def build_tag_vocabulary(
    out_assignments: Iterable[tuple[int, int, int]],
    tags: Interner,
    cap: int,
) -> Vocabulary:
    """The ``cap`` most popular tags by raw out-of-domain assignment count.

    Popularity is counted over the raw assignment triples, before any join:
    it is a property of the out-of-domain site alone.  Ties break by
    ascending normalized label so the boundary cut is deterministic.
    """
    if cap < 1:
        raise ValueError(f"vocabulary cap must be >= 1, got {cap}")
    counts: dict[int, int] = {}
    for _, tag, _ in out_assignments:
        counts[tag] = counts.get(tag, 0) + 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], tags.label(kv[0])))
    ranked = ranked[:cap]
    return Vocabulary(
        kind=TAG,
        items=tuple(t for t, _ in ranked),
        counts=tuple(c for _, c in ranked),
    )


def build_track_vocabulary(posts: Iterable[tuple[int, int]]) -> Vocabulary:
    """All resources mentioned in posts, in handle order."""
    return Vocabulary(kind=TRACK, items=tuple(sorted({r for _, r in posts})))


def _matrix(
    vocabulary: Vocabulary,
    users: Sequence[int],
    items_by_user: dict[int, set[int]],
) -> ProfileMatrix:
    ordered = tuple(sorted(set(users)))
    profiles = []
    for user in ordered:
        positions = sorted(
            p
            for p in (vocabulary.position(i) for i in items_by_user.get(user, ()))
            if p is not None
        )
        profiles.append(UserProfile(user, vocabulary, tuple(positions)))
    return ProfileMatrix(vocabulary, ordered, tuple(profiles))


def build_track_profiles(
    posts: FrozenSet[tuple[int, int]] | set[tuple[int, int]],
    users: Sequence[int],
) -> ProfileMatrix:
    """Track profile per user: dimension set iff the user posted about it.

    ``users`` is the full in-domain population; users without posts get an
    empty profile rather than being dropped, because they still exist in
    the blogroll graph.
    """
    by_user: dict[int, set[int]] = {}
    for user, resource in posts:
        by_user.setdefault(user, set()).add(resource)
    return _matrix(build_track_vocabulary(posts), users, by_user)


def build_tag_profiles(
    enriched: EnrichedRelation,
    vocabulary: Vocabulary,
    users: Sequence[int],
) -> ProfileMatrix:
    """Tag profile per user from the enriched relation, vocabulary-limited."""
    if vocabulary.kind != TAG:
        raise ValueError(f"expected a tag vocabulary, got kind={vocabulary.kind!r}")
    by_user: dict[int, set[int]] = {}
    for user, tag, _ in enriched.assignments:
        by_user.setdefault(user, set()).add(tag)
    return _matrix(vocabulary, users, by_user)


def to_dense(profile: UserProfile) -> list[int]:
    row = [0] * len(profile.vocabulary)
    for i in profile.indices:
        row[i] = 1
    return row


def from_dense(user: int, vocabulary: Vocabulary, row: Sequence[int]) -> UserProfile:
    if len(row) != len(vocabulary):
        raise ValueError("dense row length does not match vocabulary size")
    return UserProfile(
        user, vocabulary, tuple(i for i, bit in enumerate(row) if bit)
    )
