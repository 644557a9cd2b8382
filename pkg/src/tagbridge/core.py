"""Core data model for two-site social datasets.

A dataset couples an in-domain site (users who write posts about resources
and keep an explicit blogroll) with an out-of-domain site (users who tag
resources).  Users, tags and resources are interned to dense integer
handles; everything downstream (profiles, similarity matrices) indexes by
handle position.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

__all__ = [
    "EmptyLabelError",
    "Interner",
    "BlogrollGraph",
    "Dataset",
    "Violation",
    "validate",
]


class EmptyLabelError(ValueError):
    """Raised when a label normalizes to the empty string."""

    def __init__(self, raw: str):
        super().__init__(f"label {raw!r} is empty after normalization")
        self.raw = raw


class Interner:
    """Bijective mapping between normalized labels and dense 0-based handles.

    The normalizer is applied to every label on the way in, so two raw
    strings that normalize identically share one handle.  Handles are
    allocated in first-encounter order and are exactly ``{0..N-1}`` after
    N distinct labels.
    """

    __slots__ = ("_normalize", "_handle_by_label", "_labels")

    def __init__(self, normalizer: Callable[[str], str]):
        self._normalize = normalizer
        self._handle_by_label: dict[str, int] = {}
        self._labels: list[str] = []

    def intern(self, raw: str) -> int:
        label = self._normalize(raw)
        if not label:
            raise EmptyLabelError(raw)
        handle = self._handle_by_label.get(label)
        if handle is None:
            handle = len(self._labels)
            self._handle_by_label[label] = handle
            self._labels.append(label)
        return handle

    def lookup(self, raw: str) -> int | None:
        """Handle for a label if it was interned before, else None."""
        return self._handle_by_label.get(self._normalize(raw))

    def label(self, handle: int) -> str:
        return self._labels[handle]

    def labels(self) -> list[str]:
        return list(self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self) -> Iterator[int]:
        return iter(range(len(self._labels)))

    def __contains__(self, handle: int) -> bool:
        return 0 <= handle < len(self._labels)


@dataclass(frozen=True)
class BlogrollGraph:
    """Directed graph of explicit user->user links.

    Invariants (enforced by the loaders, checked by :func:`validate`):
    no self-loops, no duplicate edges, every endpoint in the node set.
    """

    nodes: frozenset[int]
    edges: frozenset[tuple[int, int]]

    def successors(self) -> dict[int, frozenset[int]]:
        """Explicit blogroll per user: node -> set of linked users."""
        out: dict[int, set[int]] = {u: set() for u in self.nodes}
        for src, dst in self.edges:
            out.setdefault(src, set()).add(dst)
        return {u: frozenset(vs) for u, vs in out.items()}

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Dataset:
    """One loaded two-site dataset.

    ``users`` is shared across both sites; the in-/out-of-domain split is a
    partition of its handles.  ``posts`` holds (user, resource) pairs from
    the in-domain site, ``assignments`` holds (user, tag, resource) triples
    from the out-of-domain site.
    """

    users: Interner
    tags: Interner
    resources: Interner
    in_domain_users: frozenset[int]
    out_domain_users: frozenset[int]
    posts: frozenset[tuple[int, int]]
    assignments: frozenset[tuple[int, int, int]]
    blogroll: BlogrollGraph = field(
        default_factory=lambda: BlogrollGraph(frozenset(), frozenset())
    )

    def user_label(self, handle: int) -> str:
        return self.users.label(handle)

    def tag_label(self, handle: int) -> str:
        return self.tags.label(handle)

    def resource_label(self, handle: int) -> str:
        return self.resources.label(handle)


@dataclass(frozen=True)
class Violation:
    """One breach of a dataset invariant.  Violations are data, not errors."""

    kind: str
    detail: str
    subject: tuple


def _check_handles(
    violations: list[Violation],
    kind: str,
    handles: Iterable[int],
    table: Interner,
    what: str,
) -> None:
    for h in handles:
        if h not in table:
            violations.append(
                Violation(kind, f"{what} handle {h} is not interned", (h,))
            )


def validate(dataset: Dataset) -> list[Violation]:
    """Check every dataset invariant; return one violation per breach.

    A dataset produced by the ingest loaders always validates clean.
    """
    v: list[Violation] = []

    overlap = dataset.in_domain_users & dataset.out_domain_users
    for u in sorted(overlap):
        v.append(
            Violation(
                "domain-overlap",
                f"user {dataset.users.label(u)!r} appears in both the "
                "in-domain and out-of-domain user sets",
                (u,),
            )
        )

    for u, r in sorted(dataset.posts):
        if u not in dataset.in_domain_users:
            v.append(
                Violation(
                    "post-user-not-in-domain",
                    f"post ({u}, {r}) references user {u} outside the in-domain set",
                    (u, r),
                )
            )
    for u, t, r in sorted(dataset.assignments):
        if u not in dataset.out_domain_users:
            v.append(
                Violation(
                    "assignment-user-not-out-domain",
                    f"assignment ({u}, {t}, {r}) references user {u} outside "
                    "the out-of-domain set",
                    (u, t, r),
                )
            )

    g = dataset.blogroll
    for src, dst in sorted(g.edges):
        if src == dst:
            v.append(
                Violation("self-loop", f"blogroll edge ({src}, {dst}) is a self-loop", (src, dst))
            )
        if src not in g.nodes or dst not in g.nodes:
            v.append(
                Violation(
                    "edge-endpoint-missing",
                    f"blogroll edge ({src}, {dst}) has an endpoint outside the node set",
                    (src, dst),
                )
            )

    _check_handles(v, "dangling-user", sorted(dataset.in_domain_users | dataset.out_domain_users | g.nodes), dataset.users, "user")
    _check_handles(v, "dangling-resource", sorted({r for _, r in dataset.posts} | {r for _, _, r in dataset.assignments}), dataset.resources, "resource")
    _check_handles(v, "dangling-tag", sorted({t for _, t, _ in dataset.assignments}), dataset.tags, "tag")

    return v
