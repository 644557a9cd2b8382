"""File ingestion: label normalization, JSONL loaders, canonical writers.

All four input kinds are UTF-8 text.  The three relational files (posts,
assignments, blogroll) are newline-delimited JSON objects with fixed string
fields; the resource dictionary is one label per line.  Lines starting with
``#`` and blank lines are ignored everywhere.

Normalization makes the cross-site resource join well-defined: resource
labels from both sites are reduced to one canonical form before handles are
assigned, so equality on handles is equality of normalized labels.
"""

from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass, field, asdict
from pathlib import Path
from typing import IO, Iterable, Iterator

from .core import BlogrollGraph, Dataset, Interner

__all__ = [
    "NormalizationPolicy",
    "DEFAULT_POLICY",
    "normalize",
    "IngestError",
    "SkipReport",
    "LoadReport",
    "ResourceDictionary",
    "load_dictionary",
    "load_posts",
    "load_assignments",
    "load_blogroll",
    "load_dataset",
    "write_posts",
    "write_assignments",
    "write_blogroll",
    "write_dictionary",
    "write_dataset",
    "POSTS_FILE",
    "ASSIGNMENTS_FILE",
    "BLOGROLL_FILE",
    "DICTIONARY_FILE",
]

POSTS_FILE = "posts.jsonl"
ASSIGNMENTS_FILE = "assignments.jsonl"
BLOGROLL_FILE = "blogroll.jsonl"
DICTIONARY_FILE = "dictionary.txt"

# Normalized resource labels admitted as valid resources.  Entries are fixed
# points of the normalization policy by construction (see load_dictionary).
ResourceDictionary = frozenset


@dataclass(frozen=True)
class NormalizationPolicy:
    """Which label transforms to apply.  All three default on."""

    compatibility_normalize: bool = True  # Unicode NFKC
    case_fold: bool = True
    collapse_whitespace: bool = True  # trim + collapse runs to one space

    def __call__(self, label: str) -> str:
        return normalize(label, self)


DEFAULT_POLICY = NormalizationPolicy()

# casefold can denormalize NFKC output (and vice versa), so a single pass is
# not always a fixed point; iterate until stable.  Real labels converge in
# one or two passes.
_MAX_NORMALIZE_PASSES = 16


def normalize(label: str, policy: NormalizationPolicy = DEFAULT_POLICY) -> str:
    s = label
    for _ in range(_MAX_NORMALIZE_PASSES):
        before = s
        if policy.compatibility_normalize:
            s = unicodedata.normalize("NFKC", s)
        if policy.case_fold:
            s = s.casefold()
        if policy.collapse_whitespace:
            s = " ".join(s.split())
        if s == before:
            return s
    raise RuntimeError(f"normalization did not converge for {label!r}")


class IngestError(ValueError):
    """Malformed input file.  Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


@dataclass
class SkipReport:
    """Counts of records dropped (not errors) while loading one file."""

    duplicates: int = 0
    empty_labels: int = 0
    not_in_dictionary: int = 0
    self_loops: int = 0
    duplicate_edges: int = 0
    unknown_users_interned: int = 0
    unknown_users_skipped: int = 0

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


@dataclass
class LoadReport:
    posts: SkipReport = field(default_factory=SkipReport)
    assignments: SkipReport = field(default_factory=SkipReport)
    blogroll: SkipReport = field(default_factory=SkipReport)

    def as_dict(self) -> dict[str, dict[str, int]]:
        return {
            "posts": self.posts.as_dict(),
            "assignments": self.assignments.as_dict(),
            "blogroll": self.blogroll.as_dict(),
        }


def _data_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(lines, 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped


def _records(lines: Iterable[str], fields: tuple[str, ...]) -> Iterator[tuple[int, dict]]:
    for lineno, text in _data_lines(lines):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise IngestError(f"malformed record: {exc.msg}", line=lineno) from exc
        if not isinstance(obj, dict):
            raise IngestError("record is not an object", line=lineno)
        for name in fields:
            if name not in obj:
                raise IngestError(f"missing field {name!r}", line=lineno)
            if not isinstance(obj[name], str):
                raise IngestError(f"field {name!r} must be a string", line=lineno)
        yield lineno, obj


def load_dictionary(
    lines: Iterable[str], policy: NormalizationPolicy = DEFAULT_POLICY
) -> ResourceDictionary:
    entries = set()
    for _, text in _data_lines(lines):
        label = normalize(text, policy)
        if label:
            entries.add(label)
    return frozenset(entries)


def load_posts(
    lines: Iterable[str],
    users: Interner,
    resources: Interner,
    dictionary: ResourceDictionary | None = None,
    policy: NormalizationPolicy = DEFAULT_POLICY,
) -> tuple[frozenset[tuple[int, int]], SkipReport]:
    """Load (user, resource) pairs; filter against the dictionary if given.

    Records whose resource is not in the dictionary are counted and
    skipped, as are records with a field that normalizes to empty.
    Duplicates collapse (set semantics).
    """
    report = SkipReport()
    posts: set[tuple[int, int]] = set()
    for _, obj in _records(lines, ("user", "resource")):
        user_label = normalize(obj["user"], policy)
        resource_label = normalize(obj["resource"], policy)
        if not user_label or not resource_label:
            report.empty_labels += 1
            continue
        if dictionary is not None and resource_label not in dictionary:
            report.not_in_dictionary += 1
            continue
        pair = (users.intern(user_label), resources.intern(resource_label))
        if pair in posts:
            report.duplicates += 1
        else:
            posts.add(pair)
    return frozenset(posts), report


def load_assignments(
    lines: Iterable[str],
    users: Interner,
    tags: Interner,
    resources: Interner,
    policy: NormalizationPolicy = DEFAULT_POLICY,
) -> tuple[frozenset[tuple[int, int, int]], SkipReport]:
    """Load (user, tag, resource) triples.  No dictionary filtering here:
    the enrichment join performs the resource restriction."""
    report = SkipReport()
    triples: set[tuple[int, int, int]] = set()
    for _, obj in _records(lines, ("user", "tag", "resource")):
        user_label = normalize(obj["user"], policy)
        tag_label = normalize(obj["tag"], policy)
        resource_label = normalize(obj["resource"], policy)
        if not user_label or not tag_label or not resource_label:
            report.empty_labels += 1
            continue
        triple = (
            users.intern(user_label),
            tags.intern(tag_label),
            resources.intern(resource_label),
        )
        if triple in triples:
            report.duplicates += 1
        else:
            triples.add(triple)
    return frozenset(triples), report


def load_blogroll(
    lines: Iterable[str],
    users: Interner,
    known_users: frozenset[int],
    strict: bool = False,
    policy: NormalizationPolicy = DEFAULT_POLICY,
) -> tuple[BlogrollGraph, SkipReport]:
    """Load directed blogroll edges.

    Self-loops and duplicate edges are dropped and counted.  Edges naming a
    user outside ``known_users`` are interned as new profile-less users by
    default; with ``strict=True`` such edges are skipped instead.
    """
    report = SkipReport()
    nodes: set[int] = set(known_users)
    edges: set[tuple[int, int]] = set()

    def resolve(label: str) -> int | None:
        handle = users.lookup(label)
        if handle is not None and handle in nodes:
            return handle
        if strict:
            return None
        report.unknown_users_interned += 1
        handle = users.intern(label)
        nodes.add(handle)
        return handle

    for _, obj in _records(lines, ("source", "target")):
        src_label = normalize(obj["source"], policy)
        dst_label = normalize(obj["target"], policy)
        if not src_label or not dst_label:
            report.empty_labels += 1
            continue
        if src_label == dst_label:
            report.self_loops += 1
            continue
        src = resolve(src_label)
        dst = resolve(dst_label) if src is not None else None
        if src is None or dst is None:
            report.unknown_users_skipped += 1
            continue
        edge = (src, dst)
        if edge in edges:
            report.duplicate_edges += 1
        else:
            edges.add(edge)
    return BlogrollGraph(frozenset(nodes), frozenset(edges)), report


def _open_lines(path: str | Path) -> list[str]:
    return Path(path).read_text(encoding="utf-8").splitlines()


def load_dataset(
    posts_path: str | Path,
    assignments_path: str | Path,
    blogroll_path: str | Path | None = None,
    dictionary_path: str | Path | None = None,
    policy: NormalizationPolicy = DEFAULT_POLICY,
    strict: bool = False,
) -> tuple[Dataset, LoadReport]:
    """Load a full dataset from files.

    Load order is fixed (posts, blogroll, assignments) so handle assignment
    is deterministic.  A label that appears as a user on both sites breaks
    the two-site disjointness assumption and raises IngestError.
    """
    users = Interner(policy)
    tags = Interner(policy)
    resources = Interner(policy)
    report = LoadReport()

    dictionary = None
    if dictionary_path is not None:
        dictionary = load_dictionary(_open_lines(dictionary_path), policy)

    posts, report.posts = load_posts(
        _open_lines(posts_path), users, resources, dictionary, policy
    )
    in_domain = {u for u, _ in posts}

    if blogroll_path is not None:
        blogroll, report.blogroll = load_blogroll(
            _open_lines(blogroll_path), users, frozenset(in_domain), strict, policy
        )
        in_domain |= blogroll.nodes
    else:
        blogroll = BlogrollGraph(frozenset(in_domain), frozenset())

    assignments, report.assignments = load_assignments(
        _open_lines(assignments_path), users, tags, resources, policy
    )
    out_domain = {u for u, _, _ in assignments}

    overlap = in_domain & out_domain
    if overlap:
        labels = ", ".join(repr(users.label(u)) for u in sorted(overlap))
        raise IngestError(
            f"user labels appear on both sites (the user sets must be disjoint): {labels}"
        )

    dataset = Dataset(
        users=users,
        tags=tags,
        resources=resources,
        in_domain_users=frozenset(in_domain),
        out_domain_users=frozenset(out_domain),
        posts=posts,
        assignments=assignments,
        blogroll=blogroll,
    )
    return dataset, report


# ---------------------------------------------------------------------------
# Canonical writers.  Rows are sorted by label so the bytes are a pure
# function of the dataset content, independent of handle assignment; the
# same files reload to a semantically identical dataset.

def _dump(obj: dict) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True)


def write_posts_rows(rows: Iterable[tuple[str, str]], stream: IO[str]) -> None:
    for user, resource in sorted(set(rows)):
        stream.write(_dump({"user": user, "resource": resource}) + "\n")


def write_assignment_rows(rows: Iterable[tuple[str, str, str]], stream: IO[str]) -> None:
    for user, tag, resource in sorted(set(rows)):
        stream.write(_dump({"user": user, "tag": tag, "resource": resource}) + "\n")


def write_blogroll_rows(rows: Iterable[tuple[str, str]], stream: IO[str]) -> None:
    for source, target in sorted(set(rows)):
        stream.write(_dump({"source": source, "target": target}) + "\n")


def write_posts(dataset: Dataset, stream: IO[str]) -> None:
    write_posts_rows(
        (
            (dataset.users.label(u), dataset.resources.label(r))
            for u, r in dataset.posts
        ),
        stream,
    )


def write_assignments(dataset: Dataset, stream: IO[str]) -> None:
    write_assignment_rows(
        (
            (dataset.users.label(u), dataset.tags.label(t), dataset.resources.label(r))
            for u, t, r in dataset.assignments
        ),
        stream,
    )


def write_blogroll(dataset: Dataset, stream: IO[str]) -> None:
    write_blogroll_rows(
        (
            (dataset.users.label(s), dataset.users.label(d))
            for s, d in dataset.blogroll.edges
        ),
        stream,
    )


def write_dictionary(dictionary: Iterable[str], stream: IO[str]) -> None:
    for label in sorted(set(dictionary)):
        stream.write(label + "\n")


def write_dataset(
    dataset: Dataset,
    out_dir: str | Path,
    dictionary: ResourceDictionary | None = None,
) -> dict[str, Path]:
    """Write the dataset back to the four file formats under ``out_dir``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "posts": out / POSTS_FILE,
        "assignments": out / ASSIGNMENTS_FILE,
        "blogroll": out / BLOGROLL_FILE,
    }
    with paths["posts"].open("w", encoding="utf-8") as fh:
        write_posts(dataset, fh)
    with paths["assignments"].open("w", encoding="utf-8") as fh:
        write_assignments(dataset, fh)
    with paths["blogroll"].open("w", encoding="utf-8") as fh:
        write_blogroll(dataset, fh)
    if dictionary is not None:
        paths["dictionary"] = out / DICTIONARY_FILE
        with paths["dictionary"].open("w", encoding="utf-8") as fh:
            write_dictionary(dictionary, fh)
    return paths
