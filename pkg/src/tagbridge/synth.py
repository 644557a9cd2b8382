"""Synthetic two-site datasets with planted community structure.

Each community of bloggers owns a pool of tracks and a genre tag pool.
Bloggers mostly post about their own community's tracks; listeners tag
tracks with the track's genre tags.  Tags therefore capture the genre
structure directly: two bloggers from one community overlap on nearly the
whole genre pool even when their track selections differ, which is exactly
the regime where tag profiles beat track profiles.  Explicit blogroll
edges are random (denser inside a community), so similarity-optimal
neighbor sets beat them on average.

Randomness comes from numpy's PCG64 (a 64-bit permutation-based generator
with a stable, documented stream), drawn in a fixed loop order, so a seed
fully determines the output bytes on every platform.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from .ingest import (
    ASSIGNMENTS_FILE,
    BLOGROLL_FILE,
    DICTIONARY_FILE,
    POSTS_FILE,
    write_assignment_rows,
    write_blogroll_rows,
    write_dictionary,
    write_posts_rows,
)

__all__ = ["SynthConfig", "GeneratedDataset", "generate", "generate_files", "MANIFEST_FILE"]

MANIFEST_FILE = "manifest.json"

# Fixture parameters used by the test suite and the demos: 4 communities of
# 25 bloggers each, seed 1729.
FIXTURE_SEED = 1729


@dataclass(frozen=True)
class SynthConfig:
    seed: int = FIXTURE_SEED
    communities: int = 4
    bloggers_per_community: int = 25
    tracks_per_community: int = 30
    p_mention_within: float = 0.25
    p_mention_across: float = 0.02
    listeners: int = 40
    tags_per_genre: int = 8
    p_tag_assignment: float = 0.2
    p_blogroll_within: float = 0.08
    p_blogroll_across: float = 0.02

    def check(self) -> None:
        for name in (
            "communities",
            "bloggers_per_community",
            "tracks_per_community",
            "listeners",
            "tags_per_genre",
        ):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name)}")
        for name in (
            "p_mention_within",
            "p_mention_across",
            "p_tag_assignment",
            "p_blogroll_within",
            "p_blogroll_across",
        ):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {p}")


@dataclass(frozen=True)
class GeneratedDataset:
    posts: tuple[tuple[str, str], ...]
    assignments: tuple[tuple[str, str, str], ...]
    blogroll: tuple[tuple[str, str], ...]
    dictionary: tuple[str, ...]
    manifest: dict


def _blogger(c: int, i: int) -> str:
    return f"blogger-c{c:02d}-{i:03d}"


def _track(c: int, t: int) -> str:
    return f"track-c{c:02d}-{t:03d}"


def _genre_tag(c: int, g: int) -> str:
    return f"genre-c{c:02d}-tag-{g:02d}"


def _listener(j: int) -> str:
    return f"listener-{j:03d}"


def generate(config: SynthConfig) -> GeneratedDataset:
    """Generate one dataset in memory.  Deterministic for a fixed seed."""
    config.check()
    rng = np.random.Generator(np.random.PCG64(config.seed))

    bloggers = [
        (c, i)
        for c in range(config.communities)
        for i in range(config.bloggers_per_community)
    ]
    tracks = [
        (c, t)
        for c in range(config.communities)
        for t in range(config.tracks_per_community)
    ]

    posts: list[tuple[str, str]] = []
    for bc, bi in bloggers:
        for tc, tt in tracks:
            p = config.p_mention_within if tc == bc else config.p_mention_across
            if rng.random() < p:
                posts.append((_blogger(bc, bi), _track(tc, tt)))

    assignments: list[tuple[str, str, str]] = []
    for tc, tt in tracks:
        for j in range(config.listeners):
            for g in range(config.tags_per_genre):
                if rng.random() < config.p_tag_assignment:
                    assignments.append(
                        (_listener(j), _genre_tag(tc, g), _track(tc, tt))
                    )

    blogroll: list[tuple[str, str]] = []
    for sc, si in bloggers:
        for dc, di in bloggers:
            if (sc, si) == (dc, di):
                continue
            p = config.p_blogroll_within if sc == dc else config.p_blogroll_across
            if rng.random() < p:
                blogroll.append((_blogger(sc, si), _blogger(dc, di)))

    dictionary = tuple(_track(c, t) for c, t in tracks)
    manifest = {
        "format_version": 1,
        "generator": {"algorithm": "PCG64", "seed": config.seed},
        "config": asdict(config),
        "counts": {
            "bloggers": len(bloggers),
            "listeners": config.listeners,
            "tracks": len(tracks),
            "tags": config.communities * config.tags_per_genre,
            "posts": len(posts),
            "assignments": len(assignments),
            "blogroll_edges": len(blogroll),
        },
    }
    return GeneratedDataset(
        posts=tuple(posts),
        assignments=tuple(assignments),
        blogroll=tuple(blogroll),
        dictionary=dictionary,
        manifest=manifest,
    )


def generate_files(config: SynthConfig, out_dir: str | Path) -> dict[str, Path]:
    """Generate and write the four ingest files plus a config manifest."""
    data = generate(config)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "posts": out / POSTS_FILE,
        "assignments": out / ASSIGNMENTS_FILE,
        "blogroll": out / BLOGROLL_FILE,
        "dictionary": out / DICTIONARY_FILE,
        "manifest": out / MANIFEST_FILE,
    }
    with paths["posts"].open("w", encoding="utf-8") as fh:
        write_posts_rows(data.posts, fh)
    with paths["assignments"].open("w", encoding="utf-8") as fh:
        write_assignment_rows(data.assignments, fh)
    with paths["blogroll"].open("w", encoding="utf-8") as fh:
        write_blogroll_rows(data.blogroll, fh)
    with paths["dictionary"].open("w", encoding="utf-8") as fh:
        write_dictionary(data.dictionary, fh)
    with paths["manifest"].open("w", encoding="utf-8") as fh:
        json.dump(data.manifest, fh, ensure_ascii=False, sort_keys=True, indent=2)
        fh.write("\n")
    return paths
