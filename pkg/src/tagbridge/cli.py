"""Command-line driver for the full pipeline.

Subcommands mirror the pipeline stages: ``synth`` writes a dataset,
``enrich``/``profiles``/``similarity``/``evaluate``/``stats`` each read the
dataset files (plus, for evaluate, the similarity stage's outputs) and
write their documented artifacts, ``export-bundle`` folds a finished run
into one JSON document for the explorer, and ``serve`` exposes that bundle
plus the explorer's static assets over HTTP.

All outputs are deterministic: rows sort by label, floats are rounded to
six decimal places, and nothing embeds a timestamp, so a rerun on the same
inputs is byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import errno
import json
import sys
from dataclasses import dataclass
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from importlib import resources
from pathlib import Path
from typing import Mapping

from .core import Dataset
from .enrich import EnrichedRelation, enrich
from .evaluate import (
    Histogram,
    blogroll_agreement,
    quality_report,
    similarity_histograms,
)
from .ingest import IngestError, LoadReport, load_dataset
from .profiles import (
    ProfileMatrix,
    Vocabulary,
    build_tag_profiles,
    build_tag_vocabulary,
    build_track_profiles,
)
from .similarity import NeighborSet, SimilarityMatrix, optimal_blogrolls, similarity_matrix
from .synth import SynthConfig, generate_files

__all__ = ["main", "run_pipeline", "PipelineArtifacts", "BUNDLE_FORMAT_VERSION"]

BUNDLE_FORMAT_VERSION = 1

ENRICHED_FILE = "enriched.jsonl"
ENRICH_REPORT_FILE = "enrich_report.json"
TRACK_PROFILES_FILE = "track_profiles.jsonl"
TAG_PROFILES_FILE = "tag_profiles.jsonl"
TAG_VOCABULARY_FILE = "tag_vocabulary.jsonl"
MATRIX_TRACK_FILE = "similarity_track.jsonl"
MATRIX_TAG_FILE = "similarity_tag.jsonl"
OPTIMAL_TRACK_FILE = "optimal_track.jsonl"
OPTIMAL_TAG_FILE = "optimal_tag.jsonl"
RUN_PARAMS_FILE = "run_params.json"
EVAL_REPORT_FILE = "report.json"
HIST_TRACK_FILE = "histogram_track.csv"
HIST_TAG_FILE = "histogram_tag.csv"
STATS_FILE = "graph_stats.json"
BUNDLE_FILE = "bundle.json"


# ---------------------------------------------------------------------------
# In-memory pipeline


@dataclass
class PipelineArtifacts:
    dataset: Dataset
    load_report: LoadReport
    enriched: EnrichedRelation
    tag_vocabulary: Vocabulary
    track_profiles: ProfileMatrix
    tag_profiles: ProfileMatrix
    track_similarity: SimilarityMatrix
    tag_similarity: SimilarityMatrix
    optimal_track: dict[int, NeighborSet]
    optimal_tag: dict[int, NeighborSet]
    k: int
    tag_cap: int


def _build_profiles(dataset: Dataset, tag_cap: int):
    users = sorted(dataset.in_domain_users)
    enriched = enrich(dataset.posts, dataset.assignments)
    vocab = build_tag_vocabulary(dataset.assignments, dataset.tags, tag_cap)
    track_matrix = build_track_profiles(dataset.posts, users)
    tag_matrix = build_tag_profiles(enriched, vocab, users)
    return enriched, vocab, track_matrix, tag_matrix


def run_pipeline(
    dataset: Dataset,
    load_report: LoadReport | None = None,
    tag_cap: int = 20000,
    k: int = 10,
    workers: int = 1,
) -> PipelineArtifacts:
    """Dataset -> enrichment -> profiles -> similarity -> neighbor sets."""
    enriched, vocab, track_matrix, tag_matrix = _build_profiles(dataset, tag_cap)
    track_sim = similarity_matrix(track_matrix, workers=workers)
    tag_sim = similarity_matrix(tag_matrix, workers=workers)
    return PipelineArtifacts(
        dataset=dataset,
        load_report=load_report or LoadReport(),
        enriched=enriched,
        tag_vocabulary=vocab,
        track_profiles=track_matrix,
        tag_profiles=tag_matrix,
        track_similarity=track_sim,
        tag_similarity=tag_sim,
        optimal_track=optimal_blogrolls(track_sim, k),
        optimal_tag=optimal_blogrolls(tag_sim, k),
        k=k,
        tag_cap=tag_cap,
    )


# ---------------------------------------------------------------------------
# Serialization helpers


def _round6(value):
    if isinstance(value, float):
        return round(value, 6)
    if isinstance(value, dict):
        return {k: _round6(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round6(v) for v in value]
    return value


def _dump_json(obj, path: Path) -> None:
    path.write_text(
        json.dumps(_round6(obj), ensure_ascii=False, sort_keys=True, indent=2) + "\n",
        encoding="utf-8",
    )


def _write_jsonl(rows, path: Path) -> None:
    with path.open("w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(_round6(row), ensure_ascii=False, sort_keys=True) + "\n")


def _read_jsonl(path: Path) -> list[dict]:
    rows = []
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        try:
            rows.append(json.loads(text))
        except json.JSONDecodeError as exc:
            raise IngestError(f"malformed record in {path.name}: {exc.msg}", line=lineno)
    return rows


def _require(path: Path, what: str) -> Path:
    if not path.exists():
        raise FileNotFoundError(f"{what} not found: {path}")
    return path


def _profile_rows(matrix: ProfileMatrix, dataset: Dataset, label_of) -> list[dict]:
    rows = []
    for profile in matrix.profiles:
        items = [label_of(matrix.vocabulary.items[i]) for i in profile.indices]
        rows.append(
            {
                "user": dataset.users.label(profile.user),
                "kind": matrix.vocabulary.kind,
                "items": items,
            }
        )
    rows.sort(key=lambda r: r["user"])
    return rows


def _matrix_rows(s: SimilarityMatrix, dataset: Dataset) -> list[dict]:
    rows = []
    for u in s.users:
        for v, score in s.neighbors(u).items():
            if u < v:
                a, b = sorted((dataset.users.label(u), dataset.users.label(v)))
                rows.append({"a": a, "b": b, "score": score})
    rows.sort(key=lambda r: (r["a"], r["b"]))
    return rows


def _neighbor_rows(optimal: Mapping[int, NeighborSet], dataset: Dataset) -> list[dict]:
    rows = []
    for u in sorted(optimal, key=dataset.users.label):
        rows.append(
            {
                "user": dataset.users.label(u),
                "members": [
                    {"label": dataset.users.label(v), "score": score}
                    for v, score in optimal[u].members
                ],
            }
        )
    return rows


def _histogram_csv(explicit: Histogram, optimal: Histogram, path: Path) -> None:
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["bin_start", "bin_end", "explicit_count", "explicit_cumulative",
             "optimal_count", "optimal_cumulative"]
        )
        exp_cum = explicit.cumulative
        opt_cum = optimal.cumulative
        for i, (lo, hi) in enumerate(explicit.edges()):
            writer.writerow(
                [f"{lo:.6f}", f"{hi:.6f}", explicit.counts[i], exp_cum[i],
                 optimal.counts[i], opt_cum[i]]
            )


# ---------------------------------------------------------------------------
# Dataset loading shared by the commands


def _load_from_args(args, need_blogroll: bool = False) -> tuple[Dataset, LoadReport]:
    posts = _require(Path(args.posts), "posts file")
    assignments = _require(Path(args.assignments), "assignments file")
    blogroll = getattr(args, "blogroll", None)
    if need_blogroll and blogroll is None:
        raise FileNotFoundError("a blogroll file is required for this command")
    if blogroll is not None:
        blogroll = _require(Path(blogroll), "blogroll file")
    dictionary = getattr(args, "dictionary", None)
    if dictionary is not None:
        dictionary = _require(Path(dictionary), "dictionary file")
    return load_dataset(
        posts_path=posts,
        assignments_path=assignments,
        blogroll_path=blogroll,
        dictionary_path=dictionary,
        strict=getattr(args, "strict", False),
    )


def _out_dir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


# ---------------------------------------------------------------------------
# Commands


def cmd_synth(args) -> int:
    config = SynthConfig(
        seed=args.seed,
        communities=args.communities,
        bloggers_per_community=args.bloggers_per_community,
        tracks_per_community=args.tracks_per_community,
        p_mention_within=args.p_mention_within,
        p_mention_across=args.p_mention_across,
        listeners=args.listeners,
        tags_per_genre=args.tags_per_genre,
        p_tag_assignment=args.p_tag_assignment,
        p_blogroll_within=args.p_blogroll_within,
        p_blogroll_across=args.p_blogroll_across,
    )
    paths = generate_files(config, _out_dir(args))
    print(f"wrote {len(paths)} files to {args.out}")
    return 0


def cmd_enrich(args) -> int:
    dataset, load_report = _load_from_args(args)
    enriched = enrich(dataset.posts, dataset.assignments)
    out = _out_dir(args)
    rows = [
        {
            "user": dataset.users.label(u),
            "tag": dataset.tags.label(t),
            "resource": dataset.resources.label(r),
        }
        for u, t, r in enriched.assignments
    ]
    rows.sort(key=lambda r: (r["user"], r["tag"], r["resource"]))
    _write_jsonl(rows, out / ENRICHED_FILE)
    _dump_json(
        {
            "format_version": 1,
            "counters": {
                "joined_resources": enriched.joined_resources,
                "unmatched_in_domain_resources": enriched.unmatched_in_domain_resources,
                "unmatched_out_domain_resources": enriched.unmatched_out_domain_resources,
                "out_assignment_total": enriched.out_assignment_total,
                "out_distinct_tags": enriched.out_distinct_tags,
                "enriched_triples": len(enriched.assignments),
                "enriched_users": len(enriched.users),
            },
            "skips": load_report.as_dict(),
        },
        out / ENRICH_REPORT_FILE,
    )
    print(f"enriched {len(enriched.assignments)} triples onto {len(enriched.users)} users")
    return 0


def cmd_profiles(args) -> int:
    dataset, _ = _load_from_args(args)
    _, vocab, track_matrix, tag_matrix = _build_profiles(dataset, args.tag_cap)
    out = _out_dir(args)
    _write_jsonl(
        _profile_rows(track_matrix, dataset, dataset.resources.label),
        out / TRACK_PROFILES_FILE,
    )
    _write_jsonl(
        _profile_rows(tag_matrix, dataset, dataset.tags.label),
        out / TAG_PROFILES_FILE,
    )
    vocab_rows = [
        {"label": dataset.tags.label(t), "count": c}
        for t, c in zip(vocab.items, vocab.counts or ())
    ]
    _write_jsonl(vocab_rows, out / TAG_VOCABULARY_FILE)
    print(
        f"profiled {len(track_matrix)} users "
        f"({len(track_matrix.vocabulary)} tracks, {len(vocab)} tags in vocabulary)"
    )
    return 0


def cmd_similarity(args) -> int:
    if args.k < 1:
        raise ValueError(f"--k must be >= 1, got {args.k}")
    dataset, load_report = _load_from_args(args)
    arts = run_pipeline(
        dataset, load_report, tag_cap=args.tag_cap, k=args.k, workers=args.workers
    )
    out = _out_dir(args)
    _write_jsonl(_matrix_rows(arts.track_similarity, dataset), out / MATRIX_TRACK_FILE)
    _write_jsonl(_matrix_rows(arts.tag_similarity, dataset), out / MATRIX_TAG_FILE)
    _write_jsonl(_neighbor_rows(arts.optimal_track, dataset), out / OPTIMAL_TRACK_FILE)
    _write_jsonl(_neighbor_rows(arts.optimal_tag, dataset), out / OPTIMAL_TAG_FILE)
    _dump_json(
        {"format_version": 1, "k": args.k, "tag_cap": args.tag_cap},
        out / RUN_PARAMS_FILE,
    )
    print(
        f"similarity over {len(dataset.in_domain_users)} users: "
        f"{arts.track_similarity.entry_count()} track pairs, "
        f"{arts.tag_similarity.entry_count()} tag pairs"
    )
    return 0


def _matrix_from_file(path: Path, dataset: Dataset) -> SimilarityMatrix:
    users = tuple(sorted(dataset.in_domain_users))
    rows: dict[int, dict[int, float]] = {u: {} for u in users}
    for row in _read_jsonl(path):
        a = dataset.users.lookup(row["a"])
        b = dataset.users.lookup(row["b"])
        if a is None or b is None:
            raise IngestError(
                f"{path.name} references a user missing from the dataset: "
                f"{row['a'] if a is None else row['b']!r}"
            )
        score = float(row["score"])
        rows[a][b] = score
        rows[b][a] = score
    return SimilarityMatrix(users, rows)


def _neighbors_from_file(path: Path, dataset: Dataset) -> dict[int, NeighborSet]:
    out: dict[int, NeighborSet] = {}
    for row in _read_jsonl(path):
        u = dataset.users.lookup(row["user"])
        if u is None:
            raise IngestError(
                f"{path.name} references a user missing from the dataset: {row['user']!r}"
            )
        members = []
        for m in row["members"]:
            v = dataset.users.lookup(m["label"])
            if v is None:
                raise IngestError(
                    f"{path.name} references a user missing from the dataset: {m['label']!r}"
                )
            members.append((v, float(m["score"])))
        out[u] = NeighborSet(u, tuple(members))
    return out


def _quality_section(report, histogram_pair: tuple[Histogram, Histogram]) -> dict:
    explicit_hist, optimal_hist = histogram_pair
    section = report.as_dict()
    section["share_above_half_explicit"] = explicit_hist.fraction_at_or_above(0.5)
    section["share_above_half_optimal"] = optimal_hist.fraction_at_or_above(0.5)
    section["histogram_explicit"] = explicit_hist.as_dict()
    section["histogram_optimal"] = optimal_hist.as_dict()
    return section


def cmd_evaluate(args) -> int:
    dataset, _ = _load_from_args(args, need_blogroll=True)
    sim_dir = Path(args.similarity)
    matrices = {}
    optimal = {}
    for kind, matrix_file, optimal_file in (
        ("track", MATRIX_TRACK_FILE, OPTIMAL_TRACK_FILE),
        ("tag", MATRIX_TAG_FILE, OPTIMAL_TAG_FILE),
    ):
        matrices[kind] = _matrix_from_file(
            _require(sim_dir / matrix_file, f"{kind} similarity output"), dataset
        )
        optimal[kind] = _neighbors_from_file(
            _require(sim_dir / optimal_file, f"{kind} neighbor output"), dataset
        )

    out = _out_dir(args)
    sections = {}
    for kind in ("track", "tag"):
        report = quality_report(dataset.blogroll, optimal[kind], matrices[kind])
        hists = similarity_histograms(
            [x for x in report.explicit_scores.values() if x is not None],
            [x for x in report.optimal_scores.values() if x is not None],
            bin_width=args.bin_width,
        )
        sections[kind] = _quality_section(report, hists)
        _histogram_csv(
            hists[0], hists[1],
            out / (HIST_TRACK_FILE if kind == "track" else HIST_TAG_FILE),
        )

    agreement = blogroll_agreement(optimal["track"], optimal["tag"])
    _dump_json(
        {
            "format_version": 1,
            "parameters": {"bin_width": args.bin_width},
            "track": sections["track"],
            "tag": sections["tag"],
            "agreement": agreement.as_dict(),
        },
        out / EVAL_REPORT_FILE,
    )
    print(
        "evaluate: track improvement "
        f"{_fmt_pct(sections['track']['improvement_pct'])}, tag improvement "
        f"{_fmt_pct(sections['tag']['improvement_pct'])}"
    )
    return 0


def _fmt_pct(x) -> str:
    return "n/a" if x is None else f"{x:.1f}%"


def cmd_stats(args) -> int:
    from .core import Interner
    from .graphstats import summarize_graph
    from .ingest import DEFAULT_POLICY, load_blogroll, load_posts

    blogroll_path = _require(Path(args.blogroll), "blogroll file")
    users = Interner(DEFAULT_POLICY)
    known: frozenset[int] = frozenset()
    if args.posts:
        resources = Interner(DEFAULT_POLICY)
        posts, _ = load_posts(
            Path(args.posts).read_text(encoding="utf-8").splitlines(),
            users,
            resources,
        )
        known = frozenset(u for u, _ in posts)
    graph, _ = load_blogroll(
        blogroll_path.read_text(encoding="utf-8").splitlines(),
        users,
        known,
        strict=False,
    )
    report = summarize_graph(graph, top=args.top)
    out = _out_dir(args)
    _dump_json({"format_version": 1, **report.as_dict()}, out / STATS_FILE)
    s = report.summary
    print(
        f"graph: {s.nodes} nodes, {s.edges} edges, {s.weak_components} weak "
        f"components (max {s.max_component_size}), {s.reciprocal_pairs} reciprocal pairs"
    )
    return 0


def cmd_export_bundle(args) -> int:
    dataset, _ = _load_from_args(args, need_blogroll=True)
    run = Path(args.run)
    track_profiles = _read_jsonl(_require(run / TRACK_PROFILES_FILE, "track profiles output"))
    tag_profiles = _read_jsonl(_require(run / TAG_PROFILES_FILE, "tag profiles output"))
    vocab_rows = _read_jsonl(_require(run / TAG_VOCABULARY_FILE, "tag vocabulary output"))
    optimal_track = _read_jsonl(_require(run / OPTIMAL_TRACK_FILE, "track neighbor output"))
    optimal_tag = _read_jsonl(_require(run / OPTIMAL_TAG_FILE, "tag neighbor output"))
    params = json.loads(_require(run / RUN_PARAMS_FILE, "run parameters").read_text(encoding="utf-8"))
    report = json.loads(_require(run / EVAL_REPORT_FILE, "evaluation report").read_text(encoding="utf-8"))

    in_domain_labels = sorted(dataset.users.label(u) for u in dataset.in_domain_users)
    for name, rows, key in (
        (TRACK_PROFILES_FILE, track_profiles, "user"),
        (TAG_PROFILES_FILE, tag_profiles, "user"),
        (OPTIMAL_TRACK_FILE, optimal_track, "user"),
        (OPTIMAL_TAG_FILE, optimal_tag, "user"),
    ):
        file_users = sorted(row[key] for row in rows)
        if file_users != in_domain_labels:
            raise IngestError(
                f"{name} covers a different user set than the dataset "
                f"({len(file_users)} vs {len(in_domain_labels)} users)"
            )

    mentions: dict[int, int] = {}
    for _, r in dataset.posts:
        mentions[r] = mentions.get(r, 0) + 1
    tracks_by_user = {row["user"]: row["items"] for row in track_profiles}
    tags_by_user = {row["user"]: row["items"] for row in tag_profiles}

    nodes = []
    for label in in_domain_labels:
        track_items = []
        for item in tracks_by_user[label]:
            handle = dataset.resources.lookup(item)
            track_items.append(
                {"label": item, "popularity": mentions.get(handle, 0) if handle is not None else 0}
            )
        track_items.sort(key=lambda t: (-t["popularity"], t["label"]))
        nodes.append(
            {
                "user": label,
                "tracks": track_items,
                "tags": sorted(tags_by_user[label]),
            }
        )

    explicit_edges = sorted(
        {
            (dataset.users.label(s), dataset.users.label(d))
            for s, d in dataset.blogroll.edges
        }
    )

    def layer(rows: list[dict]) -> list[dict]:
        edges = []
        for row in rows:
            for m in row["members"]:
                edges.append(
                    {"source": row["user"], "target": m["label"], "score": m["score"]}
                )
        edges.sort(key=lambda e: (e["source"], e["target"]))
        return edges

    bundle = {
        "format_version": BUNDLE_FORMAT_VERSION,
        "parameters": {
            "k": params["k"],
            "tag_cap": params["tag_cap"],
            "bin_width": report.get("parameters", {}).get("bin_width"),
        },
        "nodes": nodes,
        "explicit_edges": [{"source": s, "target": t} for s, t in explicit_edges],
        "optimal_track_edges": layer(optimal_track),
        "optimal_tag_edges": layer(optimal_tag),
        "tag_vocabulary": vocab_rows,
        "report": report,
    }
    out = _out_dir(args)
    _dump_json(bundle, out / BUNDLE_FILE)
    print(f"bundle: {len(nodes)} nodes, {len(explicit_edges)} explicit edges")
    return 0


# ---------------------------------------------------------------------------
# Serving


def _default_ui_dir() -> Path:
    return Path(str(resources.files("tagbridge") / "static"))


_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".mjs": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json",
    ".svg": "image/svg+xml",
    ".map": "application/json",
    ".ico": "image/x-icon",
}


def _make_handler(bundle_path: Path, ui_root: Path):
    class Handler(BaseHTTPRequestHandler):
        def log_message(self, *_args):  # quiet by default
            pass

        def _send(self, status: int, content_type: str, body: bytes) -> None:
            self.send_response(status)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def _not_found(self) -> None:
            self._send(404, "text/plain; charset=utf-8", b"not found\n")

        def do_GET(self) -> None:
            path = self.path.split("?", 1)[0]
            if path == "/bundle":
                self._send(200, "application/json", bundle_path.read_bytes())
                return
            rel = "index.html" if path == "/" else path.lstrip("/")
            candidate = (ui_root / rel).resolve()
            root = ui_root.resolve()
            if root not in candidate.parents and candidate != root:
                self._not_found()
                return
            if not candidate.is_file():
                self._not_found()
                return
            content_type = _CONTENT_TYPES.get(candidate.suffix, "application/octet-stream")
            self._send(200, content_type, candidate.read_bytes())

    return Handler


def make_server(bundle_path: Path, port: int, ui_dir: Path | None = None) -> ThreadingHTTPServer:
    """Bind the explorer server (callers run serve_forever themselves)."""
    root = ui_dir if ui_dir is not None else _default_ui_dir()
    handler = _make_handler(bundle_path, root)
    return ThreadingHTTPServer(("127.0.0.1", port), handler)


def cmd_serve(args) -> int:
    bundle_path = _require(Path(args.bundle), "bundle file")
    ui_dir = Path(args.ui_dir) if args.ui_dir else None
    if ui_dir is not None:
        _require(ui_dir, "ui directory")
    try:
        server = make_server(bundle_path, args.port, ui_dir)
    except OSError as exc:
        if exc.errno in (errno.EADDRINUSE, errno.EACCES):
            print(f"error: cannot bind port {args.port}: {exc}", file=sys.stderr)
            return 2
        raise
    host, port = server.server_address[:2]
    print(f"serving on http://{host}:{port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


# ---------------------------------------------------------------------------
# Parser


def _add_dataset_args(p: argparse.ArgumentParser, blogroll_required: bool = False) -> None:
    p.add_argument("--posts", required=True, help="posts file (JSONL: user, resource)")
    p.add_argument(
        "--assignments", required=True, help="assignments file (JSONL: user, tag, resource)"
    )
    p.add_argument(
        "--blogroll",
        required=blogroll_required,
        default=None,
        help="blogroll file (JSONL: source, target)",
    )
    p.add_argument("--dictionary", default=None, help="resource dictionary (one label per line)")
    p.add_argument(
        "--strict",
        action="store_true",
        help="skip blogroll edges naming unknown users instead of adding them",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tagbridge",
        description="Cross-site tag propagation and blogroll quality analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="generate a synthetic two-site dataset")
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=SynthConfig().seed)
    p.add_argument("--communities", type=int, default=SynthConfig().communities)
    p.add_argument(
        "--bloggers-per-community", type=int, default=SynthConfig().bloggers_per_community
    )
    p.add_argument(
        "--tracks-per-community", type=int, default=SynthConfig().tracks_per_community
    )
    p.add_argument("--p-mention-within", type=float, default=SynthConfig().p_mention_within)
    p.add_argument("--p-mention-across", type=float, default=SynthConfig().p_mention_across)
    p.add_argument("--listeners", type=int, default=SynthConfig().listeners)
    p.add_argument("--tags-per-genre", type=int, default=SynthConfig().tags_per_genre)
    p.add_argument("--p-tag-assignment", type=float, default=SynthConfig().p_tag_assignment)
    p.add_argument("--p-blogroll-within", type=float, default=SynthConfig().p_blogroll_within)
    p.add_argument("--p-blogroll-across", type=float, default=SynthConfig().p_blogroll_across)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("enrich", help="project out-of-domain tags onto in-domain users")
    _add_dataset_args(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_enrich)

    p = sub.add_parser("profiles", help="build track and tag profiles")
    _add_dataset_args(p)
    p.add_argument("--tag-cap", type=int, default=20000)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_profiles)

    p = sub.add_parser("similarity", help="similarity matrices and optimal blogrolls")
    _add_dataset_args(p)
    p.add_argument("--tag-cap", type=int, default=20000)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_similarity)

    p = sub.add_parser("evaluate", help="blogroll quality metrics and histograms")
    _add_dataset_args(p, blogroll_required=True)
    p.add_argument(
        "--similarity", required=True, help="directory with the similarity stage outputs"
    )
    p.add_argument("--bin-width", type=float, default=0.1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("stats", help="blogroll network statistics")
    p.add_argument("--blogroll", required=True)
    p.add_argument("--posts", default=None, help="include isolated posting users as nodes")
    p.add_argument("--top", type=int, default=5)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("export-bundle", help="fold a finished run into one explorer bundle")
    _add_dataset_args(p, blogroll_required=True)
    p.add_argument(
        "--run", required=True, help="directory holding profiles/similarity/evaluate outputs"
    )
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export_bundle)

    p = sub.add_parser("serve", help="serve a bundle and the explorer page")
    p.add_argument("--bundle", required=True)
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--ui-dir", default=None, help="explorer static assets (default: built-in page)")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (IngestError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
