import json
import socket
import threading
import urllib.error
import urllib.request

import pytest

from tagbridge.cli import main, make_server
from tagbridge.synth import SynthConfig


SMALL_SYNTH = [
    "--communities", "2",
    "--bloggers-per-community", "6",
    "--tracks-per-community", "8",
    "--listeners", "10",
    "--tags-per-genre", "4",
    "--seed", "5",
]


def run(args):
    return main([str(a) for a in args])


@pytest.fixture(scope="module")
def pipeline_run(tmp_path_factory):
    """One full CLI run: synth -> enrich/profiles/similarity/evaluate/stats -> bundle."""
    base = tmp_path_factory.mktemp("cli_run")
    data = base / "data"
    out = base / "run"
    assert run(["synth", "--out", data] + SMALL_SYNTH) == 0
    dataset_args = [
        "--posts", data / "posts.jsonl",
        "--assignments", data / "assignments.jsonl",
        "--blogroll", data / "blogroll.jsonl",
        "--dictionary", data / "dictionary.txt",
    ]
    assert run(["enrich", *dataset_args, "--out", out]) == 0
    assert run(["profiles", *dataset_args, "--tag-cap", 100, "--out", out]) == 0
    assert run(
        ["similarity", *dataset_args, "--tag-cap", 100, "--k", 5, "--out", out]
    ) == 0
    assert run(
        ["evaluate", *dataset_args, "--similarity", out, "--out", out]
    ) == 0
    assert run(["stats", "--blogroll", data / "blogroll.jsonl",
                "--posts", data / "posts.jsonl", "--out", out]) == 0
    assert run(
        ["export-bundle", *dataset_args, "--run", out, "--out", out]
    ) == 0
    return {"data": data, "out": out, "dataset_args": dataset_args}


def test_synth_writes_all_files(tmp_path):
    assert run(["synth", "--out", tmp_path] + SMALL_SYNTH) == 0
    for name in ("posts.jsonl", "assignments.jsonl", "blogroll.jsonl",
                 "dictionary.txt", "manifest.json"):
        assert (tmp_path / name).exists()


def test_enrich_outputs(pipeline_run):
    out = pipeline_run["out"]
    report = json.loads((out / "enrich_report.json").read_text())
    assert report["counters"]["enriched_triples"] > 0
    lines = (out / "enriched.jsonl").read_text().splitlines()
    assert len(lines) == report["counters"]["enriched_triples"]
    row = json.loads(lines[0])
    assert set(row) == {"user", "tag", "resource"}


def test_profiles_outputs(pipeline_run):
    out = pipeline_run["out"]
    rows = [json.loads(l) for l in (out / "track_profiles.jsonl").read_text().splitlines()]
    assert len(rows) == 12
    assert all(r["kind"] == "track" for r in rows)
    vocab = [json.loads(l) for l in (out / "tag_vocabulary.jsonl").read_text().splitlines()]
    counts = [r["count"] for r in vocab]
    assert counts == sorted(counts, reverse=True)


def test_similarity_outputs(pipeline_run):
    out = pipeline_run["out"]
    neighbor_rows = [
        json.loads(l) for l in (out / "optimal_tag.jsonl").read_text().splitlines()
    ]
    assert len(neighbor_rows) == 12
    for row in neighbor_rows:
        assert len(row["members"]) <= 5
        scores = [m["score"] for m in row["members"]]
        assert all(0 < s <= 1 for s in scores)
        assert all(round(s, 6) == s for s in scores)  # six-decimal serialization
        assert scores == sorted(scores, reverse=True)


def test_evaluate_report(pipeline_run):
    out = pipeline_run["out"]
    report = json.loads((out / "report.json").read_text())
    for kind in ("track", "tag"):
        section = report[kind]
        assert section["avg_sim_optimal"] > section["avg_sim_explicit"]
        hist = section["histogram_optimal"]
        assert sum(b["count"] for b in hist["bins"]) == section["users_with_optimal_blogroll"]
    assert (out / "histogram_track.csv").read_text().startswith("bin_start")


def test_stats_report(pipeline_run):
    out = pipeline_run["out"]
    stats = json.loads((out / "graph_stats.json").read_text())
    assert stats["summary"]["nodes"] == 12
    sizes = [c["nodes"] for c in stats["top_components"]]
    assert sizes == sorted(sizes, reverse=True)


def test_bundle_contents(pipeline_run):
    out = pipeline_run["out"]
    bundle = json.loads((out / "bundle.json").read_text())
    assert bundle["format_version"] == 1
    assert bundle["parameters"]["k"] == 5
    assert len(bundle["nodes"]) == 12
    users = {n["user"] for n in bundle["nodes"]}
    optimal_rows = {
        r["user"]: r
        for r in map(json.loads, (out / "optimal_tag.jsonl").read_text().splitlines())
    }
    by_source = {}
    for edge in bundle["optimal_tag_edges"]:
        assert 0 < edge["score"] <= 1
        assert edge["source"] in users and edge["target"] in users
        by_source.setdefault(edge["source"], []).append(edge)
    for user, edges in by_source.items():
        members = {m["label"] for m in optimal_rows[user]["members"]}
        assert {e["target"] for e in edges} == members
    for node in bundle["nodes"]:
        pops = [t["popularity"] for t in node["tracks"]]
        assert pops == sorted(pops, reverse=True)


def test_commands_are_idempotent(pipeline_run, tmp_path):
    data = pipeline_run["data"]
    dataset_args = pipeline_run["dataset_args"]
    first, second = tmp_path / "first", tmp_path / "second"
    for out in (first, second):
        assert run(["similarity", *dataset_args, "--tag-cap", 100, "--k", 5,
                    "--out", out]) == 0
    for name in ("optimal_track.jsonl", "optimal_tag.jsonl",
                 "similarity_track.jsonl", "similarity_tag.jsonl"):
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_missing_input_file_fails(tmp_path):
    code = run([
        "enrich",
        "--posts", tmp_path / "nope.jsonl",
        "--assignments", tmp_path / "nope2.jsonl",
        "--out", tmp_path,
    ])
    assert code == 2


def test_evaluate_without_similarity_outputs_fails(pipeline_run, tmp_path):
    code = run([
        "evaluate", *pipeline_run["dataset_args"],
        "--similarity", tmp_path,  # empty directory: no similarity outputs
        "--out", tmp_path,
    ])
    assert code == 2


def test_enrich_on_empty_posts(tmp_path):
    posts = tmp_path / "posts.jsonl"
    posts.write_text("")
    assignments = tmp_path / "assignments.jsonl"
    assignments.write_text('{"user": "l", "tag": "t", "resource": "r"}\n')
    code = run(["enrich", "--posts", posts, "--assignments", assignments,
                "--out", tmp_path])
    assert code == 0
    assert (tmp_path / "enriched.jsonl").read_text() == ""


def test_export_bundle_rejects_inconsistent_users(pipeline_run, tmp_path):
    out = pipeline_run["out"]
    tampered = tmp_path / "tampered"
    tampered.mkdir()
    for path in out.iterdir():
        if path.is_file():
            (tampered / path.name).write_bytes(path.read_bytes())
    profile_lines = (tampered / "track_profiles.jsonl").read_text().splitlines()
    (tampered / "track_profiles.jsonl").write_text("\n".join(profile_lines[1:]) + "\n")
    code = run([
        "export-bundle", *pipeline_run["dataset_args"],
        "--run", tampered, "--out", tmp_path,
    ])
    assert code == 2


def test_invalid_k_fails(pipeline_run, tmp_path):
    code = run(["similarity", *pipeline_run["dataset_args"],
                "--k", 0, "--out", tmp_path])
    assert code == 2


@pytest.fixture()
def served_bundle(pipeline_run):
    bundle_path = pipeline_run["out"] / "bundle.json"
    server = make_server(bundle_path, port=0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    port = server.server_address[1]
    yield f"http://127.0.0.1:{port}", bundle_path
    server.shutdown()
    server.server_close()


def test_serve_bundle_roundtrip(served_bundle):
    url, bundle_path = served_bundle
    with urllib.request.urlopen(f"{url}/bundle") as resp:
        assert resp.status == 200
        assert resp.headers["Content-Type"] == "application/json"
        body = resp.read()
    assert body == bundle_path.read_bytes()


def test_serve_root_returns_explorer_page(served_bundle):
    url, _ = served_bundle
    with urllib.request.urlopen(f"{url}/") as resp:
        assert resp.status == 200
        assert resp.headers["Content-Type"].startswith("text/html")
        assert b"bundle" in resp.read()


def test_serve_missing_path_is_404(served_bundle):
    url, _ = served_bundle
    with pytest.raises(urllib.error.HTTPError) as exc:
        urllib.request.urlopen(f"{url}/missing")
    assert exc.value.code == 404


def test_serve_blocks_path_traversal(served_bundle):
    url, _ = served_bundle
    with pytest.raises(urllib.error.HTTPError) as exc:
        urllib.request.urlopen(f"{url}/../pyproject.toml")
    assert exc.value.code == 404


def test_fixture_pipeline_end_to_end(tmp_path):
    """Full CLI chain on the default (fixture) synth seed."""
    data, out = tmp_path / "data", tmp_path / "run"
    assert run(["synth", "--out", data]) == 0  # all-default fixture config
    dataset_args = [
        "--posts", data / "posts.jsonl",
        "--assignments", data / "assignments.jsonl",
        "--blogroll", data / "blogroll.jsonl",
        "--dictionary", data / "dictionary.txt",
    ]
    assert run(["profiles", *dataset_args, "--out", out]) == 0
    assert run(["similarity", *dataset_args, "--out", out]) == 0
    assert run(["evaluate", *dataset_args, "--similarity", out, "--out", out]) == 0
    assert run(["export-bundle", *dataset_args, "--run", out, "--out", out]) == 0

    report = json.loads((out / "report.json").read_text())
    for kind in ("track", "tag"):
        assert report[kind]["improvement_pct"] > 0
    bundle = json.loads((out / "bundle.json").read_text())
    config = SynthConfig()
    assert len(bundle["nodes"]) == config.communities * config.bloggers_per_community
    assert bundle["parameters"] == {"k": 10, "tag_cap": 20000, "bin_width": 0.1}


def test_serve_rejects_busy_port(pipeline_run):
    bundle_path = pipeline_run["out"] / "bundle.json"
    blocker = socket.socket()
    blocker.bind(("127.0.0.1", 0))
    blocker.listen(1)
    port = blocker.getsockname()[1]
    try:
        assert run(["serve", "--bundle", bundle_path, "--port", port]) == 2
    finally:
        blocker.close()
