"""Reference results from the original 976-blogger crawl.

The pipeline was originally evaluated on a crawl of a Blogger.com music
community (976 bloggers, 2196 unique tracks matched against a track
dictionary) enriched with Last.fm tag assignments, using k=10 neighbor
sets and a 20000-tag vocabulary.  That crawl is not redistributable, so
these numbers are shipped as documented comparison points only; nothing in
the test suite asserts them.  ``None`` marks figures that were reported
only approximately.
"""

from __future__ import annotations

REFERENCE_PARAMETERS = {"k": 10, "tag_cap": 20000}

# Blogroll quality by profile kind.  improvement_pct is the relative gain
# of the optimal population mean over the explicit one; avg_overlap is the
# mean |B ∩ B*| over users whose sets intersect at all, paired with the
# probability of a nonempty intersection.  share_above_half_* is the
# fraction of per-user averages falling in similarity bins at 0.5 or above.
REFERENCE_QUALITY = {
    "track": {
        "avg_sim_explicit": 0.295,
        "avg_sim_optimal": 0.547,
        "improvement_pct": 85.0,
        "avg_overlap_when_nonempty": 1.48,
        "overlap_probability": 0.085,
        "share_above_half_explicit": None,  # reported only as "just less than 11%"
        "share_above_half_optimal": 0.4927,
    },
    "tag": {
        "avg_sim_explicit": 0.293,
        "avg_sim_optimal": 0.645,
        "improvement_pct": 120.0,
        "avg_overlap_when_nonempty": 1.37,
        "overlap_probability": 0.081,
        "share_above_half_explicit": 0.1644,
        "share_above_half_optimal": 0.6432,
    },
}

# Agreement between the track-based and tag-based optimal blogrolls.
REFERENCE_AGREEMENT = {"agreement_fraction": 0.7766, "mean_overlap_when_agreeing": 4.64}

# Blogroll network statistics of the crawl.  reciprocal_edges was reported
# without stating whether it counts unordered pairs or directed arcs; this
# package reports both so either reading can be compared.
REFERENCE_NETWORK = {
    "nodes": 976,
    "edges": 2011,
    "weak_components": 72,
    "avg_component_size": 13.55,
    "max_component_size": 662,
    "min_component_size": 2,
    "reciprocal_edges": 581,
    "unique_tracks": 2196,
    "tag_assignments_obtained": 147801,
}

# Per-component detail for the five largest weak components, as reported:
# (nodes, edges, avg clustering coefficient, shortest avg distance,
# longest avg distance, reciprocal edges).  Component 3's row is internally
# inconsistent as published (28 nodes / 27 edges cannot have clustering
# 0.964), so treat these as descriptive, not ground truth.
REFERENCE_TOP_COMPONENTS = [
    {"nodes": 662, "edges": 1755, "clustering": 0.492, "shortest": 2.797, "longest": 8.134, "reciprocal": 568},
    {"nodes": 53, "edges": 62, "clustering": 0.574, "shortest": 2.113, "longest": 5.811, "reciprocal": 13},
    {"nodes": 28, "edges": 27, "clustering": 0.964, "shortest": 0.964, "longest": 1.892, "reciprocal": 0},
    {"nodes": 19, "edges": 20, "clustering": 0.526, "shortest": 2.0, "longest": 4.684, "reciprocal": 0},
    {"nodes": 16, "edges": 15, "clustering": 0.751, "shortest": 1.687, "longest": 3.187, "reciprocal": 0},
]
