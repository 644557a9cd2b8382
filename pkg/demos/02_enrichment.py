"""The cross-site join: propagate listener tags onto bloggers.

A blogger never tags anything.  But when a blogger posts about a track
that listeners on the other site have tagged, each of those tags flows to
the blogger through the shared track.

Run:  python3 demos/02_enrichment.py
"""

import tempfile

from tagbridge import enrich, load_dataset
from tagbridge.synth import SynthConfig, generate_files

paths = generate_files(
    SynthConfig(seed=7, communities=2, bloggers_per_community=8,
                tracks_per_community=12, listeners=15, tags_per_genre=5),
    tempfile.mkdtemp(prefix="tagbridge-demo-"),
)
dataset, _ = load_dataset(
    paths["posts"], paths["assignments"], paths["blogroll"], paths["dictionary"]
)

result = enrich(dataset.posts, dataset.assignments)

print(f"out-of-domain assignments: {result.out_assignment_total}"
      f" ({result.out_distinct_tags} distinct tags)")
print(f"resources joined         : {result.joined_resources}")
print(f"  only in posts          : {result.unmatched_in_domain_resources}")
print(f"  only in assignments    : {result.unmatched_out_domain_resources}")
print(f"triples after projection : {len(result.assignments)}")
print()

# Pick one blogger and show what reached them.
blogger = sorted(result.users)[0]
tags = sorted(
    {dataset.tags.label(t) for u, t, _ in result.assignments if u == blogger}
)
tracks = sorted(
    {dataset.resources.label(r) for u, r in dataset.posts if u == blogger}
)
print(f"{dataset.users.label(blogger)} wrote about {len(tracks)} tracks, e.g. {tracks[:3]}")
print(f"and received {len(tags)} tags: {tags}")

# The join keeps the pre-projection multiplicity per (tag, resource) pair:
# how many listeners applied that tag to that track.
heaviest = max(result.pair_weights.items(), key=lambda kv: kv[1])
(tag, resource), weight = heaviest
print()
print(f"most-agreed pair: {weight} listeners tagged "
      f"{dataset.resources.label(resource)!r} with {dataset.tags.label(tag)!r}")
