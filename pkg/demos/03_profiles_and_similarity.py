"""Binary profiles, cosine similarity, and optimal blogrolls.

Every user becomes two sparse 0/1 vectors: a track profile over the
resources they posted about, and a tag profile over the most popular tags
that reached them through enrichment.  Cosine similarity of binary vectors
is |intersection| / sqrt(|u|·|v|); the k best-scoring peers of a user form
the "optimal blogroll".

Run:  python3 demos/03_profiles_and_similarity.py
"""

import tempfile

from tagbridge import (
    build_tag_profiles,
    build_tag_vocabulary,
    build_track_profiles,
    cosine,
    enrich,
    load_dataset,
    optimal_blogrolls,
    similarity_matrix,
)
from tagbridge.synth import SynthConfig, generate_files

paths = generate_files(
    SynthConfig(seed=7, communities=2, bloggers_per_community=8,
                tracks_per_community=12, listeners=15, tags_per_genre=5),
    tempfile.mkdtemp(prefix="tagbridge-demo-"),
)
dataset, _ = load_dataset(
    paths["posts"], paths["assignments"], paths["blogroll"], paths["dictionary"]
)
users = sorted(dataset.in_domain_users)

# Track profiles: one dimension per posted-about resource.
track_matrix = build_track_profiles(dataset.posts, users)
print(f"track vocabulary: {len(track_matrix.vocabulary)} resources")

# Tag profiles: dimensions are the top-N most popular tags (popularity is
# counted on the raw out-of-domain assignments, ties broken by label).
enriched = enrich(dataset.posts, dataset.assignments)
vocab = build_tag_vocabulary(dataset.assignments, dataset.tags, cap=20000)
tag_matrix = build_tag_profiles(enriched, vocab, users)
print(f"tag vocabulary  : {len(vocab)} tags, top 3:")
for t, c in list(zip(vocab.items, vocab.counts))[:3]:
    print(f"  {dataset.tags.label(t):<22} {c} assignments")

# Pairwise cosine of two specific users, both ways.
u, v = users[0], users[1]
print()
print(f"cosine({dataset.users.label(u)}, {dataset.users.label(v)})")
print(f"  on tracks: {cosine(track_matrix.profile(u), track_matrix.profile(v)):.4f}")
print(f"  on tags  : {cosine(tag_matrix.profile(u), tag_matrix.profile(v)):.4f}")

# The full matrix only materializes pairs that share at least one item.
track_sim = similarity_matrix(track_matrix)
tag_sim = similarity_matrix(tag_matrix)
n = len(users)
print()
print(f"possible pairs: {n * (n - 1) // 2}")
print(f"nonzero track pairs: {track_sim.entry_count()}")
print(f"nonzero tag pairs  : {tag_sim.entry_count()}")

# Optimal blogroll: the k most similar users, ties broken by handle.
rolls = optimal_blogrolls(tag_sim, k=5)
best = rolls[users[0]]
print()
print(f"optimal blogroll of {dataset.users.label(best.owner)} (tags, k=5):")
for member, score in best.members:
    print(f"  {dataset.users.label(member):<22} {score:.4f}")
