"""How good are explicit blogrolls, measured by profile similarity?

Runs the full pipeline on the shipped fixture (4 communities x 25
bloggers, seed 1729) and prints the quality table, next to the values
reported for the original 976-blogger crawl.  The crawl itself is not
available, so the reference numbers are context, not a target.

Run:  python3 demos/04_evaluation.py
"""

import tempfile

from tagbridge import blogroll_agreement, load_dataset, quality_report, similarity_histograms
from tagbridge.cli import run_pipeline
from tagbridge.reference import REFERENCE_AGREEMENT, REFERENCE_QUALITY
from tagbridge.synth import SynthConfig, generate_files

paths = generate_files(SynthConfig(), tempfile.mkdtemp(prefix="tagbridge-demo-"))
dataset, report = load_dataset(
    paths["posts"], paths["assignments"], paths["blogroll"], paths["dictionary"]
)
arts = run_pipeline(dataset, report, tag_cap=20000, k=10)

rows = []
for kind, sim, optimal in (
    ("track", arts.track_similarity, arts.optimal_track),
    ("tag", arts.tag_similarity, arts.optimal_tag),
):
    q = quality_report(dataset.blogroll, optimal, sim)
    ref = REFERENCE_QUALITY[kind]
    rows.append((kind, q, ref))

print(f"{'profile':<8} {'AvgSim(B)':>10} {'AvgSim(B*)':>11} {'improv':>8} "
      f"{'overlap':>8} {'P(overlap)':>10}")
for kind, q, _ in rows:
    print(f"{kind:<8} {q.avg_sim_explicit:>10.3f} {q.avg_sim_optimal:>11.3f} "
          f"{q.improvement_pct:>7.1f}% {q.avg_overlap:>8.2f} {q.overlap_probability:>10.3f}")
print()
print("reference crawl (976 bloggers; for context only):")
for kind, _, ref in rows:
    print(f"{kind:<8} {ref['avg_sim_explicit']:>10.3f} {ref['avg_sim_optimal']:>11.3f} "
          f"{ref['improvement_pct']:>7.1f}% {ref['avg_overlap_when_nonempty']:>8.2f} "
          f"{ref['overlap_probability']:>10.3f}")

# Similarity distributions: how much of each population clears 0.5?
print()
for kind, q, _ in rows:
    explicit_scores = [x for x in q.explicit_scores.values() if x is not None]
    optimal_scores = [x for x in q.optimal_scores.values() if x is not None]
    hist_b, hist_bstar = similarity_histograms(explicit_scores, optimal_scores, 0.1)
    print(f"{kind}: share of users above 0.5 similarity: "
          f"explicit {hist_b.fraction_at_or_above(0.5):.1%}, "
          f"optimal {hist_bstar.fraction_at_or_above(0.5):.1%}")

# Do the two optimal blogrolls agree with each other?
agreement = blogroll_agreement(arts.optimal_track, arts.optimal_tag)
print()
print(f"track/tag optimal blogrolls agree on >= 1 member for "
      f"{agreement.agreement_fraction:.1%} of users "
      f"(mean overlap {agreement.mean_overlap:.2f}); "
      f"reference crawl: {REFERENCE_AGREEMENT['agreement_fraction']:.1%} "
      f"(mean {REFERENCE_AGREEMENT['mean_overlap_when_agreeing']})")
