"""Topology of the explicit blogroll network.

Weak components, reciprocity, clustering, and distance spans, in the
shape of the reference crawl's statistics table.

Run:  python3 demos/05_network_stats.py
"""

import tempfile

from tagbridge import load_dataset, summarize_graph
from tagbridge.reference import REFERENCE_NETWORK
from tagbridge.synth import SynthConfig, generate_files

paths = generate_files(SynthConfig(), tempfile.mkdtemp(prefix="tagbridge-demo-"))
dataset, _ = load_dataset(
    paths["posts"], paths["assignments"], paths["blogroll"], paths["dictionary"]
)

report = summarize_graph(dataset.blogroll, top=5)
s = report.summary

print("summary")
print(f"  nodes                 {s.nodes}")
print(f"  directed edges        {s.edges}")
print(f"  weak components       {s.weak_components}")
print(f"  component size        avg {s.avg_component_size:.2f} / "
      f"max {s.max_component_size} / min {s.min_component_size}")
print(f"  reciprocal pairs      {s.reciprocal_pairs} "
      f"({s.reciprocal_directed_edges} directed arcs)")
print()
print(f"  (reference crawl: {REFERENCE_NETWORK['nodes']} nodes, "
      f"{REFERENCE_NETWORK['edges']} edges, "
      f"{REFERENCE_NETWORK['weak_components']} components)")
print()

print(f"{'comp':>4} {'nodes':>6} {'edges':>6} {'clust':>7} "
      f"{'short d':>8} {'long d':>7} {'recip':>6}")
for comp in report.top_components:
    print(f"{comp.component_id:>4} {comp.nodes:>6} {comp.edges:>6} "
          f"{comp.clustering:>7.3f} {comp.shortest_avg_distance:>8.3f} "
          f"{comp.longest_avg_distance:>7.3f} {comp.reciprocal_pairs:>6}")
