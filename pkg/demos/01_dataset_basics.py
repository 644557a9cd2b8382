"""Generate a small two-site dataset, load it, and look around.

Run from the repository root:  python3 demos/01_dataset_basics.py
"""

import tempfile
from pathlib import Path

from tagbridge import load_dataset, validate
from tagbridge.synth import SynthConfig, generate_files

workdir = Path(tempfile.mkdtemp(prefix="tagbridge-demo-"))

# A tiny configuration: 2 communities of 8 bloggers, 12 tracks each.
config = SynthConfig(
    seed=7,
    communities=2,
    bloggers_per_community=8,
    tracks_per_community=12,
    listeners=15,
    tags_per_genre=5,
)
paths = generate_files(config, workdir)
print("generated files:")
for name, path in paths.items():
    print(f"  {name:<11} {path.stat().st_size:>6} bytes")

# Loading interns every label to a dense integer handle.  The posts and
# blogroll files define the in-domain users; the assignments file defines
# the out-of-domain users.  The two sets must be disjoint.
dataset, report = load_dataset(
    paths["posts"], paths["assignments"], paths["blogroll"], paths["dictionary"]
)
print()
print(f"in-domain users : {len(dataset.in_domain_users)}")
print(f"out-domain users: {len(dataset.out_domain_users)}")
print(f"posts           : {len(dataset.posts)}")
print(f"tag assignments : {len(dataset.assignments)}")
print(f"blogroll edges  : {len(dataset.blogroll.edges)}")
print(f"skip counters   : {report.blogroll.as_dict()}")

# Every loader-produced dataset satisfies the model invariants.
violations = validate(dataset)
print(f"validate() found {len(violations)} violations")

# Handles are dense and bijective with normalized labels.
some_user = sorted(dataset.in_domain_users)[0]
print(f"user handle {some_user} <-> label {dataset.users.label(some_user)!r}")
print(f"re-interning the label gives handle {dataset.users.lookup(dataset.users.label(some_user))}")
