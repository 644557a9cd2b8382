"""Cross-site tag propagation and blogroll quality analysis.

Pipeline: load a two-site dataset (in-domain posts + blogroll,
out-of-domain tag assignments), enrich the in-domain users with tags
through the shared resources, build binary track/tag profiles, compute the
exact all-pairs cosine similarity, derive top-k "optimal blogrolls", and
measure how well the explicit blogroll is explained by profile similarity.
"""

from .core import BlogrollGraph, Dataset, EmptyLabelError, Interner, Violation, validate
from .enrich import EnrichedRelation, enrich
from .evaluate import (
    Histogram,
    IntersectionDistribution,
    avg_blogroll_similarity,
    blogroll_agreement,
    quality_report,
    similarity_histograms,
)
from .graphstats import (
    clustering_coefficient,
    distance_profile,
    reciprocal_pairs,
    summarize_graph,
    weak_components,
)
from .ingest import (
    DEFAULT_POLICY,
    IngestError,
    NormalizationPolicy,
    load_dataset,
    load_dictionary,
    normalize,
    write_dataset,
)
from .profiles import (
    ProfileMatrix,
    UserProfile,
    Vocabulary,
    build_tag_profiles,
    build_tag_vocabulary,
    build_track_profiles,
)
from .similarity import (
    NeighborSet,
    SimilarityMatrix,
    cosine,
    optimal_blogrolls,
    similarity_matrix,
)
from .synth import SynthConfig, generate, generate_files

__version__ = "0.1.0"
