"""Cross-site enrichment: project out-of-domain tags onto in-domain users.

The semantics are relational: select the pairs of tuples with equal
resources from the cross product of in-domain posts and out-of-domain tag
assignments, then project onto (in-domain user, tag, resource) with set
semantics.  Implemented as a hash join keyed on the resource, which is
equivalent and avoids materializing the quadratic product.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import FrozenSet, Mapping, Tuple

__all__ = ["EnrichedRelation", "enrich"]

Post = Tuple[int, int]
Assignment = Tuple[int, int, int]


@dataclass(frozen=True)
class EnrichedRelation:
    """Tags propagated onto in-domain users, plus join provenance.

    ``pair_weights`` keeps the pre-projection multiplicity of each joined
    (tag, resource) pair, i.e. how many out-of-domain assignments carried
    it; the projection itself collapses those to one triple per user.
    ``out_assignment_total`` and ``out_distinct_tags`` describe the raw
    out-of-domain relation so either reading of "tags obtained" (triples
    vs. distinct tags) can be audited.
    """

    assignments: FrozenSet[Assignment]
    joined_resources: int
    unmatched_in_domain_resources: int
    unmatched_out_domain_resources: int
    out_assignment_total: int
    out_distinct_tags: int
    pair_weights: Mapping[Tuple[int, int], int]

    @property
    def users(self) -> frozenset[int]:
        return frozenset(u for u, _, _ in self.assignments)

    @property
    def tags(self) -> frozenset[int]:
        return frozenset(t for _, t, _ in self.assignments)


def enrich(
    posts: FrozenSet[Post] | set[Post],
    out_assignments: FrozenSet[Assignment] | set[Assignment],
) -> EnrichedRelation:
    """Join posts and assignments on the resource and project the tags.

    Deterministic regardless of input iteration order; empty inputs yield
    an empty relation.
    """
    users_by_resource: dict[int, set[int]] = {}
    for user, resource in posts:
        users_by_resource.setdefault(resource, set()).add(user)

    tags_by_resource: dict[int, set[int]] = {}
    pair_multiplicity: dict[tuple[int, int], int] = {}
    distinct_tags: set[int] = set()
    for _, tag, resource in out_assignments:
        distinct_tags.add(tag)
        tags_by_resource.setdefault(resource, set()).add(tag)
        if resource in users_by_resource:
            key = (tag, resource)
            pair_multiplicity[key] = pair_multiplicity.get(key, 0) + 1

    joined = users_by_resource.keys() & tags_by_resource.keys()
    result: set[Assignment] = set()
    for resource in joined:
        for tag in tags_by_resource[resource]:
            for user in users_by_resource[resource]:
                result.add((user, tag, resource))

    return EnrichedRelation(
        assignments=frozenset(result),
        joined_resources=len(joined),
        unmatched_in_domain_resources=len(users_by_resource.keys() - joined),
        unmatched_out_domain_resources=len(tags_by_resource.keys() - joined),
        out_assignment_total=len(out_assignments),
        out_distinct_tags=len(distinct_tags),
        pair_weights=MappingProxyType(pair_multiplicity),
    )
