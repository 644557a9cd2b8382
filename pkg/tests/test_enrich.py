import numpy as np

from tagbridge.enrich import enrich

from _oracles import enrich_oracle

B1, B2 = 0, 1  # in-domain users
L1, L2, L3 = 10, 11, 12  # out-of-domain users
R1, R2, R3 = 0, 1, 2
INDIE, ROCK, JAZZ = 0, 1, 2


def test_tags_project_through_shared_resource():
    posts = frozenset({(B1, R1)})
    out = frozenset({(L1, INDIE, R1), (L2, ROCK, R1), (L3, JAZZ, R3)})
    result = enrich(posts, out)
    assert result.assignments == frozenset({(B1, INDIE, R1), (B1, ROCK, R1)})


def test_empty_posts_yield_empty_join():
    result = enrich(frozenset(), frozenset({(L1, INDIE, R1)}))
    assert result.assignments == frozenset()
    assert result.joined_resources == 0
    assert result.unmatched_out_domain_resources == 1


def test_tag_fans_out_to_all_mentioning_users():
    posts = frozenset({(B1, R1), (B2, R1)})
    out = frozenset({(L1, INDIE, R1)})
    result = enrich(posts, out)
    assert result.assignments == frozenset({(B1, INDIE, R1), (B2, INDIE, R1)})


def test_provenance_counters():
    posts = frozenset({(B1, R1), (B1, R2)})
    out = frozenset({(L1, INDIE, R1), (L2, INDIE, R1), (L1, ROCK, R3)})
    result = enrich(posts, out)
    assert result.joined_resources == 1
    assert result.unmatched_in_domain_resources == 1  # R2
    assert result.unmatched_out_domain_resources == 1  # R3
    assert result.out_assignment_total == 3
    assert result.out_distinct_tags == 2
    # two listeners applied INDIE to R1; the projection collapsed them
    assert result.pair_weights == {(INDIE, R1): 2}


def test_duplicate_tag_applications_collapse():
    posts = frozenset({(B1, R1)})
    out = frozenset({(L1, INDIE, R1), (L2, INDIE, R1), (L3, INDIE, R1)})
    result = enrich(posts, out)
    assert result.assignments == frozenset({(B1, INDIE, R1)})


def _random_instance(rng, max_posts=60, max_assignments=120):
    n_users = int(rng.integers(1, 12))
    n_listeners = int(rng.integers(1, 12))
    n_tags = int(rng.integers(1, 10))
    n_resources = int(rng.integers(1, 15))
    posts = frozenset(
        (int(rng.integers(0, n_users)), int(rng.integers(0, n_resources)))
        for _ in range(int(rng.integers(0, max_posts)))
    )
    assignments = frozenset(
        (
            100 + int(rng.integers(0, n_listeners)),
            int(rng.integers(0, n_tags)),
            int(rng.integers(0, n_resources)),
        )
        for _ in range(int(rng.integers(0, max_assignments)))
    )
    return posts, assignments


def test_matches_nested_loop_oracle_on_random_instances():
    rng = np.random.Generator(np.random.PCG64(11))
    for _ in range(40):
        posts, assignments = _random_instance(rng)
        assert enrich(posts, assignments).assignments == enrich_oracle(posts, assignments)


def test_monotone_in_out_assignments():
    rng = np.random.Generator(np.random.PCG64(12))
    posts, assignments = _random_instance(rng)
    base = enrich(posts, assignments).assignments
    grown = enrich(posts, assignments | {(999, 0, 0)}).assignments
    assert base <= grown


def test_output_size_bound_and_user_preservation():
    rng = np.random.Generator(np.random.PCG64(13))
    for _ in range(20):
        posts, assignments = _random_instance(rng)
        result = enrich(posts, assignments)
        pairs = {(t, r) for _, t, r in assignments}
        users = {u for u, _ in posts}
        assert len(result.assignments) <= len(pairs) * len(users)
        assert result.users <= users


def test_deterministic_under_input_reordering():
    posts_a = frozenset({(B1, R1), (B2, R2), (B1, R2)})
    out_a = frozenset({(L1, INDIE, R1), (L2, ROCK, R2)})
    assert enrich(posts_a, out_a) == enrich(
        frozenset(sorted(posts_a, reverse=True)), frozenset(sorted(out_a))
    )
