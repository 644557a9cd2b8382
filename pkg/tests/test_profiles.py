import pytest

from tagbridge.core import Interner
from tagbridge.enrich import enrich
from tagbridge.ingest import normalize
from tagbridge.profiles import (
    build_tag_profiles,
    build_tag_vocabulary,
    build_track_profiles,
    build_track_vocabulary,
    from_dense,
    to_dense,
)


def tag_table(*labels):
    table = Interner(normalize)
    for label in labels:
        table.intern(label)
    return table


def assignments_with_counts(counts):
    """One synthetic triple per count unit, distinct listeners/resources."""
    triples = set()
    serial = 0
    for tag, n in counts.items():
        for _ in range(n):
            triples.add((1000 + serial, tag, serial))
            serial += 1
    return frozenset(triples)


def test_tag_vocabulary_orders_by_popularity():
    tags = tag_table("rock", "indie", "jazz")
    triples = assignments_with_counts({0: 5, 1: 3, 2: 1})
    vocab = build_tag_vocabulary(triples, tags, cap=2)
    assert vocab.items == (0, 1)
    assert vocab.counts == (5, 3)


def test_tag_vocabulary_breaks_ties_by_label():
    tags = tag_table("b", "a")
    triples = assignments_with_counts({0: 2, 1: 2})
    vocab = build_tag_vocabulary(triples, tags, cap=1)
    assert vocab.items == (1,)  # "a" before "b"


def test_tag_vocabulary_smaller_than_cap():
    tags = tag_table("x", "y", "z")
    triples = assignments_with_counts({0: 1, 1: 1, 2: 1})
    vocab = build_tag_vocabulary(triples, tags, cap=10)
    assert len(vocab) == 3


def test_tag_vocabulary_rejects_bad_cap():
    with pytest.raises(ValueError):
        build_tag_vocabulary(frozenset(), tag_table(), cap=0)


def test_track_profiles_from_posts():
    posts = frozenset({(0, 7), (0, 9), (1, 9)})
    matrix = build_track_profiles(posts, users=[0, 1])
    assert matrix.vocabulary.items == (7, 9)
    assert matrix.profile(0).indices == (0, 1)
    assert matrix.profile(1).indices == (1,)


def test_user_without_posts_gets_empty_profile():
    matrix = build_track_profiles(frozenset({(0, 5)}), users=[0, 1])
    assert matrix.profile(1).indices == ()
    assert len(matrix) == 2


def test_binary_semantics_ignore_duplicates():
    once = build_track_profiles(frozenset({(0, 5)}), users=[0])
    twice = build_track_profiles(frozenset({(0, 5), (0, 5)}), users=[0])
    assert once.profile(0) == twice.profile(0)


def test_tag_profiles_respect_vocabulary():
    tags = tag_table("indie", "rock")
    vocab = build_tag_vocabulary(assignments_with_counts({0: 2, 1: 1}), tags, cap=2)
    enriched = enrich(
        frozenset({(0, 50)}),
        frozenset({(100, 0, 50), (101, 7, 50)}),  # tag 7 is outside the vocabulary
    )
    matrix = build_tag_profiles(enriched, vocab, users=[0])
    assert matrix.profile(0).indices == (vocab.position(0),)


def test_tag_reached_via_two_resources_sets_once():
    tags = tag_table("indie")
    vocab = build_tag_vocabulary(assignments_with_counts({0: 1}), tags, cap=1)
    enriched = enrich(
        frozenset({(0, 50), (0, 51)}),
        frozenset({(100, 0, 50), (100, 0, 51)}),
    )
    matrix = build_tag_profiles(enriched, vocab, users=[0])
    assert matrix.profile(0).indices == (0,)


def test_tag_profiles_reject_track_vocabulary():
    vocab = build_track_vocabulary(frozenset({(0, 1)}))
    enriched = enrich(frozenset(), frozenset())
    with pytest.raises(ValueError):
        build_tag_profiles(enriched, vocab, users=[0])


def test_dense_sparse_round_trip():
    posts = frozenset({(0, 2), (0, 4), (1, 3)})
    matrix = build_track_profiles(posts, users=[0, 1, 2])
    for profile in matrix.profiles:
        assert from_dense(profile.user, matrix.vocabulary, to_dense(profile)) == profile


def test_profiles_invariant_under_input_order():
    tuples = [(3, 9), (1, 4), (3, 4), (2, 9)]
    a = build_track_profiles(frozenset(tuples), users=[1, 2, 3])
    b = build_track_profiles(frozenset(reversed(tuples)), users=[3, 2, 1])
    assert a == b


def test_vocabulary_is_deterministic():
    tags = tag_table("alpha", "beta", "gamma")
    triples = assignments_with_counts({0: 3, 1: 3, 2: 1})
    first = build_tag_vocabulary(triples, tags, cap=3)
    second = build_tag_vocabulary(frozenset(sorted(triples)), tags, cap=3)
    assert first == second
    assert first.items == second.items


def test_profile_bits_bounded_by_enriched_tags():
    tags = tag_table("a", "b", "c")
    vocab = build_tag_vocabulary(assignments_with_counts({0: 1, 1: 1, 2: 1}), tags, 3)
    out = frozenset({(100, 0, 50), (100, 1, 50), (100, 1, 51)})
    enriched = enrich(frozenset({(0, 50), (0, 51)}), out)
    matrix = build_tag_profiles(enriched, vocab, users=[0])
    distinct_enriched = {t for u, t, _ in enriched.assignments if u == 0}
    assert len(matrix.profile(0).indices) <= len(distinct_enriched)
