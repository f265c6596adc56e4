import random
from collections import Counter, deque

import pytest

from qmut import (
    CollectPairMultiplicities,
    ISOMORPHISM,
    LABELED,
    NoIcebound,
    PairExactlyK,
    Quiver,
    SearchLimits,
    commuting_orbit,
    explore,
    gadget_form,
)
from qmut.errors import MutableAdjacencyError, NonCommutingFamilyError
from qmut.gadgets import X3CInstance, build_subset_sum_gadget, build_x3c_gadget

from oracle_mutation import quiver_to_arrows, three_step_mutate


def markov():
    return Quiver(
        [("X", False), ("Y", False), ("Z", False)],
        [("X", "Y", 2), ("Y", "Z", 2), ("Z", "X", 2)],
    )


def a3_path():
    return Quiver(
        [("1", False), ("2", False), ("3", False)],
        [("1", "2", 1), ("2", "3", 1)],
    )


def test_limits_validation():
    with pytest.raises(ValueError):
        SearchLimits(max_states=0)
    with pytest.raises(ValueError):
        SearchLimits(max_depth=-1)
    assert SearchLimits().max_states == 1_000_000
    assert SearchLimits().max_multiplicity == 1 << 64


def test_markov_no_icebound_witness_at_root():
    report = explore(markov(), NoIcebound(), dedup=ISOMORPHISM)
    assert report.visited == 1
    assert report.exhausted
    assert report.witness == ()
    assert not report.truncated_by


def test_markov_labeled_class_is_two():
    report = explore(markov(), None, dedup=LABELED)
    assert report.exhausted and report.visited == 2


def test_a3_iso_class_count_matches_three_step_oracle():
    # independent enumeration with the three-step rule
    start = quiver_to_arrows(a3_path())
    seen = {frozenset(start.items())}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for v in ("1", "2", "3"):
            t = three_step_mutate(s, v)
            key = frozenset(t.items())
            if key not in seen:
                seen.add(key)
                queue.append(t)
    assert len(seen) == 14  # labeled states via the oracle

    labeled = explore(a3_path(), CollectPairMultiplicities("1", "2"), dedup=LABELED)
    assert labeled.exhausted and labeled.visited == 14
    assert labeled.collected == {0, 1}
    iso = explore(a3_path(), CollectPairMultiplicities("1", "2"), dedup=ISOMORPHISM)
    assert iso.exhausted and iso.visited == 4
    # iso dedup collects off whichever representatives get discovered
    assert iso.collected <= {0, 1} and iso.collected


def test_subset_sum_witness():
    g = build_subset_sum_gadget([3, 5])
    report = explore(g, PairExactlyK(8))
    assert report.witness == ("C1", "C2")
    assert g.mutate_seq(report.witness).has_pair_with_exactly_k(8)


def test_witness_replay_satisfies_predicate():
    rng = random.Random(5)
    for _ in range(20):
        values = [rng.randint(1, 9) for _ in range(rng.randint(1, 6))]
        k = rng.randint(2, sum(values) + 1)
        if k in values:
            continue
        g = build_subset_sum_gadget(values)
        report = explore(g, PairExactlyK(k))
        if report.witness is not None:
            assert g.mutate_seq(report.witness).has_pair_with_exactly_k(k)
        else:
            assert report.exhausted  # tiny classes always finish


def test_pair_exactly_zero_needs_two_vertices():
    single = Quiver([("A", False)])
    report = explore(single, PairExactlyK(0))
    assert report.witness is None and report.exhausted


def test_truncation_max_states():
    q = Quiver(
        [("A", True), ("B", True), ("C", False), ("D", False)],
        [("A", "C", 1), ("C", "D", 2), ("D", "B", 1)],
    )
    report = explore(q, None, SearchLimits(max_states=50))
    assert not report.exhausted
    assert "max_states" in report.truncated_by
    assert report.visited <= 50


def test_truncation_max_multiplicity():
    q = Quiver(
        [("A", True), ("B", True), ("C", False), ("D", False)],
        [("A", "C", 1), ("C", "D", 3), ("D", "B", 1)],
    )
    report = explore(q, None, SearchLimits(max_multiplicity=1000))
    assert not report.exhausted
    assert "max_multiplicity" in report.truncated_by
    # growth is exponential, so the bound keeps the visited set tiny
    assert report.visited < 200


def test_truncation_max_depth():
    g = build_subset_sum_gadget([1, 2, 4])
    report = explore(g, None, SearchLimits(max_depth=1))
    assert report.visited == 4  # root plus the three single mutations
    assert "max_depth" in report.truncated_by


def test_determinism():
    g = build_subset_sum_gadget([2, 3, 7])
    r1 = explore(g, PairExactlyK(12))
    r2 = explore(g, PairExactlyK(12))
    assert r1 == r2


def test_labeled_at_least_iso_counts():
    rng = random.Random(31)
    from conftest import random_quiver

    for _ in range(10):
        q = random_quiver(rng, max_vertices=4, max_weight=2)
        lim = SearchLimits(max_states=3000, max_multiplicity=1 << 20)
        lab = explore(q, None, lim, dedup=LABELED)
        iso = explore(q, None, lim, dedup=ISOMORPHISM)
        if lab.exhausted and iso.exhausted:
            assert iso.visited <= lab.visited


# -- commuting orbits -------------------------------------------------------------


def test_commuting_orbit_no_mutables():
    q = Quiver([("A", True), ("B", True)], [("A", "B", 2)])
    orbit = commuting_orbit(q)
    assert orbit == [(frozenset(), q)]


def test_commuting_orbit_matches_gadget_form():
    values = [3, 5]
    g = build_subset_sum_gadget(values)
    orbit = commuting_orbit(g)
    assert len(orbit) == 4
    expect = {
        frozenset(): gadget_form(values, []),
        frozenset({"C1"}): gadget_form(values, [1]),
        frozenset({"C2"}): gadget_form(values, [2]),
        frozenset({"C1", "C2"}): gadget_form(values, [1, 2]),
    }
    subsets = [s for s, _ in orbit]
    assert subsets == [frozenset(), {"C1"}, {"C2"}, {"C1", "C2"}]  # counting order
    for subset, quiver in orbit:
        assert quiver == expect[subset]
        assert quiver == g.mutate_seq(sorted(subset))


def test_commuting_orbit_x3c_single_triple():
    inst = X3CInstance(n=3, triples=((1, 2, 3),))
    g = build_x3c_gadget(inst)
    orbit = commuting_orbit(g)
    assert len(orbit) == 2
    by_subset = dict(orbit)
    assert by_subset[frozenset()].icebound_pairs() != []
    mutated = by_subset[frozenset({"B_1-2-3"})]
    assert mutated.icebound_pairs() == []


def test_commuting_orbit_rejects_adjacent_mutables():
    q = Quiver([("A", False), ("B", False)], [("A", "B", 1)])
    with pytest.raises(MutableAdjacencyError):
        commuting_orbit(q)


def test_explore_visits_exactly_the_commuting_orbit():
    rng = random.Random(13)
    for _ in range(8):
        values = [rng.randint(1, 9) for _ in range(rng.randint(1, 6))]
        g = build_subset_sum_gadget(values)
        orbit = commuting_orbit(g)
        orbit_set = {q for _, q in orbit}
        report = explore(g, None, dedup=LABELED)
        assert report.exhausted
        assert report.visited == len(orbit_set) == len(orbit)
    inst = X3CInstance(n=6, triples=((1, 2, 3), (4, 5, 6), (1, 4, 5)))
    g = build_x3c_gadget(inst)
    report = explore(g, None, dedup=LABELED)
    assert report.exhausted and report.visited == len(commuting_orbit(g))


def test_mutable_nonadjacency_is_preserved():
    # mutations at mutable vertices cannot create mutable-mutable arrows when
    # none exist, so the closure check never trips on real input
    rng = random.Random(8)
    for _ in range(30):
        values = [rng.randint(1, 6) for _ in range(rng.randint(1, 5))]
        g = build_subset_sum_gadget(values)
        seq = [rng.choice(g.mutable_names()) for _ in range(8)]
        q = g.mutate_seq(seq)
        mutables = q.mutable_names()
        for i, u in enumerate(mutables):
            for w in mutables[i + 1 :]:
                assert q.multiplicity(u, w) == 0
