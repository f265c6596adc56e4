import random

from hypothesis import given, settings, strategies as st

from qmut import Quiver, canonical_form, canonical_key, is_isomorphic

from conftest import random_quiver


def test_listing_order_irrelevant(five_vertex):
    reordered = Quiver(
        [("E", False), ("D", False), ("C", False), ("B", False), ("A", False)],
        [("A", "B", 2), ("B", "E", 3), ("C", "B", 1), ("E", "A", 1), ("E", "D", 1)],
    )
    assert canonical_key(five_vertex) == canonical_key(reordered)


def test_direction_swap_is_isomorphic_for_mutable_path():
    q1 = Quiver([("A", False), ("B", False)], [("A", "B", 1)])
    q2 = Quiver([("A", False), ("B", False)], [("B", "A", 1)])
    assert canonical_key(q1) == canonical_key(q2)


def test_frozen_source_vs_frozen_target_differ():
    q1 = Quiver([("A", True), ("B", False)], [("A", "B", 1)])
    q2 = Quiver([("A", False), ("B", True)], [("A", "B", 1)])
    assert canonical_key(q1) != canonical_key(q2)
    assert not is_isomorphic(q1, q2)


def test_self_isomorphism_and_markov_mutation():
    markov = Quiver(
        [("X", False), ("Y", False), ("Z", False)],
        [("X", "Y", 2), ("Y", "Z", 2), ("Z", "X", 2)],
    )
    assert is_isomorphic(markov, markov)
    for v in markov.names:
        assert is_isomorphic(markov, markov.mutate(v))


def test_different_multiplicity_multisets_not_isomorphic():
    q1 = Quiver([("A", False), ("B", False)], [("A", "B", 2)])
    q2 = Quiver([("A", False), ("B", False)], [("A", "B", 3)])
    assert not is_isomorphic(q1, q2)


def test_permutation_witness_realizes_key_matrix(five_vertex):
    key, perm = canonical_form(five_vertex)
    n = len(five_vertex)
    placed = sorted(perm, key=perm.get)
    rebuilt = Quiver(
        [(name, five_vertex.is_frozen(name)) for name in placed],
        [(s, t, w) for s, t, w in five_vertex.arrows()],
    )
    # the identity relabeling of the rebuilt quiver must already be minimal
    assert canonical_key(rebuilt) == key
    rows = rebuilt._dense_rows()
    from qmut.canonical import _encode_entry
    import struct

    expect = [struct.pack(">II", n, 0)]
    for i in range(n):
        for j in range(n):
            expect.append(_encode_entry(rows[i][j]))
    assert key == b"".join(expect)


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_relabeling_invariance(data):
    rng = random.Random(data.draw(st.integers(0, 2**32)))
    q = random_quiver(rng, max_vertices=6)
    names = list(q.names)
    shuffled = names.copy()
    rng.shuffle(shuffled)
    mapping = dict(zip(names, shuffled))
    assert canonical_key(q) == canonical_key(q.relabel(mapping))


def test_is_isomorphic_equivalence_relation():
    rng = random.Random(11)
    sample = [random_quiver(rng, max_vertices=5) for _ in range(12)]
    # symmetric + transitive on the sample via key equality by construction;
    # sanity-check reflexivity and witness a nontrivial equivalence
    for q in sample:
        assert is_isomorphic(q, q)
    for q in sample:
        relabeled = q.relabel({n: f"w{i}" for i, n in enumerate(q.names)})
        assert is_isomorphic(q, relabeled)


def test_canonical_form_deterministic(five_vertex):
    k1, p1 = canonical_form(five_vertex)
    k2, p2 = canonical_form(five_vertex)
    assert k1 == k2 and p1 == p2
