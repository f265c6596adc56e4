import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qmut import Quiver
from qmut.gadgets import X3CInstance


@pytest.fixture
def five_vertex():
    from qmut import example_five_vertex

    return example_five_vertex()


def random_quiver(
    rng: random.Random,
    max_vertices: int = 8,
    max_weight: int = 5,
    frozen_prob: float = 0.3,
    min_mutable: int = 1,
) -> Quiver:
    n = rng.randint(max(2, min_mutable), max_vertices)
    flags = [rng.random() < frozen_prob for _ in range(n)]
    mutable = [i for i, f in enumerate(flags) if not f]
    while len(mutable) < min_mutable:
        i = rng.randrange(n)
        flags[i] = False
        mutable = [i for i, f in enumerate(flags) if not f]
    vertices = [(f"v{i}", flags[i]) for i in range(n)]
    arrows = []
    for i in range(n):
        for j in range(i + 1, n):
            r = rng.random()
            if r < 0.45:
                continue
            w = rng.randint(1, max_weight)
            if r < 0.725:
                arrows.append((f"v{i}", f"v{j}", w))
            else:
                arrows.append((f"v{j}", f"v{i}", w))
    return Quiver(vertices, arrows)


def random_subset_sum_values(rng: random.Random, max_n: int = 12, max_x: int = 20):
    n = rng.randint(1, max_n)
    return [rng.randint(1, max_x) for _ in range(n)]


def random_x3c_instance(
    rng: random.Random, max_n: int = 15, max_triples: int = 16
) -> X3CInstance:
    """Covered-by-construction instance: chunk a shuffled ground set into
    triples (wrapping), then pad with random extras up to the cap."""
    n = rng.randint(3, max_n)
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    triples = set()
    for start in range(0, n, 3):
        chunk = [perm[(start + off) % n] for off in range(3)]
        if len(set(chunk)) == 3:
            triples.add(tuple(sorted(chunk)))
    while len(set().union(*triples)) < n:  # wrap chunk collapsed; patch coverage
        missing = sorted(set(range(1, n + 1)) - set().union(*triples))
        extra = rng.sample(range(1, n + 1), 3)
        if missing[0] not in extra:
            extra[0] = missing[0]
        if len(set(extra)) == 3:
            triples.add(tuple(sorted(extra)))
    budget = rng.randint(0, max(0, max_triples - len(triples)))
    attempts = 0
    while budget > 0 and attempts < 200:
        attempts += 1
        t = tuple(sorted(rng.sample(range(1, n + 1), 3)))
        if t not in triples:
            triples.add(t)
            budget -= 1
    assert len(triples) <= max_triples
    return X3CInstance(n=n, triples=tuple(sorted(triples)))


def two_mutable_start(beta: int, alpha: int, gamma: int) -> Quiver:
    """Frozen A, B around mutable C, D: A->C beta, C->D alpha, D->B gamma."""
    arrows = [("A", "C", beta), ("D", "B", gamma)]
    if alpha:
        arrows.insert(1, ("C", "D", alpha))
    return Quiver([("A", True), ("B", True), ("C", False), ("D", False)], arrows)
