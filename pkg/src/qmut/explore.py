"""Bounded breadth-first exploration of mutation classes.

States are deduplicated either by labeled exchange data or by canonical key;
searches stop on the first witness, on exhaustion, or on a limit.  Witness
sequences are the shortest possible and, among shortest, the first in child
generation order (vertex insertion order), so runs are reproducible.

Also provides the commuting-orbit enumerator used by the hardness gadgets:
when the mutable vertices are pairwise nonadjacent, every mutation sequence
collapses to a subset of single mutations (involutions that commute), so the
whole class is the 2^m subsets.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterator, Union

from .canonical import _key_from_parts
from .errors import MutableAdjacencyError, NonCommutingFamilyError
from .quiver import PairMap, Quiver, _max_multiplicity, _mutate_pairs

LABELED = "labeled"
ISOMORPHISM = "isomorphism"

DEFAULT_MAX_STATES = 1_000_000
DEFAULT_MAX_MULTIPLICITY = 1 << 64


@dataclass(frozen=True)
class SearchLimits:
    """Resource bounds for explore(); None means unlimited."""

    max_states: int = DEFAULT_MAX_STATES
    max_depth: int | None = None
    max_multiplicity: int | None = DEFAULT_MAX_MULTIPLICITY
    time_budget_ms: int | None = None

    def __post_init__(self):
        for name in ("max_states", "max_depth", "max_multiplicity", "time_budget_ms"):
            val = getattr(self, name)
            if val is not None and val < 1:
                raise ValueError(f"{name} must be >= 1 when present, got {val}")


@dataclass(frozen=True)
class PairExactlyK:
    """Some unordered pair has exactly k arrows between them."""

    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be nonnegative")


@dataclass(frozen=True)
class NoIcebound:
    """No arrows between frozen vertices."""


@dataclass(frozen=True)
class CollectPairMultiplicities:
    """No early stop; gather the multiplicities between a fixed pair."""

    u: str
    v: str


Predicate = Union[PairExactlyK, NoIcebound, CollectPairMultiplicities, None]


@dataclass(frozen=True)
class ExplorationReport:
    visited: int
    dedup_mode: str
    exhausted: bool
    witness: tuple[str, ...] | None
    truncated_by: frozenset[str]
    collected: frozenset[int] | None = None

    def to_json(self) -> dict:
        return {
            "visited": self.visited,
            "dedup": self.dedup_mode,
            "exhausted": self.exhausted,
            "witness": list(self.witness) if self.witness is not None else None,
            "truncated_by": sorted(self.truncated_by),
            "collected": sorted(str(v) for v in self.collected)
            if self.collected is not None
            else None,
        }


def explore(
    q: Quiver,
    predicate: Predicate,
    limits: SearchLimits | None = None,
    dedup: str = LABELED,
) -> ExplorationReport:
    """BFS from q over mutations at mutable vertices.

    The report's witness, when present, replays from q to a quiver satisfying
    the predicate.  ``exhausted`` is True only when every discovered state was
    expanded and no limit interfered, i.e. the whole class (up to the dedup
    mode) was enumerated.  States whose largest multiplicity exceeds
    ``max_multiplicity`` are recorded but not expanded.
    """
    if dedup not in (LABELED, ISOMORPHISM):
        raise ValueError(f"dedup must be {LABELED!r} or {ISOMORPHISM!r}, got {dedup!r}")
    limits = limits or SearchLimits()
    names = q.names
    flags = q.frozen_flags
    n = len(names)
    mutable_idx = [i for i, f in enumerate(flags) if not f]
    root = q._pair_map()

    def dense(pairs: PairMap) -> list[list[int]]:
        rows = [[0] * n for _ in range(n)]
        for (i, j), val in pairs.items():
            rows[i][j] = val
            rows[j][i] = -val
        return rows

    if dedup == LABELED:
        state_key = lambda pairs: frozenset(pairs.items())
    else:
        state_key = lambda pairs: _key_from_parts(flags, dense(pairs))

    check = None
    if isinstance(predicate, PairExactlyK):
        k = predicate.k
        total_pairs = n * (n - 1) // 2
        if k == 0:
            check = lambda pairs: n >= 2 and len(pairs) < total_pairs
        else:
            check = lambda pairs: any(abs(v) == k for v in pairs.values())
    elif isinstance(predicate, NoIcebound):
        check = lambda pairs: not any(flags[i] and flags[j] for (i, j) in pairs)

    collect_key = None
    collected: set[int] | None = None
    if isinstance(predicate, CollectPairMultiplicities):
        ui, vi = q._vertex(predicate.u), q._vertex(predicate.v)
        if ui == vi:
            raise ValueError("collection pair needs two distinct vertices")
        collect_key = (ui, vi) if ui < vi else (vi, ui)
        collected = set()

    states: list[PairMap] = [root]
    parents: list[tuple[int, int]] = [(-1, -1)]
    depths = [0]
    seen = {state_key(root): 0}
    truncated: set[str] = set()
    witness_at: int | None = None

    deadline = None
    if limits.time_budget_ms is not None:
        deadline = time.monotonic() + limits.time_budget_ms / 1000.0

    if collected is not None:
        collected.add(abs(root.get(collect_key, 0)))

    i = 0
    stopped = False
    while i < len(states):
        if deadline is not None and time.monotonic() > deadline:
            truncated.add("time_budget_ms")
            stopped = True
            break
        pairs = states[i]
        expand = True
        if (
            limits.max_multiplicity is not None
            and _max_multiplicity(pairs) > limits.max_multiplicity
        ):
            truncated.add("max_multiplicity")
            expand = False
        elif limits.max_depth is not None and depths[i] >= limits.max_depth:
            truncated.add("max_depth")
            expand = False
        if expand:
            for vi in mutable_idx:
                child = _mutate_pairs(pairs, vi)
                key = state_key(child)
                if key in seen:
                    continue
                if len(states) >= limits.max_states:
                    truncated.add("max_states")
                    stopped = True
                    break
                seen[key] = len(states)
                states.append(child)
                parents.append((i, vi))
                depths.append(depths[i] + 1)
                if collected is not None:
                    collected.add(abs(child.get(collect_key, 0)))
            if stopped:
                break
        if check is not None and check(pairs):
            witness_at = i
            break
        i += 1

    processed_all = (witness_at is not None and i == len(states) - 1) or (
        witness_at is None and not stopped and i >= len(states)
    )
    exhausted = processed_all and not truncated

    witness = None
    if witness_at is not None:
        steps = []
        at = witness_at
        while at > 0:
            parent, vi = parents[at]
            steps.append(names[vi])
            at = parent
        witness = tuple(reversed(steps))

    return ExplorationReport(
        visited=len(states),
        dedup_mode=dedup,
        exhausted=exhausted,
        witness=witness,
        truncated_by=frozenset(truncated),
        collected=frozenset(collected) if collected is not None else None,
    )


# -- commuting families ------------------------------------------------------


def _check_root_nonadjacent(q: Quiver) -> list[int]:
    flags = q.frozen_flags
    for (i, j) in q._pair_map():
        if not flags[i] and not flags[j]:
            raise MutableAdjacencyError(
                f"mutable vertices {q.names[i]!r} and {q.names[j]!r} are adjacent"
            )
    return [i for i, f in enumerate(flags) if not f]


def iter_orbit_pairs(q: Quiver) -> Iterator[tuple[int, PairMap]]:
    """Yield (subset bitmask, exchange data) over all 2^m mutation subsets.

    Walks subsets in Gray-code order so each step is a single mutation; valid
    only when the mutable vertices are pairwise nonadjacent (mutations then
    commute and are involutions, so subsets enumerate the whole class).  Every
    yielded state is checked to keep the mutable set nonadjacent.
    """
    mutable_idx = _check_root_nonadjacent(q)
    flags = q.frozen_flags
    m = len(mutable_idx)
    current = q._pair_map()
    yield 0, current
    for step in range(1, 1 << m):
        bit = (step & -step).bit_length() - 1
        current = _mutate_pairs(current, mutable_idx[bit])
        for (i, j) in current:
            if not flags[i] and not flags[j]:
                raise NonCommutingFamilyError(
                    "mutation created an arrow between mutable vertices"
                )
        yield step ^ (step >> 1), current


def commuting_orbit(q: Quiver) -> list[tuple[frozenset[str], Quiver]]:
    """All 2^m subset-mutation results, in binary counting order of subsets.

    Bit i of the subset corresponds to the i-th mutable vertex in insertion
    order.  Verifies order-independence on sample subsets (full set and the
    lowest pair) by re-applying them in reverse.
    """
    mutable_idx = _check_root_nonadjacent(q)
    names = q.names
    m = len(mutable_idx)
    by_mask: dict[int, PairMap] = {}
    for mask, pairs in iter_orbit_pairs(q):
        by_mask[mask] = pairs

    def apply_order(order: list[int]) -> PairMap:
        pairs = q._pair_map()
        for vi in order:
            pairs = _mutate_pairs(pairs, vi)
        return pairs

    samples = []
    if m >= 2:
        samples.append((1 << m) - 1)
        samples.append(0b11)
    for mask in samples:
        members = [mutable_idx[b] for b in range(m) if mask >> b & 1]
        if apply_order(list(reversed(members))) != by_mask[mask]:
            raise NonCommutingFamilyError(
                f"subset result depends on mutation order (mask {mask:#b})"
            )

    out = []
    for mask in range(1 << m):
        subset = frozenset(names[mutable_idx[b]] for b in range(m) if mask >> b & 1)
        out.append((subset, q._with_pairs(by_mask[mask])))
    return out
