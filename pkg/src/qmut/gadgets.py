"""Reduction gadgets: combinatorial instances compiled to quivers, with
independent classical oracles to certify the reductions end to end.

Subset-Sum: frozen A and B, one mutable C_i per value, arrows C_i -> A with
weight x_i and B -> C_i with weight 1.  Mutating a subset Y of the C_i (each
at most once; they commute) flips the signs on Y's arrows and leaves an
arrow B -> A of weight sum(Y), so the achievable A-B multiplicities are
exactly the subset sums.

Exact cover by 3-sets: frozen A_1..A_n and C, one mutable B_X per triple,
unit arrows A_i -> B_X (i in X), B_X -> C, C -> A_i.  Mutating B_X cancels
the icebound C-A_i arrows for i in X, so the icebound arrows vanish exactly
when the mutated triples cover every element once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    InvalidInstanceError,
    InvalidSubsetError,
    OutOfValidityWindowError,
    NonCommutingFamilyError,
    ParseError,
    TruncatedError,
)
from .explore import PairExactlyK, SearchLimits, explore, iter_orbit_pairs
from .quiver import Quiver


@dataclass(frozen=True)
class SubsetSumInstance:
    values: tuple[int, ...]
    target: int

    def __post_init__(self):
        _check_values(self.values)
        if self.target < 0:
            raise InvalidInstanceError("target must be nonnegative")


@dataclass(frozen=True)
class X3CInstance:
    """Ground set [n] and a family of 3-element subsets covering it."""

    n: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInstanceError("ground set size must be >= 1")
        seen = set()
        covered = set()
        norm = []
        for t in self.triples:
            tt = tuple(sorted(t))
            if len(tt) != 3 or len(set(tt)) != 3:
                raise InvalidInstanceError(f"triple {t!r} must have 3 distinct elements")
            if any(x < 1 or x > self.n for x in tt):
                raise InvalidInstanceError(f"triple {t!r} not within [1..{self.n}]")
            if tt in seen:
                continue  # duplicates cannot change an exact cover
            seen.add(tt)
            covered.update(tt)
            norm.append(tt)
        if covered != set(range(1, self.n + 1)):
            missing = sorted(set(range(1, self.n + 1)) - covered)
            raise InvalidInstanceError(f"elements {missing} are in no triple")
        object.__setattr__(self, "triples", tuple(norm))


def _check_values(values: Sequence[int]) -> None:
    if not values:
        raise InvalidInstanceError("need at least one value")
    for x in values:
        if not isinstance(x, int) or x < 1:
            raise InvalidInstanceError(f"values must be positive integers, got {x!r}")


def _triple_vertex(triple: tuple[int, int, int]) -> str:
    return "B_" + "-".join(str(x) for x in triple)


# -- Subset-Sum ----------------------------------------------------------------


def build_subset_sum_gadget(values: Sequence[int]) -> Quiver:
    """Frozen A, B and mutable C_1..C_n with C_i -> A: x_i, B -> C_i: 1."""
    _check_values(values)
    vertices = [("A", True), ("B", True)]
    arrows = []
    for i, x in enumerate(values, start=1):
        c = f"C{i}"
        vertices.append((c, False))
        arrows.append((c, "A", x))
        arrows.append(("B", c, 1))
    return Quiver(vertices, arrows)


def gadget_form(values: Sequence[int], subset: Iterable[int]) -> Quiver:
    """Closed form of the gadget after mutating the subset (1-based indices).

    Indices in the subset get their C_i-A and B-C_i arrows reversed, and B
    gains an arrow to A weighted by the subset's sum (absent when empty).
    """
    _check_values(values)
    y_set = set(subset)
    n = len(values)
    for j in y_set:
        if not isinstance(j, int) or j < 1 or j > n:
            raise InvalidSubsetError(f"subset index {j!r} outside 1..{n}")
    vertices = [("A", True), ("B", True)]
    arrows = []
    y = 0
    for i, x in enumerate(values, start=1):
        c = f"C{i}"
        vertices.append((c, False))
        if i in y_set:
            arrows.append(("A", c, x))
            arrows.append((c, "B", 1))
            y += x
        else:
            arrows.append((c, "A", x))
            arrows.append(("B", c, 1))
    if y:
        arrows.append(("B", "A", y))
    return Quiver(vertices, arrows)


def subset_sum_oracle(values: Sequence[int], k: int) -> bool:
    """Pseudo-polynomial dynamic programming (bitset over achievable sums)."""
    _check_values(values)
    if k < 0:
        raise ValueError("k must be nonnegative")
    total = sum(values)
    if k > total:
        return False
    reachable = 1
    for x in values:
        reachable |= reachable << x
    return bool(reachable >> k & 1)


def decide_k_via_gadget(values: Sequence[int], k: int) -> bool:
    """Does the gadget's mutation class contain a pair with exactly k arrows?

    Valid for k > 1 with k not among the values; inside that window the
    answer equals subset_sum_oracle(values, k).
    """
    _check_values(values)
    if k <= 1 or k in set(values):
        raise OutOfValidityWindowError(
            f"k={k} is outside the validity window (k > 1 and k not a value)"
        )
    q = build_subset_sum_gadget(values)
    try:
        for _mask, pairs in iter_orbit_pairs(q):
            if any(abs(v) == k for v in pairs.values()):
                return True
        return False
    except NonCommutingFamilyError:
        report = explore(q, PairExactlyK(k), SearchLimits())
        if report.witness is not None:
            return True
        if report.exhausted:
            return False
        raise TruncatedError(
            "fallback search hit limits before settling the question"
        ) from None


# -- Exact cover by 3-sets -------------------------------------------------------


def build_x3c_gadget(inst: X3CInstance) -> Quiver:
    """Frozen A_1..A_n and C, one mutable B vertex per triple, unit arrows."""
    vertices: list[tuple[str, bool]] = [(f"A{i}", True) for i in range(1, inst.n + 1)]
    arrows = []
    for t in inst.triples:
        b = _triple_vertex(t)
        vertices.append((b, False))
        for i in t:
            arrows.append((f"A{i}", b, 1))
        arrows.append((b, "C", 1))
    vertices.append(("C", True))
    for i in range(1, inst.n + 1):
        arrows.append(("C", f"A{i}", 1))
    return Quiver(vertices, arrows)


def x3c_oracle(inst: X3CInstance) -> bool:
    """Exhaustive exact-cover search, branching on the scarcest element."""
    if inst.n % 3 != 0:
        return False
    by_elem: dict[int, list[frozenset[int]]] = {i: [] for i in range(1, inst.n + 1)}
    for t in inst.triples:
        fs = frozenset(t)
        for i in t:
            by_elem[i].append(fs)

    def solve(uncovered: frozenset[int]) -> bool:
        if not uncovered:
            return True
        elem = min(uncovered, key=lambda i: sum(t <= uncovered for t in by_elem[i]))
        for t in by_elem[elem]:
            if t <= uncovered:
                if solve(uncovered - t):
                    return True
        return False

    return solve(frozenset(range(1, inst.n + 1)))


def decide_icebound_free_via_gadget(inst: X3CInstance) -> bool:
    """Can some mutation sequence remove every icebound arrow from the gadget?

    Enumerates the commuting orbit (the gadget's mutable vertices are pairwise
    nonadjacent) and answers True on the first icebound-free member; equals
    x3c_oracle(inst).
    """
    q = build_x3c_gadget(inst)
    flags = q.frozen_flags
    for _mask, pairs in iter_orbit_pairs(q):
        if not any(flags[i] and flags[j] for (i, j) in pairs):
            return True
    return False


# -- instance text formats --------------------------------------------------------


def parse_subset_sum_text(text: str) -> SubsetSumInstance:
    """First line: comma-separated positive values; second line: target k."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ParseError("expected two lines: values then target")
    try:
        values = tuple(int(tok) for tok in lines[0].split(",") if tok.strip() != "")
    except ValueError as err:
        raise ParseError(f"line 1: bad value list: {err}") from None
    try:
        target = int(lines[1])
    except ValueError:
        raise ParseError(f"line 2: bad target {lines[1]!r}") from None
    try:
        return SubsetSumInstance(values=values, target=target)
    except InvalidInstanceError as err:
        raise ParseError(str(err)) from err


def parse_x3c_text(text: str) -> X3CInstance:
    """First line: n; each further line: one triple "i j k"."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty instance")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"line 1: bad ground-set size {lines[0]!r}") from None
    triples = []
    for lineno, ln in enumerate(lines[1:], start=2):
        toks = ln.split()
        if len(toks) != 3:
            raise ParseError(f"line {lineno}: expected three integers, got {ln!r}")
        try:
            triples.append(tuple(int(t) for t in toks))
        except ValueError:
            raise ParseError(f"line {lineno}: bad triple {ln!r}") from None
    try:
        return X3CInstance(n=n, triples=tuple(triples))
    except InvalidInstanceError as err:
        raise ParseError(str(err)) from err
