"""Alternating mutation dynamics on quivers with exactly two mutable vertices.

With mutable vertices C and D, the only new quivers come from alternating
mu_C and mu_D.  Writing alpha for the C-D multiplicity: alpha = 0 gives a
labeled class of at most 4, alpha = 1 at most 10, alpha = 2 linear growth of
the arrow count, alpha >= 3 exponential growth, and for alpha >= 2 the ratio
of the A-C to A-D multiplicities tends to (alpha + sqrt(alpha^2 - 4)) / 2.

Once the trajectory settles into one of two shapes (an "alternating state"),
each mutation is the integer map (x, y) -> (alpha*x - y, x) on each frozen
side, which closed_form_step applies without touching the quiver engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import (
    DegenerateVertexError,
    InconclusiveError,
    InsufficientStepsError,
    InvalidWeightsError,
    TruncatedError,
    ValidityWindowViolatedError,
    WrongMutableCountError,
)
from .explore import (
    ISOMORPHISM,
    LABELED,
    CollectPairMultiplicities,
    SearchLimits,
    explore,
)
from .quiver import Quiver


def _two_mutables(q: Quiver, c: str, d: str) -> None:
    mutable = set(q.mutable_names())
    if len(mutable) != 2:
        raise WrongMutableCountError(
            f"need exactly two mutable vertices, quiver has {len(mutable)}"
        )
    if {c, d} != mutable:
        raise WrongMutableCountError(
            f"mutable vertices are {sorted(mutable)}, not {sorted({c, d})}"
        )


@dataclass
class DynamicsTrace:
    """States of (mu_D mu_C)^n with every intermediate half step recorded.

    states[2n] is the quiver after n full alternation steps; states[2n+1]
    is the half step after the extra mu_C.
    """

    c: str
    d: str
    states: list[Quiver]
    mutated: list[str | None]  # vertex whose mutation produced each state

    @property
    def n_steps(self) -> int:
        return (len(self.states) - 1) // 2

    @property
    def alpha(self) -> int:
        return self.states[0].multiplicity(self.c, self.d)

    def full_state(self, n: int) -> Quiver:
        return self.states[2 * n]

    def full_states(self) -> list[Quiver]:
        return self.states[0::2]

    def delta(self, u: str, v: str, n: int) -> int:
        """Arrows between u and v after n full steps."""
        return self.full_state(n).multiplicity(u, v)

    def totals(self) -> list[int]:
        """Total arrow count after each full step."""
        return [s.total_arrows() for s in self.full_states()]

    def pair_table(self, n: int) -> dict[tuple[str, str], int]:
        q = self.full_state(n)
        names = q.names
        return {
            (names[i], names[j]): q.multiplicity(names[i], names[j])
            for i in range(len(names))
            for j in range(i + 1, len(names))
        }

    def export_columns(self) -> str:
        """Columnar text: one row per full step, header first.

        Columns: step, one per unordered vertex pair ("U,V", multiplicity as a
        decimal string), total.
        """
        names = self.states[0].names
        pairs = [
            (names[i], names[j])
            for i in range(len(names))
            for j in range(i + 1, len(names))
        ]
        header = ["step"] + [f"{u},{v}" for u, v in pairs] + ["total"]
        lines = ["\t".join(header)]
        for n, q in enumerate(self.full_states()):
            row = [str(n)]
            row += [str(q.multiplicity(u, v)) for u, v in pairs]
            row.append(str(q.total_arrows()))
            lines.append("\t".join(row))
        return "\n".join(lines) + "\n"


def alt_orbit(q: Quiver, c: str, d: str, n_steps: int) -> DynamicsTrace:
    """Iterate mu_C then mu_D n_steps times, recording every half step."""
    if n_steps < 1:
        raise ValueError("n_steps must be >= 1")
    _two_mutables(q, c, d)
    states = [q]
    mutated: list[str | None] = [None]
    cur = q
    for _ in range(n_steps):
        cur = cur.mutate(c)
        states.append(cur)
        mutated.append(c)
        cur = cur.mutate(d)
        states.append(cur)
        mutated.append(d)
    return DynamicsTrace(c=c, d=d, states=states, mutated=mutated)


def has_nontrivial_start(q: Quiver, c: str, d: str) -> bool:
    """Is some frozen vertex adjacent to C or D? (Otherwise the alternation
    only flips the C-D arrow back and forth.)"""
    _two_mutables(q, c, d)
    return any(
        q.multiplicity(f, m) > 0 for f in q.frozen_names() for m in (c, d)
    )


def orbit_size(q: Quiver, limits: SearchLimits | None = None) -> tuple[int, int]:
    """(labeled count, isomorphism-class count) of the full mutation class.

    Raises Truncated when limits interrupt either enumeration, since a bound
    claim needs exhaustion.
    """
    mutable = q.mutable_names()
    if len(mutable) != 2:
        raise WrongMutableCountError(
            f"need exactly two mutable vertices, quiver has {len(mutable)}"
        )
    counts = []
    for mode in (LABELED, ISOMORPHISM):
        report = explore(q, None, limits, dedup=mode)
        if not report.exhausted:
            raise TruncatedError(
                f"{mode} enumeration hit limits: {sorted(report.truncated_by)}"
            )
        counts.append(report.visited)
    return counts[0], counts[1]


# -- closed form ------------------------------------------------------------------


@dataclass(frozen=True)
class AltState:
    """One of the two recurring shapes of the four-vertex alternation.

    Form 1 (alpha arrows C -> D): x = b(A,C), y = b(D,A), z = b(B,C),
    w = b(D,B).  Form 2 (alpha arrows D -> C): the same slots hold
    p = b(C,A), q = b(A,D), r = b(C,B), s = b(B,D).  Values are signed;
    early burn-in states legitimately carry a negative B-side entry.
    ``top`` is the signed A-B entry, constant once both shapes apply.
    """

    form: int
    alpha: int
    top: int
    x: int
    y: int
    z: int
    w: int

    def __post_init__(self):
        if self.form not in (1, 2):
            raise ValueError("form must be 1 or 2")
        if self.alpha < 2:
            raise ValueError("closed form needs alpha >= 2")

    def step(self) -> "AltState":
        """Apply mu_C (form 1 -> 2) or mu_D (form 2 -> 1).

        Valid while the shape conditions hold: the mutating vertex's in-arrows
        from A and B point forward (x, z >= 0 for form 1; q, s >= 0 for form
        2) and the strict inequalities alpha*x > y, alpha*z > w (resp.
        alpha*q > p, alpha*s > r) keep the produced entries in shape.
        """
        a = self.alpha
        x, y, z, w = self.x, self.y, self.z, self.w
        if self.form == 1:
            if x < 0 or z < 0 or a * x <= y or a * z <= w:
                raise ValidityWindowViolatedError(
                    f"state {self} left the closed-form validity window"
                )
            # mu_C: Q1(x,y,z,w) -> Q2(x, a*x - y, z, a*z - w)
            return AltState(2, a, self.top, x, a * x - y, z, a * z - w)
        # form 2 slots hold (p, q, r, s) = (x, y, z, w)
        if y < 0 or w < 0 or a * y <= x or a * w <= z:
            raise ValidityWindowViolatedError(
                f"state {self} left the closed-form validity window"
            )
        # mu_D: Q2(p,q,r,s) -> Q1(a*q - p, q, a*s - r, s)
        return AltState(1, a, self.top, a * y - x, y, a * w - z, w)

    def to_quiver(self, a: str = "A", b: str = "B", c: str = "C", d: str = "D") -> Quiver:
        entries = {}
        if self.form == 1:
            entries[(a, c)] = self.x
            entries[(d, a)] = self.y
            entries[(b, c)] = self.z
            entries[(d, b)] = self.w
            entries[(c, d)] = self.alpha
        else:
            entries[(c, a)] = self.x
            entries[(a, d)] = self.y
            entries[(c, b)] = self.z
            entries[(b, d)] = self.w
            entries[(d, c)] = self.alpha
        entries[(a, b)] = self.top
        arrows = []
        for (u, v), val in entries.items():
            if val > 0:
                arrows.append((u, v, val))
            elif val < 0:
                arrows.append((v, u, -val))
        return Quiver([(a, True), (b, True), (c, False), (d, False)], arrows)


def alt_state_from_quiver(q: Quiver, c: str, d: str, a: str, b: str) -> AltState:
    """Read a four-vertex quiver as an AltState (form from the C-D direction)."""
    alpha_signed = q.b(c, d)
    if alpha_signed == 0:
        raise ValueError("C and D must be adjacent for the closed form")
    if alpha_signed > 0:
        return AltState(1, alpha_signed, q.b(a, b), q.b(a, c), q.b(d, a), q.b(b, c), q.b(d, b))
    return AltState(2, -alpha_signed, q.b(a, b), q.b(c, a), q.b(a, d), q.b(c, b), q.b(b, d))


def closed_form_step(state: AltState) -> AltState:
    """One mutation in closed form; see AltState.step."""
    return state.step()


def ratio_fixed_point_map(alpha: int, t: Fraction) -> Fraction:
    """The full-step ratio map f(t) = alpha - t / (alpha*t - 1)."""
    return alpha - t / (alpha * t - 1)


def ratio_target(alpha: int) -> float:
    """Limit of the A-C over A-D multiplicity ratio, (alpha + sqrt(alpha^2-4))/2."""
    if alpha < 2:
        raise ValueError("ratio target needs alpha >= 2")
    return (alpha + math.sqrt(alpha * alpha - 4)) / 2


# -- growth classification -----------------------------------------------------------


class Growth(NamedTuple):
    kind: str  # "periodic" | "linear" | "exponential"
    period: int | None = None


def classify_growth(trace: DynamicsTrace) -> Growth:
    """Classify the full-step trajectory.

    Periodic when a labeled state repeats; otherwise linear when the last
    half of the total-arrow second differences are exactly zero; otherwise
    exponential when consecutive totals keep the ratio >= 1 + 1/(2*alpha)
    over the same window.  Exact integer tests throughout.
    """
    n = trace.n_steps
    if n < 12:
        raise InconclusiveError(f"need at least 12 full steps, trace has {n}")

    seen: dict[Quiver, int] = {}
    for idx, state in enumerate(trace.full_states()):
        if state in seen:
            return Growth("periodic", idx - seen[state])
        seen[state] = idx

    totals = trace.totals()
    window = (n + 1) // 2
    second = [
        totals[i + 2] - 2 * totals[i + 1] + totals[i] for i in range(len(totals) - 2)
    ]
    if all(v == 0 for v in second[-window:]):
        return Growth("linear")

    alpha = max(trace.alpha, 1)
    lo = len(totals) - 1 - window
    exponential = all(
        2 * alpha * totals[i + 1] >= (2 * alpha + 1) * totals[i] and totals[i] > 0
        for i in range(max(lo, 0), len(totals) - 1)
    )
    if exponential:
        return Growth("exponential")
    raise InconclusiveError("trajectory matches neither the linear nor exponential rule")


def ratio_limit_check(
    trace: DynamicsTrace, a: str, tol: float
) -> tuple[float, float, bool]:
    """Compare the final delta(A,C)/delta(A,D) against the alpha >= 2 target.

    The estimate is an exact rational, rounded to float only on return.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    alpha = trace.alpha
    if alpha < 2:
        raise ValueError("ratio limit needs alpha >= 2")
    root = trace.states[0]
    if a not in root.names or not root.is_frozen(a):
        raise DegenerateVertexError(f"{a!r} must be a frozen vertex of the quiver")
    c, d = trace.c, trace.d
    connected = any(
        s.multiplicity(a, c) > 0 or s.multiplicity(a, d) > 0 for s in trace.states
    )
    if not connected:
        raise DegenerateVertexError(f"{a!r} is never adjacent to {c!r} or {d!r}")
    n = trace.n_steps
    denom = trace.delta(a, d, n)
    if denom == 0:
        raise InsufficientStepsError(
            f"delta({a},{d}) is zero after {n} steps; trace too short"
        )
    estimate = Fraction(trace.delta(a, c, n), denom)
    target = ratio_target(alpha)
    value = float(estimate)
    return value, target, abs(value - target) < tol


# -- path quivers and the product conjecture ---------------------------------------


def build_path_quiver(weights: Sequence[int]) -> Quiver:
    """Frozen A -> C_1 -> ... -> C_k -> frozen B with the given arrow weights."""
    if not weights:
        raise InvalidWeightsError("need at least one weight")
    for wgt in weights:
        if not isinstance(wgt, int) or wgt < 1:
            raise InvalidWeightsError(f"weights must be positive integers, got {wgt!r}")
    k = len(weights) - 1
    vertices: list[tuple[str, bool]] = [("A", True)]
    vertices += [(f"C{i}", False) for i in range(1, k + 1)]
    vertices.append(("B", True))
    chain = ["A"] + [f"C{i}" for i in range(1, k + 1)] + ["B"]
    arrows = [(chain[i], chain[i + 1], weights[i]) for i in range(len(weights))]
    return Quiver(vertices, arrows)


@dataclass(frozen=True)
class ConjectureReport:
    observed: frozenset[int]
    consistent: bool
    exhausted: bool
    product: int
    visited: int
    truncated_by: frozenset[str]


def conjecture_scan(
    weights: Sequence[int], limits: SearchLimits | None = None
) -> ConjectureReport:
    """Collect the A-B multiplicities over the (bounded) mutation class.

    ``consistent`` means every observed value is 0 or the product of the
    weights.  Labeled deduplication; truncation is reported, not raised.
    """
    q = build_path_quiver(weights)
    report = explore(q, CollectPairMultiplicities("A", "B"), limits, dedup=LABELED)
    product = 1
    for wgt in weights:
        product *= wgt
    observed = report.collected or frozenset()
    return ConjectureReport(
        observed=observed,
        consistent=observed <= {0, product},
        exhausted=report.exhausted,
        product=product,
        visited=report.visited,
        truncated_by=report.truncated_by,
    )
