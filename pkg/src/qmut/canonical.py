"""Canonical forms and isomorphism of quivers up to frozen-respecting relabeling.

Two quivers are considered isomorphic when a vertex bijection maps frozen to
frozen, mutable to mutable, and preserves every signed entry b(u, v).  The
canonical key is a byte string that is equal for two quivers exactly when
they are isomorphic in this sense, which is what mutation-class deduplication
needs.

Algorithm: iterated colour refinement (frozen flag first, then neighbourhood
signatures) partitions the vertices; a branch-and-bound search over the
refinement-consistent orders picks the one whose matrix is minimal under a
prefix-extendable comparison (each new vertex contributes its column against
the already-placed vertices).  Mutable vertices always precede frozen ones so
the (vertex count, frozen count) header pins which positions are frozen.
Worst case is factorial in the largest symmetric colour class; the quivers
handled here are small.
"""

from __future__ import annotations

import struct

from .quiver import Quiver


def _encode_entry(x: int) -> bytes:
    # sign byte + big-endian magnitude with 4-byte length prefix; zero is a
    # single 0x00 byte. Injective and deterministic for unbounded ints.
    if x == 0:
        return b"\x00"
    mag = abs(x)
    data = mag.to_bytes((mag.bit_length() + 7) // 8, "big")
    return (b"\x01" if x > 0 else b"\x02") + struct.pack(">I", len(data)) + data


def _refine_colors(flags: tuple[bool, ...], rows: list[list[int]]) -> list[int]:
    """Stable colour per vertex; colours are ordered with mutable before frozen."""
    n = len(flags)
    sigs = [
        (int(flags[v]), tuple(sorted(rows[v][u] for u in range(n) if u != v)))
        for v in range(n)
    ]
    order = {sig: rank for rank, sig in enumerate(sorted(set(sigs)))}
    colors = [order[s] for s in sigs]
    while True:
        sigs2 = [
            (
                colors[v],
                tuple(sorted((colors[u], rows[v][u]) for u in range(n) if u != v)),
            )
            for v in range(n)
        ]
        order = {sig: rank for rank, sig in enumerate(sorted(set(sigs2)))}
        new = [order[s] for s in sigs2]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _canonical_order(flags: tuple[bool, ...], rows: list[list[int]]) -> list[int]:
    """Vertex order (position -> original index) minimizing the matrix encoding."""
    n = len(flags)
    colors = _refine_colors(flags, rows)
    # position -> colour it must draw from (colour classes in rank order;
    # mutable colours rank below frozen ones by construction)
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    pos_color: list[int] = []
    for c in sorted(by_color):
        pos_color.extend([c] * len(by_color[c]))

    best_segs: list[tuple[int, ...]] | None = None
    best_order: list[int] | None = None
    order: list[int] = []
    used = [False] * n

    def walk(depth: int, tied: bool) -> None:
        nonlocal best_segs, best_order
        if depth == n:
            if not tied or best_order is None:
                best_segs = [
                    tuple(rows[order[i]][order[t]] for i in range(t)) for t in range(n)
                ]
                best_order = order.copy()
            return
        for cand in by_color[pos_color[depth]]:
            if used[cand]:
                continue
            seg = tuple(rows[order[i]][cand] for i in range(depth))
            child_tied = tied
            if tied and best_segs is not None:
                ref = best_segs[depth]
                if seg > ref:
                    continue
                if seg < ref:
                    child_tied = False
            used[cand] = True
            order.append(cand)
            walk(depth + 1, child_tied)
            order.pop()
            used[cand] = False

    walk(0, True)
    assert best_order is not None
    return best_order


def _key_from_parts(flags: tuple[bool, ...], rows: list[list[int]]) -> bytes:
    n = len(flags)
    order = _canonical_order(flags, rows)
    out = [struct.pack(">II", n, sum(flags))]
    for t in range(n):
        rt = rows[order[t]]
        for s in range(n):
            out.append(_encode_entry(rt[order[s]]))
    return b"".join(out)


def canonical_form(q: Quiver) -> tuple[bytes, dict[str, int]]:
    """Canonical key plus the vertex -> position relabeling that realizes it.

    Among orders realizing the minimal matrix, the lexicographically least
    placement (by original vertex position) wins, so the witness is
    deterministic.
    """
    flags = q.frozen_flags
    rows = q._dense_rows()
    order = _canonical_order(flags, rows)
    n = len(flags)
    out = [struct.pack(">II", n, sum(flags))]
    for t in range(n):
        rt = rows[order[t]]
        for s in range(n):
            out.append(_encode_entry(rt[order[s]]))
    perm = {q.names[orig]: pos for pos, orig in enumerate(order)}
    return b"".join(out), perm


def canonical_key(q: Quiver) -> bytes:
    return _key_from_parts(q.frozen_flags, q._dense_rows())


def is_isomorphic(q1: Quiver, q2: Quiver) -> bool:
    """Frozen-respecting isomorphism via canonical keys, with cheap pre-checks."""
    if len(q1) != len(q2):
        return False
    if sum(q1.frozen_flags) != sum(q2.frozen_flags):
        return False
    if _multiplicity_profile(q1) != _multiplicity_profile(q2):
        return False
    return canonical_key(q1) == canonical_key(q2)


def _multiplicity_profile(q: Quiver):
    # multiset of (|b|, endpoint flag pair) is an isomorphism invariant
    prof = []
    flags = q.frozen_flags
    for (i, j), val in q._pair_map().items():
        fi, fj = flags[i], flags[j]
        lo, hi = (fi, fj) if fi <= fj else (fj, fi)
        sign_cat = 0
        if fi != fj:
            # direction relative to the frozen endpoint matters
            frozen_is_source = (val > 0) == flags[i]
            sign_cat = 1 if frozen_is_source else 2
        prof.append((abs(val), lo, hi, sign_cat))
    return sorted(prof)
