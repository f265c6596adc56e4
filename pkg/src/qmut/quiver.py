"""Quivers with frozen vertices and the exchange-matrix mutation rule.

A quiver is a directed multigraph with no loops or 2-cycles.  We store the
net arrow count for each unordered vertex pair as a single signed integer
``b(u, v)``: positive means ``b(u, v)`` parallel arrows u -> v.  This makes
skew-symmetry and the no-2-cycle invariant structural (they cannot be
violated), and keeps mutation at a vertex of degree d an O(nnz + d^2)
operation regardless of how large the multiplicities grow.

Vertices carry a frozen flag.  Mutation is only permitted at mutable
vertices, but arrows between frozen vertices ("icebound" arrows) exist and
participate in the mutation rule like any others.

Quiver values are immutable; every operation returns a new quiver.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DuplicateVertexError,
    EmptySubsetError,
    FrozenVertexMutationError,
    InvalidVertexIdError,
    NonpositiveWeightError,
    QmutError,
    SameVertexError,
    SelfLoopError,
    TwoCycleInInputError,
    UnknownVertexError,
)

# (source name, target name, multiplicity >= 1)
Arrow = tuple[str, str, int]

# Internal exchange data: {(i, j) with i < j: nonzero signed int}, positive
# meaning net arrows i -> j.
PairMap = dict[tuple[int, int], int]


def _check_vertex_id(name: str) -> str:
    if not isinstance(name, str) or not name:
        raise InvalidVertexIdError(f"vertex id must be a nonempty string, got {name!r}")
    if any(ch.isspace() or ch == "," for ch in name):
        raise InvalidVertexIdError(f"vertex id may not contain whitespace or commas: {name!r}")
    return name


def _mutate_pairs(pairs: PairMap, k: int) -> PairMap:
    """Exchange-matrix mutation at vertex index ``k`` on a pair map.

    b'_ij = -b_ij when k is an endpoint, else b_ij + sgn(b_ik) * max(b_ik*b_kj, 0).
    Only pairs (u, w) with u an in-neighbour and w an out-neighbour of k can
    change, so we touch nnz entries plus |in|*|out| products.
    """
    ins: list[tuple[int, int]] = []  # (vertex, weight) of arrows into k
    outs: list[tuple[int, int]] = []  # (vertex, weight) of arrows out of k
    new: PairMap = {}
    for key, val in pairs.items():
        i, j = key
        if i == k:
            new[key] = -val
            if val > 0:
                outs.append((j, val))
            else:
                ins.append((j, -val))
        elif j == k:
            new[key] = -val
            if val > 0:
                ins.append((i, val))
            else:
                outs.append((i, -val))
        else:
            new[key] = val
    # u != w always: a single signed entry per pair means a vertex cannot be
    # both in- and out-neighbour of k.
    for u, a in ins:
        for w, c in outs:
            if u < w:
                key, delta = (u, w), a * c
            else:
                key, delta = (w, u), -a * c
            nv = new.get(key, 0) + delta
            if nv:
                new[key] = nv
            else:
                new.pop(key, None)
    return new


def _max_multiplicity(pairs: PairMap) -> int:
    return max((abs(v) for v in pairs.values()), default=0)


class Quiver:
    """An immutable quiver with named vertices and frozen flags."""

    __slots__ = ("_names", "_frozen", "_index", "_pairs", "_content")

    def __init__(
        self,
        vertices: Iterable[tuple[str, bool]],
        arrows: Iterable[tuple[str, str, int]] = (),
    ):
        names: list[str] = []
        flags: list[bool] = []
        index: dict[str, int] = {}
        for name, frozen in vertices:
            _check_vertex_id(name)
            if name in index:
                raise DuplicateVertexError(f"duplicate vertex {name!r}")
            index[name] = len(names)
            names.append(name)
            flags.append(bool(frozen))
        if not names:
            raise QmutError("a quiver needs at least one vertex")

        pairs: PairMap = {}
        for src, dst, weight in arrows:
            if src not in index:
                raise UnknownVertexError(f"unknown arrow source {src!r}")
            if dst not in index:
                raise UnknownVertexError(f"unknown arrow target {dst!r}")
            if src == dst:
                raise SelfLoopError(f"self-loop at {src!r}")
            if not isinstance(weight, int) or weight < 1:
                raise NonpositiveWeightError(
                    f"arrow {src!r}->{dst!r} needs integer weight >= 1, got {weight!r}"
                )
            i, j = index[src], index[dst]
            key = (i, j) if i < j else (j, i)
            if key in pairs:
                raise TwoCycleInInputError(
                    f"pair {src!r},{dst!r} appears in more than one arrow record"
                )
            pairs[key] = weight if i < j else -weight

        self._names = tuple(names)
        self._frozen = tuple(flags)
        self._index = index
        self._pairs = pairs
        self._content = None

    @classmethod
    def _make(cls, names, frozen, index, pairs: PairMap) -> "Quiver":
        q = object.__new__(cls)
        q._names = names
        q._frozen = frozen
        q._index = index
        q._pairs = pairs
        q._content = None
        return q

    # -- basic accessors ---------------------------------------------------

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    @property
    def frozen_flags(self) -> tuple[bool, ...]:
        return self._frozen

    def __len__(self) -> int:
        return len(self._names)

    def _vertex(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {name!r}") from None

    def is_frozen(self, name: str) -> bool:
        return self._frozen[self._vertex(name)]

    def frozen_names(self) -> tuple[str, ...]:
        return tuple(n for n, f in zip(self._names, self._frozen) if f)

    def mutable_names(self) -> tuple[str, ...]:
        return tuple(n for n, f in zip(self._names, self._frozen) if not f)

    def b(self, u: str, v: str) -> int:
        """Signed net arrow count u -> v (negative: arrows v -> u)."""
        i, j = self._vertex(u), self._vertex(v)
        if i == j:
            return 0
        if i < j:
            return self._pairs.get((i, j), 0)
        return -self._pairs.get((j, i), 0)

    def multiplicity(self, u: str, v: str) -> int:
        """Number of arrows between u and v, regardless of direction."""
        i, j = self._vertex(u), self._vertex(v)
        if i == j:
            raise SameVertexError(f"multiplicity needs two distinct vertices, got {u!r} twice")
        key = (i, j) if i < j else (j, i)
        return abs(self._pairs.get(key, 0))

    def arrows(self) -> list[Arrow]:
        """All arrows as (source, target, weight >= 1), in vertex order."""
        out = []
        for (i, j), val in sorted(self._pairs.items()):
            if val > 0:
                out.append((self._names[i], self._names[j], val))
            else:
                out.append((self._names[j], self._names[i], -val))
        return out

    def total_arrows(self) -> int:
        """Sum of all multiplicities (arrows counted with parallel copies)."""
        return sum(abs(v) for v in self._pairs.values())

    def max_multiplicity(self) -> int:
        return _max_multiplicity(self._pairs)

    def icebound_pairs(self) -> list[tuple[str, str, int]]:
        """Frozen-frozen pairs with at least one arrow, in vertex order."""
        out = []
        for (i, j), val in sorted(self._pairs.items()):
            if self._frozen[i] and self._frozen[j]:
                out.append((self._names[i], self._names[j], abs(val)))
        return out

    def has_pair_with_exactly_k(self, k: int) -> bool:
        """Is there an unordered vertex pair with exactly k arrows between them?

        For k = 0 this asks for a nonadjacent pair, which needs >= 2 vertices.
        """
        if k < 0:
            raise ValueError("k must be nonnegative")
        n = len(self._names)
        if k == 0:
            return n >= 2 and len(self._pairs) < n * (n - 1) // 2
        return any(abs(v) == k for v in self._pairs.values())

    # -- equality: labeled, independent of vertex listing order -------------

    def _content_key(self):
        if self._content is None:
            vertices = frozenset(zip(self._names, self._frozen))
            entries = set()
            for (i, j), val in self._pairs.items():
                u, v = self._names[i], self._names[j]
                if u < v:
                    entries.add((u, v, val))
                else:
                    entries.add((v, u, -val))
            self._content = (vertices, frozenset(entries))
        return self._content

    def __eq__(self, other) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self._content_key() == other._content_key()

    def __hash__(self) -> int:
        return hash(self._content_key())

    def __repr__(self) -> str:
        arrows = ", ".join(f"{s}->{t}:{w}" for s, t, w in self.arrows())
        frozen = ",".join(self.frozen_names())
        return f"Quiver({'|'.join(self._names)}; frozen={{{frozen}}}; {arrows})"

    # -- operations ----------------------------------------------------------

    def mutate(self, v: str) -> "Quiver":
        """Mutate at the mutable vertex v, returning a new quiver.

        Equivalent to the three-step rule: add a composite arrow for every
        two-step path through v, reverse all arrows at v, cancel 2-cycles.
        Arrows between frozen vertices participate like any others.
        """
        k = self._vertex(v)
        if self._frozen[k]:
            raise FrozenVertexMutationError(f"cannot mutate frozen vertex {v!r}")
        return Quiver._make(self._names, self._frozen, self._index, _mutate_pairs(self._pairs, k))

    def mutate_seq(self, steps: Sequence[str]) -> "Quiver":
        """Apply mutations left to right; errors carry the failing step index."""
        q = self
        for i, v in enumerate(steps):
            try:
                q = q.mutate(v)
            except QmutError as err:
                raise type(err)(f"step {i} ({v!r}): {err}") from err
        return q

    def restrict(self, keep: Iterable[str]) -> "Quiver":
        """Induced sub-quiver on the given vertices, frozen flags preserved."""
        wanted = set()
        for name in keep:
            idx = self._vertex(name)
            wanted.add(idx)
        if not wanted:
            raise EmptySubsetError("restriction needs a nonempty vertex subset")
        old_order = sorted(wanted)
        remap = {old: new for new, old in enumerate(old_order)}
        names = tuple(self._names[i] for i in old_order)
        flags = tuple(self._frozen[i] for i in old_order)
        index = {n: i for i, n in enumerate(names)}
        pairs = {
            (remap[i], remap[j]): val
            for (i, j), val in self._pairs.items()
            if i in wanted and j in wanted
        }
        return Quiver._make(names, flags, index, pairs)

    def relabel(self, mapping: Mapping[str, str]) -> "Quiver":
        """Rename vertices (positions and matrix unchanged)."""
        names = []
        for n in self._names:
            names.append(_check_vertex_id(mapping.get(n, n)))
        if len(set(names)) != len(names):
            raise DuplicateVertexError("relabeling produced duplicate vertex ids")
        names_t = tuple(names)
        index = {n: i for i, n in enumerate(names_t)}
        return Quiver._make(names_t, self._frozen, index, dict(self._pairs))

    # -- internals shared with the explorer ----------------------------------

    def _pair_map(self) -> PairMap:
        return self._pairs

    def _with_pairs(self, pairs: PairMap) -> "Quiver":
        return Quiver._make(self._names, self._frozen, self._index, pairs)

    def _dense_rows(self) -> list[list[int]]:
        n = len(self._names)
        rows = [[0] * n for _ in range(n)]
        for (i, j), val in self._pairs.items():
            rows[i][j] = val
            rows[j][i] = -val
        return rows


def new_quiver(
    vertices: Iterable[tuple[str, bool]],
    arrows: Iterable[tuple[str, str, int]] = (),
) -> Quiver:
    """Build a quiver from (name, frozen) vertices and weighted arrows."""
    return Quiver(vertices, arrows)


def example_five_vertex() -> Quiver:
    """The five-vertex, eight-arrow mutation showcase quiver."""
    return Quiver(
        [("A", False), ("B", False), ("C", False), ("D", False), ("E", False)],
        [("A", "B", 2), ("B", "E", 3), ("C", "B", 1), ("E", "A", 1), ("E", "D", 1)],
    )
