"""Finite lattices given by their covering relation.

Elements are the dense ids ``0..size-1``. The order is materialized as a
boolean ``size x size`` table; join and meet tables are precomputed for
lattices with at most ``TABLE_LIMIT`` elements and answered by scanning
otherwise.
"""

from __future__ import annotations

from functools import cached_property, reduce
from graphlib import CycleError, TopologicalSorter
from typing import Hashable, Iterable, Iterator, Sequence

import networkx as nx
import numpy as np

TABLE_LIMIT = 512

Chain = tuple[int, ...]


class LatticeError(ValueError):
    """Raised when input does not describe a finite lattice."""


class CycleDetected(LatticeError):
    pass


class NotTransitivelyReduced(LatticeError):
    def __init__(self, pair: tuple[int, int], via: int):
        super().__init__(f"covering pair {pair} is implied through element {via}")
        self.pair = pair
        self.via = via


class NoUniqueBound(LatticeError):
    def __init__(self, a: int, b: int, kind: str):
        super().__init__(f"elements {a} and {b} have no {kind}")
        self.a, self.b, self.kind = a, b, kind


class MultipleBottoms(LatticeError):
    pass


class MultipleTops(LatticeError):
    pass


def _lub_rows(P: np.ndarray, rows: np.ndarray):
    """For each ``a`` in ``rows`` and every ``b``, the least common upper bound.

    ``P`` is the order table with indices in a linear extension, so the least
    upper bound (if any) is the first upper bound in index order. Returns the
    candidate positions and a mask saying whether each candidate really is the
    least one.
    """
    ub = P[rows][:, None, :] & P[None, :, :]
    first = ub.argmax(axis=2)
    below_first = P[first]
    ok = ub[np.arange(len(rows))[:, None], np.arange(P.shape[0])[None, :], first]
    ok &= ~(ub & ~below_first).any(axis=2)
    return first, ok


def _bound_table(P: np.ndarray, order: np.ndarray, kind: str, check_only: bool = False):
    m = P.shape[0]
    table = None if check_only else np.empty((m, m), dtype=np.int32)
    block = max(1, 2_000_000 // max(1, m * m))
    for start in range(0, m, block):
        rows = np.arange(start, min(m, start + block))
        first, ok = _lub_rows(P, rows)
        if not ok.all():
            i, j = np.argwhere(~ok)[0]
            raise NoUniqueBound(int(order[rows[i]]), int(order[j]), kind)
        if table is not None:
            table[rows] = first
    return table


class FiniteLattice:
    """A finite lattice built from its covering pairs ``(a, b)``, meaning a < b.

    Construction validates everything eagerly: ids in range, acyclicity,
    transitive reduction, unique bottom and top, and existence of all joins and
    meets. ``labels`` optionally names the elements (vectors, sets, ...); they
    play no part in the order.
    """

    def __init__(
        self,
        size: int,
        covers: Iterable[tuple[int, int]],
        labels: Sequence[Hashable] | None = None,
    ):
        if size < 1:
            raise LatticeError("a lattice needs at least one element")
        covers = frozenset((int(a), int(b)) for a, b in covers)
        for a, b in covers:
            if not (0 <= a < size and 0 <= b < size):
                raise LatticeError(f"covering pair {(a, b)} references an id outside 0..{size - 1}")
            if a == b:
                raise CycleDetected(f"self-loop at {a}")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != size:
                raise LatticeError("labels must name every element")
        self.size = size
        self.covers = covers
        self.labels = labels

        upper: list[list[int]] = [[] for _ in range(size)]
        lower: list[list[int]] = [[] for _ in range(size)]
        for a, b in sorted(covers):
            upper[a].append(b)
            lower[b].append(a)
        self.upper_covers = tuple(tuple(u) for u in upper)
        self.lower_covers = tuple(tuple(l) for l in lower)

        sorter = TopologicalSorter({b: lower[b] for b in range(size)})
        try:
            order = list(sorter.static_order())
        except CycleError as exc:
            raise CycleDetected(f"covering relation has a cycle through {exc.args[1]}") from None
        self._order = np.array(order, dtype=np.int64)
        self._pos = np.empty(size, dtype=np.int64)
        self._pos[self._order] = np.arange(size)

        leq = np.eye(size, dtype=bool)
        for a in reversed(order):
            for b in upper[a]:
                leq[a] |= leq[b]
        leq.flags.writeable = False
        self.leq = leq

        for a, b in covers:
            between = leq[a] & leq[:, b]
            between[a] = between[b] = False
            if between.any():
                raise NotTransitivelyReduced((a, b), int(np.argmax(between)))

        bottoms = [x for x in range(size) if not lower[x]]
        tops = [x for x in range(size) if not upper[x]]
        if len(bottoms) > 1:
            raise MultipleBottoms(f"minimal elements {bottoms}")
        if len(tops) > 1:
            raise MultipleTops(f"maximal elements {tops}")
        self.bottom = bottoms[0]
        self.top = tops[0]

        self._P = leq[np.ix_(self._order, self._order)]
        if size <= TABLE_LIMIT:
            self.join_table = self._table("join")
            self.meet_table = self._table("meet")
        else:
            self.join_table = self.meet_table = None
            _bound_table(self._P, self._order, "join", check_only=True)
            _bound_table(self._P.T[::-1, ::-1].copy(), self._order[::-1], "meet", check_only=True)

    def _table(self, kind: str) -> np.ndarray:
        if kind == "join":
            pos_table = _bound_table(self._P, self._order, "join")
            order, pos = self._order, self._pos
        else:
            rev = self._order[::-1]
            pos_table = _bound_table(self._P.T[::-1, ::-1].copy(), rev, "meet")
            order = rev
            pos = np.empty(self.size, dtype=np.int64)
            pos[rev] = np.arange(self.size)
        table = order[pos_table][np.ix_(pos, pos)].astype(np.int32)
        table.flags.writeable = False
        return table

    @classmethod
    def from_leq(cls, leq, labels: Sequence[Hashable] | None = None) -> FiniteLattice:
        """Build from a full order table (``leq[a, b]`` iff a <= b)."""
        leq = np.asarray(leq, dtype=bool)
        lt = leq & ~np.eye(len(leq), dtype=bool)
        cover = lt & ~((lt.astype(np.int32) @ lt.astype(np.int32)) > 0)
        return cls(len(leq), [tuple(map(int, p)) for p in np.argwhere(cover)], labels)

    # order queries

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    def lt(self, a: int, b: int) -> bool:
        return a != b and bool(self.leq[a, b])

    def covers_pair(self, a: int, b: int) -> bool:
        return (a, b) in self.covers

    def comparable(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b] or self.leq[b, a])

    def join(self, a: int, b: int) -> int:
        if self.join_table is not None:
            return int(self.join_table[a, b])
        ub = self._P[self._pos[a]] & self._P[self._pos[b]]
        return int(self._order[ub.argmax()])

    def meet(self, a: int, b: int) -> int:
        if self.meet_table is not None:
            return int(self.meet_table[a, b])
        lb = self._P[:, self._pos[a]] & self._P[:, self._pos[b]]
        return int(self._order[len(lb) - 1 - lb[::-1].argmax()])

    def join_all(self, elems: Iterable[int]) -> int:
        return reduce(self.join, elems, self.bottom)

    def meet_all(self, elems: Iterable[int]) -> int:
        return reduce(self.meet, elems, self.top)

    def filter(self, x: int) -> frozenset[int]:
        """The principal filter of ``x`` (everything above it)."""
        return frozenset(np.flatnonzero(self.leq[x]).tolist())

    def ideal(self, x: int) -> frozenset[int]:
        return frozenset(np.flatnonzero(self.leq[:, x]).tolist())

    def interval(self, a: int, b: int) -> list[int]:
        return np.flatnonzero(self.leq[a] & self.leq[:, b]).tolist()

    # heights, irreducibles

    @cached_property
    def heights(self) -> tuple[int, ...]:
        # longest path from the bottom, so non-graded input still gets a value
        h = [0] * self.size
        for x in self._order.tolist():
            for y in self.upper_covers[x]:
                h[y] = max(h[y], h[x] + 1)
        return tuple(h)

    def height(self, x: int) -> int:
        return self.heights[x]

    @property
    def length(self) -> int:
        return self.heights[self.top]

    def join_irreducibles(self) -> frozenset[int]:
        return frozenset(x for x in range(self.size) if len(self.lower_covers[x]) == 1)

    def meet_irreducibles(self) -> frozenset[int]:
        return frozenset(x for x in range(self.size) if len(self.upper_covers[x]) == 1)

    def up_star(self, x: int) -> int:
        """Join of all upper covers of ``x``; the top maps to itself."""
        if not self.upper_covers[x]:
            return x
        return self.join_all(self.upper_covers[x])

    # chains

    def maximal_chains(self) -> Iterator[Chain]:
        """Every maximal chain, lexicographic by element ids."""
        stack: list[int] = [self.bottom]

        def walk(x: int) -> Iterator[Chain]:
            if x == self.top:
                yield tuple(stack)
                return
            for y in self.upper_covers[x]:
                stack.append(y)
                yield from walk(y)
                stack.pop()

        yield from walk(self.bottom)

    def is_maximal_chain(self, chain: Sequence[int]) -> bool:
        if not chain or chain[0] != self.bottom or chain[-1] != self.top:
            return False
        return all((a, b) in self.covers for a, b in zip(chain, chain[1:]))

    def extend_to_maximal_chain(self, elems: Iterable[int]) -> Chain:
        """Smallest-id completion of a chain of elements to a maximal chain."""
        elems = sorted(set(elems) | {self.bottom, self.top}, key=lambda x: self._pos[x])
        for a, b in zip(elems, elems[1:]):
            if not self.leq[a, b]:
                raise ValueError(f"{a} and {b} are incomparable")
        out = [self.bottom]
        for target in elems[1:]:
            x = out[-1]
            while x != target:
                x = next(y for y in self.upper_covers[x] if self.leq[y, target])
                out.append(x)
        return tuple(out)

    # subsets

    def join_closure(self, subset: Iterable[int]) -> frozenset[int]:
        closed = set(subset)
        if not closed:
            raise ValueError("join_closure needs a nonempty subset")
        frontier = list(closed)
        while frontier:
            x = frontier.pop()
            for y in list(closed):
                z = self.join(x, y)
                if z not in closed:
                    closed.add(z)
                    frontier.append(z)
        return frozenset(closed)

    def width(self, subset: Iterable[int] | None = None) -> int:
        """Largest antichain inside ``subset`` (default: whole lattice).

        Dilworth: the width equals the minimum number of chains covering the
        subset, which is ``|subset|`` minus a maximum matching of the strict
        order viewed as a bipartite graph.
        """
        return len(self.chain_partition(subset))

    def chain_partition(self, subset: Iterable[int] | None = None) -> list[list[int]]:
        """A minimum partition of ``subset`` into chains, each sorted upward."""
        elems = sorted(range(self.size) if subset is None else set(subset))
        if not elems:
            return []
        g = nx.Graph()
        left = [("L", a) for a in elems]
        g.add_nodes_from(left)
        g.add_nodes_from(("R", b) for b in elems)
        g.add_edges_from(
            (("L", a), ("R", b)) for a in elems for b in elems if a != b and self.leq[a, b]
        )
        matching = nx.bipartite.hopcroft_karp_matching(g, top_nodes=left)
        succ = {a: matching[("L", a)][1] for a in elems if ("L", a) in matching}
        has_pred = set(succ.values())
        chains = []
        for a in elems:
            if a in has_pred:
                continue
            chain = [a]
            while chain[-1] in succ:
                chain.append(succ[chain[-1]])
            chains.append(chain)
        return chains

    def induced(self, subset: Iterable[int]) -> tuple[FiniteLattice, list[int]]:
        """The subposet on ``subset`` (which must form a lattice), plus the id map."""
        elems = sorted(set(subset))
        sub = self.leq[np.ix_(elems, elems)]
        labels = None if self.labels is None else [self.labels[e] for e in elems]
        return FiniteLattice.from_leq(sub, labels), elems

    def dual(self) -> FiniteLattice:
        return FiniteLattice(self.size, [(b, a) for a, b in self.covers], self.labels)

    def label(self, x: int) -> Hashable:
        return x if self.labels is None else self.labels[x]

    def hasse_digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(self.size))
        g.add_edges_from(self.covers)
        return g

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"FiniteLattice(size={self.size}, covers={sorted(self.covers)})"


def lattices_isomorphic(a: FiniteLattice, b: FiniteLattice) -> bool:
    """Exact isomorphism test on Hasse diagrams, pruned by a height profile."""
    if a.size != b.size or len(a.covers) != len(b.covers):
        return False
    if lattice_invariant(a) != lattice_invariant(b):
        return False
    return nx.is_isomorphic(a.hasse_digraph(), b.hasse_digraph())


def lattice_invariant(lat: FiniteLattice) -> tuple:
    """Sorted (height, #lower covers, #upper covers) profile; equal for isomorphic lattices."""
    return tuple(
        sorted(
            (lat.heights[x], len(lat.lower_covers[x]), len(lat.upper_covers[x]))
            for x in range(lat.size)
        )
    )


def lattice_isomorphism(a: FiniteLattice, b: FiniteLattice) -> dict[int, int] | None:
    if a.size != b.size or lattice_invariant(a) != lattice_invariant(b):
        return None
    matcher = nx.algorithms.isomorphism.DiGraphMatcher(a.hasse_digraph(), b.hasse_digraph())
    return next(matcher.isomorphisms_iter(), None)


def feet_table(lat: FiniteLattice, chains: Sequence[Chain]) -> np.ndarray:
    """Array ``F[u, i]`` = largest j with ``chains[i][j] <= u``.

    The chain elements below ``u`` form a prefix of the chain, so the foot is
    that prefix length minus one.
    """
    rows = [lat.leq[list(c), :].sum(axis=0) - 1 for c in chains]
    return np.stack(rows, axis=1).astype(np.int64)


# standard small lattices


def chain_lattice(n: int) -> FiniteLattice:
    """The chain 0 < 1 < ... < n (length n)."""
    return FiniteLattice(n + 1, [(i, i + 1) for i in range(n)])


def boolean_lattice(n: int) -> FiniteLattice:
    """Subsets of an n-set, element id = bitmask."""
    covers = [(s, s | 1 << i) for s in range(1 << n) for i in range(n) if not s >> i & 1]
    labels = [frozenset(i + 1 for i in range(n) if s >> i & 1) for s in range(1 << n)]
    return FiniteLattice(1 << n, covers, labels)


def diamond() -> FiniteLattice:
    """M_3: bottom 0, atoms 1, 2, 3, top 4."""
    return FiniteLattice(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def pentagon() -> FiniteLattice:
    """N_5: 0 < 1 < 2 < 4 and 0 < 3 < 4."""
    return FiniteLattice(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


def diamond_with_tail() -> FiniteLattice:
    """M_3 whose top is covered by one more element."""
    return FiniteLattice(6, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4), (4, 5)])
