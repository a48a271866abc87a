"""Trajectories of prime intervals and Jordan-Hoelder permutations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from networkx.utils import UnionFind

from .lattice import Chain, FiniteLattice
from .perm import DegreeMismatch, Permutation, compose, invert

__all__ = [
    "DegreeMismatch",
    "NotABijection",
    "NotWellDefined",
    "TrajectoryPartition",
    "compose",
    "covering_squares",
    "invert",
    "jh_permutation",
    "jh_permutation_minjoin",
    "jh_table",
    "prime_intervals",
    "trajectories",
]

PrimeInterval = tuple[int, int]


class NotWellDefined(ValueError):
    """Some trajectory meets a maximal chain zero times or more than once."""


class NotABijection(ValueError):
    pass


def prime_intervals(lat: FiniteLattice) -> list[PrimeInterval]:
    return sorted(lat.covers)


def covering_squares(lat: FiniteLattice) -> list[tuple[int, int, int, int]]:
    """All ``(a^b, a, b, a v b)`` with every side a covering, ``a < b`` by id.

    Two distinct upper covers of ``x`` always meet in ``x``, so it is enough to
    look at pairs of upper covers whose join covers both.
    """
    out = []
    for x in range(lat.size):
        ups = lat.upper_covers[x]
        for i, a in enumerate(ups):
            for b in ups[i + 1 :]:
                t = lat.join(a, b)
                if lat.covers_pair(a, t) and lat.covers_pair(b, t):
                    out.append((x, a, b, t))
    return out


def chain_intervals(chain: Sequence[int]) -> list[PrimeInterval]:
    return list(zip(chain, chain[1:]))


@dataclass(frozen=True)
class TrajectoryPartition:
    """Trajectories as classes of prime intervals; class ids ordered by smallest member."""

    classes: tuple[frozenset[PrimeInterval], ...]
    index: dict[PrimeInterval, int]

    def __len__(self) -> int:
        return len(self.classes)

    def of(self, interval: PrimeInterval) -> int:
        return self.index[interval]

    def chain_word(self, chain: Sequence[int]) -> tuple[int, ...]:
        """Trajectory ids met by the consecutive prime intervals of ``chain``."""
        return tuple(self.index[p] for p in chain_intervals(chain))


def trajectories(lat: FiniteLattice) -> TrajectoryPartition:
    """Union-find over prime intervals, uniting opposite sides of covering squares."""
    uf = UnionFind(prime_intervals(lat))
    for bot, a, b, top in covering_squares(lat):
        uf.union((bot, a), (b, top))
        uf.union((bot, b), (a, top))
    classes = sorted((frozenset(c) for c in uf.to_sets()), key=min)
    index = {p: i for i, c in enumerate(classes) for p in c}
    return TrajectoryPartition(tuple(classes), index)


def jh_permutation(
    lat: FiniteLattice,
    c: Chain,
    d: Chain,
    partition: TrajectoryPartition | None = None,
) -> Permutation:
    """``pi(i) = j`` iff the i-th interval of ``c`` and the j-th of ``d`` share a trajectory.

    Refuses unless every trajectory meets each chain exactly once, which is
    guaranteed for semimodular lattices without cover-preserving diamonds.
    """
    for ch in (c, d):
        if not lat.is_maximal_chain(ch):
            raise ValueError(f"{list(ch)} is not a maximal chain")
    part = partition or trajectories(lat)
    wc, wd = part.chain_word(c), part.chain_word(d)
    for name, w in (("C", wc), ("D", wd)):
        if len(set(w)) != len(w) or len(w) != len(part):
            raise NotWellDefined(
                f"chain {name} meets trajectories {list(w)} but there are {len(part)} trajectories"
            )
    where = {t: j for j, t in enumerate(wd, 1)}
    return Permutation(where[t] for t in wc)


def jh_permutation_minjoin(lat: FiniteLattice, c: Chain, d: Chain) -> Permutation:
    """``pi(i) = min{ j : c[i-1] v d[j] = c[i] v d[j] }``, computed from joins alone."""
    if len(c) != len(d):
        raise NotABijection(f"chains of lengths {len(c) - 1} and {len(d) - 1}")
    n = len(c) - 1
    images = []
    for i in range(1, n + 1):
        j = next(j for j in range(n + 1) if lat.join(c[i - 1], d[j]) == lat.join(c[i], d[j]))
        images.append(j)
    try:
        return Permutation(images)
    except ValueError:
        raise NotABijection(f"min-join formula gives {images}") from None


def jh_table(lat: FiniteLattice, chains: Sequence[Chain], partition: TrajectoryPartition | None = None) -> np.ndarray:
    """``T[c, d]`` = one-line images (1-based) of the permutation from chain c to chain d.

    Vectorized form of :func:`jh_permutation` for many chain pairs at once.
    """
    part = partition or trajectories(lat)
    words = np.array([part.chain_word(ch) for ch in chains], dtype=np.int64)
    N, n = words.shape
    if n == 0:
        return np.zeros((N, N, 0), dtype=np.int64)
    for w, ch in zip(words, chains):
        if len(set(w.tolist())) != n or n != len(part):
            raise NotWellDefined(f"chain {list(ch)} meets trajectories {w.tolist()}")
    # position of each trajectory along each chain
    pos = np.empty((N, len(part)), dtype=np.int64)
    pos[np.arange(N)[:, None], words] = np.arange(1, n + 1)[None, :]
    return pos[np.arange(N)[None, :, None], words[:, None, :]]
