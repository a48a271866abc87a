"""Coordinatizing join-distributive lattices by tuples of permutations.

``eta`` turns ``k - 1`` permutations of ``{1..n}`` into a lattice of
eligible ``k``-tuples with ``k`` distinguished maximal chains; ``xi`` reads
the permutations back off a chained lattice through its trajectories. The two
are inverse to each other, and ``roundtrip_perm`` / ``roundtrip_lattice``
certify that instance by instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Iterable, Iterator, Sequence

import numpy as np

from .jd import ChainsDontCoverJir, NotJoinDistributive, cdf_violation, is_join_distributive
from .lattice import Chain, FiniteLattice, feet_table, lattice_invariant, lattices_isomorphic
from .perm import Permutation, all_permutations, as_permutation, compose, invert
from .trajectories import jh_permutation, trajectories

DEFAULT_MAX_CASES = 10**6

Vector = tuple[int, ...]


class SizeLimitExceeded(ValueError):
    pass


class NotInCDF(ValueError):
    """Lattice is not semimodular, or has a cover-preserving diamond."""


class NotInLat(ValueError):
    pass


@dataclass(frozen=True)
class PermVector:
    """``k - 1`` permutations of equal degree: the images of chains 2..k relative to chain 1."""

    perms: tuple[Permutation, ...]

    def __post_init__(self):
        perms = tuple(as_permutation(p) for p in self.perms)
        if not perms:
            raise ValueError("a permutation vector needs k >= 2, i.e. at least one permutation")
        if len({p.degree for p in perms}) != 1:
            raise ValueError("all permutations must have the same degree")
        if perms[0].degree < 1:
            raise ValueError("degree must be at least 1")
        object.__setattr__(self, "perms", perms)

    @classmethod
    def of(cls, *perms: Sequence[int]) -> PermVector:
        return cls(tuple(Permutation(p) for p in perms))

    @classmethod
    def identity(cls, n: int, k: int) -> PermVector:
        if k < 2:
            raise ValueError("k must be at least 2")
        return cls((Permutation.identity(n),) * (k - 1))

    @property
    def n(self) -> int:
        return self.perms[0].degree

    @property
    def k(self) -> int:
        return len(self.perms) + 1

    def to_lists(self) -> list[list[int]]:
        return [p.to_list() for p in self.perms]

    def __repr__(self) -> str:
        return f"PermVector({self.to_lists()})"


class ExtendedVector:
    """The ``k x k`` matrix with entry (i, j) = pi_1j o pi_1i^-1 (1-based indices)."""

    def __init__(self, v: PermVector):
        first_row = (Permutation.identity(v.n),) + v.perms
        inverses = [invert(p) for p in first_row]
        self.k = v.k
        self.n = v.n
        self.matrix = tuple(
            tuple(compose(first_row[j], inverses[i]) for j in range(v.k)) for i in range(v.k)
        )
        # images[i, j, b] = pi_ij(b) for b in 1..n; columns 0 and n+1 are padding
        self.images = np.zeros((v.k, v.k, v.n + 2), dtype=np.int64)
        for i in range(v.k):
            for j in range(v.k):
                self.images[i, j, 1 : v.n + 1] = self.matrix[i][j].images

    def __getitem__(self, ij: tuple[int, int]) -> Permutation:
        i, j = ij
        return self.matrix[i - 1][j - 1]


def extend(v: PermVector) -> ExtendedVector:
    return ExtendedVector(v)


def is_eligible(v: PermVector, x: Sequence[int], ext: ExtendedVector | None = None) -> bool:
    """Whether ``pi_ij(x_i + 1) >= x_j + 1`` for all i, j with ``x_i < n``."""
    if len(x) != v.k or any(not 0 <= c <= v.n for c in x):
        raise ValueError(f"{x} is not in {{0..{v.n}}}^{v.k}")
    ext = ext or extend(v)
    for i in range(v.k):
        if x[i] == v.n:
            continue
        for j in range(v.k):
            if ext.images[i, j, x[i] + 1] < x[j] + 1:
                return False
    return True


@lru_cache(maxsize=32)
def _grid(n: int, k: int) -> np.ndarray:
    X = np.array(list(product(range(n + 1), repeat=k)), dtype=np.int64)
    X.flags.writeable = False
    return X


def eligible_tuples(v: PermVector) -> list[Vector]:
    """All eligible tuples, by filtering ``{0..n}^k``; sorted lexicographically."""
    ext = extend(v)
    X = _grid(v.n, v.k)
    ok = np.ones(len(X), dtype=bool)
    for i in range(v.k):
        low = X[:, i] < v.n
        for j in range(v.k):
            ok &= ~low | (ext.images[i, j, X[:, i] + 1] >= X[:, j] + 1)
    return [tuple(x) for x in X[ok].tolist()]


def suborbital_vectors(v: PermVector) -> frozenset[Vector]:
    """``(pi_11(b) - 1, ..., pi_1k(b) - 1)`` for b in 1..n, with pi_11 the identity."""
    rows = (Permutation.identity(v.n),) + v.perms
    return frozenset(tuple(p(b) - 1 for p in rows) for b in range(1, v.n + 1))


def eligible_tuples_by_meets(v: PermVector) -> list[Vector]:
    """All eligible tuples, generated as componentwise-min closure of the suborbitals and the top.

    Independent of :func:`is_eligible`; used to cross-check the filtering route.
    """
    top = (v.n,) * v.k
    closed = {top, *suborbital_vectors(v)}
    frontier = list(closed)
    while frontier:
        x = frontier.pop()
        for y in list(closed):
            z = tuple(map(min, x, y))
            if z not in closed:
                closed.add(z)
                frontier.append(z)
    return sorted(closed)


@dataclass(frozen=True)
class ChainedLattice:
    """A finite lattice with ``k >= 2`` distinguished maximal chains."""

    lattice: FiniteLattice
    chains: tuple[Chain, ...]

    def __post_init__(self):
        chains = tuple(tuple(int(x) for x in c) for c in self.chains)
        if len(chains) < 2:
            raise ValueError("need at least two chains")
        for c in chains:
            if not self.lattice.is_maximal_chain(c):
                raise ValueError(f"{list(c)} is not a maximal chain")
        object.__setattr__(self, "chains", chains)

    @classmethod
    def cdf(cls, lattice: FiniteLattice, chains: Iterable[Sequence[int]]) -> ChainedLattice:
        """Constructor for semimodular lattices without cover-preserving diamonds."""
        cl = cls(lattice, tuple(chains))
        cl.check_cdf()
        return cl

    @classmethod
    def lat(cls, lattice: FiniteLattice, chains: Iterable[Sequence[int]]) -> ChainedLattice:
        """Constructor for join-distributive lattices whose chains cover Jir."""
        cl = cls(lattice, tuple(chains))
        cl.check_lat()
        return cl

    def check_cdf(self) -> None:
        problem = cdf_violation(self.lattice)
        if problem:
            raise NotInCDF(problem)

    def check_lat(self) -> None:
        report = is_join_distributive(self.lattice)
        if not report:
            raise NotInLat(f"not join-distributive: {report.witness}")
        missing = self.lattice.join_irreducibles() - set().union(*map(set, self.chains))
        if missing:
            raise NotInLat(f"join-irreducibles {sorted(missing)} lie on no chain")

    @property
    def k(self) -> int:
        return len(self.chains)

    @property
    def n(self) -> int:
        return len(self.chains[0]) - 1

    def feet_table(self) -> np.ndarray:
        return feet_table(self.lattice, self.chains)


def eta(v: PermVector, method: str = "filter") -> ChainedLattice:
    """The lattice of eligible tuples with its chains C_1(pi), ..., C_k(pi).

    Elements are labelled by their tuples and numbered in lexicographic order,
    so the zero tuple is element 0. ``method="meets"`` builds the elements by
    meet-closure instead of filtering.
    """
    if method == "filter":
        tuples = eligible_tuples(v)
    elif method == "meets":
        tuples = eligible_tuples_by_meets(v)
    else:
        raise ValueError(f"unknown method {method!r}")
    X = np.array(tuples, dtype=np.int64)
    leq = (X[:, None, :] <= X[None, :, :]).all(axis=2)
    lat = FiniteLattice.from_leq(leq, tuples)
    ids = {t: i for i, t in enumerate(tuples)}
    chains = []
    for i in range(v.k):
        # the tuple initial in its i-th component t is the meet of all tuples with that component
        chain = [ids[tuple(X[X[:, i] == t].min(axis=0).tolist())] for t in range(v.n + 1)]
        chains.append(tuple(chain))
    return ChainedLattice(lat, tuple(chains))


def feet(cl: ChainedLattice, u: int) -> Vector:
    """``foot_i(u)`` = largest j with the j-th element of chain i below ``u``."""
    return tuple(int(v) for v in feet_table(cl.lattice, cl.chains)[u])


def xi(cl: ChainedLattice) -> PermVector:
    """Jordan-Hoelder permutations from the first chain to each other chain."""
    part = trajectories(cl.lattice)
    first = cl.chains[0]
    return PermVector(tuple(jh_permutation(cl.lattice, first, d, part) for d in cl.chains[1:]))


def _chain_join(cl: ChainedLattice, x: Sequence[int]) -> int:
    return cl.lattice.join_all(c[xi_] for c, xi_ in zip(cl.chains, x))


def is_L_maximal(cl: ChainedLattice, x: Sequence[int]) -> bool:
    """Whether bumping any single coordinate strictly raises the join of the chain elements."""
    if len(x) != cl.k or any(not 0 <= c <= cl.n for c in x):
        raise ValueError(f"{x} is not in {{0..{cl.n}}}^{cl.k}")
    base = _chain_join(cl, x)
    for i in range(cl.k):
        if x[i] == cl.n:
            continue
        bumped = list(x)
        bumped[i] += 1
        if _chain_join(cl, bumped) == base:
            return False
    return True


def roundtrip_perm(v: PermVector) -> bool:
    return xi(eta(v)) == v


def roundtrip_lattice(cl: ChainedLattice) -> bool:
    """Whether ``u -> feet(u)`` is an isomorphism onto eta(xi(cl)) carrying chains to chains."""
    target = eta(xi(cl))
    F = cl.feet_table()
    image = [tuple(r) for r in F.tolist()]
    labels = target.lattice.labels
    if sorted(image) != sorted(labels) or len(set(image)) != cl.lattice.size:
        return False
    if not ((F[:, None, :] <= F[None, :, :]).all(axis=2) == cl.lattice.leq).all():
        return False
    for mine, theirs in zip(cl.chains, target.chains):
        if [image[u] for u in mine] != [labels[t] for t in theirs]:
            return False
    return True


def _check_size(n: int, k: int, max_cases: int) -> int:
    if n < 1 or k < 2:
        raise ValueError("need n >= 1 and k >= 2")
    count = factorial(n) ** (k - 1)
    if count > max_cases:
        raise SizeLimitExceeded(f"{count} permutation vectors exceed the limit of {max_cases}")
    return count


def count_perm_vectors(n: int, k: int) -> int:
    return factorial(n) ** (k - 1)


def enumerate_perm_vectors(n: int, k: int, max_cases: int = DEFAULT_MAX_CASES) -> Iterator[PermVector]:
    """All of ``S_n^(k-1)`` in lexicographic order."""
    _check_size(n, k, max_cases)
    group = list(all_permutations(n))
    for perms in product(group, repeat=k - 1):
        yield PermVector(perms)


def same_lattice_classes(n: int, k: int, max_cases: int = DEFAULT_MAX_CASES) -> list[list[PermVector]]:
    """Group ``S_n^(k-1)`` by isomorphism type of the bare lattice ``eta(v).lattice``.

    Classes are listed in order of their first member; members keep
    enumeration order.
    """
    classes: list[tuple[FiniteLattice, list[PermVector]]] = []
    buckets: dict[tuple, list[int]] = {}
    for v in enumerate_perm_vectors(n, k, max_cases):
        lat = eta(v).lattice
        key = lattice_invariant(lat)
        for idx in buckets.get(key, []):
            if lattices_isomorphic(classes[idx][0], lat):
                classes[idx][1].append(v)
                break
        else:
            buckets.setdefault(key, []).append(len(classes))
            classes.append((lat, [v]))
    return [members for _, members in classes]


def cover_jir_with_chains(lat: FiniteLattice) -> list[Chain]:
    """Maximal chains whose union contains Jir(L), as few as the width of Jir(L).

    A minimum chain partition of Jir(L) is extended chain by chain to maximal
    chains. At least two chains are returned (the single chain is repeated if
    needed). This is one valid choice; the resulting permutations depend on it.
    """
    parts = lat.chain_partition(lat.join_irreducibles())
    chains = [lat.extend_to_maximal_chain(p) for p in parts] or [lat.extend_to_maximal_chain([])]
    if len(chains) == 1:
        chains.append(chains[0])
    return chains


def coordinatize(lat: FiniteLattice) -> tuple[ChainedLattice, PermVector]:
    """Pick chains covering Jir for a join-distributive lattice and decode them."""
    if not is_join_distributive(lat):
        raise NotJoinDistributive("lattice is not join-distributive")
    cl = ChainedLattice(lat, tuple(cover_jir_with_chains(lat)))
    if lat.join_irreducibles() - set().union(*map(set, cl.chains)):
        raise ChainsDontCoverJir("chain cover missed a join-irreducible")
    return cl, xi(cl)
