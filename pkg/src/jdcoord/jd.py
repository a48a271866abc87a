"""Deciding join-distributivity by several independent characterizations.

Every check is exhaustive and vectorized over the precomputed join/meet
tables; the cubic ones (meet-semidistributivity, diamond search) allocate
``size**3`` booleans, fine up to a couple hundred elements.

Tags follow the usual list of equivalent conditions:

a  semimodular and meet-semidistributive
b  unique irredundant meet-decompositions into meet-irreducibles
c  every interval [x, x*] is distributive
d  every interval [x, x*] is boolean
e  every maximal chain has length |Mir L|
f  semimodular and diamond-free
g  semimodular without cover-preserving diamond
h  cover-preserving join-subsemilattice of a distributive lattice (witnessed
   by an explicit embedding, not searched for)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .lattice import Chain, FiniteLattice, feet_table

TAGS = ("a", "b", "c", "d", "e", "f", "g")


class NotJoinDistributive(ValueError):
    pass


class ChainsDontCoverJir(ValueError):
    pass


class EquivalenceViolated(AssertionError):
    """The characterizations disagreed, which can only be a bug."""

    def __init__(self, report: JdReport):
        super().__init__(f"characterizations disagree: {report.verdicts}")
        self.report = report


def _tables(lat: FiniteLattice):
    if lat.join_table is None:
        raise ValueError(f"exhaustive checks need a lattice with at most 512 elements, got {lat.size}")
    J = lat.join_table.astype(np.intp)
    M = lat.meet_table.astype(np.intp)
    cov = np.zeros((lat.size, lat.size), dtype=bool)
    for a, b in lat.covers:
        cov[a, b] = True
    return J, M, cov


# semimodularity, O(|covers| * size)


def semimodularity_violation(lat: FiniteLattice) -> tuple[int, int, int] | None:
    """Some (x, y, z) with x < y a cover but x v z, y v z neither equal nor a cover."""
    if not lat.covers:
        return None
    J, _, cov = _tables(lat)
    pairs = np.array(sorted(lat.covers))
    jx, jy = J[pairs[:, 0]], J[pairs[:, 1]]
    bad = (jx != jy) & ~cov[jx, jy]
    if not bad.any():
        return None
    i, z = np.argwhere(bad)[0]
    return int(pairs[i, 0]), int(pairs[i, 1]), int(z)


def is_semimodular(lat: FiniteLattice) -> bool:
    return semimodularity_violation(lat) is None


# meet-semidistributivity, O(size^3)


def meet_semidistributivity_violation(lat: FiniteLattice) -> tuple[int, int, int] | None:
    """Some (x, y, z) with x^y = x^z but x^(y v z) different."""
    J, M, _ = _tables(lat)
    xy = M[:, :, None]
    bad = (xy == M[:, None, :]) & (xy != M[:, J])
    if not bad.any():
        return None
    return tuple(int(v) for v in np.argwhere(bad)[0])


def is_meet_semidistributive(lat: FiniteLattice) -> bool:
    return meet_semidistributivity_violation(lat) is None


# diamonds, O(size^3)


def _diamonds(lat: FiniteLattice, cover_preserving: bool) -> tuple[int, ...] | None:
    J, M, cov = _tables(lat)
    m = lat.size
    m12, m13, m23 = M[:, :, None], M[:, None, :], M[None, :, :]
    j12, j13, j23 = J[:, :, None], J[:, None, :], J[None, :, :]
    idx = np.arange(m)
    a1, a2, a3 = idx[:, None, None], idx[None, :, None], idx[None, None, :]
    # three distinct atoms with one common pairwise meet and one common pairwise join
    hit = (a1 < a2) & (a2 < a3) & (m12 == m13) & (m12 == m23) & (j12 == j13) & (j12 == j23)
    if cover_preserving:
        hit &= cov[m12, a1] & cov[m12, a2] & cov[m12, a3]
        hit &= cov[a1, j12] & cov[a2, j12] & cov[a3, j12]
    if not hit.any():
        return None
    x, y, z = (int(v) for v in np.argwhere(hit)[0])
    return lat.meet(x, y), x, y, z, lat.join(x, y)


def find_diamond(lat: FiniteLattice) -> tuple[int, ...] | None:
    """A diamond sublattice as ``(bottom, a, b, c, top)``, or None."""
    return _diamonds(lat, cover_preserving=False)


def find_cover_preserving_diamond(lat: FiniteLattice) -> tuple[int, ...] | None:
    return _diamonds(lat, cover_preserving=True)


def has_diamond(lat: FiniteLattice) -> bool:
    return find_diamond(lat) is not None


def has_cover_preserving_diamond(lat: FiniteLattice) -> bool:
    return find_cover_preserving_diamond(lat) is not None


# intervals [x, x*]


def _distributivity_violation(lat: FiniteLattice, elems: Sequence[int]) -> tuple[int, int, int] | None:
    J, M, _ = _tables(lat)
    e = np.asarray(elems, dtype=np.intp)
    x, y, z = e[:, None, None], e[None, :, None], e[None, None, :]
    lhs = M[x, J[y, z]]
    rhs = J[M[x, y], M[x, z]]
    bad = lhs != rhs
    if not bad.any():
        return None
    i, j, k = np.argwhere(bad)[0]
    return int(e[i]), int(e[j]), int(e[k])


def upstar_distributivity_violation(lat: FiniteLattice) -> tuple[int, tuple[int, int, int]] | None:
    for x in range(lat.size):
        bad = _distributivity_violation(lat, lat.interval(x, lat.up_star(x)))
        if bad is not None:
            return x, bad
    return None


def upstar_interval_is_distributive(lat: FiniteLattice) -> bool:
    return upstar_distributivity_violation(lat) is None


def _interval_is_boolean(lat: FiniteLattice, x: int) -> bool:
    atoms = lat.upper_covers[x]
    t = len(atoms)
    interval = lat.interval(x, lat.up_star(x))
    if len(interval) != 2**t:
        return False
    image = {}
    for mask in range(2**t):
        image[mask] = lat.join_all([x, *(atoms[i] for i in range(t) if mask >> i & 1)])
    if len(set(image.values())) != 2**t:
        return False
    # subset -> join must be an order isomorphism onto the interval
    return all(
        lat.le(image[s], image[u]) == (s & u == s) for s in range(2**t) for u in range(2**t)
    )


def upstar_boolean_violation(lat: FiniteLattice) -> int | None:
    return next((x for x in range(lat.size) if not _interval_is_boolean(lat, x)), None)


def upstar_interval_is_boolean(lat: FiniteLattice) -> bool:
    return upstar_boolean_violation(lat) is None


# chain lengths


def chain_length_range(lat: FiniteLattice) -> tuple[int, int]:
    """Shortest and longest maximal chain lengths, by dynamic programming over covers."""
    lo = {lat.bottom: 0}
    hi = {lat.bottom: 0}
    for x in lat._order.tolist():
        for y in lat.upper_covers[x]:
            lo[y] = min(lo.get(y, lat.size), lo[x] + 1)
            hi[y] = max(hi.get(y, -1), hi[x] + 1)
    return lo[lat.top], hi[lat.top]


def maximal_chain_lengths_equal_mir(lat: FiniteLattice) -> bool:
    n_mir = len(lat.meet_irreducibles())
    return chain_length_range(lat) == (n_mir, n_mir)


# meet-decompositions


def irredundant_meet_decompositions(lat: FiniteLattice, x: int, limit: int | None = None) -> list[frozenset[int]]:
    """Irredundant sets Y of meet-irreducibles with meet x (at most ``limit`` of them).

    Backtracks over the meet-irreducibles above ``x`` in id order. An element
    whose addition does not lower the running meet would stay redundant
    forever, so such branches are cut.
    """
    if x == lat.top:
        return [frozenset()]
    cands = sorted(m for m in lat.meet_irreducibles() if lat.le(x, m))
    found: list[frozenset[int]] = []

    def irredundant(ys: list[int]) -> bool:
        return all(lat.meet_all(ys[:i] + ys[i + 1 :]) != x for i in range(len(ys)))

    def walk(start: int, chosen: list[int], cur: int) -> bool:
        for i in range(start, len(cands)):
            nxt = lat.meet(cur, cands[i])
            if nxt == cur:
                continue
            chosen.append(cands[i])
            if nxt == x:
                if irredundant(chosen):
                    found.append(frozenset(chosen))
                    if limit is not None and len(found) >= limit:
                        return True
            elif walk(i + 1, chosen, nxt):
                return True
            chosen.pop()
        return False

    walk(0, [], lat.top)
    return found


def meet_decomposition_violation(lat: FiniteLattice) -> tuple[int, list[frozenset[int]]] | None:
    for x in range(lat.size):
        decs = irredundant_meet_decompositions(lat, x, limit=2)
        if len(decs) != 1:
            return x, decs
    return None


def has_unique_meet_decompositions(lat: FiniteLattice) -> bool:
    return meet_decomposition_violation(lat) is None


# embeddings witnessing condition (h)


def _is_product_cover(u: Sequence[int], v: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(u, v)) and sum(v) - sum(u) == 1


def distributive_embedding(lat: FiniteLattice) -> dict[int, tuple[int, ...]]:
    """Cover-preserving join-embedding into the boolean lattice 2^Mir(L).

    ``u`` goes to the 0/1 indicator (over meet-irreducibles sorted by id) of
    the meet-irreducibles not above ``u``. Raises if the map fails to be
    injective, join-preserving or cover-preserving, which happens exactly when
    ``lat`` is not join-distributive.
    """
    mir = sorted(lat.meet_irreducibles())
    emb = {u: tuple(int(not lat.le(u, m)) for m in mir) for u in range(lat.size)}
    problem = join_embedding_problem(lat, emb)
    if problem:
        raise NotJoinDistributive(problem)
    return emb


def join_embedding_problem(lat: FiniteLattice, emb: dict[int, tuple[int, ...]]) -> str | None:
    """Why ``emb`` is not an injective, join- and cover-preserving map into a power of a chain."""
    if len(set(emb.values())) != lat.size:
        return "not injective"
    for u in range(lat.size):
        for v in range(u + 1, lat.size):
            joined = tuple(map(max, emb[u], emb[v]))
            if emb[lat.join(u, v)] != joined:
                return f"join of {u} and {v} not preserved"
    for u, v in lat.covers:
        if not _is_product_cover(emb[u], emb[v]):
            return f"cover {u} < {v} not preserved"
    return None


def embed_into_power_chain(lat: FiniteLattice, chains: Sequence[Chain]) -> dict[int, tuple[int, ...]]:
    """The feet map ``u -> feet(u)`` into {0..n}^k, verified.

    Checks that the map is injective, an order-embedding in both directions,
    sends meets to componentwise minima and covers to covers of the image.
    Joins are *not* componentwise maxima in general (see README).
    """
    if not is_join_distributive(lat):
        raise NotJoinDistributive("lattice is not join-distributive")
    covered = set().union(*map(set, chains))
    if not lat.join_irreducibles() <= covered:
        missing = sorted(lat.join_irreducibles() - covered)
        raise ChainsDontCoverJir(f"join-irreducibles {missing} lie on no chain")
    F = feet_table(lat, chains)
    emb = {u: tuple(int(v) for v in F[u]) for u in range(lat.size)}
    if len(set(emb.values())) != lat.size:
        raise AssertionError("feet map is not injective")
    le_img = (F[:, None, :] <= F[None, :, :]).all(axis=2)
    if not (le_img == lat.leq).all():
        raise AssertionError("feet map is not an order-embedding")
    meet_img = np.minimum(F[:, None, :], F[None, :, :])
    if not (F[lat.meet_table] == meet_img).all():
        raise AssertionError("feet map does not preserve meets")
    for u, v in lat.covers:
        between = le_img[u] & le_img[:, v]
        if between.sum() != 2:
            raise AssertionError(f"cover {u} < {v} not preserved in the image")
    return emb


# the combined report


@dataclass
class JdReport:
    verdicts: dict[str, bool]
    witness: str | None = None
    embedding: dict[int, tuple[int, ...]] | None = field(default=None, repr=False)

    @property
    def join_distributive(self) -> bool:
        return all(self.verdicts.values())

    @property
    def consistent(self) -> bool:
        return len(set(self.verdicts.values())) == 1

    def __bool__(self) -> bool:
        return self.join_distributive

    def to_json(self) -> dict:
        return {
            "verdicts": dict(sorted(self.verdicts.items())),
            "witness": self.witness,
            "join_distributive": self.join_distributive,
        }


def is_join_distributive(lat: FiniteLattice, strict: bool = True) -> JdReport:
    """Run every characterization and cross-check them.

    With ``strict`` (the default) a disagreement raises EquivalenceViolated;
    otherwise the inconsistent report is returned.
    """
    sm = semimodularity_violation(lat)
    msd = meet_semidistributivity_violation(lat)
    dec = meet_decomposition_violation(lat)
    dist = upstar_distributivity_violation(lat)
    boo = upstar_boolean_violation(lat)
    lengths = chain_length_range(lat)
    n_mir = len(lat.meet_irreducibles())
    dia = find_diamond(lat)
    cpd = find_cover_preserving_diamond(lat)

    verdicts = {
        "a": sm is None and msd is None,
        "b": dec is None,
        "c": dist is None,
        "d": boo is None,
        "e": lengths == (n_mir, n_mir),
        "f": sm is None and dia is None,
        "g": sm is None and cpd is None,
    }
    notes = []
    if sm is not None:
        x, y, z = sm
        notes.append(f"a,f,g: {x} < {y} is a cover but joins with {z} give {lat.join(x, z)}, {lat.join(y, z)}")
    if msd is not None:
        x, y, z = msd
        notes.append(f"a: x={x}, y={y}, z={z} break meet-semidistributivity")
    if dec is not None:
        x, decs = dec
        shown = [sorted(d) for d in decs]
        notes.append(f"b: element {x} has irredundant meet-decompositions {shown}")
    if dist is not None:
        x, triple = dist
        notes.append(f"c: [{x}, {lat.up_star(x)}] is not distributive at {triple}")
    if boo is not None:
        notes.append(f"d: [{boo}, {lat.up_star(boo)}] is not boolean")
    if lengths != (n_mir, n_mir):
        notes.append(f"e: maximal chain lengths range over {lengths}, |Mir| = {n_mir}")
    if dia is not None and sm is None:
        notes.append(f"f: diamond {dia}")
    if cpd is not None and sm is None:
        notes.append(f"g: cover-preserving diamond {cpd}")

    report = JdReport(verdicts, "; ".join(notes) or None)
    if not report.consistent and strict:
        raise EquivalenceViolated(report)
    if report.join_distributive:
        report.embedding = distributive_embedding(lat)
    return report


def is_meet_distributive(lat: FiniteLattice) -> bool:
    return is_join_distributive(lat.dual()).join_distributive


def cdf_violation(lat: FiniteLattice) -> str | None:
    """Why ``lat`` is not semimodular without cover-preserving diamonds, if it isn't."""
    sm = semimodularity_violation(lat)
    if sm is not None:
        x, y, z = sm
        return f"not semimodular: {x} < {y} is a cover but the joins with {z} are not"
    cpd = find_cover_preserving_diamond(lat)
    if cpd is not None:
        return f"cover-preserving diamond {cpd}"
    return None
