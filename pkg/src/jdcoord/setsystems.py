"""Antimatroids, convex geometries, and their lattices.

Set systems are a finite ground set plus a family of subsets. Antimatroids
are read as feasible-set families (no dummy points allowed), convex
geometries as families of closed sets; complementation swaps the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import singledispatch
from itertools import combinations
from typing import Hashable, Iterable

import networkx as nx

from .coordinates import PermVector, eta, suborbital_vectors
from .jd import NotJoinDistributive, is_join_distributive
from .lattice import FiniteLattice

Point = Hashable


class NotMeetDistributive(ValueError):
    pass


class AxiomViolation(ValueError):
    def __init__(self, verdict: Verdict):
        super().__init__(str(verdict))
        self.verdict = verdict


@dataclass(frozen=True)
class Verdict:
    ok: bool
    axiom: str | None = None
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        shown = [sorted(w, key=repr) if isinstance(w, frozenset) else w for w in self.witness]
        return f"axiom {self.axiom} fails: {shown}"


OK = Verdict(True)


def _sort_key(s: frozenset) -> tuple:
    return (len(s), sorted(map(repr, s)))


@dataclass(frozen=True)
class SetSystem:
    ground: frozenset
    family: frozenset

    def __post_init__(self):
        ground = frozenset(self.ground)
        family = frozenset(frozenset(s) for s in self.family)
        if not family:
            raise ValueError("family must be nonempty")
        for s in family:
            if not s <= ground:
                raise ValueError(f"member {sorted(s, key=repr)} is not inside the ground set")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "family", family)

    @classmethod
    def of(cls, ground: Iterable[Point], family: Iterable[Iterable[Point]]) -> SetSystem:
        return cls(frozenset(ground), frozenset(frozenset(s) for s in family))

    def members(self) -> list[frozenset]:
        """Members in a canonical order (by size, then by sorted labels)."""
        return sorted(self.family, key=_sort_key)

    def complement(self) -> SetSystem:
        return SetSystem(self.ground, frozenset(self.ground - s for s in self.family))

    def __len__(self) -> int:
        return len(self.family)


def check_antimatroid(s: SetSystem) -> Verdict:
    """Feasibility, union-closure and no dummy points; the first failing axiom is named."""
    fam = s.family
    for a in sorted(fam, key=_sort_key):
        if a and not any(a - {x} in fam for x in a):
            return Verdict(False, "b (feasibility)", (a,))
    members = sorted(fam, key=_sort_key)
    for a, b in combinations(members, 2):
        if a | b not in fam:
            return Verdict(False, "c (union-closure)", (a, b))
    dummies = s.ground - frozenset().union(*fam)
    if dummies:
        return Verdict(False, "d (dummy points)", (dummies,))
    return OK


def closure(s: SetSystem, x: Iterable[Point]) -> frozenset:
    """Smallest member containing ``x`` (the family is assumed intersection-closed)."""
    x = frozenset(x)
    return frozenset.intersection(s.ground, *(c for c in s.family if x <= c))


def check_convex_geometry(s: SetSystem) -> Verdict:
    """Intersection-closure with E closed, empty closure of the empty set, anti-exchange.

    Also confirms that every closed set other than E has a one-point closed
    extension, which follows from the others.
    """
    fam = s.family
    if s.ground not in fam:
        return Verdict(False, "closure system (E not closed)", (s.ground,))
    members = sorted(fam, key=_sort_key)
    for a, b in combinations(members, 2):
        if a & b not in fam:
            return Verdict(False, "closure system (intersection)", (a, b))
    if frozenset() not in fam:
        return Verdict(False, "c (closure of the empty set)", (closure(s, ()),))
    for a in members:
        outside = sorted(s.ground - a, key=repr)
        for x, y in combinations(outside, 2):
            if x in closure(s, a | {y}) and y in closure(s, a | {x}):
                return Verdict(False, "b (anti-exchange)", (a, x, y))
    for b in members:
        if b != s.ground and not any(b | {x} in fam for x in s.ground - b):
            return Verdict(False, "one-point extension", (b,))
    return OK


class Antimatroid(SetSystem):
    """A set system of feasible sets, validated on construction."""

    def __post_init__(self):
        super().__post_init__()
        verdict = check_antimatroid(self)
        if not verdict:
            raise AxiomViolation(verdict)


class ConvexGeometry(SetSystem):
    """A set system of closed sets, validated on construction."""

    def __post_init__(self):
        super().__post_init__()
        verdict = check_convex_geometry(self)
        if not verdict:
            raise AxiomViolation(verdict)

    def closure(self, x: Iterable[Point]) -> frozenset:
        return closure(self, x)


@singledispatch
def dualize(s):
    raise TypeError(f"cannot dualize {type(s).__name__}")


@dualize.register
def _(a: Antimatroid) -> ConvexGeometry:
    c = a.complement()
    return ConvexGeometry(c.ground, c.family)


@dualize.register
def _(g: ConvexGeometry) -> Antimatroid:
    c = g.complement()
    return Antimatroid(c.ground, c.family)


def inclusion_lattice(s: SetSystem) -> FiniteLattice:
    """Members ordered by inclusion; element ids follow :meth:`SetSystem.members`."""
    members = s.members()
    leq = [[a <= b for b in members] for a in members]
    return FiniteLattice.from_leq(leq, members)


def halojd(a: Antimatroid) -> FiniteLattice:
    """The lattice of feasible sets under inclusion."""
    return inclusion_lattice(a)


def halomd(g: ConvexGeometry) -> FiniteLattice:
    """The lattice of closed sets under inclusion."""
    return inclusion_lattice(g)


def point_label(label) -> str:
    """Render an element label as a point name: ``(0,1)``, ``{1,2}`` or ``str``."""
    if isinstance(label, tuple):
        return "(" + ",".join(map(str, label)) + ")"
    if isinstance(label, frozenset):
        return "{" + ",".join(map(str, sorted(label, key=repr))) + "}"
    return str(label)


def point_names(lat: FiniteLattice) -> list[str]:
    """One distinct point name per element; ids are used if rendered labels collide."""
    names = [point_label(lat.label(u)) for u in range(lat.size)]
    if len(set(names)) != lat.size:
        names = [str(u) for u in range(lat.size)]
    return names


def amat(lat: FiniteLattice) -> Antimatroid:
    """Ground Mir(L); feasible sets ``Mir(L) - filter(x)`` for x in L.

    Points are named by :func:`point_names`.
    """
    if not is_join_distributive(lat):
        raise NotJoinDistributive("amat needs a join-distributive lattice")
    mir = sorted(lat.meet_irreducibles())
    name = point_names(lat)
    ground = frozenset(name[m] for m in mir)
    family = frozenset(
        frozenset(name[m] for m in mir if not lat.le(x, m)) for x in range(lat.size)
    )
    return Antimatroid(ground, family)


def geom(lat: FiniteLattice) -> ConvexGeometry:
    """Ground Jir(L); closed sets ``Jir(L) & ideal(x)`` for x in L."""
    if not is_join_distributive(lat.dual()):
        raise NotMeetDistributive("geom needs a meet-distributive lattice")
    jir = sorted(lat.join_irreducibles())
    name = point_names(lat)
    ground = frozenset(name[j] for j in jir)
    family = frozenset(
        frozenset(name[j] for j in jir if lat.le(j, x)) for x in range(lat.size)
    )
    return ConvexGeometry(ground, family)


def antimatroid_from_perms(v: PermVector) -> Antimatroid:
    """Ground = suborbital vectors; feasible sets ``U(x) = {y : not x <= y}`` over eligible x."""
    ground = sorted(suborbital_vectors(v))
    tuples = eta(v).lattice.labels
    family = frozenset(
        frozenset(
            point_label(y) for y in ground if not all(a <= b for a, b in zip(x, y))
        )
        for x in tuples
    )
    return Antimatroid(frozenset(map(point_label, ground)), family)


def convex_dimension(a: Antimatroid) -> int:
    lat = halojd(a)
    return lat.width(lat.join_irreducibles())


def _incidence_graph(s: SetSystem) -> nx.Graph:
    g = nx.Graph()
    for p in s.ground:
        g.add_node(("p", p), kind="point")
    for m in s.family:
        g.add_node(("s", m), kind="set")
        g.add_edges_from((("s", m), ("p", p)) for p in m)
    return g


def set_systems_isomorphic(s: SetSystem, t: SetSystem) -> bool:
    """Whether a bijection of ground sets carries one family onto the other.

    Exact search on the point/member incidence graph, pruned by the sorted
    member-size and point-degree profiles.
    """
    if len(s.ground) != len(t.ground) or len(s.family) != len(t.family):
        return False
    if sorted(map(len, s.family)) != sorted(map(len, t.family)):
        return False

    def degrees(x: SetSystem):
        return sorted(sum(p in m for m in x.family) for p in x.ground)

    if degrees(s) != degrees(t):
        return False
    return nx.is_isomorphic(
        _incidence_graph(s),
        _incidence_graph(t),
        node_match=lambda a, b: a["kind"] == b["kind"],
    )
