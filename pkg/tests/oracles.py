"""Brute-force reference implementations used to check the library.

Nothing here imports jdcoord. Everything is written directly from the
definitions with plain loops so that the two code paths share no logic.
"""

from __future__ import annotations

from itertools import combinations, permutations, product


def compose(f, g):
    """One-line lists, 1-based: x -> f(g(x))."""
    return [f[g[x - 1] - 1] for x in range(1, len(g) + 1)]


def invert(f):
    out = [0] * len(f)
    for i, y in enumerate(f, 1):
        out[y - 1] = i
    return out


def extended(perms):
    """pi[i][j] for 0-based i, j, with pi[0][0] the identity."""
    n = len(perms[0])
    row = [list(range(1, n + 1))] + [list(p) for p in perms]
    k = len(row)
    return [[compose(row[j], invert(row[i])) for j in range(k)] for i in range(k)]


def eligible(perms, x):
    n = len(perms[0])
    pi = extended(perms)
    for i in range(len(x)):
        if x[i] == n:
            continue
        for j in range(len(x)):
            if pi[i][j][x[i]] < x[j] + 1:  # pi[i][j] evaluated at x[i] + 1
                return False
    return True


def eligible_set(perms):
    n, k = len(perms[0]), len(perms) + 1
    return sorted(x for x in product(range(n + 1), repeat=k) if eligible(perms, x))


def suborbitals(perms):
    n = len(perms[0])
    row = [list(range(1, n + 1))] + [list(p) for p in perms]
    return {tuple(p[b - 1] - 1 for p in row) for b in range(1, n + 1)}


# posets given by an explicit order relation


class Poset:
    """Elements 0..m-1 with ``le[a][b]``; joins and meets by direct search."""

    def __init__(self, m, le):
        self.m = m
        self.le = le

    @classmethod
    def from_covers(cls, m, covers):
        up = {a: set() for a in range(m)}
        for a, b in covers:
            up[a].add(b)
        le = [[False] * m for _ in range(m)]
        for a in range(m):
            stack = [a]
            while stack:
                x = stack.pop()
                if not le[a][x]:
                    le[a][x] = True
                    stack.extend(up[x])
        return cls(m, le)

    @classmethod
    def from_vectors(cls, vecs):
        vecs = list(vecs)
        le = [[all(p <= q for p, q in zip(u, v)) for v in vecs] for u in vecs]
        return cls(len(vecs), le)

    def lt(self, a, b):
        return a != b and self.le[a][b]

    def covers(self):
        return {
            (a, b)
            for a in range(self.m)
            for b in range(self.m)
            if self.lt(a, b) and not any(self.lt(a, c) and self.lt(c, b) for c in range(self.m))
        }

    def join(self, a, b):
        ups = [c for c in range(self.m) if self.le[a][c] and self.le[b][c]]
        least = [c for c in ups if all(self.le[c][d] for d in ups)]
        assert len(least) == 1
        return least[0]

    def meet(self, a, b):
        downs = [c for c in range(self.m) if self.le[c][a] and self.le[c][b]]
        great = [c for c in downs if all(self.le[d][c] for d in downs)]
        assert len(great) == 1
        return great[0]

    def top(self):
        return next(t for t in range(self.m) if all(self.le[x][t] for x in range(self.m)))

    def bottom(self):
        return next(b for b in range(self.m) if all(self.le[b][x] for x in range(self.m)))

    def maximal_chains(self):
        cov = self.covers()
        out = []

        def walk(chain):
            last = chain[-1]
            nxt = sorted(b for a, b in cov if a == last)
            if not nxt:
                out.append(tuple(chain))
            for b in nxt:
                walk(chain + [b])

        walk([self.bottom()])
        return out

    def join_irreducibles(self):
        cov = self.covers()
        return {x for x in range(self.m) if sum(1 for a, b in cov if b == x) == 1}

    def meet_irreducibles(self):
        cov = self.covers()
        return {x for x in range(self.m) if sum(1 for a, b in cov if a == x) == 1}


def width(poset, subset):
    """Largest antichain inside ``subset``, by trying every subset size downward."""
    subset = list(subset)
    for r in range(len(subset), 0, -1):
        for combo in combinations(subset, r):
            if all(not poset.le[a][b] and not poset.le[b][a] for a, b in combinations(combo, 2)):
                return r
    return 0


def trajectory_classes(poset):
    """Trajectories as a list of sets of prime intervals.

    Consecutiveness is read off every 4-element cover-preserving square, and
    the equivalence closure is taken by relational composition until stable.
    """
    primes = sorted(poset.covers())
    idx = {p: i for i, p in enumerate(primes)}
    N = len(primes)
    rel = [[i == j for j in range(N)] for i in range(N)]
    cov = set(primes)
    for x, a, b, t in product(range(poset.m), repeat=4):
        if a < b and (x, a) in cov and (x, b) in cov and (a, t) in cov and (b, t) in cov:
            for p, q in (((x, a), (b, t)), ((x, b), (a, t))):
                rel[idx[p]][idx[q]] = rel[idx[q]][idx[p]] = True
    changed = True
    while changed:
        changed = False
        for i in range(N):
            for j in range(N):
                if not rel[i][j] and any(rel[i][l] and rel[l][j] for l in range(N)):
                    rel[i][j] = True
                    changed = True
    classes = []
    for i in range(N):
        cls = frozenset(primes[j] for j in range(N) if rel[i][j])
        if cls not in classes:
            classes.append(cls)
    return classes


def jh_perm(poset, c, d):
    classes = trajectory_classes(poset)
    which = {p: i for i, cls in enumerate(classes) for p in cls}
    wc = [which[p] for p in zip(c, c[1:])]
    wd = [which[p] for p in zip(d, d[1:])]
    return [wd.index(t) + 1 for t in wc]


def feet(poset, chains, u):
    return tuple(max(j for j, c in enumerate(ch) if poset.le[c][u]) for ch in chains)


def isomorphic(p, q):
    """Order isomorphism by trying every bijection; only for tiny posets."""
    if p.m != q.m:
        return False
    for perm in permutations(range(q.m)):
        if all(p.le[a][b] == q.le[perm[a]][perm[b]] for a in range(p.m) for b in range(p.m)):
            return True
    return False


# set systems


def is_antimatroid(ground, family):
    fam = {frozenset(s) for s in family}
    if frozenset() not in fam:
        return False
    if any(a | b not in fam for a in fam for b in fam):
        return False
    if any(a and not any(a - {x} in fam for x in a) for a in fam):
        return False
    return frozenset().union(*fam) == frozenset(ground)


def is_convex_geometry(ground, family):
    ground = frozenset(ground)
    fam = {frozenset(s) for s in family}
    if ground not in fam or frozenset() not in fam:
        return False
    if any(a & b not in fam for a in fam for b in fam):
        return False

    def phi(x):
        return frozenset.intersection(*[c for c in fam if x <= c])

    # anti-exchange over every subset, not only the closed ones
    for r in range(len(ground) + 1):
        for a in map(frozenset, combinations(sorted(ground, key=repr), r)):
            closed = phi(a)
            for x in ground - closed:
                for y in ground - closed:
                    if x != y and x in phi(a | {y}) and y in phi(a | {x}):
                        return False
    return True


# lattice conditions straight from their definitions


def is_semimodular(p):
    cov = p.covers()
    for x, y in cov:
        for z in range(p.m):
            a, b = p.join(x, z), p.join(y, z)
            if a != b and (a, b) not in cov:
                return False
    return True


def is_meet_semidistributive(p):
    for x, y, z in product(range(p.m), repeat=3):
        if p.meet(x, y) == p.meet(x, z) and p.meet(x, y) != p.meet(x, p.join(y, z)):
            return False
    return True


def has_diamond(p):
    for a, b, c in combinations(range(p.m), 3):
        if len({p.meet(a, b), p.meet(a, c), p.meet(b, c)}) == 1 and len(
            {p.join(a, b), p.join(a, c), p.join(b, c)}
        ) == 1:
            return True
    return False
