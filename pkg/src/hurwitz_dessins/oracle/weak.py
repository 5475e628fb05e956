"""Weak equivalence on triples: conjugation plus mirror and branch-point relabeling."""

from __future__ import annotations

from dataclasses import dataclass

from ..branch_data import BranchDatum
from .perm import compose, conjugate, inverse
from .search import DEFAULT_DEGREE_LIMIT, enumerate_triples
from .triples import MonodromyTriple, orbit_fingerprint


@dataclass(frozen=True)
class MoveSet:
    use_mirror: bool = True
    use_relabel: bool = True


BOTH = MoveSet(True, True)
CONJUGATION_ONLY = MoveSet(False, False)


def mirror(t: MonodromyTriple) -> MonodromyTriple:
    """Orientation reversal: invert alpha and beta, then recompute gamma."""
    return MonodromyTriple.from_pair(inverse(t.alpha), inverse(t.beta))


def relabel_12(t: MonodromyTriple) -> MonodromyTriple:
    """Swap the first two branch points: (alpha beta alpha^-1, alpha, gamma)."""
    a, b, c = t.alpha, t.beta, t.gamma
    return MonodromyTriple(conjugate(b, inverse(a)), a, c)


def relabel_23(t: MonodromyTriple) -> MonodromyTriple:
    """Swap the last two branch points: (alpha, beta gamma beta^-1, beta)."""
    a, b, c = t.alpha, t.beta, t.gamma
    return MonodromyTriple(a, conjugate(c, inverse(b)), b)


def relabel_13(t: MonodromyTriple) -> MonodromyTriple:
    return relabel_12(relabel_23(relabel_12(t)))


RELABELS = {(1, 2): relabel_12, (2, 3): relabel_23, (1, 3): relabel_13}


def datum_preserving_relabels(datum: BranchDatum) -> list[tuple[int, int]]:
    p = datum.partitions
    return [(i, j) for (i, j) in RELABELS if p[i - 1] == p[j - 1]]


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def components(self) -> int:
        return sum(1 for x in self.parent if self.parent[x] == x)


@dataclass(frozen=True)
class OracleCounts:
    conj_orbits: int
    weak: int


def weak_orbits(reps: dict[bytes, MonodromyTriple], datum: BranchDatum, moves: MoveSet) -> UnionFind:
    """Union-find over conjugation-orbit fingerprints, closed under the chosen moves."""
    uf = UnionFind(reps)
    relabels = [RELABELS[pair] for pair in datum_preserving_relabels(datum)] if moves.use_relabel else []
    for fp, t in reps.items():
        images = [mirror(t)] if moves.use_mirror else []
        images += [move(t) for move in relabels]
        for s in images:
            other = orbit_fingerprint(s)
            if other not in reps:
                raise AssertionError(f"move left the datum's orbit set: {s}")
            uf.union(fp, other)
    return uf


def oracle_counts(
    datum: BranchDatum,
    moves: MoveSet = BOTH,
    method: str = "rooted",
    degree_limit: int | None = DEFAULT_DEGREE_LIMIT,
    **search_kw,
) -> OracleCounts:
    reps = {orbit_fingerprint(t): t for t in enumerate_triples(datum, method, degree_limit=degree_limit, **search_kw)}
    uf = weak_orbits(reps, datum, moves)
    return OracleCounts(len(reps), uf.components())


def weak_hurwitz(datum: BranchDatum, moves: MoveSet = BOTH, cache=None, **kw) -> int:
    """Number of weak equivalence classes; with both moves on this is the weak Hurwitz number."""
    if cache is not None:
        hit = cache.get(datum, moves)
        if hit is not None:
            return hit.weak
    counts = oracle_counts(datum, moves, **kw)
    if cache is not None:
        cache.put(datum, moves, counts)
    return counts.weak
