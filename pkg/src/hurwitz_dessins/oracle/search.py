"""Search backends yielding one triple per conjugacy orbit for a three-point datum.

``rooted``: orderly generation of triples already in breadth-first canonical
labeling from point 0, so every rooted triple appears once; orbits are then
merged by fingerprint. Only partial permutations compatible with the three
cycle types are ever extended.

``class``: alpha fixed, beta runs over its whole conjugacy class, gamma is
filtered on cycle type and transitivity, and betas are merged under the
centralizer of alpha (via fingerprints). Exponential in d; kept as the
independent cross-check.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator

from ..branch_data import BranchDatum, riemann_hurwitz_check
from .perm import Perm, canonical_of_type, compose, cycle_type, inverse, is_transitive, perms_of_type
from .triples import MonodromyTriple, orbit_fingerprint

DEFAULT_DEGREE_LIMIT = 16


class OracleError(ValueError):
    pass


class DegreeLimitError(OracleError):
    pass


class IncompatibleDatumError(OracleError):
    pass


def check_datum(datum: BranchDatum, degree_limit: int | None = DEFAULT_DEGREE_LIMIT) -> None:
    if not riemann_hurwitz_check(datum):
        raise IncompatibleDatumError(f"{datum} fails the Riemann-Hurwitz relation")
    if degree_limit is not None and datum.degree > degree_limit:
        raise DegreeLimitError(f"degree {datum.degree} exceeds the oracle limit {degree_limit}")


class _PartialPerm:
    """Partial permutation whose completed cycles must come from a fixed multiset of lengths."""

    __slots__ = ("img", "pre", "left")

    def __init__(self, d, parts):
        self.img = [-1] * d
        self.pre = [-1] * d
        self.left = Counter(parts)

    def assign(self, x, y):
        """Set x -> y. Returns the closed cycle length (0 if still open), or -1 if infeasible."""
        img, pre = self.img, self.pre
        length = 1
        z = y
        while z != x and img[z] >= 0:
            z = img[z]
            length += 1
        if z == x:
            if self.left[length] <= 0:
                return -1
            img[x] = y
            pre[y] = x
            self.left[length] -= 1
            return length
        w = x
        while pre[w] >= 0:
            w = pre[w]
            length += 1
        if not any(n > 0 and part >= length + 1 for part, n in self.left.items()):
            return -1
        img[x] = y
        pre[y] = x
        return 0

    def undo(self, x, closed):
        y = self.img[x]
        self.img[x] = -1
        self.pre[y] = -1
        if closed:
            self.left[closed] += 1


def rooted_canonical_pairs(datum: BranchDatum) -> Iterator[tuple[Perm, Perm]]:
    """All (alpha, beta) in breadth-first canonical labeling with the datum's cycle types."""
    d = datum.degree
    pa, pb, pc = (p.parts for p in datum.partitions)
    A, B = _PartialPerm(d, pa), _PartialPerm(d, pb)
    # gamma^-1 = x -> beta(alpha(x)) has the same cycle type as gamma
    G = _PartialPerm(d, pc)
    count = [1]  # points labeled so far; point 0 is the root

    def set_gamma_inv(x, y):
        return G.assign(x, y)

    def step(s):
        x, which = divmod(s, 2)
        n = count[0]
        if x == d:
            yield tuple(A.img), tuple(B.img)
            return
        if x >= n:
            return  # orbit of the root closed before reaching every point
        P = B if which else A
        choices = [y for y in range(n) if P.pre[y] < 0]
        if n < d:
            choices.append(n)
        for y in choices:
            closed = P.assign(x, y)
            if closed < 0:
                continue
            fresh = y == n
            if fresh:
                count[0] += 1
            # complete one value of gamma^-1 where possible
            if which == 0:
                gx, gy = (x, B.img[y]) if B.img[y] >= 0 else (-1, -1)
            else:
                z = A.pre[x]
                gx, gy = (z, y) if z >= 0 else (-1, -1)
            ok = True
            gclosed = 0
            if gx >= 0:
                gclosed = set_gamma_inv(gx, gy)
                ok = gclosed >= 0
            if ok:
                yield from step(s + 1)
                if gx >= 0:
                    G.undo(gx, gclosed)
            if fresh:
                count[0] -= 1
            P.undo(x, closed)

    yield from step(0)


def _rooted(datum: BranchDatum) -> Iterator[MonodromyTriple]:
    seen: set[bytes] = set()
    for alpha, beta in rooted_canonical_pairs(datum):
        t = MonodromyTriple.from_pair(alpha, beta)
        fp = orbit_fingerprint(t)
        if fp not in seen:
            seen.add(fp)
            yield t


def _class(datum: BranchDatum, alpha: Perm | None, chunk: tuple[int, int] | None) -> Iterator[MonodromyTriple]:
    pa, pb, pc = (p.parts for p in datum.partitions)
    if alpha is None:
        alpha = canonical_of_type(pa)
    elif cycle_type(alpha) != pa:
        raise OracleError("alpha does not have the first cycle type")
    seen: set[bytes] = set()
    for idx, beta in enumerate(perms_of_type(pb)):
        if chunk is not None and idx % chunk[1] != chunk[0]:
            continue
        gamma = inverse(compose(alpha, beta))
        if cycle_type(gamma) != pc or not is_transitive(alpha, beta):
            continue
        t = MonodromyTriple(alpha, beta, gamma)
        fp = orbit_fingerprint(t)
        if fp not in seen:
            seen.add(fp)
            yield t


def enumerate_triples(
    datum: BranchDatum,
    method: str = "rooted",
    alpha: Perm | None = None,
    chunk: tuple[int, int] | None = None,
    degree_limit: int | None = DEFAULT_DEGREE_LIMIT,
) -> Iterator[MonodromyTriple]:
    """One representative per simultaneous-conjugation orbit of transitive triples.

    ``alpha`` and ``chunk`` (worker index, worker count) apply to the ``class``
    backend only; a chunk deduplicates within itself, so a reducer must merge
    chunks by fingerprint.
    """
    check_datum(datum, degree_limit)
    if method == "rooted":
        if alpha is not None or chunk is not None:
            raise OracleError("alpha/chunk only apply to the class backend")
        return _rooted(datum)
    if method == "class":
        return _class(datum, alpha, chunk)
    raise OracleError(f"unknown search method {method!r}")
