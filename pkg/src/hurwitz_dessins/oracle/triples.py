"""Monodromy triples (alpha, beta, gamma) with alpha*beta*gamma = 1, and their canonical forms."""

from __future__ import annotations

from dataclasses import dataclass

from ..branch_data import BranchDatum, Partition
from .perm import Perm, compose, conjugate, cycle_type, inverse, is_perm, is_transitive, num_cycles


class InvalidTripleError(ValueError):
    pass


@dataclass(frozen=True)
class MonodromyTriple:
    """Black vertices are the cycles of alpha, white ones the cycles of beta,
    regions the cycles of gamma. Darts are the points 0..d-1."""

    alpha: Perm
    beta: Perm
    gamma: Perm

    def __post_init__(self):
        d = len(self.alpha)
        for p in (self.alpha, self.beta, self.gamma):
            if len(p) != d or not is_perm(p):
                raise InvalidTripleError("components must be permutations of the same degree")
        if compose(self.alpha, self.beta, self.gamma) != tuple(range(d)):
            raise InvalidTripleError("alpha*beta*gamma is not the identity")
        if not is_transitive(self.alpha, self.beta):
            raise InvalidTripleError("alpha and beta do not act transitively")

    @classmethod
    def from_pair(cls, alpha: Perm, beta: Perm) -> "MonodromyTriple":
        return cls(tuple(alpha), tuple(beta), inverse(compose(alpha, beta)))

    @property
    def d(self) -> int:
        return len(self.alpha)

    def cycle_types(self) -> tuple[Partition, Partition, Partition]:
        return tuple(Partition(cycle_type(p)) for p in (self.alpha, self.beta, self.gamma))

    def conjugated(self, x: Perm) -> "MonodromyTriple":
        return MonodromyTriple(*(conjugate(p, x) for p in (self.alpha, self.beta, self.gamma)))

    def matches(self, datum: BranchDatum) -> bool:
        return self.d == datum.degree and self.cycle_types() == datum.partitions


def genus_of_triple(t: MonodromyTriple) -> int:
    euler = num_cycles(t.alpha) + num_cycles(t.beta) + num_cycles(t.gamma) - t.d
    if euler % 2 or euler > 2:
        raise InvalidTripleError(f"Euler characteristic {euler} gives no orientable genus")
    return (2 - euler) // 2


def rooted_form(alpha: Perm, beta: Perm, root: int) -> tuple[int, ...]:
    """Relabel by breadth-first search from ``root`` (alpha before beta);
    return the relabeled alpha followed by the relabeled beta."""
    d = len(alpha)
    label = [-1] * d
    order = [root]
    label[root] = 0
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for p in (alpha, beta):
            y = p[x]
            if label[y] < 0:
                label[y] = len(order)
                order.append(y)
    return tuple(label[alpha[x]] for x in order) + tuple(label[beta[x]] for x in order)


def canonical_pair(t: MonodromyTriple) -> tuple[int, ...]:
    return min(rooted_form(t.alpha, t.beta, r) for r in range(t.d))


def _to_bytes(form: tuple[int, ...]) -> bytes:
    if len(form) and max(form) < 256:
        return bytes(form)
    return b"," + ",".join(map(str, form)).encode()


def orbit_fingerprint(t: MonodromyTriple) -> bytes:
    """Equal for two transitive triples iff they are simultaneously conjugate."""
    return _to_bytes(canonical_pair(t))


def triple_from_fingerprint(fp: bytes) -> MonodromyTriple:
    form = tuple(fp) if not fp.startswith(b",") else tuple(int(x) for x in fp[1:].split(b","))
    d = len(form) // 2
    return MonodromyTriple.from_pair(form[:d], form[d:])
