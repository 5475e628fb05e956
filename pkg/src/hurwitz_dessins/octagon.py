"""Edge pairings of an octagon that glue up to the genus-2 surface.

Edges carry labels in Z/8; vertex ``i`` is where edge ``i-1`` ends and edge ``i``
begins. Pairing edge ``i`` with edge ``j`` orientably identifies vertex ``i``
with ``j+1`` and ``i+1`` with ``j``. A pairing gives genus 2 exactly when all
eight vertices end up in one class (chi = 1 - 4 + 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

N = 8

Pairing = frozenset  # frozenset of frozenset({i, j}) edge pairs


def perfect_matchings(points: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first = points[0]
    for i in range(1, len(points)):
        rest = points[1:i] + points[i + 1 :]
        for m in perfect_matchings(rest):
            yield [(first, points[i])] + m


def vertex_classes(pairing) -> int:
    parent = list(range(N))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in (tuple(p) for p in pairing):
        parent[find(i)] = find((j + 1) % N)
        parent[find((i + 1) % N)] = find(j)
    return len({find(x) for x in range(N)})


@dataclass(frozen=True)
class DihedralElement:
    """Edge map i -> s*i + shift (mod 8) with s = +1, or i -> shift - i - 1 for s = -1."""

    s: int
    shift: int

    def edge(self, i: int) -> int:
        if self.s == 1:
            return (i + self.shift) % N
        return (self.shift - i - 1) % N

    def vertex(self, v: int) -> int:
        if self.s == 1:
            return (v + self.shift) % N
        return (self.shift - v) % N

    def on_pairing(self, pairing) -> Pairing:
        return frozenset(frozenset(self.edge(i) for i in pair) for pair in pairing)


DIHEDRAL_16 = tuple(DihedralElement(s, r) for s in (1, -1) for r in range(N))


@dataclass(frozen=True)
class PairingClass:
    representative: Pairing
    orbit_size: int
    stabilizer: tuple[DihedralElement, ...]
    leg_positions: int  # orbits of the stabilizer on the 8 corners of the glued vertex

    @property
    def stabilizer_order(self) -> int:
        return len(self.stabilizer)

    def pairs(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(p)) for p in self.representative)


def _key(pairing) -> tuple:
    return tuple(sorted(tuple(sorted(p)) for p in pairing))


def genus2_pairings() -> list[Pairing]:
    out = []
    for m in perfect_matchings(tuple(range(N))):
        pairing = frozenset(frozenset(p) for p in m)
        if vertex_classes(pairing) == 1:
            out.append(pairing)
    return out


def octagon_pairings() -> list[PairingClass]:
    """Dihedral classes of genus-2 pairings, ordered by representative."""
    seen: set[Pairing] = set()
    classes = []
    for pairing in sorted(genus2_pairings(), key=_key):
        if pairing in seen:
            continue
        orbit = {g.on_pairing(pairing) for g in DIHEDRAL_16}
        seen |= orbit
        rep = min(orbit, key=_key)
        stab = tuple(g for g in DIHEDRAL_16 if g.on_pairing(rep) == rep)
        corners = {min(g.vertex(v) for g in stab) for v in range(N)}
        classes.append(PairingClass(rep, len(orbit), stab, len(corners)))
    return sorted(classes, key=lambda c: _key(c.representative))
