"""Explicit dessins realizing the family, as decorated graph families.

A decoration ``a`` on an edge means the edge carries ``a`` black and ``a-1``
white bivalent vertices, so the decorations of one dessin always sum to k.
Each family is described by what it realizes (a function of the decorations)
and by its symmetry, an involution on the decoration tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, NamedTuple

from .branch_data import Partition


class RealizationDescriptor(NamedTuple):
    family: str
    decorations: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.family}(" + ",".join(map(str, self.decorations)) + ")"

    @classmethod
    def parse(cls, text: str) -> "RealizationDescriptor":
        text = text.strip()
        family, _, rest = text.partition("(")
        if not rest.endswith(")"):
            raise ValueError(f"not a realization descriptor: {text!r}")
        return cls(family, tuple(int(x) for x in rest[:-1].split(",")))


def _swap_ab(t):
    return (t[1], t[0]) + t[2:]


def _swap_bc(t):
    return (t[0], t[2], t[1])


def _swap_ab_cd(t):
    a, b, c, d, e = t
    return (b, a, d, c, e)


def _reverse_abcd(t):
    a, b, c, d, e = t
    return (d, c, b, a, e)


@dataclass(frozen=True)
class Family:
    name: str
    arity: int
    realizes: Callable[[tuple[int, ...]], tuple[int, ...]]
    symmetry: Callable | None = None

    def canonical(self, deco: tuple[int, ...]) -> tuple[int, ...]:
        # representative: largest tuple in the orbit, so I(a,b,c) is listed with b >= c
        if self.symmetry is None:
            return deco
        return max(deco, self.symmetry(deco))

    def descriptor(self, deco) -> RealizationDescriptor:
        return RealizationDescriptor(self.name, self.canonical(tuple(deco)))


# g=0, h=2: the two embeddings of the (5,1) graph in the sphere
G0H2_FAMILIES = (
    Family("I", 3, lambda t: (2 * t[0] + t[1] + t[2], t[1], t[2]), _swap_bc),
    Family("II", 3, lambda t: (2 * t[0] + t[1], t[1] + t[2], t[2])),
)

# g=1, h=2: the single embedding of the (5,1) graph in the torus
G1H2_FAMILY = Family("g1-h2", 3, lambda t: (2 * sum(t),), _swap_bc)


def _g1h3(name, realizes, symmetric):
    return Family(name, 4, realizes, _swap_ab if symmetric else None)


# g=1, h=3: the seven embeddings of the (7,1) graph in the torus with two disc regions
G1H3_FAMILIES = (
    _g1h3("I", lambda t: (t[0] + t[1] + t[2] + 2 * t[3], t[0] + t[1] + t[2]), True),
    _g1h3("II", lambda t: (t[0] + t[1] + 2 * t[2], t[0] + t[1] + 2 * t[3]), True),
    _g1h3("III", lambda t: (t[0] + t[1] + 2 * t[2] + 2 * t[3], t[0] + t[1]), False),
    _g1h3("IV", lambda t: (2 * t[0] + 2 * t[1] + t[2], t[2] + 2 * t[3]), True),
    _g1h3("V", lambda t: (2 * t[0] + 2 * t[1] + t[2] + 2 * t[3], t[2]), True),
    _g1h3("VI", lambda t: (2 * t[0] + 2 * t[1] + t[2] + 2 * t[3], t[2]), False),
    _g1h3("VII", lambda t: (2 * t[0] + 2 * t[1] + t[2] + 2 * t[3], t[2]), False),
)

_G2_SYMMETRIES = {
    "I.1": _swap_ab_cd,
    "I.3": _reverse_abcd,
    "II.1": _reverse_abcd,
    "II.5": _reverse_abcd,
    "IV": _reverse_abcd,
}
G2_FAMILY_NAMES = (
    "I.1", "I.2", "I.3",
    "II.1", "II.2", "II.3", "II.4", "II.5",
    "III.1", "III.2", "III.3", "III.4",
    "IV",
)
# g=2, h=4: the 13 embeddings of the (9,1) graph in the genus-2 surface; all realize (2k)
G2_FAMILIES = tuple(
    Family(name, 5, lambda t: (2 * sum(t),), _G2_SYMMETRIES.get(name)) for name in G2_FAMILY_NAMES
)


def compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of ``parts`` positive integers summing to ``n``, lexicographic."""
    if parts < 1 or n < parts:
        return
    for cuts in combinations(range(1, n), parts - 1):
        prev = 0
        out = []
        for c in cuts:
            out.append(c - prev)
            prev = c
        out.append(n - prev)
        yield tuple(out)


@lru_cache(maxsize=128)
def _realization_index(families, k: int) -> dict[tuple[int, ...], frozenset]:
    """Every descriptor with decorations summing to k, grouped by the partition it realizes."""
    groups: dict[tuple[int, ...], set] = {}
    for fam in families:
        for deco in compositions(k, fam.arity):
            if deco != fam.canonical(deco):
                continue
            key = tuple(sorted(fam.realizes(deco), reverse=True))
            groups.setdefault(key, set()).add(RealizationDescriptor(fam.name, deco))
    return {key: frozenset(v) for key, v in groups.items()}


def _realize(families, k: int, pi: Partition) -> set[RealizationDescriptor]:
    return set(_realization_index(families, k).get(pi.parts, ()))


def realizations_g0h2(k: int, pi) -> set[RealizationDescriptor]:
    pi = pi if isinstance(pi, Partition) else Partition(pi)
    if pi.length != 3 or pi.total != 2 * k:
        raise ValueError(f"{pi} is not a 3-part partition of {2 * k}")
    return _realize(G0H2_FAMILIES, k, pi)


def realizations_g1(k: int, h: int, p: int | None = None) -> set[RealizationDescriptor]:
    if h == 2:
        if p is not None and p != 2 * k:
            raise ValueError("g=1, h=2 has pi=(2k); no p expected")
        if k < 3:
            raise ValueError(f"g=1, h=2 needs k >= 3, got {k}")
        return _realize((G1H2_FAMILY,), k, Partition([2 * k]))
    if h == 3:
        if k < 4:
            raise ValueError(f"g=1, h=3 needs k >= 4, got {k}")
        if p is None or not 1 <= p <= 2 * k - 1:
            raise ValueError(f"g=1, h=3 needs 1 <= p < 2k, got p={p}")
        return _realize(G1H3_FAMILIES, k, Partition([p, 2 * k - p]))
    raise ValueError(f"g=1 realizations cover h in {{2, 3}}, got h={h}")


def iter_realizations_g2(k: int) -> Iterator[RealizationDescriptor]:
    """Each genus-2 descriptor exactly once; every 5-composition of k realizes (2k)."""
    if k < 5:
        raise ValueError(f"g=2, h=4 needs k >= 5, got {k}")
    decos = list(compositions(k, 5))
    for fam in G2_FAMILIES:
        if fam.symmetry is None:
            for t in decos:
                yield RealizationDescriptor(fam.name, t)
        else:
            sym = fam.symmetry
            for t in decos:
                if t >= sym(t):
                    yield RealizationDescriptor(fam.name, t)


def realizations_g2(k: int) -> set[RealizationDescriptor]:
    return set(iter_realizations_g2(k))


def realizations(fd) -> set[RealizationDescriptor]:
    """Realization set for any family datum with a known list of embeddings."""
    key = (fd.g, fd.h)
    if key == (0, 2):
        return realizations_g0h2(fd.k, fd.pi)
    if key == (1, 2):
        return realizations_g1(fd.k, 2)
    if key == (1, 3):
        return realizations_g1(fd.k, 3, fd.pi[1])
    if key == (2, 4):
        return realizations_g2(fd.k)
    raise ValueError(f"no realization list for (g={fd.g}, h={fd.h})")


def family_counts(descriptors) -> dict[str, int]:
    counts: dict[str, int] = {}
    for d in descriptors:
        counts[d.family] = counts.get(d.family, 0) + 1
    return counts


def sort_descriptors(descriptors) -> list[RealizationDescriptor]:
    """Deterministic listing order: family by roman numeral, then decorations."""
    order = {"I": 1, "II": 2, "III": 3, "IV": 4, "V": 5, "VI": 6, "VII": 7}

    def key(d):
        head, _, tail = d.family.partition(".")
        return (order.get(head, 99), int(tail) if tail else 0, d.family, d.decorations)

    return sorted(descriptors, key=key)
