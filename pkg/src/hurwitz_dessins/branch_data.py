"""Partitions, branch data over the sphere, and the (2,...,2), (2h+1,1,2,...,2), pi family."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator


class BranchDataError(ValueError):
    """Invalid partition or branch datum. ``code`` names the failed condition."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


# error codes for make_family_datum
WRONG_LENGTH = "wrong-length"
WRONG_TOTAL = "wrong-total"
H_BELOW_2G = "h-below-2g"
K_TOO_SMALL = "k-too-small"


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Parts may be given in any order; they are sorted on construction.
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if not parts:
            raise BranchDataError("empty", "a partition needs at least one part")
        if parts[-1] < 1:
            raise BranchDataError("nonpositive", f"parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def counts(self) -> Counter:
        return Counter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class BranchDatum:
    """Three-point branch datum over the sphere: degree, source genus, three partitions."""

    source_genus: int
    degree: int
    partitions: tuple[Partition, Partition, Partition]

    def __post_init__(self):
        parts = tuple(p if isinstance(p, Partition) else Partition(p) for p in self.partitions)
        if len(parts) != 3:
            raise BranchDataError("arity", "exactly three partitions are required")
        if self.degree < 1 or self.source_genus < 0:
            raise BranchDataError("range", "degree must be positive and genus nonnegative")
        for p in parts:
            if p.total != self.degree:
                raise BranchDataError(WRONG_TOTAL, f"{p} is not a partition of {self.degree}")
        object.__setattr__(self, "partitions", parts)

    def to_json(self) -> dict:
        return {
            "g": self.source_genus,
            "d": self.degree,
            "partitions": [list(p.parts) for p in self.partitions],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BranchDatum":
        return cls(int(obj["g"]), int(obj["d"]), tuple(Partition(p) for p in obj["partitions"]))

    def __str__(self) -> str:
        return f"(g={self.source_genus}, d={self.degree}, " + ", ".join(map(str, self.partitions)) + ")"


def riemann_hurwitz_check(datum: BranchDatum) -> bool:
    lengths = sum(p.length for p in datum.partitions)
    return (2 - 2 * datum.source_genus) - lengths == -datum.degree


@dataclass(frozen=True)
class FamilyDatum:
    g: int
    h: int
    k: int
    pi: Partition = field(compare=True)

    @property
    def degree(self) -> int:
        return 2 * self.k

    def to_json(self) -> dict:
        return {"g": self.g, "h": self.h, "k": self.k, "pi": list(self.pi.parts)}

    @classmethod
    def from_json(cls, obj: dict) -> "FamilyDatum":
        try:
            g, h, k, pi = int(obj["g"]), int(obj["h"]), int(obj["k"]), obj["pi"]
        except (KeyError, TypeError) as exc:
            raise BranchDataError("parse", f"malformed family datum: {obj!r}") from exc
        return make_family_datum(g, h, k, pi)

    def __str__(self) -> str:
        return f"(g={self.g}, h={self.h}, k={self.k}, pi={self.pi})"


def make_family_datum(g: int, h: int, k: int, pi) -> FamilyDatum:
    """Validate and build a family datum.

    Length-2 partitions ``(p, 2k-p)`` are accepted in either order; storage is
    always weakly decreasing so ``p = pi[1] <= k``.
    """
    pi = pi if isinstance(pi, Partition) else Partition(pi)
    if g < 0 or h < 0:
        raise BranchDataError("range", "g and h must be nonnegative")
    if h < 2 * g:
        raise BranchDataError(H_BELOW_2G, f"need h >= 2g, got g={g}, h={h}")
    if k < h + 1:
        raise BranchDataError(K_TOO_SMALL, f"need k >= h+1, got h={h}, k={k}")
    if pi.total != 2 * k:
        raise BranchDataError(WRONG_TOTAL, f"pi={pi} must sum to 2k={2 * k}")
    if pi.length != h - 2 * g + 1:
        raise BranchDataError(WRONG_LENGTH, f"pi={pi} must have length h-2g+1={h - 2 * g + 1}")
    fd = FamilyDatum(g, h, k, pi)
    assert riemann_hurwitz_check(expand(fd))
    return fd


def expand(fd: FamilyDatum) -> BranchDatum:
    k, h = fd.k, fd.h
    pi1 = Partition([2] * k)
    pi2 = Partition([2 * h + 1, 1] + [2] * (k - h - 1))
    return BranchDatum(fd.g, 2 * k, (pi1, pi2, fd.pi))


def repeated_partitions(fd: FamilyDatum) -> set[tuple[int, int]]:
    """Pairs of positions (1-based) whose partitions coincide in ``expand(fd)``.

    Only pi can coincide with another partition, and only when the lengths
    agree: g=0, k=h+1 against (2,...,2), or k=2h-2g, h>=2g+1 against pi2.
    """
    out = set()
    if fd.g == 0 and fd.k == fd.h + 1 and set(fd.pi) == {2}:
        out.add((1, 3))
    if fd.k == 2 * fd.h - 2 * fd.g and fd.h >= 2 * fd.g + 1:
        if fd.pi == Partition([2 * fd.h + 1, 1] + [2] * (fd.k - fd.h - 1)):
            out.add((2, 3))
    return out


def partitions_exact(n: int, length: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` into exactly ``length`` parts, in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rest, slots, cap):
        if slots == 0:
            if rest == 0:
                yield ()
            return
        hi = min(cap, rest - (slots - 1))
        lo = -(-rest // slots)
        for first in range(hi, lo - 1, -1):
            for tail in rec(rest - first, slots - 1, first):
                yield (first,) + tail

    for parts in rec(n, length, max_part):
        yield Partition(parts)


def family_data(g: int, h: int, k: int) -> list[FamilyDatum]:
    """All valid family data for fixed (g, h, k), in the tables' descending order."""
    if h < 2 * g or k < h + 1:
        return []
    return [FamilyDatum(g, h, k, pi) for pi in partitions_exact(2 * k, h - 2 * g + 1)]
