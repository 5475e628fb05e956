"""Closed-form weak Hurwitz numbers for the family, and the g=0, h=2 case split.

Floor brackets are evaluated on exact integers or ``Fraction``; no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .branch_data import FamilyDatum, Partition, make_family_datum


class OutOfFamilyError(ValueError):
    """The (g, h) pair has no closed form here; fall back to the oracle."""


COVERED = frozenset({(0, 0), (0, 1), (0, 2), (1, 2), (1, 3), (2, 4)})


def floor_half_sum(x: int) -> int:
    """sum_{j=1}^{x} floor(j/2), which equals floor(x^2/4)."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    return x * x // 4


@dataclass(frozen=True)
class CaseLabel:
    """Which clause of the g=0, h=2 statement applies, with its witnessing parameters.

    ``params`` is a sorted tuple of (name, value) pairs, e.g. ``(("q", 5), ("r", 3))``.
    """

    tag: str
    params: tuple[tuple[str, int], ...] = ()

    def __str__(self) -> str:
        roman, _, sub = self.tag.partition("-")
        return f"({roman})" + (f"-({sub})" if sub else "")

    def param(self, name: str) -> int:
        return dict(self.params)[name]

    def to_json(self) -> dict:
        return {"tag": self.tag, "params": dict(self.params)}

    @classmethod
    def from_json(cls, obj: dict) -> "CaseLabel":
        return cls(obj["tag"], tuple(sorted((str(k), int(v)) for k, v in obj["params"].items())))


CASE_NU = {"i": 0, "ii": 0, "iii-a": 1, "iii-b": 1, "iii-c": 1, "iv": 1, "v": 2, "vi-a": 3, "vi-b": 3}


def _label(tag, **params) -> CaseLabel:
    return CaseLabel(tag, tuple(sorted(params.items())))


def classify_g0h2(k: int, pi) -> CaseLabel:
    """Case label for pi = (p, q, r), p >= q >= r, p + q + r = 2k.

    All parameters refer to the sorted partition; fractional thresholds like
    ``t < k/3`` are compared after clearing denominators.
    """
    pi = pi if isinstance(pi, Partition) else Partition(pi)
    if pi.length != 3 or pi.total != 2 * k:
        raise ValueError(f"{pi} is not a 3-part partition of {2 * k}")
    p, q, r = pi.parts
    if p == q == r:
        return _label("i", m=p // 2)
    if p == q or q == r:
        # (2t, k-t, k-t): the odd one out is 2t
        t = (r if p == q else p) // 2
        if 2 * t == k:
            return _label("ii", m=t)
        if 3 * t < k:
            return _label("iii-a", t=t)
        if 2 * t < k:
            return _label("iii-b", t=t)
        return _label("iii-c", t=t)
    if q + r == k:
        return _label("iv", r=r)
    if 2 * r < k:
        if q < k - r:
            return _label("v", q=q, r=r)
        return _label("vi-a", q=q, r=r)
    return _label("vi-b", q=q, r=r)


def case_conditions_hold(k: int, label: CaseLabel) -> bool:
    """Check a label's defining inequalities directly, independent of ``classify_g0h2``."""
    P = dict(label.params)
    tag = label.tag
    if tag == "i":
        return k == 3 * P["m"]
    if tag == "ii":
        return k == 2 * P["m"]
    if tag.startswith("iii"):
        t = Fraction(P["t"])
        return {
            "iii-a": 1 <= t < Fraction(k, 3),
            "iii-b": Fraction(k, 3) < t < Fraction(k, 2),
            "iii-c": Fraction(k, 2) < t < k,
        }[tag]
    r = Fraction(P["r"])
    if tag == "iv":
        return 1 <= r < Fraction(k, 2)
    q = Fraction(P["q"])
    if tag == "v":
        return 1 <= r < Fraction(k, 2) and r < q < k - r
    if tag == "vi-a":
        return 1 <= r < Fraction(k, 2) and k - r < q < k - r / 2
    if tag == "vi-b":
        return Fraction(k, 2) <= r < Fraction(2 * k, 3) and r < q < k - r / 2
    raise ValueError(tag)


def case_partition(k: int, label: CaseLabel) -> Partition:
    """The partition a case label describes, as written in the statement."""
    P = dict(label.params)
    tag = label.tag
    if tag == "i":
        return Partition([2 * P["m"]] * 3)
    if tag == "ii":
        return Partition([2 * P["m"], P["m"], P["m"]])
    if tag.startswith("iii"):
        t = P["t"]
        return Partition([2 * t, k - t, k - t])
    if tag == "iv":
        return Partition([k, k - P["r"], P["r"]])
    return Partition([2 * k - P["q"] - P["r"], P["q"], P["r"]])


def nu_g0(h: int, k: int, pi) -> int:
    pi = pi if isinstance(pi, Partition) else Partition(pi)
    if h == 0:
        return 1
    if h == 1:
        return 0 if pi[1] == k else 1
    if h == 2:
        return CASE_NU[classify_g0h2(k, pi).tag]
    raise OutOfFamilyError(f"no closed form for g=0, h={h}")


def nu_g1_h2(k: int) -> int:
    return (k - 1) ** 2 // 4


def nu_g1_h3(k: int, p: int) -> int:
    """Weak Hurwitz number for g=1, h=3, pi=(p, 2k-p) with p <= k."""
    if k < 4:
        raise ValueError(f"g=1, h=3 needs k >= 4, got {k}")
    if not 1 <= p <= k:
        raise ValueError(f"need 1 <= p <= k, got p={p}, k={k}")
    if p == k:
        hk = k // 2
        return hk * (hk - 1) // 2 + ((k - 1) // 2) ** 2 // 4
    hp = p // 2
    return (
        (p - 1) ** 2 // 4
        + hp * (hp - 1)
        + (k - 3) * (k - p - 1)
        + (k - hp - 1) ** 2 // 4
        - (k - p) // 2
        + ((p - 1) // 2) ** 2 // 4
    )


def nu_g2_h4(k: int) -> int:
    if k < 5:
        raise ValueError(f"g=2, h=4 needs k >= 5, got {k}")
    val = Fraction(k - 1, 16) * (7 * k**3 - 63 * k**2 + 197 * k - 208) + Fraction(5, 8) * (5 - 2 * k) * (k // 2)
    if val.denominator != 1 or val < 0:
        raise AssertionError(f"genus-2 formula is not a nonnegative integer at k={k}: {val}")
    return int(val)


def symmetric_family_count_S(k: int) -> int:
    """5-compositions of k up to (a,b,c,d,e) <-> (b,a,d,c,e), via the two quartic/cubic sums."""
    if k < 5:
        raise ValueError(f"need k >= 5, got {k}")
    even = k % 2 == 0
    x = 48 if even else 45
    y, z = (8, 0) if even else (11, -6)
    first = Fraction(k**4 - 12 * k**3 + 50 * k**2 - 84 * k + x, 48)
    second = Fraction(k**3 - 6 * k**2 + y * k + z, 24)
    total = first + second
    if first.denominator != 1 or second.denominator != 1:
        raise AssertionError(f"symmetric count is not integral at k={k}: {first} + {second}")
    return int(total)


def genus2_decomposition(k: int) -> int:
    """8 asymmetric families of ordered 5-compositions plus 5 symmetric ones."""
    return 8 * comb(k - 1, 4) + 5 * symmetric_family_count_S(k)


def nu(fd: FamilyDatum) -> int:
    key = (fd.g, fd.h)
    if key not in COVERED:
        raise OutOfFamilyError(f"out of covered family: (g={fd.g}, h={fd.h}) has no closed form")
    if fd.g == 0:
        return nu_g0(fd.h, fd.k, fd.pi)
    if key == (1, 2):
        return nu_g1_h2(fd.k)
    if key == (1, 3):
        return nu_g1_h3(fd.k, fd.pi[1])
    return nu_g2_h4(fd.k)


def nu_of(g: int, h: int, k: int, pi) -> int:
    return nu(make_family_datum(g, h, k, pi))
