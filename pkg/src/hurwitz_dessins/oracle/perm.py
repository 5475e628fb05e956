"""Permutations of {0, ..., d-1} as plain tuples of images.

Products read left to right: ``compose(p, q)`` applies ``p`` first, then ``q``.
"""

from __future__ import annotations

import random
from collections import Counter
from typing import Iterator, Sequence

Perm = tuple[int, ...]


def identity(d: int) -> Perm:
    return tuple(range(d))


def is_perm(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def compose(*perms: Perm) -> Perm:
    out = perms[0]
    for q in perms[1:]:
        out = tuple(q[x] for x in out)
    return out


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def conjugate(p: Perm, x: Perm) -> Perm:
    """x^-1 p x, i.e. p with every point relabeled through x."""
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[x[i]] = x[j]
    return tuple(out)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Perm) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def num_cycles(p: Perm) -> int:
    return len(cycles(p))


def from_cycles(d: int, cycs) -> Perm:
    out = list(range(d))
    for c in cycs:
        for i, x in enumerate(c):
            out[x] = c[(i + 1) % len(c)]
    return tuple(out)


def canonical_of_type(parts: Sequence[int]) -> Perm:
    """Cycles in decreasing length, filling points in order: (2,2) -> (0 1)(2 3)."""
    d = sum(parts)
    cycs, start = [], 0
    for length in sorted(parts, reverse=True):
        cycs.append(tuple(range(start, start + length)))
        start += length
    return from_cycles(d, cycs)


def is_transitive(*perms: Perm) -> bool:
    d = len(perms[0])
    if d == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for p in perms:
            y = p[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == d


def random_perm(d: int, rng: random.Random) -> Perm:
    p = list(range(d))
    rng.shuffle(p)
    return tuple(p)


def class_size(parts: Sequence[int]) -> int:
    from math import factorial, prod

    d = sum(parts)
    z = prod(parts) * prod(factorial(m) for m in Counter(parts).values())
    return factorial(d) // z


def perms_of_type(parts: Sequence[int]) -> Iterator[Perm]:
    """Every permutation with the given cycle type, each exactly once.

    The smallest unused point always opens the next cycle; its length is chosen
    among the remaining distinct parts and the rest of the cycle is an ordered
    choice of unused points.
    """
    d = sum(parts)
    remaining = Counter(parts)
    img = [-1] * d
    used = [False] * d

    def fill_cycle(first, prev, left):
        if left == 0:
            img[prev] = first
            yield from open_cycle()
            img[prev] = -1
            return
        for y in range(first + 1, d):
            if not used[y]:
                used[y] = True
                img[prev] = y
                yield from fill_cycle(first, y, left - 1)
                img[prev] = -1
                used[y] = False

    def open_cycle():
        try:
            first = used.index(False)
        except ValueError:
            yield tuple(img)
            return
        used[first] = True
        for length in sorted(remaining):
            if remaining[length] == 0:
                continue
            remaining[length] -= 1
            yield from fill_cycle(first, first, length - 1)
            remaining[length] += 1
        used[first] = False

    yield from open_cycle()
