"""Integer partitions as plain tuples of weakly decreasing positive ints.

The empty tuple is the unique partition of 0.  Enumeration order is
reverse-lexicographic, so ``partitions_of(3)`` is ``[(3,), (2, 1), (1, 1, 1)]``.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Tuple

Partition = Tuple[int, ...]


def is_partition(parts) -> bool:
    parts = tuple(parts)
    if any(not isinstance(p, int) or p <= 0 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def check_partition(parts) -> Partition:
    """Return ``parts`` as a tuple, raising ``ValueError`` if it is not a partition."""
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts!r}")
    return parts


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, largest: int) -> Tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> Tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _partitions_bounded(n, n)


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def conjugate(parts: Partition) -> Partition:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def hook_lengths(parts: Partition):
    """Hook length of every cell, row by row."""
    conj = conjugate(parts)
    return [[(row - j - 1) + (conj[j] - i - 1) + 1 for j in range(row)]
            for i, row in enumerate(parts)]


def dimension(parts: Partition) -> int:
    """Number of standard Young tableaux of shape ``parts`` (hook length formula)."""
    n = sum(parts)
    denom = prod(h for row in hook_lengths(parts) for h in row)
    f, rem = divmod(factorial(n), denom)
    assert rem == 0, f"hook length product does not divide {n}! for {parts}"
    return f


def content_sum(parts: Partition) -> int:
    """Sum of (column - row) over all cells, 0-based."""
    # row i contributes sum_{j<p} (j - i) = p(p-1)/2 - i*p
    return sum(p * (p - 1) // 2 - i * p for i, p in enumerate(parts))


def class_size(parts: Partition) -> int:
    """Size of the conjugacy class of cycle type ``parts`` in S_n."""
    n = sum(parts)
    mult = Counter(parts)
    return factorial(n) // (prod(parts) * prod(factorial(m) for m in mult.values()))


def sign(parts: Partition) -> int:
    """Sign of a permutation with cycle type ``parts``."""
    return -1 if (sum(parts) - len(parts)) % 2 else 1
