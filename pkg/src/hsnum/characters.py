"""Irreducible characters of the symmetric group.

Values come from the Murnaghan-Nakayama rule.  The boundary of a Young
diagram is encoded by its beta-set (first-column hook lengths); removing a
border strip of size k is sliding one bead from position b to b - k onto an
empty slot, and the strip height is the number of beads jumped over.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb

from .partitions import Partition, check_partition, content_sum, dimension


def _beta_set(shape: Partition):
    n = len(shape)
    return [p + (n - 1 - i) for i, p in enumerate(shape)]


def _from_beta_set(beads) -> Partition:
    beads = sorted(beads, reverse=True)
    n = len(beads)
    return tuple(b - (n - 1 - i) for i, b in enumerate(beads) if b - (n - 1 - i) > 0)


def border_strips(shape: Partition, size: int):
    """Yield ``(remaining_shape, height)`` for each removable border strip of ``size`` cells."""
    beads = _beta_set(shape)
    occupied = set(beads)
    for pos, b in enumerate(beads):
        target = b - size
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beads if target < c < b)
        moved = beads[:pos] + [target] + beads[pos + 1:]
        yield _from_beta_set(moved), height


@lru_cache(maxsize=None)
def _mn(shape: Partition, cls: Partition) -> int:
    if not cls:
        return 1 if not shape else 0
    if cls[0] == 1:
        return dimension(shape)
    head, rest = cls[0], cls[1:]
    total = 0
    for smaller, height in border_strips(shape, head):
        term = _mn(smaller, rest)
        total += -term if height % 2 else term
    return total


def mn_character(shape, cls) -> int:
    """chi^shape evaluated on the conjugacy class of cycle type ``cls``."""
    shape = check_partition(shape)
    cls = check_partition(sorted(cls, reverse=True))
    if sum(shape) != sum(cls):
        raise ValueError(f"size mismatch: |{shape}| != |{cls}|")
    return _mn(shape, cls)


def transposition_class(d: int) -> Partition:
    return (2,) + (1,) * (d - 2)


def central_char_transposition(shape) -> int:
    """Eigenvalue of the transposition class sum on the irreducible ``shape``.

    Equal to C(d,2) * chi(2,1^(d-2)) / dim, which collapses to the content sum.
    """
    shape = check_partition(shape)
    if sum(shape) < 2:
        return 0
    return content_sum(shape)


def central_char_via_characters(shape) -> int:
    """Same scalar as ``central_char_transposition`` but through the character value."""
    shape = check_partition(shape)
    d = sum(shape)
    if d < 2:
        return 0
    num = comb(d, 2) * mn_character(shape, transposition_class(d))
    q, rem = divmod(num, dimension(shape))
    assert rem == 0
    return q
