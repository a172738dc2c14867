"""Ordinary Hurwitz numbers h_{g,1^d}.

h_{g,1^d} is the number of tuples of r = 2d + 2g - 2 transpositions in S_d
whose product is the identity and which generate a transitive subgroup.
Three independent engines produce the disconnected (not necessarily
transitive) count:

* ``brute``      -- enumeration of transposition tuples;
* ``characters`` -- Frobenius sum  sum_lambda (f^lambda)^2 c(lambda)^r / d!;
* ``cutjoin``    -- iterated multiplication by the transposition class sum.

The transitive count is extracted by deleting the orbit of letter 1
(``connected_count``).  Everything is exact integer arithmetic.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Callable, Dict, Mapping, Optional

from .partitions import Partition, content_sum, dimension, partitions_of

DEFAULT_CAP = 10**8
METHODS = ("auto", "brute", "characters", "cutjoin", "all")

ClassVector = Dict[Partition, int]


class HurwitzError(Exception):
    pass


class CapExceeded(HurwitzError):
    """The brute-force enumeration would exceed the configured cap."""


class InternalInexact(HurwitzError):
    """An integer division that must be exact left a remainder."""


class MethodDisagreement(HurwitzError):
    """Two engines produced different counts."""


@dataclass(frozen=True)
class TupleCount:
    value: int
    connected: bool = True
    engines: Mapping[str, int] = field(default_factory=dict)


def num_transpositions(g: int, d: int) -> int:
    return 2 * d + 2 * g - 2


# -- brute force --------------------------------------------------------------

def brute_force_feasible(d: int, r: int, cap: Optional[int] = None) -> bool:
    cap = DEFAULT_CAP if cap is None else cap
    return comb(d, 2) ** r <= cap


def brute_force_count(d: int, r: int, require_transitive: bool = False,
                      cap: Optional[int] = None, memo: bool = True) -> int:
    """Count tuples (t_1, ..., t_r) of transpositions in S_d with t_1...t_r = id.

    Depth-first over transpositions carrying the prefix product and, when
    ``require_transitive``, the orbit partition of the letters generated so
    far.  The number of completions depends only on (steps left, prefix,
    orbits), so with ``memo`` those subtrees are counted once.

    Raises ``CapExceeded`` if C(d,2)^r exceeds ``cap``.
    """
    if d < 1 or r < 0:
        raise ValueError("need d >= 1 and r >= 0")
    if not brute_force_feasible(d, r, cap):
        raise CapExceeded(f"C({d},2)^{r} tuples exceeds enumeration cap")

    transpositions = list(combinations(range(d), 2))
    identity = tuple(range(d))
    cache: dict = {}

    def merge(blocks, i, j):
        a, b = blocks[i], blocks[j]
        if a == b:
            return blocks
        lo, hi = min(a, b), max(a, b)
        return tuple(lo if x == hi else x for x in blocks)

    def search(left, perm, blocks):
        if require_transitive and len(set(blocks)) - 1 > left:
            return 0  # not enough steps left to connect the orbits
        if left == 0:
            if perm != identity:
                return 0
            return 1 if not require_transitive or len(set(blocks)) == 1 else 0
        key = (left, perm, blocks)
        if memo and key in cache:
            return cache[key]
        total = 0
        for i, j in transpositions:
            p = list(perm)
            p[i], p[j] = p[j], p[i]
            total += search(left - 1, tuple(p),
                            merge(blocks, i, j) if require_transitive else blocks)
        if memo:
            cache[key] = total
        return total

    return search(r, identity, identity if require_transitive else None)


# -- character sum ------------------------------------------------------------

@lru_cache(maxsize=None)
def _frobenius_terms(d: int):
    return tuple((dimension(lam) ** 2, content_sum(lam)) for lam in partitions_of(d))


@lru_cache(maxsize=None)
def disconnected_count(d: int, r: int) -> int:
    """Number of r-tuples of transpositions in S_d with product identity."""
    if d < 0 or r < 0:
        raise ValueError("need d >= 0 and r >= 0")
    if d == 0:
        return 1 if r == 0 else 0
    total = sum(f2 * c**r for f2, c in _frobenius_terms(d))
    q, rem = divmod(total, factorial(d))
    if rem:
        raise InternalInexact(f"character sum for d={d}, r={r} not divisible by {d}!")
    return q


# -- cut-and-join walk --------------------------------------------------------

@lru_cache(maxsize=None)
def _cut_join_transitions(d: int):
    """For each class mu, the pairs (nu, k): k transpositions t send a fixed
    sigma of type mu to sigma*t of type nu."""
    table = {}
    for mu in partitions_of(d):
        acc = defaultdict(int)
        parts = list(mu)
        for i, p in enumerate(parts):
            rest = parts[:i] + parts[i + 1:]
            for a in range(1, p // 2 + 1):
                b = p - a
                nu = tuple(sorted(rest + [a, b], reverse=True))
                acc[nu] += p if a != b else p // 2
        for i, j in combinations(range(len(parts)), 2):
            rest = [q for k, q in enumerate(parts) if k not in (i, j)]
            nu = tuple(sorted(rest + [parts[i] + parts[j]], reverse=True))
            acc[nu] += parts[i] * parts[j]
        table[mu] = tuple(acc.items())
    return table


def _walk_step(d: int, vec: ClassVector) -> ClassVector:
    transitions = _cut_join_transitions(d)
    return {mu: sum(k * vec[nu] for nu, k in transitions[mu]) for mu in transitions}


def cut_and_join_walk(d: int, r: int) -> ClassVector:
    """Class function counting r-tuples of transpositions by product.

    ``entries[mu]`` is the number of tuples whose product equals one fixed
    permutation of cycle type ``mu``.
    """
    if d < 1 or r < 0:
        raise ValueError("need d >= 1 and r >= 0")
    vec = {mu: 0 for mu in partitions_of(d)}
    vec[(1,) * d] = 1
    for _ in range(r):
        vec = _walk_step(d, vec)
    return vec


@lru_cache(maxsize=None)
def _walk_identity_series(d: int, r: int):
    vec = {mu: 0 for mu in partitions_of(d)}
    ident = (1,) * d
    vec[ident] = 1
    series = [1]
    for _ in range(r):
        vec = _walk_step(d, vec)
        series.append(vec[ident])
    return tuple(series)


def walk_disconnected_count(d: int, r: int) -> int:
    if d == 0:
        return 1 if r == 0 else 0
    return _walk_identity_series(d, r)[r]


# -- connected counts ---------------------------------------------------------

def connected_count(d: int, r: int,
                    disconnected: Callable[[int, int], int] = disconnected_count) -> int:
    """Transitive tuple count from a disconnected-count function.

    A tuple splits into the sub-tuple acting on the orbit of letter 1 (k
    letters, s transpositions) and the rest, so
    D(d,r) = sum_{k,s} C(d-1,k-1) C(r,s) Conn(k,s) D(d-k,r-s).
    """
    if d < 1 or r < 0:
        raise ValueError("need d >= 1 and r >= 0")
    conn = [[0] * (r + 1) for _ in range(d + 1)]
    for k in range(1, d + 1):
        for s in range(r + 1):
            value = disconnected(k, s)
            for j in range(1, k):
                top = comb(k - 1, j - 1)
                for t in range(s + 1):
                    cj = conn[j][t]
                    if not cj:
                        continue
                    rest = disconnected(k - j, s - t)
                    if rest:
                        value -= top * comb(s, t) * cj * rest
            if value < 0:
                raise InternalInexact(f"negative connected count at d={k}, r={s}")
            conn[k][s] = value
    return conn[d][r]


def _engine_value(name: str, d: int, r: int, cap: Optional[int]) -> int:
    if name == "brute":
        return brute_force_count(d, r, require_transitive=True, cap=cap)
    if name == "characters":
        return connected_count(d, r, disconnected_count)
    if name == "cutjoin":
        return connected_count(d, r, walk_disconnected_count)
    raise ValueError(f"unknown method {name!r}")


def hurwitz_simple(g: int, d: int, method: str = "auto",
                   cap: Optional[int] = None) -> TupleCount:
    """h_{g,1^d}, the raw number of transitive transposition tuples.

    ``method='auto'`` cross-checks brute force against the character sum
    when enumeration is cheap (d <= 4 and under the cap) and otherwise uses
    the character sum alone.  ``method='all'`` runs every feasible engine.
    Engines that disagree raise ``MethodDisagreement``.
    """
    if g < 0 or d < 1:
        raise ValueError("need g >= 0 and d >= 1")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    r = num_transpositions(g, d)

    if method == "auto":
        names = ["characters"]
        if d <= 4 and brute_force_feasible(d, r, cap):
            names.insert(0, "brute")
    elif method == "all":
        names = ["characters", "cutjoin"]
        if brute_force_feasible(d, r, cap):
            names.insert(0, "brute")
    else:
        names = [method]

    engines = {name: _engine_value(name, d, r, cap) for name in names}
    values = set(engines.values())
    if len(values) != 1:
        raise MethodDisagreement(f"h_(g={g}, d={d}) engines disagree: {engines}")
    return TupleCount(values.pop(), connected=True, engines=engines)


def hurwitz_number(g: int, d: int, method: str = "auto", cap: Optional[int] = None) -> int:
    return hurwitz_simple(g, d, method, cap).value


def pair_count(g: int, d: int, method: str = "auto", cap: Optional[int] = None) -> Fraction:
    """Number of (curve, function) pairs up to isomorphism, h_{g,1^d} / d!."""
    return Fraction(hurwitz_number(g, d, method, cap), factorial(d))
