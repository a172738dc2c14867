"""Severi triples (g, d, l) and their Hurwitz-Severi numbers.

A triple describes irreducible plane curves of degree d + l and geometric
genus g with an l-fold ordinary point at a fixed p and ordinary nodes
elsewhere, projected from p with degree d.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, NamedTuple, Tuple

from .hurwitz import TupleCount, hurwitz_simple

HurwitzProvider = Callable[[int, int], TupleCount]

OPEN_CASE_MESSAGE = (
    "unbendable triple: no closed formula; the case d + 2l < g + 2 "
    "is still widely open (other techniques are needed, cf. the smooth-quartic case)"
)


class SeveriError(Exception):
    pass


class EmptyVariety(SeveriError):
    pass


class UnbendableUnsupported(SeveriError):
    pass


class DegenerateProjection(SeveriError):
    pass


class Kind(enum.Enum):
    BENDABLE = "bendable"
    SEMI_BENDABLE = "semi-bendable"
    UNBENDABLE = "unbendable"


@dataclass(frozen=True)
class SeveriTriple:
    g: int
    d: int
    l: int

    def __post_init__(self):
        if self.g < 0 or self.l < 0 or self.d < 1:
            raise ValueError(f"invalid triple {tuple(self)}: need g >= 0, d >= 1, l >= 0")

    def __iter__(self):
        return iter((self.g, self.d, self.l))


@dataclass(frozen=True)
class Classification:
    kind: Kind
    strongly_bendable: bool
    nonempty: bool

    @property
    def label(self) -> str:
        return "strongly bendable" if self.strongly_bendable else self.kind.value


class Dimensions(NamedTuple):
    dim_W: int
    dim_W_tilde: int
    dim_P: int


@dataclass(frozen=True)
class HSValue:
    value: Fraction
    classification: Classification
    hurwitz_input: TupleCount
    warnings: Tuple[str, ...] = field(default=())

    @property
    def integral(self) -> bool:
        return self.value.denominator == 1


def _triple(t) -> SeveriTriple:
    return t if isinstance(t, SeveriTriple) else SeveriTriple(*t)


def _c2(n: int) -> int:
    return n * (n - 1) // 2 if n >= 2 else 0


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero for k < 0 and for k > n >= 0.

    Negative ``n`` uses the generalized n(n-1)...(n-k+1)/k!.
    """
    if k < 0:
        return 0
    if n >= 0 and k > n:
        return 0
    num = 1
    for i in range(k):
        num *= n - i
    return num // factorial(k)


def is_nonempty(t) -> bool:
    g, d, l = _triple(t)
    return g <= _c2(d + l - 1) - _c2(l)


def node_count(t) -> int:
    """Number of ordinary nodes away from p; negative when the variety is empty."""
    g, d, l = _triple(t)
    return _c2(d - 1) + l * (d - 1) - g


def dims(t) -> Dimensions:
    """Dimensions of the Severi variety, its orbit space, and the branch target."""
    t = _triple(t)
    g, d, l = t
    dim_w = 3 * d + 2 * l + g - 1
    return Dimensions(dim_w, dim_w - 3, 2 * d + 2 * g - 2 + l + node_count(t))


def dimension_defect(t) -> int:
    """(d-2)(d+2l-3)/2, the gap dim P - dim W~."""
    _, d, l = _triple(t)
    twice = (d - 2) * (d + 2 * l - 3)
    assert twice % 2 == 0
    return twice // 2


def classify(t) -> Classification:
    t = _triple(t)
    g, d, l = t
    if d + l >= g + 2:
        kind = Kind.BENDABLE
    elif g + 2 <= d + 2 * l:
        kind = Kind.SEMI_BENDABLE
    else:
        kind = Kind.UNBENDABLE
    nonempty = is_nonempty(t)
    # d = 1 is excluded: the degree-1 projection has no branching to speak of
    strongly = (kind is Kind.BENDABLE and nonempty and d >= 2
                and dimension_defect(t) == 0)
    return Classification(kind, strongly, nonempty)


def _default_provider(g: int, d: int) -> TupleCount:
    return hurwitz_simple(g, d, method="characters")


def hs_number(t, hurwitz: HurwitzProvider = _default_provider) -> HSValue:
    """Hurwitz-Severi number of a bendable or semi-bendable triple.

    bendable:      C(d,2)^(d+l-g-2) * d^l * h_{g,1^d} / d!
    semi-bendable: d^(d+2l-g-2) * C(2g-d-l-1, g-3) * h_{g,1^d} / d!

    ``hurwitz`` maps (g, d) to a ``TupleCount``; pass a stub to test this
    layer without the Hurwitz engines.
    """
    t = _triple(t)
    g, d, l = t
    cls = classify(t)
    if not cls.nonempty:
        raise EmptyVariety(f"no curves for {tuple(t)}: g exceeds C(d+l-1,2) - C(l,2)")
    if cls.kind is Kind.UNBENDABLE:
        raise UnbendableUnsupported(f"{tuple(t)}: {OPEN_CASE_MESSAGE}")
    if d == 1:
        raise DegenerateProjection(f"{tuple(t)}: projection of degree 1 has no simple branching")

    h = hurwitz(g, d)
    warnings = []
    if cls.kind is Kind.BENDABLE:
        factor = _c2(d) ** (d + l - g - 2) * d**l
    else:
        if g < 3:
            warnings.append(f"binomial C({2 * g - d - l - 1},{g - 3}) taken as 0 for g < 3")
        factor = d ** (d + 2 * l - g - 2) * binom(2 * g - d - l - 1, g - 3)
    value = Fraction(factor * h.value, factorial(d))
    if value.denominator != 1:
        warnings.append("non-integral value (automorphism-weighted count)")
    return HSValue(value, cls, h, tuple(warnings))
