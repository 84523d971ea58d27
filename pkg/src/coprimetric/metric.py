"""The metric space of coprime tuples.

Points are finite sets of positive integers with overall gcd 1.  For
tuples m, n the distance is log_base of max(q_n(m), q_m(n)) where
q_n(m) is the largest minimal-L1 cost of representing an element of m
over the generators n.  The max-q core is exact (unbounded integers);
only the logarithm is floating point, for display.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd

from .diophantine import QValue, min_l1_general, min_l1_two
from .sequences import metallic


class NotCoprimeError(ValueError):
    """Tuple elements share a common factor greater than 1."""


@dataclass(frozen=True)
class CoprimeTuple:
    """Sorted, deduplicated positive integers with gcd 1.

    Duplicate inputs collapse: {1, 1} is the singleton {1}, which is the
    only valid one-element tuple.
    """

    elements: tuple[int, ...]

    def __contains__(self, value) -> bool:
        return value in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"


@dataclass(frozen=True)
class Base:
    """Logarithm base descriptor.

    golden / metallic(k) bases carry their defining parameter so
    theorem checks can stay in exact surd arithmetic; arbitrary real
    bases are binary64 only and excluded from exact checks.
    """

    kind: str  # "metallic" | "real"
    k: int | None
    value: float

    @staticmethod
    def golden() -> "Base":
        return Base.metallic_base(1)

    @staticmethod
    def metallic_base(k: int) -> "Base":
        return Base(kind="metallic", k=k, value=metallic(k).value)

    @staticmethod
    def real(a: float) -> "Base":
        a = float(a)
        if not a > 1.0:
            raise ValueError(f"logarithm base must exceed 1, got {a}")
        return Base(kind="real", k=None, value=a)

    @staticmethod
    def parse(text: str) -> "Base":
        """Parse 'golden', 'metallic:<k>', or 'real:<decimal>'."""
        text = text.strip().lower()
        if text == "golden":
            return Base.golden()
        if text.startswith("metallic:"):
            return Base.metallic_base(int(text.split(":", 1)[1]))
        if text.startswith("real:"):
            return Base.real(float(text.split(":", 1)[1]))
        raise ValueError(f"unknown base {text!r} (use golden, metallic:k, real:a)")

    @property
    def is_exact(self) -> bool:
        return self.kind == "metallic"

    def describe(self) -> str:
        if self.kind == "metallic":
            return "golden" if self.k == 1 else f"metallic:{self.k}"
        return f"real:{self.value:.12g}"


@dataclass(frozen=True)
class Distance:
    """Exact max-q integer plus its display-grade logarithm."""

    max_q: int
    base: Base
    log_value: float


def make_tuple(values) -> CoprimeTuple:
    """Sorted deduplicated coprime tuple from any iterable of integers.

    Raises ValueError on empty input or entries below 1, and
    NotCoprimeError when the gcd of the set exceeds 1.
    """
    elems = sorted({int(v) for v in values})
    if not elems:
        raise ValueError("a tuple needs at least one element")
    if elems[0] < 1:
        raise ValueError(f"tuple elements must be positive integers, got {elems}")
    g = gcd(*elems)
    if g != 1:
        raise NotCoprimeError(f"tuple {elems} has gcd {g}, expected 1")
    return CoprimeTuple(elements=tuple(elems))


def q_point(tup: CoprimeTuple, m: int) -> QValue:
    """Minimal L1 cost of expressing m over the tuple, with witness."""
    if len(tup) == 2:
        return min_l1_two(tup.elements[0], tup.elements[1], m)
    return min_l1_general(tup.elements, m)


def q_tuple(gens: CoprimeTuple, targets: CoprimeTuple) -> int:
    """max over elements of `targets` of q_point(gens, element)."""
    return max(q_point(gens, t).value for t in targets.elements)


def distance(a: CoprimeTuple, b: CoprimeTuple, base: Base | None = None) -> Distance:
    """Distance between two coprime tuples in the given base.

    The tuples may have different cardinalities; q is well defined for
    any coprime generating tuple (callers that care can compare
    len(a) and len(b)).
    """
    if base is None:
        base = Base.golden()
    max_q = max(q_tuple(b, a), q_tuple(a, b))
    return Distance(max_q=max_q, base=base, log_value=_log_in(max_q, base))


def rebase(d: Distance, new_base: Base) -> Distance:
    """Same exact max_q, logarithm rescaled to another base."""
    return Distance(max_q=d.max_q, base=new_base, log_value=_log_in(d.max_q, new_base))


def _log_in(max_q: int, base: Base) -> float:
    return math.log(max_q) / math.log(base.value)
