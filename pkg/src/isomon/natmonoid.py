"""Cofinite partial isometries of the positive integers.

Every such map is a partial shift: x -> x + shift on a cofinite domain,
so an element is a shift plus the finite set of positive integers missing
from the domain.  Composition reads left to right, ``x (fg) = ((x)f)g``.

The monoid carries four derived quantities per element (its markers): the
least point of the domain, the least point from which the domain is a
full tail, and the images of both.  The difference of the first two (the
gap) drives the tail filtration and the word decompositions in
:mod:`isomon.words`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .intsets import FiniteIntSet


class Markers(NamedTuple):
    nd_low: int    # min of the domain
    nd_high: int   # least point from which the domain is a full tail
    nr_low: int    # image of nd_low
    nr_high: int   # image of nd_high


class Bicyclic(NamedTuple):
    """Normal form q^k p^l of the bicyclic monoid <p, q | pq = 1>."""

    k: int
    l: int


@dataclass(frozen=True)
class NatIsometry:
    shift: int = 0
    exceptions: FiniteIntSet = FiniteIntSet()

    def __post_init__(self):
        if not isinstance(self.exceptions, FiniteIntSet):
            object.__setattr__(self, "exceptions", FiniteIntSet(self.exceptions))
        if self.exceptions and self.exceptions.min() < 1:
            raise ValueError(f"exceptions must be positive, got {self.exceptions!r}")
        if self.min_dom + self.shift < 1:
            raise ValueError(
                f"shift {self.shift} maps the domain minimum {self.min_dom} below 1"
            )

    @property
    def min_dom(self) -> int:
        m = 1
        while m in self.exceptions:
            m += 1
        return m

    def apply(self, x: int) -> int | None:
        if x < 1 or x in self.exceptions:
            return None
        return x + self.shift

    def compose(self, other: "NatIsometry") -> "NatIsometry":
        exc = set(self.exceptions)
        exc.update(y - self.shift for y in other.exceptions if y - self.shift >= 1)
        return NatIsometry(self.shift + other.shift, FiniteIntSet(exc))

    __mul__ = compose

    def inverse(self) -> "NatIsometry":
        exc = set(range(1, self.shift + 1))
        exc.update(e + self.shift for e in self.exceptions if e + self.shift >= 1)
        return NatIsometry(-self.shift, FiniteIntSet(exc))

    def markers(self) -> Markers:
        lo = self.min_dom
        hi = lo if not self.exceptions else max(lo, self.exceptions.max() + 1)
        return Markers(lo, hi, lo + self.shift, hi + self.shift)

    def gap(self) -> int:
        m = self.markers()
        return m.nd_high - m.nd_low

    def in_filtration(self, k: int) -> bool:
        return self.gap() <= k

    def is_idempotent(self) -> bool:
        return self.shift == 0


def identity() -> NatIsometry:
    return NatIsometry(0)


def gen_a() -> NatIsometry:
    """The total shift x -> x + 1 (word token ``a``)."""
    return NatIsometry(1)


def gen_b() -> NatIsometry:
    """The down shift x -> x - 1 defined off {1} (word token ``b``)."""
    return NatIsometry(-1, FiniteIntSet([1]))


def gen_e(k: int) -> NatIsometry:
    """Identity map with a single hole at k >= 2 (word token ``e[k]``)."""
    if k < 2:
        raise ValueError(f"hole index must be >= 2, got {k}")
    return NatIsometry(0, FiniteIntSet([k]))


def natural_le(x: NatIsometry, y: NatIsometry) -> bool:
    """Natural partial order: x is a restriction of y."""
    return x.shift == y.shift and y.exceptions.issubset(x.exceptions)


def sigma(x: NatIsometry) -> int:
    """Quotient map of the least group congruence, onto the integers."""
    return x.shift


def f_cover(x: NatIsometry) -> NatIsometry:
    """Maximum element of x's congruence class: same shift, fewest exceptions."""
    if x.shift >= 0:
        return NatIsometry(x.shift)
    return NatIsometry(x.shift, FiniteIntSet(range(1, -x.shift + 1)))


def is_bicyclic(x: NatIsometry) -> bool:
    """True when the domain is a full tail, i.e. the exceptions are 1..m."""
    return x.exceptions == FiniteIntSet(range(1, len(x.exceptions) + 1))


def to_bicyclic(x: NatIsometry) -> Bicyclic | None:
    if not is_bicyclic(x):
        return None
    m = len(x.exceptions)
    return Bicyclic(m, m + x.shift)


def from_bicyclic(nf: Bicyclic) -> NatIsometry:
    if nf.k < 0 or nf.l < 0:
        raise ValueError(f"normal form needs non-negative exponents, got {nf}")
    return NatIsometry(nf.l - nf.k, FiniteIntSet(range(1, nf.k + 1)))


def bicyclic_mul(u: Bicyclic, v: Bicyclic) -> Bicyclic:
    t = min(u.l, v.k)
    return Bicyclic(u.k + v.k - t, u.l + v.l - t)
