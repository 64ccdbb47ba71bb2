"""Exhaustive desk-scale verification suites over bounded universes.

A universe is every valid element whose exceptions and shift fit inside the
given bounds.  Each suite scans its whole instance space (pairs, triples,
exception sets, ...) and reports a deterministic count plus any
counterexamples; reports are byte-stable across runs and across worker
counts, so two runs of ``isomon check --all --format json`` are identical.

Suites shard their instance space over contiguous chunks of an outer index;
``--jobs`` runs chunks in worker processes and the merge is order-preserving,
which is the only synchronization point.
"""

from __future__ import annotations

import itertools
import multiprocessing
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from . import intmonoid, natmonoid
from .homs import (IDENTITY_MAP, eps_conjugation, extend_in, hom_translation,
                   hom_z2, refute_finite_generation)
from .intmonoid import (FullUnitsError, HClassKind, IntIsometry, hclass_group,
                        restriction_isometries)
from .intsets import FiniteIntSet
from .isoz import ZIsometry
from .jsonio import element_to_obj
from .natmonoid import (Bicyclic, NatIsometry, bicyclic_mul, from_bicyclic,
                        gen_a, gen_b, gen_e, is_bicyclic)
from .words import decompose, decompose_filtered, evaluate, format_word, parse

_CHUNK_FAIL_CAP = 200
_REPORT_FAIL_CAP = 50


@dataclass(frozen=True)
class UniverseSpec:
    monoid: str
    exception_bound: int
    shift_bound: int

    def __post_init__(self):
        if self.monoid not in ("nat", "int"):
            raise ValueError(f"unknown monoid {self.monoid!r}")
        if self.exception_bound < 0 or self.shift_bound < 0:
            raise ValueError("bounds must be non-negative")


NAT_DEFAULT = UniverseSpec("nat", 5, 2)
INT_DEFAULT = UniverseSpec("int", 2, 2)


def enumerate_universe(spec: UniverseSpec) -> list:
    """Every valid element within bounds, exactly once, in a fixed order."""
    out = []
    B, S = spec.exception_bound, spec.shift_bound
    if spec.monoid == "nat":
        for s in range(-S, S + 1):
            for mask in range(1 << B):
                exc = FiniteIntSet(i + 1 for i in range(B) if mask >> i & 1)
                try:
                    out.append(NatIsometry(s, exc))
                except ValueError:
                    continue
    else:
        offsets = range(-B, B + 1)
        width = 2 * B + 1
        for a in range(-S, S + 1):
            for reflect in (False, True):
                for mask in range(1 << width):
                    exc = FiniteIntSet(o for b, o in enumerate(offsets)
                                       if mask >> b & 1)
                    out.append(IntIsometry(ZIsometry(a, reflect), exc))
    return out


def count_universe(spec: UniverseSpec) -> int:
    """Closed-form cardinality of :func:`enumerate_universe`."""
    B, S = spec.exception_bound, spec.shift_bound
    if spec.monoid == "nat":
        # shifts >= 0 are unrestricted; shift -t forces 1..t into the exceptions
        return (S + 1) * 2 ** B + sum(2 ** (B - t) for t in range(1, min(S, B) + 1))
    return 2 * (2 * S + 1) * 2 ** (2 * B + 1)


@lru_cache(maxsize=None)
def _universe(spec: UniverseSpec) -> tuple:
    return tuple(enumerate_universe(spec))


@dataclass
class SuiteReport:
    suite: str
    spec: UniverseSpec
    instances: int
    failures: list
    failure_count: int
    counters: dict
    wall_time: float

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def to_obj(self) -> dict:
        # wall_time stays out: serialized reports must be byte-stable
        return {
            "suite": self.suite,
            "monoid": self.spec.monoid,
            "exception_bound": self.spec.exception_bound,
            "shift_bound": self.spec.shift_bound,
            "instances": self.instances,
            "failure_count": self.failure_count,
            "failures": self.failures,
            "counters": {k: self.counters[k] for k in sorted(self.counters)},
            "pass": self.passed,
        }


class _FailLog:
    """Ordered failure collector with a per-chunk storage cap."""

    def __init__(self):
        self.items: list = []
        self.total = 0

    def add(self, obj: dict):
        self.total += 1
        if len(self.items) < _CHUNK_FAIL_CAP:
            self.items.append(obj)


# ---------------------------------------------------------------------------
# Vectorized element encoding for the associativity scan.
#
# Elements are packed into integers: the exception set as a bitmask over a
# window wide enough for every product of up to three universe elements, the
# shift (and reflection flag) above it.  Composition then becomes a handful
# of elementwise numpy operations, which makes the full triple scan cheap.


def _shift_bits(m, k):
    # bit index += k, elementwise; k may be negative
    kk = np.asarray(k)
    left = np.left_shift(m, np.maximum(kk, 0))
    right = np.right_shift(m, np.maximum(-kk, 0))
    return np.where(kk >= 0, left, right)


class _NatVec:
    def __init__(self, spec: UniverseSpec):
        self.width = spec.exception_bound + 2 * spec.shift_bound
        self.koff = 3 * spec.shift_bound + 1
        elems = _universe(spec)
        self.arrays = (
            np.array([e.shift for e in elems], dtype=np.int64),
            np.array([self._mask(e) for e in elems], dtype=np.int64),
        )

    @staticmethod
    def _mask(e: NatIsometry) -> int:
        return sum(1 << (x - 1) for x in e.exceptions)

    def compose(self, t1, t2):
        s1, m1 = t1
        s2, m2 = t2
        # preimages below 1 fall off the low end of the mask, as they should
        return s1 + s2, m1 | _shift_bits(m2, -s1)

    def key(self, t):
        s, m = t
        if np.any(m >> self.width):
            raise AssertionError("exception mask escaped its window")
        return (s + self.koff) << self.width | m

    def obj_key(self, e: NatIsometry) -> int:
        return (e.shift + self.koff) << self.width | self._mask(e)

    def decode(self, key: int) -> NatIsometry:
        m = key & ((1 << self.width) - 1)
        s = (key >> self.width) - self.koff
        return NatIsometry(s, FiniteIntSet(b + 1 for b in range(self.width)
                                           if m >> b & 1))


class _IntVec:
    MAX_WIDTH = 21

    def __init__(self, spec: UniverseSpec):
        self.radius = spec.exception_bound + 2 * spec.shift_bound
        self.width = 2 * self.radius + 1
        self.koff = 3 * spec.shift_bound + 1
        idx = np.arange(1 << self.width, dtype=np.int64)
        rev = np.zeros_like(idx)
        for b in range(self.width):
            rev |= ((idx >> b) & 1) << (self.width - 1 - b)
        self.rev = rev
        elems = _universe(spec)
        self.arrays = (
            np.array([e.unit.a for e in elems], dtype=np.int64),
            np.array([int(e.unit.reflect) for e in elems], dtype=np.int64),
            np.array([self._mask(e) for e in elems], dtype=np.int64),
        )

    def _mask(self, e: IntIsometry) -> int:
        return sum(1 << (x + self.radius) for x in e.exceptions)

    def compose(self, t1, t2):
        a1, r1, m1 = t1
        a2, r2, m2 = t2
        a = np.where(r2 == 1, a2 - a1, a1 + a2)
        r = r1 ^ r2
        pre = np.where(r1 == 1,
                       _shift_bits(np.take(self.rev, m2), a1),
                       _shift_bits(m2, -a1))
        return a, r, m1 | pre

    def key(self, t):
        a, r, m = t
        if np.any(m >> self.width):
            raise AssertionError("exception mask escaped its window")
        return ((a + self.koff) << (self.width + 1)) | (r << self.width) | m

    def obj_key(self, e: IntIsometry) -> int:
        a, r = e.unit.a, int(e.unit.reflect)
        return ((a + self.koff) << (self.width + 1)) | (r << self.width) | self._mask(e)

    def decode(self, key: int) -> IntIsometry:
        m = key & ((1 << self.width) - 1)
        r = (key >> self.width) & 1
        a = (key >> (self.width + 1)) - self.koff
        exc = FiniteIntSet(b - self.radius for b in range(self.width) if m >> b & 1)
        return IntIsometry(ZIsometry(int(a), bool(r)), exc)


@lru_cache(maxsize=None)
def _vec(spec: UniverseSpec):
    if spec.monoid == "nat":
        if spec.exception_bound + 2 * spec.shift_bound > 60:
            return None
        return _NatVec(spec)
    if 2 * (spec.exception_bound + 2 * spec.shift_bound) + 1 > _IntVec.MAX_WIDTH:
        return None
    return _IntVec(spec)


# ---------------------------------------------------------------------------
# Suite chunk functions.  Each scans outer indices [lo, hi) of its instance
# space and returns (instances, failures, failure_total, counters).


def _assoc_chunk(spec, lo, hi):
    vec = _vec(spec)
    if vec is None:
        return _assoc_chunk_slow(spec, lo, hi)
    elems = _universe(spec)
    n = len(elems)
    cols = tuple(x[None, :] for x in vec.arrays)
    rows = tuple(x[:, None] for x in vec.arrays)
    pairwise = vec.compose(rows, cols)
    pair_keys = vec.key(pairwise)
    log = _FailLog()
    pair_checks = 0
    for i in range(lo, hi):
        # cross-check the packed composition against the real one on row i
        obj_row = np.fromiter((vec.obj_key(elems[i] * y) for y in elems),
                              dtype=np.int64, count=n)
        for j in np.nonzero(obj_row != pair_keys[i])[0]:
            log.add({"inputs": [element_to_obj(elems[i]), element_to_obj(elems[j])],
                     "check": "packed product mismatch"})
        pair_checks += n
    block = max(1, (1 << 21) // (n * n))
    for b0 in range(lo, hi, block):
        b1 = min(hi, b0 + block)
        left = vec.key(vec.compose(
            tuple(x[b0:b1, :, None] for x in pairwise),
            tuple(x[None, None, :] for x in vec.arrays)))
        right = vec.key(vec.compose(
            tuple(x[b0:b1][:, None, None] for x in vec.arrays),
            tuple(x[None, :, :] for x in pairwise)))
        for i, j, k in np.argwhere(left != right):
            log.add({"inputs": [element_to_obj(elems[b0 + i]),
                                element_to_obj(elems[j]), element_to_obj(elems[k])],
                     "left": element_to_obj(vec.decode(int(left[i, j, k]))),
                     "right": element_to_obj(vec.decode(int(right[i, j, k])))})
    instances = (hi - lo) * n * n
    return instances, log.items, log.total, {"pair_checks": pair_checks}


def _assoc_chunk_slow(spec, lo, hi):
    # object-level fallback for bounds too wide for the packed encoding
    elems = _universe(spec)
    n = len(elems)
    inner = [[x * y for y in elems] for x in elems]
    log = _FailLog()
    for i in range(lo, hi):
        x = elems[i]
        row = inner[i]
        for j in range(n):
            p = row[j]
            for k in range(n):
                if p * elems[k] != x * inner[j][k]:
                    log.add({"inputs": [element_to_obj(x), element_to_obj(elems[j]),
                                        element_to_obj(elems[k])]})
    return (hi - lo) * n * n, log.items, log.total, {"pair_checks": 0}


def _inverse_chunk(spec, lo, hi):
    elems = _universe(spec)
    log = _FailLog()
    for i in range(lo, hi):
        g = elems[i]
        gi = g.inverse()
        if g * gi * g != g or gi * g * gi != gi:
            log.add({"input": element_to_obj(g),
                     "inverse": element_to_obj(gi)})
    return hi - lo, log.items, log.total, {}


def _lemma21_chunk(spec, lo, hi):
    elems = _universe(spec)
    log = _FailLog()
    n = 0
    for i in range(lo, hi):
        x = elems[i]
        dx = x.deficiency
        for y in elems:
            d = (x * y).deficiency
            if not max(dx, y.deficiency) <= d <= dx + y.deficiency:
                log.add({"inputs": [element_to_obj(x), element_to_obj(y)],
                         "deficiencies": [dx, y.deficiency], "got": d})
            n += 1
    return n, log.items, log.total, {}


def _prop22_chunk(spec, lo, hi):
    elems = _universe(spec)
    ident = intmonoid.identity()
    log = _FailLog()
    n = 0
    for i in range(lo, hi):
        x = elems[i]
        for y in elems:
            if x * y == ident and (x.deficiency or y.deficiency):
                log.add({"inputs": [element_to_obj(x), element_to_obj(y)]})
            n += 1
    return n, log.items, log.total, {}


def _lemma29_chunk(spec, lo, hi):
    B = spec.exception_bound
    offsets = list(range(-B, B + 1))
    log = _FailLog()
    counters = {"Trivial": 0, "Z2": 0, "FullUnits": 0}
    for mask in range(lo, hi):
        exc = FiniteIntSet(o for b, o in enumerate(offsets) if mask >> b & 1)
        kind = hclass_group(exc)
        counters[kind.value] += 1
        if not exc:
            ok = kind is HClassKind.FULL_UNITS
            try:
                restriction_isometries(exc)
                ok = False
            except FullUnitsError:
                pass
            if not ok:
                log.add({"exceptions": [], "got": kind.value})
            continue
        impl = restriction_isometries(exc)
        bound = 2 * max(abs(exc.min()), abs(exc.max())) + 2
        points = set(exc)
        brute = [IntIsometry(u, exc)
                 for a in range(-bound, bound + 1)
                 for u in (ZIsometry(a), ZIsometry(a, True))
                 if {u.apply(x) for x in points} == points]
        sized = {HClassKind.FULL_UNITS: None, HClassKind.Z2: 2,
                 HClassKind.TRIVIAL: 1}[kind]
        if set(impl) != set(brute) or len(impl) != sized:
            log.add({"exceptions": list(exc),
                     "impl": [element_to_obj(e) for e in impl],
                     "brute": [element_to_obj(e) for e in sorted(
                         brute, key=lambda e: (e.unit.a, e.unit.reflect))],
                     "hclass": kind.value})
    return hi - lo, log.items, log.total, counters


def _lemma33_chunk(spec, lo, hi):
    elems = _universe(spec)
    log = _FailLog()
    for i in range(lo, hi):
        m = elems[i].markers()
        if m.nr_high - m.nr_low != m.nd_high - m.nd_low:
            log.add({"input": element_to_obj(elems[i]), "markers": list(m)})
    return hi - lo, log.items, log.total, {}


def _lemma34_chunk(spec, lo, hi):
    elems = _universe(spec)
    log = _FailLog()
    n = 0
    for i in range(lo, hi):
        g = elems[i]
        if not is_bicyclic(g):
            continue
        for d in elems:
            if (g * d).gap() > d.gap():
                log.add({"inputs": [element_to_obj(g), element_to_obj(d)],
                         "got": (g * d).gap(), "bound": d.gap()})
            n += 1
    return n, log.items, log.total, {}


def _lemma35_chunk(spec, lo, hi):
    elems = _universe(spec)
    tail_defined = [g for g in elems if is_bicyclic(g)]
    log = _FailLog()
    n = 0
    for i in range(lo, hi):
        d = elems[i]
        for g in tail_defined:
            if (d * g).gap() > d.gap():
                log.add({"inputs": [element_to_obj(d), element_to_obj(g)],
                         "got": (d * g).gap(), "bound": d.gap()})
            n += 1
    return n, log.items, log.total, {}


def _lemma36_chunk(spec, lo, hi):
    elems = _universe(spec)
    log = _FailLog()
    counters = {"case1": 0, "case2": 0, "case3": 0, "case4": 0}
    n = 0
    for i in range(lo, hi):
        g = elems[i]
        gg = g.gap()
        mg = g.markers()
        for d in elems:
            p = g * d
            dg, pg = d.gap(), p.gap()
            md = d.markers()
            proper = not (is_bicyclic(g) or is_bicyclic(d) or is_bicyclic(p))
            for k in range(2, 6):
                if gg > k or dg > k:
                    continue
                n += 1
                if pg > k:
                    log.add({"inputs": [element_to_obj(g), element_to_obj(d)],
                             "k": k, "got": pg})
                if proper:
                    low = mg.nr_low <= md.nd_low
                    high = mg.nr_high <= md.nd_high
                    case = {(True, True): "case1", (False, True): "case2",
                            (True, False): "case3", (False, False): "case4"}[(low, high)]
                    counters[case] += 1
    return n, log.items, log.total, counters


def _filtration_chunk(spec, lo, hi):
    elems = _universe(spec)
    top = spec.exception_bound + spec.shift_bound + 2
    log = _FailLog()
    for i in range(lo, hi):
        g = elems[i]
        chain = all(not g.in_filtration(k) or g.in_filtration(k + 1)
                    for k in range(top))
        base = g.in_filtration(0) == g.in_filtration(1) == is_bicyclic(g)
        if not (chain and base):
            log.add({"input": element_to_obj(g), "gap": g.gap()})
    return hi - lo, log.items, log.total, {}


def _sigma_chunk(spec, lo, hi):
    elems = _universe(spec)
    log = _FailLog()
    n = 0
    if spec.monoid == "nat":
        for i in range(lo, hi):
            x = elems[i]
            for y in elems:
                if natmonoid.sigma(x * y) != natmonoid.sigma(x) + natmonoid.sigma(y):
                    log.add({"inputs": [element_to_obj(x), element_to_obj(y)]})
                n += 1
    else:
        for i in range(lo, hi):
            x = elems[i]
            for y in elems:
                if intmonoid.sigma(x * y) != intmonoid.sigma(x) * intmonoid.sigma(y):
                    log.add({"inputs": [element_to_obj(x), element_to_obj(y)]})
                n += 1
    return n, log.items, log.total, {}


def _roundtrip_chunk(spec, lo, hi):
    elems = _universe(spec)
    log = _FailLog()
    for i in range(lo, hi):
        g = elems[i]
        w = decompose(g)
        if evaluate(w) != g:
            log.add({"input": element_to_obj(g), "word": format_word(w),
                     "evaluates_to": element_to_obj(evaluate(w))})
        elif parse(format_word(w)) != w:
            log.add({"input": element_to_obj(g), "word": format_word(w),
                     "check": "parse/print round-trip"})
    return hi - lo, log.items, log.total, {}


def _filtered_chunk(spec, lo, hi):
    elems = _universe(spec)
    log = _FailLog()
    n = 0
    for i in range(lo, hi):
        g = elems[i]
        for k in (2, 3, 4):
            if g.gap() > k:
                continue
            n += 1
            w = decompose_filtered(g, k)
            alphabet_ok = all(t.kind in ("a", "b") or t.index == k
                              for t in w.tokens)
            if evaluate(w) != g or not alphabet_ok:
                log.add({"input": element_to_obj(g), "k": k,
                         "word": format_word(w),
                         "evaluates_to": element_to_obj(evaluate(w))})
    return n, log.items, log.total, {}


_CONJUGATION_PAIRS = [(k, l) for k in range(3, 13) for l in range(2, k)]


def _conjugation_chunk(spec, lo, hi):
    log = _FailLog()
    for idx in range(lo, hi):
        k, l = _CONJUGATION_PAIRS[idx]
        got = eps_conjugation(k, l)
        if got != gen_e(l):
            log.add({"k": k, "l": l, "got": element_to_obj(got)})
    return hi - lo, log.items, log.total, {}


_EXTENSION_POINTS = (0, -1, -2)


def _extension_chunk(spec, lo, hi):
    elems = _universe(spec)
    ext = {(j, n): extend_in(g, n)
           for j, g in enumerate(elems) for n in _EXTENSION_POINTS}
    log = _FailLog()
    n_checked = 0
    if lo == 0:
        n_checked += 1
        if extend_in(natmonoid.identity(), 0) != IDENTITY_MAP:
            log.add({"check": "extension of the identity at 0"})
    for i in range(lo, hi):
        g = elems[i]
        for n in _EXTENSION_POINTS:
            n_checked += 1
            if not ext[(i, n)].is_monotone():
                log.add({"input": element_to_obj(g), "n": n,
                         "check": "monotone"})
        for j, d in enumerate(elems):
            p = g * d
            for n in _EXTENSION_POINTS:
                n_checked += 1
                if extend_in(p, n) != ext[(i, n)] * ext[(j, n)]:
                    log.add({"inputs": [element_to_obj(g), element_to_obj(d)],
                             "n": n})
    return n_checked, log.items, log.total, {}


def _cor212_chunk(spec, lo, hi):
    elems = _universe(spec)
    log = _FailLog()
    counters = {"z2_identities": 0, "z2_reflections": 0}
    n = 0
    if lo == 0:
        n += 1
        if hom_translation(gen_a()).unit.order() is not None:
            log.add({"check": "translation image must have infinite order"})
    for i in range(lo, hi):
        g = elems[i]
        ht_g, hz_g = hom_translation(g), hom_z2(g)
        counters["z2_reflections" if hz_g.unit.reflect else "z2_identities"] += 1
        for d in elems:
            p = g * d
            n += 2
            if hom_translation(p) != ht_g * hom_translation(d):
                log.add({"inputs": [element_to_obj(g), element_to_obj(d)],
                         "hom": "translation"})
            if hom_z2(p) != hz_g * hom_z2(d):
                log.add({"inputs": [element_to_obj(g), element_to_obj(d)],
                         "hom": "z2"})
    return n, log.items, log.total, counters


def _cor212_finalize(spec, counters):
    if counters.get("z2_identities") and counters.get("z2_reflections"):
        return []
    return [{"check": "two-element image not realized over this universe",
             "counters": dict(sorted(counters.items()))}]


_BICYCLIC_BOUND = 7  # exponents 0..6


def _bicyclic_chunk(spec, lo, hi):
    log = _FailLog()
    base = _BICYCLIC_BOUND
    for idx in range(lo, hi):
        rest, n = divmod(idx, base)
        rest, m = divmod(rest, base)
        k, l = divmod(rest, base)
        u, v = Bicyclic(k, l), Bicyclic(m, n)
        got = from_bicyclic(bicyclic_mul(u, v))
        expect = from_bicyclic(u) * from_bicyclic(v)
        if got != expect:
            log.add({"inputs": [[k, l], [m, n]],
                     "normal_form": element_to_obj(got),
                     "composed": element_to_obj(expect)})
    return hi - lo, log.items, log.total, {}


_REFUTE_GENS = ("a", "b", "e2", "e3")
_REFUTE_DEPTH = 4


def _refute_chunk(spec, lo, hi):
    gens = [gen_a(), gen_b(), gen_e(2), gen_e(3)]
    log = _FailLog()
    w = refute_finite_generation(gens)
    expected = NatIsometry(0, FiniteIntSet([2, 3, 4]))
    n = 1
    if (w.element != expected or w.certificate != 4
            or w.element.gap() != w.certificate
            or w.certificate != w.bound_k + 1):
        log.add({"witness": element_to_obj(w.element),
                 "bound_k": w.bound_k, "certificate": w.certificate})
    products = 0
    for length in range(1, _REFUTE_DEPTH + 1):
        for combo in itertools.product(gens, repeat=length):
            prod = combo[0]
            for g in combo[1:]:
                prod = prod * g
            products += 1
            n += 1
            if prod == w.element:
                log.add({"factors": [element_to_obj(g) for g in combo]})
    return n, log.items, log.total, {"products_checked": products}


# ---------------------------------------------------------------------------
# Registry and the runner.


@dataclass(frozen=True)
class _Suite:
    monoids: tuple[str, ...]
    defaults: tuple[UniverseSpec, ...]
    size: Callable[[UniverseSpec], int]
    chunk: Callable
    finalize: Callable | None = None


def _universe_size(spec):
    return len(_universe(spec))


def _subset_count(spec):
    return 1 << (2 * spec.exception_bound + 1)


SUITES: dict[str, _Suite] = {
    "assoc": _Suite(("nat", "int"), (NAT_DEFAULT, INT_DEFAULT),
                    _universe_size, _assoc_chunk),
    "inverse-axioms": _Suite(("nat", "int"), (NAT_DEFAULT, INT_DEFAULT),
                             _universe_size, _inverse_chunk),
    "lemma-2.1": _Suite(("int",), (INT_DEFAULT,), _universe_size, _lemma21_chunk),
    "prop-2.2": _Suite(("int",), (INT_DEFAULT,), _universe_size, _prop22_chunk),
    "lemma-2.9-oracle": _Suite(("int",), (UniverseSpec("int", 4, 2),),
                               _subset_count, _lemma29_chunk),
    "lemma-3.3": _Suite(("nat",), (NAT_DEFAULT,), _universe_size, _lemma33_chunk),
    "lemma-3.4": _Suite(("nat",), (NAT_DEFAULT,), _universe_size, _lemma34_chunk),
    "lemma-3.5": _Suite(("nat",), (NAT_DEFAULT,), _universe_size, _lemma35_chunk),
    "lemma-3.6": _Suite(("nat",), (NAT_DEFAULT,), _universe_size, _lemma36_chunk),
    "filtration": _Suite(("nat",), (NAT_DEFAULT,), _universe_size,
                         _filtration_chunk),
    "sigma-hom": _Suite(("nat", "int"), (NAT_DEFAULT, INT_DEFAULT),
                        _universe_size, _sigma_chunk),
    "decompose-roundtrip": _Suite(("nat",), (NAT_DEFAULT,), _universe_size,
                                  _roundtrip_chunk),
    "decompose-filtered": _Suite(("nat",), (NAT_DEFAULT,), _universe_size,
                                 _filtered_chunk),
    "remark-3.9": _Suite(("nat",), (NAT_DEFAULT,),
                         lambda spec: len(_CONJUGATION_PAIRS), _conjugation_chunk),
    "example-2.13": _Suite(("nat",), (NAT_DEFAULT,), _universe_size,
                           _extension_chunk),
    "cor-2.12": _Suite(("nat",), (NAT_DEFAULT,), _universe_size,
                       _cor212_chunk, _cor212_finalize),
    "bicyclic-oracle": _Suite(("nat",), (NAT_DEFAULT,),
                              lambda spec: _BICYCLIC_BOUND ** 4, _bicyclic_chunk),
    "refute-fg": _Suite(("nat",), (NAT_DEFAULT,), lambda spec: 1, _refute_chunk),
}


def suite_names() -> list[str]:
    return list(SUITES)


def default_specs(name: str) -> tuple[UniverseSpec, ...]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name].defaults


def _chunk_entry(args):
    name, spec, lo, hi = args
    return SUITES[name].chunk(spec, lo, hi)


def run_suite(name: str, spec: UniverseSpec, jobs: int = 1) -> SuiteReport:
    """Run one named suite over the given universe; deterministic for any jobs."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    suite = SUITES[name]
    if spec.monoid not in suite.monoids:
        raise ValueError(f"suite {name!r} does not apply to the {spec.monoid} monoid")
    start = time.perf_counter()
    total = suite.size(spec)
    parts_count = max(1, min(jobs, total))
    bounds = [(total * c // parts_count, total * (c + 1) // parts_count)
              for c in range(parts_count)]
    if parts_count == 1:
        parts = [suite.chunk(spec, 0, total)]
    else:
        with multiprocessing.Pool(parts_count) as pool:
            parts = pool.map(_chunk_entry,
                             [(name, spec, lo, hi) for lo, hi in bounds])
    instances = 0
    failures: list = []
    failure_total = 0
    counters: dict = {}
    for inst, fails, total_fails, cnts in parts:
        instances += inst
        failures.extend(fails)
        failure_total += total_fails
        for key, val in cnts.items():
            counters[key] = counters.get(key, 0) + val
    if suite.finalize is not None:
        extra = suite.finalize(spec, counters)
        failures.extend(extra)
        failure_total += len(extra)
    return SuiteReport(name, spec, instances, failures[:_REPORT_FAIL_CAP],
                       failure_total, counters, time.perf_counter() - start)


def run_selected(names: list[str], bound: int | None = None,
                 shift_bound: int | None = None, jobs: int = 1) -> list[SuiteReport]:
    """Run suites over their default universes, with optional bound overrides."""
    reports = []
    for name in names:
        for spec in default_specs(name):
            if bound is not None:
                spec = UniverseSpec(spec.monoid, bound, spec.shift_bound)
            if shift_bound is not None:
                spec = UniverseSpec(spec.monoid, spec.exception_bound, shift_bound)
            reports.append(run_suite(name, spec, jobs))
    return reports
