"""Unit-circle hyperfield with exact rational angles.

Elements are the circle points exp(2*pi*i*t) for t a Fraction in [0, 1),
plus a zero element.  All arithmetic is on the turn parameter t, so every
computation is exact; no floats anywhere.

Hyperaddition follows the positive-combination rule: the sum of two
circle points is the set of phases of a*x + b*y over a, b > 0.  That
gives {x} when y = x, the triple {0, x, -x} when y = -x, and otherwise
the OPEN shorter arc strictly between x and y, endpoints excluded
(a, b > 0 never land on either ray).  Sums with zero are singletons.

Because x (+) y can be an infinite arc, the type is exposed as a
membership oracle: member(z, x, y) decides z in x (+) y exactly, and
finite_sum returns the sum as a set when it is finite (None otherwise).
For associativity checks, ArcSet implements exact subsets of the circle
that are finite unions of points and open arcs, closed under summing
with a single point.
"""

from __future__ import annotations

import random

from dataclasses import dataclass
from fractions import Fraction

HALF = Fraction(1, 2)
ONE = Fraction(1)


class PhaseError(ValueError):
    """Invalid phase element or operation."""


@dataclass(frozen=True)
class PhaseElement:
    """Circle point by turn in [0, 1); turns is None for the zero element."""

    turns: Fraction | None

    @property
    def is_zero(self) -> bool:
        return self.turns is None

    def __str__(self):
        return "0" if self.is_zero else f"e({self.turns})"

    def __lt__(self, other):  # zero sorts first
        if self.is_zero:
            return not other.is_zero
        if other.is_zero:
            return False
        return self.turns < other.turns


PHASE_ZERO = PhaseElement(None)
PHASE_ONE = PhaseElement(Fraction(0))


def phase(turns) -> PhaseElement:
    t = Fraction(turns) % 1
    return PhaseElement(t)


def parse_phase(text: str) -> PhaseElement:
    s = text.strip()
    if s == "0":
        return PHASE_ZERO
    if s.startswith("e(") and s.endswith(")"):
        try:
            return phase(Fraction(s[2:-1]))
        except (ValueError, ZeroDivisionError):
            raise PhaseError(f"bad phase {text!r}") from None
    raise PhaseError(f"bad phase {text!r}; expected 0 or e(p/q)")


# -- subsets of circle + zero: points and open arcs -----------------


@dataclass(frozen=True)
class ArcSet:
    """Normalized: full circle flag, else isolated points plus maximal
    open arcs (start, width) that overlap nowhere; zero tracked apart."""

    zero: bool
    full: bool
    points: frozenset
    arcs: tuple

    def member(self, x: PhaseElement) -> bool:
        if x.is_zero:
            return self.zero
        if self.full:
            return True
        t = x.turns
        if t in self.points:
            return True
        return any(0 < (t - s) % 1 < w for s, w in self.arcs)

    def is_finite(self) -> bool:
        return not self.full and not self.arcs

    def finite_elements(self) -> frozenset:
        if not self.is_finite():
            raise PhaseError("arc set is infinite")
        out = {PhaseElement(p) for p in self.points}
        if self.zero:
            out.add(PHASE_ZERO)
        return frozenset(out)


class _Builder:
    def __init__(self):
        self.zero = False
        self.points = set()
        self.arcs = []

    def add_zero(self):
        self.zero = True

    def add_point(self, t: Fraction):
        self.points.add(t % 1)

    def add_arc(self, start: Fraction, width: Fraction):
        if width <= 0:
            raise PhaseError("arc width must be positive")
        self.arcs.append((start % 1, width))

    def merge(self, other: ArcSet):
        self.zero = self.zero or other.zero
        if other.full:
            self.arcs.append((Fraction(0), ONE))
            self.points.add(Fraction(0))
        self.points |= other.points
        self.arcs.extend(other.arcs)

    def build(self) -> ArcSet:
        pts = set(self.points)
        segs = []  # open intervals (lo, hi) inside [0, 1]
        for s, w in self.arcs:
            w = min(w, ONE)
            e = s + w
            if e > 1:
                # wraps: split, remembering that 0 is interior
                segs.append((s, ONE))
                if e - 1 > 0:
                    segs.append((Fraction(0), e - 1))
                pts.add(Fraction(0))
            else:
                segs.append((s, e))
        segs.sort()
        merged = []
        for lo, hi in segs:
            if merged and lo <= merged[-1][1]:
                if lo < merged[-1][1] or lo in pts:
                    pts.discard(lo)
                    merged[-1][1] = max(merged[-1][1], hi)
                    continue
            merged.append([lo, hi])
        pts = {p for p in pts
               if not any(lo < p < hi for lo, hi in merged)}
        # stitch across the 0/1 junction when the point 0 is covered
        if (merged and merged[0][0] == 0 and merged[-1][1] == ONE
                and Fraction(0) in pts):
            pts.discard(Fraction(0))
            if len(merged) == 1:
                return ArcSet(self.zero, True, frozenset(), ())
            first = merged.pop(0)
            merged[-1][1] = ONE + first[1]
        arcs = tuple(sorted((lo % 1, hi - lo) for lo, hi in merged))
        return ArcSet(self.zero, False, frozenset(pts), arcs)


def arcset_of(elements) -> ArcSet:
    b = _Builder()
    for e in elements:
        if e.is_zero:
            b.add_zero()
        else:
            b.add_point(e.turns)
    return b.build()


class PhaseHyperfield:
    """Membership oracle for the circle hyperfield."""

    zero = PHASE_ZERO
    one = PHASE_ONE

    def element(self, turns) -> PhaseElement:
        return phase(turns)

    def neg(self, x: PhaseElement) -> PhaseElement:
        if x.is_zero:
            return x
        return PhaseElement((x.turns + HALF) % 1)

    def mul(self, x: PhaseElement, y: PhaseElement) -> PhaseElement:
        if x.is_zero or y.is_zero:
            return PHASE_ZERO
        return PhaseElement((x.turns + y.turns) % 1)

    def inv(self, x: PhaseElement) -> PhaseElement:
        if x.is_zero:
            raise PhaseError("0 has no multiplicative inverse")
        return PhaseElement((-x.turns) % 1)

    def member(self, z: PhaseElement, x: PhaseElement, y: PhaseElement) -> bool:
        """Decide z in x (+) y."""
        if x.is_zero:
            return z == y
        if y.is_zero:
            return z == x
        if x == y:
            return z == x
        if y == self.neg(x):
            return z.is_zero or z == x or z == y
        if z.is_zero:
            return False
        d = (y.turns - x.turns) % 1
        if d < HALF:
            start, width = x.turns, d
        else:
            start, width = y.turns, 1 - d
        return 0 < (z.turns - start) % 1 < width

    def finite_sum(self, x: PhaseElement, y: PhaseElement):
        """The sum as a frozenset when finite, else None (open arc)."""
        if x.is_zero:
            return frozenset({y})
        if y.is_zero:
            return frozenset({x})
        if x == y:
            return frozenset({x})
        if y == self.neg(x):
            return frozenset({PHASE_ZERO, x, y})
        return None

    def pair_arcset(self, x: PhaseElement, y: PhaseElement) -> ArcSet:
        fin = self.finite_sum(x, y)
        if fin is not None:
            return arcset_of(fin)
        b = _Builder()
        d = (y.turns - x.turns) % 1
        if d < HALF:
            b.add_arc(x.turns, d)
        else:
            b.add_arc(y.turns, 1 - d)
        return b.build()

    def sum_point(self, A: ArcSet, c: PhaseElement) -> ArcSet:
        """Elementwise sum of an arc set with one element."""
        if c.is_zero:
            return A
        if A.full:
            # every antipodal pair is inside, so sums cover the circle
            # and the zero element appears via u = -c
            b = _Builder()
            b.add_zero()
            b.merge(A)
            if A.zero:
                b.add_point(c.turns)
            b.add_arc(Fraction(0), ONE)
            b.add_point(Fraction(0))
            return b.build()
        b = _Builder()
        if A.zero:
            b.add_point(c.turns)
        minus_c = (c.turns + HALF) % 1
        for u in A.points:
            if u == c.turns:
                b.add_point(u)
            elif u == minus_c:
                b.add_zero()
                b.add_point(u)
                b.add_point(c.turns)
            else:
                d = (u - c.turns) % 1
                if d < HALF:
                    b.add_arc(c.turns, d)
                else:
                    b.add_arc(u, 1 - d)
        for s, w in A.arcs:
            self._arc_plus_point(b, s, w, c.turns, minus_c)
        return b.build()

    def _arc_plus_point(self, b: _Builder, s: Fraction, w: Fraction,
                        c: Fraction, minus_c: Fraction):
        # split the open arc at interior occurrences of c and -c; each
        # remaining open sub-arc avoids the antipodal pair, so the sum
        # direction toward c is constant on it
        cuts = []
        for q in (c, minus_c):
            t = (q - s) % 1
            if 0 < t < w:
                cuts.append(t)
        cuts.sort()
        prev = Fraction(0)
        for t in cuts + [w]:
            if t > prev:
                sub_s = (s + prev) % 1
                sub_w = t - prev
                mid = (sub_s + sub_w / 2) % 1
                if (c - mid) % 1 < HALF:
                    b.add_arc(sub_s, (c - sub_s) % 1)
                else:
                    sub_e = (sub_s + sub_w) % 1
                    b.add_arc(c, (sub_e - c) % 1)
            if t < w:
                u = (s + t) % 1
                if u == c:
                    b.add_point(c)
                else:
                    b.add_zero()
                    b.add_point(u)
                    b.add_point(c)
            prev = t

    def nary_arcset(self, xs) -> ArcSet:
        xs = tuple(xs)
        if not xs:
            raise PhaseError("hypersum of an empty sequence is undefined")
        acc = arcset_of(xs[:1])
        for x in xs[1:]:
            acc = self.sum_point(acc, x)
        return acc

    def sample(self, rng: random.Random, max_denominator: int = 24,
               zero_weight: float = 0.1) -> PhaseElement:
        if rng.random() < zero_weight:
            return PHASE_ZERO
        den = rng.randint(1, max_denominator)
        num = rng.randrange(den)
        return phase(Fraction(num, den))


def phase_hyperfield() -> PhaseHyperfield:
    return PhaseHyperfield()
