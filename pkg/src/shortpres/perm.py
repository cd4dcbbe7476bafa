"""Permutations on an integer interval, acting on the right.

Points are integers from a closed interval [lo, hi] (lo may be negative).
Products apply the LEFT factor first: x^(s*t) = (x^s)^t, so
(1,2)*(2,3) = (1,3,2).  Conjugation is s^g = g^-1*s*g, which relabels
cycles: (x1,...,xk)^g = (x1^g,...,xk^g).

Images are stored as a read-only numpy int64 array indexed by point - lo;
all the group operations are fancy-indexing on that array, so they stay
cheap up to degrees in the millions.
"""

from __future__ import annotations

import math
import re

import numpy as np

from .errors import DomainMismatch, OverlappingCycles, PointOutOfDomain

_CYCLE_RE = re.compile(r"\(\s*((?:-?\d+\s*(?:,\s*-?\d+\s*)*)?)\)")


class Cycle:
    """An ordered tuple of distinct points, (x1,...,xk) mapping each to the next."""

    __slots__ = ("points",)

    def __init__(self, points):
        pts = tuple(int(x) for x in points)
        if len(set(pts)) != len(pts):
            seen = set()
            for x in pts:
                if x in seen:
                    raise OverlappingCycles(x)
                seen.add(x)
        self.points = pts

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __repr__(self):
        return f"Cycle{self.points}"


class Permutation:
    """A bijection of [lo, hi], composed left-to-right."""

    __slots__ = ("images", "lo")

    def __init__(self, images, lo=1):
        arr = np.asarray(images, dtype=np.int64)
        if arr.ndim != 1:
            raise DomainMismatch("images must be a flat sequence")
        if arr.size == 0:
            raise DomainMismatch("empty image list")
        lo = int(lo)
        hi = lo + arr.size - 1
        shifted = arr - lo
        if (
            shifted.min() < 0
            or shifted.max() >= arr.size
            or not (np.bincount(shifted, minlength=arr.size) == 1).all()
        ):
            raise DomainMismatch(f"images are not a bijection of [{lo}, {hi}]")
        arr = arr.copy()
        arr.flags.writeable = False
        self.images = arr
        self.lo = lo

    @classmethod
    def _trusted(cls, arr, lo):
        """Internal: wrap an array already known to be a bijection."""
        self = object.__new__(cls)
        arr.flags.writeable = False
        self.images = arr
        self.lo = lo
        return self

    @property
    def hi(self):
        return self.lo + self.images.size - 1

    @property
    def degree(self):
        return self.images.size

    @classmethod
    def identity(cls, lo, hi):
        if hi < lo:
            raise DomainMismatch(f"empty domain [{lo}, {hi}]")
        return cls._trusted(np.arange(lo, hi + 1, dtype=np.int64), lo)

    @classmethod
    def from_cycles(cls, cycles, lo, hi):
        """Build the product of pairwise-disjoint cycles on [lo, hi].

        Each cycle may be a Cycle or any iterable of points.  A point used
        twice (within or across cycles) raises OverlappingCycles; a point
        outside [lo, hi] raises PointOutOfDomain.
        """
        arr = np.arange(lo, hi + 1, dtype=np.int64)
        seen = set()
        for cyc in cycles:
            pts = list(cyc.points if isinstance(cyc, Cycle) else cyc)
            for x in pts:
                if not lo <= x <= hi:
                    raise PointOutOfDomain(x, lo, hi)
                if x in seen:
                    raise OverlappingCycles(x)
                seen.add(x)
            for i, x in enumerate(pts):
                arr[x - lo] = pts[(i + 1) % len(pts)]
        return cls._trusted(arr, lo)

    def _check_domain(self, other):
        if self.lo != other.lo or self.images.size != other.images.size:
            raise DomainMismatch(
                f"domains [{self.lo}, {self.hi}] and [{other.lo}, {other.hi}] differ"
            )

    def __mul__(self, other):
        """self*other applies self first: x^(self*other) = (x^self)^other."""
        self._check_domain(other)
        return Permutation._trusted(other.images[self.images - self.lo], self.lo)

    def inverse(self):
        arr = np.empty_like(self.images)
        arr[self.images - self.lo] = np.arange(self.lo, self.hi + 1, dtype=np.int64)
        return Permutation._trusted(arr, self.lo)

    def __invert__(self):
        return self.inverse()

    def __pow__(self, e):
        e = int(e)
        if e == 0:
            return Permutation.identity(self.lo, self.hi)
        base = self if e > 0 else self.inverse()
        e = abs(e)
        result = None
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def conjugate(self, g):
        """self^g = g^-1 * self * g, i.e. self with points relabeled by g."""
        self._check_domain(g)
        arr = np.empty_like(self.images)
        arr[g.images - self.lo] = g.images[self.images - self.lo]
        return Permutation._trusted(arr, self.lo)

    def __call__(self, point):
        if not self.lo <= point <= self.hi:
            raise PointOutOfDomain(point, self.lo, self.hi)
        return int(self.images[point - self.lo])

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.lo == other.lo and np.array_equal(self.images, other.images)

    def __hash__(self):
        return hash((self.lo, self.images.tobytes()))

    def is_identity(self):
        return bool(
            (self.images == np.arange(self.lo, self.hi + 1, dtype=np.int64)).all()
        )

    def identity_like(self):
        return Permutation.identity(self.lo, self.hi)

    def cycles(self):
        """Canonical cycle decomposition: fixed points dropped, each cycle
        starting at its least point, cycles sorted by least point."""
        moved = np.nonzero(self.images != np.arange(self.lo, self.hi + 1))[0]
        seen = set()
        out = []
        img = self.images
        lo = self.lo
        for idx in moved:
            pt = int(idx) + lo
            if pt in seen:
                continue
            cyc = [pt]
            seen.add(pt)
            nxt = int(img[idx])
            while nxt != pt:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = int(img[nxt - lo])
            out.append(tuple(cyc))
        return out

    def cycle_type(self):
        """Sorted (descending) lengths of the nontrivial cycles; () for identity."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def support(self):
        """The points actually moved, ascending."""
        idx = np.nonzero(self.images != np.arange(self.lo, self.hi + 1))[0]
        return [int(i) + self.lo for i in idx]

    def order(self):
        return math.lcm(*(len(c) for c in self.cycles())) if self.support() else 1

    def epsilon(self):
        """Parity: 0 for even, 1 for odd."""
        return sum(len(c) - 1 for c in self.cycles()) % 2

    def sign(self):
        return -1 if self.epsilon() else 1

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation[{self.lo},{self.hi}] {self}"


def parse_cycles(text, lo, hi):
    """Parse canonical cycle text ("(1,2)(3,4)" or "()") on the given domain."""
    stripped = text.strip()
    if stripped == "()":
        return Permutation.identity(lo, hi)
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(stripped):
        if m.start() != pos:
            raise DomainMismatch(f"unparseable cycle text at {stripped[pos:]!r}")
        body = m.group(1).strip()
        if body:
            cycles.append([int(tok) for tok in body.split(",")])
        pos = m.end()
    if pos != len(stripped) or not cycles:
        raise DomainMismatch(f"unparseable cycle text {text!r}")
    return Permutation.from_cycles(cycles, lo, hi)


def orbit(gens, point):
    """The orbit of a point under a list of permutations, as a sorted list."""
    if not gens:
        return [point]
    seen = {point}
    frontier = [point]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g(x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)
