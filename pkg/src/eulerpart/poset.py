"""Finite posets with explicit element lists: Möbius functions, ranks.

The order relation is materialised as per-element bitmasks, which keeps
down-set scans cheap for the lattice sizes this package works at (a few
thousand elements at most).
"""

from __future__ import annotations

from eulerpart.partition import all_set_partitions
from eulerpart.poly import IntPoly


class FinitePoset:
    """A finite poset over arbitrary hashable elements.

    ``down[i]`` is the bitmask of indices j with element_j <= element_i,
    including i itself.
    """

    def __init__(self, elements, down):
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("poset elements must be distinct")
        self.down = list(down)
        self._mu = {}
        self._covers = None
        self._ranks = None

    @classmethod
    def from_leq(cls, elements, leq):
        """Build from a comparison callable; O(n^2) calls."""
        elements = tuple(elements)
        down = []
        for i, x in enumerate(elements):
            mask = 0
            for j, y in enumerate(elements):
                if leq(y, x):
                    mask |= 1 << j
            if not mask >> i & 1:
                raise ValueError("leq must be reflexive")
            down.append(mask)
        return cls(elements, down)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.index

    def leq(self, a, b):
        return self.down[self.index[b]] >> self.index[a] & 1

    def down_set(self, b):
        """Elements <= b, in index order."""
        mask = self.down[self.index[b]]
        return [self.elements[j] for j in _bits(mask)]

    def up_set(self, a):
        i = self.index[a]
        return [self.elements[j] for j in range(len(self.elements)) if self.down[j] >> i & 1]

    def minimal_elements(self):
        return [x for i, x in enumerate(self.elements) if self.down[i] == 1 << i]

    def maximal_elements(self):
        n = len(self.elements)
        above = [0] * n
        for j in range(n):
            for i in _bits(self.down[j]):
                above[i] |= 1 << j
        return [x for i, x in enumerate(self.elements) if above[i] == 1 << i]

    def bottom(self):
        mins = self.minimal_elements()
        if len(mins) != 1:
            raise ValueError("poset has no unique minimal element")
        return mins[0]

    def top(self):
        maxs = self.maximal_elements()
        if len(maxs) != 1:
            raise ValueError("poset has no unique maximal element")
        return maxs[0]

    def covers(self):
        """List of (x, y) with y covering x."""
        if self._covers is None:
            out = []
            n = len(self.elements)
            for j in range(n):
                strictly_below = self.down[j] & ~(1 << j)
                for i in _bits(strictly_below):
                    between = self.down[j] & ~self.down[i] & ~(1 << j)
                    # i < j is a cover iff nothing sits strictly between
                    if not any(
                        self.down[k] >> i & 1 for k in _bits(between) if k != j
                    ):
                        out.append((self.elements[i], self.elements[j]))
            self._covers = out
        return self._covers

    def mobius(self, a, b):
        """Standard Möbius recursion over the interval [a, b]; cached."""
        i, j = self.index[a], self.index[b]
        if not self.down[j] >> i & 1:
            return 0
        return self._mobius_idx(i, j)

    def _mobius_idx(self, i, j):
        key = (i, j)
        cached = self._mu.get(key)
        if cached is not None:
            return cached
        if i == j:
            value = 1
        else:
            interval = self.down[j] & ~(1 << j)
            value = 0
            for k in _bits(interval):
                if self.down[k] >> i & 1:
                    value -= self._mobius_idx(i, k)
        self._mu[key] = value
        return value

    def rank_function(self):
        """Ranks from the unique bottom; raises if the poset is not ranked."""
        if self._ranks is None:
            bottom = self.bottom()
            ranks = {bottom: 0}
            order = sorted(range(len(self.elements)), key=lambda j: bin(self.down[j]).count("1"))
            cover_up = {}
            for x, y in self.covers():
                cover_up.setdefault(y, []).append(x)
            for j in order:
                y = self.elements[j]
                if y == bottom:
                    continue
                below = cover_up.get(y, [])
                if not below:
                    raise ValueError("element unreachable from the bottom; poset not ranked")
                candidates = {ranks[x] + 1 for x in below if x in ranks}
                if len(candidates) != 1:
                    raise ValueError("poset is not ranked")
                ranks[y] = candidates.pop()
            self._ranks = ranks
        return self._ranks

    def rank(self, x=None):
        ranks = self.rank_function()
        if x is None:
            return max(ranks.values())
        return ranks[x]

    def characteristic_polynomial(self):
        """sum_x mu(0, x) t^(rk(poset) - rk(x)); needs bottom and a rank function."""
        ranks = self.rank_function()
        total = self.rank()
        bottom = self.bottom()
        coeffs = [0] * (total + 1)
        for x in self.elements:
            coeffs[total - ranks[x]] += self.mobius(bottom, x)
        return IntPoly(coeffs)


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def partition_lattice(ground):
    """The full partition lattice Pi(ground) as a FinitePoset (refinement order)."""
    elements = list(all_set_partitions(ground))
    return FinitePoset.from_leq(elements, lambda a, b: a.refines(b))


def subposet(poset, elements):
    """Induced sub-poset on a subset of elements (inherits the order)."""
    elements = tuple(elements)
    idx = [poset.index[x] for x in elements]
    down = []
    for j in idx:
        mask = 0
        for pos, i in enumerate(idx):
            if poset.down[j] >> i & 1:
                mask |= 1 << pos
        down.append(mask)
    return FinitePoset(elements, down)
