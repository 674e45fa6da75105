"""Two-generator numerical semigroups <n, k>."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd


@dataclass(frozen=True)
class Semigroup:
    """The semigroup generated by n and k, with residues taken mod n.

    Use :func:`make_semigroup` for the normalized form (n < k).  The raw
    constructor keeps the given order, which is handy for checking symmetry.
    """

    n: int
    k: int
    swapped: bool = False
    apery: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n, k = self.n, self.k
        if not (isinstance(n, int) and isinstance(k, int)):
            raise TypeError("generators must be integers")
        if n < 2 or k < 2:
            raise ValueError(f"generators must be >= 2, got ({n}, {k})")
        if gcd(n, k) != 1:
            raise ValueError(f"generators must be coprime, got ({n}, {k})")
        ap = [0] * n
        for a in range(n):
            ap[(a * k) % n] = a * k
        object.__setattr__(self, "apery", tuple(ap))

    @property
    def conductor(self):
        return (self.n - 1) * (self.k - 1)

    @property
    def delta(self):
        return self.conductor // 2

    @property
    def mu(self):
        return self.conductor

    def contains(self, x):
        return x >= 0 and x >= self.apery[x % self.n]

    __contains__ = contains

    def gaps(self):
        return [x for x in range(self.conductor) if not self.contains(x)]

    def elements_upto(self, bound):
        return [x for x in range(bound + 1) if self.contains(x)]

    def coords(self, x):
        """Write x = a*k + b*n with 0 <= a < n; b < 0 exactly when x is not in the semigroup."""
        a = (x * pow(self.k, -1, self.n)) % self.n
        return a, (x - a * self.k) // self.n

    def count_above_missing(self, x, mins):
        """#{y in semigroup : y > x, y not in the module with residue minima ``mins``}."""
        n = self.n
        lo0 = x + 1
        total = 0
        for r in range(n):
            lo = lo0 + ((r - lo0) % n)
            ap = self.apery[r]
            if ap > lo:
                lo = ap
            m = mins[r]
            if m > lo:
                total += (m - lo) // n
        return total


def make_semigroup(n, k):
    """Normalized semigroup with n < k; records whether the inputs were swapped."""
    if n > k:
        return Semigroup(k, n, swapped=True)
    return Semigroup(n, k)
