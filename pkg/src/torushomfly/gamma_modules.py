"""Modules over a two-generator semigroup, encoded by their residue minima.

A module M (a subset of Z stable under adding n and k, bounded below) is
stored as ``mins[r] = min{x in M : x = r mod n}``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .semigroup import Semigroup


@dataclass(frozen=True)
class GammaModule:
    sg: Semigroup
    mins: tuple

    def __post_init__(self):
        n, k = self.sg.n, self.sg.k
        if len(self.mins) != n:
            raise ValueError("need one minimum per residue class")
        for r, m in enumerate(self.mins):
            if m % n != r:
                raise ValueError(f"minimum {m} is not in residue class {r} mod {n}")
        for r in range(n):
            if self.mins[(r + k) % n] > self.mins[r] + k:
                raise ValueError("not closed under adding k")

    # construction
    @classmethod
    def from_generators(cls, sg, gens):
        n, k = sg.n, sg.k
        gens = list(gens)
        if not gens:
            raise ValueError("need at least one generator")
        mins = [None] * n
        for g in gens:
            for a in range(n):
                x = g + a * k
                r = x % n
                if mins[r] is None or x < mins[r]:
                    mins[r] = x
        return cls(sg, tuple(mins))

    @classmethod
    def semigroup_itself(cls, sg):
        return cls(sg, sg.apery)

    # membership
    def contains(self, x):
        return x >= self.mins[x % self.sg.n]

    __contains__ = contains

    @property
    def min(self):
        return min(self.mins)

    def is_ideal(self):
        return all(m >= a for m, a in zip(self.mins, self.sg.apery))

    def is_normalized(self):
        return self.min == 0

    def translate(self, s):
        n = self.sg.n
        mins = [0] * n
        for r, m in enumerate(self.mins):
            mins[(r + s) % n] = m + s
        return GammaModule(self.sg, tuple(mins))

    def normalized(self):
        return self.translate(-self.min)

    @property
    def colength(self):
        """#(semigroup minus module); only meaningful for ideals."""
        if not self.is_ideal():
            raise ValueError("colength is defined for ideals only")
        return sum(m - a for m, a in zip(self.mins, self.sg.apery)) // self.sg.n

    def missing_from_nonneg(self):
        """#(Z>=0 minus module) for a normalized module."""
        return sum(m // self.sg.n for m in self.mins)

    def complement_in_semigroup(self):
        sg = self.sg
        out = []
        for r in range(sg.n):
            out.extend(range(sg.apery[r], self.mins[r], sg.n))
        return sorted(out)

    # generators
    @property
    def generators(self):
        k = self.sg.k
        return tuple(sorted(m for m in self.mins if not self.contains(m - k)))

    @property
    def n_generators(self):
        return tuple(sorted(self.mins))

    def staircase(self):
        """Generators as (gamma, a, b) with gamma = a*k + b*n, sorted by a."""
        return sorted(((g,) + self.sg.coords(g) for g in self.generators), key=lambda t: t[1])

    def syzygy_module_mins(self):
        """Residue minima of the set of integers with two distinct generator expressions."""
        sg = self.sg
        n = sg.n
        gens = self.generators
        mins = []
        for r in range(n):
            vals = sorted(g + sg.apery[(r - g) % n] for g in gens)
            mins.append(vals[1])
        return tuple(mins)

    @property
    def syzygies(self):
        """Minimal generators of the syzygy module; empty for a principal module."""
        if len(self.generators) < 2:
            return ()
        return GammaModule(self.sg, self.syzygy_module_mins()).generators

    def staircase_syzygies(self):
        """Syzygy degrees read off the staircase: a_{i+1}*k + b_i*n, cyclically."""
        st = self.staircase()
        r = len(st)
        if r < 2:
            return ()
        n, k = self.sg.n, self.sg.k
        out = []
        for i in range(r):
            a_next = st[i + 1][1] if i + 1 < r else st[0][1] + n
            out.append(a_next * k + st[i][2] * n)
        return tuple(sorted(out))

    def elements_upto(self, bound):
        return [x for x in range(self.min, bound + 1) if self.contains(x)]


def enumerate_normalized_semimodules(sg: Semigroup):
    """All modules M with min M = 0 containing the semigroup.

    Residues are visited along the cycle 0, k, 2k, ... (mod n); the only
    constraints are mins[r_{i+1}] <= mins[r_i] + k and mins[r_i] <= i*k.
    """
    n, k = sg.n, sg.k
    order = [(i * k) % n for i in range(n)]
    mins = [0] * n
    out = []

    def rec(i, prev):
        if i == n:
            out.append(GammaModule(sg, tuple(mins)))
            return
        r = order[i]
        hi = min(i * k, prev + k)
        for m in range(r, hi + 1, n):
            mins[r] = m
            rec(i + 1, m)

    rec(1, 0)
    return out


def shift_fits(sg, delta_mins, s):
    """Is s + Delta contained in the semigroup?"""
    n = sg.n
    ap = sg.apery
    for r, m in enumerate(delta_mins):
        if s + m < ap[(r + s) % n]:
            return False
    return True


def enumerate_ideals_by_colength(sg: Semigroup, L: int):
    """Map colength -> list of ideals, for colengths 0..L.

    Every ideal is s + Delta with s its minimum and Delta a normalized
    semimodule; the colength is at least s - delta, which bounds s.
    """
    out = {l: [] for l in range(L + 1)}
    for d in enumerate_normalized_semimodules(sg):
        for s in range(0, L + sg.delta + 1):
            if not shift_fits(sg, d.mins, s):
                continue
            j = d.translate(s)
            c = j.colength
            if c <= L:
                out[c].append(j)
    return out


def brute_force_ideals(sg: Semigroup, L: int):
    """Independent oracle: ideals as subsets of a window, closed under n and k."""
    c = sg.conductor
    top = c + L + 1
    elems = [x for x in range(top) if sg.contains(x)]
    found = {l: set() for l in range(L + 1)}
    # an ideal of colength <= L contains every semigroup element >= c + L
    from itertools import combinations

    for size in range(L + 1):
        for removed in combinations(elems, size):
            rem = set(removed)
            ok = True
            for x in rem:
                # closure: if x is missing then x - n and x - k must be missing too
                for g in (sg.n, sg.k):
                    y = x - g
                    if y >= 0 and sg.contains(y) and y not in rem:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                mins = []
                for r in range(sg.n):
                    x = sg.apery[r]
                    while x in rem:
                        x += sg.n
                    mins.append(x)
                found[size].add(tuple(mins))
    return found
