"""Cell dimensions, window counts and the Young diagrams of semimodules."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .gamma_modules import GammaModule
from .semigroup import Semigroup


def cell_dim(j: GammaModule) -> int:
    """sum over generators of #(Gamma_{>g} minus j) minus the same over syzygies."""
    sg = j.sg
    tot = sum(sg.count_above_missing(g, j.mins) for g in j.generators)
    tot -= sum(sg.count_above_missing(s, j.mins) for s in j.syzygies)
    if tot < 0:
        raise ArithmeticError(f"negative cell dimension for {j.mins}")
    return tot


def nested_cell_dim(j: GammaModule, removed) -> int:
    """Cell dimension for the pair j > i = j minus ``removed`` (a set of minimal generators).

    Removed generators are measured against j, kept ones against i, and the
    syzygies (those of j) against i.  Counts for i are the counts for j plus
    the removed elements lying above the point.
    """
    sg = j.sg
    removed = sorted(set(removed))
    gens = j.generators
    gset = set(gens)
    for s in removed:
        if s not in gset:
            raise ValueError(f"{s} is not a minimal generator")

    def cnt_i(x):
        return sg.count_above_missing(x, j.mins) + sum(1 for s in removed if s > x)

    rem = set(removed)
    tot = 0
    for g in gens:
        tot += sg.count_above_missing(g, j.mins) if g in rem else cnt_i(g)
    tot -= sum(cnt_i(s) for s in j.syzygies)
    if tot < 0:
        raise ArithmeticError(f"negative nested cell dimension for {j.mins}, {removed}")
    return tot


def nested_pairs(j: GammaModule):
    """All subsets of the minimal generators, as sorted tuples."""
    from itertools import combinations

    gens = j.generators
    return [c for m in range(len(gens) + 1) for c in combinations(gens, m)]


def window_beta(j: GammaModule, gamma: int) -> int:
    """#{r : gamma - k < mins[r] <= gamma}, the number of n-generators in (gamma-k, gamma]."""
    k = j.sg.k
    return sum(1 for m in j.mins if gamma - k < m <= gamma)


def jacobian_cell_dim(d: GammaModule) -> int:
    """sum over residues of #([a, a+k) minus Delta) with a the residue minimum."""
    k = d.sg.k
    return sum(1 for a in d.mins for y in range(a, a + k) if not d.contains(y))


# ---------------------------------------------------------------- diagrams


@dataclass(frozen=True)
class Diagram:
    """A partition; ``parts`` are weakly decreasing positive ints (row lengths)."""

    parts: tuple = ()

    def __post_init__(self):
        p = tuple(int(x) for x in self.parts if x)
        if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {self.parts}")
        object.__setattr__(self, "parts", p)

    @property
    def size(self):
        return sum(self.parts)

    def __len__(self):
        return self.size

    @cached_property
    def conjugate(self):
        if not self.parts:
            return Diagram(())
        return Diagram(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def boxes(self):
        """(i, j) with row i and column j, both from 0."""
        return [(i, j) for i, p in enumerate(self.parts) for j in range(p)]

    def arm(self, i, j):
        return self.parts[i] - j - 1

    def leg(self, i, j):
        return self.conjugate.parts[j] - i - 1


def h_plus(D: Diagram, x) -> int:
    """#{boxes with arm/(leg+1) <= x < (arm+1)/leg}."""
    x = Fraction(x)
    conj = D.conjugate.parts
    cnt = 0
    for i, p in enumerate(D.parts):
        for j in range(p):
            a = p - j - 1
            l = conj[j] - i - 1
            if a <= x * (l + 1) and (l == 0 or x * l < a + 1):
                cnt += 1
    return cnt


def box_label(sg: Semigroup, x, y):
    return sg.n * sg.k - sg.k * x - sg.n * y


def diagram_of(d: GammaModule) -> Diagram:
    """Diagram of a normalized semimodule.

    A box (x, y) with x, y >= 1 is present when its label nk - kx - ny is a
    positive element of Delta.  The parts are the column heights (one part
    per x), so the partition is read off column by column.
    """
    sg = d.sg
    heights = []
    for x in range(1, sg.n):
        h = 0
        y = 1
        while True:
            f = box_label(sg, x, y)
            if f <= 0 or not d.contains(f):
                break
            h += 1
            y += 1
        heights.append(h)
    return Diagram(tuple(heights))


def region_diagram(sg: Semigroup) -> Diagram:
    """All boxes with positive label: the diagram of Z>=0."""
    heights = []
    for x in range(1, sg.n):
        heights.append(sum(1 for y in range(1, sg.k) if box_label(sg, x, y) > 0))
    return Diagram(tuple(heights))


@dataclass(frozen=True)
class Corners:
    addable: tuple  # labels of addable boxes, left to right
    between: tuple  # labels of the boxes between consecutive addable boxes
    beta: tuple  # one value per addable box


def corner_data(sg: Semigroup, D: Diagram) -> Corners:
    """Addable boxes P, in-between boxes Q and beta(P) = #{P' > P} - #{Q > P}."""
    h = list(D.parts)
    pts = []
    prev = None
    for x in range(1, len(h) + 2):
        hx = h[x - 1] if x - 1 < len(h) else 0
        if prev is None or prev > hx:
            pts.append((x, hx + 1))
        prev = hx
    P = [box_label(sg, x, y) for x, y in pts]
    Q = [box_label(sg, pts[i + 1][0], pts[i][1]) for i in range(len(pts) - 1)]
    beta = [sum(1 for p in P if p > v) - sum(1 for q in Q if q > v) for v in P]
    return Corners(tuple(P), tuple(Q), tuple(beta))


def g_map(d: GammaModule):
    """Residue minima sorted increasingly and the window counts #([a, a+k) minus Delta)."""
    k = d.sg.k
    a = sorted(d.mins)
    g = [sum(1 for y in range(x, x + k) if not d.contains(y)) for x in a]
    return tuple(a), tuple(g)


def dual_module(d: GammaModule) -> GammaModule:
    """(c - 1) - (Z minus Delta); an ideal of the semigroup when Delta is normalized."""
    sg = d.sg
    n = sg.n
    c = sg.conductor
    # complement of Delta in residue r is {.., mins[r]-n}; reflect x -> c-1-x
    mins = [0] * n
    for r, m in enumerate(d.mins):
        top = m - n
        v = c - 1 - top
        mins[v % n] = v
    return GammaModule(sg, tuple(mins))
