"""Generating series over nested ideals and the superpolynomial built from them.

The raw series is

    R(a, q, t) = sum over ideals j and subsets S of the minimal generators
                 q^(2 colength) a^(2|S|) t^(|S|^2 + 2 N(j > j - S)).

Writing j = s + Delta with Delta a normalized semimodule, everything about
the cell is unchanged once s reaches the conductor, so

    R = F + G / (1 - q^2)

with F, G finite.  The normalized polynomial is spp = q^(-mu) (1 - q^2) R.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .cells import cell_dim, window_beta
from .gamma_modules import (GammaModule, enumerate_ideals_by_colength,
                            enumerate_normalized_semimodules, shift_fits)
from .polyalg import AQT, InexactDivision, LaurentPoly, QSeries, RatFunc, aqt
from .semigroup import Semigroup, make_semigroup

METHODS = ("cells", "beta", "diagrams", "localization", "closed")


class TailError(ArithmeticError):
    """The normalized series has terms outside the allowed q-range."""


class CalibrationError(AssertionError):
    pass


# ---------------------------------------------------------------- per-ideal weights


def ideal_weight_cells(j: GammaModule):
    """{(e_a, e_t): coeff} summing a^(2|S|) t^(|S|^2 + 2 N_S) over all subsets S."""
    sg = j.sg
    gens = j.generators
    syz = j.syzygies
    cg = [sg.count_above_missing(g, j.mins) for g in gens]
    cs = [sg.count_above_missing(s, j.mins) for s in syz]
    out = {}
    r = len(gens)
    for m in range(r + 1):
        for S in combinations(range(r), m):
            Sv = [gens[i] for i in S]
            Sset = set(S)
            N = 0
            for i, g in enumerate(gens):
                N += cg[i]
                if i not in Sset:
                    N += sum(1 for v in Sv if v > g)
            for i, s in enumerate(syz):
                N -= cs[i] + sum(1 for v in Sv if v > s)
            if N < 0:
                raise ArithmeticError(f"negative nested dimension at {j.mins}")
            key = (2 * m, m * m + 2 * N)
            out[key] = out.get(key, 0) + 1
    return out


def ideal_weight_beta(j: GammaModule):
    """t^(2N) times the product over generators of (1 + a^2 t^(2 beta - 1))."""
    N = cell_dim(j)
    poly = {(0, 2 * N): 1}
    for g in j.generators:
        b = window_beta(j, g)
        new = dict(poly)
        for (ea, et), c in poly.items():
            key = (ea + 2, et + 2 * b - 1)
            new[key] = new.get(key, 0) + c
        poly = new
    return poly


def ideal_weight_grassmann(j: GammaModule):
    """The product form with betas 1..r, as if every beta multiset were {1..r}.

    Only a comparison object: it disagrees with the nested sum wherever the
    beta multiset of some ideal is not {1..r}.
    """
    N = cell_dim(j)
    poly = {(0, 2 * N): 1}
    for b in range(1, len(j.generators) + 1):
        new = dict(poly)
        for (ea, et), c in poly.items():
            key = (ea + 2, et + 2 * b - 1)
            new[key] = new.get(key, 0) + c
        poly = new
    return poly


_WEIGHTS = {"cells": ideal_weight_cells, "beta": ideal_weight_beta,
            "grassmann": ideal_weight_grassmann}


def _add_weight(acc, w, ql):
    for (ea, et), c in w.items():
        key = (ea, ql, et)
        v = acc.get(key, 0) + c
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)


def _semimodule_contrib(n, k, dmins, method):
    """Finite and stable parts contributed by the shifts of one semimodule."""
    sg = Semigroup(n, k)
    d = GammaModule(sg, tuple(dmins))
    weight = _WEIGHTS[method]
    c = sg.conductor
    fin, stab = {}, {}
    for s in range(c):
        if not shift_fits(sg, d.mins, s):
            continue
        j = d.translate(s)
        _add_weight(fin, weight(j), 2 * j.colength)
    j = d.translate(c)
    _add_weight(stab, weight(j), 2 * j.colength)
    return fin, stab


def raw_exact(n, k, method="cells", jobs=1):
    """(F, G) with raw series F + G/(1 - q^2), both exact LaurentPolys."""
    if method not in _WEIGHTS:
        raise ValueError(f"raw sums use method cells, beta or grassmann, got {method}")
    sg = make_semigroup(n, k)
    mods = [d.mins for d in enumerate_normalized_semimodules(sg)]
    fin, stab = {}, {}
    if jobs and jobs > 1 and len(mods) > 50:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = ex.map(_semimodule_contrib, [sg.n] * len(mods), [sg.k] * len(mods), mods,
                           [method] * len(mods), chunksize=max(1, len(mods) // (8 * jobs)))
            results = list(parts)
    else:
        results = [_semimodule_contrib(sg.n, sg.k, m, method) for m in mods]
    for f, g in results:
        for e, c in f.items():
            fin[e] = fin.get(e, 0) + c
        for e, c in g.items():
            stab[e] = stab.get(e, 0) + c
    return LaurentPoly(fin), LaurentPoly(stab)


def raw_series(n, k, order, method="cells"):
    """The raw series expanded modulo q^order, from the exact form."""
    F, G = raw_exact(n, k, method)
    geo = QSeries.geometric(aqt(q=2), order)
    return QSeries(F, order) + QSeries(G, order) * geo


def raw_hilbert_sum(n, k, L, method="cells"):
    """Direct sum over ideals of colength <= L; trusted modulo q^(2L+2)."""
    sg = make_semigroup(n, k)
    weight = _WEIGHTS[method]
    acc = {}
    for l, ideals in enumerate_ideals_by_colength(sg, L).items():
        for j in ideals:
            _add_weight(acc, weight(j), 2 * l)
    return QSeries(LaurentPoly(acc), 2 * L + 2)


def raw_hilbert_sum_beta(n, k, L):
    """Beta-product version; raises CalibrationError at the first ideal that disagrees."""
    sg = make_semigroup(n, k)
    acc = {}
    for l, ideals in enumerate_ideals_by_colength(sg, L).items():
        for j in ideals:
            wb = ideal_weight_beta(j)
            if wb != ideal_weight_cells(j):
                raise CalibrationError(f"beta product differs from nested sum at ideal {j.mins}")
            _add_weight(acc, wb, 2 * l)
    return QSeries(LaurentPoly(acc), 2 * L + 2)


# ---------------------------------------------------------------- superpolynomial


@dataclass
class Superpoly:
    n: int
    k: int
    spp: LaurentPoly
    method: str
    uspp_num: LaurentPoly = field(default=None)
    truncation_order: int | None = None

    def __post_init__(self):
        if self.uspp_num is None:
            self.uspp_num = self.spp * aqt(q=1)

    @property
    def delta(self):
        return (self.n - 1) * (self.k - 1) // 2

    @property
    def mu(self):
        return 2 * self.delta

    @property
    def spp_min(self):
        return self.spp.coefficient_of("a", 0)


def normalize_raw(F, G, mu):
    """q^(-mu) ((1 - q^2) F + G)."""
    one_minus = LaurentPoly.one() - aqt(q=2)
    return (one_minus * F + G) * aqt(q=-mu)


def check_tail(spp, delta):
    lo, hi = spp.degree_range("q") or (0, 0)
    if lo < -2 * delta or hi > 2 * delta:
        raise TailError(f"q-degrees [{lo}, {hi}] exceed +-{2 * delta}")


def superpoly(n, k, method="cells", jobs=1):
    """The normalized superpolynomial spp by the chosen method."""
    sg = make_semigroup(n, k)
    n, k = sg.n, sg.k
    if method in ("cells", "beta"):
        F, G = raw_exact(n, k, method, jobs=jobs)
        spp = normalize_raw(F, G, sg.mu)
    elif method == "diagrams":
        from .catalan import spp_full_diagrams

        spp = spp_full_diagrams(n, k) * aqt(q=-sg.mu)
    elif method == "localization":
        from .localization import superpoly_localization

        spp = superpoly_localization(n, k)
    elif method == "closed":
        spp = closed_form(n, k).spp
    else:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    check_tail(spp, sg.delta)
    return Superpoly(n, k, spp, method)


def spp_min(n, k):
    return superpoly(n, k).spp_min


# ---------------------------------------------------------------- checks


@dataclass
class CheckReport:
    name: str
    passed: bool
    detail: str = ""

    def __bool__(self):
        return self.passed


def qt_dual(p: LaurentPoly) -> LaurentPoly:
    """The substitution q -> 1/(q t)."""
    return p.substitute({"q": aqt(q=-1, t=-1)})


def check_symmetry(S: Superpoly):
    diff = qt_dual(S.spp) - S.spp
    if diff.is_zero():
        return CheckReport("symmetry", True)
    e, c = diff.sorted_terms()[0]
    return CheckReport("symmetry", False, f"first differing monomial a^{e[0]} q^{e[1]} t^{e[2]}")


def check_degree_bounds(S: Superpoly):
    d = S.delta
    for e in S.spp.terms:
        if abs(e[1]) > 2 * d:
            return CheckReport("degree_bounds", False, f"q-exponent {e[1]} outside +-{2 * d}")
    na = len({e[0] for e in S.spp.terms})
    if na > min(S.n, S.k) + 1:
        return CheckReport("degree_bounds", False, f"{na} distinct a-exponents")
    return CheckReport("degree_bounds", True)


def check_no_cancellation(S: Superpoly):
    """t-parity is constant for each (e_a, e_q), and t = -1 keeps one sign per a-degree."""
    par = {}
    for (ea, eq, et), c in S.uspp_num.terms.items():
        if c < 0:
            return CheckReport("no_cancellation", False, f"negative coefficient at {(ea, eq, et)}")
        p = par.setdefault((ea, eq), et % 2)
        if p != et % 2:
            return CheckReport("no_cancellation", False, f"mixed t-parity at a^{ea} q^{eq}")
    signs = {}
    for (ea, eq, et), c in S.spp.terms.items():
        s = (-1) ** et
        if signs.setdefault(ea, s) != s:
            return CheckReport("no_cancellation", False, f"mixed signs at t=-1 in a^{ea}")
    return CheckReport("no_cancellation", True)


def bps_basis(h):
    return (aqt(q=-1) - aqt(q=1)) ** h * (aqt(q=-1) - aqt(q=1, t=2)) ** h


def bps_decompose(S, delta=None):
    """n_0..n_delta (q-free) with spp = sum_h n_h (q^-1 - q)^h (q^-1 - q t^2)^h."""
    if isinstance(S, Superpoly):
        spp, delta = S.spp, S.delta
    else:
        spp = S
    rem = spp
    out = [None] * (delta + 1)
    for h in range(delta, -1, -1):
        nh = rem.coefficient_of("q", -2 * h)
        out[h] = nh
        rem = rem - nh * bps_basis(h)
    if not rem.is_zero():
        raise InexactDivision("BPS decomposition leaves a remainder", rem)
    return out


def check_bps(S):
    try:
        parts = bps_decompose(S)
    except InexactDivision as e:
        return CheckReport("bps", False, f"remainder {e.remainder.sorted_terms()[0]}")
    total = LaurentPoly.zero()
    for h, nh in enumerate(parts):
        total = total + nh * bps_basis(h)
    return CheckReport("bps", total == S.spp)


def check_blowup(n, k):
    """a^(2n) part of the raw series equals q^(n(n-1)) t^(n^2) times the a^0 part for <n, k-n>."""
    sg = make_semigroup(n, k)
    n, k = sg.n, sg.k
    F, G = raw_exact(n, k)
    one_minus = LaurentPoly.one() - aqt(q=2)
    lhs = (one_minus * F + G).coefficient_of("a", 2 * n)
    if k - n == 1:
        target = LaurentPoly.one()
    else:
        F2, G2 = raw_exact(n, k - n)
        target = (one_minus * F2 + G2).coefficient_of("a", 0)
    rhs = target * aqt(q=n * (n - 1), t=n * n)
    diff = lhs - rhs
    if diff.is_zero():
        return CheckReport("blowup", True)
    lo = diff.degree_range("q")[0]
    return CheckReport("blowup", False, f"first differing q-order {lo}")


def run_checks(S: Superpoly):
    return [check_symmetry(S), check_degree_bounds(S), check_no_cancellation(S), check_bps(S)]


# ---------------------------------------------------------------- stable limit


def stable_series(n, order):
    """prod_{i=1..n} (1 + a^2 q^(2i-2) t^(2i-1)) / (1 - q^(2i) t^(2i-2)) modulo q^order."""
    num = LaurentPoly.one()
    for i in range(1, n + 1):
        num = num * (LaurentPoly.one() + aqt(a=2, q=2 * i - 2, t=2 * i - 1))
    s = QSeries(num, order)
    for i in range(1, n + 1):
        s = s * QSeries.geometric(aqt(q=2 * i, t=2 * i - 2), order)
    return s


def check_stable(n, k):
    order = 2 * k
    raw = raw_series(n, k, order)
    st = stable_series(n, order)
    return CheckReport("stable", raw.agrees_with(st, order))


# ---------------------------------------------------------------- closed forms


def _geom_sum(ratio, m):
    total = LaurentPoly.zero()
    p = LaurentPoly.one()
    for _ in range(m):
        total = total + p
        p = p * ratio
    return total


def closed_form_2n(kk):
    """Torus knot (2, 2kk+1): (1-q^2) R/(1+a^2 t) = [kk+1] + a^2 q^2 t^3 [kk] in x = q^4 t^2."""
    x = aqt(q=4, t=2)
    rhs = _geom_sum(x, kk + 1) + aqt(a=2, q=2, t=3) * _geom_sum(x, kk)
    mu = 2 * kk
    spp = rhs * (LaurentPoly.one() + aqt(a=2, t=1)) * aqt(q=-mu)
    return Superpoly(2, 2 * kk + 1, spp, "closed")


def closed_form_3n_rhs(kk, residue, mid=None):
    """The three-term rational expression for (3, 3kk+residue), as a RatFunc over (a, q, t).

    ``mid`` overrides the cubic factor of the middle term (used to test
    alternative transcriptions).
    """
    one = LaurentPoly.one()

    def b(q, t):  # 1 - q^q t^t
        return one - aqt(q=q, t=t)

    first = RatFunc((one + aqt(a=2, q=2, t=3)) * (one + aqt(a=2, q=4, t=5)), b(4, 2) * b(6, 4))
    q2_at = aqt(q=2) + aqt(a=2, t=1)
    q4_at = aqt(q=4) + aqt(a=2, t=1)
    if residue == 1:
        p2, p3 = aqt(q=2 + 6 * kk, t=2 + 4 * kk), aqt(q=4 + 12 * kk, t=4 + 6 * kk)
        default_mid = one + aqt(q=2, t=2) + aqt(q=4, t=2)
    elif residue == 2:
        p2, p3 = aqt(q=4 + 6 * kk, t=4 + 4 * kk), aqt(q=8 + 12 * kk, t=6 + 6 * kk)
        default_mid = one + aqt(q=2) + aqt(q=4, t=2)
    else:
        raise ValueError("residue must be 1 or 2")
    mid = default_mid if mid is None else mid
    second = RatFunc(p2 * q2_at * (one + aqt(a=2, q=2, t=3)) * mid, b(6, 2) * b(6, 4))
    third = RatFunc(p3 * q2_at * q4_at, b(6, 2) * b(4, 2))
    return first - second + third


def closed_form_3n(kk, residue):
    k = 3 * kk + residue
    mu = 2 * (k - 1)
    rhs = closed_form_3n_rhs(kk, residue)
    if not rhs.is_polynomial():
        raise InexactDivision("closed form does not reduce to a polynomial", rhs.num)
    spp = rhs.as_poly() * (LaurentPoly.one() + aqt(a=2, t=1)) * aqt(q=-mu)
    return Superpoly(3, k, spp, "closed")


def closed_form(n, k):
    sg = make_semigroup(n, k)
    n, k = sg.n, sg.k
    if n == 2:
        return closed_form_2n((k - 1) // 2)
    if n == 3:
        return closed_form_3n(k // 3, k % 3)
    raise ValueError("closed forms exist for n = 2 and n = 3 only")
