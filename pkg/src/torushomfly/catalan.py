"""Diagram-side sums over semimodules: q,t-Catalan numbers, corner betas, hook formula."""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .cells import (Diagram, corner_data, diagram_of, g_map, h_plus,
                    window_beta, dual_module)
from .gamma_modules import enumerate_normalized_semimodules
from .polyalg import AQT, LaurentPoly, aqt
from .semigroup import Semigroup, make_semigroup

QT = ("q", "t")


def _sg(n, k, normalize=True):
    return make_semigroup(n, k) if normalize else Semigroup(n, k)


def diagram_data(n, k, normalize=True):
    """(Delta, D, h+) for every normalized semimodule; slope k/n on the column-height diagram."""
    sg = _sg(n, k, normalize)
    x = Fraction(sg.k, sg.n)
    out = []
    for d in enumerate_normalized_semimodules(sg):
        D = diagram_of(d)
        out.append((d, D, h_plus(D, x)))
    return sg, out


def spp_min_diagrams(n, k, normalize=True):
    """sum over diagrams of q^(2|D| + 2h+) t^(2|D|); equals q^mu times the a=0 part of spp."""
    _, data = diagram_data(n, k, normalize)
    acc = {}
    for _, D, hp in data:
        e = (0, 2 * D.size + 2 * hp, 2 * D.size)
        acc[e] = acc.get(e, 0) + 1
    return LaurentPoly(acc)


def diagram_contribution(sg, D, hp=None):
    """q^(2|D| + 2h+) t^(2|D|) times the product over addable boxes of (1 + a^2 q^(-2 beta) t)."""
    if hp is None:
        hp = h_plus(D, Fraction(sg.k, sg.n))
    c = corner_data(sg, D)
    out = aqt(q=2 * D.size + 2 * hp, t=2 * D.size)
    for b in c.beta:
        out = out * (LaurentPoly.one() + aqt(a=2, q=-2 * b, t=1))
    return out


def spp_full_diagrams(n, k, normalize=True):
    """Full diagram sum; q^(-mu) times this is spp.

    The addable box with beta = 0 supplies the global factor (1 + a^2 t), so
    no extra prefactor is applied.
    """
    sg, data = diagram_data(n, k, normalize)
    total = LaurentPoly.zero()
    for _, D, hp in data:
        total = total + diagram_contribution(sg, D, hp)
    return total


# ---------------------------------------------------------------- q,t-Catalan


def qt_catalan(n, m=1):
    """sum over (n, mn+1) diagrams of q^(h+ at slope (mn+1)/n) t^(m C(n,2) - |D|)."""
    if n == 1:
        return LaurentPoly.one(QT)
    sg = make_semigroup(n, m * n + 1)
    x = Fraction(m * n + 1, n)
    top = m * comb(n, 2)
    acc = {}
    for d in enumerate_normalized_semimodules(sg):
        D = diagram_of(d)
        e = (h_plus(D, x), top - D.size)
        acc[e] = acc.get(e, 0) + 1
    return LaurentPoly(acc, QT)


def dyck_area_sequences(n):
    """Area sequences a_0 = 0, 0 <= a_{i+1} <= a_i + 1."""
    out = []

    def rec(seq):
        if len(seq) == n:
            out.append(tuple(seq))
            return
        for v in range(seq[-1] + 2):
            rec(seq + [v])

    if n == 0:
        return [()]
    rec([0])
    return out


def qt_catalan_dyck(n):
    """Independent oracle: sum over Dyck paths of q^dinv t^area."""
    acc = {}
    for a in dyck_area_sequences(n):
        dinv = sum(1 for i in range(n) for j in range(i + 1, n)
                   if a[i] == a[j] or a[i] == a[j] + 1)
        e = (dinv, sum(a))
        acc[e] = acc.get(e, 0) + 1
    return LaurentPoly(acc, QT)


def swap_qt(p):
    return LaurentPoly({(e[1], e[0]): c for e, c in p.terms.items()}, QT)


# ---------------------------------------------------------------- G map, bounce, hook formula


def g_diagram(d):
    """G(Delta): the window counts g(a_i) sorted into a partition."""
    _, g = g_map(d)
    return Diagram(tuple(sorted(g, reverse=True)))


def bounce_b(d):
    """b_i = n - 1 - i - g(a_i), with a_0 < ... < a_{n-1} the residue minima."""
    n = d.sg.n
    _, g = g_map(d)
    return tuple(n - 1 - i - gi for i, gi in enumerate(g))


def descents(b):
    """Indices i <= n-2 with b_i > b_{i+1}; no sentinel after the last entry."""
    return [i for i in range(len(b) - 1) if b[i] > b[i + 1]]


def hook_formula(n, use_g=False):
    """sum over (n, n+1) semimodules of q^dinv t^(C(n,2)-|D|) prod_descents (1 + a^2 q^(-b_i) t).

    Returned in the (a, q, t) variables of the Catalan side.  With
    ``use_g`` the statistics are taken on G(Delta) instead of D(Delta).
    """
    sg = make_semigroup(n, n + 1)
    x = Fraction(n + 1, n)
    top = comb(n, 2)
    total = LaurentPoly.zero()
    for d in enumerate_normalized_semimodules(sg):
        D = g_diagram(d) if use_g else diagram_of(d)
        term = aqt(q=h_plus(D, x), t=top - D.size)
        b = bounce_b(d)
        for i in descents(b):
            term = term * (LaurentPoly.one() + aqt(a=2, q=-b[i], t=1))
        total = total + term
    return total


def catalan_to_main(p):
    """Substitute q -> q^2, t -> q^-2 t^-2, a^2 -> a^2 q^2 t^3 (on a polynomial in a^2)."""
    out = {}
    for (ea, eq, et), c in p.terms.items():
        if ea % 2:
            raise ValueError("odd power of a")
        h = ea // 2
        e = (ea, 2 * eq - 2 * et + 2 * h, -2 * et + 3 * h)
        out[e] = out.get(e, 0) + c
    return LaurentPoly(out)


def bounce_beta_bridge(d):
    """For every descent i of b: (b_i, corner beta at a_i - n, window beta on the dual ideal).

    The corner label a_i - n is an addable box of D(Delta); the dual ideal is
    (c-1) - (Z minus Delta) and the label maps to c-1-(a_i-n).
    """
    sg = d.sg
    a, _ = g_map(d)
    b = bounce_b(d)
    D = diagram_of(d)
    cd = corner_data(sg, D)
    corner_beta = dict(zip(cd.addable, cd.beta))
    M = dual_module(d)
    out = []
    for i in descents(b):
        lab = a[i] - sg.n
        out.append((b[i], corner_beta.get(lab), window_beta(M, sg.conductor - 1 - lab)))
    return out


def beta_multiset_counterexample(n, k, L):
    """First ideal of colength <= L whose window betas are not {1, ..., r}, or None."""
    from .gamma_modules import enumerate_ideals_by_colength

    sg = make_semigroup(n, k)
    for l, ideals in enumerate_ideals_by_colength(sg, L).items():
        for j in ideals:
            bs = sorted(window_beta(j, g) for g in j.generators)
            if bs != list(range(1, len(bs) + 1)):
                return j, bs
    return None
