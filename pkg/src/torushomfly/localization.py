"""Fixed-point sums over partitions of n in the variables (A, T1, T2).

Box x = (i, j) sits in row i and column j.  arm a = lambda_i - j - 1,
leg l = lambda'_j - i - 1, co-arm a' = j, co-leg l' = i.  The dictionary
to the main variables is T1 = q^2, T2 = q^-2 t^-2, A = a^2 t.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd

from .cells import Diagram
from .polyalg import AQT, LaurentPoly, RatFunc, aqt, qint, sum_over_binomial_denominators
from .semigroup import make_semigroup

LOC = ("A", "T1", "T2")
Partition = Diagram


class ConjectureFailure(ArithmeticError):
    """A partition sum that should be a Laurent polynomial is not."""


class NoFormula(LookupError):
    pass


def partitions(n, maxpart=None):
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - p, p):
            yield (p,) + rest


def kappa(lam: Diagram):
    """sum of co-legs, i.e. sum over columns of C(lambda'_j, 2)."""
    return sum(comb(c, 2) for c in lam.conjugate.parts)


def mono(T1=0, T2=0, A=0, c=1):
    return LaurentPoly.monomial((A, T1, T2), c, LOC)


ONE = LaurentPoly.one(LOC)


def box_stats(lam: Diagram):
    """(arm, leg, co-arm, co-leg) for every box."""
    conj = lam.conjugate.parts
    return [(p - j - 1, conj[j] - i - 1, j, i) for i, p in enumerate(lam.parts) for j in range(p)]


@dataclass(frozen=True)
class FixedPointWeights:
    partition: Diagram
    T: LaurentPoly  # sum of T1^l' T2^a'
    det: LaurentPoly  # T1^kappa(lam) T2^kappa(lam')
    tangent: tuple  # exponent tuples m, one per factor (1 - m)
    OZ: LaurentPoly  # T (1-T1)(1-T2) prod_{x != 0} (1 - T1^l' T2^a')
    W: LaurentPoly  # prod_{x != 0} (1 - T1^l' T2^a')
    extA: LaurentPoly  # prod_{x != 0} (1 + A T1^-l' T2^-a')

    def tangent_poly(self):
        out = ONE
        for m in self.tangent:
            out = out * (ONE - LaurentPoly.monomial(m, 1, LOC))
        return out


@lru_cache(maxsize=None)
def weights(parts) -> FixedPointWeights:
    lam = Diagram(tuple(parts))
    if lam.size == 0:
        raise ValueError("partition must be nonempty")
    T = LaurentPoly.zero(LOC)
    W = ONE
    ext = ONE
    tang = []
    for a, l, ap, lp in box_stats(lam):
        T = T + mono(T1=lp, T2=ap)
        if (ap, lp) != (0, 0):
            W = W * (ONE - mono(T1=lp, T2=ap))
            ext = ext * (ONE + mono(A=1, T1=-lp, T2=-ap))
        tang.append((0, 1 + l, -a))
        tang.append((0, -l, 1 + a))
    det = mono(T1=kappa(lam), T2=kappa(lam.conjugate))
    OZ = T * (ONE - mono(T1=1)) * (ONE - mono(T2=1)) * W
    return FixedPointWeights(lam, T, det, tuple(tang), OZ, W, ext)


# ---------------------------------------------------------------- sums


def _partition_sum(n, m, g_of, with_A):
    """sum over lambda of g (1-T1)(1-T2) W extA det^m / tangent; a RatFunc."""
    items = []
    for parts in partitions(n):
        w = weights(parts)
        g = g_of(w.partition)
        if isinstance(g, LaurentPoly):
            g = RatFunc(g)
        num = g.num * (ONE - mono(T1=1)) * (ONE - mono(T2=1)) * w.W * (w.det ** m)
        if with_A:
            num = num * w.extA
        extra = [] if g.den.is_unit() else [g.den]
        if g.den.is_unit():
            num = num.divide_exact(g.den)
        items.append((num, list(w.tangent), extra))
    return sum_over_binomial_denominators(items, LOC)


def _require_poly(r: RatFunc, what):
    if not r.is_polynomial():
        raise ConjectureFailure(f"{what}: partition sum is not a Laurent polynomial")
    return r.as_poly()


def mnp1_min(n, m):
    """sum of T1^(m kappa) T2^(m kappa') (1-T1)(1-T2) prod(1 - T1^l' T2^a') T_lam / tangent."""
    return _require_poly(_partition_sum(n, m, lambda lam: weights(lam.parts).T, False),
                         f"mnp1_min({n},{m})")


def mnp1_full(n, m):
    """As mnp1_min with the extra factor prod_{x != 0} (1 + A T1^-l' T2^-a')."""
    return _require_poly(_partition_sum(n, m, lambda lam: weights(lam.parts).T, True),
                         f"mnp1_full({n},{m})")


def to_main(p: LaurentPoly) -> LaurentPoly:
    """T1 -> q^2, T2 -> q^-2 t^-2, A -> a^2 t."""
    return p.substitute({"A": aqt(a=2, t=1), "T1": aqt(q=2), "T2": aqt(q=-2, t=-2)}, AQT)


def from_main_min(n, k, p):
    """t^mu (1 + a^2 t) times to_main(p): the spp candidate."""
    mu = (n - 1) * (k - 1)
    return to_main(p) * aqt(t=mu) * (LaurentPoly.one() + aqt(a=2, t=1))


# ---------------------------------------------------------------- g formulas


def _ratf(num, den=None):
    return RatFunc(num, den if den is not None else ONE)


def _swap(r: RatFunc):
    return r.substitute({"T1": mono(T2=1), "T2": mono(T1=1)}, reduce=False)


def _invert(r: RatFunc):
    return r.substitute({"T1": mono(T1=-1), "T2": mono(T2=-1)}, reduce=False)


def _qint(m, var, base_exp=1):
    return qint(m, var, LOC, base_exp)


def _tpoly(expr):
    """Evaluate a T1/T2 arithmetic expression written in Python syntax."""
    return eval(expr, {"__builtins__": {}}, {"T1": mono(T1=1), "T2": mono(T2=1)})


# g_{r/5}((2,2,1)) for r = 1..4
_G25 = {
    1: _ratf(_tpoly("(1+T1+T1**2)+(1+T1)*T2")),
    2: _ratf(_tpoly("(T1**2+T1**3)+(T1+T1**2)*T2+T2**2")),
    3: _ratf(_tpoly("T1**4+(T1**2+T1**3)*T2+(T1+T1**2)*T2**2")),
    4: _ratf(_tpoly("(T1**3+T1**4)*T2+(T1**2+T1**3+T1**4)*T2**2")),
}

# g_{3/7} on the shapes not covered by a closed formula
_G37 = {
    (2, 2, 1, 1, 1): _ratf(
        _tpoly("T1**2*(T1**7+2*T1**6+T1**5*(T2+1)+T1**4*(2*T2+1)+2*T1**3*T2"
               "+T1**2*(T2**2+T2)+T1*T2**2+T2**2)"),
        _tpoly("1+T1**2")),
    (2, 2, 2, 1): _ratf(
        _tpoly("T1**2*(T1**6*T2+T1**5*(T2**2+T2-1)+T1**4*(2*T2**2-1)+T1**3*(T2**3+T2**2-T2)"
               "+T1**2*(T2**3-T2**2-T2)-2*T1*T2**2+(T2**4-T2**3-T2**2))"),
        _tpoly("T1**2*T2-1")),
    (3, 2, 1, 1): _ratf(
        _tpoly("T1*(T1**6*(T2+1)+T1**5*(T2**2+3*T2+1)+T1**4*(T2**3+4*T2**2+3*T2)"
               "+T1**3*(4*T2**3+6*T2**2+T2)+T1**2*(T2**4+5*T2**3+3*T2**2)"
               "+T1*(2*T2**4+3*T2**3+T2**2)+T2**4)"),
        _tpoly("(T2+1)*(T1**2+T1+1)")),
    (3, 2, 2): _ratf(
        _tpoly("T1**6*(T2**2+T2-1)+T1**5*(T2**3+2*T2**2)+T1**4*(T2**4+2*T2**3-T2**2-T2)"
               "+T1**3*(T2**4-T2**3-2*T2**2)+T1**2*(T2**5-2*T2**3-T2**2)-T1*T2**4"),
        _tpoly("T1**2*T2-1")),
    (4, 1, 1, 1): _ratf(_tpoly("T1*T2*(T1**3*(T2+1)+T1**2*T2+T1*(T2**3+T2**2+T2)+T2**3)")),
}

# The two entries above that differ from the commonly quoted table: (2,2,2,1)
# has denominator T1^2 T2 - 1 (quoted as T2^2 T1 - 1) and (4,1,1,1) carries an
# extra factor T1 T2.  Both were recovered by solving the partition sums for
# (7,3), (7,10), (7,17) pointwise against the cell engine.
_G37_QUOTED = dict(_G37)
_G37_QUOTED[(2, 2, 2, 1)] = _ratf(_G37[(2, 2, 2, 1)].num, _tpoly("T2**2*T1-1"))
_G37_QUOTED[(4, 1, 1, 1)] = _ratf(_tpoly("T1**3*(T2+1)+T1**2*T2+T1*(T2**3+T2**2+T2)+T2**3"))


def g_formula(r, n, lam):
    """g_{r/n}(lambda) as a RatFunc in (A, T1, T2); raises NoFormula for unknown shapes."""
    lam = lam if isinstance(lam, Diagram) else Diagram(tuple(lam))
    if gcd(r, n) != 1 or not 0 < r < n and not (n == 1):
        raise ValueError(f"need 0 < r < n coprime, got r={r}, n={n}")
    if lam.size != n:
        raise ValueError("partition size must equal n")
    for f in (_g_direct, _g_transposed, _g_dual, _g_dual_transposed):
        v = f(r, n, lam)
        if v is not None:
            return v
    raise NoFormula(f"no formula for g_{r}/{n}{lam.parts}")


def _g_direct(r, n, lam):
    parts = lam.parts
    if n == 1:
        return _ratf(ONE)
    if r == 1 and G1_CONVENTION == "coarm":
        return _ratf(weights(parts).T)
    if r == 1 and G1_CONVENTION == "arm":
        out = LaurentPoly.zero(LOC)
        for a, l, _, _ in box_stats(lam):
            out = out + mono(T1=l, T2=a)
        return _ratf(out)
    if parts == (1,) * n:
        return _ratf(mono(T1=(n - 1) * (r - 1) // 2) * _qint(n, "T1"))
    if parts == (n,):
        return _ratf(mono(T2=(n - 1) * (r - 1) // 2) * _qint(n, "T2"))
    if parts == (2,) + (1,) * (n - 2):
        # ([n-r]_T1 + T2 [r]_{1/T1}) T1^((n-1)(r-1)/2)
        s = _qint(n - r, "T1") + mono(T2=1) * _qint(r, "T1", -1)
        return _ratf(s * mono(T1=(n - 1) * (r - 1) // 2))
    if n >= 4 and parts == (3,) + (1,) * (n - 3):
        return _ratf(_g_hook3(r, n))
    if n == 5 and parts == (2, 2, 1):
        return _G25[r]
    if n == 7 and r == 3 and parts in _G37:
        return (_G37 if G37_VARIANT == "corrected" else _G37_QUOTED)[parts]
    return None


def _g_transposed(r, n, lam):
    v = _g_direct(r, n, lam.conjugate)
    return None if v is None else _swap(v)


def _dual_factor(lam):
    return mono(T1=kappa(lam), T2=kappa(lam.conjugate))


def _g_dual(r, n, lam):
    v = _g_direct(n - r, n, lam) if 0 < n - r < n else None
    return None if v is None else _invert(v) * _ratf(_dual_factor(lam))


def _g_dual_transposed(r, n, lam):
    v = _g_transposed(n - r, n, lam) if 0 < n - r < n else None
    return None if v is None else _invert(v) * _ratf(_dual_factor(lam))


def _vee(x):
    return max(x, 0)


def _g_hook3(r, n, variant=None):
    """The (3, 1^(n-3)) formula.

    In the commonly quoted form the last two terms carry T1^((n-r-1)(n-3)/2) and
    T1^((n-r-1)(n-1)/2 - n + 2); that disagrees with the r = 1 base case
    already at n = 4.  The corrected exponents use (r-1) in place of (n-r-1).
    """
    variant = HOOK3_VARIANT if variant is None else variant
    T2 = mono(T2=1)
    q = lambda m, base=1: _qint(m, "T1", base)
    s = n - r - 1 if variant == "quoted" else r - 1
    return (mono(T1=(r - 1) * (n - 1) // 2) * q(_vee(n - 2 * r))
            + mono(T1=(r - 1) * (n - 3) // 2) * T2 * q(min(n - r, r))
            + mono(T1=s * (n - 3) // 2) * T2 ** 2 * q(min(n - r, r), -1)
            + mono(T1=s * (n - 1) // 2 - n + 2) * T2 ** 3 * q(_vee(2 * r - n), -1))


HOOK3_VARIANT = "corrected"
G1_CONVENTION = "coarm"
G37_VARIANT = "corrected"


def superpoly_from_g(n, k, check_poly=True):
    """spp candidate from sum_lambda g_{r/n} (1-T1)(1-T2) W extA det^m / tangent, k = mn + r."""
    sg = make_semigroup(n, k)
    n, k = sg.n, sg.k
    m, r = divmod(k, n)
    tot = _partition_sum(n, m, lambda lam: g_formula(r, n, lam), True)
    p = _require_poly(tot, f"g-sum for ({n},{k})")
    return from_main_min(n, k, p)


def superpoly_localization(n, k):
    """spp for k = +-1 mod n from the partition sums."""
    sg = make_semigroup(n, k)
    n, k = sg.n, sg.k
    if k % n == 1:
        return from_main_min(n, k, mnp1_full(n, k // n))
    if k % n == n - 1:
        return superpoly_from_g(n, k)
    raise ValueError("localization needs k = +-1 mod n")
