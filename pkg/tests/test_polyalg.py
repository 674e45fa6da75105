import json
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import assume, given, settings

from torushomfly.polyalg import (AQT, InexactDivision, LaurentPoly, QSeries, RatFunc, aqt,
                                 div_binomial, mul_binomial, poly_gcd, qint,
                                 sum_over_binomial_denominators)

T12 = ("T1", "T2")
ONE = LaurentPoly.one()

exps3 = st.tuples(*[st.integers(-3, 3)] * 3)
polys3 = st.dictionaries(exps3, st.integers(-4, 4), max_size=6).map(LaurentPoly)
exps2 = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys2 = st.dictionaries(exps2, st.integers(-3, 3), max_size=4).map(lambda d: LaurentPoly(d, T12))
nonzero2 = polys2.filter(lambda p: not p.is_zero())


@given(polys3, polys3, polys3)
@settings(max_examples=1000)
def test_ring_laws(p, r, s):
    assert (p * r) * s == p * (r * s)
    assert p * (r + s) == p * r + p * s
    assert p + r == r + p
    assert p - p == LaurentPoly.zero()


def test_product_example():
    p = (ONE + aqt(a=2, t=1)) * (ONE + aqt(a=2, t=3))
    assert p == ONE + aqt(a=2, t=1) + aqt(a=2, t=3) + aqt(a=4, t=4)


def test_substitute_dual():
    p = aqt(q=2, t=2)
    assert p.substitute({"q": aqt(q=-1, t=-1)}) == aqt(q=-2)


@given(polys3)
def test_dual_round_trip(p):
    dual = {"q": aqt(q=-1, t=-1)}
    # q -> 1/(qt), t -> t is an involution
    assert p.substitute(dual).substitute(dual) == p


def test_substitute_rejects_non_monomial():
    with pytest.raises(ValueError):
        aqt(q=1).substitute({"q": ONE + aqt(q=1)})


def test_coefficient_of():
    spp = (ONE + aqt(a=2, t=1)) * (aqt(q=-2) + aqt(q=2, t=2) + aqt(a=2, t=3))
    assert spp.coefficient_of("a", 2) == aqt(q=-2, t=1) + aqt(q=2, t=3) + aqt(t=3)
    assert spp.coefficient_of("a", 0) == aqt(q=-2) + aqt(q=2, t=2)


def test_specializations():
    spp = (ONE + aqt(a=2, t=1)) * (aqt(q=-2) + aqt(q=2, t=2) + aqt(a=2, t=3))
    at_minus_one = spp.substitute({"t": -1})
    assert at_minus_one == (ONE - aqt(a=2)) * (aqt(q=-2) + aqt(q=2) - aqt(a=2))


def test_divide_exact_examples():
    assert (ONE - aqt(q=4)).divide_exact(ONE - aqt(q=2)) == ONE + aqt(q=2)
    spp = (ONE + aqt(a=2, t=1)) * (aqt(q=-2) + aqt(q=2, t=2) + aqt(a=2, t=3))
    assert spp.divide_exact(ONE + aqt(a=2, t=1)) == aqt(q=-2) + aqt(q=2, t=2) + aqt(a=2, t=3)
    with pytest.raises(InexactDivision) as ei:
        (ONE + aqt(q=1)).divide_exact(ONE - aqt(q=1))
    assert ei.value.remainder is not None


@given(polys3, polys3.filter(lambda p: not p.is_zero()))
def test_divide_round_trip(x, d):
    assert (x * d).divide_exact(d) == x


@given(polys3, exps3.filter(any))
def test_binomial_helpers(p, m):
    q = mul_binomial(p, m)
    assert q == p * (ONE - LaurentPoly.monomial(m))
    assert div_binomial(q, m) == p


def test_div_binomial_inexact():
    with pytest.raises(InexactDivision):
        div_binomial(ONE, (0, 1, 0))


def test_text_and_json():
    p = ONE + aqt(a=2, t=1) + aqt(a=2, q=-2, t=1)
    assert p.to_text() == "1 + a^2*q^-2*t + a^2*t"
    assert aqt(a=2, q=-2, t=3).to_latex() == "a^{2}q^{-2}t^{3}"
    data = json.loads(p.to_json())
    assert data == sorted(data)
    assert all(isinstance(row[3], str) for row in data)
    assert LaurentPoly.from_json(p.to_json()) == p


@given(polys3)
def test_json_round_trip(p):
    assert LaurentPoly.from_json_list(p.to_json_list()) == p


def test_big_coefficients():
    p = LaurentPoly({(0, 0, 0): 10 ** 40})
    assert (p * p).terms[(0, 0, 0)] == 10 ** 80
    assert LaurentPoly.from_json(p.to_json()) == p


# ---------------------------------------------------------------- gcd and RatFunc


def T(i=0, j=0, c=1):
    return LaurentPoly.monomial((i, j), c, T12)


ONE2 = LaurentPoly.one(T12)


def test_ratfunc_examples():
    r = RatFunc(ONE2 - T(2), ONE2 - T(1))
    assert r.is_polynomial() and r.as_poly() == ONE2 + T(1)
    s = RatFunc(ONE2, ONE2 - T(1)) + RatFunc(ONE2, ONE2 - T(0, 1))
    s = s * RatFunc((ONE2 - T(1)) * (ONE2 - T(0, 1)))
    assert s.is_polynomial() and s.as_poly() == 2 * ONE2 - T(1) - T(0, 1)


@given(nonzero2, nonzero2, nonzero2)
def test_gcd_divides(a, b, c):
    g = poly_gcd(a * c, b * c)
    (a * c).divide_exact(g)
    (b * c).divide_exact(g)
    # c divides the gcd
    g.divide_exact(c)


@given(polys2, nonzero2, nonzero2)
def test_ratfunc_reduced(a, b, c):
    r = RatFunc(a * c, b * c)
    g = poly_gcd(r.num, r.den) if not r.num.is_zero() else ONE2
    assert g.is_monomial()
    lead = r.den.terms[max(r.den.terms)]
    assert lead > 0
    assert r == RatFunc(a, b)


def _point(rng):
    return {"T1": Fraction(rng.randint(2, 9), rng.randint(1, 9)),
            "T2": Fraction(rng.randint(-9, -2), rng.randint(1, 9))}


def test_ratfunc_equality_by_evaluation(rng):
    pool = [ONE2 + T(1), ONE2 - T(0, 1), T(1, 1) + T(2), ONE2 + T(1) + T(0, 2)]
    for _ in range(30):
        a, b, c, d = (rng.choice(pool) for _ in range(4))
        x = RatFunc(a, b) + RatFunc(c, d)
        y = RatFunc(a * d + c * b, b * d)
        assert x == y
        for _ in range(20):
            p = _point(rng)
            if (b * d).evaluate(p) == 0:
                continue
            assert x.evaluate(p) == a.evaluate(p) / b.evaluate(p) + c.evaluate(p) / d.evaluate(p)


def test_ratfunc_division_and_zero():
    r = RatFunc(ONE2 + T(1), ONE2 - T(1))
    assert r / r == RatFunc(ONE2)
    with pytest.raises(ZeroDivisionError):
        RatFunc(ONE2, LaurentPoly.zero(T12))


def test_binomial_sum():
    # 1/(1-T1) + 1/(1-T2) over a common denominator
    items = [(ONE2, [(1, 0)]), (ONE2, [(0, 1)])]
    r = sum_over_binomial_denominators(items, T12)
    assert r == RatFunc(2 * ONE2 - T(1) - T(0, 1), (ONE2 - T(1)) * (ONE2 - T(0, 1)))
    # negative exponents are turned around: 1/(1-T1^-1) = -T1/(1-T1)
    r = sum_over_binomial_denominators([(ONE2, [(-1, 0)]), (ONE2, [(1, 0)])], T12)
    assert r.is_polynomial() and r.as_poly() == ONE2


# ---------------------------------------------------------------- QSeries


def test_qseries_order_bookkeeping():
    a = QSeries(ONE + aqt(q=2), 4)
    b = QSeries(aqt(q=2), 6)
    prod = a * b
    assert prod.order == 6
    assert (a + b).order == 4


def test_geometric():
    g = QSeries.geometric(aqt(q=2), 7)
    assert g.poly == ONE + aqt(q=2) + aqt(q=4) + aqt(q=6)
    with pytest.raises(ValueError):
        QSeries.geometric(aqt(t=1), 5)


def test_qint():
    assert qint(3) == ONE + aqt(q=1) + aqt(q=2)
    assert qint(0).is_zero()
    assert qint(2, "q", AQT, -1) == ONE + aqt(q=-1)
