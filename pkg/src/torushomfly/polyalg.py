"""Exact sparse Laurent polynomials, truncated q-series and rational functions.

Polynomials are dicts from integer exponent tuples to Python ints.  Every
polynomial carries the names of its variables; mixing polynomials over
different variable tuples is an error.
"""
from __future__ import annotations

import heapq
import json
from fractions import Fraction
from math import gcd as igcd

AQT = ("a", "q", "t")


class InexactDivision(ArithmeticError):
    """Raised when a division is not exact; ``remainder`` holds what was left."""

    def __init__(self, msg, remainder=None):
        super().__init__(msg)
        self.remainder = remainder


def _clean(terms):
    return {e: c for e, c in terms.items() if c}


def _add_into(acc, e, c):
    v = acc.get(e, 0) + c
    if v:
        acc[e] = v
    else:
        acc.pop(e, None)


class LaurentPoly:
    """Sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms=None, vars=AQT):
        self.vars = tuple(vars)
        nv = len(self.vars)
        t = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nv:
                    raise ValueError(f"exponent {e} does not match variables {self.vars}")
                if c:
                    _add_into(t, e, int(c))
        self.terms = t
        self._hash = None

    @classmethod
    def _raw(cls, terms, vars):
        p = cls.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    # constructors
    @classmethod
    def const(cls, c, vars=AQT):
        return cls._raw({(0,) * len(vars): c} if c else {}, tuple(vars))

    @classmethod
    def zero(cls, vars=AQT):
        return cls._raw({}, tuple(vars))

    @classmethod
    def one(cls, vars=AQT):
        return cls.const(1, vars)

    @classmethod
    def monomial(cls, exps, coeff=1, vars=AQT):
        return cls._raw({tuple(exps): coeff} if coeff else {}, tuple(vars))

    @classmethod
    def var(cls, name, vars=AQT):
        vars = tuple(vars)
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls._raw({tuple(e): 1}, vars)

    @classmethod
    def mono(cls, vars=AQT, coeff=1, **exps):
        """``mono(a=2, t=1)`` builds a^2*t."""
        vars = tuple(vars)
        e = [0] * len(vars)
        for name, v in exps.items():
            e[vars.index(name)] = v
        return cls.monomial(e, coeff, vars)

    # basic protocol
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        t = dict(self.terms)
        for e, c in o.terms.items():
            _add_into(t, e, c)
        return LaurentPoly._raw(t, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if len(self.terms) < len(o.terms):
            a, b = self.terms, o.terms
        else:
            a, b = o.terms, self.terms
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return LaurentPoly._raw(out, self.vars)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_monomial() or abs(next(iter(self.terms.values()))) != 1:
                raise ValueError("negative power of a non-unit")
            (e, c), = self.terms.items()
            return LaurentPoly.monomial(tuple(n * x for x in e), c ** (-n), self.vars)
        result = LaurentPoly.one(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.vars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r}, vars={self.vars})"

    def __str__(self):
        return self.to_text()

    # queries
    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def is_unit(self):
        return self.is_monomial() and abs(next(iter(self.terms.values()))) == 1

    def degree_range(self, var):
        if not self.terms:
            return None
        i = self.vars.index(var)
        es = [e[i] for e in self.terms]
        return min(es), max(es)

    def min_exponents(self):
        return tuple(min(e[i] for e in self.terms) for i in range(len(self.vars)))

    def shift(self, exps):
        return LaurentPoly._raw(
            {tuple(x + y for x, y in zip(e, exps)): c for e, c in self.terms.items()}, self.vars
        )

    def coefficient_of(self, var, exp):
        """Coefficient of var^exp, still written over the same variables."""
        i = self.vars.index(var)
        return LaurentPoly._raw(
            {e[:i] + (0,) + e[i + 1:]: c for e, c in self.terms.items() if e[i] == exp}, self.vars
        )

    def coefficients(self, var):
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            out.setdefault(e[i], {})[e[:i] + (0,) + e[i + 1:]] = c
        return {d: LaurentPoly._raw(t, self.vars) for d, t in sorted(out.items())}

    def truncate(self, var, below):
        """Drop every term whose exponent in ``var`` is >= ``below``."""
        i = self.vars.index(var)
        return LaurentPoly._raw({e: c for e, c in self.terms.items() if e[i] < below}, self.vars)

    def evaluate(self, point):
        """Evaluate at a point given as {name: number}; returns a Fraction."""
        vals = [Fraction(point[v]) for v in self.vars]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for v, x in zip(vals, e):
                if x:
                    term *= v ** x
            total += term
        return total

    # substitution
    def substitute(self, images, new_vars=None):
        """Substitute every variable by a monomial.

        ``images`` maps a variable name to a monomial LaurentPoly over
        ``new_vars`` (default: the same variables) or to an int.  Variables
        missing from ``images`` map to themselves.  Non-monomial images are
        rejected; negative powers need unit coefficients.
        """
        new_vars = tuple(new_vars) if new_vars is not None else self.vars
        maps = []
        for name in self.vars:
            img = images.get(name)
            if img is None:
                if name not in new_vars:
                    raise ValueError(f"no image for variable {name}")
                img = LaurentPoly.var(name, new_vars)
            elif isinstance(img, int):
                img = LaurentPoly.const(img, new_vars)
            if not isinstance(img, LaurentPoly) or img.vars != new_vars:
                raise ValueError(f"image of {name} must be a LaurentPoly over {new_vars}")
            if not img.is_monomial():
                raise ValueError(f"image of {name} is not a monomial: {img}")
            (ie, ic), = img.terms.items()
            maps.append((ie, ic))
        out = {}
        nv = len(new_vars)
        for e, c in self.terms.items():
            ne = [0] * nv
            coeff = Fraction(c)
            for (ie, ic), x in zip(maps, e):
                if x:
                    for j in range(nv):
                        ne[j] += x * ie[j]
                    if ic != 1:
                        if x < 0 and abs(ic) != 1:
                            raise ValueError("negative power of a non-unit coefficient")
                        coeff *= Fraction(ic) ** x
            _add_into(out, tuple(ne), int(coeff))
        return LaurentPoly._raw(out, new_vars)

    def substitute_monomial(self, var, image):
        return self.substitute({var: image})

    # division
    def divide_exact(self, d):
        """Exact quotient self / d in the Laurent ring, or InexactDivision."""
        d = self._coerce(d)
        if not d.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return LaurentPoly.zero(self.vars)
        if d.is_monomial():
            (de, dc), = d.terms.items()
            out = {}
            for e, c in self.terms.items():
                if c % dc:
                    raise InexactDivision("coefficient not divisible", self)
                out[tuple(x - y for x, y in zip(e, de))] = c // dc
            return LaurentPoly._raw(out, self.vars)
        dlead = max(d.terms)
        dtrail = min(d.terms)
        dlc = d.terms[dlead]
        floor = tuple(x - y for x, y in zip(min(self.terms), dtrail))
        # every quotient exponent lies in the box [min p - min d, max p - max d]
        nv = len(self.vars)
        pmin, pmax = self.min_exponents(), tuple(max(e[i] for e in self.terms) for i in range(nv))
        dmin = d.min_exponents()
        dmax = tuple(max(e[i] for e in d.terms) for i in range(nv))
        lo = tuple(a - b for a, b in zip(pmin, dmin))
        hi = tuple(a - b for a, b in zip(pmax, dmax))
        rem = dict(self.terms)
        heap = [tuple(-x for x in e) for e in rem]
        heapq.heapify(heap)
        quot = {}
        others = [(e, c) for e, c in d.terms.items() if e != dlead]
        while rem:
            key = tuple(-x for x in heapq.heappop(heap))
            c = rem.get(key)
            if not c:
                continue
            qe = tuple(x - y for x, y in zip(key, dlead))
            if qe < floor or c % dlc or any(not (l <= x <= h) for l, x, h in zip(lo, qe, hi)):
                raise InexactDivision("division is not exact", LaurentPoly._raw(rem, self.vars))
            qc = c // dlc
            quot[qe] = qc
            del rem[key]
            for e, dc in others:
                ne = tuple(x + y for x, y in zip(qe, e))
                old = rem.get(ne)
                v = (old or 0) - qc * dc
                if v:
                    rem[ne] = v
                    if old is None:
                        heapq.heappush(heap, tuple(-x for x in ne))
                elif old is not None:
                    del rem[ne]
        return LaurentPoly._raw(quot, self.vars)

    # rendering
    def _order_key(self):
        if self.vars == AQT:
            return lambda e: (e[0], e[2], e[1])
        return lambda e: tuple(-x for x in e)

    def sorted_terms(self):
        key = self._order_key()
        return sorted(self.terms.items(), key=lambda kv: key(kv[0]))

    def _mono_text(self, e, latex=False):
        parts = []
        for name, x in zip(self.vars, e):
            if x == 0:
                continue
            if x == 1:
                parts.append(name)
            elif latex:
                parts.append(f"{name}^{{{x}}}")
            else:
                parts.append(f"{name}^{x}")
        return ("" if latex else "*").join(parts)

    def _render(self, latex):
        if not self.terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            m = self._mono_text(e, latex)
            a = abs(c)
            if not m:
                body = str(a)
            elif a == 1:
                body = m
            else:
                body = f"{a}{'' if latex else '*'}{m}"
            if i == 0:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append((" + " if c > 0 else " - ") + body)
        return "".join(out)

    def to_text(self):
        return self._render(False)

    def to_latex(self):
        return self._render(True)

    def to_json_list(self):
        return [list(e) + [str(c)] for e, c in sorted(self.terms.items())]

    def to_json(self):
        return json.dumps(self.to_json_list(), separators=(",", ":"))

    @classmethod
    def from_json_list(cls, data, vars=AQT):
        return cls({tuple(int(x) for x in row[:-1]): int(row[-1]) for row in data}, vars)

    @classmethod
    def from_json(cls, s, vars=AQT):
        return cls.from_json_list(json.loads(s), vars)


# common shorthands over (a, q, t)
def aqt(a=0, q=0, t=0, c=1):
    return LaurentPoly.monomial((a, q, t), c, AQT)


# ---------------------------------------------------------------- gcd


def _mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            _add_into(out, e, c1 * c2)
    return out


def _as_uni(f):
    """Split a polynomial in (x0, rest) into {deg_x0: poly(rest)}."""
    out = {}
    for e, c in f.items():
        out.setdefault(e[0], {})[e[1:]] = c
    return out


def _from_uni(u):
    out = {}
    for d, p in u.items():
        for e, c in p.items():
            out[(d,) + e] = c
    return out


def _divexact_plain(f, g, nv):
    q = LaurentPoly._raw(f, ("x",) * nv).divide_exact(LaurentPoly._raw(g, ("x",) * nv))
    return q.terms


def _content(u, nv):
    g = None
    for p in u.values():
        g = p if g is None else _gcd_poly(g, p, nv)
        if len(g) == 1 and abs(next(iter(g.values()))) == 1 and all(x == 0 for x in next(iter(g))):
            break
    return g


def _prem(a, b, nv):
    """Pseudo-remainder of univariate polys with coefficients in Z[rest]."""
    db = max(b)
    lcb = b[db]
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        lcr = r[dr]
        nr = {}
        for d, p in r.items():
            if d != dr:
                nr[d] = _mul(p, lcb)
        for d, p in b.items():
            if d == db:
                continue
            nd = d + dr - db
            t = _mul(p, lcr)
            acc = nr.get(nd, {})
            for e, c in t.items():
                _add_into(acc, e, -c)
            nr[nd] = acc
        r = {d: p for d, p in nr.items() if p}
    return r


def _gcd_poly(f, g, nv):
    """gcd of two polynomials with nonnegative exponents over Z."""
    if not f:
        return _normalize_sign(g)
    if not g:
        return _normalize_sign(f)
    if nv == 0:
        return {(): igcd(f[()], g[()])}
    fu, gu = _as_uni(f), _as_uni(g)
    if len(fu) == 1 and len(gu) == 1:
        (df, pf), = fu.items()
        (dg, pg), = gu.items()
        h = _gcd_poly(pf, pg, nv - 1)
        return {(min(df, dg),) + e: c for e, c in h.items()}
    cf, cg = _content(fu, nv - 1), _content(gu, nv - 1)
    c = _gcd_poly(cf, cg, nv - 1)
    a = {d: _divexact_plain(p, cf, nv - 1) for d, p in fu.items()}
    b = {d: _divexact_plain(p, cg, nv - 1) for d, p in gu.items()}
    # factor out powers of x0
    ma, mb = min(a), min(b)
    shift = min(ma, mb)
    a = {d - ma: p for d, p in a.items()}
    b = {d - mb: p for d, p in b.items()}
    if max(a) < max(b):
        a, b = b, a
    while b and max(b) > 0:
        r = _prem(a, b, nv - 1)
        a = b
        if not r:
            b = {}
            break
        cr = _content(r, nv - 1)
        b = {d: _divexact_plain(p, cr, nv - 1) for d, p in r.items()}
    if b:  # constant in x0: primitive part is 1
        a = {0: {(0,) * (nv - 1): 1}}
    ca = _content(a, nv - 1)
    a = {d + shift: _mul(_divexact_plain(p, ca, nv - 1), c) for d, p in a.items()}
    return _normalize_sign(_from_uni(a))


def _normalize_sign(f):
    if f and f[max(f)] < 0:
        return {e: -c for e, c in f.items()}
    return dict(f)


def poly_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """gcd in the Laurent ring, normalized to be free of monomial factors."""
    if f.vars != g.vars:
        raise ValueError("variable mismatch")
    nv = len(f.vars)
    if f.is_zero():
        return g if g.is_zero() else g.shift(tuple(-x for x in g.min_exponents()))
    if g.is_zero():
        return f.shift(tuple(-x for x in f.min_exponents()))
    fs = f.shift(tuple(-x for x in f.min_exponents())).terms
    gs = g.shift(tuple(-x for x in g.min_exponents())).terms
    h = _gcd_poly(fs, gs, nv)
    hp = LaurentPoly._raw(h, f.vars)
    return hp.shift(tuple(-x for x in hp.min_exponents()))


# ---------------------------------------------------------------- RatFunc


class RatFunc:
    """Quotient of Laurent polynomials, kept reduced.

    The denominator is normalized to have no monomial factor and a positive
    leading coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        if isinstance(num, int):
            if den is None:
                raise ValueError("integer numerator needs a polynomial denominator or use const()")
            num = LaurentPoly.const(num, den.vars)
        if den is None:
            den = LaurentPoly.one(num.vars)
        elif isinstance(den, int):
            den = LaurentPoly.const(den, num.vars)
        if num.vars != den.vars:
            raise ValueError("variable mismatch")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = num, LaurentPoly.one(num.vars)
            return
        if reduce and not den.is_monomial():
            g = poly_gcd(num, den)
            if not (g.is_monomial() and g == LaurentPoly.one(g.vars)):
                num = num.divide_exact(g)
                den = den.divide_exact(g)
        m = den.min_exponents()
        neg = tuple(-x for x in m)
        num, den = num.shift(neg), den.shift(neg)
        if den.terms[max(den.terms)] < 0:
            num, den = -num, -den
        self.num, self.den = num, den

    @property
    def vars(self):
        return self.num.vars

    @classmethod
    def const(cls, c, vars):
        return cls(LaurentPoly.const(c, vars))

    def _coerce(self, o):
        if isinstance(o, RatFunc):
            if o.vars != self.vars:
                raise ValueError("variable mismatch")
            return o
        if isinstance(o, LaurentPoly):
            return RatFunc(o)
        if isinstance(o, int):
            return RatFunc.const(o, self.vars)
        return NotImplemented

    def __add__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __pow__(self, n):
        if n >= 0:
            return RatFunc(self.num ** n, self.den ** n)
        return RatFunc(self.den ** (-n), self.num ** (-n))

    def __eq__(self, o):
        o = self._coerce(o) if not isinstance(o, RatFunc) else o
        if o is NotImplemented:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    def __hash__(self):
        return hash((self.num, self.den))

    def is_polynomial(self):
        return self.den.is_unit()

    def as_poly(self):
        if not self.is_polynomial():
            raise InexactDivision("not a Laurent polynomial", self.num)
        return self.num.divide_exact(self.den)

    def substitute(self, images, new_vars=None, reduce=True):
        """Monomial substitution; pass reduce=False for an automorphism (keeps lowest terms)."""
        return RatFunc(self.num.substitute(images, new_vars), self.den.substitute(images, new_vars),
                       reduce=reduce)

    def evaluate(self, point):
        return self.num.evaluate(point) / self.den.evaluate(point)

    def __repr__(self):
        return f"RatFunc(({self.num.to_text()}) / ({self.den.to_text()}))"


# ---------------------------------------------------------------- QSeries


class QSeries:
    """Power series in q with Laurent-polynomial coefficients, known mod q^order."""

    __slots__ = ("poly", "order")

    def __init__(self, poly, order):
        self.poly = poly.truncate("q", order)
        self.order = order

    def _check(self, o):
        if isinstance(o, QSeries):
            return o
        if isinstance(o, (LaurentPoly, int)):
            p = o if isinstance(o, LaurentPoly) else LaurentPoly.const(o, self.poly.vars)
            return QSeries(p, self.order)
        return NotImplemented

    def __add__(self, o):
        o = self._check(o)
        if o is NotImplemented:
            return o
        return QSeries(self.poly + o.poly, min(self.order, o.order))

    __radd__ = __add__

    def __sub__(self, o):
        o = self._check(o)
        if o is NotImplemented:
            return o
        return QSeries(self.poly - o.poly, min(self.order, o.order))

    def __mul__(self, o):
        o = self._check(o)
        if o is NotImplemented:
            return o
        lo1 = self.poly.degree_range("q")
        lo2 = o.poly.degree_range("q")
        lo1 = lo1[0] if lo1 else 0
        lo2 = lo2[0] if lo2 else 0
        order = min(self.order + lo2, o.order + lo1)
        return QSeries(self.poly * o.poly, order)

    __rmul__ = __mul__

    @classmethod
    def geometric(cls, ratio: LaurentPoly, order):
        """1/(1 - ratio) for a ratio with positive q-degree."""
        lo = ratio.degree_range("q")[0]
        if lo <= 0:
            raise ValueError("ratio must have positive q-degree")
        total = LaurentPoly.one(ratio.vars)
        power = LaurentPoly.one(ratio.vars)
        for _ in range(order // lo + 1):
            power = (power * ratio).truncate("q", order)
            if power.is_zero():
                break
            total = total + power
        return cls(total, order)

    def agrees_with(self, other, order=None):
        order = min(self.order, other.order) if order is None else order
        return (self.poly - other.poly).truncate("q", order).is_zero()

    def __repr__(self):
        return f"QSeries({self.poly.to_text()} + O(q^{self.order}))"


# ---------------------------------------------------------------- helpers


def qint(n, var="q", vars=AQT, base_exp=1):
    """[n]_x = 1 + x + ... + x^(n-1) with x = var^base_exp (0 for n <= 0)."""
    i = tuple(vars).index(var)
    out = {}
    for j in range(max(n, 0)):
        e = [0] * len(vars)
        e[i] = j * base_exp
        out[tuple(e)] = 1
    return LaurentPoly._raw(out, tuple(vars))


def mul_binomial(p: LaurentPoly, m):
    """p * (1 - x^m)."""
    out = dict(p.terms)
    for e, c in p.terms.items():
        f = tuple(a + b for a, b in zip(e, m))
        v = out.get(f, 0) - c
        if v:
            out[f] = v
        else:
            out.pop(f, None)
    return LaurentPoly._raw(out, p.vars)


def div_binomial(p: LaurentPoly, m):
    """Exact p / (1 - x^m) for m != 0, or InexactDivision.

    Along every line e + j*m the quotient is a running sum of the
    coefficients of p; the division is exact iff each running sum closes.
    """
    i0 = next(i for i, x in enumerate(m) if x)
    if m[i0] < 0:
        # 1 - x^m = -x^m (1 - x^-m)
        neg = tuple(-x for x in m)
        return div_binomial(p, neg).shift(neg) * -1
    lines = {}
    for e, c in p.terms.items():
        j = e[i0] // m[i0]
        base = tuple(a - j * b for a, b in zip(e, m))
        lines.setdefault(base, []).append((j, c))
    out = {}
    for base, pts in lines.items():
        pts.sort()
        run = 0
        for idx, (j, c) in enumerate(pts):
            run += c
            nxt = pts[idx + 1][0] if idx + 1 < len(pts) else j + 1
            if run and nxt == j + 1 and idx + 1 == len(pts):
                raise InexactDivision("binomial division is not exact", p)
            if run:
                for jj in range(j, nxt):
                    out[tuple(a + jj * b for a, b in zip(base, m))] = run
    return LaurentPoly._raw(out, p.vars)


def sum_over_binomial_denominators(summands, vars):
    """Sum of N_i / prod_j (1 - m_ij) computed over a common denominator.

    ``summands`` is an iterable of (numerator LaurentPoly, list of exponent
    tuples m) where each m stands for the factor (1 - x^m), plus optionally a
    third entry: a list of extra polynomial denominator factors.  Returns a
    RatFunc.  Exponent tuples are made lexicographically positive first.
    """
    nv = len(vars)
    items = []
    lcm = {}
    for entry in summands:
        num, facs = entry[0], entry[1]
        extra = entry[2] if len(entry) > 2 else []
        counts = {}
        for m in facs:
            m = tuple(m)
            if m < (0,) * nv:
                # 1 - x^m = -x^m (1 - x^-m)
                num = num.shift(tuple(-x for x in m)) * -1
                m = tuple(-x for x in m)
            key = ("b", m)
            counts[key] = counts.get(key, 0) + 1
        for f in extra:
            f = f.shift(tuple(-x for x in f.min_exponents()))
            if f.terms[max(f.terms)] < 0:
                f, num = -f, -num
            key = ("p", f)
            counts[key] = counts.get(key, 0) + 1
        items.append((num, counts))
        for key, c in counts.items():
            if lcm.get(key, 0) < c:
                lcm[key] = c

    def factor_poly(key):
        if key[0] == "b":
            return LaurentPoly._raw({(0,) * nv: 1, key[1]: -1}, vars)
        return key[1]

    total = LaurentPoly.zero(vars)
    for num, counts in items:
        term = num
        for key, c in lcm.items():
            for _ in range(c - counts.get(key, 0)):
                term = mul_binomial(term, key[1]) if key[0] == "b" else term * key[1]
        total = total + term
    # cancel factor by factor, binomials first
    remaining = []
    for key, c in sorted(lcm.items(), key=lambda kv: kv[0][0]):
        f = factor_poly(key)
        for _ in range(c):
            try:
                total = div_binomial(total, key[1]) if key[0] == "b" else total.divide_exact(f)
            except InexactDivision:
                remaining.append(f)
    den = LaurentPoly.one(vars)
    for f in remaining:
        den = den * f
    # a leftover factor means the sum is not a polynomial; skip the costly gcd
    return RatFunc(total, den, reduce=not remaining)
