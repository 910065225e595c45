"""The rational function field Q(v, t) in canonical form."""
from fractions import Fraction
from math import gcd as igcd

from .gcd import poly_gcd
from .lpoly import LPoly, ONE as LONE, ZERO as LZERO


def _integerize(p):
    m = p.denominator_lcm()
    return p * m if m != 1 else p, m


class RatFunc:
    """A normalized element num/den of Q(v, t).

    Canonical form: num and den have integer coefficients; den has no factor
    v or t (its minimal exponents are zero), positive leading coefficient in
    degree-lexicographic order, and is coprime to num both as a polynomial
    and in integer content.  Equal values therefore have equal
    representations.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if not isinstance(num, LPoly):
            num = LPoly.const(num)
        if den is None:
            den = LONE
        elif not isinstance(den, LPoly):
            den = LPoly.const(den)
        n, d = ratfunc_normalize_parts(num, den)
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        r = object.__new__(cls)
        r.num = num
        r.den = den
        r._hash = None
        return r

    @classmethod
    def from_lpoly(cls, p):
        """Wrap a Laurent polynomial with integer coefficients."""
        if p.is_integral():
            return cls._raw(p, LONE)
        return cls(p)

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_one(self):
        return self.den is LONE or self.den.is_one() and self.num.is_one()

    def is_laurent(self):
        """True when the value lies in Q[v^+-1, t^+-1]."""
        return self.den.is_constant()

    def is_in_A(self):
        """True when the value lies in Z[v^+-1, t^+-1]."""
        return self.den.is_one()

    def is_monomial_unit(self):
        """True for +-v^a t^b."""
        return self.den.is_one() and self.num.is_monomial() and \
            abs(next(iter(self.num.terms.values()))) == 1

    def is_t_free(self):
        return self.num.is_t_free() and self.den.is_t_free()

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            other = as_ratfunc(other)
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        d1, d2 = self.den, other.den
        if d1.is_one() and d2.is_one():
            return RatFunc._raw(self.num + other.num, LONE)
        if d1 == d2:
            return RatFunc(self.num + other.num, d1)
        return RatFunc(self.num * d2 + other.num * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            other = as_ratfunc(other)
        return self + (-other)

    def __rsub__(self, other):
        return as_ratfunc(other) - self

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            if isinstance(other, LPoly):
                other = RatFunc.from_lpoly(other)
            elif isinstance(other, (int, Fraction)):
                other = as_ratfunc(other)
            else:
                return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        d1, d2 = self.den, other.den
        if d1.is_one() and d2.is_one():
            return RatFunc._raw(self.num * other.num, LONE)
        return RatFunc(self.num * other.num, d1 * d2)

    def __rmul__(self, other):
        return self.__mul__(other)

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            other = as_ratfunc(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return as_ratfunc(other) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        if self.den.is_one() or self.den.is_constant():
            return RatFunc(self.num ** n, self.den ** n)
        # powers of coprime parts stay coprime
        return RatFunc._raw(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, LPoly)):
            return self == as_ratfunc(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- maps -------------------------------------------------------------------

    def bar(self):
        """The involution v -> v^-1, t -> t."""
        if self.den.is_one():
            return RatFunc._raw(self.num.bar(), LONE)
        return RatFunc(self.num.bar(), self.den.bar())

    def subs_t1(self):
        """Substitute t = 1; raises ZeroDivisionError at a pole."""
        d = self.den.subs_t1()
        if d.is_zero():
            raise ZeroDivisionError("pole at t=1")
        return RatFunc(self.num.subs_t1(), d)

    def scale_vars(self, dv=1, dt=1):
        return RatFunc(self.num.scale_vars(dv, dt), self.den.scale_vars(dv, dt))

    def evaluate(self, v, t):
        d = self.den.evaluate(v, t)
        if d == 0:
            raise ZeroDivisionError("division by zero")
        return self.num.evaluate(v, t) / d

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"


def ratfunc_normalize_parts(num, den):
    """Return the canonical (num, den) pair for the value num/den."""
    if den.is_zero():
        raise ZeroDivisionError("division by zero")
    if num.is_zero():
        return LZERO, LONE
    num, m1 = _integerize(num)
    den, m2 = _integerize(den)
    if m1 != 1 or m2 != 1:
        # value is (num/m1)/(den/m2) = num*m2/(den*m1)
        num, den = num * m2, den * m1
    da, db = den.min_exponents()
    if da or db:
        den = den.shift(-da, -db)
        num = num.shift(-da, -db)
    if not den.is_constant():
        na, nb = num.min_exponents()
        g = poly_gcd(num.shift(-na, -nb), den)
        if not g.is_constant():
            num = num.divexact(g)
            den = den.divexact(g)
    _, lc = den.leading()
    if lc < 0:
        num, den = -num, -den
    c = igcd(num.content(), den.content())
    if c != 1:
        num = num.divexact(LPoly.const(c))
        den = den.divexact(LPoly.const(c))
    if den.is_one():
        den = LONE
    return num, den


def ratfunc_normalize(num, den):
    """Build the canonical RatFunc for num/den (both LPoly)."""
    return RatFunc(num, den)


def as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, LPoly):
        return RatFunc.from_lpoly(x)
    if isinstance(x, int):
        return RatFunc._raw(LPoly.const(x), LONE)
    if isinstance(x, Fraction):
        return RatFunc(LPoly.const(x.numerator), LPoly.const(x.denominator))
    raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")


def rsum(values):
    """Sum of RatFuncs, adding numerators that share a denominator first."""
    groups = {}
    for x in values:
        if x.num.is_zero():
            continue
        key = x.den
        if key in groups:
            groups[key] = groups[key] + x.num
        else:
            groups[key] = x.num
    total = ZERO
    for den, num in groups.items():
        if num.is_zero():
            continue
        if den.is_one():
            total = total + RatFunc._raw(num, LONE)
        else:
            total = total + RatFunc(num, den)
    return total


def lincomb(pairs):
    """Sum of coeff * poly for (RatFunc, LPoly) pairs, grouped by denominator."""
    groups = {}
    for coeff, poly in pairs:
        if coeff.num.is_zero() or poly.is_zero():
            continue
        prod = coeff.num * poly
        key = coeff.den
        if key in groups:
            groups[key] = groups[key] + prod
        else:
            groups[key] = prod
    total = ZERO
    for den, num in groups.items():
        if num.is_zero():
            continue
        if den.is_one():
            total = total + RatFunc._raw(num, LONE)
        else:
            total = total + RatFunc(num, den)
    return total


ZERO = RatFunc._raw(LZERO, LONE)
ONE = RatFunc._raw(LONE, LONE)
V = RatFunc._raw(LPoly.monomial(1, 0), LONE)
T = RatFunc._raw(LPoly.monomial(0, 1), LONE)


def vt_monomial(a, b, c=1):
    return RatFunc._raw(LPoly.monomial(a, b, c), LONE) if isinstance(c, int) \
        else RatFunc(LPoly.monomial(a, b, c))


def mono_mul(r, a, b):
    """Multiply r by the monomial v^a t^b (keeps the canonical form)."""
    if a == 0 and b == 0:
        return r
    return RatFunc._raw(r.num.shift(a, b), r.den)
