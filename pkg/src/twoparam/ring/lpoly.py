"""Sparse Laurent polynomials in the two variables v and t.

A polynomial is stored as a dict mapping exponent pairs ``(a, b)`` (the
powers of v and t) to nonzero rational coefficients.  Coefficients are plain
Python ints where possible and :class:`fractions.Fraction` otherwise.
"""
from fractions import Fraction
from math import gcd


def _clean(coeff):
    if type(coeff) is Fraction and coeff.denominator == 1:
        return coeff.numerator
    return coeff


def _all_int(terms):
    for c in terms.values():
        if type(c) is not int:
            return False
    return True


class LPoly:
    """An element of Q[v, v^-1, t, t^-1].

    Instances are treated as immutable; every operation returns a new object.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            self.terms = {}
        else:
            self.terms = {k: _clean(c) for k, c in terms.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # caller guarantees no zero coefficients
        p = object.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c):
        c = _clean(c)
        return cls._raw({(0, 0): c} if c != 0 else {})

    @classmethod
    def monomial(cls, a=0, b=0, c=1):
        c = _clean(c)
        return cls._raw({(a, b): c} if c != 0 else {})

    # -- predicates -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return len(self.terms) == 1 and self.terms.get((0, 0)) == 1

    def is_monomial(self):
        return len(self.terms) == 1

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def is_t_free(self):
        return all(b == 0 for (_, b) in self.terms)

    def is_integral(self):
        return _all_int(self.terms)

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LPoly):
            other = LPoly.const(other)
        if len(self.terms) < len(other.terms):
            small, big = self.terms, other.terms
        else:
            small, big = other.terms, self.terms
        res = dict(big)
        for k, c in small.items():
            s = res.get(k, 0) + c
            if s == 0:
                res.pop(k, None)
            else:
                res[k] = s if type(s) is int else _clean(s)
        return LPoly._raw(res)

    __radd__ = __add__

    def __neg__(self):
        return LPoly._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LPoly):
            other = LPoly.const(other)
        res = dict(self.terms)
        for k, c in other.terms.items():
            s = res.get(k, 0) - c
            if s == 0:
                res.pop(k, None)
            else:
                res[k] = s if type(s) is int else _clean(s)
        return LPoly._raw(res)

    def __rsub__(self, other):
        return LPoly.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, LPoly):
            other = _clean(other)
            if other == 0:
                return LPoly._raw({})
            return LPoly._raw({k: _clean(c * other) for k, c in self.terms.items()})
        st, ot = self.terms, other.terms
        integral = _all_int(st) and _all_int(ot)
        if len(ot) == 1:
            ((a2, b2), c2), = ot.items()
            if integral:
                return LPoly._raw({(a + a2, b + b2): c * c2 for (a, b), c in st.items()})
            return LPoly._raw({(a + a2, b + b2): _clean(c * c2) for (a, b), c in st.items()})
        if len(st) == 1:
            ((a1, b1), c1), = st.items()
            if integral:
                return LPoly._raw({(a + a1, b + b1): c * c1 for (a, b), c in ot.items()})
            return LPoly._raw({(a + a1, b + b1): _clean(c * c1) for (a, b), c in ot.items()})
        res = {}
        get = res.get
        for (a1, b1), c1 in st.items():
            for (a2, b2), c2 in ot.items():
                k = (a1 + a2, b1 + b2)
                res[k] = get(k, 0) + c1 * c2
        if integral:
            return LPoly._raw({k: c for k, c in res.items() if c})
        return LPoly._raw({k: _clean(c) for k, c in res.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            ((a, b), c), = self.terms.items()
            return LPoly.monomial(a * n, b * n, Fraction(c) ** n)
        result = LPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, da, db):
        """Multiply by the monomial v^da t^db."""
        if da == 0 and db == 0:
            return self
        return LPoly._raw({(a + da, b + db): c for (a, b), c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, LPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == LPoly.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- structure -------------------------------------------------------

    def min_exponents(self):
        if not self.terms:
            return (0, 0)
        return (min(a for a, _ in self.terms), min(b for _, b in self.terms))

    def max_exponents(self):
        if not self.terms:
            return (0, 0)
        return (max(a for a, _ in self.terms), max(b for _, b in self.terms))

    def leading(self):
        """Leading (exponent, coefficient) for degree-lex order, v before t."""
        k = max(self.terms, key=lambda e: (e[0] + e[1], e[0]))
        return k, self.terms[k]

    def lex_leading(self):
        k = max(self.terms)
        return k, self.terms[k]

    def content(self):
        """Positive gcd of the (integer) coefficients."""
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
            if g == 1:
                break
        return g

    def denominator_lcm(self):
        m = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                d = c.denominator
                m = m * d // gcd(m, d)
        return m

    def coefficient(self, a, b=0):
        return self.terms.get((a, b), 0)

    def bar(self):
        """Apply v -> v^-1."""
        return LPoly._raw({(-a, b): c for (a, b), c in self.terms.items()})

    def subs_t1(self):
        res = {}
        for (a, _), c in self.terms.items():
            res[(a, 0)] = res.get((a, 0), 0) + c
        return LPoly(res)

    def subs_v1(self):
        res = {}
        for (_, b), c in self.terms.items():
            res[(0, b)] = res.get((0, b), 0) + c
        return LPoly(res)

    def scale_vars(self, dv=1, dt=1):
        """Substitute v -> v^dv and t -> t^dt."""
        return LPoly._raw({(a * dv, b * dt): c for (a, b), c in self.terms.items()})

    def evaluate(self, v, t):
        total = 0
        for (a, b), c in self.terms.items():
            total += c * Fraction(v) ** a * Fraction(t) ** b
        return total

    def evaluate_mod(self, v, t, p):
        total = 0
        for (a, b), c in self.terms.items():
            if isinstance(c, Fraction):
                c = c.numerator * pow(c.denominator, -1, p)
            total += c * pow(v, a, p) * pow(t, b, p)
        return total % p

    # -- exact division ---------------------------------------------------

    def divexact(self, other):
        """Exact quotient self / other in the Laurent ring.

        Raises ``ArithmeticError`` if ``other`` does not divide ``self``.
        """
        if not other.terms:
            raise ZeroDivisionError("division by zero")
        if not self.terms:
            return self
        ot = other.terms
        if len(ot) == 1:
            ((a2, b2), c2), = ot.items()
            if isinstance(c2, int) and all(isinstance(c, int) and c % c2 == 0
                                           for c in self.terms.values()):
                return LPoly._raw({(a - a2, b - b2): c // c2 for (a, b), c in self.terms.items()})
            return LPoly._raw({(a - a2, b - b2): _clean(Fraction(c) / c2)
                               for (a, b), c in self.terms.items()})
        # exact quotients have exponents bounded below coordinatewise
        ma, mb = self.min_exponents()
        oa, ob = other.min_exponents()
        floor_a, floor_b = ma - oa, mb - ob
        lt_o, lc_o = max(ot.items())
        rem = dict(self.terms)
        quot = {}
        integral = type(lc_o) is int and _all_int(ot)
        oitems = list(ot.items())
        while rem:
            lt_r = max(rem)
            lc_r = rem[lt_r]
            q_exp = (lt_r[0] - lt_o[0], lt_r[1] - lt_o[1])
            if q_exp[0] < floor_a or q_exp[1] < floor_b:
                raise ArithmeticError("inexact Laurent polynomial division")
            if integral and type(lc_r) is int and lc_r % lc_o == 0:
                q_c = lc_r // lc_o
            else:
                q_c = _clean(Fraction(lc_r) / lc_o)
                integral = False
            quot[q_exp] = q_c
            qa, qb = q_exp
            for (a, b), c in oitems:
                k = (a + qa, b + qb)
                s = rem.get(k, 0) - q_c * c
                if s == 0:
                    rem.pop(k, None)
                else:
                    rem[k] = s if type(s) is int else _clean(s)
        return LPoly._raw(quot)

    # -- printing -----------------------------------------------------------

    def sorted_terms(self):
        """Terms in print order: descending in v, then descending in t."""
        return sorted(self.terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for idx, ((a, b), c) in enumerate(self.sorted_terms()):
            neg = c < 0
            mag = -c if neg else c
            factors = []
            if a:
                factors.append("v" if a == 1 else f"v^{a}")
            if b:
                factors.append("t" if b == 1 else f"t^{b}")
            if mag != 1 or not factors:
                if isinstance(mag, Fraction):
                    cs = f"{mag.numerator}/{mag.denominator}"
                    if factors:
                        cs = f"({cs})"
                else:
                    cs = str(mag)
                factors.insert(0, cs)
            body = "*".join(factors)
            if idx == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"LPoly({self})"


ZERO = LPoly()
ONE = LPoly.const(1)
V = LPoly.monomial(1, 0)
T = LPoly.monomial(0, 1)
