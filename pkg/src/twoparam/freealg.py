"""The free algebra on generators theta_i over Q(v, t) and its twisted coproduct.

Elements are sparse maps from words (tuples of vertex indices) to RatFunc
coefficients.  Tensors of arity k are maps from k-tuples of words.  The
product on tensors is twisted: moving a factor y_b of degree |y_b| past a
factor x_a with a > b costs v^(-|x_a|.|y_b|) t^(<|y_b|,|x_a|> - <|x_a|,|y_b|>).
"""
from functools import lru_cache
from .cartan import CartanData
from .ring import LPoly, RatFunc, as_ratfunc, lincomb, mono_mul, parse_coeff
from .ring.qnum import qfactorial_poly


def degree(word, n):
    out = [0] * n
    for a in word:
        out[a] += 1
    return tuple(out)


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def words_of_degree(nu):
    """All words with letter counts nu, in lexicographic order."""
    nu = list(nu)
    total = sum(nu)
    out = []
    cur = []

    def rec():
        if len(cur) == total:
            out.append(tuple(cur))
            return
        for i in range(len(nu)):
            if nu[i]:
                nu[i] -= 1
                cur.append(i)
                rec()
                cur.pop()
                nu[i] += 1
    rec()
    return out



class FreeElem:
    """A finite Q(v,t)-combination of words."""

    __slots__ = ("cartan", "terms")

    def __init__(self, cartan, terms=None):
        if not isinstance(cartan, CartanData):
            raise TypeError("cartan must be CartanData")
        self.cartan = cartan
        clean = {}
        if terms:
            for w, c in terms.items():
                c = as_ratfunc(c)
                if not c.is_zero():
                    clean[tuple(w)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, cartan, terms):
        x = object.__new__(cls)
        x.cartan = cartan
        x.terms = terms
        return x

    @classmethod
    def word(cls, cartan, w, coeff=1):
        return cls(cartan, {tuple(w): coeff})

    @classmethod
    def one(cls, cartan):
        return cls(cartan, {(): 1})

    @classmethod
    def gen(cls, cartan, i):
        return cls(cartan, {(i,): 1})

    def _same(self, other):
        if self.cartan != other.cartan:
            raise ValueError("mismatched CartanData")

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self):
        n = self.cartan.n
        return {degree(w, n) for w in self.terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def degree(self):
        """The degree of a homogeneous element (None for zero)."""
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return next(iter(degs)) if degs else None

    def components(self):
        """Split into homogeneous components, keyed by degree."""
        n = self.cartan.n
        out = {}
        for w, c in self.terms.items():
            out.setdefault(degree(w, n), {})[w] = c
        return {d: FreeElem._raw(self.cartan, t) for d, t in out.items()}

    def coeff(self, w):
        return self.terms.get(tuple(w), RatFunc(0))

    # -- linear structure ----------------------------------------------------

    def __add__(self, other):
        self._same(other)
        res = dict(self.terms)
        for w, c in other.terms.items():
            if w in res:
                s = res[w] + c
                if s.is_zero():
                    del res[w]
                else:
                    res[w] = s
            else:
                res[w] = c
        return FreeElem._raw(self.cartan, res)

    def __neg__(self):
        return FreeElem._raw(self.cartan, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_ratfunc(c)
        if c.is_zero():
            return FreeElem._raw(self.cartan, {})
        return FreeElem._raw(self.cartan, {w: x * c for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, FreeElem):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, FreeElem):
            return NotImplemented
        return self.cartan == other.cartan and self.terms == other.terms

    def __hash__(self):
        return hash((self.cartan, frozenset(self.terms.items())))

    def map_coeffs(self, f):
        return FreeElem(self.cartan, {w: f(c) for w, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            ws = "theta[" + ",".join(map(str, w)) + "]" if w else "1"
            parts.append(f"({c})*{ws}")
        return " + ".join(parts)

    def __repr__(self):
        return f"FreeElem({self})"

    def to_json(self):
        return {"terms": [{"word": list(w), "coeff": str(c)} for w, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, cartan, data):
        terms = {}
        for item in data["terms"]:
            w = tuple(int(a) for a in item["word"])
            for a in w:
                if not (0 <= a < cartan.n):
                    raise ValueError(f"letter {a} out of range")
            c = item["coeff"]
            c = parse_coeff(c) if isinstance(c, str) else as_ratfunc(c)
            terms[w] = terms[w] + c if w in terms else c
        return cls(cartan, terms)


def mul(x, y):
    """Product in the free algebra: bilinear extension of concatenation."""
    x._same(y)
    res = {}
    for w1, c1 in x.terms.items():
        for w2, c2 in y.terms.items():
            w = w1 + w2
            c = c1 * c2
            if w in res:
                s = res[w] + c
                if s.is_zero():
                    del res[w]
                else:
                    res[w] = s
            else:
                res[w] = c
    return FreeElem._raw(x.cartan, res)


def power(x, n):
    out = FreeElem.one(x.cartan)
    for _ in range(n):
        out = mul(out, x)
    return out


def bar(x):
    """Apply v -> v^-1 to every coefficient; words are fixed."""
    return FreeElem._raw(x.cartan, {w: c.bar() for w, c in x.terms.items()})


def divided_power(cartan, i, n):
    """theta_i^n divided by the two-parameter factorial [n]!_{v_i,t_i}."""
    if n < 0:
        raise ValueError("divided power needs n >= 0")
    fac = qfactorial_poly(n, "vt", cartan.d(i))
    return FreeElem(cartan, {(i,) * n: RatFunc(LPoly.const(1), fac)})


def monomial(cartan, seq):
    """Product of divided powers given as [(vertex, exponent), ...]."""
    out = FreeElem.one(cartan)
    for i, n in seq:
        out = mul(out, divided_power(cartan, i, n))
    return out


# -- tensors ------------------------------------------------------------------

class TensorElem:
    """A combination of k-tuples of words, multiplied with the twisted rule."""

    __slots__ = ("cartan", "terms", "arity")

    def __init__(self, cartan, terms=None, arity=2):
        self.cartan = cartan
        self.arity = arity
        clean = {}
        if terms:
            for k, c in terms.items():
                c = as_ratfunc(c)
                if len(k) != arity:
                    raise ValueError("tensor key of wrong arity")
                if not c.is_zero():
                    clean[tuple(tuple(w) for w in k)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, cartan, terms, arity):
        x = object.__new__(cls)
        x.cartan = cartan
        x.terms = terms
        x.arity = arity
        return x

    @classmethod
    def pure(cls, *factors):
        """Tensor product x_1 (x) ... (x) x_k of FreeElems (untwisted)."""
        cartan = factors[0].cartan
        terms = {((),) * 0: RatFunc(1)}
        for f in factors:
            new = {}
            for k, c in terms.items():
                for w, d in f.terms.items():
                    key = k + (w,)
                    new[key] = new[key] + c * d if key in new else c * d
            terms = new
        return cls(cartan, terms, len(factors))

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if self.arity != other.arity or self.cartan != other.cartan:
            raise ValueError("mismatched tensors")
        res = dict(self.terms)
        for k, c in other.terms.items():
            if k in res:
                s = res[k] + c
                if s.is_zero():
                    del res[k]
                else:
                    res[k] = s
            else:
                res[k] = c
        return TensorElem._raw(self.cartan, res, self.arity)

    def __neg__(self):
        return TensorElem._raw(self.cartan, {k: -c for k, c in self.terms.items()}, self.arity)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_ratfunc(c)
        return TensorElem(self.cartan, {k: x * c for k, x in self.terms.items()}, self.arity)

    def __mul__(self, other):
        if isinstance(other, TensorElem):
            return tensor_mul(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        return (self.cartan == other.cartan and self.arity == other.arity
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def coeff(self, *words):
        return self.terms.get(tuple(tuple(w) for w in words), RatFunc(0))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in sorted(self.terms.items()):
            ks = " (x) ".join("theta[" + ",".join(map(str, w)) + "]" if w else "1" for w in k)
            parts.append(f"({c})*{ks}")
        return " + ".join(parts)

    __repr__ = __str__


def tensor_twist(cartan, xdegs, ydegs):
    """Exponents (of v and t) for multiplying tensors with the given factor degrees."""
    ev = et = 0
    k = len(xdegs)
    for a in range(k):
        xa = xdegs[a]
        if not any(xa):
            continue
        for b in range(a):
            yb = ydegs[b]
            if not any(yb):
                continue
            ev -= cartan.dot_deg(xa, yb)
            et += cartan.antisym_deg(xa, yb)
    return ev, et


def tensor_mul(a, b):
    """Twisted product of two tensors of equal arity."""
    if a.arity != b.arity or a.cartan != b.cartan:
        raise ValueError("mismatched tensors")
    cartan = a.cartan
    n = cartan.n
    res = {}
    for ka, ca in a.terms.items():
        xd = [degree(w, n) for w in ka]
        for kb, cb in b.terms.items():
            yd = [degree(w, n) for w in kb]
            ev, et = tensor_twist(cartan, xd, yd)
            key = tuple(u + w for u, w in zip(ka, kb))
            c = mono_mul(ca * cb, ev, et)
            if key in res:
                s = res[key] + c
                if s.is_zero():
                    del res[key]
                else:
                    res[key] = s
            else:
                res[key] = c
    return TensorElem._raw(cartan, res, a.arity)


# -- coproduct -------------------------------------------------------------------

@lru_cache(maxsize=None)
def word_coproduct(cartan, word):
    """r(word) as a dict (w1, w2) -> LPoly with integer coefficients."""
    if not word:
        return {((), ()): LPoly.const(1)}
    prev = word_coproduct(cartan, word[:-1])
    i = word[-1]
    n = cartan.n
    e = cartan.unit(i)
    res = {}
    for (w1, w2), c in prev.items():
        # (w1 (x) w2)(theta_i (x) 1): theta_i moves past w2
        d2 = degree(w2, n)
        ev = -cartan.dot_deg(d2, e)
        et = cartan.antisym_deg(d2, e)
        k1 = (w1 + (i,), w2)
        t1 = c.shift(ev, et)
        res[k1] = res[k1] + t1 if k1 in res else t1
        k2 = (w1, w2 + (i,))
        res[k2] = res[k2] + c if k2 in res else c
    return {k: c for k, c in res.items() if not c.is_zero()}


def coproduct(x):
    """The algebra map r with r(theta_i) = theta_i (x) 1 + 1 (x) theta_i."""
    groups = {}
    for w, c in x.terms.items():
        for key, p in word_coproduct(x.cartan, w).items():
            groups.setdefault(key, []).append((c, p))
    res = {}
    for key, pairs in groups.items():
        val = lincomb(pairs)
        if not val.is_zero():
            res[key] = val
    return TensorElem._raw(x.cartan, res, 2)


def apply_coproduct_at(t, pos):
    """Apply r to factor ``pos`` of a tensor, raising its arity by one."""
    groups = {}
    for key, c in t.terms.items():
        for (u1, u2), p in word_coproduct(t.cartan, key[pos]).items():
            nk = key[:pos] + (u1, u2) + key[pos + 1:]
            groups.setdefault(nk, []).append((c, p))
    res = {}
    for key, pairs in groups.items():
        val = lincomb(pairs)
        if not val.is_zero():
            res[key] = val
    return TensorElem._raw(t.cartan, res, t.arity + 1)


def coassoc_check(x):
    """(r (x) 1) r(x) == (1 (x) r) r(x)."""
    rx = coproduct(x)
    return apply_coproduct_at(rx, 0) == apply_coproduct_at(rx, 1)


def bar_coproduct_check(x):
    """r(bar x) equals the swapped, twisted, barred r(x)."""
    n = x.cartan.n
    c = x.cartan
    lhs = coproduct(bar(x))
    res = {}
    for (w1, w2), coef in coproduct(x).terms.items():
        d1, d2 = degree(w1, n), degree(w2, n)
        val = mono_mul(coef.bar(), -c.dot_deg(d1, d2), c.antisym_deg(d1, d2))
        key = (w2, w1)
        res[key] = res[key] + val if key in res else val
    rhs = TensorElem(c, res, 2)
    return lhs == rhs


# -- derivations -------------------------------------------------------------------

@lru_cache(maxsize=None)
def _word_deriv(cartan, i, word, right):
    n = cartan.n
    e = cartan.unit(i)
    res = {}
    for p, a in enumerate(word):
        if a != i:
            continue
        other = word[p + 1:] if right else word[:p]
        d = degree(other, n)
        ev = -cartan.dot_deg(e, d)
        # the letter crosses ``other``; the sign matches the tensor twist
        et = cartan.antisym_deg(e, d) if right else cartan.antisym_deg(d, e)
        w = word[:p] + word[p + 1:]
        m = LPoly.monomial(ev, et)
        res[w] = res[w] + m if w in res else m
    return {w: c for w, c in res.items() if not c.is_zero()}


def _deriv(i, x, right):
    groups = {}
    for w, c in x.terms.items():
        for u, p in _word_deriv(x.cartan, i, w, right).items():
            groups.setdefault(u, []).append((c, p))
    res = {}
    for u, pairs in groups.items():
        val = lincomb(pairs)
        if not val.is_zero():
            res[u] = val
    return FreeElem._raw(x.cartan, res)


def deriv_r(i, x):
    """The derivation r_i: strips a letter i, twisted by what follows it."""
    return _deriv(i, x, True)


def deriv_l(i, x):
    """The derivation _ir: strips a letter i, twisted by what precedes it.

    _ir(xy) = _ir(x) y + v^(-i.|x|) t^(<i,|x|> - <|x|,i>) x _ir(y), so that
    the (theta_i, -) part of r(x) is theta_i (x) _ir(x).
    """
    return _deriv(i, x, False)
