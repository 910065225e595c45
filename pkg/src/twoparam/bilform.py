"""The symmetric bilinear form on the free algebra and its radical.

On words of degree nu the form factors as

    (w, w') = scale(nu) * P(w, w'),   scale(nu) = prod_i (1 - v_i^-2)^(-nu_i),

where P is an integer Laurent polynomial.  P is computed by peeling the last
letter of the first argument:

    P(y i, x) = t^(2[|y|, i]) * P(y, r_i(x)),   P(1, 1) = 1.

The quotient by the radical is handled by :class:`Quotient`, which keeps a
set of pivot words forming a basis of the degree-nu piece of the quotient.
"""
from dataclasses import dataclass, field
from functools import lru_cache

from .freealg import FreeElem, TensorElem, _word_deriv, degree, words_of_degree
from .linalg import nullspace, rank, rref, solve
from .ring import LPoly, RatFunc, lincomb
from .ring.lpoly import ZERO as LZERO


@lru_cache(maxsize=None)
def word_pair(cartan, w, x):
    """The integer numerator P(w, x) of the pairing of two words."""
    if len(w) != len(x):
        return LZERO
    if not w:
        return LPoly.const(1)
    n = cartan.n
    if degree(w, n) != degree(x, n):
        return LZERO
    y, i = w[:-1], w[-1]
    tw = 2 * cartan.bracket_deg(degree(y, n), cartan.unit(i))
    total = LZERO
    for u, m in _word_deriv(cartan, i, x, True).items():
        p = word_pair(cartan, y, u)
        if not p.is_zero():
            total = total + p * m
    return total.shift(0, tw) if tw else total


@lru_cache(maxsize=None)
def scale(cartan, nu):
    """prod_i (1 - v^(-2 d_i))^(-nu_i) as a RatFunc."""
    num = LPoly.const(1)
    den = LPoly.const(1)
    for i, k in enumerate(nu):
        if k:
            d = cartan.d(i)
            num = num * LPoly.monomial(2 * d * k, 0)
            den = den * LPoly({(2 * d, 0): 1, (0, 0): -1}) ** k
    return RatFunc(num, den)


def _pair_homog(x, y, nu):
    c = x.cartan
    pairs = []
    for w, a in x.terms.items():
        for u, b in y.terms.items():
            p = word_pair(c, w, u)
            if not p.is_zero():
                pairs.append((a * b, p))
    return lincomb(pairs) * scale(c, nu)


def pair(x, y):
    """The bilinear form (x, y); components of different degree pair to 0."""
    if x.cartan != y.cartan:
        raise ValueError("mismatched CartanData")
    xs, ys = x.components(), y.components()
    total = RatFunc(0)
    for nu, xc in xs.items():
        if nu in ys:
            total = total + _pair_homog(xc, ys[nu], nu)
    return total


def pair_tensor(a, b):
    """(x1 (x) x2, y1 (x) y2) = t^(2[|x1|,|x2|]) (x1, y1)(x2, y2), bilinearly."""
    if a.arity != 2 or b.arity != 2:
        raise ValueError("pair_tensor needs tensors of arity 2")
    c = a.cartan
    n = c.n
    total = RatFunc(0)
    for (x1, x2), ca in a.terms.items():
        d1, d2 = degree(x1, n), degree(x2, n)
        for (y1, y2), cb in b.terms.items():
            if degree(y1, n) != d1 or degree(y2, n) != d2:
                continue
            p = word_pair(c, x1, y1) * word_pair(c, x2, y2)
            if p.is_zero():
                continue
            val = ca * cb * RatFunc.from_lpoly(p.shift(0, 2 * c.bracket_deg(d1, d2)))
            total = total + val * scale(c, d1) * scale(c, d2)
    return total


@dataclass
class GramBlock:
    degree: tuple
    words: list
    matrix: list = field(repr=False)
    numer: list = field(repr=False)
    scale: RatFunc = None

    def to_json(self):
        return {"degree": list(self.degree), "words": [list(w) for w in self.words],
                "matrix": [[str(x) for x in row] for row in self.matrix]}


def gram(cartan, nu):
    nu = tuple(nu)
    words = words_of_degree(nu)
    numer = [[word_pair(cartan, w, u) for u in words] for w in words]
    s = scale(cartan, nu)
    matrix = [[RatFunc.from_lpoly(p) * s for p in row] for row in numer]
    return GramBlock(nu, words, matrix, numer, s)


def _normalize_leading(cartan, words, vec):
    lead = None
    for k, x in enumerate(vec):
        if not x.is_zero():
            lead = x
            break
    terms = {}
    for w, x in zip(words, vec):
        if not x.is_zero():
            terms[w] = RatFunc(x, lead)
    return FreeElem(cartan, terms)


def rank_and_radical(cartan, g):
    """Rank of a Gram block and a basis of its radical (leading coefficient 1)."""
    if not g.words:
        return 0, []
    q = quotient(cartan, g.degree)
    index = {w: k for k, w in enumerate(g.words)}
    rows = [[g.numer[k][index[f]] for k in range(len(g.words))] for f in q.spanning_words]
    kernel = nullspace(rows, len(g.words))
    rad = [_normalize_leading(cartan, g.words, v) for v in kernel]
    return len(g.words) - len(kernel), rad


class Quotient:
    """The degree-nu piece of the quotient algebra, in a pivot-word basis.

    The column of the Gram matrix indexed by a word y i is the functional
    x -> (y, r_i(x)) up to a power of t, so it only depends on y modulo the
    radical in degree nu - i.  Hence the words b i, with b running over a
    basis of the quotient in degree nu - i, already give functionals that
    cut out the radical.  These are the ``spanning_words``.
    """

    def __init__(self, cartan, nu):
        self.cartan = cartan
        self.nu = tuple(nu)
        self.words = words_of_degree(self.nu)
        if not any(self.nu):
            spanning = [()]
        else:
            spanning = []
            for i, k in enumerate(self.nu):
                if k:
                    lower = list(self.nu)
                    lower[i] -= 1
                    for b in quotient(cartan, tuple(lower)).basis_words:
                        spanning.append(b + (i,))
        self.spanning_words = spanning
        rows = [[word_pair(cartan, w, f) for w in self.words] for f in spanning]
        _, pivots, _ = rref(rows)
        self.basis_words = sorted(self.words[p] for p in pivots)
        self.rank = len(pivots)
        # choose rank-many spanning words that stay independent on the basis
        sub = [[word_pair(cartan, b, f) for f in spanning] for b in self.basis_words]
        _, fp, _ = rref(sub)
        self.func_words = [spanning[k] for k in sorted(fp)]
        self.core = [[word_pair(cartan, b, f) for b in self.basis_words] for f in self.func_words]

    def vec(self, x):
        """Pairing of x against the functional words, without the scale factor.

        Zero exactly when x lies in the radical.
        """
        out = []
        c = self.cartan
        for fw in self.func_words:
            pairs = []
            for w, a in x.terms.items():
                p = word_pair(c, w, fw)
                if not p.is_zero():
                    pairs.append((a, p))
            out.append(lincomb(pairs))
        return out

    def check_degree(self, x):
        degs = x.degrees()
        if not degs:
            return
        if degs != {self.nu}:
            raise ValueError(f"element is not homogeneous of degree {list(self.nu)}")

    def is_zero(self, x):
        self.check_degree(x)
        return all(e.is_zero() for e in self.vec(x))

    def coords(self, x):
        """Coordinates of x modulo the radical in the basis ``basis_words``."""
        self.check_degree(x)
        return solve(self.core, self.vec(x))

    def element(self, coords):
        return FreeElem(self.cartan, {w: c for w, c in zip(self.basis_words, coords)})

    def rank_of(self, elems):
        """Dimension of the span of the images of ``elems`` in the quotient."""
        rows = [self.vec(e) for e in elems]
        rows = [r for r in rows if any(not e.is_zero() for e in r)]
        if not rows:
            return 0
        return rank(rows)


@lru_cache(maxsize=None)
def quotient(cartan, nu):
    return Quotient(cartan, tuple(nu))


def _homog_degree(x):
    degs = x.degrees()
    if len(degs) > 1:
        raise ValueError("element is not homogeneous")
    return next(iter(degs)) if degs else None


def is_zero_in_f(x):
    """True iff x pairs to zero with every word of its degree."""
    nu = _homog_degree(x)
    if nu is None:
        return True
    return quotient(x.cartan, nu).is_zero(x)


def eq_in_f(x, y):
    d = x - y
    if d.is_zero():
        return True
    degs = x.degrees() | y.degrees()
    if len(degs) > 1:
        raise ValueError("elements are not homogeneous of a common degree")
    return is_zero_in_f(d)


def dim_f(cartan, nu):
    return quotient(cartan, tuple(nu)).rank
