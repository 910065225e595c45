"""The t-cocycle twist relating the two-parameter algebra to the one-parameter one.

For a word w = i_1 ... i_k put sigma(w) = sum_{a<b} [i_a, i_b].  Multiplying
the coefficient of every word by t^sigma(w) turns the star product
x * y = t^(-[|x|,|y|]) xy into plain concatenation, and turns the Gram
matrix into its t-free specialization at t = 1.
"""
from functools import lru_cache

from .bilform import pair, scale, word_pair
from .freealg import FreeElem, TensorElem, coproduct, degree, mul
from .ring import LPoly, RatFunc, lincomb, mono_mul


class PreconditionError(ValueError):
    pass


@lru_cache(maxsize=None)
def sigma(cartan, word):
    total = 0
    for a in range(len(word)):
        for b in range(a + 1, len(word)):
            total += cartan.bracket(word[a], word[b])
    return total


def star_mul(x, y):
    """x * y = t^(-[|x|,|y|]) xy, applied per homogeneous component."""
    c = x.cartan
    n = c.n
    res = FreeElem(c)
    for w1, c1 in x.terms.items():
        d1 = degree(w1, n)
        for w2, c2 in y.terms.items():
            e = -c.bracket_deg(d1, degree(w2, n))
            res = res + FreeElem._raw(c, {w1 + w2: mono_mul(c1 * c2, 0, e)})
    return res


def star_monomial(cartan, word):
    """theta_{i_1} * ... * theta_{i_k} = t^(-sigma(w)) w."""
    return FreeElem(cartan, {tuple(word): RatFunc.from_lpoly(LPoly.monomial(0, -sigma(cartan, tuple(word))))})


def cocycle_twist(x, direction="to_f"):
    """Multiply the coefficient of each word w by t^(+sigma(w)) or t^(-sigma(w))."""
    if direction not in ("to_f", "from_f"):
        raise ValueError("direction must be 'to_f' or 'from_f'")
    sgn = 1 if direction == "to_f" else -1
    c = x.cartan
    return FreeElem._raw(c, {w: mono_mul(a, 0, sgn * sigma(c, w)) for w, a in x.terms.items()})


def specialize_t1(x):
    """Substitute t = 1 in every coefficient; raises ZeroDivisionError at a pole."""
    terms = {}
    for w, a in x.terms.items():
        try:
            terms[w] = a.subs_t1()
        except ZeroDivisionError:
            raise ZeroDivisionError(f"coefficient of word {list(w)} has a pole at t=1") from None
    return FreeElem(x.cartan, terms)


def pair_at_t1(x, y):
    """The t = 1 Gram values extended Q(v,t)-bilinearly."""
    c = x.cartan
    n = c.n
    total = RatFunc(0)
    groups = {}
    for w, a in x.terms.items():
        nu = degree(w, n)
        for u, b in y.terms.items():
            if degree(u, n) != nu:
                continue
            p = word_pair(c, w, u).subs_t1()
            if not p.is_zero():
                groups.setdefault(nu, []).append((a * b, p))
    for nu, pairs in groups.items():
        total = total + lincomb(pairs) * scale(c, nu)
    return total


def pair_star(x, y):
    """(x, y)* : twist both arguments to the one-parameter side and pair there."""
    return pair_at_t1(cocycle_twist(x, "to_f"), cocycle_twist(y, "to_f"))


def _is_t_free_elem(x):
    return all(a.is_t_free() for a in x.terms.values())


def forms_agree_check(x, y):
    """pair(x, y) == pair_star(x, y) for x, y with t-free twisted coefficients."""
    for name, z in (("x", x), ("y", y)):
        if not _is_t_free_elem(cocycle_twist(z, "to_f")):
            raise PreconditionError(f"{name} is not t-free after the cocycle twist")
    return pair(x, y) == pair_star(x, y)


def twisted_coproduct(x):
    """r~(x) = sum t^([|x1|,|x2|]) x1 (x) x2."""
    c = x.cartan
    n = c.n
    r = coproduct(x)
    res = {}
    for (w1, w2), a in r.terms.items():
        res[(w1, w2)] = mono_mul(a, 0, c.bracket_deg(degree(w1, n), degree(w2, n)))
    return TensorElem._raw(c, res, 2)


def star_tensor_mul(a, b):
    """(x1 (x) x2) * (y1 (x) y2) = v^(-|y1|.|x2|) x1*y1 (x) x2*y2."""
    c = a.cartan
    n = c.n
    res = {}
    for (x1, x2), ca in a.terms.items():
        dx1, dx2 = degree(x1, n), degree(x2, n)
        for (y1, y2), cb in b.terms.items():
            dy1, dy2 = degree(y1, n), degree(y2, n)
            ev = -c.dot_deg(dy1, dx2)
            et = -c.bracket_deg(dx1, dy1) - c.bracket_deg(dx2, dy2)
            key = (x1 + y1, x2 + y2)
            val = mono_mul(ca * cb, ev, et)
            if key in res:
                s = res[key] + val
                if s.is_zero():
                    del res[key]
                else:
                    res[key] = s
            else:
                res[key] = val
    return TensorElem._raw(c, res, 2)


def star_gram(cartan, nu):
    """Gram matrix of the star monomials t^(-sigma(w)) w of degree nu."""
    from .freealg import words_of_degree
    words = words_of_degree(nu)
    mons = [star_monomial(cartan, w) for w in words]
    return words, [[pair(a, b) for b in mons] for a in mons]


def star_coproduct_table(cartan, word):
    """r~ of a star monomial, written in star monomials on both sides."""
    r = twisted_coproduct(star_monomial(cartan, word))
    out = {}
    for (w1, w2), a in r.terms.items():
        out[(w1, w2)] = mono_mul(a, 0, sigma(cartan, w1) + sigma(cartan, w2))
    return out


def omega_independence_check(c1, c2, nu):
    """Two matrices with the same symmetric form give the same star structure.

    Compares the Gram matrices of star monomials and the twisted coproducts
    of star monomials (expressed in star monomials) at degree nu.
    """
    from .freealg import words_of_degree
    n = c1.n
    if c2.n != n or any(c1.dot(i, j) != c2.dot(i, j) for i in range(n) for j in range(n)):
        raise ValueError("the two matrices have different symmetric forms")
    if star_gram(c1, nu) != star_gram(c2, nu):
        return False
    for w in words_of_degree(nu):
        if star_coproduct_table(c1, w) != star_coproduct_table(c2, w):
            return False
    return True
