"""Greatest common divisors in Z[v, t].

Polynomials are handled in recursive form: a dict mapping each power of t
to a dense univariate polynomial in v (a list of ints, lowest degree first).
The bivariate gcd is the primitive pseudo-remainder sequence in t over the
coefficient ring Z[v]; univariate gcds in Z[v] use the same scheme over Z.

All inputs must have nonnegative exponents.
"""
from math import gcd as igcd

from .lpoly import LPoly


# -- dense univariate polynomials over Z ----------------------------------

def _utrim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _ucontent(p):
    g = 0
    for c in p:
        g = igcd(g, c)
        if g == 1:
            return 1
    return g


def _uscale_div(p, c):
    return [x // c for x in p]


def _uprimitive(p):
    c = _ucontent(p)
    if c == 0:
        return []
    q = _uscale_div(p, c)
    if q[-1] < 0:
        q = [-x for x in q]
    return q


def _umul(p, q):
    if not p or not q:
        return []
    res = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                res[i + j] += a * b
    return res


def _usub(p, q):
    n = max(len(p), len(q))
    res = [(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)]
    return _utrim(res)


def _uprem(a, b):
    """Pseudo-remainder of a by b in Z[v]."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [x * lb for x in a]
        for i, c in enumerate(b):
            a[i + shift] -= la * c
        _utrim(a)
    return a


def udivexact(a, b):
    """Exact quotient in Z[v]; raises ArithmeticError when inexact."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(a) - 1 < db:
        if a:
            raise ArithmeticError("inexact univariate division")
        return []
    q = [0] * (len(a) - db)
    while a and len(a) - 1 >= db:
        la = a[-1]
        if la % lb:
            raise ArithmeticError("inexact univariate division")
        c = la // lb
        shift = len(a) - 1 - db
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] -= c * bc
        _utrim(a)
    if a:
        raise ArithmeticError("inexact univariate division")
    return q


def ugcd(a, b):
    """Gcd in Z[v] with positive leading coefficient."""
    a = _utrim(list(a))
    b = _utrim(list(b))
    if not a or not b:
        r = b or a
        return [-x for x in r] if r and r[-1] < 0 else r
    ca, cb = _ucontent(a), _ucontent(b)
    c = igcd(ca, cb)
    a, b = _uprimitive(a), _uprimitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return [c]
        r = _uprem(a, b)
        a, b = b, _uprimitive(r) if r else []
    return [c * x for x in a]


# -- recursive bivariate form ------------------------------------------------

def _to_rec(p):
    rec = {}
    for (a, b), c in p.terms.items():
        row = rec.setdefault(b, [])
        if len(row) <= a:
            row.extend([0] * (a + 1 - len(row)))
        row[a] = c
    return rec


def _from_rec(rec):
    terms = {}
    for b, row in rec.items():
        for a, c in enumerate(row):
            if c:
                terms[(a, b)] = c
    return LPoly._raw(terms)


def _rec_content(rec):
    g = []
    for row in rec.values():
        g = ugcd(g, row)
        if len(g) == 1 and g[0] == 1:
            break
    return g


def _rec_div_scalar(rec, u):
    return {b: udivexact(row, u) for b, row in rec.items()}


def _rec_prem(a, b):
    """Pseudo-remainder in t of a by b, coefficients in Z[v]."""
    db = max(b)
    lb = b[db]
    a = dict(a)
    while a and max(a) >= db:
        da = max(a)
        la = a[da]
        shift = da - db
        new = {}
        for k, row in a.items():
            new[k] = _umul(row, lb)
        for k, row in b.items():
            kk = k + shift
            new[kk] = _usub(new.get(kk, []), _umul(la, row))
        a = {k: row for k, row in new.items() if row}
    return a


def _rec_primitive(rec):
    c = _rec_content(rec)
    if len(c) == 1 and c[0] == 1:
        return rec
    return _rec_div_scalar(rec, c)


def poly_gcd(p, q):
    """Gcd of two polynomials of Z[v, t] (nonnegative exponents).

    The result has integer coefficients and positive leading coefficient in
    the lexicographic order with t dominant, then v.
    """
    if p.is_zero():
        return _normalize_sign(q)
    if q.is_zero():
        return _normalize_sign(p)
    a, b = _to_rec(p), _to_rec(q)
    ca, cb = _rec_content(a), _rec_content(b)
    cont = ugcd(ca, cb)
    if max(a) == 0 or max(b) == 0:
        return _normalize_sign(_from_rec({0: cont}))
    a = _rec_div_scalar(a, ca)
    b = _rec_div_scalar(b, cb)
    if max(a) < max(b):
        a, b = b, a
    while True:
        r = _rec_prem(a, b)
        if not r:
            g = b
            break
        if max(r) == 0:
            g = {0: [1]}
            break
        a, b = b, _rec_primitive(r)
    g = {k: _umul(row, cont) for k, row in g.items()}
    return _normalize_sign(_from_rec(g))


def _normalize_sign(p):
    if p.is_zero():
        return p
    k = max(p.terms, key=lambda e: (e[1], e[0]))
    return -p if p.terms[k] < 0 else p
