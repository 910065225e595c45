"""Expansion of rational functions as power series in v^-1."""
from fractions import Fraction

from .ratfunc import RatFunc, as_ratfunc


class NotRegularError(ValueError):
    pass


def _v_slices(p):
    """Map each power of v to its coefficient, a dict t-exponent -> coeff."""
    out = {}
    for (a, b), c in p.terms.items():
        out.setdefault(a, {})[b] = c
    return out


def _tmul(x, y):
    res = {}
    for b1, c1 in x.items():
        for b2, c2 in y.items():
            k = b1 + b2
            res[k] = res.get(k, 0) + c1 * c2
    return {k: c for k, c in res.items() if c != 0}


def _tsub(x, y):
    res = dict(x)
    for k, c in y.items():
        s = res.get(k, 0) - c
        if s:
            res[k] = s
        else:
            res.pop(k, None)
    return res


def series_in_vinv(f, order):
    """The first ``order + 1`` coefficients of f as a series in u = v^-1.

    The expansion starts at u^k0 with k0 = min(0, valuation), so a positive
    power of v shows up as a negative exponent of v^-1.  Coefficients must be
    Laurent polynomials in t, which holds exactly when the coefficient of the
    top power of v in the denominator is a monomial in t; otherwise the
    function raises NotRegularError.

    Returns a list of (k, {t_exponent: Fraction}) for the nonzero
    coefficients of u^k, in increasing k.
    """
    f = as_ratfunc(f)
    if order < 0:
        raise ValueError("order must be nonnegative")
    if f.num.is_zero():
        return []
    num, den = _v_slices(f.num), _v_slices(f.den)
    ntop, dtop = max(num), max(den)
    lead = den[dtop]
    if len(lead) != 1:
        raise NotRegularError("not v^{-1}-adically regular")
    (le, lc), = lead.items()
    inv_lead = {-le: Fraction(1) / lc}
    val = dtop - ntop
    k0 = min(val, 0)
    kmax = k0 + order
    nterms = kmax - val + 1
    N = [num.get(ntop - j, {}) for j in range(max(nterms, 0))]
    D = {j: den[dtop - j] for j in range(1, dtop - min(den) + 1) if dtop - j in den}
    coeffs = []
    for m in range(max(nterms, 0)):
        acc = N[m]
        for j, dj in D.items():
            if j > m:
                continue
            if coeffs[m - j]:
                acc = _tsub(acc, _tmul(dj, coeffs[m - j]))
        coeffs.append(_tmul(acc, inv_lead) if acc else {})
    out = []
    for m, c in enumerate(coeffs):
        if c:
            out.append((val + m, {b: Fraction(x) for b, x in sorted(c.items())}))
    return out


def in_one_plus_vinv_z(f, order=8):
    """Check the truncated expansion lies in 1 + v^-1 Z[[v^-1]] (t-free)."""
    ser = series_in_vinv(f, order)
    for k, c in ser:
        if k < 0:
            return False
        if any(b != 0 for b in c):
            return False
        if any(x.denominator != 1 for x in c.values()):
            return False
        if k == 0 and c != {0: 1}:
            return False
    return bool(ser) and ser[0][0] == 0


def is_t_free(f):
    return as_ratfunc(f).is_t_free()


def format_series(terms):
    """Readable rendering of a series_in_vinv result."""
    parts = []
    for k, c in terms:
        for b, x in sorted(c.items(), reverse=True):
            mono = []
            if k:
                mono.append(f"v^{-k}" if k != -1 else "v")
            if b:
                mono.append("t" if b == 1 else f"t^{b}")
            coeff = "" if x == 1 and mono else ("-" if x == -1 and mono else str(x))
            if coeff and coeff != "-" and mono:
                coeff += "*"
            parts.append(coeff + "*".join(mono))
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"
