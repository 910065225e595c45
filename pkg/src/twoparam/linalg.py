"""Exact linear algebra over Q(v, t).

Elimination is fraction-free (Bareiss) over the Laurent polynomial ring,
which is an integral domain, so every division below is exact.  Matrices of
RatFunc entries are first cleared of denominators row by row; this changes
neither the rank nor the kernel.
"""
from .ring import LPoly, RatFunc, as_ratfunc
from .ring.lpoly import ZERO as LZERO


def _row_clear(row):
    """Scale a RatFunc row to LPoly entries (multiplying by its denominators)."""
    dens = []
    for x in row:
        if not x.den.is_one() and x.den not in dens:
            dens.append(x.den)
    if not dens:
        return [x.num for x in row]
    out = []
    for x in row:
        if x.num.is_zero():
            out.append(LZERO)
            continue
        p = x.num
        for d in dens:
            if d != x.den:
                p = p * d
        out.append(p)
    return out


def clear_denominators(rows):
    return [_row_clear([as_ratfunc(x) for x in row]) for row in rows]


def _pick_pivot(R, r, cols, nrows):
    """Sparsest nonzero entry among rows >= r and the candidate columns."""
    best, size = None, None
    for k in range(r, nrows):
        row = R[k]
        for c in cols:
            e = row[c]
            if not e.is_zero():
                s = len(e.terms)
                if best is None or s < size:
                    best, size = (k, c), s
                    if s == 1 and e.is_one():
                        return best
    return best


def rref(A, ncols=None):
    """Fraction-free Gauss-Jordan on a list of LPoly rows (copied).

    Full pivoting picks the sparsest available entry, which keeps the
    intermediate polynomials small.  Returns (R, pivots, d): row k of R has
    its pivot in column pivots[k], all pivot entries equal d, other pivot
    columns are cleared, and rows past len(pivots) are zero.  Only the
    first ``ncols`` columns are used for pivoting (default: all).
    """
    R = [list(row) for row in A]
    nrows = len(R)
    if nrows == 0:
        return R, [], LPoly.const(1)
    width = len(R[0])
    if ncols is None:
        ncols = width
    prev = LPoly.const(1)
    pivots = []
    free = list(range(ncols))
    r = 0
    while r < nrows and free:
        found = _pick_pivot(R, r, free, nrows)
        if found is None:
            break
        k, c = found
        R[r], R[k] = R[k], R[r]
        piv = R[r][c]
        prow = R[r]
        nz = [j for j in range(width) if not prow[j].is_zero() and j != c]
        trivial = piv.is_one() and prev.is_one()
        for i in range(nrows):
            if i == r:
                continue
            row = R[i]
            f = row[c]
            if f.is_zero() and trivial:
                continue
            if trivial:
                new = list(row)
                for j in nz:
                    val = row[j] - f * prow[j]
                    new[j] = val
                new[c] = LZERO
                R[i] = new
                continue
            new = []
            for j in range(width):
                x = row[j]
                if j == c:
                    new.append(LZERO)
                    continue
                y = prow[j]
                if f.is_zero() or y.is_zero():
                    val = piv * x if not x.is_zero() else x
                else:
                    val = piv * x - f * y
                if not prev.is_one() and not val.is_zero():
                    val = val.divexact(prev)
                new.append(val)
            R[i] = new
        prev = piv
        pivots.append(c)
        free.remove(c)
        r += 1
    return R, pivots, prev


def rank(rows):
    """Rank of a matrix of LPoly or RatFunc entries."""
    if not rows:
        return 0
    if isinstance(rows[0][0], RatFunc) if rows[0] else False:
        rows = clear_denominators(rows)
    return len(rref(rows)[1])


def nullspace(rows, ncols=None):
    """Basis of {x : A x = 0} as lists of LPoly (fraction-free)."""
    if rows and rows[0] and isinstance(rows[0][0], RatFunc):
        rows = clear_denominators(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[LPoly.const(1) if k == f else LZERO for k in range(ncols)] for f in range(ncols)]
    R, pivots, d = rref(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [LZERO] * ncols
        x[f] = d
        for k, p in enumerate(pivots):
            e = R[k][f]
            x[p] = -e if not e.is_zero() else LZERO
        basis.append(x)
    return basis


def solve(rows, rhs):
    """Solve A x = b over Q(v,t); returns a list of RatFunc, or None if inconsistent.

    When the system is underdetermined the free variables are set to zero.
    """
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    aug = clear_denominators([[as_ratfunc(x) for x in row] for row in aug])
    R, pivots, d = rref(aug, ncols)
    r = len(pivots)
    for k in range(r, len(R)):
        if not R[k][ncols].is_zero():
            return None
    x = [RatFunc(0)] * ncols
    for k, p in enumerate(pivots):
        x[p] = RatFunc(R[k][ncols], d)
    return x
