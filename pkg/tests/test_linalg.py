import random

import pytest
import sympy
from sympy.polys.matrices import DomainMatrix

from twoparam.linalg import nullspace, rank, rref, solve
from twoparam.ring import LPoly, RatFunc

sv, st_ = sympy.symbols("v t")
FIELD = sympy.QQ.frac_field(sv, st_)


def _rand_poly(rng):
    return LPoly({(rng.randint(0, 2), rng.randint(0, 1)): rng.randint(-2, 2) for _ in range(2)})


def _sym(p):
    return sum(c * sv ** a * st_ ** b for (a, b), c in p.terms.items())


def _low_rank(rng, n, m, r):
    a = [[_rand_poly(rng) for _ in range(r)] for _ in range(n)]
    b = [[_rand_poly(rng) for _ in range(m)] for _ in range(r)]
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = LPoly()
            for k in range(r):
                s = s + a[i][k] * b[k][j]
            row.append(s)
        out.append(row)
    return out


@pytest.mark.parametrize("seed", range(12))
def test_rank_matches_domainmatrix(seed):
    rng = random.Random(seed)
    n, m = rng.randint(2, 5), rng.randint(2, 5)
    A = _low_rank(rng, n, m, rng.randint(1, min(n, m)))
    dm = DomainMatrix([[FIELD.from_sympy(_sym(x)) for x in row] for row in A], (n, m), FIELD)
    assert rank(A) == dm.rank()


@pytest.mark.parametrize("seed", range(8))
def test_nullspace_is_kernel(seed):
    rng = random.Random(100 + seed)
    A = _low_rank(rng, 4, 5, 2)
    ker = nullspace(A, 5)
    assert len(ker) == 5 - rank(A)
    for x in ker:
        for row in A:
            s = LPoly()
            for a, b in zip(row, x):
                s = s + a * b
            assert s.is_zero()


def test_rref_pivots_share_denominator():
    A = [[LPoly.const(2), LPoly.monomial(1, 0)], [LPoly.monomial(0, 1), LPoly.const(1)]]
    R, piv, d = rref(A)
    assert piv and all(R[k][p] == d for k, p in enumerate(piv))


def test_solve_and_inconsistent():
    v = RatFunc(LPoly.monomial(1, 0))
    rows = [[RatFunc(1), v], [RatFunc(0), RatFunc(1)]]
    x = solve(rows, [RatFunc(1), RatFunc(2)])
    assert x[1] == RatFunc(2) and x[0] == 1 - 2 * v
    assert solve([[RatFunc(1)], [RatFunc(1)]], [RatFunc(1), RatFunc(2)]) is None
