"""Quantum Serre elements and checks that they generate the radical."""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .bilform import is_zero_in_f, quotient
from .freealg import (FreeElem, deriv_l, deriv_r, divided_power, mul, degree,
                      words_of_degree)
from .linalg import rank
from .ring import LPoly, RatFunc
from .ring.qnum import qbinom_poly, qfactorial_poly


@dataclass(frozen=True)
class SerreElem:
    i: int
    j: int
    element: FreeElem
    a1: Fraction    # -Omega_ij / Omega_ii
    a2: Fraction    # -Omega_ji / Omega_ii
    N: int          # a1 + a2, a nonnegative integer

    @property
    def degree(self):
        return self.element.degree()


def serre_order(c, i, j):
    """N = -(Omega_ij + Omega_ji) / Omega_ii."""
    s = c.omega[i][j] + c.omega[j][i]
    d = c.d(i)
    if s % d:
        raise ValueError("omega violates the divisibility condition")
    return -s // d


def serre_coefficient_exponent(c, i, j, p, pp):
    """t-exponent of the p-th summand: -d_i p p' - p (Omega_ji - Omega_ij)."""
    return -c.d(i) * p * pp - p * (c.omega[j][i] - c.omega[i][j])


def serre_elem(c, i, j):
    """sum_{p+p'=N+1} (-1)^p t_i^(-p(p' + a' - a'')) theta_i^(p) theta_j theta_i^(p')."""
    if i == j:
        raise ValueError("Serre element needs i != j")
    N = serre_order(c, i, j)
    tj = FreeElem.gen(c, j)
    total = FreeElem(c)
    for p in range(N + 2):
        pp = N + 1 - p
        e = serre_coefficient_exponent(c, i, j, p, pp)
        coef = RatFunc.from_lpoly(LPoly.monomial(0, e, (-1) ** p))
        term = mul(mul(divided_power(c, i, p), tj), divided_power(c, i, pp))
        total = total + term.scale(coef)
    d = c.d(i)
    return SerreElem(i, j, total, Fraction(-c.omega[i][j], d), Fraction(-c.omega[j][i], d), N)


def serre_derivation_check(s, left=True):
    """Every r_k (and, with ``left``, every _kr) kills the element exactly."""
    c = s.element.cartan
    for k in range(c.n):
        if not deriv_r(k, s.element).is_zero():
            return False
        if left and not deriv_l(k, s.element).is_zero():
            return False
    return True


def serre_in_radical(s):
    return is_zero_in_f(s.element)


def _polynomial_serre(s):
    """The Serre element rescaled to have Laurent polynomial coefficients."""
    den = LPoly.const(1)
    for c in s.element.terms.values():
        if not c.den.is_one() and c.den != den:
            den = den * c.den
    return s.element.scale(RatFunc.from_lpoly(den))


def ideal_generators(c, nu, elements):
    """All u * x * w with words u, w and x from ``elements``, landing in degree nu."""
    nu = tuple(nu)
    n = c.n
    gens = []
    for x in elements:
        dx = x.degree()
        rest = tuple(a - b for a, b in zip(nu, dx))
        if any(r < 0 for r in rest):
            continue
        for left in product(*(range(r + 1) for r in rest)):
            right = tuple(r - l for r, l in zip(rest, left))
            for u in words_of_degree(left):
                uu = FreeElem.word(c, u)
                ux = mul(uu, x)
                for w in words_of_degree(right):
                    gens.append(mul(ux, FreeElem.word(c, w)))
    return gens


def serre_ideal_rank(c, nu, serres=None):
    """Dimension of the degree-nu part of the two-sided ideal generated by all S_ij."""
    if serres is None:
        serres = [serre_elem(c, i, j) for i in range(c.n) for j in range(c.n) if i != j]
    polys = [_polynomial_serre(s) for s in serres]
    gens = ideal_generators(c, nu, polys)
    if not gens:
        return 0, gens
    words = words_of_degree(nu)
    rows = []
    for g in gens:
        row = []
        for w in words:
            x = g.terms.get(w)
            row.append(x.num if x is not None else LPoly())
        rows.append(row)
    return rank(rows), gens


def radical_equals_serre_ideal(c, nu, tr_bound=6, report=False):
    """Compare the Serre ideal with the radical in degree nu.

    The ideal lies in the radical when every generator pairs to zero; equal
    dimensions then force equality.
    """
    nu = tuple(nu)
    if sum(nu) > tr_bound:
        raise ValueError(f"degree {list(nu)} exceeds the bound {tr_bound}")
    q = quotient(c, nu)
    rad_dim = len(q.words) - q.rank
    ideal_dim, gens = serre_ideal_rank(c, nu)
    contained = all(q.is_zero(g) for g in gens)
    ok = contained and ideal_dim == rad_dim
    if report:
        return ok, {"degree": list(nu), "dim_free": len(q.words), "dim_f": q.rank,
                    "radical_dim": rad_dim, "ideal_dim": ideal_dim,
                    "ideal_in_radical": contained}
    return ok


def binomial_form(c, i, j, exponent_sign=1):
    """sum_p (-1)^p t^(p(Omega_ij - Omega_ji)) [N+1, p]_{v_i} theta_i^p theta_j theta_i^p'.

    ``exponent_sign=-1`` flips the sign of the t-exponent (a negative control).
    """
    N = serre_order(c, i, j)
    d = c.d(i)
    total = FreeElem(c)
    for p in range(N + 2):
        pp = N + 1 - p
        e = exponent_sign * p * (c.omega[i][j] - c.omega[j][i])
        coef = qbinom_poly(N + 1, p, "v", d).shift(0, e) * ((-1) ** p)
        total = total + FreeElem.word(c, (i,) * p + (j,) + (i,) * pp, RatFunc.from_lpoly(coef))
    return total


def serre_form_equivalence(c, i, j, exponent_sign=1):
    """The binomial form equals [N+1]!_{v_i,t_i} * S_ij exactly in the free algebra."""
    s = serre_elem(c, i, j)
    fac = RatFunc.from_lpoly(qfactorial_poly(s.N + 1, "vt", c.d(i)))
    return binomial_form(c, i, j, exponent_sign) == s.element.scale(fac)


def two_parameter_binomial_form(c, i, j):
    """sum_p (-1)^p t^(-p(p' + Omega_ji - Omega_ij)) [N+1, p]_{v_i,t_i} theta_i^p theta_j theta_i^p'.

    The Serre relation written with two-parameter binomials and plain
    powers; it equals [N+1]!_{v_i,t_i} S_ij (see :func:`binomial_forms_agree`).
    """
    N = serre_order(c, i, j)
    d = c.d(i)
    total = FreeElem(c)
    for p in range(N + 2):
        pp = N + 1 - p
        e = -p * (c.omega[j][i] - c.omega[i][j])
        coef = qbinom_poly(N + 1, p, "vt", d).shift(0, -d * p * pp + e) * ((-1) ** p)
        total = total + FreeElem.word(c, (i,) * p + (j,) + (i,) * pp, RatFunc.from_lpoly(coef))
    return total


def binomial_forms_agree(c, i, j):
    """Both binomial forms equal [N+1]!_{v_i,t_i} S_ij in the free algebra."""
    s = serre_elem(c, i, j)
    fac = RatFunc.from_lpoly(qfactorial_poly(s.N + 1, "vt", c.d(i)))
    target = s.element.scale(fac)
    return (two_parameter_binomial_form(c, i, j) == target
            and binomial_form(c, i, j) == target)
