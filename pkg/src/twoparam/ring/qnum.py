"""Quantum integers, factorials and binomial coefficients.

Two flavors are provided.  The one-parameter flavor ``"v"`` is the usual
balanced quantum integer [n]_v = v^(n-1) + v^(n-3) + ... + v^(1-n).  The
two-parameter flavor ``"vt"`` is ((vt)^n - v^-n t^n) / (vt - v^-1 t), which
works out to t^(n-1) [n]_v.  A scale d substitutes v -> v^d and t -> t^d.
"""
from dataclasses import dataclass
from functools import lru_cache

from .lpoly import LPoly, ONE
from .ratfunc import RatFunc

FLAVORS = ("v", "vt")


@dataclass(frozen=True)
class QInt:
    n: int
    flavor: str = "vt"
    d: int = 1

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("quantum integer index must be nonnegative")
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if self.d < 1:
            raise ValueError("scale must be a positive integer")


@lru_cache(maxsize=None)
def qint_poly(n, flavor="vt", d=1):
    """The quantum integer as an LPoly."""
    if n == 0:
        return LPoly()
    if flavor == "v":
        return LPoly({(d * (n - 1 - 2 * k), 0): 1 for k in range(n)})
    if flavor != "vt":
        raise ValueError(f"unknown flavor {flavor!r}")
    top = LPoly({(d * n, d * n): 1, (-d * n, d * n): -1})
    bottom = LPoly({(d, d): 1, (-d, d): -1})
    return top.divexact(bottom)


def qint_eval(q):
    return RatFunc.from_lpoly(qint_poly(q.n, q.flavor, q.d))


@lru_cache(maxsize=None)
def qfactorial_poly(n, flavor="vt", d=1):
    if n < 0:
        raise ValueError("factorial of a negative integer")
    out = ONE
    for k in range(2, n + 1):
        out = out * qint_poly(k, flavor, d)
    return out


def qfactorial(n, flavor="vt", d=1):
    """[n]! in the requested flavor, as a RatFunc."""
    return RatFunc.from_lpoly(qfactorial_poly(n, flavor, d))


@lru_cache(maxsize=None)
def qbinom_poly(n, k, flavor="vt", d=1):
    if k < 0 or n < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if k > n:
        raise ValueError(f"binomial needs k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        # the vt-flavor carries t^(d k (n-k)), which is 1 here
        return ONE
    # q-Pascal: [n,k] = v^{d(n-k)}[n-1,k-1] + v^{-dk}[n-1,k] (v-flavor)
    a = qbinom_poly(n - 1, k - 1, "v", d).shift(d * (n - k), 0)
    b = qbinom_poly(n - 1, k, "v", d).shift(-d * k, 0)
    val = a + b
    if flavor == "vt":
        val = val.shift(0, d * k * (n - k))
    elif flavor != "v":
        raise ValueError(f"unknown flavor {flavor!r}")
    return val


def qbinom(n, k, flavor="vt", d=1):
    return RatFunc.from_lpoly(qbinom_poly(n, k, flavor, d))
