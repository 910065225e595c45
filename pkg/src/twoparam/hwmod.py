"""Highest-weight modules L(lambda, eps) as quotients of the algebra f.

A vector is represented by an element x of the free algebra standing for
x . xi_0.  Two representatives agree when their difference lies in the
radical plus the left ideal generated by the right multiples
w theta_i^(lambda_i + 1).  F_i acts by left multiplication with theta_i,
K_i and K_i' by scalars on each weight space, and E_i by the rewriting

    E_i (theta_j x xi_0) = theta_j E_i (x xi_0)
                           + delta_ij (K_i - K_i')/(v_i - v_i^-1) (x xi_0),

with E_i xi_0 = 0.
"""
from dataclasses import dataclass
from functools import lru_cache

from .bilform import quotient
from .canbasis import a2_basis, rank1_basis, A2_OMEGA
from .freealg import FreeElem, degree, mul
from .linalg import clear_denominators, rref, solve
from .ring import LPoly, RatFunc, as_ratfunc, mono_mul


class DepthError(ValueError):
    pass


@dataclass(frozen=True)
class HWData:
    cartan: object
    lam: tuple
    eps: tuple = None
    depth_bound: int = 8

    def __post_init__(self):
        n = self.cartan.n
        lam = tuple(int(x) for x in self.lam)
        if len(lam) != n or any(x < 0 for x in lam):
            raise ValueError("lambda must be a vector of nonnegative integers of rank size")
        object.__setattr__(self, "lam", lam)
        eps = self.eps
        if eps is None:
            eps = (1,) * n
        eps = tuple(as_ratfunc(e) for e in eps)
        if len(eps) != n:
            raise ValueError("eps has the wrong length")
        if any(e.is_zero() for e in eps):
            raise ValueError("eps entries must be nonzero")
        object.__setattr__(self, "eps", eps)


@dataclass
class ModuleVector:
    rep: FreeElem
    depth: tuple

    def __str__(self):
        return f"({self.rep}) xi0"


def _check_depth(h, mu):
    if sum(mu) > h.depth_bound:
        raise DepthError(f"depth {list(mu)} exceeds the bound {h.depth_bound}")


def highest(h):
    return ModuleVector(FreeElem.one(h.cartan), (0,) * h.cartan.n)


def vector(h, x):
    """Wrap a homogeneous free-algebra element as a module vector."""
    degs = x.degrees()
    if len(degs) > 1:
        raise ValueError("module vectors must be homogeneous")
    mu = next(iter(degs)) if degs else (0,) * h.cartan.n
    return ModuleVector(x, mu)


# -- weight spaces --------------------------------------------------------------------

class WeightSpace:
    """L(lambda, eps) at weight lambda - mu, in coordinates of the quotient of f."""

    def __init__(self, h, mu):
        c = h.cartan
        self.h = h
        self.mu = tuple(mu)
        self.q = q = quotient(c, self.mu)
        gens = []
        for i, k in enumerate(self.mu):
            p = h.lam[i] + 1
            if k < p:
                continue
            rest = list(self.mu)
            rest[i] -= p
            tail = FreeElem.word(c, (i,) * p)
            for w in quotient(c, tuple(rest)).basis_words:
                gens.append(mul(FreeElem.word(c, w), tail))
        self.kernel_gens = gens
        if gens and q.rank:
            rows = clear_denominators([q.coords(g) for g in gens])
            R, piv, _ = rref(rows)
            self.kernel_rows = [R[k] for k in range(len(piv))]
            pivset = set(piv)
        else:
            self.kernel_rows = []
            pivset = set()
        self.free_cols = [k for k in range(q.rank) if k not in pivset]
        self.basis_words = [q.basis_words[k] for k in self.free_cols]

    @property
    def dim(self):
        return len(self.free_cols)

    def basis(self):
        c = self.h.cartan
        return [ModuleVector(FreeElem.word(c, w), self.mu) for w in self.basis_words]

    def coords(self, x):
        """Coordinates of x xi_0 in the basis ``basis_words``."""
        if isinstance(x, ModuleVector):
            x = x.rep
        if x.is_zero() or not self.dim:
            return [RatFunc(0)] * self.dim
        target = self.q.coords(x)
        r = self.q.rank
        nk = len(self.kernel_rows)
        cols = [list(row) for row in self.kernel_rows]
        for k in self.free_cols:
            cols.append([LPoly.const(1) if m == k else LPoly() for m in range(r)])
        rows = [[as_ratfunc(cols[a][m]) for a in range(len(cols))] for m in range(r)]
        sol = solve(rows, target)
        return sol[nk:]

    def is_zero(self, x):
        return all(e.is_zero() for e in self.coords(x))


@lru_cache(maxsize=None)
def weight_space_data(h, mu):
    _check_depth(h, mu)
    return WeightSpace(h, tuple(mu))


def weight_space(h, mu):
    """A basis of L(lambda, eps) at weight lambda - mu (pivot words times xi_0)."""
    return weight_space_data(h, tuple(mu)).basis()


def weights(h):
    """All depths mu with tr(mu) <= depth_bound."""
    n = h.cartan.n

    def rec(k, left):
        if k == n:
            yield ()
            return
        for a in range(left + 1):
            for rest in rec(k + 1, left - a):
                yield (a,) + rest

    return sorted(rec(0, h.depth_bound), key=lambda m: (sum(m), m))


def dimensions(h):
    """Nonzero weight-space dimensions within the depth bound."""
    out = {}
    for mu in weights(h):
        d = weight_space_data(h, mu).dim
        if d:
            out[mu] = d
    return out


def total_dimension(h):
    return sum(dimensions(h).values())


def is_zero(h, m):
    return weight_space_data(h, m.depth).is_zero(m.rep)


# -- actions ------------------------------------------------------------------------------

def act_F(h, i, m):
    mu = list(m.depth)
    mu[i] += 1
    mu = tuple(mu)
    _check_depth(h, mu)
    return ModuleVector(mul(FreeElem.word(h.cartan, (i,)), m.rep), mu)


def k_scalar(h, i, mu, primed=False):
    """The eigenvalue of K_i (or K_i') at depth mu."""
    c = h.cartan
    ev = 0
    et = 0
    for j, k in enumerate(mu):
        ev += c.dot(i, j) * k
        et += (c.angle(j, i) - c.angle(i, j)) * k
    if primed:
        return mono_mul(h.eps[i], -h.lam[i] + ev, et)
    return mono_mul(h.eps[i], h.lam[i] - ev, et)


def act_K(h, i, m, primed=False):
    return k_scalar(h, i, m.depth, primed)


def _commutator_scalar(h, i, mu):
    d = h.cartan.d(i)
    den = LPoly({(d, 0): 1, (-d, 0): -1})
    return (k_scalar(h, i, mu) - k_scalar(h, i, mu, True)) / RatFunc(den)


@lru_cache(maxsize=None)
def _e_word(h, i, word):
    """E_i applied to word . xi_0, as a dict word -> RatFunc."""
    if not word:
        return {}
    j, rest = word[0], word[1:]
    out = {}
    for w, a in _e_word(h, i, rest).items():
        out[(j,) + w] = a
    if j == i:
        s = _commutator_scalar(h, i, degree(rest, h.cartan.n))
        if not s.is_zero():
            out[rest] = out[rest] + s if rest in out else s
    return {w: a for w, a in out.items() if not a.is_zero()}


def act_E(h, i, m):
    if m.depth[i] == 0:
        mu = list(m.depth)
        return ModuleVector(FreeElem(h.cartan), tuple(mu))
    c = h.cartan
    terms = {}
    for w, a in m.rep.terms.items():
        for u, b in _e_word(h, i, w).items():
            terms[u] = terms[u] + a * b if u in terms else a * b
    mu = list(m.depth)
    mu[i] -= 1
    return ModuleVector(FreeElem(c, terms), tuple(mu))


def divided_F(h, i, n, m=None):
    """F_i^(n) applied to m (default xi_0)."""
    from .freealg import divided_power
    if m is None:
        m = highest(h)
    mu = list(m.depth)
    mu[i] += n
    mu = tuple(mu)
    _check_depth(h, mu)
    return ModuleVector(mul(divided_power(h.cartan, i, n), m.rep), mu)


# -- consistency checks ---------------------------------------------------------------------

def relation_check(h, m, i, j):
    """E_i F_j m - F_j E_i m = delta_ij (K_i - K_i')/(v_i - v_i^-1) m in L."""
    lhs_a = act_E(h, i, act_F(h, j, m))
    lhs_b = act_F(h, j, act_E(h, i, m))
    diff = lhs_a.rep - lhs_b.rep
    if i == j:
        diff = diff - m.rep.scale(_commutator_scalar(h, i, m.depth))
    if diff.is_zero():
        return True
    return weight_space_data(h, lhs_a.depth).is_zero(diff)


def weight_check(h, m, i, j):
    """K_i scalars change by v^(-i.j) t^(<j,i>-<i,j>) under F_j (and the primed analogue)."""
    c = h.cartan
    f = act_F(h, j, m)
    a = act_K(h, i, f) == mono_mul(act_K(h, i, m), -c.dot(i, j), c.angle(j, i) - c.angle(i, j))
    b = act_K(h, i, f, True) == mono_mul(act_K(h, i, m, True), c.dot(i, j), c.angle(j, i) - c.angle(i, j))
    return a and b


def e_well_defined(h, mu):
    """E_i maps the kernel at depth mu (radical plus kernel ideal) to zero."""
    c = h.cartan
    ws = weight_space_data(h, mu)
    q = ws.q
    # spanning set of the kernel: all words minus their basis expansion, plus generators
    vecs = list(ws.kernel_gens)
    for w in q.words:
        x = FreeElem.word(c, w)
        vecs.append(x - q.element(q.coords(x)))
    for x in vecs:
        if x.is_zero():
            continue
        for i in range(c.n):
            if mu[i] == 0:
                continue
            e = act_E(h, i, ModuleVector(x, mu))
            if not e.rep.is_zero() and not weight_space_data(h, e.depth).is_zero(e.rep):
                return False
    return True


# -- basis from canonical candidates ---------------------------------------------------------

def _candidates(h, mu):
    c = h.cartan
    if c.n == 1:
        return [rank1_basis(c, 0, mu[0])]
    if c.n == 2 and c.omega == A2_OMEGA:
        return a2_basis(c, mu)
    raise ValueError("canonical candidates are only available for A1 and the A2 matrix")


def module_basis_from_cb(h):
    """Images of canonical candidates that are nonzero in the module, weight by weight."""
    out = []
    for mu in weights(h):
        ws = weight_space_data(h, mu)
        if ws.q.rank == 0:
            continue
        for cand in _candidates(h, mu):
            if not ws.is_zero(cand.element):
                out.append((cand, ModuleVector(cand.element, mu)))
    return out


def module_table(h):
    """Dimensions and action matrices on the weight-space bases, for JSON output."""
    c = h.cartan
    dims = dimensions(h)
    table = {"dimensions": {",".join(map(str, mu)): d for mu, d in dims.items()},
             "total": sum(dims.values()), "E": [], "F": [], "K": []}
    for mu in dims:
        ws = weight_space_data(h, mu)
        for w, m in zip(ws.basis_words, ws.basis()):
            for i in range(c.n):
                table["K"].append({"i": i, "vector": list(w),
                                   "K": str(act_K(h, i, m)), "Kprime": str(act_K(h, i, m, True))})
                if sum(mu) < h.depth_bound:
                    f = act_F(h, i, m)
                    tgt = weight_space_data(h, f.depth)
                    table["F"].append({"i": i, "vector": list(w),
                                       "image": _coords_json(tgt, f)})
                if mu[i]:
                    e = act_E(h, i, m)
                    tgt = weight_space_data(h, e.depth)
                    table["E"].append({"i": i, "vector": list(w),
                                       "image": _coords_json(tgt, e)})
    return table


def _coords_json(ws, m):
    return {",".join(map(str, w)) or "1": str(x)
            for w, x in zip(ws.basis_words, ws.coords(m.rep)) if not x.is_zero()}
