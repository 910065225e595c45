import pytest

from twoparam.cartan import validate
from twoparam.freealg import FreeElem, divided_power
from twoparam.hwmod import (DepthError, HWData, ModuleVector, act_E, act_F, act_K, dimensions,
                            divided_F, e_well_defined, highest, is_zero, k_scalar,
                            module_basis_from_cb, module_table, relation_check, total_dimension,
                            vector, weight_check, weight_space, weight_space_data, weights)
from twoparam.ring import LPoly, RatFunc, qint_poly
from conftest import P


def qint_v(n):
    """[n]_v = (v^n - v^-n)/(v - v^-1) as a RatFunc, for any integer n."""
    num = LPoly({(n, 0): 1, (-n, 0): -1}) if n else LPoly()
    return RatFunc(num, LPoly({(1, 0): 1, (-1, 0): -1}))


def e_on_power_oracle(lam, n, eps):
    """E theta^n xi_0 = (sum_{m<n} c(m)) theta^(n-1) xi_0 in rank one with Omega = [1],
    where c(m) = eps (v^(lam-2m) - v^(2m-lam)) / (v - v^-1) = eps [lam - 2m]_v."""
    total = RatFunc(0)
    for m in range(n):
        total = total + qint_v(lam - 2 * m)
    return total * eps


@pytest.fixture(scope="module")
def adj(a2):
    return HWData(a2, (1, 1))


def test_hwdata_validation(a1):
    with pytest.raises(ValueError):
        HWData(a1, (-1,))
    with pytest.raises(ValueError):
        HWData(a1, (1, 2))
    with pytest.raises(ValueError):
        HWData(a1, (1,), eps=(0,))
    h = HWData(a1, (2,), eps=(P("t"),))
    assert h.eps == (P("t"),)


@pytest.mark.parametrize("lam", range(5))
def test_a1_dimensions(a1, lam):
    h = HWData(a1, (lam,), depth_bound=lam + 3)
    dims = dimensions(h)
    assert dims == {(n,): 1 for n in range(lam + 1)}
    for n in range(lam + 4):
        assert weight_space_data(h, (n,)).dim == (1 if n <= lam else 0)
    assert total_dimension(h) == lam + 1


def test_weight_space_examples(a1, a2):
    h = HWData(a1, (2,))
    assert [weight_space_data(h, (n,)).dim for n in range(4)] == [1, 1, 1, 0]
    assert [m.rep for m in weight_space(h, (0,))] == [FreeElem.one(a1)]
    h2 = HWData(a2, (0, 0))
    assert dimensions(h2) == {(0, 0): 1}


def test_a2_adjoint(adj):
    assert total_dimension(adj) == 8
    assert dimensions(adj) == {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 2,
                               (2, 1): 1, (1, 2): 1, (2, 2): 1}
    pairs = module_basis_from_cb(adj)
    assert len(pairs) == 8
    per = {}
    for cand, m in pairs:
        per[m.depth] = per.get(m.depth, 0) + 1
    assert per == dimensions(adj)


def test_a1_basis_from_cb(a1):
    h = HWData(a1, (2,))
    got = [m.rep for _, m in module_basis_from_cb(h)]
    assert got == [divided_power(a1, 0, n) for n in range(3)]
    assert [m.rep for _, m in module_basis_from_cb(HWData(a1, (0,)))] == [FreeElem.one(a1)]


def test_act_F(a1):
    h = HWData(a1, (2,))
    x0 = highest(h)
    assert act_F(h, 0, x0).rep == FreeElem.gen(a1, 0)
    for n in range(3):
        lhs = act_F(h, 0, divided_F(h, 0, n))
        rhs = divided_F(h, 0, n + 1)
        assert lhs.rep == rhs.rep.scale(RatFunc(qint_poly(n + 1, "vt")))
    assert is_zero(h, act_F(h, 0, divided_F(h, 0, 2)))
    assert not is_zero(h, divided_F(h, 0, 2))
    with pytest.raises(DepthError):
        act_F(h, 0, divided_F(h, 0, 8))


def test_act_K_examples(a1, a2):
    h = HWData(a1, (2,))
    assert act_K(h, 0, highest(h)) == P("v^2")
    assert act_K(h, 0, highest(h), primed=True) == P("v^-2")
    assert act_K(h, 0, act_F(h, 0, highest(h))) == 1
    h = HWData(a2, (1, 2), eps=(P("t"), 2))
    x0 = highest(h)
    assert act_K(h, 0, x0) == P("t*v")
    assert act_K(h, 1, x0, primed=True) == P("2*v^-2")
    # one letter theta_j: v^(-i.j) t^(<j,i> - <i,j>) = v t
    assert k_scalar(h, 0, (0, 1)) == P("t*v") * P("v*t")


def test_act_E_examples(a1):
    h = HWData(a1, (2,))
    x0 = highest(h)
    assert act_E(h, 0, x0).rep.is_zero()
    assert act_E(h, 0, act_F(h, 0, x0)).rep == FreeElem.one(a1).scale(P("v+v^-1"))
    e = act_E(h, 0, divided_F(h, 0, 2))
    assert weight_space_data(h, (1,)).coords(e.rep) == [P("t^-1")]


@pytest.mark.parametrize("lam", range(5))
def test_a1_e_scalars_match_rewriting_oracle(a1, lam):
    for eps in (RatFunc(1), P("t^2+v")):
        h = HWData(a1, (lam,), eps=(eps,))
        for n in range(1, lam + 1):
            e = act_E(h, 0, ModuleVector(FreeElem.word(a1, (0,) * n), (n,)))
            assert e.rep == FreeElem.word(a1, (0,) * (n - 1), e_on_power_oracle(lam, n, eps))
            # divided powers: eps t^(1-n) [lam - n + 1]_v
            e = act_E(h, 0, divided_F(h, 0, n))
            got = weight_space_data(h, (n - 1,)).coords(e.rep)
            base = weight_space_data(h, (n - 1,)).coords(divided_F(h, 0, n - 1).rep)
            want = eps * RatFunc.from_lpoly(LPoly.monomial(0, 1 - n)) * qint_v(lam - n + 1)
            assert got[0] == want * base[0]
            # at t = 1 and eps = 1 this is the classical scalar
            if eps == 1:
                assert (got[0] / base[0]).subs_t1() == qint_v(lam - n + 1)


@pytest.mark.parametrize("lam", range(5))
def test_a1_relations(a1, lam):
    h = HWData(a1, (lam,), depth_bound=lam + 2)
    for mu in weights(h):
        if sum(mu) > lam + 1:
            continue
        for m in weight_space_data(h, mu).basis():
            assert relation_check(h, m, 0, 0)
            assert weight_check(h, m, 0, 0)
        assert e_well_defined(h, mu)


def test_a2_relations(adj):
    for mu in weights(adj):
        if sum(mu) > 3:
            continue
        for m in weight_space_data(adj, mu).basis():
            for i in range(2):
                for j in range(2):
                    assert relation_check(adj, m, i, j)
                    assert weight_check(adj, m, i, j)
        assert e_well_defined(adj, mu)


def test_e_from_lowest_reaches_highest(adj):
    # E_0 E_1 E_0 ... applied along a word recovers a multiple of xi_0
    m = act_F(adj, 0, act_F(adj, 1, highest(adj)))
    e = act_E(adj, 1, act_E(adj, 0, m))
    assert e.depth == (0, 0)
    assert not e.rep.is_zero()


def test_vector_and_table(a1):
    h = HWData(a1, (1,), depth_bound=3)
    with pytest.raises(ValueError):
        vector(h, FreeElem.gen(a1, 0) + FreeElem.one(a1))
    assert vector(h, FreeElem.gen(a1, 0)).depth == (1,)
    tab = module_table(h)
    assert tab["dimensions"] == {"0": 1, "1": 1}
    assert tab["total"] == 2
    assert {"i": 0, "vector": [0], "image": {"1": "1"}} in tab["E"]
