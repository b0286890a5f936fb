import random

import pytest

from gkcodes import curve
from gkcodes.field import ctx_create
from gkcodes.localseries import (
    NonUnitInverse,
    Series,
    expand_at,
    monomial_series,
    pole_order_at_inf,
)


@pytest.fixture(scope="module")
def F():
    return ctx_create(2, 6)


def test_series_mul(F):
    z = Series.z(F, 10)
    z2 = z * z
    assert z2.valuation() == 2 and z2.prec == 10


def test_inv_unit_geometric(F):
    one_plus_z = Series(F, [1, 1], 8)
    inv = one_plus_z.inv_unit()
    # 1/(1+z) = 1 - z + z^2 - ... (signs collapse in char 2)
    expected = [F.scalar((-1) ** k) for k in range(8)]
    assert list(inv.coeffs) == expected
    assert (inv * one_plus_z).coeffs[0] == 1
    assert not (inv * one_plus_z - Series.const(F, 1, 8)).coeffs.any()


def test_inv_unit_char3():
    F3 = ctx_create(3, 2)
    s = Series(F3, [1, 1], 6)
    inv = s.inv_unit()
    assert list(inv.coeffs) == [F3.scalar((-1) ** k) for k in range(6)]


def test_inv_non_unit(F):
    with pytest.raises(NonUnitInverse):
        Series.z(F, 5).inv_unit()


def test_pow_zero_and_shift(F):
    s = Series(F, [1, 1, 1], 6)
    assert list(s.pow(0).coeffs) == [1, 0, 0, 0, 0, 0]
    assert s.shift(2).valuation() == 2


@pytest.mark.parametrize("n,a,c", [(2, 3, 9), (3, 7, 28)])
def test_expansion_valuations(n, a, c):
    params = curve.params(n)
    roots = curve.zero_trace_roots(params)
    ch = expand_at(params, 1, roots[0], max(c + 5, 30))
    assert ch.eta.valuation() == a
    assert ch.xi.valuation() == c


def test_expansion_satisfies_equations(params2):
    # prec 30 residual check is the defining property; expand_at raises otherwise
    roots = curve.zero_trace_roots(params2)
    for j, a_j in enumerate(roots, start=1):
        ch = expand_at(params2, j, a_j, 30)
        F = params2.field
        x = Series.const(F, a_j, 30) + ch.xi
        from gkcodes.localseries import _h_series

        res1 = Series.z(F, 30).pow(params2.a) - ch.eta * _h_series(params2, x)
        res2 = x.pow(params2.n) + x - ch.eta.pow(params2.n + 1)
        assert res1.is_zero() and res2.is_zero()


def test_monomial_series_trivia(params2):
    roots = curve.zero_trace_roots(params2)
    ch = expand_at(params2, 2, roots[1], 20)
    one = monomial_series(params2, ch, 0, 0, 0)
    assert list(one.coeffs[:3]) == [1, 0, 0]
    z = monomial_series(params2, ch, 0, 0, 1)
    assert z.valuation() == 1
    eta = monomial_series(params2, ch, 0, 1, 0)
    assert eta.valuation() == params2.a


def test_monomial_valuation_case_split(params2):
    """val = beta*a + gamma for a_j != 0, and alpha*c + beta*a + gamma for a_j = 0."""
    a, c = params2.a, params2.c
    roots = curve.zero_trace_roots(params2)  # [0, 1] over GF(64)
    rng = random.Random(3)
    prec = 2 * c + 12
    charts = {a_j: expand_at(params2, j, a_j, prec) for j, a_j in enumerate(roots, 1)}
    for _ in range(500):
        alpha, beta, gamma = rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2)
        for a_j, ch in charts.items():
            v = monomial_series(params2, ch, alpha, beta, gamma).valuation()
            if a_j == 0:
                expected = alpha * c + beta * a + gamma
            else:
                expected = beta * a + gamma
            if expected < prec:
                assert v == expected


@pytest.mark.parametrize("n", [2, 3])
def test_pole_order_residues_distinct_mod_c(n):
    params = curve.params(n)
    residues = set()
    for beta in range(n + 1):
        for gamma in range(n * n - n + 1):
            residues.add((beta * params.na + gamma * params.b) % params.c)
    assert len(residues) == (n + 1) * (n * n - n + 1) == params.c


def test_pole_order_at_inf(params2):
    assert pole_order_at_inf(params2, 0, 1, 0) == 6
    assert pole_order_at_inf(params2, 0, 0, 1) == 8
    assert pole_order_at_inf(params2, 0, 0, 0) == 0
    assert pole_order_at_inf(params2, 1, 0, 0) == 9
