"""Truncated power series and local expansions at the points P_j.

At each P_j the coordinate z is a uniformizer; x - a_j and y admit power
series expansions in z with valuations n^3 + 1 and n^2 - n + 1 respectively.
Series use an absolute-precision model: coefficients are indexed 0..prec-1
and a product has the min of the operand precisions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curve import GKParams, h_coeff
from .field import FieldCtx


class SeriesError(Exception):
    pass


class NonUnitInverse(SeriesError):
    pass


class PrecisionNotReached(SeriesError):
    pass


class Series:
    """Truncated power series over a finite field, coefficients in z."""

    __slots__ = ("ctx", "coeffs", "prec")

    def __init__(self, ctx: FieldCtx, coeffs, prec: int):
        self.ctx = ctx
        arr = np.zeros(prec, dtype=np.int64)
        c = np.asarray(coeffs, dtype=np.int64)[:prec]
        arr[: len(c)] = c
        self.coeffs = arr
        self.prec = prec

    @classmethod
    def zero(cls, ctx, prec):
        return cls(ctx, [], prec)

    @classmethod
    def const(cls, ctx, value, prec):
        return cls(ctx, [value], prec)

    @classmethod
    def z(cls, ctx, prec):
        return cls(ctx, [0, 1], prec)

    def __eq__(self, other):
        return (
            isinstance(other, Series)
            and self.prec == other.prec
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __add__(self, other):
        prec = min(self.prec, other.prec)
        return Series(self.ctx, self.ctx.vadd(self.coeffs[:prec], other.coeffs[:prec]), prec)

    def __sub__(self, other):
        prec = min(self.prec, other.prec)
        return Series(self.ctx, self.ctx.vsub(self.coeffs[:prec], other.coeffs[:prec]), prec)

    def __mul__(self, other):
        ctx = self.ctx
        prec = min(self.prec, other.prec)
        out = np.zeros(prec, dtype=np.int64)
        a = self.coeffs[:prec]
        b = other.coeffs[:prec]
        for i in np.nonzero(a)[0]:
            seg = ctx.vmul(b[: prec - i], int(a[i]))
            out[i:] = ctx.vadd(out[i:], seg)
        return Series(ctx, out, prec)

    def scale(self, value: int):
        return Series(self.ctx, self.ctx.vmul(self.coeffs, value), self.prec)

    def shift(self, k: int):
        """Multiply by z^k (k >= 0)."""
        out = np.zeros(self.prec, dtype=np.int64)
        if k < self.prec:
            out[k:] = self.coeffs[: self.prec - k]
        return Series(self.ctx, out, self.prec)

    def pow(self, k: int):
        if k < 0:
            raise SeriesError("negative series power")
        result = Series.const(self.ctx, 1, self.prec)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inv_unit(self):
        """Inverse of a series with nonzero constant term."""
        ctx = self.ctx
        a0 = int(self.coeffs[0])
        if a0 == 0:
            raise NonUnitInverse("series has zero constant term")
        inv0 = ctx.inv(a0)
        out = np.zeros(self.prec, dtype=np.int64)
        out[0] = inv0
        a = self.coeffs
        for k in range(1, self.prec):
            hi = min(k, len(a) - 1)
            s = 0
            for i in range(1, hi + 1):
                if a[i]:
                    s = ctx.add(s, ctx.mul(int(a[i]), int(out[k - i])))
            out[k] = ctx.mul(ctx.neg(s), inv0)
        return Series(ctx, out, self.prec)

    def valuation(self):
        nz = np.nonzero(self.coeffs)[0]
        return int(nz[0]) if nz.size else None

    def is_zero(self):
        return not self.coeffs.any()


@dataclass
class LocalChart:
    """Expansions xi = x - a_j and eta = y in the uniformizer z at P_j."""

    j: int  # 1-based index of P_j
    a_j: int
    xi: Series
    eta: Series
    prec: int


def _h_series(params: GKParams, x_series: Series) -> Series:
    """h evaluated on a series argument."""
    ctx = params.field
    prec = x_series.prec
    step = x_series.pow(params.n - 1) if params.n > 1 else Series.const(ctx, 1, prec)
    acc = Series.zero(ctx, prec)
    power = Series.const(ctx, 1, prec)
    for i in range(params.n + 1):
        acc = acc + power.scale(h_coeff(params, i))
        if i < params.n:
            power = power * step
    return acc


def expand_at(params: GKParams, j: int, a_j: int, prec: int) -> LocalChart:
    """Solve the two curve equations for (xi, eta) as series in z at P_j.

    eta = z^a / h(a_j + xi) from the first equation and
    xi = eta^(n+1) - xi^n from the second (using (a_j + xi)^n = a_j^n + xi^n
    in characteristic p); fixed-point iteration from xi = 0 gains at least a
    orders of precision per round.
    """
    if prec < 1:
        raise SeriesError("precision must be >= 1")
    ctx = params.field
    z = Series.z(ctx, prec)
    za = z.pow(params.a)
    xi = Series.zero(ctx, prec)
    eta = Series.zero(ctx, prec)
    const_aj = Series.const(ctx, a_j, prec)
    max_rounds = prec // params.a + 4
    for _ in range(max_rounds):
        hx = _h_series(params, const_aj + xi)
        eta = za * hx.inv_unit()
        xi_new = eta.pow(params.n + 1) - xi.pow(params.n)
        if xi_new == xi:
            break
        xi = xi_new
    # verify both equations to O(z^prec)
    res1 = za - eta * _h_series(params, const_aj + xi)
    res2 = xi.pow(params.n) + xi - eta.pow(params.n + 1)
    if not (res1.is_zero() and res2.is_zero()):
        raise PrecisionNotReached(f"expansion at P_{j} did not converge")
    if eta.valuation() != params.a or xi.valuation() != params.c:
        if prec > params.c:  # with prec <= c the valuations are not observable
            raise PrecisionNotReached(f"unexpected valuations at P_{j}")
    return LocalChart(j=j, a_j=a_j, xi=xi, eta=eta, prec=prec)


def monomial_series(params: GKParams, chart: LocalChart, alpha: int, beta: int, gamma: int) -> Series:
    """Expansion of x^alpha * y^beta * z^gamma at P_j (x = a_j + xi, y = eta)."""
    ctx = params.field
    x_series = Series.const(ctx, chart.a_j, chart.prec) + chart.xi
    out = x_series.pow(alpha) * chart.eta.pow(beta)
    return out.shift(gamma)


def pole_order_at_inf(params: GKParams, alpha: int, beta: int, gamma: int) -> int:
    """Pole order of x^alpha y^beta z^gamma at P_inf (x, y, z have poles c, na, b)."""
    return alpha * params.c + beta * params.na + gamma * params.b
