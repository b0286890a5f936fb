"""The Giulietti-Korchmaros curve: constants, membership, point enumeration.

The curve over GF(n^6) is cut out by

    z^(n^2-n+1) = y * h(x),    x^n + x = y^(n+1),

with h(X) = sum_{i=0}^{n} (-1)^(i+1) X^(i(n-1)).  Rational points split into
the small orbit {P_inf} + {P_j} + {Q_l} (the z = 0 locus plus infinity) and
the large orbit of points with z != 0.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field as dc_field

import numpy as np

from .field import FieldCtx, ctx_create


class CurveError(Exception):
    pass


class NotPrimePower(CurveError):
    pass


class UnsupportedSize(CurveError):
    pass


class CountMismatch(CurveError):
    pass


@dataclass(frozen=True)
class Point:
    """Affine point (x, y, z); x is None for the single point at infinity."""

    x: int | None = None
    y: int = 0
    z: int = 0

    @property
    def is_infinity(self) -> bool:
        return self.x is None


INFINITY = Point()


@dataclass(frozen=True)
class GKParams:
    n: int
    p: int
    e: int
    a: int  # n^2 - n + 1
    b: int  # n^3
    c: int  # n^3 + 1
    q: int  # n^3
    genus: int
    expected_points: int
    field: FieldCtx = dc_field(compare=False)

    @property
    def na(self) -> int:
        """Pole order of y at infinity (smallest semigroup generator)."""
        return self.n * self.a


def _prime_power(n: int):
    f = 2
    m = n
    while f * f <= m:
        if m % f == 0:
            e = 0
            while m % f == 0:
                m //= f
                e += 1
            if m != 1:
                return None
            return f, e
        f += 1
    return n, 1  # n itself prime


def params(n: int, max_n: int = 4) -> GKParams:
    """Curve constants for a given prime power n; field is GF(p^(6e))."""
    if n < 2:
        raise NotPrimePower(f"n must be a prime power >= 2, got {n}")
    pe = _prime_power(n)
    if pe is None:
        raise NotPrimePower(f"{n} is not a prime power")
    p, e = pe
    if n > max_n:
        raise UnsupportedSize(f"n={n} exceeds the desk-scale cap {max_n}")
    a = n * n - n + 1
    b = n ** 3
    c = b + 1
    genus = (b + 1) * (n * n - 2) // 2 + 1
    expected = n ** 8 - n ** 6 + n ** 5 + 1
    return GKParams(
        n=n, p=p, e=e, a=a, b=b, c=c, q=b, genus=genus,
        expected_points=expected, field=ctx_create(p, 6 * e),
    )


def h_coeff(params: GKParams, i: int) -> int:
    """Coefficient (-1)^(i+1) of X^(i(n-1)) as a field element."""
    return params.field.scalar((-1) ** (i + 1))


def h_eval(params: GKParams, x: int) -> int:
    F = params.field
    acc = 0
    for i in range(params.n + 1):
        acc = F.add(acc, F.mul(h_coeff(params, i), F.pow(x, i * (params.n - 1))))
    return acc


def _h_eval_all(params: GKParams):
    """h evaluated at every field element at once (enumeration order)."""
    F = params.field
    elems = np.arange(F.order)
    acc = np.zeros(F.order, dtype=np.int64)
    for i in range(params.n + 1):
        term = F.vmul(np.full(F.order, h_coeff(params, i)), F.vpow(elems, i * (params.n - 1)))
        acc = F.vadd(acc, term)
    return acc


def on_curve(params: GKParams, pt: Point) -> bool:
    if pt.is_infinity:
        return True
    F = params.field
    lhs1 = F.pow(pt.z, params.a)
    rhs1 = F.mul(pt.y, h_eval(params, pt.x))
    lhs2 = F.add(F.pow(pt.x, params.n), pt.x)
    rhs2 = F.pow(pt.y, params.n + 1)
    return lhs1 == rhs1 and lhs2 == rhs2


def zero_trace_roots(params: GKParams) -> list:
    """The n roots of x^n + x = 0, in field enumeration order (the P_j abscissas)."""
    F = params.field
    elems = np.arange(F.order)
    vals = F.vadd(F.vpow(elems, params.n), elems)
    roots = [int(x) for x in np.nonzero(vals == 0)[0]]
    if len(roots) != params.n:
        raise CountMismatch(f"expected {params.n} roots of x^n + x, found {len(roots)}")
    return roots


@dataclass
class PointSet:
    p_inf: Point
    p_list: list
    q_list: list
    others: list

    @property
    def total(self) -> int:
        return 1 + len(self.p_list) + len(self.q_list) + len(self.others)

    @property
    def orbit1(self) -> list:
        return [self.p_inf] + self.p_list + self.q_list


def enumerate_points(params: GKParams) -> PointSet:
    """Exhaustive, deterministic scan of all rational points.

    For each x the y's are read off a root table of y^(n+1), and for each
    (x, y) the z's off a root table of z^(n^2-n+1); avoids the q^3 scan.
    """
    F = params.field
    elems = np.arange(F.order)
    xn_x = F.vadd(F.vpow(elems, params.n), elems)
    h_all = _h_eval_all(params)

    y_roots = defaultdict(list)
    for y, v in enumerate(F.vpow(elems, params.n + 1)):
        y_roots[int(v)].append(y)
    z_roots = defaultdict(list)
    for z, v in enumerate(F.vpow(elems, params.a)):
        z_roots[int(v)].append(z)

    p_list, q_list, others = [], [], []
    for x in range(F.order):
        t = int(xn_x[x])
        hx = int(h_all[x])
        for y in y_roots.get(t, ()):
            w = F.mul(y, hx)
            for z in z_roots.get(w, ()):
                pt = Point(x, y, z)
                if z != 0:
                    others.append(pt)
                elif y == 0:
                    p_list.append(pt)
                else:
                    q_list.append(pt)

    ps = PointSet(INFINITY, p_list, q_list, others)
    if ps.total != params.expected_points:
        raise CountMismatch(
            f"enumerated {ps.total} points, expected {params.expected_points}"
        )
    if len(p_list) != params.n or len(q_list) != params.b - params.n:
        raise CountMismatch("orbit O1 decomposition has unexpected sizes")
    return ps
