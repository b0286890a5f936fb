"""Riemann-Roch dimension oracle for divisors supported on {P_inf, P_1..P_n}.

dim L(G) is computed from first principles: shift G by principal divisors of
(x - a_j) so that all finite coefficients are <= 0, take the monomial basis
of L(N * P_inf), and impose vanishing orders at each P_j through the local
power series expansions.  Rank is deterministic Gaussian elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import linalg
from .curve import GKParams, zero_trace_roots
from .localseries import LocalChart, expand_at, monomial_series, pole_order_at_inf


class DivisorError(Exception):
    pass


class UnsupportedSupport(DivisorError):
    pass


@dataclass(frozen=True)
class Divisor:
    """Integer divisor supported on {P_inf} union {P_1, ..., P_n}."""

    coeff_inf: int
    coeffs: tuple  # one integer per P_j, j = 1..n

    @property
    def degree(self) -> int:
        return self.coeff_inf + sum(self.coeffs)

    def minus_point(self, idx: int, times: int = 1) -> "Divisor":
        """Subtract times*P at point index idx (0 = P_inf, j >= 1 = P_j)."""
        if idx == 0:
            return Divisor(self.coeff_inf - times, self.coeffs)
        c = list(self.coeffs)
        c[idx - 1] -= times
        return Divisor(self.coeff_inf, tuple(c))

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor(
            self.coeff_inf + other.coeff_inf,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self) -> "Divisor":
        return Divisor(-self.coeff_inf, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)


def divisor(params: GKParams, coeff_inf: int, coeffs=()) -> Divisor:
    """Build a divisor, padding the P_j coefficients with zeros."""
    c = tuple(coeffs) + (0,) * (params.n - len(coeffs))
    if len(c) != params.n:
        raise UnsupportedSupport(f"at most {params.n} finite points are supported")
    return Divisor(coeff_inf, c)


def canonical_divisor(params: GKParams) -> Divisor:
    """K = (n^2 - 2) c P_inf; degree 2g - 2."""
    return divisor(params, (params.n ** 2 - 2) * params.c)


class Monomial(NamedTuple):
    alpha: int
    beta: int
    gamma: int
    pole: int


def onepoint_basis(params: GKParams, N: int) -> list:
    """Monomials x^a y^b z^c with b <= n, c <= n^2 - n and pole order <= N.

    Pole orders are pairwise distinct, so this is a basis of L(N * P_inf);
    its size equals the number of elements of <na, b, c> up to N.
    """
    out = []
    if N < 0:
        return out
    for beta in range(params.n + 1):
        for gamma in range(params.n ** 2 - params.n + 1):
            base = beta * params.na + gamma * params.b
            if base > N:
                continue
            alpha = 0
            pole = base
            while pole <= N:
                out.append(Monomial(alpha, beta, gamma, pole))
                alpha += 1
                pole += params.c
    out.sort(key=lambda m: m.pole)
    return out


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


class Oracle:
    """Shared charts plus a memoized dim L(G); safe to reuse across queries."""

    def __init__(self, params: GKParams):
        self.params = params
        self.roots = zero_trace_roots(params)  # a_j in enumeration order
        self._charts: dict[int, LocalChart] = {}
        self._mono_cache: dict[tuple, np.ndarray] = {}
        self._dim_cache: dict[tuple, int] = {}

    def chart(self, j: int, min_prec: int) -> LocalChart:
        ch = self._charts.get(j)
        if ch is None or ch.prec < min_prec:
            # one extra pole period guards against later, slightly deeper queries
            prec = max(min_prec + self.params.c, 2 * self.params.c)
            if ch is not None:
                prec = max(prec, 2 * ch.prec)
                self._mono_cache = {k: v for k, v in self._mono_cache.items() if k[0] != j}
            ch = expand_at(self.params, j, self.roots[j - 1], prec)
            self._charts[j] = ch
        return ch

    def mono_coeffs(self, j: int, mono: Monomial, r: int) -> np.ndarray:
        """First r z-coefficients of the monomial's expansion at P_j."""
        ch = self.chart(j, r)
        key = (j, mono.alpha, mono.beta, mono.gamma)
        row = self._mono_cache.get(key)
        if row is None or len(row) < r:
            s = monomial_series(self.params, ch, mono.alpha, mono.beta, mono.gamma)
            row = s.coeffs
            self._mono_cache[key] = row
        return row[:r]

    # -- core dimension computation -------------------------------------------

    def shift(self, G: Divisor):
        """Shift exponents t_j and the shifted divisor G' with g'_j <= 0."""
        c = self.params.c
        ts = tuple(max(0, _ceil_div(gj, c)) for gj in G.coeffs)
        Gp = Divisor(
            G.coeff_inf + c * sum(ts),
            tuple(gj - c * tj for gj, tj in zip(G.coeffs, ts)),
        )
        return ts, Gp

    def dim_shifted(self, Gp: Divisor) -> int:
        """dim for a divisor whose finite coefficients are all <= 0."""
        basis = onepoint_basis(self.params, Gp.coeff_inf)
        if not basis:
            return 0
        constraints = [(j + 1, -gj) for j, gj in enumerate(Gp.coeffs) if gj < 0]
        if not constraints:
            return len(basis)
        total = sum(r for _, r in constraints)
        M = np.zeros((len(basis), total), dtype=np.int64)
        col = 0
        for j, r in constraints:
            for row, mono in enumerate(basis):
                M[row, col: col + r] = self.mono_coeffs(j, mono, r)
            col += r
        return len(basis) - linalg.rank(self.params.field, M)

    def dim(self, G: Divisor) -> int:
        if len(G.coeffs) != self.params.n:
            raise UnsupportedSupport("divisor support does not match the curve")
        key = (G.coeff_inf, G.coeffs)
        cached = self._dim_cache.get(key)
        if cached is not None:
            return cached
        if G.degree < 0:
            d = 0
        else:
            _, Gp = self.shift(G)
            d = self.dim_shifted(Gp)
        self._dim_cache[key] = d
        return d

    def is_discrepancy(self, A: Divisor, p_idx: int, q_idx: int) -> bool:
        """Discrepancy test for the points with indices p_idx != q_idx."""
        if p_idx == q_idx:
            raise ValueError("discrepancy needs two distinct points")
        lA = self.dim(A)
        lP = self.dim(A.minus_point(p_idx))
        lQ = self.dim(A.minus_point(q_idx))
        lPQ = self.dim(A.minus_point(p_idx).minus_point(q_idx))
        return lA != lP == lPQ and lA != lQ == lPQ


def dim_L(oracle: Oracle, G: Divisor) -> int:
    return oracle.dim(G)


def is_discrepancy(oracle: Oracle, A: Divisor, p_idx: int, q_idx: int) -> bool:
    return oracle.is_discrepancy(A, p_idx, q_idx)
