"""Multi-point AG codes C_L(D, G) on the GK curve and their parameter bounds.

G is supported on {P_inf, P_1, ..., P_n}; D is the sum of all remaining
rational points.  The generator matrix evaluates an explicit basis of L(G)
recovered from the dimension oracle's kernel; C_Omega parameters come from
duality (k + k_omega = length).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .curve import GKParams, PointSet
from .riemann_roch import Divisor, Monomial, Oracle, onepoint_basis
from .semigroup import is_pure_gap, vector_divisor


class CodeError(Exception):
    pass


class SupportOverlap(CodeError):
    pass


class DegenerateG(CodeError):
    pass


class NotPureGap(CodeError):
    pass


@dataclass
class CodeSummary:
    length: int
    deg_G: int
    k: int
    k_omega: int
    goppa_d: int | None = None
    goppa_d_omega: int | None = None
    puregap_d_omega: int | None = None

    @property
    def rate(self) -> float:
        return self.k / self.length

    @property
    def delta_goppa(self) -> float | None:
        return None if self.goppa_d is None else self.goppa_d / self.length

    def as_dict(self) -> dict:
        return {
            "length": self.length,
            "deg_G": self.deg_G,
            "k": self.k,
            "k_omega": self.k_omega,
            "goppa_d": self.goppa_d,
            "goppa_d_omega": self.goppa_d_omega,
            "puregap_d_omega": self.puregap_d_omega,
            "R": self.rate,
            "delta_goppa": self.delta_goppa,
        }


@dataclass
class GenMatrix:
    entries: np.ndarray  # k x length, encoded field elements
    columns: list = dc_field(repr=False, default_factory=list)  # D points, in order


def _lg_basis_vectors(oracle: Oracle, G: Divisor):
    """Kernel coefficient vectors of L(G) in the shifted monomial space.

    Returns (ts, basis monomials, coefficient matrix) where each coefficient
    row v encodes the function (sum_m v_m x^a y^b z^c) / prod (x-a_j)^t_j.
    """
    ts, Gp = oracle.shift(G)
    basis = onepoint_basis(oracle.params, Gp.coeff_inf)
    if not basis:
        return ts, basis, np.zeros((0, 0), dtype=np.int64)
    constraints = [(j + 1, -gj) for j, gj in enumerate(Gp.coeffs) if gj < 0]
    total = sum(r for _, r in constraints)
    M = np.zeros((len(basis), total), dtype=np.int64)
    col = 0
    for j, r in constraints:
        for row, mono in enumerate(basis):
            M[row, col: col + r] = oracle.mono_coeffs(j, mono, r)
        col += r
    kernel = linalg.nullspace(oracle.params.field, M.T) if total else np.eye(
        len(basis), dtype=np.int64
    )
    return ts, basis, kernel


def build_code(oracle: Oracle, points: PointSet, G: Divisor):
    """Generator matrix and summary for C_L(D, G) with D = all points off supp(G)."""
    params = oracle.params
    F = params.field
    if G.degree <= 0:
        raise DegenerateG(f"deg G = {G.degree} <= 0")
    if G.coeff_inf == 0:
        raise SupportOverlap(
            "evaluation at P_inf is not supported; include P_inf in supp(G)"
        )

    ts, basis, kernel = _lg_basis_vectors(oracle, G)

    # columns: P_j's outside supp(G), then Q_l's, then the big orbit
    cols = [pt for j, pt in enumerate(points.p_list) if G.coeffs[j] == 0]
    cols += points.q_list + points.others
    X = np.array([pt.x for pt in cols], dtype=np.int64)
    Y = np.array([pt.y for pt in cols], dtype=np.int64)
    Z = np.array([pt.z for pt in cols], dtype=np.int64)

    # monomial value table, one row per basis monomial
    length = len(cols)
    mono_vals = np.empty((len(basis), length), dtype=np.int64)
    pow_cache_x: dict[int, np.ndarray] = {}
    pow_cache_y: dict[int, np.ndarray] = {}
    pow_cache_z: dict[int, np.ndarray] = {}

    def powed(cache, base, e):
        v = cache.get(e)
        if v is None:
            v = F.vpow(base, e)
            cache[e] = v
        return v

    for i, mono in enumerate(basis):
        row = powed(pow_cache_x, X, mono.alpha)
        if mono.beta:
            row = F.vmul(row, powed(pow_cache_y, Y, mono.beta))
        if mono.gamma:
            row = F.vmul(row, powed(pow_cache_z, Z, mono.gamma))
        mono_vals[i] = row

    # denominator prod (x - a_j)^t_j, nonzero on D
    den = np.ones(length, dtype=np.int64)
    for j, tj in enumerate(ts):
        if tj:
            diff = F.vsub(X, np.full(length, oracle.roots[j], dtype=np.int64))
            den = F.vmul(den, F.vpow(diff, tj))
    if (den == 0).any():
        raise SupportOverlap("a D point lies over a shifted pole")
    den_inv = F.vinv(den)

    k = kernel.shape[0]
    M = np.zeros((k, length), dtype=np.int64)
    for m in range(kernel.shape[1]):
        coeffs = kernel[:, m]
        rows = np.nonzero(coeffs)[0]
        if rows.size == 0:
            continue
        M[rows] = F.vadd(M[rows], F.vmul(coeffs[rows][:, None], mono_vals[m][None, :]))
    M = F.vmul(M, den_inv[None, :])

    rank = linalg.rank(F, M)
    summary = CodeSummary(length=length, deg_G=G.degree, k=rank, k_omega=length - rank)
    if G.degree < length:
        summary.goppa_d = length - G.degree
        if G.degree > 2 * params.genus - 2:
            summary.goppa_d_omega = G.degree - 2 * params.genus + 2
    return GenMatrix(entries=M, columns=cols), summary


def dual_check(ctx, M: GenMatrix):
    """Basis of the dual code; all inner products with the rows of M are zero."""
    H = linalg.nullspace(ctx, M.entries)
    prod = linalg.matmul(ctx, M.entries, H.T)
    if prod.any():
        raise CodeError("dual basis is not orthogonal to the code")
    return H


def pure_gap_bound(oracle: Oracle, alpha, beta):
    """Divisor G = sum (alpha_i + beta_i - 1) P_i and the bound
    d_omega >= deg G - (2g - 2) + (number of points carrying the gaps)."""
    if len(alpha) != len(beta):
        raise CodeError("pure-gap tuples must have equal length")
    for v in (alpha, beta):
        if not is_pure_gap(oracle, v):
            raise NotPureGap(f"{v} fails the pure-gap oracle")
    G = vector_divisor(
        oracle.params, tuple(ai + bi - 1 for ai, bi in zip(alpha, beta))
    )
    bound = G.degree - (2 * oracle.params.genus - 2) + len(alpha)
    return G, bound


def min_weight_exhaustive(ctx, M: np.ndarray, cap: int = 1 << 24):
    """Exact minimum Hamming weight of the row space, or None above the cap.

    Scalar multiples share a weight, so only messages whose first nonzero
    coordinate is 1 are enumerated: (q^k - 1)/(q - 1) codewords.
    """
    M = np.asarray(M, dtype=np.int64)
    k, length = M.shape
    q = ctx.order
    if k == 0:
        return None
    if q ** k > cap:
        return None
    best = length
    batch = 1 << 14
    for t in range(k):
        nfree = k - t - 1
        total = q ** nfree
        for start in range(0, total, batch):
            idx = np.arange(start, min(start + batch, total))
            cw = np.broadcast_to(M[t], (len(idx), length)).copy()
            rem = idx
            for j in range(nfree):
                digit = rem % q
                rem = rem // q
                row = M[t + 1 + j]
                nz = np.nonzero(digit)[0]
                if nz.size:
                    cw[nz] = ctx.vadd(
                        cw[nz], ctx.vmul(digit[nz][:, None], row[None, :])
                    )
            w = int((cw != 0).sum(axis=1).min())
            if w < best:
                best = w
    return best
