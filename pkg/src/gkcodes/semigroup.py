"""Weierstrass semigroup engine for the points P_inf, P_1, ..., P_m.

Closed-form minimal generating set Gamma(P_inf, P_1, ..., P_m), box
enumeration of the semigroup through the dimension oracle, gap sets,
pure-gap detection and the two closed-form pure-gap families.

Tuples are (m+1)-vectors with index 0 for P_inf and index s for P_s.
"""

from __future__ import annotations

import itertools

from .curve import GKParams
from .riemann_roch import Divisor, Oracle, divisor


class SemigroupError(Exception):
    pass


class MOutOfRange(SemigroupError):
    pass


class KOutOfRange(SemigroupError):
    pass


class AlphaOutOfRange(SemigroupError):
    pass


class BoxTooSmall(SemigroupError):
    pass


class EmptyInput(SemigroupError):
    pass


class VerificationMismatch(SemigroupError):
    pass


def _check_m(params: GKParams, m: int):
    if not 1 <= m <= params.n:
        raise MOutOfRange(f"m must be in [1, {params.n}], got {m}")


def vector_divisor(params: GKParams, v) -> Divisor:
    """Divisor v_0 P_inf + sum v_s P_s from an (m+1)-tuple."""
    return divisor(params, v[0], v[1:])


def gamma_closed_form(params: GKParams, m: int) -> set:
    """All tuples ((n^2-m-sum j)c - ina - kb, j_1 c + ia + k, ..., j_m c + ia + k)
    over 1 <= k <= a, 0 <= i <= n, j_s >= 0 with positive first coordinate."""
    _check_m(params, m)
    a, b, c, n = params.a, params.b, params.c, params.n
    out = set()
    for k in range(1, a + 1):
        for i in range(n + 1):
            head = (n * n - m) * c - i * n * a - k * b
            if head <= 0:
                continue
            smax = (head - 1) // c  # sum of j_s keeps the first coordinate positive
            for js in itertools.product(range(smax + 1), repeat=m):
                s = sum(js)
                if s > smax:
                    continue
                first = (n * n - m - s) * c - i * n * a - k * b
                out.add((first,) + tuple(j * c + i * a + k for j in js))
    return out


def single_point_gaps(params: GKParams) -> set:
    """Gaps of <na, b, c>; there are exactly g of them, all below 2g."""
    limit = 2 * params.genus
    reachable = [False] * limit
    reachable[0] = True
    for s in range(limit):
        if reachable[s]:
            for gen in (params.na, params.b, params.c):
                if s + gen < limit:
                    reachable[s + gen] = True
    return {s for s in range(1, limit) if not reachable[s]}


def lub(vs) -> tuple:
    vs = list(vs)
    if not vs:
        raise EmptyInput("lub of an empty collection")
    length = len(vs[0])
    if any(len(v) != length for v in vs):
        raise SemigroupError("lub of vectors with unequal lengths")
    return tuple(max(v[i] for v in vs) for i in range(length))


def membership_oracle(oracle: Oracle, v) -> bool:
    """True iff some rational function has exact pole divisor sum v_i P_i.

    Criterion: dim drops when any support point is removed; a suitable linear
    combination then realizes the full pole divisor (the field has more
    elements than the support size).
    """
    A = vector_divisor(oracle.params, v)
    lA = oracle.dim(A)
    for idx, vi in enumerate(v):
        if vi > 0 and oracle.dim(A.minus_point(idx)) == lA:
            return False
    return True


def _support_indices(v):
    return [i for i, vi in enumerate(v) if vi > 0]


def semigroup_box(oracle: Oracle, m: int, T: int, cross_check: bool = False) -> set:
    """H(P_inf, P_1, ..., P_m) intersected with [0, T]^(m+1), via the oracle.

    With cross_check=True the result is also rebuilt from lub-closure of the
    minimal generating sets of all point subsets and compared exactly.
    """
    _check_m(oracle.params, m)
    H = {
        v
        for v in itertools.product(range(T + 1), repeat=m + 1)
        if membership_oracle(oracle, v)
    }
    if cross_check:
        closure = lub_closure_box(oracle, m, T)
        if closure != H:
            raise VerificationMismatch(
                f"lub closure disagrees with the oracle box: "
                f"{sorted(closure ^ H)[:10]} ..."
            )
    return H


def gap_box(oracle: Oracle, m: int, T: int) -> set:
    full = set(itertools.product(range(T + 1), repeat=m + 1))
    return full - semigroup_box(oracle, m, T)


def is_minimal_in_nabla(v, i: int, Hbox: set) -> bool:
    """Is v minimal w.r.t. <= in {u in H : u_i = v_i}? (box must cover [0, max v])."""
    ranges = [range(vk + 1) if k != i else (v[i],) for k, vk in enumerate(v)]
    for u in itertools.product(*ranges):
        if u != v and u in Hbox:
            return False
    return True


def gamma_from_box(Hbox: set, T: int, genus: int) -> set:
    """Minimal generating set recovered from a semigroup box.

    Gamma tuples have all coordinates in the gap range [1, 2g-1], so a box
    with T >= 2g-1 suffices.
    """
    if T < 2 * genus - 1:
        raise BoxTooSmall(f"box bound {T} < 2g-1 = {2 * genus - 1}")
    out = set()
    for v in Hbox:
        if min(v) < 1 or max(v) > 2 * genus - 1:
            continue
        # minimality for one i is equivalent to minimality for all i
        if is_minimal_in_nabla(v, 0, Hbox):
            out.add(v)
    return out


def _subset_gammas(oracle: Oracle, m: int, T: int) -> dict:
    """Gamma of every nonempty subset of the m+1 points, from the oracle."""
    genus = oracle.params.genus
    out = {}
    for size in range(1, m + 2):
        for subset in itertools.combinations(range(m + 1), size):
            if size == 1:
                # Gamma(P) = H(P): realized single pole orders up to T
                Hs = set()
                for t in range(T + 1):
                    v = [0] * (m + 1)
                    v[subset[0]] = t
                    if membership_oracle(oracle, tuple(v)):
                        Hs.add((t,))
                out[subset] = Hs
                continue
            Hs = set()
            for tup in itertools.product(range(T + 1), repeat=size):
                v = [0] * (m + 1)
                for idx, val in zip(subset, tup):
                    v[idx] = val
                if membership_oracle(oracle, tuple(v)):
                    Hs.add(tup)
            out[subset] = gamma_from_box(Hs, T, genus)
    return out


def lub_closure_box(oracle: Oracle, m: int, T: int) -> set:
    """Matthews' closure: lubs of zero-padded subset Gamma vectors, in the box."""
    gammas = _subset_gammas(oracle, m, T)
    padded = set()
    for subset, gset in gammas.items():
        for tup in gset:
            v = [0] * (m + 1)
            for idx, val in zip(subset, tup):
                v[idx] = val
            if max(v) <= T:
                padded.add(tuple(v))
    padded = sorted(padded)
    out = {(0,) * (m + 1)}
    frontier = set(padded)
    out |= frontier
    # lubs of up to m+1 vectors; iterate to a fixed point (lub is idempotent
    # and associative, so pairwise closure reaches every multiset lub)
    while frontier:
        new = set()
        for u in frontier:
            for w in padded:
                l = lub([u, w])
                if max(l) <= T and l not in out:
                    new.add(l)
        out |= new
        frontier = new
    return out


def is_pure_gap(oracle: Oracle, v) -> bool:
    """True iff dim L(A) = dim L(A - P_i) for every point of the tuple."""
    if min(v) < 1:
        raise SemigroupError("pure-gap test requires all entries >= 1")
    A = vector_divisor(oracle.params, v)
    lA = oracle.dim(A)
    return all(oracle.dim(A.minus_point(i)) == lA for i in range(len(v)))


def pure_gap_family_cor(params: GKParams, m: int, k: int) -> tuple:
    """Closed-form family ((n^2 - m)c - kb, k, ..., k, k-1) for 2 <= k <= a."""
    _check_m(params, m)
    if not 2 <= k <= params.a:
        raise KOutOfRange(f"k must be in [2, {params.a}], got {k}")
    first = (params.n ** 2 - m) * params.c - k * params.b
    if first <= 0:
        raise KOutOfRange(f"k={k} makes the P_inf coordinate nonpositive")
    return (first,) + (k,) * (m - 1) + (k - 1,)


def pure_gap_family_prop(params: GKParams, m: int, alpha: int) -> bool:
    """Do the closed-form conditions certify (alpha, 1, ..., 1) as a pure gap?

    (i) lam*c + beta*a*n + gamma*b = 2g-1-alpha with lam >= m, or
    (ii) 2g-1-alpha >= (m-1)c and beta*a*n + gamma*b = 2g-1-alpha.
    The hypothesis that (alpha, 1, ..., 1) is a gap tuple is the caller's to
    check (via gap_box or the oracle).
    """
    _check_m(params, m)
    if not 0 <= alpha < 2 * params.genus - 1:
        raise AlphaOutOfRange(f"alpha must be in [0, 2g-2], got {alpha}")
    target = 2 * params.genus - 1 - alpha
    na, b, c = params.na, params.b, params.c

    def has_na_b_rep(t):
        for beta in range(t // na + 1):
            if (t - beta * na) % b == 0:
                return True
        return False

    # condition (ii)
    if target >= (m - 1) * c and has_na_b_rep(target):
        return True
    # condition (i)
    for lam in range(m, target // c + 1):
        if has_na_b_rep(target - lam * c):
            return True
    return False
