import numpy as np
import pytest

import gkcodes as gk
from gkcodes import codes
from gkcodes.linalg import matmul


def test_build_code_n2(oracle2, points2, params2):
    M, s = codes.build_code(oracle2, points2, gk.divisor(params2, 21))
    assert s.length == 224
    assert s.k == 12 == 21 - params2.genus + 1
    assert s.k_omega == 212
    assert s.goppa_d == 203
    assert s.goppa_d_omega == 21 - 2 * params2.genus + 2
    assert M.entries.shape == (12, 224)


def test_k_matches_riemann_roch(oracle2, points2, params2):
    for deg in (19, 21, 25):
        _, s = codes.build_code(oracle2, points2, gk.divisor(params2, deg))
        assert s.k == deg - params2.genus + 1


def test_low_degree_rank_authoritative(oracle2, points2, params2):
    # deg G <= 2g-2: the closed form does not apply, rank is the answer
    _, s = codes.build_code(oracle2, points2, gk.divisor(params2, 5))
    assert s.k == oracle2.dim(gk.divisor(params2, 5)) == 1
    assert s.goppa_d_omega is None


def test_multipoint_code(oracle2, points2, params2):
    G = gk.divisor(params2, 21, [1])
    M, s = codes.build_code(oracle2, points2, G)
    assert s.length == 223  # P_1 removed from D
    assert s.k == G.degree - params2.genus + 1


def test_degenerate_and_unsupported(oracle2, points2, params2):
    with pytest.raises(codes.DegenerateG):
        codes.build_code(oracle2, points2, gk.divisor(params2, 0))
    with pytest.raises(codes.SupportOverlap):
        codes.build_code(oracle2, points2, gk.divisor(params2, 0, [9]))


def test_dual_check(oracle2, points2, params2):
    F = params2.field
    M, s = codes.build_code(oracle2, points2, gk.divisor(params2, 21))
    H = codes.dual_check(F, M)
    assert H.shape[0] == s.k_omega
    assert not matmul(F, M.entries, H.T).any()
    assert s.k + s.k_omega == s.length


def test_pure_gap_bound(oracle2, params2):
    G, bound = codes.pure_gap_bound(oracle2, (11, 1), (11, 1))
    assert (G.coeff_inf, G.coeffs) == (21, (1, 0))
    assert bound == G.degree - (2 * params2.genus - 2) + 2
    # exceeds the Goppa d_omega bound by exactly m+1
    assert bound == (G.degree - 2 * params2.genus + 2) + 2
    with pytest.raises(codes.NotPureGap):
        codes.pure_gap_bound(oracle2, (3, 3), (11, 1))


def test_min_weight_trivia(params2):
    F = params2.field
    assert codes.min_weight_exhaustive(F, np.ones((1, 9), dtype=np.int64)) == 9
    block = np.hstack([np.eye(2, dtype=np.int64), np.zeros((2, 4), dtype=np.int64)])
    assert codes.min_weight_exhaustive(F, block) == 1


def test_min_weight_cap(params2):
    F = params2.field
    M = np.ones((5, 10), dtype=np.int64)  # 64^5 > 2^24
    assert codes.min_weight_exhaustive(F, M) is None
    small = np.eye(2, dtype=np.int64)
    assert codes.min_weight_exhaustive(F, small, cap=1) is None


def test_min_weight_vs_goppa_small(oracle2, points2, params2):
    M, s = codes.build_code(oracle2, points2, gk.divisor(params2, 11))
    # k = 4, so 64^4 = 2^24 messages fit under the default cap
    assert s.k == 4 and s.goppa_d == 213
    w = codes.min_weight_exhaustive(params2.field, M.entries)
    assert w == 215
    assert w >= s.goppa_d
