import math

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.stats import norm as normal_dist

from banachkit import (LinearMap, NormedSpace, contraction_check, ell_norm,
                       gauss_vs_rademacher, gaussian_average, identity_map,
                       lp, rademacher_average)

SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)


def space(p, n):
    return NormedSpace(lp(p), n)


def expected_max_abs_gaussian(n):
    """Quadrature oracle for E max_k |g_k|: integrate the survival
    function of the half-normal maximum."""
    return quad(lambda t: 1.0 - (2.0 * normal_dist.cdf(t) - 1.0) ** n, 0, np.inf)[0]


def test_rademacher_hand_values():
    x = np.array([[0.6, 0.8]])
    assert rademacher_average(x, space(2, 2)).value == pytest.approx(1.0)
    assert rademacher_average(np.eye(2), space(1, 2)).value == 2.0
    assert rademacher_average(np.eye(2), space(2, 2)).value == pytest.approx(math.sqrt(2), abs=1e-14)


def test_rademacher_exact_results_and_caps():
    res = rademacher_average(np.eye(4), space(1, 4))
    assert res.method == "exact-enumeration"
    assert res.samples == 8  # 2^(n-1) patterns
    assert res.stderr == 0.0
    config = np.random.default_rng(0).standard_normal((4, 3))
    mc = rademacher_average(config, space(2, 3), enum_cap=0, samples=5000, seed=1)
    assert mc.method == "monte-carlo" and mc.stderr > 0.0


def test_rademacher_invariance_under_flips_and_permutations():
    rng = np.random.default_rng(2)
    sp = space(1.7, 3)
    config = rng.standard_normal((5, 3))
    base = rademacher_average(config, sp).value
    flipped = config * rng.choice([-1.0, 1.0], (5, 1))
    perm = flipped[rng.permutation(5)]
    assert rademacher_average(perm, sp).value == pytest.approx(base, rel=1e-12)


def test_mc_matches_enumeration_within_3_se():
    rng = np.random.default_rng(4)
    for i in range(25):
        n = int(rng.integers(2, 9))
        dim = int(rng.integers(2, 6))
        config = rng.standard_normal((n, dim))
        sp = space(float(rng.uniform(1, 4)), dim)
        exact = rademacher_average(config, sp).value
        mc = rademacher_average(config, sp, enum_cap=0, samples=20_000, seed=100 + i)
        assert abs(mc.value - exact) <= 3 * mc.stderr


def test_gaussian_single_vector_moment2():
    res = gaussian_average(np.array([[1.0, 0.0]]), space(2, 2), moment=2,
                           samples=100_000, seed=5)
    assert abs(res.value - 1.0) <= 3 * res.stderr


def test_gaussian_coordinates_moment2_is_sqrt_n():
    for n in (2, 5):
        res = gaussian_average(np.eye(n), space(2, n), moment=2,
                               samples=100_000, seed=6)
        assert abs(res.value - math.sqrt(n)) <= 3 * res.stderr + 1e-3


def test_gaussian_max_statistic_against_quadrature_oracle():
    for n in (1, 2, 3):
        res = gaussian_average(np.eye(n), space(math.inf, n), moment=1,
                               samples=200_000, seed=7)
        assert abs(res.value - expected_max_abs_gaussian(n)) <= 4 * res.stderr


def test_moment_monotonicity():
    rng = np.random.default_rng(8)
    for i in range(10):
        config = rng.standard_normal((4, 3))
        sp = space(float(rng.uniform(1, 4)), 3)
        m1 = gaussian_average(config, sp, moment=1, samples=20_000, seed=i)
        m2 = gaussian_average(config, sp, moment=2, samples=20_000, seed=i)
        assert m1.value <= m2.value * (1 + 1e-12)
        r1 = rademacher_average(config, sp, moment=1)
        r2 = rademacher_average(config, sp, moment=2)
        assert r1.value <= r2.value * (1 + 1e-12)


def test_mc_variance_shrinks_with_samples():
    config = np.random.default_rng(10).standard_normal((6, 4))
    sp = space(1.5, 4)
    ses = [gaussian_average(config, sp, samples=s, seed=11).stderr
           for s in (2_000, 8_000, 32_000)]
    # quadrupling the sample count should roughly halve the error
    assert ses[1] < ses[0] * 0.7
    assert ses[2] < ses[1] * 0.7


def test_ell_norm_identity_and_rotation_invariance():
    sp = space(2, 8)
    u = identity_map(sp)
    est = ell_norm(u, samples=100_000, seed=12)
    assert abs(est.value - math.sqrt(8)) <= 0.02 * math.sqrt(8)
    qmat, _ = np.linalg.qr(np.random.default_rng(13).standard_normal((8, 8)))
    est2 = ell_norm(LinearMap(u.matrix @ qmat, sp, sp), samples=100_000, seed=14)
    assert abs(est2.value - est.value) <= 3 * math.hypot(est.stderr, est2.stderr)


def test_ell_norm_single_coordinate():
    assert abs(ell_norm(identity_map(space(2, 1)), samples=50_000, seed=15).value - 1.0) < 0.02


def test_ell_norm_linf_matches_gaussian_average():
    sp = space(math.inf, 4)
    u = LinearMap(np.eye(4), space(2, 4), sp)
    a = ell_norm(u, samples=50_000, seed=16)
    b = gaussian_average(np.eye(4), sp, moment=2, samples=50_000, seed=17)
    assert abs(a.value - b.value) <= 3 * math.hypot(a.stderr, b.stderr)


def test_ell_norm_requires_euclidean_domain():
    with pytest.raises(ValueError):
        ell_norm(identity_map(space(1, 3)))


def test_contraction_box_equals_signs():
    rng = np.random.default_rng(18)
    for i in range(30):
        n = int(rng.integers(1, 11))
        dim = int(rng.integers(1, 6))
        config = rng.standard_normal((n, dim))
        sp = space([1.0, 2.0, math.inf][i % 3], dim)
        box, signs = contraction_check(config, sp, budget=16, seed=i)
        assert abs(box - signs) <= 1e-12


def test_contraction_hand_case():
    box, signs = contraction_check(np.eye(2), space(1, 2), budget=8, seed=0)
    assert box == signs == 2.0


def test_gauss_vs_rademacher_floor_and_degenerate():
    rng = np.random.default_rng(19)
    for i in range(20):
        config = rng.standard_normal((int(rng.integers(2, 7)), 3))
        sp = space([1.0, 2.0, math.inf][i % 3], 3)
        res = gauss_vs_rademacher(config, sp, samples=20_000, seed=i)
        assert res["ratio"] >= SQRT_2_OVER_PI - 3 * res["ratio_stderr"]

    single = gauss_vs_rademacher(np.array([[2.0, 0.0, 0.0]]), space(2, 3),
                                 samples=100_000, seed=30)
    # E|g| = sqrt(2/pi): the single-vector ratio sits at the boundary
    assert abs(single["ratio"] - SQRT_2_OVER_PI) <= 3 * single["ratio_stderr"]

    zero = gauss_vs_rademacher(np.zeros((2, 3)), space(2, 3), samples=1000, seed=31)
    assert zero["degenerate"] and zero["ratio"] is None
