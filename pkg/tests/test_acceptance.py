"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -s` to see the lines; seeds are
fixed so every numeric outcome is reproducible.
"""

import math

import numpy as np
import pytest

import banachkit as bk
from banachkit.linmaps import weak_lq_upper
from banachkit.search import child_seeds
from banachkit.suites import char_poly_roots, suite_eigen_decay

SQRT = bk.GrowthSequence.power(0.5)


def report(name, ok, detail=""):
    print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
    assert ok, f"{name}: {detail}"


def test_criterion_01_sequence_norms():
    rng = np.random.default_rng(101)
    worst = 0.0
    for _ in range(1000):
        n = int(rng.integers(1, 65))
        p = float(rng.uniform(1.0, 8.0))
        x = rng.standard_normal(n)
        lp_norm = float(np.sum(np.abs(x) ** p) ** (1.0 / p))
        worst = max(worst, abs(bk.lorentz_norm(x, p, p) - lp_norm))
    invariant = True
    for _ in range(100):
        x = rng.standard_normal(int(rng.integers(1, 33)))
        y = x[rng.permutation(x.size)] * rng.choice([-1.0, 1.0], x.size)
        invariant &= bool(np.array_equal(bk.rearrange(x), bk.rearrange(y)))
    report("criterion-1 sequence-norms", worst <= 1e-12 and invariant,
           f"max |lorentz(p,p) - lp| = {worst:.2e}")


def test_criterion_02_growth_validation():
    ok = True
    for q in (2, 3, 4):
        r = bk.validate_growth(bk.GrowthSequence.power(1.0 / q), 256, t=float(q), r=2)
        ok &= r.s2 == 1.0 and r.l_t == 1.0 and r.m_r == 1.0
    hand = (bk.tilde_g(SQRT, 2, 16) == 4.0 and bk.tilde_g(SQRT, 2, 15) == 1.0
            and bk.g_q(SQRT, 4, 16) == 2.0 and bk.g_q(bk.GrowthSequence.power(1.0), 4, 16) == 2.0)
    report("criterion-2 growth-validation", ok and hand,
           "S2 = L_q = M_2 = 1 exactly, hand values exact")


def test_criterion_03_rademacher_enumeration():
    exact_ok = True
    for n in range(2, 17):
        one = bk.rademacher_average(np.eye(n), bk.NormedSpace(bk.lp(1), n))
        two = bk.rademacher_average(np.eye(n), bk.NormedSpace(bk.lp(2), n))
        exact_ok &= one.value == float(n)
        exact_ok &= abs(two.value - math.sqrt(n)) <= 1e-12
    rng = np.random.default_rng(103)
    seeds = child_seeds(103, 50)
    mc_ok = True
    for i in range(50):
        n = int(rng.integers(2, 9))
        dim = int(rng.integers(2, 7))
        config = rng.standard_normal((n, dim))
        space = bk.NormedSpace(bk.lp(float(rng.uniform(1, 4))), dim)
        exact = bk.rademacher_average(config, space).value
        mc = bk.rademacher_average(config, space, enum_cap=0, samples=20_000, seed=seeds[i])
        mc_ok &= abs(mc.value - exact) <= 3.0 * mc.stderr
    report("criterion-3 rademacher-enumeration", exact_ok and mc_ok,
           "coordinates exact, MC within 3 SE on 50 configs")


def test_criterion_04_ell_norm():
    space = bk.NormedSpace(bk.lp(2), 8)
    u = bk.identity_map(space)
    est = bk.ell_norm(u, samples=100_000, seed=104)
    dev = abs(est.value - math.sqrt(8)) / math.sqrt(8)
    qmat, _ = np.linalg.qr(np.random.default_rng(104).standard_normal((8, 8)))
    est2 = bk.ell_norm(bk.LinearMap(u.matrix @ qmat, space, space),
                       samples=100_000, seed=1104)
    drift = abs(est2.value - est.value)
    limit = 3.0 * math.hypot(est.stderr, est2.stderr)
    report("criterion-4 ell-norm", dev <= 0.02 and drift <= limit,
           f"rel dev {dev:.4f} <= 2%, rotation drift {drift:.4f} <= {limit:.4f}")


def test_criterion_05_contraction_principle():
    rng = np.random.default_rng(105)
    seeds = child_seeds(105, 100)
    worst = 0.0
    for i in range(100):
        n = int(rng.integers(1, 11))
        dim = int(rng.integers(1, 7))
        config = rng.standard_normal((n, dim))
        space = bk.NormedSpace(bk.lp([1.0, 2.0, math.inf][i % 3]), dim)
        box, signs = bk.contraction_check(config, space, budget=16, seed=seeds[i])
        worst = max(worst, abs(box - signs))
    report("criterion-5 contraction-principle", worst <= 1e-12,
           f"max |box - signs| = {worst:.2e} (constant 1 in the real case)")


def test_criterion_06_gauss_vs_rademacher():
    rng = np.random.default_rng(106)
    seeds = child_seeds(106, 100)
    ok = True
    margin = math.inf
    for i in range(100):
        n = int(rng.integers(2, 9))
        dim = int(rng.integers(2, 7))
        config = rng.standard_normal((n, dim))
        space = bk.NormedSpace(bk.lp([1.0, 2.0, math.inf][i % 3]), dim)
        res = bk.gauss_vs_rademacher(config, space, samples=20_000, seed=seeds[i])
        floor = res["floor"] - 3.0 * res["ratio_stderr"]
        ok &= res["ratio"] >= floor
        margin = min(margin, res["ratio"] - floor)
    report("criterion-6 gauss-vs-rademacher", ok,
           f"min margin above sqrt(2/pi) - 3SE: {margin:.4f}")


def test_criterion_07_pi1_witnesses():
    ok = True
    vals = []
    for n in (4, 9, 16):
        a = bk.pi_pq_n(bk.identity_map(bk.NormedSpace(bk.lp(2), n)), 1, 1, n,
                       budget=0, seed=107)
        b = bk.pi_pq_n(bk.identity_map(bk.NormedSpace(bk.lp(math.inf), n)), 1, 1, n,
                       budget=0, seed=107)
        ok &= a.value >= math.sqrt(n) and b.value >= n * (1 - 1e-10)
        vals.append((n, a.value, b.value))
    report("criterion-7 pi1-witnesses", ok,
           "; ".join(f"n={n}: l2 {x:.3f} >= {math.sqrt(n):.3f}, linf {y:.3f} >= {n}"
                     for n, x, y in vals))


def test_criterion_08_eigenvalues():
    rng = np.random.default_rng(108)
    worst_oracle, worst_det = 0.0, 0.0
    for _ in range(100):
        n = int(rng.integers(2, 5))
        A = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        eig = bk.eigenvalue_sequence(A)
        roots = list(char_poly_roots(A))
        for lam in eig.values:
            d = [abs(lam - r) for r in roots]
            worst_oracle = max(worst_oracle, min(d))
            roots.pop(int(np.argmin(d)))
        worst_det = max(worst_det, abs(np.prod(eig.moduli) - abs(np.linalg.det(A))))
    weyl_ok = True
    for _ in range(500):
        n = int(rng.integers(2, 9))
        A = rng.standard_normal((n, n))
        lam = -np.sort(-np.abs(np.linalg.eigvals(A)))
        sv = np.linalg.svd(A, compute_uv=False)
        weyl_ok &= bool(np.all(np.cumprod(lam) <= np.cumprod(sv) * (1 + 1e-8) + 1e-8))
    report("criterion-8 eigenvalues",
           worst_oracle <= 1e-8 and worst_det <= 1e-8 and weyl_ok,
           f"oracle dev {worst_oracle:.2e}, det dev {worst_det:.2e}, "
           "multiplicative Weyl on 500 matrices")


def test_criterion_09_pi2_by_approx():
    rng = np.random.default_rng(109)
    ok = True
    for _ in range(500):
        n = int(rng.integers(1, 9))
        sp = bk.NormedSpace(bk.lp(2), n)
        lhs, rhs = bk.pi2_by_approx_bound(bk.LinearMap(rng.standard_normal((n, n)), sp, sp))
        ok &= lhs <= rhs
    report("criterion-9 pi2-by-approx", ok, "lhs <= rhs on 500 random Euclidean maps")


def test_criterion_10_weak_cotype_bracket():
    ok = True
    details = []
    for n in (4, 8):
        T = bk.identity_map(bk.NormedSpace(bk.lp(2), n))
        wc = bk.weak_cotype_g(T, SQRT, budget=16, seed=110)
        for delta in (0.25, 0.5, 0.75):
            cd = bk.C_delta(T, SQRT, delta, n, budget=16, seed=110)
            lo = delta / 2.0 * cd.value          # S2 = 1 for the sqrt gauge
            hi = math.e**1.5 * (1 - delta) ** -0.5 * cd.value
            ok &= lo <= wc.value <= hi
            details.append(f"n={n} d={delta}: {lo:.3f} <= {wc.value:.3f} <= {hi:.3f}")
    report("criterion-10 weak-cotype-bracket", ok, "; ".join(details[:2]) + " ...")


def test_criterion_11_equal_norm_inequality():
    ok = True
    slacks = []
    for n in (4, 8, 16):
        T = bk.identity_map(bk.NormedSpace(bk.lp(2), n))
        wc = bk.weak_cotype_g(T, SQRT, budget=16, seed=111)
        res = bk.equal_norm_inequality(np.eye(n), T, SQRT, wc, rho=1.0,
                                   samples=50_000, seed=111)
        ok &= res.holds and res.slack >= 100.0
        slacks.append(res.slack)
    report("criterion-11 equal-norm-inequality", ok,
           f"slack factors {', '.join(f'{s:.0f}' for s in slacks)} (all >= 100)")


def test_criterion_12_pipeline():
    ledger = bk.constant_ledger(SQRT, H=1.0, K=1.0)
    ok = True
    details = []
    for p in (2.0, 1.0):
        space = bk.NormedSpace(bk.lp(p), 32)
        config = np.eye(32) / weak_lq_upper(np.eye(32), space, 2.0)
        cert = bk.run_pipeline(config, space, SQRT, ledger, budget=8,
                               samples=20_000, seed=112)
        revalid, mismatches = bk.revalidate(cert, config, space, SQRT, ledger)
        ok &= cert.verdict and revalid
        details.append(f"l{p:g}: measured {cert.final_measured.value:.3f} "
                       f"vs floor {cert.final_floor:.1e}, bitwise={revalid}")
    report("criterion-12 pipeline", ok, "; ".join(details))


def test_criterion_13_optimal_gauges():
    g_ok = True
    for fam in (bk.lp(1), bk.lp(2), bk.lp(math.inf), bk.lorentz(2, 1),
                bk.lorentz(2, math.inf), bk.gweak(SQRT)):
        for kind in ("summing", "cotype"):
            gv = bk.opt_gauge(np.array([1.0]), bk.NormedSpace(fam, 3), kind,
                              budget=4, seed=113)
            g_ok &= gv.value == 1.0

    rng = np.random.default_rng(113)
    seeds = child_seeds(113, 50)
    bases = [bk.NormedSpace(bk.lp(1), 3), bk.NormedSpace(bk.lp(2), 3),
             bk.NormedSpace(bk.lp(math.inf), 3)]
    conc_ok = True
    for i in range(50):
        sizes = rng.integers(1, 3, size=int(rng.integers(2, 4)))
        taus, at = [], 0
        for s in sizes:
            t = np.zeros(at + int(s))
            t[at: at + int(s)] = rng.uniform(0.2, 1.0, int(s))
            taus.append(t)
            at += int(s)
        res = bk.self_concavity_check(taus, bases[i % 3], ("summing", "cotype")[i % 2],
                                      budget=16, seed=seeds[i], tol=0.05)
        conc_ok &= res.within()

    tensor_ok = True
    for p in (1.0, 1.5, 2.0, 3.0):
        for _ in range(10):
            tau = rng.standard_normal(int(rng.integers(1, 6)))
            tensor_ok &= abs(bk.lorentz_norm(bk.tensor_square(tau), p, p)
                             - bk.lorentz_norm(tau, p, p) ** 2) <= 1e-12

    sub_ok = True
    for p in (1.0, 2.0, 3.0):
        for n, k in ((2, 2), (3, 8), (16, 2)):
            lhs, rhs = bk.submultiplicativity_check(bk.lp(p), n, k)
            sub_ok &= abs(lhs - rhs) <= 1e-12 * max(1.0, rhs)
    # direct-summation comparison on the (p,1) scale: the defining sum
    # satisfies f(nk) <= f(n) f(k); the concave direction fails at (2,2)
    for p in (1.0, 2.0, 3.0):
        for n in range(2, 33):
            for k in range(2, 33):
                lhs, rhs = bk.submultiplicativity_check(bk.lorentz(p, 1.0), n, k)
                sub_ok &= rhs <= lhs * (1 + 1e-12)

    ok = g_ok and conc_ok and tensor_ok and sub_ok
    report("criterion-13 optimal-gauges", ok,
           f"units exact, 50 concavity instances within 5%, tensor identity, "
           f"lp multiplicativity exact, (p,1) verified by summation")


def test_criterion_14_classifier():
    c1 = bk.alternative_classify(bk.lorentz(2.0, math.inf), 3.0, n_max=64)
    case1 = c1.case == 1 and c1.n0 == 2 and abs(c1.q - 2.0) <= 1e-12
    case2 = True
    for p in (1.0, 2.0, 3.0):
        c2 = bk.alternative_classify(bk.lp(p), p, n_max=64)
        case2 &= c2.case == 2 and c2.cn_limit == 1.0
    report("criterion-14 classifier", case1 and case2,
           f"weak-l2 vs p=3: case 1 at n0=2 with q={c1.q:g}; lp self: case 2, limit 1")


def test_criterion_15_iterated_log_arithmetic():
    kn = tuple(bk.tower_index(n) for n in (2, 4, 5, 16, 17))
    kn_ok = kn == (1, 2, 3, 3, 4)
    worst = 0.0
    for C in (1.0, 1.5, 3.0):
        for q in (2.0, 3.0, 4.0):
            for n in (2, 16, 4096):
                direct = math.sqrt(math.pi) * C * (1 + math.log2(n)) ** (1.0 / q)
                worst = max(worst, abs(bk.iterated_log_bound(C, q, n, 0) - direct))
    report("criterion-15 iterated-log", kn_ok and worst <= 1e-12,
           f"k_n = {kn}, depth-0 formula dev {worst:.2e}")


def test_criterion_16_eigen_decay_suite():
    rep = suite_eigen_decay(q=2.0, n=16, N=32, trials=200, seed=116, budget=8)
    records = {r.name: r for r in rep.records}
    witness = records["constructed-witness-r-is-one"]
    stable = records["cross-seed-stability"]
    ok = rep.passed and abs(witness.measured - 1.0) <= 1e-10
    report("criterion-16 eigen-decay", ok,
           f"witness r = {witness.measured}, cross-seed drift {stable.measured:.3f} "
           f"<= {stable.bound:.3f} (OBSERVE tier)")
