import numpy as np
import pytest

from gbs_page import (
    ASYMPTOTIC,
    TruncationCapError,
    expected_trW,
    haar_unitary,
    hyp2f1_vn,
    page_average,
    renyi2_average,
    renyi_average,
    renyi_entropy,
    renyi_large_s_limit,
    renyi_small_s_limit,
    renyi_unequal_small,
    reduced_covariance_equal,
    symplectic_eigenvalues,
    trW_moments,
    vn_large_s_limit,
    vn_series_coefficients,
    vn_series_constant,
    vn_small_s_limit,
    von_neumann_average,
    von_neumann_entropy,
)


def test_expected_trW_trivial():
    assert expected_trW(3, 50, 0.0) == 0.0
    n, r = 25, 0.4
    assert expected_trW(1, n, r) == pytest.approx(n * r**2 + r * (1 - r), rel=1e-12)
    vec = expected_trW(np.arange(1, 5), n, r)
    assert vec.shape == (4,)


def test_expected_trW_monte_carlo_oracle():
    n, r, n_samples = 30, 0.5, 20000
    k = round(n * r)
    acc = np.zeros((n_samples, 4))
    for idx in range(n_samples):
        U = haar_unitary(n, master_seed=314, sample_index=idx)
        acc[idx] = trW_moments(U, k, 4)
    for i in range(1, 5):
        mc = acc[:, i - 1].mean()
        se = acc[:, i - 1].std(ddof=1) / np.sqrt(n_samples)
        # finite-n remainder allowance 0.05 on top of the statistical band
        assert abs(mc - expected_trW(i, n, r)) <= 3 * se + 0.05


def test_vn_coefficients_match_hypergeometric_form():
    # c_i = 1/(2i) - (1/3) sech^2(2s) tanh^{2i}(2s) 2F1(3/2, 1+i, 5/2, sech^2(2s))
    for s in (0.3, 0.5, 1.0):
        x = 1.0 / np.cosh(2 * s) ** 2
        t = np.tanh(2 * s) ** 2
        cs = vn_series_coefficients(200, s)
        for i in (1, 2, 3, 7, 20, 50, 120, 200):
            direct = 1.0 / (2 * i) - (x / 3.0) * t**i * hyp2f1_vn(i, x, tol=1e-15).value
            assert cs[i - 1] == pytest.approx(direct, rel=1e-9, abs=1e-16)


def test_vn_coefficients_positive_and_summable():
    for s in (0.3, 0.5, 1.0):
        cs = vn_series_coefficients(50000, s)
        assert cs.min() > 0
        x = 1.0 / np.cosh(2 * s) ** 2
        beta = (1 - x) / (4 * x)
        # partial sums approach the closed-form constant like beta / I
        gap = vn_series_constant(s) - cs.sum()
        assert gap == pytest.approx(beta / 50000, rel=0.05)


def test_vn_constant_closed_form():
    for s in (0.1, 0.5, 2.0):
        direct = 0.5 * np.log(np.sinh(2 * s) ** 2 / 4) + np.cosh(2 * s) * np.arctanh(
            1 / np.cosh(2 * s)
        )
        assert vn_series_constant(s) == pytest.approx(direct, rel=1e-12)
        assert vn_series_constant(-s) == vn_series_constant(s)


def test_zero_squeezing_and_empty_partition():
    for fn in (
        lambda: renyi2_average(100, 0.0, 0.5),
        lambda: renyi_average(5, 100, 0.0, 0.3),
        lambda: von_neumann_average(100, 0.0, 0.5),
    ):
        res = fn()
        assert res.value == 0.0 and res.trunc_err == 0.0
    for r in (0.0, 1.0):
        assert von_neumann_average(100, 0.5, r).value == 0.0
        assert renyi_average(3, 100, 0.5, r).value == 0.0


def test_alpha2_dispatch_and_symmetry():
    a = renyi_average(2, 100, 0.5, 0.3)
    b = renyi2_average(100, 0.5, 0.3)
    assert a.value == b.value
    for alpha in (1, 2, 3):
        lo = page_average(alpha, 100, 0.5, 0.3)
        hi = page_average(alpha, 100, 0.5, 0.7)
        assert lo.value == hi.value  # evaluated at min(k, n-k)/n


def test_realized_ratio_rounding():
    res = renyi2_average(10, 0.4, 0.333)
    assert res.realized_r == pytest.approx(0.3)
    same = renyi2_average(10, 0.4, 0.3)
    assert res.value == same.value


def test_monte_carlo_oracle_all_alphas():
    n, s, r, n_samples = 40, 0.5, 0.5, 800
    k = round(n * r)
    alphas = (2, 3, 5, 15)
    sums = {a: [] for a in alphas}
    vns = []
    for idx in range(n_samples):
        U = haar_unitary(n, master_seed=2718, sample_index=idx)
        nu = symplectic_eigenvalues(reduced_covariance_equal(U, s, k))
        vns.append(von_neumann_entropy(nu))
        for a in alphas:
            sums[a].append(renyi_entropy(nu, a))
    vns = np.array(vns)
    pred = von_neumann_average(n, s, r, tol=1e-3)
    assert abs(vns.mean() - pred.value) <= 3 * vns.std(ddof=1) / np.sqrt(n_samples)
    for a in alphas:
        vals = np.array(sums[a])
        pred = renyi_average(a, n, s, r, tol=1e-10)
        assert abs(vals.mean() - pred.value) <= 3 * vals.std(ddof=1) / np.sqrt(n_samples)


def test_analytic_ordering_in_alpha():
    for s, r in [(0.3, 0.2), (0.3, 0.5), (0.8, 0.2), (0.8, 0.5)]:
        values = [von_neumann_average(200, s, r).value] + [
            renyi_average(a, 200, s, r).value for a in (2, 3, 5, 15)
        ]
        assert all(x >= y for x, y in zip(values, values[1:]))


def test_asymptotic_per_mode_consistency():
    # the finite-n deficit against the asymptotic curve is the H correction,
    # which scales like 1/n
    s, r = 0.5, 0.3
    asym = renyi2_average(ASYMPTOTIC, s, r, tol=1e-10).value
    d400 = asym - renyi2_average(400, s, r, tol=1e-8).value / 400
    d800 = asym - renyi2_average(800, s, r, tol=1e-8).value / 800
    assert d400 > 0 and d800 > 0
    assert d400 / d800 == pytest.approx(2.0, rel=0.05)


def test_truncation_cap_errors():
    from gbs_page.pagecurve import DEFAULT_TOL

    with pytest.raises(TruncationCapError) as err:
        renyi2_average(400, 3.0, 0.5)
    assert err.value.partial_value > 0
    assert err.value.error_bound > DEFAULT_TOL
    with pytest.raises(TruncationCapError):
        von_neumann_average(400, 1.0, 0.5, tol=1e-7)


def test_forced_i_max():
    res = renyi2_average(100, 0.5, 0.5, i_max=50)
    assert res.i_max_used == 50
    loose = renyi2_average(100, 0.5, 0.5, tol=1e-12)
    assert abs(res.value - loose.value) <= max(res.trunc_err, 1e-12)
    with pytest.raises(TruncationCapError):
        renyi2_average(100, 1.5, 0.5, tol=1e-10, i_max=100)
    with pytest.raises(ValueError):
        renyi2_average(100, 0.5, 0.5, i_max=0)


def test_vn_small_s_gate():
    with pytest.raises(ValueError, match="vn_small_s_limit"):
        von_neumann_average(100, 0.01, 0.5)
    # s exactly at the threshold is allowed
    assert von_neumann_average(100, 0.02, 0.5).value > 0


def test_limit_values():
    assert vn_small_s_limit(0.5) == 0.25
    assert vn_small_s_limit(0.0) == 0.0
    assert vn_large_s_limit(0.5) == 1.0
    assert vn_large_s_limit(0.25) == 0.5
    assert renyi_small_s_limit(2, 0.5) == 0.5
    assert renyi_small_s_limit(3, 0.5) == pytest.approx(0.375)
    assert renyi_large_s_limit(7, 0.3) == pytest.approx(0.6)
    # small-s limit decreases toward r(1-r) as alpha grows
    vals = [renyi_small_s_limit(a, 0.5) for a in (2, 3, 5, 15, 100)]
    assert all(x > y for x, y in zip(vals, vals[1:]))
    assert vals[-1] == pytest.approx(0.25, rel=0.02)


def test_renyi_small_s_series_consistency_spot():
    res = renyi_average(2, 400, 0.05, 0.5, tol=1e-10)
    scaled = res.value / (400 * 0.05**2)
    assert scaled == pytest.approx(renyi_small_s_limit(2, 0.5), rel=0.05)


def test_unequal_small_formula():
    svec = np.full(20, 0.03)
    total = renyi_unequal_small(4, 0.5, svec)
    equal_form = 20 * 0.03**2 * renyi_small_s_limit(4, 0.5)
    assert total == pytest.approx(equal_form, rel=1e-12)
    assert renyi_unequal_small(2, 0.5, np.zeros(5)) == 0.0


def test_unequal_small_monte_carlo_quick():
    rng = np.random.default_rng(60)
    n, k, n_samples = 40, 20, 600
    svec = tuple(rng.uniform(0.0, 0.05, n))
    from gbs_page import ExperimentPlan, run_experiment

    plan = ExperimentPlan(
        n=n, k=k, squeezing=svec, alphas=(2,), n_samples=n_samples, master_seed=606
    )
    _, summary = run_experiment(plan)
    pred = renyi_unequal_small(2, 0.5, svec)
    assert abs(summary.per_alpha[2].mean - pred) <= 0.10 * pred


def test_validation():
    with pytest.raises(ValueError):
        renyi_average(1, 100, 0.5, 0.5)
    with pytest.raises(ValueError):
        renyi2_average(100, 0.5, 1.2)
    with pytest.raises(ValueError):
        renyi2_average(100, 0.5, 0.5, tol=0.0)
    with pytest.raises(ValueError):
        renyi2_average(0, 0.5, 0.5)
    with pytest.raises(ValueError):
        renyi_unequal_small(3, 0.5, [0.1, np.inf])
