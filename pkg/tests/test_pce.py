import math
import os
import tempfile

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pceplast.collocation import project
from pceplast.pce import (
    PceSurrogate,
    analytic_mean,
    analytic_std,
    basis_matrix,
    basis_size,
    eval_basis,
    eval_surrogate,
    full_index_set,
    gammas,
    hermite_1d,
    read_surrogate_csv,
    write_surrogate_csv,
)
from pceplast.sparse_grid import smolyak
from pceplast.stochastic import lognormal_from_moments


def gauss_hermite(order=60):
    x, w = np.polynomial.hermite_e.hermegauss(order)
    return x, w / math.sqrt(2 * math.pi)


def test_hermite_examples():
    assert hermite_1d(0, 1.7) == 1.0
    assert hermite_1d(1, 1.7) == 1.7
    assert hermite_1d(2, 2.0) == 3.0
    assert hermite_1d(3, 2.0) == 2.0
    assert hermite_1d(4, 0.0) == 3.0


@pytest.mark.parametrize("n", range(9))
def test_hermite_matches_numpy(n):
    x = np.linspace(-5, 5, 31)
    ref = np.polynomial.hermite_e.hermeval(x, [0] * n + [1])
    np.testing.assert_allclose(hermite_1d(n, x), ref, rtol=1e-12, atol=1e-12)


def test_orthogonality_1d_against_gauss_hermite():
    x, w = gauss_hermite()
    for m in range(9):
        for n in range(9):
            val = w @ (hermite_1d(m, x) * hermite_1d(n, x))
            assert val == pytest.approx(math.factorial(n) if m == n else 0.0, abs=1e-9)


def test_index_order_example():
    np.testing.assert_array_equal(full_index_set(2, 2), [[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2]])


@pytest.mark.parametrize("s", range(1, 7))
@pytest.mark.parametrize("p", [0, 1, 3, 6, 10])
def test_cardinality_and_uniqueness(s, p):
    idx = full_index_set(s, p)
    assert len(idx) == math.comb(s + p, p) == basis_size(s, p)
    assert len({tuple(a) for a in idx}) == len(idx)
    assert idx.sum(axis=1).max() == p
    assert np.all(np.diff(idx.sum(axis=1)) >= 0)
    np.testing.assert_array_equal(idx[0], 0)


def test_index_set_caps():
    with pytest.raises(ValueError):
        full_index_set(20, 20)
    with pytest.raises(ValueError):
        full_index_set(0, 2)


def test_gammas():
    np.testing.assert_array_equal(gammas(np.array([[0, 0], [3, 2], [1, 4]])), [1, 12, 24])


def test_eval_basis_example():
    assert eval_basis([2, 1], np.array([1.0, 3.0])) == pytest.approx(0.0)
    assert eval_basis([1, 1], np.array([2.0, 3.0])) == pytest.approx(6.0)


def test_basis_matrix_consistent():
    idx = full_index_set(3, 4)
    xi = np.random.default_rng(0).normal(size=(10, 3))
    psi = basis_matrix(idx, xi)
    for r, a in enumerate(idx):
        np.testing.assert_allclose(psi[:, r], eval_basis(a, xi), rtol=1e-13)


@pytest.mark.parametrize("s,p", [(2, 6), (3, 4), (4, 3)])
def test_multivariate_orthogonality(s, p):
    level = p + 1  # exactness 2p + 1 >= 2p
    grid = smolyak(s, level)
    idx = full_index_set(s, p)
    psi = basis_matrix(idx, grid.points)
    G = psi.T @ (psi * grid.weights[:, None])
    g = gammas(idx)
    scale = np.sqrt(np.outer(g, g))
    assert np.all(np.abs(G - np.diag(g)) <= 1e-9 * scale)


def _surrogate(coeffs):
    coeffs = np.atleast_2d(np.asarray(coeffs, dtype=float))
    R = coeffs.shape[1]
    p = next(k for k in range(20) if basis_size(3, k) == R)
    idx = full_index_set(3, p)
    return PceSurrogate(3, p, idx, coeffs, gammas(idx))


def test_analytic_moments_example():
    sur = _surrogate([[5.0, 2.0, 1.0, 0.0]])
    assert analytic_mean(sur, 0) == 5.0
    assert analytic_std(sur, 0) == pytest.approx(math.sqrt(5.0))
    sur = PceSurrogate(2, 2, full_index_set(2, 2), np.array([[5.0, 2.0, 1.0, 0.0, 0.0, 0.0]]),
                       gammas(full_index_set(2, 2)))
    assert analytic_std(sur, 0) == pytest.approx(math.sqrt(5.0))


def test_constant_surrogate_has_zero_std():
    sur = _surrogate([[3.0, 0.0, 0.0, 0.0]])
    assert analytic_std(sur, 0) == 0.0


def test_std_sqrt6_example():
    # u_(2,0) = 1 and u_(1,1) = 2 give variance 2 + 4
    idx = full_index_set(2, 2)
    sur = PceSurrogate(2, 2, idx, np.array([[0, 0, 0, 1.0, 2.0, 0]]), gammas(idx))
    assert analytic_std(sur, 0) == pytest.approx(math.sqrt(6.0), rel=1e-15)


def test_lognormal_surrogate():
    m = lognormal_from_moments(210e9, 21e9)
    grid = smolyak(1, 18)
    snaps = m(grid.points[:, 0])[:, None]
    sur = project(snaps, grid, full_index_set(1, 8))
    assert analytic_mean(sur, 0) == pytest.approx(210e9, rel=1e-12)
    assert analytic_std(sur, 0) == pytest.approx(21e9, rel=1e-6)
    # exact Hermite coefficients of exp(mu + s xi) are median * exp(s^2/2) s^k / k!
    k = np.arange(9)
    exact = m.median * math.exp(m.sigma_g ** 2 / 2) * m.sigma_g ** k / np.array([math.factorial(j) for j in k])
    np.testing.assert_allclose(sur.coefficients[0], exact, rtol=1e-9, atol=1e-15 * 210e9)


def test_evaluate_shapes_and_eval_surrogate():
    idx = full_index_set(2, 3)
    coeffs = np.random.default_rng(1).normal(size=(4, len(idx)))
    sur = PceSurrogate(2, 3, idx, coeffs, gammas(idx))
    xi = np.array([[0.3, -1.2], [2.0, 0.1]])
    out = sur.evaluate(xi)
    assert out.shape == (2, 4)
    assert eval_surrogate(sur, xi[1], 2) == pytest.approx(out[1, 2])
    np.testing.assert_allclose(sur.evaluate(xi[0]), out[0])
    with pytest.raises(ValueError):
        eval_surrogate(sur, np.zeros(3), 0)


def test_truncate_is_prefix():
    idx = full_index_set(2, 4)
    coeffs = np.arange(2 * len(idx), dtype=float).reshape(2, -1)
    sur = PceSurrogate(2, 4, idx, coeffs, gammas(idx)).truncate(2)
    assert sur.size == 6
    np.testing.assert_array_equal(sur.coefficients, coeffs[:, :6])


def test_invalid_surrogates():
    idx = full_index_set(1, 2)
    with pytest.raises(ValueError):
        PceSurrogate(1, 2, idx, np.array([[1.0, np.nan, 0.0]]), gammas(idx))
    with pytest.raises(ValueError):
        PceSurrogate(1, 2, idx, np.ones((1, 2)), gammas(idx))


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 3), st.integers(0, 4), st.integers(0, 2**31))
def test_csv_round_trip(s, p, seed):
    idx = full_index_set(s, p)
    coeffs = np.random.default_rng(seed).normal(size=(3, len(idx))) * 1e8
    sur = PceSurrogate(s, p, idx, coeffs, gammas(idx))
    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "s.csv")
        write_surrogate_csv(sur, path)
        back = read_surrogate_csv(path)
    np.testing.assert_array_equal(back.index_set, idx)
    np.testing.assert_array_equal(back.coefficients, coeffs)
    np.testing.assert_array_equal(back.gammas, sur.gammas)
    assert (back.s, back.p) == (s, p)


def test_sampled_moments_match_analytic():
    from pceplast.stochastic import sample_standard_normals

    idx = full_index_set(2, 3)
    coeffs = np.random.default_rng(2).normal(size=(1, len(idx)))
    sur = PceSurrogate(2, 3, idx, coeffs, gammas(idx))
    n = 200_000
    y = sur.evaluate(sample_standard_normals(2, n, 5))[:, 0]
    sd = analytic_std(sur, 0)
    assert abs(y.mean() - analytic_mean(sur, 0)) < 4 * sd / math.sqrt(n)
    assert y.std(ddof=1) == pytest.approx(sd, rel=0.02)
