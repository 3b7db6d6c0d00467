import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import hermite_moment_error, monomial_moment_error
import pceplast.sparse_grid as sg
from pceplast.sparse_grid import (
    LEVEL_ORDER,
    MAX_LEVEL,
    integrate,
    kpn_rule,
    level_for_size,
    smolyak,
    write_grid_csv,
)

ORDERS = sorted(set(LEVEL_ORDER.values()))


def test_level_one_is_midpoint():
    r = kpn_rule(1)
    np.testing.assert_array_equal(r.nodes, [0.0])
    np.testing.assert_array_equal(r.weights, [1.0])


def test_three_point_rule_is_gauss_hermite():
    x, w = np.polynomial.hermite_e.hermegauss(3)
    r = kpn_rule(2)
    np.testing.assert_allclose(r.nodes, x, atol=1e-15)
    np.testing.assert_allclose(r.weights, w / math.sqrt(2 * math.pi), rtol=1e-14)


def test_nine_point_nodes_published_values():
    # Genz-Keister 9-point extension, positive nodes
    r = kpn_rule(5)
    pos = np.sort(r.nodes[r.nodes > 0])
    np.testing.assert_allclose(pos, [0.7410953499945408, 1.7320508075688772,
                                     2.8612795760570582, 4.1849560176727319], rtol=1e-14)


def test_level_order_table():
    expected = {1: 1, 2: 3, 3: 3, 4: 7, 5: 9, 8: 9, 9: 17, 10: 19, 15: 19, 16: 31, 17: 33, 18: 35, 25: 35}
    for level, order in expected.items():
        assert LEVEL_ORDER[level] == order
        assert kpn_rule(level).size == order


@pytest.mark.parametrize("level", range(1, MAX_LEVEL + 1))
def test_rule_properties(level):
    r = kpn_rule(level)
    assert r.exactness >= 2 * level - 1
    assert r.weights.sum() == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(np.sort(r.nodes), np.sort(-r.nodes), atol=1e-15)
    assert monomial_moment_error(r.nodes, r.weights, r.exactness) < 1e-9
    assert hermite_moment_error(r.nodes[:, None], r.weights, r.exactness) < 1e-9


def test_rules_are_nested():
    for a, b in zip(range(1, MAX_LEVEL), range(2, MAX_LEVEL + 1)):
        assert set(kpn_rule(a).nodes) <= set(kpn_rule(b).nodes)


def test_exactness_is_sharp():
    # one degree past the documented exactness the moment is wrong
    for level in (2, 4, 5, 9, 10, 16, 17, 18):
        r = kpn_rule(level)
        assert hermite_moment_error(r.nodes[:, None], r.weights, r.exactness + 1) > 1e-8


@pytest.mark.parametrize("level", [0, 26])
def test_unsupported_level(level):
    with pytest.raises(ValueError):
        kpn_rule(level)
    with pytest.raises(ValueError):
        smolyak(2, level)


@pytest.mark.parametrize("s,level,count", [
    (1, 5, 9), (1, 9, 17), (1, 10, 19), (1, 17, 33), (1, 18, 35),
    (2, 5, 37), (2, 14, 261), (2, 25, 921),
    (4, 5, 201), (4, 10, 3065),
])
def test_point_counts(s, level, count):
    assert smolyak(s, level).size == count


def test_one_dimensional_grid_is_rule():
    for level in (1, 4, 9, 16, 25):
        g, r = smolyak(1, level), kpn_rule(level)
        order = np.argsort(r.nodes)
        np.testing.assert_array_equal(g.points[:, 0], r.nodes[order])
        np.testing.assert_allclose(g.weights, r.weights[order], rtol=1e-15, atol=0)


@pytest.mark.parametrize("s,levels", [(2, range(1, 26)), (3, range(1, 13)), (4, range(1, 15)), (5, range(1, 8))])
def test_grid_moments(s, levels):
    for level in levels:
        g = smolyak(s, level)
        assert g.weights.sum() == pytest.approx(1.0, abs=1e-10)
        assert hermite_moment_error(g.points, g.weights, g.exactness) < 1e-9


@pytest.mark.parametrize("s,levels", [(2, range(1, 25)), (3, range(1, 8)), (4, range(1, 9))])
def test_grids_are_nested(s, levels, monkeypatch):
    """Nested up to points whose combined weight cancels (they are dropped)."""
    for level in levels:
        a = {tuple(x) for x in smolyak(s, level).points}
        b = {tuple(x) for x in smolyak(s, level + 1).points}
        missing = a - b
        if missing:
            monkeypatch.setattr(sg, "ZERO_WEIGHT", -1.0)
            full = sg._smolyak_cached.__wrapped__(s, level + 1)
            monkeypatch.setattr(sg, "ZERO_WEIGHT", 1e-15)
            w = {tuple(x): v for x, v in zip(full.points, full.weights)}
            assert all(abs(w[x]) < 1e-15 for x in missing)


@pytest.mark.parametrize("s,level", [(2, 14), (3, 6), (4, 5)])
def test_grid_symmetry(s, level):
    g = smolyak(s, level)
    lookup = {tuple(x): w for x, w in zip(g.points, g.weights)}
    for k in range(s):
        flip = g.points.copy()
        flip[:, k] *= -1
        np.testing.assert_array_equal([lookup[tuple(x)] for x in flip], g.weights)
    perm = g.points[:, ::-1]
    np.testing.assert_allclose([lookup[tuple(x)] for x in perm], g.weights, rtol=1e-12, atol=1e-18)


def test_points_unique_and_ordered():
    g = smolyak(3, 7)
    assert len({tuple(x) for x in g.points}) == g.size
    keys = [tuple(x) for x in g.points]
    assert keys == sorted(keys)


def test_integrate_examples():
    g = smolyak(2, 3)
    assert integrate(g, lambda x: 1.0) == pytest.approx(1.0, abs=1e-12)
    assert integrate(g, lambda x: x[0] ** 2) == pytest.approx(1.0, abs=1e-12)
    assert integrate(g, lambda x: x[0] * x[1]) == pytest.approx(0.0, abs=1e-12)
    assert integrate(smolyak(1, 2), lambda x: x[0] ** 4) == pytest.approx(3.0, abs=1e-12)


def test_integrate_reports_failures():
    g = smolyak(1, 2)
    with pytest.raises(ValueError):
        integrate(g, lambda x: np.nan)
    with pytest.raises(RuntimeError, match="grid point"):
        integrate(g, lambda x: 1 / 0)


@given(st.integers(1, 3), st.integers(1, 6))
def test_level_for_size_inverts_count(s, level):
    assert smolyak(s, level_for_size(s, smolyak(s, level).size)).size == smolyak(s, level).size


def test_level_for_size_unknown():
    with pytest.raises(ValueError):
        level_for_size(1, 4)


def test_grid_csv(tmp_path):
    path = tmp_path / "g.csv"
    write_grid_csv(smolyak(1, 1), path)
    lines = path.read_text().splitlines()
    assert lines[0] == "index,xi_1,w"
    assert len(lines) == 2
    _, x, w = lines[1].split(",")
    assert float(x) == 0.0 and float(w) == 1.0


def test_shipped_tables_match_generator():
    pytest.importorskip("mpmath")
    import pathlib
    import subprocess
    import sys

    root = pathlib.Path(__file__).resolve().parents[1]
    out = subprocess.run([sys.executable, str(root / "tools" / "generate_kpn_tables.py")],
                         capture_output=True, text=True, check=True).stdout
    assert out == (root / "src" / "pceplast" / "_kpn_tables.py").read_text()
