from fractions import Fraction as F

import pytest

import l2greedy


def test_greedy_star_prefix():
    assert l2greedy.greedy_1d("star-l2", 5) == [F(1, 2), F(1, 4), F(5, 6), F(1, 8), F(7, 10)]


def test_extreme_greedy_is_van_der_corput():
    assert l2greedy.greedy_1d("extreme-l2", 64) == l2greedy.van_der_corput(64)


def test_start_set_accepts_fractions_and_strings():
    seq = l2greedy.greedy_1d("star-l2", 4, start=[F(1, 3), "9/10"])
    assert seq[:2] == [F(1, 3), F(9, 10)]
    assert all((v * 2 * (i + 1)).denominator == 1 for i, v in enumerate(seq) if i >= 2)


def test_discrepancies():
    assert l2greedy.l2_sq("star-l2", l2greedy.centered_grid(8)) == F(1, 12)
    assert l2greedy.l2_sq("periodic-l2", [F(1, 7)]) == F(1, 6)
    assert l2greedy.l2_sq("star-l2", [F(0), F(1, 2), F(1, 4)]) == F(11, 16)
    assert l2greedy.l2_sq("star-l2", [0.125, 0.375, 0.625, 0.875]) == pytest.approx(1 / 12, rel=1e-12)
    assert l2greedy.star_sup([F(0), F(1, 2), F(1, 4)]) == F(3, 2)
    curve = l2greedy.l2_sq_curve("extreme-l2", [F(0), F(1, 2)])
    assert curve[-1] == l2greedy.l2_sq("extreme-l2", [F(0), F(1, 2)])
    two_d = [(F(1, 2), F(1, 3)), (F(1, 4), F(3, 4)), (F(0), F(9, 10))]
    assert l2greedy.l2_sq("star-l2", two_d) == F(8471, 38400)


def test_auxiliary_objective():
    assert l2greedy.eval_G(2, F(1, 4)) == F(-1, 8)
    assert l2greedy.argmin_G(4) == [F(1, 8), F(3, 8), F(5, 8), F(7, 8)]
    assert l2greedy.radical_inverse(3) == F(3, 4)


def test_greedy_nd_shape():
    pts = l2greedy.greedy_nd("periodic-l2", 5, 2, grid_resolution=8, refinement_rounds=1)
    assert len(pts) == 5 and all(len(p) == 2 for p in pts)


def test_verify_suite():
    ok, text = l2greedy.verify("theorem6", 64)
    assert ok and text.startswith("theorem6: PASS")


def test_errors():
    with pytest.raises(ValueError):
        l2greedy.l2_sq("bogus", [F(1, 2)])
    with pytest.raises(ValueError):
        l2greedy.l2_sq("star-l2", [F(3, 2)])
    with pytest.raises(ValueError):
        l2greedy.l2_sq("star-l2", [])
