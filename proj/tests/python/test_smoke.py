import math
from fractions import Fraction

import pytest

import isomoment as iso


def test_exact_table_values():
    assert iso.i_mn(3, 3) == Fraction(7)
    assert iso.i_mn(2, 2) == Fraction(8, 3)
    assert iso.i_mn(2, 6) == Fraction(16)
    assert all(iso.i_mn(0, n) == 1 for n in range(1, 10))
    assert [iso.i_mn(m, 3) for m in range(5)] == [1, 3, 5, 7, 9]


def test_three_routes_agree():
    for m in range(5):
        for n in range(1, 6):
            assert iso.i_mn(m, n) == iso.i_mn_closed(m, n) == iso.i_mn_expand(m, n)


def test_mixed_moments():
    assert iso.mixed_moment([6, 0, 0]) == Fraction(1)
    assert iso.mixed_moment([4, 2, 0]) == Fraction(1, 5)
    assert iso.mixed_moment([2, 2, 2]) == Fraction(1, 15)
    assert iso.mixed_moment([1, 1]) == 0
    with pytest.raises(ValueError):
        iso.mixed_moment([1, 1, 1])


def test_compositions_order():
    assert iso.compositions(2, 2) == [[2, 0], [1, 1], [0, 2]]
    assert len(iso.compositions(3, 3)) == 10


def test_sphere_closed_forms():
    vol = iso.sphere_volume(3)
    assert vol.to_double() == pytest.approx(4 * math.pi, rel=1e-15)
    ratio = vol / iso.axis_moment(3, 1)
    assert ratio.is_rational() and ratio.coeff == Fraction(3)
    quad = iso.quad_axis_moment(3, 1, 1e-11)
    assert quad == pytest.approx(iso.axis_moment(3, 1).to_double(), rel=1e-10)


def test_sphere_monte_carlo():
    est = iso.mc_projected_moment(3, 1, [0, 0, 1], n_samples=50000, seed=5)
    assert abs(est.mean - 1 / 3) <= 3 * est.std_error
    again = iso.mc_projected_moment(3, 1, [0, 0, 1], n_samples=50000, seed=5)
    assert est.mean == again.mean and est.std_error == again.std_error


def test_orbit():
    j = iso.sample_orbit(seed=1, stream=2)
    assert len(j) == 6
    assert sum(c * c for c in j) == pytest.approx(1.0, abs=1e-12)
    assert iso.pfaffian(j) == pytest.approx(0.0, abs=1e-12)
    assert iso.pfaffian([1, 0, 0, 0, 0, 1]) == 1.0
    est = iso.mc_orbit_hypothesis(1, [1, 0, 0, 0, 0, 0], n_samples=50000, seed=9)
    assert abs(est.mean - 1 / 6) <= 3 * est.std_error


def test_hypergeometric_identity():
    r = iso.check_2f1_identity(3, 3)
    assert r["pass"] and r["rhs"] == pytest.approx(7.0)


def test_vortex():
    assert iso.dh_moment(1, 2.0, 0) == pytest.approx(4 * math.pi, rel=1e-15)
    z, terms, cancel = iso.z_series(1, 2.0, 0.0)
    assert z == pytest.approx(2 * math.pi, rel=1e-15) and terms == 1
    zs, _, _ = iso.z_series(2, 5.0, 0.01)
    zc = iso.z_closed(2, 5.0, 0.01)
    assert zs == pytest.approx(zc, rel=1e-9)
    with pytest.raises(ValueError, match="radius condition"):
        iso.z_closed(2, 2.0, 0.0)
