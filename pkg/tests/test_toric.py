from fractions import Fraction

import pytest
import sympy

from mckay_workbench.toric import (
    DivisorClass,
    Polarization,
    build_resolution,
    curve,
    intersection,
    intersection_matrix,
    interval_divisor,
    interval_pairing,
    tilting_divisor,
)


def test_rays_small_cases():
    assert build_resolution(2).rays == ((0, 1), (1, 0), (2, -1))
    geom = build_resolution(3)
    assert len(geom.rays) == 4
    assert len(geom.cones) == 3


def test_rejects_n_one():
    with pytest.raises(ValueError, match="N ≥ 2"):
        build_resolution(1)


@pytest.mark.parametrize("N", range(2, 13))
def test_fan_is_smooth_and_recursive(N):
    rays = build_resolution(N).rays
    for a, b in zip(rays, rays[1:]):
        assert abs(a[0] * b[1] - a[1] * b[0]) == 1
    for i in range(2, N + 1):
        assert all(rays[i][k] - 2 * rays[i - 1][k] + rays[i - 2][k] == 0 for k in (0, 1))


def test_cartan_block():
    assert intersection_matrix(3) == [[-2, 1], [1, -2]]


def test_bilinearity_examples():
    N = 5
    c12 = curve(N, 1) + curve(N, 2)
    assert intersection(c12, c12) == -2
    assert intersection(curve(N, 0), curve(N, 1)) == 1


def test_pairing_needs_compact_argument():
    N = 4
    with pytest.raises(ValueError, match="compact"):
        intersection(curve(N, 0), curve(N, 4))


def test_tilting_divisor_values():
    assert tilting_divisor(3, 1) == DivisorClass.from_mapping(3, {2: 1, 3: 2})
    assert tilting_divisor(3, 3).is_zero()
    with pytest.raises(ValueError):
        tilting_divisor(3, 0)
    with pytest.raises(ValueError):
        tilting_divisor(3, 4)


@pytest.mark.parametrize("N", range(2, 13))
def test_orthogonality(N):
    for k in range(1, N):
        for i in range(1, N):
            assert intersection(tilting_divisor(N, k), curve(N, i)) == (1 if k == i else 0)


def test_interval_divisor():
    assert interval_divisor(6, 2, 4) == DivisorClass.from_mapping(6, {2: 1, 3: 1, 4: 1})
    assert interval_divisor(6, 3, 2).is_zero()
    assert interval_divisor(6, 1, 1) == curve(6, 1)


def test_interval_pairing_examples():
    assert interval_pairing(1, 2, 1, 2) == -2
    assert interval_pairing(1, 2, 3, 4) == 1
    assert interval_pairing(1, 3, 1, 2) == -1


@pytest.mark.parametrize("N", range(2, 9))
def test_interval_table_matches_bilinear_expansion(N):
    intervals = [(i, j) for i in range(1, N) for j in range(i, N)]
    for i, j in intervals:
        for l, m in intervals:
            expected = intersection(interval_divisor(N, i, j), interval_divisor(N, l, m))
            assert interval_pairing(i, j, l, m) == expected


@pytest.mark.parametrize("N", range(2, 9))
def test_compact_form_is_negative_definite(N):
    M = -sympy.Matrix(intersection_matrix(N))
    assert M == M.T
    for k in range(1, N):
        assert M[:k, :k].det() > 0


def test_polarization_roundtrip():
    omega = Polarization((Fraction(1, 2), Fraction(3), Fraction(2, 3)))
    again = Polarization.from_divisor(omega.divisor_form)
    assert again == omega
    for k, z in enumerate(omega.zeta_compact, start=1):
        assert intersection(omega.divisor_form, curve(4, k)) == z


def test_polarization_positivity():
    with pytest.raises(ValueError, match="not a polarization"):
        Polarization((Fraction(1), Fraction(0)))


def test_divisor_json():
    d = DivisorClass.from_mapping(4, {1: Fraction(1, 2), 3: -2})
    assert d.to_json() == {"coeffs": {"1": "1/2", "3": "-2"}}
    assert DivisorClass.from_json(4, d.to_json()) == d
