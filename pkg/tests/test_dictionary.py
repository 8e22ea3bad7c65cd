from fractions import Fraction

import pytest

from mckay_workbench.dictionary import (
    INF,
    SheafClass,
    chern_to_dimvec,
    dimvec_to_chern,
    omega_to_zeta,
    parse_mu,
    simple_object_dictionary,
    slope_omega,
    zeta_degree_of_sheaf,
    zeta_degree_perverse,
    zeta_to_omega,
)
from mckay_workbench.quiver import zeta_degree
from mckay_workbench.toric import DivisorClass, Polarization, intersection

from conftest import random_polarization, random_slope


@pytest.mark.parametrize("N", range(2, 10))
def test_symmetric_zeta(N):
    omega = Polarization.symmetric(N)
    assert omega_to_zeta(omega, 1) == (1,) * (N - 1) + (2 - N,)
    assert omega_to_zeta(omega, "inf") == (1,) * (N - 1) + (1 - N,)


def test_parse_mu():
    assert parse_mu("inf") == INF
    assert parse_mu(float("inf")) == INF
    assert parse_mu("3/2") == Fraction(3, 2)
    with pytest.raises(ValueError):
        parse_mu(0)
    with pytest.raises(ValueError):
        parse_mu("-1/2")
    with pytest.raises(TypeError):
        parse_mu(0.5)


def test_zeta_components_are_pairings(rng):
    for _ in range(50):
        N = rng.randint(2, 8)
        omega = random_polarization(rng, N)
        zeta = omega_to_zeta(omega, random_slope(rng))
        D = omega.divisor_form
        for i in range(1, N):
            assert zeta[i - 1] == intersection(D, DivisorClass.compact([int(k == i) for k in range(1, N)]))


def test_round_trip(rng):
    for _ in range(100):
        N = rng.randint(2, 8)
        omega = random_polarization(rng, N)
        mu = random_slope(rng) if rng.random() < 0.8 else INF
        back, mu2 = zeta_to_omega(omega_to_zeta(omega, mu))
        assert back.zeta_compact == omega.zeta_compact
        assert mu2 == mu


def test_zeta_to_omega_rejects_negative_sum():
    with pytest.raises(ValueError):
        zeta_to_omega([1, 1, -5])
    with pytest.raises(ValueError, match="not a polarization"):
        zeta_to_omega([0, 1, 5])


def test_dimvec_examples():
    assert chern_to_dimvec((1, 0), 1) == (0, 1, 1)
    assert chern_to_dimvec((0, 0, 0), 2) == (2, 2, 2, 2)
    with pytest.raises(ValueError, match="Π_Q"):
        chern_to_dimvec((2, 0), 1)


def test_dimvec_round_trip(rng):
    for _ in range(100):
        N = rng.randint(2, 9)
        n = rng.randint(0, 5)
        m = tuple(rng.randint(-3, n) for _ in range(N - 1))
        assert dimvec_to_chern(chern_to_dimvec(m, n)) == (m, n)


def test_degree_agrees_with_quiver_side(rng):
    """The sheaf-side degree formula must equal zeta.d computed on the quiver."""
    for _ in range(200):
        N = rng.randint(2, 7)
        omega = random_polarization(rng, N)
        zeta = omega_to_zeta(omega, random_slope(rng))
        n = rng.randint(0, 4)
        m = tuple(rng.randint(0, n) for _ in range(N - 1))
        assert zeta_degree_of_sheaf(zeta, SheafClass(m, n)) == zeta_degree(zeta, chern_to_dimvec(m, n))


def test_degree_vanishes_on_slope_mu(rng):
    """A sheaf with chi / (omega.ch1) = mu has zeta-degree zero."""
    for _ in range(100):
        N = rng.randint(2, 7)
        omega = random_polarization(rng, N)
        m = tuple(rng.randint(0, 3) for _ in range(N - 1))
        if not any(m):
            continue
        chi = rng.randint(1, 6)
        s = SheafClass(m, chi)
        mu = slope_omega(omega, s)
        assert zeta_degree_of_sheaf(omega_to_zeta(omega, mu), s) == 0


def test_perverse_degree_reduces_to_sheaf_degree(rng):
    for _ in range(50):
        N = rng.randint(2, 6)
        zeta = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(N)]
        m = tuple(rng.randint(0, 3) for _ in range(N - 1))
        chi = rng.randint(0, 4)
        assert zeta_degree_perverse(zeta, chi, (0,) * (N - 1), m) == zeta_degree_of_sheaf(zeta, SheafClass(m, chi))


def test_slope_of_points():
    with pytest.raises(ValueError, match="∞"):
        slope_omega(Polarization.symmetric(3), SheafClass((0, 0), 1))


@pytest.mark.parametrize("N", range(2, 8))
def test_simples(N):
    for i in range(1, N + 1):
        s = simple_object_dictionary(N, i)
        # m and chi record the class of the shifted object, so the dictionary applies directly
        assert chern_to_dimvec(s.m, s.chi) == s.dimvec
        assert sum(s.dimvec) == 1 and s.dimvec[i - 1] == 1
        # before the shift the sheaf has an effective first Chern class
        sign = (-1) ** s.shift
        assert all(sign * v >= 0 for v in s.m)
    with pytest.raises(ValueError):
        simple_object_dictionary(N, N + 1)


@pytest.mark.parametrize("N", range(2, 8))
def test_simples_sum_to_point_class(N):
    simples = [simple_object_dictionary(N, i) for i in range(1, N + 1)]
    assert [sum(col) for col in zip(*(s.dimvec for s in simples))] == [1] * N
    assert [sum(col) for col in zip(*(s.m for s in simples))] == [0] * (N - 1)
    assert sum(s.chi for s in simples) == 1
