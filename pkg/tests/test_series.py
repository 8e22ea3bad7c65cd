import warnings
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from mckay_workbench.classification import chain_partition, enumerate_stable_classes, positive_roots
from mckay_workbench.series import (
    ConventionViolation,
    ConventionWarning,
    TruncatedSeries,
    adams,
    betti_series,
    plethystic_exp,
    product_formula_oracle,
    q_over_q_minus_one,
    restricted_kac_generating,
)
from mckay_workbench.toric import Polarization

from test_classification import random_valid_classes


def random_series(rng, nvars, trunc_z=6, terms=4):
    data = {}
    for _ in range(rng.randint(1, terms)):
        m = [0] * nvars
        while not any(m):
            m = [rng.randint(0, 2) for _ in range(nvars)]
        data[(rng.randint(-2, 2), tuple(m))] = rng.choice([-2, -1, 1, 2, 3])
    return TruncatedSeries(nvars, data, trunc_z)


def z(nvars=1, trunc_z=6, coeff=1, q=0):
    return TruncatedSeries.monomial(nvars, q, [1] + [0] * (nvars - 1), coeff, trunc_z=trunc_z)


def test_arithmetic_and_truncation():
    a = z() + TruncatedSeries.one(1)
    cube = a ** 3
    assert [cube.coefficient(0, (k,)) for k in range(4)] == [1, 3, 3, 1]
    assert (z(trunc_z=2) ** 3).terms == {}
    assert (a - a).terms == {}
    assert (a * 2 / 4).coefficient(0, (1,)) == Fraction(1, 2)
    with pytest.raises(ValueError):
        TruncatedSeries(2, {(0, (1,)): 1})
    with pytest.raises(ValueError):
        a ** -1


def test_commutative_associative(rng):
    for _ in range(30):
        f, g, h = (random_series(rng, 2, trunc_z=4) for _ in range(3))
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h


def test_adams():
    f = TruncatedSeries(2, {(1, (1, 0)): 3, (-1, (0, 1)): 2}, trunc_z=6)
    assert adams(f, 2).terms == {(2, (2, 0)): 3, (-2, (0, 2)): 2}
    assert adams(adams(f, 2), 3) == adams(f, 6)
    with pytest.raises(ValueError):
        adams(f, 0)


def test_exp_closed_forms():
    T = 6
    assert plethystic_exp(z(trunc_z=T)).terms == {(0, (n,)): 1 for n in range(T + 1)}
    assert plethystic_exp(z(coeff=-1, trunc_z=T)).terms == {(0, (0,)): 1, (0, (1,)): -1}
    assert plethystic_exp(z(q=1, trunc_z=T)).terms == {(n, (n,)): 1 for n in range(T + 1)}
    # Exp(2z) = (1 - z)^-2
    assert plethystic_exp(z(coeff=2, trunc_z=T)).terms == {(0, (n,)): n + 1 for n in range(T + 1)}


def test_exp_matches_product_formula(rng):
    for _ in range(100):
        f = random_series(rng, rng.randint(1, 3))
        assert plethystic_exp(f) == product_formula_oracle(f)


def test_exp_additive(rng):
    for _ in range(30):
        n = rng.randint(1, 3)
        f, g = random_series(rng, n, trunc_z=5), random_series(rng, n, trunc_z=5)
        assert plethystic_exp(f + g) == plethystic_exp(f) * plethystic_exp(g)


def test_exp_requires_no_constant():
    with pytest.raises(ValueError, match="divergent"):
        plethystic_exp(TruncatedSeries.one(1))
    with pytest.raises(ValueError):
        product_formula_oracle(TruncatedSeries(1, {(0, (1,)): Fraction(1, 2)}))


def test_q_over_q_minus_one():
    w = 7
    qinv = q_over_q_minus_one("qinv", w)
    assert qinv.terms == {(-n, ()): 1 for n in range(w + 1)}
    q = q_over_q_minus_one("q", w)
    assert q.terms == {(n, ()): -1 for n in range(1, w + 1)}
    # (q - 1) * expansion = q inside the window, for both conventions
    q_minus_1 = TruncatedSeries(0, {(1, ()): 1, (0, ()): -1})
    assert (q_minus_1 * qinv).truncate(q_min=-w + 1).terms == {(1, ()): 1}
    assert (q_minus_1 * q).truncate(q_max=w).terms == {(1, ()): 1}
    with pytest.raises(ValueError):
        q_over_q_minus_one("laurent")


def partitions_at_most_two_parts(k):
    return sum(1 for a, b in combinations_with_replacement(range(k + 1), 2) if a + b == k)


def symmetric_roots(N, mu=1):
    classes = enumerate_stable_classes(Polarization.symmetric(N), mu)
    return classes, positive_roots(chain_partition(classes))


def test_betti_values_n3():
    _, roots = symmetric_roots(3)
    series, preds = betti_series(3, roots, trunc_z=2, trunc_q=6)
    by_gamma = {tuple(p.gamma.compact_vector): p for p in preds}
    c1 = by_gamma[(1, 0)]
    assert c1.self_pairing == -2
    assert c1.betti == {-1 - n: 1 for n in range(7)}
    two = by_gamma[(2, 0)]
    assert two.self_pairing == -8
    assert two.betti == {-4 - k: partitions_at_most_two_parts(k) for k in range(7)}
    mixed = by_gamma[(1, 1)]
    # roots C_1, C_2 and C_1 + C_2 all contribute
    assert [mixed.betti[-1 - k] for k in range(4)] == [2, 3, 4, 5]


@pytest.mark.parametrize("N", range(2, 7))
def test_linear_term_and_admissibility(N):
    for mu in (1, Fraction(1, 2)):
        classes, roots = symmetric_roots(N, mu)
        series, preds = betti_series(N, roots, trunc_z=3, trunc_q=8)
        expansion = q_over_q_minus_one("qinv", 8)
        for c in classes:
            assert series.z_coefficient(c.ch1.compact_vector) == {k: v for (k, _), v in expansion.terms.items()}
        assert all(p.admissible for p in preds)


def test_other_convention_violates():
    _, roots = symmetric_roots(3)
    with pytest.raises(ConventionViolation):
        betti_series(3, roots, convention="q")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        betti_series(3, roots, convention="q", strict=False)
    assert any(issubclass(w.category, ConventionWarning) for w in caught)


def test_kac_counts(rng):
    for _ in range(50):
        N = rng.randint(2, 10)
        p = chain_partition(random_valid_classes(rng, N))
        poly = restricted_kac_generating(N, positive_roots(p))
        assert poly.term_count == sum(s * (s + 1) // 2 for s in p.lam)


def test_kac_symmetric():
    _, roots = symmetric_roots(4)
    poly = restricted_kac_generating(4, roots)
    # the single chain of length 3 gives the 6 positive roots of A_3
    assert poly.term_count == 6 and len(poly) == 6
    assert poly.coeffs[(0, 1, 1, 1)] == 1  # O_{C_1}: n = 1, m = (1, 0, 0)
