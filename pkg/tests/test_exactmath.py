import random
from fractions import Fraction

import pytest

from rtlab.exactmath import (
    SQRT7,
    ConstraintSystem,
    QuadraticRational,
    lemma21_bound,
    lemma21_oracle,
    scan_constraint_system,
    threshold_value,
    thresholds,
)
from naive import naive_two_sided_triangle_free_max

QR = QuadraticRational


def _random_qr(rng):
    return QR(
        Fraction(rng.randint(-50, 50), rng.randint(1, 20)),
        Fraction(rng.randint(-50, 50), rng.randint(1, 20)),
    )


def test_field_arithmetic_identities():
    rng = random.Random(7)
    for _ in range(300):
        x, y = _random_qr(rng), _random_qr(rng)
        # conjugate product collapses to a rational
        conj = QR(x.a, -x.b)
        assert x * conj == QR(x.a * x.a - 7 * x.b * x.b)
        assert (x + y) - y == x
        assert x * y == y * x
        if y:
            assert (x / y) * y == x
    assert SQRT7 * SQRT7 == 7
    assert (1 + SQRT7) * (1 - SQRT7) == -6
    assert 2 - SQRT7 == -(SQRT7 - 2)
    assert QR(Fraction(1, 2)) + Fraction(1, 2) == 1


def test_sign_analysis_tight_cases():
    # 8^2 = 64 vs 7*3^2 = 63: 8 - 3*sqrt(7) is barely positive
    assert QR(8, -3).sign() == 1
    assert QR(-8, 3).sign() == -1
    # continued-fraction convergent: 127^2 = 16129 vs 7*48^2 = 16128
    assert QR(127, -48).sign() == 1
    assert QR(-127, 48).sign() == -1
    assert QR(0, 0).sign() == 0
    assert QR(0, -1) < 0 < SQRT7
    assert 2 < SQRT7 < 3
    assert Fraction(2645751, 1000000) < SQRT7 < Fraction(2645752, 1000000)


def test_ordering_matches_mpmath():
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 50
    root = mp.sqrt(7)
    rng = random.Random(11)
    for _ in range(1000):
        x, y = _random_qr(rng), _random_qr(rng)
        fx = mp.mpf(x.a.numerator) / x.a.denominator + root * x.b.numerator / x.b.denominator
        fy = mp.mpf(y.a.numerator) / y.a.denominator + root * y.b.numerator / y.b.denominator
        assert (x < y) == (fx < fy)
        assert (x == y) == ((x.a, x.b) == (y.a, y.b))


def test_floor_scaled_and_decimal():
    assert SQRT7.floor_scaled(10**6) == 2645751
    assert SQRT7.decimal(6) == "2.645751"
    assert (-SQRT7).decimal(3) == "-2.646"
    assert QR(Fraction(1, 3)).decimal(4) == "0.3333"
    assert QR(Fraction(2, 3)).decimal(4) == "0.6667"
    assert QR(Fraction(-1, 200)).decimal(2) == "-0.01"
    assert QR(0).decimal(3) == "0.000"
    assert QR(Fraction(5, 2)).decimal(0) == "3"
    # the undirected three-color coefficient rounds to 0.2557
    assert QR(Fraction(26, 81), Fraction(-2, 81)).decimal(4) == "0.2557"


def test_hash_consistent_with_eq():
    assert hash(QR(Fraction(3, 2))) == hash(Fraction(3, 2))
    assert QR(Fraction(3, 2)) == Fraction(3, 2)
    d = {QR(2, 0): "qr"}
    assert d[2] == "qr"


def test_threshold_table_identities():
    table = thresholds()
    # pair-sum thresholds are exactly twice the per-color thresholds
    assert table["directed-pair-3"].quad == 2 * table["directed-per-color-3"].quad
    assert table["transitive-pair-3"].quad == 2 * table["transitive-per-color-3"].quad
    assert table["transitive-pair-3"].linear == 2 * table["transitive-per-color-3"].linear
    assert table["undirected-pair-3"].quad == 2 * table["undirected-per-color-3"].quad
    # doubling every undirected edge identifies the two settings
    assert table["undirected-pair-3"].quad == table["transitive-per-color-3"].quad
    assert table["undirected-pair-3"].linear == table["transitive-per-color-3"].linear
    # three colors are harder than four or more
    assert table["directed-per-color-3"].quad > table["directed-per-color-4plus"].quad
    assert table["transitive-per-color-3"].quad > table["transitive-per-color-4plus"].quad
    # forbidding two-way pairs drops the transitive threshold to n^2/3
    assert table["transitive-per-color-oriented"].quad == Fraction(1, 3)
    for entry in table.values():
        assert 0 < entry.quad <= Fraction(10, 9)
        assert entry.linear >= 0


def test_threshold_values_and_decimals():
    table = thresholds()
    assert float(table["transitive-per-color-3"].quad) == pytest.approx(0.51133, abs=1e-5)
    assert table["undirected-per-color-3"].quad.decimal(4) == "0.2557"
    v = threshold_value(table["directed-per-color-3"], 9)
    assert v == Fraction(5, 9) * 81 == 45
    v = threshold_value(table["transitive-per-color-3"], 9)
    assert v == QR(Fraction(52, 81), Fraction(-4, 81)) * 81 + Fraction(27, 2)
    total = threshold_value(table["directed-total-4plus"], 10, c=4)
    assert total == 200
    with pytest.raises(ValueError):
        threshold_value(table["directed-total-4plus"], 10)


def test_lemma21_oracle_matches_naive_enumeration():
    for a in range(0, 4):
        for b in range(0, 7 - a):
            assert lemma21_oracle(a, b) == naive_two_sided_triangle_free_max(a, b), (a, b)


def test_lemma21_oracle_within_bound_and_equalities():
    for a in range(0, 5):
        for b in range(0, 8 - a):
            value = lemma21_oracle(a, b)
            assert value <= lemma21_bound(a, b), (a, b)
    # one side empty: a clique on the other side is allowed
    for b in range(0, 6):
        assert lemma21_oracle(0, b) == b * (b - 1) // 2
    assert lemma21_oracle(1, 1) == 1
    assert lemma21_oracle(2, 2) == 4
    assert lemma21_oracle(2, 3) == 6
    assert lemma21_oracle(2, 4) == lemma21_oracle(4, 2)


def test_lemma21_input_validation():
    with pytest.raises(ValueError):
        lemma21_bound(-1, 2)
    with pytest.raises(ValueError):
        lemma21_oracle(5, 5)


def test_constraint_system_exact_point():
    system = ConstraintSystem()
    assert system.feasible(*ConstraintSystem.OPTIMUM)
    assert system.slacks(*ConstraintSystem.OPTIMUM) == (0, 0)
    # the linear cap is tight there
    u, y, z, r = ConstraintSystem.OPTIMUM
    assert 3 * u + y / 2 + r == 1


def test_constraint_system_sample_points():
    system = ConstraintSystem()
    samples = [
        (Fraction(3, 10), 0, 0, 0),
        (Fraction(1, 4), Fraction(1, 10), Fraction(1, 20), Fraction(1, 10)),
        (Fraction(1, 5), Fraction(1, 5), 0, Fraction(1, 4)),
        (0, 0, 0, Fraction(1, 2)),
    ]
    for point in samples:
        assert system.feasible(*point), point
        assert system.min_slack(*point) < 0, point
    assert not system.feasible(Fraction(1, 3), 0, 0, Fraction(1, 100))
    assert not system.feasible(Fraction(1, 10), Fraction(1, 2), 0, 0)
    assert not system.feasible(Fraction(1, 10), 0, -1, 0)


def test_constraint_system_float_agrees_with_exact():
    system = ConstraintSystem()
    rng = random.Random(3)
    for _ in range(200):
        u = Fraction(rng.randint(0, 333), 1000)
        y = Fraction(rng.randint(0, 1000), 3000)
        z = Fraction(rng.randint(0, 333), 1000)
        r = Fraction(rng.randint(0, 1000), 1000)
        if not system.feasible(u, y, z, r):
            continue
        exact = float(system.min_slack(u, y, z, r))
        approx = system.min_slack_float(float(u), float(y), float(z), float(r))
        assert abs(exact - approx) < 1e-12


def test_scan_confirms_unique_optimum_coarse():
    # coarse grid keeps this test quick; the fine default runs in acceptance
    result = scan_constraint_system(grid_step=0.02, polish_iters=60)
    assert result.grid_points > 1000
    assert result.grid_value <= 0
    assert result.polished_value <= 1e-9
    assert abs(result.polished_point[0] - 1 / 3) <= 1e-4
    assert max(result.polished_point[1:]) <= 1e-4
    assert result.exact_slacks_at_optimum == (0, 0)
    assert result.optimum_confirmed
