from math import gcd

import pytest

from toric3.errors import DivisionByZero, NotPrimePower, UnsupportedOrder, ZeroArgument
from toric3.galois import make_field, power_image, solve_power

SUPPORTED = [3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64]


def test_make_field_gf5_primitive_root():
    f = make_field(5)
    # 2 is the smallest primitive root mod 5: {1, 2, 4, 3}
    assert f.alpha == 2
    assert f.units() == [1, 2, 4, 3]


def test_make_field_not_prime_power():
    with pytest.raises(NotPrimePower):
        make_field(6)
    with pytest.raises(NotPrimePower):
        make_field(12)


def test_make_field_out_of_range():
    with pytest.raises(UnsupportedOrder):
        make_field(2)
    with pytest.raises(UnsupportedOrder):
        make_field(81)


def test_gf8_unit_group():
    f = make_field(8)
    assert f.modulus == (1, 1, 0, 1)  # x^3 + x + 1
    units = f.units()
    assert len(set(units)) == 7
    assert 0 not in units


@pytest.mark.parametrize("q", SUPPORTED)
def test_exp_log_round_trip(q):
    f = make_field(q)
    for a in f.units():
        assert f.pow(f.alpha, f.log(a)) == a
        assert f.exp(f.log(a)) == a


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_field_axioms_exhaustive(q):
    f = make_field(q)
    for a in f.elements():
        assert f.add(a, f.neg(a)) == 0
        if a != 0:
            assert f.mul(a, f.inv(a)) == 1
        for b in f.elements():
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in f.elements():
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_pow_examples():
    f5 = make_field(5)
    assert f5.pow(2, -1) == 3  # 2 * 3 = 6 = 1 mod 5
    f7 = make_field(7)
    assert f7.pow(3, 6) == 1
    for q in (5, 7, 8, 9):
        f = make_field(q)
        for x in f.units():
            assert f.pow(x, 0) == 1
            assert f.pow(x, q - 1) == 1


def test_inv_zero_raises():
    with pytest.raises(DivisionByZero):
        make_field(5).inv(0)


def test_solve_power_examples():
    f7 = make_field(7)
    assert solve_power(f7, 2, 2) == {3, 4}
    assert solve_power(f7, 2, 3) == set()
    f5 = make_field(5)
    assert solve_power(f5, 1, 4) == {4}


def test_solve_power_zero_raises():
    with pytest.raises(ZeroArgument):
        solve_power(make_field(7), 2, 0)


@pytest.mark.parametrize("q", [5, 7, 8, 9])
@pytest.mark.parametrize("t", [1, 2, 3, 4, 6])
def test_solve_power_size_law(q, t):
    f = make_field(q)
    g = gcd(t, q - 1)
    total = 0
    for a in f.units():
        sols = solve_power(f, t, a)
        assert len(sols) in (0, g)
        for y in sols:
            assert f.pow(y, t) == a
        total += len(sols)
    assert total == q - 1


def test_power_image_examples():
    f7 = make_field(7)
    assert power_image(f7, 3) == {1, 6}
    f5 = make_field(5)
    assert power_image(f5, 3) == set(f5.units())
    f9 = make_field(9)
    sq = power_image(f9, 2)
    assert len(sq) == 4
    assert sq == {f9.mul(a, a) for a in f9.units()}


@pytest.mark.parametrize("q", [5, 7, 9])
def test_power_image_gcd_reduction(q):
    f = make_field(q)
    for t in range(1, 2 * q):
        g = gcd(t, q - 1)
        img = power_image(f, t)
        assert img == power_image(f, g)
        assert len(img) == (q - 1) // g
