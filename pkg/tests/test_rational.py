from fractions import Fraction

import pytest

from crsphere.rational import GaussianRational, gr, I, ONE, ZERO


def test_construction_normalizes():
    a = gr(Fraction(2, 4), Fraction(-6, 4))
    assert str(a) == "1/2-3/2*i"
    assert a == gr("1/2", "-3/2")


def test_field_ops():
    a = gr(1, 2)
    b = gr(3, -1)
    assert a + b == gr(4, 1)
    assert a - b == gr(-2, 3)
    assert a * b == gr(5, 5)
    assert (a / b) * b == a
    assert a * a.inverse() == ONE
    assert -a + a == ZERO


def test_i_squares_to_minus_one():
    assert I * I == gr(-1)
    assert str(2 * I) == "2*i"
    assert str(gr(0, -1)) == "-i"


def test_conjugate_and_predicates():
    a = gr(Fraction(1, 3), 5)
    assert a.conjugate() == gr(Fraction(1, 3), -5)
    assert not a.is_real()
    assert gr(7).is_real()
    assert gr(0, 0).is_zero()
    assert bool(a) and not bool(ZERO)


def test_pow_and_div_errors():
    assert gr(0, 1) ** 4 == ONE
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
    with pytest.raises(ValueError):
        gr(2) ** -1


def test_int_coercion():
    assert gr(3) + 1 == gr(4)
    assert 2 * gr(1, 1) == gr(2, 2)
    assert 1 - gr(0, 1) == gr(1, -1)


def test_str_reconstructible_parts():
    vals = [gr(0), gr(5), gr(-5), gr(Fraction(3, 7)), gr(0, 1), gr(0, -1),
            gr(0, Fraction(2, 3)), gr(1, 1), gr(-1, -1), gr(Fraction(1, 2), Fraction(-3, 4))]
    seen = {str(v) for v in vals}
    assert len(seen) == len(vals)


def test_hash_consistency():
    assert hash(gr(Fraction(1, 2))) == hash(gr("1/2"))
    d = {gr(1, 2): "a"}
    assert d[gr(1, 2)] == "a"
