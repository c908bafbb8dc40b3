import itertools

import pytest

from kparallel import gf


@pytest.fixture
def gf4():
    return gf.field_new(2, 2, [1, 1, 1])


@pytest.fixture
def gf8():
    return gf.field_new(2, 3, [1, 1, 0, 1])


def test_prime_field_has_unit_generator():
    field = gf.field_new(2, 1)
    assert field.order == 2
    assert field.alpha == 1
    assert field.modulus == (0, 1)


def test_gf4_alpha_squared(gf4):
    alpha = gf4.primitive
    assert alpha * alpha == alpha + gf4.one


def test_gf8_alpha_cubed(gf8):
    alpha = gf8.primitive
    assert gf.power(alpha, 3) == alpha + gf8.one


@pytest.mark.parametrize("p, e, modulus", [
    (2, 2, (1, 1, 1)),
    (2, 3, (1, 1, 0, 1)),
    (2, 4, (1, 1, 0, 0, 1)),
])
def test_default_modulus(p, e, modulus):
    assert gf.default_modulus(p, e) == modulus
    assert gf.field_new(p, e).modulus == modulus


def test_reducible_modulus():
    with pytest.raises(gf.ReducibleModulusError):
        gf.field_new(2, 2, [1, 0, 1])


@pytest.mark.parametrize("p", [1, 4, 9, 15])
def test_not_prime(p):
    with pytest.raises(gf.NotPrimeError):
        gf.field_new(p)


def test_field_too_large():
    with pytest.raises(gf.FieldSizeError):
        gf.field_new(2, 17)


def test_malformed_modulus():
    with pytest.raises(gf.FieldSizeError):
        gf.field_new(2, 2, [1, 1])


def test_field_of_order():
    assert gf.field_of_order(9) == gf.field_new(3, 2)
    with pytest.raises(gf.NotPrimeError):
        gf.field_of_order(12)


def test_examples_in_gf8(gf8):
    alpha = gf8.primitive
    assert gf.add(alpha, alpha) == gf8.zero
    assert gf.power(alpha, 7) == gf8.one
    assert gf.mul(gf.power(alpha, 2), alpha) == alpha + gf8.one


def test_inverse_of_zero(gf8):
    with pytest.raises(gf.ZeroInverseError):
        gf.inv(gf8.zero)
    with pytest.raises(ZeroDivisionError):
        gf8.one / gf8.zero


def test_mixed_fields(gf4, gf8):
    with pytest.raises(gf.MixedFieldError):
        gf4.one + gf8.one


@pytest.mark.parametrize("p, e", [(2, 4), (3, 2), (5, 2), (2, 6)])
def test_every_nonzero_element_has_an_inverse(p, e):
    field = gf.field_new(p, e)
    for a in itertools.islice(field.elements(), 1, None):
        assert gf.mul(a, gf.inv(a)) == field.one


@pytest.mark.parametrize("p, e", [(2, 3), (3, 2), (2, 4), (5, 2), (7, 1)])
def test_alpha_generates(p, e):
    field = gf.field_new(p, e)
    powers = {gf.power(field.primitive, j).value for j in range(field.order - 1)}
    assert len(powers) == field.order - 1


def test_negative_powers(gf8):
    alpha = gf8.primitive
    assert gf.power(alpha, -1) * alpha == gf8.one
    assert gf.power(gf8.zero, 0) == gf8.one


def test_frobenius(gf4, gf8):
    assert all(gf.frobenius(field.one, i) == field.one for field in (gf4, gf8) for i in range(4))
    assert gf.frobenius(gf4.primitive, 1) == gf4.primitive + gf4.one
    for a, b in itertools.product(gf8.elements(), repeat=2):
        assert gf.frobenius(a + b, 1) == gf.frobenius(a, 1) + gf.frobenius(b, 1)


def test_squaring_is_a_bijection_on_gf16():
    field = gf.field_new(2, 4)
    assert len({gf.frobenius(a, 1).value for a in field.elements()}) == field.order


def test_to_vector(gf8):
    assert gf.to_vector(gf8.zero) == (0, 0, 0)
    assert gf.to_vector(gf8.primitive) == (0, 1, 0)
    for a in gf8.elements():
        assert gf.from_vector(gf.to_vector(a), gf8) == a


def test_to_vector_is_additive(gf8):
    for a, b in itertools.product(gf8.elements(), repeat=2):
        expected = tuple(x ^ y for x, y in zip(gf.to_vector(a), gf.to_vector(b)))
        assert gf.to_vector(a + b) == expected


def test_from_vector_length(gf8):
    with pytest.raises(gf.VectorLengthError):
        gf.from_vector((1, 0), gf8)


def test_extension_over_gf4():
    base = gf.field_of_order(4)
    ext = gf.extension_of_degree(base, 2)
    assert ext.big.order == 16
    assert ext.m == 2
    for a in ext.big.elements():
        coords = ext.to_vector(a)
        assert all(0 <= c < 4 for c in coords)
        assert ext.from_vector(coords) == a
    # F_4 sits inside F_16 as a subfield
    for a, b in itertools.product(base.elements(), repeat=2):
        product = ext.from_vector((a.value, 0)) * ext.from_vector((b.value, 0))
        assert product == ext.from_vector(((a * b).value, 0))


def test_discrete_log():
    field = gf.field_new(2, 4)
    assert gf.discrete_log(gf.power(field.primitive, 5)) == 5
    assert gf.discrete_log(field.one) == 0


@pytest.mark.parametrize("order", [9, 16, 25])
def test_discrete_log_inverts_power(order):
    field = gf.field_of_order(order)
    for j in range(order - 1):
        assert gf.discrete_log(gf.power(field.primitive, j)) == j
    with pytest.raises(gf.ZeroInverseError):
        gf.discrete_log(field.zero)


def test_describe(gf8):
    assert gf8.describe() == {"p": 2, "e": 3, "modulus": [1, 1, 0, 1], "alpha": 2}
