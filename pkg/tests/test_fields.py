"""Field arithmetic against naive polynomial oracles."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gagola.errors import (
    MixedFields,
    NonPrimeCharacteristic,
    ReduciblePolynomial,
    ZeroElement,
    ZeroInverse,
)
from gagola.fields import (
    FieldElement,
    create_field,
    field_arith,
    field_of_order,
    frobenius_power,
    inverse,
    multiplicative_order,
    power,
)


# -- oracles: naive GF(2) polynomial arithmetic on coefficient lists --------

def poly_mul_gf2(a_bits, b_bits):
    out = 0
    i = 0
    while a_bits >> i:
        if (a_bits >> i) & 1:
            out ^= b_bits << i
        i += 1
    return out


def poly_mod_gf2(a_bits, m_bits):
    dm = m_bits.bit_length() - 1
    while a_bits.bit_length() - 1 >= dm and a_bits:
        a_bits ^= m_bits << (a_bits.bit_length() - 1 - dm)
    return a_bits


def gf2_mul_oracle(a, b, poly):
    return poly_mod_gf2(poly_mul_gf2(a, b), poly)


def divides_gf2(d_bits, f_bits):
    """d | f as GF(2) polynomials, by long division."""
    return poly_mod_gf2(f_bits, d_bits) == 0


# -- construction ------------------------------------------------------------

def test_prime_field_degenerate_degree_one():
    F = create_field(2, 1)
    assert F.q == 2
    assert F.reduction == (0, 1)  # the polynomial x


def test_gf8_with_given_polynomial():
    # oracle: x^3 + x + 1 (0b1011) has no linear factor over GF(2)
    f = 0b1011
    assert not divides_gf2(0b10, f)  # x
    assert not divides_gf2(0b11, f)  # x + 1
    F = create_field(2, 3, poly=(1, 1, 0, 1))
    assert F.q == 8


def test_gf8_reducible_rejected():
    # x^3 + 1 has the root 1
    with pytest.raises(ReduciblePolynomial):
        create_field(2, 3, poly=(1, 0, 0, 1))


def test_nonprime_characteristic():
    with pytest.raises(NonPrimeCharacteristic):
        create_field(4, 1)
    with pytest.raises(NonPrimeCharacteristic):
        field_of_order(12)


def test_default_polynomial_is_lexicographic_least():
    # scan integer encodings upward with the oracle; first irreducible wins
    F = create_field(2, 3)
    for low in range(8):
        cand = low | 0b1000
        irreducible = not any(
            divides_gf2(d, cand) for d in range(2, 8) if d.bit_length() >= 2
        )
        if irreducible:
            assert sum(c << i for i, c in enumerate(F.reduction)) == cand
            break


# -- arithmetic --------------------------------------------------------------

def test_gf8_generator_cube():
    F = create_field(2, 3)
    g = 0b010
    assert F.pow(g, 3) == gf2_mul_oracle(gf2_mul_oracle(g, g, 0b1011), g, 0b1011)
    assert F.pow(g, 3) == F.add(g, 1)  # g^3 = g + 1


def test_char2_self_addition():
    F = create_field(2, 4)
    for a in F.elements():
        assert F.add(a, a) == 0


def test_zero_inverse_raises():
    F = create_field(2, 3)
    with pytest.raises(ZeroInverse):
        F.inv(0)
    with pytest.raises(ZeroInverse):
        inverse(FieldElement(F, 0))


def test_field_element_wrapper_and_mixing():
    F8 = create_field(2, 3)
    F16 = create_field(2, 4)
    a = FieldElement(F8, 3)
    b = FieldElement(F8, 5)
    assert field_arith(a, b, "add").value == 3 ^ 5
    assert field_arith(a, b, "mul").value == gf2_mul_oracle(3, 5, 0b1011)
    assert power(a, -1).value == F8.inv(3)
    with pytest.raises(MixedFields):
        a + FieldElement(F16, 1)


def test_element_notation():
    F = create_field(2, 3)
    assert F.element_str(0x5) == "0x5@GF(2^3,0xB)"


# -- frobenius ---------------------------------------------------------------

def test_frobenius_examples():
    F = create_field(2, 3)
    g = 0b010
    a = FieldElement(F, g)
    assert frobenius_power(a, 0).value == g
    assert frobenius_power(a, 3).value == g  # full Galois orbit
    assert frobenius_power(a, 1).value == gf2_mul_oracle(g, g, 0b1011)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 255), st.integers(0, 255), st.integers(0, 7))
def test_frobenius_is_field_automorphism_gf256(a, b, h):
    F = create_field(2, 8)
    assert F.frobenius(F.add(a, b), h) == F.add(F.frobenius(a, h), F.frobenius(b, h))
    assert F.frobenius(F.mul(a, b), h) == F.mul(F.frobenius(a, h), F.frobenius(b, h))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 26), st.integers(0, 26), st.integers(0, 2))
def test_frobenius_is_field_automorphism_gf27(a, b, h):
    F = create_field(3, 3)
    assert F.frobenius(F.add(a, b), h) == F.add(F.frobenius(a, h), F.frobenius(b, h))
    assert F.frobenius(F.mul(a, b), h) == F.mul(F.frobenius(a, h), F.frobenius(b, h))


# -- multiplicative orders ----------------------------------------------------

def test_order_examples():
    F8 = create_field(2, 3)
    assert multiplicative_order(FieldElement(F8, 1)) == 1
    # oracle: exhaust powers of the primitive element
    g = F8.primitive_element()
    k, acc = 1, g
    while acc != 1:
        acc = F8.mul(acc, g)
        k += 1
    assert k == 7
    assert F8.order(g) == 7

    F16 = create_field(2, 4)
    h = F16.pow(0b0010, 3)
    k, acc = 1, h
    while acc != 1:
        acc = F16.mul(acc, h)
        k += 1
    assert k == 5
    assert F16.order(h) == 5


def test_order_of_zero_raises():
    F = create_field(2, 3)
    with pytest.raises(ZeroElement):
        F.order(0)


@pytest.mark.parametrize("p,n", [(2, 8), (3, 4), (5, 3), (7, 2), (2, 12)])
def test_unit_group_exponent(p, n):
    F = create_field(p, n)
    for a in range(1, F.q):
        assert F.pow(a, F.q - 1) == 1


def test_norm_map_bijection_all_valid_twists():
    # a -> a * a^(2^h) is a bijection whenever theta has odd order > 1
    from math import gcd

    for n in range(2, 13):
        F = create_field(2, n)
        for h in range(1, n):
            t = n // gcd(n, h)
            if t == 1 or t % 2 == 0:
                continue
            image = {F.mul(a, F.frobenius(a, h)) for a in range(F.q)}
            assert len(image) == F.q, (n, h)
