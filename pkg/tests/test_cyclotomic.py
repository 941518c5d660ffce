import cmath

import pytest
from hypothesis import given

from errorgroups.cyclotomic import (
    I,
    INV_SQRT2,
    ONE,
    SQRT2,
    ZERO,
    ZETA,
    CycScalar,
    cint_div_sqrt2,
)
from strategies import scalars

Z8 = cmath.exp(1j * cmath.pi / 4)


def close(a: CycScalar, z: complex) -> bool:
    return abs(complex(a) - z) < 1e-9


def test_zeta_has_order_eight():
    assert ZETA**4 == -ONE
    assert ZETA**8 == ONE
    assert all(ZETA**m != ONE for m in range(1, 8))


def test_sqrt2_identities():
    assert SQRT2 == ZETA - ZETA**3
    assert SQRT2 * SQRT2 == CycScalar.from_int(2)
    assert SQRT2 * INV_SQRT2 == ONE
    assert INV_SQRT2 * INV_SQRT2 * 2 == ONE


def test_i_squared():
    assert I * I == -ONE
    assert I == ZETA * ZETA


def test_canonical_form_is_unique():
    # 2 / sqrt2^2 is 1, and sqrt2 / sqrt2 is 1
    assert CycScalar((2, 0, 0, 0), 2) == ONE
    assert CycScalar((2, 0, 0, 0), 2).e == 0
    assert CycScalar((0, 1, 0, -1), 1) == ONE
    assert CycScalar((0, 0, 0, 0), 5).e == 0
    assert hash(CycScalar((4, 0, 0, 0), 2)) == hash(CycScalar.from_int(2))


def test_negative_exponent_moves_into_numerator():
    assert CycScalar((1, 0, 0, 0), -2) == CycScalar.from_int(2)


def test_divisibility_by_sqrt2():
    assert cint_div_sqrt2((1, 0, 0, 0)) is None
    assert cint_div_sqrt2((0, 1, 0, -1)) == (1, 0, 0, 0)


def test_zeta_exponent():
    for m in range(8):
        assert CycScalar.zeta(m).zeta_exponent() == m
    assert CycScalar.from_int(2).zeta_exponent() is None
    assert (ONE + I).zeta_exponent() is None


def test_unit_modulus_examples():
    assert ((ONE + I) * INV_SQRT2).is_unit_modulus()
    assert not (ONE + I).is_unit_modulus()
    assert not ZERO.is_unit_modulus()


def test_str_examples():
    assert str(ZERO) == "0"
    assert str(-ONE) == "-1"
    assert str(INV_SQRT2) == "1 / sqrt2^1"
    assert str((ONE + I) * INV_SQRT2) == "ζ8"
    assert str((ONE + ZETA) * INV_SQRT2) == "(1 + ζ8) / sqrt2^1"


def test_coerce_rejects_floats():
    with pytest.raises(TypeError):
        CycScalar.coerce(0.5)


def test_needs_four_coefficients():
    with pytest.raises(ValueError):
        CycScalar((1, 2, 3))


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


@given(scalars, scalars)
def test_complex_embedding_is_a_homomorphism(a, b):
    za, zb = complex(a), complex(b)
    assert close(a + b, za + zb)
    assert close(a * b, za * zb)
    assert close(a.conj(), za.conjugate())


@given(scalars, scalars)
def test_conjugation_is_multiplicative(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert a.conj().conj() == a


@given(scalars)
def test_abs2_is_real_and_matches_float(a):
    m = a.abs2()
    assert m == m.conj()
    assert close(m, abs(complex(a)) ** 2)


@given(scalars)
def test_unit_modulus_iff_zeta_power(a):
    numeric = abs(abs(complex(a)) - 1) < 1e-9
    assert a.is_unit_modulus() == numeric
    assert a.is_unit_modulus() == (a.zeta_exponent() is not None)


@given(scalars)
def test_str_parse_roundtrip(a):
    assert CycScalar.parse(str(a)) == a


@given(scalars)
def test_equal_values_have_equal_fields(a):
    lifted = CycScalar(a._lifted(a.e + 3), a.e + 3)
    assert lifted == a
    assert (lifted.num, lifted.e) == (a.num, a.e)
