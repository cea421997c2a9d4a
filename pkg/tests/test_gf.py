from itertools import product

import pytest

from convcodes.gf import (
    DEFAULT_MODULI,
    FieldElement,
    FieldError,
    construct_field,
    field_of_order,
    invert,
    left_kernel,
    matrix_rank,
    multiply,
    parse_element,
    prime_power,
    row_reduce,
)
from oracles import poly_add, poly_mulmod

PRIME_POWERS = [q for q in range(2, 257) if prime_power(q)]
SMALL = [q for q in PRIME_POWERS if q <= 16]


def test_default_moduli():
    assert DEFAULT_MODULI[4] == (1, 1, 1)
    assert DEFAULT_MODULI[8] == (1, 1, 0, 1)
    assert DEFAULT_MODULI[16] == (1, 1, 0, 0, 1)


def test_gf4_alpha_squared():
    F = construct_field(2, 2)
    a = F.gen_power(1)
    assert F.mul(a, a) == F.add(a, 1)


def test_prime_field_is_integers_mod_p():
    F = construct_field(5)
    for a, b in product(range(5), repeat=2):
        assert F.add(a, b) == (a + b) % 5
        assert F.mul(a, b) == (a * b) % 5


def test_gf16_generator_order():
    F = construct_field(2, 4)
    g = F.gen_power(1)
    assert F.mul(F.power(g, 4), 1) == F.add(g, 1)
    assert [j for j in range(1, 16) if F.power(g, j) == 1] == [15]


def test_beta_cubed():
    F = field_of_order(8)
    b = F.element(F.gen_power(1))
    b2 = F.element(F.gen_power(2))
    assert multiply(b, b2) == b**3 == b + F.element(1)


def test_identity_and_alpha_cube():
    F = field_of_order(4)
    for x in F.elements():
        assert x * F.element(1) == x
    a = F.element(F.gen_power(1))
    assert multiply(a, a * a) == F.element(1)


def test_inverse_examples():
    assert invert(field_of_order(5).element(2)).value == 3
    F16 = field_of_order(16)
    one = F16.element(1)
    assert invert(one) == one
    g = F16.element(F16.gen_power(1))
    assert invert(g) == F16.element(F16.gen_power(14))
    assert g * F16.element(F16.gen_power(14)) == one


def test_invert_zero():
    with pytest.raises(ZeroDivisionError):
        invert(field_of_order(7).element(0))


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_tables_match_polynomial_arithmetic(q):
    F = field_of_order(q)
    p, m = F.p, F.m
    mod = [0] * (m + 1)
    for i, c in enumerate(F.modulus):
        mod[i] = c
    if len(F.modulus) == m:
        mod[m] = 1
    assert mod[m] == 1
    step = 1 if q <= 64 else 7
    for a in range(0, q, step):
        for b in range(q):
            assert F.mul(a, b) == poly_mulmod(a, b, p, m, mod)
            assert F.add(a, b) == poly_add(a, b, p, m)


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_inverse_and_generator_order(q):
    F = field_of_order(q)
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == 1
    g = F.generator
    powers = [F.power(g, j) for j in range(1, q)]
    assert powers[-1] == 1
    assert 1 not in powers[:-1]


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_characteristic(q):
    F = field_of_order(q)
    for a in range(q):
        s = 0
        for _ in range(F.p):
            s = F.add(s, a)
        assert s == 0


@pytest.mark.parametrize("q", SMALL)
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    A, M = F.add_table, F.mul_table
    assert (A == A.T).all() and (M == M.T).all()
    for a, b, c in product(range(q), repeat=3):
        assert A[A[a, b], c] == A[a, A[b, c]]
        assert M[M[a, b], c] == M[a, M[b, c]]
        assert M[a, A[b, c]] == A[M[a, b], M[a, c]]


def test_construction_errors():
    with pytest.raises(FieldError):
        construct_field(4, 1)
    with pytest.raises(FieldError):
        construct_field(2, 9)
    with pytest.raises(FieldError):
        construct_field(2, 2, (1, 0, 1))  # a^2+1 = (a+1)^2
    with pytest.raises(FieldError):
        field_of_order(6)


def test_non_primitive_modulus_rejected():
    # a^4+a^3+a^2+a+1 is irreducible but a has order 5
    with pytest.raises(FieldError, match="primitive"):
        construct_field(2, 4, (1, 1, 1, 1, 1))


def test_custom_primitive_modulus():
    F = construct_field(2, 4, (1, 0, 0, 1, 1))  # a^4+a^3+1
    assert F != field_of_order(16)
    assert "modulus" in F.header()
    g = F.gen_power(1)
    assert F.power(g, 4) == F.add(F.power(g, 3), 1)


def test_field_equality_is_structural():
    assert construct_field(2, 3) == field_of_order(8)
    assert construct_field(2, 3) is construct_field(2, 3)
    with pytest.raises(FieldError):
        field_of_order(4).element(1) + field_of_order(8).element(1)


def test_parse_element():
    F = field_of_order(16)
    assert parse_element("0", F) == 0
    assert parse_element("1", F) == 1
    assert parse_element("a", F) == F.gen_power(1)
    assert parse_element("a^14", F) == F.gen_power(14)
    assert parse_element("a^15", F) == 1
    for bad in ("b", "a^", "2", "a*a"):
        with pytest.raises(FieldError):
            parse_element(bad, F)
    assert parse_element("4", field_of_order(5)) == 4
    with pytest.raises(FieldError):
        parse_element("5", field_of_order(5))
    with pytest.raises(FieldError):
        parse_element("a", field_of_order(5))


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25])
def test_format_parse_round_trip(q):
    F = field_of_order(q)
    for a in range(q):
        assert parse_element(F.format(a), F) == a


def test_field_element_operators():
    F = field_of_order(7)
    x, y = F.element(3), F.element(5)
    assert (x + y).value == 1
    assert (x - y).value == 5
    assert (-x).value == 4
    assert (x * y).value == 1
    assert (x / y).value == (3 * 3) % 7
    assert (x**6).value == 1
    with pytest.raises(FieldError):
        FieldElement(7, F)


def test_constant_linear_algebra():
    F = field_of_order(2)
    rows = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert matrix_rank(F, rows) == 2
    rref, piv = row_reduce(F, rows)
    assert piv == [0, 1]
    ker = left_kernel(F, rows)
    assert ker == [[1, 1, 1]]
    F4 = field_of_order(4)
    a = F4.gen_power(1)
    assert matrix_rank(F4, [[1, a], [a, F4.mul(a, a)]]) == 1
