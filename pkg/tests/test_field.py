"""Field arithmetic: construction, exact ops, axioms."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pgcodes.errors import (
    CompositeP,
    DivisionByZero,
    ReducibleModulus,
    UnsupportedSize,
)
from pgcodes.field import (
    FieldElement,
    PrimeFieldElement,
    factor_prime_power,
    field_arith,
    field_make,
    is_prime,
    poly_is_irreducible,
    prime_arith,
)

def all_prime_powers(limit):
    out = []
    for q in range(2, limit + 1):
        try:
            factor_prime_power(q)
            out.append(q)
        except ValueError:
            pass
    return out


def test_field_make_gf2_modulus_is_x():
    gf = field_make(2, 1)
    assert gf.q == 2
    assert gf.modulus == (0, 1)


def test_field_make_gf9_shipped_modulus_is_irreducible():
    # oracle: exhaust the 3 possible roots of the degree-2 modulus over F_3
    gf = field_make(3, 2)
    c0, c1, c2 = gf.modulus
    for x in range(3):
        assert (c0 + c1 * x + c2 * x * x) % 3 != 0


def test_field_make_rejects_composite_p():
    with pytest.raises(CompositeP):
        field_make(4, 1)


def test_field_make_rejects_reducible_modulus():
    with pytest.raises(ReducibleModulus):
        field_make(2, 2, modulus=(1, 0, 1))  # x^2+1 = (x+1)^2 over F_2


def test_field_make_unsupported_size():
    with pytest.raises(UnsupportedSize):
        field_make(2, 8)  # q = 256 beyond the shipped table


def test_gf7_add_and_inverse():
    gf = field_make(7)
    a, b = gf.element(3), gf.element(5)
    assert (a + b).value == 1  # 8 mod 7
    # oracle: exhaust x with 3x = 1 mod 7
    inv3 = [x for x in range(7) if (3 * x) % 7 == 1]
    assert inv3 == [5]
    assert a.inverse().value == 5


def test_multiplicative_identity_all_fields():
    for q in all_prime_powers(128):
        p, h = factor_prime_power(q)
        gf = field_make(p, h)
        one = gf.one
        for a in gf.elements():
            assert (a * one).value == a.value


def test_inverse_exhaustive_q_le_128():
    for q in all_prime_powers(128):
        p, h = factor_prime_power(q)
        gf = field_make(p, h)
        for v in range(1, q):
            a = gf.element(v)
            assert (a * a.inverse()).value == 1


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_field_axioms_exhaustive_small(q):
    p, h = factor_prime_power(q)
    gf = field_make(p, h)
    els = list(range(q))
    A = gf.ADD
    M = gf.MUL
    for a in els:
        for b in els:
            assert A[a, b] == A[b, a]
            assert M[a, b] == M[b, a]
            for c in els:
                assert A[A[a, b], c] == A[a, A[b, c]]
                assert M[M[a, b], c] == M[a, M[b, c]]
                assert M[a, A[b, c]] == A[M[a, b], M[a, c]]


@pytest.mark.parametrize("q", [4, 8, 9, 25, 27, 49])
def test_frobenius_is_additive(q):
    p, h = factor_prime_power(q)
    gf = field_make(p, h)
    for a in range(q):
        fa = gf.pow(a, p)
        for b in range(q):
            assert gf.pow(int(gf.ADD[a, b]), p) == gf.ADD[fa, gf.pow(b, p)]


def test_division_by_zero():
    gf = field_make(5)
    with pytest.raises(DivisionByZero):
        gf.element(3) / gf.element(0)
    with pytest.raises(DivisionByZero):
        gf.element(0).inverse()


def test_field_arith_dispatch():
    gf = field_make(7)
    a, b = gf.element(3), gf.element(5)
    assert field_arith(a, b, "add").value == 1
    assert field_arith(a, None, "inv").value == 5
    assert field_arith(a, None, "neg").value == 4
    assert field_arith(a, b, "div").value == (3 * 3) % 7  # 3/5 = 3*3 = 2


def test_prime_field_examples():
    assert prime_arith(PrimeFieldElement(5, 4), PrimeFieldElement(5, 3), "add").value == 2
    assert (-PrimeFieldElement(5, 2)).value == 3
    assert prime_arith(PrimeFieldElement(2, 1), PrimeFieldElement(2, 1), "add").value == 0


def test_prime_field_element_is_distinct_type():
    gf = field_make(5)
    assert not isinstance(PrimeFieldElement(5, 2), FieldElement)
    assert not isinstance(gf.element(2), PrimeFieldElement)


def test_element_textual_form_is_coefficient_tuple():
    gf9 = field_make(3, 2)
    e = gf9.element((1, 2))
    assert str(e) == "1,2"
    assert e.coeffs == (1, 2)


def test_element_order_is_lex_on_coefficient_tuples():
    gf9 = field_make(3, 2)
    ordering = sorted(gf9.elements())
    tuples = [e.coeffs for e in ordering]
    assert tuples == sorted(tuples)


def test_conway_table_entries_all_irreducible():
    from pgcodes.field import CONWAY_TABLE

    for (p, h), coeffs in CONWAY_TABLE.items():
        assert len(coeffs) == h + 1 and coeffs[-1] == 1
        assert poly_is_irreducible(coeffs, p)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 5, 7, 11, 13]), st.integers(0, 200), st.integers(0, 200))
def test_prime_arith_matches_int_mod(p, x, y):
    a, b = PrimeFieldElement(p, x), PrimeFieldElement(p, y)
    assert (a + b).value == (x + y) % p
    assert (a - b).value == (x - y) % p
    assert (a * b).value == (x * y) % p
