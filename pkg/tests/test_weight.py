"""The q-weighting phi and the transport of ideal membership."""

import pytest
from hypothesis import given

from rightq import (
    Biword,
    Expression,
    Laurent,
    NotCircular,
    SYSTEM_S,
    SYSTEM_SQ,
    check_circuit_multiplicativity,
    check_principle,
    in_ideal,
    parse_expression,
    phi,
    phi_inv,
)

from _strategies import circular_expressions, expressions


def ex(text: str) -> Expression:
    return parse_expression(text)


# frozen from the exponent definition inv(bottom) - inv(top)
def test_phi_on_single_biwords():
    assert phi(ex("21/12")) == ex("q^-1*21/12")
    assert phi(ex("12/21")) == ex("q*12/21")
    assert phi(ex("21/21")) == ex("21/21")
    assert phi(ex("e")) == ex("e")
    assert phi(ex("21/11")) == ex("q^-1*21/11")


def test_phi_fixes_coefficients_of_balanced_biwords():
    e = ex("3*q^2*12/12 - q*11/11")
    assert phi(e) == e


@given(expressions())
def test_phi_inverse(e):
    assert phi_inv(phi(e)) == e
    assert phi(phi_inv(e)) == e


@given(expressions())
def test_phi_is_linear(e):
    c = Laurent.q_power(-1, 3)
    assert phi(e.scale(c)) == phi(e).scale(c)
    assert phi(-e) == -phi(e)


@given(circular_expressions(), circular_expressions())
def test_phi_multiplicative_on_circuits(e, f):
    assert check_circuit_multiplicativity(e, f)


def test_phi_not_multiplicative_in_general():
    e = Expression.single(Biword((1,), (2,)))
    f = Expression.single(Biword((2,), (1,)))
    assert phi(e.product(f)) != phi(e).product(phi(f))
    with pytest.raises(NotCircular):
        check_circuit_multiplicativity(e, f)
    with pytest.raises(NotCircular):
        check_circuit_multiplicativity(Expression.unit(), f)


def test_membership_transports_on_generators():
    member = ex("21/21 - 12/12 - 12/21 + 21/12")
    assert in_ideal(member, SYSTEM_S)
    assert in_ideal(phi(member), SYSTEM_SQ)
    assert check_principle(member)

    member2 = ex("21/11 - 12/11")
    assert in_ideal(phi(member2), SYSTEM_SQ)
    assert phi(member2) == ex("q^-1*21/11 - 12/11")
    assert check_principle(member2)


def test_membership_transports_on_non_members():
    for text in ("12/12", "21/12 + e", "q*11/11 - 2*21/21"):
        e = ex(text)
        assert not in_ideal(e, SYSTEM_S)
        assert not in_ideal(phi(e), SYSTEM_SQ)
        assert check_principle(e)


@given(expressions())
def test_principle_on_random_expressions(e):
    assert check_principle(e)
