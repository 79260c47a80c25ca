import pytest
from hypothesis import given, strategies as st

from tamecover.field import ExtensionField, PrimeField, is_prime, quadratic_extension

FIELD_PRIMES = [2, 3, 5, 7, 101]


def test_rejects_composite_modulus():
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        PrimeField(1)


@pytest.mark.parametrize("p", FIELD_PRIMES)
def test_field_axioms_exhaustive_or_sampled(p):
    F = PrimeField(p)
    if p <= 7:
        sample = list(F.elements())
    else:
        sample = [0, 1, 2, 3, 50, 99, 100]
    for a in sample:
        for b in sample:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in sample[:4]:
                assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("p", FIELD_PRIMES)
def test_inverse_round_trips(p):
    F = PrimeField(p)
    for a in range(1, p):
        assert F.mul(a, F.inv(a)) == F.one
        assert F.inv(F.inv(a)) == a
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


@given(st.integers(), st.integers())
def test_coercion_respects_ring_ops(a, b):
    F = PrimeField(7)
    assert F.add(F.coerce(a), F.coerce(b)) == F.coerce(a + b)
    assert F.mul(F.coerce(a), F.coerce(b)) == F.coerce(a * b)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_quadratic_extension_is_a_field(p):
    E = quadratic_extension(p)
    assert E.order == p * p
    elements = list(E.elements())
    assert len(elements) == p * p
    for a in elements:
        assert E.mul(a, E.one) == E.coerce(a)
        if not E.is_zero(a):
            assert E.mul(a, E.inv(a)) == E.one
    # frobenius fixed field is exactly F_p
    fixed = [a for a in elements if E.pow(a, p) == E.coerce(a)]
    assert len(fixed) == p


def test_extension_rejects_reducible_modulus():
    # w^2 = 1 factors as (w-1)(w+1)
    with pytest.raises(ValueError):
        ExtensionField(5, (1, 0))


def test_is_prime_small_values():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
