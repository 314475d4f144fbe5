import itertools

import pytest
from hypothesis import given, strategies as st

from securedss.errors import DivisionByZero, FieldMismatch, ModulusTooLarge, NonPrimeModulus
from securedss.gf import Field, FieldElement, field_new, is_prime, smallest_primitive_root

SMALL_PRIMES = [p for p in range(2, 32) if all(p % d for d in range(2, p))]


def _order(a, q):
    k, x = 1, a % q
    while x != 1:
        x = x * a % q
        k += 1
    return k


def _oracle_primitive_root(q):
    if q == 2:
        return 1
    return next(a for a in range(2, q) if _order(a, q) == q - 1)


@pytest.mark.parametrize("q", SMALL_PRIMES + [257, 65521])
def test_primitive_root_matches_order_oracle(q):
    assert smallest_primitive_root(q) == _oracle_primitive_root(q)


def test_gf7_generator_and_tables():
    f = field_new(7)
    assert f.alpha == 3
    assert [f.exp(k) for k in range(6)] == [1, 3, 2, 6, 4, 5]
    assert f.log(5) == 5
    assert f.exp(-1) == 5


def test_gf2():
    f = field_new(2)
    assert f.alpha == 1
    assert f(1) + f(1) == 0


@pytest.mark.parametrize("q", [1, 4, 6, 9, 15])
def test_non_prime_rejected(q):
    with pytest.raises(NonPrimeModulus):
        field_new(q)


def test_modulus_too_large():
    with pytest.raises(ModulusTooLarge):
        field_new(65537)


def test_examples_in_gf7():
    f = field_new(7)
    assert f(4) + f(5) == 2
    assert f(3).inv() == 5
    assert f(2) - f(5) == 4
    assert f(3) * f(5) == 1
    assert f(6) / f(3) == 2
    assert -f(1) == 6


def test_inverse_of_zero():
    f = field_new(7)
    with pytest.raises(DivisionByZero):
        f(0).inv()
    with pytest.raises(ZeroDivisionError):
        f(1) / f(0)


def test_mixed_fields():
    with pytest.raises(FieldMismatch):
        field_new(5)(1) + field_new(7)(1)


def test_field_is_cached_and_hashable():
    assert field_new(11) is field_new(11)
    assert Field(11) == field_new(11)
    assert len({field_new(3)(1), field_new(3)(4)}) == 1


def test_is_prime():
    assert [p for p in range(40) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


@pytest.mark.parametrize("q", SMALL_PRIMES)
def test_field_axioms_exhaustive(q):
    f = field_new(q)
    els = [f(a) for a in range(q)]
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a and a * b == b * a
        assert (a - b) + b == a
        if b != 0:
            assert (a / b) * b == a
    for a in els[1:]:
        assert a ** (q - 1) == 1
        assert f.exp(f.log(a.value)) == a.value


@given(st.sampled_from(SMALL_PRIMES), st.integers(), st.integers(), st.integers())
def test_distributivity(q, a, b, c):
    f = field_new(q)
    x, y, z = f(a), f(b), f(c)
    assert x * (y + z) == x * y + x * z
    assert isinstance(x * y, FieldElement)
