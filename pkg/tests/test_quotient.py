import random

import pytest

from tamecover.poly import PolyRing
from tamecover.quotient import (FiniteQuotientAlgebra, QuotientPresentation,
                                nilpotent_ring, prime_ring, quadratic_field_ring)


def kummer_line(p, r):
    """A[t]/(t^r - u) over A = F_p[u, v]."""
    ring = PolyRing(p, ("u", "v", "t"))
    return ring, QuotientPresentation(ring, {"t": (r, ring.gen("u"))})


def test_pure_power_rule_reduces():
    ring, q = kummer_line(5, 3)
    t, u = ring.gen("t"), ring.gen("u")
    assert q.normal_form(t ** 3) == u
    assert q.normal_form(t ** 7) == u ** 2 * t
    assert q.normal_form(ring.one()) == ring.one()


def test_identity_square_in_quadratic_cover():
    # (a + b t)^2 = (a^2 + s b^2) + 2ab t  in A[t]/(t^2 - s)
    ring = PolyRing(7, ("s", "a", "b", "t"))
    s, a, b, t = ring.gens()
    q = QuotientPresentation(ring, {"t": (2, s)})
    assert q.normal_form((a + b * t) ** 2) == a ** 2 + s * b ** 2 + 2 * a * b * t


def test_cyclotomic_and_truncation_rules():
    ring = PolyRing(3, ("y", "x"))
    y, x = ring.gens()
    q = QuotientPresentation(ring, {"y": (4, 1), "x": (5, 0)})
    assert q.normal_form(y ** 9) == y
    assert q.normal_form(x ** 5).is_zero()
    # (1+x)^5 has coefficients 1,5,10,10,5,1 = 1,2,1,1,2,1 mod 3; x^5 dies
    assert q.normal_form((1 + x) ** 5) == 1 + 2 * x + x ** 2 + x ** 3 + 2 * x ** 4


def test_rule_chains_are_reduced_fully():
    # tower: t2^2 -> t1,  t1^2 -> u
    ring = PolyRing(5, ("u", "t1", "t2"))
    u, t1, t2 = ring.gens()
    q = QuotientPresentation(ring, {"t2": (2, t1), "t1": (2, u)})
    assert q.normal_form(t2 ** 4) == u
    assert q.normal_form(t2 ** 8) == u ** 2


def test_non_terminating_shapes_rejected():
    ring = PolyRing(5, ("x", "y"))
    x, y = ring.gens()
    with pytest.raises(ValueError):
        QuotientPresentation(ring, {"x": (2, x)})
    with pytest.raises(ValueError):
        QuotientPresentation(ring, {"x": (2, y), "y": (3, x)})
    with pytest.raises(ValueError):
        QuotientPresentation(ring, {"x": (0, y)})


def test_normal_form_is_idempotent_and_multiplicative():
    ring, q = kummer_line(5, 4)
    rng = random.Random(3)
    for _ in range(40):
        a = ring.random(rng, 6)
        b = ring.random(rng, 6)
        na, nb = q.normal_form(a), q.normal_form(b)
        assert q.normal_form(na) == na
        assert q.normal_form(a * b) == q.normal_form(na * nb)
        assert q.normal_form(a + b) == q.normal_form(na + nb)


class TestFiniteQuotientAlgebra:
    def test_prime_ring(self):
        R = prime_ring(5)
        assert R.dim == 1 and R.size == 5
        assert R.mul((2,), (4,)) == (3,)

    def test_dual_numbers(self):
        R = nilpotent_ring(3, 2)
        eps = R.from_poly(R.ring.gen("e"))
        assert R.mul(eps, eps) == R.zero
        assert len(list(R.elements())) == 9

    def test_quadratic_field_ring_is_a_field(self):
        R = quadratic_field_ring(3)
        nonzero = [a for a in R.elements() if not R.is_zero(a)]
        assert len(nonzero) == 8
        # every nonzero element has order dividing 8, and some generator exists
        orders = set()
        for a in nonzero:
            k, acc = 1, a
            while acc != R.one:
                acc = R.mul(acc, a)
                k += 1
            orders.add(k)
        assert max(orders) == 8

    def test_unbounded_variable_rejected(self):
        ring = PolyRing(3, ("x", "y"))
        q = QuotientPresentation(ring, {"x": (2, 0)})
        with pytest.raises(ValueError):
            FiniteQuotientAlgebra(q)
