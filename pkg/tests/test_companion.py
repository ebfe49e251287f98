"""Companion-form reduction and the companion matrix identity."""

import random

import pytest

from cleanmatrix.companion import (
    CompanionForm,
    check_companion_identity,
    reduce_to_companion,
    reduce_to_companion_pi,
)
from cleanmatrix.errors import NotApplicable
from cleanmatrix.matrices import Mat2, conjugate, is_invertible
from cleanmatrix.rings import (
    galois_field,
    make_ring,
    mod_prime_power,
    truncated_poly,
    truncated_skew,
)

Z8 = make_ring(mod_prime_power(2, 3))
Z9 = make_ring(mod_prime_power(3, 2))
T2 = make_ring(truncated_poly(galois_field(2, 1), 2))
SK16 = make_ring(truncated_skew(galois_field(2, 2), 1, 2))

RINGS = [Z8, Z9, T2, SK16]


def m(ring, a, b, c, d):
    return Mat2(ring, ring.from_int(a), ring.from_int(b), ring.from_int(c),
                ring.from_int(d))


def test_companion_form_accessors():
    cf = CompanionForm("clean", Z8.el(4), Z8.el(3), Mat2.identity(Z8))
    assert cf.w0 == Z8.el(4)
    assert cf.w1 == Z8.el(2)  # corner minus one
    assert cf.companion_matrix() == m(Z8, 0, 4, 1, 3)
    pf = CompanionForm("pi", Z8.el(2), Z8.el(5), Mat2.identity(Z8))
    assert pf.w == Z8.el(2)
    assert pf.r == Z8.el(5)


def test_reduce_rejects_trivial_cases():
    with pytest.raises(NotApplicable):
        reduce_to_companion(m(Z8, 1, 0, 0, 1))  # invertible
    with pytest.raises(NotApplicable):
        reduce_to_companion(m(Z8, 0, 0, 0, 0))  # I - A invertible
    with pytest.raises(NotApplicable):
        reduce_to_companion_pi(m(Z8, 1, 0, 0, 1))
    with pytest.raises(NotApplicable):
        reduce_to_companion_pi(m(Z8, 2, 4, 6, 0))  # all entries in J


def test_reduce_shortcircuits_companion_shape():
    A = m(Z8, 0, 4, 1, 3)
    cf = reduce_to_companion(A)
    assert cf.P == Mat2.identity(Z8)
    assert cf.w0 == Z8.el(4)
    assert cf.w1 == Z8.el(2)
    pf = reduce_to_companion_pi(m(Z8, 0, 2, 1, 5))
    assert pf.P == Mat2.identity(Z8)
    assert (pf.w, pf.r) == (Z8.el(2), Z8.el(5))


@pytest.mark.parametrize("R", RINGS)
def test_reduce_clean_exhaustive_small(R):
    elems = R.enumerate_elements("All")
    I = Mat2.identity(R)
    hit = 0
    for a in elems:
        for b in elems[:3]:
            for c in elems[:3]:
                for d in elems:
                    A = Mat2(R, a, b, c, d)
                    if is_invertible(A) or is_invertible(I - A):
                        continue
                    cf = reduce_to_companion(A)
                    assert R.in_radical(cf.w0)
                    assert R.in_radical(cf.w1)
                    assert conjugate(cf.P, A) == cf.companion_matrix()
                    hit += 1
    assert hit > 0


@pytest.mark.parametrize("R", RINGS)
def test_reduce_pi_exhaustive_small(R):
    elems = R.enumerate_elements("All")
    hit = 0
    for a in elems:
        for b in elems[:3]:
            for c in elems[:3]:
                for d in elems:
                    A = Mat2(R, a, b, c, d)
                    if is_invertible(A):
                        continue
                    if all(R.in_radical(e) for e in A.entries()):
                        continue
                    pf = reduce_to_companion_pi(A)
                    assert R.in_radical(pf.w)
                    assert conjugate(pf.P, A) == pf.companion_matrix()
                    hit += 1
    assert hit > 0


@pytest.mark.parametrize("R", RINGS)
def test_companion_identity_random_degrees(R):
    rng = random.Random(7)
    elems = R.enumerate_elements("All")
    for _ in range(40):
        n = rng.randrange(1, 5)
        coeffs = [rng.choice(elems) for _ in range(n)] + [R.one]
        assert check_companion_identity(R, coeffs)


def test_companion_identity_rejects_non_monic():
    with pytest.raises(AssertionError):
        check_companion_identity(Z8, [Z8.el(1), Z8.el(2)])


def test_companion_identity_degree_bounds():
    with pytest.raises(AssertionError):
        check_companion_identity(Z8, [Z8.one])
    with pytest.raises(AssertionError):
        check_companion_identity(Z8, [Z8.el(1)] * 5 + [Z8.one])
