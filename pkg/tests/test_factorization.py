"""Unit-split factorization witnesses and the polynomial helper type."""

import pytest

from cleanmatrix.errors import NoFactorization, NotApplicable, OwnerMismatch
from cleanmatrix.factorization import (
    FactorizationWitness,
    Poly,
    star_factorize,
    verify_factorization,
)
from cleanmatrix.quadratics import MonicQuadratic, find_roots_auto
from cleanmatrix.rings import (
    galois_field,
    integers,
    localized_integers,
    make_ring,
    mod_prime_power,
    truncated_skew,
)

Z = make_ring(integers())
ZL2 = make_ring(localized_integers(2))
Z4 = make_ring(mod_prime_power(2, 2))
Z8 = make_ring(mod_prime_power(2, 3))
GF4 = make_ring(galois_field(2, 2))
SK16 = make_ring(truncated_skew(galois_field(2, 2), 1, 2))


def quad(ring, a1, a0):
    return MonicQuadratic(ring, ring.from_int(a1), ring.from_int(a0))


def test_poly_basics():
    p = Poly(Z8, [Z8.el(1), Z8.el(2), Z8.el(1)])
    assert p.degree() == 2
    assert p.coeff(0) == Z8.el(1)
    assert p.coeff(5) == Z8.zero
    assert Poly(Z8, [Z8.zero]).is_zero()
    assert Poly(Z8, []).degree() == -1
    q = Poly(Z8, [Z8.el(7), Z8.el(1)])
    assert p.add(q).coeffs == (Z8.el(0), Z8.el(3), Z8.el(1))
    assert p.sub(p).is_zero()
    assert p.mul(Poly.one(Z8)) == p
    assert Poly.constant(Z8, Z8.el(3)).degree() == 0


def test_poly_trims_leading_zeros():
    p = Poly(Z8, [Z8.el(1), Z8.zero, Z8.zero])
    assert p.degree() == 0
    assert p.coeffs == (Z8.el(1),)


def test_poly_eval_left_and_text():
    p = Poly(Z8, [Z8.el(3), Z8.el(2), Z8.el(1)])
    assert p.eval_left(Z8.el(2)) == Z8.el(3 + 4 + 4)
    assert p.text() == "t^2+2*t+3"
    assert Poly(Z8, [Z8.zero, Z8.el(1)]).text() == "t"
    assert Poly(Z8, []).text() == "0"


def test_poly_noncommutative_coefficient_order():
    # coefficients multiply in ring order: (a x^i)(b x^j) keeps a on the left
    x = SK16.variable()
    w = SK16.embed(SK16.base.generator())
    p = Poly(SK16, [x])  # constant polynomial with skew constant
    q = Poly(SK16, [w])
    assert p.mul(q).coeffs == (SK16.mul(x, w),)
    assert q.mul(p).coeffs == (SK16.mul(w, x),)
    assert p.mul(q) != q.mul(p)


def test_trivial_split_unit_at_zero():
    f = quad(Z8, 0, 1)  # f(0) = 1 a unit
    w = star_factorize(f)
    assert w.g1 == Poly.one(Z8)
    assert w.g0.coeffs == (f.a0, f.a1, Z8.one)
    assert w.starred
    assert verify_factorization(f, w)


def test_trivial_split_unit_at_one():
    f = quad(Z8, 0, -2)  # f(0) = -2 in J, f(1) = -1 a unit
    w = star_factorize(f)
    assert w.g0 == Poly.one(Z8)
    assert w.h0 == Poly.one(Z8)
    assert verify_factorization(f, w)


def test_root_pair_split_pinned():
    f = quad(Z8, -1, -2)  # roots 2 in J, 7 in 1+J
    w = star_factorize(f)
    # g0 = t - t1 (the 1+J root), g1 = t + a1 + t1; h1 = t - t0, h0 = t + a1 + t0
    assert w.g0.coeffs == (Z8.el(1), Z8.one)  # t - 7 = t + 1
    assert w.g1.coeffs == (Z8.el(6), Z8.one)  # t - 1 + 7 = t + 6
    assert w.h1.coeffs == (Z8.el(6), Z8.one)  # t - 2
    assert w.h0.coeffs == (Z8.el(1), Z8.one)  # t - 1 + 2
    assert w.starred
    assert verify_factorization(f, w)


def test_no_factorization_over_localized():
    f = quad(ZL2, -1, -4)  # disc 17: no roots, both evaluations in J
    with pytest.raises(NoFactorization) as exc:
        star_factorize(f)
    assert exc.value.witness is f


def test_not_applicable_over_integers():
    with pytest.raises(NotApplicable):
        star_factorize(quad(Z, 0, 1))


def test_verify_rejects_wrong_products():
    f = quad(Z8, -1, -2)
    w = star_factorize(f)
    bad = FactorizationWitness(g0=w.g1, g1=w.g1, h0=w.h0, h1=w.h1, starred=False)
    assert verify_factorization(f, bad) is False
    # unit evaluations must be checked too: t * (t + a1) multiplies back to f
    # when a0 = 0 but g0(0) = 0 is not a unit
    g = quad(Z8, 2, 0)
    t_poly = Poly(Z8, [Z8.zero, Z8.one])
    rest = Poly(Z8, [Z8.el(2), Z8.one])
    cheat = FactorizationWitness(g0=t_poly, g1=rest, h0=t_poly, h1=rest,
                                 starred=False)
    assert verify_factorization(g, cheat) is False


def test_verify_rejects_foreign_ring():
    f = quad(Z8, -1, -2)
    w = star_factorize(f)
    alien = FactorizationWitness(
        g0=Poly.one(Z4), g1=w.g1, h0=w.h0, h1=w.h1, starred=False
    )
    with pytest.raises(OwnerMismatch):
        verify_factorization(f, alien)


def test_starred_flag_checks_residue_coprimality():
    # over GF(4) coefficients both residue factors can be t + w: products and
    # all four unit evaluations pass, but the starred coprimality check fails
    w_el = SK16.embed(SK16.base.generator())
    lin = Poly(SK16, [w_el, SK16.one])  # t + w
    prod = lin.mul(lin)  # t^2 + w^2 in characteristic 2
    f = MonicQuadratic(SK16, prod.coeff(1), prod.coeff(0))
    plain = FactorizationWitness(g0=lin, g1=lin, h0=lin, h1=lin, starred=False)
    assert verify_factorization(f, plain) is True
    starred = FactorizationWitness(g0=lin, g1=lin, h0=lin, h1=lin, starred=True)
    assert verify_factorization(f, starred) is False


def test_factorize_iff_roots_z8_exhaustive():
    elems = Z8.enumerate_elements("All")
    for a1 in elems:
        for a0 in elems:
            f = MonicQuadratic(Z8, a1, a0)
            trivial = Z8.is_unit(a0) or Z8.is_unit(
                Z8.add(Z8.add(Z8.one, a1), a0)
            )
            rep = find_roots_auto(f, ("J", "1+J"))
            has_roots = rep.root_in_j is not None
            try:
                w = star_factorize(f)
                assert trivial or has_roots
                assert verify_factorization(f, w)
            except NoFactorization:
                assert not trivial and not has_roots


def test_factorize_skew_root_pairs():
    # distinguished quadratics over the skew ring factor through their roots
    for w0 in SK16.enumerate_elements("Radical"):
        for w1 in SK16.enumerate_elements("Radical"):
            f = MonicQuadratic.from_radical_params(SK16, w0, w1)
            w = star_factorize(f)
            assert w.starred
            assert verify_factorization(f, w)
            # nontrivial split: linear times linear
            assert w.g0.degree() == 1
            assert w.g1.degree() == 1
