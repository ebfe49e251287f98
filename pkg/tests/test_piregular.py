"""Strongly pi-regular decisions, certificates, and the Fitting sweep."""

import pytest

from cleanmatrix.errors import InfiniteRing
from cleanmatrix.matrices import Mat2, conjugate
from cleanmatrix.piregular import (
    PiCertificate,
    decide_strongly_pi_regular,
    fitting_decompose,
    ring_is_m2_pi_regular,
    verify_pi_certificate,
)
from cleanmatrix.rings import (
    galois_field,
    integers,
    localized_integers,
    make_ring,
    mod_prime_power,
    truncated_poly,
    truncated_skew,
)

Z = make_ring(integers())
ZL2 = make_ring(localized_integers(2))
Z4 = make_ring(mod_prime_power(2, 2))
Z8 = make_ring(mod_prime_power(2, 3))
GF4 = make_ring(galois_field(2, 2))
T2 = make_ring(truncated_poly(galois_field(2, 1), 2))
SK16 = make_ring(truncated_skew(galois_field(2, 2), 1, 2))


def m(ring, a, b, c, d):
    return Mat2(ring, ring.from_int(a), ring.from_int(b), ring.from_int(c),
                ring.from_int(d))


def test_trivial_unit():
    A = m(Z8, 1, 0, 0, 3)
    dec = decide_strongly_pi_regular(A)
    assert dec.status == "TrivialUnit"
    assert dec.certificate.kind == "unit"
    assert verify_pi_certificate(A, dec.certificate)


def test_trivial_nilpotent():
    A = m(Z8, 0, 1, 0, 0)
    dec = decide_strongly_pi_regular(A)
    assert dec.status == "TrivialNilpotent"
    assert dec.certificate.kind == "nilpotent"
    assert dec.certificate.index == 2
    assert verify_pi_certificate(A, dec.certificate)
    assert decide_strongly_pi_regular(Mat2.zero(Z8)).certificate.index == 1
    B = m(Z8, 2, 2, 2, 2)
    dec = decide_strongly_pi_regular(B)
    assert dec.certificate.index == 2  # (2,2;2,2)^2 = 0 mod 8
    assert verify_pi_certificate(B, dec.certificate)


def test_nontrivial_pinned_z8_offdiagonal():
    # t^2 - 3t - 2 over Z/8: unit root 5 and nilpotent root 6 (6^3 = 0)
    A = m(Z8, 0, 2, 1, 3)
    dec = decide_strongly_pi_regular(A)
    assert dec.status == "Nontrivial"
    assert dec.certificate.t0 == Z8.el(5)
    assert dec.certificate.t1 == Z8.el(6)
    assert verify_pi_certificate(A, dec.certificate)


def test_no_over_localized_integers():
    # w != 0 in J leaves t^2 - t r - w without a nilpotent root in Z_(2),
    # where 0 is the only nilpotent
    A = m(ZL2, 0, 2, 1, 1)
    dec = decide_strongly_pi_regular(A)
    assert dec.status == "No"
    assert dec.witness.text() == "t^2-t-2"
    # w = 0 keeps t(t - r): unit root r, nilpotent root 0
    B = m(ZL2, 0, 0, 1, 3)
    dec = decide_strongly_pi_regular(B)
    assert dec.status == "Nontrivial"
    assert dec.certificate.t0 == ZL2.el(3)
    assert dec.certificate.t1 == ZL2.zero
    assert verify_pi_certificate(B, dec.certificate)


def test_nontrivial_diag_z8():
    # t^2 - t - 2 = (t - 2)(t + 1): unit root 7, nilpotent root 2 over Z/8?
    # 2 is nilpotent (2^3 = 0) and 7 is a unit, so A = [[0,2],[1,1]] splits
    A = m(Z8, 0, 2, 1, 1)
    dec = decide_strongly_pi_regular(A)
    assert dec.status == "Nontrivial"
    cert = dec.certificate
    assert cert.kind == "diag"
    assert cert.t0 == Z8.el(7)
    assert cert.t1 == Z8.el(2)
    assert conjugate(cert.P, A) == Mat2.diag(Z8, Z8.el(7), Z8.el(2))
    assert verify_pi_certificate(A, cert)


def test_radical_entries_zloc_never_pi():
    A = m(ZL2, 2, 0, 0, 2)
    dec = decide_strongly_pi_regular(A)
    assert dec.status == "No"
    assert dec.witness is not None
    # but the genuinely nilpotent ones still pass
    B = m(ZL2, 2, 4, -1, -2)
    dec = decide_strongly_pi_regular(B)
    assert dec.status == "TrivialNilpotent"
    assert verify_pi_certificate(B, dec.certificate)


def test_integer_decisions():
    assert decide_strongly_pi_regular(m(Z, 2, 1, 1, 1)).status == "TrivialUnit"
    assert decide_strongly_pi_regular(m(Z, 0, 5, 0, 0)).status == "TrivialNilpotent"
    assert decide_strongly_pi_regular(m(Z, 2, 0, 0, 0)).status == "No"
    assert decide_strongly_pi_regular(m(Z, 1, 0, 0, 1)).status == "TrivialUnit"

    # trace 1, det 0: A itself is idempotent
    A = m(Z, 3, 2, -3, -2)
    dec = decide_strongly_pi_regular(A)
    assert dec.status == "Nontrivial"
    cert = dec.certificate
    assert cert.t0 == Z.el(1) and cert.t1 == Z.zero
    assert conjugate(cert.P, A) == Mat2.diag(Z, Z.el(1), Z.zero)
    assert verify_pi_certificate(A, cert)

    # trace -1, det 0: -A is idempotent
    B = m(Z, -3, -2, 3, 2)
    dec = decide_strongly_pi_regular(B)
    assert dec.status == "Nontrivial"
    assert dec.certificate.t0 == Z.el(-1)
    assert verify_pi_certificate(B, dec.certificate)


def test_integer_no_statuses():
    # trace/det outside the two admissible pairs
    for entries in ((2, 0, 0, 1), (1, 1, 0, 1), (3, 0, 0, 2), (0, 0, 0, 5)):
        dec = decide_strongly_pi_regular(m(Z, *entries))
        if dec.status == "No":
            assert dec.witness is not None
    assert decide_strongly_pi_regular(m(Z, 2, 0, 0, 1)).status == "No"
    # [[1,1],[0,1]] is invertible, so trivially fine
    assert decide_strongly_pi_regular(m(Z, 1, 1, 0, 1)).status == "TrivialUnit"


def test_verify_pi_certificate_rejects_tampering():
    A = m(Z8, 0, 2, 1, 1)
    cert = decide_strongly_pi_regular(A).certificate
    assert verify_pi_certificate(A, cert)
    assert not verify_pi_certificate(m(Z8, 0, 4, 1, 3), cert)
    wrong_kind = PiCertificate("unit")
    assert not verify_pi_certificate(A, wrong_kind)
    swapped = PiCertificate("diag", t0=cert.t1, t1=cert.t0, P=cert.P)
    assert not verify_pi_certificate(A, swapped)
    assert not verify_pi_certificate(A, PiCertificate("bogus"))
    assert not verify_pi_certificate(A, PiCertificate("nilpotent", index=3))


def test_fitting_pinned():
    assert fitting_decompose(m(Z4, 1, 0, 0, 1)) == 1
    assert fitting_decompose(m(Z4, 1, 0, 0, 0)) == 1  # already idempotent
    assert fitting_decompose(m(Z4, 2, 0, 0, 2)) == 2  # nilpotent: splits at 0
    assert fitting_decompose(m(Z4, 0, 1, 0, 0)) == 2
    with pytest.raises(InfiniteRing):
        fitting_decompose(m(ZL2, 1, 0, 0, 1))


def test_fitting_matches_decision_on_z4():
    # finite coefficients force strong pi-regularity of every matrix, so the
    # sweep succeeds everywhere and agrees with the nilpotency index
    elems = Z4.enumerate_elements("All")
    for a in elems:
        for b in elems:
            for c in elems:
                for d in elems:
                    A = Mat2(Z4, a, b, c, d)
                    dec = decide_strongly_pi_regular(A)
                    assert dec.status != "No"
                    n = fitting_decompose(A)
                    if dec.status == "TrivialNilpotent":
                        assert n == dec.certificate.index


def test_ring_verdicts():
    assert ring_is_m2_pi_regular(Z4).answer == "Yes"
    assert ring_is_m2_pi_regular(GF4).answer == "Yes"
    assert ring_is_m2_pi_regular(T2).answer == "Yes"
    assert ring_is_m2_pi_regular(SK16).answer == "Yes"
    with pytest.raises(InfiniteRing):
        ring_is_m2_pi_regular(ZL2)


def test_skew_exhaustive_companions():
    units = SK16.enumerate_elements("Units")
    radical = SK16.enumerate_elements("Radical")
    for r in units:
        for w in radical:
            A = Mat2(SK16, SK16.zero, w, SK16.one, r)
            dec = decide_strongly_pi_regular(A)
            assert dec.status == "Nontrivial"
            assert verify_pi_certificate(A, dec.certificate)
