"""Strongly pi-regular decisions: does some power of A split the module into
ker(A^n) (+) im(A^n)?

Over a local ring the trichotomy is: A invertible (n = 1), A with all entries
in the radical (nilpotent when the radical is nil, otherwise pi-regular only if
A^2 = 0), and the rest, which reduce to a pi companion form [[0, w], [1, r]]
with w in J.  There A is strongly pi-regular exactly when t^2 - t r - w has a
unit left root and a nilpotent left root; the eigenrow pair then conjugates A
to diag(t0 unit, t1 nilpotent).  When r itself falls in J, A^2 has all entries
in J and A is nilpotent over the finite families.

Integer matrices: nontrivial strong pi-regularity forces characteristic
polynomial t(t - 1) or t(t + 1), so A or -A is idempotent and Z^2 always splits
as im (+) ker; hence the exact test is (tr, det) in {(1, 0), (-1, 0)}.
"""

from dataclasses import dataclass
from typing import Optional

from .companion import reduce_to_companion_pi
from .errors import (
    InfiniteRing,
    InternalContractViolation,
    NotPiRegular,
)
from .matrices import (
    Mat2,
    conjugate,
    invert2,
    is_invertible,
    is_nilpotent,
    matpow,
    matvec,
    rowvec_mul,
)
from .quadratics import (
    MonicQuadratic,
    element_is_nilpotent,
    find_roots_auto,
)


@dataclass
class PiCertificate:
    kind: str  # "diag" | "unit" | "nilpotent"
    t0: Optional[object] = None
    t1: Optional[object] = None
    P: Optional[Mat2] = None
    index: Optional[int] = None  # nilpotency index for kind="nilpotent"


@dataclass
class PiDecision:
    status: str  # TrivialUnit | TrivialNilpotent | Nontrivial | No
    certificate: Optional[PiCertificate] = None
    witness: Optional[MonicQuadratic] = None


@dataclass
class RingPiVerdict:
    answer: str  # Yes | No
    witness: Optional[MonicQuadratic] = None


def _nilpotency_index(A) -> int:
    R = A.ring
    bound = 2 * (R.radical_index() or 1) if R.is_finite else 2
    M = A
    n = 1
    Z = Mat2.zero(R)
    while M != Z and n <= bound:
        M = M * A
        n += 1
    if M != Z:
        raise InternalContractViolation("claimed nilpotent matrix never vanishes")
    return n


def _char_quadratic(A) -> MonicQuadratic:
    # commutative owners only: t^2 - tr(A) t + det(A)
    R = A.ring
    tr = R.add(A.a, A.d)
    det = R.sub(R.mul(A.a, A.d), R.mul(A.b, A.c))
    return MonicQuadratic(R, R.neg(tr), det)


def decide_strongly_pi_regular(A: Mat2) -> PiDecision:
    R = A.ring
    if R.family == "Integers":
        return _decide_integer(A)
    if is_invertible(A):
        return PiDecision("TrivialUnit", certificate=PiCertificate("unit"))
    if all(R.in_radical(e) for e in A.entries()):
        if is_nilpotent(A):
            idx = _nilpotency_index(A)
            return PiDecision(
                "TrivialNilpotent", certificate=PiCertificate("nilpotent", index=idx)
            )
        # radical entries but no vanishing power: Z_(p) only, never pi-regular
        return PiDecision("No", witness=_char_quadratic(A))
    cf = reduce_to_companion_pi(A)
    f = MonicQuadratic(R, R.neg(cf.r), R.neg(cf.w))  # t^2 - t r - w
    if R.in_radical(cf.r):
        # A^2 lands in M_2(J); nilpotent iff some power dies
        if is_nilpotent(A):
            idx = _nilpotency_index(A)
            return PiDecision(
                "TrivialNilpotent", certificate=PiCertificate("nilpotent", index=idx)
            )
        return PiDecision("No", witness=f)
    rep = find_roots_auto(f, ("unit", "nilpotent"))
    lam_u, lam_n = rep.root_unit, rep.root_nilpotent
    if lam_u is None or lam_n is None:
        return PiDecision("No", witness=f)
    C = cf.companion_matrix()
    for lam, v in ((lam_u, (R.one, lam_u)), (lam_n, (R.one, lam_n))):
        if rowvec_mul(v, C) != (R.mul(lam, v[0]), R.mul(lam, v[1])):
            raise InternalContractViolation("pi eigenrow equation fails")
    Q = Mat2(R, R.one, lam_u, R.one, lam_n)  # rows: unit eigenrow first
    P = Q * cf.P
    D = conjugate(P, A)
    if D != Mat2.diag(R, lam_u, lam_n):
        raise InternalContractViolation("pi eigenrow basis fails to diagonalize")
    if not (R.is_unit(lam_u) and element_is_nilpotent(R, lam_n)):
        raise InternalContractViolation("pi diagonal has wrong unit/nilpotent split")
    cert = PiCertificate("diag", t0=lam_u, t1=lam_n, P=P)
    return PiDecision("Nontrivial", certificate=cert)


def verify_pi_certificate(A: Mat2, cert: PiCertificate) -> bool:
    """Re-verify a pi certificate against A.  Never raises on bad data."""
    try:
        R = A.ring
        if cert.kind == "unit":
            if R.family == "Integers":
                det = A.a.payload * A.d.payload - A.b.payload * A.c.payload
                return det in (1, -1)
            return is_invertible(A)
        if cert.kind == "nilpotent":
            return (
                cert.index is not None
                and cert.index >= 1
                and matpow(A, cert.index) == Mat2.zero(R)
            )
        if cert.kind == "diag":
            D = conjugate(cert.P, A)
            if D != Mat2.diag(R, cert.t0, cert.t1):
                return False
            if R.family == "Integers":
                return cert.t0.payload in (1, -1) and cert.t1.payload == 0
            return R.is_unit(cert.t0) and element_is_nilpotent(R, cert.t1)
        return False
    except Exception:
        return False


def _decide_integer(A: Mat2) -> PiDecision:
    R = A.ring
    a, b, c, d = (e.payload for e in A.entries())
    det = a * d - b * c
    tr = a + d
    if det in (1, -1):
        return PiDecision("TrivialUnit", certificate=PiCertificate("unit"))
    if is_nilpotent(A):
        idx = _nilpotency_index(A)
        return PiDecision(
            "TrivialNilpotent", certificate=PiCertificate("nilpotent", index=idx)
        )
    if (tr, det) not in ((1, 0), (-1, 0)):
        return PiDecision("No", witness=_char_quadratic(A))
    # A or -A is idempotent; split Z^2 as im (+) ker of that projection
    sign = 1 if tr == 1 else -1
    B = A if sign == 1 else -A  # idempotent
    u1 = _primitive_image_vector(B)
    u2 = _primitive_image_vector(Mat2.identity(R) - B)  # spans ker B
    M = Mat2(R, u1[0], u2[0], u1[1], u2[1])
    dM = M.a.payload * M.d.payload - M.b.payload * M.c.payload
    if dM not in (1, -1):
        raise InternalContractViolation("idempotent splitting is not unimodular")
    P = invert2(M)
    t0, t1 = R.el(sign), R.zero
    if conjugate(P, A) != Mat2.diag(R, t0, t1):
        raise InternalContractViolation("integer pi diagonalization fails")
    cert = PiCertificate("diag", t0=t0, t1=t1, P=P)
    return PiDecision("Nontrivial", certificate=cert)


def _primitive_image_vector(B: Mat2):
    """A primitive column spanning the image of an integer idempotent."""
    from math import gcd

    R = B.ring
    best = None
    for col in ((B.a.payload, B.c.payload), (B.b.payload, B.d.payload)):
        if col == (0, 0):
            continue
        g = gcd(col[0], col[1])
        v = (col[0] // g, col[1] // g)
        if v[0] < 0 or (v[0] == 0 and v[1] < 0):
            v = (-v[0], -v[1])
        best = v
        break
    if best is None:
        raise InternalContractViolation("idempotent of rank 1 with zero columns")
    return (R.el(best[0]), R.el(best[1]))


def fitting_decompose(A: Mat2) -> int:
    """Smallest n with R^2 = ker(A^n) (+) im(A^n), by explicit set computation.

    The kernel chain only grows and the image chain only shrinks; once both
    stabilize with a nontrivial overlap no larger n can help, so the loop stops
    there (well before the |R|^2 hard bound) and raises NotPiRegular."""
    R = A.ring
    if not R.is_finite:
        raise InfiniteRing("Fitting decomposition sweep needs a finite ring")
    elems = R.enumerate_elements("All")
    vectors = [(x, y) for x in elems for y in elems]
    zero_vec = (R.zero, R.zero)
    M = A
    prev = None
    hard_bound = len(vectors)
    for n in range(1, hard_bound + 1):
        ker = frozenset(v for v in vectors if matvec(M, v) == zero_vec)
        im = frozenset(matvec(M, v) for v in vectors)
        if ker & im == {zero_vec}:
            # |ker| |im| = |R^2| always, so trivial overlap gives the splitting
            return n
        if prev == (ker, im):
            raise NotPiRegular(f"kernel/image chains stabilized at n={n - 1}")
        prev = (ker, im)
        M = M * A
    raise NotPiRegular("no splitting power within the hard bound")


def ring_is_m2_pi_regular(R) -> RingPiVerdict:
    """Is every 2x2 matrix over R strongly pi-regular?

    Finite rings: every matrix over J must be nilpotent (automatic when J is
    nil) and every t^2 - t u - w with u a unit and w in J must have a unit left
    root and a nilpotent left root."""
    if not R.is_finite:
        raise InfiniteRing("ring-level pi-regularity sweep needs a finite ring")
    radical = R.enumerate_elements("Radical")
    for a in radical:
        for b in radical:
            for c in radical:
                for d in radical:
                    M = Mat2(R, a, b, c, d)
                    if not is_nilpotent(M):
                        return RingPiVerdict("No", witness=_char_quadratic(M))
    for u in R.enumerate_elements("Units"):
        for w in radical:
            f = MonicQuadratic(R, R.neg(u), R.neg(w))
            rep = find_roots_auto(f, ("unit", "nilpotent"))
            if rep.root_unit is None or rep.root_nilpotent is None:
                return RingPiVerdict("No", witness=f)
    return RingPiVerdict("Yes")
