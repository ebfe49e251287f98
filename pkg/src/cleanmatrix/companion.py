"""Similarity reduction to 2x2 companion form.

For A with neither A nor I - A invertible over a local ring, the residue matrix
kills some nonzero column vector v and I - Abar kills some nonzero w; lifting
and setting x = v + w makes {x, Ax} a basis, and in that basis A becomes

    [[0, w0], [1, 1 + w1]]      with w0, w1 in the radical.

The pi-regular variant starts from A neither invertible nor with all entries in
the radical, picks a residue vector x outside ker(Abar) and outside im(Abar),
and lands on [[0, w], [1, r]] with w in the radical and r unconstrained.

Both record P = Q^-1 for Q = [x | Ax], so conjugate(P, A) is the companion
matrix exactly.  Inputs already in companion shape short-circuit to P = I.
"""

from dataclasses import dataclass
from typing import Optional

from .errors import InternalContractViolation, NotApplicable
from .matrices import Mat2, conjugate, invert2, is_invertible, matvec, residue_matrix


@dataclass
class CompanionForm:
    kind: str  # "clean" or "pi"
    top: object  # entry (1,2) of the companion matrix
    corner: object  # entry (2,2)
    P: Mat2

    @property
    def w0(self):
        assert self.kind == "clean"
        return self.top

    @property
    def w1(self):
        assert self.kind == "clean"
        ring = self.P.ring
        return ring.sub(self.corner, ring.one)

    @property
    def w(self):
        assert self.kind == "pi"
        return self.top

    @property
    def r(self):
        assert self.kind == "pi"
        return self.corner

    def companion_matrix(self) -> Mat2:
        ring = self.P.ring
        return Mat2(ring, ring.zero, self.top, ring.one, self.corner)


def _kernel_vector(Ab):
    """First nonzero kernel vector of a singular residue matrix, in
    lexicographic enumeration order of the coordinate pairs."""
    F = Ab.ring
    elems = F.enumerate_elements("All")
    z = F.zero
    for v0 in elems:
        for v1 in elems:
            if v0 == z and v1 == z:
                continue
            img = matvec(Ab, (v0, v1))
            if img[0] == z and img[1] == z:
                return (v0, v1)
    return None


def _image_set(Ab):
    F = Ab.ring
    elems = F.enumerate_elements("All")
    return {
        tuple(e.payload for e in matvec(Ab, (v0, v1)))
        for v0 in elems
        for v1 in elems
    }


def _build_from_basis_vector(A, x):
    R = A.ring
    Ax = matvec(A, x)
    Q = Mat2(R, x[0], Ax[0], x[1], Ax[1])  # columns x, Ax
    if not is_invertible(Q):
        raise InternalContractViolation("lifted basis {x, Ax} is not a basis")
    P = invert2(Q)
    C = (P * A) * Q  # = P A P^-1
    return P, C


def reduce_to_companion(A: Mat2) -> CompanionForm:
    """Clean-case reduction; NotApplicable when A or I - A is invertible."""
    R = A.ring
    if is_invertible(A) or is_invertible(Mat2.identity(R) - A):
        raise NotApplicable("A or I - A is invertible; no companion reduction")
    if (
        A.a == R.zero
        and A.c == R.one
        and R.in_radical(A.b)
        and R.in_radical(R.sub(A.d, R.one))
    ):
        return CompanionForm("clean", A.b, A.d, Mat2.identity(R))
    rv = R.residue_view()
    Ab = residue_matrix(A)
    v = _kernel_vector(Ab)
    wv = _kernel_vector(Mat2.identity(rv.field) - Ab)
    if v is None or wv is None:
        raise InternalContractViolation("singular residue matrix with no kernel")
    x = (
        R.add(rv.lift(v[0]), rv.lift(wv[0])),
        R.add(rv.lift(v[1]), rv.lift(wv[1])),
    )
    P, C = _build_from_basis_vector(A, x)
    if not (
        C.a == R.zero
        and C.c == R.one
        and R.in_radical(C.b)
        and R.in_radical(R.sub(C.d, R.one))
    ):
        raise InternalContractViolation("companion shape violated after reduction")
    return CompanionForm("clean", C.b, C.d, P)


def reduce_to_companion_pi(A: Mat2) -> CompanionForm:
    """Pi-case reduction; NotApplicable when A is invertible or A is over J."""
    R = A.ring
    if all(R.in_radical(e) for e in A.entries()):
        raise NotApplicable("all entries in the radical; no pi companion form")
    if is_invertible(A):
        raise NotApplicable("A is invertible; no pi companion form")
    if A.a == R.zero and A.c == R.one and R.in_radical(A.b):
        return CompanionForm("pi", A.b, A.d, Mat2.identity(R))
    Ab = residue_matrix(A)
    F = Ab.ring
    rv = R.residue_view()
    image = _image_set(Ab)
    z = F.zero
    pick = None
    for v0 in F.enumerate_elements("All"):
        for v1 in F.enumerate_elements("All"):
            img = matvec(Ab, (v0, v1))
            if img[0] == z and img[1] == z:
                continue  # inside the kernel
            if (v0.payload, v1.payload) in image:
                continue  # inside the image
            pick = (v0, v1)
            break
        if pick:
            break
    if pick is None:
        raise InternalContractViolation("no vector avoids kernel and image")
    x = (rv.lift(pick[0]), rv.lift(pick[1]))
    P, C = _build_from_basis_vector(A, x)
    if not (C.a == R.zero and C.c == R.one and R.in_radical(C.b)):
        raise InternalContractViolation("pi companion shape violated")
    return CompanionForm("pi", C.b, C.d, P)


def check_companion_identity(ring, coeffs) -> bool:
    """For monic h = a0 + a1 t + ... + t^n (n <= 4), the n x n companion matrix
    C_h with subdiagonal 1s and last column -a0..-a_(n-1) satisfies

        C^n + C^(n-1) (a_(n-1) I) + ... + C (a_1 I) + (a_0 I) = 0,

    with each coefficient applied as a scalar matrix on the right."""
    coeffs = list(coeffs)
    n = len(coeffs) - 1
    assert 1 <= n <= 4, "degree must be between 1 and 4"
    assert coeffs[-1] == ring.one, "polynomial must be monic"
    z, o = ring.zero, ring.one
    C = [[z] * n for _ in range(n)]
    for i in range(1, n):
        C[i][i - 1] = o
    for i in range(n):
        C[i][n - 1] = ring.neg(coeffs[i])

    def nmul(X, Y):
        return [
            [
                _sum(ring, [ring.mul(X[i][t], Y[t][j]) for t in range(n)])
                for j in range(n)
            ]
            for i in range(n)
        ]

    def scale_right(X, s):
        return [[ring.mul(X[i][j], s) for j in range(n)] for i in range(n)]

    ident = [[o if i == j else z for j in range(n)] for i in range(n)]
    total = [[z] * n for _ in range(n)]
    power = ident
    for j in range(n + 1):
        term = power if j == n else scale_right(power, coeffs[j])
        total = [
            [ring.add(total[i][t], term[i][t]) for t in range(n)] for i in range(n)
        ]
        power = nmul(power, C)
    return all(total[i][j] == z for i in range(n) for j in range(n))


def _sum(ring, items):
    out = ring.zero
    for it in items:
        out = ring.add(out, it)
    return out
