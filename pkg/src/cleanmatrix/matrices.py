"""Exact 2x2 matrices over the concrete rings.

Entries live row-major: [[a, b], [c, d]].  Products keep noncommutative entry
order, with the row entry on the left: (AB)_11 = a*e + b*g.  Column vectors are
plain (v0, v1) tuples and A acts on the left of them, matrix entry times
coordinate: (Av)_i = A_i1 v_1 + A_i2 v_2.

Invertibility over a local ring is decided by the rank of the residue matrix;
determinants over the ring itself are never used for that purpose.  The one
integer exception: Z matrices invert via the adjugate when det = +-1 (the
residue route needs a local ring and raises NotLocal for Z as specified).
"""

from .errors import InternalContractViolation, NotInvertible, NotLocal, OwnerMismatch


class Mat2:
    __slots__ = ("ring", "a", "b", "c", "d")

    def __init__(self, ring, a, b, c, d):
        ring._guard(a, b, c, d)
        self.ring = ring
        self.a, self.b, self.c, self.d = a, b, c, d

    @staticmethod
    def from_rows(ring, rows):
        (a, b), (c, d) = rows
        return Mat2(ring, a, b, c, d)

    @staticmethod
    def zero(ring):
        z = ring.zero
        return Mat2(ring, z, z, z, z)

    @staticmethod
    def identity(ring):
        z, o = ring.zero, ring.one
        return Mat2(ring, o, z, z, o)

    @staticmethod
    def diag(ring, x, y):
        z = ring.zero
        return Mat2(ring, x, z, z, y)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def _same_owner(self, other):
        if not isinstance(other, Mat2):
            raise TypeError("expected a 2x2 matrix")
        if other.ring is not self.ring:
            raise OwnerMismatch(
                f"matrices over {self.ring.spec_string()} and "
                f"{other.ring.spec_string()} cannot be combined"
            )

    def __add__(self, other):
        self._same_owner(other)
        R = self.ring
        return Mat2(
            R,
            R.add(self.a, other.a),
            R.add(self.b, other.b),
            R.add(self.c, other.c),
            R.add(self.d, other.d),
        )

    def __sub__(self, other):
        self._same_owner(other)
        R = self.ring
        return Mat2(
            R,
            R.sub(self.a, other.a),
            R.sub(self.b, other.b),
            R.sub(self.c, other.c),
            R.sub(self.d, other.d),
        )

    def __neg__(self):
        R = self.ring
        return Mat2(R, R.neg(self.a), R.neg(self.b), R.neg(self.c), R.neg(self.d))

    def __mul__(self, other):
        self._same_owner(other)
        R = self.ring
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return Mat2(
            R,
            R.add(R.mul(a, e), R.mul(b, g)),
            R.add(R.mul(a, f), R.mul(b, h)),
            R.add(R.mul(c, e), R.mul(d, g)),
            R.add(R.mul(c, f), R.mul(d, h)),
        )

    def scale_right(self, s):
        """A * (s I): every entry picks up s on the right."""
        R = self.ring
        return Mat2(
            R, R.mul(self.a, s), R.mul(self.b, s), R.mul(self.c, s), R.mul(self.d, s)
        )

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.ring is other.ring and self.entries() == other.entries()

    def __hash__(self):
        return hash((id(self.ring),) + tuple(e.payload for e in self.entries()))

    def __repr__(self):
        R = self.ring
        f = R.format_element
        return f"[[{f(self.a)},{f(self.b)}],[{f(self.c)},{f(self.d)}]]"


def matvec(A, v):
    R = A.ring
    return (
        R.add(R.mul(A.a, v[0]), R.mul(A.b, v[1])),
        R.add(R.mul(A.c, v[0]), R.mul(A.d, v[1])),
    )


def rowvec_mul(v, A):
    """Row vector times matrix, row coordinates kept on the left."""
    R = A.ring
    return (
        R.add(R.mul(v[0], A.a), R.mul(v[1], A.c)),
        R.add(R.mul(v[0], A.b), R.mul(v[1], A.d)),
    )


def matpow(A, e):
    assert e >= 0
    out = Mat2.identity(A.ring)
    base = A
    while e:
        if e & 1:
            out = out * base
        base = base * base
        e >>= 1
    return out


def residue_matrix(A):
    rv = A.ring.residue_view()
    r = rv.reduce
    return Mat2(rv.field, r(A.a), r(A.b), r(A.c), r(A.d))


def is_invertible(A) -> bool:
    """Rank-2 test on the residue matrix; NotLocal for integer matrices."""
    R = A.ring
    if R.family == "Integers":
        raise NotLocal("invertibility over Z is det = +-1; use the integer tools")
    Ab = residue_matrix(A)
    F = Ab.ring
    det = F.sub(F.mul(Ab.a, Ab.d), F.mul(Ab.b, Ab.c))  # residue field, commutative
    return F.is_unit(det)


def invert2(A) -> Mat2:
    """Two-sided inverse, by noncommutative row reduction with unit pivots."""
    R = A.ring
    if R.family == "Integers":
        det = A.a.payload * A.d.payload - A.b.payload * A.c.payload
        if det not in (1, -1):
            raise NotInvertible(f"integer matrix with det {det} is not invertible")
        s = R.el(det)  # det = 1/det here
        B = Mat2(R, R.mul(s, A.d), R.mul(s, R.neg(A.b)),
                 R.mul(s, R.neg(A.c)), R.mul(s, A.a))
    else:
        if not is_invertible(A):
            raise NotInvertible("residue matrix is singular")
        r1 = [A.a, A.b, R.one, R.zero]
        r2 = [A.c, A.d, R.zero, R.one]
        if not R.is_unit(r1[0]):
            r1, r2 = r2, r1  # some first-column entry is a unit
        piv = R.invert(r1[0])
        r1 = [R.mul(piv, x) for x in r1]
        factor = r2[0]
        r2 = [R.sub(y, R.mul(factor, x)) for x, y in zip(r1, r2)]
        if not R.is_unit(r2[1]):
            raise InternalContractViolation("second pivot is not a unit")
        piv = R.invert(r2[1])
        r2 = [R.mul(piv, x) for x in r2]
        factor = r1[1]
        r1 = [R.sub(y, R.mul(factor, x)) for x, y in zip(r2, r1)]
        B = Mat2(R, r1[2], r1[3], r2[2], r2[3])
    I = Mat2.identity(R)
    if A * B != I or B * A != I:
        raise InternalContractViolation("computed inverse fails A B = B A = I")
    return B


def conjugate(P, A) -> Mat2:
    """P A P^-1."""
    return (P * A) * invert2(P)


def is_nilpotent(A) -> bool:
    R = A.ring
    if R.is_finite:
        # J^v = 0 makes every nilpotent matrix vanish by the 2v-th power
        return matpow(A, 2 * R.radical_index()) == Mat2.zero(R)
    # over Z and Z_(p) the characteristic polynomial of a nilpotent 2x2 is t^2
    return A == Mat2.zero(R) or A * A == Mat2.zero(R)
