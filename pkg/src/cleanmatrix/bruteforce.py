"""Brute-force ground truth on small finite rings.

Everything here runs on int-indexed multiplication tables built directly from
the ring's element enumeration, so no logic is shared with the decision
modules: invertibility is a kernel scan over all of R^2, idempotents come from
an exhaustive matrix scan, and the pi-regular check recomputes kernel and
image sets power by power.  The only decision-module code the oracle touches
is verify_certificate, applied to its own output as a final cross-check.

The idempotent scan prefilters by residue: an idempotent's residue matrix is
idempotent over the residue field, so quadruples failing that cheap test are
skipped before any ring multiplication happens.
"""

from .clean import CleanCertificate, verify_certificate
from .errors import InternalContractViolation, TooLarge
from .matrices import Mat2

_TABLE_CACHE = {}


class _Tables:
    def __init__(self, R):
        elems = R.enumerate_elements("All")
        size = len(elems)
        self.ring = R
        self.elements = list(elems)
        self.size = size
        index = {e.payload: i for i, e in enumerate(elems)}
        self.index = index
        self.add = [
            index[R.add(x, y).payload] for x in elems for y in elems
        ]
        self.mul = [
            index[R.mul(x, y).payload] for x in elems for y in elems
        ]
        self.neg = [index[R.neg(x).payload] for x in elems]
        self.zero = index[R.zero.payload]
        self.one = index[R.one.payload]
        view = R.residue_view()
        field_elems = view.field.enumerate_elements("All")
        field_index = {e.payload: i for i, e in enumerate(field_elems)}
        self.residue = [field_index[view.reduce(x).payload] for x in elems]
        self.field_size = len(field_elems)
        self.field_mul = [
            field_index[view.field.mul(x, y).payload]
            for x in field_elems
            for y in field_elems
        ]
        self.field_add = [
            field_index[view.field.add(x, y).payload]
            for x in field_elems
            for y in field_elems
        ]
        self.field_zero = field_index[view.field.zero.payload]
        self.field_one = field_index[view.field.one.payload]
        self.vectors = [(x, y) for x in range(size) for y in range(size)]
        self.idempotents = None  # filled lazily

    def matrix_indices(self, A):
        return tuple(self.index[e.payload] for e in A.entries())


def _tables(R, max_size=256):
    if not R.is_finite:
        raise TooLarge("brute-force oracle needs a finite ring")
    key = R.spec_string()
    cached = _TABLE_CACHE.get(key)
    if cached is not None:
        return cached
    if R.size() > max_size:
        raise TooLarge(f"ring has {R.size()} elements, oracle cap is {max_size}")
    tab = _Tables(R)
    _TABLE_CACHE[key] = tab
    return tab


def _residue_idempotent_quadruples(tab):
    q = tab.field_size
    fmul = tab.field_mul
    fadd = tab.field_add
    out = set()
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    if (
                        fadd[fmul[a * q + a] * q + fmul[b * q + c]] == a
                        and fadd[fmul[a * q + b] * q + fmul[b * q + d]] == b
                        and fadd[fmul[c * q + a] * q + fmul[d * q + c]] == c
                        and fadd[fmul[c * q + b] * q + fmul[d * q + d]] == d
                    ):
                        out.add((a, b, c, d))
    return out

def _idempotent_indices(tab):
    if tab.idempotents is not None:
        return tab.idempotents
    n = tab.size
    mul = tab.mul
    add = tab.add
    res = tab.residue
    good_residues = _residue_idempotent_quadruples(tab)
    found = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if (res[a], res[b], res[c], res[d]) not in good_residues:
                        continue
                    if (
                        add[mul[a * n + a] * n + mul[b * n + c]] == a
                        and add[mul[a * n + b] * n + mul[b * n + d]] == b
                        and add[mul[c * n + a] * n + mul[d * n + c]] == c
                        and add[mul[c * n + b] * n + mul[d * n + d]] == d
                    ):
                        found.append((a, b, c, d))
    tab.idempotents = found
    return found


def enumerate_idempotents(R, max_size=256):
    tab = _tables(R, max_size)
    els = tab.elements
    return [
        Mat2(R, els[a], els[b], els[c], els[d])
        for a, b, c, d in _idempotent_indices(tab)
    ]


def _is_invertible_kernel_scan(tab, m):
    """No nonzero kernel vector over the whole finite module R^2."""
    n = tab.size
    mul = tab.mul
    add = tab.add
    zero = tab.zero
    a, b, c, d = m
    for x, y in tab.vectors:
        if x == zero and y == zero:
            continue
        if (
            add[mul[a * n + x] * n + mul[b * n + y]] == zero
            and add[mul[c * n + x] * n + mul[d * n + y]] == zero
        ):
            return False
    return True


def brute_clean(A: Mat2, max_size=256):
    """First idempotent (scan order) giving a verified clean decomposition."""
    R = A.ring
    tab = _tables(R, max_size)
    n = tab.size
    mul = tab.mul
    add = tab.add
    neg = tab.neg
    a, b, c, d = tab.matrix_indices(A)
    for ea, eb, ec, ed in _idempotent_indices(tab):
        # commute check: E*A == A*E entrywise
        if (
            add[mul[ea * n + a] * n + mul[eb * n + c]]
            != add[mul[a * n + ea] * n + mul[b * n + ec]]
            or add[mul[ea * n + b] * n + mul[eb * n + d]]
            != add[mul[a * n + eb] * n + mul[b * n + ed]]
            or add[mul[ec * n + a] * n + mul[ed * n + c]]
            != add[mul[c * n + ea] * n + mul[d * n + ec]]
            or add[mul[ec * n + b] * n + mul[ed * n + d]]
            != add[mul[c * n + eb] * n + mul[d * n + ed]]
        ):
            continue
        u = (
            add[a * n + neg[ea]],
            add[b * n + neg[eb]],
            add[c * n + neg[ec]],
            add[d * n + neg[ed]],
        )
        if not _is_invertible_kernel_scan(tab, u):
            continue
        els = tab.elements
        E = Mat2(R, els[ea], els[eb], els[ec], els[ed])
        U = Mat2(R, els[u[0]], els[u[1]], els[u[2]], els[u[3]])
        cert = CleanCertificate(E=E, U=U)
        if not verify_certificate(A, cert):
            raise InternalContractViolation("oracle certificate fails verification")
        return cert
    return None


def brute_pi(A: Mat2, max_size=256):
    """Smallest n with R^2 = ker(A^n) (+) im(A^n), or None; set arithmetic
    over int-indexed vectors, separate from the decision-side Fitting code."""
    R = A.ring
    tab = _tables(R, max_size)
    n = tab.size
    mul = tab.mul
    add = tab.add
    zero = tab.zero
    a, b, c, d = tab.matrix_indices(A)
    m = (a, b, c, d)
    prev = None
    for power in range(1, n * n + 1):
        ma, mb, mc, md = m
        ker = set()
        im = set()
        for x, y in tab.vectors:
            fx = add[mul[ma * n + x] * n + mul[mb * n + y]]
            fy = add[mul[mc * n + x] * n + mul[md * n + y]]
            if fx == zero and fy == zero:
                ker.add((x, y))
            im.add((fx, fy))
        if ker & im == {(zero, zero)}:
            return power
        if prev == (ker, im):
            return None
        prev = (ker, im)
        m = (
            add[mul[ma * n + a] * n + mul[mb * n + c]],
            add[mul[ma * n + b] * n + mul[mb * n + d]],
            add[mul[mc * n + a] * n + mul[md * n + c]],
            add[mul[mc * n + b] * n + mul[md * n + d]],
        )
    return None
