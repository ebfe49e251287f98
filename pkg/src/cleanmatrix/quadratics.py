"""Monic quadratics t^2 + t a1 + a0 and their one-sided roots.

Coefficients sit to the RIGHT of the powers, so the left evaluation at lambda is
lambda^2 + lambda a1 + a0 and lambda is a left root when that vanishes.  Right
roots put the coefficients on the left and are searched by delegating to the
left search over the opposite ring (same coefficient elements, multiplication
reversed).

The distinguished family

    W = { t^2 - t (1 + w1) - w0 : w0, w1 in J }

collects the quadratics whose residue has both 0 and 1 as roots.  For such f the
substitution g(t) = f(1 - t), expanded with only central scalars moved past t,

    g(t) = t^2 - t (1 - w1) - (w0 + w1),

is again in W and swaps roots in J with roots in 1 + J via lambda <-> 1 - lambda.

Root search routes:
  * finite rings: exhaustive scan of the requested subsets, enumeration order;
  * Z and Z_(p): discriminant + exact integer square root;
  * truncated (skew) polynomial rings: coefficient lifting degree by degree.

Lifting solves, at each degree k >= 1, the two-sided linear constraint obtained
from the x^k coefficient of left_eval(f, t) = 0 with t = t_0 + t_1 x + ...:

    t_0 t_k - t_k [1 - sigma^k(t_0) + sigma^k(b_0)]
        = - ( sum_{0<i<k} t_i sigma^i(t_{k-i})
              - sum_{0<=i<k} t_i sigma^i(b_{k-i}) - c_k )

where f = t^2 - t(1+w1) - w0, b_i are the coefficients of w1, c_i those of w0.
With t_0 in J of the base and the bracket in 1 + J, the solve is the weakly
bleached configuration handled by solve_two_sided_linear.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional

from .errors import (
    BaseRootMissing,
    InfiniteRing,
    InternalContractViolation,
    NoSolution,
    NotApplicable,
)
from .rings import Element

_SUBSETS = ("J", "1+J", "unit", "nilpotent")


@dataclass(frozen=True)
class MonicQuadratic:
    """t^2 + t*a1 + a0 over `ring`, coefficients kept on the right."""

    ring: object
    a1: Element
    a0: Element

    def __post_init__(self):
        self.ring._guard(self.a1, self.a0)

    @staticmethod
    def from_radical_params(ring, w0, w1):
        """t^2 - t(1 + w1) - w0 for w0, w1 in J."""
        ring._guard(w0, w1)
        return MonicQuadratic(ring, ring.neg(ring.add(ring.one, w1)), ring.neg(w0))

    def in_w(self) -> bool:
        R = self.ring
        return R.in_radical(self.a0) and R.in_radical(R.add(R.one, self.a1))

    @property
    def w0(self):
        return self.ring.neg(self.a0)

    @property
    def w1(self):
        R = self.ring
        return R.neg(R.add(R.one, self.a1))

    def one_minus_t_transform(self) -> "MonicQuadratic":
        """g(t) = f(1 - t); left roots of g in J are 1 - (left roots of f in 1+J)."""
        R = self.ring
        two = R.add(R.one, R.one)
        g1 = R.neg(R.add(two, self.a1))
        g0 = R.add(R.add(R.one, self.a1), self.a0)
        return MonicQuadratic(R, g1, g0)

    def text(self) -> str:
        return format_quadratic(self)

    def __repr__(self):
        return f"<{self.ring.spec_string()}: {self.text()}>"


def format_quadratic(f: MonicQuadratic) -> str:
    def term(sign, body, power):
        if power and body == "1":
            return f"{sign}{power}"
        if power:
            if "+" in body or "-" in body[1:] or "*" in body:
                body = f"({body})"
            return f"{sign}{body}*{power}"
        if "+" in body or "-" in body[1:]:
            body = f"({body})"
        return f"{sign}{body}"

    R = f.ring
    out = "t^2"
    for coeff, power in ((f.a1, "t"), (f.a0, "")):
        if coeff == R.zero:
            continue
        plus = term("+", R.format_element(coeff), power)
        minus = term("-", R.format_element(R.neg(coeff)), power)
        # prefer the shorter rendering, so Z/8 and Z_(p) witnesses read t^2-t-2
        out += minus if len(minus) < len(plus) else plus
    return out


@dataclass
class RootReport:
    """Found roots per requested subset; a None in a requested subset means the
    search proved no such root exists (searches here are complete)."""

    root_in_j: Optional[Element] = None
    root_in_1_plus_j: Optional[Element] = None
    root_unit: Optional[Element] = None
    root_nilpotent: Optional[Element] = None
    method: str = ""
    targets: tuple = field(default_factory=tuple)

    def get(self, subset):
        return {
            "J": self.root_in_j,
            "1+J": self.root_in_1_plus_j,
            "unit": self.root_unit,
            "nilpotent": self.root_nilpotent,
        }[subset]


def left_eval(f: MonicQuadratic, lam: Element) -> Element:
    R = f.ring
    R._guard(lam)
    return R.add(R.add(R.mul(lam, lam), R.mul(lam, f.a1)), f.a0)


def right_eval(f: MonicQuadratic, lam: Element) -> Element:
    R = f.ring
    R._guard(lam)
    return R.add(R.add(R.mul(lam, lam), R.mul(f.a1, lam)), f.a0)


def element_is_nilpotent(ring, a) -> bool:
    if not ring.in_radical(a):
        return False
    v = ring.radical_index()
    if v is None:
        return a == ring.zero  # Z_(p): the radical has no nonzero nilpotents
    return a ** v == ring.zero


def find_roots_enumerate(f: MonicQuadratic, targets=("J", "1+J")) -> RootReport:
    """Complete scan of each requested subset, first hit in enumeration order."""
    R = f.ring
    if not R.is_finite:
        raise InfiniteRing("enumeration root search needs a finite ring")
    for t in targets:
        if t not in _SUBSETS:
            raise ValueError(f"unknown root subset {t!r}")
    report = RootReport(method="Enumeration", targets=tuple(targets))
    zero = R.zero
    if "J" in targets:
        for lam in R.enumerate_elements("Radical"):
            if left_eval(f, lam) == zero:
                report.root_in_j = lam
                break
    if "1+J" in targets:
        for lam in R.enumerate_elements("OnePlusRadical"):
            if left_eval(f, lam) == zero:
                report.root_in_1_plus_j = lam
                break
    if "unit" in targets:
        for lam in R.enumerate_elements("Units"):
            if left_eval(f, lam) == zero:
                report.root_unit = lam
                break
    if "nilpotent" in targets:
        for lam in R.enumerate_elements("Radical"):
            if element_is_nilpotent(R, lam) and left_eval(f, lam) == zero:
                report.root_nilpotent = lam
                break
    return report


def _fraction_sqrt(q: Fraction):
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def find_roots_rational(f: MonicQuadratic, targets=("J", "1+J")) -> RootReport:
    """Discriminant route over Z and Z_(p); commutative, so sides agree.

    Over Z only the unit and nilpotent subsets are meaningful (no radical);
    J / 1+J stay None there by definition."""
    R = f.ring
    if R.family not in ("Integers", "LocalizedIntegers"):
        raise NotApplicable("rational root search needs Z or Z_(p)")
    report = RootReport(method="Discriminant", targets=tuple(targets))
    a1 = Fraction(f.a1.payload)
    a0 = Fraction(f.a0.payload)
    disc = a1 * a1 - 4 * a0
    s = _fraction_sqrt(disc)
    if s is None:
        return report
    roots = [(-a1 + s) / 2, (-a1 - s) / 2]
    for lam in roots:
        if R.family == "Integers":
            if lam.denominator != 1:
                continue
            el = R.el(int(lam))
            if "nilpotent" in targets and lam == 0 and report.root_nilpotent is None:
                report.root_nilpotent = el
            if "unit" in targets and lam in (1, -1) and report.root_unit is None:
                report.root_unit = el
            continue
        p = R.p
        if lam.denominator % p == 0:
            continue  # not an element of Z_(p)
        el = R.el(lam)
        in_j = lam.numerator % p == 0
        if "J" in targets and in_j and report.root_in_j is None:
            report.root_in_j = el
        if (
            "1+J" in targets
            and (lam - 1).numerator % p == 0
            and report.root_in_1_plus_j is None
        ):
            report.root_in_1_plus_j = el
        if "unit" in targets and not in_j and report.root_unit is None:
            report.root_unit = el
        if "nilpotent" in targets and lam == 0 and report.root_nilpotent is None:
            report.root_nilpotent = el
    return report


# ------------------------------------------------------- two-sided linear


def solve_two_sided_linear(ring, a, b, c) -> Element:
    """Solve a x - x b = c.

    Supported sidings are the weakly bleached configurations: one of a, b in J
    and the other in 1 + J.  Commutative owners solve by division by a - b
    (a unit in those configurations); the skew truncated rings expand the map
    x -> a x - x b as a linear operator on the F_p coordinates of the additive
    group and eliminate.  Raises NoSolution when the equation is inconsistent.
    """
    ring._guard(a, b, c)
    if ring.family == "Integers":
        raise NotApplicable("two-sided solve needs a local ring")
    if getattr(ring, "is_commutative", True):
        d = ring.sub(a, b)
        if not ring.is_unit(d):
            if c == ring.zero:
                return ring.zero
            raise NoSolution("a - b is not a unit; not a weakly bleached instance")
        return ring.mul(ring.invert(d), c)
    if ring.element_ring is not ring:
        # opposite wrapper: a o x - x o b = c reads x a - b x = c in the base,
        # i.e. b x - x a = -c, which swaps the roles of a and b
        base = ring.opposite()
        return solve_two_sided_linear(base, b, a, base.neg(c))
    p = ring.fp_prime()
    dim = ring.fp_dimension()
    cols = []
    for i in range(dim):
        vec = [0] * dim
        vec[i] = 1
        e = ring.from_fp_vector(tuple(vec))
        img = ring.sub(ring.mul(a, e), ring.mul(e, b))
        cols.append(ring.to_fp_vector(img))
    cvec = ring.to_fp_vector(c)
    # rows of the augmented system M x = c over F_p
    rows = [[cols[j][i] for j in range(dim)] + [cvec[i]] for i in range(dim)]
    pivot_cols = []
    r = 0
    for col in range(dim):
        sel = None
        for rr in range(r, dim):
            if rows[rr][col] % p:
                sel = rr
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = pow(rows[r][col], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for rr in range(dim):
            if rr != r and rows[rr][col] % p:
                fac = rows[rr][col]
                rows[rr] = [(x - fac * y) % p for x, y in zip(rows[rr], rows[r])]
        pivot_cols.append(col)
        r += 1
    for rr in range(r, dim):
        if rows[rr][dim] % p:
            raise NoSolution("two-sided linear system is inconsistent")
    sol = [0] * dim
    for idx, col in enumerate(pivot_cols):
        sol[col] = rows[idx][dim] % p
    x = ring.from_fp_vector(tuple(sol))
    if ring.sub(ring.mul(a, x), ring.mul(x, b)) != c:
        raise InternalContractViolation("eliminated solution fails to verify")
    return x


# ------------------------------------------------------- coefficient lifting


def lift_root_truncated(ring, w0, w1) -> Element:
    """Left root in J of t^2 - t(1+w1) - w0 over F[x; sigma]/(x^n), built
    degree by degree from a base root; see the module docstring for the
    degree-k constraint.  Raises BaseRootMissing if the base search fails
    (impossible over a field base, where t_0 = 0 always works)."""
    if ring.family not in ("TruncatedPoly", "TruncatedSkew"):
        raise NotApplicable("lifting needs a truncated polynomial ring")
    ring._guard(w0, w1)
    if not (ring.in_radical(w0) and ring.in_radical(w1)):
        raise NotApplicable("lifting needs w0, w1 in the radical")
    base = ring.base
    n = ring.n
    b = [ring.coeff(w1, i) for i in range(n)]
    c = [ring.coeff(w0, i) for i in range(n)]
    f0 = MonicQuadratic.from_radical_params(base, c[0], b[0])
    base_report = find_roots_enumerate(f0, ("J",))
    t0 = base_report.root_in_j
    if t0 is None:
        raise BaseRootMissing("no degree-zero root over the base ring")
    ts = [t0]
    sig = ring.sigma
    for k in range(1, n):
        alpha = base.add(
            base.sub(base.one, sig(t0, k)), sig(b[0], k)
        )  # 1 - sigma^k(t0) + sigma^k(b0), a unit
        rhs = base.zero
        for i in range(1, k):
            rhs = base.add(rhs, base.mul(ts[i], sig(ts[k - i], i)))
        for i in range(0, k):
            rhs = base.sub(rhs, base.mul(ts[i], sig(b[k - i], i)))
        rhs = base.sub(rhs, c[k])
        # t0 t_k - t_k alpha = -rhs
        tk = solve_two_sided_linear(base, t0, alpha, base.neg(rhs))
        ts.append(tk)
    root = _assemble(ring, ts)
    f = MonicQuadratic.from_radical_params(ring, w0, w1)
    if left_eval(f, root) != ring.zero:
        raise InternalContractViolation("lifted root fails left evaluation")
    return root


def _assemble(ring, coeffs):
    out = ring.zero
    if ring.n >= 2:
        var = ring.variable()
    power = ring.one
    for i, c in enumerate(coeffs):
        out = ring.add(out, ring.mul(ring.embed(c), power))
        if i + 1 < len(coeffs):
            power = ring.mul(power, var)
    return out


def right_roots(f: MonicQuadratic, targets=("J", "1+J")) -> RootReport:
    """Right-root search: identical to the left search over commutative owners,
    otherwise delegated to the left search over the opposite ring (elements are
    shared, so the reported roots live in the original ring)."""
    R = f.ring
    if getattr(R, "is_commutative", True):
        return find_roots_auto(f, targets)
    fop = MonicQuadratic(R.opposite(), f.a1, f.a0)
    return find_roots_auto(fop, targets)


def find_roots_auto(f: MonicQuadratic, targets=("J", "1+J")) -> RootReport:
    """Family dispatch: enumeration when finite, discriminant over Z/Z_(p)."""
    R = f.ring
    if R.is_finite:
        return find_roots_enumerate(f, targets)
    return find_roots_rational(f, targets)
