"""Concrete local rings with exact arithmetic.

Six families, all sharing one element interface:

  Integers              Z              (not local; kept for the integer classifier)
  LocalizedIntegers(p)  Z_(p)          fractions with denominator coprime to p
  ModPrimePower(p, k)   Z/p^k
  GaloisField(p, m)     GF(p^m)        coefficient vectors over F_p
  TruncatedPoly(F, n)   F[y]/(y^n)     F a Galois field
  TruncatedSkew(F,s,n)  F[x; sigma]/(x^n)  with x*a = sigma(a)*x, sigma = Frobenius^s

Every element is an `Element` owning a canonical payload; owners are compared by
identity (make_ring caches one ring object per spec).  Units and the Jacobson
radical partition each local ring: is_unit(a) xor in_radical(a).

The Galois field modulus is the library's fixed choice: the first irreducible
monic of degree m found in base-p counting order of the coefficient vector
(constant digit least significant).  GF(4): t^2+t+1; GF(8): t^3+t+1; GF(9): t^2+1.

Enumeration order is lexicographic on canonical payloads; OnePlusRadical is the
image of Radical's order under j -> 1 + j.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    InfiniteRing,
    InvalidSpec,
    NotAUnit,
    NotLocal,
    OwnerMismatch,
)

# ---------------------------------------------------------------- ring specs


@dataclass(frozen=True)
class RingSpec:
    """Family tag plus parameters; `base` nests the coefficient field spec."""

    family: str
    p: Optional[int] = None
    k: Optional[int] = None
    m: Optional[int] = None
    n: Optional[int] = None
    s: Optional[int] = None
    base: Optional["RingSpec"] = None


def integers() -> RingSpec:
    return RingSpec("Integers")


def localized_integers(p: int) -> RingSpec:
    return RingSpec("LocalizedIntegers", p=p)


def mod_prime_power(p: int, k: int) -> RingSpec:
    return RingSpec("ModPrimePower", p=p, k=k)


def galois_field(p: int, m: int) -> RingSpec:
    return RingSpec("GaloisField", p=p, m=m)


def truncated_poly(base: RingSpec, n: int) -> RingSpec:
    return RingSpec("TruncatedPoly", n=n, base=base)


def truncated_skew(base: RingSpec, s: int, n: int) -> RingSpec:
    return RingSpec("TruncatedSkew", n=n, s=s, base=base)


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


_RING_CACHE = {}


def make_ring(spec: RingSpec):
    """Build (or fetch the cached) ring for a spec; raises InvalidSpec."""
    cached = _RING_CACHE.get(spec)
    if cached is not None:
        return cached
    fam = spec.family
    if fam == "Integers":
        ring = IntegerRing(spec)
    elif fam == "LocalizedIntegers":
        if not _is_prime(spec.p or 0):
            raise InvalidSpec(f"Zloc needs a prime, got {spec.p}")
        ring = LocalizedIntegersRing(spec)
    elif fam == "ModPrimePower":
        if not _is_prime(spec.p or 0):
            raise InvalidSpec(f"Zmod needs a prime, got {spec.p}")
        if not spec.k or spec.k < 1:
            raise InvalidSpec(f"Zmod exponent must be >= 1, got {spec.k}")
        ring = ModPrimePowerRing(spec)
    elif fam == "GaloisField":
        if not _is_prime(spec.p or 0):
            raise InvalidSpec(f"GF needs a prime, got {spec.p}")
        if not spec.m or spec.m < 1:
            raise InvalidSpec(f"GF degree must be >= 1, got {spec.m}")
        ring = GaloisFieldRing(spec)
    elif fam in ("TruncatedPoly", "TruncatedSkew"):
        if spec.base is None or spec.base.family != "GaloisField":
            raise InvalidSpec("truncation base must be a Galois field")
        if not spec.n or spec.n < 1:
            raise InvalidSpec(f"truncation length must be >= 1, got {spec.n}")
        base = make_ring(spec.base)
        s = spec.s or 0
        if fam == "TruncatedSkew":
            if spec.s is None or spec.s < 0 or spec.s >= base.m:
                raise InvalidSpec(f"twist power must satisfy 0 <= s < {base.m}")
        ring = TruncatedRing(spec, base, s)
    else:
        raise InvalidSpec(f"unknown ring family {fam!r}")
    _RING_CACHE[spec] = ring
    return ring


# ---------------------------------------------------------------- elements


class Element:
    """One ring element: an owner plus a canonical payload."""

    __slots__ = ("ring", "payload")

    def __init__(self, ring, payload):
        self.ring = ring
        self.payload = payload

    def _coerce(self, other):
        if isinstance(other, Element):
            if other.ring is not self.ring:
                raise OwnerMismatch(
                    f"elements of {self.ring.spec_string()} and "
                    f"{other.ring.spec_string()} cannot be combined"
                )
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.ring.add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.ring.sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.ring.sub(other, self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.ring.mul(self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.ring.mul(other, self)

    def __neg__(self):
        return self.ring.neg(self)

    def __pow__(self, e):
        assert isinstance(e, int) and e >= 0
        out = self.ring.one
        base = self
        while e:
            if e & 1:
                out = self.ring.mul(out, base)
            base = self.ring.mul(base, base)
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, Element):
            return NotImplemented
        return other.ring is self.ring and other.payload == self.payload

    def __hash__(self):
        return hash((id(self.ring), self.payload))

    def __repr__(self):
        return f"<{self.ring.spec_string()}: {self.ring.format_element(self)}>"

    def __str__(self):
        return self.ring.format_element(self)


class ResidueView:
    """Reduction onto the residue field and a fixed set-theoretic lift back."""

    def __init__(self, field, reduce_fn, lift_fn):
        self.field = field
        self._reduce = reduce_fn
        self._lift = lift_fn

    def reduce(self, a: Element) -> Element:
        return self._reduce(a)

    def lift(self, a: Element) -> Element:
        return self._lift(a)


# ---------------------------------------------------------------- base class


class LocalRing:
    """Common element interface; generic algorithms only call these methods."""

    family = None
    is_finite = False
    is_commutative = True

    def __init__(self, spec):
        self.spec = spec
        self._enum_cache = {}
        self._opposite = None

    # identity under opposite wrapping: elements always name their base owner
    @property
    def element_ring(self):
        return self

    def _guard(self, *els):
        for a in els:
            if not isinstance(a, Element) or a.ring is not self.element_ring:
                raise OwnerMismatch(
                    f"operand does not belong to {self.spec_string()}"
                )

    def el(self, payload) -> Element:
        raise NotImplementedError

    def from_int(self, v: int) -> Element:
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def in_radical(self, a) -> bool:
        raise NotImplementedError

    def invert(self, a) -> Element:
        raise NotImplementedError

    def residue_view(self) -> ResidueView:
        raise NotImplementedError

    def radical_index(self):
        """Smallest v with J^v = 0, or None when J is not nilpotent."""
        return None

    def size(self):
        return None

    def enumerate_elements(self, subset="All"):
        """Deterministic tuple of elements: All, Units, Radical, OnePlusRadical."""
        if not self.is_finite:
            raise InfiniteRing(f"{self.spec_string()} is infinite")
        got = self._enum_cache.get(subset)
        if got is not None:
            return got
        if subset == "All":
            out = tuple(self.el(p) for p in sorted(self._all_payloads()))
        elif subset == "Units":
            out = tuple(a for a in self.enumerate_elements("All") if self.is_unit(a))
        elif subset == "Radical":
            out = tuple(
                a for a in self.enumerate_elements("All") if self.in_radical(a)
            )
        elif subset == "OnePlusRadical":
            one = self.one
            out = tuple(self.add(one, j) for j in self.enumerate_elements("Radical"))
        else:
            raise ValueError(f"unknown subset {subset!r}")
        self._enum_cache[subset] = out
        return out

    def _all_payloads(self):
        raise InfiniteRing(f"{self.spec_string()} is infinite")

    def opposite(self):
        """The opposite ring: same elements, multiplication reversed."""
        if self._opposite is None:
            self._opposite = OppositeRing(self)
        return self._opposite

    def spec_string(self) -> str:
        raise NotImplementedError

    def format_element(self, a) -> str:
        raise NotImplementedError

    def __repr__(self):
        return f"<ring {self.spec_string()}>"


# ---------------------------------------------------------------- Z and Z_(p)


class IntegerRing(LocalRing):
    family = "Integers"

    def __init__(self, spec):
        super().__init__(spec)
        self.zero = Element(self, 0)
        self.one = Element(self, 1)

    def el(self, payload):
        if not isinstance(payload, int):
            raise ValueError(f"integer payload expected, got {payload!r}")
        return Element(self, payload)

    def from_int(self, v):
        return Element(self, v)

    def add(self, a, b):
        self._guard(a, b)
        return Element(self, a.payload + b.payload)

    def neg(self, a):
        self._guard(a)
        return Element(self, -a.payload)

    def mul(self, a, b):
        self._guard(a, b)
        return Element(self, a.payload * b.payload)

    def is_unit(self, a):
        raise NotLocal("Z is not local; unit/radical tests need a local ring")

    def in_radical(self, a):
        raise NotLocal("Z is not local; unit/radical tests need a local ring")

    def invert(self, a):
        self._guard(a)
        if a.payload in (1, -1):
            return a
        raise NotAUnit(f"{a.payload} is not invertible in Z")

    def residue_view(self):
        raise NotLocal("Z has no residue field; it is not local")

    def spec_string(self):
        return "Z"

    def format_element(self, a):
        return str(a.payload)


class LocalizedIntegersRing(LocalRing):
    family = "LocalizedIntegers"

    def __init__(self, spec):
        super().__init__(spec)
        self.p = spec.p
        self.zero = Element(self, Fraction(0))
        self.one = Element(self, Fraction(1))

    def el(self, payload):
        payload = Fraction(payload)
        if payload.denominator % self.p == 0:
            raise ValueError(
                f"{payload} has denominator divisible by {self.p}; "
                f"not an element of {self.spec_string()}"
            )
        return Element(self, payload)

    def from_int(self, v):
        return Element(self, Fraction(v))

    def add(self, a, b):
        self._guard(a, b)
        return Element(self, a.payload + b.payload)

    def neg(self, a):
        self._guard(a)
        return Element(self, -a.payload)

    def mul(self, a, b):
        self._guard(a, b)
        return Element(self, a.payload * b.payload)

    def is_unit(self, a):
        self._guard(a)
        return a.payload.numerator % self.p != 0

    def in_radical(self, a):
        self._guard(a)
        return a.payload.numerator % self.p == 0

    def invert(self, a):
        self._guard(a)
        if not self.is_unit(a):
            raise NotAUnit(f"{a.payload} is not a unit in {self.spec_string()}")
        return Element(self, 1 / a.payload)

    def residue_view(self):
        field = make_ring(galois_field(self.p, 1))
        p = self.p

        def reduce_fn(a):
            self._guard(a)
            num = a.payload.numerator % p
            den = a.payload.denominator % p
            return field.el((num * pow(den, -1, p) % p,))

        def lift_fn(c):
            field._guard(c)
            return Element(self, Fraction(c.payload[0]))

        return ResidueView(field, reduce_fn, lift_fn)

    def spec_string(self):
        return f"Zloc({self.p})"

    def format_element(self, a):
        return str(a.payload)


# ---------------------------------------------------------------- Z/p^k


class ModPrimePowerRing(LocalRing):
    family = "ModPrimePower"
    is_finite = True

    def __init__(self, spec):
        super().__init__(spec)
        self.p, self.k = spec.p, spec.k
        self.modulus = spec.p**spec.k
        self.zero = Element(self, 0)
        self.one = Element(self, 1 % self.modulus)

    def el(self, payload):
        if not isinstance(payload, int):
            raise ValueError(f"integer payload expected, got {payload!r}")
        return Element(self, payload % self.modulus)

    def from_int(self, v):
        return Element(self, v % self.modulus)

    def add(self, a, b):
        self._guard(a, b)
        return Element(self, (a.payload + b.payload) % self.modulus)

    def neg(self, a):
        self._guard(a)
        return Element(self, (-a.payload) % self.modulus)

    def mul(self, a, b):
        self._guard(a, b)
        return Element(self, (a.payload * b.payload) % self.modulus)

    def is_unit(self, a):
        self._guard(a)
        return a.payload % self.p != 0

    def in_radical(self, a):
        self._guard(a)
        return a.payload % self.p == 0

    def invert(self, a):
        self._guard(a)
        if not self.is_unit(a):
            raise NotAUnit(f"{a.payload} is not a unit mod {self.modulus}")
        return Element(self, pow(a.payload, -1, self.modulus))

    def residue_view(self):
        field = make_ring(galois_field(self.p, 1))
        p = self.p

        def reduce_fn(a):
            self._guard(a)
            return field.el((a.payload % p,))

        def lift_fn(c):
            field._guard(c)
            return Element(self, c.payload[0] % self.modulus)

        return ResidueView(field, reduce_fn, lift_fn)

    def radical_index(self):
        return self.k

    def size(self):
        return self.modulus

    def _all_payloads(self):
        return range(self.modulus)

    def spec_string(self):
        return f"Zmod({self.p},{self.k})"

    def format_element(self, a):
        return str(a.payload)


# ---------------------------------------------------------------- GF(p^m)

# F_p[t] helpers on coefficient tuples, low degree first, no trailing zeros.


def _fp_trim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _fp_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(tuple(out))


def _fp_rem(a, f, p):
    # remainder of a by monic f
    a = list(a)
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        lead = a[-1] % p
        if lead:
            shift = len(a) - 1 - df
            for i in range(df + 1):
                a[shift + i] = (a[shift + i] - lead * f[i]) % p
        a.pop()
    return _fp_trim(tuple(x % p for x in a))


def _fp_gcd(a, b, p):
    a, b = _fp_trim(tuple(a)), _fp_trim(tuple(b))
    while b:
        inv = pow(b[-1], -1, p)
        bm = tuple((x * inv) % p for x in b)
        a, b = b, _fp_rem(a, bm, p)
    return a


def _fp_powmod_x(e, f, p):
    # t^e mod f, by square and multiply
    out = (1,)
    base = _fp_rem((0, 1), f, p)
    while e:
        if e & 1:
            out = _fp_rem(_fp_mul(out, base, p), f, p)
        base = _fp_rem(_fp_mul(base, base, p), f, p)
        e >>= 1
    return out


def _prime_divisors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _fp_sub(a, b, p):
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return _fp_trim(tuple((x - y) % p for x, y in zip(a, b)))


def _fp_is_irreducible(f, p):
    m = len(f) - 1
    if m == 1:
        return True
    # f irreducible iff t^(p^m) = t mod f and gcd(t^(p^(m/r)) - t, f) = 1
    # for every prime r dividing m
    xq = _fp_powmod_x(p**m, f, p)
    if _fp_sub(xq, (0, 1), p) != ():
        return False
    for r in _prime_divisors(m):
        xe = _fp_powmod_x(p ** (m // r), f, p)
        g = _fp_gcd(_fp_sub(xe, (0, 1), p), f, p)
        if len(g) > 1:
            return False
    return True


def _find_modulus(p, m):
    """First irreducible monic of degree m, counting coefficient vectors base p."""
    for idx in range(p**m):
        coeffs = tuple((idx // p**i) % p for i in range(m)) + (1,)
        if _fp_is_irreducible(coeffs, p):
            return coeffs
    raise InvalidSpec(f"no irreducible of degree {m} over F_{p}")  # unreachable


class GaloisFieldRing(LocalRing):
    family = "GaloisField"
    is_finite = True

    def __init__(self, spec):
        super().__init__(spec)
        self.p, self.m = spec.p, spec.m
        self.modulus = _find_modulus(spec.p, spec.m) if spec.m > 1 else None
        self.zero = Element(self, (0,) * self.m)
        self.one = Element(self, (1 % self.p,) + (0,) * (self.m - 1))

    def el(self, payload):
        payload = tuple(int(c) % self.p for c in payload)
        if len(payload) != self.m:
            raise ValueError(f"coefficient vector of length {self.m} expected")
        return Element(self, payload)

    def from_int(self, v):
        return Element(self, (v % self.p,) + (0,) * (self.m - 1))

    def generator(self):
        if self.m < 2:
            raise ValueError(f"{self.spec_string()} has no generator w")
        return Element(self, (0, 1) + (0,) * (self.m - 2))

    def add(self, a, b):
        self._guard(a, b)
        p = self.p
        return Element(self, tuple((x + y) % p for x, y in zip(a.payload, b.payload)))

    def neg(self, a):
        self._guard(a)
        p = self.p
        return Element(self, tuple((-x) % p for x in a.payload))

    def mul(self, a, b):
        self._guard(a, b)
        if self.m == 1:
            return Element(self, ((a.payload[0] * b.payload[0]) % self.p,))
        prod = _fp_mul(a.payload, b.payload, self.p)
        red = _fp_rem(prod, self.modulus, self.p)
        return Element(self, red + (0,) * (self.m - len(red)))

    def is_unit(self, a):
        self._guard(a)
        return any(a.payload)

    def in_radical(self, a):
        self._guard(a)
        return not any(a.payload)

    def invert(self, a):
        self._guard(a)
        if not any(a.payload):
            raise NotAUnit(f"0 is not a unit in {self.spec_string()}")
        # a^(q-2) = a^-1 in GF(q)
        return a ** (self.p**self.m - 2)

    def frobenius(self, a, power=1):
        """a -> a^(p^power), the field automorphism fixing F_p."""
        self._guard(a)
        return a ** (self.p ** (power % self.m))

    def residue_view(self):
        return ResidueView(self, lambda a: a, lambda a: a)

    def radical_index(self):
        return 1

    def size(self):
        return self.p**self.m

    def _all_payloads(self):
        import itertools

        return [t for t in itertools.product(range(self.p), repeat=self.m)]

    def spec_string(self):
        return f"GF({self.p},{self.m})"

    def format_element(self, a):
        return _format_poly(a.payload, "w", lambda c: str(c), lambda c: c == 0,
                            lambda c: c == 1)


def _format_poly(coeffs, var, fmt, is_zero, is_one):
    terms = []
    for i, c in enumerate(coeffs):
        if is_zero(c):
            continue
        if i == 0:
            terms.append(fmt(c))
            continue
        power = var if i == 1 else f"{var}^{i}"
        if is_one(c):
            terms.append(power)
        else:
            body = fmt(c)
            if "+" in body or "-" in body[1:]:
                body = f"({body})"
            terms.append(f"{body}*{power}")
    return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------- truncations


class TruncatedRing(LocalRing):
    """F[y]/(y^n) or F[x; sigma]/(x^n) with x*a = sigma(a)*x, sigma = Frobenius^s.

    Payload: tuple of n base-field payloads, constant coefficient first.
    Multiplication twists the right factor: (a_i x^i)(b_j x^j) = a_i sigma^i(b_j) x^(i+j),
    with powers at or beyond n discarded.  s = 0 gives the plain truncated
    polynomial ring (the two families then agree element-wise and operation-wise).
    """

    is_finite = True

    def __init__(self, spec, base, s):
        super().__init__(spec)
        self.family = spec.family
        self.base = base
        self.n = spec.n
        self.s = s
        self.var = "y" if spec.family == "TruncatedPoly" else "x"
        self.is_commutative = s % base.m == 0
        bz = base.zero.payload
        self.zero = Element(self, (bz,) * self.n)
        self.one = Element(self, (base.one.payload,) + (bz,) * (self.n - 1))
        # sigma^i on base payloads for 0 <= i < n, sigma^i = Frobenius^(s*i)
        self._sig = [
            {
                pl: base.frobenius(base.el(pl), (s * i) % base.m).payload
                for pl in base._all_payloads()
            }
            for i in range(self.n)
        ]

    def el(self, payload):
        payload = tuple(tuple(c) for c in payload)
        if len(payload) != self.n:
            raise ValueError(f"coefficient vector of length {self.n} expected")
        return Element(self, tuple(self.base.el(c).payload for c in payload))

    def from_int(self, v):
        bz = self.base.zero.payload
        return Element(
            self, (self.base.from_int(v).payload,) + (bz,) * (self.n - 1)
        )

    def variable(self):
        if self.n < 2:
            raise ValueError(f"{self.spec_string()} truncates the variable to 0")
        bz = self.base.zero.payload
        return Element(self, (bz, self.base.one.payload) + (bz,) * (self.n - 2))

    def embed(self, c):
        """Constant embedding of a base-field element."""
        self.base._guard(c)
        bz = self.base.zero.payload
        return Element(self, (c.payload,) + (bz,) * (self.n - 1))

    def coeff(self, a, i):
        self._guard(a)
        return self.base.el(a.payload[i])

    def add(self, a, b):
        self._guard(a, b)
        base = self.base
        return Element(
            self,
            tuple(
                base.add(base.el(x), base.el(y)).payload
                for x, y in zip(a.payload, b.payload)
            ),
        )

    def neg(self, a):
        self._guard(a)
        base = self.base
        return Element(self, tuple(base.neg(base.el(x)).payload for x in a.payload))

    def mul(self, a, b):
        self._guard(a, b)
        base = self.base
        bz = base.zero.payload
        out = [bz] * self.n
        for i, ai in enumerate(a.payload):
            if ai == bz:
                continue
            av = base.el(ai)
            sig_i = self._sig[i]
            for j in range(self.n - i):
                bj = b.payload[j]
                if bj == bz:
                    continue
                term = base.mul(av, base.el(sig_i[bj]))
                out[i + j] = base.add(base.el(out[i + j]), term).payload
        return Element(self, tuple(out))

    def sigma(self, c, power=1):
        """The twist automorphism on base-field elements."""
        self.base._guard(c)
        return self.base.frobenius(c, (self.s * power) % self.base.m)

    def is_unit(self, a):
        self._guard(a)
        return any(a.payload[0])

    def in_radical(self, a):
        self._guard(a)
        return not any(a.payload[0])

    def invert(self, a):
        self._guard(a)
        if not self.is_unit(a):
            raise NotAUnit(f"constant term 0: not a unit in {self.spec_string()}")
        base = self.base
        c0 = base.el(a.payload[0])
        c0i = self.embed(base.invert(c0))
        # a = c0 (1 + z) with z = c0^-1 (a - c0) in the radical, so
        # a^-1 = (1 - z + z^2 - ...) c0^-1; the series stops at z^(n-1).
        z = self.mul(c0i, self.sub(a, self.embed(c0)))
        acc = self.one
        term = self.one
        for _ in range(1, self.n):
            term = self.neg(self.mul(term, z))
            acc = self.add(acc, term)
        return self.mul(acc, c0i)

    def residue_view(self):
        base = self.base
        bz = base.zero.payload

        def reduce_fn(a):
            self._guard(a)
            return base.el(a.payload[0])

        def lift_fn(c):
            base._guard(c)
            return Element(self, (c.payload,) + (bz,) * (self.n - 1))

        return ResidueView(base, reduce_fn, lift_fn)

    def radical_index(self):
        return self.n

    def size(self):
        return self.base.size() ** self.n

    def _all_payloads(self):
        import itertools

        return [
            t for t in itertools.product(self.base._all_payloads(), repeat=self.n)
        ]

    # F_p coordinates of the additive group, for the two-sided linear solver
    def fp_prime(self):
        return self.base.p

    def fp_dimension(self):
        return self.n * self.base.m

    def to_fp_vector(self, a):
        self._guard(a)
        return tuple(d for c in a.payload for d in c)

    def from_fp_vector(self, vec):
        m = self.base.m
        return Element(
            self, tuple(tuple(vec[i * m:(i + 1) * m]) for i in range(self.n))
        )

    def spec_string(self):
        b = self.base.spec_string()
        if self.family == "TruncatedPoly":
            return f"Trunc({b},{self.n})"
        return f"SkewTrunc({b},{self.s},{self.n})"

    def format_element(self, a):
        base = self.base
        return _format_poly(
            a.payload,
            self.var,
            lambda c: base.format_element(base.el(c)),
            lambda c: not any(c),
            lambda c: base.el(c) == base.one,
        )


# ---------------------------------------------------------------- opposite


class OppositeRing(LocalRing):
    """Same element set as the wrapped ring, multiplication reversed."""

    def __init__(self, base):
        super().__init__(base.spec)
        self.base_ring = base
        self.family = base.family
        self.is_finite = base.is_finite
        self.is_commutative = base.is_commutative
        self.zero = base.zero
        self.one = base.one

    @property
    def element_ring(self):
        return self.base_ring

    def el(self, payload):
        return self.base_ring.el(payload)

    def from_int(self, v):
        return self.base_ring.from_int(v)

    def add(self, a, b):
        return self.base_ring.add(a, b)

    def neg(self, a):
        return self.base_ring.neg(a)

    def sub(self, a, b):
        return self.base_ring.sub(a, b)

    def mul(self, a, b):
        return self.base_ring.mul(b, a)

    def is_unit(self, a):
        return self.base_ring.is_unit(a)

    def in_radical(self, a):
        return self.base_ring.in_radical(a)

    def invert(self, a):
        # two-sided inverses agree with the base ring's
        return self.base_ring.invert(a)

    def residue_view(self):
        return self.base_ring.residue_view()

    def radical_index(self):
        return self.base_ring.radical_index()

    def size(self):
        return self.base_ring.size()

    def _all_payloads(self):
        return self.base_ring._all_payloads()

    def opposite(self):
        return self.base_ring

    def spec_string(self):
        return f"op({self.base_ring.spec_string()})"

    def format_element(self, a):
        return self.base_ring.format_element(a)
