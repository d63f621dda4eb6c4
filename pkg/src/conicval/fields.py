"""Exact arithmetic for all coefficient domains.

Four element kinds are supported:

* arbitrary-precision rationals (plain ``fractions.Fraction`` values),
* elements of odd-characteristic finite fields F_p[u]/(m(u)),
* dense univariate polynomials over any supported field,
* rational functions in canonical form (coprime, monic denominator).

Field contexts (``QQ``, ``FF``, ``FunctionField``) carry construction helpers
and make mixed-context mistakes detectable.  Everything is immutable and all
operations are pure, so values can be shared freely across threads.

Finite fields are always presented as F_p[u]/(m); the prime field is the
degree-1 case with m = u, so residue-field code has a single representation
to deal with.
"""

from __future__ import annotations

import math
from fractions import Fraction

import sympy

from .errors import (ContextMismatch, DegreeTooLarge, DivisionByZero,
                     SquareInput, UnsupportedField, ZeroInput, ZeroPolynomial)

# ---------------------------------------------------------------------------
# integer polynomials modulo p (internal helpers for FFElement arithmetic)
# ---------------------------------------------------------------------------


def _ip_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _ip_add(a, b, p):
    n = max(len(a), len(b))
    return _ip_trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                     for i in range(n)])


def _ip_sub(a, b, p):
    n = max(len(a), len(b))
    return _ip_trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                     for i in range(n)])


def _ip_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ip_trim(out)


def _ip_divmod(a, b, p):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    rem = list(a)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    while len(rem) >= len(b) and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(b):
            break
        k = len(rem) - len(b)
        c = (rem[-1] * inv_lead) % p
        quo[k] = c
        for j, bj in enumerate(b):
            rem[k + j] = (rem[k + j] - c * bj) % p
    return _ip_trim(quo), _ip_trim(rem)


def _ip_mod(a, b, p):
    return _ip_divmod(a, b, p)[1]


def _ip_xgcd(a, b, p):
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = _ip_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _ip_sub(s0, _ip_mul(q, s1, p), p)
        t0, t1 = t1, _ip_sub(t0, _ip_mul(q, t1, p), p)
    if r0:
        inv = pow(r0[-1], -1, p)
        r0 = _ip_mul(r0, (inv,), p)
        s0 = _ip_mul(s0, (inv,), p)
        t0 = _ip_mul(t0, (inv,), p)
    return r0, s0, t0


def _ip_pow_mod(a, e, mod, p):
    result = (1,)
    base = _ip_mod(a, mod, p)
    while e:
        if e & 1:
            result = _ip_mod(_ip_mul(result, base, p), mod, p)
        base = _ip_mod(_ip_mul(base, base, p), mod, p)
        e >>= 1
    return result


def _ip_gcd(a, b, p):
    while b:
        a, b = b, _ip_mod(a, b, p)
    if a:
        a = _ip_mul(a, (pow(a[-1], -1, p),), p)
    return a


def _ip_is_irreducible(m, p):
    """Rabin's test for a monic polynomial over F_p given as an int tuple."""
    n = len(m) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    x = (0, 1)
    # x^(p^n) == x mod m, and gcd(x^(p^(n/r)) - x, m) == 1 for prime r | n
    for r in _prime_divisors(n):
        h = _ip_sub(_ip_pow_mod(x, p ** (n // r), m, p), x, p)
        if len(_ip_gcd(h, m, p)) > 1:
            return False
    return _ip_pow_mod(x, p ** n, m, p) == x


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# field contexts
# ---------------------------------------------------------------------------


class RationalField:
    """The field of rational numbers; elements are fractions.Fraction."""

    characteristic = 0

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def contains(self, x) -> bool:
        return isinstance(x, (Fraction, int))

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise ContextMismatch(f"{x!r} is not a rational number")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "Q"


QQ = RationalField()


class FF:
    """Finite field F_p[u]/(m(u)) with p an odd prime and m monic irreducible.

    The prime field is the degree-1 case with m = u.  Elements are coefficient
    vectors of length deg(m) with entries reduced modulo p.
    """

    def __init__(self, p: int, modulus: tuple[int, ...] | None = None,
                 var: str = "u", _validate: bool = True):
        if p == 2:
            raise UnsupportedField("characteristic 2 is not supported")
        if _validate and not sympy.isprime(p):
            raise UnsupportedField(f"{p} is not prime")
        if modulus is None:
            modulus = (0, 1)
        modulus = _ip_trim([c % p for c in modulus])
        if len(modulus) < 2:
            raise UnsupportedField("modulus must have degree >= 1")
        if modulus[-1] != 1:
            raise UnsupportedField("modulus must be monic")
        if _validate and len(modulus) > 2 and not _ip_is_irreducible(modulus, p):
            raise UnsupportedField(f"modulus {modulus} is reducible mod {p}")
        self.p = p
        self.modulus = modulus
        self.var = var
        self.degree = len(modulus) - 1
        self.order = p ** self.degree
        self._sqrt_table = None

    @property
    def characteristic(self) -> int:
        return self.p

    def element(self, coeffs) -> "FFElement":
        c = [x % self.p for x in coeffs]
        if len(c) > self.degree:
            c = list(_ip_mod(tuple(c), self.modulus, self.p))
        c += [0] * (self.degree - len(c))
        return FFElement(self, tuple(c))

    def from_int(self, n: int) -> "FFElement":
        return self.element([n])

    def zero(self) -> "FFElement":
        return self.element([0])

    def one(self) -> "FFElement":
        return self.element([1])

    def gen(self) -> "FFElement":
        """The class of u; zero in the prime field (where m = u)."""
        return self.element([0, 1]) if self.degree > 1 else self.zero()

    def element_at(self, index: int) -> "FFElement":
        digits = []
        for _ in range(self.degree):
            index, r = divmod(index, self.p)
            digits.append(r)
        return FFElement(self, tuple(digits))

    def elements(self):
        for i in range(self.order):
            yield self.element_at(i)

    def nonzero_elements(self):
        for x in self.elements():
            if x:
                yield x

    def contains(self, x) -> bool:
        return isinstance(x, FFElement) and x.field == self

    def coerce(self, x) -> "FFElement":
        if isinstance(x, FFElement):
            if x.field != self:
                raise ContextMismatch(f"{x!r} lies in {x.field!r}, not {self!r}")
            return x
        if isinstance(x, int):
            return self.from_int(x)
        raise ContextMismatch(f"cannot interpret {x!r} in {self!r}")

    def _sqrt_map(self):
        if self._sqrt_table is None:
            table = {}
            for y in self.elements():
                table.setdefault(y * y, y)
            self._sqrt_table = table
        return self._sqrt_table

    def __eq__(self, other):
        return (isinstance(other, FF) and other.p == self.p
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        if self.degree == 1:
            return f"GF({self.p})"
        m = " + ".join(_int_poly_terms(self.modulus, self.var))
        return f"GF({self.p})[{self.var}]/({m})"


def _int_poly_terms(coeffs, var):
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        elif k == 1:
            terms.append(var if c == 1 else f"{c}*{var}")
        else:
            terms.append(f"{var}^{k}" if c == 1 else f"{c}*{var}^{k}")
    return terms or ["0"]


class FFElement:
    """Element of a finite field, stored as a reduced coefficient vector."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FF, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def _other(self, other):
        if isinstance(other, FFElement):
            if other.field != self.field:
                raise ContextMismatch("finite field contexts differ")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FFElement(self.field, tuple((a + b) % p
                                           for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FFElement(self.field, tuple((a - b) % p
                                           for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        f = self.field
        prod = _ip_mod(_ip_mul(_ip_trim(list(self.coeffs)),
                               _ip_trim(list(o.coeffs)), f.p), f.modulus, f.p)
        return f.element(prod)

    __rmul__ = __mul__

    def inverse(self) -> "FFElement":
        if not self:
            raise DivisionByZero("inverse of zero in finite field")
        f = self.field
        g, s, _ = _ip_xgcd(_ip_trim(list(self.coeffs)), f.modulus, f.p)
        if g != (1,):
            raise DivisionByZero("element not invertible (modulus reducible?)")
        return f.element(s)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        f = self.field
        out = _ip_pow_mod(_ip_trim(list(self.coeffs)), e, f.modulus, f.p)
        return f.element(out)

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.field.from_int(other)
        return (isinstance(other, FFElement) and other.field == self.field
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def lift_int(self) -> int:
        """Integer representative in [0, p); only for prime-field elements."""
        if self.field.degree != 1:
            raise UnsupportedField("lift_int needs a prime-field element")
        return self.coeffs[0]

    def __repr__(self):
        return str(self)

    def __str__(self):
        if self.field.degree == 1:
            return str(self.coeffs[0])
        terms = _int_poly_terms(_ip_trim(list(self.coeffs)), self.field.var)
        return " + ".join(terms)


def GF(q: int, var: str = "u") -> FF:
    """Finite field of order q = p^d with the canonical modulus."""
    p, d = _split_prime_power(q)
    return FF(p, canonical_modulus(p, d), var=var, _validate=False)


def _split_prime_power(q: int) -> tuple[int, int]:
    for p in range(3, q + 1, 2):
        if q % p == 0:
            if not sympy.isprime(p):
                break
            d = 0
            m = q
            while m % p == 0:
                m //= p
                d += 1
            if m != 1:
                break
            return p, d
    raise UnsupportedField(f"{q} is not an odd prime power")


_CANONICAL_MODULI: dict[tuple[int, int], tuple[int, ...]] = {}


def canonical_modulus(p: int, d: int) -> tuple[int, ...]:
    """First monic irreducible of degree d over F_p in index order."""
    if d == 1:
        return (0, 1)
    key = (p, d)
    if key not in _CANONICAL_MODULI:
        for index in range(p ** d):
            digits = []
            i = index
            for _ in range(d):
                i, r = divmod(i, p)
                digits.append(r)
            m = tuple(digits) + (1,)
            if _ip_is_irreducible(m, p):
                _CANONICAL_MODULI[key] = m
                break
    return _CANONICAL_MODULI[key]


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


class PolyRing:
    """Univariate polynomial ring over a field context."""

    def __init__(self, field, var: str):
        self.field = field
        self.var = var

    def poly(self, coeffs) -> "Poly":
        cs = [self.field.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        return Poly(self, tuple(cs))

    def zero(self) -> "Poly":
        return Poly(self, ())

    def one(self) -> "Poly":
        return self.poly([1])

    def gen(self) -> "Poly":
        return self.poly([0, 1])

    def from_int(self, n: int) -> "Poly":
        return self.poly([n])

    def contains(self, x) -> bool:
        return isinstance(x, Poly) and x.ring == self

    def coerce(self, x) -> "Poly":
        if isinstance(x, Poly):
            if x.ring != self:
                raise ContextMismatch("polynomial rings differ")
            return x
        return self.poly([x])

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and other.field == self.field
                and other.var == self.var)

    def __hash__(self):
        return hash((self.field, self.var))

    def __repr__(self):
        return f"{self.field!r}[{self.var}]"


class Poly:
    """Dense univariate polynomial; coefficients stored lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: PolyRing, coeffs: tuple):
        self.ring = ring
        self.coeffs = coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.field.one()

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.ring.field.one()

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lead = self.coeffs[-1]
        if lead == self.ring.field.one():
            return self
        inv = self.ring.field.one() / lead
        return Poly(self.ring, tuple(c * inv for c in self.coeffs))

    def _other(self, other):
        if isinstance(other, Poly) and other.ring == self.ring:
            return other
        try:
            return self.ring.poly([other])
        except ContextMismatch:
            return None

    def _promote_into(self, other):
        ctx = None
        if isinstance(other, RatFunc):
            ctx = other.field
        elif isinstance(other, Poly):
            ctx = other.ring
        if ctx is None:
            return None
        try:
            return ctx.coerce(self)
        except ContextMismatch:
            return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            p = self._promote_into(other)
            return NotImplemented if p is None else p + other
        a, b = self.coeffs, o.coeffs
        n = max(len(a), len(b))
        zero = self.ring.field.zero()
        cs = [(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero)
              for i in range(n)]
        while cs and not cs[-1]:
            cs.pop()
        return Poly(self.ring, tuple(cs))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            p = self._promote_into(other)
            return NotImplemented if p is None else p - other
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Poly(self.ring, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            p = self._promote_into(other)
            return NotImplemented if p is None else p * other
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return self.ring.zero()
        zero = self.ring.field.zero()
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
        while out and not out[-1]:
            out.pop()
        return Poly(self.ring, tuple(out))

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = self.ring.field.coerce(c)
        cs = [a * c for a in self.coeffs]
        while cs and not cs[-1]:
            cs.pop()
        return Poly(self.ring, tuple(cs))

    def __divmod__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not o.coeffs:
            raise DivisionByZero("polynomial division by zero")
        inv_lead = self.ring.field.one() / o.coeffs[-1]
        rem = list(self.coeffs)
        zero = self.ring.field.zero()
        quo = [zero] * max(len(rem) - len(o.coeffs) + 1, 0)
        while len(rem) >= len(o.coeffs):
            if not rem[-1]:
                rem.pop()
                continue
            k = len(rem) - len(o.coeffs)
            c = rem[-1] * inv_lead
            quo[k] = c
            for j, bj in enumerate(o.coeffs):
                rem[k + j] = rem[k + j] - c * bj
            rem.pop()
        while rem and not rem[-1]:
            rem.pop()
        return Poly(self.ring, tuple(quo)), Poly(self.ring, tuple(rem))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return other.ring == self.ring and other.coeffs == self.coeffs
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __call__(self, x0):
        """Evaluate by Horner's rule at any value with compatible arithmetic."""
        if not self.coeffs:
            return x0 * 0
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x0 + c
        return acc

    def derivative(self) -> "Poly":
        cs = [self.coeffs[k] * k for k in range(1, len(self.coeffs))]
        while cs and not cs[-1]:
            cs.pop()
        return Poly(self.ring, tuple(cs))

    def subs_neg(self) -> "Poly":
        """The polynomial p(-X)."""
        return Poly(self.ring, tuple(-c if k % 2 else c
                                     for k, c in enumerate(self.coeffs)))

    def even_part(self) -> "Poly":
        """q with p(X) = q(X^2) + X * (odd part)(X^2)."""
        return self.ring.poly(list(self.coeffs[0::2]))

    def odd_part(self) -> "Poly":
        return self.ring.poly(list(self.coeffs[1::2]))

    def __repr__(self):
        return str(self)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            cs = str(c)
            if k == 0:
                terms.append(_paren(cs))
                continue
            xs = self.ring.var if k == 1 else f"{self.ring.var}^{k}"
            if cs == "1":
                terms.append(xs)
            elif cs == "-1":
                terms.append(f"-{xs}")
            else:
                terms.append(f"{_paren(cs)}*{xs}")
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def _paren(s: str) -> str:
    if any(op in s for op in (" ", "+", "/")) or ("-" in s[1:]):
        return f"({s})"
    return s


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, 0) is an error."""
    if not f and not g:
        raise ZeroPolynomial("gcd(0, 0) is undefined")
    if isinstance(f.ring.field, FunctionField):
        return _tower_gcd(f, g)
    a, b = f, g
    while b:
        a, b = b, a % b
    return a.monic()


def _tower_gcd(f: Poly, g: Poly) -> Poly:
    """gcd of polynomials whose coefficients are rational functions.

    Plain Euclid explodes here (each division step roughly squares the
    coefficient sizes), so clear denominators and run a primitive
    pseudo-remainder sequence over k[t], stripping content at every step.
    """
    F = _clear_primitive(f)
    G = _clear_primitive(g)
    if F is None:
        return g.monic() if g else g
    if G is None:
        return f.monic()
    if len(F) < len(G):
        F, G = G, F
    while True:
        R = _prem(F, G)
        if not R:
            break
        F, G = G, _primitive(R)
        if len(G) == 1:
            break
    if len(G) == 1:
        return f.ring.one()
    kt = f.ring.field.ring
    result = f.ring.poly([f.ring.field.from_poly(c) for c in G])
    return result.monic()


def _clear_primitive(f: Poly):
    """Coefficient list over k[t] of f with denominators cleared and content
    removed; None for the zero polynomial."""
    if not f:
        return None
    kt = f.ring.field.ring
    lcm = kt.one()
    for c in f.coeffs:
        if c:
            g = poly_gcd(lcm, c.den)
            lcm = lcm * (c.den // g)
    coeffs = [(c.num * (lcm // c.den)) if c else kt.zero() for c in f.coeffs]
    return _primitive(coeffs)


def _primitive(coeffs):
    """Divide a k[t]-coefficient list by the gcd of its entries (made monic)."""
    content = None
    for c in coeffs:
        if c:
            content = c if content is None else poly_gcd(content, c)
            if content.degree() == 0:
                content = None
                break
    if content is not None and content.degree() > 0:
        coeffs = [c // content if c else c for c in coeffs]
    # normalize the leading coefficient to be monic for determinism
    lead = coeffs[-1]
    if lead and not lead.is_monic():
        inv = lead.ring.field.one() / lead.leading()
        coeffs = [c.scale(inv) if c else c for c in coeffs]
    return coeffs


def _prem(F, G):
    """Pseudo-remainder of coefficient lists over k[t] (lowest degree first)."""
    dF, dG = len(F) - 1, len(G) - 1
    if dF < dG:
        return list(F)
    lcG = G[-1]
    R = list(F)
    for _ in range(dF - dG + 1):
        if len(R) < len(G):
            break
        lcR = R[-1]
        R = [c * lcG for c in R[:-1]]
        if lcR:
            for j in range(dG):
                R[len(R) - dG + j] = R[len(R) - dG + j] - lcR * G[j]
        while R and not R[-1]:
            R.pop()
    return R


def poly_xgcd(f: Poly, g: Poly):
    """Returns (d, s, t) with s*f + t*g = d, d monic."""
    ring = f.ring
    r0, r1 = f, g
    s0, s1 = ring.one(), ring.zero()
    t0, t1 = ring.zero(), ring.one()
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        raise ZeroPolynomial("xgcd(0, 0) is undefined")
    inv = ring.field.one() / r0.leading()
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class FunctionField:
    """Field of rational functions over a coefficient field context."""

    def __init__(self, field, var: str):
        self.ring = PolyRing(field, var)
        self.var = var

    @property
    def coefficient_field(self):
        return self.ring.field

    @property
    def characteristic(self):
        return self.ring.field.characteristic

    def from_poly(self, num: Poly) -> "RatFunc":
        return RatFunc(self, num, self.ring.one(), _reduced=True)

    def ratfunc(self, num, den) -> "RatFunc":
        return RatFunc(self, self.ring.coerce(num), self.ring.coerce(den))

    def zero(self) -> "RatFunc":
        return self.from_poly(self.ring.zero())

    def one(self) -> "RatFunc":
        return self.from_poly(self.ring.one())

    def gen(self) -> "RatFunc":
        return self.from_poly(self.ring.gen())

    def from_int(self, n: int) -> "RatFunc":
        return self.from_poly(self.ring.from_int(n))

    def contains(self, x) -> bool:
        return isinstance(x, RatFunc) and x.field == self

    def coerce(self, x) -> "RatFunc":
        if isinstance(x, RatFunc) and x.field == self:
            return x
        if isinstance(x, Poly) and x.ring == self.ring:
            return self.from_poly(x)
        # fall through: element of the coefficient field (or coercible there)
        return self.from_poly(self.ring.poly([x]))

    def __eq__(self, other):
        return isinstance(other, FunctionField) and other.ring == self.ring

    def __hash__(self):
        return hash(("ff", self.ring))

    def __repr__(self):
        return f"{self.ring.field!r}({self.var})"


class RatFunc:
    """Rational function in canonical form: gcd(num, den) = 1, den monic.

    The canonical form is a normal form: two constructions of the same
    function produce identical representations.
    """

    __slots__ = ("field", "num", "den")

    def __init__(self, field: FunctionField, num: Poly, den: Poly,
                 _reduced: bool = False):
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not _reduced:
            if not num:
                den = field.ring.one()
            else:
                if den.degree() > 0 and num.degree() > 0:
                    g = poly_gcd(num, den)
                    if g.degree() > 0:
                        num = num // g
                        den = den // g
                lead = den.leading()
                if lead != field.ring.field.one():
                    inv = field.ring.field.one() / lead
                    num = num.scale(inv)
                    den = den.scale(inv)
        self.field = field
        self.num = num
        self.den = den

    def _other(self, other):
        if isinstance(other, RatFunc) and other.field == self.field:
            return other
        if isinstance(other, Poly) and other.ring == self.field.ring:
            return self.field.from_poly(other)
        try:
            return self.field.from_poly(self.field.ring.poly([other]))
        except ContextMismatch:
            return None

    def _promote_into(self, other):
        """View self as an element of other's (larger) context, if possible.

        Needed because Python never consults reflected operators when both
        operands share a type, which happens across nested function fields."""
        ctx = None
        if isinstance(other, RatFunc):
            ctx = other.field
        elif isinstance(other, Poly):
            ctx = other.ring
        if ctx is None:
            return None
        try:
            return ctx.coerce(self)
        except ContextMismatch:
            return None

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            p = self._promote_into(other)
            return NotImplemented if p is None else p + other
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.field, self.num + o.num, self.den, _reduced=True)
        return RatFunc(self.field, self.num * o.den + o.num * self.den,
                       self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            p = self._promote_into(other)
            return NotImplemented if p is None else p - other
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RatFunc(self.field, -self.num, self.den, _reduced=True)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            p = self._promote_into(other)
            return NotImplemented if p is None else p * other
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.field, self.num * o.num, self.den, _reduced=True)
        return RatFunc(self.field, self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            p = self._promote_into(other)
            return NotImplemented if p is None else p / other
        if not o.num:
            raise DivisionByZero("division by the zero rational function")
        return RatFunc(self.field, self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o / self

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise DivisionByZero("inverse of zero")
        return RatFunc(self.field, self.den, self.num)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.field, self.num ** e, self.den ** e, _reduced=True)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return (other.field == self.field and other.num == self.num
                    and other.den == self.den)
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self == o

    def __hash__(self):
        return hash((self.field, self.num, self.den))

    def __call__(self, x0):
        """Substitute x0 (any compatible value) for the variable."""
        num = self.num(x0)
        den = self.den(x0)
        if isinstance(num, Poly) or isinstance(den, Poly):
            raise ContextMismatch("substitute a value, not a bare polynomial")
        return num / den

    def degree(self) -> int:
        """max(deg num, deg den); the degree of the map P^1 -> P^1."""
        return max(self.num.degree(), self.den.degree())

    def __repr__(self):
        return str(self)

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"


# ---------------------------------------------------------------------------
# the four-operation entry point used by the CLI
# ---------------------------------------------------------------------------


def infer_context(x):
    if isinstance(x, (Fraction, int)):
        return QQ
    if isinstance(x, FFElement):
        return x.field
    if isinstance(x, RatFunc):
        return x.field
    if isinstance(x, Poly):
        return x.ring
    raise ContextMismatch(f"no field context for {x!r}")


def field_arith(a, b, op: str):
    """Apply one of add/sub/mul/div with explicit context checking."""
    ca, cb = infer_context(a), infer_context(b)
    if ca != cb and not isinstance(a, int) and not isinstance(b, int):
        raise ContextMismatch(f"operands live in {ca!r} and {cb!r}")
    ctx = ca if not isinstance(a, int) else cb
    a, b = ctx.coerce(a), ctx.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise DivisionByZero("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# squares and square classes
# ---------------------------------------------------------------------------


def is_square(x, ctx=None):
    """Decide x in K*^2; returns (flag, root) with root None when not a square.

    Supported K: the rationals, finite fields, and rational function fields
    over either (squareness there reduces to squarefree decomposition plus a
    constant square test, so no factorization is needed).
    """
    if ctx is None:
        ctx = infer_context(x)
    x = ctx.coerce(x)
    if not x:
        raise ZeroInput("squareness of zero is not defined here")
    if isinstance(ctx, RationalField):
        if x < 0:
            return False, None
        rn, rd = math.isqrt(x.numerator), math.isqrt(x.denominator)
        if rn * rn == x.numerator and rd * rd == x.denominator:
            return True, Fraction(rn, rd)
        return False, None
    if isinstance(ctx, FF):
        if x ** ((ctx.order - 1) // 2) == ctx.one():
            return True, ctx._sqrt_map()[x]
        return False, None
    if isinstance(ctx, FunctionField):
        return _ratfunc_square(x)
    raise UnsupportedField(f"squareness is not decidable over {ctx!r}")


def _ratfunc_square(x: RatFunc):
    ring = x.field.ring
    cf = ring.field
    parts = []
    const = cf.one()
    for poly, inverted in ((x.num, False), (x.den, True)):
        if poly.degree() == 0:
            c = poly.coeffs[0]
            const = const / c if inverted else const * c
            continue
        lead = poly.leading()
        const = const / lead if inverted else const * lead
        for g, m in squarefree_decomposition(poly.monic())[1]:
            if m % 2 == 1:
                return False, None
            parts.append((g, -m // 2 if inverted else m // 2))
    ok, croot = is_square(const, cf)
    if not ok:
        return False, None
    root = x.field.coerce(croot)
    for g, e in parts:
        root = root * x.field.from_poly(g) ** e
    return True, root


def sqrt_exact(x, ctx=None):
    ok, root = is_square(x, ctx)
    if not ok:
        raise ZeroInput(f"{x} is not a square")
    return root


def square_class_reduce(x, ctx=None):
    """Write x = r * s^2 with r the canonical square-class representative.

    Over Q the representative is the squarefree integer with the sign of x;
    over a finite field it is 1 or the first nonsquare in index order; over
    k(t) it is the product of the odd-multiplicity squarefree parts of the
    numerator and denominator times the representative of the leftover
    constant.  Returns (r, s).
    """
    if ctx is None:
        ctx = infer_context(x)
    x = ctx.coerce(x)
    if not x:
        raise ZeroInput("square class of zero is not defined")
    if isinstance(ctx, RationalField):
        r = 1
        for prime, e in sympy.factorint(x.numerator * x.denominator).items():
            if prime == -1:
                r = -r
            elif e % 2 == 1:
                r *= int(prime)
        r = Fraction(r)
        return r, sqrt_exact(x / r, ctx)
    if isinstance(ctx, FF):
        ok, root = is_square(x, ctx)
        if ok:
            return ctx.one(), root
        c0 = _canonical_nonsquare(ctx)
        return c0, sqrt_exact(x / c0, ctx)
    if isinstance(ctx, FunctionField):
        kernel = ctx.one()
        s = ctx.one()
        for poly, inverted in ((x.num, False), (x.den, True)):
            if poly.degree() > 0:
                for g, m in squarefree_decomposition(poly.monic())[1]:
                    gf = ctx.from_poly(g)
                    if m % 2 == 1:
                        kernel = kernel * gf
                    half = m // 2
                    s = s * gf ** (-half if inverted else half)
                    if m % 2 == 1 and inverted:
                        # 1/g = g/g^2: kernel got g, compensate inside s
                        s = s / gf
        c = x / (kernel * s * s)
        assert c.num.degree() == 0 and c.den.is_one(), "square-class residue not constant"
        c_red, c_s = square_class_reduce(c.num.coeffs[0], ctx.coefficient_field)
        r = kernel * ctx.coerce(c_red)
        s = s * ctx.coerce(c_s)
        assert r * s * s == x
        return r, s
    raise UnsupportedField(f"square classes are not supported over {ctx!r}")


def _canonical_nonsquare(ctx: FF):
    for y in ctx.nonzero_elements():
        if not is_square(y, ctx)[0]:
            return y
    raise UnsupportedField("no nonsquare found (field of characteristic 2?)")


# ---------------------------------------------------------------------------
# squarefree decomposition and factorization
# ---------------------------------------------------------------------------


def squarefree_decomposition(f: Poly):
    """Yun decomposition valid in characteristic 0 and odd characteristic p.

    Returns (lead, [(g_i, m_i)]) with f = lead * prod g_i^{m_i}, the g_i monic,
    squarefree and pairwise coprime, listed with increasing multiplicity.
    """
    if not f:
        raise ZeroPolynomial("squarefree decomposition of zero")
    lead = f.leading()
    f = f.monic()
    if f.degree() == 0:
        return lead, []
    parts = _squarefree_monic(f)
    merged: dict[int, Poly] = {}
    for g, m in parts:
        merged[m] = merged[m] * g if m in merged else g
    return lead, [(g, m) for m, g in sorted(merged.items())]


def _squarefree_monic(f: Poly):
    p = f.ring.field.characteristic
    fp = f.derivative()
    if not fp:
        # f is a p-th power: take the p-th root coefficientwise
        root = _poly_pth_root(f)
        return [(g, m * p) for g, m in _squarefree_monic(root)]
    out = []
    c = poly_gcd(f, fp)
    w = f // c
    i = 1
    while w.degree() > 0:
        y = poly_gcd(w, c)
        z = w // y
        if z.degree() > 0:
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if c.degree() > 0:
        root = _poly_pth_root(c)
        out.extend((g, m * p) for g, m in _squarefree_monic(root))
    return out


def _poly_pth_root(f: Poly) -> Poly:
    """p-th root of a polynomial of the form g(X)^p = h(X^p) in char p."""
    p = f.ring.field.characteristic
    if p == 0:
        raise ZeroPolynomial("polynomial with zero derivative in char 0?")
    coeffs = []
    for k in range(0, f.degree() + 1, p):
        c = f.coeffs[k]
        coeffs.append(_ff_pth_root(c))
    for k in range(len(f.coeffs)):
        if k % p and f.coeffs[k]:
            raise ZeroPolynomial("polynomial is not a p-th power")
    return f.ring.poly(coeffs)


def _ff_pth_root(c):
    if isinstance(c, FFElement):
        d = c.field.degree
        return c ** (c.field.p ** (d - 1)) if d > 1 else c
    raise UnsupportedField("p-th roots only implemented over finite fields")


def is_irreducible(f: Poly) -> bool:
    if not f:
        raise ZeroPolynomial("irreducibility of the zero polynomial")
    field = f.ring.field
    if isinstance(field, FF):
        return _is_irreducible_ff(f)
    if isinstance(field, RationalField):
        if f.degree() < 1:
            return False
        _, facs = factor(f)
        return len(facs) == 1 and facs[0][1] == 1
    raise UnsupportedField(f"irreducibility not supported over {field!r}")


def _is_irreducible_ff(f: Poly) -> bool:
    n = f.degree()
    if n <= 0:
        return False
    if n == 1:
        return True
    field = f.ring.field
    q = field.order
    f = f.monic()
    x = f.ring.gen()
    for r in _prime_divisors(n):
        h = _poly_pow_mod(x, q ** (n // r), f) - x
        if not h or poly_gcd(h, f).degree() > 0:
            return False
    return _poly_pow_mod(x, q ** n, f) == x % f


def _poly_pow_mod(base: Poly, e: int, mod: Poly) -> Poly:
    result = base.ring.one()
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def factor(f: Poly):
    """Factor into monic irreducibles: returns (lead, [(g_i, m_i)]).

    Over finite fields any order is supported.  Over Q the computation is
    delegated to sympy and restricted to degree <= 8, which covers the
    square-class normalizations this package needs.
    """
    if not f:
        raise ZeroPolynomial("factorization of the zero polynomial")
    field = f.ring.field
    if isinstance(field, FF):
        return _factor_ff(f)
    if isinstance(field, RationalField):
        return _factor_rational(f)
    raise UnsupportedField(f"factorization not supported over {field!r}")


def _factor_ff(f: Poly):
    lead = f.leading()
    f = f.monic()
    out: dict[Poly, int] = {}
    _, parts = squarefree_decomposition(f)
    for g, m in parts:
        for h in _factor_ff_squarefree(g):
            out[h] = out.get(h, 0) + m
    facs = sorted(out.items(), key=lambda it: (it[0].degree(), _poly_index(it[0])))
    return lead, facs


def _poly_index(g: Poly):
    field = g.ring.field
    idx = []
    for c in g.coeffs:
        if isinstance(c, FFElement):
            v = 0
            for a in reversed(c.coeffs):
                v = v * c.field.p + a
            idx.append(v)
        else:
            idx.append(c)
    return tuple(idx)


def _factor_ff_squarefree(g: Poly) -> list[Poly]:
    """Irreducible factors of a monic squarefree polynomial over a finite field.

    Divisors are searched in ascending degree, so the first hit is always
    irreducible; Rabin's test short-circuits the common irreducible case.
    """
    factors = []
    ring = g.ring
    field = ring.field
    while g.degree() > 0:
        if _is_irreducible_ff(g):
            factors.append(g)
            break
        found = None
        for k in range(1, g.degree() // 2 + 1):
            for index in range(field.order ** k):
                coeffs = []
                i = index
                for _ in range(k):
                    i, r = divmod(i, field.order)
                    coeffs.append(field.element_at(r))
                h = ring.poly(coeffs + [field.one()])
                if not g % h:
                    found = h
                    break
            if found is not None:
                break
        assert found is not None, "reducible polynomial without small divisor"
        factors.append(found)
        g = g // found
    return factors


def _factor_rational(f: Poly):
    if f.degree() > 8:
        raise DegreeTooLarge(
            f"factorization over Q limited to degree 8 (got {f.degree()})")
    lead = f.leading()
    if f.degree() == 0:
        return lead, []
    x = sympy.Symbol(f.ring.var)
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** k
               for k, c in enumerate(f.coeffs))
    const, facs = sympy.factor_list(expr)
    out = []
    total = Fraction(const.p, const.q)
    for poly, mult in facs:
        coeffs = [Fraction(c.p, c.q) for c in
                  reversed(sympy.Poly(poly, x).all_coeffs())]
        g = f.ring.poly(coeffs)
        total *= Fraction(g.leading()) ** mult
        out.append((g.monic(), mult))
    out.sort(key=lambda it: (it[0].degree(), it[0].coeffs))
    assert total == lead
    return lead, out


# ---------------------------------------------------------------------------
# flattening of finite-field quotients F_q[t]/(pi) to the F_p[u]/(m) shape
# ---------------------------------------------------------------------------


class FlatQuotient:
    """Isomorphism between F_q[t]/(pi) and its flat presentation F_p[u]/(m).

    ``to_flat`` maps a polynomial over F_q of degree < deg(pi); ``from_flat``
    returns such a polynomial.  The generator is chosen deterministically as
    the first element of the quotient (in index order, starting from the
    class of t) whose powers span everything.
    """

    def __init__(self, base: FF, modulus: Poly):
        if modulus.ring.field != base:
            raise ContextMismatch("modulus is not over the base field")
        if not _is_irreducible_ff(modulus):
            raise UnsupportedField(f"{modulus} is reducible over {base!r}")
        self.base = base
        self.modulus = modulus.monic()
        self.e = modulus.degree()
        self.n = base.degree * self.e
        self.p = base.p
        self._choose_generator()

    # -- internal quotient-ring arithmetic on polys of degree < e ----------

    def _mul(self, a: Poly, b: Poly) -> Poly:
        return (a * b) % self.modulus

    def _vec(self, r: Poly) -> list[int]:
        out = []
        for k in range(self.e):
            c = r.coeffs[k] if k <= r.degree() else self.base.zero()
            out.extend(c.coeffs)
        return out

    def _element_at(self, index: int) -> Poly:
        coeffs = []
        for _ in range(self.e):
            index, r = divmod(index, self.base.order)
            coeffs.append(self.base.element_at(r))
        return self.modulus.ring.poly(coeffs)

    def _choose_generator(self):
        theta = self.modulus.ring.gen() % self.modulus
        mp = self._minimal_poly(theta)
        if mp is not None:
            self._finish(theta, mp)
            return
        for index in range(self.base.order ** self.e):
            theta = self._element_at(index)
            mp = self._minimal_poly(theta)
            if mp is not None:
                self._finish(theta, mp)
                return
        raise UnsupportedField("no primitive element found (unreachable)")

    def _minimal_poly(self, theta: Poly):
        """Monic minimal polynomial over F_p if it has full degree, else None."""
        rows: list[tuple[int, list[int], list[int]]] = []
        power = self.modulus.ring.one()
        for k in range(self.n + 1):
            vec = self._vec(power)
            combo = [0] * (self.n + 1)
            combo[k] = 1
            for pivot, rvec, rcombo in rows:
                c = vec[pivot]
                if c:
                    vec = [(a - c * b) % self.p for a, b in zip(vec, rvec)]
                    combo = [(a - c * b) % self.p for a, b in zip(combo, rcombo)]
            pivot = next((i for i, v in enumerate(vec) if v), None)
            if pivot is None:
                if k < self.n:
                    return None
                # dependency sum combo_k theta^k = 0; combo_n stayed 1
                return tuple(combo)
            inv = pow(vec[pivot], -1, self.p)
            vec = [(v * inv) % self.p for v in vec]
            combo = [(v * inv) % self.p for v in combo]
            rows.append((pivot, vec, combo))
            power = self._mul(power, theta)
        return None

    def _finish(self, theta: Poly, minpoly_coeffs):
        # minpoly_coeffs give the dependency sum c_k theta^k = 0 with c_n = 1
        self.theta = theta
        self.flat = FF(self.p, minpoly_coeffs, _validate=False)
        # basis matrix: columns are vec(theta^k); invert once modulo p
        powers = [self.modulus.ring.one()]
        for _ in range(self.n - 1):
            powers.append(self._mul(powers[-1], theta))
        self._powers = powers
        cols = [self._vec(pw) for pw in powers]
        self._binv = _matrix_inverse_mod_p(
            [[cols[j][i] for j in range(self.n)] for i in range(self.n)], self.p)

    def to_flat(self, r: Poly) -> FFElement:
        vec = self._vec(r % self.modulus)
        coords = [sum(self._binv[i][j] * vec[j] for j in range(self.n)) % self.p
                  for i in range(self.n)]
        return self.flat.element(coords)

    def from_flat(self, x: FFElement) -> Poly:
        if x.field != self.flat:
            raise ContextMismatch("element is not in the flat presentation")
        acc = self.modulus.ring.zero()
        for c, pw in zip(x.coeffs, self._powers):
            if c:
                acc = acc + pw.scale(self.base.from_int(c))
        return acc


def _matrix_inverse_mod_p(mat, p):
    n = len(mat)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] % p), None)
        if pivot is None:
            raise ZeroPolynomial("singular matrix in flattening (unreachable)")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [(v * inv) % p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [(a - c * b) % p for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def quadratic_extension_field(kappa: FF, ubar: FFElement) -> FF:
    """The field kappa(sqrt(ubar)) in flat form, for ubar a nonsquare."""
    if is_square(ubar, kappa)[0]:
        raise SquareInput("element is already a square")
    if kappa.degree == 1:
        m = ((-ubar.coeffs[0]) % kappa.p, 0, 1)
        return FF(kappa.p, m, _validate=False)
    ring = PolyRing(kappa, "t")
    flat = FlatQuotient(kappa, ring.poly([-ubar, kappa.zero(), kappa.one()]))
    return flat.flat
