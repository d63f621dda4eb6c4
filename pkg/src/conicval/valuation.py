"""Discrete rank-1 valuations on the supported base fields.

Three kinds are provided, each normalized so the value group is Z:

* the p-adic valuation on Q for an odd prime p,
* the place of k(t) at a monic irreducible pi (for k = Q only degree-1
  places are allowed, so that the residue field stays Q),
* the infinite place of k(t), v = -deg, with uniformizer 1/t.

Every valuation is nondyadic by construction: v(2) = 0 always holds, since
p = 2 and characteristic-2 coefficient fields are rejected.

All residue fields are presented through the fields module (F_p[u]/(m) or Q),
so downstream code has a single representation to handle; residue fields of
higher-degree places over non-prime constant fields are flattened.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from .errors import (ContextMismatch, NegativeValue, UnsupportedField,
                     UnsupportedPlace, ZeroInput)
from .fields import (FF, FlatQuotient, FunctionField, Poly, QQ, RationalField,
                     RatFunc)
from .value import INFINITY, Value


class Valuation:
    """Common interface: value_of, residue_of, unit_part, lift."""

    base = None            # field context of the domain
    residue_field = None   # field context kappa
    uniformizer = None     # canonical uniformizer, an element of the domain

    @property
    def domain(self):
        return self.base

    def value_of(self, x) -> Value:
        raise NotImplementedError

    def residue_of(self, x):
        raise NotImplementedError

    def unit_part(self, x):
        """Write x = pi^m * u exactly, with v(u) = 0; returns (m, u)."""
        if isinstance(x, int):
            x = self.base.coerce(x)
        if not x:
            raise ZeroInput("unit part of zero")
        m = self.value_of(x).fraction
        assert m.denominator == 1
        m = int(m)
        u = x * self.uniformizer ** (-m) if m else x
        return m, u

    def lift(self, r):
        """Canonical section kappa -> domain of the residue map."""
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.describe()


class PAdicValuation(Valuation):
    """The p-adic valuation on Q, p an odd prime."""

    def __init__(self, p: int):
        if p == 2:
            raise UnsupportedPlace("dyadic valuations are excluded (v(2) = 0 "
                                   "is a standing hypothesis)")
        if not sympy.isprime(p):
            raise UnsupportedPlace(f"{p} is not prime")
        self.p = p
        self.base = QQ
        self.residue_field = FF(p, _validate=False)
        self.uniformizer = Fraction(p)

    def value_of(self, x) -> Value:
        x = self.base.coerce(x)
        if not x:
            return INFINITY
        return Value(_int_order(x.numerator, self.p)
                     - _int_order(x.denominator, self.p))

    def residue_of(self, x):
        x = self.base.coerce(x)
        v = self.value_of(x)
        if v < 0:
            raise NegativeValue(f"v({x}) = {v} < 0")
        if v.is_infinite or v > 0:
            return self.residue_field.zero()
        return self.residue_field.from_int(
            x.numerator * pow(x.denominator, -1, self.p))

    def lift(self, r) -> Fraction:
        r = self.residue_field.coerce(r)
        return Fraction(r.lift_int())

    def describe(self) -> str:
        return f"Q:p={self.p}"

    def __eq__(self, other):
        return isinstance(other, PAdicValuation) and other.p == self.p

    def __hash__(self):
        return hash(("padic", self.p))


def _int_order(n: int, p: int) -> int:
    if n == 0:
        raise ZeroInput("order of zero")
    m = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        m += 1
    return m


class PlaceValuation(Valuation):
    """The place of k(t) at a monic irreducible polynomial pi."""

    def __init__(self, base: FunctionField, pi: Poly):
        k = base.coefficient_field
        if pi.ring != base.ring:
            raise ContextMismatch("place polynomial is not over the base field")
        if pi.degree() < 1:
            raise UnsupportedPlace("place polynomial must be nonconstant")
        pi = pi.monic()
        self.base = base
        self.pi = pi
        self.uniformizer = base.from_poly(pi)
        self._flat = None
        if isinstance(k, RationalField):
            if pi.degree() != 1:
                raise UnsupportedPlace(
                    "only degree-1 places of Q(t) are supported (residue "
                    "fields must stay Q)")
            self.residue_field = QQ
            self._root = -pi.coeffs[0]
        elif isinstance(k, FF):
            if pi.degree() == 1:
                self.residue_field = k
                self._root = -pi.coeffs[0]
            else:
                from .fields import is_irreducible
                if not is_irreducible(pi):
                    raise UnsupportedPlace(f"{pi} is reducible, not a place")
                self._flat = FlatQuotient(k, pi)
                self.residue_field = self._flat.flat
                self._root = None
        else:
            raise UnsupportedField(f"unsupported constant field {k!r}")

    def value_of(self, x) -> Value:
        x = self.base.coerce(x)
        if not x:
            return INFINITY
        return Value(_poly_order(x.num, self.pi) - _poly_order(x.den, self.pi))

    def residue_of(self, x):
        x = self.base.coerce(x)
        v = self.value_of(x)
        if v < 0:
            raise NegativeValue(f"v({x}) = {v} < 0")
        if v.is_infinite:
            return self.residue_field.zero()
        if self._root is not None:
            return x.num(self._root) / x.den(self._root)
        nbar = self._flat.to_flat(x.num % self.pi)
        dbar = self._flat.to_flat(x.den % self.pi)
        return nbar / dbar

    def lift(self, r) -> RatFunc:
        if self._flat is not None:
            return self.base.from_poly(self._flat.from_flat(
                self.residue_field.coerce(r)))
        return self.base.coerce(self.base.ring.poly([r]))

    def describe(self) -> str:
        k = self.base.coefficient_field
        if isinstance(k, RationalField):
            return f"Q(t):place={self.pi}"
        return f"Fq(t):q={k.order},place={self.pi}"

    def __eq__(self, other):
        return (isinstance(other, PlaceValuation) and other.base == self.base
                and other.pi == self.pi)

    def __hash__(self):
        return hash(("place", self.base, self.pi))


def _poly_order(f: Poly, pi: Poly) -> int:
    if not f:
        raise ZeroInput("order of the zero polynomial")
    m = 0
    while True:
        q, r = divmod(f, pi)
        if r:
            return m
        m += 1
        f = q


class InfinitePlaceValuation(Valuation):
    """The degree valuation v = deg(den) - deg(num) on k(t), uniformizer 1/t."""

    def __init__(self, base: FunctionField):
        k = base.coefficient_field
        if not isinstance(k, (RationalField, FF)):
            raise UnsupportedField(f"unsupported constant field {k!r}")
        self.base = base
        self.residue_field = k
        self.uniformizer = RatFunc(base, base.ring.one(), base.ring.gen())

    def value_of(self, x) -> Value:
        x = self.base.coerce(x)
        if not x:
            return INFINITY
        return Value(x.den.degree() - x.num.degree())

    def residue_of(self, x):
        x = self.base.coerce(x)
        v = self.value_of(x)
        if v < 0:
            raise NegativeValue(f"v({x}) = {v} < 0")
        if v.is_infinite or v > 0:
            k = self.base.coefficient_field
            return k.zero()
        return x.num.leading() / x.den.leading()

    def lift(self, r) -> RatFunc:
        return self.base.coerce(self.base.ring.poly([r]))

    def describe(self) -> str:
        k = self.base.coefficient_field
        if isinstance(k, RationalField):
            return "Q(t):place=inf"
        return f"Fq(t):q={k.order},place=inf"

    def __eq__(self, other):
        return isinstance(other, InfinitePlaceValuation) and other.base == self.base

    def __hash__(self):
        return hash(("infplace", self.base))
