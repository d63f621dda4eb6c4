"""Gauss extensions of a valuation v to the rational function field E(x).

The Gauss extension with respect to a pivot Y (a degree-1 rational function
generating E(x) over E) assigns to sum a_i Y^i the minimum of the v(a_i) and
extends to quotients by additivity.  Its residue field is kappa(Ybar) with
Ybar transcendental over kappa, and its value group is that of v.

Also here: the degree formula for subfields E(Y) of E(x), and the residue
analysis of quadratic extensions E(sqrt(a)) that drives every splitting
decision in the package.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (ConstantInput, InvalidPivot, NegativeValue, NonzeroValue,
                     SquareInput, ZeroInput)
from .fields import (FF, FunctionField, Poly, RatFunc, is_square,
                     quadratic_extension_field)
from .value import INFINITY, Value
from .valuation import Valuation


class GaussExtension:
    """The Gauss extension of ``v`` to ``pivot.field`` with respect to ``pivot``.

    Exposes the same interface as a base valuation (value_of, residue_of,
    unit_part), with residues living in kappa(Ybar).
    """

    def __init__(self, v: Valuation, pivot: RatFunc, residue_var: str | None = None):
        field = pivot.field
        if field.coefficient_field != v.base:
            raise InvalidPivot("pivot must be a rational function over the "
                               "base field of the valuation")
        deg = pivot.degree()
        if deg < 1:
            raise InvalidPivot("pivot lies in the base field")
        if deg > 1:
            raise InvalidPivot(
                f"pivot {pivot} has degree {deg} > 1; Gauss extensions are "
                "only defined on the full rational function field")
        self.v = v
        self.field = field
        self.pivot = pivot
        self._identity = (pivot == field.gen())
        if residue_var is None:
            residue_var = field.var if self._identity else "y"
        self.residue_var = residue_var
        self.residue_field = FunctionField(v.residue_field, residue_var)
        self.uniformizer = field.coerce(v.uniformizer)
        if not self._identity:
            # x = (d*Y - b)/(-c*Y + a) inverts Y = (a*x + b)/(c*x + d)
            num, den = pivot.num.coeffs, pivot.den.coeffs
            a = num[1] if len(num) > 1 else field.ring.field.zero()
            b = num[0] if len(num) > 0 else field.ring.field.zero()
            c = den[1] if len(den) > 1 else field.ring.field.zero()
            d = den[0] if len(den) > 0 else field.ring.field.zero()
            yfield = FunctionField(v.base, "_y")
            self._inverse = RatFunc(yfield, yfield.ring.poly([-b, d]),
                                    yfield.ring.poly([a, -c]))

    @property
    def base(self):
        return self.v.base

    @property
    def domain(self):
        return self.field

    def _rewrite(self, h: RatFunc) -> RatFunc:
        if self._identity:
            return h
        num = h.num(self._inverse) if h.num else self._inverse * 0
        den = h.den(self._inverse)
        return num / den

    def _min_value(self, f: Poly) -> Value:
        best = INFINITY
        for c in f.coeffs:
            if c:
                val = self.v.value_of(c)
                if val < best:
                    best = val
        return best

    def value_of(self, h) -> Value:
        h = self.field.coerce(h)
        if not h:
            return INFINITY
        h = self._rewrite(h)
        return self._min_value(h.num) - self._min_value(h.den)

    def residue_of(self, h):
        """Residue in kappa(Ybar); requires value >= 0, zero when value > 0."""
        h = self.field.coerce(h)
        val = self.value_of(h)
        if val < 0:
            raise NegativeValue(f"w({h}) = {val} < 0")
        if val.is_infinite:
            return self.residue_field.zero()
        h = self._rewrite(h)
        m = int(self._min_value(h.den).fraction)
        scale = self.v.uniformizer ** (-m) if m else None
        num = h.num.scale(scale) if scale is not None else h.num
        den = h.den.scale(scale) if scale is not None else h.den
        rnum = self.residue_field.ring.poly(
            [self.v.residue_of(c) for c in num.coeffs])
        rden = self.residue_field.ring.poly(
            [self.v.residue_of(c) for c in den.coeffs])
        return RatFunc(self.residue_field, rnum, rden)

    def unit_part(self, h):
        h = self.field.coerce(h)
        if not h:
            raise ZeroInput("unit part of zero")
        m = self.value_of(h).fraction
        assert m.denominator == 1
        m = int(m)
        u = h * self.field.coerce(self.v.uniformizer ** (-m)) if m else h
        return m, u

    def describe(self) -> str:
        return f"gauss({self.v.describe()}; pivot={self.pivot})"

    def __repr__(self):
        return self.describe()


def gauss_extension(v: Valuation, field: FunctionField,
                    residue_var: str | None = None) -> GaussExtension:
    """The plain Gauss extension with pivot x itself."""
    return GaussExtension(v, field.gen(), residue_var=residue_var)


def gauss_with_pivot(v: Valuation, pivot: RatFunc,
                     residue_var: str | None = None) -> GaussExtension:
    return GaussExtension(v, pivot, residue_var=residue_var)


def gauss_value(w: GaussExtension, h) -> Value:
    return w.value_of(h)


def gauss_residue(w: GaussExtension, h):
    """Residue of an element of value exactly zero (the documented surface)."""
    val = w.value_of(h)
    if val != Value(0):
        raise NonzeroValue(f"w({h}) = {val} != 0")
    return w.residue_of(h)


def subfield_degree(y: RatFunc) -> tuple[int, bool]:
    """[E(x) : E(y)] = max(deg num, deg den) for y = num/den coprime, and
    whether x is integral over E[y] (deg num > deg den)."""
    if y.degree() < 1:
        raise ConstantInput(f"{y} generates no subfield")
    return y.degree(), y.num.degree() > y.den.degree()


RAMIFIED = "ramified"
SPLIT_PAIR = "split_pair"
INERT = "inert"


@dataclass(frozen=True)
class QuadraticExtensionAnalysis:
    """How a valuation behaves on E(sqrt(a)) for a nonsquare a.

    ramified: v(a) odd; every extension has value group (1/2)Z.
    split_pair: v(a) even and the unit residue is a square; two extensions,
        both with residue field kappa.
    inert: v(a) even and the unit residue is a nonsquare; one unramified
        extension with residue field kappa(sqrt(ubar)).
    """

    kind: str
    value: Value
    unit: object | None = None           # u in a*E^2 with v(u) = 0
    residue_unit: object | None = None   # ubar
    sqrt_residue: object | None = None   # root of ubar in the split case
    extension_field: FF | None = None    # kappa(sqrt(ubar)) when kappa finite

    def __str__(self):
        return self.kind


def quadratic_extension_analysis(v, a) -> QuadraticExtensionAnalysis:
    """Trichotomy for E(sqrt(a)) over any valuation-like object.

    Accepts base valuations and Gauss extensions alike; ``a`` must be a
    nonzero nonsquare of the valuation's domain.
    """
    domain = v.domain
    a = domain.coerce(a)
    if not a:
        raise ZeroInput("quadratic extension by sqrt(0)")
    ok, _ = is_square(a, domain)
    if ok:
        raise SquareInput(f"{a} is a square; E(sqrt(a)) is not an extension")
    val = v.value_of(a)
    if val.is_odd_integer():
        return QuadraticExtensionAnalysis(kind=RAMIFIED, value=val)
    _, u = v.unit_part(a)
    ubar = v.residue_of(u)
    sq, root = is_square(ubar, v.residue_field)
    if sq:
        return QuadraticExtensionAnalysis(kind=SPLIT_PAIR, value=val, unit=u,
                                          residue_unit=ubar, sqrt_residue=root)
    ext = None
    if isinstance(v.residue_field, FF):
        ext = quadratic_extension_field(v.residue_field, ubar)
    return QuadraticExtensionAnalysis(kind=INERT, value=val, unit=u,
                                      residue_unit=ubar, extension_field=ext)
