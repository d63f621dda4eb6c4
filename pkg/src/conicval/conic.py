"""The function field F = E(x)(s) with s^2 = a*x^2 + b, and the distinguished
extension of a valuation v on E to F.

The distinguished extension w* restricts to E(x^2) as the Gauss extension
with respect to z = a*x^2/b and extends uniquely to F.  Elements decompose
over E(x^2) along the basis (1, x, s, xs), whose values are

    beta = (0, (v(b)-v(a))/2, v(b)/2, v(b)-v(a)/2),

and w* of a general element is the minimum of w1(e_i) + beta_i over the
components: the four basis directions are separated by value coset and
residue component, so no cancellation can occur.  This evaluation rule is
cross-checked against the norm identity by the test suite.

The value group is Gamma union the cosets (v(a)/2 + Gamma), (v(b)/2 + Gamma),
(v(ab)/2 + Gamma).  The residue field is described explicitly: a conic
kappa(T)(sqrt(a0bar*T^2 + b0bar)) when v(a) and v(b) are both even, and a
rational field kappa(r) (with the generator and the expression of zbar in r
recorded and symbolically verified) when exactly one of v(a), v(b), v(ab)
is even.  All three being odd is impossible since they sum.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

from .errors import (NonzeroValue, PreconditionViolated, WitnessNotFound,
                     ZeroElement, ZeroInput)
from .fields import (FF, FunctionField, Poly, RatFunc, RationalField,
                     infer_context, is_square)
from .gauss import (GaussExtension, RAMIFIED, SPLIT_PAIR,
                    quadratic_extension_analysis)
from .quaternion import (NO_EXTENSION_ALGEBRA_SPLIT, QuaternionAlgebra,
                         UNRAMIFIED_EXTENSION, decide_unramified_extension,
                         is_split)
from .value import INFINITY, Value, ValueGroup
from .valuation import Valuation


class ConicFunctionField:
    """E(x)(s) with s^2 = a*x^2 + b; the function field of a*X^2 + b*Y^2 = Z^2."""

    def __init__(self, base, a, b, var: str = "x", sname: str = "s"):
        self.base = base
        self.ef = FunctionField(base, var)          # E(x)
        self.zfield = FunctionField(base, "z")      # E(z), z standing for x^2
        self.a = base.coerce(a)
        self.b = base.coerce(b)
        if not self.a or not self.b:
            raise ZeroInput("conic coefficients must be nonzero")
        self.var = var
        self.sname = sname
        self.norm_poly = self.ef.from_poly(
            self.ef.ring.poly([self.b, base.zero(), self.a]))   # a*x^2 + b
        try:
            self.rational_warning = is_square(self.b, base)[0]
        except Exception:
            self.rational_warning = False

    def element(self, f, g=0) -> "ConicFieldElement":
        return ConicFieldElement(self, f, g)

    def x(self) -> "ConicFieldElement":
        return self.element(self.ef.gen())

    def s(self) -> "ConicFieldElement":
        return self.element(0, 1)

    def __eq__(self, other):
        return (isinstance(other, ConicFunctionField) and other.base == self.base
                and other.a == self.a and other.b == self.b
                and other.var == self.var)

    def __repr__(self):
        return (f"{self.base!r}({self.var})({self.sname}), "
                f"{self.sname}^2 = ({self.a})*{self.var}^2 + ({self.b})")


class ConicFieldElement:
    """f + g*s with f, g rational functions in x."""

    __slots__ = ("cf", "f", "g")

    def __init__(self, cf: ConicFunctionField, f, g=0):
        self.cf = cf
        self.f = cf.ef.coerce(f)
        self.g = cf.ef.coerce(g)

    def _pair(self, other):
        if isinstance(other, ConicFieldElement):
            if other.cf != self.cf:
                raise ZeroInput("elements of different conic fields")
            return other
        return ConicFieldElement(self.cf, other, 0)

    def __add__(self, other):
        o = self._pair(other)
        return ConicFieldElement(self.cf, self.f + o.f, self.g + o.g)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._pair(other)
        return ConicFieldElement(self.cf, self.f - o.f, self.g - o.g)

    def __neg__(self):
        return ConicFieldElement(self.cf, -self.f, -self.g)

    def __mul__(self, other):
        o = self._pair(other)
        m = self.cf.norm_poly
        return ConicFieldElement(self.cf,
                                 self.f * o.f + self.g * o.g * m,
                                 self.f * o.g + self.g * o.f)

    __rmul__ = __mul__

    def inverse(self) -> "ConicFieldElement":
        if not self:
            raise ZeroElement("inverse of zero")
        norm = self.f * self.f - self.g * self.g * self.cf.norm_poly
        return ConicFieldElement(self.cf, self.f / norm, -self.g / norm)

    def __truediv__(self, other):
        return self * self._pair(other).inverse()

    def __bool__(self):
        return bool(self.f) or bool(self.g)

    def __eq__(self, other):
        o = self._pair(other)
        return self.f == o.f and self.g == o.g

    def conjugate(self) -> "ConicFieldElement":
        return ConicFieldElement(self.cf, self.f, -self.g)

    def quadruple(self):
        """(e0, e1, e2, e3) over E(z) with the element equal to
        e0(x^2) + e1(x^2)*x + e2(x^2)*s + e3(x^2)*x*s."""
        e0, e1 = _even_odd(self.f, self.cf.zfield)
        e2, e3 = _even_odd(self.g, self.cf.zfield)
        return e0, e1, e2, e3

    def __repr__(self):
        return str(self)

    def __str__(self):
        if not self.g:
            return str(self.f)
        gs = f"({self.g})*{self.cf.sname}"
        if not self.f:
            return gs
        return f"({self.f}) + {gs}"


def _even_odd(rf: RatFunc, zfield: FunctionField):
    """Split h(x) as he(x^2) + x*ho(x^2); returns (he, ho) as elements of E(z)."""
    dneg = rf.den.subs_neg()
    m = rf.num * dneg
    d = rf.den * dneg
    assert all(not c for c in d.coeffs[1::2]), "den * den(-x) must be even"
    dz = zfield.ring.poly(list(d.coeffs[0::2]))
    he = RatFunc(zfield, zfield.ring.poly(list(m.coeffs[0::2])), dz)
    ho = RatFunc(zfield, zfield.ring.poly(list(m.coeffs[1::2])), dz)
    return he, ho


def _subs_square(rf: RatFunc, tfield: FunctionField) -> RatFunc:
    """Substitute the square of the target variable: p(z) -> p(T^2)."""

    def spread(p: Poly) -> Poly:
        coeffs = []
        for c in p.coeffs:
            coeffs.append(c)
            coeffs.append(tfield.ring.field.zero())
        return tfield.ring.poly(coeffs[:-1] if coeffs else [])

    return RatFunc(tfield, spread(rf.num), spread(rf.den))


def _scale_argument(rf: RatFunc, lam) -> RatFunc:
    """p(z) -> p(lambda * z) for a base-field constant lambda."""
    fld = rf.field

    def tr(p: Poly) -> Poly:
        acc = fld.ring.field.one()
        out = []
        for c in p.coeffs:
            out.append(c * acc)
            acc = acc * lam
        return fld.ring.poly(out)

    return RatFunc(fld, tr(rf.num), tr(rf.den))


# ---------------------------------------------------------------------------
# residue field descriptions
# ---------------------------------------------------------------------------


class ResidueConicDesc:
    """kappa(T)(S) with S^2 = a0bar*T^2 + b0bar; arises when v(a), v(b) are
    both even.  a0 = a*u^2 and b0 = b*nu^2 are the unit rescalings and T is
    the residue of (nu/u)*x."""

    variant = "conic"

    def __init__(self, kappa, a0bar, b0bar, a0, b0, u, nu,
                 tvar: str = "T", svar: str = "S"):
        self.kappa = kappa
        self.a0bar = a0bar
        self.b0bar = b0bar
        self.a0 = a0
        self.b0 = b0
        self.u = u
        self.nu = nu
        self.tvar = tvar
        self.svar = svar
        self.tfield = FunctionField(kappa, tvar)

    def relation(self) -> str:
        rhs = self.tfield.ring.poly([self.b0bar, self.kappa.zero(), self.a0bar])
        return f"{self.svar}^2 = {rhs}"

    def __str__(self):
        rhs = self.tfield.ring.poly([self.b0bar, self.kappa.zero(), self.a0bar])
        return f"{self.kappa!r}({self.tvar})(sqrt({rhs}))"

    def as_dict(self):
        return {
            "variant": "conic",
            "kappa": repr(self.kappa),
            "a0bar": str(self.a0bar), "b0bar": str(self.b0bar),
            "a0": str(self.a0), "b0": str(self.b0),
            "scaling_u": str(self.u), "scaling_nu": str(self.nu),
            "generators": [self.tvar, self.svar],
            "relation": self.relation(),
        }


class ResidueRationalDesc:
    """kappa(r), arising when the value group is (1/2)Z.

    ``zbar_expr`` expresses zbar (the residue of a*x^2/b) in the rational
    generator r, and ``sqrt_expr`` is the square root adjoined by the
    quadratic step, also written in r; both are verified symbolically at
    construction time.
    """

    variant = "rational"

    def __init__(self, kappa, subcase: str, u, ubar, rvar: str = "r"):
        self.kappa = kappa
        self.subcase = subcase          # which of v(a), v(b), v(ab) is even
        self.u = u
        self.ubar = ubar
        self.rvar = rvar
        self.rfield = FunctionField(kappa, rvar)
        ring = self.rfield.ring
        r = self.rfield.gen()
        rr_minus_u = ring.poly([-ubar, kappa.zero(), kappa.one()])
        if subcase == "a":
            # sqrt(ubar*z*(z+1)); lines through (0,0): z = ubar/(r^2-ubar)
            self.zbar_expr = RatFunc(self.rfield, ring.poly([ubar]), rr_minus_u)
            self.sqrt_expr = r * self.zbar_expr
            check = self.sqrt_expr ** 2 == (
                self.zbar_expr * (self.zbar_expr + 1) * ubar)
        elif subcase == "b":
            # sqrt(ubar*(z+1)); r itself, z = r^2/ubar - 1
            self.zbar_expr = RatFunc(self.rfield, rr_minus_u, ring.poly([ubar]))
            self.sqrt_expr = r
            check = self.sqrt_expr ** 2 == (self.zbar_expr + 1) * ubar
        elif subcase == "ab":
            # sqrt(ubar*z); r itself, z = r^2/ubar
            self.zbar_expr = RatFunc(self.rfield, ring.poly(
                [kappa.zero(), kappa.zero(), kappa.one()]), ring.poly([ubar]))
            self.sqrt_expr = r
            check = self.sqrt_expr ** 2 == self.zbar_expr * ubar
        else:
            raise ZeroInput(f"unknown subcase {subcase!r}")
        assert check, "rational parametrization failed symbolic verification"

    def embed(self, elem: RatFunc) -> RatFunc:
        """kappa(zbar) -> kappa(r) by substituting the expression for zbar."""
        num = elem.num(self.zbar_expr) if elem.num else self.zbar_expr * 0
        den = elem.den(self.zbar_expr)
        return num / den

    def __str__(self):
        return f"{self.kappa!r}({self.rvar}), zbar = {self.zbar_expr}"

    def as_dict(self):
        return {
            "variant": "rational",
            "kappa": repr(self.kappa),
            "subcase": self.subcase,
            "unit": str(self.u), "unit_residue": str(self.ubar),
            "generators": [self.rvar],
            "zbar_in_r": str(self.zbar_expr),
            "sqrt_in_r": str(self.sqrt_expr),
        }


class ConicResidueElement:
    """P + Q*S in the conic residue field, with P, Q rational functions in T."""

    __slots__ = ("desc", "p", "q")

    def __init__(self, desc: ResidueConicDesc, p, q=0):
        self.desc = desc
        self.p = desc.tfield.coerce(p)
        self.q = desc.tfield.coerce(q)

    def _pair(self, other):
        if isinstance(other, ConicResidueElement):
            return other
        return ConicResidueElement(self.desc, other, 0)

    def __add__(self, other):
        o = self._pair(other)
        return ConicResidueElement(self.desc, self.p + o.p, self.q + o.q)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._pair(other)
        return ConicResidueElement(self.desc, self.p - o.p, self.q - o.q)

    def __neg__(self):
        return ConicResidueElement(self.desc, -self.p, -self.q)

    def __mul__(self, other):
        o = self._pair(other)
        d = self.desc
        ssq = d.tfield.from_poly(d.tfield.ring.poly(
            [d.b0bar, d.kappa.zero(), d.a0bar]))
        return ConicResidueElement(d, self.p * o.p + self.q * o.q * ssq,
                                   self.p * o.q + self.q * o.p)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.p) or bool(self.q)

    def __eq__(self, other):
        o = self._pair(other)
        return self.p == o.p and self.q == o.q

    def __repr__(self):
        return str(self)

    def __str__(self):
        if not self.q:
            return str(self.p)
        qs = f"({self.q})*{self.desc.svar}"
        return qs if not self.p else f"({self.p}) + {qs}"


# ---------------------------------------------------------------------------
# the distinguished extension
# ---------------------------------------------------------------------------

CASE_UNITS = "case3_units"
CASE_A = "case2_a"
CASE_B = "case2_b"
CASE_AB = "case2_ab"


def distinguished_value_group(v: Valuation, cf: ConicFunctionField) -> ValueGroup:
    """Gamma union the three half-cosets; Z or (1/2)Z for discrete v."""
    va = v.value_of(cf.a).fraction
    vb = v.value_of(cf.b).fraction
    reps = (Fraction(0), Fraction(va, 2), Fraction(vb, 2), Fraction(va + vb, 2))
    gen = Fraction(1) if va % 2 == 0 and vb % 2 == 0 else Fraction(1, 2)
    return ValueGroup(gen, reps)


class DistinguishedExtension:
    """The unique extension to F of the Gauss extension on E(x^2) with
    respect to a*x^2/b; evaluation by the graded minimum formula."""

    def __init__(self, v: Valuation, cf: ConicFunctionField):
        self.v = v
        self.conic_field = cf
        a, b = cf.a, cf.b
        self.va = int(v.value_of(a).fraction)
        self.vb = int(v.value_of(b).fraction)
        zf = cf.zfield
        pivot = RatFunc(zf, zf.ring.poly([v.base.zero(), a / b]), zf.ring.one())
        self.w1 = GaussExtension(v, pivot, residue_var="z")
        va, vb = self.va, self.vb
        self.beta = (Value(0), Value(Fraction(vb - va, 2)),
                     Value(Fraction(vb, 2)), Value(vb) - Value(Fraction(va, 2)))
        self.value_group = distinguished_value_group(v, cf)
        self._build_residue_desc()

    def _build_residue_desc(self):
        v, cf = self.v, self.conic_field
        va, vb = self.va, self.vb
        pi = v.uniformizer
        if va % 2 == 0 and vb % 2 == 0:
            self.case_tag = CASE_UNITS
            u = pi ** (-(va // 2)) if va else v.base.coerce(1)
            nu = pi ** (-(vb // 2)) if vb else v.base.coerce(1)
            a0 = cf.a * u * u
            b0 = cf.b * nu * nu
            self.residue = ResidueConicDesc(
                v.residue_field, v.residue_of(a0), v.residue_of(b0),
                a0, b0, u, nu)
            self._u, self._nu = u, nu
            # identity-pivot Gauss extension on E(z0), z0 = (normalized x)^2
            self._w0 = GaussExtension(v, cf.zfield.gen(), residue_var="z")
            return
        if va % 2 == 0:
            self.case_tag = CASE_A
            u = cf.a * pi ** (-va) if va else cf.a
            scale = cf.a * pi ** (-(va // 2)) / cf.b
            self._j = 3
            subcase = "a"
        elif vb % 2 == 0:
            self.case_tag = CASE_B
            u = cf.b * pi ** (-vb) if vb else cf.b
            scale = pi ** (-(vb // 2)) if vb else v.base.coerce(1)
            self._j = 2
            subcase = "b"
        else:
            # v(a), v(b) odd forces v(ab) even; all three odd cannot happen
            self.case_tag = CASE_AB
            vab = va + vb
            u = cf.a * cf.b * pi ** (-vab)
            scale = cf.a * pi ** (-(vab // 2))
            self._j = 1
            subcase = "ab"
        self._mj = scale
        self.residue = ResidueRationalDesc(v.residue_field, subcase, u,
                                           v.residue_of(u))

    @property
    def domain(self):
        return self.conic_field

    def describe(self) -> str:
        cf = self.conic_field
        return (f"w*[{self.v.describe()}; s^2 = ({cf.a})*{cf.var}^2 + ({cf.b})]")

    def value_of(self, elem) -> Value:
        if isinstance(elem, (int, RatFunc, Poly)):
            elem = self.conic_field.element(elem)
        if not elem:
            raise ZeroElement("the distinguished extension has no value at 0")
        best = INFINITY
        for ei, bi in zip(elem.quadruple(), self.beta):
            if ei:
                val = self.w1.value_of(ei) + bi
                if val < best:
                    best = val
        return best

    def residue_of(self, elem):
        """Residue of a value-zero element, in the generators of the
        residue-field description."""
        if isinstance(elem, (int, RatFunc, Poly)):
            elem = self.conic_field.element(elem)
        val = self.value_of(elem)
        if val != Value(0):
            raise NonzeroValue(f"w*({elem}) = {val} != 0")
        e = elem.quadruple()
        if self.case_tag == CASE_UNITS:
            return self._residue_units(e)
        return self._residue_rational(e)

    def _residue_units(self, e):
        cf, v = self.conic_field, self.v
        u, nu = self._u, self._nu
        lam = (u / nu) ** 2
        cscale = (v.base.coerce(1), u / nu, 1 / nu, u / (nu * nu))
        desc = self.residue
        parts = []
        for ei, ci in zip(e, cscale):
            if ei:
                transformed = _scale_argument(ei, lam) * ci
                parts.append(_subs_square(self._w0.residue_of(transformed),
                                          desc.tfield))
            else:
                parts.append(desc.tfield.zero())
        t = desc.tfield.gen()
        return ConicResidueElement(desc, parts[0] + parts[1] * t,
                                   parts[2] + parts[3] * t)

    def _residue_rational(self, e):
        desc = self.residue
        j = self._j
        r0 = self.w1.residue_of(e[0]) if e[0] else self.w1.residue_field.zero()
        rj = (self.w1.residue_of(e[j] * (1 / self._mj))
              if e[j] else self.w1.residue_field.zero())
        return desc.embed(r0) + desc.embed(rj) * desc.sqrt_expr


def distinguished_residue_field(v: Valuation, cf: ConicFunctionField):
    return DistinguishedExtension(v, cf).residue


# ---------------------------------------------------------------------------
# families of extensions with rational residue field
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalFamilyMember:
    pivot: RatFunc                 # c*x or c*(x - shift)
    c: object
    c_value: int                   # v(c); members with distinct values differ
    constraint: str
    gauss: GaussExtension
    quadratic_kind: str            # ramified or split_pair, audited
    residue_description: str
    shift: object | None = None
    conic_point: tuple | None = None

    def as_dict(self):
        return {
            "pivot": str(self.pivot),
            "c": str(self.c),
            "v_of_c": self.c_value,
            "constraint": self.constraint,
            "quadratic_kind": self.quadratic_kind,
            "residue_field": self.residue_description,
            "shift": None if self.shift is None else str(self.shift),
            "conic_point": None if self.conic_point is None
            else [str(p) for p in self.conic_point],
        }


def _unit_conic_point(a0bar, b0bar, kappa, bound: int):
    """(xbar, ybar) with a0bar*xbar^2 + b0bar = ybar^2, both nonzero."""
    if isinstance(kappa, FF):
        roots = kappa._sqrt_map()
        for i in range(1, kappa.order):
            x = kappa.element_at(i)
            y = roots.get(a0bar * x * x + b0bar)
            if y is not None and y:
                return x, y
        return None
    if isinstance(kappa, RationalField):
        for h in range(1, bound + 1):
            pairs = [(n, h) for n in range(1, h + 1)] + \
                    [(h, d) for d in range(1, h)]
            for n, d in pairs:
                for x in (Fraction(n, d), Fraction(-n, d)):
                    val = a0bar * x * x + b0bar
                    if val:
                        ok, y = is_square(val, kappa)
                        if ok:
                            return x, y
        return None
    raise ZeroInput(f"no conic point search over {kappa!r}")


def rational_residue_family(v: Valuation, cf: ConicFunctionField, count: int,
                            search_bound: int = 200) -> list[RationalFamilyMember]:
    """Pairwise distinct extensions of v to F whose residue fields are
    rational over kappa; only available when no unramified extension to the
    quaternion algebra exists.

    With v(a) or v(b) odd the pivots are c*x with v(c) chosen so that
    w_c(a*x^2 + b) is odd (the quadratic step ramifies).  With both even the
    pivots are c*(x - shift) for a lifted residue conic point and v(c) < 0
    (the quadratic step splits).  Either way the residue field of every
    extension of the Gauss extension to F is kappa(pivot residue).
    """
    verdict = decide_unramified_extension(
        QuaternionAlgebra(cf.base, cf.a, cf.b), v, search_bound)
    if verdict.kind == UNRAMIFIED_EXTENSION:
        raise PreconditionViolated(
            "an unramified extension exists; no rational-residue family")
    if count < 0:
        raise ZeroInput("negative count")
    if count == 0:
        return []
    va = int(v.value_of(cf.a).fraction)
    vb = int(v.value_of(cf.b).fraction)
    pi = v.uniformizer
    members = []
    def scaled_x_members(ks, constraint, expected):
        for k in ks:
            c = pi ** k
            pivot = RatFunc(cf.ef, cf.ef.ring.poly([v.base.zero(), c]),
                            cf.ef.ring.one())
            members.append(_family_member(v, cf, pivot, c, k, constraint,
                                          expected=expected))

    if va % 2 == 1:
        k0 = (va - vb) // 2 + 1
        scaled_x_members([k0 + i for i in range(count)],
                         "2*v(c) > v(a) - v(b)", RAMIFIED)
        return members
    if vb % 2 == 1:
        # make w_c(a*x^2 + b) = v(b), which is odd
        k0 = -((vb - va) // 2 + 1)
        scaled_x_members([k0 - i for i in range(count)],
                         "2*v(c) < v(a) - v(b)", RAMIFIED)
        return members
    # both even: the quadratic step must split.  Preferred construction:
    # shift the pivot to a lifted unit point of the residue conic.  When no
    # such point exists (possible over tiny residue fields) pivots c*x still
    # work provided the residue of the dominant coefficient is a square.
    ext = DistinguishedExtension(v, cf)
    desc = ext.residue
    point = _unit_conic_point(desc.a0bar, desc.b0bar, v.residue_field,
                              search_bound)
    if point is not None:
        xbar, ybar = point
        shift = (ext._u / ext._nu) * v.lift(xbar)
        cc = ext._nu / ext._u
        for i in range(1, count + 1):
            c = pi ** (-i) * cc
            pivot = RatFunc(cf.ef,
                            cf.ef.ring.poly([-c * shift, c]), cf.ef.ring.one())
            members.append(_family_member(
                v, cf, pivot, c, -i, "v(c) < 0 (in normalized coordinates)",
                expected=SPLIT_PAIR, shift=shift, conic_point=point))
        return members
    if is_square(desc.a0bar, v.residue_field)[0]:
        k0 = (va - vb) // 2 + 1
        scaled_x_members([k0 + i for i in range(count)],
                         "2*v(c) > v(a) - v(b)", SPLIT_PAIR)
        return members
    if is_square(desc.b0bar, v.residue_field)[0]:
        k0 = (va - vb) // 2 - 1
        scaled_x_members([k0 - i for i in range(count)],
                         "2*v(c) < v(a) - v(b)", SPLIT_PAIR)
        return members
    raise WitnessNotFound(
        f"no unit point of the residue conic within height {search_bound} "
        "and neither coefficient residue is a square")


def _family_member(v, cf, pivot, c, k, constraint, expected,
                   shift=None, conic_point=None) -> RationalFamilyMember:
    w = GaussExtension(v, pivot, residue_var="y")
    qa = quadratic_extension_analysis(w, cf.norm_poly)
    assert qa.kind == expected, (
        f"family member with pivot {pivot}: quadratic step is {qa.kind}, "
        f"expected {expected}")
    kappa = repr(v.residue_field)
    return RationalFamilyMember(
        pivot=pivot, c=c, c_value=k, constraint=constraint, gauss=w,
        quadratic_kind=qa.kind,
        residue_description=f"{kappa}(y), y the residue of {pivot}",
        shift=shift, conic_point=conic_point)


# ---------------------------------------------------------------------------
# full analysis
# ---------------------------------------------------------------------------


@dataclass
class AnalysisReport:
    present: bool
    verdict: object
    value_group: ValueGroup
    residue: object
    case_tag: str
    family: list | None
    family_note: str | None
    rational_warning: bool
    checks: dict

    def as_dict(self):
        return {
            "verdict": "PRESENT" if self.present else "ABSENT",
            "extension_kind": self.verdict.kind,
            "normalization_transcript": self.verdict.as_dict()["transcript"],
            "decision": self.verdict.as_dict(),
            "value_group": {
                "generator": str(self.value_group.generator),
                "coset_representatives":
                    [str(r) for r in self.value_group.coset_reps],
            },
            "residue_field": self.residue.as_dict(),
            "case": self.case_tag,
            "family": None if self.family is None
            else [m.as_dict() for m in self.family],
            "family_note": self.family_note,
            "rational_function_field_warning": self.rational_warning,
            "checks": self.checks,
        }


def analyze(v: Valuation, cf: ConicFunctionField, family_count: int = 3,
            search_bound: int = 200) -> AnalysisReport:
    """Decide whether v extends to F with transcendental non-ruled residue
    field, and report every constructive object along the way.

    PRESENT: the distinguished extension is the unique such extension; its
    value group must be Z and its residue field the conic over kappa given
    by the unit rescalings, with division residue algebra (both re-checked).
    ABSENT: the reason from the quaternion decision, the residue field of
    the distinguished extension (then rational or a split conic), and a
    sample of the infinite family of rational-residue extensions.
    """
    q = QuaternionAlgebra(cf.base, cf.a, cf.b)
    verdict = decide_unramified_extension(q, v, search_bound)
    ext = DistinguishedExtension(v, cf)
    present = verdict.kind == UNRAMIFIED_EXTENSION
    checks = {}
    family = None
    family_note = None
    if present:
        assert ext.value_group.generator == 1, \
            "present case must have value group Z"
        assert isinstance(ext.residue, ResidueConicDesc), \
            "present case must have a conic residue field"
        recheck = is_split(QuaternionAlgebra(
            v.residue_field, ext.residue.a0bar, ext.residue.b0bar),
            search_bound)
        assert not recheck.split, "residue conic must have no rational point"
        checks["value_group_is_Z"] = True
        checks["residue_conic_division"] = True
    else:
        try:
            family = rational_residue_family(v, cf, family_count, search_bound)
        except WitnessNotFound as exc:
            family = []
            family_note = str(exc)
    return AnalysisReport(present=present, verdict=verdict,
                          value_group=ext.value_group, residue=ext.residue,
                          case_tag=ext.case_tag, family=family,
                          family_note=family_note,
                          rational_warning=cf.rational_warning, checks=checks)


# ---------------------------------------------------------------------------
# sampling (used by the fuzz oracle)
# ---------------------------------------------------------------------------


def sample_conic_element(rng: random.Random, cf: ConicFunctionField,
                         max_degree: int = 2) -> ConicFieldElement:
    from .oracle import sample_poly, sample_ratfunc

    def part():
        if rng.random() < 0.75:
            return cf.ef.from_poly(sample_poly(rng, cf.ef.ring, max_degree))
        return sample_ratfunc(rng, cf.ef, max_degree, 1)

    while True:
        el = ConicFieldElement(cf, part(), part())
        if el:
            return el
