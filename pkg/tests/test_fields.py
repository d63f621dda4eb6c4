import random
from fractions import Fraction

import pytest

from conicval.errors import (ContextMismatch, DegreeTooLarge, DivisionByZero,
                             UnsupportedField, ZeroInput, ZeroPolynomial)
from conicval.fields import (FF, FlatQuotient, FunctionField, GF, PolyRing,
                             QQ, RatFunc, factor, field_arith, is_irreducible,
                             is_square, poly_gcd, square_class_reduce,
                             squarefree_decomposition, sqrt_exact)


class TestFieldArith:
    def test_rational_add(self):
        assert field_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)

    def test_prime_field_mul(self):
        f5 = FF(5)
        assert field_arith(f5.from_int(2), f5.from_int(3), "mul") == f5.from_int(1)

    def test_extension_field_mul(self):
        f25 = FF(5, (-2, 0, 1))   # F_5[u]/(u^2 - 2)
        u = f25.gen()
        assert field_arith(u, u, "mul") == f25.from_int(2)

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            field_arith(Fraction(1), Fraction(0), "div")

    def test_context_mismatch(self):
        with pytest.raises(ContextMismatch):
            field_arith(FF(5).from_int(1), FF(7).from_int(1), "add")
        with pytest.raises(ContextMismatch):
            field_arith(Fraction(1), FF(5).from_int(1), "add")

    def test_int_promotion(self):
        f5 = FF(5)
        assert field_arith(2, f5.from_int(3), "mul") == f5.from_int(1)


def _all_contexts():
    return [QQ, FF(5), FF(3, (1, 0, 1)), FunctionField(QQ, "t"),
            FunctionField(FF(3), "t")]


def _sample(rng, ctx):
    from conicval.oracle import sample_field_element
    return sample_field_element(rng, ctx)


class TestFieldAxioms:
    @pytest.mark.parametrize("ctx_index", range(5))
    def test_axioms_on_random_triples(self, ctx_index):
        ctx = _all_contexts()[ctx_index]
        rng = random.Random(1000 + ctx_index)
        one = ctx.one()
        for _ in range(1000):
            a, b, c = (_sample(rng, ctx) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            assert (a * b) * c == a * (b * c)
            if a:
                assert a * (one / a) == one


class TestIsSquare:
    def test_two_nonsquare_mod_five(self):
        # Euler criterion: 2^((5-1)/2) mod 5
        assert pow(2, 2, 5) != 1
        ok, root = is_square(FF(5).from_int(2))
        assert not ok and root is None

    def test_rational_square(self):
        ok, root = is_square(Fraction(4, 9))
        assert ok and root == Fraction(2, 3)
        assert not is_square(Fraction(-4, 9))[0]
        assert not is_square(Fraction(2))[0]

    def test_zero_input(self):
        with pytest.raises(ZeroInput):
            is_square(Fraction(0))

    def test_f9_generator_against_exhaustive_squaring(self):
        f9 = FF(3, (1, 0, 1))
        squares = {y * y for y in f9.nonzero_elements()}
        ok, root = is_square(f9.gen())
        assert ok == (f9.gen() in squares)
        if ok:
            assert root * root == f9.gen()

    @pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13, 25, 27, 49, 81, 121])
    def test_agrees_with_exhaustive_squaring(self, q):
        k = GF(q)
        squares = {y * y for y in k.nonzero_elements()}
        for x in k.nonzero_elements():
            ok, root = is_square(x, k)
            assert ok == (x in squares)
            if ok:
                assert root * root == x

    def test_function_field_square(self, qt):
        t = qt.gen()
        sq = (t + 1) ** 2 / (t ** 2)
        ok, root = is_square(sq)
        assert ok and root * root == sq
        assert not is_square(t)[0]
        assert not is_square(2 * (t + 1) ** 2)[0]

    def test_char_p_function_field_square(self, f3t):
        t = f3t.gen()
        # t^3 + 1 = (t + 1)^3 in characteristic 3: an odd power, not a square
        assert not is_square(t ** 3 + 1)[0]
        ok, root = is_square((t ** 3 + 1) * (t + 1))
        assert ok and root * root == (t ** 3 + 1) * (t + 1)


class TestPolynomials:
    def test_gcd_over_q(self):
        r = PolyRing(QQ, "X")
        f = r.poly([-1, 0, 1])
        g = r.poly([1, -2, 1])
        assert str(poly_gcd(f, g)) == "X - 1"

    def test_gcd_zero_zero(self):
        r = PolyRing(QQ, "X")
        with pytest.raises(ZeroPolynomial):
            poly_gcd(r.zero(), r.zero())

    def test_factor_x2_plus_1_mod_5(self):
        # brute-force root search mod 5 finds the splitting
        roots = [x for x in range(5) if (x * x + 1) % 5 == 0]
        assert roots == [2, 3]
        r5 = PolyRing(FF(5), "X")
        lead, facs = factor(r5.poly([1, 0, 1]))
        assert lead == FF(5).one()
        assert [str(h) for h, _ in facs] == ["X + 2", "X + 3"]
        prod = r5.one()
        for h, m in facs:
            prod = prod * h ** m
        assert prod.scale(lead) == r5.poly([1, 0, 1])

    def test_factor_x2_plus_1_mod_3_irreducible(self):
        assert [x for x in range(3) if (x * x + 1) % 3 == 0] == []
        r3 = PolyRing(FF(3), "X")
        assert is_irreducible(r3.poly([1, 0, 1]))
        _, facs = factor(r3.poly([1, 0, 1]))
        assert len(facs) == 1 and facs[0][1] == 1

    def test_factor_over_extension_field(self):
        f9 = GF(9)
        r = PolyRing(f9, "X")
        u = f9.gen()
        # (X - u)(X + u) = X^2 - u^2
        f = r.poly([-(u * u), f9.zero(), f9.one()])
        _, facs = factor(f)
        assert len(facs) == 2
        prod = r.one()
        for h, m in facs:
            assert h.is_monic() and is_irreducible(h)
            prod = prod * h ** m
        assert prod == f

    def test_factor_over_q(self):
        r = PolyRing(QQ, "X")
        f = r.poly([Fraction(1, 2), Fraction(-1), Fraction(1, 2)])  # (X-1)^2/2
        lead, facs = factor(f)
        assert lead == Fraction(1, 2)
        assert len(facs) == 1 and facs[0][1] == 2
        assert str(facs[0][0]) == "X - 1"

    def test_factor_degree_limit_over_q(self):
        r = PolyRing(QQ, "X")
        with pytest.raises(DegreeTooLarge):
            factor(r.poly([1] + [0] * 8 + [1]))

    def test_factor_zero(self):
        r = PolyRing(QQ, "X")
        with pytest.raises(ZeroPolynomial):
            factor(r.zero())

    def test_squarefree_char_p_pth_power(self):
        r3 = PolyRing(FF(3), "X")
        x = r3.gen()
        f = (x + 1) ** 3 * (x + 2)
        lead, parts = squarefree_decomposition(f)
        rebuilt = r3.one()
        for g, m in parts:
            rebuilt = rebuilt * g ** m
        assert rebuilt.scale(lead) == f
        assert {m for _, m in parts} == {1, 3}


class TestRationalFunctions:
    def test_canonical_form_is_normal_form(self, qt):
        a = qt.ratfunc(qt.ring.poly([-1, 0, 1]), qt.ring.poly([-1, 1]))
        b = qt.ratfunc(qt.ring.poly([1, 1]), qt.ring.one())
        assert a.num == b.num and a.den == b.den
        assert hash(a) == hash(b)

    def test_den_monic(self, qt):
        a = qt.ratfunc(qt.ring.poly([1]), qt.ring.poly([2, 4]))
        assert a.den.is_monic()
        assert a == qt.ratfunc(qt.ring.poly([Fraction(1, 4)]),
                               qt.ring.poly([Fraction(1, 2), 1]))

    def test_zero_denominator(self, qt):
        with pytest.raises(DivisionByZero):
            qt.ratfunc(qt.ring.one(), qt.ring.zero())

    def test_arithmetic_roundtrip(self, qt):
        rng = random.Random(7)
        from conicval.oracle import sample_ratfunc
        for _ in range(200):
            a = sample_ratfunc(rng, qt)
            b = sample_ratfunc(rng, qt)
            if b:
                assert (a / b) * b == a
            assert a + b - b == a


class TestSquareClasses:
    def test_rational_square_class(self):
        r, s = square_class_reduce(Fraction(72, 25))
        assert r == 2 and r * s * s == Fraction(72, 25)
        r, s = square_class_reduce(Fraction(-12))
        assert r == -3

    def test_function_field_square_class(self, qt):
        t = qt.gen()
        x = 4 * t ** 3 * (t + 1) ** 2
        r, s = square_class_reduce(x)
        assert r * s * s == x
        assert r == t

    def test_finite_field_square_class(self):
        f5 = FF(5)
        r, s = square_class_reduce(f5.from_int(2))
        assert r * s * s == f5.from_int(2)
        assert not is_square(r, f5)[0]

    def test_char_p_square_class(self, f3t):
        t = f3t.gen()
        x = (t + 1) ** 3 * t ** 2
        r, s = square_class_reduce(x)
        assert r * s * s == x


class TestFlattening:
    def test_tower_is_ring_homomorphism(self):
        f9 = GF(9)
        ring = PolyRing(f9, "t")
        from conicval.fields import _canonical_nonsquare
        c = _canonical_nonsquare(f9)
        fl = FlatQuotient(f9, ring.poly([-c, f9.zero(), f9.one()]))
        assert fl.flat.order == 81
        rng = random.Random(3)
        mod = fl.modulus
        for _ in range(100):
            a = ring.poly([f9.element_at(rng.randrange(9)) for _ in range(2)])
            b = ring.poly([f9.element_at(rng.randrange(9)) for _ in range(2)])
            assert fl.to_flat((a * b) % mod) == fl.to_flat(a) * fl.to_flat(b)
            assert fl.to_flat((a + b) % mod) == fl.to_flat(a) + fl.to_flat(b)

    def test_roundtrip(self):
        f3 = FF(3)
        ring = PolyRing(f3, "t")
        fl = FlatQuotient(f3, ring.poly([1, 0, 1]))
        for i in range(9):
            e = fl.flat.element_at(i)
            assert fl.to_flat(fl.from_flat(e)) == e

    def test_reducible_modulus_rejected(self):
        f3 = FF(3)
        ring = PolyRing(f3, "t")
        with pytest.raises(UnsupportedField):
            FlatQuotient(f3, ring.poly([-1, 0, 1]))   # t^2 - 1


class TestConstructors:
    def test_characteristic_two_rejected(self):
        with pytest.raises(UnsupportedField):
            FF(2)

    def test_nonprime_rejected(self):
        with pytest.raises(UnsupportedField):
            FF(9)

    def test_reducible_modulus_rejected(self):
        with pytest.raises(UnsupportedField):
            FF(5, (-1, 0, 1))   # u^2 - 1 splits

    def test_gf_prime_power(self):
        k = GF(27)
        assert k.p == 3 and k.degree == 3 and k.order == 27
        with pytest.raises(UnsupportedField):
            GF(12)

    def test_sqrt_exact(self):
        assert sqrt_exact(Fraction(9, 4)) == Fraction(3, 2)
        with pytest.raises(ZeroInput):
            sqrt_exact(Fraction(2))
