import random
from fractions import Fraction

import pytest

from conicval.errors import PrecisionTooLow
from conicval.fields import FF, FunctionField, GF, QQ
from conicval.gauss import gauss_extension
from conicval.oracle import (degree_oracle, hensel_count, isotropy_search,
                             valuation_axiom_fuzz)
from conicval.valuation import PAdicValuation
from conicval.value import Value


class TestIsotropySearch:
    def test_exhaustive_over_f5(self):
        f5 = FF(5)
        point = isotropy_search(f5.from_int(2), f5.from_int(3))
        assert point is not None
        x, y, z = point
        assert f5.from_int(2) * x * x + f5.from_int(3) * y * y == z * z
        # the value quoted for this case: (1, 1, 0) is a solution
        assert (2 * 1 + 3 * 1) % 5 == 0

    def test_minus_one_minus_one_over_q(self):
        assert isotropy_search(Fraction(-1), Fraction(-1), bound=50) is None

    def test_trivial_point(self):
        point = isotropy_search(Fraction(1), Fraction(1), bound=10)
        assert point is not None
        x, y, z = point
        assert x * x + y * y == z * z and any((x, y, z))

    def test_fractional_coefficients(self):
        point = isotropy_search(Fraction(1, 4), Fraction(3, 4), bound=20)
        if point is not None:
            x, y, z = point
            assert Fraction(1, 4) * x * x + Fraction(3, 4) * y * y == z * z


class TestDegreeOracle:
    def test_example_quadratic(self):
        f7x = FunctionField(FF(7), "x")
        y = f7x.ratfunc(f7x.ring.poly([1, 0, 1]), f7x.ring.gen())
        assert degree_oracle(y) == 2

    def test_example_cubic(self):
        f5x = FunctionField(FF(5), "x")
        y = f5x.from_poly(f5x.ring.poly([0, 0, 0, 1]))
        assert degree_oracle(y) == 3

    def test_identity(self):
        f7x = FunctionField(FF(7), "x")
        assert degree_oracle(f7x.gen()) == 1


class TestHenselCount:
    def test_lifts(self, v5):
        assert hensel_count(v5, Fraction(11), 4) == 2

    def test_no_root(self, v5):
        assert hensel_count(v5, Fraction(2), 4) == 0

    def test_exact_square(self, v5):
        assert hensel_count(v5, Fraction(9), 6) == 2

    def test_even_value_nonunit(self, v5):
        assert hensel_count(v5, Fraction(25) * 11, 5) == 2
        assert hensel_count(v5, Fraction(2, 25), 5) == 0

    def test_precision_floor(self, v5):
        with pytest.raises(PrecisionTooLow):
            hensel_count(v5, Fraction(11), 3)


class TestAxiomFuzz:
    def test_gauss_extension_agrees(self, v5):
        w = gauss_extension(v5, FunctionField(QQ, "x"))
        report = valuation_axiom_fuzz(w, samples=1000, seed=0)
        assert report.agreement and report.counterexample is None
        assert report.checked > 0

    def test_deterministic_reports(self, v5):
        w = gauss_extension(v5, FunctionField(QQ, "x"))
        r1 = valuation_axiom_fuzz(w, samples=200, seed=3)
        r2 = valuation_axiom_fuzz(w, samples=200, seed=3)
        assert r1 == r2

    def test_corrupted_evaluator_is_caught(self, v5):
        class Corrupted:
            """Deliberately wrong: reports |v(x)|, breaking multiplicativity
            whenever a positive and a negative value meet."""

            base = QQ

            def describe(self):
                return "corrupted"

            def value_of(self, x):
                if not x:
                    from conicval.value import INFINITY
                    return INFINITY
                n = v5.value_of(x)
                return n if n >= Value(0) else -n

        from conicval.oracle import sample_rational
        report = valuation_axiom_fuzz(
            Corrupted(), samples=500, seed=1,
            sampler=lambda rng: sample_rational(rng, 30))
        assert not report.agreement
        assert report.counterexample is not None
