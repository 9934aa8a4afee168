import random
from fractions import Fraction

import pytest

from irredcert.intpoly import IntPoly
from irredcert.valuation import INFINITY, digit_sum, is_prime, vp, vp_factorial, vpx


def floor_sum_valuation(m, p):
    """Independent oracle: sum of floor(m / p^j) over j >= 1."""
    total = 0
    q = p
    while q <= m:
        total += m // q
        q *= p
    return total


class TestVp:
    def test_examples(self):
        assert vp(720, 2) == 4
        assert vp(1, 7) == 0
        assert vp(0, 5) is INFINITY
        assert vp(-24, 2) == 3

    def test_rejects_non_prime(self):
        for bad in (0, 1, 4, 9, -3, 15):
            with pytest.raises(ValueError):
                vp(12, bad)

    def test_additive_on_products(self):
        rng = random.Random(11)
        for _ in range(200):
            p = rng.choice([2, 3, 5, 7, 11])
            a = rng.randint(-(10**6), 10**6)
            b = rng.randint(-(10**6), 10**6)
            lhs = vp(a * b, p)
            rhs = vp(a, p) + vp(b, p)
            assert lhs == rhs or (lhs is INFINITY and rhs is INFINITY)


class TestVpFactorial:
    def test_paper_digit_example(self):
        # 6 = 110 in base 2, so (6 - 2) / 1 = 4
        assert vp_factorial(6, 2) == 4
        assert digit_sum(6, 2) == 2

    def test_base_three(self):
        assert vp_factorial(6, 3) == 2
        assert vp(720, 3) == 2

    def test_zero(self):
        assert vp_factorial(0, 7) == 0

    def test_matches_floor_sum(self):
        rng = random.Random(13)
        for _ in range(300):
            m = rng.randint(0, 5000)
            p = rng.choice([2, 3, 5, 7, 11, 13, 97])
            assert vp_factorial(m, p) == floor_sum_valuation(m, p)

    def test_strict_slope_bound(self):
        for p in (2, 3, 5, 7, 11, 47):
            for i in range(1, 1001):
                assert Fraction(vp_factorial(i, p), i) < Fraction(1, p - 1)


class TestVpx:
    def test_examples(self):
        assert vpx(IntPoly((2, 4, 6)), 2) == 1
        assert vpx(IntPoly((4, 6, 1)), 3) == 0
        assert vpx(IntPoly(()), 5) is INFINITY

    def test_gauss_multiplicative(self):
        rng = random.Random(17)
        for _ in range(150):
            p = rng.choice([2, 3, 5])
            f = IntPoly([rng.randint(-50, 50) for _ in range(rng.randint(1, 6))])
            g = IntPoly([rng.randint(-50, 50) for _ in range(rng.randint(1, 6))])
            lhs = vpx(f * g, p)
            rhs = vpx(f, p) + vpx(g, p)
            assert lhs == rhs or (lhs is INFINITY and rhs is INFINITY)


class TestInfinity:
    def test_ordering(self):
        assert INFINITY > 10**100
        assert not INFINITY < 5
        assert INFINITY >= INFINITY
        assert not INFINITY > INFINITY
        assert 3 < INFINITY
        assert Fraction(1, 2) < INFINITY

    def test_absorbing_addition(self):
        assert INFINITY + 5 is INFINITY
        assert 5 + INFINITY is INFINITY
        assert INFINITY + INFINITY is INFINITY
