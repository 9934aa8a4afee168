import random

import pytest

from irredcert.intpoly import (
    NEG_INF,
    IntPoly,
    PhiExpansion,
    content,
    divrem_monic,
    phi_assemble,
    phi_expand,
)


def P(*coeffs):
    return IntPoly(coeffs)


PHI = P(1, 1, 1)  # x^2 + x + 1


class TestBasics:
    def test_trim_and_zero(self):
        assert P(0, 0).is_zero
        assert P().coeffs == ()
        assert P(1, 2, 0, 0).coeffs == (1, 2)

    def test_degree_marker(self):
        assert P().degree is NEG_INF
        assert P(5).degree == 0
        assert NEG_INF < 0
        assert NEG_INF < -100
        assert not NEG_INF > 0
        assert NEG_INF <= NEG_INF
        assert not NEG_INF < NEG_INF

    def test_rejects_non_int(self):
        with pytest.raises(TypeError):
            IntPoly((1.5, 2))

    def test_str_round_forms(self):
        assert str(P()) == "0"
        assert str(P(7)) == "7"
        assert str(P(-1, -1, 0, 0, 1)) == "x^4 - x - 1"
        assert str(P(0, -1)) == "-x"
        assert str(P(4, 11, 17, 12, 6)) == "6*x^4 + 12*x^3 + 17*x^2 + 11*x + 4"

    def test_evaluate(self):
        f = P(-5, 4, 5, 2, 1)
        assert f(0) == -5
        assert f(1) == 7
        assert f(-2) == 7


class TestArithmetic:
    def test_add_cancellation(self):
        assert P(1, 1) + P(-1, 1) == P(0, 2)

    def test_add_identity(self):
        f = P(3, 0, 2)
        assert P() + f == f

    def test_add_mixed(self):
        assert P(1, 1, 1) + P(0, 0, -1) == P(1, 1)

    def test_mul_paper_product(self):
        # (x^2+x+5)(x^2+x-1) is the doubled counterexample polynomial
        assert P(5, 1, 1) * P(-1, 1, 1) == P(-5, 4, 5, 2, 1)

    def test_mul_identity(self):
        f = P(2, 0, -7, 1)
        assert f * P(1) == f

    def test_mul_square(self):
        sq = PHI * PHI
        assert sq == P(1, 2, 3, 2, 1)
        for x in (0, 1, 2, -1, -2):
            assert sq(x) == PHI(x) ** 2

    def test_scalar_and_pow(self):
        assert 3 * P(1, 1) == P(3, 3)
        assert P(0, 1) ** 5 == P(0, 0, 0, 0, 0, 1)
        assert PHI**0 == P(1)


class TestDivremMonic:
    def test_square_division(self):
        q, r = divrem_monic(P(1, 2, 3, 2, 1), PHI)
        assert (q, r) == (PHI, P())
        assert q * PHI + r == P(1, 2, 3, 2, 1)

    def test_self_division(self):
        assert divrem_monic(PHI, PHI) == (P(1), P())

    def test_low_degree(self):
        assert divrem_monic(P(0, 1), PHI) == (P(), P(0, 1))

    def test_multiply_back_random(self):
        rng = random.Random(7)
        for _ in range(50):
            f = IntPoly([rng.randint(-50, 50) for _ in range(rng.randint(0, 12))])
            d = rng.randint(1, 4)
            phi = IntPoly([rng.randint(-5, 5) for _ in range(d)] + [1])
            q, r = divrem_monic(f, phi)
            assert q * phi + r == f
            assert r.degree < phi.degree

    def test_rejects_bad_divisor(self):
        with pytest.raises(ValueError):
            divrem_monic(P(1, 1), P(1, 2))
        with pytest.raises(ValueError):
            divrem_monic(P(1, 1), P(1))


class TestPhiExpansion:
    def test_square(self):
        e = phi_expand(PHI * PHI, PHI)
        assert e.parts == (P(), P(), P(1))

    def test_below_degree(self):
        f = P(3, 1)
        assert phi_expand(f, PHI).parts == (f,)

    def test_counterexample_shape(self):
        # 6*phi^2 - phi - 1 in expanded form
        f = 6 * PHI**2 - PHI - P(1)
        e = phi_expand(f, PHI)
        assert e.parts == (P(-1), P(-1), P(6))
        assert e.assemble() == f
        assert all(part.degree < PHI.degree for part in e.parts)

    def test_zero(self):
        e = phi_expand(P(), PHI)
        assert e.parts == ()
        assert e.assemble() == P()

    def test_assemble_examples(self):
        assert phi_assemble(PhiExpansion(PHI, (P(), P(), P(1)))) == P(1, 2, 3, 2, 1)
        assert phi_assemble(PhiExpansion(PHI, (P(9),))) == P(9)
        # phi^2 + 2 phi - 8 is the doubled counterexample again
        assert phi_assemble(PhiExpansion(PHI, (P(-8), P(2), P(1)))) == P(-5, 4, 5, 2, 1)

    def test_expansion_invariants_enforced(self):
        with pytest.raises(ValueError):
            PhiExpansion(PHI, (P(1, 1, 1),))
        with pytest.raises(ValueError):
            PhiExpansion(PHI, (P(1), P()))
        with pytest.raises(ValueError):
            PhiExpansion(P(1, 2), (P(1),))

    def test_round_trip_random(self):
        rng = random.Random(20240901)
        for _ in range(120):
            d = rng.randint(1, 5)
            phi = IntPoly([rng.randint(-10, 10) for _ in range(d)] + [1])
            f = IntPoly(
                [rng.randint(-(10**6), 10**6) for _ in range(rng.randint(0, 21))]
            )
            e = phi_expand(f, phi)
            assert phi_assemble(e) == f
            assert all(part.degree < phi.degree for part in e.parts)

    def test_uniqueness_by_perturbation(self):
        rng = random.Random(99)
        for _ in range(40):
            phi = IntPoly([rng.randint(-5, 5), rng.randint(-5, 5), 1])
            f = IntPoly([rng.randint(-100, 100) for _ in range(9)] + [1])
            e = phi_expand(f, phi)
            k = rng.randrange(len(e.parts))
            bumped = list(e.parts)
            bumped[k] = bumped[k] + P(1)
            acc = P()
            for part in reversed(bumped):
                acc = acc * phi + part
            assert acc != f


class TestContent:
    def test_examples(self):
        assert content(P(6, 4)) == 2
        assert content(P(3, -2, 0, 1)) == 1
        assert content(P()) == 0
        assert content(P(-4, -8)) == 4


class TestRingProperties:
    def test_ring_axioms(self):
        rng = random.Random(5)
        for _ in range(60):
            a, b, c = (
                IntPoly([rng.randint(-9, 9) for _ in range(rng.randint(0, 6))])
                for _ in range(3)
            )
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_degree_and_content_multiplicative(self):
        rng = random.Random(6)
        for _ in range(80):
            a = IntPoly([rng.randint(-20, 20) for _ in range(rng.randint(1, 7))])
            b = IntPoly([rng.randint(-20, 20) for _ in range(rng.randint(1, 7))])
            if a.is_zero or b.is_zero:
                continue
            assert (a * b).degree == a.degree + b.degree
            assert content(a * b) == content(a) * content(b)
