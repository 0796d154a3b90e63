"""Radical scalars, plane-wave records, and the exact sampling helpers."""

from fractions import Fraction

import pytest

from csym.exact import EC_I, ExactComplex, ExactMatrix
from csym.sampling import (
    cross,
    dot,
    gaussian_rational_spinor,
    momentum_mass_energy,
    rational_orthogonal_vector,
    rational_unit_vector,
)
from csym.waves import PlaneWaveFunction, Radical, bilinear, measured_momentum


class TestRadical:
    def test_perfect_square_folds(self):
        r = Radical(1, Fraction(9, 4))
        assert r.radicand == 1 and r.coeff == ExactComplex(Fraction(3, 2))

    def test_product_of_matching_radicands(self):
        a = Radical(2, Fraction(3))
        b = Radical(5, Fraction(3))
        assert (a * b).to_exact() == ExactComplex(30)

    def test_commensurable_addition(self):
        # sqrt(8) = 2 sqrt(2)
        a = Radical(1, 2)
        b = Radical(1, 8)
        assert (a + b) == Radical(3, 2)

    def test_incommensurable_addition_rejected(self):
        with pytest.raises(ValueError, match="incommensurable"):
            Radical(1, 2) + Radical(1, 3)

    def test_negative_radicand_needs_branch(self):
        with pytest.raises(ValueError):
            Radical(1, -2)
        r = Radical.sqrt(Fraction(-4), negative_branch=ExactComplex(0, -1))
        assert r.to_exact() == ExactComplex(0, -2)

    def test_cross_radicand_equality(self):
        assert Radical(2, Fraction(9, 2)) == Radical(3, 2)
        assert Radical(1, 2) != Radical(1, 3)

    def test_zero_canonical(self):
        assert Radical(0, 5).is_zero()
        assert Radical(1, 0).is_zero()
        assert Radical(0, 5) == Radical(1, 0)

    def test_numeric_value(self):
        import math

        r = Radical(ExactComplex(0, 1), 2)
        assert r.to_complex() == pytest.approx(1j * math.sqrt(2))


class TestPlaneWaveFunction:
    def test_conjugate_function(self):
        f = PlaneWaveFunction([Radical(EC_I, 2)], [1, 0, 0, -2])
        g = f.conjugate_function()
        assert g.kappa == (-1, 0, 0, 2)
        assert g.amp[0].coeff == ExactComplex(0, -1)

    def test_matrix_application(self):
        m = ExactMatrix.from_rows([[0, 1], [1, 0]])
        f = PlaneWaveFunction([Radical(1, 2), Radical(3, 2)], [0, 0, 0, 0])
        g = f.apply_matrix(m)
        assert g.amp[0] == Radical(3, 2) and g.amp[1] == Radical(1, 2)

    def test_evaluate_matches_hand_value(self):
        import cmath

        f = PlaneWaveFunction([Radical(2, 1)], [Fraction(1, 2), 0, 0, 0])
        val = f.evaluate((3.0, 0.0, 0.0, 0.0))
        assert val[0] == pytest.approx(2 * cmath.exp(1.5j))

    def test_measured_momentum(self):
        # exp[-(i/h)(p0 x0 - p.x)] reads off as (p0, p)
        f = PlaneWaveFunction([Radical(1, 1)] * 2, [-3, 1, 2, -5])
        p0, p = measured_momentum(f)
        assert p0 == 3 and p == (1, 2, -5)


class TestBilinear:
    def test_mixed_radicands_fold_when_commensurable(self):
        # entries sqrt(2) and sqrt(8): products give rational values
        vec = (Radical(1, 2), Radical(1, 8))
        m = ExactMatrix.from_rows([[0, 1], [1, 0]])
        out = bilinear(vec, m, vec)
        assert out == ExactComplex(8)  # 2 * sqrt(2)*sqrt(8) = 2*4

    def test_identity_norm(self):
        vec = (Radical(ExactComplex(0, 2), Fraction(1, 2)),)
        out = bilinear(vec, ExactMatrix.identity(1), vec)
        assert out == ExactComplex(2)


class TestSamplingHelpers:
    def test_rational_unit_vectors(self, rng):
        for _ in range(50):
            n = rational_unit_vector(rng)
            assert dot(n, n) == 1
            assert all(isinstance(x, Fraction) for x in n)

    def test_orthogonal_vectors(self, rng):
        for _ in range(50):
            n = rational_unit_vector(rng)
            v = rational_orthogonal_vector(rng, n)
            assert dot(n, v) == 0 and any(v)

    def test_momentum_mass_energy_pythagorean(self, rng):
        for _ in range(50):
            p_abs, mc, p0 = momentum_mass_energy(rng)
            assert p0 * p0 == p_abs * p_abs + mc * mc
            assert p0 > 0 and mc > 0 and p_abs >= 0

    def test_gaussian_rational_spinor_nonzero(self, rng):
        for _ in range(20):
            z = gaussian_rational_spinor(rng)
            assert z[0] or z[1]

    def test_cross_product_identity(self, rng):
        for _ in range(20):
            n = rational_unit_vector(rng)
            l = rational_orthogonal_vector(rng, n)
            m = cross(n, l)
            assert dot(m, m) == dot(l, l)  # |n x l| = |l| for orthogonal unit n
            assert dot(m, n) == 0 and dot(m, l) == 0
