"""The exact field-equation system, invariance proofs, and plane waves."""

import math
from fractions import Fraction

import numpy as np
import pytest

from csym.exact import ExactComplex
from csym.maxwell import (
    PlaneWave,
    build_maxwell_system,
    check_invariance,
    classical_conjugate_column,
    classical_conjugate_wave,
    energy_poynting,
    energy_poynting_record,
    field_column,
    plane_wave_residual,
    transform_system,
)
from csym.sampling import cross
from csym.signgroup import (
    FieldOperator,
    build_field_operators,
    canonical_operators,
    classical_conjugation_operator,
)


@pytest.fixture(scope="module")
def system():
    return build_maxwell_system()


class TestSystemAssembly:
    def test_equation_count(self, system):
        # 8 field equations plus 6 potential links, counted by hand
        assert system.n_equations == 14
        assert system.rows.cols == 16 * 5

    def test_time_derivative_coefficient_in_first_curl_row(self, system):
        # coefficient of d0 acting on E_x in the first curl equation is -1
        col = 1 * 5 + 1  # component E1, slot d0
        assert system.rows[0, col] == ExactComplex(-1)

    def test_div_h_row_touches_only_h(self, system):
        row_idx = system.labels.index("divH")
        for comp in range(16):
            for slot in range(5):
                val = system.rows[row_idx, comp * 5 + slot]
                if not val.is_zero():
                    assert comp in (5, 6, 7)


class TestInvariance:
    def test_identity_operator(self, system):
        op = build_field_operators()["E"]
        cert = check_invariance(system, op)
        assert cert.invariant

    def test_q2_transform_is_identical_system(self, system):
        op = build_field_operators()["Q2"]
        assert transform_system(system, op).rows == system.rows

    def test_all_sixteen_invariant(self, system):
        for name, op in canonical_operators().items():
            cert = check_invariance(system, op)
            assert cert.invariant, f"operator {name} should leave the system invariant"

    def test_certificates_reconstruct_rows(self, system):
        op = canonical_operators()["P1"]
        cert = check_invariance(system, op)
        transformed = transform_system(system, op)
        assert cert.combinations is not None
        for i, combo in enumerate(cert.combinations):
            rebuilt = [ExactComplex(0)] * system.rows.cols
            for coeff, row_idx in zip(combo, range(system.n_equations)):
                if coeff.is_zero():
                    continue
                for j, val in enumerate(system.rows.row(row_idx)):
                    rebuilt[j] = rebuilt[j] + coeff * val
            assert tuple(rebuilt) == transformed.rows.row(i)

    def test_mutated_operator_fails(self, system):
        p1 = build_field_operators()["P1"]
        signs = [1] * 16
        for i in (1, 2, 3):
            signs[i] = -1
        mutated = FieldOperator("bad", p1.arg_sig, tuple(signs), False)
        assert not check_invariance(system, mutated).invariant

    def test_transformed_plane_wave_still_solves(self):
        # independent cross-check of invariance: transform a plane-wave
        # solution by each operator's signs and verify the residual directly
        w = PlaneWave.make(
            (Fraction(2, 7), Fraction(3, 7), Fraction(6, 7)), (3, -2, 0), Fraction(5, 3)
        )
        canon = canonical_operators()
        for name, op in canon.items():
            e_sign = op.comp_signs[1]
            h_sign = op.comp_signs[5]
            e0, ex, _ = op.arg_sig
            # transformed field: E' = sE * E(eps x), k0' = e0*k0, k' = ex*e0*k
            # as a plane wave record: l' = sE*l, m' = sH*m, args rescaled
            l2 = tuple(e_sign * x for x in w.l)
            m2 = tuple(h_sign * x for x in w.m)
            k0_new = w.k0  # overall phase rescale leaves the dispersion intact
            n2 = tuple(e0 * ex * x for x in w.n)
            probe = PlaneWave.make(n2, l2, k0_new, m=m2)
            assert plane_wave_residual(probe) == 0, f"{name} broke the residual"


class TestPlaneWave:
    def test_axis_wave_residual_zero(self):
        w = PlaneWave.make((0, 0, 1), (1, 0, 0), 1)
        assert plane_wave_residual(w) == 0
        assert w.m == (Fraction(0), Fraction(1), Fraction(0))

    def test_both_c_signs(self):
        for cs in (1, -1):
            w = PlaneWave.make((0, 0, 1), (2, 1, 0), Fraction(3, 4), c_sign=cs)
            assert plane_wave_residual(w) == 0

    def test_longitudinal_rejected(self):
        with pytest.raises(ValueError, match="transverse"):
            PlaneWave.make((0, 0, 1), (0, 0, 1), 1)

    def test_non_unit_guiding_rejected(self):
        with pytest.raises(ValueError, match="unit"):
            PlaneWave.make((0, 0, 2), (1, 0, 0), 1)

    def test_wrong_magnetic_polarity_nonzero_residual(self):
        w = PlaneWave.make((0, 0, 1), (1, 0, 0), 1, m=(0, -1, 0))
        assert plane_wave_residual(w) != 0

    def test_magnetic_choice_forced_by_curl(self, rng):
        # the cross-product reading of the magnetic polarization is the one
        # and only sign that solves the curl equation
        from csym.sampling import rational_orthogonal_vector, rational_unit_vector

        for _ in range(10):
            n = rational_unit_vector(rng)
            l = rational_orthogonal_vector(rng, n)
            good = PlaneWave.make(n, l, Fraction(5, 2))
            assert plane_wave_residual(good) == 0
            flipped = PlaneWave.make(n, l, Fraction(5, 2), m=tuple(-x for x in cross(n, l)))
            assert plane_wave_residual(flipped) != 0


class TestClassicalConjugation:
    def test_column_negation(self):
        w = PlaneWave.make((0, 0, 1), (1, 2, 0), 1)
        phi = field_column(w)
        assert classical_conjugate_column(phi) == [-x for x in phi]

    def test_wave_conjugation(self):
        w = PlaneWave.make((0, 0, 1), (1, 2, 0), 1)
        cw = classical_conjugate_wave(w)
        assert cw.l == (-1, -2, 0)
        assert cw.m == tuple(-x for x in w.m)
        assert cw.n == w.n and cw.k0 == w.k0
        assert classical_conjugate_wave(cw) == w

    def test_conjugated_wave_still_solves(self):
        n = (Fraction(1, 3), Fraction(2, 3), Fraction(2, 3))
        w = PlaneWave.make(n, (1, 1, Fraction(-3, 2)), 2)
        assert plane_wave_residual(classical_conjugate_wave(w)) == 0

    def test_commutes_with_all_operators(self):
        ce = classical_conjugation_operator()
        for op in canonical_operators().values():
            assert ce.compose(op).same_action(op.compose(ce))


class TestEnergyPoynting:
    def test_unit_wave_at_phase_zero(self):
        w = PlaneWave.make((0, 0, 1), (1, 0, 0), 1)
        W, S = energy_poynting(w, (0, 0, 0, 0))
        assert W == pytest.approx(1.0 / (4.0 * math.pi), rel=1e-15)
        assert S[2] == pytest.approx(1.0 / (4.0 * math.pi), rel=1e-15)
        assert S[0] == 0.0 and S[1] == 0.0

    def test_flux_reverses_with_c_sign(self):
        w = PlaneWave.make((0, 0, 1), (1, 0, 0), 1, c_sign=-1)
        _, S = energy_poynting(w, (0, 0, 0, 0))
        assert S[2] < 0

    def test_symbolic_record_invariant_under_conjugation(self):
        w = PlaneWave.make((Fraction(3, 5), Fraction(4, 5), 0), (4, -3, 1), Fraction(7, 3))
        assert energy_poynting_record(w) == energy_poynting_record(classical_conjugate_wave(w))

    def test_sampled_points_invariant(self, rng):
        w = PlaneWave.make((0, 0, 1), (2, -1, 0), Fraction(5, 4))
        cw = classical_conjugate_wave(w)
        for x in rng.uniform(-20, 20, size=(100, 4)):
            Wv, Sv = energy_poynting(w, x)
            Wc, Sc = energy_poynting(cw, x)
            assert Wv >= 0 and Wc >= 0
            assert Wc == pytest.approx(Wv, rel=1e-12, abs=1e-300)
            assert np.allclose(Sv, Sc, rtol=1e-12, atol=1e-300)
