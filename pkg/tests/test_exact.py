"""Exact scalar/matrix arithmetic and elimination."""

from fractions import Fraction

import pytest

from csym.exact import (
    EC_I,
    EC_ONE,
    ExactComplex,
    ExactMatrix,
    anticommutator,
    commutator,
    fraction_sqrt,
    in_span,
    matrix_rank,
    nullspace,
    rowspace_equal,
    solve,
)


# --- independent oracle: a minimal fraction-pair Gaussian eliminator -------
# kept deliberately separate from the package implementation


def _oracle_rank_nullity(rows):
    rows = [[(Fraction(z.re), Fraction(z.im)) for z in row] for row in rows]
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col] != (0, 0):
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        a, b = rows[rank][col]
        d = a * a + b * b
        inv = (a / d, -b / d)
        rows[rank] = [
            (x * inv[0] - y * inv[1], x * inv[1] + y * inv[0]) for x, y in rows[rank]
        ]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != (0, 0):
                f = rows[r][col]
                rows[r] = [
                    (x - (f[0] * px - f[1] * py), y - (f[0] * py + f[1] * px))
                    for (x, y), (px, py) in zip(rows[r], rows[rank])
                ]
        rank += 1
    return rank, ncols - rank


class TestExactComplex:
    def test_field_axioms_random(self, rng):
        vals = []
        for _ in range(20):
            n = rng.integers(-9, 10, size=4)
            d = rng.integers(1, 9, size=2)
            vals.append(ExactComplex(Fraction(int(n[0]), int(d[0])), Fraction(int(n[1]), int(d[1]))))
        for a in vals[:6]:
            for b in vals[6:12]:
                for c in vals[12:16]:
                    assert (a + b) * c == a * c + b * c
                    assert (a * b) * c == a * (b * c)
        for a in vals:
            if not a.is_zero():
                assert a * (EC_ONE / a) == EC_ONE

    def test_conjugation_and_norm(self):
        a = ExactComplex(Fraction(3, 5), Fraction(-4, 5))
        assert a.conjugate().conjugate() == a
        assert a.norm_sq() == 1
        assert (a * a.conjugate()) == ExactComplex(1)

    def test_refuses_floats(self):
        with pytest.raises(TypeError):
            ExactComplex(0.5)

    def test_i_squares_to_minus_one(self):
        assert EC_I * EC_I == ExactComplex(-1)


class TestFractionSqrt:
    def test_perfect_squares(self):
        assert fraction_sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert fraction_sqrt(Fraction(0)) == 0

    def test_irrational(self):
        assert fraction_sqrt(Fraction(2)) is None
        assert fraction_sqrt(Fraction(4, 3)) is None

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            fraction_sqrt(Fraction(-1))


class TestMatrixOps:
    def test_identity_product(self):
        i3 = ExactMatrix.identity(3)
        assert i3 @ i3 == i3

    def test_self_commutator_vanishes(self):
        sx = ExactMatrix.from_rows([[0, 1], [1, 0]])
        assert commutator(sx, sx).is_zero()

    def test_dimension_mismatch_names_shapes(self):
        a = ExactMatrix.zeros(3, 2)
        b = ExactMatrix.zeros(3, 3)
        with pytest.raises(ValueError, match="3x2 by 3x3"):
            a @ b
        with pytest.raises(ValueError, match="cannot add"):
            a + b

    def test_associativity_random(self, rng):
        def rand(r, c):
            return ExactMatrix(
                r, c,
                [ExactComplex(int(x), int(y)) for x, y in
                 zip(rng.integers(-5, 6, r * c), rng.integers(-5, 6, r * c))],
            )

        for _ in range(10):
            a, b, c = rand(3, 4), rand(4, 2), rand(2, 5)
            assert (a @ b) @ c == a @ (b @ c)

    def test_dagger_involution(self, rng):
        m = ExactMatrix.from_rows([[EC_I, 2], [ExactComplex(1, -3), 0]])
        assert m.dagger().dagger() == m

    def test_anticommutator_of_dirac_pair_vanishes(self, gamma4):
        # {g0, g1} = 0 for the 4-dim set
        assert anticommutator(gamma4.g0, gamma4.g1).is_zero()


class TestElimination:
    def test_zero_matrix_nullspace(self):
        basis, rank = nullspace(ExactMatrix.zeros(2, 2))
        assert rank == 0 and len(basis) == 2

    def test_identity_nullspace(self):
        basis, rank = nullspace(ExactMatrix.identity(4))
        assert rank == 4 and basis == []

    def test_nullspace_vectors_annihilate(self, rng):
        for _ in range(10):
            ents = [ExactComplex(int(x)) for x in rng.integers(-3, 4, size=12)]
            m = ExactMatrix(3, 4, ents)
            basis, rank = nullspace(m)
            assert rank + len(basis) == 4
            for v in basis:
                assert (m @ v).is_zero()

    def test_rank_matches_oracle(self, rng):
        for _ in range(10):
            ents = [ExactComplex(int(x), int(y)) for x, y in
                    zip(rng.integers(-3, 4, size=20), rng.integers(-3, 4, size=20))]
            m = ExactMatrix(4, 5, ents)
            rows = [list(m.row(i)) for i in range(4)]
            r_oracle, _ = _oracle_rank_nullity(rows)
            assert matrix_rank(m) == r_oracle

    def test_solve_consistent_and_inconsistent(self):
        a = ExactMatrix.from_rows([[1, 2], [2, 4]])
        b = ExactMatrix.column([1, 2])
        x = solve(a, b)
        assert x is not None and (a @ x) == b
        assert solve(a, ExactMatrix.column([1, 3])) is None

    def test_conjugation_constraint_nullities_vs_oracle(self, gamma4, gamma8):
        # the two constraint systems, eliminated by the independent oracle
        from csym.photon import conjugation_constraint_rows

        sys4 = conjugation_constraint_rows(gamma4.vector, (-1, 1, -1, 1), 4)
        rows = [list(sys4.row(i)) for i in range(sys4.rows)]
        rank, nullity = _oracle_rank_nullity(rows)
        assert (rank, nullity) == (15, 1)

        sys8 = conjugation_constraint_rows(gamma8.vector, (1, -1, -1, -1), 8)
        rows = [list(sys8.row(i)) for i in range(sys8.rows)]
        rank, nullity = _oracle_rank_nullity(rows)
        assert (rank, nullity) == (60, 4)


class TestRowspaceEqual:
    def test_same_plane(self):
        a = ExactMatrix.from_rows([[1, 0], [0, 1]])
        b = ExactMatrix.from_rows([[1, 1], [1, -1]])
        assert rowspace_equal(a, b)

    def test_different_lines(self):
        a = ExactMatrix.from_rows([[1, 0]])
        b = ExactMatrix.from_rows([[0, 1]])
        assert not rowspace_equal(a, b)

    def test_width_mismatch(self):
        a = ExactMatrix.from_rows([[1, 0]])
        b = ExactMatrix.from_rows([[1, 0, 0]])
        with pytest.raises(ValueError, match="width mismatch"):
            rowspace_equal(a, b)

    def test_equivalence_relation(self, rng):
        mats = []
        for _ in range(6):
            ents = [ExactComplex(int(x)) for x in rng.integers(-2, 3, size=6)]
            mats.append(ExactMatrix(2, 3, ents))
        for a in mats:
            assert rowspace_equal(a, a)
        for a in mats:
            for b in mats:
                assert rowspace_equal(a, b) == rowspace_equal(b, a)
        for a in mats:
            for b in mats:
                for c in mats:
                    if rowspace_equal(a, b) and rowspace_equal(b, c):
                        assert rowspace_equal(a, c)


def test_in_span():
    v1 = ExactMatrix.column([1, 0, 1])
    v2 = ExactMatrix.column([0, 1, 1])
    assert in_span([v1, v2], ExactMatrix.column([2, 3, 5]))
    assert not in_span([v1, v2], ExactMatrix.column([0, 0, 1]))
