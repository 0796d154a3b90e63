"""The free electromagnetic field in 8-component Dirac form.

The field column (0, E, 0, H) satisfies a massless Dirac-type equation with
8x8 gamma matrices.  This module builds those matrices, verifies their
algebra exactly, derives the space of admissible conjugation matrices by
exact nullspace solving, and realizes the two conjugations on photon plane
waves: the quantum charge conjugation C and the conjugation Q induced by
flipping the signs of the speed of light and of the quantum of action.
The central claim checked here is that C and Q produce the same function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    EC_I,
    EC_ONE,
    ExactComplex,
    ExactMatrix,
    anticommutator,
    in_span,
    nullspace,
)
from .sampling import Vec3, cross, dot
from .waves import (
    PlaneWaveFunction,
    Radical,
    bilinear,
    free_dirac_residual_matrix,
    matrix_times_radicals,
    max_abs_radical,
    measured_momentum,
)

METRIC_DIAG = (1, -1, -1, -1)

ALLOWED_LAMBDA = (
    ExactComplex(1),
    ExactComplex(-1),
    ExactComplex(0, 1),
    ExactComplex(0, -1),
)


class GammaIdentityError(ValueError):
    """A defining matrix failed one of its construction-time identities."""


def _alpha_matrices() -> tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    a1 = ExactMatrix.from_rows([
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
        [0, 0, 0, -1],
        [0, 0, 1, 0],
    ])
    a2 = ExactMatrix.from_rows([
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [-1, 0, 0, 0],
        [0, -1, 0, 0],
    ])
    a3 = ExactMatrix.from_rows([
        [0, 0, 0, 1],
        [0, 0, -1, 0],
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
    ])
    return a1, a2, a3


def _block8(tl, tr, bl, br) -> ExactMatrix:
    rows = []
    for i in range(4):
        rows.append(list(tl.row(i)) + list(tr.row(i)))
    for i in range(4):
        rows.append(list(bl.row(i)) + list(br.row(i)))
    return ExactMatrix.from_rows(rows)


@dataclass(frozen=True)
class GammaSet8:
    """The five 8x8 matrices with metric diag(+,-,-,-)."""

    g0: ExactMatrix
    g1: ExactMatrix
    g2: ExactMatrix
    g3: ExactMatrix
    g5: ExactMatrix

    @property
    def vector(self) -> tuple[ExactMatrix, ...]:
        return (self.g0, self.g1, self.g2, self.g3)


def _verify_identities_8(gs: GammaSet8) -> None:
    ident = ExactMatrix.identity(8)
    gam = gs.vector
    for a in range(4):
        for b in range(4):
            want = ident.scale(2 * (METRIC_DIAG[a] if a == b else 0))
            if anticommutator(gam[a], gam[b]) != want:
                raise GammaIdentityError(
                    f"anticommutation failed: {{g{a}, g{b}}} != 2 g^{a}{b}"
                )
    for a in range(4):
        want = ident.scale(-2 if a == 0 else 0)
        if anticommutator(gam[a], gs.g5) != want:
            raise GammaIdentityError(
                f"shifted g5 anticommutation failed for index {a}"
            )
    if gs.g0.dagger() != gs.g0:
        raise GammaIdentityError("g0 is not hermitian")
    for k, g in enumerate(gam[1:], start=1):
        if g.dagger() != -g:
            raise GammaIdentityError(f"g{k} is not antihermitian")
    if gs.g0 @ gs.g0 != ident:
        raise GammaIdentityError("g0 squared is not the identity")
    for k, g in enumerate(gam[1:], start=1):
        if g @ g != -ident:
            raise GammaIdentityError(f"g{k} squared is not minus the identity")
    for a, g in enumerate(gam):
        if g.conj() != g:
            raise GammaIdentityError(f"g{a} is not real")
    if gs.g0.transpose() != gs.g0:
        raise GammaIdentityError("g0 is not symmetric")
    for k, g in enumerate(gam[1:], start=1):
        if g.transpose() != -g:
            raise GammaIdentityError(f"g{k} is not antisymmetric")
    if gs.g5.dagger() != gs.g5:
        raise GammaIdentityError("g5 is not hermitian")
    if gs.g5.conj() != gs.g5:
        raise GammaIdentityError("g5 is not real")
    if gs.g5 @ gs.g5 != ident:
        raise GammaIdentityError("g5 squared is not the identity")


def build_gamma8(corrupt: tuple[str, int, int] | None = None) -> GammaSet8:
    """Construct and verify the 8x8 set; rejects on any failed identity.

    `corrupt` is a test hook: ("g1", i, j) flips the sign of one entry of the
    named matrix before verification, which must trigger a rejection.
    """
    a1, a2, a3 = _alpha_matrices()
    z4 = ExactMatrix.zeros(4, 4)
    i4 = ExactMatrix.identity(4)
    mats = {
        "g0": _block8(z4, i4, i4, z4),
        "g1": _block8(a1, z4, z4, -a1),
        "g2": _block8(a2, z4, z4, -a2),
        "g3": _block8(a3, z4, z4, -a3),
        "g5": _block8(z4, -i4, -i4, z4),
    }
    if corrupt is not None:
        name, i, j = corrupt
        m = mats[name]
        entries = list(m.entries)
        idx = i * m.cols + j
        entries[idx] = entries[idx] - ExactComplex(1)
        mats[name] = ExactMatrix(m.rows, m.cols, entries)
    gs = GammaSet8(**mats)
    _verify_identities_8(gs)
    return gs


def gamma5_product_check(gs: GammaSet8) -> tuple[bool, ExactMatrix]:
    """Does g0 g1 g2 g3 equal g5?  Returns the verdict and the actual product.

    This claimed relation is checked separately from the construction-time
    identities because, for the defining matrices above, the product comes
    out block-antisymmetric while g5 is symmetric (g5 equals -g0 here), so
    the relation fails; the suite reports that honestly.
    """
    prod = gs.g0 @ gs.g1 @ gs.g2 @ gs.g3
    return prod == gs.g5, prod


@dataclass(frozen=True)
class ConjugationSpace:
    """Canonical basis of matrices U with U g0 = g0 U and U gk = -gk U."""

    basis: tuple[ExactMatrix, ...]
    rank: int
    nullity: int

    def contains(self, m: ExactMatrix) -> bool:
        vecs = [ExactMatrix.column(b.entries) for b in self.basis]
        return in_span(vecs, ExactMatrix.column(m.entries))


def conjugation_constraint_rows(gammas, signs, n) -> ExactMatrix:
    """Vectorized rows of U G - s G U = 0 for each (G, s), unknowns vec(U)."""
    rows = []
    for G, s in zip(gammas, signs):
        for i in range(n):
            for j in range(n):
                row = [ExactComplex(0)] * (n * n)
                for k in range(n):
                    row[i * n + k] = row[i * n + k] + G[k, j]
                for k in range(n):
                    row[k * n + j] = row[k * n + j] - G[i, k] * s
                rows.append(row)
    return ExactMatrix.from_rows(rows)


def solve_conjugation_8(gs: GammaSet8) -> ConjugationSpace:
    """Exact nullspace of the transposition-conjugation constraints.

    The condition U g^aT U^-1 = g^a becomes, with the transpose pattern of
    this set, the homogeneous system {U g0 - g0 U = 0, U gk + gk U = 0} in
    the 64 entries of U; lambda * g0 must lie in the solution span.
    """
    system = conjugation_constraint_rows(gs.vector, (1, -1, -1, -1), 8)
    basis, rank = nullspace(system)
    space = ConjugationSpace(
        basis=tuple(ExactMatrix(8, 8, b.entries) for b in basis),
        rank=rank,
        nullity=len(basis),
    )
    if not space.contains(gs.g0):
        raise AssertionError("g0 unexpectedly missing from the conjugation space")
    return space


# ---------------------------------------------------------------------------
# Photon plane-wave states and the two conjugations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PhotonState:
    """A normalized photon plane wave in the 8-component Dirac form.

    The amplitude is column(0, l, 0, m)/sqrt(2 |l|^2) so that the norm is
    exactly 1, times exp[-(i/hbar)(p0 x0 - p.x)] with p = p0 n.  The signs
    of c and hbar are carried as labels with unit magnitudes; lam is the
    conjugation phase, one of +1, -1, +i, -i.
    """

    l: Vec3
    m: Vec3
    n: Vec3
    p0: Fraction
    hbar_sign: int = 1
    c_sign: int = 1
    lam: ExactComplex = ExactComplex(0, -1)

    @property
    def p(self) -> Vec3:
        return tuple(self.p0 * ni for ni in self.n)

    def record(self) -> PlaneWaveFunction:
        norm_radicand = Fraction(1, 2) / dot(self.l, self.l)
        amp = [Radical(0)] * 8
        for i in range(3):
            amp[1 + i] = Radical(ExactComplex(self.l[i]), norm_radicand)
            amp[5 + i] = Radical(ExactComplex(self.m[i]), norm_radicand)
        hbar = Fraction(self.hbar_sign)
        kappa = [-self.p0 / hbar] + [pi / hbar for pi in self.p]
        return PlaneWaveFunction(amp, kappa)

    def norm_sq(self) -> ExactComplex:
        rec = self.record()
        acc = Radical(0)
        for a in rec.amp:
            acc = acc + a.conjugate() * a
        return acc.to_exact()


def photon_plane_wave(n, l, p0, hbar_sign: int = 1, c_sign: int = 1,
                      lam: ExactComplex | None = None) -> PhotonState:
    """Build a photon state; rejects non-transverse or non-unit guiding data."""
    n = tuple(Fraction(x) for x in n)
    l = tuple(Fraction(x) for x in l)
    p0 = Fraction(p0)
    if dot(n, n) != 1:
        raise ValueError(f"guiding vector must be exactly unit: |n|^2 = {dot(n, n)}")
    if dot(n, l) != 0:
        raise ValueError(f"polarization must be transverse: n.l = {dot(n, l)}")
    if not any(l):
        raise ValueError("polarization l must be nonzero")
    if p0 == 0:
        raise ValueError("p0 must be nonzero")
    lam = ExactComplex(0, -1) if lam is None else ExactComplex.coerce(lam)
    if lam not in ALLOWED_LAMBDA:
        raise ValueError(f"lambda must be one of +1, -1, +i, -i, got {lam!r}")
    if hbar_sign not in (-1, 1) or c_sign not in (-1, 1):
        raise ValueError("hbar_sign and c_sign must be +1 or -1")
    state = PhotonState(l=l, m=cross(n, l), n=n, p0=p0,
                        hbar_sign=hbar_sign, c_sign=c_sign, lam=lam)
    if state.norm_sq() != EC_ONE:
        raise AssertionError("photon state failed exact normalization")
    return state


@dataclass(frozen=True)
class ConjugatedPhoton:
    """The realized function after a conjugation, with its state labels."""

    record: PlaneWaveFunction
    n: Vec3
    l: Vec3
    m: Vec3
    lam: ExactComplex
    hbar_sign: int
    c_sign: int

    @property
    def momentum_label(self) -> tuple[Fraction, Vec3]:
        return measured_momentum(self.record)

    @property
    def energy_label(self) -> Fraction:
        p0, _ = measured_momentum(self.record)
        return Fraction(self.c_sign) * p0


def apply_C_photon(state: PhotonState | ConjugatedPhoton, gs: GammaSet8 | None = None
                   ) -> ConjugatedPhoton:
    """Charge conjugation: lam * g0 (Psi^dagger g0)^T, which reduces to lam Psi*.

    Both routes are computed and compared exactly before returning.
    """
    gs = gs or build_gamma8()
    rec = state.record() if isinstance(state, PhotonState) else state.record
    via_matrix = rec.conjugate_function().apply_matrix(gs.g0).apply_matrix(gs.g0).scale(state.lam)
    shortcut = rec.conjugate_function().scale(state.lam)
    if via_matrix != shortcut:
        raise AssertionError("matrix and shortcut conjugation routes disagree")
    return ConjugatedPhoton(
        record=via_matrix,
        n=state.n, l=state.l, m=state.m, lam=state.lam,
        hbar_sign=state.hbar_sign, c_sign=state.c_sign,
    )


def _q_relabeled(rec: PlaneWaveFunction) -> PlaneWaveFunction:
    """Re-express a photon record with hbar and all 4-momentum labels flipped.

    For the massless amplitude nothing flips (no factor contains c or hbar),
    and the exponent picks up two sign flips, one from the momentum labels
    and one from hbar, so the realized function is unchanged.
    """
    kappa = [-(-k) for k in rec.kappa]
    return PlaneWaveFunction(rec.amp, kappa)


def apply_Q_photon(state: PhotonState | ConjugatedPhoton, gs: GammaSet8 | None = None
                   ) -> ConjugatedPhoton:
    """Light-speed/action inversion: U_Q (Psi-bar)^T on the relabeled state.

    U_Q equals the charge-conjugation matrix lam * g0 because the massless
    equation is blind to the signs of c and hbar.
    """
    gs = gs or build_gamma8()
    rec = state.record() if isinstance(state, PhotonState) else state.record
    relabeled = _q_relabeled(rec)
    out = relabeled.conjugate_function().apply_matrix(gs.g0).apply_matrix(gs.g0).scale(state.lam)
    return ConjugatedPhoton(
        record=out,
        n=state.n, l=state.l, m=state.m, lam=state.lam,
        hbar_sign=-state.hbar_sign, c_sign=-state.c_sign,
    )


def phase_displacement_form(state: PhotonState) -> PlaneWaveFunction:
    """The conjugate written with flipped polarizations and a +pi/2 phase shift.

    Valid for lam = -i: -i amp e^(i theta) = (-amp) e^(i (theta + pi/2)),
    realized exactly by folding e^(i pi/2) = i into the amplitude.
    """
    if state.lam != ExactComplex(0, -1):
        raise ValueError("the displaced-phase form is specific to lambda = -i")
    base = state.record()
    amp = [a * ExactComplex(-1) * EC_I for a in base.amp]
    kappa = [-k for k in base.kappa]
    return PlaneWaveFunction(amp, kappa)


def dirac_form_residual(rec: PlaneWaveFunction, hbar_sign: int, gs: GammaSet8) -> float:
    """Max |component| of the massless Dirac-form operator applied to rec."""
    m = free_dirac_residual_matrix(rec.kappa, Fraction(0), Fraction(hbar_sign), gs.vector)
    return max_abs_radical(matrix_times_radicals(m, rec.amp))


def currents(state: PhotonState, conjugated: ConjugatedPhoton, gs: GammaSet8 | None = None
             ) -> tuple[ExactComplex, tuple, ExactComplex, tuple]:
    """The bilinears Psi-bar gamma^a Psi for the state and its conjugate."""
    gs = gs or build_gamma8()
    rec, crec = state.record(), conjugated.record
    j0 = bilinear(rec.amp, gs.g0 @ gs.g0, rec.amp)
    jk = tuple(bilinear(rec.amp, gs.g0 @ g, rec.amp) for g in (gs.g1, gs.g2, gs.g3))
    j0c = bilinear(crec.amp, gs.g0 @ gs.g0, crec.amp)
    jkc = tuple(bilinear(crec.amp, gs.g0 @ g, crec.amp) for g in (gs.g1, gs.g2, gs.g3))
    return j0, jk, j0c, jkc


def formal_energy_flux(rec: PlaneWaveFunction, c_sign: int
                       ) -> tuple[ExactComplex, tuple[ExactComplex, ...]]:
    """Energy and flux bilinears evaluated formally on the amplitudes.

    Uses the plain squares (no complex conjugation), i.e. the classical
    formulas applied to the possibly complex conjugated amplitudes: returns
    (sum_i amp_i^2)/8 and c (E_amp x H_amp)/4 as exact coefficients of 1/pi.
    """
    sq = Radical(0)
    for a in rec.amp:
        sq = sq + a * a
    energy = sq.to_exact() / 8
    e_amp, h_amp = rec.amp[1:4], rec.amp[5:8]

    def _cross(j, k):
        return (e_amp[j] * h_amp[k] - e_amp[k] * h_amp[j]).to_exact()

    flux = tuple(
        _cross(j, k) * Fraction(c_sign, 4) for j, k in ((1, 2), (2, 0), (0, 1))
    )
    return energy, flux
