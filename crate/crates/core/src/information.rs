//! Entropic quantities for the evolved probe, along two deliberately separate
//! routes:
//!
//! * closed forms specific to the X state under the sigma_x / sigma_z
//!   measurement pair, and
//! * a generic definition-level pipeline (projective measurement, partial
//!   trace, Hermitian eigensolver) that works for any two-qubit density
//!   matrix and any single-qubit bases.
//!
//! All logarithms are base 2 and 0 log 0 = 0 throughout.

use num_complex::Complex;

use crate::dynamics::XState;
use crate::error::{Error, Result};
use crate::linalg::{hermiticity_defect, hermitian_eigenvalues, trace, CMat};
use crate::scalar::Real;

/// Tolerance for Hermiticity and unit-trace checks on input matrices.
const DENSITY_TOL: f64 = 1e-10;
/// Eigenvalues above this bound (from floating-point noise near pure states)
/// still count as a valid spectrum; negatives in [-EIG_TOL, 0) clamp to zero.
const EIG_TOL: f64 = 1e-9;
/// Outcomes with probability below this contribute nothing to any average
/// entropy and their conditional states are not defined.
const PROB_FLOOR: f64 = 1e-14;
/// Slack allowed when asserting the lhs >= Adabi-bound ordering.
const ORDERING_TOL: f64 = 1e-9;

fn xlog2<T: Real>(x: T) -> T {
    if x > T::zero() {
        x * x.log2()
    } else {
        T::zero()
    }
}

/// Shannon entropy of a (p, 1-p) distribution, in bits.
///
/// Arguments within 1e-12 outside [0, 1] are clamped; beyond that the call is
/// a domain error.
pub fn binary_entropy<T: Real>(p: T) -> Result<T> {
    let tol = T::real(1e-12);
    if p < -tol || p > T::one() + tol {
        return Err(Error::Domain(format!("binary_entropy({p}) needs p in [0, 1]")));
    }
    let p = p.max(T::zero()).min(T::one());
    Ok(-xlog2(p) - xlog2(T::one() - p))
}

fn density_spectrum<T: Real, const N: usize>(rho: &CMat<T, N>) -> Result<[T; N]> {
    let tol = T::real(DENSITY_TOL);
    let defect = hermiticity_defect(rho);
    if defect > tol {
        return Err(Error::NotDensityMatrix(format!(
            "hermiticity defect {defect:e} exceeds {DENSITY_TOL:e}"
        )));
    }
    let tr = trace(rho);
    if (tr.re - T::one()).abs() > tol || tr.im.abs() > tol {
        return Err(Error::NotDensityMatrix(format!("trace is {} + {}i, not 1", tr.re, tr.im)));
    }
    let eigs = hermitian_eigenvalues(rho);
    if eigs[0] < -T::real(EIG_TOL) {
        return Err(Error::NotDensityMatrix(format!(
            "negative eigenvalue {:e} below -{EIG_TOL:e}",
            eigs[0]
        )));
    }
    Ok(eigs)
}

/// Von Neumann entropy -sum lambda_i log2 lambda_i of a density matrix,
/// eigenvalues from the dense Hermitian solver, negatives clamped to zero.
pub fn von_neumann_entropy<T: Real, const N: usize>(rho: &CMat<T, N>) -> Result<T> {
    let eigs = density_spectrum(rho)?;
    let mut s = T::zero();
    for lambda in eigs {
        let lambda = lambda.max(T::zero());
        if lambda > T::zero() {
            s = s - lambda * lambda.log2();
        }
    }
    Ok(s)
}

/// Reduced state of qubit B (trace over A).
pub fn reduced_b<T: Real>(rho: &CMat<T, 4>) -> CMat<T, 2> {
    [
        [rho[0][0] + rho[2][2], rho[0][1] + rho[2][3]],
        [rho[1][0] + rho[3][2], rho[1][1] + rho[3][3]],
    ]
}

/// Reduced state of qubit A (trace over B).
pub fn reduced_a<T: Real>(rho: &CMat<T, 4>) -> CMat<T, 2> {
    [
        [rho[0][0] + rho[1][1], rho[0][2] + rho[1][3]],
        [rho[2][0] + rho[3][1], rho[2][2] + rho[3][3]],
    ]
}

fn mat4_mul<T: Real>(a: &CMat<T, 4>, b: &CMat<T, 4>) -> CMat<T, 4> {
    let zero = Complex::new(T::zero(), T::zero());
    let mut out = [[zero; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = zero;
            for k in 0..4 {
                acc = acc + a[i][k] * b[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Orthonormal single-qubit measurement basis (eigenvectors of an observable).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementBasis<T> {
    vectors: [[Complex<T>; 2]; 2],
}

impl<T: Real> MeasurementBasis<T> {
    /// Eigenbasis of sigma_x: (|0> +- |1>)/sqrt(2).
    pub fn pauli_x() -> Self {
        let h = T::FRAC_1_SQRT_2();
        let re = |x: T| Complex::new(x, T::zero());
        Self { vectors: [[re(h), re(h)], [re(h), re(-h)]] }
    }

    /// Eigenbasis of sigma_y: (|0> +- i |1>)/sqrt(2).
    pub fn pauli_y() -> Self {
        let h = T::FRAC_1_SQRT_2();
        Self {
            vectors: [
                [Complex::new(h, T::zero()), Complex::new(T::zero(), h)],
                [Complex::new(h, T::zero()), Complex::new(T::zero(), -h)],
            ],
        }
    }

    /// Eigenbasis of sigma_z: the computational basis.
    pub fn pauli_z() -> Self {
        let one = Complex::new(T::one(), T::zero());
        let zero = Complex::new(T::zero(), T::zero());
        Self { vectors: [[one, zero], [zero, one]] }
    }

    /// Any orthonormal pair of single-qubit vectors.
    pub fn from_vectors(vectors: [[Complex<T>; 2]; 2]) -> Result<Self> {
        let tol = T::real(DENSITY_TOL);
        for v in &vectors {
            let norm = v[0].norm_sqr() + v[1].norm_sqr();
            if (norm - T::one()).abs() > tol {
                return Err(Error::Domain(format!("basis vector has norm^2 = {norm}")));
            }
        }
        let overlap = (vectors[0][0].conj() * vectors[1][0]
            + vectors[0][1].conj() * vectors[1][1])
            .norm();
        if overlap > tol {
            return Err(Error::Domain(format!("basis vectors overlap by {overlap:e}")));
        }
        Ok(Self { vectors })
    }

    pub fn vector(&self, i: usize) -> [Complex<T>; 2] {
        self.vectors[i]
    }

    /// Rank-one projector |v_i><v_i| lifted to the two-qubit space, acting on
    /// qubit A.
    fn projector_on_a(&self, i: usize) -> CMat<T, 4> {
        let v = self.vectors[i];
        let zero = Complex::new(T::zero(), T::zero());
        let mut p = [[zero; 4]; 4];
        for a in 0..2 {
            for b in 0..2 {
                let amp = v[a] * v[b].conj();
                p[2 * a][2 * b] = amp;
                p[2 * a + 1][2 * b + 1] = amp;
            }
        }
        p
    }
}

/// Largest squared overlap between the eigenvectors of two bases; the
/// complementarity constant of the uncertainty relations.
pub fn max_overlap<T: Real>(q: &MeasurementBasis<T>, r: &MeasurementBasis<T>) -> T {
    let mut worst = T::zero();
    for qi in 0..2 {
        for rj in 0..2 {
            let qv = q.vector(qi);
            let rv = r.vector(rj);
            let overlap = (qv[0].conj() * rv[0] + qv[1].conj() * rv[1]).norm_sqr();
            worst = worst.max(overlap);
        }
    }
    worst
}

/// The pair of observables Alice measures, with their complementarity c.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementSetting<T> {
    pub first: MeasurementBasis<T>,
    pub second: MeasurementBasis<T>,
    complementarity: T,
}

impl<T: Real> MeasurementSetting<T> {
    /// The sigma_x / sigma_z pair used throughout; its complementarity is the
    /// analytic 1/2 exactly, so log2(1/c) = 1 in the bounds.
    pub fn pauli_xz() -> Self {
        Self {
            first: MeasurementBasis::pauli_x(),
            second: MeasurementBasis::pauli_z(),
            complementarity: T::real(0.5),
        }
    }

    /// Arbitrary pair; complementarity computed from the eigenvectors.
    pub fn new(first: MeasurementBasis<T>, second: MeasurementBasis<T>) -> Self {
        let complementarity = max_overlap(&first, &second);
        Self { first, second, complementarity }
    }

    pub fn complementarity(&self) -> T {
        self.complementarity
    }
}

impl<T: Real> Default for MeasurementSetting<T> {
    fn default() -> Self {
        Self::pauli_xz()
    }
}

/// Projective measurement of qubit A in the given basis.
#[derive(Debug, Clone, Copy)]
pub struct PostMeasurement<T> {
    /// Outcome probabilities p_x.
    pub probabilities: [T; 2],
    /// Bob's normalized conditional states rho_x^B (maximally mixed where the
    /// outcome has vanishing probability).
    pub conditional_b: [CMat<T, 2>; 2],
    /// Unselected post-measurement joint state rho^{XB}.
    pub joint: CMat<T, 4>,
}

/// Measure qubit A of `rho` projectively in `basis`.
pub fn post_measurement_state<T: Real>(
    rho: &CMat<T, 4>,
    basis: &MeasurementBasis<T>,
) -> Result<PostMeasurement<T>> {
    density_spectrum(rho)?;
    let zero = Complex::new(T::zero(), T::zero());
    let half = Complex::new(T::real(0.5), T::zero());
    let mut probabilities = [T::zero(); 2];
    let mut conditional_b = [[[zero; 2]; 2]; 2];
    let mut joint = [[zero; 4]; 4];
    for i in 0..2 {
        let proj = basis.projector_on_a(i);
        let projected = mat4_mul(&proj, &mat4_mul(rho, &proj));
        let p = trace(&projected).re;
        probabilities[i] = p;
        for r in 0..4 {
            for c in 0..4 {
                joint[r][c] = joint[r][c] + projected[r][c];
            }
        }
        if p > T::real(PROB_FLOOR) {
            let reduced = reduced_b(&projected);
            let inv = Complex::new(T::one() / p, T::zero());
            for r in 0..2 {
                for c in 0..2 {
                    conditional_b[i][r][c] = reduced[r][c] * inv;
                }
            }
        } else {
            conditional_b[i] = [[half, zero], [zero, half]];
        }
    }
    Ok(PostMeasurement { probabilities, conditional_b, joint })
}

/// Holevo quantity I(X;B) = S(rho_B) - sum_x p_x S(rho_x^B) for the
/// measurement of `basis` on qubit A.
pub fn holevo_quantity<T: Real>(rho: &CMat<T, 4>, basis: &MeasurementBasis<T>) -> Result<T> {
    let measured = post_measurement_state(rho, basis)?;
    let mut avg = T::zero();
    for i in 0..2 {
        let p = measured.probabilities[i];
        if p > T::real(PROB_FLOOR) {
            avg = avg + p * von_neumann_entropy(&measured.conditional_b[i])?;
        }
    }
    Ok(von_neumann_entropy(&reduced_b(rho))? - avg)
}

/// Quantum mutual information I(A;B) = S(rho_A) + S(rho_B) - S(rho_AB).
pub fn mutual_information<T: Real>(rho: &CMat<T, 4>) -> Result<T> {
    let s_ab = von_neumann_entropy(rho)?;
    let s_a = von_neumann_entropy(&reduced_a(rho))?;
    let s_b = von_neumann_entropy(&reduced_b(rho))?;
    Ok(s_a + s_b - s_ab)
}

/// Uncertainty sum S(Q|B) + S(R|B) from the post-measurement joint states.
pub fn lhs_uncertainty<T: Real>(rho: &CMat<T, 4>, m: &MeasurementSetting<T>) -> Result<T> {
    let s_b = von_neumann_entropy(&reduced_b(rho))?;
    let joint_q = post_measurement_state(rho, &m.first)?.joint;
    let joint_r = post_measurement_state(rho, &m.second)?.joint;
    let s_qb = von_neumann_entropy(&joint_q)?;
    let s_rb = von_neumann_entropy(&joint_r)?;
    Ok(s_qb - s_b + (s_rb - s_b))
}

/// X-state spectrum terms entering the closed forms. Even in each coherence
/// separately, so the absolute values guard sign conventions without changing
/// the value.
fn xstate_spectrum_terms<T: Real>(x: &XState<T>) -> [T; 4] {
    let one = T::one();
    let quarter = T::real(0.25);
    let r3 = x.zz_correlation();
    let g = x.gamma_c.abs();
    let o = x.omega_c.abs();
    [
        (one - o - r3) * quarter,
        (one + o - r3) * quarter,
        (one - g + r3) * quarter,
        (one + g + r3) * quarter,
    ]
}

/// Closed-form conditional entropy S(A|B) of an evolved X state; equals
/// S(rho_AB) - 1 because B's marginal is maximally mixed.
pub fn conditional_entropy_closed<T: Real>(x: &XState<T>) -> T {
    let mut s = T::zero();
    for term in xstate_spectrum_terms(x) {
        s = s - xlog2(term);
    }
    s - T::one()
}

/// Closed-form Holevo gap delta = I(A;B) - I(Q;B) - I(R;B) of an evolved X
/// state under the sigma_x / sigma_z pair.
///
/// The measurement term depends on the coherences only through the combination
/// Gamma + Omega (it is even in that sum), so the signed sum is used; taking
/// the absolute value of each coherence separately would change the value
/// whenever their signs differ.
pub fn holevo_gap_closed<T: Real>(x: &XState<T>) -> T {
    let one = T::one();
    let two = one + one;
    let quarter = T::real(0.25);
    let eighth = T::real(0.125);
    let r3 = x.zz_correlation();
    let coherence_sum = x.gamma_c + x.omega_c;

    let mut spectrum_part = T::zero();
    for term in xstate_spectrum_terms(x) {
        spectrum_part = spectrum_part + xlog2(term);
    }
    let z_part = xlog2((one - r3) * quarter) + xlog2((one + r3) * quarter);
    let x_part = xlog2((two - coherence_sum) * eighth) + xlog2((two + coherence_sum) * eighth);
    -two + spectrum_part - two * z_part - two * x_part
}

/// Memory-assisted uncertainty bound 1 + S(A|B) + max{0, delta}.
pub fn eub_adabi<T: Real>(x: &XState<T>) -> T {
    T::one() + conditional_entropy_closed(x) + holevo_gap_closed(x).max(T::zero())
}

/// The original memory-assisted bound log2(1/c) + S(A|B); with c = 1/2 this
/// is 1 + S(A|B).
pub fn eub_berta<T: Real>(x: &XState<T>) -> T {
    T::one() + conditional_entropy_closed(x)
}

/// Every uncertainty quantity at one time point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UncertaintyReport<T> {
    pub t: T,
    /// Conditional entropy S(A|B).
    pub s_cond: T,
    /// Holevo gap delta.
    pub holevo_gap: T,
    /// 1 + S(A|B) + max{0, delta}.
    pub eub_adabi: T,
    /// 1 + S(A|B).
    pub eub_berta: T,
    /// S(Q|B) + S(R|B) from the generic pipeline.
    pub lhs: T,
}

/// Assemble the closed-form bounds and the generic left-hand side for an
/// evolved X state, asserting the bound ordering before returning.
///
/// The closed forms assume the sigma_x / sigma_z setting; `m` feeds the
/// left-hand-side computation.
pub fn report<T: Real>(
    t: T,
    x: &XState<T>,
    m: &MeasurementSetting<T>,
) -> Result<UncertaintyReport<T>> {
    let s_cond = conditional_entropy_closed(x);
    let holevo_gap = holevo_gap_closed(x);
    let adabi = T::one() + s_cond + holevo_gap.max(T::zero());
    let berta = T::one() + s_cond;
    let lhs = lhs_uncertainty(&x.as_matrix(), m)?;
    if lhs < adabi - T::real(ORDERING_TOL) {
        return Err(Error::OrderingViolation(format!(
            "lhs = {lhs} but Adabi bound = {adabi} at t = {t}"
        )));
    }
    Ok(UncertaintyReport { t, s_cond, holevo_gap, eub_adabi: adabi, eub_berta: berta, lhs })
}
