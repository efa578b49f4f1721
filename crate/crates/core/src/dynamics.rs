//! Evolution of the two-qubit probe: a Bell-diagonal initial state turns into
//! an X-form density matrix whose two coherences are damped by the chain's
//! decoherence factors. The diagonal is untouched by the dephasing coupling.

use num_complex::Complex;

use crate::chain::DecoherencePair;
use crate::error::{Error, Result};
use crate::linalg::CMat;
use crate::scalar::Real;

/// Bell-diagonal two-qubit state, parameterized by the Bloch correlation
/// coefficients r_i = <sigma_i x sigma_i>. Marginals are maximally mixed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellDiagonalState<T> {
    pub r1: T,
    pub r2: T,
    pub r3: T,
}

/// Positivity slack: admits analytically extremal states (pure Bell) under
/// floating-point noise.
const POSITIVITY_TOL: f64 = 1e-12;

impl<T: Real> BellDiagonalState<T> {
    pub fn new(r1: T, r2: T, r3: T) -> Result<Self> {
        let state = Self { r1, r2, r3 };
        state.validate()?;
        Ok(state)
    }

    /// The Bell state (|00> + |11>)/sqrt(2).
    pub fn bell_phi() -> Self {
        Self { r1: T::one(), r2: -T::one(), r3: T::one() }
    }

    /// The Bell state (|01> + |10>)/sqrt(2).
    pub fn bell_psi() -> Self {
        Self { r1: T::one(), r2: T::one(), r3: -T::one() }
    }

    pub fn maximally_mixed() -> Self {
        Self { r1: T::zero(), r2: T::zero(), r3: T::zero() }
    }

    /// Quadruple whose non-negativity (up to tolerance) is density-matrix
    /// positivity; these are four times the Bell-basis eigenvalues.
    pub fn positivity_margins(&self) -> [T; 4] {
        let one = T::one();
        [
            one - self.r1 - self.r2 - self.r3,
            one - self.r1 + self.r2 + self.r3,
            one + self.r1 - self.r2 + self.r3,
            one + self.r1 + self.r2 - self.r3,
        ]
    }

    pub fn validate(&self) -> Result<()> {
        for r in [self.r1, self.r2, self.r3] {
            if !r.is_finite() {
                return Err(Error::InvalidState(format!("correlation {r} is not finite")));
            }
        }
        let tol = T::real(POSITIVITY_TOL);
        for (i, m) in self.positivity_margins().into_iter().enumerate() {
            if m < -tol {
                return Err(Error::InvalidState(format!(
                    "positivity margin {} is {m:e} for (r1, r2, r3) = ({}, {}, {})",
                    i + 1,
                    self.r1,
                    self.r2,
                    self.r3
                )));
            }
        }
        Ok(())
    }
}

/// X-form density matrix in the computational basis |00>, |01>, |10>, |11>:
/// diagonal (d1..d4) plus the outer coherence Gamma/4 at (1,4) and the inner
/// coherence Omega/4 at (2,3). `gamma_c` and `omega_c` carry the bare Gamma
/// and Omega, signed; the matrix holds them divided by four.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XState<T> {
    pub d1: T,
    pub d2: T,
    pub d3: T,
    pub d4: T,
    pub gamma_c: T,
    pub omega_c: T,
}

impl<T: Real> XState<T> {
    pub fn trace(&self) -> T {
        self.d1 + self.d2 + self.d3 + self.d4
    }

    /// The z-z Bloch correlation, recovered from the diagonal; equals the
    /// initial r3 for states produced by [`evolve_state`].
    pub fn zz_correlation(&self) -> T {
        let two = T::one() + T::one();
        two * (self.d1 + self.d4) - T::one()
    }

    /// Dense Hermitian matrix with rows/columns ordered |00>, |01>, |10>, |11>.
    pub fn as_matrix(&self) -> CMat<T, 4> {
        let z = Complex::new(T::zero(), T::zero());
        let re = |x: T| Complex::new(x, T::zero());
        let four = T::real(4.0);
        let g = self.gamma_c / four;
        let o = self.omega_c / four;
        [
            [re(self.d1), z, z, re(g)],
            [z, re(self.d2), re(o), z],
            [z, re(o), re(self.d3), z],
            [re(g), z, z, re(self.d4)],
        ]
    }

    /// Spectrum from the two 2x2 blocks: {(1 + r3 +- |Gamma|)/4,
    /// (1 - r3 +- |Omega|)/4} for evolved states. Values within 1e-12 below
    /// zero clamp to zero; anything lower is left to surface downstream.
    pub fn eigenvalues(&self) -> [T; 4] {
        let two = T::one() + T::one();
        let four = T::real(4.0);
        let clamp = |x: T| {
            if x < T::zero() && x >= -T::real(POSITIVITY_TOL) {
                T::zero()
            } else {
                x
            }
        };
        let block = |da: T, db: T, coherence: T| {
            let mid = (da + db) / two;
            let half_gap = (da - db) / two;
            let c = coherence / four;
            let radius = (half_gap * half_gap + c * c).sqrt();
            (clamp(mid + radius), clamp(mid - radius))
        };
        let (outer_hi, outer_lo) = block(self.d1, self.d4, self.gamma_c);
        let (inner_hi, inner_lo) = block(self.d2, self.d3, self.omega_c);
        [outer_hi, outer_lo, inner_hi, inner_lo]
    }
}

/// Damp the coherences of a Bell-diagonal state with the decoherence pair:
/// Gamma = (r1 - r2) f14, Omega = (r1 + r2) f23, diagonal (1 +- r3)/4.
pub fn evolve_state<T: Real>(
    s0: &BellDiagonalState<T>,
    f: &DecoherencePair<T>,
) -> Result<XState<T>> {
    s0.validate()?;
    debug_assert!(f.f14 >= T::zero() && f.f14 <= T::one() + T::real(1e-9));
    debug_assert!(f.f23 >= T::zero() && f.f23 <= T::one() + T::real(1e-9));
    let four = T::real(4.0);
    let diag_outer = (T::one() + s0.r3) / four;
    let diag_inner = (T::one() - s0.r3) / four;
    Ok(XState {
        d1: diag_outer,
        d2: diag_inner,
        d3: diag_inner,
        d4: diag_outer,
        gamma_c: (s0.r1 - s0.r2) * f.f14,
        omega_c: (s0.r1 + s0.r2) * f.f23,
    })
}
