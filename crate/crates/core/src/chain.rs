//! Spectral quantities of the XY spin-chain environment and the decoherence
//! factors |F_mu_nu(t)| of a two-qubit probe coupled to it.
//!
//! The chain is an anisotropic XY model in a transverse field with a
//! z-component Dzyaloshinskii-Moriya term, coupled to the probe through its
//! total z-magnetization. Each probe pointer state mu shifts the transverse
//! field to an effective value lambda_mu; the overlap of the differently
//! evolved environment branches is what damps the probe coherences. Everything
//! here is closed-form per fermionic mode k, so no chain state is ever stored.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Branch choice for the Bogoliubov angle's inverse tangent.
///
/// `PaperLiteral` is the single-argument principal branch; `QuadrantAware`
/// resolves the quadrant with the two-argument form. The two differ whenever
/// lambda_mu < cos(2 pi k / N) for some mode, which near-critical fields do
/// reach; the flag makes that difference auditable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AngleConvention {
    #[default]
    PaperLiteral,
    QuadrantAware,
}

/// Environment and coupling configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainParams<T> {
    /// Number of chain sites N (>= 3).
    pub sites: usize,
    /// Anisotropy gamma of the XY exchange interaction.
    pub gamma: T,
    /// Transverse field strength lambda.
    pub lambda: T,
    /// Dzyaloshinskii-Moriya interaction strength (z direction).
    pub dm: T,
    /// Probe-chain coupling strength g.
    pub g: T,
    /// Coupling anisotropy delta between the two probe qubits.
    pub delta_coupling: T,
    /// Inverse-tangent branch for the Bogoliubov angle.
    pub angle_convention: AngleConvention,
}

impl<T: Real> Default for ChainParams<T> {
    /// Reference configuration: critical-field chain, isotropic coupling.
    fn default() -> Self {
        Self {
            sites: 600,
            gamma: T::one(),
            lambda: T::one(),
            dm: T::zero(),
            g: T::real(0.05),
            delta_coupling: T::zero(),
            angle_convention: AngleConvention::PaperLiteral,
        }
    }
}

/// Effective transverse fields seen by the chain for the four probe pointer
/// states: lambda_1,4 = lambda +- g and lambda_2,3 = lambda +- g*delta.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveFields<T> {
    values: [T; 4],
}

impl<T: Real> EffectiveFields<T> {
    /// Field for pointer index mu in 1..=4.
    pub fn lambda_mu(&self, mu: usize) -> T {
        assert!((1..=4).contains(&mu), "pointer index {mu} outside 1..=4");
        self.values[mu - 1]
    }

    pub fn as_array(&self) -> [T; 4] {
        self.values
    }
}

/// Fermionic mode label k in 1..=cutoff, with cutoff M = floor((N-1)/2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModeIndex {
    k: usize,
    cutoff: usize,
}

impl ModeIndex {
    pub fn new(k: usize, cutoff: usize) -> Result<Self> {
        if k == 0 || k > cutoff {
            return Err(Error::InvalidParams(format!(
                "mode index k={k} outside 1..={cutoff}"
            )));
        }
        Ok(Self { k, cutoff })
    }

    pub fn k(self) -> usize {
        self.k
    }

    pub fn cutoff(self) -> usize {
        self.cutoff
    }
}

/// The two decoherence factors that drive the evolved probe state at time t.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecoherencePair<T> {
    pub t: T,
    /// |F_14(t)|, damping the outer coherence.
    pub f14: T,
    /// |F_23(t)|, damping the inner coherence.
    pub f23: T,
}

/// Running products over hundreds of modes can underflow; below this the
/// factor is indistinguishable from full decoherence and the product
/// short-circuits to zero.
const UNDERFLOW_CUTOFF: f64 = 1e-300;

fn bogoliubov_angle_at<T: Real>(
    lambda_mu: T,
    gamma: T,
    a: T,
    convention: AngleConvention,
) -> T {
    let num = gamma * a.sin();
    let den = lambda_mu - a.cos();
    match convention {
        AngleConvention::QuadrantAware => num.atan2(den),
        AngleConvention::PaperLiteral => {
            if den == T::zero() {
                if num == T::zero() {
                    T::zero()
                } else if num > T::zero() {
                    T::FRAC_PI_2()
                } else {
                    -T::FRAC_PI_2()
                }
            } else {
                (num / den).atan()
            }
        }
    }
}

fn dispersion_at<T: Real>(lambda_mu: T, gamma: T, a: T) -> T {
    let x = lambda_mu - a.cos();
    let y = gamma * a.sin();
    (x * x + y * y).sqrt()
}

fn quasiparticle_energy_at<T: Real>(lambda_mu: T, gamma: T, dm: T, a: T) -> T {
    let two = T::one() + T::one();
    two * (dispersion_at(lambda_mu, gamma, a) + two * dm * a.sin())
}

/// One factor of the mode product, before clamping.
///
/// `s2_mu`/`s2_nu` are sin(2 Theta) for the two pointer states, `delta_sin_sq`
/// is sin^2(Theta_mu - Theta_nu), `lam_*` the quasiparticle energies.
fn mode_bracket<T: Real>(s2_mu: T, s2_nu: T, delta_sin_sq: T, lam_mu: T, lam_nu: T, t: T) -> T {
    let two = T::one() + T::one();
    let four = two + two;
    let sin_mu = (lam_mu * t).sin();
    let sin_nu = (lam_nu * t).sin();
    let u = s2_mu * sin_mu;
    let v = s2_nu * sin_nu;
    let phase = (lam_mu * t - lam_nu * t).cos();
    T::one() - u * u - v * v + two * u * v * phase - four * u * v * delta_sin_sq * sin_mu * sin_nu
}

impl<T: Real> ChainParams<T> {
    pub fn validate(&self) -> Result<()> {
        if self.sites < 3 {
            return Err(Error::InvalidParams(format!(
                "sites: N={} but the chain needs at least 3 sites",
                self.sites
            )));
        }
        for (name, value) in [
            ("gamma", self.gamma),
            ("lambda", self.lambda),
            ("dm", self.dm),
            ("g", self.g),
            ("delta_coupling", self.delta_coupling),
        ] {
            if !value.is_finite() {
                return Err(Error::InvalidParams(format!("{name}: must be finite, got {value}")));
            }
        }
        Ok(())
    }

    /// Mode cutoff M = floor((N-1)/2). For even N the omitted k = N/2 mode has
    /// sin(2 pi k / N) = 0 and therefore contributes a unit factor, so the
    /// truncation is exact for any N.
    pub fn mode_cutoff(&self) -> usize {
        (self.sites - 1) / 2
    }

    pub fn mode(&self, k: usize) -> Result<ModeIndex> {
        ModeIndex::new(k, self.mode_cutoff())
    }

    pub fn modes(&self) -> impl Iterator<Item = ModeIndex> {
        let cutoff = self.mode_cutoff();
        (1..=cutoff).map(move |k| ModeIndex { k, cutoff })
    }

    /// Wave number a_k = 2 pi k / N of mode k.
    pub fn wave_number(&self, k: ModeIndex) -> T {
        let two_pi = T::PI() + T::PI();
        two_pi * T::from_count(k.k()) / T::from_count(self.sites)
    }

    /// Effective transverse fields for the four pointer states.
    pub fn effective_fields(&self) -> EffectiveFields<T> {
        EffectiveFields {
            values: [
                self.lambda + self.g,
                self.lambda + self.g * self.delta_coupling,
                self.lambda - self.g * self.delta_coupling,
                self.lambda - self.g,
            ],
        }
    }

    /// Bogoliubov angle theta_k for the chain at field `lambda_mu`.
    ///
    /// arctan of (gamma sin a_k) / (lambda_mu - cos a_k) under the configured
    /// branch convention; a vanishing denominator yields +-pi/2 by the sign of
    /// the numerator, 0 when both vanish.
    pub fn bogoliubov_angle(&self, lambda_mu: T, k: ModeIndex) -> T {
        bogoliubov_angle_at(lambda_mu, self.gamma, self.wave_number(k), self.angle_convention)
    }

    /// Half-difference Theta_k = (theta_k(lambda_mu) - theta_k(lambda)) / 2
    /// between the perturbed and unperturbed Bogoliubov angles.
    pub fn quench_angle(&self, lambda_mu: T, k: ModeIndex) -> T {
        let two = T::one() + T::one();
        (self.bogoliubov_angle(lambda_mu, k) - self.bogoliubov_angle(self.lambda, k)) / two
    }

    /// Single-particle dispersion epsilon_k >= 0.
    pub fn mode_energy(&self, lambda_mu: T, k: ModeIndex) -> T {
        dispersion_at(lambda_mu, self.gamma, self.wave_number(k))
    }

    /// Quasiparticle energy Lambda_k = 2 (epsilon_k + 2 D sin a_k); the DM
    /// shift can drive it negative.
    pub fn quasiparticle_energy(&self, lambda_mu: T, k: ModeIndex) -> T {
        quasiparticle_energy_at(lambda_mu, self.gamma, self.dm, self.wave_number(k))
    }

    /// Mode k's contribution to |F_mu_nu(t)|^2 before the square root,
    /// clamped to [0, 1]. Roundoff can push the raw value infinitesimally
    /// outside; clamping preserves the modulus contract.
    pub fn per_mode_factor(&self, mu: usize, nu: usize, k: ModeIndex, t: T) -> T {
        self.per_mode_factor_unclamped(mu, nu, k, t)
            .max(T::zero())
            .min(T::one())
    }

    /// Raw bracket value, exposed so tests can bound the clamp correction.
    pub fn per_mode_factor_unclamped(&self, mu: usize, nu: usize, k: ModeIndex, t: T) -> T {
        let fields = self.effective_fields();
        let lam_mu = fields.lambda_mu(mu);
        let lam_nu = fields.lambda_mu(nu);
        let th_mu = self.quench_angle(lam_mu, k);
        let th_nu = self.quench_angle(lam_nu, k);
        mode_bracket(
            (th_mu + th_mu).sin(),
            (th_nu + th_nu).sin(),
            {
                let d = (th_mu - th_nu).sin();
                d * d
            },
            self.quasiparticle_energy(lam_mu, k),
            self.quasiparticle_energy(lam_nu, k),
            t,
        )
    }

    /// Decoherence factor |F_mu_nu(t)| in [0, 1]: product of the per-mode
    /// square roots in ascending k order.
    pub fn decoherence_factor(&self, mu: usize, nu: usize, t: T) -> T {
        ModeTable::new(self).factor(mu, nu, t)
    }

    /// |F_14(t)| and |F_23(t)| bundled for the probe dynamics.
    pub fn decoherence_pair(&self, t: T) -> DecoherencePair<T> {
        ModeTable::new(self).pair(t)
    }
}

/// Per-mode spectral data precomputed for all four pointer states, so traces
/// over many time points do not re-derive the angles at every step.
///
/// The product it evaluates is bit-identical to the direct
/// [`ChainParams::decoherence_factor`] path (same expressions, same
/// k-ascending order), which in fact delegates here.
#[derive(Debug, Clone)]
pub struct ModeTable<T> {
    /// sin(2 Theta_k) per pointer state.
    double_sin: [Vec<T>; 4],
    /// Theta_k per pointer state.
    quench: [Vec<T>; 4],
    /// Lambda_k per pointer state.
    energy: [Vec<T>; 4],
}

impl<T: Real> ModeTable<T> {
    pub fn new(params: &ChainParams<T>) -> Self {
        let fields = params.effective_fields().as_array();
        let cutoff = params.mode_cutoff();
        let mut double_sin: [Vec<T>; 4] = Default::default();
        let mut quench: [Vec<T>; 4] = Default::default();
        let mut energy: [Vec<T>; 4] = Default::default();
        for mu in 0..4 {
            double_sin[mu] = Vec::with_capacity(cutoff);
            quench[mu] = Vec::with_capacity(cutoff);
            energy[mu] = Vec::with_capacity(cutoff);
            for k in params.modes() {
                let th = params.quench_angle(fields[mu], k);
                quench[mu].push(th);
                double_sin[mu].push((th + th).sin());
                energy[mu].push(params.quasiparticle_energy(fields[mu], k));
            }
        }
        Self { double_sin, quench, energy }
    }

    pub fn factor(&self, mu: usize, nu: usize, t: T) -> T {
        assert!((1..=4).contains(&mu), "pointer index {mu} outside 1..=4");
        assert!((1..=4).contains(&nu), "pointer index {nu} outside 1..=4");
        let (im, iv) = (mu - 1, nu - 1);
        let cutoff = T::real(UNDERFLOW_CUTOFF);
        let mut product = T::one();
        for k in 0..self.quench[0].len() {
            let bracket = mode_bracket(
                self.double_sin[im][k],
                self.double_sin[iv][k],
                {
                    let d = (self.quench[im][k] - self.quench[iv][k]).sin();
                    d * d
                },
                self.energy[im][k],
                self.energy[iv][k],
                t,
            )
            .max(T::zero())
            .min(T::one());
            product = product * bracket.sqrt();
            if product < cutoff {
                return T::zero();
            }
        }
        product
    }

    pub fn pair(&self, t: T) -> DecoherencePair<T> {
        DecoherencePair {
            t,
            f14: self.factor(1, 4, t),
            f23: self.factor(2, 3, t),
        }
    }
}
