//! JSON scenario configuration. Every field has a default, so `{}` is a
//! complete configuration: the reference chain (N = 600, gamma = 1,
//! lambda = 1, D = 0, g = 0.05, delta_coupling = 0), the pure Bell input,
//! and the time grid [0, 30] with 600 points.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use eub_core::{AngleConvention, BellDiagonalState, ChainParams};

/// Configuration failure with a field-level message.
#[derive(Debug, Clone, Error)]
#[error("config error: {field}: {message}")]
pub struct ConfigError {
    pub field: String,
    pub message: String,
}

impl ConfigError {
    pub fn new(field: &str, message: impl Into<String>) -> Self {
        Self { field: field.to_string(), message: message.into() }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainConfig {
    /// Number of chain sites.
    #[serde(rename = "N", default = "defaults::sites")]
    pub sites: u64,
    /// XY exchange anisotropy.
    #[serde(default = "defaults::gamma")]
    pub gamma: f64,
    /// Transverse field strength.
    #[serde(default = "defaults::lambda")]
    pub lambda: f64,
    /// Dzyaloshinskii-Moriya interaction strength.
    #[serde(rename = "D", default)]
    pub dm: f64,
    /// Probe-chain coupling strength.
    #[serde(default = "defaults::g")]
    pub g: f64,
    /// Coupling anisotropy between the two probe qubits.
    #[serde(default)]
    pub delta_coupling: f64,
    /// Inverse-tangent branch for the Bogoliubov angle.
    #[serde(default)]
    pub angle_convention: AngleConvention,
}

impl Default for ChainConfig {
    fn default() -> Self {
        Self {
            sites: defaults::sites(),
            gamma: defaults::gamma(),
            lambda: defaults::lambda(),
            dm: 0.0,
            g: defaults::g(),
            delta_coupling: 0.0,
            angle_convention: AngleConvention::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateConfig {
    #[serde(default = "defaults::r1")]
    pub r1: f64,
    #[serde(default = "defaults::r2")]
    pub r2: f64,
    #[serde(default = "defaults::r3")]
    pub r3: f64,
}

impl Default for StateConfig {
    fn default() -> Self {
        Self { r1: defaults::r1(), r2: defaults::r2(), r3: defaults::r3() }
    }
}

/// Which chain parameter a sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepParameter {
    #[serde(rename = "lambda")]
    Lambda,
    #[serde(rename = "D")]
    Dm,
    #[serde(rename = "N")]
    Sites,
    #[serde(rename = "gamma")]
    Gamma,
    #[serde(rename = "delta_coupling")]
    DeltaCoupling,
    #[serde(rename = "g")]
    G,
}

impl SweepParameter {
    pub fn name(self) -> &'static str {
        match self {
            SweepParameter::Lambda => "lambda",
            SweepParameter::Dm => "D",
            SweepParameter::Sites => "N",
            SweepParameter::Gamma => "gamma",
            SweepParameter::DeltaCoupling => "delta_coupling",
            SweepParameter::G => "g",
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub parameter: SweepParameter,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    #[serde(default)]
    pub chain: ChainConfig,
    #[serde(default)]
    pub state: StateConfig,
    #[serde(default = "defaults::t_start")]
    pub t_start: f64,
    #[serde(default = "defaults::t_end")]
    pub t_end: f64,
    #[serde(default = "defaults::t_steps")]
    pub t_steps: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepConfig>,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        Self {
            chain: ChainConfig::default(),
            state: StateConfig::default(),
            t_start: defaults::t_start(),
            t_end: defaults::t_end(),
            t_steps: defaults::t_steps(),
            sweep: None,
        }
    }
}

mod defaults {
    pub fn sites() -> u64 {
        600
    }
    pub fn gamma() -> f64 {
        1.0
    }
    pub fn lambda() -> f64 {
        1.0
    }
    pub fn g() -> f64 {
        0.05
    }
    pub fn r1() -> f64 {
        1.0
    }
    pub fn r2() -> f64 {
        -1.0
    }
    pub fn r3() -> f64 {
        1.0
    }
    pub fn t_start() -> f64 {
        0.0
    }
    pub fn t_end() -> f64 {
        30.0
    }
    pub fn t_steps() -> u64 {
        600
    }
}

impl ScenarioConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let cfg: Self = serde_json::from_str(text)
            .map_err(|e| ConfigError::new("<document>", e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        self.chain_params()
            .validate()
            .map_err(|e| ConfigError::new("chain", e.to_string()))?;
        self.initial_state()
            .validate()
            .map_err(|e| ConfigError::new("state", e.to_string()))?;
        if !self.t_start.is_finite() || self.t_start < 0.0 {
            return Err(ConfigError::new("t_start", format!("must be >= 0, got {}", self.t_start)));
        }
        if !self.t_end.is_finite() || self.t_start >= self.t_end {
            return Err(ConfigError::new(
                "t_end",
                format!("must exceed t_start = {}, got {}", self.t_start, self.t_end),
            ));
        }
        if self.t_steps < 2 {
            return Err(ConfigError::new("t_steps", format!("needs at least 2 points, got {}", self.t_steps)));
        }
        if let Some(sweep) = &self.sweep {
            Self::validate_sweep(sweep)?;
        }
        Ok(())
    }

    fn validate_sweep(sweep: &SweepConfig) -> Result<(), ConfigError> {
        if sweep.values.is_empty() {
            return Err(ConfigError::new("sweep.values", "needs at least one value"));
        }
        for (i, &v) in sweep.values.iter().enumerate() {
            if !v.is_finite() {
                return Err(ConfigError::new("sweep.values", format!("value #{i} is not finite")));
            }
            if sweep.parameter == SweepParameter::Sites && (v.fract() != 0.0 || v < 3.0) {
                return Err(ConfigError::new(
                    "sweep.values",
                    format!("N sweep needs integers >= 3, got {v}"),
                ));
            }
        }
        let mut sorted = sweep.values.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite values"));
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(ConfigError::new("sweep.values", "duplicate values"));
        }
        Ok(())
    }

    pub fn chain_params(&self) -> ChainParams {
        ChainParams {
            sites: self.chain.sites as usize,
            gamma: self.chain.gamma,
            lambda: self.chain.lambda,
            dm: self.chain.dm,
            g: self.chain.g,
            delta_coupling: self.chain.delta_coupling,
            angle_convention: self.chain.angle_convention,
        }
    }

    pub fn initial_state(&self) -> BellDiagonalState {
        BellDiagonalState { r1: self.state.r1, r2: self.state.r2, r3: self.state.r3 }
    }

    /// The configuration with one chain parameter replaced by a sweep value.
    pub fn with_parameter(&self, parameter: SweepParameter, value: f64) -> Self {
        let mut cfg = self.clone();
        cfg.sweep = None;
        match parameter {
            SweepParameter::Lambda => cfg.chain.lambda = value,
            SweepParameter::Dm => cfg.chain.dm = value,
            SweepParameter::Sites => cfg.chain.sites = value as u64,
            SweepParameter::Gamma => cfg.chain.gamma = value,
            SweepParameter::DeltaCoupling => cfg.chain.delta_coupling = value,
            SweepParameter::G => cfg.chain.g = value,
        }
        cfg
    }
}
