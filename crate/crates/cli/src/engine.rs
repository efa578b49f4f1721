//! Trace and sweep evaluation. One trace walks a uniform time grid through
//! decoherence pair -> evolved state -> uncertainty report, sequentially; a
//! sweep runs one trace per parameter value in parallel, ordered by value.

use rayon::prelude::*;
use thiserror::Error;

use eub_core::dynamics::evolve_state;
use eub_core::information::{report, MeasurementSetting};
use eub_core::ModeTable;

use crate::config::{ConfigError, ScenarioConfig, SweepParameter};

#[derive(Debug, Error)]
pub enum EngineError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("model error: {0}")]
    Core(#[from] eub_core::Error),
}

/// Everything the CSV schema carries for one time point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRow {
    pub t: f64,
    pub f14: f64,
    pub f23: f64,
    pub gamma_c: f64,
    pub omega_c: f64,
    pub s_cond: f64,
    pub holevo_gap: f64,
    pub eub_adabi: f64,
    pub eub_berta: f64,
    pub lhs: f64,
}

/// One trace of a sweep, tagged with its parameter value.
#[derive(Debug, Clone)]
pub struct SweepTrace {
    pub parameter: SweepParameter,
    pub value: f64,
    pub rows: Vec<TraceRow>,
}

impl SweepTrace {
    /// File stem `<parameter>_<value>`; integer-valued parameters print as
    /// integers.
    pub fn file_stem(&self) -> String {
        if self.parameter == SweepParameter::Sites {
            format!("{}_{}", self.parameter.name(), self.value as u64)
        } else {
            format!("{}_{}", self.parameter.name(), self.value)
        }
    }
}

/// Uniform grid with inclusive endpoints.
pub fn time_grid(t_start: f64, t_end: f64, steps: u64) -> Vec<f64> {
    let n = steps as usize;
    let span = t_end - t_start;
    (0..n)
        .map(|i| t_start + span * i as f64 / (n - 1) as f64)
        .collect()
}

/// Evaluate a single trajectory. Sequential over time points; rejects
/// configurations that carry a sweep block.
pub fn run_trace(cfg: &ScenarioConfig) -> Result<Vec<TraceRow>, EngineError> {
    cfg.validate()?;
    if cfg.sweep.is_some() {
        return Err(ConfigError::new("sweep", "trace runs take no sweep block").into());
    }
    trace_rows(cfg)
}

fn trace_rows(cfg: &ScenarioConfig) -> Result<Vec<TraceRow>, EngineError> {
    let params = cfg.chain_params();
    let state = cfg.initial_state();
    let setting = MeasurementSetting::pauli_xz();
    let table = ModeTable::new(&params);
    let mut rows = Vec::with_capacity(cfg.t_steps as usize);
    for t in time_grid(cfg.t_start, cfg.t_end, cfg.t_steps) {
        let pair = table.pair(t);
        let x = evolve_state(&state, &pair)?;
        let r = report(t, &x, &setting)?;
        rows.push(TraceRow {
            t,
            f14: pair.f14,
            f23: pair.f23,
            gamma_c: x.gamma_c,
            omega_c: x.omega_c,
            s_cond: r.s_cond,
            holevo_gap: r.holevo_gap,
            eub_adabi: r.eub_adabi,
            eub_berta: r.eub_berta,
            lhs: r.lhs,
        });
    }
    Ok(rows)
}

/// Evaluate one trace per sweep value, in parallel, returned in ascending
/// value order on an identical time grid.
pub fn run_sweep(cfg: &ScenarioConfig) -> Result<Vec<SweepTrace>, EngineError> {
    cfg.validate()?;
    let sweep = cfg
        .sweep
        .as_ref()
        .ok_or_else(|| ConfigError::new("sweep", "sweep runs need a sweep block"))?;
    let mut values = sweep.values.clone();
    values.sort_by(|a, b| a.partial_cmp(b).expect("finite values"));

    // Validate every derived scenario before spending any compute.
    let scenarios: Vec<(f64, ScenarioConfig)> = values
        .iter()
        .map(|&v| (v, cfg.with_parameter(sweep.parameter, v)))
        .collect();
    for (v, scenario) in &scenarios {
        scenario.validate().map_err(|e| {
            ConfigError::new("sweep.values", format!("value {v}: {e}"))
        })?;
    }

    let parameter = sweep.parameter;
    scenarios
        .into_par_iter()
        .map(|(value, scenario)| {
            trace_rows(&scenario).map(|rows| SweepTrace { parameter, value, rows })
        })
        .collect()
}
