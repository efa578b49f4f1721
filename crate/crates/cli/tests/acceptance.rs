//! Acceptance suite. Each test evaluates one criterion at its pinned
//! tolerance and prints a PASS/FAIL line (run with `-- --nocapture` to see
//! the lines for passing criteria).

use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use eub_cli::config::{ScenarioConfig, StateConfig, SweepConfig, SweepParameter};
use eub_cli::engine::{run_sweep, run_trace, TraceRow};
use eub_core::dynamics::evolve_state;
use eub_core::information::{
    holevo_quantity, lhs_uncertainty, mutual_information, reduced_b, von_neumann_entropy,
    MeasurementBasis, MeasurementSetting,
};
use eub_core::linalg::hermitian_eigenvalues;
use eub_core::verification::{run_suite, sample_bell_diagonal, sample_factors};
use eub_core::{BellDiagonalState, ChainParams, DecoherencePair, ModeTable};

const PURE: StateConfig = StateConfig { r1: 1.0, r2: -1.0, r3: 1.0 };
const MIXED: StateConfig = StateConfig { r1: 1.0, r2: -0.2, r3: 0.2 };

fn verdict(id: &str, pass: bool, detail: &str) {
    println!("[acceptance] {id}: {} ({detail})", if pass { "PASS" } else { "FAIL" });
}

fn scenario(state: StateConfig) -> ScenarioConfig {
    ScenarioConfig { state, ..ScenarioConfig::default() }
}

fn mean_eub(rows: &[TraceRow]) -> f64 {
    rows.iter().map(|r| r.eub_adabi).sum::<f64>() / rows.len() as f64
}

/// Adabi bound computed purely through the generic pipeline.
fn generic_adabi(rho: &eub_core::linalg::CMat<f64, 4>) -> f64 {
    let s_cond = von_neumann_entropy(rho).unwrap() - von_neumann_entropy(&reduced_b(rho)).unwrap();
    let gap = mutual_information(rho).unwrap()
        - holevo_quantity(rho, &MeasurementBasis::pauli_x()).unwrap()
        - holevo_quantity(rho, &MeasurementBasis::pauli_z()).unwrap();
    1.0 + s_cond + gap.max(0.0)
}

#[test]
fn criterion_1_initial_moment_values() {
    let pure_rows = run_trace(&scenario(PURE)).unwrap();
    let pure_start = pure_rows[0].eub_adabi;
    let pure_ok = pure_start.abs() <= 1e-12;

    let mixed_rows = run_trace(&scenario(MIXED)).unwrap();
    let mixed_start = mixed_rows[0].eub_adabi;
    let state = BellDiagonalState { r1: 1.0, r2: -0.2, r3: 0.2 };
    let unit = DecoherencePair { t: 0.0, f14: 1.0, f23: 1.0 };
    let oracle = generic_adabi(&evolve_state(&state, &unit).unwrap().as_matrix());
    let mixed_ok = (mixed_start - oracle).abs() < 1e-9 && (mixed_start - 0.9709506).abs() < 1e-6;

    let pass = pure_ok && mixed_ok;
    verdict(
        "criterion 1 (initial-moment values)",
        pass,
        &format!("pure eub(0) = {pure_start:e}, mixed eub(0) = {mixed_start:.10} vs oracle {oracle:.10}"),
    );
    assert!(pass);
}

#[test]
fn criterion_2_closed_form_oracle_equivalence() {
    let start = Instant::now();
    let report = run_suite(42, 1000);
    let elapsed = start.elapsed();

    let random: Vec<_> = report
        .results
        .iter()
        .filter(|r| r.case_id.starts_with("random-"))
        .collect();
    let worst = random.iter().map(|r| r.abs_diff).fold(0.0_f64, f64::max);
    let count_ok = random.len() == 5000;
    let pass = count_ok && random.iter().all(|r| r.pass) && worst < 1e-9 && elapsed < Duration::from_secs(5);
    verdict(
        "criterion 2 (closed-form/oracle equivalence)",
        pass,
        &format!("{} checks over 1000 cases, worst |diff| = {worst:.3e}, {elapsed:.2?}", random.len()),
    );
    assert!(pass);
}

#[test]
fn criterion_3_bound_ordering() {
    let mut worst_lhs_gap = f64::INFINITY;
    let mut ok = true;
    for state in [PURE, MIXED] {
        for row in run_trace(&scenario(state)).unwrap() {
            ok &= row.lhs >= row.eub_adabi - 1e-9;
            ok &= row.eub_adabi >= row.eub_berta - 1e-9;
            worst_lhs_gap = worst_lhs_gap.min(row.lhs - row.eub_adabi);
        }
    }

    let setting = MeasurementSetting::pauli_xz();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..1000 {
        let s0 = sample_bell_diagonal(&mut rng);
        let f = sample_factors(&mut rng);
        let x = evolve_state(&s0, &f).unwrap();
        let adabi = eub_core::information::eub_adabi(&x);
        let berta = eub_core::information::eub_berta(&x);
        let lhs = lhs_uncertainty(&x.as_matrix(), &setting).unwrap();
        ok &= lhs >= adabi - 1e-9 && adabi >= berta - 1e-9;
        worst_lhs_gap = worst_lhs_gap.min(lhs - adabi);
    }
    verdict(
        "criterion 3 (bound ordering)",
        ok,
        &format!("min(lhs - adabi) = {worst_lhs_gap:.3e} over 2200 grid points and 1000 random cases"),
    );
    assert!(ok);
}

#[test]
fn criterion_4_decoherence_factor_identities() {
    let start = Instant::now();
    let params = ChainParams::default();
    let table = ModeTable::new(&params);
    let grid: Vec<f64> = (0..200).map(|i| 30.0 * i as f64 / 199.0).collect();

    let pair0 = table.pair(0.0);
    let mut worst: f64 = (pair0.f14 - 1.0).abs().max((pair0.f23 - 1.0).abs());

    for &t in &grid {
        for mu in 1..=4 {
            worst = worst.max((table.factor(mu, mu, t) - 1.0).abs());
            for nu in 1..=4 {
                worst = worst.max((table.factor(mu, nu, t) - table.factor(nu, mu, t)).abs());
            }
        }
        // delta_coupling = 0 in the reference chain forces |F_23| = 1.
        worst = worst.max((table.factor(2, 3, t) - 1.0).abs());
    }
    for modified in [
        ChainParams { g: 0.0, ..params },
        ChainParams { gamma: 0.0, ..params },
    ] {
        let table = ModeTable::new(&modified);
        for &t in &grid {
            let p = table.pair(t);
            worst = worst.max((p.f14 - 1.0).abs()).max((p.f23 - 1.0).abs());
        }
    }
    let elapsed = start.elapsed();
    let pass = worst <= 1e-12 && elapsed < Duration::from_secs(2);
    verdict(
        "criterion 4 (decoherence-factor identities)",
        pass,
        &format!("worst identity deviation {worst:.3e}, {elapsed:.2?}"),
    );
    assert!(pass);
}

#[test]
fn criterion_5_trend_reproduction() {
    #[derive(Clone, Copy, PartialEq)]
    enum Direction {
        Increasing,
        Decreasing,
    }
    let start = Instant::now();
    let sweeps = [
        (SweepParameter::Lambda, vec![0.5, 1.0, 1.5], Direction::Decreasing),
        (SweepParameter::Dm, vec![0.0, 0.2, 0.4], Direction::Increasing),
        (SweepParameter::Sites, vec![100.0, 300.0, 600.0], Direction::Increasing),
        (SweepParameter::Gamma, vec![0.5, 1.0, 1.5], Direction::Decreasing),
    ];
    let mut failures = Vec::new();
    for (state_name, state) in [("pure", PURE), ("mixed", MIXED)] {
        for (parameter, values, direction) in &sweeps {
            let mut cfg = scenario(state);
            cfg.sweep = Some(SweepConfig { parameter: *parameter, values: values.clone() });
            let traces = run_sweep(&cfg).unwrap();
            let averages: Vec<f64> = traces.iter().map(|t| mean_eub(&t.rows)).collect();
            let monotone = averages.windows(2).all(|w| match direction {
                Direction::Increasing => w[1] > w[0],
                Direction::Decreasing => w[1] < w[0],
            });
            let wanted = match direction {
                Direction::Increasing => "increasing",
                Direction::Decreasing => "decreasing",
            };
            println!(
                "[acceptance]   trend {state_name} {} over {values:?}: averages {averages:?} (want strictly {wanted})",
                parameter.name(),
            );
            if !monotone {
                failures.push(format!(
                    "{state_name} state, {} in {values:?}: time-averaged eub {averages:?} is not strictly {wanted}",
                    parameter.name(),
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    let in_time = elapsed < Duration::from_secs(30);
    let pass = failures.is_empty() && in_time;
    verdict(
        "criterion 5 (trend reproduction)",
        pass,
        &format!("{} of 8 sweep comparisons hold, {elapsed:.2?}", 8 - failures.len()),
    );
    assert!(in_time, "trend sweeps exceeded the 30 s budget: {elapsed:?}");
    assert!(
        failures.is_empty(),
        "monotonicity failures:\n  {}",
        failures.join("\n  ")
    );
}

#[test]
fn criterion_6_positivity() {
    let mut configs = vec![scenario(PURE), scenario(MIXED)];
    let sweeps = [
        (SweepParameter::Lambda, vec![0.5, 1.0, 1.5]),
        (SweepParameter::Dm, vec![0.0, 0.2, 0.4]),
        (SweepParameter::Sites, vec![100.0, 300.0, 600.0]),
        (SweepParameter::Gamma, vec![0.5, 1.0, 1.5]),
    ];
    for state in [PURE, MIXED] {
        for (parameter, values) in &sweeps {
            for &v in values {
                configs.push(scenario(state).with_parameter(*parameter, v));
            }
        }
    }

    let mut min_eigenvalue = f64::INFINITY;
    let mut worst_trace_dev = 0.0_f64;
    for cfg in &configs {
        let params = cfg.chain_params();
        let state = cfg.initial_state();
        let table = ModeTable::new(&params);
        for t in eub_cli::engine::time_grid(cfg.t_start, cfg.t_end, cfg.t_steps) {
            let x = evolve_state(&state, &table.pair(t)).unwrap();
            for ev in x.eigenvalues() {
                min_eigenvalue = min_eigenvalue.min(ev);
            }
            min_eigenvalue = min_eigenvalue.min(hermitian_eigenvalues(&x.as_matrix())[0]);
            worst_trace_dev = worst_trace_dev.max((x.trace() - 1.0).abs());
        }
    }
    let pass = min_eigenvalue >= -1e-12 && worst_trace_dev <= 1e-12;
    verdict(
        "criterion 6 (positivity)",
        pass,
        &format!(
            "{} traces, min eigenvalue {min_eigenvalue:.3e}, worst |trace - 1| = {worst_trace_dev:.3e}",
            configs.len()
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_7_performance() {
    let start = Instant::now();
    let rows = run_trace(&scenario(PURE)).unwrap();
    let trace_time = start.elapsed();
    assert_eq!(rows.len(), 600);

    let mut cfg = scenario(PURE);
    cfg.sweep = Some(SweepConfig {
        parameter: SweepParameter::Lambda,
        values: vec![0.5, 1.0, 1.5, 2.0],
    });
    let start = Instant::now();
    let traces = run_sweep(&cfg).unwrap();
    let sweep_time = start.elapsed();
    assert_eq!(traces.len(), 4);

    let pass = trace_time < Duration::from_secs(2) && sweep_time < Duration::from_secs(4);
    verdict(
        "criterion 7 (performance)",
        pass,
        &format!("single trace (N=600, 600 points) {trace_time:.2?}, 4-value sweep {sweep_time:.2?}"),
    );
    assert!(pass);
}

#[test]
fn criterion_8_reproducibility() {
    let dir = tempfile::tempdir().unwrap();
    let eub = env!("CARGO_BIN_EXE_eub");

    let report_a = dir.path().join("a.json");
    let report_b = dir.path().join("b.json");
    for out in [&report_a, &report_b] {
        let run = Command::new(eub)
            .args(["verify", "--seed", "42", "--cases", "1000", "--out", out.to_str().unwrap()])
            .output()
            .unwrap();
        assert!(run.status.success(), "verify failed: {}", String::from_utf8_lossy(&run.stderr));
    }
    let json_identical = fs::read(&report_a).unwrap() == fs::read(&report_b).unwrap();

    let config = dir.path().join("trace.json");
    fs::write(&config, r#"{"chain": {"N": 600}, "t_end": 30.0, "t_steps": 600}"#).unwrap();
    let csv_a = dir.path().join("a.csv");
    let csv_b = dir.path().join("b.csv");
    for out in [&csv_a, &csv_b] {
        let run = Command::new(eub)
            .args(["trace", "--config", config.to_str().unwrap(), "--out", out.to_str().unwrap()])
            .output()
            .unwrap();
        assert!(run.status.success());
    }
    let csv_identical = fs::read(&csv_a).unwrap() == fs::read(&csv_b).unwrap();

    let pass = json_identical && csv_identical;
    verdict(
        "criterion 8 (reproducibility)",
        pass,
        &format!("verify reports byte-identical: {json_identical}, trace CSVs byte-identical: {csv_identical}"),
    );
    assert!(pass);
}
