//! See-saw search over encodings and decoders.
//!
//! Each restart draws random pure encodings, then alternates two exact
//! maximizations of the average success probability: the optimal decoder
//! for every bit given the states (the sign of the weighted difference
//! operator) and the optimal state for every string given the decoders (the
//! top eigenvector of the summed effects). After convergence, a round of
//! multiplicative reweighting over the `(x, i)` cells pushes up the worst
//! cell: each round multiplies a cell's weight by
//! `exp(−rate · (p − p_min) / (p_max − p_min))` and redoes both updates with
//! the weights. The best scheme seen (by worst case, then average) is kept.
//!
//! Restart `r` uses the `(r+1)`-th output of a splitmix64 stream seeded with
//! the master seed, so every restart is reproducible on its own.

mod trace;

pub use trace::{ascent_trace_check, ascent_trace_violations, TraceCheck};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bits::bit;
use crate::error::{QracError, Result};
use crate::linalg::{eigh, CMatrix};
use crate::povm::BinaryPovm;
use crate::random::random_pure_state;
use crate::schemes::{EvaluationReport, QracScheme};
use crate::state::{DensityMatrix, PureState};
use crate::tol;

/// Eigenvalues of the difference operator within this of zero count as zero.
const NULL_EIGENVALUE: f64 = 1e-12;
/// Worst-case values closer than this count as a tie.
const TIE: f64 = 1e-12;
pub const MAX_SEARCH_BITS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    /// Average-objective see-saw only.
    Average,
    /// Average see-saw followed by worst-case reweighting rounds.
    Weighted,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeeSawConfig {
    pub restarts: usize,
    pub max_iters: usize,
    pub conv_tol: f64,
    pub seed: u64,
    pub objective: Objective,
    pub reweight_rounds: usize,
    pub reweight_rate: f64,
}

impl Default for SeeSawConfig {
    fn default() -> Self {
        Self {
            restarts: 32,
            max_iters: 500,
            conv_tol: 1e-9,
            seed: 0,
            objective: Objective::Weighted,
            reweight_rounds: 20,
            reweight_rate: 0.5,
        }
    }
}

impl SeeSawConfig {
    pub fn validate(&self) -> Result<()> {
        if self.restarts == 0 || self.max_iters == 0 || self.reweight_rounds == 0 {
            return Err(QracError::Domain(
                "restart, iteration and round counts must be >= 1".into(),
            ));
        }
        if !(self.conv_tol > 0.0) {
            return Err(QracError::Domain("conv_tol must be positive".into()));
        }
        if !(self.reweight_rate > 0.0 && self.reweight_rate.is_finite()) {
            return Err(QracError::Domain(
                "reweight_rate must be positive and finite".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    PovmUpdate,
    StateUpdate,
    Reweight,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceEntry {
    pub iteration: usize,
    pub phase: Phase,
    pub average_p: f64,
    pub worst_case_p: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RestartOutcome {
    pub seed: u64,
    pub worst_case_p: f64,
    pub average_p: f64,
    pub converged: bool,
    pub trace: Vec<TraceEntry>,
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub scheme: QracScheme,
    pub report: EvaluationReport,
    /// Trace of the winning restart.
    pub trace: Vec<TraceEntry>,
    pub converged: bool,
    pub best_restart: usize,
    pub restarts: Vec<RestartOutcome>,
}

/// One splitmix64 step; returns the new state and the output.
pub fn splitmix64(state: u64) -> (u64, u64) {
    let next = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = next;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    (next, z ^ (z >> 31))
}

/// Seeds of the first `count` restarts.
pub fn restart_seeds(master: u64, count: usize) -> Vec<u64> {
    let mut state = master;
    (0..count)
        .map(|_| {
            let (next, out) = splitmix64(state);
            state = next;
            out
        })
        .collect()
}

fn check_weights(weights: &[f64], expected: usize) -> Result<()> {
    if weights.len() != expected {
        return Err(QracError::DimensionMismatch {
            expected,
            actual: weights.len(),
        });
    }
    if weights.iter().any(|w| !(*w >= 0.0)) {
        return Err(QracError::Domain("weights must be nonnegative".into()));
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > tol::GEOMETRIC {
        return Err(QracError::Domain(format!(
            "weights sum to {total}, expected 1"
        )));
    }
    Ok(())
}

fn bits_of(count: usize) -> Result<usize> {
    if count < 2 || !count.is_power_of_two() {
        return Err(QracError::Domain(format!(
            "{count} states is not 2^n for n >= 1"
        )));
    }
    Ok(count.trailing_zeros() as usize)
}

/// Best binary decoder for bit `i`: projector onto the positive part of
/// `Σ_{x_i=0} w_x ρ_x − Σ_{x_i=1} w_x ρ_x`, plus half the null space.
pub fn optimal_povm_for_bit(
    states: &[DensityMatrix],
    i: usize,
    weights: &[f64],
) -> Result<BinaryPovm> {
    let n = bits_of(states.len())?;
    if i >= n {
        return Err(QracError::Domain(format!(
            "bit index {i} out of range for n = {n}"
        )));
    }
    check_weights(weights, states.len())?;
    Ok(helstrom(states, n, i, weights))
}

fn helstrom(states: &[DensityMatrix], n: usize, i: usize, weights: &[f64]) -> BinaryPovm {
    let dim = states[0].dim();
    let mut delta = CMatrix::zeros(dim);
    for (x, (rho, &w)) in states.iter().zip(weights).enumerate() {
        if w == 0.0 {
            continue;
        }
        let signed = if bit(x, i, n) == 0 { w } else { -w };
        delta = &delta + &rho.matrix().scale(signed);
    }
    let spectrum = eigh(&delta);
    let e0 = spectrum.reconstruct_with(|lambda| {
        if lambda > NULL_EIGENVALUE {
            1.0
        } else if lambda >= -NULL_EIGENVALUE {
            0.5
        } else {
            0.0
        }
    });
    BinaryPovm::from_trusted(e0)
}

/// Pure state maximizing `Σ_i Tr(E^i_{x_i} ρ)`.
pub fn optimal_state_for_bits(povms: &[BinaryPovm], x: usize) -> Result<PureState> {
    let weights = vec![1.0; povms.len()];
    optimal_state_weighted(povms, x, &weights)
}

/// Pure state maximizing `Σ_i w_i Tr(E^i_{x_i} ρ)`: top eigenvector of
/// `Σ_i w_i E^i_{x_i}`, canonical representative on a degenerate top.
pub fn optimal_state_weighted(
    povms: &[BinaryPovm],
    x: usize,
    weights: &[f64],
) -> Result<PureState> {
    let n = povms.len();
    if n == 0 || weights.len() != n {
        return Err(QracError::DimensionMismatch {
            expected: n.max(1),
            actual: weights.len(),
        });
    }
    if x >= 1 << n {
        return Err(QracError::Domain(format!(
            "string index {x} out of range for n = {n}"
        )));
    }
    let dim = povms[0].dim();
    let mut score = CMatrix::zeros(dim);
    for (i, (p, &w)) in povms.iter().zip(weights).enumerate() {
        score = &score + &p.effect(bit(x, i, n)).scale(w);
    }
    let top = eigh(&score).vectors.swap_remove(0);
    PureState::normalized(top)
}

fn cell_table(states: &[DensityMatrix], povms: &[BinaryPovm], n: usize) -> Vec<Vec<f64>> {
    states
        .iter()
        .enumerate()
        .map(|(x, rho)| {
            povms
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    p.effect(bit(x, i, n))
                        .trace_product(rho.matrix())
                        .re
                        .clamp(0.0, 1.0)
                })
                .collect()
        })
        .collect()
}

fn better(candidate: &EvaluationReport, incumbent: &EvaluationReport) -> bool {
    if candidate.worst_case_p > incumbent.worst_case_p + TIE {
        return true;
    }
    (candidate.worst_case_p - incumbent.worst_case_p).abs() <= TIE
        && candidate.average_p > incumbent.average_p + TIE
}

struct RestartRun {
    best_states: Vec<DensityMatrix>,
    best_povms: Vec<BinaryPovm>,
    best_report: EvaluationReport,
    outcome: RestartOutcome,
}

fn run_restart(n: usize, m: usize, config: &SeeSawConfig, seed: u64) -> RestartRun {
    let dim = 1usize << m;
    let count = 1usize << n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut states: Vec<DensityMatrix> = (0..count)
        .map(|_| random_pure_state(dim, &mut rng).outer_product())
        .collect();
    let uniform_x = vec![1.0 / count as f64; count];
    let uniform_i = vec![1.0; n];

    let mut trace = Vec::new();
    let mut best: Option<(Vec<DensityMatrix>, Vec<BinaryPovm>, EvaluationReport)> = None;
    let mut consider =
        |states: &[DensityMatrix], povms: &[BinaryPovm], report: &EvaluationReport| {
            let take = match &best {
                None => true,
                Some((_, _, incumbent)) => better(report, incumbent),
            };
            if take {
                best = Some((states.to_vec(), povms.to_vec(), report.clone()));
            }
        };

    let mut povms: Vec<BinaryPovm> = Vec::new();
    let mut previous = f64::NEG_INFINITY;
    let mut converged = false;
    for iteration in 0..config.max_iters {
        povms = (0..n)
            .map(|i| helstrom(&states, n, i, &uniform_x))
            .collect();
        let report = EvaluationReport::from_table(n, cell_table(&states, &povms, n));
        trace.push(TraceEntry {
            iteration,
            phase: Phase::PovmUpdate,
            average_p: report.average_p,
            worst_case_p: report.worst_case_p,
        });

        states = (0..count)
            .map(|x| {
                optimal_state_weighted(&povms, x, &uniform_i)
                    .expect("valid decoders")
                    .outer_product()
            })
            .collect();
        let report = EvaluationReport::from_table(n, cell_table(&states, &povms, n));
        trace.push(TraceEntry {
            iteration,
            phase: Phase::StateUpdate,
            average_p: report.average_p,
            worst_case_p: report.worst_case_p,
        });
        consider(&states, &povms, &report);
        if (report.average_p - previous).abs() < config.conv_tol {
            converged = true;
            break;
        }
        previous = report.average_p;
    }

    if config.objective == Objective::Weighted {
        let mut weights = vec![vec![1.0 / (count * n) as f64; n]; count];
        let mut table = cell_table(&states, &povms, n);
        let start = trace.last().map_or(0, |t| t.iteration + 1);
        for round in 0..config.reweight_rounds {
            reweight(&mut weights, &table, config.reweight_rate);
            povms = (0..n)
                .map(|i| {
                    let column: Vec<f64> = weights.iter().map(|row| row[i]).collect();
                    let total: f64 = column.iter().sum();
                    let column: Vec<f64> = column.iter().map(|w| w / total).collect();
                    helstrom(&states, n, i, &column)
                })
                .collect();
            states = (0..count)
                .map(|x| {
                    optimal_state_weighted(&povms, x, &weights[x])
                        .expect("valid decoders")
                        .outer_product()
                })
                .collect();
            table = cell_table(&states, &povms, n);
            let report = EvaluationReport::from_table(n, table.clone());
            trace.push(TraceEntry {
                iteration: start + round,
                phase: Phase::Reweight,
                average_p: report.average_p,
                worst_case_p: report.worst_case_p,
            });
            consider(&states, &povms, &report);
        }
    }

    let (best_states, best_povms, best_report) = best.expect("at least one iteration runs");
    RestartRun {
        outcome: RestartOutcome {
            seed,
            worst_case_p: best_report.worst_case_p,
            average_p: best_report.average_p,
            converged,
            trace,
        },
        best_states,
        best_povms,
        best_report,
    }
}

fn reweight(weights: &mut [Vec<f64>], table: &[Vec<f64>], rate: f64) {
    let (lo, hi) = table
        .iter()
        .flatten()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &p| {
            (lo.min(p), hi.max(p))
        });
    let spread = (hi - lo).max(1e-12);
    let mut total = 0.0;
    for (wrow, prow) in weights.iter_mut().zip(table) {
        for (w, p) in wrow.iter_mut().zip(prow) {
            *w *= (-rate * (p - lo) / spread).exp();
            total += *w;
        }
    }
    weights.iter_mut().flatten().for_each(|w| *w /= total);
}

/// Multi-restart see-saw for `(n, m)` codings with `m ≤ 2`.
pub fn see_saw(n: usize, m: usize, config: &SeeSawConfig) -> Result<SearchResult> {
    if n == 0 || n > MAX_SEARCH_BITS {
        return Err(QracError::Domain(format!(
            "n = {n} outside 1..={MAX_SEARCH_BITS}"
        )));
    }
    if !(1..=2).contains(&m) {
        return Err(QracError::Domain(format!("m = {m} outside 1..=2")));
    }
    config.validate()?;

    let runs: Vec<RestartRun> = restart_seeds(config.seed, config.restarts)
        .into_par_iter()
        .map(|seed| run_restart(n, m, config, seed))
        .collect();

    let mut best_index = 0;
    for (k, run) in runs.iter().enumerate().skip(1) {
        if better(&run.best_report, &runs[best_index].best_report) {
            best_index = k;
        }
    }
    let best = &runs[best_index];
    let scheme = QracScheme::new(
        format!("see-saw ({n},{m}) seed {}", config.seed),
        n,
        m,
        best.best_states.clone(),
        best.best_povms.clone(),
    )?;
    Ok(SearchResult {
        scheme,
        report: best.best_report.clone(),
        trace: best.outcome.trace.clone(),
        converged: best.outcome.converged,
        best_restart: best_index,
        restarts: runs.into_iter().map(|r| r.outcome).collect(),
    })
}
