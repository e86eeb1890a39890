//! Which sign patterns of a halfspace arrangement are realized inside the
//! unit ball.
//!
//! For a pattern `w` the constraints are `σ_i(s_i·r − c_i) ≥ t` with
//! `σ_i = +1` when `w_i = 0` and `−1` otherwise. Every non-degenerate
//! constraint is rescaled to a unit normal first, so `t` is a Euclidean
//! distance and positive rescaling of any `(s_i, c_i)` never changes a
//! status. The largest feasible `t` over `|r| ≤ 1` is approached from both
//! sides:
//!
//! - from below by projected supergradient ascent on
//!   `f(r) = min_i (a_i·r − b_i)`, started at the origin and at `a_i / 2`
//!   for each constraint, steps `η_j = STEP0 / √(j+1)`, stopped on
//!   stagnation or at the shared budget of `ITERATION_BUDGET` steps;
//! - from above by the dual function `g(λ) = |Σ λ_i a_i| − Σ λ_i b_i` on the
//!   simplex (every `λ` bounds the optimum), minimized by exponentiated
//!   gradient from the ascent's active-set frequencies. The normalized
//!   combination `Σ λ_i a_i` of the best `λ` is also tried as a witness.
//!
//! A pattern is realized once a verified point reaches `margin_eps`, empty
//! once the dual bound drops below it. In between, alternating projections
//! onto the shifted halfspaces and the ball try to push a witness over the
//! threshold; failing that the pattern is reported undecided.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{QracError, Result};

use super::halfspace::{dot, norm, Halfspace};

pub const DEFAULT_MARGIN_EPS: f64 = 1e-7;
pub const ITERATION_BUDGET: usize = 100_000;
const STEP0: f64 = 0.5;
const STALL_WINDOW: usize = 2_000;
const DUAL_ITERS: usize = 4_000;
const PROJECTION_SWEEPS: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RegionStatus {
    Realized,
    EmptyWithinTolerance,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegionWitness {
    /// Pattern `w` packed as in [`crate::bits`], `w_1` most significant.
    pub pattern: usize,
    pub point: Option<Vec<f64>>,
    /// Best achieved `min_i σ_i(ŝ_i·r − ĉ_i)` over unit-normal constraints.
    pub margin: f64,
    /// Smallest dual value found; an upper bound on any achievable margin.
    pub upper_bound: f64,
    pub status: RegionStatus,
}

/// Unit-normal constraint `a·r − b ≥ t`.
struct Constraint {
    a: Vec<f64>,
    b: f64,
}

/// Feasibility of all `2^k` sign patterns; one witness per pattern in
/// pattern order.
pub fn realized_patterns(
    halfspaces: &[Halfspace],
    ball_dim: usize,
    margin_eps: f64,
) -> Result<Vec<RegionWitness>> {
    if !(margin_eps > 0.0) {
        return Err(QracError::Domain(format!(
            "margin_eps must be positive, got {margin_eps}"
        )));
    }
    if ball_dim == 0 {
        return Err(QracError::Domain(
            "ball dimension must be at least 1".into(),
        ));
    }
    if let Some(h) = halfspaces.iter().find(|h| h.dim() != ball_dim) {
        return Err(QracError::DimensionMismatch {
            expected: ball_dim,
            actual: h.dim(),
        });
    }
    let k = halfspaces.len();
    if k > 20 {
        return Err(QracError::Domain(format!(
            "{k} halfspaces give too many patterns"
        )));
    }
    let normalized: Vec<Option<(Vec<f64>, f64)>> =
        halfspaces.iter().map(Halfspace::normalized).collect();
    let raw_c: Vec<f64> = halfspaces.iter().map(|h| h.c).collect();

    Ok((0..1usize << k)
        .into_par_iter()
        .map(|pattern| solve_pattern(pattern, k, ball_dim, &normalized, &raw_c, margin_eps))
        .collect())
}

/// Number of realized patterns in a witness list.
pub fn count_realized(witnesses: &[RegionWitness]) -> usize {
    witnesses
        .iter()
        .filter(|w| w.status == RegionStatus::Realized)
        .count()
}

fn solve_pattern(
    pattern: usize,
    k: usize,
    dim: usize,
    normalized: &[Option<(Vec<f64>, f64)>],
    raw_c: &[f64],
    eps: f64,
) -> RegionWitness {
    let mut constraints = Vec::with_capacity(k);
    let mut constant_margin = f64::INFINITY;
    for i in 0..k {
        let sigma = if (pattern >> (k - 1 - i)) & 1 == 0 {
            1.0
        } else {
            -1.0
        };
        match &normalized[i] {
            Some((s, c)) => constraints.push(Constraint {
                a: s.iter().map(|x| sigma * x).collect(),
                b: sigma * c,
            }),
            // s ≈ 0: the side value is the constant −σc everywhere
            None => constant_margin = constant_margin.min(-sigma * raw_c[i]),
        }
    }

    if constant_margin < eps {
        return RegionWitness {
            pattern,
            point: None,
            margin: constant_margin,
            upper_bound: constant_margin,
            status: RegionStatus::EmptyWithinTolerance,
        };
    }
    if constraints.is_empty() {
        return RegionWitness {
            pattern,
            point: Some(vec![0.0; dim]),
            margin: constant_margin,
            upper_bound: constant_margin,
            status: RegionStatus::Realized,
        };
    }

    let (mut point, mut primal, frequencies) = ascend(&constraints, dim);
    let (upper, recovered) = dual_bound(&constraints, &frequencies);
    if let Some(r) = recovered {
        let m = margin(&constraints, &r);
        if m > primal {
            primal = m;
            point = r;
        }
    }
    let primal = primal.min(constant_margin);
    let upper = upper.min(constant_margin);
    if primal >= eps {
        return realized(pattern, point, primal, upper);
    }
    if upper < eps {
        return RegionWitness {
            pattern,
            point: None,
            margin: primal,
            upper_bound: upper,
            status: RegionStatus::EmptyWithinTolerance,
        };
    }
    if let Some(polished) = alternating_projections(&constraints, &point, eps) {
        let m = margin(&constraints, &polished).min(constant_margin);
        if m >= eps {
            return realized(pattern, polished, m, upper);
        }
    }
    RegionWitness {
        pattern,
        point: Some(point),
        margin: primal,
        upper_bound: upper,
        status: RegionStatus::Undecided,
    }
}

fn realized(pattern: usize, point: Vec<f64>, margin: f64, upper: f64) -> RegionWitness {
    RegionWitness {
        pattern,
        point: Some(point),
        margin,
        upper_bound: upper.max(margin),
        status: RegionStatus::Realized,
    }
}

fn margin(constraints: &[Constraint], r: &[f64]) -> f64 {
    constraints
        .iter()
        .map(|c| dot(&c.a, r) - c.b)
        .fold(f64::INFINITY, f64::min)
}

fn argmin_constraint(constraints: &[Constraint], r: &[f64]) -> (usize, f64) {
    constraints
        .iter()
        .enumerate()
        .map(|(i, c)| (i, dot(&c.a, r) - c.b))
        .fold(
            (0, f64::INFINITY),
            |best, cur| if cur.1 < best.1 { cur } else { best },
        )
}

fn project_ball(r: &mut [f64]) {
    let len = norm(r);
    if len > 1.0 {
        r.iter_mut().for_each(|x| *x /= len);
    }
}

/// Best point, its margin, and how often each constraint was the active one.
fn ascend(constraints: &[Constraint], dim: usize) -> (Vec<f64>, f64, Vec<f64>) {
    let mut starts = vec![vec![0.0; dim]];
    starts.extend(
        constraints
            .iter()
            .map(|c| c.a.iter().map(|x| 0.5 * x).collect()),
    );
    let per_start = ITERATION_BUDGET / starts.len();

    let mut best_point = starts[0].clone();
    let mut best = f64::NEG_INFINITY;
    let mut counts = vec![0.0; constraints.len()];

    for start in starts {
        let mut r = start;
        let mut local_best_point = r.clone();
        let mut local_best = margin(constraints, &r);
        let mut last_improvement = 0;
        for j in 0..per_start {
            let (active, value) = argmin_constraint(constraints, &r);
            if value > local_best + 1e-15 {
                local_best = value;
                local_best_point.clone_from(&r);
                last_improvement = j;
            }
            if j - last_improvement > STALL_WINDOW {
                break;
            }
            counts[active] += 1.0;
            let step = STEP0 / ((j + 1) as f64).sqrt();
            for (x, a) in r.iter_mut().zip(&constraints[active].a) {
                *x += step * a;
            }
            project_ball(&mut r);
        }
        let value = margin(constraints, &r);
        if value > local_best {
            local_best = value;
            local_best_point = r;
        }
        // strict improvement keeps the earliest start on ties
        if local_best > best {
            best = local_best;
            best_point = local_best_point;
        }
    }
    let total: f64 = counts.iter().sum();
    let frequencies = counts.iter().map(|c| c / total.max(1.0)).collect();
    (best_point, best, frequencies)
}

fn dual_value(constraints: &[Constraint], lambda: &[f64], combo: &mut [f64]) -> f64 {
    combo.iter_mut().for_each(|x| *x = 0.0);
    let mut lin = 0.0;
    for (c, &l) in constraints.iter().zip(lambda) {
        for (acc, a) in combo.iter_mut().zip(&c.a) {
            *acc += l * a;
        }
        lin += l * c.b;
    }
    norm(combo) - lin
}

/// Minimizes `g(λ)` over the simplex. Returns the smallest value seen and
/// the primal point `Σλa / |Σλa|` recovered from the best `λ`.
fn dual_bound(constraints: &[Constraint], warm_start: &[f64]) -> (f64, Option<Vec<f64>>) {
    let k = constraints.len();
    let dim = constraints[0].a.len();
    let mut combo = vec![0.0; dim];
    let uniform = vec![1.0 / k as f64; k];
    let mut best = dual_value(constraints, &uniform, &mut combo);
    let mut best_combo = combo.clone();

    let mut lambda: Vec<f64> = warm_start
        .iter()
        .map(|w| 0.9 * w + 0.1 / k as f64)
        .collect();
    let mut grad = vec![0.0; k];
    for j in 0..=DUAL_ITERS {
        let value = dual_value(constraints, &lambda, &mut combo);
        if value < best {
            best = value;
            best_combo.clone_from(&combo);
        }
        if j == DUAL_ITERS {
            break;
        }
        let len = norm(&combo);
        for (g, c) in grad.iter_mut().zip(constraints) {
            let along = if len > 0.0 {
                dot(&c.a, &combo) / len
            } else {
                0.0
            };
            *g = along - c.b;
        }
        let step = 1.0 / ((j + 1) as f64).sqrt();
        let shift = grad.iter().cloned().fold(f64::INFINITY, f64::min);
        let mut total = 0.0;
        for (l, g) in lambda.iter_mut().zip(&grad) {
            *l *= (-step * (g - shift)).exp();
            total += *l;
        }
        lambda.iter_mut().for_each(|l| *l /= total);
    }
    let len = norm(&best_combo);
    let recovered = (len > 1e-12).then(|| best_combo.iter().map(|x| x / len).collect());
    (best, recovered)
}

/// Cyclic projections onto `{a_i·r ≥ b_i + target}` and the unit ball,
/// aiming slightly above `eps`.
fn alternating_projections(
    constraints: &[Constraint],
    start: &[f64],
    eps: f64,
) -> Option<Vec<f64>> {
    let target = 2.0 * eps;
    let mut r = start.to_vec();
    for _ in 0..PROJECTION_SWEEPS {
        for c in constraints {
            let gap = c.b + target - dot(&c.a, &r);
            if gap > 0.0 {
                for (x, a) in r.iter_mut().zip(&c.a) {
                    *x += gap * a;
                }
            }
        }
        project_ball(&mut r);
        if margin(constraints, &r) >= eps {
            return Some(r);
        }
    }
    None
}
