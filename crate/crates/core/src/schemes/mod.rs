//! QRA coding container and the exhaustive success-probability evaluator.

mod builtin;
mod cloning;
mod nayak;

pub use builtin::{
    ambainis2_povms, chuang3_povms, chuang3_theta, encode_ambainis2, encode_chuang3, encode_hinry7,
    hinry7_alpha, hinry7_closed_form, hinry7_povms, minus_state, plus_i_state, plus_state,
    standard_scheme, xi_state, STANDARD_NAMES,
};
pub use cloning::{
    buzek_hillery_clone, buzek_hillery_isometry, clone_adjoint, cloner_kraus, example3_analysis,
    example3_effective_povms, example3_scheme, example3_sequential_prob, Example3Analysis,
};
pub use nayak::{binary_entropy, nayak_bound};

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::bit;
use crate::error::{QracError, Result};
use crate::povm::{measure_prob, BinaryPovm};
use crate::state::DensityMatrix;

/// Largest `n` accepted by [`QracScheme::new`]; `2^n` states are stored explicitly.
pub const MAX_BITS: usize = 20;

/// An `(n, m, ·)` coding: `2^n` encoding states on `m` qubits and one binary
/// decoder per bit. `states[x]` encodes the bit string with index `x`
/// (see [`crate::bits`]).
#[derive(Debug, Clone, PartialEq)]
pub struct QracScheme {
    label: String,
    n: usize,
    m: usize,
    states: Vec<DensityMatrix>,
    povms: Vec<BinaryPovm>,
}

impl QracScheme {
    pub fn new(
        label: impl Into<String>,
        n: usize,
        m: usize,
        states: Vec<DensityMatrix>,
        povms: Vec<BinaryPovm>,
    ) -> Result<Self> {
        if n == 0 || n > MAX_BITS {
            return Err(QracError::Domain(format!("n = {n} outside 1..={MAX_BITS}")));
        }
        if m == 0 || m > 8 {
            return Err(QracError::Domain(format!("m = {m} outside 1..=8")));
        }
        let dim = 1usize << m;
        if states.len() != 1 << n {
            return Err(QracError::DimensionMismatch {
                expected: 1 << n,
                actual: states.len(),
            });
        }
        if povms.len() != n {
            return Err(QracError::DimensionMismatch {
                expected: n,
                actual: povms.len(),
            });
        }
        if let Some(bad) = states.iter().map(DensityMatrix::dim).find(|&d| d != dim) {
            return Err(QracError::DimensionMismatch {
                expected: dim,
                actual: bad,
            });
        }
        if let Some(bad) = povms.iter().map(BinaryPovm::dim).find(|&d| d != dim) {
            return Err(QracError::DimensionMismatch {
                expected: dim,
                actual: bad,
            });
        }
        Ok(Self {
            label: label.into(),
            n,
            m,
            states,
            povms,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        1 << self.m
    }

    pub fn states(&self) -> &[DensityMatrix] {
        &self.states
    }

    pub fn povms(&self) -> &[BinaryPovm] {
        &self.povms
    }

    /// Success probability `Tr(E^i_{x_i} ρ_x)` of one cell.
    pub fn cell_probability(&self, x: usize, i: usize) -> f64 {
        let outcome = bit(x, i, self.n);
        measure_prob(self.povms[i].effect(outcome), &self.states[x])
            .expect("scheme components are validated")
    }
}

/// One `(x, i)` cell of the success table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub x: usize,
    pub bit: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvaluationReport {
    pub n: usize,
    pub worst_case_p: f64,
    pub average_p: f64,
    /// `per_cell[x][i]`.
    pub per_cell: Vec<Vec<f64>>,
    /// First minimizing cell in `(x, i)` lexicographic order.
    pub argmin_cell: Cell,
}

impl EvaluationReport {
    pub fn from_table(n: usize, per_cell: Vec<Vec<f64>>) -> Self {
        let mut worst = f64::INFINITY;
        let mut argmin = Cell { x: 0, bit: 0 };
        let mut sum = 0.0;
        let mut count = 0usize;
        for (x, row) in per_cell.iter().enumerate() {
            for (i, &p) in row.iter().enumerate() {
                if p < worst {
                    worst = p;
                    argmin = Cell { x, bit: i };
                }
                sum += p;
                count += 1;
            }
        }
        Self {
            n,
            worst_case_p: worst,
            average_p: sum / count as f64,
            per_cell,
            argmin_cell: argmin,
        }
    }

    /// Worst case restricted to decoder `i`.
    pub fn bit_worst_case(&self, i: usize) -> f64 {
        self.per_cell
            .iter()
            .map(|row| row[i])
            .fold(f64::INFINITY, f64::min)
    }
}

/// Exhaustive evaluation of every `(x, i)` cell.
pub fn evaluate_scheme(scheme: &QracScheme) -> EvaluationReport {
    let per_cell: Vec<Vec<f64>> = (0..scheme.states.len())
        .into_par_iter()
        .map(|x| {
            (0..scheme.n)
                .map(|i| scheme.cell_probability(x, i))
                .collect()
        })
        .collect();
    EvaluationReport::from_table(scheme.n, per_cell)
}
