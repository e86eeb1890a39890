use serde::Serialize;

use crate::bloch::density_to_bloch;
use crate::povm::{povm_canonical_form, BinaryPovm};
use crate::state::DensityMatrix;
use crate::tol;

/// `{r : s·r > c}` is exactly the set of Bloch vectors on which decoder
/// `source_index` outputs 0 with probability above one half.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Halfspace {
    pub s: Vec<f64>,
    pub c: f64,
    pub source_index: usize,
    pub degenerate: bool,
}

impl Halfspace {
    pub fn new(s: Vec<f64>, c: f64, source_index: usize) -> Self {
        let degenerate = norm(&s) < tol::DEGENERATE_NORMAL;
        Self {
            s,
            c,
            source_index,
            degenerate,
        }
    }

    pub fn dim(&self) -> usize {
        self.s.len()
    }

    /// `s·r − c`.
    pub fn evaluate(&self, r: &[f64]) -> f64 {
        dot(&self.s, r) - self.c
    }

    /// Same halfspace with a unit normal; `None` when degenerate.
    pub fn normalized(&self) -> Option<(Vec<f64>, f64)> {
        if self.degenerate {
            return None;
        }
        let len = norm(&self.s);
        Some((self.s.iter().map(|x| x / len).collect(), self.c / len))
    }

    /// Multiplies `(s, c)` by `k > 0`.
    pub fn scaled(&self, k: f64) -> Self {
        Self::new(
            self.s.iter().map(|x| x * k).collect(),
            self.c * k,
            self.source_index,
        )
    }

    /// `σ(s·r − c)` with `σ = +1` for `w_i = 0` and `−1` for `w_i = 1`,
    /// evaluated at the Bloch vector of `rho`.
    pub fn signed_slack(&self, rho: &DensityMatrix, wanted: u8) -> f64 {
        let r = density_to_bloch(rho);
        let v = self.evaluate(r.coords());
        if wanted == 0 {
            v
        } else {
            -v
        }
    }
}

/// Halfspace of a binary POVM on `N = 2^m` levels:
/// `c = 1/2 − Σ α_j / N`, `s = Σ (α_j / 2) · Bloch(u_j)`,
/// from the canonical form `E_0 = Σ α_j |u_j⟩⟨u_j|`.
pub fn povm_to_halfspace(povm: &BinaryPovm, source_index: usize) -> Halfspace {
    let n = povm.dim();
    let form = povm_canonical_form(povm);
    let mut s = vec![0.0; n * n - 1];
    let mut alpha_sum = 0.0;
    for (&alpha, u) in form.alphas.iter().zip(&form.vectors) {
        alpha_sum += alpha;
        let bloch = density_to_bloch(&u.outer_product());
        for (acc, x) in s.iter_mut().zip(bloch.coords()) {
            *acc += 0.5 * alpha * x;
        }
    }
    Halfspace::new(s, 0.5 - alpha_sum / n as f64, source_index)
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}
