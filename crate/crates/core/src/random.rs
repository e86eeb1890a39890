//! Seeded random states, decoders and halfspaces.

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::geometry::Halfspace;
use crate::linalg::{eigh, CMatrix, C64};
use crate::povm::BinaryPovm;
use crate::state::{DensityMatrix, PureState};

fn gaussian_vector<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<C64> {
    (0..dim)
        .map(|_| C64::new(StandardNormal.sample(rng), StandardNormal.sample(rng)))
        .collect()
}

/// Unitarily invariant random pure state.
pub fn random_pure_state<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> PureState {
    loop {
        if let Ok(s) = PureState::normalized(gaussian_vector(dim, rng)) {
            return s;
        }
    }
}

/// Random full-rank mixture of `dim` random pure states.
pub fn random_density<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DensityMatrix {
    let weights: Vec<f64> = (0..dim).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    let mut m = CMatrix::zeros(dim);
    for w in weights {
        m = &m + &random_pure_state(dim, rng).projector().scale(w / total);
    }
    DensityMatrix::new(m.hermitian_part()).expect("mixture of states")
}

/// Random Hermitian matrix with iid Gaussian entries.
pub fn random_hermitian<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> CMatrix {
    let raw = CMatrix::from_fn(dim, |_, _| {
        C64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
    });
    raw.hermitian_part()
}

/// Random binary POVM: random eigenbasis, `E_0` eigenvalues uniform in `[0, 1]`.
pub fn random_povm<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> BinaryPovm {
    let basis = eigh(&random_hermitian(dim, rng)).vectors;
    let mut e0 = CMatrix::zeros(dim);
    for v in &basis {
        e0 = &e0 + &CMatrix::outer(v).scale(rng.random::<f64>());
    }
    BinaryPovm::from_e0(e0.hermitian_part()).expect("eigenvalues in [0, 1]")
}

/// Projective decoder along a random direction.
pub fn random_projective<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> BinaryPovm {
    BinaryPovm::projective(&random_pure_state(dim, rng))
}

/// Halfspace with a Gaussian normal and offset uniform in `[-0.8, 0.8]`.
pub fn random_halfspace<R: Rng + ?Sized>(
    dim: usize,
    source_index: usize,
    rng: &mut R,
) -> Halfspace {
    let s: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(rng)).collect();
    let len = s.iter().map(|x| x * x).sum::<f64>().sqrt();
    let c = rng.random_range(-0.8..0.8) * len;
    Halfspace::new(s, c, source_index)
}
