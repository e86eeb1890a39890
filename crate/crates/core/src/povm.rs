//! Two-outcome POVMs and Born-rule probabilities.

use crate::error::{QracError, Result};
use crate::linalg::{eigh, CMatrix};
use crate::state::{DensityMatrix, PureState};
use crate::tol;

/// A pair of effects `(E_0, E_1)` with `E_0 + E_1 = I`, both PSD.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryPovm {
    e0: CMatrix,
    e1: CMatrix,
}

impl BinaryPovm {
    /// Builds the POVM `{E_0, I − E_0}`.
    pub fn from_e0(e0: CMatrix) -> Result<Self> {
        let e1 = &CMatrix::identity(e0.dim()) - &e0;
        Self::new(e0, e1)
    }

    pub fn new(e0: CMatrix, e1: CMatrix) -> Result<Self> {
        if e0.dim() != e1.dim() {
            return Err(QracError::DimensionMismatch {
                expected: e0.dim(),
                actual: e1.dim(),
            });
        }
        for e in [&e0, &e1] {
            let herm = e.hermitian_deviation();
            if herm > tol::STRUCTURAL {
                return Err(QracError::NotHermitian(herm));
            }
        }
        let sum = &e0 + &e1;
        let residual = sum.max_abs_diff(&CMatrix::identity(e0.dim()));
        if residual > tol::STRUCTURAL {
            return Err(QracError::Incomplete(residual));
        }
        let spectrum = eigh(&e0);
        if spectrum.min_value() < -tol::PSD {
            return Err(QracError::NotPsd(spectrum.min_value()));
        }
        if spectrum.max_value() > 1.0 + tol::PSD {
            return Err(QracError::EffectTooLarge(spectrum.max_value()));
        }
        Ok(Self { e0, e1 })
    }

    /// Projective measurement `{|u⟩⟨u|, I − |u⟩⟨u|}`.
    pub fn projective(u: &PureState) -> Self {
        let e0 = u.projector();
        let e1 = &CMatrix::identity(u.dim()) - &e0;
        Self { e0, e1 }
    }

    pub fn trivial(dim: usize) -> Self {
        let half = CMatrix::identity(dim).scale(0.5);
        Self {
            e0: half.clone(),
            e1: half,
        }
    }

    pub(crate) fn from_trusted(e0: CMatrix) -> Self {
        let e1 = &CMatrix::identity(e0.dim()) - &e0;
        Self { e0, e1 }
    }

    pub fn dim(&self) -> usize {
        self.e0.dim()
    }

    pub fn e0(&self) -> &CMatrix {
        &self.e0
    }

    pub fn e1(&self) -> &CMatrix {
        &self.e1
    }

    /// Effect for outcome `0` or `1`.
    pub fn effect(&self, outcome: u8) -> &CMatrix {
        match outcome {
            0 => &self.e0,
            _ => &self.e1,
        }
    }

    /// `{E_0 ⊗ I_d, E_1 ⊗ I_d}`: measure the left factor, ignore the right.
    pub fn extend_right(&self, dim: usize) -> Self {
        let id = CMatrix::identity(dim);
        Self {
            e0: self.e0.kron(&id),
            e1: self.e1.kron(&id),
        }
    }

    /// `{I_d ⊗ E_0, I_d ⊗ E_1}`.
    pub fn extend_left(&self, dim: usize) -> Self {
        let id = CMatrix::identity(dim);
        Self {
            e0: id.kron(&self.e0),
            e1: id.kron(&self.e1),
        }
    }
}

/// `Tr(E ρ)`, snapped into `[0, 1]` when it overshoots by at most
/// [`tol::DERIVED`].
pub fn measure_prob(effect: &CMatrix, rho: &DensityMatrix) -> Result<f64> {
    if effect.dim() != rho.dim() {
        return Err(QracError::DimensionMismatch {
            expected: rho.dim(),
            actual: effect.dim(),
        });
    }
    let p = effect.trace_product(rho.matrix()).re;
    if (-tol::DERIVED..0.0).contains(&p) {
        Ok(0.0)
    } else if p > 1.0 && p <= 1.0 + tol::DERIVED {
        Ok(1.0)
    } else if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(QracError::ProbabilityOutOfRange(p))
    }
}

/// `E_0 = Σ α_j |u_j⟩⟨u_j|` with `α` descending.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub alphas: Vec<f64>,
    pub vectors: Vec<PureState>,
}

impl CanonicalForm {
    pub fn reconstruct(&self) -> CMatrix {
        let dim = self.alphas.len();
        self.alphas
            .iter()
            .zip(&self.vectors)
            .fold(CMatrix::zeros(dim), |acc, (&a, u)| {
                &acc + &u.projector().scale(a)
            })
    }
}

/// Eigen-decomposition of `E_0`; degenerate blocks get the Gram–Schmidt
/// basis over computational coordinates in index order.
pub fn povm_canonical_form(povm: &BinaryPovm) -> CanonicalForm {
    let e = eigh(&povm.e0);
    let vectors = e
        .vectors
        .into_iter()
        .map(|v| PureState::normalized(v).expect("eigenvectors are unit vectors"))
        .collect();
    CanonicalForm {
        alphas: e.values,
        vectors,
    }
}
