//! Pure and mixed quantum states.

use serde::{Deserialize, Serialize};

use crate::error::{QracError, Result};
use crate::linalg::{eigh, inner, vec_norm, CMatrix, C64, ONE, ZERO};
use crate::tol;

/// Normalized state vector `|ψ⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<C64>,
}

impl PureState {
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(QracError::DimensionMismatch {
                expected: 1,
                actual: 0,
            });
        }
        let norm = vec_norm(&amplitudes);
        if (norm * norm - 1.0).abs() > tol::STRUCTURAL {
            return Err(QracError::NotNormalized(norm));
        }
        Ok(Self { amplitudes })
    }

    /// Rescales `raw` to unit norm; fails on the zero vector.
    pub fn normalized(mut raw: Vec<C64>) -> Result<Self> {
        let norm = vec_norm(&raw);
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(QracError::NotNormalized(norm));
        }
        raw.iter_mut().for_each(|z| *z /= norm);
        Ok(Self { amplitudes: raw })
    }

    /// Computational basis state `|k⟩` of dimension `dim`.
    pub fn basis(dim: usize, k: usize) -> Self {
        assert!(k < dim);
        let mut amplitudes = vec![ZERO; dim];
        amplitudes[k] = ONE;
        Self { amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    /// `⟨self|other⟩`.
    pub fn overlap(&self, other: &PureState) -> C64 {
        inner(&self.amplitudes, &other.amplitudes)
    }

    pub fn tensor(&self, other: &PureState) -> PureState {
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| a * b))
            .collect();
        PureState { amplitudes }
    }

    pub fn projector(&self) -> CMatrix {
        CMatrix::outer(&self.amplitudes)
    }

    pub fn outer_product(&self) -> DensityMatrix {
        DensityMatrix {
            matrix: self.projector(),
        }
    }
}

/// Hermitian, positive semidefinite, unit-trace matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: CMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(matrix: CMatrix) -> Result<Self> {
        let herm = matrix.hermitian_deviation();
        if herm > tol::STRUCTURAL {
            return Err(QracError::NotHermitian(herm));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > tol::STRUCTURAL || tr.im.abs() > tol::STRUCTURAL {
            return Err(QracError::InvalidTrace(tr.re));
        }
        let min = eigh(&matrix).min_value();
        if min < -tol::PSD {
            return Err(QracError::NotPsd(min));
        }
        Ok(Self { matrix })
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            matrix: CMatrix::identity(dim).scale(1.0 / dim as f64),
        }
    }

    /// Convex combination `Σ w_k ρ_k`; weights must be nonnegative and sum to 1.
    pub fn mixture(parts: &[(f64, &DensityMatrix)]) -> Result<Self> {
        let first = parts.first().ok_or(QracError::DimensionMismatch {
            expected: 1,
            actual: 0,
        })?;
        let dim = first.1.dim();
        let mut acc = CMatrix::zeros(dim);
        let mut total = 0.0;
        for &(w, rho) in parts {
            if rho.dim() != dim {
                return Err(QracError::DimensionMismatch {
                    expected: dim,
                    actual: rho.dim(),
                });
            }
            if w < 0.0 {
                return Err(QracError::Domain(format!("negative mixture weight {w}")));
            }
            acc = &acc + &rho.matrix.scale(w);
            total += w;
        }
        if (total - 1.0).abs() > tol::STRUCTURAL {
            return Err(QracError::InvalidTrace(total));
        }
        Ok(Self { matrix: acc })
    }

    pub(crate) fn from_trusted(matrix: CMatrix) -> Self {
        Self { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn purity(&self) -> f64 {
        self.matrix.trace_product(&self.matrix).re
    }

    pub fn is_pure(&self) -> bool {
        (self.purity() - 1.0).abs() <= tol::DERIVED
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        eigh(&self.matrix).values
    }
}

/// `ρ_a ⊗ ρ_b`.
pub fn tensor(rho_a: &DensityMatrix, rho_b: &DensityMatrix) -> DensityMatrix {
    DensityMatrix {
        matrix: rho_a.matrix.kron(&rho_b.matrix),
    }
}

/// Which factor of a bipartite system survives a partial trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Subsystem {
    First,
    Second,
}

/// Partial trace of a matrix on `C^{dim_a} ⊗ C^{dim_b}`.
pub fn partial_trace_matrix(
    m: &CMatrix,
    dim_a: usize,
    dim_b: usize,
    keep: Subsystem,
) -> Result<CMatrix> {
    if dim_a == 0 || dim_b == 0 || dim_a * dim_b != m.dim() {
        return Err(QracError::DimensionMismatch {
            expected: m.dim(),
            actual: dim_a * dim_b,
        });
    }
    Ok(match keep {
        Subsystem::First => CMatrix::from_fn(dim_a, |i, j| {
            (0..dim_b).map(|k| m[(i * dim_b + k, j * dim_b + k)]).sum()
        }),
        Subsystem::Second => CMatrix::from_fn(dim_b, |i, j| {
            (0..dim_a).map(|k| m[(k * dim_b + i, k * dim_b + j)]).sum()
        }),
    })
}

pub fn partial_trace(
    rho: &DensityMatrix,
    dim_a: usize,
    dim_b: usize,
    keep: Subsystem,
) -> Result<DensityMatrix> {
    partial_trace_matrix(&rho.matrix, dim_a, dim_b, keep).map(DensityMatrix::from_trusted)
}
