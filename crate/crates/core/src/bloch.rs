//! Generalized Gell-Mann generators and the Bloch-vector correspondence
//! `ρ = I/N + ½ Σ r_k λ_k` for N-level systems.
//!
//! Generator order for level `N` (indices `0 ≤ j < k < N`, pairs in
//! lexicographic order):
//!
//! 1. symmetric `|j⟩⟨k| + |k⟩⟨j|` for every pair,
//! 2. antisymmetric `−i|j⟩⟨k| + i|k⟩⟨j|` for every pair,
//! 3. diagonal `√(2/(l(l+1))) (Σ_{j<l} |j⟩⟨j| − l|l⟩⟨l|)` for `l = 1..N−1`.
//!
//! For `N = 2` this is exactly `(X, Y, Z)`.

use serde::{Deserialize, Serialize};

use crate::error::{QracError, Result};
use crate::linalg::{eigh, CMatrix, C64, I, ONE};
use crate::state::DensityMatrix;
use crate::tol;

/// Orthogonal traceless Hermitian generators with `Tr(λ_i λ_j) = 2δ_ij`.
pub fn gell_mann_basis(level: usize) -> Result<Vec<CMatrix>> {
    if level < 2 {
        return Err(QracError::InvalidLevel(level));
    }
    let pairs: Vec<(usize, usize)> = (0..level)
        .flat_map(|j| ((j + 1)..level).map(move |k| (j, k)))
        .collect();
    let mut out = Vec::with_capacity(level * level - 1);
    for &(j, k) in &pairs {
        let mut m = CMatrix::zeros(level);
        m[(j, k)] = ONE;
        m[(k, j)] = ONE;
        out.push(m);
    }
    for &(j, k) in &pairs {
        let mut m = CMatrix::zeros(level);
        m[(j, k)] = -I;
        m[(k, j)] = I;
        out.push(m);
    }
    for l in 1..level {
        let norm = (2.0 / (l * (l + 1)) as f64).sqrt();
        let mut diag = vec![0.0; level];
        diag[..l].iter_mut().for_each(|d| *d = norm);
        diag[l] = -(l as f64) * norm;
        out.push(CMatrix::from_real_diagonal(&diag));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlochVector {
    level: usize,
    coords: Vec<f64>,
}

impl BlochVector {
    pub fn new(level: usize, coords: Vec<f64>) -> Result<Self> {
        if level < 2 {
            return Err(QracError::InvalidLevel(level));
        }
        let expected = level * level - 1;
        if coords.len() != expected {
            return Err(QracError::DimensionMismatch {
                expected,
                actual: coords.len(),
            });
        }
        Ok(Self { level, coords })
    }

    pub fn zero(level: usize) -> Result<Self> {
        Self::new(
            level,
            vec![0.0; level.saturating_mul(level).saturating_sub(1)],
        )
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn dot(&self, other: &BlochVector) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }
}

/// Coordinates `Tr(A λ_k)` of an arbitrary matrix in the generator basis.
pub fn generator_coords(a: &CMatrix) -> Result<Vec<f64>> {
    Ok(gell_mann_basis(a.dim())?
        .iter()
        .map(|g| a.trace_product(g).re)
        .collect())
}

pub fn density_to_bloch(rho: &DensityMatrix) -> BlochVector {
    let coords = generator_coords(rho.matrix()).expect("density matrices have dim >= 2 here");
    BlochVector {
        level: rho.dim(),
        coords,
    }
}

/// Inverse of [`density_to_bloch`]; rejects vectors outside the state body.
pub fn bloch_to_density(r: &BlochVector) -> Result<DensityMatrix> {
    let m = bloch_to_matrix(r)?;
    let min = eigh(&m).min_value();
    if min < -tol::PSD {
        return Err(QracError::NotAState {
            min_eigenvalue: min,
        });
    }
    Ok(DensityMatrix::from_trusted(m))
}

/// `I/N + ½ Σ r_k λ_k` without any positivity check.
pub fn bloch_to_matrix(r: &BlochVector) -> Result<CMatrix> {
    let n = r.level;
    let gens = gell_mann_basis(n)?;
    let mut m = CMatrix::identity(n).scale(1.0 / n as f64);
    for (g, &x) in gens.iter().zip(&r.coords) {
        if x != 0.0 {
            m = &m + &g.scale_complex(C64::new(0.5 * x, 0.0));
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ZERO;
    use crate::state::PureState;

    #[test]
    fn qubit_generators_are_paulis() {
        let g = gell_mann_basis(2).unwrap();
        let x = CMatrix::from_rows(vec![vec![ZERO, ONE], vec![ONE, ZERO]]).unwrap();
        let y = CMatrix::from_rows(vec![vec![ZERO, -I], vec![I, ZERO]]).unwrap();
        let z = CMatrix::from_real_diagonal(&[1.0, -1.0]);
        assert_eq!(g, vec![x, y, z]);
    }

    #[test]
    fn generators_are_orthogonal_traceless_hermitian() {
        for level in 2..=5 {
            let g = gell_mann_basis(level).unwrap();
            assert_eq!(g.len(), level * level - 1);
            for (i, a) in g.iter().enumerate() {
                assert!(a.hermitian_deviation() < 1e-15);
                assert!(a.trace().norm() < 1e-12);
                for (j, b) in g.iter().enumerate() {
                    let expect = if i == j { 2.0 } else { 0.0 };
                    assert!((a.trace_product(b) - C64::new(expect, 0.0)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn level_below_two_is_rejected() {
        assert_eq!(gell_mann_basis(1), Err(QracError::InvalidLevel(1)));
        assert_eq!(gell_mann_basis(0), Err(QracError::InvalidLevel(0)));
    }

    #[test]
    fn basis_states_sit_on_the_z_axis() {
        let up = density_to_bloch(&PureState::basis(2, 0).outer_product());
        assert_eq!(up.coords(), &[0.0, 0.0, 1.0]);
        let down = bloch_to_density(&BlochVector::new(2, vec![0.0, 0.0, -1.0]).unwrap()).unwrap();
        assert!(
            down.matrix()
                .max_abs_diff(PureState::basis(2, 1).outer_product().matrix())
                < 1e-15
        );
    }

    #[test]
    fn zero_vector_is_maximally_mixed() {
        for level in [2, 3, 4] {
            let rho = bloch_to_density(&BlochVector::zero(level).unwrap()).unwrap();
            assert_eq!(rho, DensityMatrix::maximally_mixed(level));
            assert!(density_to_bloch(&rho).norm() < 1e-15);
        }
    }

    #[test]
    fn wrong_length_is_rejected() {
        assert!(matches!(
            BlochVector::new(2, vec![1.0, 0.0]),
            Err(QracError::DimensionMismatch {
                expected: 3,
                actual: 2
            })
        ));
    }

    /// Bisection on the smallest diagonal entry of `I/4 + ½ t λ_15`, which is
    /// diagonal, so its spectrum is its diagonal.
    fn diagonal_threshold_oracle() -> f64 {
        let lambda = &gell_mann_basis(4).unwrap()[14];
        let min_entry = |t: f64| {
            (0..4)
                .map(|i| 0.25 + 0.5 * t * lambda[(i, i)].re)
                .fold(f64::INFINITY, f64::min)
        };
        let (mut lo, mut hi) = (0.0, 1.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if min_entry(mid) >= 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    #[test]
    fn unit_vector_along_last_diagonal_generator_is_not_a_state() {
        let threshold = diagonal_threshold_oracle();
        // frozen from the oracle: √6/6
        assert!((threshold - 0.408_248_290_463_863).abs() < 1e-12);

        let mut coords = vec![0.0; 15];
        coords[14] = 1.0;
        let err = bloch_to_density(&BlochVector::new(4, coords).unwrap()).unwrap_err();
        match err {
            QracError::NotAState { min_eigenvalue } => {
                assert!((min_eigenvalue - (0.25 - 1.5 / 6f64.sqrt())).abs() < 1e-12)
            }
            other => panic!("unexpected {other:?}"),
        }

        for (t, ok) in [(threshold - 1e-6, true), (threshold + 1e-6, false)] {
            let mut coords = vec![0.0; 15];
            coords[14] = t;
            let r = BlochVector::new(4, coords).unwrap();
            assert_eq!(bloch_to_density(&r).is_ok(), ok, "t = {t}");
        }
    }
}
