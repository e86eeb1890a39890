//! Dense complex matrices of small dimension and a Jacobi eigensolver for
//! Hermitian matrices.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{QracError, Result};
use crate::tol;

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Square complex matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        Self {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from rows; every row must have as many entries as there are rows.
    pub fn from_rows(rows: Vec<Vec<C64>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(QracError::DimensionMismatch {
                expected: 1,
                actual: 0,
            });
        }
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(QracError::DimensionMismatch {
                    expected: dim,
                    actual: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self { dim, data })
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = C64::new(d, 0.0);
        }
        m
    }

    /// `|a⟩⟨a|` for an arbitrary (not necessarily normalized) vector.
    pub fn outer(a: &[C64]) -> Self {
        Self::from_fn(a.len(), |i, j| a[i] * a[j].conj())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> impl Iterator<Item = &[C64]> {
        self.data.chunks(self.dim)
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn scale_complex(&self, factor: C64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &CMatrix) -> Self {
        let (a, b) = (self.dim, other.dim);
        Self::from_fn(a * b, |i, j| self[(i / b, j / b)] * other[(i % b, j % b)])
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.dim);
        self.rows()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `⟨v|A|v⟩`.
    pub fn expectation(&self, v: &[C64]) -> C64 {
        let av = self.mul_vec(v);
        v.iter().zip(&av).map(|(a, b)| a.conj() * b).sum()
    }

    /// `Tr(self · other)` without forming the product.
    pub fn trace_product(&self, other: &CMatrix) -> C64 {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut acc = ZERO;
        for i in 0..n {
            for k in 0..n {
                acc += self[(i, k)] * other[(k, i)];
            }
        }
        acc
    }

    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest `|A_ij − conj(A_ji)|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..self.dim {
            for j in i..self.dim {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `(A + A†)/2`.
    pub fn hermitian_part(&self) -> Self {
        Self::from_fn(self.dim, |i, j| (self[(i, j)] + self[(j, i)].conj()) * 0.5)
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;

    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim);
        CMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;

    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim);
        CMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;

    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

/// Rectangular complex matrix, used for Kraus operators and isometries.
#[derive(Debug, Clone, PartialEq)]
pub struct RectMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<C64>,
}

impl RectMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.cols + j] = v;
    }

    /// `K A K†` for a square `A` of size `cols`.
    pub fn conjugate(&self, a: &CMatrix) -> CMatrix {
        assert_eq!(a.dim(), self.cols);
        CMatrix::from_fn(self.rows, |i, j| {
            let mut acc = ZERO;
            for k in 0..self.cols {
                let ki = self.get(i, k);
                if ki == ZERO {
                    continue;
                }
                for l in 0..self.cols {
                    acc += ki * a[(k, l)] * self.get(j, l).conj();
                }
            }
            acc
        })
    }

    /// `K† B K` for a square `B` of size `rows`.
    pub fn adjoint_conjugate(&self, b: &CMatrix) -> CMatrix {
        assert_eq!(b.dim(), self.rows);
        CMatrix::from_fn(self.cols, |i, j| {
            let mut acc = ZERO;
            for k in 0..self.rows {
                let ki = self.get(k, i).conj();
                if ki == ZERO {
                    continue;
                }
                for l in 0..self.rows {
                    acc += ki * b[(k, l)] * self.get(l, j);
                }
            }
            acc
        })
    }
}

/// Spectral decomposition of a Hermitian matrix, eigenvalues sorted descending.
///
/// Within a degenerate block (eigenvalues equal within [`tol::DEGENERACY`]) the
/// basis is the Gram–Schmidt orthonormalization of the block projector applied
/// to `e_0, e_1, …` in index order. Every eigenvector, degenerate or not, is
/// therefore phase-fixed so that its first significant coordinate is real and
/// positive.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<C64>>,
}

impl HermitianEigen {
    pub fn min_value(&self) -> f64 {
        *self.values.last().expect("nonempty spectrum")
    }

    pub fn max_value(&self) -> f64 {
        self.values[0]
    }

    /// `Σ f(λ_k) |v_k⟩⟨v_k|`.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> CMatrix {
        let n = self.values.len();
        let mut out = CMatrix::zeros(n);
        for (&lambda, v) in self.values.iter().zip(&self.vectors) {
            let w = f(lambda);
            if w == 0.0 {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    out[(i, j)] += v[i] * v[j].conj() * w;
                }
            }
        }
        out
    }
}

const MAX_SWEEPS: usize = 100;
const GRAM_SCHMIDT_FLOOR: f64 = 1e-4;

/// Cyclic complex Jacobi eigendecomposition of the Hermitian part of `a`.
pub fn eigh(a: &CMatrix) -> HermitianEigen {
    let n = a.dim();
    let mut m = a.hermitian_part();
    let mut v = CMatrix::identity(n);
    let scale = m.frobenius_norm().max(1.0);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&m) <= tol::JACOBI * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }

    let mut pairs: Vec<(f64, Vec<C64>)> = (0..n)
        .map(|k| (m[(k, k)].re, (0..n).map(|i| v[(i, k)]).collect()))
        .collect();
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0));

    let mut values = Vec::with_capacity(n);
    let mut vectors = Vec::with_capacity(n);
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && pairs[end - 1].0 - pairs[end].0 <= tol::DEGENERACY {
            end += 1;
        }
        let block: Vec<&Vec<C64>> = pairs[start..end].iter().map(|p| &p.1).collect();
        for (k, vec) in canonical_block_basis(&block, n).into_iter().enumerate() {
            values.push(pairs[start + k].0);
            vectors.push(vec);
        }
        start = end;
    }
    HermitianEigen { values, vectors }
}

fn off_diagonal_norm(m: &CMatrix) -> f64 {
    let n = m.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += m[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// One unitary rotation `m ← J† m J`, `v ← v J`, zeroing `m[p][q]`.
fn rotate(m: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let b = m[(p, q)];
    let abs_b = b.norm();
    if abs_b < 1e-300 {
        return;
    }
    let phase = b / abs_b; // e^{iφ}
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    let theta = (aqq - app) / (2.0 * abs_b);
    let t = if theta >= 0.0 {
        1.0 / (theta + (theta * theta + 1.0).sqrt())
    } else {
        -1.0 / (-theta + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let phase_conj = phase.conj();
    let n = m.dim();

    // columns: B = M J
    for k in 0..n {
        let mkp = m[(k, p)];
        let mkq = m[(k, q)];
        m[(k, p)] = mkp * c - mkq * phase_conj * s;
        m[(k, q)] = mkp * s + mkq * phase_conj * c;
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * phase_conj * s;
        v[(k, q)] = vkp * s + vkq * phase_conj * c;
    }
    // rows: M' = J† B
    for k in 0..n {
        let mpk = m[(p, k)];
        let mqk = m[(q, k)];
        m[(p, k)] = mpk * c - mqk * phase * s;
        m[(q, k)] = mpk * s + mqk * phase * c;
    }
    m[(p, q)] = ZERO;
    m[(q, p)] = ZERO;
    m[(p, p)] = C64::new(m[(p, p)].re, 0.0);
    m[(q, q)] = C64::new(m[(q, q)].re, 0.0);
}

fn canonical_block_basis(block: &[&Vec<C64>], n: usize) -> Vec<Vec<C64>> {
    let size = block.len();
    let mut basis: Vec<Vec<C64>> = Vec::with_capacity(size);
    for k in 0..n {
        if basis.len() == size {
            break;
        }
        // P e_k, with P the block projector
        let mut w: Vec<C64> = (0..n)
            .map(|i| block.iter().map(|v| v[i] * v[k].conj()).sum())
            .collect();
        for b in &basis {
            let overlap: C64 = b.iter().zip(&w).map(|(x, y)| x.conj() * y).sum();
            for (wi, bi) in w.iter_mut().zip(b) {
                *wi -= overlap * bi;
            }
        }
        let norm = vec_norm(&w);
        if norm > GRAM_SCHMIDT_FLOOR {
            w.iter_mut().for_each(|z| *z /= norm);
            basis.push(w);
        }
    }
    // Unreachable for an orthonormal block; keep the raw vectors as a fallback.
    if basis.len() < size {
        return block.iter().map(|v| (*v).clone()).collect();
    }
    basis
}

pub fn vec_norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn inner(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}
