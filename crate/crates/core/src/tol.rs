//! Numeric tolerances used across the crate.

/// Structural invariants: Hermiticity, trace, completeness, normalization.
pub const STRUCTURAL: f64 = 1e-12;

/// Equality of derived quantities (probabilities, reconstructions, round trips).
pub const DERIVED: f64 = 1e-10;

/// Geometric norms (Bloch vector lengths, shrink factors).
pub const GEOMETRIC: f64 = 1e-9;

/// Lowest eigenvalue still accepted as nonnegative.
pub const PSD: f64 = 1e-10;

/// Jacobi sweeps stop once the off-diagonal Frobenius mass drops below this
/// (relative to `max(1, ||A||_F)`).
pub const JACOBI: f64 = 1e-14;

/// Eigenvalues closer than this are treated as one degenerate block.
pub const DEGENERACY: f64 = 1e-10;

/// Halfspace normals shorter than this are flagged degenerate.
pub const DEGENERATE_NORMAL: f64 = 1e-12;
