//! Geometry of binary decoders in Bloch space.
//!
//! A decoder outputs 0 with probability above one half exactly on an open
//! halfspace of Bloch vectors. A coding with `p > 1/2` therefore needs every
//! one of the `2^n` sign patterns of its `n` halfspaces to be realized in
//! the state body, which the region-count bound forbids once `n = 4^m`.

mod certificate;
mod counting;
mod halfspace;
mod regions;

pub use certificate::{no_go_certificate, CellCheck, CountingCertificate, NoGoCertificate};
pub use counting::max_regions;
pub use halfspace::{povm_to_halfspace, Halfspace};
pub use regions::{
    count_realized, realized_patterns, RegionStatus, RegionWitness, DEFAULT_MARGIN_EPS,
    ITERATION_BUDGET,
};

use crate::schemes::QracScheme;

/// Halfspaces of all decoders of a scheme, in bit order.
pub fn scheme_halfspaces(scheme: &QracScheme) -> Vec<Halfspace> {
    scheme
        .povms()
        .iter()
        .enumerate()
        .map(|(i, p)| povm_to_halfspace(p, i))
        .collect()
}

/// Dimension of the Bloch ball for `m` qubits, `4^m − 1`.
pub fn bloch_dim(m: usize) -> usize {
    (1usize << (2 * m)) - 1
}
