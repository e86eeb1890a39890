//! Quantum random access (QRA) codings.
//!
//! An `(n, m, p)` coding maps every `n`-bit string to an `m`-qubit state so
//! that each bit can be read back by a fixed two-outcome measurement with
//! probability at least `p`. This crate provides:
//!
//! - exact small-dimension linear algebra, states, binary POVMs and the
//!   generalized Bloch-vector correspondence ([`linalg`], [`state`],
//!   [`povm`], [`bloch`]);
//! - the classic codings, an exhaustive evaluator, the universal cloner and
//!   the cloning-based four-bit construction ([`schemes`]);
//! - the geometric side of the four-bit impossibility argument: halfspace
//!   extraction, sign-pattern feasibility in the Bloch ball, region counting
//!   and refutation certificates ([`geometry`]);
//! - a see-saw search over states and measurements ([`optimizer`]).

// `!(x > 0.0)` also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bits;
pub mod bloch;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod optimizer;
pub mod povm;
pub mod random;
pub mod schemes;
pub mod state;
pub mod tol;

pub use bloch::{bloch_to_density, density_to_bloch, gell_mann_basis, BlochVector};
pub use error::{QracError, Result};
pub use geometry::{
    max_regions, no_go_certificate, povm_to_halfspace, realized_patterns, Halfspace,
    NoGoCertificate, RegionStatus, RegionWitness,
};
pub use linalg::{CMatrix, C64};
pub use optimizer::{see_saw, SearchResult, SeeSawConfig};
pub use povm::{measure_prob, povm_canonical_form, BinaryPovm};
pub use schemes::{evaluate_scheme, standard_scheme, EvaluationReport, QracScheme};
pub use state::{partial_trace, tensor, DensityMatrix, PureState, Subsystem};
