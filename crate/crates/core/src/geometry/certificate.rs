use serde::Serialize;

use crate::bits::bit;
use crate::error::{QracError, Result};
use crate::schemes::QracScheme;
use crate::tol;

use super::{max_regions, povm_to_halfspace, Halfspace};

/// Strict-inequality test for one `(x, i)` cell.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CellCheck {
    pub x: usize,
    pub bit: usize,
    /// `σ(s_i·r_x − c_i)`, equal to `Tr(E^i_{x_i} ρ_x) − 1/2`.
    pub slack: f64,
    pub probability: f64,
}

impl CellCheck {
    pub fn violated(&self) -> bool {
        self.slack <= tol::DERIVED
    }
}

/// Scheme-independent counting argument for `n = 4^m` decoders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountingCertificate {
    pub hyperplanes: u64,
    pub dimension: u64,
    pub max_regions: u64,
    pub required_regions: u64,
}

impl CountingCertificate {
    pub fn holds(&self) -> bool {
        self.max_regions < self.required_regions
    }
}

impl std::fmt::Display for CountingCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "max_regions({},{})={} {} {}",
            self.hyperplanes,
            self.dimension,
            self.max_regions,
            if self.holds() { "<" } else { ">=" },
            self.required_regions
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NoGoCertificate {
    pub label: String,
    pub claimed_p: f64,
    pub halfspaces: Vec<Halfspace>,
    /// Every cell in `(x, i)` order.
    pub checks: Vec<CellCheck>,
    /// First cell whose strict inequality fails.
    pub violated: CellCheck,
    pub violated_count: usize,
    pub counting: Option<CountingCertificate>,
}

/// Refutes "`scheme` achieves `claimed_p > 1/2`" by exhibiting a cell whose
/// Bloch vector lies on the wrong side of (or on) its decoder's halfspace.
pub fn no_go_certificate(scheme: &QracScheme, claimed_p: f64) -> Result<NoGoCertificate> {
    if !(claimed_p > 0.5 && claimed_p <= 1.0) {
        return Err(QracError::Domain(format!(
            "claimed p = {claimed_p} must lie in (1/2, 1]; nothing to refute"
        )));
    }
    let n = scheme.n();
    let halfspaces: Vec<Halfspace> = scheme
        .povms()
        .iter()
        .enumerate()
        .map(|(i, p)| povm_to_halfspace(p, i))
        .collect();

    let mut checks = Vec::with_capacity(scheme.states().len() * n);
    for (x, rho) in scheme.states().iter().enumerate() {
        for (i, h) in halfspaces.iter().enumerate() {
            checks.push(CellCheck {
                x,
                bit: i,
                slack: h.signed_slack(rho, bit(x, i, n)),
                probability: scheme.cell_probability(x, i),
            });
        }
    }
    let violated = *checks.iter().find(|c| c.violated()).ok_or_else(|| {
        QracError::Inconsistency(format!(
            "scheme {:?} satisfies every strict inequality",
            scheme.label()
        ))
    })?;
    let violated_count = checks.iter().filter(|c| c.violated()).count();

    let ball_dim = (1u64 << (2 * scheme.m())) - 1;
    let counting = if n as u64 == ball_dim + 1 {
        let max = max_regions(n as u64, ball_dim)?;
        Some(CountingCertificate {
            hyperplanes: n as u64,
            dimension: ball_dim,
            max_regions: max,
            required_regions: 1u64 << n,
        })
    } else {
        None
    };

    Ok(NoGoCertificate {
        label: scheme.label().to_string(),
        claimed_p,
        halfspaces,
        checks,
        violated,
        violated_count,
        counting,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::povm::BinaryPovm;
    use crate::schemes::{chuang3_povms, example3_scheme, standard_scheme};
    use crate::state::{DensityMatrix, PureState};

    #[test]
    fn cloning_construction_is_refuted() {
        let cert = no_go_certificate(&example3_scheme(), 0.55).unwrap();
        assert!(cert.violated.slack <= 1e-10);
        assert!(cert.violated.probability <= 0.5 + 1e-10);
        let counting = cert.counting.unwrap();
        assert_eq!(counting.to_string(), "max_regions(4,3)=15 < 16");
    }

    #[test]
    fn maximally_mixed_states_violate_every_cell() {
        let mut povms = chuang3_povms();
        povms.push(BinaryPovm::projective(&PureState::basis(2, 1)));
        let states = vec![DensityMatrix::maximally_mixed(2); 16];
        let scheme = QracScheme::new("mixed", 4, 1, states, povms).unwrap();
        let cert = no_go_certificate(&scheme, 0.6).unwrap();
        assert_eq!(cert.violated_count, 64);
        assert_eq!(cert.violated.x, 0);
        assert_eq!(cert.violated.bit, 0);
    }

    #[test]
    fn working_scheme_is_an_inconsistency() {
        let scheme = standard_scheme("chuang3").unwrap();
        assert!(matches!(
            no_go_certificate(&scheme, 0.7),
            Err(QracError::Inconsistency(_))
        ));
    }

    #[test]
    fn claimed_p_must_exceed_half() {
        let scheme = example3_scheme();
        assert!(matches!(
            no_go_certificate(&scheme, 0.5),
            Err(QracError::Domain(_))
        ));
    }

    #[test]
    fn slack_equals_probability_excess() {
        let cert = no_go_certificate(&example3_scheme(), 0.55).unwrap();
        for c in &cert.checks {
            assert!((c.slack - (c.probability - 0.5)).abs() < 1e-12);
        }
    }
}
