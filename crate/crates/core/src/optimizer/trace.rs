use serde::Serialize;

use super::{Phase, SearchResult, TraceEntry};

/// Allowed decrease between consecutive exact-argmax phases.
pub const MONOTONE_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct TraceCheck {
    /// `(restart, entry index)` of every dip.
    pub violations: Vec<(usize, usize)>,
    pub entries_checked: usize,
}

impl TraceCheck {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Indices where the average objective drops by more than
/// [`MONOTONE_SLACK`] between consecutive see-saw phases. Reweighting
/// entries optimize a different objective and are skipped.
pub fn ascent_trace_violations(trace: &[TraceEntry]) -> Vec<usize> {
    let mut previous: Option<f64> = None;
    let mut out = Vec::new();
    for (k, entry) in trace.iter().enumerate() {
        if entry.phase == Phase::Reweight {
            continue;
        }
        if let Some(prev) = previous {
            if entry.average_p < prev - MONOTONE_SLACK {
                out.push(k);
            }
        }
        previous = Some(entry.average_p);
    }
    out
}

/// Checks the trace of every restart.
pub fn ascent_trace_check(result: &SearchResult) -> TraceCheck {
    let mut check = TraceCheck::default();
    for (r, outcome) in result.restarts.iter().enumerate() {
        check.entries_checked += outcome.trace.len();
        check.violations.extend(
            ascent_trace_violations(&outcome.trace)
                .into_iter()
                .map(|k| (r, k)),
        );
    }
    check
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(iteration: usize, phase: Phase, average_p: f64) -> TraceEntry {
        TraceEntry {
            iteration,
            phase,
            average_p,
            worst_case_p: 0.0,
        }
    }

    #[test]
    fn dip_is_flagged() {
        let trace = vec![
            entry(0, Phase::PovmUpdate, 0.6),
            entry(0, Phase::StateUpdate, 0.7),
            entry(1, Phase::PovmUpdate, 0.69),
            entry(1, Phase::StateUpdate, 0.71),
        ];
        assert_eq!(ascent_trace_violations(&trace), vec![2]);
    }

    #[test]
    fn reweight_entries_are_ignored() {
        let trace = vec![
            entry(0, Phase::PovmUpdate, 0.6),
            entry(0, Phase::StateUpdate, 0.7),
            entry(1, Phase::Reweight, 0.65),
        ];
        assert!(ascent_trace_violations(&trace).is_empty());
    }
}
