//! Universal 1→2 qubit cloning and the cloning-based four-bit construction.
//!
//! The cloner is the isometry `V: C² → C²⊗C²⊗C²` (clone 1, clone 2, machine)
//!
//! ```text
//! V|0⟩ = √(2/3)|00⟩|0⟩ + √(1/6)(|01⟩ + |10⟩)|1⟩
//! V|1⟩ = √(2/3)|11⟩|1⟩ + √(1/6)(|01⟩ + |10⟩)|0⟩
//! ```
//!
//! followed by discarding the machine qubit. Its Kraus operators are
//! `K_m = (I ⊗ I ⊗ ⟨m|) V`.
//!
//! The four-bit construction sends `φ(0x_1x_2)` or `φ(1x_3x_4)` with equal
//! probability. To read `x_1` or `x_2` the receiver clones, measures clone 1
//! along z; on outcome 0 it decodes the wanted bit from clone 2 with the
//! three-bit decoder, on outcome 1 it flips a fair coin. Bits `x_3, x_4`
//! are symmetric with the branch outcome reversed. Each procedure is
//! compiled into one effective POVM on the input qubit through the channel
//! adjoint.

use crate::error::{QracError, Result};
use crate::linalg::{CMatrix, RectMatrix, C64};
use crate::povm::{measure_prob, BinaryPovm};
use crate::state::{partial_trace_matrix, DensityMatrix, Subsystem};

use super::{chuang3_povms, encode_chuang3, evaluate_scheme, EvaluationReport, QracScheme};

/// 8×2 isometry; output index is `4·c1 + 2·c2 + machine`.
pub fn buzek_hillery_isometry() -> RectMatrix {
    let big = C64::new((2.0f64 / 3.0).sqrt(), 0.0);
    let small = C64::new((1.0f64 / 6.0).sqrt(), 0.0);
    let mut v = RectMatrix::zeros(8, 2);
    // input |0⟩
    v.set(0b000, 0, big);
    v.set(0b011, 0, small);
    v.set(0b101, 0, small);
    // input |1⟩
    v.set(0b111, 1, big);
    v.set(0b010, 1, small);
    v.set(0b100, 1, small);
    v
}

/// The two 4×2 Kraus operators of the cloning channel.
pub fn cloner_kraus() -> [RectMatrix; 2] {
    let v = buzek_hillery_isometry();
    let kraus = |machine: usize| {
        let mut k = RectMatrix::zeros(4, 2);
        for out in 0..4 {
            for input in 0..2 {
                k.set(out, input, v.get(2 * out + machine, input));
            }
        }
        k
    };
    [kraus(0), kraus(1)]
}

/// Joint state of the two clones.
pub fn buzek_hillery_clone(rho: &DensityMatrix) -> Result<DensityMatrix> {
    if rho.dim() != 2 {
        return Err(QracError::DimensionMismatch {
            expected: 2,
            actual: rho.dim(),
        });
    }
    let full = buzek_hillery_isometry().conjugate(rho.matrix());
    let joint = partial_trace_matrix(&full, 4, 2, Subsystem::First)?;
    Ok(DensityMatrix::from_trusted(joint))
}

/// Heisenberg-picture map of a two-clone effect back to the input qubit.
pub fn clone_adjoint(effect: &CMatrix) -> CMatrix {
    cloner_kraus()
        .iter()
        .map(|k| k.adjoint_conjugate(effect))
        .fold(CMatrix::zeros(2), |acc, m| &acc + &m)
}

/// Two-clone effect for "output 0" when decoding target bit `t` (0-based).
fn sequential_effect(target: usize) -> CMatrix {
    let three_bit = chuang3_povms();
    // outcome of the z test that selects the branch holding the target
    let branch = if target < 2 { 0 } else { 1 };
    let second_decoder = &three_bit[1 + target % 2];
    let select = three_bit[0].effect(branch).clone();
    let reject = three_bit[0].effect(1 - branch).clone();
    let half = CMatrix::identity(2).scale(0.5);
    &select.kron(second_decoder.e0()) + &reject.kron(&half)
}

/// The four compiled decoders, one per bit.
pub fn example3_effective_povms() -> Vec<BinaryPovm> {
    (0..4)
        .map(|t| {
            let e0 = clone_adjoint(&sequential_effect(t)).hermitian_part();
            BinaryPovm::from_e0(e0).expect("adjoint of a unital channel preserves completeness")
        })
        .collect()
}

/// `½ φ(0x_1x_2) + ½ φ(1x_3x_4)` with the compiled decoders.
pub fn example3_scheme() -> QracScheme {
    let states = (0..16usize)
        .map(|x| {
            let low = encode_chuang3(x >> 2).outer_product();
            let high = encode_chuang3(0b100 | (x & 0b11)).outer_product();
            DensityMatrix::mixture(&[(0.5, &low), (0.5, &high)]).expect("mixture of states")
        })
        .collect();
    QracScheme::new("example3", 4, 1, states, example3_effective_povms())
        .expect("compiled scheme is well formed")
}

/// Probability that the sequential procedure for `target` outputs `outcome`,
/// simulated on the explicit two-clone state.
pub fn example3_sequential_prob(rho: &DensityMatrix, target: usize, outcome: u8) -> Result<f64> {
    let joint = buzek_hillery_clone(rho)?;
    let p0 = measure_prob(&sequential_effect(target), &joint)?;
    Ok(if outcome == 0 { p0 } else { 1.0 - p0 })
}

#[derive(Debug, Clone)]
pub struct Example3Analysis {
    /// Worst success of any decoder when its own branch state was sent.
    pub branch_success: f64,
    /// `(p₀ + 1/2)/2` with `p₀ = branch_success`.
    pub naive_claim: f64,
    pub report: EvaluationReport,
}

pub fn example3_analysis() -> Example3Analysis {
    let mut branch_success = f64::INFINITY;
    for target in 0..4 {
        let branch_bit = if target < 2 { 0 } else { 1 };
        for pair in 0..4usize {
            let sent = encode_chuang3((branch_bit << 2) | pair).outer_product();
            let wanted = ((pair >> (1 - target % 2)) & 1) as u8;
            let p = example3_sequential_prob(&sent, target, wanted).expect("qubit input");
            branch_success = branch_success.min(p);
        }
    }
    Example3Analysis {
        branch_success,
        naive_claim: (branch_success + 0.5) / 2.0,
        report: evaluate_scheme(&example3_scheme()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bloch::density_to_bloch;
    use crate::state::{partial_trace, PureState};

    #[test]
    fn isometry_is_an_isometry() {
        let v = buzek_hillery_isometry();
        let gram = v.adjoint_conjugate(&CMatrix::identity(8));
        assert!(gram.max_abs_diff(&CMatrix::identity(2)) < 1e-15);
        assert!(clone_adjoint(&CMatrix::identity(4)).max_abs_diff(&CMatrix::identity(2)) < 1e-15);
    }

    #[test]
    fn maximally_mixed_input_gives_symmetric_output() {
        let joint = buzek_hillery_clone(&DensityMatrix::maximally_mixed(2)).unwrap();
        for keep in [Subsystem::First, Subsystem::Second] {
            let marginal = partial_trace(&joint, 2, 2, keep).unwrap();
            assert!(
                marginal
                    .matrix()
                    .max_abs_diff(&CMatrix::identity(2).scale(0.5))
                    < 1e-15
            );
        }
        // no weight on the singlet (|01⟩ − |10⟩)/√2
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let singlet = [
            C64::new(0.0, 0.0),
            C64::new(h, 0.0),
            C64::new(-h, 0.0),
            C64::new(0.0, 0.0),
        ];
        assert!(joint.matrix().expectation(&singlet).norm() < 1e-15);
    }

    #[test]
    fn zero_input_clone_has_fidelity_five_sixths() {
        let joint = buzek_hillery_clone(&PureState::basis(2, 0).outer_product()).unwrap();
        let first = partial_trace(&joint, 2, 2, Subsystem::First).unwrap();
        let r = density_to_bloch(&first);
        assert!((r.coords()[2] - 2.0 / 3.0).abs() < 1e-15);
        assert!(r.coords()[0].abs() < 1e-15 && r.coords()[1].abs() < 1e-15);
        assert!((first.matrix()[(0, 0)].re - 5.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn cloner_is_linear() {
        let a = PureState::normalized(vec![C64::new(0.3, 0.1), C64::new(0.5, -0.8)])
            .unwrap()
            .outer_product();
        let b = PureState::basis(2, 1).outer_product();
        let mix = DensityMatrix::mixture(&[(0.5, &a), (0.5, &b)]).unwrap();
        let lhs = buzek_hillery_clone(&mix).unwrap();
        let rhs = &buzek_hillery_clone(&a).unwrap().matrix().scale(0.5)
            + &buzek_hillery_clone(&b).unwrap().matrix().scale(0.5);
        assert!(lhs.matrix().max_abs_diff(&rhs) < 1e-15);
    }

    #[test]
    fn compiled_povms_match_the_sequential_simulation() {
        let povms = example3_effective_povms();
        for p in &povms {
            assert!((p.e0() + p.e1()).max_abs_diff(&CMatrix::identity(2)) < 1e-12);
        }
        let scheme = example3_scheme();
        for x in 0..16 {
            for (t, povm) in povms.iter().enumerate() {
                let direct = example3_sequential_prob(&scheme.states()[x], t, 0).unwrap();
                let compiled = measure_prob(povm.e0(), &scheme.states()[x]).unwrap();
                assert!((direct - compiled).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn cloning_construction_does_not_beat_one_half() {
        let analysis = example3_analysis();
        assert!(analysis.report.worst_case_p <= 0.5 + 1e-9);
        assert!(analysis.branch_success > 0.5);
        assert!(analysis.naive_claim > 0.5);
    }
}
