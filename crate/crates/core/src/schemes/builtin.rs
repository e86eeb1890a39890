//! The two-, three- and seven-bit codings with their decoders.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::bits::bit;
use crate::error::{QracError, Result};
use crate::linalg::{CMatrix, C64, ZERO};
use crate::povm::BinaryPovm;
use crate::state::{tensor, DensityMatrix, PureState};

use super::QracScheme;

pub const STANDARD_NAMES: [&str; 3] = ["ambainis2", "chuang3", "hinry7"];

fn real(x: f64) -> C64 {
    C64::new(x, 0.0)
}

pub fn plus_state() -> PureState {
    PureState::new(vec![real(FRAC_1_SQRT_2), real(FRAC_1_SQRT_2)]).unwrap()
}

pub fn minus_state() -> PureState {
    PureState::new(vec![real(FRAC_1_SQRT_2), real(-FRAC_1_SQRT_2)]).unwrap()
}

/// `(|0⟩ + i|1⟩)/√2`, the `+y` pole.
pub fn plus_i_state() -> PureState {
    PureState::new(vec![real(FRAC_1_SQRT_2), C64::new(0.0, FRAC_1_SQRT_2)]).unwrap()
}

/// `cos(θ)|0⟩ + sin(θ)|1⟩` with `θ ∈ {π/8, 3π/8, 5π/8, 7π/8}` for
/// `x = 00, 10, 11, 01`.
pub fn encode_ambainis2(x: usize) -> PureState {
    let angle = match x & 0b11 {
        0b00 => PI / 8.0,
        0b10 => 3.0 * PI / 8.0,
        0b11 => 5.0 * PI / 8.0,
        _ => 7.0 * PI / 8.0,
    };
    PureState::new(vec![real(angle.cos()), real(angle.sin())]).unwrap()
}

pub fn ambainis2_povms() -> Vec<BinaryPovm> {
    vec![
        BinaryPovm::projective(&PureState::basis(2, 0)),
        BinaryPovm::projective(&plus_state()),
    ]
}

/// The angle with `cos²θ = 1/2 + √3/6`.
pub fn chuang3_theta() -> f64 {
    (0.5 + 3f64.sqrt() / 6.0).sqrt().acos()
}

/// Bloch vector `((−1)^{x_2}, (−1)^{x_3}, (−1)^{x_1})/√3`.
pub fn encode_chuang3(x: usize) -> PureState {
    let theta = chuang3_theta();
    let (s, c) = theta.sin_cos();
    let phase = match (bit(x, 1, 3), bit(x, 2, 3)) {
        (0, 0) => PI / 4.0,
        (0, _) => -PI / 4.0,
        (_, 0) => 3.0 * PI / 4.0,
        _ => -3.0 * PI / 4.0,
    };
    let e = C64::from_polar(1.0, phase);
    let amplitudes = if bit(x, 0, 3) == 0 {
        vec![real(c), e * s]
    } else {
        vec![real(s), e * c]
    };
    PureState::new(amplitudes).unwrap()
}

/// Decoders along z, x and y.
pub fn chuang3_povms() -> Vec<BinaryPovm> {
    vec![
        BinaryPovm::projective(&PureState::basis(2, 0)),
        BinaryPovm::projective(&plus_state()),
        BinaryPovm::projective(&plus_i_state()),
    ]
}

pub fn hinry7_alpha() -> f64 {
    6.0 / (7.0 + 3f64.sqrt())
}

/// `(9 + 2√3)/23`, the worst cell of the seven-bit coding.
///
/// Bits 1–6 succeed with `1/2 + α√3/6`; the parity bit succeeds with
/// `1 − α + α·q` where `q ∈ {1/3, 2/3}` is the parity overlap of the
/// product part, so its worst case is `1 − 2α/3`, which is the smaller one.
pub fn hinry7_closed_form() -> f64 {
    (9.0 + 2.0 * 3f64.sqrt()) / 23.0
}

/// `ξ(0) = (|00⟩ + |11⟩)/√2`, `ξ(1) = (|01⟩ + |10⟩)/√2`.
pub fn xi_state(b: u8) -> PureState {
    let h = real(FRAC_1_SQRT_2);
    let amplitudes = if b == 0 {
        vec![h, ZERO, ZERO, h]
    } else {
        vec![ZERO, h, h, ZERO]
    };
    PureState::new(amplitudes).unwrap()
}

/// `α φ(x_1x_2x_3) ⊗ φ(x_4x_5x_6) + (1 − α) ξ(x_7)`.
pub fn encode_hinry7(x: usize) -> DensityMatrix {
    let alpha = hinry7_alpha();
    let first = encode_chuang3(x >> 4).outer_product();
    let second = encode_chuang3((x >> 1) & 0b111).outer_product();
    let product = tensor(&first, &second);
    let xi = xi_state(bit(x, 6, 7)).outer_product();
    DensityMatrix::mixture(&[(alpha, &product), (1.0 - alpha, &xi)])
        .expect("convex combination of states")
}

/// Three-bit decoders on each qubit, then the parity projector.
pub fn hinry7_povms() -> Vec<BinaryPovm> {
    let single = chuang3_povms();
    let mut out: Vec<BinaryPovm> = single.iter().map(|p| p.extend_right(2)).collect();
    out.extend(single.iter().map(|p| p.extend_left(2)));
    let parity_even = CMatrix::from_real_diagonal(&[1.0, 0.0, 0.0, 1.0]);
    out.push(BinaryPovm::from_e0(parity_even).expect("projector"));
    out
}

pub fn standard_scheme(name: &str) -> Result<QracScheme> {
    match name {
        "ambainis2" => QracScheme::new(
            name,
            2,
            1,
            (0..4)
                .map(|x| encode_ambainis2(x).outer_product())
                .collect(),
            ambainis2_povms(),
        ),
        "chuang3" => QracScheme::new(
            name,
            3,
            1,
            (0..8).map(|x| encode_chuang3(x).outer_product()).collect(),
            chuang3_povms(),
        ),
        "hinry7" => QracScheme::new(
            name,
            7,
            2,
            (0..128).map(encode_hinry7).collect(),
            hinry7_povms(),
        ),
        other => Err(QracError::UnknownScheme(other.to_string())),
    }
}
