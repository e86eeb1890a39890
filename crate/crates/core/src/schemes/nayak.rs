use crate::error::{QracError, Result};

/// `H(p) = −p log₂ p − (1−p) log₂(1−p)`, with `H(0) = H(1) = 0`.
pub fn binary_entropy(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(QracError::Domain(format!("probability {p} outside [0, 1]")));
    }
    let term = |q: f64| if q > 0.0 { -q * q.log2() } else { 0.0 };
    Ok(term(p) + term(1.0 - p))
}

/// Lower bound `(1 − H(p))·n` on the number of qubits of an `(n, m, p)` coding.
pub fn nayak_bound(n: u32, p: f64) -> Result<f64> {
    if n == 0 {
        return Err(QracError::Domain("n must be at least 1".into()));
    }
    Ok((1.0 - binary_entropy(p)?) * f64::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fair_coin_gives_no_bound() {
        for n in [1, 4, 100] {
            assert_eq!(nayak_bound(n, 0.5).unwrap(), 0.0);
        }
    }

    #[test]
    fn four_bits_barely_above_half() {
        let b = nayak_bound(4, 0.51).unwrap();
        assert!(b > 0.0 && b < 0.01);
    }

    #[test]
    fn hundred_bits_at_085() {
        // H(0.85) = 0.609840 by direct evaluation
        let h = binary_entropy(0.85).unwrap();
        assert!((h - 0.609_840).abs() < 1e-6);
        assert!((nayak_bound(100, 0.85).unwrap() - 39.016).abs() < 1e-3);
    }

    #[test]
    fn endpoints_and_domain() {
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        assert_eq!(nayak_bound(3, 1.0).unwrap(), 3.0);
        assert!(nayak_bound(3, 1.2).is_err());
        assert!(nayak_bound(3, -0.1).is_err());
        assert!(nayak_bound(0, 0.7).is_err());
    }
}
