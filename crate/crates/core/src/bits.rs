//! Bit strings `x = x_1 x_2 … x_n` packed into an integer.
//!
//! `x_1` is the most significant bit, so the textual form and the numeric
//! order agree: `"010"` is index 2.

use crate::error::{QracError, Result};

/// Bit `i` (0-based, `i = 0` is `x_1`) of the `n`-bit string `x`.
#[inline]
pub fn bit(x: usize, i: usize, n: usize) -> u8 {
    debug_assert!(i < n);
    ((x >> (n - 1 - i)) & 1) as u8
}

pub fn format_bits(x: usize, n: usize) -> String {
    (0..n)
        .map(|i| if bit(x, i, n) == 1 { '1' } else { '0' })
        .collect()
}

pub fn parse_bits(s: &str) -> Result<usize> {
    if s.is_empty() || s.len() > 63 {
        return Err(QracError::InvalidBits(s.to_string()));
    }
    s.chars().try_fold(0usize, |acc, c| match c {
        '0' => Ok(acc << 1),
        '1' => Ok((acc << 1) | 1),
        _ => Err(QracError::InvalidBits(s.to_string())),
    })
}

/// Parses an `n`-bit string, rejecting the wrong length.
pub fn parse_bits_exact(s: &str, n: usize) -> Result<usize> {
    if s.len() != n {
        return Err(QracError::InvalidBits(s.to_string()));
    }
    parse_bits(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textual_and_numeric_order_agree() {
        assert_eq!(parse_bits("010").unwrap(), 2);
        assert_eq!(format_bits(2, 3), "010");
        assert_eq!(bit(2, 1, 3), 1);
        assert_eq!(bit(2, 0, 3), 0);
        for x in 0..16 {
            assert_eq!(parse_bits(&format_bits(x, 4)).unwrap(), x);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_bits("01a").is_err());
        assert!(parse_bits("").is_err());
        assert!(parse_bits_exact("01", 3).is_err());
    }
}
