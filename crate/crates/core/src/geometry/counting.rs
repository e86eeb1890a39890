use crate::error::{QracError, Result};

/// Maximum number of regions `k` hyperplanes cut `R^d` into:
/// `Σ_{i=0}^{min(k,d)} C(k, i)`, exact.
pub fn max_regions(k: u64, d: u64) -> Result<u64> {
    if d == 0 {
        return Err(QracError::Domain("dimension must be at least 1".into()));
    }
    if d >= k {
        return if k < 64 {
            Ok(1u64 << k)
        } else {
            Err(QracError::Capacity { k, d })
        };
    }
    // k > d >= 64 already exceeds Σ_{i≤64} C(65, i) = 2^65 − 1
    if d >= 64 {
        return Err(QracError::Capacity { k, d });
    }
    let overflow = || QracError::Capacity { k, d };
    let mut total: u128 = 1;
    let mut binom: u128 = 1;
    for i in 1..=d {
        binom = binom
            .checked_mul(u128::from(k - i + 1))
            .ok_or_else(overflow)?
            / u128::from(i);
        total = total.checked_add(binom).ok_or_else(overflow)?;
        if total > u128::from(u64::MAX) {
            return Err(overflow());
        }
    }
    Ok(total as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(k: u64, d: u64) -> u64 {
        // Pascal recurrence R(k, d) = R(k−1, d) + R(k−1, d−1)
        fn r(k: u64, d: u64) -> u64 {
            if k == 0 || d == 0 {
                1
            } else {
                r(k - 1, d) + r(k - 1, d - 1)
            }
        }
        r(k, d)
    }

    #[test]
    fn known_values() {
        assert_eq!(max_regions(4, 3).unwrap(), 15);
        assert_eq!(max_regions(3, 3).unwrap(), 8);
        assert_eq!(max_regions(16, 15).unwrap(), 65535);
        assert_eq!(max_regions(0, 3).unwrap(), 1);
        assert_eq!(max_regions(5, 2).unwrap(), 16);
    }

    #[test]
    fn agrees_with_recurrence() {
        for k in 0..18 {
            for d in 1..18 {
                assert_eq!(max_regions(k, d).unwrap(), brute(k, d), "k={k} d={d}");
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(
            max_regions(64, 64),
            Err(QracError::Capacity { .. })
        ));
        assert!(matches!(
            max_regions(200, 100),
            Err(QracError::Capacity { .. })
        ));
        assert_eq!(max_regions(63, 63).unwrap(), 1 << 63);
        assert!(max_regions(3, 0).is_err());
    }
}
