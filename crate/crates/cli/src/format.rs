/// Rounds to `digits` significant digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .unwrap_or(x)
}

/// Plain decimal rendering with `digits` significant digits.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{}", if x == 0.0 { 0.0 } else { x });
    }
    if x.abs() < 1e-4 || x.abs() >= 1e12 {
        return format!("{:.*e}", digits.saturating_sub(1), x);
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).clamp(0, 40) as usize;
    format!("{:.*}", decimals, x)
}

#[derive(Debug, Clone, Copy)]
pub struct Precision(pub usize);

impl Precision {
    pub const DEFAULT: Precision = Precision(9);
    pub const FULL: Precision = Precision(17);

    pub fn from_flag(full: bool) -> Self {
        if full {
            Self::FULL
        } else {
            Self::DEFAULT
        }
    }

    pub fn show(self, x: f64) -> String {
        fmt_sig(x, self.0)
    }

    pub fn round(self, x: f64) -> f64 {
        round_sig(x, self.0)
    }
}
