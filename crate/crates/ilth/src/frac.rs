//! Exact rational values, rendered late as fraction strings plus decimals so
//! reports stay byte-stable.

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::Serialize;

pub type Frac = Ratio<i128>;

pub fn frac(num: i128, den: i128) -> Frac {
    Ratio::new(num, den)
}

/// Fraction rendered for reports.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FracOut {
    pub fraction: String,
    pub decimal: f64,
}

impl FracOut {
    pub fn of(f: &Frac) -> Self {
        FracOut {
            fraction: format!("{}/{}", f.numer(), f.denom()),
            decimal: f.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn opt(f: &Option<Frac>) -> Option<Self> {
        f.as_ref().map(Self::of)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_reduced_fraction() {
        let f = frac(16, 220);
        let out = FracOut::of(&f);
        assert_eq!(out.fraction, "4/55");
        assert!((out.decimal - 4.0 / 55.0).abs() < 1e-15);
    }
}
